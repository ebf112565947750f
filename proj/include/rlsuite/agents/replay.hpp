#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "rlsuite/core/rng.hpp"
#include "rlsuite/env/episode.hpp"

namespace rlsuite::agents {

/// Fixed-capacity FIFO ring of transitions with uniform sampling (with
/// replacement). In synchronized mode store and sample take an internal lock,
/// so several producers can feed one learner.
class ReplayBuffer {
 public:
  ReplayBuffer(std::size_t capacity, std::uint64_t seed, bool synchronized = false);

  void store(Transition t);
  /// Throws EmptyBuffer when empty and InvalidArgument when n == 0.
  std::vector<Transition> sample(std::size_t n);

  std::size_t size() const;
  std::size_t capacity() const noexcept { return capacity_; }
  /// i-th oldest transition currently held.
  const Transition& at(std::size_t i) const;

 private:
  std::size_t capacity_;
  std::vector<Transition> ring_;
  std::size_t head_ = 0;  // next slot to overwrite once full
  Rng rng_;
  std::unique_ptr<std::mutex> mutex_;
};

}  // namespace rlsuite::agents
