#include "rlsuite/agents/replay.hpp"

#include <optional>

#include "rlsuite/core/errors.hpp"

namespace rlsuite::agents {

ReplayBuffer::ReplayBuffer(std::size_t capacity, std::uint64_t seed, bool synchronized)
    : capacity_(capacity), rng_(seed), mutex_(synchronized ? std::make_unique<std::mutex>() : nullptr) {
  if (capacity == 0) throw InvalidArgument("replay capacity must be >= 1");
}

void ReplayBuffer::store(Transition t) {
  std::optional<std::lock_guard<std::mutex>> lock;
  if (mutex_) lock.emplace(*mutex_);
  if (ring_.size() < capacity_) {
    ring_.push_back(std::move(t));
    return;
  }
  ring_[head_] = std::move(t);
  head_ = (head_ + 1) % capacity_;
}

std::vector<Transition> ReplayBuffer::sample(std::size_t n) {
  std::optional<std::lock_guard<std::mutex>> lock;
  if (mutex_) lock.emplace(*mutex_);
  if (n == 0) throw InvalidArgument("sample size must be >= 1");
  if (ring_.empty()) throw EmptyBuffer("cannot sample from an empty replay buffer");
  std::vector<Transition> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(ring_[rng_.uniform(ring_.size())]);
  return out;
}

std::size_t ReplayBuffer::size() const {
  std::optional<std::lock_guard<std::mutex>> lock;
  if (mutex_) lock.emplace(*mutex_);
  return ring_.size();
}

const Transition& ReplayBuffer::at(std::size_t i) const {
  if (i >= ring_.size()) throw InvalidArgument("replay index out of range");
  return ring_[(head_ + i) % ring_.size()];
}

}  // namespace rlsuite::agents
