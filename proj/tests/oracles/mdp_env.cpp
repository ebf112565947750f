#include "oracles/mdp_env.hpp"

#include <algorithm>
#include <cmath>

#include "rlsuite/agents/q_learning.hpp"
#include "rlsuite/env/episode.hpp"

namespace oracle {

using rlsuite::Tensor;

MdpEnv::MdpEnv(Mdp mdp, std::uint64_t seed)
    : mdp_(std::move(mdp)),
      rng_(seed),
      actions_([&] {
        std::vector<std::string> labels;
        for (std::size_t a = 0; a < mdp_.next[0].size(); ++a) labels.push_back("a" + std::to_string(a));
        return labels;
      }()),
      spec_(rlsuite::ObservationMode::Matrix, mdp_.next.size(), 1, 1) {
  reset();
}

Tensor MdpEnv::encode(std::size_t states, int s) {
  Tensor t({1, states, 1});
  t[static_cast<std::size_t>(s)] = 1.0;
  return t;
}

Tensor MdpEnv::observe() const { return encode(mdp_.next.size(), state_); }

void MdpEnv::on_reset(std::optional<std::uint64_t> seed) {
  if (seed) rng_ = rlsuite::Rng(*seed);
  state_ = static_cast<int>(rng_.uniform(mdp_.next.size()));
}

rlsuite::Outcome MdpEnv::on_step(rlsuite::ActionIndex a, rlsuite::InfoMap*) {
  const auto s = static_cast<std::size_t>(state_);
  const double r = mdp_.reward[s][a];
  const int n = mdp_.next[s][a];
  if (n >= 0) state_ = n;
  return {r, n < 0};
}

std::vector<NamedMdp> reference_mdps() {
  std::vector<NamedMdp> out;
  // s0 -a0-> s1 (0) | s0 -a1-> s0 (0.05); s1 -a0-> end (1) | s1 -a1-> s0 (0)
  out.push_back({"2-state chain", {{{1, 0}, {-1, 0}}, {{0.0, 0.05}, {1.0, 0.0}}, 0.9}});
  // s0 branches to s1 or s2; s1 ends with 1 or 0; s2 ends with 0.5 or loops back with 0.2
  out.push_back({"3-state branch", {{{1, 2}, {-1, -1}, {-1, 0}}, {{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.2}}, 0.9}});
  // a0 walks the loop s0->s1->s2->s3->s0 paying 1 on the wrap; a1 quits for 0.3
  out.push_back({"4-state loop",
                 {{{1, -1}, {2, -1}, {3, -1}, {0, -1}}, {{0.0, 0.3}, {0.0, 0.3}, {0.0, 0.3}, {1.0, 0.3}}, 0.8}});
  return out;
}

MdpLearningResult learn_mdp(const Mdp& mdp, std::size_t episodes, std::uint64_t seed) {
  rlsuite::agents::Hyperparams p;
  p.alpha = 0.5;
  p.gamma = mdp.gamma;
  p.epsilon_min = p.epsilon_max = p.epsilon_start = 1.0;
  p.epsilon_decay = 0.0;
  MdpEnv env(mdp, rlsuite::mix_seed(seed, 1));
  rlsuite::agents::TabularQAgent agent(mdp.next[0].size(), p, rlsuite::mix_seed(seed, 2));
  for (std::size_t e = 0; e < episodes; ++e) rlsuite::run_episode(env, agent, 20, std::nullopt, false);

  MdpLearningResult r;
  r.optimal = value_iteration(mdp);
  for (std::size_t s = 0; s < mdp.next.size(); ++s) {
    r.learned.push_back(agent.table().values(rlsuite::agents::state_key(MdpEnv::encode(mdp.next.size(), static_cast<int>(s)))));
    for (std::size_t a = 0; a < r.learned[s].size(); ++a) {
      r.max_abs_error = std::max(r.max_abs_error, std::abs(r.learned[s][a] - r.optimal[s][a]));
    }
  }
  r.same_policy = greedy_policy(r.learned, 1e-6) == greedy_policy(r.optimal, 1e-6);
  return r;
}

}  // namespace oracle
