#include "rlsuite/bench/experiment.hpp"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <fstream>
#include <iomanip>
#include <memory>
#include <numeric>
#include <ostream>
#include <sstream>

#include "rlsuite/agents/q_learning.hpp"
#include "rlsuite/core/errors.hpp"

namespace rlsuite::bench {
namespace {

int line_of(const YAML::Node& node) { return node.Mark().line >= 0 ? node.Mark().line + 1 : 0; }

template <typename T>
T read(const YAML::Node& node, const std::string& field, const char* expected) {
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError(field + ": expected " + expected, line_of(node));
  }
}

std::size_t read_count(const YAML::Node& node, const std::string& field) {
  const auto v = read<long long>(node, field, "a non-negative integer");
  if (v < 0) throw ConfigError(field + ": expected a non-negative integer", line_of(node));
  return static_cast<std::size_t>(v);
}

AgentKind parse_agent(const YAML::Node& node) {
  const auto name = read<std::string>(node, "agent", "a string");
  if (name == "random") return AgentKind::Random;
  if (name == "tabular") return AgentKind::Tabular;
  if (name == "dqn") return AgentKind::Dqn;
  throw ConfigError("agent: unknown agent kind '" + name + "' (expected random, tabular or dqn)", line_of(node));
}

std::string_view agent_name(AgentKind k) {
  switch (k) {
    case AgentKind::Random: return "random";
    case AgentKind::Tabular: return "tabular";
    case AgentKind::Dqn: return "dqn";
  }
  return "?";
}

void require_map(const YAML::Node& node, const std::string& field) {
  if (!node.IsMap()) throw ConfigError(field + ": expected a mapping", line_of(node));
}

void parse_hyperparams(const YAML::Node& node, agents::Hyperparams& h) {
  require_map(node, "hyperparams");
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    const YAML::Node& v = kv.second;
    const std::string field = "hyperparams." + key;
    if (key == "alpha") h.alpha = read<double>(v, field, "a number");
    else if (key == "gamma") h.gamma = read<double>(v, field, "a number");
    else if (key == "loss") {
      const auto name = read<std::string>(v, field, "mse or huber");
      if (name == "mse") h.loss.kind = nn::LossSpec::Kind::MSE;
      else if (name == "huber") h.loss.kind = nn::LossSpec::Kind::Huber;
      else throw ConfigError(field + ": expected mse or huber", line_of(v));
    } else if (key == "huber_delta") h.loss.delta = read<double>(v, field, "a number");
    else if (key == "optimizer") h.optimizer = read<std::string>(v, field, "adam or sgd");
    else if (key == "batch_size") h.batch_size = read_count(v, field);
    else if (key == "memory_size") h.memory_size = read_count(v, field);
    else if (key == "epsilon_min") h.epsilon_min = read<double>(v, field, "a number");
    else if (key == "epsilon_max") h.epsilon_max = read<double>(v, field, "a number");
    else if (key == "epsilon_start") h.epsilon_start = read<double>(v, field, "a number");
    else if (key == "epsilon_decay") h.epsilon_decay = read<double>(v, field, "a number");
    else if (key == "decay_law") {
      try {
        h.decay_law = agents::parse_decay_law(read<std::string>(v, field, "linear or exponential"));
      } catch (const InvalidConfig& e) {
        throw ConfigError(e.what(), line_of(v));
      }
    } else throw ConfigError("unknown key '" + field + "'", line_of(kv.first));
  }
}

void parse_dqn(const YAML::Node& node, agents::DqnOptions& d) {
  require_map(node, "dqn");
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    const YAML::Node& v = kv.second;
    const std::string field = "dqn." + key;
    if (key == "hidden") {
      if (!v.IsSequence()) throw ConfigError(field + ": expected a list of layer widths", line_of(v));
      d.hidden.clear();
      for (const auto& item : v) d.hidden.push_back(read_count(item, field));
    } else if (key == "target_refresh") d.target_refresh = read_count(v, field);
    else if (key == "train_every") d.train_every = read_count(v, field);
    else if (key == "warmup") d.warmup = read_count(v, field);
    else throw ConfigError("unknown key '" + field + "'", line_of(kv.first));
  }
}

void apply_override(YAML::Node& root, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("override '" + assignment + "': expected key=value", 0);
  }
  const std::string path = assignment.substr(0, eq);
  YAML::Node value;
  try {
    value = YAML::Load(assignment.substr(eq + 1));
  } catch (const YAML::Exception& e) {
    throw ConfigError("override '" + assignment + "': " + e.msg, 0);
  }
  std::vector<std::string> parts;
  std::stringstream ss(path);
  for (std::string part; std::getline(ss, part, '.');) parts.push_back(part);
  YAML::Node cur = root;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    if (!cur[parts[i]]) cur[parts[i]] = YAML::Node(YAML::NodeType::Map);
    cur.reset(cur[parts[i]]);
  }
  cur[parts.back()] = value;
}

std::string fmt(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

double mean_of(const std::vector<double>& v, std::size_t last) {
  if (v.empty()) return 0.0;
  const std::size_t n = std::min(last, v.size());
  return std::accumulate(v.end() - static_cast<std::ptrdiff_t>(n), v.end(), 0.0) / static_cast<double>(n);
}

}  // namespace

void ExperimentConfig::validate(const Registry& registry) const {
  if (scenario.empty()) throw ConfigError("scenario: required", 0);
  if (!registry.contains(scenario)) throw ConfigError("scenario: unknown scenario '" + scenario + "'", 0);
  if (episodes == 0) throw ConfigError("episodes: must be >= 1", 0);
  if (max_steps == 0) throw ConfigError("max_steps: must be >= 1", 0);
  try {
    hyperparams.validate();
  } catch (const InvalidConfig& e) {
    throw ConfigError(std::string("hyperparams.") + e.what(), 0);
  }
  if (dqn.train_every == 0) throw ConfigError("dqn.train_every: must be >= 1", 0);
}

ExperimentConfig parse_experiment(const std::string& yaml_text, const std::vector<std::string>& overrides) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::ParserException& e) {
    throw ConfigError(e.msg, e.mark.line + 1);
  }
  if (!root || root.IsNull()) root = YAML::Node(YAML::NodeType::Map);
  require_map(root, "config");
  for (const auto& o : overrides) apply_override(root, o);

  ExperimentConfig c;
  bool has_scenario = false, has_agent = false, has_episodes = false;
  for (const auto& kv : root) {
    const auto key = kv.first.as<std::string>();
    const YAML::Node& v = kv.second;
    if (key == "scenario") {
      c.scenario = read<std::string>(v, key, "a scenario id");
      has_scenario = true;
    } else if (key == "agent") {
      c.agent = parse_agent(v);
      has_agent = true;
    } else if (key == "episodes") {
      c.episodes = read_count(v, key);
      has_episodes = true;
    } else if (key == "seed") c.seed = read<std::uint64_t>(v, key, "an unsigned integer");
    else if (key == "max_steps") c.max_steps = read_count(v, key);
    else if (key == "output") c.output = read<std::string>(v, key, "a path");
    else if (key == "hyperparams") parse_hyperparams(v, c.hyperparams);
    else if (key == "dqn") parse_dqn(v, c.dqn);
    else throw ConfigError("unknown key '" + key + "'", line_of(kv.first));
  }
  if (!has_scenario) throw ConfigError("scenario: required", 0);
  if (!has_agent) throw ConfigError("agent: required", 0);
  if (!has_episodes) throw ConfigError("episodes: required", 0);
  return c;
}

ExperimentConfig load_experiment(const std::string& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'", 0);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_experiment(buf.str(), overrides);
}

ExperimentSummary run_experiment(const ExperimentConfig& config, const Registry& registry) {
  config.validate(registry);
  const Scenario& scenario = registry.get(config.scenario);
  auto env = scenario.make(config.seed);
  const std::size_t actions = env->action_space().count();

  std::unique_ptr<Agent> agent;
  agents::TabularQAgent* tabular = nullptr;
  agents::DqnAgent* dqn = nullptr;
  switch (config.agent) {
    case AgentKind::Random: agent = std::make_unique<RandomAgent>(actions, mix_seed(config.seed, 7)); break;
    case AgentKind::Tabular: {
      auto a = std::make_unique<agents::TabularQAgent>(actions, config.hyperparams, mix_seed(config.seed, 7));
      tabular = a.get();
      agent = std::move(a);
      break;
    }
    case AgentKind::Dqn: {
      auto a = std::make_unique<agents::DqnAgent>(env->observation_spec().shape(), actions, config.hyperparams,
                                                  config.dqn, mix_seed(config.seed, 7));
      dqn = a.get();
      agent = std::move(a);
      break;
    }
  }

  ExperimentSummary s;
  s.scenario = config.scenario;
  s.agent = std::string(agent_name(config.agent));
  s.episodes = config.episodes;
  std::vector<double> rewards;
  for (std::size_t ep = 0; ep < config.episodes; ++ep) {
    EpisodeMetrics m;
    m.episode = ep;
    m.epsilon = tabular ? tabular->epsilon() : dqn ? dqn->epsilon() : 1.0;
    const EpisodeLog log = run_episode(*env, *agent, config.max_steps, std::nullopt, false);
    m.steps = log.steps;
    m.total_reward = log.total_reward;
    m.loss_mean = dqn ? dqn->last_episode_loss() : 0.0;
    s.metrics.push_back(m);
    rewards.push_back(log.total_reward);
  }

  auto baseline_env = scenario.make(config.seed);
  RandomAgent random(actions, mix_seed(config.seed, 11));
  for (std::size_t ep = 0; ep < config.episodes; ++ep) {
    s.random_rewards.push_back(run_episode(*baseline_env, random, config.max_steps, std::nullopt, false).total_reward);
  }

  s.agent_mean = mean_of(rewards, rewards.size());
  s.random_mean = mean_of(s.random_rewards, s.random_rewards.size());
  s.agent_last50_mean = mean_of(rewards, 50);
  s.random_last50_mean = mean_of(s.random_rewards, 50);

  if (!config.output.empty()) {
    std::ofstream out(config.output);
    if (!out) throw InvalidArgument("cannot write metrics to '" + config.output + "'");
    write_metrics_csv(s.metrics, out);
  }
  return s;
}

void write_metrics_csv(const std::vector<EpisodeMetrics>& metrics, std::ostream& out) {
  out << kMetricsSchema << '\n' << kMetricsHeader << '\n';
  for (const auto& m : metrics) {
    out << m.episode << ',' << m.steps << ',' << fmt(m.total_reward) << ',' << fmt(m.loss_mean) << ','
        << fmt(m.epsilon) << '\n';
  }
}

void print_summary(const ExperimentSummary& s, std::ostream& out) {
  out << "scenario,agent,episodes,agent_mean,random_mean,agent_last50_mean,random_last50_mean\n"
      << s.scenario << ',' << s.agent << ',' << s.episodes << ',' << fmt(s.agent_mean) << ',' << fmt(s.random_mean)
      << ',' << fmt(s.agent_last50_mean) << ',' << fmt(s.random_last50_mean) << '\n';
}

}  // namespace rlsuite::bench
