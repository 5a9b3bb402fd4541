/*
Copyright 2026 The RLA Simulator Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "rla/cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "rla/config_io.hpp"
#include "rla/engine.hpp"
#include "rla/error.hpp"
#include "rla/report.hpp"
#include "rla/scenario.hpp"

namespace rla::cli {

namespace {

/// An input problem tied to a file; maps to exit code 1.
struct InputError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{path + ": cannot open"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename F>
auto with_file_context(const std::string& path, F&& parse) {
  try {
    return parse(read_file(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::AllLinksFailed) throw;
    throw InputError{path + ": " + std::string(to_string(e.code())) + ": " + e.what()};
  }
}

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
  if (path == "-") {
    out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError{path + ": cannot write"};
  file << data;
}

std::string stamp_line(const std::string& what) {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return "# rla " + what + " " + buf + "\n";
}

struct RunInputs {
  std::string links_path;
  std::string trace_path;
  std::string failures_path;
  double tick = 1.0;
  double quantum = 1.0;
  std::string wfq_direction = "inverse";
  std::string out = "-";
  bool stamp = false;
};

void add_run_options(CLI::App& cmd, RunInputs& in) {
  cmd.add_option("--links", in.links_path, "Link configuration CSV")->required();
  cmd.add_option("--trace", in.trace_path, "Demand trace CSV")->required();
  cmd.add_option("--tick", in.tick, "Tick length in seconds");
  cmd.add_option("--quantum", in.quantum, "Placement unit in Mbit");
  cmd.add_option("--wfq-direction", in.wfq_direction, "WFQ weighting: inverse|direct");
  cmd.add_option("--failures", in.failures_path, "Failure schedule CSV");
  cmd.add_option("--out", in.out, "Output path, '-' for standard output")->required();
  cmd.add_flag("--stamp", in.stamp, "Prefix output with a generation comment");
}

struct Loaded {
  AggregationGroup group;
  DemandTrace trace;
  FailureSchedule failures;
  EngineConfig config;
};

Loaded load(const RunInputs& in) {
  Loaded l;
  l.config.tick = in.tick;
  l.config.quantum = in.quantum;
  l.config.wfq_direction = parse_cost_direction(in.wfq_direction);
  if (!(in.tick > 0.0)) throw InputError{"--tick must be > 0"};
  l.group = with_file_context(in.links_path, [&](const std::string& text) {
    return parse_links(text, in.tick, std::filesystem::path(in.links_path).stem().string());
  });
  l.trace = with_file_context(in.trace_path, [](const std::string& text) { return parse_trace(text); });
  if (!in.failures_path.empty()) {
    l.failures = with_file_context(in.failures_path, [&](const std::string& text) {
      return parse_failures(text, &l.group);
    });
  }
  validate_config(l.config, l.group);
  return l;
}

std::string render_report(const std::string& kind, const SimulationResult& result) {
  if (kind == "supply") return supply_csv(result);
  if (kind == "shortfall") return shortfall_csv(result);
  if (kind == "cost") return cost_csv(result);
  if (kind == "reorder") return reorder_csv(result);
  std::string all;
  for (const char* k : {"supply", "shortfall", "cost", "reorder"}) {
    if (!all.empty()) all += '\n';
    all += std::string("# ") + k + '\n' + render_report(k, result);
  }
  return all;
}

std::vector<PolicyId> parse_policy_list(const std::string& list) {
  std::vector<PolicyId> out;
  std::set<PolicyId> seen;
  std::size_t start = 0;
  while (start <= list.size()) {
    auto comma = list.find(',', start);
    if (comma == std::string::npos) comma = list.size();
    const auto id = parse_policy(list.substr(start, comma - start));
    if (!seen.insert(id).second) {
      throw InputError{"policy '" + std::string(to_string(id)) + "' listed twice"};
    }
    out.push_back(id);
    start = comma + 1;
  }
  return out;
}

int simulate(const RunInputs& in, const std::string& policy, const std::string& report,
             std::ostream& out) {
  const PolicyId id = parse_policy(policy);
  Loaded l = load(in);
  l.config.policy = id;
  const auto result = run(l.group, l.config, l.trace, l.failures);
  std::string data = in.stamp ? stamp_line("simulate") : std::string();
  data += render_report(report, result);
  write_output(in.out, data, out);
  return kExitOk;
}

int compare(const RunInputs& in, const std::string& policies, std::ostream& out) {
  const auto ids = parse_policy_list(policies);
  const Loaded l = load(in);

  std::vector<std::future<SimulationResult>> jobs;
  for (const auto id : ids) {
    EngineConfig cfg = l.config;
    cfg.policy = id;
    jobs.push_back(std::async(std::launch::async,
                              [&l, cfg] { return run(l.group, cfg, l.trace, l.failures); }));
  }
  std::vector<SimulationResult> results;
  for (auto& job : jobs) results.push_back(job.get());

  std::string data = in.stamp ? stamp_line("compare") : std::string();
  data += compare_csv(results);
  write_output(in.out, data, out);
  return kExitOk;
}

int scenario(const std::string& name, const std::string& out_dir, int samples_per_hour) {
  int number = 0;
  if (name == "1") {
    number = 1;
  } else if (name == "2") {
    number = 2;
  } else {
    throw InputError{"unknown scenario '" + name + "' (expected 1 or 2)"};
  }
  const auto s = make_scenario(number, samples_per_hour);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw InputError{out_dir + ": " + ec.message()};
  const auto base = std::filesystem::path(out_dir) / ("scenario" + name);
  std::ostream unused(nullptr);
  write_output(base.string() + "_links.csv", serialize_links(s.group, false), unused);
  write_output(base.string() + "_trace.csv", serialize_trace(s.trace), unused);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Redundant link aggregation simulator", "rla"};
  app.require_subcommand(1);

  RunInputs sim_in;
  std::string policy;
  std::string report = "supply";
  auto* sim = app.add_subcommand("simulate", "Run one policy over a trace and write reports");
  add_run_options(*sim, sim_in);
  sim->add_option("--policy", policy, "olb|rr|wfq|vrrp")->required();
  sim->add_option("--report", report, "supply|shortfall|cost|reorder|all")
      ->check(CLI::IsMember({"supply", "shortfall", "cost", "reorder", "all"}));

  RunInputs cmp_in;
  std::string policies;
  auto* cmp = app.add_subcommand("compare", "Run several policies and merge their supply series");
  add_run_options(*cmp, cmp_in);
  cmp->add_option("--policies", policies, "Comma separated, e.g. olb,vrrp")->required();

  std::string scen_name;
  std::string out_dir;
  int samples_per_hour = 60;
  auto* scen = app.add_subcommand("scenario", "Write a bundled link set and synthetic day trace");
  scen->add_option("--name", scen_name, "1|2")->required();
  scen->add_option("--out-dir", out_dir, "Destination directory")->required();
  scen->add_option("--samples-per-hour", samples_per_hour, "Trace resolution");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*sim) return simulate(sim_in, policy, report, out);
    if (*cmp) return compare(cmp_in, policies, out);
    return scenario(scen_name, out_dir, samples_per_hour);
  } catch (const InputError& e) {
    err << "rla: " << e.message << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "rla: " << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::AllLinksFailed ? kExitRuntime : kExitInput;
  } catch (const std::exception& e) {
    err << "rla: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace rla::cli
