#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "k4tri/atlas.hpp"
#include "k4tri/base_case.hpp"
#include "k4tri/checks.hpp"
#include "k4tri/error.hpp"
#include "k4tri/graph6.hpp"
#include "k4tri/packing.hpp"
#include "k4tri/report.hpp"
#include "k4tri/sweep.hpp"
#include "k4tri/version.hpp"

namespace k4tri::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

int parse_int(const std::string& text, const std::string& what) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw UsageError("bad " + what + " '" + text + "'");
  }
  return value;
}

std::array<int, 3> parse_k(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw UsageError("--k expects a,b,c, got '" + text + "'");
  std::array<int, 3> k{};
  for (std::size_t i = 0; i < 3; ++i) {
    k[i] = parse_int(parts[i], "multiplicity");
    if (k[i] < 1) throw UsageError("multiplicities must be >= 1");
  }
  return k;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = parse_int(text, "n");
    return {n, n};
  }
  return {parse_int(text.substr(0, dots), "n"), parse_int(text.substr(dots + 2), "n")};
}

std::vector<Check> parse_checks(const std::string& text) {
  std::vector<Check> out;
  for (const std::string& name : split(text, ',')) {
    if (name == "all") {
      out.insert(out.end(), std::begin(kTheoremChecks), std::end(kTheoremChecks));
    } else if (auto c = parse_check(name)) {
      out.push_back(*c);
    } else {
      throw UsageError("unknown check '" + name + "'");
    }
  }
  if (out.empty()) throw UsageError("no checks given");
  std::vector<Check> unique;
  for (Check c : out) {
    if (std::find(unique.begin(), unique.end(), c) == unique.end()) unique.push_back(c);
  }
  return unique;
}

PartitionMode parse_mode(const std::string& text) {
  if (text == "deterministic") return PartitionMode::kDeterministic;
  if (text == "exhaustive") return PartitionMode::kExhaustive;
  throw UsageError("--partition-mode must be deterministic or exhaustive");
}

// Output sink: the caller's stream, or a file when --out is given.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw std::ios_base::failure("cannot open '" + path + "' for writing");
    stream_ = file_.get();
  }
  std::ostream& operator*() { return *stream_; }
  void finish() {
    stream_->flush();
    if (!*stream_) throw std::ios_base::failure("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

// ---------------------------------------------------------------- atlas

struct AtlasArgs {
  std::string id;
  std::string k = "1,1,1";
  std::string format = "text";
  std::string out;
};

int cmd_atlas(const AtlasArgs& args, std::ostream& out) {
  const auto id = parse_base_graph_id(args.id);
  if (!id) throw UsageError("unknown atlas id '" + args.id + "', expected F1..F4");
  const BlowUpSpec spec{*id, parse_k(args.k)};
  const AtlasEntry entry = blow_up(spec);
  const PartitionStats stats = partition_stats(entry.graph, entry.partition);
  const ClosedFormStats cf = closed_form_stats(spec);
  const std::array<std::pair<const char*, std::pair<std::int64_t, std::int64_t>>, 5> rows = {
      {{"v", {stats.n, cf.v}},
       {"e", {stats.e, cf.e}},
       {"r", {stats.r, cf.r}},
       {"t", {stats.t, cf.t}},
       {"g", {stats.g, cf.g}}}};
  bool agree = true;
  for (const auto& row : rows) agree = agree && row.second.first == row.second.second;

  Sink sink(args.out, out);
  if (args.format == "json") {
    json j = atlas_sidecar(entry);
    j["computed"] = {{"v", stats.n}, {"e", stats.e}, {"r", stats.r}, {"t", stats.t},
                     {"g", stats.g}, {"omega", stats.omega}};
    j["agree"] = agree;
    *sink << j.dump() << '\n';
  } else {
    *sink << encode_graph6(entry.graph) << '\n';
    *sink << "partition " << json(entry.partition.as_lists()).dump() << '\n';
    *sink << "stat computed closed-form\n";
    for (const auto& [name, values] : rows) {
      *sink << name << ' ' << values.first << ' ' << values.second << '\n';
    }
    *sink << "omega " << stats.omega << '\n';
    *sink << "g = r(e - r(n-r)) - t\n";
  }
  sink.finish();
  return agree ? kExitOk : kExitViolation;
}

// --------------------------------------------------------------- table1

struct Table1Args {
  bool include_empty = false;
  bool naive = false;
  std::string only;
  std::string format = "text";
  std::string out;
  int jobs = 1;
};

int cmd_table1(const Table1Args& args, std::ostream& out, std::ostream& err) {
  if (args.jobs < 1) throw UsageError("--jobs must be >= 1");
  std::optional<BaseCaseSpec> only;
  if (!args.only.empty()) {
    try {
      only = parse_base_case(args.only);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  BaseCaseOptions options;
  options.include_empty_subsets = args.include_empty;
  options.seed_mode = args.naive ? SeedMode::kNaive : SeedMode::kIsomorphismClasses;
  options.jobs = args.jobs;
  const Table1Result result = reproduce_table1(options, only);

  Sink sink(args.out, out);
  if (args.format == "csv") {
    *sink << table1_csv(result);
  } else if (args.format == "json") {
    json j = table1_json(result);
    j["header"] = report_header("table1", {{"include_empty_subsets", args.include_empty},
                                           {"seed_mode", args.naive ? "naive" : "classes"}})
                      .at("header");
    *sink << j.dump() << '\n';
  } else {
    *sink << table1_text(result);
  }
  sink.finish();

  const auto diff = table1_diff(result);
  for (const auto& line : diff) err << "table1: " << line << '\n';
  return diff.empty() ? kExitOk : kExitViolation;
}

// --------------------------------------------------------------- verify

struct VerifyArgs {
  std::string input;
  std::string checks = "all";
  std::string mode = "deterministic";
  std::string format = "json";
  std::string out;
};

int cmd_verify(const VerifyArgs& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  const std::vector<Check> checks = parse_checks(args.checks);
  const PartitionMode mode = parse_mode(args.mode);

  std::ifstream file;
  std::istream* source = &in;
  if (!args.input.empty() && args.input != "-") {
    file.open(args.input);
    if (!file) {
      err << "verify: cannot open '" << args.input << "'\n";
      return kExitUsage;
    }
    source = &file;
  }

  Sink sink(args.out, out);
  const bool as_json = args.format != "text";
  if (as_json) *sink << report_header("verify", {{"checks", args.checks}, {"partition_mode", args.mode}}).dump() << '\n';

  bool input_errors = false, violations = false;
  std::string line;
  for (int lineno = 1; std::getline(*source, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const Graph g = parse_graph6(line);
      if (!is_k4_free(g)) throw Error(ErrorKind::kNotK4Free, "graph contains a K4");
      std::vector<CliquePartition> partitions;
      if (mode == PartitionMode::kExhaustive) {
        if (g.order() > 10) {
          throw Error(ErrorKind::kUnsupportedSize, "exhaustive partition mode supports n <= 10");
        }
        partitions = enumerate_greedy_partitions(g, static_cast<std::size_t>(-1));
      } else {
        partitions.push_back(greedy_partition(g));
      }
      std::vector<PartitionStats> all_stats;
      std::int64_t target = 0;
      bool wants_packing = false;
      for (const CliquePartition& p : partitions) {
        all_stats.push_back(partition_stats(g, p));
        for (Check c : checks) {
          if (!needs_packing(c)) continue;
          wants_packing = true;
          target = std::max(target, packing_target(c, g, all_stats.back()));
        }
      }
      std::optional<int> te;
      std::string te_error;
      if (wants_packing) {
        try {
          te = packing_at_least(g, target).packing.size();
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::kUnsupportedSize) throw;
          te_error = e.what();
        }
      }
      for (std::size_t pi = 0; pi < partitions.size(); ++pi) {
        for (Check c : checks) {
          if (needs_packing(c) && !te) {
            if (as_json) {
              *sink << json{{"line", lineno}, {"check", std::string(to_string(c))},
                            {"skipped", te_error}}.dump()
                    << '\n';
            } else {
              *sink << "line " << lineno << ' ' << to_string(c) << " skipped: " << te_error
                    << '\n';
            }
            continue;
          }
          const VerificationReport r =
              needs_packing(c) ? run_packing_check(c, g, partitions[pi], all_stats[pi], *te)
                               : run_partition_check(c, g, partitions[pi], all_stats[pi]);
          violations = violations || !r.holds;
          if (as_json) {
            json j = r;
            j["line"] = lineno;
            if (partitions.size() > 1) j["partition_index"] = pi;
            *sink << j.dump() << '\n';
          } else {
            *sink << "line " << lineno << ' ' << r.check << ' '
                  << (r.holds ? "holds" : "VIOLATED") << " lhs=" << r.lhs
                  << " rhs=" << r.rhs << '\n';
          }
        }
      }
    } catch (const Error& e) {
      input_errors = true;
      err << "line " << lineno << ": " << to_string(e.kind()) << ": " << e.what() << '\n';
    }
  }
  if (source->bad()) {
    err << "verify: read error\n";
    return kExitUsage;
  }
  sink.finish();
  if (input_errors) return kExitUsage;
  return violations ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  std::string n = "5..10";
  int seeds = 100;
  std::uint64_t seed = 1;
  std::optional<double> density;
  std::string checks = "all";
  std::string mode = "deterministic";
  std::string family;
  int kmax = 4;
  int jobs = 1;
  std::string format = "text";
  std::string out;
  std::string witness;
};

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  SweepConfig config;
  std::tie(config.n_lo, config.n_hi) = parse_range(args.n);
  config.seeds = args.seeds;
  config.seed = args.seed;
  config.density = args.density;
  config.checks = parse_checks(args.checks);
  config.mode = parse_mode(args.mode);
  config.kmax = args.kmax;
  config.jobs = args.jobs;
  if (!args.family.empty()) {
    config.family = parse_base_graph_id(args.family);
    if (!config.family) throw UsageError("unknown family '" + args.family + "'");
  }
  SweepReport report;
  try {
    report = sweep(config);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kInvalidArgument) throw UsageError(e.what());
    throw;
  }

  Sink sink(args.out, out);
  if (args.format == "json") {
    json header_extra = {{"seed", args.seed}, {"checks", args.checks},
                         {"partition_mode", args.mode}, {"jobs", args.jobs}};
    if (config.family) {
      header_extra["family"] = args.family;
      header_extra["kmax"] = args.kmax;
    } else {
      header_extra["n"] = args.n;
      header_extra["seeds"] = args.seeds;
    }
    *sink << report_header("sweep", header_extra).dump() << '\n';
    json tallies = json::array();
    for (const auto& t : report.tallies) {
      tallies.push_back({{"check", std::string(to_string(t.check))},
                         {"evaluated", t.evaluated},
                         {"violations", t.violations},
                         {"skipped", t.skipped}});
    }
    *sink << json{{"graphs", report.graphs},
                  {"partitions", report.partitions},
                  {"tallies", tallies},
                  {"violations", report.total_violations()}}
                 .dump()
          << '\n';
  } else {
    *sink << "k4tri " << kVersion << " sweep seed=" << args.seed << '\n';
    *sink << "graphs " << report.graphs << " partitions " << report.partitions << '\n';
    for (const auto& t : report.tallies) {
      *sink << to_string(t.check) << " evaluated=" << t.evaluated
            << " violations=" << t.violations << " skipped=" << t.skipped << '\n';
    }
  }
  sink.finish();

  if (!report.failures.empty()) {
    std::string path = args.witness;
    if (path.empty()) path = args.out.empty() ? "k4tri-witnesses.jsonl" : args.out + ".witnesses.jsonl";
    std::ofstream w(path);
    if (!w) throw std::ios_base::failure("cannot open '" + path + "' for writing");
    w << report_header("sweep-witnesses", {{"seed", args.seed}}).dump() << '\n';
    for (const auto& f : report.failures) w << json(f).dump() << '\n';
    if (!w.flush()) throw std::ios_base::failure("write failed for '" + path + "'");
    err << "sweep: " << report.failures.size() << " witnesses written to " << path << '\n';
  }
  return report.total_violations() == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Triangle counts in K4-free graphs: constructions, checks and searches",
               "k4tri"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  AtlasArgs atlas;
  auto* atlas_cmd = app.add_subcommand("atlas", "Print an atlas graph or blow-up with its stats");
  atlas_cmd->add_option("id", atlas.id, "F1, F2, F3 or F4")->required();
  atlas_cmd->add_option("--k", atlas.k, "Blow-up multiplicities a,b,c");
  atlas_cmd->add_option("--format", atlas.format)->check(CLI::IsMember({"text", "json"}));
  atlas_cmd->add_option("--out", atlas.out, "Output path");

  Table1Args table1;
  auto* table1_cmd = app.add_subcommand("table1", "Run the r = 3 base-case search");
  table1_cmd->add_flag("--include-empty-subsets", table1.include_empty,
                       "Also iterate empty cross-edge sets on the free pairs");
  table1_cmd->add_flag("--naive", table1.naive, "Iterate every subset of the fixed pair too");
  table1_cmd->add_option("--case", table1.only, "Single case a,b,c");
  table1_cmd->add_option("--format", table1.format)
      ->check(CLI::IsMember({"text", "csv", "json"}));
  table1_cmd->add_option("--out", table1.out, "Output path");
  table1_cmd->add_option("--jobs", table1.jobs, "Worker threads");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run checks on graph6 input, one graph per line");
  verify_cmd->add_option("input", verify.input, "graph6 file; standard input when omitted");
  verify_cmd->add_option("--checks,--check", verify.checks, "Comma list of checks, or all");
  verify_cmd->add_option("--partition-mode", verify.mode, "deterministic or exhaustive");
  verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember({"json", "text"}));
  verify_cmd->add_option("--out", verify.out, "Output path");

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run checks over random graphs or an atlas family");
  sweep_cmd->add_option("--n", sw.n, "Vertex range lo..hi");
  sweep_cmd->add_option("--seeds", sw.seeds, "Graphs per vertex count");
  sweep_cmd->add_option("--seed", sw.seed, "Base seed");
  sweep_cmd->add_option("--density", sw.density, "Fixed insertion density in [0,1]");
  sweep_cmd->add_option("--checks,--check", sw.checks, "Comma list of checks, or all");
  sweep_cmd->add_option("--partition-mode", sw.mode, "deterministic or exhaustive");
  sweep_cmd->add_option("--family", sw.family, "Sweep blow-ups of F1..F4 instead");
  sweep_cmd->add_option("--kmax", sw.kmax, "Largest multiplicity in family mode");
  sweep_cmd->add_option("--jobs", sw.jobs, "Worker threads");
  sweep_cmd->add_option("--format", sw.format)->check(CLI::IsMember({"text", "json"}));
  sweep_cmd->add_option("--out", sw.out, "Summary output path");
  sweep_cmd->add_option("--witness", sw.witness, "Witness output path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*atlas_cmd) return cmd_atlas(atlas, out);
    if (*table1_cmd) return cmd_table1(table1, out, err);
    if (*verify_cmd) return cmd_verify(verify, in, out, err);
    if (*sweep_cmd) return cmd_sweep(sw, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace k4tri::cli
