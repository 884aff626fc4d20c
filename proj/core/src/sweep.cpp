#include "k4tri/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "k4tri/error.hpp"
#include "k4tri/packing.hpp"
#include "k4tri/random_graph.hpp"

namespace k4tri {

std::uint64_t SweepReport::total_violations() const {
  std::uint64_t total = 0;
  for (const auto& t : tallies) total += t.violations;
  return total;
}

std::uint64_t instance_seed(std::uint64_t seed, int n, int s) {
  std::uint64_t z = seed ^ (static_cast<std::uint64_t>(n) << 32) ^
                    static_cast<std::uint64_t>(s);
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

struct Instance {
  Graph graph;
  std::optional<CliquePartition> partition;  // fixed partition, e.g. blow-up
};

struct InstanceResult {
  std::uint64_t partitions = 0;
  std::vector<CheckTally> tallies;
  std::vector<VerificationReport> failures;
};

void validate(const SweepConfig& c) {
  auto bad = [](const std::string& what) { throw Error(ErrorKind::kInvalidArgument, what); };
  if (c.checks.empty()) bad("no checks selected");
  if (c.jobs < 1) bad("jobs must be >= 1");
  if (c.family) {
    if (c.kmax < 1) bad("kmax must be >= 1");
  } else {
    if (c.n_lo < 1 || c.n_hi > Graph::kMaxVertices || c.n_lo > c.n_hi) {
      bad("n range must satisfy 1 <= lo <= hi <= 64");
    }
    if (c.seeds < 0) bad("seeds must be >= 0");
    if (c.density && !(*c.density >= 0.0 && *c.density <= 1.0)) {
      bad("density must lie in [0, 1]");
    }
  }
  if (c.mode == PartitionMode::kExhaustive && !c.family && c.n_hi > 10) {
    bad("exhaustive partition mode supports n <= 10");
  }
}

std::vector<Instance> instances(const SweepConfig& c) {
  std::vector<Instance> out;
  if (c.family) {
    for (int k1 = 1; k1 <= c.kmax; ++k1) {
      for (int k2 = 1; k2 <= c.kmax; ++k2) {
        for (int k3 = 1; k3 <= c.kmax; ++k3) {
          const BlowUpSpec spec{*c.family, {k1, k2, k3}};
          if (closed_form_stats(spec).v > Graph::kMaxVertices) continue;
          AtlasEntry entry = blow_up(spec);
          out.push_back({std::move(entry.graph), std::move(entry.partition)});
        }
      }
    }
    return out;
  }
  for (int n = c.n_lo; n <= c.n_hi; ++n) {
    for (int s = 0; s < c.seeds; ++s) {
      const double density = c.density.value_or(0.25 * (1 + s % 4));
      out.push_back({random_k4free(n, density, instance_seed(c.seed, n, s)), std::nullopt});
    }
  }
  return out;
}

InstanceResult run_instance(const SweepConfig& c, const Instance& inst) {
  InstanceResult res;
  for (Check ch : c.checks) res.tallies.push_back({ch});

  std::vector<CliquePartition> partitions;
  if (inst.partition) {
    partitions.push_back(*inst.partition);
  } else if (c.mode == PartitionMode::kExhaustive) {
    if (inst.graph.order() > 10) {
      throw Error(ErrorKind::kUnsupportedSize, "exhaustive partition mode supports n <= 10");
    }
    partitions = enumerate_greedy_partitions(inst.graph, static_cast<std::size_t>(-1));
  } else {
    partitions.push_back(greedy_partition(inst.graph));
  }

  std::vector<PartitionStats> all_stats;
  std::int64_t target = 0;
  bool wants_packing = false;
  for (const CliquePartition& p : partitions) {
    all_stats.push_back(partition_stats(inst.graph, p));
    for (Check ch : c.checks) {
      if (!needs_packing(ch)) continue;
      wants_packing = true;
      target = std::max(target, packing_target(ch, inst.graph, all_stats.back()));
    }
  }
  std::optional<int> packing_number;
  if (wants_packing) {
    try {
      packing_number = packing_at_least(inst.graph, target).packing.size();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kUnsupportedSize) throw;
    }
  }

  for (std::size_t pi = 0; pi < partitions.size(); ++pi) {
    ++res.partitions;
    for (std::size_t i = 0; i < c.checks.size(); ++i) {
      const Check ch = c.checks[i];
      if (needs_packing(ch) && !packing_number) {
        ++res.tallies[i].skipped;
        continue;
      }
      VerificationReport report =
          needs_packing(ch)
              ? run_packing_check(ch, inst.graph, partitions[pi], all_stats[pi], *packing_number)
              : run_partition_check(ch, inst.graph, partitions[pi], all_stats[pi]);
      ++res.tallies[i].evaluated;
      if (!report.holds) {
        ++res.tallies[i].violations;
        res.failures.push_back(std::move(report));
      }
    }
  }
  return res;
}

}  // namespace

SweepReport sweep(const SweepConfig& config) {
  validate(config);
  const std::vector<Instance> all = instances(config);
  std::vector<InstanceResult> results(all.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < all.size(); i = next.fetch_add(1)) {
      results[i] = run_instance(config, all[i]);
    }
  };
  const int jobs = std::min<int>(config.jobs, std::max<std::size_t>(1, all.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  SweepReport report;
  report.graphs = all.size();
  for (Check ch : config.checks) report.tallies.push_back({ch});
  for (auto& r : results) {
    report.partitions += r.partitions;
    for (std::size_t i = 0; i < r.tallies.size(); ++i) {
      report.tallies[i].evaluated += r.tallies[i].evaluated;
      report.tallies[i].violations += r.tallies[i].violations;
      report.tallies[i].skipped += r.tallies[i].skipped;
    }
    for (auto& f : r.failures) report.failures.push_back(std::move(f));
  }
  return report;
}

}  // namespace k4tri
