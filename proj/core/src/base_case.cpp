#include "k4tri/base_case.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "k4tri/error.hpp"
#include "k4tri/graph6.hpp"
#include "k4tri/report.hpp"

namespace k4tri {

std::array<int, 3> BaseCaseSpec::part_sizes() const {
  std::array<int, 3> sizes{};
  std::size_t i = 0;
  for (int k = 0; k < a && i < 3; ++k) sizes[i++] = 3;
  for (int k = 0; k < b && i < 3; ++k) sizes[i++] = 2;
  for (int k = 0; k < c && i < 3; ++k) sizes[i++] = 1;
  return sizes;
}

std::string BaseCaseSpec::label() const {
  return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
}

BaseCaseSpec parse_base_case(const std::string& text) {
  BaseCaseSpec spec{-1, -1, -1};
  std::array<int*, 3> fields = {&spec.a, &spec.b, &spec.c};
  const char* p = text.data();
  const char* end = text.data() + text.size();
  bool ok = true;
  for (std::size_t i = 0; i < 3 && ok; ++i) {
    auto [next, ec] = std::from_chars(p, end, *fields[i]);
    ok = ec == std::errc() && (i == 2 ? next == end : next != end && *next == ',');
    p = next + 1;
  }
  if (!ok || std::find(kBaseCases.begin(), kBaseCases.end(), spec) == kBaseCases.end()) {
    throw Error(ErrorKind::kInvalidArgument,
                "unknown base case '" + text + "', expected one of 3,0,0 2,1,0 2,0,1 "
                "1,2,0 1,1,1 1,0,2");
  }
  return spec;
}

namespace {

using Rows = std::array<VertexMask, 9>;

struct PairEdges {
  int x = 0, y = 0;  // part indices
  std::vector<std::pair<int, int>> edges;
};

// Vertex layout of a three-part case: parts are contiguous, largest first.
struct Layout {
  int n = 0;
  std::array<int, 3> size{};
  std::array<VertexMask, 3> part{};
  std::array<PairEdges, 3> pairs;  // (0,1), (0,2), (1,2)
  Rows clique_rows{};

  explicit Layout(const std::array<int, 3>& sizes) : size(sizes) {
    int next = 0;
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < size[j]; ++k) part[j] |= bit(next++);
    }
    n = next;
    const std::array<std::pair<int, int>, 3> ids = {{{0, 1}, {0, 2}, {1, 2}}};
    for (std::size_t p = 0; p < 3; ++p) {
      pairs[p].x = ids[p].first;
      pairs[p].y = ids[p].second;
      for (VertexMask mx = part[ids[p].first]; mx; mx &= mx - 1) {
        for (VertexMask my = part[ids[p].second]; my; my &= my - 1) {
          pairs[p].edges.emplace_back(std::countr_zero(mx), std::countr_zero(my));
        }
      }
    }
    for (int j = 0; j < 3; ++j) {
      for (VertexMask m = part[j]; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        clique_rows[v] = part[j] & ~bit(v);
      }
    }
  }

  void add(Rows& rows, const PairEdges& pe, unsigned subset) const {
    for (std::size_t i = 0; i < pe.edges.size(); ++i) {
      if (!((subset >> i) & 1U)) continue;
      const auto [u, v] = pe.edges[i];
      rows[u] |= bit(v);
      rows[v] |= bit(u);
    }
  }

  Graph to_graph(const Rows& rows) const {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (VertexMask m = rows[u] & above(u); m; m &= m - 1) {
        g.add_edge(u, std::countr_zero(m));
      }
    }
    return g;
  }

  CliquePartition partition() const {
    CliquePartition p;
    for (int j = 0; j < 3; ++j) {
      if (part[j]) p.parts.push_back(part[j]);
    }
    return p;
  }
};

bool has_triangle(const Rows& rows, VertexMask within) {
  for (VertexMask m = within; m; m &= m - 1) {
    const int u = std::countr_zero(m);
    for (VertexMask w = rows[u] & within & above(u); w; w &= w - 1) {
      const int v = std::countr_zero(w);
      if (rows[u] & rows[v] & within & above(v)) return true;
    }
  }
  return false;
}

bool has_k4(const Rows& rows, int n) {
  for (int u = 0; u < n; ++u) {
    for (VertexMask w = rows[u] & above(u); w; w &= w - 1) {
      const int v = std::countr_zero(w);
      const VertexMask common = rows[u] & rows[v] & above(v);
      for (VertexMask c = common; c; c &= c - 1) {
        if (rows[std::countr_zero(c)] & common) return true;
      }
    }
  }
  return false;
}

// Greedy conditions for the fixed contiguous partition. Parts are cliques
// and sizes are ordered by construction, so only the K_{l+1}-freeness of
// the small-part unions needs checking. Every condition is monotone in the
// edge set, which makes it usable for pruning partial graphs.
bool greedy_ok(const Layout& layout, const Rows& rows) {
  VertexMask le1 = 0, le2 = 0;
  for (int j = 0; j < 3; ++j) {
    if (layout.size[j] <= 1) le1 |= layout.part[j];
    if (layout.size[j] <= 2) le2 |= layout.part[j];
  }
  for (VertexMask m = le1; m; m &= m - 1) {
    if (rows[std::countr_zero(m)] & le1) return false;
  }
  if (has_triangle(rows, le2)) return false;
  return layout.size[0] < 3 || !has_k4(rows, layout.n);
}

struct Score {
  std::int64_t t = 0, m2 = 0, e = 0;
};

Score score(const Layout& layout, const Rows& rows) {
  std::array<int, 9> part_of{};
  for (int j = 0; j < 3; ++j) {
    for (VertexMask m = layout.part[j]; m; m &= m - 1) part_of[std::countr_zero(m)] = j;
  }
  Score s;
  for (int u = 0; u < layout.n; ++u) {
    s.e += std::popcount(rows[u] & above(u));
    for (VertexMask w = rows[u] & above(u); w; w &= w - 1) {
      const int v = std::countr_zero(w);
      for (VertexMask c = rows[u] & rows[v] & above(v); c; c &= c - 1) {
        const int x = std::countr_zero(c);
        ++s.t;
        const int pu = part_of[u], pv = part_of[v], px = part_of[x];
        const bool one = pu == pv && pv == px;
        const bool three = pu != pv && pv != px && pu != px;
        if (!one && !three) ++s.m2;
      }
    }
  }
  return s;
}

// Index into layout.pairs of the pair with fixed structure: the two
// triangles when a >= 2, otherwise the two smaller parts.
std::size_t fixed_pair_index(const BaseCaseSpec& spec) { return spec.a >= 2 ? 0 : 2; }

void require_known(const BaseCaseSpec& spec) {
  if (std::find(kBaseCases.begin(), kBaseCases.end(), spec) == kBaseCases.end()) {
    throw Error(ErrorKind::kInvalidArgument,
                "base case " + spec.label() + " is not one of the six a >= 1 cases");
  }
}

// Every permutation of the pair's vertices that maps the pair's parts onto
// themselves, as an image table on the pair's cross-edge indices.
std::vector<std::vector<int>> pair_symmetries(const Layout& layout, const PairEdges& pe) {
  auto vertices = [&](int j) {
    std::vector<int> out;
    for (VertexMask m = layout.part[j]; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  };
  const std::vector<int> xs = vertices(pe.x), ys = vertices(pe.y);
  std::map<std::pair<int, int>, int> index;
  for (std::size_t i = 0; i < pe.edges.size(); ++i) index[pe.edges[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> out;
  std::vector<int> px = xs, py = ys;
  std::sort(px.begin(), px.end());
  do {
    std::sort(py.begin(), py.end());
    do {
      for (int swap = 0; swap < (xs.size() == ys.size() ? 2 : 1); ++swap) {
        std::array<int, 9> image{};
        for (std::size_t i = 0; i < xs.size(); ++i) {
          image[xs[i]] = swap ? py[i] : px[i];
        }
        for (std::size_t i = 0; i < ys.size(); ++i) {
          image[ys[i]] = swap ? px[i] : py[i];
        }
        std::vector<int> map(pe.edges.size());
        for (std::size_t i = 0; i < pe.edges.size(); ++i) {
          int u = image[pe.edges[i].first], v = image[pe.edges[i].second];
          if (u > v) std::swap(u, v);
          map[i] = index.at({u, v});
        }
        out.push_back(std::move(map));
      }
    } while (std::next_permutation(py.begin(), py.end()));
  } while (std::next_permutation(px.begin(), px.end()));
  return out;
}

std::vector<unsigned> seed_subsets(const BaseCaseSpec& spec, const Layout& layout,
                                   SeedMode mode) {
  const PairEdges& pe = layout.pairs[fixed_pair_index(spec)];
  const unsigned count = 1U << pe.edges.size();
  const auto symmetries = pair_symmetries(layout, pe);
  std::vector<unsigned> out;
  for (unsigned s = 0; s < count; ++s) {
    Rows rows = layout.clique_rows;
    layout.add(rows, pe, s);
    if (!greedy_ok(layout, rows)) continue;
    if (mode == SeedMode::kIsomorphismClasses) {
      bool smallest = true;
      for (const auto& map : symmetries) {
        unsigned image = 0;
        for (std::size_t i = 0; i < map.size(); ++i) {
          if ((s >> i) & 1U) image |= 1U << map[i];
        }
        if (image < s) {
          smallest = false;
          break;
        }
      }
      if (!smallest) continue;
    }
    out.push_back(s);
  }
  return out;
}

const std::array<CanonicalForm, 4>& atlas_forms() {
  static const std::array<CanonicalForm, 4> forms = [] {
    std::array<CanonicalForm, 4> out;
    for (std::size_t i = 0; i < kBaseGraphIds.size(); ++i) {
      out[i] = canonical_form(base_graph(kBaseGraphIds[i]).graph);
    }
    return out;
  }();
  return forms;
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> fixed_pair_seeds(const BaseCaseSpec& spec,
                                                               SeedMode mode) {
  require_known(spec);
  const Layout layout(spec.part_sizes());
  const PairEdges& pe = layout.pairs[fixed_pair_index(spec)];
  std::vector<std::vector<std::pair<int, int>>> out;
  for (unsigned s : seed_subsets(spec, layout, mode)) {
    auto& list = out.emplace_back();
    for (std::size_t i = 0; i < pe.edges.size(); ++i) {
      if ((s >> i) & 1U) list.push_back(pe.edges[i]);
    }
  }
  return out;
}

std::vector<std::string> table1_constant_failures() {
  static const std::array<int, 6> tabulated = {18, 15, 12, 12, 9, 6};
  std::vector<std::string> failures;
  for (std::size_t i = 0; i < kBaseCases.size(); ++i) {
    const BaseCaseSpec& spec = kBaseCases[i];
    const std::int64_t n = spec.order();
    if (spec.constant() != tabulated[i]) {
      failures.push_back(spec.label() + ": 3(n-3) = " + std::to_string(spec.constant()) +
                         " but the table lists " + std::to_string(tabulated[i]));
    }
    // F0 + M2 - M0 = M2 + e - C must hold for every e.
    for (std::int64_t e : {0, 7, 20}) {
      const std::int64_t c =
          m0_closed_form(n, e, 3, spec.a) - f0_closed_form(n, e, 3, spec.a) + e;
      if (c != tabulated[i]) {
        failures.push_back(spec.label() + ": M0 - F0 + e = " + std::to_string(c) +
                           " at e = " + std::to_string(e));
      }
    }
  }
  return failures;
}

BaseCaseResult enumerate_base_case(const BaseCaseSpec& spec,
                                   const BaseCaseOptions& options) {
  require_known(spec);
  if (const auto failures = table1_constant_failures(); !failures.empty()) {
    throw std::logic_error("table constants disagree with closed forms: " +
                           failures.front());
  }
  const Layout layout(spec.part_sizes());
  const std::size_t fixed = fixed_pair_index(spec);
  const PairEdges& free1 = layout.pairs[fixed == 0 ? 1 : 0];
  const PairEdges& free2 = layout.pairs[fixed == 2 ? 1 : 2];
  const std::vector<unsigned> seeds = seed_subsets(spec, layout, options.seed_mode);
  const unsigned count1 = 1U << free1.edges.size();
  const unsigned count2 = 1U << free2.edges.size();
  const unsigned start = options.include_empty_subsets ? 0 : 1;
  const std::int64_t constant = spec.constant();
  const CliquePartition partition = layout.partition();

  struct Found {
    std::string graph6;
    Graph graph;
  };
  std::map<CanonicalForm, Found> found;
  std::mutex merge;
  std::atomic<std::uint64_t> visited{0}, violating{0};
  std::atomic<std::size_t> next_chunk{0};
  const std::size_t chunks = seeds.size() * (count1 - start);

  auto worker = [&] {
    std::map<CanonicalForm, Found> local;
    std::uint64_t local_visited = 0, local_violating = 0;
    for (;;) {
      const std::size_t chunk = next_chunk.fetch_add(1);
      if (chunk >= chunks) break;
      const unsigned seed = seeds[chunk / (count1 - start)];
      const unsigned s1 = start + static_cast<unsigned>(chunk % (count1 - start));
      Rows partial = layout.clique_rows;
      layout.add(partial, layout.pairs[fixed], seed);
      layout.add(partial, free1, s1);
      if (!greedy_ok(layout, partial)) continue;
      for (unsigned s2 = start; s2 < count2; ++s2) {
        Rows rows = partial;
        layout.add(rows, free2, s2);
        if (!greedy_ok(layout, rows)) continue;
        ++local_visited;
        const bool want_graph = static_cast<bool>(options.visit);
        const Score sc = score(layout, rows);
        const bool violates = sc.t < sc.m2 + sc.e - constant;
        if (!want_graph && !violates) continue;
        const Graph g = layout.to_graph(rows);
        if (want_graph) options.visit(g, partition);
        if (!violates) continue;
        ++local_violating;
        std::string g6 = encode_graph6(g);
        auto [it, inserted] = local.try_emplace(canonical_form(g), Found{g6, g});
        if (!inserted && g6 < it->second.graph6) it->second = Found{std::move(g6), g};
      }
    }
    std::lock_guard<std::mutex> lock(merge);
    visited += local_visited;
    violating += local_violating;
    for (auto& [form, f] : local) {
      auto [it, inserted] = found.try_emplace(form, f);
      if (!inserted && f.graph6 < it->second.graph6) it->second = std::move(f);
    }
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int i = 0; i < jobs; ++i) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }

  BaseCaseResult result;
  result.spec = spec;
  result.seed_classes = seeds.size();
  result.visited = visited;
  result.violating_graphs = violating;
  for (const auto& [form, f] : found) {
    // Parameters are re-derived through the general statistics code rather
    // than taken from the fast scorer.
    const PartitionStats stats = partition_stats(f.graph, partition);
    if (stats.t >= stats.m2 + stats.e - constant) {
      throw std::logic_error("recorded violator does not violate on re-scoring");
    }
    CounterexampleRecord rec{f.graph6, form, stats.t, stats.m2, stats.e, std::nullopt};
    for (std::size_t i = 0; i < kBaseGraphIds.size(); ++i) {
      if (atlas_forms()[i] == form) rec.match = kBaseGraphIds[i];
    }
    result.records.push_back(std::move(rec));
  }
  return result;
}

VerificationReport check_a0_cases() {
  static const std::array<std::array<int, 3>, 4> shapes = {
      {{2, 2, 2}, {2, 2, 1}, {2, 1, 1}, {1, 1, 1}}};
  VerificationReport report;
  report.check = "a0-cases";
  report.lhs = std::numeric_limits<std::int64_t>::min();
  report.rhs = 0;
  std::int64_t instances = 0, failures = 0;
  for (const auto& shape : shapes) {
    const Layout layout(shape);
    const CliquePartition partition = layout.partition();
    const unsigned c0 = 1U << layout.pairs[0].edges.size();
    const unsigned c1 = 1U << layout.pairs[1].edges.size();
    const unsigned c2 = 1U << layout.pairs[2].edges.size();
    for (unsigned s0 = 0; s0 < c0; ++s0) {
      for (unsigned s1 = 0; s1 < c1; ++s1) {
        for (unsigned s2 = 0; s2 < c2; ++s2) {
          Rows rows = layout.clique_rows;
          layout.add(rows, layout.pairs[0], s0);
          layout.add(rows, layout.pairs[1], s1);
          layout.add(rows, layout.pairs[2], s2);
          if (!greedy_ok(layout, rows)) continue;
          ++instances;
          const Graph g = layout.to_graph(rows);
          const PartitionStats stats = partition_stats(g, partition);
          const std::int64_t slack = stats.e - 3 * stats.n + 9;
          const bool ok = slack <= 0 && stats.t == 0 && stats.m2 == 0 &&
                          stats.omega == 0 &&
                          stats.t >= stats.f0 + stats.m2 - stats.m0 - stats.omega;
          if (!ok) ++failures;
          if (slack > report.lhs || (!ok && failures == 1)) {
            report.lhs = slack;
            report.graph6 = encode_graph6(g);
            report.partition = partition.as_lists();
          }
        }
      }
    }
  }
  report.holds = failures == 0;
  report.witness = {{"instances", instances}, {"failures", failures},
                    {"max_e_minus_3n_plus_9", report.lhs}};
  return report;
}

std::vector<Table1Expected> table1_reference(const BaseCaseSpec& spec) {
  if (spec == BaseCaseSpec{3, 0, 0}) {
    return {{BaseGraphId::kF1, 11, 8, 22},
            {BaseGraphId::kF2, 14, 10, 23},
            {BaseGraphId::kF3, 13, 10, 22}};
  }
  if (spec == BaseCaseSpec{2, 1, 0}) return {{BaseGraphId::kF4, 10, 8, 18}};
  return {};
}

Table1Result reproduce_table1(const BaseCaseOptions& options,
                              std::optional<BaseCaseSpec> only) {
  Table1Result result;
  for (const BaseCaseSpec& spec : kBaseCases) {
    if (only && !(*only == spec)) continue;
    result.rows.push_back(enumerate_base_case(spec, options));
  }
  if (!only) result.a0 = check_a0_cases();
  return result;
}

std::vector<std::string> table1_diff(const Table1Result& result) {
  std::vector<std::string> diff;
  for (const BaseCaseResult& row : result.rows) {
    using Key = std::tuple<std::string, std::int64_t, std::int64_t, std::int64_t>;
    std::multiset<Key> want, got;
    for (const auto& x : table1_reference(row.spec)) {
      want.insert({std::string(to_string(x.id)), x.t, x.m2, x.e});
    }
    for (const auto& rec : row.records) {
      got.insert({rec.match ? std::string(to_string(*rec.match)) : "unmatched:" + rec.graph6,
                  rec.t, rec.m2, rec.e});
    }
    auto show = [](const Key& k) {
      return std::get<0>(k) + " {" + std::to_string(std::get<1>(k)) + "," +
             std::to_string(std::get<2>(k)) + "," + std::to_string(std::get<3>(k)) + "}";
    };
    for (const Key& k : want) {
      if (!got.count(k)) diff.push_back("(" + row.spec.label() + ") missing " + show(k));
    }
    for (const Key& k : got) {
      if (!want.count(k)) diff.push_back("(" + row.spec.label() + ") extra " + show(k));
    }
  }
  if (result.a0 && !result.a0->holds) {
    diff.push_back("a = 0 cases: e - 3n + 9 <= 0 or t = M2 = omega = 0 fails");
  }
  return diff;
}

namespace {

template <typename F>
std::string joined(const std::vector<CounterexampleRecord>& records, F field) {
  std::string out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i) out += ';';
    out += field(records[i]);
  }
  return out;
}

}  // namespace

std::string table1_csv(const Table1Result& result) {
  std::ostringstream out;
  out << "a,b,c,constant,class-count,graph6-list,t,M2,e\n";
  for (const BaseCaseResult& row : result.rows) {
    const auto& r = row.records;
    // graph6 may contain ',' and '"'; the list column is always quoted.
    std::string g6 = joined(r, [](const auto& x) { return x.graph6; });
    std::string quoted;
    for (char ch : g6) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    out << row.spec.a << ',' << row.spec.b << ',' << row.spec.c << ','
        << row.spec.constant() << ',' << r.size() << ",\"" << quoted << "\","
        << joined(r, [](const auto& x) { return std::to_string(x.t); }) << ','
        << joined(r, [](const auto& x) { return std::to_string(x.m2); }) << ','
        << joined(r, [](const auto& x) { return std::to_string(x.e); }) << '\n';
  }
  return out.str();
}

nlohmann::json table1_json(const Table1Result& result) {
  nlohmann::json rows = nlohmann::json::array();
  for (const BaseCaseResult& row : result.rows) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& rec : row.records) {
      classes.push_back({{"graph6", rec.graph6},
                         {"t", rec.t},
                         {"M2", rec.m2},
                         {"e", rec.e},
                         {"match", rec.match ? nlohmann::json(std::string(to_string(*rec.match)))
                                             : nlohmann::json(nullptr)}});
    }
    rows.push_back({{"a", row.spec.a},
                    {"b", row.spec.b},
                    {"c", row.spec.c},
                    {"constant", row.spec.constant()},
                    {"class_count", row.records.size()},
                    {"seed_classes", row.seed_classes},
                    {"visited", row.visited},
                    {"violating_graphs", row.violating_graphs},
                    {"classes", classes}});
  }
  nlohmann::json out = {{"rows", rows}};
  if (result.a0) out["a0"] = *result.a0;
  return out;
}

std::string table1_text(const Table1Result& result) {
  std::ostringstream out;
  for (const BaseCaseResult& row : result.rows) {
    out << "(" << row.spec.label() << ")  C=" << row.spec.constant() << "  visited="
        << row.visited << "  classes=" << row.records.size() << ":";
    if (row.records.empty()) out << " none";
    for (const auto& rec : row.records) {
      out << "  " << (rec.match ? std::string(to_string(*rec.match)) : "?") << " {"
          << rec.t << "," << rec.m2 << "," << rec.e << "} " << rec.graph6;
    }
    out << '\n';
  }
  if (result.a0) {
    out << "a=0 cases: " << (result.a0->holds ? "hold" : "FAIL") << " over "
        << result.a0->value("instances").value_or(0) << " instances\n";
  }
  return out.str();
}

}  // namespace k4tri
