#include "k4tri/report.hpp"

#include "k4tri/graph6.hpp"
#include "k4tri/version.hpp"

namespace k4tri {

using nlohmann::json;

void to_json(json& j, const VerificationReport& r) {
  json witness = json::object();
  for (const auto& [key, value] : r.witness) witness[key] = value;
  j = json{{"check", r.check},   {"graph6", r.graph6}, {"partition", r.partition},
           {"lhs", r.lhs},       {"rhs", r.rhs},       {"holds", r.holds},
           {"witness", witness}};
}

void from_json(const json& j, VerificationReport& r) {
  j.at("check").get_to(r.check);
  j.at("graph6").get_to(r.graph6);
  j.at("partition").get_to(r.partition);
  j.at("lhs").get_to(r.lhs);
  j.at("rhs").get_to(r.rhs);
  j.at("holds").get_to(r.holds);
  r.witness.clear();
  for (const auto& [key, value] : j.at("witness").items()) {
    r.witness.emplace_back(key, value.get<std::int64_t>());
  }
}

void to_json(json& j, const PartitionStats& s) {
  json pairs = json::array();
  for (const auto& p : s.pairs) {
    pairs.push_back({{"i", p.i}, {"j", p.j}, {"e", p.edges}, {"t", p.triangles}});
  }
  json triples = json::array();
  for (const auto& t : s.triples) {
    triples.push_back(
        {{"i", t.i}, {"j", t.j}, {"k", t.k}, {"e", t.edges}, {"t", t.triangles}});
  }
  j = json{{"n", s.n},   {"e", s.e},   {"t", s.t},         {"r", s.r},
           {"a", s.a},   {"b", s.b},   {"c", s.c},         {"m0", s.m0},
           {"m1", s.m1}, {"m2", s.m2}, {"m3", s.m3},       {"f0", s.f0},
           {"omega", s.omega}, {"g", s.g}, {"pairs", pairs}, {"triples", triples}};
}

json atlas_sidecar(const AtlasEntry& entry) {
  const ClosedFormStats cf = closed_form_stats(entry.spec);
  json labels = json::object();
  for (std::size_t v = 0; v < entry.labels.size(); ++v) labels[entry.labels[v]] = v;
  return json{{"id", std::string(to_string(entry.spec.base))},
              {"k", entry.spec.k},
              {"graph6", encode_graph6(entry.graph)},
              {"partition", entry.partition.as_lists()},
              {"labels", labels},
              {"expected", {{"v", cf.v}, {"e", cf.e}, {"r", cf.r}, {"t", cf.t},
                            {"g", cf.g}, {"g_orientation", "r(e-r(n-r)) - t"}}}};
}

json packing_certificate(const Graph& g, const TrianglePacking& packing) {
  json triples = json::array();
  for (const Triangle& t : packing.triples) triples.push_back({t.a, t.b, t.c});
  return json{{"graph6", encode_graph6(g)},
              {"t_e", packing.size()},
              {"triangles", triples}};
}

json report_header(const std::string& subcommand, const json& extra) {
  json h = {{"tool", "k4tri"}, {"version", kVersion}, {"subcommand", subcommand}};
  for (const auto& [key, value] : extra.items()) h[key] = value;
  return json{{"header", h}};
}

}  // namespace k4tri
