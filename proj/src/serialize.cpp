#include "blockscope/serialize.hpp"

#include <sstream>

#include "blockscope/error.hpp"

namespace blockscope {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed ") + what + ": " + e.what());
  }
}

Json matrix_json(const ModMatrix& a) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < a.cols(); ++c) row.push_back(a(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string edge_name(Edge e) {
  switch (e) {
    case Edge::forward:
      return "fwd";
    case Edge::backward:
      return "bwd";
    case Edge::none:
      break;
  }
  return "none";
}

Edge edge_from_name(const std::string& name) {
  if (name == "fwd") return Edge::forward;
  if (name == "bwd") return Edge::backward;
  if (name == "none") return Edge::none;
  throw ValidationError("unknown edge state '" + name + "' (expected fwd, bwd or none)");
}

Json to_json(const Partition& nu) { return Json(nu.parts()); }

Json to_json(const ResidueMultiset& c) {
  Json counts = Json::object();
  for (int r = 0; r < c.modulus(); ++r) {
    if (c.count(r)) counts[std::to_string(r)] = c.count(r);
  }
  return Json{{"p", c.modulus()}, {"counts", counts}};
}

Json to_json(const AbacusDisplay& a) {
  return Json{{"e", a.runners()}, {"charge", a.charge()}, {"beads", a.beads()}};
}

Json to_json(const SkewShape& s) {
  return Json{{"inner", to_json(s.inner())}, {"outer", to_json(s.outer())}};
}

Json to_json(const PShape& x) {
  Json comps = Json::array();
  for (const auto& c : x.components()) comps.push_back(Json{{"start", c.start}, {"steps", c.steps}});
  return Json{{"p", x.modulus()}, {"components", comps}};
}

Json to_json(const ArrowGraph& g) {
  Json edges = Json::object();
  for (int i = 0; i < g.modulus(); ++i) {
    if (g.slot(i)) edges[std::to_string(i)] = edge_name(g.edge(i));
  }
  return Json{{"p", g.modulus()}, {"vertices", g.vertices()}, {"edges", edges}};
}

Json to_json(const FormalCharacter& ch) {
  Json terms = Json::array();
  for (const auto& [seq, mult] : ch.terms()) terms.push_back(Json{{"seq", seq}, {"mult", mult}});
  return Json{{"p", ch.modulus()}, {"terms", terms}};
}

Json to_json(const DecompositionMatrix& d) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < d.rows.size(); ++r) rows.push_back(to_json(d.rows[r]));
  Json cols = Json::array();
  for (std::size_t c = 0; c < d.columns.size(); ++c) {
    cols.push_back(Json{{"label", d.column_label(static_cast<int>(c))},
                        {"graph", to_json(d.columns[c])}});
  }
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < d.entries.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < d.entries.cols(); ++c) row.push_back(d.entries(r, c));
    entries.push_back(std::move(row));
  }
  return Json{{"p", d.p},
              {"class", to_string(d.kind)},
              {"rows", rows},
              {"columns", cols},
              {"entries", entries}};
}

std::string to_csv(const DecompositionMatrix& d) {
  std::ostringstream out;
  out << "\"\"";
  for (std::size_t c = 0; c < d.columns.size(); ++c) {
    out << ',' << csv_quote(d.column_label(static_cast<int>(c)));
  }
  out << '\n';
  for (std::size_t r = 0; r < d.rows.size(); ++r) {
    out << csv_quote(d.row_label(static_cast<int>(r)));
    for (Eigen::Index c = 0; c < d.entries.cols(); ++c) {
      out << ',' << d.entries(static_cast<Eigen::Index>(r), c);
    }
    out << '\n';
  }
  return out.str();
}

Json to_json(const BeltModule& m) {
  Json z = Json::array();
  for (const auto& a : m.z) z.push_back(matrix_json(a));
  Json s = Json::array();
  for (const auto& a : m.s) s.push_back(matrix_json(a));
  return Json{{"p", m.p},
              {"belt", to_json(m.belt)},
              {"reference", m.reference},
              {"dim", m.dim()},
              {"basis", m.basis},
              {"matrices", Json{{"z", z}, {"s", s}}}};
}

Json to_json(const RelationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json entry{{"relation", c.relation}, {"pass", c.pass}};
    if (!c.pass) entry["witness"] = c.witness;
    checks.push_back(std::move(entry));
  }
  return Json{{"closure", r.closure_ok}, {"failures", r.failures()}, {"checks", checks}};
}

Json to_json(const CombinatorialBlock& b) {
  Json members = Json::array();
  for (std::size_t k = 0; k < b.members.size(); ++k) {
    Json entry = to_json(b.members[k]);
    if (b.member_shape[k] >= 0) entry["shape"] = b.member_shape[k];
    members.push_back(std::move(entry));
  }
  Json shapes = Json::array();
  for (const auto& x : b.shapes) shapes.push_back(to_json(x));
  return Json{{"p", b.p},
              {"l", b.l},
              {"m", b.m},
              {"inner_core", to_json(b.inner_core)},
              {"outer_core", to_json(b.outer_core)},
              {"class", to_string(b.kind)},
              {"content", to_json(b.content)},
              {"members", members},
              {"shapes", shapes}};
}

// ---------------------------------------------------------------------------

Partition partition_from_json(const Json& j) {
  return guarded("partition", [&] {
    if (!j.is_array()) throw ValidationError("partition must be a JSON array");
    return make_partition(j.get<std::vector<int>>());
  });
}

SkewShape skew_from_json(const Json& j) {
  return guarded("skew shape", [&] {
    return SkewShape(partition_from_json(j.at("inner")), partition_from_json(j.at("outer")));
  });
}

PShape pshape_from_json(const Json& j) {
  return guarded("shape", [&] {
    std::vector<RibbonComponent> comps;
    for (const auto& c : j.at("components")) {
      comps.push_back({c.at("start").get<int>(), c.at("steps").get<std::string>()});
    }
    return PShape(j.at("p").get<int>(), std::move(comps));
  });
}

ArrowGraph arrow_graph_from_json(const Json& j) {
  return guarded("arrow graph", [&] {
    const int p = j.at("p").get<int>();
    if (p < 2 || p > ArrowGraph::kMaxModulus) throw ValidationError("modulus out of range");
    std::uint64_t vertices = 0;
    for (int v : j.at("vertices").get<std::vector<int>>()) {
      if (v < 0 || v >= p) throw ValidationError("vertex outside [0, p)");
      vertices |= 1ULL << v;
    }
    std::vector<Edge> edges(static_cast<std::size_t>(p), Edge::none);
    for (const auto& [key, value] : j.at("edges").items()) {
      if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos ||
          key.size() > 2) {
        throw ValidationError("edge key '" + key + "' is not an index");
      }
      const int i = std::stoi(key);
      if (i >= p) throw ValidationError("edge index outside [0, p)");
      edges[i] = edge_from_name(value.get<std::string>());
    }
    return ArrowGraph(p, vertices, std::move(edges));
  });
}

FormalCharacter character_from_json(const Json& j) {
  return guarded("character", [&] {
    FormalCharacter ch(j.at("p").get<int>());
    for (const auto& t : j.at("terms")) {
      ch.add(t.at("seq").get<std::vector<int>>(), t.at("mult").get<int>());
    }
    return ch;
  });
}

}  // namespace blockscope
