#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "blockscope/abacus.hpp"
#include "blockscope/block.hpp"
#include "blockscope/error.hpp"
#include "blockscope/hecke.hpp"
#include "blockscope/serialize.hpp"
#include "blockscope/sweep.hpp"

namespace blockscope::cli {

namespace {

[[noreturn]] void parse_fail(std::string_view what, std::string_view text, std::size_t pos,
                             const std::string& msg) {
  std::ostringstream os;
  os << "cannot parse " << what << " '" << text << "' at position " << pos + 1 << ": " << msg;
  throw ValidationError(os.str());
}

// Comma separated non-negative integers.  Empty text gives an empty list.
std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t start = pos;
    long long value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      value = value * 10 + (text[pos] - '0');
      if (value > 1000000) parse_fail(what, text, start, "number too large");
      ++pos;
    }
    if (pos == start) {
      parse_fail(what, text, pos,
                 pos < text.size() ? std::string("unexpected '") + text[pos] + "'"
                                   : std::string("expected a number"));
    }
    out.push_back(static_cast<int>(value));
    if (pos == text.size()) break;
    if (text[pos] != ',') parse_fail(what, text, pos, std::string("expected ',' but found '") + text[pos] + "'");
    ++pos;
  }
  return out;
}

// "1:fwd,2:bwd"; unlisted edges are absent.
std::vector<Edge> parse_edges(std::string_view text, int p) {
  std::vector<Edge> edges(static_cast<std::size_t>(p), Edge::none);
  if (text.empty()) return edges;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t colon = text.find(':', pos);
    if (colon == std::string_view::npos) parse_fail("edge list", text, pos, "expected 'i:fwd' or 'i:bwd'");
    const auto index = parse_int_list(text.substr(pos, colon - pos), "edge index");
    if (index.size() != 1 || index[0] >= p) parse_fail("edge list", text, pos, "edge index must lie in [0, p)");
    std::size_t end = text.find(',', colon);
    if (end == std::string_view::npos) end = text.size();
    const std::string name(text.substr(colon + 1, end - colon - 1));
    try {
      edges[index[0]] = edge_from_name(name);
    } catch (const ValidationError&) {
      parse_fail("edge list", text, colon + 1, "expected fwd, bwd or none");
    }
    pos = end + 1;
  }
  return edges;
}

std::string compact(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

std::string seq_string(const std::vector<int>& seq) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < seq.size(); ++k) os << (k ? "," : "") << seq[k];
  os << ')';
  return os.str();
}

struct Options {
  int p = 3;
  std::string partition;
  std::string outer;
  std::string inner;
  std::optional<int> charge;
  bool show_abacus = false;
  std::string format = "text";
  int l = 0;
  int m = 0;
  std::optional<std::string> inner_core;
  std::optional<std::string> outer_core;
  bool matrix = false;
  bool keep_empty = false;
  std::string vertices;
  std::string edges;
  std::string x_outer, x_inner, y_outer, y_inner;
  std::optional<int> belt_index;
  std::string reference;
  bool probe = false;
  bool all_references = false;
  std::string suite = "all";
  int n_max = -1;
  int l_max = 8;
  std::string blocks_out;
};

// ---------------------------------------------------------------------------

int cmd_core(const Options& o, std::ostream& out) {
  const Partition nu = parse_partition(o.partition);
  const Partition core = p_core(nu, o.p);
  const int weight = p_weight(nu, o.p);
  const auto abacus = AbacusDisplay::from_partition(nu, o.p, o.charge.value_or(default_charge(nu, o.p)));
  if (o.format == "json") {
    Json j{{"partition", to_json(nu)}, {"p", o.p}, {"core", to_json(core)}, {"weight", weight}};
    if (o.show_abacus) j["abacus"] = to_json(abacus);
    out << j.dump() << '\n';
    return 0;
  }
  out << core.to_string() << ", weight " << weight << '\n';
  if (o.show_abacus) out << abacus.render();
  return 0;
}

int cmd_quotient(const Options& o, std::ostream& out) {
  const Partition nu = parse_partition(o.partition);
  const int charge = o.charge.value_or(default_charge(nu, o.p));
  const auto q = p_quotient(nu, o.p, charge);
  const auto abacus = AbacusDisplay::from_partition(nu, o.p, charge);
  if (o.format == "json") {
    Json comps = Json::array();
    for (const auto& c : q) comps.push_back(to_json(c));
    Json j{{"partition", to_json(nu)}, {"p", o.p}, {"charge", charge}, {"quotient", comps}};
    if (o.show_abacus) j["abacus"] = to_json(abacus);
    out << j.dump() << '\n';
    return 0;
  }
  out << '(';
  for (std::size_t k = 0; k < q.size(); ++k) out << (k ? "," : "") << q[k].to_string();
  out << ")\n";
  if (o.show_abacus) out << abacus.render();
  return 0;
}

int cmd_content(const Options& o, std::ostream& out) {
  ResidueMultiset c(o.p);
  if (!o.outer.empty() || !o.inner.empty()) {
    c = skew_content(SkewShape(parse_partition(o.inner), parse_partition(o.outer)), o.p);
  } else {
    c = e_content(parse_partition(o.partition), o.p);
  }
  if (o.format == "json") {
    out << to_json(c).dump() << '\n';
  } else {
    out << compact(c.to_string()) << '\n';
  }
  return 0;
}

int cmd_shape(const Options& o, std::ostream& out) {
  const SkewShape s(parse_partition(o.inner), parse_partition(o.outer));
  const PShape x = p_shape(s, o.p);
  const bool graphable = x.content().repetition_free();
  if (o.format == "json") {
    Json j{{"skew", to_json(s)}, {"shape", to_json(x)}};
    if (graphable) j["arrow_graph"] = to_json(arrow_graph(x));
    out << j.dump() << '\n';
    return 0;
  }
  out << "shape " << x.to_string() << '\n';
  out << "content " << skew_content(s, o.p).to_string() << '\n';
  if (graphable) {
    const ArrowGraph g = arrow_graph(x);
    out << "arrows";
    bool any = false;
    for (int i = 0; i < o.p; ++i) {
      const int j = mod(i + 1, o.p);
      if (g.edge(i) == Edge::forward) out << ' ' << i << "->" << j;
      if (g.edge(i) == Edge::backward) out << ' ' << j << "->" << i;
      any = any || g.edge(i) != Edge::none;
    }
    out << (any ? "" : " none") << '\n';
  }
  return 0;
}

int cmd_char(const Options& o, std::ostream& out) {
  std::optional<FormalCharacter> ch;
  if (!o.outer.empty()) {
    ch = tableau_character(SkewShape(parse_partition(o.inner), parse_partition(o.outer)), o.p);
  } else {
    std::uint64_t mask = 0;
    for (int v : parse_int_list(o.vertices, "vertex list")) {
      if (v >= o.p) throw ValidationError("vertex " + std::to_string(v) + " is not below p");
      mask |= 1ULL << v;
    }
    ch = character_of(ArrowGraph(o.p, mask, parse_edges(o.edges, o.p)));
  }
  if (o.format == "json") {
    out << to_json(*ch).dump() << '\n';
    return 0;
  }
  for (const auto& [seq, mult] : ch->terms()) {
    if (mult != 1) out << mult;
    out << seq_string(seq) << '\n';
  }
  out << ch->distinct() << " distinct terms, total multiplicity " << ch->total() << '\n';
  return 0;
}

void print_block_text(const CombinatorialBlock& b, bool matrix, bool keep_empty, std::ostream& out) {
  out << "block p=" << b.p << " l=" << b.l << " m=" << b.m << ", cores " << b.inner_core.to_string()
      << " and " << b.outer_core.to_string() << '\n';
  out << "class " << to_string(b.kind) << ", content " << b.content.to_string() << '\n';
  out << b.members.size() << " members";
  if (!b.in_scope()) {
    out << '\n';
    for (const auto& s : b.members) out << "  " << s.to_string() << '\n';
    return;
  }
  out << ", " << b.shapes.size() << " shapes\n";
  for (std::size_t k = 0; k < b.shapes.size(); ++k) {
    out << "  #" << k + 1 << ' ' << b.shapes[k].to_string() << ':';
    for (std::size_t i = 0; i < b.members.size(); ++i) {
      if (b.member_shape[i] == static_cast<int>(k)) out << ' ' << b.members[i].to_string();
    }
    out << '\n';
  }
  if (!matrix) return;
  const auto d = decomposition_matrix(b, keep_empty);
  out << "D_B " << d.entries.rows() << "x" << d.entries.cols() << '\n';
  for (std::size_t c = 0; c < d.columns.size(); ++c) {
    out << "  column " << c + 1 << ": " << d.column_label(static_cast<int>(c)) << '\n';
  }
  for (Eigen::Index r = 0; r < d.entries.rows(); ++r) {
    out << "  #" << r + 1 << " |";
    for (Eigen::Index c = 0; c < d.entries.cols(); ++c) out << ' ' << d.entries(r, c);
    out << '\n';
  }
  out << "connected " << (is_connected(d) ? "true" : "false") << '\n';
}

int cmd_block(const Options& o, std::ostream& out) {
  std::vector<CombinatorialBlock> blocks;
  if (o.inner_core && o.outer_core) {
    blocks.push_back(enumerate_block(o.p, o.l, o.m, parse_partition(*o.inner_core),
                                     parse_partition(*o.outer_core)));
  } else if (o.inner_core || o.outer_core) {
    throw ValidationError("give both --inner and --outer cores, or neither");
  } else {
    blocks = enumerate_blocks(o.p, o.l, o.m);
  }
  if (o.format == "csv") {
    if (blocks.size() != 1) throw ValidationError("csv output needs a single block");
    out << to_csv(decomposition_matrix(blocks.front(), o.keep_empty));
    return 0;
  }
  if (o.format == "json") {
    for (const auto& b : blocks) {
      Json j = to_json(b);
      if (o.matrix) {
        const auto d = decomposition_matrix(b, o.keep_empty);
        j["matrix"] = to_json(d);
        j["connected"] = is_connected(d);
      }
      out << j.dump() << '\n';
    }
    return 0;
  }
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k) out << '\n';
    print_block_text(blocks[k], o.matrix && blocks[k].in_scope(), o.keep_empty, out);
  }
  return 0;
}

int cmd_linkage(const Options& o, std::ostream& out) {
  const SkewShape x(parse_partition(o.x_inner), parse_partition(o.x_outer));
  const SkewShape y(parse_partition(o.y_inner), parse_partition(o.y_outer));
  const PShape sx = p_shape(x, o.p);
  const PShape sy = p_shape(y, o.p);
  const auto dset = distance_set(sx, sy);
  Json j{{"x", to_json(sx)}, {"y", to_json(sy)}, {"distance_set", dset}};
  j["linked_directly"] = linkage_test(sx, sy);

  const bool small = x.outer().size() <= kDefaultBlockCap;
  std::optional<CombinatorialBlock> block;
  if (small) {
    block = enumerate_block(o.p, x.inner().size(), x.outer().size(), p_core(x.inner(), o.p),
                            p_core(x.outer(), o.p));
    if (block->shape_index(sy) < 0) throw ValidationError("the two members lie in different blocks");
  }
  if (!dset.empty()) {
    if (block) {
      const PShape z = find_closer_shape(sx, sy, *block);
      j["closer"] = Json{{"shape", to_json(z)}, {"d_xz", distance(sx, z)}, {"d_yz", distance(sy, z)}};
    } else {
      const SkewShape z = find_closer_member(x, y, o.p);
      const PShape sz = p_shape(z, o.p);
      j["closer"] = Json{{"member", to_json(z)}, {"shape", to_json(sz)},
                         {"d_xz", distance(sx, sz)}, {"d_yz", distance(sy, sz)}};
    }
  }
  if (block) {
    Json path = Json::array();
    for (const auto& s : linkage_path(sx, sy, *block)) path.push_back(to_json(s));
    j["path"] = path;
  }
  if (o.format == "json") {
    out << j.dump() << '\n';
    return 0;
  }
  out << "X " << sx.to_string() << "\nY " << sy.to_string() << '\n';
  out << "D(X,Y) = {";
  for (std::size_t k = 0; k < dset.size(); ++k) out << (k ? "," : "") << dset[k];
  out << "}, d = " << dset.size() << '\n';
  out << "linked directly: " << (j["linked_directly"].get<bool>() ? "true" : "false") << '\n';
  if (j.contains("closer")) {
    const auto& c = j["closer"];
    out << "closer shape " << pshape_from_json(c["shape"]).to_string();
    if (c.contains("member")) out << " from " << skew_from_json(c["member"]).to_string();
    out << ", d(X,Z) = " << c["d_xz"].get<int>() << ", d(Y,Z) = " << c["d_yz"].get<int>() << '\n';
  }
  if (j.contains("path")) {
    out << "path of " << j["path"].size() << " shapes:";
    for (std::size_t k = 0; k < j["path"].size(); ++k) out << (k ? " -> " : " ") << pshape_from_json(j["path"][k]).to_string();
    out << '\n';
  } else {
    out << "block too large to enumerate; no path computed\n";
  }
  return 0;
}

int cmd_reference_report(const Options& o, std::ostream& out) {
  const Json report = beltmod_reference_report(o.p);
  if (o.format == "json") {
    out << report.dump() << '\n';
    return 0;
  }
  int uniform = 0;
  for (const auto& row : report) {
    out << row["belt"].get<std::string>() << "  dim " << row["dim"].get<int>() << '\n';
    for (const auto& r : row["references"]) {
      out << "  " << seq_string(r["reference"].get<std::vector<int>>()) << "  dropped "
          << r["dropped_terms"].get<long long>() << ", commutant " << r["commutant_dimension"].get<int>()
          << ", maps from/to first " << r["hom_from_first"].get<int>() << "/" << r["hom_to_first"].get<int>()
          << (r["same_matrices_as_first"].get<bool>() ? ", same matrices" : "") << '\n';
    }
    uniform += row["uniform"].get<bool>() ? 1 : 0;
  }
  out << uniform << " of " << report.size() << " belts give isomorphic modules for every reference\n";
  return 0;
}

int cmd_beltmod(const Options& o, std::ostream& out) {
  if (o.all_references) return cmd_reference_report(o, out);
  ArrowGraph g;
  if (o.belt_index) {
    const auto belts = enumerate_belts(o.p);
    if (*o.belt_index < 0 || *o.belt_index >= static_cast<int>(belts.size())) {
      throw ValidationError("belt index must lie in [0, " + std::to_string(belts.size()) + ")");
    }
    g = belts[*o.belt_index];
  } else {
    g = ArrowGraph(o.p, full_mask(o.p), parse_edges(o.edges, o.p));
  }
  const FormalCharacter ch = character_of(g, std::max(o.p, kDefaultCharacterCap));
  const std::vector<int> a =
      o.reference.empty() ? ch.terms().begin()->first : parse_int_list(o.reference, "reference");
  const BeltModule m = belt_module(g, a);
  const RelationReport report = verify_relations(m);
  const bool char_ok = module_character(m) == ch;
  std::optional<SimplicityReport> probe;
  if (o.probe) probe = simplicity_probe(m);
  if (o.format == "json") {
    Json j = to_json(m);
    j["relations"] = to_json(report);
    j["character_matches"] = char_ok;
    if (probe) {
      j["probe"] = Json{{"commutant_dimension", probe->commutant_dimension}, {"verdict", probe->verdict}};
    }
    out << j.dump() << '\n';
  } else {
    out << graph_label(g) << ", reference " << seq_string(a) << ", dimension " << m.dim() << '\n';
    out << "relations: " << report.checks.size() << " checked, " << report.failures() << " failed";
    out << ", closure " << (report.closure_ok ? "ok" : "violated") << '\n';
    for (const auto& c : report.checks) {
      if (!c.pass) out << "  FAIL " << c.relation << " at basis vector " << c.witness << '\n';
    }
    out << "character matches: " << (char_ok ? "true" : "false") << '\n';
    if (probe) out << "commutant dimension " << probe->commutant_dimension << " (" << probe->verdict << ")\n";
  }
  return report.all_pass() && char_ok ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<std::string> suites;
  if (o.suite == "all") {
    suites = suite_names();
  } else {
    suites.push_back(o.suite);
  }
  const bool partition_suite_only = o.suite == "littlewood" || o.suite == "prop6em" || o.suite == "beltcore";
  std::ofstream blocks_file;
  if (!o.blocks_out.empty()) {
    blocks_file.open(o.blocks_out);
    if (!blocks_file) throw ValidationError("cannot write " + o.blocks_out);
    const int n_max = o.n_max >= 0 && !partition_suite_only ? o.n_max : o.p;
    for (const auto& b : sweep_blocks(o.p, n_max, o.l_max)) blocks_file << block_summary(b).dump() << '\n';
  }
  bool all_ok = true;
  for (const auto& name : suites) {
    const bool partitions = name == "littlewood" || name == "prop6em" || name == "beltcore";
    const int n_max = o.n_max >= 0 ? o.n_max : (partitions ? 8 : o.p);
    const SuiteResult r = run_suite(name, o.p, n_max, o.l_max);
    all_ok = all_ok && r.ok();
    if (o.format == "json") {
      out << r.to_json().dump() << '\n';
    } else {
      out << (r.ok() ? "PASS " : "FAIL ") << name << ": " << r.checks << " checks, " << r.failures
          << " failures\n";
      for (const auto& w : r.witnesses) out << "  witness " << w.dump() << '\n';
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  const auto parts = parse_int_list(text, "partition");
  for (std::size_t k = 1; k < parts.size(); ++k) {
    if (parts[k] > parts[k - 1] && parts[k] != 0) {
      std::size_t pos = 0;
      for (std::size_t c = 0; c < k; ++c) pos = text.find(',', pos) + 1;
      parse_fail("partition", text, pos, "parts must be weakly decreasing");
    }
  }
  return make_partition(parts);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Block combinatorics for centraliser algebras of symmetric groups"};
  app.require_subcommand(1);
  Options o;

  const auto add_p = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "Modulus (number of runners)")->check(CLI::Range(2, 63));
  };
  const auto add_format = [&](CLI::App* sub, bool csv) {
    std::vector<std::string> allowed{"text", "json"};
    if (csv) allowed.push_back("csv");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
  };

  auto* core = app.add_subcommand("core", "p-core and p-weight of a partition");
  add_p(core);
  core->add_option("--partition", o.partition, "Comma separated parts; \"\" is the empty partition")->required();
  core->add_option("--charge", o.charge, "Abacus charge (a multiple of p)");
  core->add_flag("--show-abacus", o.show_abacus, "Print the bead diagram");
  add_format(core, false);

  auto* quotient = app.add_subcommand("quotient", "p-quotient of a partition");
  add_p(quotient);
  quotient->add_option("--partition", o.partition, "Comma separated parts")->required();
  quotient->add_option("--charge", o.charge, "Abacus charge (a multiple of p)");
  quotient->add_flag("--show-abacus", o.show_abacus, "Print the bead diagram");
  add_format(quotient, false);

  auto* content = app.add_subcommand("content", "Residue content of a partition or skew shape");
  add_p(content);
  content->add_option("--partition", o.partition, "Comma separated parts");
  content->add_option("--outer", o.outer, "Outer partition of a skew shape");
  content->add_option("--inner", o.inner, "Inner partition of a skew shape");
  add_format(content, false);

  auto* shape = app.add_subcommand("shape", "Ribbon components and arrow graph of a skew shape");
  add_p(shape);
  shape->add_option("--outer", o.outer, "Outer partition")->required();
  shape->add_option("--inner", o.inner, "Inner partition");
  add_format(shape, false);

  auto* chr = app.add_subcommand("char", "Formal character of a skew shape or an arrow graph");
  add_p(chr);
  chr->add_option("--outer", o.outer, "Outer partition (tableau character)");
  chr->add_option("--inner", o.inner, "Inner partition");
  chr->add_option("--vertices", o.vertices, "Vertex residues of an arrow graph, e.g. 0,1,2,3,6");
  chr->add_option("--edges", o.edges, "Arrows as i:fwd or i:bwd for the pair (i, i+1)");
  add_format(chr, false);

  auto* block = app.add_subcommand("block", "Members, shapes and decomposition matrix of a block");
  add_p(block);
  block->add_option("--l", o.l, "Size of the inner partitions")->required();
  block->add_option("--m", o.m, "Size of the outer partitions")->required();
  block->add_option("--inner", o.inner_core, "p-core of the inner partitions");
  block->add_option("--outer", o.outer_core, "p-core of the outer partitions");
  block->add_flag("--matrix", o.matrix, "Print the decomposition matrix");
  block->add_flag("--keep-empty-columns", o.keep_empty, "Keep belts that refine no shape");
  add_format(block, true);

  auto* linkage = app.add_subcommand("linkage", "Distance, intermediate shape and linkage path");
  add_p(linkage);
  linkage->add_option("--x-outer", o.x_outer, "Outer partition of X")->required();
  linkage->add_option("--x-inner", o.x_inner, "Inner partition of X")->required();
  linkage->add_option("--y-outer", o.y_outer, "Outer partition of Y")->required();
  linkage->add_option("--y-inner", o.y_inner, "Inner partition of Y")->required();
  add_format(linkage, false);

  auto* beltmod = app.add_subcommand("beltmod", "Hecke module of a belt and its relation check");
  add_p(beltmod);
  beltmod->add_option("--edges", o.edges, "All p arrows as i:fwd or i:bwd");
  beltmod->add_option("--index", o.belt_index, "Position in the list of belts instead of --edges");
  beltmod->add_option("--reference", o.reference, "Reference term; defaults to the least term");
  beltmod->add_flag("--probe", o.probe, "Compute the commutant dimension");
  beltmod->add_flag("--all-references", o.all_references,
                    "Compare the modules of every belt across all reference terms");
  add_format(beltmod, false);

  auto* verify = app.add_subcommand("verify", "Exhaustive verification suites");
  add_p(verify);
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", o.suite, "Suite name or 'all'")->check(CLI::IsMember(suites));
  verify->add_option("--n-max", o.n_max,
                     "Partition size bound for littlewood/prop6em/beltcore (default 8); skew size "
                     "bound for block suites (default p)");
  verify->add_option("--l-max", o.l_max, "Largest inner size for block suites");
  verify->add_option("--blocks-out", o.blocks_out, "Write one JSON line per swept block");
  add_format(verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (core->parsed()) return cmd_core(o, out);
    if (quotient->parsed()) return cmd_quotient(o, out);
    if (content->parsed()) return cmd_content(o, out);
    if (shape->parsed()) return cmd_shape(o, out);
    if (chr->parsed()) return cmd_char(o, out);
    if (block->parsed()) return cmd_block(o, out);
    if (linkage->parsed()) return cmd_linkage(o, out);
    if (beltmod->parsed()) return cmd_beltmod(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const TheoremCounterexample& e) {
    err << "counterexample: " << e.what() << '\n' << e.report() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace blockscope::cli
