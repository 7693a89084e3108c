#include "glat/render.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

#include "glat/errors.hpp"
#include "glat/subgroups.hpp"
#include "glat/version.hpp"

namespace glat {

using ojson = nlohmann::ordered_json;

OutputFormat parse_output_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  if (s == "dot") return OutputFormat::Dot;
  throw Error(ErrorKind::ParseError, "unknown output format \"" + s + "\"");
}

LatticeKind parse_lattice_kind(const std::string& s) {
  if (s == "subgroups") return LatticeKind::Subgroups;
  if (s == "centralizers") return LatticeKind::Centralizers;
  if (s == "normal-centralizers") return LatticeKind::NormalCentralizers;
  throw Error(ErrorKind::ParseError, "unknown lattice kind \"" + s + "\"");
}

const char* to_string(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::Subgroups: return "subgroups";
    case LatticeKind::Centralizers: return "centralizers";
    case LatticeKind::NormalCentralizers: return "normal-centralizers";
  }
  return "?";
}

namespace {

ojson group_json(const GroupTable& g, const std::string& spec) {
  ojson j;
  j["spec"] = spec;
  j["order"] = g.order();
  j["abelian"] = g.is_abelian();
  j["center_order"] = center(g).size();
  return j;
}

ojson witness_json(const Witness& w) {
  ojson j;
  j["kind"] = w.kind;
  j["text"] = w.text;
  if (!w.group_spec.empty()) {
    j["group"] = w.group_spec;
    j["order"] = w.group_order;
  }
  if (!w.element_names.empty()) j["elements"] = w.element_names;
  return j;
}

ojson check_json(const CheckReport& r, bool with_timings) {
  ojson j;
  j["claim"] = r.claim;
  j["passed"] = r.passed;
  ojson ws = ojson::array();
  for (const auto& w : r.witnesses) ws.push_back(witness_json(w));
  j["witnesses"] = std::move(ws);
  j["notes"] = r.notes;
  j["elapsed_ms"] = with_timings ? r.elapsed.count() : 0;
  return j;
}

ojson lattice_json_body(const GroupTable& g, LatticeKind kind, const BoundedLattice& lat) {
  ojson j;
  j["kind"] = to_string(kind);
  j["size"] = lat.size();
  ojson nodes = ojson::array();
  for (int i = 0; i < lat.size(); ++i) {
    const SubgroupSet& s = lat.node(i);
    ojson n;
    n["id"] = i;
    n["size"] = s.size();
    n["members"] = s.elements();
    ojson names = ojson::array();
    for (int e : s.elements()) names.push_back(g.element_name(e));
    n["elements"] = std::move(names);
    nodes.push_back(std::move(n));
  }
  j["nodes"] = std::move(nodes);
  ojson edges = ojson::array();
  for (const auto& [lo, hi] : lat.hasse_edges()) edges.push_back(ojson::array({lo, hi}));
  j["edges"] = std::move(edges);
  j["atoms"] = lat.atoms();
  j["breaking_points"] = lat.breaking_points();
  ojson decomps = ojson::array();
  for (const auto& [m, n] : lat.interval_decompositions())
    decomps.push_back(ojson::array({m, n}));
  j["decompositions"] = std::move(decomps);
  const ChainInfo chain = lat.chain_classification();
  j["chain"] = ojson{{"is_chain", chain.is_chain}, {"length", chain.length}};
  return j;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string render_lattice_text(const GroupTable& g, const std::string& spec,
                                LatticeKind kind, const BoundedLattice& lat) {
  std::ostringstream out;
  out << "group: " << spec << " (order " << g.order() << ", "
      << (g.is_abelian() ? "abelian" : "nonabelian") << ", |Z|=" << center(g).size()
      << ")\n";
  out << "lattice: " << to_string(kind) << ", " << lat.size() << " nodes\n";
  for (int i = 0; i < lat.size(); ++i)
    out << "  [" << i << "] size " << lat.node(i).size() << ": "
        << subgroup_label(g, lat.node(i)) << "\n";
  out << "hasse edges (" << lat.hasse_edges().size() << "):";
  for (const auto& [lo, hi] : lat.hasse_edges()) out << " " << lo << "<" << hi;
  out << "\n";
  out << "atoms (" << lat.atoms().size() << "):";
  for (int a : lat.atoms()) out << " " << a;
  out << "\n";
  const auto bps = lat.breaking_points();
  out << "breaking points (" << bps.size() << "):";
  for (int h : bps) out << " [" << h << "] " << subgroup_label(g, lat.node(h));
  out << "\n";
  const auto decomps = lat.interval_decompositions();
  out << "interval decompositions (" << decomps.size() << "):";
  for (const auto& [m, n] : decomps) out << " (" << m << "," << n << ")";
  out << "\n";
  const ChainInfo chain = lat.chain_classification();
  if (chain.is_chain)
    out << "chain: yes, length " << chain.length << "\n";
  else
    out << "chain: no\n";
  return out.str();
}

std::string render_lattice_json(const GroupTable& g, const std::string& spec,
                                LatticeKind kind, const BoundedLattice& lat) {
  ojson j;
  j["tool_version"] = kToolVersion;
  j["group"] = group_json(g, spec);
  j["lattice"] = lattice_json_body(g, kind, lat);
  j["checks"] = ojson::array();
  return dump(j);
}

std::string render_lattice_dot(const GroupTable& g, const std::string& spec,
                               LatticeKind kind, const BoundedLattice& lat) {
  std::ostringstream out;
  out << "digraph lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  label=\"" << dot_escape(spec) << " " << to_string(kind) << "\";\n";
  out << "  node [shape=box];\n";
  for (int i = 0; i < lat.size(); ++i) {
    const SubgroupSet& s = lat.node(i);
    std::string label = std::to_string(s.size()) + ":" + subgroup_label(g, s, 8);
    out << "  n" << i << " [label=\"" << dot_escape(label) << "\"];\n";
  }
  for (const auto& [lo, hi] : lat.hasse_edges())
    out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

void render_check_text_into(std::ostringstream& out, const CheckReport& r,
                            bool with_timings) {
  out << "[" << (r.passed ? "PASS" : "FAIL") << "] " << r.claim << " on " << r.group
      << " (order " << r.group_order << ")";
  if (with_timings) out << " [" << r.elapsed.count() << " ms]";
  out << "\n";
  for (const auto& w : r.witnesses) out << "  witness " << w.kind << ": " << w.text << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
}

}  // namespace

std::string render_check_text(const GroupTable& g, const std::string& spec,
                              const CheckReport& report, bool with_timings) {
  (void)g;
  (void)spec;
  std::ostringstream out;
  render_check_text_into(out, report, with_timings);
  return out.str();
}

std::string render_check_json(const GroupTable& g, const std::string& spec,
                              const CheckReport& report, bool with_timings) {
  ojson j;
  j["tool_version"] = kToolVersion;
  j["group"] = group_json(g, spec);
  j["checks"] = ojson::array({check_json(report, with_timings)});
  return dump(j);
}

std::string render_capability_text(const CheckReport& report, const CatalogGroups& catalog,
                                   bool with_timings) {
  std::ostringstream out;
  out << "capability search: target " << report.group << " (order " << report.group_order
      << "), catalog of " << catalog.groups.size() << " groups up to order "
      << catalog.max_order << "\n";
  out << "hits (" << report.witnesses.size() << "):\n";
  for (const auto& w : report.witnesses) out << "  " << w.text << "\n";
  for (const auto& n : report.notes) out << "note: " << n << "\n";
  out << "result: " << (report.passed ? "PASS" : "FAIL") << "\n";
  if (with_timings) out << "elapsed: " << report.elapsed.count() << " ms\n";
  return out.str();
}

std::string render_capability_json(const CheckReport& report, const CatalogGroups& catalog,
                                   bool with_timings) {
  ojson j;
  j["tool_version"] = kToolVersion;
  ojson s;
  s["kind"] = "capability";
  s["target"] = report.group;
  s["target_order"] = report.group_order;
  s["max_order"] = catalog.max_order;
  s["products"] = catalog.include_products;
  s["catalog_size"] = catalog.groups.size();
  s["passed"] = report.passed;
  ojson hits = ojson::array();
  for (const auto& w : report.witnesses) hits.push_back(witness_json(w));
  s["hits"] = std::move(hits);
  s["notes"] = report.notes;
  s["catalog_errors"] = catalog.errors;
  s["elapsed_ms"] = with_timings ? report.elapsed.count() : 0;
  j["search"] = std::move(s);
  return dump(j);
}

std::string render_open_problem_text(const OpenProblemResult& result,
                                     const CatalogGroups& catalog) {
  std::ostringstream out;
  out << "open problem search: breaking points of the normal-centralizer lattice\n";
  out << "catalog: " << catalog.groups.size() << " groups up to order " << catalog.max_order
      << "\n";
  out << "groups with breaking points (" << result.reports.size() << "):\n";
  for (const auto& r : result.reports) {
    out << "  " << r.group << " (order " << r.group_order << "):";
    for (const auto& w : r.witnesses) out << " " << w.text;
    out << "\n";
  }
  for (const auto& s : result.skipped) out << "skipped: " << s << "\n";
  return out.str();
}

std::string render_open_problem_json(const OpenProblemResult& result,
                                     const CatalogGroups& catalog) {
  ojson j;
  j["tool_version"] = kToolVersion;
  ojson s;
  s["kind"] = "open-problem";
  s["max_order"] = catalog.max_order;
  s["products"] = catalog.include_products;
  s["catalog_size"] = catalog.groups.size();
  ojson results = ojson::array();
  for (const auto& r : result.reports) {
    ojson e;
    e["group"] = r.group;
    e["order"] = r.group_order;
    ojson bps = ojson::array();
    for (const auto& w : r.witnesses) bps.push_back(witness_json(w));
    e["breaking_points"] = std::move(bps);
    e["notes"] = r.notes;
    results.push_back(std::move(e));
  }
  s["results"] = std::move(results);
  s["skipped"] = result.skipped;
  s["catalog_errors"] = catalog.errors;
  j["search"] = std::move(s);
  return dump(j);
}

std::string render_suite_text(const SuiteReport& report, bool with_timings) {
  std::ostringstream out;
  out << "suite over " << report.groups.size() << " groups (max order " << report.max_order
      << ", products " << (report.include_products ? "on" : "off") << ", jobs "
      << report.jobs << ")\n";

  std::map<std::string, std::pair<int, int>> tally;  // claim -> (pass, fail)
  for (const auto& e : report.groups)
    for (const auto& c : e.checks) {
      auto& t = tally[c.claim];
      (c.passed ? t.first : t.second)++;
    }
  for (const auto& [claim, t] : tally)
    out << "  " << claim << ": " << t.first << " pass, " << t.second << " fail\n";

  std::size_t skipped = 0;
  for (const auto& e : report.groups) skipped += e.skipped.size();
  out << "  skipped checks: " << skipped << "\n";

  const auto open_problem = report.open_problem_reports();
  out << "normal-centralizer breaking points (" << open_problem.size() << " groups):\n";
  for (const auto& r : open_problem) {
    out << "  " << r.group << " (order " << r.group_order << "):";
    for (const auto& w : r.witnesses) out << " " << w.text;
    out << "\n";
  }

  for (const auto& e : report.groups)
    for (const auto& c : e.checks)
      if (is_published_claim(c.claim) && !c.passed) {
        out << "COUNTEREXAMPLE CANDIDATE (" << c.claim << " on " << c.group << "):\n";
        std::ostringstream detail;
        render_check_text_into(detail, c, with_timings);
        out << detail.str();
      }
  for (const auto& e : report.realize_errors) out << "catalog error: " << e << "\n";
  for (const auto& e : report.internal_errors) out << "internal error: " << e << "\n";
  if (with_timings) out << "elapsed: " << report.elapsed.count() << " ms\n";
  out << "result: " << (report.all_passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render_suite_json(const SuiteReport& report, bool with_timings) {
  ojson j;
  j["tool_version"] = kToolVersion;
  ojson s;
  s["max_order"] = report.max_order;
  s["products"] = report.include_products;
  s["catalog_size"] = report.groups.size();
  s["passed"] = report.all_passed();

  std::map<std::string, std::pair<int, int>> tally;
  for (const auto& e : report.groups)
    for (const auto& c : e.checks) {
      auto& t = tally[c.claim];
      (c.passed ? t.first : t.second)++;
    }
  ojson claims;
  for (const auto& [claim, t] : tally)
    claims[claim] = ojson{{"pass", t.first}, {"fail", t.second}};
  s["claims"] = std::move(claims);

  ojson open_problem = ojson::array();
  for (const auto& r : report.open_problem_reports()) {
    ojson e;
    e["group"] = r.group;
    e["order"] = r.group_order;
    ojson bps = ojson::array();
    for (const auto& w : r.witnesses) bps.push_back(witness_json(w));
    e["breaking_points"] = std::move(bps);
    open_problem.push_back(std::move(e));
  }
  s["open_problem"] = std::move(open_problem);
  s["catalog_errors"] = report.realize_errors;
  s["internal_errors"] = report.internal_errors;
  s["elapsed_ms"] = with_timings ? report.elapsed.count() : 0;
  j["suite"] = std::move(s);

  ojson groups = ojson::array();
  for (const auto& e : report.groups) {
    ojson ge;
    ge["group"] = ojson{{"spec", e.spec},
                        {"order", e.order},
                        {"abelian", e.abelian},
                        {"center_order", e.center_order}};
    ojson checks = ojson::array();
    for (const auto& c : e.checks) checks.push_back(check_json(c, with_timings));
    ge["checks"] = std::move(checks);
    ge["skipped"] = e.skipped;
    groups.push_back(std::move(ge));
  }
  j["groups"] = std::move(groups);
  return dump(j);
}

std::string render_info_text(const GroupTable& g, const std::string& spec) {
  std::ostringstream out;
  out << "group: " << spec << "\n";
  out << "name: " << g.name() << "\n";
  out << "order: " << g.order() << "\n";
  out << "abelian: " << (g.is_abelian() ? "yes" : "no") << "\n";
  out << "center order: " << center(g).size() << "\n";
  std::map<int, int> hist;
  for (int o : g.element_orders()) ++hist[o];
  out << "element orders:";
  for (const auto& [o, c] : hist) out << " " << o << "x" << c;
  out << "\n";
  out << "centralizer lattice size: " << centralizer_lattice_elements(g).size() << "\n";
  out << "generators:";
  for (int x : g.generating_set()) out << " " << g.element_name(x);
  if (g.generating_set().empty()) out << " (trivial)";
  out << "\n";
  return out.str();
}

std::string render_info_json(const GroupTable& g, const std::string& spec) {
  ojson j;
  j["tool_version"] = kToolVersion;
  j["group"] = group_json(g, spec);
  ojson info;
  info["name"] = g.name();
  std::map<int, int> hist;
  for (int o : g.element_orders()) ++hist[o];
  ojson orders = ojson::array();
  for (const auto& [o, c] : hist) orders.push_back(ojson::array({o, c}));
  info["element_orders"] = std::move(orders);
  info["centralizer_lattice_size"] = centralizer_lattice_elements(g).size();
  ojson gens = ojson::array();
  for (int x : g.generating_set()) gens.push_back(g.element_name(x));
  info["generators"] = std::move(gens);
  j["info"] = std::move(info);
  return dump(j);
}

}  // namespace glat
