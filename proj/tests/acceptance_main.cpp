// Acceptance suite: runs every gate criterion and prints one PASS/FAIL line
// per criterion. Exit code 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "glat/catalog.hpp"
#include "glat/checks.hpp"
#include "glat/lattice.hpp"
#include "glat/subgroups.hpp"
#include "oracles.hpp"

using namespace glat;
using nlohmann::json;

namespace {

int g_failures = 0;

void report(int criterion, bool passed, const std::string& detail) {
  std::cout << (passed ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << detail
            << std::endl;
  if (!passed) ++g_failures;
}

std::string cli_json(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  const int c = glat::cli::run(args, out, err);
  if (code) *code = c;
  return out.str();
}

const CatalogGroups& default_groups() {
  static const CatalogGroups groups = realize_catalog(default_catalog(64, true));
  return groups;
}

void criterion_1_theorem1() {
  const auto t0 = std::chrono::steady_clock::now();
  int failures = 0;
  for (const GroupTable& g : default_groups().groups)
    failures += !check_theorem1(g).passed;
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream detail;
  detail << "no two-interval decomposition of the centralizer lattice over "
         << default_groups().groups.size() << " catalog groups (order <= 64); " << failures
         << " failures; " << secs << " s (budget 300 s)";
  report(1, failures == 0 && secs < 300.0, detail.str());
}

void criterion_2_corollary2() {
  int failures = 0;
  for (const GroupTable& g : default_groups().groups)
    failures += !check_corollary2(g).passed;
  report(2, failures == 0,
         "no breaking point in any centralizer lattice; " + std::to_string(failures) +
             " failures");
}

void criterion_3_corollary3() {
  int failures = 0;
  for (const GroupTable& g : default_groups().groups) {
    const CheckReport r = check_corollary3(g);
    failures += !r.passed;
    if (!g.is_abelian() && centralizer_lattice_elements(g).size() == 2) ++failures;
  }
  report(3, failures == 0,
         "centralizer lattice is a chain iff abelian and never has two nodes; " +
             std::to_string(failures) + " failures");
}

void criterion_4_open_problem_witness() {
  int code = 0;
  const std::string out =
      cli_json({"search", "open-problem", "--max-order", "24", "--format", "json"}, &code);
  bool ok = code == 0;
  std::string detail;
  try {
    const json doc = json::parse(out);
    const std::set<std::string> want_s3 = {"e", "(0 1 2)", "(0 2 1)"};
    const std::set<std::string> want_s4 = {"e", "(0 1)(2 3)", "(0 2)(1 3)", "(0 3)(1 2)"};
    bool s3_ok = false, s4_ok = false;
    for (const auto& e : doc.at("search").at("results")) {
      const std::string group = e.at("group");
      if (group != "S3" && group != "S4") continue;
      const auto& bps = e.at("breaking_points");
      if (bps.size() != 1) continue;
      std::set<std::string> names;
      for (const auto& n : bps[0].at("elements")) names.insert(n.get<std::string>());
      if (group == "S3") s3_ok = names == want_s3;
      if (group == "S4") s4_ok = names == want_s4;
    }
    ok = ok && s3_ok && s4_ok;
    detail = std::string("search open-problem --max-order 24 reports S3 with exactly the ") +
             "rotation subgroup (" + (s3_ok ? "yes" : "no") +
             ") and S4 with exactly the double-transposition subgroup (" +
             (s4_ok ? "yes" : "no") + ")";
  } catch (const std::exception& ex) {
    ok = false;
    detail = std::string("report parse failure: ") + ex.what();
  }
  report(4, ok, detail);
}

void criterion_5_capability() {
  bool ok = true;
  std::ostringstream detail;
  for (const char* target : {"Q8", "Q16"}) {
    int code = 0;
    const std::string out = cli_json({"search", "capability", "--target", target,
                                      "--max-order", "128", "--format", "json"},
                                     &code);
    try {
      const json doc = json::parse(out);
      const auto& s = doc.at("search");
      const bool empty = s.at("hits").empty();
      bool disclaimed = false;
      for (const auto& n : s.at("notes"))
        disclaimed |= n.get<std::string>().find("not a proof") != std::string::npos;
      ok = ok && code == 0 && empty && disclaimed && s.at("passed").get<bool>();
      detail << target << ": " << s.at("hits").size() << " hits; ";
    } catch (const std::exception&) {
      ok = false;
    }
  }
  {
    int code = 0;
    const std::string out = cli_json({"search", "capability", "--target", "D4", "--max-order",
                                      "128", "--format", "json"},
                                     &code);
    try {
      const json doc = json::parse(out);
      const auto& hits = doc.at("search").at("hits");
      bool has_d8 = false;
      for (const auto& h : hits) has_d8 |= h.at("group") == "D8";
      ok = ok && code == 0 && hits.size() >= 1 && has_d8;
      detail << "D4: " << hits.size() << " hits (D8 " << (has_d8 ? "included" : "missing")
             << ")";
    } catch (const std::exception&) {
      ok = false;
    }
  }
  report(5, ok,
         "capability search to order 128: quaternion targets empty with disclaimer, "
         "positive control hits (" +
             detail.str() + ")");
}

void criterion_6_oracle_equivalence() {
  int failures = 0;
  int checked = 0;
  for (const GroupTable& g : default_groups().groups) {
    if (g.order() > 32) continue;
    ++checked;
    if (centralizer_lattice_elements(g) != glat::testing::centralizers_via_subgroups(g))
      ++failures;
  }
  report(6, failures == 0,
         "meet-closure centralizer lattice equals the subgroup-enumeration route on " +
             std::to_string(checked) + " groups of order <= 32; " +
             std::to_string(failures) + " mismatches");
}

void criterion_7_proof_mechanics() {
  int failures = 0;
  for (const GroupTable& g : default_groups().groups) {
    if (!check_closure_and_double_centralizer(g).passed) ++failures;
    if (!check_union_argument(g).passed) ++failures;
    if (!g.is_abelian() && !check_atoms_bound(g).passed) ++failures;
  }
  report(7, failures == 0,
         "double centralizers, intersection closure, two-subgroup unions and the "
         "minimal-centralizer bound over the catalog; " +
             std::to_string(failures) + " failures");
}

void criterion_8_subgroup_counts() {
  const GroupTable s3 = symmetric_group(3);
  const GroupTable q8 = generalized_quaternion_group(8);
  const GroupTable d4 = dihedral_group(4);
  const GroupTable s4 = symmetric_group(4);

  const auto l_s3 = all_subgroups(s3);
  const auto l_q8 = all_subgroups(q8);
  const auto l_d4 = all_subgroups(d4);
  const auto l_s4 = all_subgroups(s4);

  bool ok = l_s3.size() == 6 && l_q8.size() == 6 && l_d4.size() == 10 && l_s4.size() == 30;

  // cross-check against the naive subset oracle at order <= 16
  ok = ok && l_s3 == glat::testing::naive_all_subgroups(s3);
  ok = ok && l_q8 == glat::testing::naive_all_subgroups(q8);
  ok = ok && l_d4 == glat::testing::naive_all_subgroups(d4);

  // S4: internal consistency of the enumerated list
  std::set<std::vector<std::uint64_t>> keys;
  for (const auto& s : l_s4) {
    if (!is_subgroup(s4, s)) ok = false;
    keys.insert(s.words());
  }
  for (std::size_t i = 0; i < l_s4.size() && ok; ++i)
    for (std::size_t j = i + 1; j < l_s4.size(); ++j) {
      if (!keys.count(l_s4[i].intersect(l_s4[j]).words())) ok = false;
      if (!keys.count(generated_subgroup(s4, l_s4[i].unite(l_s4[j])).words())) ok = false;
      if (!ok) break;
    }

  std::ostringstream detail;
  detail << "|L(S3)|=" << l_s3.size() << " |L(Q8)|=" << l_q8.size() << " |L(D4)|="
         << l_d4.size() << " |L(S4)|=" << l_s4.size()
         << "; naive-oracle cross-check and S4 closure consistency";
  report(8, ok, detail.str());
}

void criterion_9_isomorphism_sanity() {
  const GroupTable d3 = dihedral_group(3);
  const GroupTable s3 = symmetric_group(3);
  std::vector<int> witness;
  bool ok = is_isomorphic(d3, s3, &witness);
  ok = ok && glat::testing::is_bijective_homomorphism(d3, s3, witness);
  ok = ok && !is_isomorphic(generalized_quaternion_group(8), dihedral_group(4));
  ok = ok &&
       !is_isomorphic(cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2)));

  // every positive answer across a catalog slice yields a verifiable witness
  const auto& groups = default_groups().groups;
  for (std::size_t i = 0; i < groups.size() && ok; ++i) {
    if (groups[i].order() > 16) break;
    std::vector<int> w;
    if (!is_isomorphic(groups[i], groups[i], &w)) ok = false;
    if (ok && !glat::testing::is_bijective_homomorphism(groups[i], groups[i], w)) ok = false;
  }
  report(9, ok,
         "D3 ~ S3 with a verified witness, Q8 !~ D4, C4 !~ C2 x C2, and self-witnesses "
         "verify across the small catalog");
}

void criterion_10_determinism() {
  int code1 = 0, code8 = 0;
  const std::string a =
      cli_json({"suite", "--max-order", "64", "--format", "json", "--jobs", "1"}, &code1);
  const std::string b =
      cli_json({"suite", "--max-order", "64", "--format", "json", "--jobs", "8"}, &code8);
  const bool ok = code1 == 0 && code8 == 0 && !a.empty() && a == b;
  report(10, ok,
         "full suite JSON is byte-identical for --jobs 1 and --jobs 8 (" +
             std::to_string(a.size()) + " bytes, exit " + std::to_string(code1) + "/" +
             std::to_string(code8) + ")");
}

}  // namespace

int main() {
  criterion_1_theorem1();
  criterion_2_corollary2();
  criterion_3_corollary3();
  criterion_4_open_problem_witness();
  criterion_5_capability();
  criterion_6_oracle_equivalence();
  criterion_7_proof_mechanics();
  criterion_8_subgroup_counts();
  criterion_9_isomorphism_sanity();
  criterion_10_determinism();

  std::cout << (g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
            << (10 - g_failures) << "/10)" << std::endl;
  return g_failures == 0 ? 0 : 1;
}
