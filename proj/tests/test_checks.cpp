#include <doctest.h>

#include <algorithm>

#include "glat/catalog.hpp"
#include "glat/checks.hpp"
#include "glat/errors.hpp"
#include "glat/subgroups.hpp"

using namespace glat;

namespace {

GroupTable make(const char* spec) { return catalog_group(parse_group_spec(spec)); }

const CatalogGroups& small_catalog() {
  static const CatalogGroups groups = realize_catalog(default_catalog(32, true));
  return groups;
}

}  // namespace

TEST_CASE("no centralizer lattice splits into two proper intervals") {
  for (const char* spec : {"S3", "Q8", "C6", "S4", "D6", "Q32", "A5"}) {
    const CheckReport r = check_theorem1(make(spec));
    CAPTURE(spec);
    CHECK(r.passed);
    CHECK(r.witnesses.empty());
  }
}

TEST_CASE("no centralizer lattice has a breaking point") {
  for (const char* spec : {"D4", "S4", "C1", "Q16", "A4"}) {
    const CheckReport r = check_corollary2(make(spec));
    CAPTURE(spec);
    CHECK(r.passed);
  }
}

TEST_CASE("centralizer lattice is a chain exactly for abelian groups") {
  for (const char* spec : {"C6", "C1", "E2^3", "C4 x C5"}) {
    const CheckReport r = check_corollary3(make(spec));
    CAPTURE(spec);
    CHECK(r.passed);
  }
  for (const char* spec : {"S3", "D4", "Q8", "S4", "A5"}) {
    const CheckReport r = check_corollary3(make(spec));
    CAPTURE(spec);
    CHECK(r.passed);
    // nonabelian lattices have at least three nodes
    CHECK(centralizer_lattice_elements(make(spec)).size() >= 3);
  }
}

TEST_CASE("centralizer intersections stay centralizers; elements sit in double centralizers") {
  for (const char* spec : {"Q8", "C12", "S4", "D6"}) {
    const CheckReport r = check_closure_and_double_centralizer(make(spec));
    CAPTURE(spec);
    CHECK(r.passed);
  }
  // Q8: <a> meet <b> is the center, which is a centralizer
  const GroupTable q8 = make("Q8");
  const auto elems = centralizer_lattice_elements(q8);
  REQUIRE(elems.size() == 5);
  CHECK(elems.front() == center(q8));
}

TEST_CASE("no group is the union of two proper subgroups") {
  const CheckReport s3 = check_union_argument(make("S3"));
  CHECK(s3.passed);
  REQUIRE_FALSE(s3.notes.empty());
  CHECK(s3.notes.front().find("4 of 6") != std::string::npos);

  const CheckReport klein = check_union_argument(make("C2 x C2"));
  CHECK(klein.passed);
  CHECK(klein.notes.front().find("3 of 4") != std::string::npos);

  CHECK(check_union_argument(make("C1")).passed);

  try {
    check_union_argument(make("C20"), 10);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderCapExceeded);
  }
}

TEST_CASE("nonabelian groups have at least three minimal centralizers meeting in the center") {
  for (const char* spec : {"Q8", "S3", "D4", "S4", "Q16"}) {
    const CheckReport r = check_atoms_bound(make(spec));
    CAPTURE(spec);
    CHECK(r.passed);
  }
  CHECK(check_atoms_bound(make("Q8")).notes.front().substr(0, 3) == "k=3");
  CHECK(check_atoms_bound(make("S3")).notes.front().substr(0, 3) == "k=4");
  CHECK(check_atoms_bound(make("D4")).notes.front().substr(0, 3) == "k=3");

  try {
    check_atoms_bound(make("C6"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GroupIsAbelian);
  }
}

TEST_CASE("between the center and the group there are at least two minimal overgroups") {
  for (const GroupTable& g : small_catalog().groups) {
    if (g.is_abelian()) continue;
    const SubgroupSet z = center(g);
    const auto subs = all_subgroups(g);
    std::vector<const SubgroupSet*> over;
    for (const auto& s : subs)
      if (z.subset_of(s) && s.size() > z.size()) over.push_back(&s);
    int minimal = 0;
    for (const auto* s : over) {
      bool is_min = true;
      for (const auto* t : over)
        if (t != s && t->subset_of(*s) && !(*t == *s)) {
          is_min = false;
          break;
        }
      minimal += is_min;
    }
    CAPTURE(g.name());
    CHECK(minimal >= 2);
  }
}

TEST_CASE("capability search finds the central quotients of D8 and Q16") {
  const GroupTable d4 = make("D4");
  const CheckReport r = capability_search(d4, small_catalog());
  CHECK(r.passed);  // informational for non-quaternion targets
  bool has_d8 = false, has_q16 = false;
  for (const auto& w : r.witnesses) {
    has_d8 |= w.group_spec == "D8";
    has_q16 |= w.group_spec == "Q16";
  }
  CHECK(has_d8);
  CHECK(has_q16);
  bool has_disclaimer = false;
  for (const auto& n : r.notes) has_disclaimer |= n.find("not a proof") != std::string::npos;
  CHECK(has_disclaimer);
}

TEST_CASE("capability search for quaternion targets comes up empty") {
  for (const char* spec : {"Q8", "Q16"}) {
    const CheckReport r = capability_search(make(spec), small_catalog());
    CAPTURE(spec);
    CHECK(r.passed);
    CHECK(r.witnesses.empty());
  }
}

TEST_CASE("every abelian group hits a trivial target") {
  const CheckReport r = capability_search(make("C1"), small_catalog());
  CHECK(r.passed);
  std::size_t abelian = 0;
  for (const auto& g : small_catalog().groups) abelian += g.is_abelian();
  CHECK(r.witnesses.size() == abelian);
}

TEST_CASE("capability search is monotone in the catalog") {
  const GroupTable d4 = make("D4");
  const CheckReport small = capability_search(d4, realize_catalog(default_catalog(16, true)));
  const CheckReport big = capability_search(d4, small_catalog());
  for (const auto& w : small.witnesses) {
    bool kept = false;
    for (const auto& v : big.witnesses) kept |= v.group_spec == w.group_spec;
    CHECK(kept);
  }
  CHECK(small.witnesses.size() <= big.witnesses.size());
}

TEST_CASE("open problem search reports S3 with the rotation subgroup") {
  const OpenProblemResult result = open_problem_search(small_catalog());
  const CheckReport* s3 = nullptr;
  const CheckReport* s4 = nullptr;
  for (const auto& r : result.reports) {
    if (r.group == "S3") s3 = &r;
    if (r.group == "S4") s4 = &r;
  }
  REQUIRE(s3 != nullptr);
  REQUIRE(s3->witnesses.size() == 1);
  CHECK(s3->witnesses.front().element_names.size() == 3);

  REQUIRE(s4 != nullptr);
  REQUIRE(s4->witnesses.size() == 1);
  CHECK(s4->witnesses.front().element_names.size() == 4);

  // reports come back ordered by (order, name)
  for (std::size_t i = 1; i < result.reports.size(); ++i) {
    const auto& a = result.reports[i - 1];
    const auto& b = result.reports[i];
    CHECK((a.group_order < b.group_order ||
           (a.group_order == b.group_order && a.group < b.group)));
  }
}

TEST_CASE("an abelian-only catalog yields no open-problem hits") {
  Catalog cat;
  cat.max_order = 32;
  cat.include_products = false;
  for (const char* s : {"C4", "C9", "E2^3", "C15"}) cat.specs.push_back(parse_group_spec(s));
  const OpenProblemResult result = open_problem_search(realize_catalog(cat));
  CHECK(result.reports.empty());
  CHECK(result.skipped.empty());
}

TEST_CASE("groups beyond the subgroup cap are skipped and recorded") {
  Catalog cat;
  cat.max_order = 64;
  cat.include_products = false;
  cat.specs.push_back(parse_group_spec("S3"));
  cat.specs.push_back(parse_group_spec("D16"));
  const CatalogGroups groups = realize_catalog(cat);
  Caps caps;
  caps.subgroup_order_cap = 16;
  const OpenProblemResult result = open_problem_search(groups, caps);
  REQUIRE(result.reports.size() == 1);
  CHECK(result.reports.front().group == "S3");
  REQUIRE(result.skipped.size() == 1);
  CHECK(result.skipped.front().find("D16") != std::string::npos);
}

TEST_CASE("suite on a single-group catalog") {
  Catalog cat;
  cat.max_order = 8;
  cat.include_products = false;
  cat.specs.push_back(parse_group_spec("S3"));
  const SuiteReport report = run_suite(realize_catalog(cat));
  CHECK(report.all_passed());
  REQUIRE(report.groups.size() == 1);
  const auto& entry = report.groups.front();
  CHECK(entry.spec == "S3");
  CHECK(entry.checks.size() == 6);
  REQUIRE(entry.open_problem.has_value());
  CHECK(entry.open_problem->witnesses.size() == 1);
}

TEST_CASE("suite on an empty catalog") {
  Catalog cat;
  cat.specs.clear();
  const SuiteReport report = run_suite(realize_catalog(cat));
  CHECK(report.all_passed());
  CHECK(report.groups.empty());
  CHECK(report.open_problem_reports().empty());
}

TEST_CASE("suite results do not depend on the worker count") {
  const CatalogGroups groups = realize_catalog(default_catalog(20, true));
  const SuiteReport a = run_suite(groups, Caps{}, 1);
  const SuiteReport b = run_suite(groups, Caps{}, 8);
  REQUIRE(a.groups.size() == b.groups.size());
  for (std::size_t i = 0; i < a.groups.size(); ++i) {
    CHECK(a.groups[i].spec == b.groups[i].spec);
    REQUIRE(a.groups[i].checks.size() == b.groups[i].checks.size());
    for (std::size_t c = 0; c < a.groups[i].checks.size(); ++c) {
      CHECK(a.groups[i].checks[c].claim == b.groups[i].checks[c].claim);
      CHECK(a.groups[i].checks[c].passed == b.groups[i].checks[c].passed);
      CHECK(a.groups[i].checks[c].witnesses.size() == b.groups[i].checks[c].witnesses.size());
    }
  }
}

TEST_CASE("failed verdicts carry witnesses") {
  // Drive the breaking-point detector with a lattice that has one: the
  // subgroup chain of C4 standing in for a hypothetical counterexample.
  const BoundedLattice chain = BoundedLattice::build(all_subgroups(make("C4")));
  const auto bps = chain.breaking_points();
  REQUIRE_FALSE(bps.empty());
  // and the published-claim checkers never fire on catalog groups
  for (const GroupTable& g : small_catalog().groups) {
    for (const CheckReport& r :
         {check_theorem1(g), check_corollary2(g), check_corollary3(g)}) {
      CHECK(r.passed);
      if (!r.passed) CHECK_FALSE(r.witnesses.empty());
    }
  }
}

TEST_CASE("published claim names") {
  for (const char* c :
       {"theorem1", "corollary2", "corollary3", "closure", "union-argument", "atoms-bound"})
    CHECK(is_published_claim(c));
  CHECK_FALSE(is_published_claim("capability"));
  CHECK_FALSE(is_published_claim("open-problem"));
}
