#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "glat/catalog.hpp"
#include "glat/group.hpp"
#include "glat/lattice.hpp"

namespace glat {

struct Caps {
  int element_cap = kDefaultElementCap;
  int subgroup_order_cap = kDefaultSubgroupOrderCap;
};

struct Witness {
  std::string kind;
  std::string text;
  std::string group_spec;                  // filled for catalog hits
  int group_order = 0;                     // 0 when unused
  std::vector<std::string> element_names;  // filled for subgroup witnesses
};

// Outcome of one verifier run. A failed check always carries witnesses.
struct CheckReport {
  std::string claim;
  std::string group;
  int group_order = 0;
  bool passed = false;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
  std::chrono::milliseconds elapsed{0};
};

// Builds the centralizer lattice of g (meet-closure route).
BoundedLattice centralizer_lattice(const GroupTable& g);

// No pair of proper centralizers (M,N) covers the lattice as
// [bottom,M] u [N,top]; abelian groups pass vacuously.
CheckReport check_theorem1(const GroupTable& g);

// The centralizer lattice has no breaking point.
CheckReport check_corollary2(const GroupTable& g);

// The centralizer lattice is a chain iff g is abelian, and never has
// exactly two nodes.
CheckReport check_corollary3(const GroupTable& g);

// (a) pairwise intersections of centralizers are centralizers;
// (b) x is in C_G(C_G(x)) for every x.
CheckReport check_closure_and_double_centralizer(const GroupTable& g);

// No group is the union of two proper subgroups. Needs subgroup
// enumeration, so the order cap applies.
CheckReport check_union_argument(const GroupTable& g,
                                 int subgroup_cap = kDefaultSubgroupOrderCap);
CheckReport check_union_argument(const GroupTable& g,
                                 const std::vector<SubgroupSet>& subgroups);

// Nonabelian groups have at least three minimal centralizers whose
// intersection is the center. Throws GroupIsAbelian on abelian input.
CheckReport check_atoms_bound(const GroupTable& g);

struct Catalog {
  std::vector<GroupSpec> specs;
  int max_order = 64;
  bool include_products = true;
  bool dedup_isomorphic = true;
};

// Named families plus two-factor direct products within the order bound.
// With include_big_sn, S5/S6/A6 join the pool when their order fits.
Catalog default_catalog(int max_order = 64, bool include_products = true,
                        bool include_big_sn = false);

struct CatalogGroups {
  std::vector<GroupTable> groups;  // sorted by (order, spec), deduplicated
  std::vector<std::string> errors;
  int max_order = 64;
  bool include_products = true;
};

CatalogGroups realize_catalog(const Catalog& catalog, const Caps& caps = {},
                              int jobs = 1);

// For each catalog group, compares its central quotient against the target.
// For a generalized quaternion target the check passes iff there are no
// hits; for other targets the hit list is informational. Always carries a
// bounded-search disclaimer.
CheckReport capability_search(const GroupTable& target, const CatalogGroups& catalog,
                              const Caps& caps = {}, int jobs = 1);

struct OpenProblemResult {
  std::vector<CheckReport> reports;  // only groups with breaking points
  std::vector<std::string> skipped;
};

// Breaking points of the normal-centralizer lattice across the catalog.
OpenProblemResult open_problem_search(const CatalogGroups& catalog,
                                      const Caps& caps = {}, int jobs = 1);

struct GroupSuiteEntry {
  std::string spec;
  int order = 0;
  bool abelian = false;
  int center_order = 0;
  std::vector<CheckReport> checks;
  std::vector<std::string> skipped;
  std::optional<CheckReport> open_problem;
};

struct SuiteReport {
  int max_order = 64;
  bool include_products = true;
  int jobs = 1;
  std::vector<GroupSuiteEntry> groups;
  std::vector<std::string> realize_errors;
  std::vector<std::string> internal_errors;
  std::chrono::milliseconds elapsed{0};

  bool all_passed() const;
  std::vector<CheckReport> open_problem_reports() const;
};

// Every checker over every catalog group; per-group work may run in
// parallel, results are merged in catalog order.
SuiteReport run_suite(const CatalogGroups& catalog, const Caps& caps = {},
                      int jobs = 1);

// The published-claim checkers an exit-code-1 failure can come from.
bool is_published_claim(const std::string& claim);

}  // namespace glat
