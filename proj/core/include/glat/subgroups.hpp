#pragma once

#include <string>
#include <vector>

#include "glat/group.hpp"
#include "glat/subgroup_set.hpp"

namespace glat {

// Smallest subgroup containing the seed; breadth-first product closure.
SubgroupSet generated_subgroup(const GroupTable& g, const SubgroupSet& seed);

// Closure of an explicit generator list (right-multiplication BFS from the
// identity). Cost is |result| * |gens| table lookups.
SubgroupSet closure_from_generators(const GroupTable& g,
                                    const std::vector<int>& gens);

bool is_subgroup(const GroupTable& g, const SubgroupSet& s);

// Conjugates by a generating set of g only; throws NotASubgroup when h is
// not closed.
bool is_normal(const GroupTable& g, const SubgroupSet& h);

// Every subgroup of g, sorted by (size, bitset value). All distinct cyclic
// subgroups first, then fixpoint closure under join with cyclic subgroups.
std::vector<SubgroupSet> all_subgroups(const GroupTable& g,
                                       int order_cap = kDefaultSubgroupOrderCap);

// {x : xs = sx for all s in the subset}; the centralizer of the empty set
// is the whole group.
SubgroupSet centralizer(const GroupTable& g, const SubgroupSet& subset);

SubgroupSet centralizer_of_element(const GroupTable& g, int x);

SubgroupSet center(const GroupTable& g);

// The set {C_G(H) : H <= G}, computed as the meet-closure (pairwise
// intersection fixpoint) of the element centralizers plus G itself.
// Does not require subgroup enumeration. Sorted by (size, bitset value).
std::vector<SubgroupSet> centralizer_lattice_elements(const GroupTable& g);

// {C_G(H) : H normal in G}; needs all_subgroups, so the order cap applies.
std::vector<SubgroupSet> normal_centralizer_lattice_elements(
    const GroupTable& g, int order_cap = kDefaultSubgroupOrderCap);

// Variant over a precomputed subgroup list (suite runs reuse one pass).
std::vector<SubgroupSet> normal_centralizer_lattice_elements(
    const GroupTable& g, const std::vector<SubgroupSet>& subgroups);

// "{e,a,a^2}" when the subgroup has at most name_limit elements, otherwise
// "{|H|=n #hash}".
std::string subgroup_label(const GroupTable& g, const SubgroupSet& s,
                           std::size_t name_limit = 12);

}  // namespace glat
