#include "glat/subgroups.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <unordered_map>

#include "glat/errors.hpp"

namespace glat {

namespace {

struct WordsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& w) const {
    return static_cast<std::size_t>(fnv1a_hash(w));
  }
};

using SeenMap = std::unordered_map<std::vector<std::uint64_t>, int, WordsHash>;

}  // namespace

SubgroupSet closure_from_generators(const GroupTable& g, const std::vector<int>& gens) {
  SubgroupSet bits(g.order());
  std::vector<int> list;
  bits.set(g.identity());
  list.push_back(g.identity());
  for (std::size_t qi = 0; qi < list.size(); ++qi) {
    for (int t : gens) {
      const int z = g.mul(list[qi], t);
      if (!bits.test(z)) {
        bits.set(z);
        list.push_back(z);
      }
    }
  }
  return bits;
}

SubgroupSet generated_subgroup(const GroupTable& g, const SubgroupSet& seed) {
  return closure_from_generators(g, seed.elements());
}

bool is_subgroup(const GroupTable& g, const SubgroupSet& s) {
  if (s.parent_order() != g.order()) return false;
  if (!s.test(g.identity())) return false;
  const auto elems = s.elements();
  for (int a : elems) {
    if (!s.test(g.inverse(a))) return false;
    for (int b : elems)
      if (!s.test(g.mul(a, b))) return false;
  }
  return true;
}

bool is_normal(const GroupTable& g, const SubgroupSet& h) {
  if (!is_subgroup(g, h))
    throw Error(ErrorKind::NotASubgroup, "normality test requires a subgroup");
  const auto elems = h.elements();
  for (int x : g.generating_set())
    for (int m : elems)
      if (!h.test(g.conjugate(x, m))) return false;
  return true;
}

std::vector<SubgroupSet> all_subgroups(const GroupTable& g, int order_cap) {
  if (g.order() > order_cap)
    throw Error(ErrorKind::OrderCapExceeded,
                "subgroup enumeration needs order <= " + std::to_string(order_cap) +
                    ", got " + std::to_string(g.order()));

  struct Rec {
    SubgroupSet bits;
    std::vector<int> gens;
  };
  struct Cyclic {
    SubgroupSet bits;
    int gen;
  };

  const int n = g.order();
  std::vector<Rec> recs;
  SeenMap seen;

  std::vector<Cyclic> cyclics;
  for (int x = 0; x < n; ++x) {
    SubgroupSet bits(n);
    int y = g.identity();
    bits.set(y);
    do {
      y = g.mul(y, x);
      bits.set(y);
    } while (y != g.identity());
    if (seen.emplace(bits.words(), static_cast<int>(recs.size())).second) {
      cyclics.push_back({bits, x});
      recs.push_back({std::move(bits), {x}});
    }
  }

  for (std::size_t qi = 0; qi < recs.size(); ++qi) {
    // recs grows while we scan it; copy the work item.
    const Rec cur = recs[qi];
    for (const Cyclic& cy : cyclics) {
      if (cy.bits.subset_of(cur.bits)) continue;
      std::vector<int> gens = cur.gens;
      gens.push_back(cy.gen);
      SubgroupSet join = closure_from_generators(g, gens);
      if (seen.emplace(join.words(), static_cast<int>(recs.size())).second)
        recs.push_back({std::move(join), std::move(gens)});
    }
  }

  std::vector<SubgroupSet> out;
  out.reserve(recs.size());
  for (auto& r : recs) out.push_back(std::move(r.bits));
  std::sort(out.begin(), out.end(), SubgroupSet::key_less);
  return out;
}

SubgroupSet centralizer(const GroupTable& g, const SubgroupSet& subset) {
  const int n = g.order();
  const auto elems = subset.elements();
  SubgroupSet out(n);
  for (int x = 0; x < n; ++x) {
    bool commutes = true;
    for (int s : elems)
      if (g.mul(x, s) != g.mul(s, x)) {
        commutes = false;
        break;
      }
    if (commutes) out.set(x);
  }
  return out;
}

SubgroupSet centralizer_of_element(const GroupTable& g, int x) {
  const int n = g.order();
  SubgroupSet out(n);
  for (int y = 0; y < n; ++y)
    if (g.mul(x, y) == g.mul(y, x)) out.set(y);
  return out;
}

SubgroupSet center(const GroupTable& g) { return centralizer(g, g.full_set()); }

std::vector<SubgroupSet> centralizer_lattice_elements(const GroupTable& g) {
  const int n = g.order();
  std::vector<SubgroupSet> list;
  SeenMap seen;
  auto add = [&](SubgroupSet s) {
    if (seen.emplace(s.words(), static_cast<int>(list.size())).second)
      list.push_back(std::move(s));
  };
  add(g.full_set());  // C_G(1)
  for (int x = 0; x < n; ++x) add(centralizer_of_element(g, x));
  // Meet fixpoint; C_G(H) is the intersection of its members' centralizers,
  // so the closure of the element centralizers is exactly the lattice.
  for (std::size_t i = 1; i < list.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      add(list[i].intersect(list[j]));
  std::sort(list.begin(), list.end(), SubgroupSet::key_less);
  return list;
}

std::vector<SubgroupSet> normal_centralizer_lattice_elements(
    const GroupTable& g, const std::vector<SubgroupSet>& subgroups) {
  std::vector<SubgroupSet> list;
  SeenMap seen;
  for (const SubgroupSet& h : subgroups) {
    if (!is_normal(g, h)) continue;
    SubgroupSet c = centralizer(g, h);
    if (seen.emplace(c.words(), static_cast<int>(list.size())).second)
      list.push_back(std::move(c));
  }
  std::sort(list.begin(), list.end(), SubgroupSet::key_less);
  return list;
}

std::vector<SubgroupSet> normal_centralizer_lattice_elements(const GroupTable& g,
                                                             int order_cap) {
  return normal_centralizer_lattice_elements(g, all_subgroups(g, order_cap));
}

std::string subgroup_label(const GroupTable& g, const SubgroupSet& s,
                           std::size_t name_limit) {
  const auto elems = s.elements();
  if (elems.size() <= name_limit) {
    std::string out = "{";
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (i) out += ",";
      out += g.element_name(elems[i]);
    }
    out += "}";
    return out;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%08llx",
                static_cast<unsigned long long>(fnv1a_hash(s.words()) & 0xffffffffull));
  return "{|H|=" + std::to_string(elems.size()) + " #" + buf + "}";
}

}  // namespace glat
