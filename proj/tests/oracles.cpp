#include "oracles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "glat/subgroups.hpp"

namespace glat::testing {

std::vector<SubgroupSet> naive_all_subgroups(const GroupTable& g) {
  const int n = g.order();
  if (n > 16) throw std::invalid_argument("naive subgroup oracle is capped at order 16");

  std::vector<int> others;
  for (int x = 0; x < n; ++x)
    if (x != g.identity()) others.push_back(x);

  std::vector<SubgroupSet> out;
  const std::uint32_t limit = 1u << others.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    SubgroupSet s(n);
    s.set(g.identity());
    for (std::size_t b = 0; b < others.size(); ++b)
      if (mask & (1u << b)) s.set(others[b]);
    const auto elems = s.elements();
    bool closed = true;
    for (int a : elems) {
      for (int b : elems)
        if (!s.test(g.mul(a, b))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), SubgroupSet::key_less);
  return out;
}

std::vector<SubgroupSet> centralizers_via_subgroups(const GroupTable& g, int order_cap) {
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<SubgroupSet> out;
  for (const SubgroupSet& h : all_subgroups(g, order_cap)) {
    SubgroupSet c = centralizer(g, h);
    if (seen.insert(c.words()).second) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), SubgroupSet::key_less);
  return out;
}

bool is_bijective_homomorphism(const GroupTable& g, const GroupTable& h,
                               const std::vector<int>& map) {
  if (g.order() != h.order()) return false;
  if (map.size() != static_cast<std::size_t>(g.order())) return false;
  std::vector<bool> hit(static_cast<std::size_t>(h.order()), false);
  for (int v : map) {
    if (v < 0 || v >= h.order() || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (map[static_cast<std::size_t>(g.mul(a, b))] !=
          h.mul(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

bool satisfies_group_axioms(const GroupTable& g) {
  const int n = g.order();
  const int e = g.identity();
  for (int x = 0; x < n; ++x) {
    if (g.mul(e, x) != x || g.mul(x, e) != x) return false;
    if (g.mul(x, g.inverse(x)) != e || g.mul(g.inverse(x), x) != e) return false;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = g.mul(a, b);
      for (int c = 0; c < n; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) return false;
    }
  return true;
}

}  // namespace glat::testing
