#include "glat/group.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "glat/errors.hpp"
#include "glat/subgroups.hpp"

namespace glat {

Perm identity_perm(int degree) {
  Perm p(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(i);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

std::string cycle_notation(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) continue;
    out += '(';
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) out += ' ';
      out += std::to_string(i);
      first = false;
      i = p[i];
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : p) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

GroupTable::GroupTable(int order, std::vector<std::uint16_t> table,
                       std::string name, std::vector<std::string> element_names)
    : order_(order),
      table_(std::move(table)),
      name_(std::move(name)),
      element_names_(std::move(element_names)) {
  if (order_ <= 0)
    throw Error(ErrorKind::BadTable, "order must be positive");
  if (table_.size() != static_cast<std::size_t>(order_) * order_)
    throw Error(ErrorKind::BadTable,
                "table has " + std::to_string(table_.size()) + " entries, expected " +
                    std::to_string(static_cast<long long>(order_) * order_));
  if (!element_names_.empty() &&
      element_names_.size() != static_cast<std::size_t>(order_))
    throw Error(ErrorKind::BadTable, "element name list does not match order");
  validate_table();
  locate_identity_and_inverses();
}

GroupTable GroupTable::from_untrusted(int order, std::vector<std::uint16_t> table,
                                      std::string name,
                                      std::vector<std::string> element_names) {
  GroupTable g(order, std::move(table), std::move(name), std::move(element_names));
  const int n = g.order_;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = g.mul(a, b);
      for (int c = 0; c < n; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
          throw Error(ErrorKind::BadTable,
                      "associativity fails at (a,b,c)=(" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")");
    }
  return g;
}

GroupTable::GroupTable(const GroupTable& o)
    : order_(o.order_),
      table_(o.table_),
      identity_(o.identity_),
      inverse_(o.inverse_),
      name_(o.name_),
      element_names_(o.element_names_) {
  std::lock_guard<std::mutex> lock(o.cache_mu_);
  cache_ = o.cache_;
}

GroupTable::GroupTable(GroupTable&& o) noexcept
    : order_(o.order_),
      table_(std::move(o.table_)),
      identity_(o.identity_),
      inverse_(std::move(o.inverse_)),
      name_(std::move(o.name_)),
      element_names_(std::move(o.element_names_)) {
  std::lock_guard<std::mutex> lock(o.cache_mu_);
  cache_ = std::move(o.cache_);
}

GroupTable& GroupTable::operator=(const GroupTable& o) {
  if (this == &o) return *this;
  GroupTable tmp(o);
  *this = std::move(tmp);
  return *this;
}

GroupTable& GroupTable::operator=(GroupTable&& o) noexcept {
  if (this == &o) return *this;
  order_ = o.order_;
  table_ = std::move(o.table_);
  identity_ = o.identity_;
  inverse_ = std::move(o.inverse_);
  name_ = std::move(o.name_);
  element_names_ = std::move(o.element_names_);
  std::scoped_lock lock(cache_mu_, o.cache_mu_);
  cache_ = std::move(o.cache_);
  return *this;
}

void GroupTable::validate_table() const {
  const int n = order_;
  std::vector<char> seen(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      const int v = mul(r, c);
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
        throw Error(ErrorKind::BadTable,
                    "row " + std::to_string(r) + " is not a permutation of 0.." +
                        std::to_string(n - 1));
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      const int v = mul(r, c);
      if (seen[static_cast<std::size_t>(v)])
        throw Error(ErrorKind::BadTable,
                    "column " + std::to_string(c) + " is not a permutation of 0.." +
                        std::to_string(n - 1));
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
}

void GroupTable::locate_identity_and_inverses() {
  const int n = order_;
  identity_ = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw Error(ErrorKind::BadTable, "no identity element");
  inverse_.assign(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    int inv = -1;
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inv = b;
        break;
      }
    if (inv < 0)
      throw Error(ErrorKind::BadTable, "no inverse for element " + std::to_string(a));
    inverse_[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(inv);
  }
}

std::string GroupTable::element_name(int i) const {
  if (!element_names_.empty()) return element_names_[static_cast<std::size_t>(i)];
  if (i == identity_) return "e";
  return "g" + std::to_string(i);
}

int GroupTable::element_order(int x) const {
  int k = 1;
  int y = x;
  while (y != identity_) {
    y = mul(y, x);
    ++k;
  }
  return k;
}

const std::vector<int>& GroupTable::orders_locked() const {
  if (!cache_.orders) {
    std::vector<int> ord(static_cast<std::size_t>(order_));
    for (int x = 0; x < order_; ++x) ord[static_cast<std::size_t>(x)] = element_order(x);
    cache_.orders = std::move(ord);
  }
  return *cache_.orders;
}

bool GroupTable::abelian_locked() const {
  if (!cache_.abelian) {
    bool ab = true;
    for (int a = 0; a < order_ && ab; ++a)
      for (int b = a + 1; b < order_; ++b)
        if (mul(a, b) != mul(b, a)) {
          ab = false;
          break;
        }
    cache_.abelian = ab;
  }
  return *cache_.abelian;
}

bool GroupTable::is_abelian() const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  return abelian_locked();
}

const std::vector<int>& GroupTable::element_orders() const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  return orders_locked();
}

const std::vector<int>& GroupTable::generating_set() const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  if (!cache_.gens) {
    const auto& ord = orders_locked();
    std::vector<int> gens;
    SubgroupSet closed(order_);
    closed.set(identity_);
    int covered = 1;
    while (covered < order_) {
      int best = -1;
      for (int x = 0; x < order_; ++x) {
        if (closed.test(x)) continue;
        if (best < 0 || ord[static_cast<std::size_t>(x)] > ord[static_cast<std::size_t>(best)])
          best = x;
      }
      gens.push_back(best);
      closed = closure_from_generators(*this, gens);
      covered = closed.size();
    }
    cache_.gens = std::move(gens);
  }
  return *cache_.gens;
}

const Fingerprint& GroupTable::fingerprint() const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  if (!cache_.fp) {
    Fingerprint fp;
    fp.order = order_;
    const auto& ord = orders_locked();
    std::map<int, int> hist;
    for (int o : ord) ++hist[o];
    fp.order_histogram.assign(hist.begin(), hist.end());
    fp.abelian = abelian_locked();
    fp.center_size = center(*this).size();
    SubgroupSet comm(order_);
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        comm.set(mul(mul(inverse_[static_cast<std::size_t>(a)],
                         inverse_[static_cast<std::size_t>(b)]),
                     mul(a, b)));
    fp.derived_size = generated_subgroup(*this, comm).size();
    cache_.fp = std::move(fp);
  }
  return *cache_.fp;
}

GroupTable build_from_generators(int degree, const std::vector<Perm>& generators,
                                 std::string name, int element_cap) {
  if (degree <= 0)
    throw Error(ErrorKind::ParameterOutOfRange, "degree must be positive");
  if (generators.empty())
    throw Error(ErrorKind::NotAPermutation, "generator list is empty");
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    const Perm& p = generators[gi];
    if (p.size() != static_cast<std::size_t>(degree))
      throw Error(ErrorKind::NotAPermutation,
                  "generator " + std::to_string(gi) + " has degree " +
                      std::to_string(p.size()) + ", expected " + std::to_string(degree));
    std::vector<bool> seen(static_cast<std::size_t>(degree), false);
    for (auto v : p) {
      if (v >= degree || seen[v])
        throw Error(ErrorKind::NotAPermutation,
                    "generator " + std::to_string(gi) + " is not a permutation (image " +
                        std::to_string(v) + ")");
      seen[v] = true;
    }
  }

  std::vector<Perm> elems;
  std::unordered_map<Perm, int, PermHash> index;
  elems.push_back(identity_perm(degree));
  index.emplace(elems.front(), 0);
  for (std::size_t qi = 0; qi < elems.size(); ++qi) {
    for (const Perm& gen : generators) {
      Perm next = compose(elems[qi], gen);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (static_cast<int>(elems.size()) > element_cap)
          throw Error(ErrorKind::ClosureTooLarge,
                      "closure exceeds element cap " + std::to_string(element_cap));
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] =
          static_cast<std::uint16_t>(index.at(compose(elems[static_cast<std::size_t>(a)],
                                                      elems[static_cast<std::size_t>(b)])));

  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (const Perm& p : elems) names.push_back(cycle_notation(p));

  if (name.empty()) name = "perm" + std::to_string(degree);
  return GroupTable(n, std::move(table), std::move(name), std::move(names));
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h, int element_cap) {
  const long long n = static_cast<long long>(g.order()) * h.order();
  if (n > element_cap)
    throw Error(ErrorKind::ClosureTooLarge,
                "product order " + std::to_string(n) + " exceeds element cap " +
                    std::to_string(element_cap));
  const int no = static_cast<int>(n);
  const int hn = h.order();
  std::vector<std::uint16_t> table(static_cast<std::size_t>(no) * no);
  for (int a = 0; a < no; ++a) {
    const int a1 = a / hn, a2 = a % hn;
    for (int b = 0; b < no; ++b) {
      const int b1 = b / hn, b2 = b % hn;
      table[static_cast<std::size_t>(a) * no + b] =
          static_cast<std::uint16_t>(g.mul(a1, b1) * hn + h.mul(a2, b2));
    }
  }
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(no));
  for (int a = 0; a < no; ++a)
    names.push_back("(" + g.element_name(a / hn) + "," + h.element_name(a % hn) + ")");
  return GroupTable(no, std::move(table), g.name() + " x " + h.name(), std::move(names));
}

GroupTable quotient(const GroupTable& g, const SubgroupSet& n, std::string name) {
  if (!is_subgroup(g, n))
    throw Error(ErrorKind::NotASubgroup, "quotient requires a subgroup");
  if (!is_normal(g, n))
    throw Error(ErrorKind::NotNormal, "quotient requires a normal subgroup");

  const int order = g.order();
  const auto members = n.elements();
  std::vector<int> rep(static_cast<std::size_t>(order), -1);
  for (int x = 0; x < order; ++x) {
    if (rep[static_cast<std::size_t>(x)] >= 0) continue;
    int least = order;
    for (int m : members) least = std::min(least, g.mul(m, x));
    for (int m : members) rep[static_cast<std::size_t>(g.mul(m, x))] = least;
  }
  std::vector<int> reps;
  for (int x = 0; x < order; ++x)
    if (rep[static_cast<std::size_t>(x)] == x) reps.push_back(x);

  std::vector<int> coset_id(static_cast<std::size_t>(order), -1);
  for (std::size_t i = 0; i < reps.size(); ++i) coset_id[static_cast<std::size_t>(reps[i])] = static_cast<int>(i);

  const int q = static_cast<int>(reps.size());
  std::vector<std::uint16_t> table(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      const int prod = g.mul(reps[static_cast<std::size_t>(a)], reps[static_cast<std::size_t>(b)]);
      table[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint16_t>(
          coset_id[static_cast<std::size_t>(rep[static_cast<std::size_t>(prod)])]);
    }

  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(q));
  for (int r : reps) names.push_back("[" + g.element_name(r) + "]");
  if (name.empty()) name = g.name() + "/N" + std::to_string(n.size());
  return GroupTable(q, std::move(table), std::move(name), std::move(names));
}

namespace {

// Image assignment with right-multiplication propagation. Checking every
// (mapped element, assigned generator) product pair is enough to certify a
// homomorphism once the map is total.
struct IsoSearch {
  const GroupTable& g;
  const GroupTable& h;
  const std::vector<int>& gens;
  std::vector<std::vector<int>> candidates;
  std::vector<int> img;     // g index -> h index, -1 unset
  std::vector<int> pre;     // h index -> g index, -1 unset
  std::vector<int> mapped;  // assignment trail

  IsoSearch(const GroupTable& g_, const GroupTable& h_, const std::vector<int>& gens_)
      : g(g_), h(h_), gens(gens_) {
    img.assign(static_cast<std::size_t>(g.order()), -1);
    pre.assign(static_cast<std::size_t>(h.order()), -1);
    bind(g.identity(), h.identity());
    const auto& gord = g.element_orders();
    const auto& hord = h.element_orders();
    candidates.resize(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int want = gord[static_cast<std::size_t>(gens[i])];
      for (int y = 0; y < h.order(); ++y)
        if (hord[static_cast<std::size_t>(y)] == want) candidates[i].push_back(y);
    }
  }

  void bind(int x, int y) {
    img[static_cast<std::size_t>(x)] = y;
    pre[static_cast<std::size_t>(y)] = x;
    mapped.push_back(x);
  }

  void rollback(std::size_t mark) {
    while (mapped.size() > mark) {
      const int x = mapped.back();
      mapped.pop_back();
      pre[static_cast<std::size_t>(img[static_cast<std::size_t>(x)])] = -1;
      img[static_cast<std::size_t>(x)] = -1;
    }
  }

  bool propagate(std::size_t n_gens) {
    for (std::size_t scan = 0; scan < mapped.size(); ++scan) {
      const int x = mapped[scan];
      for (std::size_t j = 0; j < n_gens; ++j) {
        const int y = g.mul(x, gens[j]);
        const int w = h.mul(img[static_cast<std::size_t>(x)],
                            img[static_cast<std::size_t>(gens[j])]);
        const int cur = img[static_cast<std::size_t>(y)];
        if (cur < 0) {
          if (pre[static_cast<std::size_t>(w)] >= 0) return false;
          bind(y, w);
        } else if (cur != w) {
          return false;
        }
      }
    }
    return true;
  }

  bool dfs(std::size_t gi) {
    if (gi == gens.size())
      return static_cast<int>(mapped.size()) == g.order();
    for (int c : candidates[gi]) {
      if (pre[static_cast<std::size_t>(c)] >= 0) continue;
      const std::size_t mark = mapped.size();
      bind(gens[gi], c);
      if (propagate(gi + 1) && dfs(gi + 1)) return true;
      rollback(mark);
    }
    return false;
  }
};

}  // namespace

bool is_isomorphic(const GroupTable& g, const GroupTable& h, std::vector<int>* witness) {
  if (g.order() != h.order()) return false;
  if (!(g.fingerprint() == h.fingerprint())) return false;
  if (g.order() == 1) {
    if (witness) witness->assign(1, h.identity());
    return true;
  }
  const std::vector<int>& gens = g.generating_set();
  IsoSearch search(g, h, gens);
  if (!search.dfs(0)) return false;
  if (witness) *witness = search.img;
  return true;
}

}  // namespace glat
