#include "glat/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "glat/errors.hpp"

namespace glat {

namespace {

struct WordsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& w) const {
    return static_cast<std::size_t>(fnv1a_hash(w));
  }
};

}  // namespace

BoundedLattice BoundedLattice::build(std::vector<SubgroupSet> elements) {
  if (elements.empty())
    throw std::invalid_argument("lattice needs at least one element");
  std::sort(elements.begin(), elements.end(), SubgroupSet::key_less);
  for (std::size_t i = 1; i < elements.size(); ++i)
    if (elements[i] == elements[i - 1])
      throw std::invalid_argument("duplicate lattice elements");

  BoundedLattice l;
  l.n_ = static_cast<int>(elements.size());
  l.nodes_ = std::move(elements);
  l.words_ = static_cast<std::size_t>((l.n_ + 63) / 64);
  l.up_.assign(static_cast<std::size_t>(l.n_) * l.words_, 0);
  l.down_.assign(static_cast<std::size_t>(l.n_) * l.words_, 0);
  l.full_row_.assign(l.words_, 0);
  for (int i = 0; i < l.n_; ++i)
    l.full_row_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);

  const int n = l.n_;
  auto set_bit = [&](std::vector<std::uint64_t>& m, int row, int col) {
    m[static_cast<std::size_t>(row) * l.words_ + (static_cast<std::size_t>(col) >> 6)] |=
        std::uint64_t{1} << (col & 63);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (l.nodes_[static_cast<std::size_t>(i)].subset_of(l.nodes_[static_cast<std::size_t>(j)])) {
        set_bit(l.up_, i, j);
        set_bit(l.down_, j, i);
      }

  // Inclusion is a partial order and duplicates are gone, so reflexivity and
  // antisymmetry hold; still sweep transitivity as a construction check.
  for (int i = 0; i < n; ++i) {
    const std::uint64_t* ri = &l.up_[static_cast<std::size_t>(i) * l.words_];
    for (int j = 0; j < n; ++j) {
      if (!l.leq(i, j)) continue;
      const std::uint64_t* rj = &l.up_[static_cast<std::size_t>(j) * l.words_];
      for (std::size_t w = 0; w < l.words_; ++w)
        if (rj[w] & ~ri[w])
          throw std::logic_error("lattice order relation is not transitive");
    }
  }

  for (int j = 0; j < n; ++j)
    if (!l.leq(0, j))
      throw Error(ErrorKind::NoUniqueBound, "no unique minimum element");
  for (int i = 0; i < n; ++i)
    if (!l.leq(i, n - 1))
      throw Error(ErrorKind::NoUniqueBound, "no unique maximum element");

  std::unordered_map<std::vector<std::uint64_t>, int, WordsHash> index;
  for (int i = 0; i < n; ++i) index.emplace(l.nodes_[static_cast<std::size_t>(i)].words(), i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto m = l.nodes_[static_cast<std::size_t>(i)].intersect(l.nodes_[static_cast<std::size_t>(j)]);
      if (!index.count(m.words()))
        throw Error(ErrorKind::NotMeetClosed,
                    "intersection of nodes " + std::to_string(i) + " and " +
                        std::to_string(j) + " is not a node");
    }

  // Hasse: i covered by j iff the interval [i,j] is exactly {i,j}.
  for (int i = 0; i < n; ++i) {
    const std::uint64_t* ui = &l.up_[static_cast<std::size_t>(i) * l.words_];
    for (int j = i + 1; j < n; ++j) {
      if (!l.leq(i, j)) continue;
      const std::uint64_t* dj = &l.down_[static_cast<std::size_t>(j) * l.words_];
      int between = 0;
      for (std::size_t w = 0; w < l.words_ && between <= 2; ++w)
        between += std::popcount(ui[w] & dj[w]);
      if (between == 2) l.hasse_.emplace_back(i, j);
    }
  }
  std::sort(l.hasse_.begin(), l.hasse_.end());
  return l;
}

std::vector<int> BoundedLattice::atoms() const {
  std::vector<int> out;
  for (const auto& [lo, hi] : hasse_)
    if (lo == bottom()) out.push_back(hi);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> BoundedLattice::breaking_points() const {
  std::vector<int> out;
  std::vector<char> covered(static_cast<std::size_t>(n_));
  for (int h = 1; h + 1 < n_; ++h) {
    bool comparable_with_all = true;
    for (int x = 0; x < n_ && comparable_with_all; ++x)
      comparable_with_all = leq(x, h) || leq(h, x);

    // Same test phrased as the two-interval cover [bottom,h] u [h,top].
    std::fill(covered.begin(), covered.end(), 0);
    for (int m : interval(bottom(), h).members) covered[static_cast<std::size_t>(m)] = 1;
    for (int m : interval(h, top()).members) covered[static_cast<std::size_t>(m)] = 1;
    bool covers = true;
    for (int x = 0; x < n_ && covers; ++x) covers = covered[static_cast<std::size_t>(x)];

    if (comparable_with_all != covers)
      throw std::logic_error("breaking point formulations disagree");
    if (comparable_with_all) out.push_back(h);
  }
  return out;
}

std::vector<std::pair<int, int>> BoundedLattice::interval_decompositions() const {
  std::vector<std::pair<int, int>> out;
  for (int m = 1; m + 1 < n_; ++m) {
    const std::uint64_t* dn = &down_[static_cast<std::size_t>(m) * words_];
    for (int k = 1; k + 1 < n_; ++k) {
      const std::uint64_t* up = &up_[static_cast<std::size_t>(k) * words_];
      bool covers = true;
      for (std::size_t w = 0; w < words_ && covers; ++w)
        covers = (dn[w] | up[w]) == full_row_[w];
      if (covers) out.emplace_back(m, k);
    }
  }
  return out;
}

ChainInfo BoundedLattice::chain_classification() const {
  for (int i = 0; i + 1 < n_; ++i)
    if (!leq(i, i + 1)) return {false, -1};
  return {true, n_ - 1};
}

Interval BoundedLattice::interval(int x, int y) const {
  if (!leq(x, y))
    throw Error(ErrorKind::NotComparable,
                "interval endpoints " + std::to_string(x) + " and " + std::to_string(y) +
                    " are not comparable");
  Interval iv;
  iv.lower = x;
  iv.upper = y;
  const std::uint64_t* ux = &up_[static_cast<std::size_t>(x) * words_];
  const std::uint64_t* dy = &down_[static_cast<std::size_t>(y) * words_];
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = ux[w] & dy[w];
    while (bits) {
      iv.members.push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return iv;
}

int BoundedLattice::meet(int a, int b) const {
  if (leq(a, b)) return a;
  if (leq(b, a)) return b;
  const auto m = nodes_[static_cast<std::size_t>(a)].intersect(nodes_[static_cast<std::size_t>(b)]);
  for (int i = 0; i < n_; ++i)
    if (nodes_[static_cast<std::size_t>(i)] == m) return i;
  throw std::logic_error("meet escaped the lattice");
}

int BoundedLattice::join(int a, int b) const {
  const std::uint64_t* ua = &up_[static_cast<std::size_t>(a) * words_];
  const std::uint64_t* ub = &up_[static_cast<std::size_t>(b) * words_];
  // Nodes are size-sorted, so the first common upper bound is the least one.
  for (std::size_t w = 0; w < words_; ++w) {
    const std::uint64_t bits = ua[w] & ub[w];
    if (bits) return static_cast<int>(w * 64) + std::countr_zero(bits);
  }
  throw std::logic_error("join escaped the lattice");
}

}  // namespace glat
