#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace glat {

// Membership bitset over the element indices 0..parent_order-1 of a fixed
// parent group. Whether the set is actually closed under the parent's
// multiplication is the caller's business; this is plain set algebra.
class SubgroupSet {
 public:
  SubgroupSet() = default;

  explicit SubgroupSet(int parent_order)
      : n_(parent_order), w_(word_count(parent_order), 0) {}

  static SubgroupSet full(int parent_order) {
    SubgroupSet s(parent_order);
    for (auto& w : s.w_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static SubgroupSet of(int parent_order, std::initializer_list<int> elems) {
    SubgroupSet s(parent_order);
    for (int e : elems) s.set(e);
    return s;
  }

  int parent_order() const { return n_; }

  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }

  void set(int i) {
    assert(i >= 0 && i < n_);
    w_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(int i) {
    assert(i >= 0 && i < n_);
    w_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  int size() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  bool subset_of(const SubgroupSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool contains(const SubgroupSet& o) const { return o.subset_of(*this); }

  SubgroupSet intersect(const SubgroupSet& o) const {
    assert(n_ == o.n_);
    SubgroupSet r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }

  SubgroupSet unite(const SubgroupSet& o) const {
    assert(n_ == o.n_);
    SubgroupSet r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }

  bool operator==(const SubgroupSet&) const = default;

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        int b = std::countr_zero(w);
        out.push_back(static_cast<int>(wi * 64) + b);
        w &= w - 1;
      }
    }
    return out;
  }

  int min_element() const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi)
      if (w_[wi]) return static_cast<int>(wi * 64) + std::countr_zero(w_[wi]);
    return -1;
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

  // Deterministic report order: by (popcount, numeric bitset value).
  static bool key_less(const SubgroupSet& a, const SubgroupSet& b) {
    assert(a.n_ == b.n_);
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    for (std::size_t i = a.w_.size(); i-- > 0;)
      if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
    return false;
  }

 private:
  static int word_count(int n) { return (n + 63) / 64; }

  void trim() {
    if (n_ % 64 != 0 && !w_.empty())
      w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

// FNV-1a over the word array; display/dedup helper, not a security hash.
inline std::uint64_t fnv1a_hash(const std::vector<std::uint64_t>& words) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint64_t w : words) {
    for (int i = 0; i < 8; ++i) {
      h ^= (w >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace glat
