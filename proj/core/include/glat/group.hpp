#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glat/subgroup_set.hpp"

namespace glat {

// Hard ceiling on constructed group orders; configurable per call site.
inline constexpr int kDefaultElementCap = 10080;
// Ceiling for full subgroup enumeration (all_subgroups and everything on it).
inline constexpr int kDefaultSubgroupOrderCap = 256;

// A permutation of 0..degree-1 as an image list.
using Perm = std::vector<std::uint16_t>;

Perm identity_perm(int degree);

// (a*b)(i) = a[b[i]]
Perm compose(const Perm& a, const Perm& b);

// "e" for the identity, otherwise "(0 1 2)(3 4)" with fixed points omitted.
std::string cycle_notation(const Perm& p);

// Cheap isomorphism-invariant summary used for fast rejection.
struct Fingerprint {
  int order = 0;
  std::vector<std::pair<int, int>> order_histogram;  // (element order, count)
  int center_size = 0;
  int derived_size = 0;
  bool abelian = false;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

// A finite group as a dense multiplication table over element indices
// 0..order-1. Immutable after construction; the lazy caches are
// mutex-guarded so tables can be shared across threads.
class GroupTable {
 public:
  // Trusted path: verifies the Latin-square property, locates the identity
  // and inverses, but skips the O(n^3) associativity sweep.
  GroupTable(int order, std::vector<std::uint16_t> table, std::string name,
             std::vector<std::string> element_names = {});

  // Untrusted path (file input): everything above plus the full
  // associativity check; the first failing triple is named.
  static GroupTable from_untrusted(int order, std::vector<std::uint16_t> table,
                                   std::string name,
                                   std::vector<std::string> element_names = {});

  GroupTable(const GroupTable& o);
  GroupTable(GroupTable&& o) noexcept;
  GroupTable& operator=(const GroupTable& o);
  GroupTable& operator=(GroupTable&& o) noexcept;

  int order() const { return order_; }

  int mul(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }

  int identity() const { return identity_; }
  int inverse(int a) const { return inverse_[a]; }

  // x h x^-1
  int conjugate(int x, int h) const { return mul(mul(x, h), inverse_[x]); }

  const std::string& name() const { return name_; }
  void rename(std::string name) { name_ = std::move(name); }

  bool has_element_names() const { return !element_names_.empty(); }
  std::string element_name(int i) const;

  int element_order(int x) const;

  SubgroupSet full_set() const { return SubgroupSet::full(order_); }

  bool is_abelian() const;
  const std::vector<int>& element_orders() const;
  // Small generating set: repeatedly adjoin the highest-order element
  // (lowest index on ties) outside the current closure.
  const std::vector<int>& generating_set() const;
  const Fingerprint& fingerprint() const;

 private:
  struct Cache {
    std::optional<std::vector<int>> orders;
    std::optional<std::vector<int>> gens;
    std::optional<bool> abelian;
    std::optional<Fingerprint> fp;
  };

  void validate_table() const;
  void locate_identity_and_inverses();
  const std::vector<int>& orders_locked() const;
  bool abelian_locked() const;

  int order_ = 0;
  std::vector<std::uint16_t> table_;
  int identity_ = 0;
  std::vector<std::uint16_t> inverse_;
  std::string name_;
  std::vector<std::string> element_names_;

  mutable std::mutex cache_mu_;
  mutable Cache cache_;
};

// Deterministic closure of permutation generators: breadth-first from the
// identity, generators applied in list order. Element 0 is the identity.
GroupTable build_from_generators(int degree, const std::vector<Perm>& generators,
                                 std::string name = {},
                                 int element_cap = kDefaultElementCap);

// Componentwise product on pairs, g-index outer (row-major enumeration).
GroupTable direct_product(const GroupTable& g, const GroupTable& h,
                          int element_cap = kDefaultElementCap);

// Group on the cosets of a normal subgroup; cosets are represented by their
// minimum element index and enumerated by ascending representative.
GroupTable quotient(const GroupTable& g, const SubgroupSet& n,
                    std::string name = {});

// Backtracking over images of a generating set of g, fast-rejecting on
// fingerprint mismatch. When a witness pointer is supplied and the groups
// are isomorphic, *witness maps g-indices to h-indices.
bool is_isomorphic(const GroupTable& g, const GroupTable& h,
                   std::vector<int>* witness = nullptr);

}  // namespace glat
