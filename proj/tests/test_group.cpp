#include <doctest.h>

#include <algorithm>

#include "glat/catalog.hpp"
#include "glat/errors.hpp"
#include "glat/group.hpp"
#include "glat/subgroups.hpp"
#include "oracles.hpp"

using namespace glat;

namespace {

int count_elements_of_order(const GroupTable& g, int want) {
  int c = 0;
  for (int o : g.element_orders())
    if (o == want) ++c;
  return c;
}

int element_by_name(const GroupTable& g, const std::string& name) {
  for (int i = 0; i < g.order(); ++i)
    if (g.element_name(i) == name) return i;
  return -1;
}

}  // namespace

TEST_CASE("closure of a 3-cycle and a transposition is the order-6 group") {
  const std::vector<Perm> gens = {{1, 2, 0}, {1, 0, 2}};
  const GroupTable g = build_from_generators(3, gens);
  CHECK(g.order() == 6);
  CHECK(g.identity() == 0);
  CHECK(g.element_name(0) == "e");
  CHECK(glat::testing::satisfies_group_axioms(g));
}

TEST_CASE("closure of the identity permutation is trivial") {
  const GroupTable g = build_from_generators(1, {identity_perm(1)});
  CHECK(g.order() == 1);
}

TEST_CASE("closure of a 4-cycle is cyclic of order 4") {
  const GroupTable g = build_from_generators(4, {{1, 2, 3, 0}});
  CHECK(g.order() == 4);
  CHECK(is_isomorphic(g, cyclic_group(4)));
}

TEST_CASE("generator validation") {
  CHECK_THROWS_AS(build_from_generators(3, {{0, 0, 1}}), Error);
  CHECK_THROWS_AS(build_from_generators(3, {}), Error);
  try {
    build_from_generators(3, {{0, 0, 1}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAPermutation);
  }
  try {
    build_from_generators(4, {{1, 2, 3, 0}}, "", 3);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ClosureTooLarge);
  }
}

TEST_CASE("Q8 has exactly one involution, namely a^2") {
  const GroupTable q8 = generalized_quaternion_group(8);
  CHECK(q8.order() == 8);
  CHECK(count_elements_of_order(q8, 2) == 1);
  const int a = element_by_name(q8, "a");
  const int sq = q8.mul(a, a);
  CHECK(q8.element_order(sq) == 2);
}

TEST_CASE("quaternion family orders and the b element") {
  for (int n : {8, 16, 32, 64}) {
    const GroupTable q = generalized_quaternion_group(n);
    CHECK(q.order() == n);
    CHECK(count_elements_of_order(q, 2) == 1);
  }
  const GroupTable q8 = generalized_quaternion_group(8);
  CHECK(q8.element_order(element_by_name(q8, "b")) == 4);
}

TEST_CASE("catalog basics: C1 trivial, S3 centerless") {
  CHECK(catalog_group(parse_group_spec("C1")).order() == 1);
  const GroupTable s3 = catalog_group(parse_group_spec("S3"));
  CHECK(s3.order() == 6);
  CHECK(center(s3).size() == 1);
}

TEST_CASE("dihedral naming: Dm has order 2m") {
  CHECK(dihedral_group(3).order() == 6);
  CHECK(dihedral_group(17).order() == 34);
  CHECK_THROWS_AS(dihedral_group(2), Error);
}

TEST_CASE("symmetric and alternating groups have the right orders") {
  CHECK(symmetric_group(4).order() == 24);
  CHECK(symmetric_group(6).order() == 720);
  CHECK(alternating_group(4).order() == 12);
  CHECK(alternating_group(5).order() == 60);
  CHECK(alternating_group(2).order() == 1);
}

TEST_CASE("elementary abelian groups") {
  const GroupTable e8 = elementary_abelian_group(2, 3);
  CHECK(e8.order() == 8);
  CHECK(e8.is_abelian());
  CHECK(count_elements_of_order(e8, 2) == 7);
  CHECK(elementary_abelian_group(3, 2).order() == 9);
}

TEST_CASE("direct products") {
  const GroupTable klein = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(klein.order() == 4);
  CHECK(count_elements_of_order(klein, 2) == 3);

  const GroupTable s3 = symmetric_group(3);
  CHECK(is_isomorphic(direct_product(cyclic_group(1), s3), s3));
  CHECK(is_isomorphic(direct_product(cyclic_group(2), cyclic_group(3)), cyclic_group(6)));

  try {
    direct_product(cyclic_group(10), cyclic_group(10), 50);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ClosureTooLarge);
  }
}

TEST_CASE("element orders") {
  const GroupTable s3 = symmetric_group(3);
  const int cyc = element_by_name(s3, "(0 1 2)");
  REQUIRE(cyc >= 0);
  CHECK(s3.element_order(cyc) == 3);
  CHECK(s3.element_order(s3.identity()) == 1);
}

TEST_CASE("quotients") {
  const GroupTable q16 = generalized_quaternion_group(16);
  const SubgroupSet z = center(q16);
  CHECK(z.size() == 2);
  const GroupTable q = quotient(q16, z);
  CHECK(q.order() == 8);
  CHECK(is_isomorphic(q, dihedral_group(4)));

  const GroupTable s3 = symmetric_group(3);
  CHECK(quotient(s3, s3.full_set()).order() == 1);

  SubgroupSet a3(s3.order());
  for (int x = 0; x < s3.order(); ++x)
    if (s3.element_orders()[static_cast<std::size_t>(x)] != 2) a3.set(x);
  CHECK(is_isomorphic(quotient(s3, a3), cyclic_group(2)));
}

TEST_CASE("quotient rejects non-normal and non-subgroup inputs") {
  const GroupTable s3 = symmetric_group(3);
  const int t = element_by_name(s3, "(0 1)");
  REQUIRE(t >= 0);
  const SubgroupSet sub = closure_from_generators(s3, {t});
  try {
    quotient(s3, sub);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNormal);
  }
  SubgroupSet junk(s3.order());
  junk.set(t);  // no identity
  try {
    quotient(s3, junk);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotASubgroup);
  }
}

TEST_CASE("quotient order times subgroup order is the group order") {
  const GroupTable d6 = dihedral_group(6);
  for (const SubgroupSet& h : all_subgroups(d6)) {
    if (!is_normal(d6, h)) continue;
    CHECK(quotient(d6, h).order() * h.size() == d6.order());
  }
}

TEST_CASE("isomorphism spot checks") {
  const GroupTable d3 = dihedral_group(3);
  const GroupTable s3 = symmetric_group(3);
  std::vector<int> witness;
  CHECK(is_isomorphic(d3, s3, &witness));
  CHECK(glat::testing::is_bijective_homomorphism(d3, s3, witness));

  CHECK_FALSE(is_isomorphic(generalized_quaternion_group(8), dihedral_group(4)));
  CHECK_FALSE(is_isomorphic(cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))));
}

TEST_CASE("isomorphism is reflexive and symmetric on a catalog sample") {
  std::vector<GroupTable> sample;
  sample.push_back(cyclic_group(12));
  sample.push_back(dihedral_group(6));
  sample.push_back(alternating_group(4));
  sample.push_back(generalized_quaternion_group(8));
  sample.push_back(elementary_abelian_group(2, 2));
  for (const auto& g : sample) {
    std::vector<int> w;
    CHECK(is_isomorphic(g, g, &w));
    CHECK(glat::testing::is_bijective_homomorphism(g, g, w));
  }
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = i + 1; j < sample.size(); ++j)
      CHECK(is_isomorphic(sample[i], sample[j]) == is_isomorphic(sample[j], sample[i]));
}

TEST_CASE("group axioms hold for catalog constructions at desk scale") {
  for (const char* spec : {"C12", "D5", "Q16", "S3", "A4", "E2^3", "C2 x D4"})
    CHECK(glat::testing::satisfies_group_axioms(catalog_group(parse_group_spec(spec))));
}

TEST_CASE("untrusted tables are rejected with a named defect") {
  // Z3 with one entry corrupted: row 2 becomes non-associative but stays a
  // permutation only if we swap two entries; swap (2,1)->0 and (2,2)->1.
  std::vector<std::uint16_t> t = {0, 1, 2, 1, 2, 0, 2, 1, 0};
  try {
    GroupTable::from_untrusted(3, t, "bad");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadTable);
  }
  std::vector<std::uint16_t> dup = {0, 1, 2, 1, 2, 0, 2, 0, 2};
  CHECK_THROWS_AS(GroupTable(3, dup, "bad"), Error);
}
