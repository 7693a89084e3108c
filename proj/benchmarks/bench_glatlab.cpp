#include <benchmark/benchmark.h>

#include "glat/catalog.hpp"
#include "glat/checks.hpp"
#include "glat/lattice.hpp"
#include "glat/subgroups.hpp"

using namespace glat;

static void BM_CatalogGroup_S4(benchmark::State& state) {
  const GroupSpec spec = parse_group_spec("S4");
  for (auto _ : state) benchmark::DoNotOptimize(catalog_group(spec));
}
BENCHMARK(BM_CatalogGroup_S4);

static void BM_CatalogGroup_Q64(benchmark::State& state) {
  const GroupSpec spec = parse_group_spec("Q64");
  for (auto _ : state) benchmark::DoNotOptimize(catalog_group(spec));
}
BENCHMARK(BM_CatalogGroup_Q64);

static void BM_AllSubgroups_S4(benchmark::State& state) {
  const GroupTable g = symmetric_group(4);
  for (auto _ : state) benchmark::DoNotOptimize(all_subgroups(g));
}
BENCHMARK(BM_AllSubgroups_S4);

static void BM_AllSubgroups_E2_5(benchmark::State& state) {
  const GroupTable g = elementary_abelian_group(2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(all_subgroups(g));
}
BENCHMARK(BM_AllSubgroups_E2_5);

static void BM_CentralizerLattice_S4(benchmark::State& state) {
  const GroupTable g = symmetric_group(4);
  for (auto _ : state) benchmark::DoNotOptimize(centralizer_lattice_elements(g));
}
BENCHMARK(BM_CentralizerLattice_S4);

static void BM_CentralizerLattice_D32(benchmark::State& state) {
  const GroupTable g = dihedral_group(32);
  for (auto _ : state) benchmark::DoNotOptimize(centralizer_lattice_elements(g));
}
BENCHMARK(BM_CentralizerLattice_D32);

static void BM_IntervalDecompositions_L_S4(benchmark::State& state) {
  const BoundedLattice lat = BoundedLattice::build(all_subgroups(symmetric_group(4)));
  for (auto _ : state) benchmark::DoNotOptimize(lat.interval_decompositions());
}
BENCHMARK(BM_IntervalDecompositions_L_S4);

static void BM_IsIsomorphic_D6_C2xS3(benchmark::State& state) {
  const GroupTable a = dihedral_group(6);
  const GroupTable b = direct_product(cyclic_group(2), symmetric_group(3));
  for (auto _ : state) benchmark::DoNotOptimize(is_isomorphic(a, b));
}
BENCHMARK(BM_IsIsomorphic_D6_C2xS3);

static void BM_Quotient_Q64_Center(benchmark::State& state) {
  const GroupTable g = generalized_quaternion_group(64);
  const SubgroupSet z = center(g);
  for (auto _ : state) benchmark::DoNotOptimize(quotient(g, z));
}
BENCHMARK(BM_Quotient_Q64_Center);

static void BM_Suite_Order16(benchmark::State& state) {
  const CatalogGroups groups = realize_catalog(default_catalog(16, true));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(groups));
}
BENCHMARK(BM_Suite_Order16);

BENCHMARK_MAIN();
