#include "flatdelta/ehrhart.hpp"
#include "flatdelta/flat.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace flatdelta;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<Simplex> constructed_up_to_dim4() {
  std::vector<Simplex> out;
  for (std::size_t d = 1; d <= 4; ++d)
    for (unsigned long a = 1; a <= 3; ++a) out.push_back(construct_full(d, a));
  for (std::size_t d = 3; d <= 4; ++d)
    for (unsigned long a = 1; a <= 3; ++a) out.push_back(construct_even(d, 1, a));
  out.push_back(pyramid(construct_full(2, 2)));
  out.push_back(pyramid(construct_even(3, 1, 2)));
  return out;
}

}  // namespace

TEST_CASE("DeltaVector invariants") {
  CHECK_THROWS_AS(DeltaVector({2, 0}), InvalidDeltaError);
  CHECK_THROWS_AS(DeltaVector({1, -1, 2}), InvalidDeltaError);
  CHECK_THROWS_AS(DeltaVector({1}), InvalidDeltaError);
  DeltaVector v{1, 0, 2, 2, 0};
  CHECK(v.dim() == 4);
  CHECK(v.degree() == 3);
  CHECK(v.normalized_volume() == 5);
  CHECK(DeltaVector({1, 0, 0}).degree() == 0);
}

TEST_CASE("delta_from_counts examples") {
  CHECK(delta_from_counts(ints({1, 3, 6})) == DeltaVector{1, 0, 0});
  CHECK(delta_from_counts(ints({1, 4, 10})) == DeltaVector{1, 1, 1});
  CHECK(delta_from_counts(ints({1, 4})) == DeltaVector{1, 2});
  CHECK_THROWS_AS(delta_from_counts(ints({2, 4})), NotEhrhartError);
  // i(n) = 1, 2, 2: delta_2 = 2 - 3*2 + 3*1 < 0
  CHECK_THROWS_AS(delta_from_counts(ints({1, 2, 2})), NotEhrhartError);
}

TEST_CASE("delta_from_box examples") {
  CHECK(delta_from_box(unit_simplex(3)) == DeltaVector{1, 0, 0, 0});
  CHECK(delta_from_box(construct_even(3, 1, 1)) == DeltaVector{1, 0, 1, 0});
  CHECK(delta_from_box(construct_full(2, 1)) == DeltaVector{1, 1, 1});
}

TEST_CASE("ehrhart_eval examples") {
  CHECK(ehrhart_eval(DeltaVector{1, 0, 0}, 5) == 21);
  CHECK(ehrhart_eval(DeltaVector{1, 1, 1}, 2) == 10);
  CHECK(ehrhart_eval(DeltaVector{1, 1, 1}, 2) == count_lattice_points(construct_full(2, 1), 2));
  CHECK(ehrhart_eval(DeltaVector{1, 0, 1, 0}, -2) == -1);
  CHECK(ehrhart_eval(DeltaVector{1, 4, 2}, 0) == 1);
}

TEST_CASE("interior_eval examples") {
  CHECK(interior_eval(DeltaVector{1, 0, 0}, 3) == 1);
  CHECK(interior_eval(DeltaVector{1, 0, 1, 0}, 2) == 1);
  CHECK(interior_eval(DeltaVector{1, 1, 1}, 1) == 1);
  CHECK_THROWS_AS(interior_eval(DeltaVector{1, 1, 1}, 0), std::invalid_argument);
}

TEST_CASE("check_stanley_ineq") {
  CHECK(check_stanley_ineq(DeltaVector{1, 0, 1, 0}).holds);
  CHECK(check_stanley_ineq(DeltaVector{1, 2, 1}).holds);
  CHECK(check_stanley_ineq(DeltaVector{1, 0, 0, 1, 0}).holds);
  // s = 2: i = 0 gives 1 <= 1; i = 1 gives 1 + 5 <= 1 + 5
  CHECK(check_stanley_ineq(DeltaVector{1, 5, 1}).holds);
  // s = 3, i = 1: 1 + 3 <= 1 + 0 fails
  auto bad = check_stanley_ineq(DeltaVector{1, 3, 0, 1});
  CHECK_FALSE(bad.holds);
  CHECK(bad.violated_at == 1u);
  // s = 5, i = 2: 1 + 0 + 5 <= 1 + 0 + 0 fails
  auto bad2 = check_stanley_ineq(DeltaVector{1, 0, 5, 0, 0, 1});
  CHECK_FALSE(bad2.holds);
  CHECK(bad2.violated_at == 2u);
}

TEST_CASE("check_hibi_ineq") {
  CHECK(check_hibi_ineq(DeltaVector{1, 1, 1}).holds);
  CHECK(check_hibi_ineq(DeltaVector{1, 0, 1, 1, 0, 0}).holds);
  auto bad = check_hibi_ineq(DeltaVector{1, 0, 0, 1, 0});
  CHECK_FALSE(bad.holds);
  CHECK(bad.violated_at == 1u);
  auto bad0 = check_hibi_ineq(DeltaVector{1, 0, 0, 1});
  CHECK_FALSE(bad0.holds);
  CHECK(bad0.violated_at == 0u);
}

TEST_CASE("classify_flat") {
  CHECK(classify_flat(DeltaVector{1, 0, 2, 2, 0}) == FlatSpec{4, 1, 1, 2});
  CHECK(classify_flat(DeltaVector{1, 1, 1, 0}) == FlatSpec{3, 0, 1, 1});
  CHECK_FALSE(classify_flat(DeltaVector{1, 2, 1}).has_value());
  CHECK_FALSE(classify_flat(DeltaVector{1, 0, 0, 0}).has_value());
  CHECK_FALSE(classify_flat(DeltaVector{1, 2, 0, 2}).has_value());
}

TEST_CASE("classify_flat inverts flat_pattern") {
  for (std::size_t d = 1; d <= 7; ++d)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t l = 0; k + l <= d - 1; ++l)
        for (unsigned long a = 1; a <= 4; ++a) {
          FlatSpec spec{d, k, l, a};
          CHECK(classify_flat(flat_pattern(spec)) == spec);
        }
  CHECK_THROWS_AS(flat_pattern(FlatSpec{3, 2, 1, 1}), InvalidParamsError);
  CHECK_THROWS_AS(flat_pattern(FlatSpec{3, 0, 0, 0}), InvalidParamsError);
}

TEST_CASE("oracle equivalence, volume and delta properties on constructed simplices") {
  for (const auto& s : constructed_up_to_dim4()) {
    const std::size_t d = s.dim();
    const DeltaVector delta = delta_by_counting(s);
    CHECK(delta_from_box(s) == delta);
    CHECK(delta.normalized_volume() == normalized_volume(s));
    CHECK(delta[1] == count_lattice_points(s, 1) - Integer(d + 1));
    CHECK(delta[d] == count_interior_points(s, 1));
    for (unsigned long n = 1; n <= 3; ++n) CHECK(count_interior_points(s, n) == interior_eval(delta, n));
    for (unsigned long n = 0; n <= d + 2; ++n) CHECK(count_lattice_points(s, n) == ehrhart_eval(delta, n));

    const std::size_t top = delta.degree();
    for (std::size_t t = 1; t + top <= d; ++t) CHECK(interior_eval(delta, t) == 0);
    CHECK(interior_eval(delta, d - top + 1) == delta[top]);

    CHECK(check_stanley_ineq(delta).holds);
    CHECK(check_hibi_ineq(delta).holds);
  }
}

TEST_CASE("oracle equivalence on random simplices") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 1 + trial % 4;
    Simplex s = testing::random_simplex(rng, d, 2);
    if (normalized_volume(s) > 50) continue;
    const DeltaVector delta = delta_by_counting(s);
    CHECK(delta_from_box(s) == delta);
    CHECK(check_stanley_ineq(delta).holds);
    CHECK(check_hibi_ineq(delta).holds);
  }
}
