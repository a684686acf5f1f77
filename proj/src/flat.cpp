#include "flatdelta/flat.hpp"

#include <string>

namespace flatdelta {
namespace {

void validate_even(std::size_t d, std::size_t k, unsigned long a) {
  if (d < 3) throw InvalidParamsError("even construction needs d >= 3");
  if (k < 1 || 2 * k > d - 1) throw InvalidParamsError("even construction needs 1 <= k <= floor((d-1)/2)");
  if (a < 1) throw InvalidParamsError("even construction needs a >= 1");
}

void validate_full(std::size_t d, unsigned long a) {
  if (d < 1) throw InvalidParamsError("full construction needs d >= 1");
  if (a < 1) throw InvalidParamsError("full construction needs a >= 1");
}

// 0, e_1, ..., e_{d-1}, last
Simplex corner_simplex(std::size_t d, IntVector last) {
  std::vector<IntVector> vertices{IntVector(d)};
  for (std::size_t i = 0; i + 1 < d; ++i) vertices.push_back(IntVector::unit(d, i));
  vertices.push_back(std::move(last));
  return Simplex(std::move(vertices));
}

}  // namespace

std::string_view to_string(ConstructionRecipe::Kind kind) {
  switch (kind) {
    case ConstructionRecipe::Kind::Even: return "even";
    case ConstructionRecipe::Kind::Full: return "full";
    case ConstructionRecipe::Kind::UnitPoint: return "unit";
  }
  return "unknown";
}

Simplex construct_even(std::size_t d, std::size_t k, unsigned long a) {
  validate_even(d, k, a);
  const Integer run = Integer(a) * Integer(d - 2 * k);  // a(d-2k) >= 1
  IntVector last(d);
  for (std::size_t j = 0; j < d - k; ++j) last[j] = 1;
  for (std::size_t j = d - k; j + 1 < d; ++j) last[j] = run;
  last[d - 1] = run + 1;
  return corner_simplex(d, std::move(last));
}

Simplex construct_full(std::size_t d, unsigned long a) {
  validate_full(d, a);
  const Integer ad = Integer(a) * Integer(d);
  IntVector last(d);
  for (std::size_t j = 0; j + 1 < d; ++j) last[j] = ad;
  last[d - 1] = ad + 1;
  return corner_simplex(d, std::move(last));
}

DeltaVector degree_profile_even(std::size_t d, std::size_t k, unsigned long a) {
  validate_even(d, k, a);
  const Integer width(d - 2 * k);
  const Integer run = Integer(a) * width;
  const Integer denom = run + 1;
  std::vector<Integer> delta(d + 1, Integer(0));
  delta[0] = 1;
  for (Integer t = 1; t <= run; ++t) {
    Rational f = Rational(Integer(d - k)) - Rational(Integer(t * width), denom);
    delta[ceil(f).get_ui()] += 1;
  }
  return DeltaVector(std::move(delta));
}

DeltaVector degree_profile_full(std::size_t d, unsigned long a) {
  validate_full(d, a);
  const Integer ad = Integer(a) * Integer(d);
  std::vector<Integer> delta(d + 1, Integer(0));
  delta[0] = 1;
  for (Integer t = 1; t <= ad; ++t) delta[ceil(Rational(Integer(t * d), ad + 1)).get_ui()] += 1;
  return DeltaVector(std::move(delta));
}

bool is_realizable(const FlatSpec& spec) {
  spec.validate();
  return spec.k <= spec.l;
}

std::pair<Simplex, ConstructionRecipe> construct_flat(const FlatSpec& spec, const CountBudget& budget) {
  if (!is_realizable(spec)) throw NotRealizableError("not realizable: k > l");
  const std::size_t run = spec.d - spec.k - spec.l;
  ConstructionRecipe recipe;
  recipe.k = spec.k;
  recipe.a = spec.a;
  std::optional<Simplex> core;
  if (spec.k == 0) {
    recipe.kind = ConstructionRecipe::Kind::Full;
    recipe.base_dim = run;
    recipe.pyramids = spec.l;
    core.emplace(construct_full(run, spec.a));
  } else {
    recipe.kind = ConstructionRecipe::Kind::Even;
    recipe.base_dim = 2 * spec.k + run;
    recipe.pyramids = spec.l - spec.k;
    if (recipe.base_dim < 3) throw std::logic_error("even core needs dimension >= 3");
    core.emplace(construct_even(recipe.base_dim, spec.k, spec.a));
  }
  Simplex result = *core;
  for (std::size_t i = 0; i < recipe.pyramids; ++i) result = pyramid(result);

  if (delta_by_counting(result, budget) != flat_pattern(spec))
    throw std::logic_error("constructed simplex does not realize the requested flat pattern");
  return {std::move(result), recipe};
}

}  // namespace flatdelta
