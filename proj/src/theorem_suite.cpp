#include "flatdelta/theorem_suite.hpp"

#include "flatdelta/ehrhart.hpp"
#include "flatdelta/flat.hpp"

namespace flatdelta {

std::string_view to_string(Quantity q) { return q == Quantity::Count ? "i" : "i*"; }

SimplexPair theorem2_pair(std::size_t d, std::size_t k, std::size_t l, unsigned long a, const CountBudget& budget) {
  if (d < 1 || k + l > d - 1 || a < 1) throw InvalidParamsError("pair needs d >= 1, k + l <= d - 1, a >= 1");
  Simplex p = k == 0 ? unit_simplex(d) : construct_flat(FlatSpec{d, 0, d - k, a}, budget).first;
  Simplex q = construct_flat(FlatSpec{d, 0, l, a}, budget).first;
  return {std::move(p), std::move(q)};
}

std::vector<Simplex> theorem3_family(std::size_t d, std::size_t k, std::size_t l, std::size_t count,
                                     const CountBudget& budget) {
  if (d < 1 || k > l || k + l + 1 > d) throw InvalidParamsError("family needs 0 <= k <= l <= d - k - 1");
  if (count < 2) throw InvalidParamsError("family needs count >= 2");
  std::vector<Simplex> family;
  family.reserve(count);
  for (std::size_t a = 1; a <= count; ++a) family.push_back(construct_flat(FlatSpec{d, k, l, a}, budget).first);
  return family;
}

VerificationReport verify_pair(const Simplex& p, const Simplex& q, std::size_t k, std::size_t l,
                               const CountBudget& budget) {
  if (p.dim() != q.dim()) throw DimensionMismatchError("pair members have different dimensions");
  const std::size_t d = p.dim();
  if (k + l > d - 1) throw InvalidParamsError("verification needs k + l <= d - 1");

  VerificationReport report;
  report.theorem = "pair";
  report.params = ReportParams{d, k, l, {}};
  bool ok = true;

  auto compare = [&](Quantity quantity, unsigned long t) {
    CountComparison c{t, quantity, {}, {}};
    if (quantity == Quantity::Count) {
      c.value_p = count_lattice_points(p, t, budget);
      c.value_q = count_lattice_points(q, t, budget);
    } else {
      c.value_p = count_interior_points(p, t, budget);
      c.value_q = count_interior_points(q, t, budget);
    }
    return c;
  };

  for (unsigned long t = 1; t <= k; ++t) {
    report.agreements.push_back(compare(Quantity::Count, t));
    ok = ok && report.agreements.back().value_p == report.agreements.back().value_q;
  }
  for (unsigned long t = 1; t <= l; ++t) {
    report.agreements.push_back(compare(Quantity::Interior, t));
    ok = ok && report.agreements.back().value_p == report.agreements.back().value_q;
  }
  report.first_divergence.push_back(compare(Quantity::Count, k + 1));
  report.first_divergence.push_back(compare(Quantity::Interior, l + 1));
  for (const auto& c : report.first_divergence) ok = ok && c.value_p != c.value_q;

  report.passed = ok;
  return report;
}

VerificationReport verify_family(const std::vector<Simplex>& family, std::size_t k, std::size_t l,
                                 const CountBudget& budget) {
  VerificationReport report;
  report.theorem = "family";
  report.params = ReportParams{family.empty() ? 0 : family.front().dim(), k, l, {}};
  for (const auto& s : family)
    if (s.dim() != report.params.d) throw DimensionMismatchError("family members have different dimensions");
  bool ok = true;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      report.pairs.push_back(verify_pair(family[i], family[j], k, l, budget));
      ok = ok && report.pairs.back().passed;
    }
  report.passed = ok;
  return report;
}

}  // namespace flatdelta
