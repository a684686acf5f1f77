#include "flatdelta/ehrhart.hpp"

#include <algorithm>
#include <sstream>

namespace flatdelta {

DeltaVector::DeltaVector(std::vector<Integer> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2) throw InvalidDeltaError("a delta-vector needs d >= 1 (at least two entries)");
  if (entries_[0] != 1) throw InvalidDeltaError("delta_0 must be 1");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (sgn(entries_[i]) < 0) throw InvalidDeltaError("delta_" + std::to_string(i) + " is negative");
}

DeltaVector::DeltaVector(std::initializer_list<long> entries)
    : DeltaVector(std::vector<Integer>(entries.begin(), entries.end())) {}

std::size_t DeltaVector::degree() const {
  std::size_t s = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] != 0) s = i;
  return s;
}

Integer DeltaVector::normalized_volume() const {
  Integer total = 0;
  for (const auto& e : entries_) total += e;
  return total;
}

void FlatSpec::validate() const {
  if (d < 1) throw InvalidParamsError("flat spec needs d >= 1");
  if (a < 1) throw InvalidParamsError("flat spec needs a >= 1");
  if (k + l > d - 1) throw InvalidParamsError("flat spec needs k + l <= d - 1");
}

DeltaVector flat_pattern(const FlatSpec& spec) {
  spec.validate();
  std::vector<Integer> entries(spec.d + 1, Integer(0));
  entries[0] = 1;
  for (std::size_t i = spec.k + 1; i <= spec.d - spec.l; ++i) entries[i] = spec.a;
  return DeltaVector(std::move(entries));
}

DeltaVector delta_from_counts(std::span<const Integer> counts) {
  if (counts.size() < 2) throw NotEhrhartError("need counts i(P,0..d) with d >= 1");
  if (counts[0] != 1) throw NotEhrhartError("i(P,0) must be 1");
  const std::size_t d = counts.size() - 1;
  std::vector<Integer> delta(d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    Integer acc = 0;
    for (std::size_t i = 0; i <= j; ++i) {
      Integer term = binom_generalized(Integer(d + 1), i) * counts[j - i];
      if (i % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    if (sgn(acc) < 0) throw NotEhrhartError("counts give negative delta_" + std::to_string(j));
    delta[j] = acc;
  }
  return DeltaVector(std::move(delta));
}

DeltaVector delta_by_counting(const Simplex& s, const CountBudget& budget) {
  std::vector<Integer> counts;
  counts.reserve(s.dim() + 1);
  for (std::size_t n = 0; n <= s.dim(); ++n) counts.push_back(count_lattice_points(s, n, budget));
  return delta_from_counts(counts);
}

DeltaVector delta_from_box(const Simplex& s, const CountBudget& budget) {
  std::vector<Integer> delta(s.dim() + 1, Integer(0));
  for (const auto& p : box_points(s, budget)) delta[p.degree] += 1;
  return DeltaVector(std::move(delta));
}

Integer ehrhart_eval(const DeltaVector& delta, const Integer& n) {
  const std::size_t d = delta.dim();
  Integer total = 0;
  for (std::size_t j = 0; j <= d; ++j) {
    if (delta[j] == 0) continue;
    total += delta[j] * binom_generalized(n + Integer(d) - Integer(j), d);
  }
  return total;
}

Integer interior_eval(const DeltaVector& delta, const Integer& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("interior_eval needs n >= 1");
  Integer value = ehrhart_eval(delta, -n);
  return delta.dim() % 2 == 0 ? value : Integer(-value);
}

InequalityCheck check_stanley_ineq(const DeltaVector& delta) {
  const std::size_t s = delta.degree();
  Integer prefix = 0, suffix = 0;
  for (std::size_t i = 0; i <= s / 2; ++i) {
    prefix += delta[i];
    suffix += delta[s - i];
    if (prefix > suffix) return {false, i};
  }
  return {};
}

InequalityCheck check_hibi_ineq(const DeltaVector& delta) {
  const std::size_t d = delta.dim();
  Integer tail = 0, head = 0;
  for (std::size_t i = 0; i <= (d - 1) / 2; ++i) {
    tail += delta[d - i];
    head += delta[i + 1];
    if (tail > head) return {false, i};
  }
  return {};
}

std::optional<FlatSpec> classify_flat(const DeltaVector& delta) {
  const std::size_t d = delta.dim();
  std::size_t first = 0, last = 0;
  for (std::size_t i = 1; i <= d; ++i)
    if (delta[i] != 0) {
      if (first == 0) first = i;
      last = i;
    }
  if (first == 0) return std::nullopt;
  for (std::size_t i = first; i <= last; ++i)
    if (delta[i] != delta[first]) return std::nullopt;
  if (!delta[first].fits_ulong_p()) return std::nullopt;
  return FlatSpec{d, first - 1, d - last, delta[first].get_ui()};
}

std::string to_string(const DeltaVector& delta) {
  std::ostringstream os;
  for (std::size_t i = 0; i <= delta.dim(); ++i) os << (i ? " " : "") << delta[i];
  return os.str();
}

}  // namespace flatdelta
