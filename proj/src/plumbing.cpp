#include "swcalc/plumbing.hpp"

#include <numeric>

namespace swcalc {

std::vector<std::int64_t> linear_cfrac(std::int64_t num, std::int64_t den) {
  if (den < 1 || num <= den)
    throw DomainError("linear_cfrac: need num > den >= 1, got " + std::to_string(num) + "/" +
                      std::to_string(den));
  if (std::gcd(num, den) != 1)
    throw DomainError("linear_cfrac: " + std::to_string(num) + "/" + std::to_string(den) +
                      " is not in lowest terms");
  // Greedy ceiling recursion: num/den = r - 1/(den / (r*den - num)).
  std::vector<std::int64_t> out;
  while (den > 0) {
    const std::int64_t r = (num + den - 1) / den;  // ceil(num/den), operands positive
    out.push_back(r);
    const std::int64_t next_den = r * den - num;
    num = den;
    den = next_den;
  }
  return out;
}

Chain chain_for(std::int64_t p, std::int64_t q) {
  if (q < 1 || p <= q)
    throw DomainError("chain_for: need p > q >= 1, got p=" + std::to_string(p) +
                      " q=" + std::to_string(q));
  if (std::gcd(p, q) != 1)
    throw DomainError("chain_for: p and q must be coprime");
  Chain chain;
  chain.p = p;
  chain.q = q;
  chain.coefficients = linear_cfrac(p * p, p * q - 1);
  chain.boundary.order = p * p;
  chain.boundary.twist = 1 - p * q;
  return chain;
}

IntersectionMatrix::IntersectionMatrix(std::vector<std::int64_t> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw DomainError("intersection matrix of an empty chain");
}

std::int64_t IntersectionMatrix::entry(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size()) throw RangeError("intersection matrix index out of range");
  if (i == j) return -coeffs_[i];
  if (i + 1 == j || j + 1 == i) return 1;
  return 0;
}

std::vector<std::vector<std::int64_t>> IntersectionMatrix::dense() const {
  std::vector<std::vector<std::int64_t>> out(size(), std::vector<std::int64_t>(size(), 0));
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) out[i][j] = entry(i, j);
  return out;
}

std::vector<Int> IntersectionMatrix::leading_minors() const {
  // Tridiagonal recurrence: d_i = -r_i * d_{i-1} - d_{i-2}. Arbitrary chains
  // are allowed here, so minors get exact bignum arithmetic.
  std::vector<Int> minors;
  Int prev2 = 1;  // d_0
  Int prev1 = -coeffs_[0];
  minors.push_back(prev1);
  for (std::size_t i = 1; i < size(); ++i) {
    Int d = Int(-coeffs_[i]) * prev1 - prev2;
    prev2 = prev1;
    prev1 = d;
    minors.push_back(std::move(d));
  }
  return minors;
}

Int IntersectionMatrix::determinant() const { return leading_minors().back(); }

bool IntersectionMatrix::negative_definite() const {
  const std::vector<Int> minors = leading_minors();
  for (std::size_t i = 0; i < minors.size(); ++i) {
    const bool odd = i % 2 == 0;  // minor of size i+1
    if (odd && minors[i] >= 0) return false;
    if (!odd && minors[i] <= 0) return false;
  }
  return true;
}

IntersectionMatrix intersection_matrix(const Chain& chain) {
  return IntersectionMatrix(chain.coefficients);
}

ChainReport verify_chain(const Chain& chain) {
  ChainReport report;
  report.coefficients_ge_2 = !chain.coefficients.empty();
  for (std::int64_t r : chain.coefficients)
    if (r < 2) report.coefficients_ge_2 = false;

  // Recompose back to front: value = r - 1/value, tracked as an exact Int
  // fraction num/den starting from the empty tail 1/0 (so the innermost step
  // yields r_1 exactly), then compare with p^2/(pq-1) by cross-multiplication.
  Int num = 1, den = 0;
  for (std::size_t i = chain.coefficients.size(); i-- > 0;) {
    Int new_num = Int(chain.coefficients[i]) * num - den;
    den = num;
    num = std::move(new_num);
  }
  const Int target_num = Int(chain.p) * chain.p;
  const Int target_den = Int(chain.p) * chain.q - 1;
  report.recomposition_exact =
      !chain.coefficients.empty() && den != 0 && num * target_den == target_num * den;

  if (!chain.coefficients.empty()) {
    IntersectionMatrix m(chain.coefficients);
    report.determinant = m.determinant();
    report.negative_definite = m.negative_definite();
    report.abs_det_equals_p_squared = abs(report.determinant) == target_num;
  }
  return report;
}

}  // namespace swcalc
