#pragma once

#include <cstdint>
#include <vector>

#include "swcalc/errors.hpp"
#include "swcalc/laurent.hpp"

// Linear plumbings C_{p,q}: the negative-definite sphere chains whose
// boundary lens space L(p^2, 1-pq) bounds a rational ball, the raw material
// of rational blowdown. Self-intersections come from the continued-fraction
// expansion of p^2/(pq-1).

namespace swcalc {

struct LensSpace {
  std::int64_t order = 0;  // p^2
  std::int64_t twist = 0;  // 1 - pq, kept unreduced (negative once pq > 1)
  friend bool operator==(const LensSpace&, const LensSpace&) = default;
};

struct Chain {
  std::int64_t p = 0;
  std::int64_t q = 0;
  // Continued-fraction coefficients [r_k, ..., r_1], all >= 2, outermost
  // first; sphere i has self-intersection -coefficients[i].
  std::vector<std::int64_t> coefficients;
  LensSpace boundary;

  std::int64_t length() const { return static_cast<std::int64_t>(coefficients.size()); }
  friend bool operator==(const Chain&, const Chain&) = default;
};

// Coefficients of the continued fraction num/den = r_k - 1/(r_{k-1} - ...)
// with every r_i >= 2, computed by the greedy ceiling recursion. Requires
// num > den >= 1 and gcd(num, den) == 1.
std::vector<std::int64_t> linear_cfrac(std::int64_t num, std::int64_t den);

// The chain for C_{p,q}: expansion of p^2/(pq-1). Requires p > q >= 1 and
// gcd(p, q) == 1.
Chain chain_for(std::int64_t p, std::int64_t q);

// Tridiagonal intersection matrix of a chain: -r_i on the diagonal, +1 off.
class IntersectionMatrix {
public:
  explicit IntersectionMatrix(std::vector<std::int64_t> coefficients);

  std::size_t size() const { return coeffs_.size(); }
  std::int64_t entry(std::size_t i, std::size_t j) const;
  std::vector<std::vector<std::int64_t>> dense() const;
  Int determinant() const;
  // Negative definite iff the leading principal minors alternate in sign
  // starting negative.
  bool negative_definite() const;

private:
  std::vector<Int> leading_minors() const;  // minors 1..size
  std::vector<std::int64_t> coeffs_;
};

IntersectionMatrix intersection_matrix(const Chain& chain);

struct ChainReport {
  bool recomposition_exact = false;   // cfrac recomposes to p^2 / (pq-1)
  bool coefficients_ge_2 = false;
  bool negative_definite = false;
  bool abs_det_equals_p_squared = false;
  Int determinant = 0;

  bool pass() const {
    return recomposition_exact && coefficients_ge_2 && negative_definite &&
           abs_det_equals_p_squared;
  }
};

// Independent checks on a chain (which need not have come from chain_for).
ChainReport verify_chain(const Chain& chain);

}  // namespace swcalc
