#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "swcalc/errors.hpp"

namespace swcalc {

// Arbitrary-precision integer. Coefficients of Seiberg-Witten polynomials
// (r^s) and entries of SL(2,Z) evaluations grow without bound, so exact
// bignums are mandatory, not optional.
using Int = mpz_class;

// A named formal generator of a Laurent polynomial ring, e.g. T or E3.
struct Generator {
  std::string name;
  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

namespace detail {

// Lexicographic comparison of two exponent rows of equal width.
inline int compare_rows(const std::int32_t* a, const std::int32_t* b, std::size_t width) {
  for (std::size_t g = 0; g < width; ++g) {
    if (a[g] != b[g]) return a[g] < b[g] ? -1 : 1;
  }
  return 0;
}

}  // namespace detail

// Multivariable Laurent polynomial with Int coefficients.
//
// Canonical form: terms sorted in ascending lexicographic order of their
// exponent vectors (structure-of-arrays: one flat int32 exponent buffer plus
// a parallel coefficient vector), zero coefficients never stored, generator
// names unique. Equality is semantic: generator order and generators that
// appear with exponent zero everywhere are ignored.
class LaurentPoly {
public:
  LaurentPoly() = default;  // the zero polynomial over no generators

  static LaurentPoly constant(Int value);
  static LaurentPoly monomial(std::vector<Generator> gens, std::vector<std::int32_t> exps,
                              Int coeff);
  // General constructor: sorts, combines duplicate exponent vectors, drops
  // zero coefficients. Throws DomainError on duplicate generator names or
  // exponent vectors of the wrong width.
  static LaurentPoly from_terms(std::vector<Generator> gens,
                                std::vector<std::pair<std::vector<std::int32_t>, Int>> terms);
  // Trusted input already in canonical form (used by the kernels). Checked
  // with assertions only.
  static LaurentPoly from_canonical(std::vector<Generator> gens, std::vector<std::int32_t> exps,
                                    std::vector<Int> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t term_count() const { return coeffs_.size(); }
  std::size_t width() const { return gens_.size(); }
  const std::vector<Generator>& generators() const { return gens_; }

  std::span<const std::int32_t> exponents(std::size_t term) const {
    return {exps_.data() + term * gens_.size(), gens_.size()};
  }
  const Int& coefficient(std::size_t term) const { return coeffs_[term]; }
  const std::vector<std::int32_t>& raw_exponents() const { return exps_; }
  const std::vector<Int>& raw_coefficients() const { return coeffs_; }

  // Coefficient of the given exponent vector (zero if absent). The first
  // form uses this poly's generator order; the second matches by name, with
  // unnamed generators required to have exponent zero.
  Int coefficient_of(std::span<const std::int32_t> exps) const;
  Int coefficient_of(const std::map<std::string, std::int32_t>& exps_by_name) const;

  // Canonical text rendering, descending lexicographic order:
  //   "T^3 - 3*T^1 + 3*T^-1 - T^-3", "0" for the zero polynomial.
  std::string to_string() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

private:
  std::vector<Generator> gens_;
  std::vector<std::int32_t> exps_;  // term_count x width, row-major
  std::vector<Int> coeffs_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly neg(const LaurentPoly& p);
LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
// k-fold product by repeated mul; pow(p, 0) == 1. Throws DomainError for k < 0.
LaurentPoly pow(const LaurentPoly& p, std::int64_t k);

// beta -> -beta on the exponent lattice: negates every exponent vector.
LaurentPoly substitute_negate(const LaurentPoly& p);
// g -> g^k for one named generator, k >= 1 (identity if the name is absent).
LaurentPoly substitute_power(const LaurentPoly& p, const std::string& gen, std::int64_t k);

// Terms in ascending lexicographic order as (exponent vector, coefficient).
std::vector<std::pair<std::vector<std::int32_t>, Int>> support(const LaurentPoly& p);

// Whether substitute_negate(p) == (-1)^sign_exponent * p.
bool check_symmetry(const LaurentPoly& p, std::int64_t sign_exponent);

Int sum_of_coefficients(const LaurentPoly& p);

// Rewrites p over target_gens, which must contain every generator of p.
LaurentPoly remapped(const LaurentPoly& p, const std::vector<Generator>& target_gens);
// Common basis for a binary operation: a's generators first, then b's new ones.
std::pair<LaurentPoly, LaurentPoly> unify_generators(const LaurentPoly& a, const LaurentPoly& b);

inline LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return add(a, b); }
inline LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return sub(a, b); }
inline LaurentPoly operator-(const LaurentPoly& p) { return neg(p); }
inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return mul(a, b); }

}  // namespace swcalc
