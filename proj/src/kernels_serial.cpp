#include <cassert>

#include "kernels_common.hpp"
#include "swcalc/kernels.hpp"

namespace swcalc::kernels {

LaurentPoly mul_serial(const LaurentPoly& a, const LaurentPoly& b) {
  assert(a.generators() == b.generators());
  assert(!a.is_zero() && !b.is_zero());
  detail::RawTerms terms = detail::convolve_range(a, b, 0, a.term_count());
  return LaurentPoly::from_canonical(a.generators(), std::move(terms.exps),
                                     std::move(terms.coeffs));
}

LaurentPoly filter_survivors_serial(const LaurentPoly& p, const PairingSystem& sys) {
  assert(sys.width == p.width());
  assert(sys.rows.size() == sys.targets.size() * sys.width);
  const std::size_t w = p.width();
  std::vector<std::int32_t> exps;
  std::vector<Int> coeffs;
  for (std::size_t t = 0; t < p.term_count(); ++t) {
    const std::int32_t* row = p.raw_exponents().data() + t * w;
    if (detail::survives(row, w, sys)) {
      exps.insert(exps.end(), row, row + w);
      coeffs.push_back(p.coefficient(t));
    }
  }
  return LaurentPoly::from_canonical(p.generators(), std::move(exps), std::move(coeffs));
}

}  // namespace swcalc::kernels
