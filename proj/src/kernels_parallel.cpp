#include <algorithm>
#include <cassert>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kernels_common.hpp"
#include "swcalc/kernels.hpp"

namespace swcalc::kernels {

namespace {

int available_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

std::size_t parallel_threshold() { return std::size_t{1} << 15; }

LaurentPoly mul_parallel(const LaurentPoly& a, const LaurentPoly& b) {
  assert(a.generators() == b.generators());
  assert(!a.is_zero() && !b.is_zero());
  const std::size_t na = a.term_count();
  const std::size_t chunks = std::max<std::size_t>(
      1, std::min<std::size_t>(static_cast<std::size_t>(available_threads()), na));
  std::vector<detail::RawTerms> parts(chunks);

  // Chunk boundaries depend only on (na, chunks), never on thread timing.
#pragma omp parallel for schedule(static)
  for (long c = 0; c < static_cast<long>(chunks); ++c) {
    const std::size_t lo = na * static_cast<std::size_t>(c) / chunks;
    const std::size_t hi = na * (static_cast<std::size_t>(c) + 1) / chunks;
    parts[c] = detail::convolve_range(a, b, lo, hi);
  }

  // Deterministic sequential merge; exact integer addition makes the result
  // independent of the chunk count.
  detail::RawTerms acc = std::move(parts[0]);
  for (std::size_t c = 1; c < chunks; ++c)
    acc = detail::merge_combine(std::move(acc), std::move(parts[c]), a.width());
  return LaurentPoly::from_canonical(a.generators(), std::move(acc.exps), std::move(acc.coeffs));
}

LaurentPoly filter_survivors_parallel(const LaurentPoly& p, const PairingSystem& sys) {
  assert(sys.width == p.width());
  assert(sys.rows.size() == sys.targets.size() * sys.width);
  const std::size_t w = p.width();
  const std::size_t n = p.term_count();
  const std::size_t chunks = std::max<std::size_t>(
      1, std::min<std::size_t>(static_cast<std::size_t>(available_threads()) * 4, std::max<std::size_t>(n, 1)));
  std::vector<std::vector<std::size_t>> kept(chunks);

#pragma omp parallel for schedule(static)
  for (long c = 0; c < static_cast<long>(chunks); ++c) {
    const std::size_t lo = n * static_cast<std::size_t>(c) / chunks;
    const std::size_t hi = n * (static_cast<std::size_t>(c) + 1) / chunks;
    for (std::size_t t = lo; t < hi; ++t)
      if (detail::survives(p.raw_exponents().data() + t * w, w, sys)) kept[c].push_back(t);
  }

  std::vector<std::int32_t> exps;
  std::vector<Int> coeffs;
  for (const auto& part : kept) {  // chunk order == ascending term order
    for (std::size_t t : part) {
      const std::int32_t* row = p.raw_exponents().data() + t * w;
      exps.insert(exps.end(), row, row + w);
      coeffs.push_back(p.coefficient(t));
    }
  }
  return LaurentPoly::from_canonical(p.generators(), std::move(exps), std::move(coeffs));
}

LaurentPoly mul_dispatch(const LaurentPoly& a, const LaurentPoly& b) {
  const std::size_t na = a.term_count();
  const std::size_t nb = b.term_count();
  const bool big = nb != 0 && na >= parallel_threshold() / nb;
  if (big && available_threads() > 1) return mul_parallel(a, b);
  return mul_serial(a, b);
}

LaurentPoly filter_survivors(const LaurentPoly& p, const PairingSystem& sys) {
  if (p.term_count() >= parallel_threshold() && available_threads() > 1)
    return filter_survivors_parallel(p, sys);
  return filter_survivors_serial(p, sys);
}

}  // namespace swcalc::kernels
