#pragma once

// Shared pieces of the serial and OpenMP convolution/filter kernels. The
// parallel kernels reuse the serial per-range routine on disjoint chunks and
// merge afterwards; exact integer arithmetic makes the merged result
// bit-identical to the serial one regardless of chunking.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "swcalc/kernels.hpp"
#include "swcalc/laurent.hpp"

namespace swcalc::kernels::detail {

using swcalc::detail::compare_rows;

struct RawTerms {
  std::vector<std::int32_t> exps;
  std::vector<Int> coeffs;
};

// Product of a's term range [lo, hi) against all of b, sorted and combined.
inline RawTerms convolve_range(const LaurentPoly& a, const LaurentPoly& b, std::size_t lo,
                               std::size_t hi) {
  const std::size_t w = a.width();
  const std::size_t nb = b.term_count();
  const std::size_t total = (hi - lo) * nb;
  std::vector<std::int32_t> exps(total * w);
  std::vector<Int> coeffs(total);
  std::size_t idx = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    const std::int32_t* ea = a.raw_exponents().data() + i * w;
    const Int& ca = a.coefficient(i);
    for (std::size_t j = 0; j < nb; ++j) {
      std::int32_t* dst = exps.data() + idx * w;
      const std::int32_t* eb = b.raw_exponents().data() + j * w;
      for (std::size_t g = 0; g < w; ++g) dst[g] = ea[g] + eb[g];
      coeffs[idx] = ca * b.coefficient(j);
      ++idx;
    }
  }

  std::vector<std::size_t> perm(total);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    int c = compare_rows(exps.data() + x * w, exps.data() + y * w, w);
    if (c != 0) return c < 0;
    return x < y;
  });

  RawTerms out;
  out.exps.reserve(total * w);
  out.coeffs.reserve(total);
  std::size_t i = 0;
  while (i < total) {
    const std::int32_t* key = exps.data() + perm[i] * w;
    Int acc = std::move(coeffs[perm[i]]);
    std::size_t j = i + 1;
    while (j < total && compare_rows(key, exps.data() + perm[j] * w, w) == 0) {
      acc += coeffs[perm[j]];
      ++j;
    }
    if (acc != 0) {
      out.exps.insert(out.exps.end(), key, key + w);
      out.coeffs.push_back(std::move(acc));
    }
    i = j;
  }
  return out;
}

// Merge of two sorted-combined term arrays, combining equal exponent rows.
inline RawTerms merge_combine(RawTerms x, RawTerms y, std::size_t w) {
  const std::size_t nx = x.coeffs.size();
  const std::size_t ny = y.coeffs.size();
  RawTerms out;
  out.exps.reserve((nx + ny) * w);
  out.coeffs.reserve(nx + ny);
  std::size_t i = 0, j = 0;
  while (i < nx || j < ny) {
    int c;
    if (i == nx)
      c = 1;
    else if (j == ny)
      c = -1;
    else
      c = compare_rows(x.exps.data() + i * w, y.exps.data() + j * w, w);
    if (c < 0) {
      out.exps.insert(out.exps.end(), x.exps.begin() + i * w, x.exps.begin() + (i + 1) * w);
      out.coeffs.push_back(std::move(x.coeffs[i]));
      ++i;
    } else if (c > 0) {
      out.exps.insert(out.exps.end(), y.exps.begin() + j * w, y.exps.begin() + (j + 1) * w);
      out.coeffs.push_back(std::move(y.coeffs[j]));
      ++j;
    } else {
      Int s = std::move(x.coeffs[i]);
      s += y.coeffs[j];
      if (s != 0) {
        out.exps.insert(out.exps.end(), x.exps.begin() + i * w, x.exps.begin() + (i + 1) * w);
        out.coeffs.push_back(std::move(s));
      }
      ++i;
      ++j;
    }
  }
  return out;
}

// Survivor predicate: one sign must satisfy every pairing condition at once.
inline bool survives(const std::int32_t* exps, std::size_t w, const PairingSystem& sys) {
  int eps = 0;
  const std::size_t k = sys.targets.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t* row = sys.rows.data() + i * w;
    std::int64_t dot = 0;
    for (std::size_t g = 0; g < w; ++g) dot += row[g] * exps[g];
    const std::int64_t t = sys.targets[i];
    if (t == 0) {
      if (dot != 0) return false;
    } else if (dot == t) {
      if (eps == -1) return false;
      eps = 1;
    } else if (dot == -t) {
      if (eps == 1) return false;
      eps = -1;
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace swcalc::kernels::detail
