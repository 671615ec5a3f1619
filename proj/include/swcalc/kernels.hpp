#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "swcalc/laurent.hpp"

// Hot inner loops of the calculus: polynomial convolution (every blowup and
// knot surgery multiplies the Seiberg-Witten polynomial, doubling or tripling
// its term count) and the rational-blowdown survivor filter (a linear scan of
// the full basic-class lattice). Each kernel has a serial reference
// implementation and an OpenMP variant; both produce bit-identical canonical
// results, which the tests assert and the bench target times.

namespace swcalc::kernels {

// Term-count product above which mul() dispatches to the parallel kernel.
std::size_t parallel_threshold();

// Convolution product. Both operands must already share one generator basis
// (mul() in laurent.cpp unifies before dispatching here) and be nonzero.
LaurentPoly mul_serial(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul_parallel(const LaurentPoly& a, const LaurentPoly& b);

// Pairing conditions of one rational blowdown: row i holds the intersection
// numbers of configuration sphere i against the generator basis, target i is
// r_i - 2. A term with exponent vector beta survives when a single sign
// eps in {+1,-1} satisfies rows_i . beta == eps * targets_i for every i.
struct PairingSystem {
  std::size_t width = 0;
  std::vector<std::int64_t> rows;     // row-major, targets.size() x width
  std::vector<std::int64_t> targets;
};

// Keeps exactly the surviving terms, coefficients unchanged.
LaurentPoly filter_survivors_serial(const LaurentPoly& p, const PairingSystem& sys);
LaurentPoly filter_survivors_parallel(const LaurentPoly& p, const PairingSystem& sys);

// Dispatchers used by the rest of the library: go parallel above the grain
// threshold when more than one OpenMP thread is available.
LaurentPoly mul_dispatch(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly filter_survivors(const LaurentPoly& p, const PairingSystem& sys);

}  // namespace swcalc::kernels
