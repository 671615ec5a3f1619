// Times the serial reference kernels against their OpenMP variants on
// realistic workloads: the Seiberg-Witten polynomial of a heavily blown-up
// knot-surgered E(n) (convolution) and the survivor filter of its rational
// blowdown. Results must agree bit for bit; the tool reports wall times and
// the speedup, and fails loudly on any mismatch.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "swcalc/kernels.hpp"
#include "swcalc/laurent.hpp"
#include "swcalc/ledger.hpp"

namespace {

double now_seconds() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

// sw-shaped workload: (t - 1/t)^(n-2) * delta(t^2)^s * prod_j (E_j + 1/E_j).
swcalc::LaurentPoly workload(std::int64_t n, std::int64_t s, std::int64_t blowups) {
  using namespace swcalc;
  const std::vector<Generator> t_basis{{"T"}};
  LaurentPoly p = pow(LaurentPoly::monomial(t_basis, {1}, 1) -
                          LaurentPoly::monomial(t_basis, {-1}, 1),
                      n - 2);
  const LaurentPoly delta = twist_knot_alexander(3);
  LaurentPoly doubled = substitute_power(delta, "T", 2);
  for (std::int64_t i = 0; i < s; ++i) p = mul(p, doubled);
  for (std::int64_t j = 1; j <= blowups; ++j) {
    const std::vector<Generator> e{{"E" + std::to_string(j)}};
    p = mul(p, LaurentPoly::monomial(e, {1}, 1) + LaurentPoly::monomial(e, {-1}, 1));
  }
  return p;
}

struct Timing {
  double serial = 0;
  double parallel = 0;
};

template <typename SerialFn, typename ParallelFn>
Timing time_pair(SerialFn serial_fn, ParallelFn parallel_fn, int repeats) {
  Timing t;
  auto reference = serial_fn();
  double t0 = now_seconds();
  for (int i = 0; i < repeats; ++i) reference = serial_fn();
  t.serial = (now_seconds() - t0) / repeats;

  auto candidate = parallel_fn();
  t0 = now_seconds();
  for (int i = 0; i < repeats; ++i) candidate = parallel_fn();
  t.parallel = (now_seconds() - t0) / repeats;

  if (!(reference == candidate)) {
    std::cerr << "FATAL: serial and parallel kernels disagree\n";
    std::exit(1);
  }
  return t;
}

void report(const std::string& label, std::size_t terms, const Timing& t) {
  std::cout << label << ": " << terms << " terms, serial " << t.serial * 1e3 << " ms, parallel "
            << t.parallel * 1e3 << " ms, speedup " << t.serial / t.parallel << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::int64_t blowups = 16;
  int repeats = 3;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--blowups" && i + 1 < argc)
      blowups = std::stoll(argv[++i]);
    else if (arg == "--repeats" && i + 1 < argc)
      repeats = std::stoi(argv[++i]);
    else {
      std::cerr << "usage: swcalc-bench [--blowups N] [--repeats K]\n";
      return 2;
    }
  }

#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP; parallel variants run serially\n";
#endif

  using namespace swcalc;
  const LaurentPoly big = workload(3, 5, blowups);
  const std::vector<Generator> e_next{{"E" + std::to_string(blowups + 1)}};
  const LaurentPoly binomial = remapped(
      LaurentPoly::monomial(e_next, {1}, 1) + LaurentPoly::monomial(e_next, {-1}, 1),
      [&] {
        std::vector<Generator> gens = big.generators();
        gens.push_back(e_next[0]);
        return gens;
      }());
  const LaurentPoly wide = remapped(big, binomial.generators());

  const Timing mul_t = time_pair([&] { return kernels::mul_serial(wide, binomial); },
                                 [&] { return kernels::mul_parallel(wide, binomial); }, repeats);
  report("convolution", wide.term_count() * 2, mul_t);

  // Survivor filter for the blowdown of C_{23,1} against the same lattice.
  kernels::PairingSystem sys;
  sys.width = wide.width();
  const std::int64_t interior = 21;
  sys.targets.assign(static_cast<std::size_t>(interior), 0);
  sys.targets.push_back(23);
  sys.rows.assign(static_cast<std::size_t>(interior + 1) * sys.width, 0);
  // End-sphere row: T pairs 1, the six section blowups pair 2.
  std::int64_t* end_row = sys.rows.data() + static_cast<std::size_t>(interior) * sys.width;
  end_row[0] = 1;
  for (std::size_t g = 1; g <= 6 && g < sys.width; ++g) end_row[g] = 2;

  const Timing filter_t =
      time_pair([&] { return kernels::filter_survivors_serial(wide, sys); },
                [&] { return kernels::filter_survivors_parallel(wide, sys); }, repeats);
  report("survivor filter", wide.term_count(), filter_t);
  return 0;
}
