#pragma once

#include <cstdint>
#include <vector>

#include "swcalc/ledger.hpp"
#include "swcalc/plumbing.hpp"

// End-to-end constructions: E(n) -> s knot surgeries in double nodes ->
// section blowups (plus an optional smoothed fishtail) -> rational blowdown
// of the resulting chain -> optional extra blowups. The optimizer and the
// geography scan search this recipe space.

namespace swcalc {

struct ConstructionRecipe {
  std::int64_t n = 3;
  std::int64_t s = 0;                 // number of knot surgeries
  std::vector<std::int64_t> r;        // twist parameters, one per surgery
  bool fishtail = false;              // smooth a fishtail into the section
  std::int64_t extra_blowups = 0;     // free blowups before the blowdown

  friend bool operator==(const ConstructionRecipe&, const ConstructionRecipe&) = default;
};

// Throws DomainError when the recipe violates a resource bound: n >= 3,
// 0 <= s <= 2n-1, r.size() == s with all r_i >= 1, extra_blowups >= 0,
// chain order p >= 2, and p - 2 <= 8n - 1 interior spheres available.
void validate(const ConstructionRecipe& rec);

// Order of the blowdown sphere: p = n + 4s (fishtail) or n + 4s - 2.
std::int64_t chain_p(const ConstructionRecipe& rec);

// Characteristic numbers of the recipe by arithmetic replay of the same
// operation sequence (no polynomial work), used by the search loops where a
// full Seiberg-Witten build would be exponential in the blowup count.
struct RecipeStats {
  std::int64_t e = 0;
  std::int64_t sigma = 0;
  std::int64_t chi_h = 0;
  std::int64_t c1sq = 0;
  std::int64_t p = 0;
  std::int64_t chain_length = 0;
  std::int64_t blowups = 0;
};
RecipeStats recipe_stats(const ConstructionRecipe& rec);

struct ConstructionResult {
  ManifoldState state;
  ConstructionRecipe recipe;
  std::vector<HomologyClass> top_classes;  // survivors of maximal T-exponent
  Int top_value_abs = 0;                   // |sw| there; 0 when sw == 0
  SymplecticVerdict verdict = SymplecticVerdict::unknown;
};

// Runs the full ledger pipeline for the recipe.
ConstructionResult build(const ConstructionRecipe& rec);

// The recipe maximizing c1^2 at fixed chi_h = n (extra_blowups = 0; every
// free blowup strictly lowers c1^2).
ConstructionRecipe optimize(std::int64_t n);

struct GeographyPoint {
  std::int64_t chi_h = 0;
  std::int64_t c1sq = 0;
  ConstructionRecipe witness;
  bool verified = false;  // witness replayed through build()
};

// All values floor_c1sq <= c1^2 <= optimize(n).c1sq with a minimal-blowup
// witness recipe each, replayed through the full pipeline. Independent
// witnesses may be evaluated concurrently; results are ordered by c1^2.
std::vector<GeographyPoint> geography(std::int64_t n, std::int64_t floor_c1sq);

struct CertificateEntry {
  std::int64_t r = 0;
  Int top_value_abs = 0;
  std::int64_t e = 0;
  std::int64_t sigma = 0;
  std::int64_t b2_plus = 0;
  bool simply_connected = false;
  SymplecticVerdict verdict = SymplecticVerdict::unknown;
};

struct DistinctnessCertificate {
  std::int64_t n = 0;
  std::int64_t s = 0;
  bool fishtail = false;
  std::int64_t extra_blowups = 0;
  std::vector<CertificateEntry> entries;
  bool fingerprints_match = false;   // identical (e, sigma, b2+, pi_1)
  bool pairwise_distinct = false;    // distinct |sw| top values
  bool pass() const { return fingerprints_match && pairwise_distinct; }
};

// Builds one manifold per twist parameter r (all >= 2, pairwise distinct)
// with the same (n, s, fishtail, extra_blowups) frame and certifies that the
// results are homeomorphic-looking (same fingerprint) yet pairwise
// non-diffeomorphic (distinct top Seiberg-Witten values r^s).
DistinctnessCertificate distinctness_certificate(std::int64_t n, std::int64_t s, bool fishtail,
                                                 std::int64_t extra_blowups,
                                                 const std::vector<std::int64_t>& r_values);

}  // namespace swcalc
