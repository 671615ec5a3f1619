#include "swcalc/pipeline.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <set>

namespace swcalc {

namespace {

// Full polynomial replay doubles the term count per blowup; past this many
// estimated terms the geography scan reports its witnesses unverified
// instead of exhausting memory. The arithmetic cross-check still runs.
constexpr std::int64_t kVerifyTermLimit = 4'000'000;

std::int64_t estimated_terms(const ConstructionRecipe& rec, std::int64_t blowups) {
  const std::int64_t t_values = 2 * (rec.n - 2) + 4 * rec.s + 1;
  if (blowups >= 40) return kVerifyTermLimit + 1;
  return t_values << blowups;
}

RecipeStats recipe_stats_unchecked(const ConstructionRecipe& rec) {
  RecipeStats stats;
  stats.p = chain_p(rec);
  stats.chain_length = chain_for(stats.p, 1).length();
  stats.blowups = rec.s + (rec.fishtail ? 1 : 0) + rec.extra_blowups;
  // Arithmetic replay of the pipeline: surgeries leave (e, sigma) alone,
  // each blowup is (+1, -1), the blowdown of k spheres is (-k, +k).
  std::int64_t e = 12 * rec.n + rec.s + (rec.fishtail ? 1 : 0);
  std::int64_t sigma = -8 * rec.n - rec.s - (rec.fishtail ? 1 : 0);
  e -= stats.chain_length;
  sigma += stats.chain_length;
  e += rec.extra_blowups;
  sigma -= rec.extra_blowups;
  stats.e = e;
  stats.sigma = sigma;
  stats.chi_h = (e + sigma) / 4;
  stats.c1sq = 3 * sigma + 2 * e;
  return stats;
}

// Feasible zero-extra-blowup recipes at this n, default twist parameter 2.
struct BaseRecipe {
  std::int64_t c1sq;
  ConstructionRecipe rec;
};

std::vector<BaseRecipe> feasible_bases(std::int64_t n) {
  std::vector<BaseRecipe> bases;
  for (std::int64_t s = 0; s <= 2 * n - 1; ++s) {
    for (bool fishtail : {false, true}) {
      ConstructionRecipe rec{n, s, std::vector<std::int64_t>(static_cast<std::size_t>(s), 2),
                             fishtail, 0};
      try {
        validate(rec);
      } catch (const DomainError&) {
        continue;
      }
      bases.push_back({recipe_stats_unchecked(rec).c1sq, rec});
    }
  }
  std::sort(bases.begin(), bases.end(), [](const BaseRecipe& x, const BaseRecipe& y) {
    if (x.c1sq != y.c1sq) return x.c1sq < y.c1sq;
    return x.rec.s < y.rec.s;
  });
  return bases;
}

}  // namespace

std::int64_t chain_p(const ConstructionRecipe& rec) {
  return rec.fishtail ? rec.n + 4 * rec.s : rec.n + 4 * rec.s - 2;
}

void validate(const ConstructionRecipe& rec) {
  if (rec.n < 3) throw DomainError("recipe: n must be >= 3");
  if (rec.s < 0 || rec.s > 2 * rec.n - 1)
    throw DomainError("recipe: s must lie in [0, 2n-1], one surgery per I_2 node");
  if (static_cast<std::int64_t>(rec.r.size()) != rec.s)
    throw DomainError("recipe: need exactly s = " + std::to_string(rec.s) +
                      " twist parameters, got " + std::to_string(rec.r.size()));
  for (std::int64_t r : rec.r)
    if (r < 1) throw DomainError("recipe: twist parameters must be >= 1");
  if (rec.extra_blowups < 0) throw DomainError("recipe: extra_blowups must be >= 0");
  const std::int64_t p = chain_p(rec);
  if (p < 2)
    throw DomainError("recipe: blowdown order p = " + std::to_string(p) + " must be >= 2");
  if (p - 2 > 8 * rec.n - 1)
    throw DomainError("recipe: chain needs " + std::to_string(p - 2) +
                      " interior spheres, the necklace offers at most " +
                      std::to_string(8 * rec.n - 1));
}

RecipeStats recipe_stats(const ConstructionRecipe& rec) {
  validate(rec);
  return recipe_stats_unchecked(rec);
}

ConstructionResult build(const ConstructionRecipe& rec) {
  validate(rec);
  ManifoldState m = elliptic_surface(rec.n);
  for (std::int64_t i = 0; i < rec.s; ++i)
    m = knot_surgery_double_node(m, twist_knot_alexander(rec.r[static_cast<std::size_t>(i)]));
  for (std::int64_t i = 0; i < rec.s; ++i) m = blow_up(m, BlowupKind::section_double_point);
  if (rec.fishtail) {
    m = blow_up(m, BlowupKind::fishtail);
    m = smooth_with_fishtail(m);
  }
  for (std::int64_t i = 0; i < rec.extra_blowups; ++i) m = blow_up(m, BlowupKind::free_point);

  Chain chain = chain_for(chain_p(rec), 1);
  std::vector<ConfigSphere> spheres;
  spheres.reserve(static_cast<std::size_t>(chain.length()));
  spheres.push_back(section_config_sphere(m));
  for (std::int64_t i = 1; i < chain.length(); ++i) spheres.push_back(necklace_interior_sphere());
  m = rational_blowdown(m, chain, spheres);

  ConstructionResult result;
  result.recipe = rec;
  result.verdict = symplectic_verdict(m);
  const LaurentPoly& sw = m.sw();
  if (!sw.is_zero()) {
    const std::size_t w = sw.width();
    const std::int32_t t_max = sw.exponents(sw.term_count() - 1)[0];
    result.top_value_abs = abs(sw.coefficient(sw.term_count() - 1));
    for (std::size_t t = sw.term_count(); t-- > 0;) {
      auto exps = sw.exponents(t);
      if (exps[0] != t_max) break;
      HomologyClass cls;
      cls.t_coeff = exps[0];
      cls.e_coeffs.assign(w - 1, 0);
      for (std::size_t g = 1; g < w; ++g) cls.e_coeffs[g - 1] = exps[g];
      result.top_classes.push_back(std::move(cls));
    }
    std::reverse(result.top_classes.begin(), result.top_classes.end());
  }
  result.state = std::move(m);
  return result;
}

ConstructionRecipe optimize(std::int64_t n) {
  if (n < 3) throw DomainError("optimize: n must be >= 3");
  const std::vector<BaseRecipe> bases = feasible_bases(n);
  if (bases.empty()) throw InternalError("optimize: no feasible recipe");  // unreachable, s=0 fits
  return bases.back().rec;  // sorted ascending by c1^2; maxima are unique
}

std::vector<GeographyPoint> geography(std::int64_t n, std::int64_t floor_c1sq) {
  if (n < 3) throw DomainError("geography: n must be >= 3");
  const std::vector<BaseRecipe> bases = feasible_bases(n);
  const std::int64_t c_max = bases.back().c1sq;
  if (floor_c1sq > c_max)
    throw DomainError("geography: floor " + std::to_string(floor_c1sq) +
                      " exceeds the maximum c1^2 = " + std::to_string(c_max));

  const std::int64_t count = c_max - floor_c1sq + 1;
  std::vector<GeographyPoint> points(static_cast<std::size_t>(count));
  std::exception_ptr failure = nullptr;

  // Independent witnesses; results land at fixed indices, so the scan order
  // never shows. Each replay is single-threaded under the hood.
#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < static_cast<long>(count); ++idx) {
    try {
      const std::int64_t c = floor_c1sq + idx;
      // Smallest feasible base >= c minimizes the extra blowups.
      const BaseRecipe* pick = nullptr;
      for (const BaseRecipe& base : bases) {
        if (base.c1sq >= c) {
          pick = &base;
          break;
        }
      }
      if (pick == nullptr) throw InternalError("geography: no base recipe above floor");
      ConstructionRecipe rec = pick->rec;
      rec.extra_blowups = pick->c1sq - c;

      GeographyPoint point;
      point.chi_h = n;
      point.c1sq = c;
      point.witness = rec;
      const RecipeStats stats = recipe_stats_unchecked(rec);
      const bool ok = stats.c1sq == c && stats.chi_h == n;
      if (ok && estimated_terms(rec, stats.blowups) <= kVerifyTermLimit) {
        const ConstructionResult replay = build(rec);
        point.verified = replay.state.c1_squared() == c && replay.state.chi_h() == n &&
                         !replay.state.sw().is_zero();
      } else {
        point.verified = false;  // arithmetic check only; replay would be too large
      }
      points[static_cast<std::size_t>(idx)] = std::move(point);
    } catch (...) {
#pragma omp critical(swcalc_geography_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return points;
}

DistinctnessCertificate distinctness_certificate(std::int64_t n, std::int64_t s, bool fishtail,
                                                 std::int64_t extra_blowups,
                                                 const std::vector<std::int64_t>& r_values) {
  if (r_values.empty()) throw DomainError("certificate: need at least one twist parameter");
  std::set<std::int64_t> seen;
  for (std::int64_t r : r_values) {
    if (r < 2)
      throw DomainError("certificate: twist parameter " + std::to_string(r) +
                        " gives a fibered (monic) knot; distinctness needs r >= 2");
    if (!seen.insert(r).second)
      throw DomainError("certificate: twist parameters must be pairwise distinct");
  }
  // Reject an infeasible frame before the parallel section.
  validate(ConstructionRecipe{n, s, std::vector<std::int64_t>(static_cast<std::size_t>(s),
                                                              r_values.front()),
                              fishtail, extra_blowups});

  DistinctnessCertificate cert;
  cert.n = n;
  cert.s = s;
  cert.fishtail = fishtail;
  cert.extra_blowups = extra_blowups;
  cert.entries.resize(r_values.size());
  std::exception_ptr failure = nullptr;

#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(r_values.size()); ++i) {
    try {
      const std::int64_t r = r_values[static_cast<std::size_t>(i)];
      ConstructionRecipe rec{n, s, std::vector<std::int64_t>(static_cast<std::size_t>(s), r),
                             fishtail, extra_blowups};
      const ConstructionResult result = build(rec);
      CertificateEntry entry;
      entry.r = r;
      entry.top_value_abs = result.top_value_abs;
      entry.e = result.state.e();
      entry.sigma = result.state.signature();
      entry.b2_plus = result.state.b2_plus();
      entry.simply_connected = result.state.simply_connected();
      entry.verdict = result.verdict;
      cert.entries[static_cast<std::size_t>(i)] = std::move(entry);
    } catch (...) {
#pragma omp critical(swcalc_certificate_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  cert.fingerprints_match = true;
  for (const CertificateEntry& entry : cert.entries) {
    const CertificateEntry& first = cert.entries.front();
    if (entry.e != first.e || entry.sigma != first.sigma || entry.b2_plus != first.b2_plus ||
        entry.simply_connected != first.simply_connected)
      cert.fingerprints_match = false;
  }
  std::set<Int> values;
  for (const CertificateEntry& entry : cert.entries) values.insert(entry.top_value_abs);
  cert.pairwise_distinct = values.size() == cert.entries.size();
  return cert;
}

}  // namespace swcalc
