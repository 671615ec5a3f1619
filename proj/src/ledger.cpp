#include "swcalc/ledger.hpp"

#include <algorithm>

#include "swcalc/kernels.hpp"
#include "swcalc/mcg.hpp"

namespace swcalc {

namespace {

std::string e_name(std::int64_t j) { return "E" + std::to_string(j); }

// The generator basis of an sw polynomial is always (T, E1, ..., Em).
std::vector<Generator> sw_basis(std::int64_t blowups) {
  std::vector<Generator> gens{{"T"}};
  for (std::int64_t j = 1; j <= blowups; ++j) gens.push_back({e_name(j)});
  return gens;
}

void require_univariate_in_t(const LaurentPoly& delta) {
  for (std::size_t g = 0; g < delta.width(); ++g) {
    if (delta.generators()[g].name == "T") continue;
    for (std::size_t t = 0; t < delta.term_count(); ++t)
      if (delta.exponents(t)[g] != 0)
        throw DomainError("knot_surgery_double_node: Alexander polynomial must be univariate in T");
  }
}

}  // namespace

void ManifoldState::check_invariants(const char* op) const {
  const std::string where(op);
  if (c1sq_tracked_ != 3 * sigma_ + 2 * e_)
    throw InternalError(where + ": tracked c1^2 " + std::to_string(c1sq_tracked_) +
                        " != 3*sigma + 2*e = " + std::to_string(3 * sigma_ + 2 * e_));
  if ((e_ + sigma_) % 4 != 0)
    throw InternalError(where + ": e + sigma not divisible by 4");
  if (sw_.generators() != sw_basis(blowup_count_))
    throw InternalError(where + ": sw generator basis out of step with blowup count");
  if (!check_symmetry(sw_, chi_h()))
    throw InternalError(where + ": charge-conjugation symmetry of sw broken");
  if (section_) {
    if (section_->self_intersection !=
        pair_classes(section_->cls, section_->cls, n0_))
      throw InternalError(where + ": section self-intersection out of step with its class");
  }
}

ManifoldState elliptic_surface(std::int64_t n) {
  if (n < 2) throw DomainError("elliptic_surface: n must be >= 2");
  ManifoldState m;
  m.n0_ = n;
  m.e_ = 12 * n;
  m.sigma_ = -8 * n;
  m.b2_plus_ = 2 * n - 1;
  m.c1sq_tracked_ = 3 * m.sigma_ + 2 * m.e_;  // 0: E(n) sits on the Noether line
  m.simply_connected_ = true;

  const std::vector<Generator> basis = sw_basis(0);
  const LaurentPoly t = LaurentPoly::monomial(basis, {1}, 1);
  const LaurentPoly t_inv = LaurentPoly::monomial(basis, {-1}, 1);
  m.sw_ = remapped(pow(t - t_inv, n - 2), basis);

  const FiberCensus census = canonical_factorization(n).census;
  m.resources_ = Resources{census.i2_count, census.fishtail_count, census.necklace_k};
  m.section_ = SectionRecord{HomologyClass{0, {}, 1}, -n, 0};
  m.log("elliptic_surface n=" + std::to_string(n));
  m.check_invariants("elliptic_surface");
  return m;
}

LaurentPoly twist_knot_alexander(std::int64_t r) {
  if (r < 1) throw DomainError("twist_knot_alexander: r must be >= 1");
  return LaurentPoly::from_terms(
      {{"T"}}, {{{1}, Int(r)}, {{0}, Int(-(2 * r - 1))}, {{-1}, Int(r)}});
}

bool is_monic_alexander(const LaurentPoly& delta) {
  if (delta.is_zero()) return false;
  return abs(delta.coefficient(delta.term_count() - 1)) == 1;
}

ManifoldState knot_surgery_double_node(const ManifoldState& m, const LaurentPoly& delta) {
  if (m.resources_.i2_nodes_left < 1)
    throw ResourceError("knot_surgery_double_node: no I_2 double node left");
  if (m.b2_plus_ <= 1)
    throw DomainError("knot_surgery_double_node: requires b2+ > 1");
  if (!m.section_)
    throw InternalError("knot_surgery_double_node: double nodes present but no section");
  require_univariate_in_t(delta);
  if (!check_symmetry(delta, 0))
    throw DomainError("knot_surgery_double_node: Alexander polynomial must be symmetric");
  Int at_one = sum_of_coefficients(delta);
  if (at_one != 1 && at_one != -1)
    throw DomainError("knot_surgery_double_node: Alexander polynomial must have |delta(1)| = 1");

  ManifoldState out = m;
  // Fiber sum with the knot's zero-surgery along the double-node torus: the
  // invariant picks up delta evaluated at the square of the fiber variable,
  // and the section gains the node smoothed into it.
  std::size_t t_idx = delta.width();
  for (std::size_t g = 0; g < delta.width(); ++g)
    if (delta.generators()[g].name == "T") t_idx = g;
  std::vector<std::pair<std::vector<std::int32_t>, Int>> collapsed;
  collapsed.reserve(delta.term_count());
  for (std::size_t t = 0; t < delta.term_count(); ++t)
    collapsed.emplace_back(
        std::vector<std::int32_t>{t_idx < delta.width() ? delta.exponents(t)[t_idx] : 0},
        delta.coefficient(t));
  const LaurentPoly doubled =
      substitute_power(LaurentPoly::from_terms(sw_basis(0), std::move(collapsed)), "T", 2);
  out.sw_ = mul(out.sw_, doubled);
  out.resources_.i2_nodes_left -= 1;
  out.section_->double_points += 1;
  if (!is_monic_alexander(delta)) out.used_nonmonic_ = true;
  out.log("knot_surgery_double_node delta=[" + delta.to_string() + "]");
  out.check_invariants("knot_surgery_double_node");
  return out;
}

ManifoldState blow_up(const ManifoldState& m, BlowupKind kind) {
  ManifoldState out = m;
  const std::int64_t j = m.blowup_count_ + 1;
  const char* label = "free_point";
  switch (kind) {
    case BlowupKind::section_double_point:
      if (!m.section_ || m.section_->double_points < 1)
        throw ResourceError("blow_up: no unresolved double point on the section");
      label = "section_double_point";
      break;
    case BlowupKind::fishtail:
      if (m.resources_.fishtail_fibers_left < 1)
        throw ResourceError("blow_up: no fishtail fiber left");
      label = "fishtail";
      break;
    case BlowupKind::free_point:
      break;
  }

  out.e_ += 1;
  out.sigma_ -= 1;
  out.c1sq_tracked_ -= 1;
  out.blowup_count_ = j;
  // Blowup formula: the invariant of X # CP^2-bar picks up (E + 1/E).
  const std::vector<Generator> egen{{e_name(j)}};
  const LaurentPoly factor =
      LaurentPoly::monomial(egen, {1}, 1) + LaurentPoly::monomial(egen, {-1}, 1);
  out.sw_ = mul(out.sw_, factor);

  if (out.section_) out.section_->cls.e_coeffs.resize(static_cast<std::size_t>(j), 0);
  if (kind == BlowupKind::section_double_point) {
    out.section_->cls.e_coeffs[static_cast<std::size_t>(j) - 1] = -2;
    out.section_->self_intersection -= 4;
    out.section_->double_points -= 1;
    out.blown_up_double_points_ += 1;
  } else if (kind == BlowupKind::fishtail) {
    // The fishtail's node is resolved: what remains is an embedded sphere of
    // class T - 2E_j and square -4, held pending until it is smoothed into
    // the section. The section itself is untouched here.
    out.resources_.fishtail_fibers_left -= 1;
    out.pending_fishtail_es_.push_back(j);
  }
  out.log(std::string("blow_up kind=") + label + " E" + std::to_string(j));
  out.check_invariants("blow_up");
  return out;
}

ManifoldState smooth_with_fishtail(const ManifoldState& m) {
  if (m.pending_fishtail_es_.empty())
    throw ResourceError("smooth_with_fishtail: no blown-up fishtail sphere pending");
  if (!m.section_)
    throw ResourceError("smooth_with_fishtail: no section to smooth");
  ManifoldState out = m;
  const std::int64_t j = out.pending_fishtail_es_.front();
  out.pending_fishtail_es_.erase(out.pending_fishtail_es_.begin());
  // The section meets the blown-up fishtail sphere once (in the fiber class);
  // smoothing the intersection adds the classes and drops the square by 2:
  // (S' + T - 2E_j)^2 = S'^2 - 4 + 2 S'.T = S'^2 - 2.
  SectionRecord& section = *out.section_;
  section.cls.t_coeff += 1;
  if (section.cls.e_coeffs.size() < static_cast<std::size_t>(j))
    section.cls.e_coeffs.resize(static_cast<std::size_t>(j), 0);
  section.cls.e_coeffs[static_cast<std::size_t>(j) - 1] += -2;
  section.self_intersection -= 2;
  out.smoothed_fishtails_ += 1;
  out.log("smooth_with_fishtail E" + std::to_string(j));
  out.check_invariants("smooth_with_fishtail");
  return out;
}

ManifoldState rational_blowdown(const ManifoldState& m, const Chain& chain,
                                const std::vector<ConfigSphere>& spheres) {
  const std::int64_t k = chain.length();
  if (k < 1) throw DomainError("rational_blowdown: empty chain");
  if (!verify_chain(chain).pass())
    throw DomainError("rational_blowdown: chain fails verification");
  if (spheres.size() != static_cast<std::size_t>(k))
    throw DomainError("rational_blowdown: expected " + std::to_string(k) +
                      " configuration spheres, got " + std::to_string(spheres.size()));
  for (std::int64_t i = 0; i < k; ++i)
    if (spheres[static_cast<std::size_t>(i)].self_int_abs != chain.coefficients[static_cast<std::size_t>(i)])
      throw DomainError("rational_blowdown: sphere " + std::to_string(i) +
                        " does not match chain coefficient");
  if (m.b2_plus_ <= 1)
    throw DomainError("rational_blowdown: requires b2+ > 1");
  if (!m.section_)
    throw ResourceError("rational_blowdown: no section sphere for the chain end");
  if (m.section_->self_intersection != -chain.coefficients[0])
    throw DomainError("rational_blowdown: section self-intersection " +
                      std::to_string(m.section_->self_intersection) +
                      " does not match chain end sphere -" +
                      std::to_string(chain.coefficients[0]));
  if (m.section_->double_points != 0)
    throw DomainError("rational_blowdown: section still has unresolved double points");
  if (!m.pending_fishtail_es_.empty())
    throw DomainError("rational_blowdown: a blown-up fishtail sphere is still unsmoothed");
  for (std::int64_t i = 1; i < k; ++i)
    if (chain.coefficients[static_cast<std::size_t>(i)] != 2)
      throw DomainError("rational_blowdown: interior sphere of square -" +
                        std::to_string(chain.coefficients[static_cast<std::size_t>(i)]) +
                        " not available in the necklace");
  // A linear subchain of k-1 interior spheres needs the necklace cycle to
  // keep at least one sphere out, hence >= k spheres in total.
  if (m.resources_.necklace_spheres_left < k)
    throw ResourceError("rational_blowdown: necklace too short for " + std::to_string(k - 1) +
                        " interior spheres");

  ManifoldState out = m;
  out.e_ -= k;
  out.sigma_ += k;
  out.c1sq_tracked_ += k;

  // Basic-class descent: keep the classes pairing +-(r_i - 2) with every
  // configuration sphere for one common sign.
  kernels::PairingSystem sys;
  sys.width = m.sw_.width();
  sys.targets.reserve(static_cast<std::size_t>(k));
  sys.rows.assign(static_cast<std::size_t>(k) * sys.width, 0);
  for (std::int64_t i = 0; i < k; ++i) {
    const ConfigSphere& sphere = spheres[static_cast<std::size_t>(i)];
    sys.targets.push_back(chain.coefficients[static_cast<std::size_t>(i)] - 2);
    for (std::size_t g = 0; g < sys.width; ++g) {
      auto it = sphere.pairing.find(m.sw_.generators()[g].name);
      if (it != sphere.pairing.end())
        sys.rows[static_cast<std::size_t>(i) * sys.width + g] = it->second;
    }
  }
  out.sw_ = kernels::filter_survivors(m.sw_, sys);

  // The boundary twist is undone by a leftover fishtail's vanishing disk;
  // without one, simple connectivity is no longer certified.
  out.simply_connected_ = m.simply_connected_ && m.resources_.fishtail_fibers_left >= 1;
  out.resources_ = Resources{0, 0, 0};
  out.section_.reset();
  out.blown_down_ = true;
  out.log("rational_blowdown p=" + std::to_string(chain.p) + " q=" + std::to_string(chain.q) +
          " k=" + std::to_string(k) + " survivors=" + std::to_string(out.sw_.term_count()));
  out.check_invariants("rational_blowdown");
  return out;
}

SymplecticVerdict symplectic_verdict(const ManifoldState& m) {
  if (m.b2_plus() <= 1) return SymplecticVerdict::unknown;  // Taubes needs b2+ > 1
  if (m.sw().is_zero()) return SymplecticVerdict::nonsymplectic;
  if (m.used_nonmonic_polynomial()) return SymplecticVerdict::nonsymplectic;
  // A symplectic manifold has sw(+-K) = +-1 at its extreme classes.
  const Int& bottom = m.sw().coefficient(0);
  const Int& top = m.sw().coefficient(m.sw().term_count() - 1);
  if (abs(top) != 1 || abs(bottom) != 1) return SymplecticVerdict::nonsymplectic;
  return SymplecticVerdict::unknown;
}

std::vector<BasicClass> basic_classes(const ManifoldState& m) {
  std::vector<BasicClass> out;
  out.reserve(m.sw().term_count());
  const std::size_t w = m.sw().width();
  for (std::size_t t = 0; t < m.sw().term_count(); ++t) {
    auto exps = m.sw().exponents(t);
    HomologyClass cls;
    cls.t_coeff = exps[0];
    cls.e_coeffs.assign(w - 1, 0);
    for (std::size_t g = 1; g < w; ++g) cls.e_coeffs[g - 1] = exps[g];
    out.push_back({std::move(cls), m.sw().coefficient(t)});
  }
  return out;
}

std::int64_t pair_classes(const HomologyClass& x, const HomologyClass& y, std::int64_t n) {
  std::int64_t acc = x.t_coeff * y.s_coeff + x.s_coeff * y.t_coeff;  // T.S = 1
  acc -= n * x.s_coeff * y.s_coeff;                                  // S.S = -n
  const std::size_t common = std::min(x.e_coeffs.size(), y.e_coeffs.size());
  for (std::size_t i = 0; i < common; ++i) acc -= x.e_coeffs[i] * y.e_coeffs[i];
  return acc;
}

ConfigSphere necklace_interior_sphere() { return ConfigSphere{2, {}}; }

ConfigSphere section_config_sphere(const ManifoldState& m) {
  if (!m.section()) throw ResourceError("section_config_sphere: no section");
  const SectionRecord& rec = *m.section();
  ConfigSphere sphere;
  sphere.self_int_abs = -rec.self_intersection;
  // Pairings against the sw basis through the intersection form.
  if (rec.cls.s_coeff != 0) sphere.pairing["T"] = rec.cls.s_coeff;  // T.S = 1
  for (std::size_t j = 0; j < rec.cls.e_coeffs.size(); ++j)
    if (rec.cls.e_coeffs[j] != 0)
      sphere.pairing[e_name(static_cast<std::int64_t>(j) + 1)] = -rec.cls.e_coeffs[j];
  return sphere;
}

}  // namespace swcalc
