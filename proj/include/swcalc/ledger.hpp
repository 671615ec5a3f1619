#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swcalc/errors.hpp"
#include "swcalc/laurent.hpp"
#include "swcalc/plumbing.hpp"

// The manifold ledger: an exact record of a simply connected 4-manifold under
// surgery. Characteristic numbers are tracked as integers, the Seiberg-Witten
// invariant as a Laurent polynomial over the fiber class T and exceptional
// classes E1..Em, and the surgered section as an explicit homology class.
// Every operation is a pure function from state to state and re-checks the
// charge-conjugation symmetry sw(-beta) = (-1)^{chi_h} sw(beta) on its result.

namespace swcalc {

// Element of H_2 in the basis (T; E1..Em; S): T the fiber class (T.T = 0),
// E_j the exceptional classes (E_i.E_j = -delta_ij), S the original section
// (S.S = -n, S.T = 1, S.E_j = 0).
struct HomologyClass {
  std::int64_t t_coeff = 0;
  std::vector<std::int64_t> e_coeffs;
  std::int64_t s_coeff = 0;

  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

// The pseudo-section: starts as S, gains -2E per blown-up double point and
// +T - 2E per smoothed blown-up fishtail.
struct SectionRecord {
  HomologyClass cls;
  std::int64_t self_intersection = 0;
  std::int64_t double_points = 0;  // nodes available for blowup
};

// Fibration resources still unused by surgery.
struct Resources {
  std::int64_t i2_nodes_left = 0;          // double nodes hosting knot surgery
  std::int64_t fishtail_fibers_left = 0;
  std::int64_t necklace_spheres_left = 0;  // spheres of the I_{8n} necklace
  friend bool operator==(const Resources&, const Resources&) = default;
};

// One sphere of a rational-blowdown configuration: |self-intersection| and
// its pairings against the Seiberg-Witten generator basis (absent names
// pair to zero).
struct ConfigSphere {
  std::int64_t self_int_abs = 0;
  std::map<std::string, std::int64_t> pairing;
};

enum class BlowupKind { section_double_point, fishtail, free_point };
enum class SymplecticVerdict { nonsymplectic, unknown };

class ManifoldState {
public:
  std::int64_t e() const { return e_; }
  std::int64_t signature() const { return sigma_; }
  std::int64_t b2_plus() const { return b2_plus_; }
  std::int64_t chi_h() const { return (e_ + sigma_) / 4; }
  std::int64_t c1_squared() const { return 3 * sigma_ + 2 * e_; }
  bool simply_connected() const { return simply_connected_; }
  const LaurentPoly& sw() const { return sw_; }
  const Resources& resources() const { return resources_; }
  const std::optional<SectionRecord>& section() const { return section_; }
  std::int64_t blowup_count() const { return blowup_count_; }
  std::int64_t pending_fishtails() const {
    return static_cast<std::int64_t>(pending_fishtail_es_.size());
  }
  bool used_nonmonic_polynomial() const { return used_nonmonic_; }
  bool blown_down() const { return blown_down_; }
  const std::vector<std::string>& history() const { return history_; }

  friend ManifoldState elliptic_surface(std::int64_t n);
  friend ManifoldState knot_surgery_double_node(const ManifoldState& m, const LaurentPoly& delta);
  friend ManifoldState blow_up(const ManifoldState& m, BlowupKind kind);
  friend ManifoldState smooth_with_fishtail(const ManifoldState& m);
  friend ManifoldState rational_blowdown(const ManifoldState& m, const Chain& chain,
                                         const std::vector<ConfigSphere>& spheres);

private:
  std::int64_t e_ = 0;
  std::int64_t sigma_ = 0;
  std::int64_t b2_plus_ = 0;
  std::int64_t c1sq_tracked_ = 0;  // must always equal 3*sigma + 2*e
  bool simply_connected_ = true;
  LaurentPoly sw_;
  Resources resources_;
  std::optional<SectionRecord> section_;
  std::vector<std::int64_t> pending_fishtail_es_;  // E index per blown-up fishtail awaiting smoothing
  std::int64_t n0_ = 0;                      // the n of the starting E(n)
  std::int64_t blowup_count_ = 0;
  std::int64_t blown_up_double_points_ = 0;
  std::int64_t smoothed_fishtails_ = 0;
  bool used_nonmonic_ = false;
  bool blown_down_ = false;
  std::vector<std::string> history_;

  void check_invariants(const char* op) const;
  void log(std::string line) { history_.push_back(std::move(line)); }
};

// The relatively minimal elliptic surface E(n) without multiple fibers,
// fibered by the canonical factorization: e = 12n, sigma = -8n,
// sw = (t - 1/t)^{n-2} in the fiber variable T, a section of square -n, and
// the fiber census {I_{8n}, (2n-1) I_2, 2 fishtails} as resources. n >= 2.
ManifoldState elliptic_surface(std::int64_t n);

// Symmetric Alexander polynomial of the r-twist knot:
//   r*t - (2r - 1) + r/t,   Delta(1) = 1, monic iff r == 1.
// r >= 1 (r == 1 is the trefoil's, the only monic one in the family).
LaurentPoly twist_knot_alexander(std::int64_t r);

// Leading coefficient (at the maximal T-exponent) has absolute value 1.
bool is_monic_alexander(const LaurentPoly& delta);

// Fintushel-Stern knot surgery in a double node: multiplies sw by
// delta(T^2), consumes one I_2 node, adds one node to the section, and
// leaves e, sigma untouched. Requires an I_2 node and b2+ > 1; delta must
// be a univariate symmetric polynomial in T with delta(1) = +-1.
ManifoldState knot_surgery_double_node(const ManifoldState& m, const LaurentPoly& delta);

// Blowup at a point: e += 1, sigma -= 1, sw *= (E_j + 1/E_j) for the new
// exceptional class. section_double_point resolves one node of the section
// (class term -2E_j, self-intersection -4); fishtail blows up the node of an
// unused fishtail fiber, leaving a pending embedded sphere of class T - 2E_j
// and square -4 for smooth_with_fishtail; free_point blows up a generic point.
ManifoldState blow_up(const ManifoldState& m, BlowupKind kind);

// Smooths the intersection of the section with one pending blown-up fishtail
// sphere: the section absorbs it (class += T - 2E_j, self-intersection -= 2,
// since the two spheres meet once in the fiber direction).
ManifoldState smooth_with_fishtail(const ManifoldState& m);

// Rational blowdown of the chain configuration: e -= k, sigma += k, b2+
// unchanged, and sw descends to the classes pairing +-(r_i - 2) with every
// configuration sphere simultaneously. Consumes the section (which must have
// self-intersection -(p+2) matching the chain end sphere) and k-1 necklace
// spheres; simple connectivity survives iff a fishtail fiber is left to undo
// the boundary twist.
ManifoldState rational_blowdown(const ManifoldState& m, const Chain& chain,
                                const std::vector<ConfigSphere>& spheres);

// Verdict by Taubes' theorem: a symplectic manifold with b2+ > 1 has
// sw(+-canonical class) = +-1, so an sw with no coefficient of absolute
// value 1 at its extreme classes (in particular one built from a non-monic
// Alexander polynomial, or with empty support) cannot be symplectic.
SymplecticVerdict symplectic_verdict(const ManifoldState& m);

struct BasicClass {
  HomologyClass cls;  // s_coeff always 0: sw lives on (T, E1..Em)
  Int value;
};

// Classes with nonzero sw coefficient, ascending in the exponent order.
std::vector<BasicClass> basic_classes(const ManifoldState& m);

// Intersection pairing in the (T, E, S) basis.
std::int64_t pair_classes(const HomologyClass& x, const HomologyClass& y, std::int64_t n);

// The two standard blowdown configuration sphere sets: interior necklace
// spheres (square -2, pairing zero with T and every E) and the end sphere
// assembled from the current section.
ConfigSphere necklace_interior_sphere();
ConfigSphere section_config_sphere(const ManifoldState& m);

}  // namespace swcalc
