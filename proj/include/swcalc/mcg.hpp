#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "swcalc/errors.hpp"
#include "swcalc/laurent.hpp"

// Words in the genus-1 mapping class group on the two right-handed Dehn
// twists t_a, t_b, together with the SL(2,Z) representation used as the
// equality oracle for rewriting moves. A word spells a torus Lefschetz
// fibration over the disk; classify_fibers reads off its singular fibers.

namespace swcalc {

enum class TwistBase : std::uint8_t { a, b };

struct TwistLetter {
  TwistBase base = TwistBase::a;
  std::int8_t sign = 1;  // +1 right-handed twist, -1 its inverse

  TwistLetter inverse() const { return {base, static_cast<std::int8_t>(-sign)}; }
  friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
};

struct MCGWord {
  std::vector<TwistLetter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  // Run-length text form, e.g. "a^8 b a^2 b^2 a^-2".
  std::string render() const;
  friend bool operator==(const MCGWord&, const MCGWord&) = default;
};

// 2x2 integer matrix of determinant 1; entries grow exponentially in word
// length, hence Int entries.
struct SL2Matrix {
  Int a = 1, b = 0, c = 0, d = 1;  // [[a, b], [c, d]]

  static SL2Matrix identity() { return {}; }
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
  Int det() const { return a * d - b * c; }
  friend SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const SL2Matrix&, const SL2Matrix&) = default;
};

// Grammar: letters a, b (right-handed) and A, B (inverses), optional integer
// exponents (a^-3), parenthesized subwords with exponents ((ab)^6), and
// whitespace. Throws WordParseError with the offending input position.
MCGWord parse_word(std::string_view text);

// Concatenation and letterwise helpers.
MCGWord concat(const MCGWord& x, const MCGWord& y);
MCGWord inverse(const MCGWord& w);
// a^k / b^k with k of either sign (empty for k == 0).
MCGWord twist_power(TwistBase base, std::int64_t k);

// Evaluation under t_a -> [[1,1],[0,1]], t_b -> [[1,0],[-1,1]].
SL2Matrix evaluate(const MCGWord& w);

// Rewrites the three-letter window at pos by the braid relation
// aba <-> bab (positive letters only). RangeError if the window does not
// fit, RewriteError if it is not a braid-relation side.
MCGWord apply_braid(const MCGWord& w, std::size_t pos);

// Replaces the segment [pos, pos+len) by  by . segment . by^-1 ; len == 0
// inserts the canceling pair by . by^-1 at pos. RangeError on bad windows.
MCGWord conjugate_move(const MCGWord& w, std::size_t pos, std::size_t len, const MCGWord& by);

// Free reduction: repeatedly removes adjacent inverse pairs.
MCGWord cancel_pairs(const MCGWord& w);

// Singular-fiber census of a factorization: one necklace of necklace_k
// right-handed twists about the same curve, i2_count conjugated pairs, and
// fishtail_count single twists.
struct FiberCensus {
  std::int64_t necklace_k = 0;
  std::int64_t i2_count = 0;
  std::int64_t fishtail_count = 0;

  std::int64_t right_handed_twists() const { return necklace_k + 2 * i2_count + fishtail_count; }
  std::string to_string() const;
  friend bool operator==(const FiberCensus&, const FiberCensus&) = default;
};

struct CanonicalFactorization {
  MCGWord word;
  FiberCensus census;
};

// The canonical positive factorization of (t_a t_b)^{6n}:
//   a^{8n} b (a^2 b^2 a^-2)(a^4 b^2 a^-4) ... (a^{4n-2} b^2 a^{-(4n-2)}) (a^{4n} b a^{-4n})
// with census { I_{8n} necklace, (2n-1) x I_2, 2 fishtails }. Throws
// DomainError for n < 1.
CanonicalFactorization canonical_factorization(std::int64_t n);

// Reads a census off a word made of positive twist blocks x^k, each either
// plain or conjugated as y^j x^k y^-j. The largest block is the necklace;
// k == 2 blocks are I_2 fibers, k == 1 blocks fishtails. Throws
// UnclassifiableError on stray inverse letters, empty words, or several
// blocks of size >= 3.
FiberCensus classify_fibers(const MCGWord& w);

}  // namespace swcalc
