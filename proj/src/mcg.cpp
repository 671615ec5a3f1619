#include "swcalc/mcg.hpp"

#include <cctype>
#include <cstdlib>

namespace swcalc {

namespace {

constexpr std::size_t kMaxExpandedLetters = 10'000'000;

char base_char(TwistBase b) { return b == TwistBase::a ? 'a' : 'b'; }

SL2Matrix letter_matrix(TwistLetter l) {
  // t_a shears along the first basis curve, t_b along the second.
  if (l.base == TwistBase::a) return {1, l.sign, 0, 1};
  return {1, 0, -l.sign, 1};
}

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  std::int64_t parse_exponent_value() {
    skip_ws();
    const std::size_t start = pos;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      negative = text[pos] == '-';
      ++pos;
    }
    std::size_t digits = 0;
    std::int64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (++digits > 18) throw WordParseError("exponent too large", start);
      value = value * 10 + (text[pos] - '0');
      ++pos;
    }
    if (digits == 0) throw WordParseError("expected integer exponent", pos);
    return negative ? -value : value;
  }

  // Returns 1 when no caret follows.
  std::int64_t parse_optional_exponent() {
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      return parse_exponent_value();
    }
    return 1;
  }

  void append_power(MCGWord& out, const MCGWord& unit, std::int64_t k, std::size_t at) {
    const MCGWord& block = k >= 0 ? unit : inverse(unit);
    const std::uint64_t reps = k >= 0 ? static_cast<std::uint64_t>(k)
                                      : static_cast<std::uint64_t>(-(k + 1)) + 1;
    if (reps != 0 && unit.size() > kMaxExpandedLetters / reps)
      throw WordParseError("expanded word too long", at);
    for (std::uint64_t i = 0; i < reps; ++i) {
      out.letters.insert(out.letters.end(), block.letters.begin(), block.letters.end());
      if (out.size() > kMaxExpandedLetters) throw WordParseError("expanded word too long", at);
    }
  }

  MCGWord parse_sequence(int depth) {
    MCGWord out;
    while (true) {
      skip_ws();
      if (pos == text.size()) break;
      const char c = text[pos];
      if (c == ')') {
        if (depth > 0) break;
        throw WordParseError("unmatched ')'", pos);
      }
      const std::size_t at = pos;
      if (c == '(') {
        ++pos;
        MCGWord sub = parse_sequence(depth + 1);
        skip_ws();
        if (pos == text.size() || text[pos] != ')') throw WordParseError("unclosed '('", at);
        ++pos;
        append_power(out, sub, parse_optional_exponent(), at);
      } else if (c == 'a' || c == 'b' || c == 'A' || c == 'B') {
        ++pos;
        TwistLetter letter{c == 'a' || c == 'A' ? TwistBase::a : TwistBase::b,
                           static_cast<std::int8_t>(std::isupper(static_cast<unsigned char>(c)) ? -1 : 1)};
        MCGWord unit;
        unit.letters.push_back(letter);
        append_power(out, unit, parse_optional_exponent(), at);
      } else {
        throw WordParseError(std::string("unexpected character '") + c + "'", pos);
      }
    }
    return out;
  }
};

}  // namespace

std::string MCGWord::render() const {
  if (letters.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const std::int64_t exp = static_cast<std::int64_t>(j - i) * letters[i].sign;
    if (!out.empty()) out += ' ';
    out += base_char(letters[i].base);
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

MCGWord parse_word(std::string_view text) {
  Parser parser{text};
  return parser.parse_sequence(0);
}

MCGWord concat(const MCGWord& x, const MCGWord& y) {
  MCGWord out = x;
  out.letters.insert(out.letters.end(), y.letters.begin(), y.letters.end());
  return out;
}

MCGWord inverse(const MCGWord& w) {
  MCGWord out;
  out.letters.reserve(w.size());
  for (std::size_t i = w.size(); i-- > 0;) out.letters.push_back(w.letters[i].inverse());
  return out;
}

MCGWord twist_power(TwistBase base, std::int64_t k) {
  MCGWord out;
  const std::int8_t sign = k >= 0 ? 1 : -1;
  const std::uint64_t reps = k >= 0 ? static_cast<std::uint64_t>(k)
                                    : static_cast<std::uint64_t>(-(k + 1)) + 1;
  out.letters.assign(reps, TwistLetter{base, sign});
  return out;
}

SL2Matrix evaluate(const MCGWord& w) {
  SL2Matrix m = SL2Matrix::identity();
  for (const TwistLetter& l : w.letters) m = m * letter_matrix(l);
  return m;
}

MCGWord apply_braid(const MCGWord& w, std::size_t pos) {
  if (pos + 3 > w.size())
    throw RangeError("apply_braid: window [" + std::to_string(pos) + ", " +
                     std::to_string(pos + 3) + ") outside word of length " +
                     std::to_string(w.size()));
  const TwistLetter x = w.letters[pos];
  const TwistLetter y = w.letters[pos + 1];
  const TwistLetter z = w.letters[pos + 2];
  const bool positive = x.sign == 1 && y.sign == 1 && z.sign == 1;
  if (!positive || x.base != z.base || x.base == y.base)
    throw RewriteError("apply_braid: window at " + std::to_string(pos) +
                       " is not a braid-relation side");
  MCGWord out = w;
  out.letters[pos] = y;
  out.letters[pos + 1] = x;
  out.letters[pos + 2] = y;
  return out;
}

MCGWord conjugate_move(const MCGWord& w, std::size_t pos, std::size_t len, const MCGWord& by) {
  if (pos > w.size() || len > w.size() - pos)
    throw RangeError("conjugate_move: segment [" + std::to_string(pos) + ", " +
                     std::to_string(pos + len) + ") outside word of length " +
                     std::to_string(w.size()));
  MCGWord out;
  out.letters.reserve(w.size() + 2 * by.size());
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.begin() + pos);
  out.letters.insert(out.letters.end(), by.letters.begin(), by.letters.end());
  out.letters.insert(out.letters.end(), w.letters.begin() + pos, w.letters.begin() + pos + len);
  MCGWord inv = inverse(by);
  out.letters.insert(out.letters.end(), inv.letters.begin(), inv.letters.end());
  out.letters.insert(out.letters.end(), w.letters.begin() + pos + len, w.letters.end());
  return out;
}

MCGWord cancel_pairs(const MCGWord& w) {
  MCGWord out;
  for (const TwistLetter& l : w.letters) {
    if (!out.letters.empty() && out.letters.back() == l.inverse())
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

std::string FiberCensus::to_string() const {
  std::string out = "{";
  bool first = true;
  auto sep = [&] {
    if (!first) out += ", ";
    first = false;
  };
  if (necklace_k > 0) {
    sep();
    out += "I_" + std::to_string(necklace_k);
  }
  if (i2_count > 0) {
    sep();
    out += std::to_string(i2_count) + " I_2";
  }
  if (fishtail_count > 0) {
    sep();
    out += std::to_string(fishtail_count) + (fishtail_count == 1 ? " fishtail" : " fishtails");
  }
  out += "}";
  return out;
}

CanonicalFactorization canonical_factorization(std::int64_t n) {
  if (n < 1) throw DomainError("canonical_factorization: n must be >= 1");
  MCGWord w = twist_power(TwistBase::a, 8 * n);
  w = concat(w, twist_power(TwistBase::b, 1));
  for (std::int64_t i = 1; i <= 2 * n - 1; ++i) {
    w = concat(w, twist_power(TwistBase::a, 2 * i));
    w = concat(w, twist_power(TwistBase::b, 2));
    w = concat(w, twist_power(TwistBase::a, -2 * i));
  }
  w = concat(w, twist_power(TwistBase::a, 4 * n));
  w = concat(w, twist_power(TwistBase::b, 1));
  w = concat(w, twist_power(TwistBase::a, -4 * n));
  return {std::move(w), FiberCensus{8 * n, 2 * n - 1, 2}};
}

FiberCensus classify_fibers(const MCGWord& w) {
  if (w.empty()) throw UnclassifiableError("classify_fibers: empty word");
  struct Token {
    TwistBase base;
    std::int8_t sign;
    std::int64_t count;
  };
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w.letters[j] == w.letters[i]) ++j;
    tokens.push_back({w.letters[i].base, w.letters[i].sign, static_cast<std::int64_t>(j - i)});
    i = j;
  }

  std::vector<std::int64_t> blocks;
  std::size_t t = 0;
  while (t < tokens.size()) {
    const Token& tok = tokens[t];
    if (tok.sign < 0)
      throw UnclassifiableError("classify_fibers: left-handed twist outside a conjugator");
    const bool conjugated = t + 2 < tokens.size() && tokens[t + 1].sign > 0 &&
                            tokens[t + 1].base != tok.base && tokens[t + 2].base == tok.base &&
                            tokens[t + 2].sign < 0 && tokens[t + 2].count == tok.count;
    if (conjugated) {
      blocks.push_back(tokens[t + 1].count);
      t += 3;
    } else {
      blocks.push_back(tok.count);
      t += 1;
    }
  }

  FiberCensus census;
  for (std::int64_t k : blocks) {
    if (k >= 3) {
      if (census.necklace_k != 0)
        throw UnclassifiableError("classify_fibers: more than one block of size >= 3");
      census.necklace_k = k;
    } else if (k == 2) {
      ++census.i2_count;
    } else {
      ++census.fishtail_count;
    }
  }
  return census;
}

}  // namespace swcalc
