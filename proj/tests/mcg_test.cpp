#include <doctest.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <swcalc/mcg.hpp>

using namespace swcalc;

namespace {

const TwistLetter kA{TwistBase::a, 1};
const TwistLetter kB{TwistBase::b, 1};
const TwistLetter kAInv{TwistBase::a, -1};
const TwistLetter kBInv{TwistBase::b, -1};

MCGWord word_of(std::vector<TwistLetter> letters) { return MCGWord{std::move(letters)}; }

// Independent evaluation oracle: multiply the generator matrices directly.
SL2Matrix naive_evaluate(const MCGWord& w) {
  auto matrix_for = [](TwistLetter l) -> SL2Matrix {
    if (l.base == TwistBase::a) return l.sign > 0 ? SL2Matrix{1, 1, 0, 1} : SL2Matrix{1, -1, 0, 1};
    return l.sign > 0 ? SL2Matrix{1, 0, -1, 1} : SL2Matrix{1, 0, 1, 1};
  };
  SL2Matrix acc = SL2Matrix::identity();
  for (TwistLetter l : w.letters) acc = acc * matrix_for(l);
  return acc;
}

MCGWord random_word(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(0, 3);
  MCGWord w;
  const std::size_t len = len_dist(rng);
  for (std::size_t i = 0; i < len; ++i) {
    switch (letter_dist(rng)) {
      case 0: w.letters.push_back(kA); break;
      case 1: w.letters.push_back(kB); break;
      case 2: w.letters.push_back(kAInv); break;
      default: w.letters.push_back(kBInv); break;
    }
  }
  return w;
}

}  // namespace

TEST_CASE("parse_word expansions") {
  const MCGWord twelve = parse_word("(ab)^6");
  REQUIRE(twelve.size() == 12);
  for (std::size_t i = 0; i < 12; ++i)
    CHECK(twelve.letters[i] == (i % 2 == 0 ? kA : kB));

  CHECK(parse_word("a^2 B") == word_of({kA, kA, kBInv}));
  CHECK(parse_word("a^-2") == word_of({kAInv, kAInv}));
  CHECK(parse_word("A") == word_of({kAInv}));
  CHECK(parse_word("(ab)^-1") == word_of({kBInv, kAInv}));
  CHECK(parse_word("((a b)^2 B)^2") == parse_word("abab B abab B"));
  CHECK(parse_word("a^0").empty());
  CHECK(parse_word("").empty());
  CHECK(parse_word("  \t ").empty());
}

TEST_CASE("parse_word errors carry the offending position") {
  auto position_of = [](const std::string& text) -> std::size_t {
    try {
      parse_word(text);
    } catch (const WordParseError& e) {
      return e.position();
    }
    FAIL("expected WordParseError for: ", text);
    return static_cast<std::size_t>(-1);
  };
  CHECK(position_of("c") == 0);
  CHECK(position_of("ab c") == 3);
  CHECK(position_of(")") == 0);
  CHECK(position_of("(ab") == 0);
  CHECK(position_of("a^") == 2);
  CHECK(position_of("a^x") == 2);
  CHECK(position_of("a^1000000000000000000000") == 2);  // > 18 digits

  // The message names the position too.
  try {
    parse_word("ab c");
    FAIL("expected WordParseError");
  } catch (const WordParseError& e) {
    CHECK(std::string(e.what()).find("at position 3") != std::string::npos);
  }

  // Expansion guard: huge words are rejected before memory blows up.
  CHECK_THROWS_AS(parse_word("(a^1000000)^1000000"), WordParseError);
}

TEST_CASE("render gives run-length text and round-trips through parse") {
  CHECK(MCGWord{}.render() == "1");
  CHECK(word_of({kA}).render() == "a");
  CHECK(word_of({kAInv}).render() == "a^-1");
  CHECK(canonical_factorization(1).word.render() == "a^8 b a^2 b^2 a^-2 a^4 b a^-4");

  std::mt19937_64 rng(60301);
  for (int trial = 0; trial < 50; ++trial) {
    const MCGWord w = random_word(rng, 30);
    if (w.empty()) continue;  // "1" is a rendering, not part of the grammar
    CHECK(parse_word(w.render()) == w);
  }
  CHECK(parse_word(canonical_factorization(7).word.render()) == canonical_factorization(7).word);
}

TEST_CASE("concat, inverse, twist_power") {
  const MCGWord x = parse_word("ab");
  const MCGWord y = parse_word("A b^2");
  CHECK(concat(x, y).size() == x.size() + y.size());
  CHECK(evaluate(concat(x, y)) == evaluate(x) * evaluate(y));
  CHECK(inverse(inverse(y)) == y);
  CHECK(evaluate(concat(y, inverse(y))).is_identity());
  CHECK(twist_power(TwistBase::a, 0).empty());
  CHECK(twist_power(TwistBase::a, -3) == parse_word("a^-3"));
  CHECK(twist_power(TwistBase::b, 2) == parse_word("b^2"));
}

TEST_CASE("evaluate: generator matrices, braid relation, order six") {
  const SL2Matrix ta = evaluate(parse_word("a"));
  CHECK(ta == SL2Matrix{1, 1, 0, 1});
  const SL2Matrix tb = evaluate(parse_word("b"));
  CHECK(tb == SL2Matrix{1, 0, -1, 1});
  CHECK(ta.det() == 1);
  CHECK(tb.det() == 1);

  CHECK(evaluate(MCGWord{}).is_identity());
  CHECK(evaluate(parse_word("a A")).is_identity());
  CHECK(evaluate(parse_word("aba")) == evaluate(parse_word("bab")));
  CHECK(evaluate(parse_word("aba")) == SL2Matrix{0, 1, -1, 0});

  CHECK(evaluate(parse_word("(ab)^6")).is_identity());
  for (int k = 1; k <= 5; ++k) {
    CAPTURE(k);
    CHECK_FALSE(evaluate(parse_word("(ab)^" + std::to_string(k))).is_identity());
  }
  for (int n = 1; n <= 10; ++n)
    CHECK(evaluate(parse_word("(ab)^" + std::to_string(6 * n))).is_identity());
}

TEST_CASE("evaluate matches the naive matrix product on random words") {
  std::mt19937_64 rng(112358);
  for (int trial = 0; trial < 200; ++trial) {
    const MCGWord w = random_word(rng, 40);
    const SL2Matrix got = evaluate(w);
    CHECK(got == naive_evaluate(w));
    CHECK(got.det() == 1);
  }
}

TEST_CASE("apply_braid rewrites one window and preserves evaluation") {
  CHECK(apply_braid(parse_word("abab"), 0) == parse_word("babb"));
  CHECK(apply_braid(parse_word("bab"), 0) == parse_word("aba"));
  CHECK(apply_braid(parse_word("aaba"), 1) == parse_word("abab"));

  CHECK_THROWS_AS(apply_braid(parse_word("aab"), 0), RewriteError);
  CHECK_THROWS_AS(apply_braid(parse_word("aBa"), 0), RewriteError);  // inverse letter
  CHECK_THROWS_AS(apply_braid(parse_word("ab"), 0), RangeError);
  CHECK_THROWS_AS(apply_braid(parse_word("abab"), 2), RangeError);
  CHECK_THROWS_AS(apply_braid(MCGWord{}, 0), RangeError);

  // 1000 random applicable positions: plant one braid side inside a random
  // word and flip it; evaluation and the surrounding letters must not move.
  std::mt19937_64 rng(271828);
  for (int trial = 0; trial < 1000; ++trial) {
    MCGWord host = random_word(rng, 16);
    const std::size_t pos =
        std::uniform_int_distribution<std::size_t>(0, host.size())(rng);
    const bool plant_aba = trial % 2 == 0;
    const MCGWord side = parse_word(plant_aba ? "aba" : "bab");
    host.letters.insert(host.letters.begin() + static_cast<std::ptrdiff_t>(pos),
                        side.letters.begin(), side.letters.end());
    const MCGWord flipped = apply_braid(host, pos);
    CAPTURE(trial);
    REQUIRE(flipped.size() == host.size());
    CHECK(evaluate(flipped) == evaluate(host));
    for (std::size_t i = 0; i < host.size(); ++i) {
      if (i < pos || i >= pos + 3) REQUIRE(flipped.letters[i] == host.letters[i]);
    }
    const MCGWord expected_window = parse_word(plant_aba ? "bab" : "aba");
    for (std::size_t i = 0; i < 3; ++i)
      REQUIRE(flipped.letters[pos + i] == expected_window.letters[i]);
  }
}

TEST_CASE("conjugate_move wraps a segment and preserves evaluation") {
  CHECK(conjugate_move(parse_word("b"), 0, 1, parse_word("a^2")) ==
        parse_word("a a b a^-1 a^-1"));

  const MCGWord w = parse_word("ab a^2 b");
  SUBCASE("empty segment inserts a canceling pair") {
    const MCGWord inserted = conjugate_move(w, 2, 0, parse_word("a"));
    CHECK(inserted == parse_word("ab a A a^2 b"));
    CHECK(evaluate(inserted) == evaluate(w));
  }
  SUBCASE("empty conjugator is the identity move") {
    CHECK(conjugate_move(w, 1, 3, MCGWord{}) == w);
  }
  SUBCASE("range errors") {
    CHECK_THROWS_AS(conjugate_move(w, 4, 2, parse_word("a")), RangeError);
    CHECK_THROWS_AS(conjugate_move(w, 6, 0, parse_word("a")), RangeError);
  }

  // Whole-word evaluation is preserved exactly when evaluate(by) commutes
  // with evaluate(segment): a length-0 segment always does, a segment in the
  // same twist power always does, and the derivation's closing move does
  // because the trailing letters it wraps around evaluate to evaluate(by).
  std::mt19937_64 rng(141421);
  SUBCASE("length-0 insertions preserve evaluation anywhere") {
    for (int trial = 0; trial < 300; ++trial) {
      const MCGWord host = random_word(rng, 14);
      const std::size_t pos =
          std::uniform_int_distribution<std::size_t>(0, host.size())(rng);
      const MCGWord by = random_word(rng, 5);
      const MCGWord moved = conjugate_move(host, pos, 0, by);
      CAPTURE(trial);
      CHECK(moved.size() == host.size() + 2 * by.size());
      CHECK(evaluate(moved) == evaluate(host));
    }
  }
  SUBCASE("conjugators commuting with the segment preserve evaluation") {
    for (int trial = 0; trial < 200; ++trial) {
      // Host: random prefix + an a-power segment + random suffix; by: a-power.
      const MCGWord prefix = random_word(rng, 6);
      const std::int64_t seg_len =
          std::uniform_int_distribution<std::int64_t>(1, 5)(rng);
      const MCGWord segment = twist_power(TwistBase::a, seg_len);
      const MCGWord suffix = random_word(rng, 6);
      const MCGWord host = concat(concat(prefix, segment), suffix);
      const MCGWord by = twist_power(
          TwistBase::a, std::uniform_int_distribution<std::int64_t>(-4, 4)(rng));
      const MCGWord moved = conjugate_move(host, prefix.size(),
                                           static_cast<std::size_t>(seg_len), by);
      CAPTURE(trial);
      CHECK(evaluate(moved) == evaluate(host));
    }
  }
  SUBCASE("wrapping a prefix of an identity word by its suffix's value") {
    for (int trial = 0; trial < 100; ++trial) {
      // host = u . u^-1 evaluates to the identity; wrap the prefix u by u^-1.
      const MCGWord u = random_word(rng, 10);
      const MCGWord host = concat(u, inverse(u));
      const MCGWord moved = conjugate_move(host, 0, u.size(), inverse(u));
      CAPTURE(trial);
      CHECK(evaluate(host).is_identity());
      CHECK(evaluate(moved).is_identity());
    }
  }
}

TEST_CASE("cancel_pairs performs full free reduction") {
  CHECK(cancel_pairs(parse_word("a A b")) == parse_word("b"));
  CHECK(cancel_pairs(parse_word("a b B A")).empty());
  CHECK(cancel_pairs(MCGWord{}).empty());
  CHECK(cancel_pairs(parse_word("ab")) == parse_word("ab"));

  std::mt19937_64 rng(173205);
  for (int trial = 0; trial < 200; ++trial) {
    // Random word with planted cancellations via random conjugate_moves.
    MCGWord w = random_word(rng, 10);
    for (int moves = 0; moves < 3; ++moves) {
      const std::size_t pos =
          std::uniform_int_distribution<std::size_t>(0, w.size())(rng);
      w = conjugate_move(w, pos, 0, random_word(rng, 3));
    }
    const MCGWord reduced = cancel_pairs(w);
    CAPTURE(trial);
    CHECK(evaluate(reduced) == evaluate(w));
    CHECK(cancel_pairs(reduced) == reduced);
    for (std::size_t i = 0; i + 1 < reduced.size(); ++i)
      REQUIRE_FALSE(reduced.letters[i + 1] == reduced.letters[i].inverse());
  }
}

TEST_CASE("canonical_factorization: words, censuses, twist counts") {
  const CanonicalFactorization one = canonical_factorization(1);
  CHECK(one.word == parse_word("a^8 b a^2 b^2 a^-2 a^4 b a^-4"));
  CHECK(one.census == FiberCensus{8, 1, 2});

  const CanonicalFactorization two = canonical_factorization(2);
  CHECK(two.census == FiberCensus{16, 3, 2});
  CHECK(two.census.right_handed_twists() == 24);
  CHECK(two.word ==
        parse_word("a^16 b a^2 b^2 a^-2 a^4 b^2 a^-4 a^6 b^2 a^-6 a^8 b a^-8"));

  for (std::int64_t n = 1; n <= 25; ++n) {
    CAPTURE(n);
    const CanonicalFactorization canon = canonical_factorization(n);
    CHECK(evaluate(canon.word).is_identity());
    CHECK(canon.census == FiberCensus{8 * n, 2 * n - 1, 2});
    CHECK(canon.census.right_handed_twists() == 12 * n);
    CHECK(classify_fibers(canon.word) == canon.census);
  }

  CHECK_THROWS_AS(canonical_factorization(0), DomainError);
  CHECK_THROWS_AS(canonical_factorization(-2), DomainError);
}

TEST_CASE("classify_fibers reads censuses off block words") {
  CHECK(classify_fibers(parse_word("a b")) == FiberCensus{0, 0, 2});
  CHECK(classify_fibers(parse_word("a^5")) == FiberCensus{5, 0, 0});
  CHECK(classify_fibers(parse_word("b^2")) == FiberCensus{0, 1, 0});
  CHECK(classify_fibers(parse_word("a^2 b^2 a^-2")) == FiberCensus{0, 1, 0});
  CHECK(classify_fibers(parse_word("b a^3 b^-1")) == FiberCensus{3, 0, 0});
  CHECK(classify_fibers(parse_word("a b^2 a^-1 b")) == FiberCensus{0, 1, 1});

  CHECK_THROWS_AS(classify_fibers(parse_word("a A")), UnclassifiableError);
  CHECK_THROWS_AS(classify_fibers(MCGWord{}), UnclassifiableError);
  CHECK_THROWS_AS(classify_fibers(parse_word("a^3 b^3")), UnclassifiableError);
  CHECK_THROWS_AS(classify_fibers(parse_word("a^2 b^2 a^-1")), UnclassifiableError);

  CHECK(FiberCensus{8, 1, 2}.to_string() ==
        classify_fibers(canonical_factorization(1).word).to_string());
}
