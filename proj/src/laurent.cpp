#include "swcalc/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

#include "swcalc/kernels.hpp"

namespace swcalc {

namespace {

void validate_generators(const std::vector<Generator>& gens) {
  std::set<std::string> seen;
  for (const auto& g : gens) {
    if (g.name.empty()) throw DomainError("generator name must be nonempty");
    if (!seen.insert(g.name).second)
      throw DomainError("duplicate generator name: " + g.name);
  }
}

}  // namespace

LaurentPoly LaurentPoly::constant(Int value) {
  if (value == 0) return LaurentPoly{};
  return from_canonical({}, {}, {std::move(value)});
}

LaurentPoly LaurentPoly::monomial(std::vector<Generator> gens, std::vector<std::int32_t> exps,
                                  Int coeff) {
  std::vector<std::pair<std::vector<std::int32_t>, Int>> terms;
  terms.emplace_back(std::move(exps), std::move(coeff));
  return from_terms(std::move(gens), std::move(terms));
}

LaurentPoly LaurentPoly::from_terms(
    std::vector<Generator> gens,
    std::vector<std::pair<std::vector<std::int32_t>, Int>> terms) {
  validate_generators(gens);
  const std::size_t w = gens.size();
  for (const auto& [exps, coeff] : terms) {
    if (exps.size() != w)
      throw DomainError("exponent vector width " + std::to_string(exps.size()) +
                        " does not match generator count " + std::to_string(w));
  }

  std::vector<std::size_t> perm(terms.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t i, std::size_t j) {
    int c = detail::compare_rows(terms[i].first.data(), terms[j].first.data(), w);
    if (c != 0) return c < 0;
    return i < j;  // stable for duplicate keys
  });

  LaurentPoly out;
  out.gens_ = std::move(gens);
  out.exps_.reserve(terms.size() * w);
  out.coeffs_.reserve(terms.size());
  std::size_t i = 0;
  while (i < perm.size()) {
    const auto* key = terms[perm[i]].first.data();
    Int acc = terms[perm[i]].second;
    std::size_t j = i + 1;
    while (j < perm.size() && detail::compare_rows(key, terms[perm[j]].first.data(), w) == 0) {
      acc += terms[perm[j]].second;
      ++j;
    }
    if (acc != 0) {
      out.exps_.insert(out.exps_.end(), key, key + w);
      out.coeffs_.push_back(std::move(acc));
    }
    i = j;
  }
  return out;
}

LaurentPoly LaurentPoly::from_canonical(std::vector<Generator> gens,
                                        std::vector<std::int32_t> exps, std::vector<Int> coeffs) {
  [[maybe_unused]] const std::size_t w = gens.size();
  assert(exps.size() == coeffs.size() * w);
#ifndef NDEBUG
  for (std::size_t t = 0; t + 1 < coeffs.size(); ++t)
    assert(detail::compare_rows(exps.data() + t * w, exps.data() + (t + 1) * w, w) < 0);
  for (const auto& c : coeffs) assert(c != 0);
#endif
  LaurentPoly out;
  out.gens_ = std::move(gens);
  out.exps_ = std::move(exps);
  out.coeffs_ = std::move(coeffs);
  return out;
}

Int LaurentPoly::coefficient_of(std::span<const std::int32_t> exps) const {
  if (exps.size() != width()) throw DomainError("exponent vector width mismatch");
  const std::size_t w = width();
  std::size_t lo = 0, hi = term_count();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    int c = detail::compare_rows(exps_.data() + mid * w, exps.data(), w);
    if (c == 0) return coeffs_[mid];
    if (c < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return 0;
}

Int LaurentPoly::coefficient_of(const std::map<std::string, std::int32_t>& exps_by_name) const {
  std::vector<std::int32_t> exps(width(), 0);
  auto remaining = exps_by_name;
  for (std::size_t g = 0; g < width(); ++g) {
    auto it = remaining.find(gens_[g].name);
    if (it != remaining.end()) {
      exps[g] = it->second;
      remaining.erase(it);
    }
  }
  for (const auto& [name, e] : remaining)
    if (e != 0) return 0;  // nonzero exponent on a generator this poly lacks
  return coefficient_of(exps);
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  const std::size_t w = width();
  for (std::size_t t = term_count(); t-- > 0;) {  // descending lexicographic
    const Int& c = coeffs_[t];
    const bool negative = c < 0;
    const bool first = out.empty();
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    Int mag = abs(c);
    std::string mono;
    for (std::size_t g = 0; g < w; ++g) {
      std::int32_t e = exps_[t * w + g];
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += gens_[g].name + "^" + std::to_string(e);
    }
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.term_count() != b.term_count()) return false;
  // Name-keyed projection of each term, zero exponents dropped, so generator
  // order and all-zero generators cannot affect the comparison.
  auto project = [](const LaurentPoly& p) {
    std::vector<std::pair<std::vector<std::pair<std::string, std::int32_t>>, const Int*>> terms;
    terms.reserve(p.term_count());
    for (std::size_t t = 0; t < p.term_count(); ++t) {
      std::vector<std::pair<std::string, std::int32_t>> key;
      auto exps = p.exponents(t);
      for (std::size_t g = 0; g < p.width(); ++g)
        if (exps[g] != 0) key.emplace_back(p.generators()[g].name, exps[g]);
      std::sort(key.begin(), key.end());
      terms.emplace_back(std::move(key), &p.coefficient(t));
    }
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return terms;
  };
  auto ta = project(a);
  auto tb = project(b);
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (ta[i].first != tb[i].first) return false;
    if (*ta[i].second != *tb[i].second) return false;
  }
  return true;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) {
  auto [ua, ub] = unify_generators(a, b);
  const std::size_t w = ua.width();
  // Single merge pass over two canonically sorted term arrays.
  std::vector<Generator> gens = ua.generators();
  std::vector<std::int32_t> exps;
  std::vector<Int> coeffs;
  exps.reserve((ua.term_count() + ub.term_count()) * w);
  coeffs.reserve(ua.term_count() + ub.term_count());
  std::size_t i = 0, j = 0;
  while (i < ua.term_count() || j < ub.term_count()) {
    int c;
    if (i == ua.term_count())
      c = 1;
    else if (j == ub.term_count())
      c = -1;
    else
      c = detail::compare_rows(ua.raw_exponents().data() + i * w,
                               ub.raw_exponents().data() + j * w, w);
    if (c < 0) {
      exps.insert(exps.end(), ua.raw_exponents().begin() + i * w,
                  ua.raw_exponents().begin() + (i + 1) * w);
      coeffs.push_back(ua.coefficient(i));
      ++i;
    } else if (c > 0) {
      exps.insert(exps.end(), ub.raw_exponents().begin() + j * w,
                  ub.raw_exponents().begin() + (j + 1) * w);
      coeffs.push_back(ub.coefficient(j));
      ++j;
    } else {
      Int s = ua.coefficient(i) + ub.coefficient(j);
      if (s != 0) {
        exps.insert(exps.end(), ua.raw_exponents().begin() + i * w,
                    ua.raw_exponents().begin() + (i + 1) * w);
        coeffs.push_back(std::move(s));
      }
      ++i;
      ++j;
    }
  }
  return LaurentPoly::from_canonical(std::move(gens), std::move(exps), std::move(coeffs));
}

LaurentPoly neg(const LaurentPoly& p) {
  std::vector<Int> coeffs;
  coeffs.reserve(p.term_count());
  for (const auto& c : p.raw_coefficients()) coeffs.push_back(-c);
  return LaurentPoly::from_canonical(p.generators(), p.raw_exponents(), std::move(coeffs));
}

LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) { return add(a, neg(b)); }

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) {
  auto [ua, ub] = unify_generators(a, b);
  if (ua.is_zero() || ub.is_zero())
    return LaurentPoly::from_canonical(ua.generators(), {}, {});
  return kernels::mul_dispatch(ua, ub);
}

LaurentPoly pow(const LaurentPoly& p, std::int64_t k) {
  if (k < 0) throw DomainError("pow: negative exponent " + std::to_string(k));
  LaurentPoly result = LaurentPoly::constant(1);
  for (std::int64_t i = 0; i < k; ++i) result = mul(result, p);
  return result;
}

LaurentPoly substitute_negate(const LaurentPoly& p) {
  // Negating every exponent vector exactly reverses the lexicographic order,
  // so the canonical form is the reversed term list with negated rows.
  const std::size_t w = p.width();
  const std::size_t n = p.term_count();
  std::vector<std::int32_t> exps(n * w);
  std::vector<Int> coeffs(n);
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t rt = n - 1 - t;
    for (std::size_t g = 0; g < w; ++g) exps[t * w + g] = -p.raw_exponents()[rt * w + g];
    coeffs[t] = p.coefficient(rt);
  }
  return LaurentPoly::from_canonical(p.generators(), std::move(exps), std::move(coeffs));
}

LaurentPoly substitute_power(const LaurentPoly& p, const std::string& gen, std::int64_t k) {
  if (k < 1) throw DomainError("substitute_power: exponent multiplier must be >= 1");
  std::size_t idx = p.width();
  for (std::size_t g = 0; g < p.width(); ++g)
    if (p.generators()[g].name == gen) idx = g;
  if (idx == p.width()) return p;
  // Scaling one column by k >= 1 preserves the lexicographic term order.
  std::vector<std::int32_t> exps = p.raw_exponents();
  for (std::size_t t = 0; t < p.term_count(); ++t) {
    std::int64_t scaled = static_cast<std::int64_t>(exps[t * p.width() + idx]) * k;
    if (scaled < INT32_MIN || scaled > INT32_MAX)
      throw DomainError("substitute_power: exponent overflow");
    exps[t * p.width() + idx] = static_cast<std::int32_t>(scaled);
  }
  return LaurentPoly::from_canonical(p.generators(), std::move(exps), p.raw_coefficients());
}

std::vector<std::pair<std::vector<std::int32_t>, Int>> support(const LaurentPoly& p) {
  std::vector<std::pair<std::vector<std::int32_t>, Int>> out;
  out.reserve(p.term_count());
  for (std::size_t t = 0; t < p.term_count(); ++t) {
    auto e = p.exponents(t);
    out.emplace_back(std::vector<std::int32_t>(e.begin(), e.end()), p.coefficient(t));
  }
  return out;
}

bool check_symmetry(const LaurentPoly& p, std::int64_t sign_exponent) {
  const bool odd = ((sign_exponent % 2) + 2) % 2 == 1;
  LaurentPoly flipped = substitute_negate(p);
  return odd ? flipped == neg(p) : flipped == p;
}

Int sum_of_coefficients(const LaurentPoly& p) {
  Int s = 0;
  for (const auto& c : p.raw_coefficients()) s += c;
  return s;
}

LaurentPoly remapped(const LaurentPoly& p, const std::vector<Generator>& target_gens) {
  if (target_gens == p.generators()) return p;
  validate_generators(target_gens);
  const std::size_t w = p.width();
  const std::size_t tw = target_gens.size();
  std::vector<std::size_t> where(w);
  for (std::size_t g = 0; g < w; ++g) {
    std::size_t pos = tw;
    for (std::size_t h = 0; h < tw; ++h)
      if (target_gens[h].name == p.generators()[g].name) pos = h;
    if (pos == tw)
      throw DomainError("remapped: target basis lacks generator " + p.generators()[g].name);
    where[g] = pos;
  }
  // Fast path: p's generators form a prefix of the target in order, so rows
  // keep their relative order and only gain trailing zero columns.
  bool prefix = true;
  for (std::size_t g = 0; g < w; ++g)
    if (where[g] != g) prefix = false;
  if (prefix) {
    std::vector<std::int32_t> exps(p.term_count() * tw, 0);
    for (std::size_t t = 0; t < p.term_count(); ++t)
      for (std::size_t g = 0; g < w; ++g) exps[t * tw + g] = p.raw_exponents()[t * w + g];
    return LaurentPoly::from_canonical(target_gens, std::move(exps), p.raw_coefficients());
  }
  std::vector<std::pair<std::vector<std::int32_t>, Int>> terms;
  terms.reserve(p.term_count());
  for (std::size_t t = 0; t < p.term_count(); ++t) {
    std::vector<std::int32_t> row(tw, 0);
    for (std::size_t g = 0; g < w; ++g) row[where[g]] = p.raw_exponents()[t * w + g];
    terms.emplace_back(std::move(row), p.coefficient(t));
  }
  return LaurentPoly::from_terms(target_gens, std::move(terms));
}

std::pair<LaurentPoly, LaurentPoly> unify_generators(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.generators() == b.generators()) return {a, b};
  std::vector<Generator> merged = a.generators();
  for (const auto& g : b.generators()) {
    bool present = false;
    for (const auto& h : merged)
      if (h.name == g.name) present = true;
    if (!present) merged.push_back(g);
  }
  return {remapped(a, merged), remapped(b, merged)};
}

}  // namespace swcalc
