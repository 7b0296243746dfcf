#include "steengraph/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

namespace steengraph {

namespace {

constexpr Exponent kUnbounded = std::numeric_limits<Exponent>::max();

std::string describe_level(TruncationLevel level) { return level.to_string(); }

void require_same_level(const Monomial& x, const Monomial& y) {
  if (x.level() != y.level()) {
    throw LevelMismatch("monomials live in different algebras: " + describe_level(x.level()) +
                        " vs " + describe_level(y.level()));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// TruncationLevel

TruncationLevel TruncationLevel::truncated(int n) {
  if (n < 0 || n > kMaxTruncation) {
    throw std::out_of_range("truncation level n=" + std::to_string(n) + " outside [0, " +
                            std::to_string(kMaxTruncation) + "]");
  }
  return TruncationLevel(n);
}

int TruncationLevel::n() const {
  if (!is_truncated()) throw std::logic_error("untruncated level has no n");
  return n_;
}

Exponent TruncationLevel::exponent_bound(int i) const {
  if (!has_generator(i)) return 0;
  if (!is_truncated()) return kUnbounded;
  return (Exponent{1} << (n_ + 2 - i)) - 1;
}

std::string TruncationLevel::to_string() const {
  return is_truncated() ? "A*(" + std::to_string(n_) + ")" : "A*";
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(TruncationLevel level, std::span<const Exponent> exponents) : level_(level) {
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    const int i = static_cast<int>(k) + 1;
    if (exponents[k] == 0) continue;
    if (!level.has_generator(i)) {
      throw std::out_of_range("generator xi" + std::to_string(i) + " does not exist in " +
                              level.to_string());
    }
    if (exponents[k] > level.exponent_bound(i)) {
      throw std::out_of_range("exponent " + std::to_string(exponents[k]) + " of xi" +
                              std::to_string(i) + " exceeds bound " +
                              std::to_string(level.exponent_bound(i)) + " in " +
                              level.to_string());
    }
    exponents_[k] = exponents[k];
  }
}

Monomial Monomial::generator_power(TruncationLevel level, int i, int j) {
  if (i < 1 || j < 0 || !level.has_generator(i) || j >= 63) {
    throw std::out_of_range("xi" + std::to_string(i) + "^(2^" + std::to_string(j) +
                            ") is not an element of " + level.to_string());
  }
  Monomial m(level);
  const Exponent e = Exponent{1} << j;
  if (e > level.exponent_bound(i)) {
    throw std::out_of_range("xi" + std::to_string(i) + "^(2^" + std::to_string(j) +
                            ") is not an element of " + level.to_string());
  }
  m.exponents_[static_cast<std::size_t>(i - 1)] = e;
  return m;
}

std::vector<Exponent> Monomial::exponents() const {
  int len = 0;
  if (level_.is_truncated()) {
    len = level_.n() + 1;
  } else {
    for (int i = kMaxGenerators; i >= 1; --i) {
      if (exponent(i) != 0) {
        len = i;
        break;
      }
    }
  }
  return {exponents_.begin(), exponents_.begin() + len};
}

bool Monomial::is_unit() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
}

std::vector<DyadicBit> Monomial::dyadic_bits() const {
  std::vector<DyadicBit> bits;
  for (int i = 1; i <= kMaxGenerators; ++i) {
    Exponent r = exponent(i);
    while (r != 0) {
      const int j = std::countr_zero(r);
      bits.push_back({i, j});
      r &= r - 1;
    }
  }
  return bits;
}

std::string Monomial::to_string() const {
  std::string out;
  for (int i = 1; i <= kMaxGenerators; ++i) {
    if (exponent(i) == 0) continue;
    if (!out.empty()) out += '*';
    out += "xi" + std::to_string(i) + '^' + std::to_string(exponent(i));
  }
  return out.empty() ? "1" : out;
}

std::string Monomial::to_compact_string() const {
  std::string out = "[";
  const auto ex = exponents();
  for (std::size_t k = 0; k < ex.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(ex[k]);
  }
  return out + ']';
}

// ---------------------------------------------------------------------------
// Ordering and polynomials

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
  for (int i = kMaxGenerators; i >= 1; --i) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i);
  }
  return false;
}

bool TermOrder::operator()(const std::pair<Monomial, Monomial>& a,
                           const std::pair<Monomial, Monomial>& b) const {
  if ((*this)(a.first, b.first)) return true;
  if ((*this)(b.first, a.first)) return false;
  return (*this)(a.second, b.second);
}

void cancel_mod2(std::vector<Monomial>& terms) {
  std::sort(terms.begin(), terms.end(), TermOrder{});
  std::vector<Monomial> kept;
  kept.reserve(terms.size());
  for (std::size_t k = 0; k < terms.size();) {
    std::size_t run = k + 1;
    while (run < terms.size() && terms[run] == terms[k]) ++run;
    if ((run - k) % 2 == 1) kept.push_back(terms[k]);
    k = run;
  }
  terms = std::move(kept);
}

Polynomial::Polynomial(TruncationLevel level, std::vector<Monomial> terms)
    : level_(level), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.level() != level_) {
      throw LevelMismatch("term " + t.to_string() + " is not in " + level_.to_string());
    }
  }
  cancel_mod2(terms_);
}

bool Polynomial::contains(const Monomial& m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m, TermOrder{});
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += t.to_string();
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.level_ != level_) throw LevelMismatch("adding polynomials at different levels");
  std::vector<Monomial> sum;
  sum.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                other.terms_.end(), std::back_inserter(sum), TermOrder{});
  terms_ = std::move(sum);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.level() != b.level()) throw LevelMismatch("multiplying polynomials at different levels");
  std::vector<Monomial> products;
  products.reserve(a.size() * b.size());
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      if (auto p = product_or_zero(x, y)) products.push_back(*p);
    }
  }
  return Polynomial(a.level(), std::move(products));
}

// ---------------------------------------------------------------------------
// Arithmetic

std::optional<Monomial> product_or_zero(const Monomial& x, const Monomial& y) {
  require_same_level(x, y);
  Monomial out(x.level());
  for (int i = 1; i <= kMaxGenerators; ++i) {
    const Exponent a = x.exponent(i);
    const Exponent b = y.exponent(i);
    Exponent sum = 0;
    if (__builtin_add_overflow(a, b, &sum)) {
      throw std::overflow_error("exponent overflow multiplying " + x.to_string() + " by " +
                                y.to_string());
    }
    if (sum > x.level().exponent_bound(i)) return std::nullopt;
    out.exponents_[static_cast<std::size_t>(i - 1)] = sum;
  }
  return out;
}

Polynomial multiply(const Monomial& x, const Monomial& y) {
  if (auto p = product_or_zero(x, y)) return Polynomial(*p);
  return Polynomial(x.level());
}

std::optional<Monomial> reduce_to(const Monomial& x, TruncationLevel target) {
  Monomial out(target);
  for (int i = 1; i <= kMaxGenerators; ++i) {
    const Exponent e = x.exponent(i);
    if (e > target.exponent_bound(i)) return std::nullopt;
    out.exponents_[static_cast<std::size_t>(i - 1)] = e;
  }
  return out;
}

Polynomial reduce_to(const Polynomial& p, TruncationLevel target) {
  std::vector<Monomial> kept;
  for (const auto& t : p.terms()) {
    if (auto r = reduce_to(t, target)) kept.push_back(*r);
  }
  return Polynomial(target, std::move(kept));
}

Monomial frobenius(const Monomial& x, int k) {
  Monomial out = x;
  out.level_ = TruncationLevel::untruncated();
  for (auto& e : out.exponents_) {
    if (e == 0) continue;
    if (k >= 64 || std::countl_zero(e) < k) {
      throw std::overflow_error("exponent overflow raising " + x.to_string() + " to 2^" +
                                std::to_string(k));
    }
    e <<= k;
  }
  return out;
}

Polynomial frobenius(const Polynomial& p, int k, TruncationLevel target) {
  std::vector<Monomial> kept;
  for (const auto& t : p.terms()) {
    if (auto r = reduce_to(frobenius(t, k), target)) kept.push_back(*r);
  }
  return Polynomial(target, std::move(kept));
}

int edge_bit(const Monomial& x, int p, int q) {
  const TruncationLevel level = x.level();
  if (!level.is_truncated()) throw std::invalid_argument("edge_bit needs a truncated level");
  if (p < 0 || q > level.n() + 1 || p >= q) {
    throw std::out_of_range("vertex pair (" + std::to_string(p) + ", " + std::to_string(q) +
                            ") invalid for " + level.to_string());
  }
  return static_cast<int>((x.exponent(q - p) >> p) & 1U);
}

int alpha(Exponent m) { return std::popcount(m); }

int total_alpha(const Monomial& x) {
  int total = 0;
  for (int i = 1; i <= kMaxGenerators; ++i) total += alpha(x.exponent(i));
  return total;
}

bool divides_edgewise(const Monomial& d, const Monomial& x) {
  require_same_level(d, x);
  for (int i = 1; i <= kMaxGenerators; ++i) {
    if ((d.exponent(i) & ~x.exponent(i)) != 0) return false;
  }
  return true;
}

bool divides_exponentwise(const Monomial& d, const Monomial& x) {
  require_same_level(d, x);
  for (int i = 1; i <= kMaxGenerators; ++i) {
    if (d.exponent(i) > x.exponent(i)) return false;
  }
  return true;
}

Monomial quotient(const Monomial& x, const Monomial& d) {
  if (!divides_exponentwise(d, x)) {
    throw std::invalid_argument(d.to_string() + " does not divide " + x.to_string());
  }
  std::vector<Exponent> ex(kMaxGenerators);
  for (int i = 1; i <= kMaxGenerators; ++i) ex[i - 1] = x.exponent(i) - d.exponent(i);
  return Monomial(x.level(), ex);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

bool is_space(char c) { return c == ' ' || c == '\t'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Exponent parse_uint(std::string_view digits, std::string_view token) {
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("expected a nonnegative integer in '" + std::string(token) + "'",
                     std::string(token));
  }
  Exponent value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ParseError("integer out of range in '" + std::string(token) + "'", std::string(token));
  }
  return value;
}

Monomial parse_compact(std::string_view text, TruncationLevel level) {
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<Exponent> ex;
  if (!trim(body).empty()) {
    while (true) {
      const auto comma = body.find(',');
      std::string_view piece = trim(body.substr(0, comma));
      ex.push_back(parse_uint(piece, piece.empty() ? text : piece));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
  }
  if (level.is_truncated() && ex.size() != static_cast<std::size_t>(level.n() + 1)) {
    throw ParseError("compact form needs exactly " + std::to_string(level.n() + 1) +
                         " exponents for " + level.to_string() + ", got " +
                         std::to_string(ex.size()),
                     std::string(text));
  }
  if (ex.size() > static_cast<std::size_t>(kMaxGenerators)) {
    throw std::out_of_range("too many generators in '" + std::string(text) + "'");
  }
  return Monomial(level, ex);
}

}  // namespace

Monomial parse_monomial(std::string_view text, TruncationLevel level) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty monomial", "");
  if (text.front() == '[') {
    if (text.back() != ']') throw ParseError("unterminated compact form", std::string(text));
    return parse_compact(text, level);
  }

  // Split into terms on '*' or runs of spaces.
  std::vector<std::string_view> terms;
  std::size_t pos = 0;
  bool expect_term = true;
  while (pos < text.size()) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    if (text[pos] == '*') {
      if (expect_term) throw ParseError("unexpected '*'", "*");
      expect_term = true;
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end]) && text[end] != '*') ++end;
    terms.push_back(text.substr(pos, end - pos));
    expect_term = false;
    pos = end;
  }
  if (expect_term) throw ParseError("trailing '*'", "*");

  if (terms.size() == 1 && terms.front() == "1") return Monomial(level);

  std::vector<Exponent> ex(kMaxGenerators, 0);
  for (std::string_view term : terms) {
    const std::string token(term);
    if (term == "1") throw ParseError("the unit '1' must appear alone", token);
    if (term.substr(0, 2) != "xi") throw ParseError("unexpected token '" + token + "'", token);
    term.remove_prefix(2);
    const auto caret = term.find('^');
    const Exponent index = parse_uint(term.substr(0, caret), token);
    const Exponent power = caret == std::string_view::npos ? 1 : parse_uint(term.substr(caret + 1), token);
    if (index < 1 || !level.has_generator(static_cast<int>(std::min<Exponent>(index, 1000)))) {
      throw std::out_of_range("generator '" + token + "' does not exist in " + level.to_string());
    }
    Exponent& slot = ex[index - 1];
    if (__builtin_add_overflow(slot, power, &slot)) {
      throw std::out_of_range("exponent overflow at '" + token + "'");
    }
  }
  return Monomial(level, ex);
}

// ---------------------------------------------------------------------------
// Enumeration

std::uint64_t monomial_count(TruncationLevel level) {
  const int n = level.n();
  return std::uint64_t{1} << ((n + 1) * (n + 2) / 2);
}

Monomial monomial_at(TruncationLevel level, std::uint64_t index) {
  if (index >= monomial_count(level)) throw std::out_of_range("monomial index past the end");
  const int n = level.n();
  std::vector<Exponent> ex(static_cast<std::size_t>(n + 1));
  // Mixed radix with r_{n+1} least significant; xi_i contributes n+2-i bits.
  for (int i = n + 1; i >= 1; --i) {
    const int width = n + 2 - i;
    ex[static_cast<std::size_t>(i - 1)] = index & ((Exponent{1} << width) - 1);
    index >>= width;
  }
  return Monomial(level, ex);
}

MonomialRange::MonomialRange(TruncationLevel level) : level_(level), count_(0) {
  if (!level.is_truncated()) {
    throw std::invalid_argument("cannot enumerate the untruncated algebra");
  }
  count_ = monomial_count(level);
}

MonomialRange::iterator::iterator(TruncationLevel level, std::uint64_t index)
    : index_(index), end_(monomial_count(level)), current_(level) {
  if (index_ < end_) current_ = monomial_at(level, index_);
}

MonomialRange::iterator& MonomialRange::iterator::operator++() {
  ++index_;
  if (index_ < end_) current_ = monomial_at(current_.level(), index_);
  return *this;
}

}  // namespace steengraph

std::size_t std::hash<steengraph::Monomial>::operator()(const steengraph::Monomial& m) const noexcept {
  std::size_t h = m.level().is_truncated() ? static_cast<std::size_t>(m.level().n()) : 0x9e37U;
  for (int i = 1; i <= steengraph::kMaxGenerators; ++i) {
    h ^= std::hash<std::uint64_t>{}(m.exponent(i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
