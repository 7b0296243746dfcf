#ifndef STEENGRAPH_ALGEBRA_HPP_
#define STEENGRAPH_ALGEBRA_HPP_

// Exact arithmetic in the truncated mod-2 dual Steenrod algebras A*(n) and,
// at bounded generator index, in the untruncated algebra A* = F2[xi_1, xi_2, ...].
//
// A monomial xi_1^{r_1} ... xi_{n+1}^{r_{n+1}} of A*(n) satisfies
// 0 <= r_i <= 2^{n+2-i} - 1; anything past that bound lies in the ideal
// I(n) = (xi_1^{2^{n+1}}, xi_2^{2^n}, ..., xi_{n+1}^2, xi_{n+2}, ...).

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#ifndef STEENGRAPH_MAX_TRUNCATION
#define STEENGRAPH_MAX_TRUNCATION 12
#endif

namespace steengraph {

using Exponent = std::uint64_t;

/// Largest n accepted for A*(n).
inline constexpr int kMaxTruncation = STEENGRAPH_MAX_TRUNCATION;

/// Generators xi_1 .. xi_{kMaxGenerators} are representable in either setting.
inline constexpr int kMaxGenerators = 16;

static_assert(kMaxTruncation + 1 <= kMaxGenerators);
static_assert(kMaxTruncation + 2 < 63);

class LevelMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::string token)
      : std::invalid_argument(message), token_(std::move(token)) {}

  /// The offending piece of input.
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// Which algebra a value lives in: A*(n) for a given n, or untruncated A*.
class TruncationLevel {
 public:
  /// Throws std::out_of_range for n < 0 or n > kMaxTruncation.
  static TruncationLevel truncated(int n);
  static constexpr TruncationLevel untruncated() { return TruncationLevel(); }

  constexpr bool is_truncated() const { return n_ >= 0; }

  /// Throws std::logic_error on the untruncated level.
  int n() const;

  /// Highest generator index present: n+1 when truncated, kMaxGenerators otherwise.
  int max_generator() const { return is_truncated() ? n_ + 1 : kMaxGenerators; }

  /// Number of Wood-graph vertices (n+2). Truncated levels only.
  int vertex_count() const { return n() + 2; }

  /// Largest allowed exponent of xi_i (2^{n+2-i} - 1); unbounded when untruncated.
  Exponent exponent_bound(int i) const;

  bool has_generator(int i) const { return i >= 1 && i <= max_generator(); }

  std::string to_string() const;

  friend constexpr bool operator==(TruncationLevel, TruncationLevel) = default;

 private:
  constexpr TruncationLevel() = default;
  explicit constexpr TruncationLevel(int n) : n_(n) {}

  int n_ = -1;
};

/// The factor xi_i^{2^j}. In graph terms it is the edge 2^j -> 2^{i+j}.
struct DyadicBit {
  int generator = 1;  // i >= 1
  int power = 0;      // j >= 0

  int tail() const { return power; }
  int head() const { return power + generator; }

  friend constexpr auto operator<=>(const DyadicBit&, const DyadicBit&) = default;
};

/// A monomial of A*(n) or A*. Immutable; exponents beyond max_generator() are zero.
class Monomial {
 public:
  /// The unit monomial 1.
  explicit Monomial(TruncationLevel level) : level_(level) {}

  /// exponents[k] is the exponent of xi_{k+1}. Throws std::out_of_range if
  /// a generator is absent at `level` or an exponent exceeds its bound.
  Monomial(TruncationLevel level, std::span<const Exponent> exponents);
  Monomial(TruncationLevel level, std::initializer_list<Exponent> exponents)
      : Monomial(level, std::span<const Exponent>(exponents.begin(), exponents.size())) {}

  /// xi_i^{2^j}. Throws std::out_of_range if it is not a valid nonzero element.
  static Monomial generator_power(TruncationLevel level, int i, int j);

  TruncationLevel level() const { return level_; }

  /// Exponent of xi_i, 1-based; zero for any absent generator.
  Exponent exponent(int i) const {
    return (i >= 1 && i <= kMaxGenerators) ? exponents_[static_cast<std::size_t>(i - 1)] : 0;
  }

  /// (r_1, ..., r_{n+1}) when truncated; up to the last nonzero exponent otherwise.
  std::vector<Exponent> exponents() const;

  bool is_unit() const;

  /// Dyadic factors xi_i^{2^j} of this monomial, sorted by (i, j).
  std::vector<DyadicBit> dyadic_bits() const;

  /// Canonical text, e.g. "xi1^15*xi3^2", or "1".
  std::string to_string() const;

  /// Compact text, e.g. "[15,0,2,0]".
  std::string to_compact_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  friend std::optional<Monomial> product_or_zero(const Monomial&, const Monomial&);
  friend std::optional<Monomial> reduce_to(const Monomial&, TruncationLevel);
  friend Monomial frobenius(const Monomial&, int);

  TruncationLevel level_;
  std::array<Exponent, kMaxGenerators> exponents_{};
};

/// Canonical order of terms inside a polynomial: exponent vectors are compared
/// from the highest generator down, and the larger exponent comes first.
/// Under this order c(xi_3) prints as xi3^1 + xi1^1*xi2^2 + xi1^4*xi2^1 + xi1^7.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
  bool operator()(const std::pair<Monomial, Monomial>& a,
                  const std::pair<Monomial, Monomial>& b) const;
};

/// An F2-linear combination of monomials at one level.
class Polynomial {
 public:
  explicit Polynomial(TruncationLevel level) : level_(level) {}
  Polynomial(TruncationLevel level, std::vector<Monomial> terms);
  explicit Polynomial(const Monomial& m) : level_(m.level()), terms_{m} {}

  TruncationLevel level() const { return level_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool contains(const Monomial& m) const;

  /// Canonical text: terms joined by " + ", or "0".
  std::string to_string() const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  TruncationLevel level_;
  std::vector<Monomial> terms_;  // sorted by TermOrder, no duplicates
};

/// Sorts in TermOrder and cancels equal terms pairwise.
void cancel_mod2(std::vector<Monomial>& terms);

/// Exponent-wise sum; nullopt when the product lands in I(n).
/// Throws LevelMismatch, or std::overflow_error on untruncated overflow.
std::optional<Monomial> product_or_zero(const Monomial& x, const Monomial& y);

/// x * y as a polynomial: the product monomial, or zero when a carry escapes
/// past an exponent bound.
Polynomial multiply(const Monomial& x, const Monomial& y);

/// Image of a monomial under the quotient map to `target` (nullopt: it is zero there).
/// Also re-levels between truncated algebras when the monomial fits.
std::optional<Monomial> reduce_to(const Monomial& x, TruncationLevel target);
Polynomial reduce_to(const Polynomial& p, TruncationLevel target);

/// x^{2^k}: every exponent doubled k times. The result is returned at the
/// untruncated level; reduce_to brings it back. Characteristic 2 makes this
/// additive, so the polynomial form maps term by term and then reduces to `target`.
/// Throws std::overflow_error if an exponent would not fit.
Monomial frobenius(const Monomial& x, int k);
Polynomial frobenius(const Polynomial& p, int k, TruncationLevel target);

/// Coefficient of 2^p in r_{q-p}: 1 iff the edge {p, q} is in the Wood graph of x.
/// Requires 0 <= p < q <= n+1 on a truncated level.
int edge_bit(const Monomial& x, int p, int q);

/// Number of ones in the binary expansion of m.
int alpha(Exponent m);

/// Total number of dyadic bits, i.e. the edge count of the Wood graph.
int total_alpha(const Monomial& x);

/// True iff every dyadic bit of d is set in x (edge set of d inside edge set of x).
bool divides_edgewise(const Monomial& d, const Monomial& x);

/// True iff r_i(d) <= r_i(x) for every i (ordinary polynomial divisibility).
bool divides_exponentwise(const Monomial& d, const Monomial& x);

/// The monomial x / d; requires divides_exponentwise(d, x).
Monomial quotient(const Monomial& x, const Monomial& d);

/// Parses the monomial grammar:
///   "1" | term (sep term)*        term := "xi" INT ("^" INT)?    sep := "*" | spaces
///   "[r1,r2,...,r{n+1}]"
/// Throws ParseError (syntax) or std::out_of_range (index or exponent bound).
Monomial parse_monomial(std::string_view text, TruncationLevel level);

/// Number of monomials in A*(n): 2^{(n+1)(n+2)/2}.
std::uint64_t monomial_count(TruncationLevel level);

/// The index-th monomial in lexicographic order of exponent vectors (r_1 most significant).
Monomial monomial_at(TruncationLevel level, std::uint64_t index);

/// Every monomial of a truncated level, once, in lexicographic order of
/// exponent vectors. The range is lazy and cheap to copy.
class MonomialRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Monomial;
    using difference_type = std::ptrdiff_t;
    using pointer = const Monomial*;
    using reference = const Monomial&;

    iterator() : current_(TruncationLevel::untruncated()) {}
    iterator(TruncationLevel level, std::uint64_t index);

    const Monomial& operator*() const { return current_; }
    const Monomial* operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    std::uint64_t index_ = 0;
    std::uint64_t end_ = 0;
    Monomial current_;
  };

  /// Throws std::invalid_argument on the untruncated level.
  explicit MonomialRange(TruncationLevel level);

  iterator begin() const { return iterator(level_, 0); }
  iterator end() const { return iterator(level_, count_); }
  std::uint64_t size() const { return count_; }

 private:
  TruncationLevel level_;
  std::uint64_t count_;
};

inline MonomialRange enumerate_monomials(TruncationLevel level) { return MonomialRange(level); }

}  // namespace steengraph

template <>
struct std::hash<steengraph::Monomial> {
  std::size_t operator()(const steengraph::Monomial& m) const noexcept;
};

#endif  // STEENGRAPH_ALGEBRA_HPP_
