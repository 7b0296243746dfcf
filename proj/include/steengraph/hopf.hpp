#ifndef STEENGRAPH_HOPF_HPP_
#define STEENGRAPH_HOPF_HPP_

// Hopf algebra structure of A* and of its quotients A*(n):
//
//   coproduct  Δ(xi_i) = sum_{k=0}^{i} xi_{i-k}^{2^k} (x) xi_k      (xi_0 = 1)
//   counit     ε(xi_i) = 0
//   antipode   c(xi_i) = sum over compositions π of i of prod_k xi_{π(k)}^{2^{σ(k)}}
//
// all extended multiplicatively. In Wood-graph terms Δ(xi_i^{2^j}) lists the
// length-2 directed paths 2^j -> 2^{i+j} (including the two degenerate ones)
// and c(xi_i^{2^j}) lists every directed path 2^j -> 2^{i+j}.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "steengraph/algebra.hpp"

namespace steengraph {

using Tensor = std::pair<Monomial, Monomial>;

/// An element of A (x) A over F2: a set of (left, right) monomial pairs.
class TensorPolynomial {
 public:
  explicit TensorPolynomial(TruncationLevel level) : level_(level) {}
  TensorPolynomial(TruncationLevel level, std::vector<Tensor> terms);

  /// 1 (x) 1.
  static TensorPolynomial unit(TruncationLevel level);

  TruncationLevel level() const { return level_; }
  const std::vector<Tensor>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool contains(const Tensor& t) const;

  /// "a (x) b + c (x) d", or "0".
  std::string to_string() const;

  friend TensorPolynomial operator*(const TensorPolynomial& a, const TensorPolynomial& b);
  friend bool operator==(const TensorPolynomial&, const TensorPolynomial&) = default;

 private:
  TruncationLevel level_;
  std::vector<Tensor> terms_;  // sorted by TermOrder, no duplicates
};

/// An ordered partition of a positive integer.
struct Composition {
  std::vector<int> parts;

  int target() const;
  int length() const { return static_cast<int>(parts.size()); }
  /// σ(k): sum of the first k-1 parts, 1-based k.
  int offset(int k) const;
};

/// All 2^{i-1} compositions of i, ordered by their cut sets read as binary numbers.
std::vector<Composition> compositions(int i);

/// Δ(xi_i^{2^j}) at `level`. Throws std::out_of_range unless xi_i^{2^j} is an element there.
TensorPolynomial coproduct_generator(int i, int j, TruncationLevel level);

/// Δ(x), the product of the generator coproducts over the dyadic bits of x.
TensorPolynomial coproduct(const Monomial& x);

int counit(const Monomial& x);
int counit(const Polynomial& p);

/// c(xi_i) at `level` via the composition formula (terms past the bounds vanish).
Polynomial antipode_generator(int i, TruncationLevel level);

/// c(x): the product over dyadic bits xi_i^{2^j} of c(xi_i)^{2^j}.
Polynomial antipode(const Monomial& x);
Polynomial antipode(const Polynomial& p);

/// Multiplication map A (x) A -> A.
Polynomial multiply_out(const TensorPolynomial& t);

/// Sum of the monomials of all directed paths j = b_0 < b_1 < ... < b_m = i+j,
/// built straight from the vertex sequences. Requires i >= 1 and, when
/// truncated, i+j <= n+1.
Polynomial directed_path_polynomial(int j, int i, TruncationLevel level);

/// How a summand d of c(xi_i^{2^j}) counts as a factor of x.
enum class FactorReading {
  Edgewise,     // every dyadic bit of d is a bit of x
  Exponentwise  // d divides x as a polynomial
};

/// For every xi_i^{2^j} in A*(n), some summand of c(xi_i^{2^j}) is a factor of x.
bool unilateral_via_antipode(const Monomial& x, FactorReading reading = FactorReading::Edgewise);

struct CheckResult {
  bool passed = true;
  std::string detail;  // first failure, empty on success

  explicit operator bool() const { return passed; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

/// sum_{k=0}^{i} xi_{i-k}^{2^k} c(xi_k) == 0 in untruncated A* for i = 1..i_max.
CheckResult verify_antipode_recursion(int i_max);

/// The generators xi_1^{2^{n+1}}, ..., xi_{n+1}^2, xi_{n+2}, xi_{n+3} of I(n) have
/// Δ, c and ε vanishing after projection to A*(n). A finite check of the tail.
CheckResult verify_hopf_ideal(int n);

/// (ε (x) 1)Δ(x) = x = (1 (x) ε)Δ(x).
CheckResult check_counit_laws(const Monomial& x);

/// (Δ (x) 1)Δ(x) = (1 (x) Δ)Δ(x).
CheckResult check_coassociativity(const Monomial& x);

/// μ(c (x) 1)Δ(x) = ε(x)·1 = μ(1 (x) c)Δ(x).
CheckResult check_antipode_identity(const Monomial& x);

}  // namespace steengraph

#endif  // STEENGRAPH_HOPF_HPP_
