#include "steengraph/hopf.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace steengraph {

namespace {

constexpr TruncationLevel kFree = TruncationLevel::untruncated();

template <typename T, typename Less>
void cancel_pairs(std::vector<T>& terms, Less less) {
  std::sort(terms.begin(), terms.end(), less);
  std::vector<T> kept;
  kept.reserve(terms.size());
  for (std::size_t k = 0; k < terms.size();) {
    std::size_t run = k + 1;
    while (run < terms.size() && terms[run] == terms[k]) ++run;
    if ((run - k) % 2 == 1) kept.push_back(terms[k]);
    k = run;
  }
  terms = std::move(kept);
}

Monomial xi_power(TruncationLevel level, int i, int j) {
  return i == 0 ? Monomial(level) : Monomial::generator_power(level, i, j);
}

}  // namespace

// ---------------------------------------------------------------------------
// TensorPolynomial

TensorPolynomial::TensorPolynomial(TruncationLevel level, std::vector<Tensor> terms)
    : level_(level), terms_(std::move(terms)) {
  for (const auto& [a, b] : terms_) {
    if (a.level() != level_ || b.level() != level_) {
      throw LevelMismatch("tensor factor outside " + level_.to_string());
    }
  }
  cancel_pairs(terms_, TermOrder{});
}

TensorPolynomial TensorPolynomial::unit(TruncationLevel level) {
  return TensorPolynomial(level, {{Monomial(level), Monomial(level)}});
}

bool TensorPolynomial::contains(const Tensor& t) const {
  return std::binary_search(terms_.begin(), terms_.end(), t, TermOrder{});
}

std::string TensorPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [a, b] : terms_) {
    if (!out.empty()) out += " + ";
    out += a.to_string() + " (x) " + b.to_string();
  }
  return out;
}

TensorPolynomial operator*(const TensorPolynomial& a, const TensorPolynomial& b) {
  if (a.level() != b.level()) throw LevelMismatch("multiplying tensors at different levels");
  std::vector<Tensor> products;
  products.reserve(a.size() * b.size());
  for (const auto& [a1, a2] : a.terms()) {
    for (const auto& [b1, b2] : b.terms()) {
      auto left = product_or_zero(a1, b1);
      if (!left) continue;
      auto right = product_or_zero(a2, b2);
      if (!right) continue;
      products.emplace_back(std::move(*left), std::move(*right));
    }
  }
  return TensorPolynomial(a.level(), std::move(products));
}

// ---------------------------------------------------------------------------
// Compositions

int Composition::target() const {
  int sum = 0;
  for (int part : parts) sum += part;
  return sum;
}

int Composition::offset(int k) const {
  int sum = 0;
  for (int m = 0; m < k - 1; ++m) sum += parts[static_cast<std::size_t>(m)];
  return sum;
}

std::vector<Composition> compositions(int i) {
  if (i < 1 || i > kMaxGenerators) {
    throw std::out_of_range("compositions of " + std::to_string(i) + " not supported");
  }
  std::vector<Composition> out;
  const std::uint32_t masks = 1U << (i - 1);
  out.reserve(masks);
  // Bit c-1 of the mask cuts between c and c+1.
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    Composition pi;
    int start = 0;
    for (int cut = 1; cut < i; ++cut) {
      if ((mask >> (cut - 1)) & 1U) {
        pi.parts.push_back(cut - start);
        start = cut;
      }
    }
    pi.parts.push_back(i - start);
    out.push_back(std::move(pi));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Coproduct and counit

TensorPolynomial coproduct_generator(int i, int j, TruncationLevel level) {
  static_cast<void>(Monomial::generator_power(level, i, j));  // validates (i, j)
  std::vector<Tensor> terms;
  for (int k = 0; k <= i; ++k) {
    // (xi_{i-k}^{2^k} (x) xi_k)^{2^j} = xi_{i-k}^{2^{j+k}} (x) xi_k^{2^j}
    auto left = reduce_to(frobenius(xi_power(kFree, i - k, k), j), level);
    auto right = reduce_to(frobenius(xi_power(kFree, k, 0), j), level);
    if (left && right) terms.emplace_back(*left, *right);
  }
  return TensorPolynomial(level, std::move(terms));
}

TensorPolynomial coproduct(const Monomial& x) {
  TensorPolynomial result = TensorPolynomial::unit(x.level());
  for (const DyadicBit& bit : x.dyadic_bits()) {
    result = result * coproduct_generator(bit.generator, bit.power, x.level());
  }
  return result;
}

int counit(const Monomial& x) { return x.is_unit() ? 1 : 0; }

int counit(const Polynomial& p) {
  int sum = 0;
  for (const auto& t : p.terms()) sum ^= counit(t);
  return sum;
}

// ---------------------------------------------------------------------------
// Antipode

Polynomial antipode_generator(int i, TruncationLevel level) {
  if (!level.has_generator(i)) {
    throw std::out_of_range("xi" + std::to_string(i) + " is not a generator of " + level.to_string());
  }
  std::vector<Monomial> terms;
  for (const Composition& pi : compositions(i)) {
    std::optional<Monomial> term = Monomial(kFree);
    for (int k = 1; k <= pi.length() && term; ++k) {
      const int part = pi.parts[static_cast<std::size_t>(k - 1)];
      term = product_or_zero(*term, Monomial::generator_power(kFree, part, pi.offset(k)));
    }
    if (term) {
      if (auto reduced = reduce_to(*term, level)) terms.push_back(*reduced);
    }
  }
  return Polynomial(level, std::move(terms));
}

Polynomial antipode(const Monomial& x) {
  Polynomial result(Monomial(x.level()));
  for (const DyadicBit& bit : x.dyadic_bits()) {
    result = result * frobenius(antipode_generator(bit.generator, kFree), bit.power, x.level());
  }
  return result;
}

Polynomial antipode(const Polynomial& p) {
  Polynomial sum(p.level());
  for (const auto& t : p.terms()) sum += antipode(t);
  return sum;
}

Polynomial multiply_out(const TensorPolynomial& t) {
  std::vector<Monomial> products;
  for (const auto& [a, b] : t.terms()) {
    if (auto p = product_or_zero(a, b)) products.push_back(*p);
  }
  return Polynomial(t.level(), std::move(products));
}

// ---------------------------------------------------------------------------
// Directed paths

Polynomial directed_path_polynomial(int j, int i, TruncationLevel level) {
  if (i < 1 || j < 0 || (level.is_truncated() && i + j > level.n() + 1) || i + j >= 63 ||
      i > kMaxGenerators) {
    throw std::out_of_range("no directed paths from 2^" + std::to_string(j) + " to 2^" +
                            std::to_string(i + j) + " in " + level.to_string());
  }
  std::vector<Monomial> terms;
  const std::uint32_t masks = 1U << (i - 1);
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    // Intermediate vertices j+1 .. i+j-1 selected by the mask.
    std::vector<Exponent> ex(static_cast<std::size_t>(kMaxGenerators), 0);
    int from = j;
    for (int step = 1; step <= i; ++step) {
      const int to = j + step;
      if (step < i && !((mask >> (step - 1)) & 1U)) continue;
      ex[static_cast<std::size_t>(to - from - 1)] += Exponent{1} << from;
      from = to;
    }
    terms.emplace_back(level, ex);
  }
  return Polynomial(level, std::move(terms));
}

// ---------------------------------------------------------------------------
// unilaterality from antipode summands

bool unilateral_via_antipode(const Monomial& x, FactorReading reading) {
  const TruncationLevel level = x.level();
  const int n = level.n();
  for (int i = 1; i <= n + 1; ++i) {
    for (int j = 0; i + j <= n + 1; ++j) {
      const Polynomial c = antipode(Monomial::generator_power(level, i, j));
      const bool found = std::any_of(c.terms().begin(), c.terms().end(), [&](const Monomial& d) {
        return reading == FactorReading::Edgewise ? divides_edgewise(d, x)
                                                  : divides_exponentwise(d, x);
      });
      if (!found) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Verification helpers

CheckResult verify_antipode_recursion(int i_max) {
  if (i_max < 1 || i_max > kMaxGenerators - 1) {
    throw std::out_of_range("i_max must lie in [1, " + std::to_string(kMaxGenerators - 1) + "]");
  }
  for (int i = 1; i <= i_max; ++i) {
    Polynomial sum(kFree);
    for (int k = 0; k <= i; ++k) {
      const Polynomial left(xi_power(kFree, i - k, k));
      const Polynomial right = k == 0 ? Polynomial(Monomial(kFree)) : antipode_generator(k, kFree);
      sum += left * right;
    }
    if (!sum.is_zero()) {
      return CheckResult::fail("recursion fails at i=" + std::to_string(i) + ": " + sum.to_string());
    }
  }
  return {};
}

CheckResult verify_hopf_ideal(int n) {
  const TruncationLevel level = TruncationLevel::truncated(n);
  if (n + 3 > kMaxGenerators) throw std::out_of_range("Hopf ideal check needs xi_{n+3}");

  std::vector<std::pair<int, int>> generators;  // (i, j) for xi_i^{2^j}
  for (int i = 1; i <= n + 1; ++i) generators.emplace_back(i, n + 2 - i);
  generators.emplace_back(n + 2, 0);
  generators.emplace_back(n + 3, 0);

  for (const auto& [i, j] : generators) {
    const Monomial g = Monomial::generator_power(kFree, i, j);
    const std::string name = g.to_string();
    if (reduce_to(g, level)) return CheckResult::fail(name + " survives in " + level.to_string());
    if (counit(g) != 0) return CheckResult::fail("counit of " + name + " is nonzero");

    std::vector<Tensor> image;
    const TensorPolynomial delta = coproduct_generator(i, j, kFree);
    for (const auto& [a, b] : delta.terms()) {
      auto ra = reduce_to(a, level);
      auto rb = reduce_to(b, level);
      if (ra && rb) image.emplace_back(*ra, *rb);
    }
    const TensorPolynomial projected(level, std::move(image));
    if (!projected.is_zero()) {
      return CheckResult::fail("coproduct of " + name + " projects to " + projected.to_string());
    }

    const Polynomial c = frobenius(antipode_generator(i, kFree), j, level);
    if (!c.is_zero()) return CheckResult::fail("antipode of " + name + " projects to " + c.to_string());
  }
  return {};
}

CheckResult check_counit_laws(const Monomial& x) {
  const TensorPolynomial delta = coproduct(x);
  std::vector<Monomial> left;
  std::vector<Monomial> right;
  for (const auto& [a, b] : delta.terms()) {
    if (counit(a)) left.push_back(b);
    if (counit(b)) right.push_back(a);
  }
  const Polynomial expected(x);
  if (Polynomial(x.level(), left) != expected) {
    return CheckResult::fail("(e x 1)D(" + x.to_string() + ") = " + Polynomial(x.level(), left).to_string());
  }
  if (Polynomial(x.level(), right) != expected) {
    return CheckResult::fail("(1 x e)D(" + x.to_string() + ") = " + Polynomial(x.level(), right).to_string());
  }
  return {};
}

CheckResult check_coassociativity(const Monomial& x) {
  using Triple = std::array<Monomial, 3>;
  auto less = [](const Triple& a, const Triple& b) {
    const TermOrder order;
    for (std::size_t k = 0; k < 3; ++k) {
      if (order(a[k], b[k])) return true;
      if (order(b[k], a[k])) return false;
    }
    return false;
  };

  std::unordered_map<Monomial, TensorPolynomial> cache;
  auto delta = [&](const Monomial& m) -> const TensorPolynomial& {
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, coproduct(m)).first;
    return it->second;
  };

  std::vector<Triple> left;
  std::vector<Triple> right;
  for (const auto& [a, b] : delta(x).terms()) {
    for (const auto& [a1, a2] : delta(a).terms()) left.push_back({a1, a2, b});
    for (const auto& [b1, b2] : delta(b).terms()) right.push_back({a, b1, b2});
  }
  cancel_pairs(left, less);
  cancel_pairs(right, less);
  if (left != right) {
    return CheckResult::fail("coassociativity fails for " + x.to_string() + " (" +
                             std::to_string(left.size()) + " vs " + std::to_string(right.size()) +
                             " terms)");
  }
  return {};
}

CheckResult check_antipode_identity(const Monomial& x) {
  std::unordered_map<Monomial, Polynomial> cache;
  auto c = [&](const Monomial& m) -> const Polynomial& {
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, antipode(m)).first;
    return it->second;
  };

  const TruncationLevel level = x.level();
  Polynomial left(level);
  Polynomial right(level);
  const TensorPolynomial delta = coproduct(x);
  for (const auto& [a, b] : delta.terms()) {
    left += c(a) * Polynomial(b);
    right += Polynomial(a) * c(b);
  }
  const Polynomial expected = counit(x) ? Polynomial(Monomial(level)) : Polynomial(level);
  if (left != expected) {
    return CheckResult::fail("mu(c x 1)D(" + x.to_string() + ") = " + left.to_string());
  }
  if (right != expected) {
    return CheckResult::fail("mu(1 x c)D(" + x.to_string() + ") = " + right.to_string());
  }
  return {};
}

}  // namespace steengraph
