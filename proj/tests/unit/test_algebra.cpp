#include <doctest.h>

#include <bit>
#include <random>
#include <set>

#include "../oracles.hpp"
#include "steengraph/algebra.hpp"

using namespace steengraph;

namespace {

TruncationLevel L(int n) { return TruncationLevel::truncated(n); }

Monomial M(const char* text, int n) { return parse_monomial(text, L(n)); }

}  // namespace

TEST_CASE("truncation level bounds") {
  CHECK(L(0).exponent_bound(1) == 1);
  CHECK(L(2).exponent_bound(1) == 7);
  CHECK(L(2).exponent_bound(3) == 1);
  CHECK(L(3).exponent_bound(1) == 15);
  CHECK(L(3).exponent_bound(4) == 1);
  CHECK(L(3).vertex_count() == 5);
  CHECK_FALSE(L(2).has_generator(4));
  CHECK(L(2).to_string() == "A*(2)");
  CHECK(TruncationLevel::untruncated().to_string() == "A*");
  CHECK_THROWS_AS(TruncationLevel::truncated(-1), std::out_of_range);
  CHECK_THROWS_AS(TruncationLevel::truncated(kMaxTruncation + 1), std::out_of_range);
}

TEST_CASE("parse_monomial") {
  SUBCASE("generator words") {
    const Monomial x = M("xi1^6 xi2 xi3", 2);
    CHECK(x.exponents() == std::vector<Exponent>{6, 1, 1});
    CHECK(x.to_string() == "xi1^6*xi2^1*xi3^1");
  }
  SUBCASE("unit") {
    const Monomial one = M("1", 3);
    CHECK(one.exponents() == std::vector<Exponent>{0, 0, 0, 0});
    CHECK(one.is_unit());
    CHECK(one.to_string() == "1");
  }
  SUBCASE("star separators and repeats") {
    CHECK(M("xi1^15*xi3^2", 3) == M("xi3^2 xi1^15", 3));
    CHECK(M("xi1 xi1^2", 2) == M("xi1^3", 2));
    CHECK(M("xi2^0", 2).is_unit());
  }
  SUBCASE("compact form") {
    CHECK(M("[15,0,2,0]", 3) == M("xi1^15 xi3^2", 3));
    CHECK(M("[ 6, 1, 1 ]", 2).to_compact_string() == "[6,1,1]");
    CHECK_THROWS_AS(M("[15,0,2]", 3), ParseError);
  }
  SUBCASE("exponent bound") {
    CHECK_THROWS_AS(M("xi1^16", 3), std::out_of_range);
    CHECK_NOTHROW(M("xi1^15", 3));
    CHECK_THROWS_AS(M("xi1^8 xi1^8", 3), std::out_of_range);
  }
  SUBCASE("generator range") {
    CHECK_THROWS_AS(M("xi5", 3), std::out_of_range);
    CHECK_THROWS_AS(M("xi0", 3), std::out_of_range);
  }
  SUBCASE("syntax errors name the token") {
    try {
      M("xi1^6 yi2", 2);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.token() == "yi2");
    }
    CHECK_THROWS_AS(M("", 2), ParseError);
    CHECK_THROWS_AS(M("xi1^", 2), ParseError);
    CHECK_THROWS_AS(M("xi1**xi2", 2), ParseError);
    CHECK_THROWS_AS(M("xi1*", 2), ParseError);
    CHECK_THROWS_AS(M("1 xi1", 2), ParseError);
    CHECK_THROWS_AS(M("xi1^-1", 2), ParseError);
  }
}

TEST_CASE("monomial construction validates") {
  CHECK_THROWS_AS(Monomial(L(1), std::vector<Exponent>{1, 1, 1}), std::out_of_range);
  CHECK(Monomial(L(1), std::vector<Exponent>{1, 1, 0}) == M("xi1 xi2", 1));
  CHECK_THROWS_AS(Monomial(L(1), std::vector<Exponent>{4, 0}), std::out_of_range);
  CHECK(Monomial::generator_power(L(3), 3, 1) == M("xi3^2", 3));
  CHECK_THROWS_AS(Monomial::generator_power(L(3), 3, 2), std::out_of_range);
}

TEST_CASE("dyadic bits") {
  const auto bits = M("xi1^6 xi2 xi3", 2).dyadic_bits();
  REQUIRE(bits.size() == 4);
  std::set<std::pair<int, int>> edges;
  for (const DyadicBit& b : bits) edges.insert({b.tail(), b.head()});
  CHECK(edges == std::set<std::pair<int, int>>{{1, 2}, {2, 3}, {0, 2}, {0, 3}});
}

TEST_CASE("multiply") {
  CHECK(multiply(M("xi1^2", 2), M("xi1^4", 2)) == Polynomial(M("xi1^6", 2)));
  CHECK(multiply(M("xi1^4", 2), M("xi1^4", 2)).is_zero());
  CHECK(multiply(M("xi1 xi2", 2), M("xi1^2 xi2^2", 2)) == Polynomial(M("xi1^3 xi2^3", 2)));
  CHECK(multiply(M("1", 2), M("xi3", 2)) == Polynomial(M("xi3", 2)));
  CHECK_THROWS_AS(multiply(M("xi1", 1), M("xi1", 2)), LevelMismatch);
}

TEST_CASE("edge_bit") {
  const Monomial x = M("xi1^6 xi2^6 xi3 xi4", 3);
  CHECK(edge_bit(x, 2, 3) == 1);
  CHECK(edge_bit(x, 0, 1) == 0);
  CHECK(edge_bit(x, 0, 4) == 1);

  const Monomial y = M("xi1^15 xi3^2", 3);
  std::set<std::pair<int, int>> expected{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 4}};
  for (int p = 0; p <= 4; ++p) {
    for (int q = p + 1; q <= 4; ++q) {
      CHECK(edge_bit(y, p, q) == (expected.count({p, q}) ? 1 : 0));
      CHECK(edge_bit(M("1", 3), p, q) == 0);
    }
  }
  CHECK_THROWS_AS(edge_bit(y, 2, 2), std::out_of_range);
  CHECK_THROWS_AS(edge_bit(y, 3, 1), std::out_of_range);
  CHECK_THROWS_AS(edge_bit(y, 0, 5), std::out_of_range);
}

TEST_CASE("alpha") {
  CHECK(alpha(6) == 2);
  CHECK(alpha(0) == 0);
  CHECK(alpha(15) == 4);
  CHECK(total_alpha(M("xi1^15 xi3^2", 3)) == 5);
}

TEST_CASE("divides_edgewise") {
  CHECK(divides_edgewise(M("xi1^15", 3), M("xi1^15 xi3^2", 3)));
  CHECK_FALSE(divides_edgewise(M("xi1^3", 2), M("xi1^5", 2)));
  CHECK(divides_exponentwise(M("xi1^3", 2), M("xi1^5", 2)));
  for (const Monomial& x : enumerate_monomials(L(2))) CHECK(divides_edgewise(M("1", 2), x));
  CHECK_THROWS_AS(divides_edgewise(M("1", 1), M("1", 2)), LevelMismatch);
}

TEST_CASE("enumerate_monomials") {
  std::vector<std::string> n0;
  for (const Monomial& x : enumerate_monomials(L(0))) n0.push_back(x.to_string());
  CHECK(n0 == std::vector<std::string>{"1", "xi1^1"});
  CHECK(monomial_count(L(2)) == 64);
  CHECK(monomial_count(L(3)) == 1024);
  CHECK(monomial_count(L(4)) == 32768);

  std::set<std::vector<Exponent>> seen;
  std::uint64_t k = 0;
  for (const Monomial& x : enumerate_monomials(L(3))) {
    CHECK(monomial_at(L(3), k++) == x);
    seen.insert(x.exponents());
  }
  CHECK(seen.size() == 1024);
  CHECK_THROWS_AS(monomial_count(TruncationLevel::untruncated()), std::logic_error);
}

TEST_CASE("property: monomial is the product of its dyadic factors") {
  for (int n = 0; n <= 3; ++n) {
    for (const Monomial& x : enumerate_monomials(L(n))) {
      Polynomial product(Monomial(L(n)));
      for (const DyadicBit& b : x.dyadic_bits()) {
        product = product * Polynomial(Monomial::generator_power(L(n), b.generator, b.power));
      }
      REQUIRE(product == Polynomial(x));
    }
  }
}

TEST_CASE("property: multiply is commutative, associative and unital") {
  for (int n = 0; n <= 2; ++n) {
    const Monomial one(L(n));
    std::vector<Monomial> all;
    for (const Monomial& x : enumerate_monomials(L(n))) all.push_back(x);
    for (const Monomial& x : all) {
      CHECK(multiply(one, x) == Polynomial(x));
      for (const Monomial& y : all) REQUIRE(multiply(x, y) == multiply(y, x));
    }
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
      const Monomial& a = all[pick(rng)];
      const Monomial& b = all[pick(rng)];
      const Monomial& c = all[pick(rng)];
      REQUIRE(multiply(a, b) * Polynomial(c) == Polynomial(a) * multiply(b, c));
    }
  }
}

TEST_CASE("property: multiply matches overlay-and-carry") {
  for (int n = 0; n <= 2; ++n) {
    for (const Monomial& x : enumerate_monomials(L(n))) {
      for (const Monomial& y : enumerate_monomials(L(n))) {
        const Polynomial product = multiply(x, y);
        const auto carried = oracle::overlay_and_carry(x, y);
        if (carried) {
          REQUIRE(product == Polynomial(*carried));
        } else {
          REQUIRE(product.is_zero());
        }
      }
    }
  }
}

TEST_CASE("property: edge bits count the dyadic ones") {
  for (int n = 0; n <= 3; ++n) {
    for (const Monomial& x : enumerate_monomials(L(n))) {
      int bits = 0;
      for (int p = 0; p <= n + 1; ++p) {
        for (int q = p + 1; q <= n + 1; ++q) bits += edge_bit(x, p, q);
      }
      int ones = 0;
      for (int i = 1; i <= n + 1; ++i) ones += alpha(x.exponent(i));
      REQUIRE(bits == ones);
    }
  }
}

TEST_CASE("property: edgewise division leaves a nonnegative quotient") {
  for (int n = 0; n <= 2; ++n) {
    for (const Monomial& x : enumerate_monomials(L(n))) {
      for (const Monomial& d : enumerate_monomials(L(n))) {
        if (!divides_edgewise(d, x)) continue;
        REQUIRE(divides_exponentwise(d, x));
        REQUIRE(multiply(d, quotient(x, d)) == Polynomial(x));
      }
    }
  }
}

TEST_CASE("frobenius agrees with repeated squaring") {
  for (int n = 0; n <= 2; ++n) {
    for (const Monomial& x : enumerate_monomials(L(n))) {
      Polynomial power(x);
      for (int k = 0; k <= 2; ++k) {
        const auto direct = reduce_to(frobenius(x, k), L(n));
        if (direct) {
          REQUIRE(power == Polynomial(*direct));
        } else {
          REQUIRE(power.is_zero());
        }
        power = power * power;
      }
    }
  }
  CHECK_THROWS_AS(frobenius(M("xi1", 0), 64), std::overflow_error);
}

TEST_CASE("polynomial arithmetic over F2") {
  const Polynomial a(L(2), {M("xi1", 2), M("xi2", 2)});
  Polynomial b = a;
  b += a;
  CHECK(b.is_zero());
  CHECK(Polynomial(L(2), {M("xi1", 2), M("xi1", 2), M("xi3", 2)}) == Polynomial(M("xi3", 2)));
  CHECK(Polynomial(L(2)).to_string() == "0");
  CHECK(a.to_string() == "xi2^1 + xi1^1");
  CHECK(a * a == Polynomial(L(2), {M("xi1^2", 2), M("xi2^2", 2)}));
}

TEST_CASE("untruncated overflow is reported") {
  const TruncationLevel free = TruncationLevel::untruncated();
  const Monomial big(free, std::vector<Exponent>{Exponent{1} << 63});
  CHECK_THROWS_AS(product_or_zero(big, big), std::overflow_error);
}
