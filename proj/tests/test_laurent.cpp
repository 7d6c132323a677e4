#include <doctest.h>

#include <random>

#include "markov/error.hpp"
#include "markov/laurent.hpp"

using namespace markov;

namespace {

LaurentPoly x(std::size_t i) { return LaurentPoly::variable(i); }

LaurentPoly mono(LaurentPoly::Exponents e, long long c = 1) { return LaurentPoly::monomial(e, c); }

LaurentPoly random_poly(std::mt19937_64& rng, int terms, bool allow_negative_exponents) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> exp(allow_negative_exponents ? -2 : 0, 3);
  LaurentPoly p;
  for (int i = 0; i < terms; ++i) {
    LaurentPoly::Exponents e{};
    for (auto& v : e) v = exp(rng);
    p += mono(e, coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("ring operations") {
  CHECK((x(0) - x(0)).is_zero());
  CHECK(mono({-1, 0, 0, 0, 0, 0}) * x(0) == LaurentPoly::constant(1));
  const LaurentPoly p = x(1) * x(1) * x(3) + x(2) * x(2);
  CHECK(p * LaurentPoly::constant(1) == p);
  CHECK(p.size() == 2);
  CHECK((p * LaurentPoly::constant(0)).is_zero());
  CHECK((x(0) + x(1)) * (x(0) - x(1)) == x(0) * x(0) - x(1) * x(1));
}

TEST_CASE("string form") {
  const LaurentPoly p = mono({-1, 2, 0, 1, 0, 0}) + mono({-1, 0, 2, 0, 0, 0}, -3);
  CHECK(p.str() == "1 * x1^-1 x2^2 x4^1 - 3 * x1^-1 x3^2");
  CHECK(LaurentPoly().str() == "0");
}

TEST_CASE("exact division examples") {
  const LaurentPoly p = x(1) * x(1) * x(3) + x(2) * x(2);
  CHECK(exact_div(p, x(0)) == mono({-1, 2, 0, 1, 0, 0}) + mono({-1, 0, 2, 0, 0, 0}));
  CHECK(exact_div(p, p) == LaurentPoly::constant(1));
  CHECK(exact_div(p * p * x(4), p) == p * x(4));
}

TEST_CASE("exact division rejects non-divisors") {
  auto rejects = [](const LaurentPoly& p, const LaurentPoly& q) {
    try {
      (void)exact_div(p, q);
      return false;
    } catch (const Error& e) {
      return e.code() == Errc::NotDivisible;
    }
  };
  CHECK(rejects(x(0) + x(1), x(0) + x(2)));
  CHECK(rejects(x(0), LaurentPoly::constant(2)));
  CHECK(rejects(x(0), LaurentPoly()));
  CHECK(rejects(x(0) * x(0) + LaurentPoly::constant(1), x(0) + LaurentPoly::constant(1)));
}

TEST_CASE("property: multiplication is commutative and distributive") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentPoly a = random_poly(rng, 4, true);
    const LaurentPoly b = random_poly(rng, 4, true);
    const LaurentPoly c = random_poly(rng, 3, true);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
  }
}

TEST_CASE("property: exact division round-trips products") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly p = random_poly(rng, 1 + rng() % 5, true);
    const LaurentPoly q = random_poly(rng, 1 + rng() % 4, true);
    if (q.is_zero()) continue;
    CHECK(exact_div(p * q, q) == p);
  }
}
