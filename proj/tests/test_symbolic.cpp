#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "markov/closedform.hpp"
#include "markov/symbolic.hpp"

using namespace markov;

namespace {

using P = ParityClass;

LaurentPoly x(std::size_t i) { return LaurentPoly::variable(i); }

LaurentPoly mono(LaurentPoly::Exponents e) { return LaurentPoly::monomial(e); }

// Value at x1 = ... = x6 = 1.
BigInt at_ones(const LaurentPoly& p) {
  BigInt sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c;
  return sum;
}

}  // namespace

TEST_CASE("initial seed") {
  const SymbolicSeed s = initial_seed();
  CHECK(s.matrix == initial_matrix());
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(s.vars[j] == x(j));
    DegreeVector e{};
    e[j] = 1;
    CHECK(grading_degree(s.vars[j]) == e);
  }
}

TEST_CASE("single mutations by hand") {
  const SymbolicSeed root = initial_seed();
  const SymbolicSeed s0 = mutate_seed(root, P::C0);
  CHECK(s0.vars[0] == mono({-1, 2, 0, 1, 0, 0}) + mono({-1, 0, 2, 0, 0, 0}));
  CHECK(s0.matrix == mutate_matrix(initial_matrix(), P::C0));
  CHECK(mutate_seed(s0, P::C0) == root);
  const SymbolicSeed sm1 = mutate_seed(root, P::Cm1);
  CHECK(sm1.vars[1] == mono({0, -1, 2, 0, 1, 0}) + mono({2, -1, 0, 0, 0, 0}));
}

TEST_CASE("grading degrees") {
  CHECK(grading_degree(x(0)) == DegreeVector{1, 0, 0});
  CHECK(grading_degree(x(3)) == DegreeVector{0, -2, 2});
  CHECK(grading_degree(mono({-1, 2, 0, 1, 0, 0}) + mono({-1, 0, 2, 0, 0, 0})) ==
        DegreeVector{-1, 0, 2});
  CHECK_THROWS_AS(grading_degree(x(0) + x(1)), Error);
}

TEST_CASE("word reports") {
  const WordReport empty = verify_word({});
  CHECK(empty.passed);
  CHECK(empty.degrees[0] == DegreeVector{1, 0, 0});
  CHECK(empty.degrees[2] == DegreeVector{0, 0, 1});

  const WordReport zero = verify_word({P::C0});
  CHECK(zero.passed);
  CHECK(zero.degrees[0] == DegreeVector{-1, 0, 2});

  const WordReport m1 = verify_word({P::Cm1});
  CHECK(m1.passed);
  CHECK(m1.degrees[1] == DegreeVector{2, -1, 0});
  CHECK(m1.triple == markov::testing::triple("0/1,1/1,inf"));

  CHECK_THROWS_AS(verify_word(MutationWord(7, P::C0)), Error);
}

TEST_CASE("property: degrees equal g-vectors and values solve the Markov equation") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const MutationWord w = markov::testing::random_word(rng, 1 + rng() % 5);
    SymbolicSeed s = initial_seed();
    for (ParityClass k : w) s = mutate_seed(s, k);
    const FareyTriple t = apply_word(FareyTriple::initial(), w);
    const GMatrix g = g_matrix(t);
    for (std::size_t j = 0; j < 3; ++j) {
      const DegreeVector deg = grading_degree(s.vars[j]);
      CHECK(deg == g.column(j));
    }
    // With every variable specialized to 1 the seed is a Markov triple.
    const BigInt a = at_ones(s.vars[0]), b = at_ones(s.vars[1]), c = at_ones(s.vars[2]);
    CHECK(a * a + b * b + c * c == 3 * a * b * c);
    CHECK(s.matrix == matrix_by_path(t));
  }
}

TEST_CASE("all reduced words up to length 3") {
  const SymbolicSummary summary = verify_all_words(3);
  // 1 + 3 + 6 + 12
  CHECK(summary.words == 22);
  CHECK(summary.passed());
  CHECK(summary.positive_coefficients);
  CHECK(summary.frozen_nonnegative);
  CHECK(summary.max_terms > 1);
}

TEST_CASE("coefficients stay positive through length 5") {
  const SymbolicSummary summary = verify_all_words(5);
  CHECK(summary.words == 94);
  CHECK(summary.passed());
  CHECK(summary.positive_coefficients);
  CHECK(summary.frozen_nonnegative);
}
