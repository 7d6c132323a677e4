#include <doctest.h>

#include <random>
#include <vector>

#include "helpers.hpp"
#include "markov/exchange.hpp"

using namespace markov;
using markov::testing::triple;

namespace {

using P = ParityClass;
using Rows = std::vector<std::vector<long long>>;

IntMatrix rows3(std::initializer_list<std::initializer_list<long long>> r) { return IntMatrix::from_rows(r); }

// Plain 64-bit transcription of the mutation rule, used only as an oracle.
Rows naive_mutate(const Rows& b, std::size_t k) {
  auto sgn = [](long long v) { return (v > 0) - (v < 0); };
  Rows out = b;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b[i].size(); ++j) {
      if (i == k || j == k) {
        out[i][j] = -b[i][j];
      } else {
        const long long prod = b[i][k] * b[k][j];
        out[i][j] = b[i][j] + sgn(b[i][k]) * (prod > 0 ? prod : 0);
      }
    }
  }
  return out;
}

IntMatrix to_matrix(const Rows& r) {
  IntMatrix m(r.size(), r.front().size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j) m(i, j) = r[i][j];
  return m;
}

void check_error(Errc expected, auto&& fn) {
  try {
    fn();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == expected);
  }
}

}  // namespace

TEST_CASE("initial matrix") {
  const ExtendedMatrix m = initial_matrix();
  CHECK(m.rank() == 3);
  CHECK(m.principal() == b_plus());
  CHECK(m.principal() == rows3({{0, -2, 2}, {2, 0, -2}, {-2, 2, 0}}));
  CHECK(m.complementary() == IntMatrix::identity(3));
  CHECK(b_minus() == -b_plus());
}

TEST_CASE("extended matrix validation") {
  check_error(Errc::BadShape, [] { (void)ExtendedMatrix(IntMatrix(3, 3)); });
  check_error(Errc::BadShape,
              [] { (void)ExtendedMatrix(IntMatrix::from_rows({{0, 1}, {1, 0}, {1, 0}, {0, 1}})); });
  check_error(Errc::BadColumn, [] { (void)mutate_matrix(initial_matrix(), std::size_t{3}); });
}

TEST_CASE("mutation examples") {
  const ExtendedMatrix m1 = mutate_matrix(initial_matrix(), P::Cm1);
  CHECK(m1.principal() == b_minus());
  CHECK(m1.complementary() == rows3({{1, 0, 0}, {2, -1, 0}, {0, 0, 1}}));
  const ExtendedMatrix minf = mutate_matrix(initial_matrix(), P::Cinf);
  CHECK(minf.principal() == b_minus());
  CHECK(minf.complementary() == rows3({{1, 0, 0}, {0, 1, 0}, {0, 2, -1}}));
  CHECK(mutate_matrix(m1, P::Cm1) == initial_matrix());
}

TEST_CASE("mutation of a rank 2 matrix by hand") {
  // A2 quiver with principal coefficients, mutated at the first column:
  // rows 0 and column 0 flip, b'_{21} = 0 + sgn(1) [1 * 1]_+ = 1.
  const ExtendedMatrix m(IntMatrix::from_rows({{0, 1}, {-1, 0}, {1, 0}, {0, 1}}));
  const ExtendedMatrix expected(IntMatrix::from_rows({{0, -1}, {1, 0}, {-1, 1}, {0, 1}}));
  CHECK(mutate_matrix(m, std::size_t{0}) == expected);
  CHECK(mutate_matrix(expected, std::size_t{0}) == m);
}

TEST_CASE("property: mutation agrees with a 64-bit transcription on random sizes") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> small(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    Rows b(2 * n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        b[i][j] = small(rng);
        b[j][i] = -b[i][j];
      }
    for (std::size_t i = n; i < 2 * n; ++i)
      for (std::size_t j = 0; j < n; ++j) b[i][j] = small(rng);
    const std::size_t k = rng() % n;
    const ExtendedMatrix m(to_matrix(b));
    const ExtendedMatrix once = mutate_matrix(m, k);
    CHECK(once.entries() == to_matrix(naive_mutate(b, k)));
    CHECK(mutate_matrix(once, k) == m);
  }
}

TEST_CASE("c-vectors and sign coherence") {
  auto cv = c_vectors(initial_matrix());
  CHECK(cv[0] == CVector{1, 0, 0});
  CHECK(cv[1] == CVector{0, 1, 0});
  CHECK(cv[2] == CVector{0, 0, 1});
  cv = c_vectors(mutate_matrix(initial_matrix(), P::Cm1));
  CHECK(cv[0] == CVector{1, 2, 0});
  CHECK(cv[1] == CVector{0, -1, 0});
  CHECK(cv[2] == CVector{0, 0, 1});
  cv = c_vectors(mutate_matrix(initial_matrix(), P::Cinf));
  CHECK(cv[1] == CVector{0, 1, 2});
  CHECK(cv[2] == CVector{0, 0, -1});

  const std::vector<BigInt> mixed{0, 2, -1}, pos{0, 1, 2}, neg{0, 0, -1};
  CHECK_FALSE(is_sign_coherent(mixed));
  CHECK(is_sign_coherent(pos));
  CHECK(is_sign_coherent(neg));
}

TEST_CASE("g from c") {
  CHECK(g_from_c(IntMatrix::identity(3)).entries() == IntMatrix::identity(3));
  CHECK(g_from_c(rows3({{1, 0, 0}, {2, -1, 0}, {0, 0, 1}})).entries() ==
        rows3({{1, 2, 0}, {0, -1, 0}, {0, 0, 1}}));
  CHECK(g_from_c(rows3({{1, 0, 0}, {0, 1, 0}, {0, 2, -1}})).entries() ==
        rows3({{1, 0, 0}, {0, 1, 2}, {0, 0, -1}}));
  check_error(Errc::NotUnimodular, [] { (void)g_from_c(rows3({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}})); });
}

TEST_CASE("property: g from c inverts the transpose along random paths") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    ExtendedMatrix m = initial_matrix();
    for (ParityClass k : markov::testing::random_word(rng, 1 + rng() % 20)) m = mutate_matrix(m, k);
    const IntMatrix c = m.complementary();
    const GMatrix g = g_from_c(c);
    CHECK(g.entries() * c.transpose() == IntMatrix::identity(3));
  }
}

TEST_CASE("cyclic action") {
  const ExtendedMatrix m1 = mutate_matrix(initial_matrix(), P::Cm1);
  CHECK(act(Rotation::CycA, m1).complementary() == rows3({{1, 0, 0}, {0, 1, 0}, {0, 2, -1}}));
  CHECK(act(Rotation::CycB, m1).complementary() == rows3({{-1, 0, 2}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(act(Rotation::CycA, b_plus()) == b_plus());
  CHECK(act(Rotation::CycB, b_plus()) == b_plus());
  // The two rotations undo each other.
  CHECK(act(Rotation::CycA, act(Rotation::CycB, m1)) == m1);
  const GMatrix g(rows3({{1, 2, 0}, {0, -1, 0}, {0, 0, 1}}));
  CHECK(act(Rotation::CycB, act(Rotation::CycA, g)) == g);
}

TEST_CASE("matrix by path") {
  CHECK(matrix_by_path(FareyTriple::initial()) == initial_matrix());
  const ExtendedMatrix a = matrix_by_path(triple("0/1,1/1,inf"));
  CHECK(a.principal() == b_minus());
  CHECK(a.complementary() == rows3({{1, 0, 0}, {2, -1, 0}, {0, 0, 1}}));
  const ExtendedMatrix b = matrix_by_path(triple("-2/1,-1/1,inf"));
  CHECK(b.principal() == b_minus());
  CHECK(b.complementary() == rows3({{-1, 0, 2}, {0, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("property: matrix by path follows the tree edges") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const MutationWord w = markov::testing::random_word(rng, 1 + rng() % 15);
    const FareyTriple t = apply_word(FareyTriple::initial(), w);
    ExtendedMatrix m = initial_matrix();
    for (ParityClass k : w) m = mutate_matrix(m, k);
    CHECK(matrix_by_path(t) == m);
  }
}
