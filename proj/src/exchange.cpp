#include "markov/exchange.hpp"

#include <algorithm>
#include <utility>

namespace markov {

ExtendedMatrix::ExtendedMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.cols();
  if (n == 0 || entries_.rows() != 2 * n) {
    throw Error(Errc::BadShape, "extended exchange matrix must be 2n x n");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (entries_(i, j) != -entries_(j, i)) {
        throw Error(Errc::BadShape, "principal part is not skew-symmetric");
      }
}

ExtendedMatrix ExtendedMatrix::from_parts(const IntMatrix& principal,
                                          const IntMatrix& complementary) {
  const std::size_t n = principal.cols();
  if (principal.rows() != n || complementary.rows() != n || complementary.cols() != n) {
    throw Error(Errc::BadShape, "principal and complementary parts must be n x n");
  }
  IntMatrix m(2 * n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = principal(r, c);
      m(n + r, c) = complementary(r, c);
    }
  return ExtendedMatrix(std::move(m));
}

const IntMatrix& b_plus() {
  static const IntMatrix m = IntMatrix::from_rows({{0, -2, 2}, {2, 0, -2}, {-2, 2, 0}});
  return m;
}

const IntMatrix& b_minus() {
  static const IntMatrix m = -b_plus();
  return m;
}

ExtendedMatrix initial_matrix() {
  return ExtendedMatrix::from_parts(b_plus(), IntMatrix::identity(3));
}

ExtendedMatrix mutate_matrix(const ExtendedMatrix& m, std::size_t k) {
  const std::size_t n = m.rank();
  if (k >= n) {
    throw Error(Errc::BadColumn,
                "column " + std::to_string(k) + " out of range for rank " + std::to_string(n));
  }
  const IntMatrix& b = m.entries();
  IntMatrix out(2 * n, n);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
      } else {
        const BigInt prod = b(i, k) * b(k, j);
        out(i, j) = b(i, j);
        if (prod > 0) out(i, j) += sign(b(i, k)) * prod;
      }
    }
  }
  return ExtendedMatrix(std::move(out));
}

std::vector<CVector> c_vectors(const ExtendedMatrix& m) {
  const IntMatrix comp = m.complementary();
  std::vector<CVector> out;
  for (std::size_t c = 0; c < comp.cols(); ++c) out.push_back(comp.column(c));
  return out;
}

bool is_sign_coherent(std::span<const BigInt> v) {
  const bool nonneg = std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x >= 0; });
  const bool nonpos = std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x <= 0; });
  return nonneg || nonpos;
}

GMatrix::GMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != 3 || entries_.cols() != 3) throw Error(Errc::BadShape, "g-matrix is 3 x 3");
}

std::array<BigInt, 3> GMatrix::column(std::size_t c) const {
  return {entries_(0, c), entries_(1, c), entries_(2, c)};
}

GMatrix g_from_c(const IntMatrix& c) {
  const IntMatrix ct = c.transpose();
  const BigInt det = determinant(ct);
  if (abs(det) != 1) {
    throw Error(Errc::NotUnimodular, "det = " + det.str() + " for C = " + c.str());
  }
  IntMatrix inv = adjugate(ct);
  if (det == -1) inv = -inv;
  return GMatrix(std::move(inv));
}

namespace {

// 0-based images of s for each rotation.
constexpr std::array<std::size_t, 3> kCycA{2, 0, 1};
constexpr std::array<std::size_t, 3> kCycB{1, 2, 0};

}  // namespace

IntMatrix act(Rotation rot, const IntMatrix& m) {
  if (m.rows() != 3 || m.cols() != 3) throw Error(Errc::BadShape, "A3 acts on 3 x 3 matrices");
  const auto& s = rot == Rotation::CycA ? kCycA : kCycB;
  IntMatrix out(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = m(s[i], s[j]);
  return out;
}

ExtendedMatrix act(Rotation rot, const ExtendedMatrix& m) {
  return ExtendedMatrix::from_parts(act(rot, m.principal()), act(rot, m.complementary()));
}

GMatrix act(Rotation rot, const GMatrix& g) { return GMatrix(act(rot, g.entries())); }

ExtendedMatrix matrix_by_path(const FareyTriple& t) {
  const MutationWord word = path_to_initial(t);
  ExtendedMatrix m = initial_matrix();
  for (auto it = word.rbegin(); it != word.rend(); ++it) m = mutate_matrix(m, *it);
  return m;
}

}  // namespace markov
