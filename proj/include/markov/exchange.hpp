#pragma once

// Extended exchange matrices with principal coefficients, matrix mutation,
// c-vectors, g-matrices, and the cyclic A3 action.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "markov/farey.hpp"
#include "markov/matrix.hpp"

namespace markov {

/// A 2n x n integer matrix whose top n x n block (the principal part) is
/// skew-symmetric. The bottom block is the complementary part; its columns
/// are the c-vectors. For the Markov pattern columns follow the slot order
/// (C0, Cm1, Cinf).
class ExtendedMatrix {
 public:
  /// Throws Errc::BadShape unless `entries` is 2n x n with a skew-symmetric
  /// top block.
  explicit ExtendedMatrix(IntMatrix entries);
  static ExtendedMatrix from_parts(const IntMatrix& principal, const IntMatrix& complementary);

  std::size_t rank() const noexcept { return entries_.cols(); }
  const IntMatrix& entries() const noexcept { return entries_; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }

  IntMatrix principal() const { return entries_.row_block(0, rank()); }
  IntMatrix complementary() const { return entries_.row_block(rank(), rank()); }

  friend bool operator==(const ExtendedMatrix&, const ExtendedMatrix&) = default;

 private:
  IntMatrix entries_;
};

/// The Markov quiver: rows (0,-2,2), (2,0,-2), (-2,2,0).
const IntMatrix& b_plus();
/// The opposite orientation, -B+.
const IntMatrix& b_minus();

/// B+ over the 3 x 3 identity.
ExtendedMatrix initial_matrix();

/// Matrix mutation in direction k (0-based column). Throws Errc::BadColumn.
ExtendedMatrix mutate_matrix(const ExtendedMatrix& m, std::size_t k);
inline ExtendedMatrix mutate_matrix(const ExtendedMatrix& m, ParityClass k) {
  return mutate_matrix(m, slot(k));
}

using CVector = std::vector<BigInt>;

std::vector<CVector> c_vectors(const ExtendedMatrix& m);

/// All entries >= 0 or all entries <= 0.
bool is_sign_coherent(std::span<const BigInt> v);

/// 3 x 3 matrix whose columns are the g-vectors of a cluster, in slot order.
class GMatrix {
 public:
  explicit GMatrix(IntMatrix entries);

  const IntMatrix& entries() const noexcept { return entries_; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }
  std::array<BigInt, 3> column(std::size_t c) const;

  friend bool operator==(const GMatrix&, const GMatrix&) = default;

 private:
  IntMatrix entries_;
};

/// (C^T)^{-1} by adjugate. Throws Errc::NotUnimodular unless |det C| = 1.
GMatrix g_from_c(const IntMatrix& c);

/// The two non-trivial elements of the cyclic group acting on 3 x 3 matrices
/// by b'_{ij} = b_{s(i)s(j)}: CycA uses s = (1->3, 2->1, 3->2), CycB uses
/// s = (1->2, 2->3, 3->1).
enum class Rotation { CycA, CycB };

IntMatrix act(Rotation rot, const IntMatrix& m);
/// Rotates principal and complementary blocks simultaneously.
ExtendedMatrix act(Rotation rot, const ExtendedMatrix& m);
GMatrix act(Rotation rot, const GMatrix& g);

/// The matrix assigned to a triple by mutating the initial matrix along the
/// tree path from the root. Reference values for the closed forms.
ExtendedMatrix matrix_by_path(const FareyTriple& t);

}  // namespace markov
