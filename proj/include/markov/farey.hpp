#pragma once

// Extended rationals, Farey neighbors, Farey triples and their exchange tree.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "markov/bigint.hpp"
#include "markov/error.hpp"

namespace markov {

/// An element of Q u {oo} stored as the unique pair (num, den) with
/// gcd(|num|, den) = 1, den >= 0, and infinity written 1/0.
class ExtRational {
 public:
  /// Zero.
  ExtRational() : num_(0), den_(1) {}

  /// Canonical representative of num/den read as a projective value.
  /// Throws Errc::ZeroZero for 0/0.
  static ExtRational normalize(BigInt num, BigInt den);
  static ExtRational integer(BigInt n) { return ExtRational(std::move(n), 1); }
  static ExtRational infinity() { return ExtRational(1, 0); }

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }
  bool is_infinite() const noexcept { return den_ == 0; }

  /// "d/r", always with the slash.
  std::string str() const;

  friend bool operator==(const ExtRational&, const ExtRational&) = default;
  /// Total order of Q u {oo} with infinity greatest.
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

 private:
  ExtRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {}

  BigInt num_;
  BigInt den_;
};

/// |d(q) r(q2) - r(q) d(q2)|
BigInt delta(const ExtRational& q, const ExtRational& q2);

/// Mediant of two Farey neighbors. Throws Errc::NotNeighbors otherwise.
ExtRational farey_sum(const ExtRational& q, const ExtRational& q2);

/// (d - d') / (r - r') of two Farey neighbors; equal denominators give 1/0.
ExtRational farey_diff(const ExtRational& q, const ExtRational& q2);

// The three mutation directions, named after the parity pattern of the
// fraction they replace: C0 even/odd, Cm1 odd/odd, Cinf odd/even. The
// enumerator value is the slot (and matrix column) index.
enum class ParityClass : std::uint8_t { C0 = 0, Cm1 = 1, Cinf = 2 };

inline constexpr std::array<ParityClass, 3> kParityClasses{ParityClass::C0, ParityClass::Cm1,
                                                           ParityClass::Cinf};

constexpr std::size_t slot(ParityClass k) noexcept { return static_cast<std::size_t>(k); }
constexpr ParityClass class_at(std::size_t slot) noexcept { return static_cast<ParityClass>(slot); }

/// "0", "-1" or "inf".
std::string_view label(ParityClass k);
std::optional<ParityClass> parse_label(std::string_view text);

ParityClass parity_class(const ExtRational& q);

/// The unique unordered pair of mutual neighbors q', q'' with q = q' (+) q'',
/// smaller value first. Throws Errc::InfiniteInput for 1/0.
std::pair<ExtRational, ExtRational> farey_decompose(const ExtRational& q);

/// q -> -r/(r+d). Order three on Q u {oo}.
ExtRational moebius_m(const ExtRational& q);
/// q -> -(r+d)/d, the inverse of moebius_m.
ExtRational moebius_m_inv(const ExtRational& q);

/// Mutation directions applied left to right.
using MutationWord = std::vector<ParityClass>;

/// Cancels adjacent equal letters until none remain.
MutationWord reduce_word(const MutationWord& word);

/// Which slot holds the smallest, middle and largest value.
struct Positions {
  ParityClass first;
  ParityClass second;
  ParityClass third;
};

/// Three pairwise Farey neighbors stored by parity class: slot C0 holds the
/// even/odd component, Cm1 the odd/odd one, Cinf the odd/even one.
class FareyTriple {
 public:
  /// [0/1, -1/1, 1/0]
  static FareyTriple initial();

  /// Accepts the components in any order, re-slots them by parity and checks
  /// that they are pairwise neighbors. Throws Errc::NotNeighbors or
  /// Errc::InvalidTriple.
  static FareyTriple from_components(ExtRational a, ExtRational b, ExtRational c);

  const ExtRational& operator[](ParityClass k) const noexcept { return slots_[slot(k)]; }
  const ExtRational& q0() const noexcept { return slots_[0]; }
  const ExtRational& qm1() const noexcept { return slots_[1]; }
  const ExtRational& qinf() const noexcept { return slots_[2]; }

  Positions positions() const;
  const ExtRational& middle() const { return (*this)[positions().second]; }
  bool is_initial() const;

  /// "q0,qm1,qinf" in slot order.
  std::string str() const;

  friend bool operator==(const FareyTriple&, const FareyTriple&) = default;
  friend auto operator<=>(const FareyTriple& a, const FareyTriple& b) {
    return a.slots_ <=> b.slots_;
  }

 private:
  explicit FareyTriple(std::array<ExtRational, 3> slots) : slots_(std::move(slots)) {}

  friend FareyTriple mutate(const FareyTriple& t, ParityClass k);

  std::array<ExtRational, 3> slots_;
};

FareyTriple mutate(const FareyTriple& t, ParityClass k);
FareyTriple apply_word(FareyTriple t, const MutationWord& word);

/// |d(q_s)| + r(q_s) for the middle component q_s.
BigInt complexity(const FareyTriple& t);

/// The unique direction lowering the complexity. Throws Errc::IsInitial at
/// the root and Errc::NonUniqueDescent if zero or several directions do.
ParityClass descent_direction(const FareyTriple& t);

/// Letters leading from t down to the initial triple.
MutationWord path_to_initial(const FareyTriple& t);

/// The connected component of the tree minus the root, named after the
/// direction joining it to the root.
enum class Component { Root, T0, Tm1, Tinf };

Component component(const FareyTriple& t);
std::string_view to_string(Component c);

/// Isomorphism T3^{-1} -> T3^{oo}.
FareyTriple phi(const FareyTriple& t);
/// Isomorphism T3^{-1} -> T3^{0}.
FareyTriple psi(const FareyTriple& t);
FareyTriple phi_inv(const FareyTriple& t);
FareyTriple psi_inv(const FareyTriple& t);

struct EnumeratedTriple {
  FareyTriple triple;
  MutationWord word;  // applied to the root, left to right
};

inline constexpr unsigned kDefaultDepthCap = 20;

/// Breadth-first walk of the tree from the root; 1 + 3(2^depth - 1) entries.
/// Throws Errc::DepthTooLarge past `cap`.
std::vector<EnumeratedTriple> enumerate(unsigned depth, unsigned cap = kDefaultDepthCap);

}  // namespace markov
