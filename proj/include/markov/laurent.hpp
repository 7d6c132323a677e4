#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "markov/bigint.hpp"

namespace markov {

/// Laurent polynomial in x1..x6 (x1..x3 cluster, x4..x6 frozen) with
/// arbitrary-precision integer coefficients. Terms are kept in descending
/// lexicographic order of exponent vectors and zero coefficients are never
/// stored, so structural equality is polynomial equality.
class LaurentPoly {
 public:
  static constexpr std::size_t kVariables = 6;
  using Exponents = std::array<std::int64_t, kVariables>;
  using Terms = std::map<Exponents, BigInt, std::greater<>>;

  LaurentPoly() = default;

  static LaurentPoly monomial(const Exponents& exps, BigInt coeff = 1);
  /// x_{index+1}, 0-based.
  static LaurentPoly variable(std::size_t index);
  static LaurentPoly constant(BigInt c);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }

  /// "c * x1^a1 x2^a2 ..." per term, zero exponents omitted, leading term
  /// first, joined by " + " / " - ".
  std::string str() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(const Exponents& e, const BigInt& c);

  Terms terms_;
};

/// r with r * q = p. Both sides are shifted into the polynomial ring and
/// divided by single-divisor lex division; any remainder throws
/// Errc::NotDivisible.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace markov
