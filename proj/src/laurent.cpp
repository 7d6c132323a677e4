#include "markov/laurent.hpp"

#include <algorithm>
#include <limits>

#include "markov/error.hpp"

namespace markov {

LaurentPoly LaurentPoly::monomial(const Exponents& exps, BigInt coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(exps, std::move(coeff));
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t index) {
  Exponents e{};
  e.at(index) = 1;
  return monomial(e);
}

LaurentPoly LaurentPoly::constant(BigInt c) { return monomial(Exponents{}, std::move(c)); }

void LaurentPoly::add_term(const Exponents& e, const BigInt& c) {
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly out;
  for (const auto& [ep, cp] : p.terms_) {
    for (const auto& [eq, cq] : q.terms_) {
      LaurentPoly::Exponents e;
      for (std::size_t i = 0; i < LaurentPoly::kVariables; ++i) e[i] = ep[i] + eq[i];
      out.add_term(e, cp * cq);
    }
  }
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt shown = c;
    if (first) {
      first = false;
    } else if (c < 0) {
      s += " - ";
      shown = -c;
    } else {
      s += " + ";
    }
    s += shown.str();
    bool star = false;
    for (std::size_t i = 0; i < kVariables; ++i) {
      if (e[i] == 0) continue;
      s += star ? " " : " * ";
      star = true;
      s += "x" + std::to_string(i + 1) + "^" + std::to_string(e[i]);
    }
  }
  return s;
}

namespace {

using Exponents = LaurentPoly::Exponents;

// Componentwise minimum exponent, i.e. the largest monomial dividing p.
Exponents min_exponents(const LaurentPoly& p) {
  Exponents m;
  m.fill(std::numeric_limits<std::int64_t>::max());
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  }
  return m;
}

LaurentPoly::Terms shifted(const LaurentPoly& p, const Exponents& by) {
  LaurentPoly::Terms out;
  for (const auto& [e, c] : p.terms()) {
    Exponents s;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = e[i] - by[i];
    out.emplace_hint(out.end(), s, c);
  }
  return out;
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw Error(Errc::NotDivisible, "division by the zero polynomial");
  if (p.is_zero()) return {};

  // After stripping the monomial content of both sides, q is a polynomial
  // not divisible by any variable, so q | p in the Laurent ring iff the
  // shifted q divides the shifted p in the polynomial ring.
  const Exponents p_shift = min_exponents(p);
  const Exponents q_shift = min_exponents(q);
  LaurentPoly::Terms rem = shifted(p, p_shift);
  const LaurentPoly::Terms divisor = shifted(q, q_shift);
  const auto& [lead_exp, lead_coeff] = *divisor.begin();

  LaurentPoly quotient;
  while (!rem.empty()) {
    const auto [rem_exp, rem_coeff] = *rem.begin();
    Exponents qe;
    for (std::size_t i = 0; i < qe.size(); ++i) {
      qe[i] = rem_exp[i] - lead_exp[i];
      if (qe[i] < 0) {
        throw Error(Errc::NotDivisible, "(" + p.str() + ") / (" + q.str() +
                                            ") leaves a remainder");
      }
    }
    BigInt rest;
    BigInt qc;
    boost::multiprecision::divide_qr(rem_coeff, lead_coeff, qc, rest);
    if (rest != 0) {
      throw Error(Errc::NotDivisible, "(" + p.str() + ") / (" + q.str() +
                                          ") has a non-integral quotient coefficient");
    }
    for (const auto& [de, dc] : divisor) {
      Exponents e;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = de[i] + qe[i];
      auto [it, inserted] = rem.try_emplace(e, 0);
      it->second -= qc * dc;
      if (it->second == 0) rem.erase(it);
    }
    Exponents unshifted;
    for (std::size_t i = 0; i < qe.size(); ++i) unshifted[i] = qe[i] + p_shift[i] - q_shift[i];
    quotient += LaurentPoly::monomial(unshifted, std::move(qc));
  }
  return quotient;
}

}  // namespace markov
