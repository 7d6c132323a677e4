#include "markov/closedform.hpp"

#include <utility>

namespace markov {

std::string_view to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::SpecialMinus: return "SpecialMinus";
    case CaseLabel::SpecialPlus: return "SpecialPlus";
    case CaseLabel::CaseI: return "CaseI";
    case CaseLabel::CaseII: return "CaseII";
    case CaseLabel::CaseIII: return "CaseIII";
    case CaseLabel::CaseIV: return "CaseIV";
    case CaseLabel::CaseV: return "CaseV";
    case CaseLabel::CaseVI: return "CaseVI";
  }
  return "?";
}

TripleCoefficients TripleCoefficients::of(const FareyTriple& t) {
  return {t.q0().num(), t.q0().den(), t.qm1().num(), t.qm1().den(), t.qinf().num(), t.qinf().den()};
}

namespace {

IntMatrix rows3(std::array<BigInt, 9> v) {
  IntMatrix m(3, 3);
  for (std::size_t i = 0; i < 9; ++i) m(i / 3, i % 3) = std::move(v[i]);
  return m;
}

void require_tm1(const FareyTriple& t) {
  const Component c = component(t);
  if (c != Component::Root && c != Component::Tm1) {
    throw Error(Errc::WrongComponent, "closed form needs the root or the -1 component, but " +
                                          t.str() + " lies in " + std::string(to_string(c)));
  }
}

CaseLabel classify_unchecked(const FareyTriple& t) {
  const ExtRational& q0 = t.q0();
  const ExtRational& qm1 = t.qm1();
  const ExtRational& qinf = t.qinf();
  if (qinf.is_infinite()) {
    // Delta(q0, 1/0) = r(q0) = 1, so both finite slots are integers.
    const BigInt& a = q0.num();
    if (a < 0) {
      throw Error(Errc::Unclassifiable, "special triple " + t.str() + " with negative a");
    }
    if (qm1.num() == a - 1) return CaseLabel::SpecialMinus;
    if (qm1.num() == a + 1) return CaseLabel::SpecialPlus;
    throw Error(Errc::Unclassifiable, "triple " + t.str() + " has qinf = 1/0 but |c - a| != 1");
  }
  if (q0 < qinf && qinf < qm1) return CaseLabel::CaseI;
  if (qm1 < qinf && qinf < q0) return CaseLabel::CaseII;
  if (q0 < qm1 && qm1 < qinf) return CaseLabel::CaseIII;
  if (qinf < qm1 && qm1 < q0) return CaseLabel::CaseIV;
  if (qm1 < q0 && q0 < qinf) return CaseLabel::CaseV;
  return CaseLabel::CaseVI;
}

bool has_b_plus(CaseLabel c) {
  return c == CaseLabel::SpecialMinus || c == CaseLabel::CaseI || c == CaseLabel::CaseIV ||
         c == CaseLabel::CaseV;
}

IntMatrix complementary_for(CaseLabel label, const TripleCoefficients& k) {
  const auto& [a, b, c, d, e, f] = k;
  switch (label) {
    case CaseLabel::SpecialMinus:
      return rows3({1 - a, a, 0, -a, a + 1, 0, 0, 0, 1});
    case CaseLabel::SpecialPlus:
      return rows3({a + 1, -a, 0, a + 2, -(a + 1), 0, 0, 0, 1});
    case CaseLabel::CaseI:
      return rows3({a + 1, -c + 1, c - a - 1,
                    a + b + 1, -c - d + 1, c + d - a - b - 1,
                    b + 1, -d + 1, d - b - 1});
    case CaseLabel::CaseII:
      return rows3({-a + 1, c + 1, a - c - 1,
                    -a - b + 1, c + d + 1, a + b - c - d - 1,
                    -b + 1, d + 1, b - d - 1});
    case CaseLabel::CaseIII:
      return rows3({a + 1, e - a - 1, -e + 1,
                    a + b + 1, e + f - a - b - 1, -e - f + 1,
                    b + 1, f - b - 1, -f + 1});
    case CaseLabel::CaseIV:
      return rows3({-a + 1, a - e - 1, e + 1,
                    -a - b + 1, a + b - e - f - 1, e + f + 1,
                    -b + 1, b - f - 1, f + 1});
    case CaseLabel::CaseV:
      return rows3({e - c - 1, c + 1, -e + 1,
                    e + f - c - d - 1, c + d + 1, -e - f + 1,
                    f - d - 1, d + 1, -f + 1});
    case CaseLabel::CaseVI:
      return rows3({c - e - 1, -c + 1, e + 1,
                    c + d - e - f - 1, -c - d + 1, e + f + 1,
                    d - f - 1, -d + 1, f + 1});
  }
  throw Error(Errc::Unclassifiable, "unknown case label");
}

}  // namespace

CaseLabel classify(const FareyTriple& t) {
  require_tm1(t);
  return classify_unchecked(t);
}

ExtendedMatrix c_matrix_in_Tm1(const FareyTriple& t) {
  const CaseLabel label = classify(t);
  const IntMatrix comp = complementary_for(label, TripleCoefficients::of(t));
  return ExtendedMatrix::from_parts(has_b_plus(label) ? b_plus() : b_minus(), comp);
}

GMatrix g_matrix_in_Tm1(const FareyTriple& t) {
  const CaseLabel label = classify(t);
  const auto [a, b, c, d, e, f] = TripleCoefficients::of(t);
  switch (label) {
    case CaseLabel::SpecialMinus:
      return GMatrix(rows3({a + 1, a, 0, -a, -a + 1, 0, 0, 0, 1}));
    case CaseLabel::SpecialPlus:
      return GMatrix(rows3({a + 1, a + 2, 0, -a, -(a + 1), 0, 0, 0, 1}));
    default:
      return GMatrix(rows3({a + 1, c + 1, e + 1,
                            b - a - 1, d - c - 1, f - e - 1,
                            1 - b, 1 - d, 1 - f}));
  }
}

ExtendedMatrix c_matrix(const FareyTriple& t) {
  switch (component(t)) {
    case Component::Root:
    case Component::Tm1:
      return c_matrix_in_Tm1(t);
    case Component::Tinf:
      return act(Rotation::CycA, c_matrix_in_Tm1(phi_inv(t)));
    case Component::T0:
      return act(Rotation::CycB, c_matrix_in_Tm1(psi_inv(t)));
  }
  throw Error(Errc::WrongComponent, "unreachable component");
}

GMatrix g_matrix(const FareyTriple& t) {
  switch (component(t)) {
    case Component::Root:
    case Component::Tm1:
      return g_matrix_in_Tm1(t);
    case Component::Tinf:
      return act(Rotation::CycA, g_matrix_in_Tm1(phi_inv(t)));
    case Component::T0:
      return act(Rotation::CycB, g_matrix_in_Tm1(psi_inv(t)));
  }
  throw Error(Errc::WrongComponent, "unreachable component");
}

}  // namespace markov
