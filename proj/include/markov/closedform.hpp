#pragma once

// Closed-form c-matrices and g-matrices of the Markov pattern, indexed by
// Farey triples.

#include <string_view>

#include "markov/exchange.hpp"
#include "markov/farey.hpp"

namespace markov {

/// How a triple of the -1 component (or the root) picks its formula.
/// SpecialMinus is [a/1, (a-1)/1, 1/0], SpecialPlus is [a/1, (a+1)/1, 1/0].
/// CaseI..CaseVI are the six strict orderings of (q0, qm1, qinf):
///   I   q0 < qinf < qm1      II  qm1 < qinf < q0
///   III q0 < qm1 < qinf      IV  qinf < qm1 < q0
///   V   qm1 < q0 < qinf      VI  qinf < q0 < qm1
enum class CaseLabel { SpecialMinus, SpecialPlus, CaseI, CaseII, CaseIII, CaseIV, CaseV, CaseVI };

std::string_view to_string(CaseLabel c);

/// Numerators and denominators of the three slots: q0 = a/b, qm1 = c/d,
/// qinf = e/f.
struct TripleCoefficients {
  BigInt a, b, c, d, e, f;

  static TripleCoefficients of(const FareyTriple& t);
};

/// Throws Errc::WrongComponent outside the -1 component and the root.
CaseLabel classify(const FareyTriple& t);

ExtendedMatrix c_matrix_in_Tm1(const FareyTriple& t);
GMatrix g_matrix_in_Tm1(const FareyTriple& t);

/// Any triple: the -1 component directly, the other two through phi^{-1} or
/// psi^{-1} followed by the matching rotation.
ExtendedMatrix c_matrix(const FareyTriple& t);
GMatrix g_matrix(const FareyTriple& t);

}  // namespace markov
