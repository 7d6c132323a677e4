#pragma once

// Cluster variables with principal coefficients as explicit Laurent
// polynomials, their Z^3-grading, and the check that their degrees are the
// closed-form g-vectors.

#include <array>
#include <string>
#include <vector>

#include "markov/exchange.hpp"
#include "markov/farey.hpp"
#include "markov/laurent.hpp"

namespace markov {

struct SymbolicSeed {
  ExtendedMatrix matrix;
  std::array<LaurentPoly, 3> vars;  // slot order

  friend bool operator==(const SymbolicSeed&, const SymbolicSeed&) = default;
};

SymbolicSeed initial_seed();

/// Matrix mutation plus the exchange relation for the variable in slot k.
SymbolicSeed mutate_seed(const SymbolicSeed& s, ParityClass k);

using DegreeVector = std::array<BigInt, 3>;

/// Degree under deg(x_j) = e_j (j <= 3) and deg(x_{3+j}) = -(column j of B+).
/// Throws Errc::Inhomogeneous if two terms disagree, Errc::NotDivisible on
/// the zero polynomial (which has no degree).
DegreeVector grading_degree(const LaurentPoly& p);

inline constexpr unsigned kDefaultSymbolicCap = 6;

struct WordReport {
  MutationWord word;
  bool passed = false;
  FareyTriple triple = FareyTriple::initial();
  std::array<DegreeVector, 3> degrees{};
  std::vector<std::string> findings;
  /// Observed, not required: every coefficient positive, no negative
  /// exponent on a frozen variable.
  bool positive_coefficients = true;
  bool frozen_nonnegative = true;
};

/// Mutates the initial seed and the initial triple along `word` and compares
/// the variables' degrees with the columns of g_matrix of the final triple.
/// Throws Errc::DepthTooLarge if the word is longer than `cap`.
WordReport verify_word(const MutationWord& word, unsigned cap = kDefaultSymbolicCap);

struct SymbolicSummary {
  std::size_t words = 0;        // reduced words visited, including the empty one
  std::size_t divisions = 0;    // exchange divisions performed
  std::size_t max_terms = 0;    // largest cluster variable seen
  bool positive_coefficients = true;
  bool frozen_nonnegative = true;
  std::vector<WordReport> failures;

  bool passed() const { return failures.empty(); }
};

/// verify_word over every reduced word of length <= max_length, sharing
/// prefixes so each seed is computed once.
SymbolicSummary verify_all_words(unsigned max_length, unsigned cap = kDefaultSymbolicCap);

}  // namespace markov
