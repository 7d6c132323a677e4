#pragma once

// The invariant suite behind `markov verify`: every closed form is compared
// with iterated mutation, and the structural properties of the tree, the
// matrices and the cluster variables are checked exhaustively up to a depth.

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "markov/closedform.hpp"
#include "markov/exchange.hpp"
#include "markov/farey.hpp"

namespace markov {

/// The closed forms under test. Swappable so the failure path can be
/// exercised with a deliberately wrong formula.
struct Formulas {
  std::function<ExtendedMatrix(const FareyTriple&)> c = c_matrix;
  std::function<GMatrix(const FareyTriple&)> g = g_matrix;
};

/// Formulas whose complementary part is off by one in the top-left entry for
/// every triple of the -1 component classified as `label`.
Formulas corrupted_formulas(CaseLabel label);

struct VerifyOptions {
  unsigned depth = 12;
  unsigned symbolic_depth = 5;
  unsigned equivariance_depth = 10;
  long decomposition_bound = 100;
  Formulas formulas;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;  // first failure only
  double seconds = 0.0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* first_failure() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

// Individual checks. `tree` is enumerate(depth) for the depth in question.
CheckResult check_tree_structure(unsigned depth);
CheckResult check_triple_involution(const std::vector<EnumeratedTriple>& tree);
CheckResult check_oracle_equivalence(const std::vector<EnumeratedTriple>& tree,
                                     const Formulas& formulas);
CheckResult check_matrix_involution(const std::vector<EnumeratedTriple>& tree);
CheckResult check_path_compatibility(const std::vector<EnumeratedTriple>& tree);
CheckResult check_sign_coherence(const std::vector<EnumeratedTriple>& tree);
CheckResult check_unimodularity(const std::vector<EnumeratedTriple>& tree,
                                const Formulas& formulas);
CheckResult check_equivariance(const std::vector<EnumeratedTriple>& tree,
                               const Formulas& formulas);
CheckResult check_edge_relabeling(const std::vector<EnumeratedTriple>& tree);
CheckResult check_decomposition(long bound);
CheckResult check_symbolic(unsigned max_length);

VerifyReport run_verification(const VerifyOptions& options);

}  // namespace markov
