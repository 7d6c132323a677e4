#pragma once

// Text and JSON forms shared by the CLI: triples as "0/1,-1/1,inf", words as
// "0,-1,inf", matrices with big integers as decimal strings.

#include <string>
#include <string_view>

#include <json.hpp>

#include "markov/exchange.hpp"
#include "markov/farey.hpp"

namespace markov {

/// "d/r", "n" (denominator 1) or "inf". Throws Errc::Parse or Errc::ZeroZero.
ExtRational parse_fraction(std::string_view text);

/// Three fractions separated by commas, in any slot order. Throws
/// Errc::Parse or the validation errors of FareyTriple::from_components.
FareyTriple parse_triple(std::string_view text);

/// Canonical "q0,qm1,qinf" with 1/0 for infinity.
std::string render_triple(const FareyTriple& t);

/// Comma-separated letters over {0, -1, inf}; empty text is the empty word.
MutationWord parse_word(std::string_view text);
std::string render_word(const MutationWord& w);

nlohmann::json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const nlohmann::json& j);

/// {"principal": [[...]], "complementary": [[...]], "columns": ["0","-1","inf"]}
nlohmann::json to_json(const ExtendedMatrix& m);
ExtendedMatrix extended_matrix_from_json(const nlohmann::json& j);

/// One line of `enumerate` output.
struct OutputRecord {
  FareyTriple triple = FareyTriple::initial();
  MutationWord word;
  IntMatrix principal;
  IntMatrix complementary;
  IntMatrix g;
  unsigned depth = 0;

  /// Closed forms for the triple reached from the root by `word`.
  static OutputRecord compute(const FareyTriple& t, const MutationWord& word);

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

nlohmann::json to_json(const OutputRecord& r);
OutputRecord output_record_from_json(const nlohmann::json& j);

}  // namespace markov
