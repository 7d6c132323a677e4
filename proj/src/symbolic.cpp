#include "markov/symbolic.hpp"

#include <functional>
#include <utility>

#include "markov/closedform.hpp"

namespace markov {

SymbolicSeed initial_seed() {
  return {initial_matrix(),
          {LaurentPoly::variable(0), LaurentPoly::variable(1), LaurentPoly::variable(2)}};
}

SymbolicSeed mutate_seed(const SymbolicSeed& s, ParityClass k) {
  const std::size_t col = slot(k);
  const IntMatrix& b = s.matrix.entries();

  // Cluster slots contribute their current variable, frozen rows their
  // generator x4..x6 as a monomial exponent.
  LaurentPoly positive = LaurentPoly::constant(1);
  LaurentPoly negative = LaurentPoly::constant(1);
  LaurentPoly::Exponents pos_frozen{};
  LaurentPoly::Exponents neg_frozen{};
  for (std::size_t i = 0; i < 6; ++i) {
    const BigInt& entry = b(i, col);
    if (entry == 0) continue;
    const long power = static_cast<long>(abs(entry));
    if (i < 3) {
      LaurentPoly& target = entry > 0 ? positive : negative;
      for (long p = 0; p < power; ++p) target = target * s.vars[i];
    } else {
      (entry > 0 ? pos_frozen : neg_frozen)[i] += power;
    }
  }
  positive = positive * LaurentPoly::monomial(pos_frozen);
  negative = negative * LaurentPoly::monomial(neg_frozen);

  SymbolicSeed out{mutate_matrix(s.matrix, k), s.vars};
  out.vars[col] = exact_div(positive + negative, s.vars[col]);
  return out;
}

DegreeVector grading_degree(const LaurentPoly& p) {
  if (p.is_zero()) throw Error(Errc::NotDivisible, "the zero polynomial has no degree");
  const IntMatrix& bp = b_plus();
  auto degree_of = [&bp](const LaurentPoly::Exponents& e) {
    DegreeVector d{e[0], e[1], e[2]};
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t i = 0; i < 3; ++i) d[i] -= e[3 + j] * bp(i, j);
    }
    return d;
  };
  const auto& terms = p.terms();
  const LaurentPoly::Exponents& first = terms.begin()->first;
  const DegreeVector deg = degree_of(first);
  for (const auto& [e, c] : terms) {
    if (degree_of(e) != deg) {
      auto render = [](const LaurentPoly::Exponents& x) {
        std::string s = "(";
        for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
        return s + ")";
      };
      throw Error(Errc::Inhomogeneous,
                  "exponents " + render(first) + " and " + render(e) + " have different degrees");
    }
  }
  return deg;
}

namespace {

std::string word_str(const MutationWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += label(w[i]);
  }
  return s;
}

std::string degree_str(const DegreeVector& d) {
  return "(" + d[0].str() + "," + d[1].str() + "," + d[2].str() + ")";
}

// Compares a seed's variables against the closed-form g-matrix of `t`.
void check_seed(const SymbolicSeed& seed, const FareyTriple& t, WordReport& report) {
  report.triple = t;
  GMatrix expected = g_matrix(t);
  bool ok = true;
  for (std::size_t j = 0; j < 3; ++j) {
    const LaurentPoly& var = seed.vars[j];
    for (const auto& [e, c] : var.terms()) {
      if (c <= 0) report.positive_coefficients = false;
      if (e[3] < 0 || e[4] < 0 || e[5] < 0) report.frozen_nonnegative = false;
    }
    try {
      report.degrees[j] = grading_degree(var);
    } catch (const Error& err) {
      report.findings.push_back("slot " + std::string(label(class_at(j))) + ": " + err.what());
      ok = false;
      continue;
    }
    const auto g = expected.column(j);
    if (report.degrees[j] != DegreeVector{g[0], g[1], g[2]}) {
      report.findings.push_back("slot " + std::string(label(class_at(j))) + ": degree " +
                                degree_str(report.degrees[j]) + " but g-vector " +
                                degree_str({g[0], g[1], g[2]}) + " at triple " + t.str() +
                                " (word " + word_str(report.word) + ")");
      ok = false;
    }
  }
  report.passed = ok;
}

}  // namespace

WordReport verify_word(const MutationWord& word, unsigned cap) {
  if (word.size() > cap) {
    throw Error(Errc::DepthTooLarge, "word length " + std::to_string(word.size()) +
                                         " exceeds the symbolic cap " + std::to_string(cap));
  }
  WordReport report;
  report.word = word;
  SymbolicSeed seed = initial_seed();
  FareyTriple triple = FareyTriple::initial();
  try {
    for (ParityClass k : word) {
      seed = mutate_seed(seed, k);
      triple = mutate(triple, k);
    }
  } catch (const Error& err) {
    report.triple = triple;
    report.findings.push_back(err.what());
    report.passed = false;
    return report;
  }
  check_seed(seed, triple, report);
  return report;
}

SymbolicSummary verify_all_words(unsigned max_length, unsigned cap) {
  if (max_length > cap) {
    throw Error(Errc::DepthTooLarge, "symbolic depth " + std::to_string(max_length) +
                                         " exceeds the cap " + std::to_string(cap));
  }
  SymbolicSummary summary;
  MutationWord word;
  std::function<void(const SymbolicSeed&, const FareyTriple&)> visit =
      [&](const SymbolicSeed& seed, const FareyTriple& triple) {
        WordReport report;
        report.word = word;
        check_seed(seed, triple, report);
        ++summary.words;
        summary.positive_coefficients &= report.positive_coefficients;
        summary.frozen_nonnegative &= report.frozen_nonnegative;
        for (const auto& v : seed.vars) summary.max_terms = std::max(summary.max_terms, v.size());
        if (!report.passed) summary.failures.push_back(report);
        if (word.size() == max_length) return;
        for (ParityClass k : kParityClasses) {
          if (!word.empty() && word.back() == k) continue;
          word.push_back(k);
          try {
            ++summary.divisions;
            const SymbolicSeed next = mutate_seed(seed, k);
            visit(next, mutate(triple, k));
          } catch (const Error& err) {
            WordReport failed;
            failed.word = word;
            failed.triple = mutate(triple, k);
            failed.findings.push_back(err.what());
            summary.failures.push_back(std::move(failed));
          }
          word.pop_back();
        }
      };
  visit(initial_seed(), FareyTriple::initial());
  return summary;
}

}  // namespace markov
