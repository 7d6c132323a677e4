#include "markov/verify.hpp"

#include <chrono>
#include <numeric>
#include <set>
#include <sstream>

#include "markov/io.hpp"
#include "markov/symbolic.hpp"

namespace markov {

Formulas corrupted_formulas(CaseLabel label) {
  Formulas f;
  auto hit = [label](const FareyTriple& t) {
    const Component c = component(t);
    return (c == Component::Root || c == Component::Tm1) && classify(t) == label;
  };
  f.c = [hit](const FareyTriple& t) {
    ExtendedMatrix m = c_matrix(t);
    if (!hit(t)) return m;
    IntMatrix comp = m.complementary();
    comp(0, 0) += 1;
    return ExtendedMatrix::from_parts(m.principal(), comp);
  };
  return f;
}

bool VerifyReport::passed() const { return first_failure() == nullptr; }

const CheckResult* VerifyReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json item = {{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
    if (!c.passed) item["counterexample"] = c.counterexample;
    list.push_back(std::move(item));
  }
  return {{"passed", passed()}, {"checks", std::move(list)}};
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)\n";
    if (!c.passed) out << "  counterexample: " << c.counterexample << "\n";
  }
  out << (passed() ? "all checks passed" : "verification FAILED") << "\n";
  return out.str();
}

namespace {

using Clock = std::chrono::steady_clock;

// Runs body(result) with timing and converts a thrown library error into a
// failure carrying its message.
template <typename Body>
CheckResult timed(std::string name, Body&& body) {
  CheckResult r;
  r.name = std::move(name);
  const auto start = Clock::now();
  try {
    body(r);
  } catch (const Error& e) {
    r.passed = false;
    if (r.counterexample.empty()) r.counterexample = e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

void fail(CheckResult& r, const std::string& what) {
  if (r.passed) r.counterexample = what;
  r.passed = false;
}

std::string where(const EnumeratedTriple& e) {
  return "triple " + render_triple(e.triple) + " (word " + render_word(e.word) + ")";
}

}  // namespace

CheckResult check_tree_structure(unsigned depth) {
  return timed("tree-structure", [depth](CheckResult& r) {
    const auto tree = enumerate(depth);
    std::set<FareyTriple> seen;
    std::vector<std::size_t> per_level(depth + 1, 0);
    for (const auto& e : tree) {
      ++r.cases;
      if (!seen.insert(e.triple).second) fail(r, "duplicate " + where(e));
      ++per_level[e.word.size()];
      if (e.triple.is_initial()) continue;

      // Exactly one neighbor has smaller complexity, and the descent path is
      // the enumeration word read backwards.
      const BigInt here = complexity(e.triple);
      int lower = 0;
      for (ParityClass k : kParityClasses) lower += complexity(mutate(e.triple, k)) < here;
      if (lower != 1) fail(r, std::to_string(lower) + " descent directions at " + where(e));
      const MutationWord path = path_to_initial(e.triple);
      if (!std::equal(path.begin(), path.end(), e.word.rbegin(), e.word.rend())) {
        fail(r, "path_to_initial " + render_word(path) + " disagrees with " + where(e));
      }

      // The case split of the connectedness argument: [-z-1, -z, oo] with
      // z >= 1 descends at its smallest slot, everything else at its middle.
      const Positions pos = e.triple.positions();
      const bool negative_family = e.triple.qinf().is_infinite() &&
                                   e.triple[pos.second].num() < 0;
      const ParityClass expected = negative_family ? pos.first : pos.second;
      if (descent_direction(e.triple) != expected) fail(r, "case rule fails at " + where(e));
    }
    std::size_t total = 0;
    for (unsigned d = 0; d <= depth; ++d) {
      total += per_level[d];
      const std::size_t want = 1 + 3 * ((std::size_t{1} << d) - 1);
      if (total != want) {
        fail(r, "depth " + std::to_string(d) + " has " + std::to_string(total) +
                    " triples, expected " + std::to_string(want));
      }
    }
  });
}

CheckResult check_triple_involution(const std::vector<EnumeratedTriple>& tree) {
  return timed("triple-involution", [&tree](CheckResult& r) {
    for (const auto& e : tree) {
      for (ParityClass k : kParityClasses) {
        ++r.cases;
        const FareyTriple once = mutate(e.triple, k);
        for (ParityClass c : kParityClasses)
          if (parity_class(once[c]) != c) fail(r, "slot class broken by mu_" + std::string(label(k)) + " at " + where(e));
        if (mutate(once, k) != e.triple) {
          fail(r, "mu_" + std::string(label(k)) + " is not an involution at " + where(e));
        }
      }
    }
  });
}

CheckResult check_oracle_equivalence(const std::vector<EnumeratedTriple>& tree,
                                     const Formulas& formulas) {
  return timed("oracle-equivalence", [&](CheckResult& r) {
    for (const auto& e : tree) {
      ++r.cases;
      const ExtendedMatrix oracle = matrix_by_path(e.triple);
      const ExtendedMatrix closed = formulas.c(e.triple);
      if (closed != oracle) {
        fail(r, "c-matrix mismatch at " + where(e) + ": closed form " + closed.entries().str() +
                    " vs mutation " + oracle.entries().str());
        continue;
      }
      const IntMatrix& expected_principal = e.word.size() % 2 ? b_minus() : b_plus();
      if (oracle.principal() != expected_principal) {
        fail(r, "principal part has the wrong orientation at " + where(e));
      }
      const GMatrix g_oracle = g_from_c(oracle.complementary());
      const GMatrix g_closed = formulas.g(e.triple);
      if (g_closed != g_oracle) {
        fail(r, "g-matrix mismatch at " + where(e) + ": closed form " +
                    g_closed.entries().str() + " vs (C^T)^-1 " + g_oracle.entries().str());
      }
      // (C^T)^{-1} checked by multiplication, independent of the adjugate.
      if (g_closed.entries() * oracle.complementary().transpose() != IntMatrix::identity(3)) {
        fail(r, "G * C^T != I at " + where(e));
      }
    }
  });
}

CheckResult check_matrix_involution(const std::vector<EnumeratedTriple>& tree) {
  return timed("matrix-involution", [&tree](CheckResult& r) {
    for (const auto& e : tree) {
      const ExtendedMatrix m = matrix_by_path(e.triple);
      for (std::size_t k = 0; k < 3; ++k) {
        ++r.cases;
        if (mutate_matrix(mutate_matrix(m, k), k) != m) {
          fail(r, "matrix mutation " + std::to_string(k) + " is not an involution at " + where(e));
        }
      }
    }
  });
}

CheckResult check_path_compatibility(const std::vector<EnumeratedTriple>& tree) {
  return timed("path-compatibility", [&tree](CheckResult& r) {
    for (const auto& e : tree) {
      const ExtendedMatrix m = matrix_by_path(e.triple);
      for (ParityClass k : kParityClasses) {
        ++r.cases;
        if (matrix_by_path(mutate(e.triple, k)) != mutate_matrix(m, k)) {
          fail(r, "matrix_by_path does not commute with mu_" + std::string(label(k)) + " at " +
                      where(e));
        }
      }
    }
  });
}

CheckResult check_sign_coherence(const std::vector<EnumeratedTriple>& tree) {
  return timed("sign-coherence", [&tree](CheckResult& r) {
    for (const auto& e : tree) {
      for (const CVector& v : c_vectors(matrix_by_path(e.triple))) {
        ++r.cases;
        const bool zero = std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
        if (zero || !is_sign_coherent(v)) {
          fail(r, std::string(zero ? "zero" : "mixed-sign") + " c-vector at " + where(e));
        }
      }
    }
  });
}

CheckResult check_unimodularity(const std::vector<EnumeratedTriple>& tree,
                                const Formulas& formulas) {
  return timed("unimodularity-and-plane", [&](CheckResult& r) {
    for (const auto& e : tree) {
      ++r.cases;
      const BigInt det_c = determinant(formulas.c(e.triple).complementary());
      if (abs(det_c) != 1) fail(r, "det C = " + det_c.str() + " at " + where(e));
      const GMatrix g = formulas.g(e.triple);
      const BigInt det_g = determinant(g.entries());
      if (abs(det_g) != 1) fail(r, "det G = " + det_g.str() + " at " + where(e));
      for (std::size_t c = 0; c < 3; ++c) {
        const auto col = g.column(c);
        if (col[0] + col[1] + col[2] != 1) {
          fail(r, "g-vector column " + std::to_string(c) + " off the plane x+y+z=1 at " + where(e));
        }
      }
    }
  });
}

CheckResult check_equivariance(const std::vector<EnumeratedTriple>& tree,
                               const Formulas& formulas) {
  return timed("equivariance", [&](CheckResult& r) {
    for (const auto& e : tree) {
      if (component(e.triple) != Component::Tm1) continue;
      ++r.cases;
      const FareyTriple p = phi(e.triple);
      const FareyTriple s = psi(e.triple);
      const ExtendedMatrix m = matrix_by_path(e.triple);
      if (matrix_by_path(p) != act(Rotation::CycA, m)) fail(r, "mutation matrix of phi(T) != CycA . M at " + where(e));
      if (matrix_by_path(s) != act(Rotation::CycB, m)) fail(r, "mutation matrix of psi(T) != CycB . M at " + where(e));
      if (formulas.c(p) != act(Rotation::CycA, formulas.c(e.triple))) fail(r, "c(phi(T)) != CycA . c(T) at " + where(e));
      if (formulas.c(s) != act(Rotation::CycB, formulas.c(e.triple))) fail(r, "c(psi(T)) != CycB . c(T) at " + where(e));
      if (formulas.g(p) != act(Rotation::CycA, formulas.g(e.triple))) fail(r, "g(phi(T)) != CycA . g(T) at " + where(e));
      if (formulas.g(s) != act(Rotation::CycB, formulas.g(e.triple))) fail(r, "g(psi(T)) != CycB . g(T) at " + where(e));
    }
  });
}

CheckResult check_edge_relabeling(const std::vector<EnumeratedTriple>& tree) {
  return timed("edge-relabeling", [&tree](CheckResult& r) {
    using P = ParityClass;
    // Direction k in T3^{-1} goes to phi_label(k) in T3^{oo} and psi_label(k) in T3^{0}.
    auto phi_label = [](P k) { return k == P::Cm1 ? P::Cinf : k == P::C0 ? P::Cm1 : P::C0; };
    auto psi_label = [](P k) { return k == P::Cm1 ? P::C0 : k == P::C0 ? P::Cinf : P::Cm1; };
    std::set<FareyTriple> phi_image, psi_image, tinf, t0;
    for (const auto& e : tree) {
      const Component comp = component(e.triple);
      if (comp == Component::Tinf) tinf.insert(e.triple);
      if (comp == Component::T0) t0.insert(e.triple);
      if (comp != Component::Tm1) continue;
      ++r.cases;
      const FareyTriple p = phi(e.triple);
      const FareyTriple s = psi(e.triple);
      phi_image.insert(p);
      psi_image.insert(s);
      if (phi_inv(p) != e.triple) fail(r, "phi_inv(phi(T)) != T at " + where(e));
      if (psi_inv(s) != e.triple) fail(r, "psi_inv(psi(T)) != T at " + where(e));
      for (P k : kParityClasses) {
        const FareyTriple next = mutate(e.triple, k);
        if (component(next) != Component::Tm1) continue;  // the edge back to the root
        if (phi(next) != mutate(p, phi_label(k))) fail(r, "phi does not relabel mu_" + std::string(label(k)) + " at " + where(e));
        if (psi(next) != mutate(s, psi_label(k))) fail(r, "psi does not relabel mu_" + std::string(label(k)) + " at " + where(e));
      }
    }
    if (phi_image != tinf) fail(r, "phi is not a bijection onto the oo component at this depth");
    if (psi_image != t0) fail(r, "psi is not a bijection onto the 0 component at this depth");
  });
}

CheckResult check_decomposition(long bound) {
  return timed("farey-decomposition", [bound](CheckResult& r) {
    for (long den = 1; den <= bound; ++den) {
      for (long num = -(bound - den); num <= bound - den; ++num) {
        if (std::gcd(num, den) != 1) continue;
        ++r.cases;
        const ExtRational q = ExtRational::normalize(num, den);
        const auto [lo, hi] = farey_decompose(q);
        const auto tag = "q = " + q.str();
        if (delta(lo, hi) != 1 || delta(q, lo) != 1 || delta(q, hi) != 1) fail(r, "Delta != 1 for " + tag);
        if (farey_sum(lo, hi) != q) fail(r, "q' + q'' != q for " + tag);

        // Exhaustive: every neighbor pair with denominators <= den + 1.
        std::size_t found = 0;
        std::vector<ExtRational> nbrs;
        nbrs.push_back(ExtRational::infinity());
        // For each denominator y the neighbors solve num * y - den * x = +-1.
        for (long y = 1; y <= den + 1; ++y) {
          for (long sgn : {-1L, 1L}) {
            const long t = num * y - sgn;
            if (t % den == 0) nbrs.push_back(ExtRational::normalize(t / den, y));
          }
        }
        for (std::size_t i = 0; i < nbrs.size(); ++i)
          for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            if (delta(nbrs[i], nbrs[j]) == 1 && farey_sum(nbrs[i], nbrs[j]) == q) {
              ++found;
              auto a = nbrs[i], b = nbrs[j];
              if (b < a) std::swap(a, b);
              if (a != lo || b != hi) fail(r, "brute force finds a different pair for " + tag);
            }
        if (found != 1) fail(r, std::to_string(found) + " decompositions found for " + tag);
      }
    }
  });
}

CheckResult check_symbolic(unsigned max_length) {
  return timed("symbolic-g-vectors", [max_length](CheckResult& r) {
    const SymbolicSummary s = verify_all_words(max_length);
    r.cases = s.words;
    if (!s.passed()) {
      const WordReport& w = s.failures.front();
      fail(r, "word " + render_word(w.word) + " at triple " + render_triple(w.triple) + ": " +
                  (w.findings.empty() ? std::string("mismatch") : w.findings.front()));
    }
  });
}

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  const auto tree = enumerate(options.depth);
  const auto small_tree = enumerate(std::min(options.depth, options.equivariance_depth));
  const Formulas& f = options.formulas;
  report.checks.push_back(check_tree_structure(options.depth));
  report.checks.push_back(check_triple_involution(tree));
  report.checks.push_back(check_oracle_equivalence(tree, f));
  report.checks.push_back(check_matrix_involution(small_tree));
  report.checks.push_back(check_path_compatibility(small_tree));
  report.checks.push_back(check_sign_coherence(tree));
  report.checks.push_back(check_unimodularity(tree, f));
  report.checks.push_back(check_equivariance(small_tree, f));
  report.checks.push_back(check_edge_relabeling(small_tree));
  report.checks.push_back(check_decomposition(options.decomposition_bound));
  report.checks.push_back(check_symbolic(options.symbolic_depth));
  return report;
}

}  // namespace markov
