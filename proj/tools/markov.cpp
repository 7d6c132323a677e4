// markov: command-line front end for Farey triples and the c-/g-matrices of
// the Markov cluster algebra with principal coefficients.
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "markov/closedform.hpp"
#include "markov/exchange.hpp"
#include "markov/farey.hpp"
#include "markov/io.hpp"
#include "markov/plot.hpp"
#include "markov/verify.hpp"

namespace {

using namespace markov;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::Parse:
    case Errc::ZeroZero:
    case Errc::NotNeighbors:
    case Errc::InvalidTriple:
    case Errc::DepthTooLarge:
    case Errc::BadColumn:
    case Errc::BadShape:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

void print_block(std::ostream& out, const IntMatrix& m) {
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) width = std::max(width, m(r, c).str().size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << " ";
    for (std::size_t c = 0; c < m.cols(); ++c) out << " " << pad(m(r, c).str(), width);
    out << "\n";
  }
}

void print_csv_block(std::ostream& out, const std::string& name, const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << name << "," << r;
    for (std::size_t c = 0; c < m.cols(); ++c) out << "," << m(r, c).str();
    out << "\n";
  }
}

struct MatrixArgs {
  std::string triple;
  std::string word;
  bool oracle = false;
  bool g_only = false;
  std::string format = "pretty";
};

int run_matrix(const MatrixArgs& args) {
  FareyTriple t = FareyTriple::initial();
  if (!args.triple.empty()) {
    t = parse_triple(args.triple);
  } else {
    t = apply_word(t, parse_word(args.word));
  }
  MutationWord from_root = path_to_initial(t);
  std::reverse(from_root.begin(), from_root.end());
  const OutputRecord rec = OutputRecord::compute(t, from_root);

  if (args.oracle) {
    const ExtendedMatrix oracle = matrix_by_path(t);
    const GMatrix g_oracle = g_from_c(oracle.complementary());
    const bool c_ok = oracle.principal() == rec.principal &&
                      oracle.complementary() == rec.complementary;
    const bool g_ok = g_oracle.entries() == rec.g;
    if (!c_ok || !g_ok) {
      std::cerr << "oracle mismatch at triple " << render_triple(t) << ": "
                << (c_ok ? "" : "c-matrix " + oracle.entries().str() + " expected; ")
                << (g_ok ? "" : "g-matrix " + g_oracle.entries().str() + " expected") << "\n";
      return kExitFailure;
    }
  }

  std::ostream& out = std::cout;
  if (args.format == "json") {
    nlohmann::json j = to_json(rec);
    j["columns"] = {"0", "-1", "inf"};
    if (args.g_only) {
      j.erase("principal");
      j.erase("complementary");
    }
    if (args.oracle) j["oracle"] = "pass";
    out << j.dump() << "\n";
  } else if (args.format == "csv") {
    out << "block,row,c0,cm1,cinf\n";
    if (!args.g_only) {
      print_csv_block(out, "principal", rec.principal);
      print_csv_block(out, "complementary", rec.complementary);
    }
    print_csv_block(out, "g", rec.g);
  } else {
    out << "triple " << render_triple(t) << "   (component " << to_string(component(t))
        << ", depth " << rec.depth << ")\n";
    out << "columns 0, -1, inf\n";
    if (!args.g_only) {
      out << "principal part:\n";
      print_block(out, rec.principal);
      out << "c-matrix (complementary part):\n";
      print_block(out, rec.complementary);
    }
    out << "g-matrix:\n";
    print_block(out, rec.g);
    if (args.oracle) out << "oracle: pass\n";
  }
  return 0;
}

int run_enumerate(unsigned depth, bool count_only) {
  const auto tree = enumerate(depth);
  if (count_only) {
    std::cout << tree.size() << "\n";
    return 0;
  }
  std::string buffer;
  for (const auto& e : tree) {
    buffer += to_json(OutputRecord::compute(e.triple, e.word)).dump();
    buffer += '\n';
  }
  std::cout << buffer;
  return 0;
}

int run_verify(const VerifyOptions& options, const std::string& format) {
  const VerifyReport report = run_verification(options);
  if (format == "json") {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    std::cout << report.to_text();
  }
  if (const CheckResult* failure = report.first_failure()) {
    std::cerr << "first counterexample (" << failure->name << "): " << failure->counterexample
              << "\n";
    return kExitFailure;
  }
  return 0;
}

int run_plot(unsigned depth, const std::string& out_path, const std::string& format) {
  const auto points = collect_gvectors(depth);
  const std::string text = format == "csv" ? render_csv(points) : render_svg(points);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "cannot write " << out_path << "\n";
    return kExitUsage;
  }
  file << text;
  if (!file.flush()) {
    std::cerr << "cannot write " << out_path << "\n";
    return kExitUsage;
  }
  return 0;
}

std::optional<CaseLabel> parse_case(const std::string& name) {
  for (CaseLabel c : {CaseLabel::SpecialMinus, CaseLabel::SpecialPlus, CaseLabel::CaseI,
                      CaseLabel::CaseII, CaseLabel::CaseIII, CaseLabel::CaseIV, CaseLabel::CaseV,
                      CaseLabel::CaseVI}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Farey triples and the c-/g-matrices of the Markov cluster algebra"};
  app.require_subcommand(1);

  MatrixArgs matrix_args;
  auto add_matrix_options = [&matrix_args](CLI::App* cmd) {
    cmd->add_option("triple", matrix_args.triple, "Farey triple, e.g. 0/1,-1/1,inf");
    cmd->add_option("--word", matrix_args.word, "mutation word applied to the root, e.g. 0,-1,inf");
    cmd->add_flag("--oracle", matrix_args.oracle, "recompute by iterated mutation and compare");
    cmd->add_option("--format", matrix_args.format, "output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
  };
  CLI::App* matrix_cmd = app.add_subcommand("matrix", "c-matrix and g-matrix of a triple");
  add_matrix_options(matrix_cmd);
  matrix_cmd->add_flag("--g-only", matrix_args.g_only, "print only the g-matrix");
  CLI::App* gmatrix_cmd = app.add_subcommand("gmatrix", "g-matrix of a triple (matrix --g-only)");
  add_matrix_options(gmatrix_cmd);

  std::string mutate_triple, mutate_word;
  CLI::App* mutate_cmd = app.add_subcommand("mutate", "apply a mutation word to a triple");
  mutate_cmd->add_option("triple", mutate_triple, "Farey triple")->required();
  mutate_cmd->add_option("word", mutate_word, "letters over 0, -1, inf")->required();

  std::string path_triple;
  CLI::App* path_cmd = app.add_subcommand("path", "descent word from a triple to the root");
  path_cmd->add_option("triple", path_triple, "Farey triple")->required();

  unsigned enum_depth = 0;
  bool count_only = false;
  CLI::App* enum_cmd = app.add_subcommand("enumerate", "JSON lines for every triple up to a depth");
  enum_cmd->add_option("depth", enum_depth, "tree depth")->required()->check(CLI::Range(0u, kDefaultDepthCap));
  enum_cmd->add_flag("--count-only", count_only, "print only the number of triples");

  VerifyOptions verify_options;
  std::string verify_format = "text";
  std::string corrupt_case;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the full invariant suite");
  verify_cmd->add_option("--depth", verify_options.depth, "tree depth")->check(CLI::Range(0u, kDefaultDepthCap));
  verify_cmd->add_option("--symbolic-depth", verify_options.symbolic_depth, "longest symbolic word")
      ->check(CLI::Range(0u, 6u));
  verify_cmd->add_option("--format", verify_format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--corrupt-case", corrupt_case,
                         "perturb one closed-form case (exercises the failure path)")
      ->group("");

  unsigned plot_depth = 0;
  std::string plot_out, plot_format = "svg";
  CLI::App* plot_cmd = app.add_subcommand("plot-gvectors", "g-vectors projected onto x+y+z=1");
  plot_cmd->add_option("--depth", plot_depth, "tree depth")->required()->check(CLI::Range(0u, kPlotDepthCap));
  plot_cmd->add_option("--out", plot_out, "output file (stdout if omitted)");
  plot_cmd->add_option("--format", plot_format, "svg or csv")->check(CLI::IsMember({"svg", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (matrix_cmd->parsed()) {
      if (matrix_args.triple.empty() && matrix_cmd->count("--word") == 0) {
        std::cerr << "matrix: give a triple or --word\n";
        return kExitUsage;
      }
      return run_matrix(matrix_args);
    }
    if (gmatrix_cmd->parsed()) {
      if (matrix_args.triple.empty() && gmatrix_cmd->count("--word") == 0) {
        std::cerr << "gmatrix: give a triple or --word\n";
        return kExitUsage;
      }
      matrix_args.g_only = true;
      return run_matrix(matrix_args);
    }
    if (mutate_cmd->parsed()) {
      const FareyTriple t = apply_word(parse_triple(mutate_triple), parse_word(mutate_word));
      std::cout << render_triple(t) << "\n";
      return 0;
    }
    if (path_cmd->parsed()) {
      std::cout << render_word(path_to_initial(parse_triple(path_triple))) << "\n";
      return 0;
    }
    if (enum_cmd->parsed()) return run_enumerate(enum_depth, count_only);
    if (verify_cmd->parsed()) {
      if (!corrupt_case.empty()) {
        const auto label = parse_case(corrupt_case);
        if (!label) {
          std::cerr << "unknown case label " << corrupt_case << "\n";
          return kExitUsage;
        }
        verify_options.formulas = corrupted_formulas(*label);
      }
      return run_verify(verify_options, verify_format);
    }
    if (plot_cmd->parsed()) return run_plot(plot_depth, plot_out, plot_format);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitUsage;
}
