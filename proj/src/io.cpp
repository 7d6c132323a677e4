#include "markov/io.hpp"

#include <algorithm>
#include <cctype>

#include "markov/closedform.hpp"

namespace markov {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(Errc::Parse, "bad integer '" + std::string(text) + "' in '" + std::string(whole) + "'");
  }
  const BigInt v{std::string(digits)};
  return text.front() == '-' ? BigInt(-v) : v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

ExtRational parse_fraction(std::string_view text) {
  const std::string_view t = trim(text);
  if (t == "inf" || t == "oo") return ExtRational::infinity();
  const std::size_t slash = t.find('/');
  if (slash == std::string_view::npos) return ExtRational::integer(parse_integer(t, text));
  return ExtRational::normalize(parse_integer(trim(t.substr(0, slash)), text),
                                parse_integer(trim(t.substr(slash + 1)), text));
}

FareyTriple parse_triple(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) {
    throw Error(Errc::Parse, "a triple needs three comma-separated fractions, got '" +
                                 std::string(text) + "'");
  }
  return FareyTriple::from_components(parse_fraction(parts[0]), parse_fraction(parts[1]),
                                      parse_fraction(parts[2]));
}

std::string render_triple(const FareyTriple& t) { return t.str(); }

MutationWord parse_word(std::string_view text) {
  MutationWord w;
  if (trim(text).empty()) return w;
  for (std::string_view part : split(text, ',')) {
    const auto k = parse_label(trim(part));
    if (!k) {
      throw Error(Errc::Parse, "bad mutation letter '" + std::string(part) +
                                   "' (expected 0, -1 or inf)");
    }
    w.push_back(*k);
  }
  return w;
}

std::string render_word(const MutationWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += label(w[i]);
  }
  return s;
}

nlohmann::json to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix int_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw Error(Errc::Parse, "matrix must be a list of rows");
  IntMatrix m(j.size(), j[0].size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!j[r].is_array() || j[r].size() != m.cols()) throw Error(Errc::Parse, "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& v = j[r][c];
      if (v.is_string()) {
        m(r, c) = parse_integer(v.get<std::string>(), "matrix entry");
      } else if (v.is_number_integer()) {
        m(r, c) = v.get<long long>();
      } else {
        throw Error(Errc::Parse, "matrix entries must be decimal strings");
      }
    }
  }
  return m;
}

nlohmann::json to_json(const ExtendedMatrix& m) {
  return {{"principal", to_json(m.principal())},
          {"complementary", to_json(m.complementary())},
          {"columns", {"0", "-1", "inf"}}};
}

ExtendedMatrix extended_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("principal") || !j.contains("complementary")) {
    throw Error(Errc::Parse, "matrix object needs 'principal' and 'complementary'");
  }
  return ExtendedMatrix::from_parts(int_matrix_from_json(j.at("principal")),
                                    int_matrix_from_json(j.at("complementary")));
}

OutputRecord OutputRecord::compute(const FareyTriple& t, const MutationWord& word) {
  const ExtendedMatrix c = c_matrix(t);
  return {t,
          word,
          c.principal(),
          c.complementary(),
          g_matrix(t).entries(),
          static_cast<unsigned>(word.size())};
}

nlohmann::json to_json(const OutputRecord& r) {
  nlohmann::json triple = nlohmann::json::array();
  for (ParityClass k : kParityClasses) triple.push_back(r.triple[k].str());
  nlohmann::json word = nlohmann::json::array();
  for (ParityClass k : r.word) word.push_back(std::string(label(k)));
  return {{"triple", triple},       {"word", word},
          {"principal", to_json(r.principal)}, {"complementary", to_json(r.complementary)},
          {"g", to_json(r.g)},      {"depth", r.depth}};
}

OutputRecord output_record_from_json(const nlohmann::json& j) {
  try {
    const auto& tr = j.at("triple");
    if (!tr.is_array() || tr.size() != 3) throw Error(Errc::Parse, "'triple' must list three fractions");
    OutputRecord r;
    r.triple = FareyTriple::from_components(parse_fraction(tr[0].get<std::string>()),
                                            parse_fraction(tr[1].get<std::string>()),
                                            parse_fraction(tr[2].get<std::string>()));
    for (const auto& letter : j.at("word")) {
      const auto k = parse_label(letter.get<std::string>());
      if (!k) throw Error(Errc::Parse, "bad mutation letter in 'word'");
      r.word.push_back(*k);
    }
    r.principal = int_matrix_from_json(j.at("principal"));
    r.complementary = int_matrix_from_json(j.at("complementary"));
    r.g = int_matrix_from_json(j.at("g"));
    r.depth = j.at("depth").get<unsigned>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Parse, std::string("malformed record: ") + e.what());
  }
}

}  // namespace markov
