#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "markov/io.hpp"

using namespace markov;
using markov::testing::frac;

namespace {

using P = ParityClass;

bool parse_error(auto&& fn) {
  try {
    fn();
    return false;
  } catch (const Error& e) {
    return e.code() == Errc::Parse;
  }
}

}  // namespace

TEST_CASE("fractions") {
  CHECK(parse_fraction("3/7") == frac(3, 7));
  CHECK(parse_fraction("-2") == frac(-2, 1));
  CHECK(parse_fraction("inf") == ExtRational::infinity());
  CHECK(parse_fraction("oo") == ExtRational::infinity());
  CHECK(parse_fraction("4/-6") == frac(-2, 3));
  CHECK(parse_fraction(" 1/0 ") == ExtRational::infinity());
  CHECK(parse_error([] { (void)parse_fraction("x/2"); }));
  CHECK(parse_error([] { (void)parse_fraction(""); }));
  CHECK(parse_error([] { (void)parse_fraction("1/2/3"); }));
}

TEST_CASE("triples") {
  CHECK(parse_triple("0/1,-1/1,inf") == FareyTriple::initial());
  CHECK(parse_triple("inf,0,-1") == FareyTriple::initial());
  CHECK(render_triple(parse_triple("2/1,1/1,inf")) == "2/1,1/1,1/0");
  CHECK(parse_error([] { (void)parse_triple("0/1,-1/1"); }));
  CHECK_THROWS_AS(parse_triple("0/1,1/2,3/2"), Error);
}

TEST_CASE("words") {
  CHECK(parse_word("0,-1,inf") == MutationWord{P::C0, P::Cm1, P::Cinf});
  CHECK(parse_word("").empty());
  CHECK(render_word({P::Cinf, P::C0}) == "inf,0");
  CHECK(parse_error([] { (void)parse_word("0,2"); }));
}

TEST_CASE("matrix json") {
  const IntMatrix m = IntMatrix::from_rows({{1, -2}, {3, 4}});
  const nlohmann::json j = to_json(m);
  CHECK(j.dump() == R"([["1","-2"],["3","4"]])");
  CHECK(int_matrix_from_json(j) == m);
  CHECK(parse_error([] { (void)int_matrix_from_json(nlohmann::json::parse(R"([["1"],["2","3"]])")); }));
  CHECK(int_matrix_from_json(nlohmann::json::parse(R"([[7]])")) == IntMatrix::from_rows({{7}}));
  CHECK(parse_error([] { (void)int_matrix_from_json(nlohmann::json::parse(R"([[1.5]])")); }));

  const ExtendedMatrix e = initial_matrix();
  CHECK(extended_matrix_from_json(to_json(e)) == e);
}

TEST_CASE("big entries survive json") {
  const FareyTriple t = apply_word(FareyTriple::initial(), MutationWord(1, P::Cm1));
  MutationWord w;
  for (int i = 0; i < 120; ++i) w.push_back(i % 2 ? P::C0 : P::Cm1);
  const FareyTriple far = apply_word(FareyTriple::initial(), w);
  const OutputRecord rec = OutputRecord::compute(far, w);
  CHECK(output_record_from_json(nlohmann::json::parse(to_json(rec).dump())) == rec);
  CHECK(t != far);
}

TEST_CASE("record round trip through depth 8") {
  for (const auto& e : enumerate(8)) {
    const OutputRecord rec = OutputRecord::compute(e.triple, e.word);
    CHECK(rec.depth == e.word.size());
    const OutputRecord back = output_record_from_json(nlohmann::json::parse(to_json(rec).dump()));
    CHECK(back == rec);
  }
}

TEST_CASE("malformed records") {
  CHECK(parse_error([] { (void)output_record_from_json(nlohmann::json::parse("{}")); }));
  CHECK(parse_error([] {
    (void)output_record_from_json(nlohmann::json::parse(R"({"triple":["0/1","-1/1"]})"));
  }));
}
