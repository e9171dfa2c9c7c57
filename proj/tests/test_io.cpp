#include <doctest.h>

#include <filesystem>
#include <string>
#include <variant>

#include "actkit/error.hpp"
#include "actkit/fixtures.hpp"
#include "actkit/io.hpp"

using namespace actkit;

namespace {

const std::filesystem::path kData = ACTKIT_FIXTURE_DIR;

template <class F>
ParseError parse_error_of(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no ParseError thrown");
  return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("semigroup text round trip") {
  for (const auto& name : fixtures::semigroup_names()) {
    const SemigroupPtr s = *fixtures::semigroup_named(name);
    const std::string text = format_semigroup(*s);
    const Semigroup back = parse_semigroup(text);
    CHECK(back == *s);
    CHECK(back.identity() == s->identity());
  }
  CHECK(format_semigroup(*fixtures::r2()) == "semigroup 2\n0 1\n0 1\n");
  CHECK(format_semigroup(*fixtures::z2()) == "semigroup 2\n0 1\n1 0\nidentity 0\n");
}

TEST_CASE("comments and blank lines") {
  const Semigroup s = parse_semigroup("# R2\n\nsemigroup 2  # order\n0 1\n\n0 1 # row f\n");
  CHECK(s == *fixtures::r2());
}

TEST_CASE("act text round trip") {
  for (const auto& name : fixtures::act_names()) {
    const Act a = *fixtures::act_named(name);
    CHECK(parse_act(format_act(a)) == a);
  }
  const Act inline_act = parse_act("act 2 over inline\nsemigroup 1\n0\n0\n1\n");
  CHECK(inline_act.size() == 2);
}

TEST_CASE("fixture files match the built-in fixtures") {
  const std::pair<const char*, const char*> semigroups[] = {
      {"r2.sg", "R2"}, {"l2.sg", "L2"}, {"m3.sg", "M3"}, {"l21.sg", "L21"},
      {"z2.sg", "Z2"}, {"z3.sg", "Z3"}, {"z4.sg", "Z4"}, {"k4.sg", "K4"},
      {"u3.sg", "U3"}, {"w4.sg", "W4"}};
  for (const auto& [file, name] : semigroups) {
    CAPTURE(file);
    CHECK(read_semigroup(kData / file) == **fixtures::semigroup_named(name));
  }
  CHECK(read_act(kData / "r2_plus_zero.act") == fixtures::r2_plus_zero());
  CHECK(read_act(kData / "two_zero.act") == fixtures::two_zero_act());
  CHECK(read_act(kData / "rees_factor.act") == fixtures::rees_factor_act());
  CHECK(std::holds_alternative<Act>(read_document(kData / "two_zero.act")));
  CHECK(std::holds_alternative<Semigroup>(read_document(kData / "w4.sg")));
}

TEST_CASE("JSON mirror") {
  const Act a = fixtures::r2_plus_zero();
  const Json j = to_json(a);
  CHECK(j["semigroup"]["table"] == Json::parse("[[0,1],[0,1]]"));
  CHECK(j["act"]["action"] == Json::parse("[[0,1],[0,1],[2,2]]"));
  CHECK(std::get<Act>(document_from_json(j)) == a);
  CHECK(std::get<Act>(parse_document(j.dump())) == a);

  const Json z2 = to_json(*fixtures::z2());
  CHECK(z2["semigroup"]["identity"] == 0);
  CHECK(std::get<Semigroup>(document_from_json(z2)) == *fixtures::z2());
  CHECK(to_json(ElementSet::of(std::initializer_list<Index>{1, 3})).dump() == "[1,3]");
  CHECK(to_json(ActHom{{2, 2, 0}}).dump() == "[2,2,0]");
}

TEST_CASE("parse errors carry line and column") {
  const ParseError range =
      parse_error_of([] { parse_semigroup("semigroup 2\n0 1\n0 7\n"); });
  CHECK(range.line() == 3);
  CHECK(range.column() == 3);

  const ParseError short_row = parse_error_of([] { parse_semigroup("semigroup 2\n0 1\n0\n"); });
  CHECK(short_row.line() == 3);

  const ParseError header = parse_error_of([] { parse_semigroup("semigroup x\n"); });
  CHECK(header.line() == 1);
  CHECK(header.column() == 11);

  const ParseError keyword = parse_error_of([] { parse_semigroup("monoid 2\n0 1\n1 0\n"); });
  CHECK(keyword.line() == 1);
  CHECK(keyword.column() == 1);

  const ParseError json =
      parse_error_of([] { parse_document("{\"semigroup\": {\"table\": [[0,1],\n [0, 1]], }"); });
  CHECK(json.line() == 2);

  const ParseError missing = parse_error_of([] { parse_act("act 2 over nowhere.sg\n0 0\n1 1\n"); });
  CHECK(missing.line() == 1);

  const ParseError trailing =
      parse_error_of([] { parse_semigroup("semigroup 1\n0\nidentity 0\nextra\n"); });
  CHECK(trailing.line() == 4);
}

TEST_CASE("well-formed text with invalid tables") {
  CHECK_THROWS_AS(parse_semigroup("semigroup 2\n1 1\n0 0\n"), MalformedError);
  CHECK_THROWS_AS(parse_semigroup("semigroup 2\n0 1\n1 0\nidentity 1\n"), MalformedError);
  CHECK_THROWS_AS(parse_act("act 2 over inline\nsemigroup 2\n0 1\n1 0\nidentity 0\n0 0\n0 0\n"),
                  MalformedError);
}
