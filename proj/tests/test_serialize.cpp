#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "resolv/error.hpp"
#include "resolv/serialize.hpp"
#include "resolv/verify.hpp"

using namespace resolv;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ZeroCode;
}

}  // namespace

TEST_CASE("field and code round trip") {
  FiniteField f = FiniteField::of_order(8);
  CHECK(to_json(f).dump() == R"({"p":2,"e":3,"modulus":[1,1,0,1]})");
  CHECK(field_from_json(to_json(f)) == f);
  for (const LinearCode& c : random_projective_codes(10, 3)) CHECK(code_from_json(to_json(c)) == c);
  LinearCode s = simplex(2, 3);
  Json j = to_json(s);
  CHECK(j["n"] == 7);
  CHECK(j["k"] == 3);
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"field", "n", "k", "generator"});
}

TEST_CASE("bare generator files") {
  LinearCode c = parse_code_file(R"({"q": 2, "generator": [[1,1,1]]})");
  CHECK(c.length() == 3);
  CHECK(c.dimension() == 1);
  CHECK(kind_of([] { parse_code_file("{"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_code_file(R"({"q": 2})"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_code_file(R"({"q": 2, "generator": [[1,2]]})"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_code_file(R"({"q": 2, "generator": [[1],[1,0]]})"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_code_file(R"({"q": 2, "n": 4, "generator": [[1,1,1]]})"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_code_file(R"({"q": 6, "generator": [[1]]})"); }) == ErrorKind::InvalidParameters);
  CHECK(kind_of([] { parse_code_file(R"({"q": 3, "generator": [[0,0]]})"); }) == ErrorKind::ZeroCode);
}

TEST_CASE("Betti table format") {
  BettiTable t = betti_table_hochster(projective_system_code(hyperoval(4)));
  Json j = to_json(t);
  CHECK(j.dump() ==
        R"({"n":6,"k":3,"q":4,"method":"hochster","entries":[{"i":0,"j":0,"beta":"1"},{"i":1,"j":4,"beta":"15"},)"
        R"({"i":2,"j":5,"beta":"24"},{"i":3,"j":6,"beta":"10"}],"pure":true,"ghw":[4,5,6]})");
  BettiTable back = betti_from_json(j);
  CHECK(same_values(back, t));
  CHECK(back.method == t.method);
  CHECK(kind_of([] { betti_from_json(Json::parse(R"({"n":1,"k":1,"q":2,"method":"x","entries":[]})")); }) ==
        ErrorKind::Parse);
  CHECK(kind_of([] {
          betti_from_json(Json::parse(R"({"n":1,"k":1,"q":2,"method":"hochster","entries":[{"i":1,"j":1,"beta":7}]})"));
        }) == ErrorKind::Parse);
}

TEST_CASE("big Betti values stay exact") {
  BettiTable t{0, 1, 0, BettiMethod::ClosedForm, {}};
  t.entries[{1, 1}] = BigInt("123456789012345678901234567890");
  CHECK(betti_from_json(to_json(t)).at(1, 1) == BigInt("123456789012345678901234567890"));
}

TEST_CASE("reports") {
  PurityReport r = purity(projective_system_code(dual_hyperoval(4)));
  Json j = to_json(r, 15);
  CHECK(j["pure"] == false);
  CHECK(j["left_pure_from"] == 2);
  CHECK(j["steps"][0]["weights"] == Json::array({10, 12}));
  CHECK(j["witnesses"][0]["lighter"]["weight"] == 10);
  CHECK(j["witnesses"][0]["lighter"]["support"].size() == 10);
  CHECK(to_json(WeightDistribution{{0, 1}, {4, 7}}).dump() == R"({"0":"1","4":"7"})");
  CHECK(support_to_json(0b1011, 4).dump() == "[0,1,3]");
}

TEST_CASE("family output is accepted as a code file") {
  LinearCode s = simplex(3, 2);
  Json wrapped{{"family", "simplex"}, {"code", to_json(s)}};
  CHECK(parse_code_file(wrapped.dump()) == s);
}
