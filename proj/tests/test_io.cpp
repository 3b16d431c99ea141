#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "beal/error.hpp"
#include "beal/fixtures.hpp"
#include "beal/io.hpp"
#include "support.hpp"

using namespace beal;
using testing::data_path;
using testing::q;

TEST_SUITE("io") {

TEST_CASE("bundled example files load and match the built-in fixtures") {
  const auto a1 = load_algebra(data_path("examples/example1_algebra.json"));
  CHECK(a1 == fixtures::example1_algebra());
  CHECK(a1.names() == fixtures::example1_algebra().names());
  CHECK(load_function(a1, data_path("examples/example1_function.json")) == fixtures::example1_function());

  const auto a2 = load_algebra(data_path("examples/example2_algebra.json"));
  CHECK(a2 == fixtures::example2_algebra());
  CHECK(load_function(a2, data_path("examples/example2_function.json")) == fixtures::example2_function());

  CHECK(load_algebra(data_path("examples/b2_algebra.json")) == fixtures::b2());
}

TEST_CASE("algebra documents round-trip") {
  const auto a = fixtures::example1_algebra();
  const auto doc = parse_algebra_document(algebra_to_json(a));
  CHECK(BEAlgebra::from_labels(doc.elements, doc.table) == a);

  const auto parsed = Json::parse(R"({"elements":["1","a"],"table":[["1","a"],["1","1"]]})");
  const auto d = parse_algebra_document(parsed);
  CHECK(d.elements == std::vector<std::string>{"1", "a"});
  CHECK_THROWS_AS(parse_algebra_document(Json::parse(R"({"elements":["1"]})")), InputError);
  CHECK_THROWS_AS(parse_algebra_document(Json::parse(R"({"elements":[1],"table":[[1]]})")), InputError);
  CHECK_THROWS_AS(parse_algebra_document(Json::parse(R"({"elements":["1"],"table":"x"})")), InputError);
}

TEST_CASE("function documents") {
  const auto b = fixtures::b2();
  const auto f = parse_function_document(b, Json::parse(R"({"function":{"a":"-9/10","1":"-0.1"}})"));
  CHECK(f.values() == std::vector<Rational>{q("-0.1"), q("-0.9")});
  CHECK(parse_function_document(b, Json::parse(R"({"function":{"1":0,"a":-1}})")).values() ==
        std::vector<Rational>{q("0"), q("-1")});

  // Binary floats would make boundary comparisons unreliable.
  CHECK_THROWS_AS(parse_function_document(b, Json::parse(R"({"function":{"1":-0.1,"a":"-0.9"}})")), InputError);
  CHECK_THROWS_AS(parse_function_document(b, Json::parse(R"({"function":{"1":"-0.1"}})")), InputError);
  CHECK_THROWS_AS(parse_function_document(b, Json::parse(R"({"function":{"1":"-0.1","a":"0","b":"0"}})")),
                  InputError);
  CHECK_THROWS_AS(parse_function_document(b, Json::parse(R"({"function":{"1":"-0.1","a":"0.5"}})")), InputError);
  CHECK_THROWS_AS(parse_function_document(b, Json::parse(R"({"f":{}})")), InputError);

  const auto back = function_to_json(b, f);
  CHECK(back.dump() == R"({"function":{"1":"-0.1","a":"-0.9"}})");
}

TEST_CASE("exact numbers from JSON") {
  CHECK(rational_from_json(Json("-3/4")) == q("-0.75"));
  CHECK(rational_from_json(Json(-1)) == q("-1"));
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), InputError);
  CHECK_THROWS_AS(rational_from_json(Json::array()), InputError);
}

TEST_CASE("file errors are input errors") {
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InputError);
  const auto tmp = std::filesystem::temp_directory_path() / "beal_io_bad.json";
  {
    std::ofstream out(tmp);
    out << "{ not json";
  }
  CHECK_THROWS_AS(read_json_file(tmp), InputError);
  write_json_file(tmp, Json{{"x", 1}});
  CHECK(read_json_file(tmp).at("x") == 1);
  std::filesystem::remove(tmp);
  CHECK_THROWS_AS(load_algebra(data_path("examples/not_be.json")), AxiomError);
}

}
