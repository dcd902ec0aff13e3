#include <fstream>
#include <sstream>

#include "doctest.h"
#include "tvb/corpus.hpp"
#include "tvb/io.hpp"

using namespace tvb;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string error_code(const std::string& text) {
  try {
    parse_bundle(text);
  } catch (const Error& e) {
    return e.code;
  }
  return "";
}

const char* kMinimal = R"({
  "dim": 1,
  "rays": [[1], [-1]],
  "max_cones": [[0], [1]],
  "rank": 1,
  "filtrations": [
    {"steps": [{"jump": 0, "basis": [["1"]]}]},
    {"steps": [{"jump": 2, "basis": [["1"]]}]}
  ]
})";

}  // namespace

TEST_CASE("every corpus file parses and round-trips byte for byte") {
  for (const char* name : {"tp2", "p1p1_bignominkowski", "example_big",
                           "surface_1", "surface_2", "surface_3"}) {
    CAPTURE(name);
    std::string text = slurp(std::string(CORPUS_DIR) + "/" + name + ".bundle");
    ToricVectorBundle e = parse_bundle(text);
    CHECK(serialize_bundle(e) == text);
    CHECK(parse_bundle(serialize_bundle(e)) == e);
  }
}

TEST_CASE("corpus files agree with the built-in constructors") {
  for (const auto& [name, e] : corpus_all()) {
    CAPTURE(name);
    ToricVectorBundle loaded =
        load_bundle(std::string(CORPUS_DIR) + "/" + name + ".bundle");
    CHECK(loaded == e);
  }
}

TEST_CASE("serialization is independent of input formatting") {
  std::string compact =
      R"({"dim":1,"rays":[[1],[-1]],"max_cones":[[0],[1]],"rank":1,)"
      R"("filtrations":[{"steps":[{"jump":0,"basis":[["1"]]}]},)"
      R"({"steps":[{"jump":2,"basis":[["3/3"]]}]}]})";
  ToricVectorBundle a = parse_bundle(compact);
  ToricVectorBundle b = parse_bundle(kMinimal);
  CHECK(a == b);
  CHECK(serialize_bundle(a) == serialize_bundle(b));
}

TEST_CASE("basis rows are normalized to reduced echelon form") {
  std::string text = R"({
    "dim": 1, "rays": [[1], [-1]], "max_cones": [[0], [1]], "rank": 2,
    "filtrations": [
      {"steps": [{"jump": 0, "basis": [["2", "4"], ["1", "3"]]}]},
      {"steps": [{"jump": 0, "basis": [["1", "0"], ["0", "1"]]}]}
    ]
  })";
  ToricVectorBundle e = parse_bundle(text);
  CHECK(e.filtrations[0].steps[0].second.basis() ==
        QMat{{1, 0}, {0, 1}});
}

TEST_CASE("an explicit zero step is accepted as a terminator and dropped") {
  std::string text = R"({
    "dim": 1, "rays": [[1], [-1]], "max_cones": [[0], [1]], "rank": 1,
    "filtrations": [
      {"steps": [{"jump": 0, "basis": [["1"]]}, {"jump": 1, "basis": []}]},
      {"steps": [{"jump": 0, "basis": [["1"]]}]}
    ]
  })";
  ToricVectorBundle e = parse_bundle(text);
  CHECK(e.filtrations[0].steps.size() == 1);
}

TEST_CASE("distinct error codes per malformed construct") {
  CHECK(error_code("{ nope") == "bad_json");
  CHECK(error_code("[]") == "bad_json");

  std::string base = kMinimal;
  auto replaced = [&](const std::string& from, const std::string& to) {
    std::string s = base;
    s.replace(s.find(from), from.size(), to);
    return s;
  };

  CHECK(error_code(replaced("\"dim\": 1", "\"dimension\": 1")) ==
        "missing_field");
  CHECK(error_code(replaced("\"dim\": 1", "\"dim\": 0")) == "bad_dim");
  CHECK(error_code(replaced("\"dim\": 1", "\"dim\": \"one\"")) ==
        "bad_integer");
  CHECK(error_code(replaced("\"rays\": [[1], [-1]]", "\"rays\": []")) ==
        "bad_ray");
  CHECK(error_code(replaced("[[0], [1]]", "[[0], 1]")) == "bad_cone");
  CHECK(error_code(replaced("[[0], [1]]", "[[0], [7]]")) == "bad_cone_index");
  CHECK(error_code(replaced("\"rank\": 1", "\"rank\": 0")) == "bad_rank");
  CHECK(error_code(replaced("[\"1\"]", "\"1\"")) == "bad_basis");
  CHECK(error_code(replaced("\"1\"", "\"1/0\"")) == "bad_rational");
  CHECK(error_code(replaced("\"1\"", "\"x\"")) == "bad_rational");
  CHECK(error_code(replaced("{\"steps\": [{\"jump\": 0, \"basis\": [[\"1\"]]}]},",
                            "")) == "bad_filtration");

  // Termination: a filtration whose every step is the zero space.
  std::string empty_steps =
      replaced("[{\"jump\": 0, \"basis\": [[\"1\"]]}]", "[]");
  CHECK(error_code(empty_steps) == "filtration_not_terminating");
  try {
    parse_bundle(empty_steps);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("filtration does not terminate") !=
          std::string::npos);
  }

  // Fan validation runs on parse.
  CHECK(error_code(replaced("[[1], [-1]]", "[[2], [-1]]")) ==
        "nonprimitive_ray");
  CHECK(error_code(replaced("[[1], [-1]]", "[[1], [1]]")) == "duplicate_ray");
  CHECK(error_code(replaced("[[0], [1]]", "[[0]]")) == "not_complete");

  // Filtration shape validation runs on parse.
  std::string out_of_order = R"({
    "dim": 1, "rays": [[1], [-1]], "max_cones": [[0], [1]], "rank": 2,
    "filtrations": [
      {"steps": [{"jump": 0, "basis": [["1", "0"], ["0", "1"]]},
                 {"jump": -1, "basis": [["1", "0"]]}]},
      {"steps": [{"jump": 0, "basis": [["1", "0"], ["0", "1"]]}]}
    ]
  })";
  CHECK(error_code(out_of_order) == "filtration_order");
}

TEST_CASE("first filtration step must be the full space") {
  std::string text = R"({
    "dim": 1, "rays": [[1], [-1]], "max_cones": [[0], [1]], "rank": 2,
    "filtrations": [
      {"steps": [{"jump": 0, "basis": [["1", "0"]]}]},
      {"steps": [{"jump": 0, "basis": [["1", "0"], ["0", "1"]]}]}
    ]
  })";
  CHECK(error_code(text) == "filtration_not_full");
}

TEST_CASE("save and load through a file") {
  ToricVectorBundle e = corpus_tp2();
  std::string path = "io_tests_tmp.bundle";
  save_bundle(e, path);
  CHECK(load_bundle(path) == e);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_bundle(path), Error);
}
