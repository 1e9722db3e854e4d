#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "destab/errors.hpp"
#include "destab/io.hpp"

using namespace destab;

TEST_CASE("inline json versus file path") {
  Json inline_doc = json_or_path_load(R"({"weights": [1, 0, 0]})");
  CHECK(load_weights(inline_doc) == WeightVector{1, 0, 0});

  const std::string path = "io_test_weights.json";
  {
    std::ofstream out(path);
    out << "[2, 1, 0]\n";
  }
  CHECK(load_weights(json_or_path_load(path)) == WeightVector{2, 1, 0});
  std::remove(path.c_str());

  CHECK_THROWS_AS(json_or_path_load("no_such_file.json"), InputError);
  CHECK_THROWS_AS(json_or_path_load("{not json"), InputError);
}

TEST_CASE("ideal files") {
  Json j = json_or_path_load(
      R"({"variables": ["x", "y", "z"], "generators": ["x*z - y^2"]})");
  HomogeneousIdeal I = load_ideal(j);
  CHECK(I.nvars() == 3);
  CHECK(I.generators().size() == 1);
  CHECK(I.generators()[0] == parse_polynomial("x*z - y^2", I.variables()));

  // Round trip through the serializer.
  Json out = ideal_json(I);
  CHECK(load_ideal(out).generators() == I.generators());
  CHECK(out["generators"][0] == "x*z - y^2");

  CHECK_THROWS_AS(load_ideal(json_or_path_load(R"({"variables": ["x"]})")), InputError);
  CHECK_THROWS_AS(
      load_ideal(json_or_path_load(
          R"({"variables": ["x", "y"], "generators": ["x + y^2"]})")),
      InputError);
}

TEST_CASE("weight files accept wrapped and bare arrays") {
  CHECK(load_weights(json_or_path_load(R"({"weights": [3, -1]})")) ==
        WeightVector{3, -1});
  CHECK(load_weights(json_or_path_load("[3, -1]")) == WeightVector{3, -1});
  CHECK_THROWS_AS(load_weights(json_or_path_load("[1.5]")), InputError);
  CHECK_THROWS_AS(load_weights(json_or_path_load(R"({"weights": "no"})")), InputError);
}

TEST_CASE("state files default the degree to the common character sum") {
  StateInput si = load_state(json_or_path_load(
      R"({"characters": [[2, 0, 0]], "labels": ["x^2"]})"));
  CHECK(si.degree == 2);
  CHECK(si.state.characters.size() == 1);
  CHECK(si.state.labels == std::vector<std::string>{"x^2"});

  StateInput sj = load_state(json_or_path_load(
      R"({"characters": [[1, 0, 1], [0, 2, 0]], "degree": 2})"));
  CHECK(sj.degree == 2);
  CHECK(sj.state.characters.size() == 2);

  CHECK_THROWS_AS(load_state(json_or_path_load(R"({"characters": []})")), InputError);
}

TEST_CASE("matrix files accept integers and exact fractions") {
  ExactMatrix m = load_matrix(json_or_path_load(R"([[1, "1/2"], [0, 1]])"));
  CHECK(m.rows() == 2);
  CHECK(m.at(0, 1) == Rational(1, 2));
  CHECK_THROWS_AS(load_matrix(json_or_path_load("[[1], [1, 2]]")), InputError);
  CHECK_THROWS_AS(load_matrix(json_or_path_load(R"([[0.5]])")), InputError);
}

TEST_CASE("report serialization is insertion-ordered and stable") {
  NormalizedValue nv{Rational(-8, 3), Rational(8, 3)};
  Json j = normalized_json(nv, false);
  CHECK(j["numerator"] == "-8/3");
  CHECK(j["normsq"] == "8/3");
  CHECK(j["display"] == "-8/3/sqrt(8/3)");
  CHECK_FALSE(j.contains("approx"));

  Json ja = normalized_json(nv, true);
  CHECK(ja.contains("approx"));
  CHECK(ja["approx"]["note"].get<std::string>().find("non-authoritative") !=
        std::string::npos);

  // Byte-identical across repeated renders.
  CHECK(render(j, "json") == render(normalized_json(nv, false), "json"));
}

TEST_CASE("render formats") {
  Json j;
  j["status"] = "Stable";
  j["values"] = Json::array({1, 2, 3});
  std::string table = render(j, "table");
  CHECK(table.find("status: Stable") != std::string::npos);
  CHECK(table.find("[1, 2, 3]") != std::string::npos);
  std::string json_text = render(j, "json");
  CHECK(json_text.back() == '\n');
  CHECK_THROWS_AS(render(j, "yaml"), InputError);
}
