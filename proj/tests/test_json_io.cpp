#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "cayley/catalog.hpp"
#include "cayley/errors.hpp"
#include "cayley/json_io.hpp"

using namespace cayley;
using io::Json;

TEST_CASE("complex shorthand") {
  CHECK(io::parse_complex("2") == Complex(2, 0));
  CHECK(io::parse_complex("-0.5") == Complex(-0.5, 0));
  CHECK(io::parse_complex("2i") == Complex(0, 2));
  CHECK(io::parse_complex("i") == Complex(0, 1));
  CHECK(io::parse_complex("-i") == Complex(0, -1));
  CHECK(io::parse_complex("1+2i") == Complex(1, 2));
  CHECK(io::parse_complex("3-4.5i") == Complex(3, -4.5));
  CHECK(io::parse_complex("1e-3+2e+1i") == Complex(1e-3, 20));
  CHECK_THROWS_AS(io::parse_complex(""), ParseError);
  CHECK_THROWS_AS(io::parse_complex("abc"), ParseError);
}

TEST_CASE("matrix expressions") {
  const auto d = io::parse_matrix_expression("diag(2, 0.5)");
  REQUIRE(d.rows() == 2);
  CHECK(d(0, 0) == Complex(2));
  CHECK(d(1, 1) == Complex(0.5));
  CHECK(d(0, 1) == Complex(0));
  CHECK(io::parse_matrix_expression("diag(i,-i)")(1, 1) == Complex(0, -1));
  CHECK(io::parse_matrix_expression("identity 3") == identity(3));
  CHECK(io::parse_matrix_expression("I4") == identity(4));
  CHECK(io::parse_matrix_expression("I", 5) == identity(5));
  CHECK(io::parse_matrix_expression(R"({"re": [[1, 2], [3, 4]], "im": [[0, 1], [0, 0]]})")(0, 1) == Complex(2, 1));
  CHECK_THROWS_AS(io::parse_matrix_expression("I"), ParseError);
  CHECK_THROWS_AS(io::parse_matrix_expression("diag(1,2"), ParseError);
  CHECK_THROWS_AS(io::parse_matrix_expression("rot(3)"), ParseError);
  CHECK_THROWS_AS(io::parse_matrix_expression(R"({"re": [[1, 2]]})"), ParseError);
  CHECK_THROWS_AS(io::parse_matrix_expression(R"({"re": [[1, 2], [3)"), ParseError);
}

TEST_CASE("round trips") {
  Rng rng(1);
  const ComplexMatrix m = rng.complex_gaussian(3, 3);
  CHECK(io::matrix_from_json(io::matrix_to_json(m)) == m);

  AlgebraVector x{rng.complex_gaussian(5, 1)};
  CHECK(io::algebra_vector_from_json(io::algebra_vector_to_json(x)).coords == x.coords);

  CliffordElement u(3);
  for (auto& c : u.coeffs()) c = rng.complex_normal();
  const auto back = io::clifford_from_json(io::clifford_to_json(u));
  CHECK(back.n() == 3);
  CHECK(back.coeffs() == u.coeffs());
  CHECK_THROWS_AS(io::clifford_from_json(Json::parse(R"({"n": 2, "coeffs_re": [1, 0, 0]})")), ParseError);
}

TEST_CASE("representation descriptors") {
  const auto sl3 = io::representation_from_json(Json::parse(R"({"family": "sl", "n": 3})"));
  CHECK(sl3.g_dim() == 8);
  const auto irrep = io::representation_from_json(Json::parse(R"({"family": "sl2_irrep", "m": 3})"));
  CHECK(irrep.v_dim() == 4);

  Json custom = {{"family", "custom"}, {"name", "sl2-copy"}, {"basis", Json::array()}};
  const auto sl2 = make_sl(2);
  for (const auto& b : sl2.basis()) custom["basis"].push_back(io::matrix_to_json(b));
  const auto rep = io::representation_from_json(custom);
  CHECK(rep.name() == "sl2-copy");
  CHECK(rep.g_dim() == 3);

  CHECK_THROWS_AS(io::representation_from_json(Json::parse(R"({"family": "custom"})")), ParseError);
  CHECK_THROWS_AS(io::representation_from_json(Json::parse(R"({"family": "e8"})")), ParseError);
  CHECK_THROWS_AS(io::representation_from_json(Json::parse(R"({"family": "sl", "n": "3"})")), ParseError);
}

TEST_CASE("fiber report serialization") {
  Rng rng(2);
  const auto report = spin_fiber(random_skew(4, rng), true);
  const Json j = io::fiber_report_to_json(report);
  CHECK(j.at("family") == "spin");
  CHECK(j.at("count") == report.count);
  CHECK(j.at("elements").size() == report.elements.size());
  CHECK(j.at("roots").size() == report.roots.size());
}

TEST_CASE("json files") {
  const std::string path = "test_json_io_matrix.json";
  {
    std::ofstream out(path);
    out << io::matrix_to_json(identity(2)).dump();
  }
  CHECK(io::matrix_from_json(io::read_json_file(path)) == identity(2));
  {
    std::ofstream out(path);
    out << "{not json";
  }
  CHECK_THROWS_AS(io::read_json_file(path), ParseError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(io::read_json_file("does/not/exist.json"), ParseError);
}
