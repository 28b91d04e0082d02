#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "cayley/json_io.hpp"
#include "cayley/matrix.hpp"

using cayley::io::Json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(CAYLEY_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json json_of(const Run& r) {
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

cayley::ComplexMatrix matrix_of(const Json& j) { return cayley::io::matrix_from_json(j); }

}  // namespace

TEST_CASE("map: sl(2) diagonal element") {
  const auto j = json_of(cli("map --group sl --n 2 --element 'diag(2,0.5)'"));
  const auto phi = matrix_of(j.at("phi_matrix"));
  CHECK(std::abs(phi(0, 0) - 0.75) < 1e-12);
  CHECK(std::abs(phi(1, 1) + 0.75) < 1e-12);
  CHECK(std::abs(phi(0, 1)) < 1e-12);
}

TEST_CASE("map: identity in so(4) goes to zero") {
  const auto j = json_of(cli("map --group so --n 4 --element I"));
  CHECK(matrix_of(j.at("phi_matrix")).norm() < 1e-12);
}

TEST_CASE("map: sampled unipotent element has nilpotent image") {
  const auto j = json_of(cli("map --group sl --n 3 --sample unipotent --seed 7"));
  for (auto z : cayley::eigenvalues(matrix_of(j.at("phi_matrix")))) CHECK(std::abs(z) < 1e-7);
}

TEST_CASE("psi examples") {
  auto psi = [](const std::string& args) {
    const auto j = json_of(cli("psi --group sl --n 2 " + args));
    return std::complex<double>(j.at("psi")[0].get<double>(), j.at("psi")[1].get<double>());
  };
  CHECK(std::abs(psi("--element I") - 1.0) < 1e-12);
  CHECK(std::abs(psi("--element 'diag(2,0.5)'") - 1.25) < 1e-12);
  CHECK(std::abs(psi("--element 'diag(i,-i)' --inverse")) < 1e-12);
}

TEST_CASE("jacobian at the identity") {
  const auto j = json_of(cli("jacobian --group so --n 3 --element I"));
  CHECK((matrix_of(j.at("jacobian")) - cayley::identity(3)).norm() < 1e-12);
}

TEST_CASE("fiber counts") {
  CHECK(json_of(cli("fiber --family sl --n 3 --random --seed 1")).at("count") == 3);
  CHECK(json_of(cli("fiber --family spin --n 6 --random --seed 1")).at("count") == 6);
  CHECK(json_of(cli("fiber --family spin --n 7 --random --seed 1")).at("count") == 6);
  CHECK(json_of(cli("fiber --family sl --target 'diag(1,-1)'")).at("count") == 2);
}

TEST_CASE("verify examples") {
  const auto ineq = json_of(cli("verify --suite inequality --trials 200 --seed 3"));
  CHECK(ineq.at("failures") == 0);
  CHECK(ineq.at("records").size() == 200);

  const auto spin = json_of(cli("verify --suite spin-cayley --trials 50 --seed 3"));
  CHECK(spin.at("failures") == 0);
  CHECK(spin.at("worst_residual").get<double>() < 1e-7);

  const auto all = json_of(cli("verify --suite all --trials 2 --seed 0"));
  for (const auto& c : all.at("claims")) {
    CHECK_FALSE(c.at("id").get<std::string>().empty());
    CHECK_FALSE(c.at("anchor").get<std::string>().empty());
  }
}

TEST_CASE("verify output options") {
  const auto path = std::filesystem::temp_directory_path() / "cayley_cli_report.csv";
  const auto r = cli("verify --suite clifford --trials 2 --seed 4 --format csv --report " + path.string());
  CHECK(r.code == 0);
  CHECK(r.out.rfind("id,anchor,trial", 0) == 0);
  std::ifstream in(path);
  const std::string saved((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(saved == r.out);
  std::filesystem::remove(path);

  // Global flags may precede the subcommand.
  CHECK(cli("--seed 4 verify --suite clifford --trials 2").out == cli("verify --suite clifford --trials 2 --seed 4").out);
}

TEST_CASE("exit codes") {
  // Tolerances scaled to nothing make every nonzero residual fail.
  const auto strict = cli("verify --suite closed-form --trials 2 --tol 1e-300");
  CHECK(strict.code == 1);
  CHECK(Json::parse(strict.out).at("failures").get<int>() > 0);

  CHECK(cli("map --group sp --n 2 --element I").code == 2);
  CHECK(cli("map --group sl --n 2 --element 'diag(1,2,3)'").code == 2);
  CHECK(cli("map --group sl --n 2 --element 'rot(1)'").code == 2);
  CHECK(cli("verify --suite nope").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("map --group sl --n 2 --element I --format csv").code == 2);

  // Mathematical preconditions.
  CHECK(cli("fiber --family sl --target I3").code == 3);
  CHECK(cli("fiber --family spin --target 'diag(1,2)'").code == 3);
  CHECK(cli("map --group so --n 3 --sample trace_free").code == 3);
  CHECK(cli("psi --group sl --n 2 --element 'diag(0,1)' --inverse").code == 3);
}

TEST_CASE("spin subcommands") {
  const auto e = json_of(cli("spin exp --n 4 --random --seed 2"));
  const auto t = matrix_of(e.at("vector_action"));
  CHECK((t.transpose() * t - cayley::identity(4)).norm() < 1e-10);

  const auto a = json_of(cli("spin action --n 5 --random --seed 2"));
  CHECK(matrix_of(a.at("vector_action")).rows() == 5);

  const auto c = json_of(cli("spin cayley --n 5 --random --seed 2"));
  CHECK(c.at("closed_form_residual").get<double>() < 1e-7);

  const std::string rotor = R"('{"n": 2, "coeffs_re": [0.6, 0, 0, 0.8]}')";
  const auto r = json_of(cli("spin action --element " + rotor));
  const auto rot = matrix_of(r.at("vector_action"));
  // cos 2θ = 0.36 - 0.64 with cos θ = 0.6.
  CHECK(std::abs(rot(0, 0) + 0.28) < 1e-12);
  CHECK(cli("spin action --element '{\"n\": 2, \"coeffs_re\": [2, 0, 0, 0]}'").code == 3);
}
