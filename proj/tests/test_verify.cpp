#include <algorithm>
#include <set>

#include "doctest.h"
#include "cayley/errors.hpp"
#include "cayley/verify.hpp"

using namespace cayley;

TEST_CASE("suite catalogue") {
  const auto names = suite_names();
  CHECK(names.back() == "all");
  for (const char* s : {"equivariance", "jordan", "unipotent", "hyperbolic", "restriction", "sumtensor",
                        "clifford", "spin-cayley", "degree", "inequality"}) {
    CHECK(std::find(names.begin(), names.end(), s) != names.end());
  }
  std::set<std::string> ids;
  std::size_t total = 0;
  for (const auto& name : names) {
    if (name == "all") continue;
    const auto claims = suite_claims(name);
    CHECK_FALSE(claims.empty());
    total += claims.size();
    ids.insert(claims.begin(), claims.end());
  }
  CHECK(ids.size() == total);
  CHECK(suite_claims("all").size() == total);
  CHECK_THROWS_AS(suite_claims("nope"), ParseError);
  CHECK_THROWS_AS(run_suite("nope", 1, 0), ParseError);
  CHECK_THROWS_AS(run_suite("clifford", 0, 0), ParseError);
}

TEST_CASE("reports are deterministic and sorted") {
  const auto a = run_suite("clifford", 4, 9);
  const auto b = run_suite("clifford", 4, 9);
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(to_csv(a) == to_csv(b));
  REQUIRE(a.records.size() == 4 * suite_claims("clifford").size());
  for (std::size_t i = 1; i < a.records.size(); ++i) {
    const auto& p = a.records[i - 1];
    const auto& q = a.records[i];
    CHECK((p.id < q.id || (p.id == q.id && p.trial < q.trial)));
  }
  const auto c = run_suite("clifford", 4, 10);
  CHECK(to_json(a).dump() != to_json(c).dump());
}

TEST_CASE("claim streams do not depend on the enclosing suite") {
  const auto alone = run_suite("inequality", 3, 5);
  const auto all = run_suite("all", 3, 5);
  for (const auto& r : alone.records) {
    const auto it = std::find_if(all.records.begin(), all.records.end(),
                                 [&](const ClaimRecord& o) { return o.id == r.id && o.trial == r.trial; });
    REQUIRE(it != all.records.end());
    CHECK(it->residual == r.residual);
  }
}

TEST_CASE("failure accounting and tolerance scaling") {
  const auto strict = run_suite("closed-form", 3, 1, 1e-30);
  int failing = 0;
  for (const auto& r : strict.records) {
    if (!r.pass) ++failing;
    CHECK(r.pass == (r.residual <= r.tolerance));
  }
  CHECK(strict.failures == failing);
  CHECK(strict.failures > 0);

  const auto normal = run_suite("closed-form", 3, 1);
  CHECK(normal.failures == 0);
  const auto j = to_json(normal);
  CHECK(j.at("claims").size() == suite_claims("closed-form").size());
  CHECK(j.at("records").size() == normal.records.size());
  CHECK(to_csv(normal).rfind("id,anchor,trial,residual,tolerance,pass,error\n", 0) == 0);
}
