#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "farey/verify.hpp"

#include <stdexcept>

using namespace farey;

TEST_CASE("suite registry knows every suite and rejects strangers") {
  CHECK(suite_names().size() == 14);
  CHECK_THROWS_AS(run_suite("no-such-suite", SuiteParams{}), std::invalid_argument);
}

TEST_CASE("square statistic suites pass on short prefixes") {
  SuiteParams p;
  p.n_max = 4;
  const SuiteResult r = run_suite("sn", p);
  CHECK(r.passed());
  CHECK(r.checked == 4);
  CHECK(r.failures.empty());

  p.n_max = 6;
  CHECK(run_suite("sn-monotone", p).passed());
}

TEST_CASE("totient suite counts one check per radius") {
  SuiteParams p;
  p.r_max = 400;
  const SuiteResult r = run_suite("totient", p);
  CHECK(r.passed());
  CHECK(r.checked == 400);
}

TEST_CASE("norm suites pass on reduced grids") {
  SuiteParams p;
  p.r_max = 40;
  p.n_max = 3;
  CHECK(run_suite("thm84", p).passed());
  CHECK(run_suite("eq91", p).passed());

  p.r_max = 60;
  const SuiteResult t = run_suite("thm111", p);
  CHECK(t.passed());
  CHECK(t.checked == 4 * 60);  // built-in weight pairs times radii
  CHECK(run_suite("cor112", p).passed());

  p.r_max = 40;
  p.n_max = 4;
  CHECK(run_suite("sandwich", p).passed());

  p.limit = 25;
  p.r_max = 250;
  CHECK(run_suite("transport", p).passed());
}

TEST_CASE("an explicit weight pair narrows the closed-form grids") {
  SuiteParams p;
  p.pair_set = true;
  p.alpha = Rat(5, 3);
  p.beta = 1;
  p.r_max = 30;
  const SuiteResult r = run_suite("thm111", p);
  CHECK(r.passed());
  CHECK(r.checked == 30);
  CHECK(run_suite("cor112", p).passed());
}

TEST_CASE("codec and expansion suites pass on reduced grids") {
  SuiteParams p;
  p.limit = 8;
  const SuiteResult d = run_suite("dna", p);
  CHECK(d.passed());
  CHECK(d.checked > 0);

  p.limit = 120;
  const SuiteResult z = run_suite("zeck", p);
  CHECK(z.passed());
  CHECK(z.checked > 120 * 120);
}

TEST_CASE("interval and trend suites pass on reduced grids") {
  SuiteParams p;
  p.limit = 60;
  CHECK(run_suite("intervals", p).passed());

  p.r_max = 300;
  CHECK(run_suite("trend", p).passed());
}

TEST_CASE("core suite passes on a reduced weight cap") {
  SuiteParams p;
  p.r_max = 80;
  CHECK(run_suite("core", p).passed());
}

TEST_CASE("job count changes neither the counts nor the report") {
  SuiteParams one;
  one.r_max = 25;
  one.jobs = 1;
  SuiteParams four = one;
  four.jobs = 4;
  const SuiteResult a = run_suite("thm84", one);
  const SuiteResult b = run_suite("thm84", four);
  CHECK(a.checked == b.checked);
  CHECK(a.failed == b.failed);
  CHECK(a.failures == b.failures);

  SuiteParams rnd;
  rnd.limit = 40;
  rnd.jobs = 3;
  SuiteParams rnd1 = rnd;
  rnd1.jobs = 1;
  const SuiteResult c = run_suite("intervals", rnd);
  const SuiteResult d = run_suite("intervals", rnd1);
  CHECK(c.checked == d.checked);
  CHECK(c.failed == d.failed);
}
