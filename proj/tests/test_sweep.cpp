#include <doctest.h>

#include "kohnert/error.hpp"
#include "kohnert/sweep.hpp"

using namespace kohnert;

namespace {

nlohmann::json without_time(const SweepReport& r) {
  nlohmann::json j = report_to_json(r);
  j.erase("wall_time_seconds");
  return j;
}

}  // namespace

TEST_CASE("property names") {
  for (SweepProperty p : all_properties()) CHECK(parse_property(to_string(p)) == p);
  CHECK_THROWS_AS(parse_property("shape"), KohnertError);
}

TEST_CASE("1x1 box") {
  SweepOptions o;
  o.rows = 1;
  o.cols = 1;
  const SweepReport r = run_sweep(o);
  CHECK(r.diagrams_checked == 2);
  CHECK(r.mismatches.empty());
}

TEST_CASE("3x3 box, every property, no mismatches") {
  SweepOptions o;
  o.jobs = 2;
  const SweepReport r = run_sweep(o);
  CHECK(r.diagrams_checked == 230);
  CHECK(r.compositions_checked == 1 + 4 + 16 + 64);
  CHECK(r.mismatches.empty());
  CHECK(r.checks.at("mmf") == 230);
  CHECK(r.checks.at("membership") > 230);
  CHECK(r.checks.count("lock-ranked-and-bounded") == 1);
  const std::string text = render_report(r);
  CHECK(text.find("OK: 0 mismatches") != std::string::npos);
}

TEST_CASE("report does not depend on the number of jobs") {
  SweepOptions o;
  o.rows = 3;
  o.cols = 4;
  o.properties = {SweepProperty::Ranked, SweepProperty::Bounded, SweepProperty::Refinement};
  o.jobs = 1;
  const auto serial = without_time(run_sweep(o));
  o.jobs = 4;
  CHECK(without_time(run_sweep(o)) == serial);
}

TEST_CASE("normalized-only sweeps are smaller") {
  SweepOptions o;
  o.properties = {SweepProperty::Mmf};
  o.include_empty_columns = false;
  CHECK(run_sweep(o).diagrams_checked == 154);
}

TEST_CASE("box bound") {
  SweepOptions o;
  o.rows = 6;
  o.cols = 5;
  try {
    run_sweep(o);
    FAIL("expected BoundExceeded");
  } catch (const KohnertError& e) {
    CHECK(e.code() == ErrorCode::BoundExceeded);
  }
}

TEST_CASE("shuffle sampling is reproducible") {
  const auto roots = enumerate_diagrams(3, 3, [](const Diagram& d) { return is_northeast(d); });
  const ShuffleReport a = run_shuffle_check(roots, 200, 5);
  const ShuffleReport b = run_shuffle_check(roots, 200, 5);
  CHECK(a.chains == 200);
  CHECK(a.violations.empty());
  CHECK(a.total_moves == b.total_moves);
  CHECK(a.inversions_removed == b.inversions_removed);
  CHECK(run_shuffle_check({}, 10, 1).chains == 0);
}
