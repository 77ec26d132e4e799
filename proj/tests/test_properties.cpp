#include <doctest.h>

#include <string>
#include <vector>

#include "gapvec/binom.hpp"
#include "gapvec/errors.hpp"
#include "gapvec/properties.hpp"

using namespace gapvec;

namespace {

// Bare report with just the fields the property battery reads.
GapReport fabricate(long long epsilon, std::vector<long long> gap,
                    std::vector<long long> iy2 = {}) {
  GapReport rep;
  rep.variety = "fabricated";
  rep.c = static_cast<int>(gap.size());
  rep.epsilon = epsilon;
  rep.gap = std::move(gap);
  rep.faces.resize(rep.gap.size());
  for (size_t i = 0; i < rep.faces.size(); ++i) {
    rep.faces[i].j = static_cast<int>(i) + 1;
    rep.faces[i].dim_IY2 = i < iy2.size() ? iy2[i] : 0;
  }
  return rep;
}

const CheckResult& by_name(const std::vector<CheckResult>& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return c;
  static CheckResult missing;
  FAIL(("check not found: " + name));
  return missing;
}

}  // namespace

TEST_CASE("closed-form gap vectors of the plane embeddings") {
  using V = std::vector<long long>;
  CHECK(veronese_p2_closed_form(2) == V{0, 0, 0});
  CHECK(veronese_p2_closed_form(3) == V{0, 0, 0, 0, 0, 0, 1});
  V d4(12, 0);
  d4[10] = 2;
  d4[11] = 3;
  CHECK(veronese_p2_closed_form(4) == d4);
  V d5(18, 0);
  d5[15] = 3;
  d5[16] = 5;
  d5[17] = 6;
  CHECK(veronese_p2_closed_form(5) == d5);
  V d6(25, 0);
  d6[21] = 4;
  d6[22] = 7;
  d6[23] = 9;
  d6[24] = 10;
  CHECK(veronese_p2_closed_form(6) == d6);
  CHECK_THROWS_AS(veronese_p2_closed_form(1), InvalidVariety);

  // independent cross-check of the last entry: it must equal the quadratic
  // deficiency C(2d+2,2) - 3 C(d+2,2) + 3 of the degree-d plane embedding
  for (int d = 2; d <= 8; ++d) {
    auto g = veronese_p2_closed_form(d);
    CHECK(g.back() == binom(2 * d + 2, 2) - 3 * binom(d + 2, 2) + 3);
    CHECK(g.size() == static_cast<size_t>(binom(d + 2, 2) - 3));
  }
}

TEST_CASE("property battery emits the seven checks in order") {
  // dim I(Y_j)_2 must be positive exactly where the increment misses its bound
  GapReport rep = fabricate(1, {0, 0, 1}, {1, 0, 0});
  auto checks = verify_gap_properties(rep);
  REQUIRE(checks.size() == 7);
  const char* names[7] = {"nonnegative",     "weakly-increasing", "last-entry",
                          "penultimate-entry", "increment-bound",   "increment-equality",
                          "max-growth-persists"};
  for (int i = 0; i < 7; ++i) CHECK(checks[i].name == names[i]);
  for (const auto& c : checks) CHECK(c.passed);
}

TEST_CASE("property battery flags fabricated violations") {
  {
    auto checks = verify_gap_properties(fabricate(0, {1, 0}));
    CHECK(by_name(checks, "nonnegative").passed);
    CHECK_FALSE(by_name(checks, "weakly-increasing").passed);
  }
  {
    auto checks = verify_gap_properties(fabricate(0, {-1, 0}));
    CHECK_FALSE(by_name(checks, "nonnegative").passed);
  }
  {
    // g_c != epsilon
    auto checks = verify_gap_properties(fabricate(2, {0, 1}));
    CHECK_FALSE(by_name(checks, "last-entry").passed);
  }
  {
    // increment attains the bound but quadrics vanish on the projection
    auto checks = verify_gap_properties(fabricate(1, {0, 1}, {5, 0}));
    CHECK_FALSE(by_name(checks, "increment-equality").passed);
    CHECK(by_name(checks, "increment-equality").note.find("j = 1") != std::string::npos);
  }
  {
    // jump of 3 where at most c - j = 2 is allowed
    auto checks = verify_gap_properties(fabricate(3, {0, 3, 3}, {0, 1, 1}));
    CHECK_FALSE(by_name(checks, "increment-bound").passed);
  }
  {
    // attains the bound at j = 1, misses it at j = 2
    auto checks = verify_gap_properties(fabricate(2, {0, 2, 2}, {0, 1, 1}));
    CHECK(by_name(checks, "increment-bound").passed);
    CHECK(by_name(checks, "increment-equality").passed);
    CHECK_FALSE(by_name(checks, "max-growth-persists").passed);
  }
}

TEST_CASE("property battery degenerates gracefully at c = 1") {
  auto checks = verify_gap_properties(fabricate(0, {0}));
  REQUIRE(checks.size() == 7);
  for (const auto& c : checks) CHECK(c.passed);
  CHECK(by_name(checks, "penultimate-entry").note.find("skipped") != std::string::npos);
  CHECK(by_name(checks, "increment-bound").note.find("vacuous") != std::string::npos);
  CHECK(by_name(checks, "max-growth-persists").note.find("vacuous") != std::string::npos);
}

TEST_CASE("conjectured first-positive index and tail") {
  using V = std::vector<long long>;
  {
    auto cv = conjecture_values(2, 2);
    CHECK(cv.jbar == 4);  // past c = 3: all-zero prediction
    CHECK(cv.gap == V{0, 0, 0});
  }
  {
    auto cv = conjecture_values(2, 3);
    CHECK(cv.jbar == 7);
    CHECK(cv.gap == veronese_p2_closed_form(3));
  }
  {
    auto cv = conjecture_values(2, 4);
    CHECK(cv.jbar == 11);
    CHECK(cv.gap == veronese_p2_closed_form(4));
  }
  {
    auto cv = conjecture_values(3, 2);
    CHECK(cv.jbar == 6);
    CHECK(cv.gap == V{0, 0, 0, 0, 0, 1});
  }
  {
    auto cv = conjecture_values(3, 3);
    CHECK(cv.jbar == 13);
    REQUIRE(cv.gap.size() == 16);
    CHECK(cv.gap[11] == 0);
    V tail(cv.gap.end() - 4, cv.gap.end());
    CHECK(tail == V{4, 7, 9, 10});
  }
  {
    auto cv = conjecture_values(3, 4);
    CHECK(cv.jbar == 24);
    REQUIRE(cv.gap.size() == 31);
    CHECK(cv.gap[22] == 0);
    V tail(cv.gap.end() - 8, cv.gap.end());
    CHECK(tail == V{3, 10, 16, 21, 25, 28, 30, 31});
  }
  // the plane prediction matches the closed form wherever both are defined
  for (int d = 2; d <= 8; ++d) CHECK(conjecture_values(2, d).gap == veronese_p2_closed_form(d));
  CHECK_THROWS_AS(conjecture_values(0, 2), InvalidVariety);
}

TEST_CASE("classification labels and shape enforcement") {
  CHECK(classify(fabricate(0, {0, 0, 0})) == "MinimalDegree");
  CHECK(classify(fabricate(1, {0, 0, 1})) == "AlmostMinimalOrCubicHypersurfaceClass");
  CHECK(classify(fabricate(1, {1})) == "AlmostMinimalOrCubicHypersurfaceClass");
  CHECK(classify(fabricate(3, {0, 1, 2, 3})) == "General");
  CHECK_THROWS_AS(classify(fabricate(0, {0, 1})), InternalInconsistency);
  CHECK_THROWS_AS(classify(fabricate(1, {1, 1})), InternalInconsistency);
}
