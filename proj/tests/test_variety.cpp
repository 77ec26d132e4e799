#include <doctest.h>

#include <set>
#include <vector>

#include "gapvec/binom.hpp"
#include "gapvec/errors.hpp"
#include "gapvec/variety.hpp"

using namespace gapvec;

TEST_CASE("family builders produce the expected shapes") {
  Parametrization v = veronese(2, 2);
  CHECK(v.n == 2);
  CHECK(v.m == 5);
  CHECK(v.w == 2);
  CHECK(v.maps.size() == 6);
  CHECK(v.label == "veronese:n=2,d=2");

  Parametrization s = segre(2, 3);
  CHECK(s.n == 6);  // parameters of P^2 x P^3 flattened to t0..t6
  CHECK(s.m == 11);
  CHECK(s.w == 2);
  CHECK(s.maps.size() == 12);

  Parametrization sc = toric_scroll_s12();
  CHECK(sc.n == 2);
  CHECK(sc.m == 4);
  CHECK(sc.w == 3);
  CHECK(sc.label == "toric:scroll-s12");

  Parametrization dp = delpezzo(6, SeededSampler(7, stream_id("delpezzo-base")));
  CHECK(dp.n == 2);
  CHECK(dp.m == 3);  // cubic surface in P^3
  CHECK(dp.w == 3);
  CHECK(dp.maps.size() == 4);

  CHECK_THROWS_AS(veronese(0, 2), InvalidVariety);
  CHECK_THROWS_AS(veronese(2, 1), InvalidVariety);
  CHECK_THROWS_AS(segre(0, 1), InvalidVariety);
}

TEST_CASE("builder validation rejects malformed map lists") {
  Poly a = Poly::monomial(2, {2, 0});
  Poly b = Poly::monomial(2, {0, 1});  // degree 1 vs degree 2
  CHECK_THROWS_AS(make_parametrization({a, b}, "bad"), InvalidVariety);
  CHECK_THROWS_AS(make_parametrization({a}, "bad"), InvalidVariety);
  CHECK_THROWS_AS(make_parametrization({a, Poly::zero(2)}, "bad"), InvalidVariety);

  CHECK_THROWS_AS(toric({{2, 0}, {1, 1}, {0, 1}}, "bad"), InvalidVariety);  // mixed sums
  CHECK_THROWS_AS(toric({{2, 0}, {2, 0}}, "bad"), InvalidVariety);          // duplicate
}

TEST_CASE("jets of the twisted cubic at a hand-checked point") {
  Parametrization X = veronese(1, 3);  // t0^3, t0^2 t1, t0 t1^2, t1^3
  QqRing ring;
  Evaluator<QqRing> ev(ring, X);
  std::vector<mpq_class> p{1, 1};
  auto val = ev.coords(p);
  REQUIRE(val.size() == 4);
  for (const auto& x : val) CHECK(x == 1);
  auto J = ev.jacobian(p);
  REQUIRE(J.size() == 2);
  int d0[4] = {3, 2, 1, 0}, d1[4] = {0, 1, 2, 3};
  for (int a = 0; a < 4; ++a) {
    CHECK(J[0][a] == d0[a]);
    CHECK(J[1][a] == d1[a]);
  }
}

TEST_CASE("jacobians satisfy the homogeneous scaling relation") {
  // sum_i t_i * dF/dt_i = w * F for every coordinate, checked exactly at
  // sampled rational points.
  Parametrization X = veronese(2, 4);
  QqRing ring;
  Evaluator<QqRing> ev(ring, X);
  SeededSampler s(99, stream_id("unit-euler"));
  auto pts = sample_points(ring, ev, 100, s);
  for (const auto& pt : pts) {
    auto val = ev.coords(pt.params);
    auto J = ev.jacobian(pt.params);
    for (int a = 0; a <= X.m; ++a) {
      mpq_class lhs = 0;
      for (int i = 0; i <= X.n; ++i) lhs += pt.params[i] * J[i][a];
      CHECK(lhs == mpq_class(X.w) * val[a]);
    }
  }
}

TEST_CASE("projective dimension of the standard families") {
  FieldContext fp = FieldContext::modp_index(0);
  CHECK(projective_dim(veronese(2, 2), fp, 5) == 2);
  CHECK(projective_dim(veronese(2, 3), fp, 5) == 2);
  CHECK(projective_dim(veronese(2, 4), fp, 5) == 2);
  CHECK(projective_dim(veronese(3, 2), fp, 5) == 3);
  CHECK(projective_dim(segre(2, 2), fp, 5) == 4);
  CHECK(projective_dim(delpezzo(6, SeededSampler(7, stream_id("delpezzo-base"))), fp, 5) == 2);
  CHECK(projective_dim(toric_scroll_s12(), fp, 5) == 2);
  // exact mode agrees
  FieldContext qq = FieldContext::rational();
  CHECK(projective_dim(veronese(2, 3), qq, 5) == 2);
}

TEST_CASE("coordinate independence check") {
  FieldContext fp = FieldContext::modp_index(0);
  CHECK(nondegeneracy_check(veronese(2, 3), fp, 11));
  CHECK(nondegeneracy_check(segre(1, 2), fp, 11));
  CHECK(nondegeneracy_check(toric_scroll_s12(), fp, 11));
  // Repeated coordinate: the image lies in a hyperplane x0 = x1.
  Poly q0 = Poly::monomial(2, {2, 0});
  Poly q2 = Poly::monomial(2, {0, 2});
  Parametrization bad = make_parametrization({q0, q0, q2}, "degenerate");
  CHECK_FALSE(nondegeneracy_check(bad, fp, 11));
  CHECK_FALSE(nondegeneracy_check(bad, FieldContext::rational(), 11));
}

TEST_CASE("variety summary computes the codimension and enforces shape") {
  FieldContext fp = FieldContext::modp_index(0);
  VarietyInfo a = variety_info(veronese(2, 3), fp, 5);
  CHECK(a.m == 9);
  CHECK(a.d == 2);
  CHECK(a.c == 7);
  VarietyInfo b = variety_info(veronese(1, 3), fp, 5);
  CHECK(b.m == 3);
  CHECK(b.d == 1);
  CHECK(b.c == 2);
  VarietyInfo c = variety_info(segre(2, 2), fp, 5);
  CHECK(c.m == 8);
  CHECK(c.d == 4);
  CHECK(c.c == 4);
  // Conic in P^1's coordinates: the image fills P^1, codimension 0 — rejected.
  CHECK_THROWS_AS(variety_info(toric({{2, 0}, {1, 1}}, "fills-line"), fp, 5), InvalidVariety);
}

TEST_CASE("point sampling is deterministic, distinct, and primitive") {
  Parametrization X = veronese(2, 2);
  QqRing ring;
  Evaluator<QqRing> ev(ring, X);
  SeededSampler s1(42, stream_id("unit-pts"));
  SeededSampler s2(42, stream_id("unit-pts"));
  auto p1 = sample_points(ring, ev, 20, s1);
  auto p2 = sample_points(ring, ev, 20, s2);
  REQUIRE(p1.size() == 20);
  for (size_t i = 0; i < p1.size(); ++i) {
    CHECK(p1[i].params == p2[i].params);
    CHECK(p1[i].coords == p2[i].coords);
  }
  // pairwise non-proportional
  std::set<std::vector<mpz_class>> keys;
  for (const auto& pt : p1) {
    CHECK(keys.insert(proportionality_key(ring, pt.coords)).second);
    // stored representative is already the primitive integer vector
    for (const auto& x : pt.coords) CHECK(x.get_den() == 1);
  }
  // prime-field mode: same story
  PrimeOps F(kPrimes[0]);
  FpRing fring{&F};
  Evaluator<FpRing> fev(fring, X);
  SeededSampler s3(42, stream_id("unit-pts"));
  SeededSampler s4(42, stream_id("unit-pts"));
  auto q1 = sample_points(fring, fev, 20, s3);
  auto q2 = sample_points(fring, fev, 20, s4);
  for (size_t i = 0; i < q1.size(); ++i) CHECK(q1[i].coords == q2[i].coords);
}

TEST_CASE("blow-up construction validates k and is seed-deterministic") {
  CHECK_THROWS_AS(delpezzo(0, SeededSampler(7, stream_id("delpezzo-base"))), InvalidVariety);
  CHECK_THROWS_AS(delpezzo(7, SeededSampler(7, stream_id("delpezzo-base"))), InvalidVariety);
  for (int k = 1; k <= 6; ++k) {
    Parametrization a = delpezzo(k, SeededSampler(7, stream_id("delpezzo-base")));
    Parametrization b = delpezzo(k, SeededSampler(7, stream_id("delpezzo-base")));
    CHECK(a.m == 9 - k);
    REQUIRE(a.maps.size() == b.maps.size());
    for (size_t i = 0; i < a.maps.size(); ++i) {
      REQUIRE(a.maps[i].terms.size() == b.maps[i].terms.size());
      for (size_t t = 0; t < a.maps[i].terms.size(); ++t) {
        CHECK(a.maps[i].terms[t].c == b.maps[i].terms[t].c);
        CHECK(a.maps[i].terms[t].e == b.maps[i].terms[t].e);
      }
    }
  }
}
