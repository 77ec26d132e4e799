#pragma once

#include <algorithm>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "gapvec/binom.hpp"
#include "gapvec/variety.hpp"

namespace gapvec {

// Knobs for every randomized rank computation. One field context per run; the
// stability rule repeats a computation with fresh sampler streams until two
// consecutive trials agree (within max_trials), so `margin` only has to make
// a single unlucky trial rare, not impossible.
struct RankConfig {
  FieldContext ctx;
  uint64_t seed = 0;
  int margin = 25;
  int max_trials = 3;
};

void validate(const RankConfig& cfg);

struct FaceDims {
  int j = 0;
  long long dim_sigma = 0;      // dim of the sums-of-squares face's span
  long long dim_P_formula = 0;  // dim R2 - j(d+1)
  long long dim_B = 0;          // dim R2 - rank(double-vanishing conditions)
  bool secant_nondefective = false;
  long long eps_Y = 0;          // quadratic deficiency of the projected image
  long long dim_IY2 = 0;        // quadrics vanishing on the projected image
};

struct GapOptions {
  bool nested = false;  // reuse one chain of points: Γ_j = first j of the chain
  int jobs = 1;         // worker threads over j; output is identical for any value
};

struct GapReport {
  std::string variety;
  int m = 0, d = 0, c = 0, w = 0;
  FieldContext ctx;
  uint64_t seed = 0;
  int trials = 0;  // configured stability budget
  long long dim_R2 = 0;
  long long epsilon = 0;
  std::vector<long long> gap;    // g_1..g_c
  std::vector<FaceDims> faces;   // j = 1..c
};

// Hard a-priori rank bound for every degree-2 evaluation table: a quadric in
// the ambient coordinates pulls back to a form of degree 2w in the n+1
// parameters, so no such table can have rank above dim of that space (nor
// above the count of degree-2 monomials). This is what caps sample counts.
inline long long pullback_bound(const Parametrization& X) {
  return std::min(binom(X.m + 2, 2), binom(X.n + 2LL * X.w, X.n));
}

// Index pairs (a, b), a <= b, of the degree-2 monomials x_a x_b in graded-lex
// order; fixes the column indexing of every degree-2 table.
inline std::vector<std::pair<int, int>> deg2_pairs(int m) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(binom(m + 2, 2)));
  for (int a = 0; a <= m; ++a)
    for (int b = a; b <= m; ++b) out.emplace_back(a, b);
  return out;
}

// Row of the degree-2 monomials evaluated at a coordinate vector.
template <class R>
std::vector<typename R::Elem> deg2_row(R ring, const std::vector<typename R::Elem>& v,
                                       const std::vector<std::pair<int, int>>& pairs) {
  std::vector<typename R::Elem> row;
  row.reserve(pairs.size());
  for (const auto& [a, b] : pairs) row.push_back(ring.mul(v[a], v[b]));
  return row;
}

// |Γ| x (m+1) evaluation matrix of the coordinates at the points of Γ.
template <class R>
DenseMatrix<R> coord_eval_matrix(R ring, const std::vector<PointSample<R>>& pts, int m) {
  (void)ring;
  DenseMatrix<R> M(pts.size(), m + 1);
  for (size_t i = 0; i < pts.size(); ++i)
    for (int b = 0; b <= m; ++b) M.at(i, b) = pts[i].coords[b];
  return M;
}

// Basis of the linear forms vanishing at all points of Γ, as kernel rows of
// the coordinate evaluation matrix. Generic Γ of size j <= m imposes j
// independent conditions; anything else is a genericity failure.
template <class R>
DenseMatrix<R> vanishing_series(R ring, const Evaluator<R>& ev,
                                const std::vector<PointSample<R>>& pts) {
  size_t j = pts.size();
  if (j > static_cast<size_t>(ev.m()))
    throw InvalidVariety(ev.variety().label + ": vanishing series needs |Γ| <= m");
  Echelon<R> e(ring, ev.m() + 1);
  for (const auto& p : pts) e.add_row(p.coords);
  if (e.rank() != j)
    throw GenericityFailure(ev.variety().label + ": " + std::to_string(j) +
                            " sampled points imposed only " + std::to_string(e.rank()) +
                            " independent conditions on linear forms");
  return e.kernel();
}

namespace detail {

// Tangent half of the independence test: at every p in Γ the differentials of
// the vanishing linear series, composed with the parametrization, must have
// rank exactly dim X — their common kernel on the tangent cone is then just
// the scaling direction.
template <class R>
bool tangent_check_with_V(R ring, const Evaluator<R>& ev, const std::vector<PointSample<R>>& pts,
                          const DenseMatrix<R>& V, int d) {
  for (const auto& p : pts) {
    auto J = ev.jacobian(p.params);  // (n+1) x (m+1)
    Echelon<R> e(ring, ev.n() + 1);
    for (size_t a = 0; a < V.rows; ++a) {
      std::vector<typename R::Elem> row(ev.n() + 1, ring.zero());
      for (int i = 0; i <= ev.n(); ++i) {
        typename R::Elem acc = ring.zero();
        for (int b = 0; b <= ev.m(); ++b) acc = ring.add(acc, ring.mul(V.at(a, b), J[i][b]));
        row[i] = acc;
      }
      e.add_row(row);
    }
    if (e.rank() != static_cast<size_t>(d)) return false;
  }
  return true;
}

}  // namespace detail

// False when Γ fails to impose independent conditions on linear forms (e.g. a
// repeated point) or when some tangent space meets the span of Γ.
template <class R>
bool independence_tangent_check(R ring, const Evaluator<R>& ev,
                                const std::vector<PointSample<R>>& pts, int d) {
  Echelon<R> e(ring, ev.m() + 1);
  for (const auto& p : pts) e.add_row(p.coords);
  if (e.rank() != pts.size()) return false;
  return detail::tangent_check_with_V(ring, ev, pts, e.kernel(), d);
}

// Conditions matrix for vanishing to order two at every point of Γ: per point
// one value row of the degree-2 monomials and n+1 derivative rows (the x_a x_b
// entry of derivative row i is J[i][a] v_b + v_a J[i][b]). Each point block
// has rank at most d+1 — the value row is Euler-dependent on the derivative
// rows and the derivative rows factor through the Jacobian.
template <class R>
DenseMatrix<R> conditions_matrix(R ring, const Evaluator<R>& ev,
                                 const std::vector<PointSample<R>>& pts) {
  auto pairs = deg2_pairs(ev.m());
  DenseMatrix<R> M((ev.n() + 2) * pts.size(), pairs.size());
  size_t r = 0;
  for (const auto& p : pts) {
    JetBlock<R> jb = jet_block(ev, p);
    const auto& v = jb.value_row;
    for (size_t c = 0; c < pairs.size(); ++c) M.at(r, c) = ring.mul(v[pairs[c].first], v[pairs[c].second]);
    ++r;
    for (int i = 0; i <= ev.n(); ++i) {
      const auto& Ji = jb.jacobian_rows[i];
      for (size_t c = 0; c < pairs.size(); ++c) {
        auto [a, b] = pairs[c];
        M.at(r, c) = ring.add(ring.mul(Ji[a], v[b]), ring.mul(v[a], Ji[b]));
      }
      ++r;
    }
  }
  return M;
}

namespace detail {

template <class F>
long long stable_value(F&& trial, int max_trials, const std::string& what) {
  long long prev = trial(0);
  for (int t = 1; t < max_trials; ++t) {
    long long cur = trial(t);
    if (cur == prev) return cur;
    prev = cur;
  }
  throw GenericityFailure(what + ": no two consecutive trials agreed within " +
                          std::to_string(max_trials) + " trials");
}

}  // namespace detail

// dim R2: rank of the degree-2 ambient monomials evaluated at sampled points,
// under the stability rule.
template <class R>
long long dim_R2_t(R ring, const Evaluator<R>& ev, const RankConfig& cfg) {
  const auto pairs = deg2_pairs(ev.m());
  const long long cap = pullback_bound(ev.variety());
  const int npts = static_cast<int>(cap) + cfg.margin;
  return detail::stable_value(
      [&](int t) -> long long {
        SeededSampler s(cfg.seed, stream_id("dim-r2", 0, t));
        auto pts = sample_points(ring, ev, npts, s);
        std::vector<std::vector<typename R::Elem>> rows;
        rows.reserve(pts.size());
        for (const auto& p : pts) rows.push_back(deg2_row(ring, p.coords, pairs));
        return static_cast<long long>(rank_rows(ring, std::move(rows), pairs.size(), cap));
      },
      cfg.max_trials, ev.variety().label + ": dim R2");
}

// dim Σ(Γ) as the rank of products of the vanishing series on sampled points.
// When the full product table would be larger than the pullback bound allows,
// random squares of random combinations are used instead — squares span the
// same space as all pairwise products (char != 2 polarization).
template <class R>
long long dim_sigma_t(R ring, const Evaluator<R>& ev, const DenseMatrix<R>& V, int j,
                      const RankConfig& cfg) {
  using Elem = typename R::Elem;
  const long long k = static_cast<long long>(V.rows);
  const long long pairs = binom(k + 1, 2);
  const long long cap = std::min(pairs, pullback_bound(ev.variety()));
  const int npts = static_cast<int>(cap) + cfg.margin;
  const bool literal = pairs <= cap + cfg.margin;
  return detail::stable_value(
      [&](int t) -> long long {
        SeededSampler s(cfg.seed, stream_id("dim-sigma", j, t));
        auto pts = sample_points(ring, ev, npts, s);
        // W[a][t] = (a-th basis form of V)(pts[t])
        std::vector<std::vector<Elem>> W(k, std::vector<Elem>(npts, ring.zero()));
        for (long long a = 0; a < k; ++a)
          for (int tt = 0; tt < npts; ++tt) {
            Elem acc = ring.zero();
            for (int b = 0; b <= ev.m(); ++b)
              if (!ring.is_zero(V.at(a, b)))
                acc = ring.add(acc, ring.mul(V.at(a, b), pts[tt].coords[b]));
            W[a][tt] = std::move(acc);
          }
        if constexpr (std::is_same_v<R, QqRing>) {
          // Each basis form may be scaled freely: primitive integer rows keep
          // the product rows below denominator-free and the minors small.
          for (auto& wr : W) {
            auto prim = row_to_primitive(wr);
            for (size_t p2 = 0; p2 < wr.size(); ++p2) wr[p2] = mpq_class(prim[p2]);
          }
        }
        std::vector<std::vector<Elem>> rows;
        if (literal) {
          rows.reserve(static_cast<size_t>(pairs));
          for (long long a = 0; a < k; ++a)
            for (long long b = a; b < k; ++b) {
              std::vector<Elem> row(npts);
              for (int tt = 0; tt < npts; ++tt) row[tt] = ring.mul(W[a][tt], W[b][tt]);
              rows.push_back(std::move(row));
            }
        } else {
          SeededSampler sc(cfg.seed, stream_id("dim-sigma-sq", j, t));
          const long long nrows = cap + cfg.margin;
          rows.reserve(static_cast<size_t>(nrows));
          std::vector<Elem> lam(k), u(npts);
          for (long long r = 0; r < nrows; ++r) {
            for (long long a = 0; a < k; ++a) {
              if constexpr (std::is_same_v<R, FpRing>) {
                lam[a] = sc.next_below(ring.F->p());
              } else {
                lam[a] = mpq_class(static_cast<long>(sc.next_int(kSampleBoxLo, kSampleBoxHi)));
              }
            }
            for (int tt = 0; tt < npts; ++tt) {
              Elem acc = ring.zero();
              for (long long a = 0; a < k; ++a)
                acc = ring.add(acc, ring.mul(lam[a], W[a][tt]));
              u[tt] = std::move(acc);
            }
            std::vector<Elem> row(npts);
            for (int tt = 0; tt < npts; ++tt) row[tt] = ring.mul(u[tt], u[tt]);
            rows.push_back(std::move(row));
          }
        }
        return static_cast<long long>(
            rank_rows(ring, std::move(rows), npts, static_cast<size_t>(cap)));
      },
      cfg.max_trials, ev.variety().label + ": dim Σ(Γ), j = " + std::to_string(j));
}

// dim B = dim R2 - rank(conditions); the secant flag records whether the rank
// hit the expected j(d+1).
template <class R>
std::pair<long long, bool> dim_P_t(R ring, const Evaluator<R>& ev,
                                   const std::vector<PointSample<R>>& pts, long long dimR2,
                                   int d) {
  if (pts.empty()) return {dimR2, true};
  const size_t expected = pts.size() * (d + 1);
  DenseMatrix<R> M = conditions_matrix(ring, ev, pts);
  size_t r;
  if constexpr (std::is_same_v<R, FpRing>) {
    Echelon<R> e(ring, M.cols, expected);  // per-point blocks cannot exceed d+1
    for (size_t i = 0; i < M.rows && !e.saturated(); ++i) e.add_row(M.row(i));
    r = e.rank();
  } else {
    std::vector<std::vector<mpz_class>> rows;
    rows.reserve(M.rows);
    for (size_t i = 0; i < M.rows; ++i) rows.push_back(row_to_primitive(M.row(i)));
    r = bareiss_rank(std::move(rows), expected);
  }
  return {dimR2 - static_cast<long long>(r), r == expected};
}

// Mode-dispatching operations.
long long dim_R2(const Parametrization& X, const RankConfig& cfg);
long long epsilon(const Parametrization& X, const RankConfig& cfg);
std::pair<long long, long long> epsilon_projection(const Parametrization& X, int j,
                                                   const RankConfig& cfg);
GapReport gap_vector(const Parametrization& X, const RankConfig& cfg,
                     const GapOptions& opts = {});

}  // namespace gapvec
