#include "gapvec/dims.hpp"

#include <atomic>
#include <exception>
#include <iostream>
#include <thread>

namespace gapvec {

void validate(const RankConfig& cfg) {
  if (cfg.margin < 1) throw InvalidVariety("margin must be >= 1");
  if (cfg.max_trials < 2)
    throw InvalidVariety("trials must be >= 2: the stability rule needs two agreeing trials");
}

namespace {

// Run f with the ring handle for the configured field. PrimeOps outlives the
// call; FpRing only borrows it.
template <class F>
decltype(auto) with_ring(const FieldContext& ctx, F&& f) {
  if (ctx.is_rational()) return f(QqRing{});
  PrimeOps ops(ctx.prime);
  return f(FpRing{&ops});
}

VarietyInfo checked_info(const Parametrization& X, const RankConfig& cfg) {
  VarietyInfo info = variety_info(X, cfg.ctx, cfg.seed);
  if (!nondegeneracy_check(X, cfg.ctx, cfg.seed, cfg.margin))
    throw InvalidVariety(X.label +
                         ": coordinates are linearly dependent on the image — "
                         "drop a coordinate or fix the parametrization");
  return info;
}

// Γ_j with genericity retry: the points must impose independent conditions on
// linear forms and every tangent space must be transverse to their common
// vanishing series; otherwise redraw from a fresh stream.
template <class R>
std::pair<std::vector<PointSample<R>>, DenseMatrix<R>> gamma_sample(R ring,
                                                                    const Evaluator<R>& ev,
                                                                    int j, int d,
                                                                    const RankConfig& cfg) {
  for (int t = 0; t < cfg.max_trials; ++t) {
    SeededSampler s(cfg.seed, stream_id("gamma", j, t));
    auto pts = sample_points(ring, ev, j, s);
    Echelon<R> e(ring, ev.m() + 1);
    for (const auto& p : pts) e.add_row(p.coords);
    if (e.rank() != static_cast<size_t>(j)) continue;
    DenseMatrix<R> V = e.kernel();
    if (!detail::tangent_check_with_V(ring, ev, pts, V, d)) continue;
    return {std::move(pts), std::move(V)};
  }
  throw GenericityFailure(ev.variety().label + ": no generic point set of size " +
                          std::to_string(j) + " within " + std::to_string(cfg.max_trials) +
                          " attempts");
}

template <class R>
struct Pipeline {
  R ring;
  const Parametrization& X;
  RankConfig cfg;
  Evaluator<R> ev;
  int d, c;
  long long dimR2 = 0, eps = 0;

  Pipeline(R r, const Parametrization& x, const RankConfig& config, int dim)
      : ring(r), X(x), cfg(config), ev(r, x, true), d(dim), c(x.m - dim) {}

  void base_dims() {
    dimR2 = dim_R2_t(ring, ev, cfg);
    eps = dimR2 - static_cast<long long>(X.m + 1) * (d + 1) + binom(d + 1, 2);
    if (eps < 0)
      throw InternalInconsistency(X.label + ": negative quadratic deficiency from dim R2 = " +
                                  std::to_string(dimR2));
  }

  FaceDims face(int j, const std::vector<PointSample<R>>& pts, const DenseMatrix<R>& V) const {
    FaceDims f;
    f.j = j;
    f.dim_sigma = dim_sigma_t(ring, ev, V, j, cfg);
    f.dim_P_formula = dimR2 - static_cast<long long>(j) * (d + 1);
    auto [dimB, nondef] = dim_P_t(ring, ev, pts, dimR2, d);
    f.dim_B = dimB;
    f.secant_nondefective = nondef;
    f.eps_Y = f.dim_sigma - static_cast<long long>(X.m + 1 - j) * (d + 1) + binom(d + 1, 2);
    f.dim_IY2 = binom(X.m - j + 2, 2) - f.dim_sigma;
    if (f.eps_Y < 0 || f.dim_IY2 < 0)
      throw InternalInconsistency(X.label + ": impossible projection dims at j = " +
                                  std::to_string(j) + " (dim Σ = " + std::to_string(f.dim_sigma) +
                                  ")");
    // The same gap two ways: via deficiencies and via the face dimensions.
    long long via_eps = eps - f.eps_Y;
    long long via_dims = f.dim_B - f.dim_sigma;
    if (via_eps != via_dims)
      throw InternalInconsistency(X.label + ": gap routes disagree at j = " + std::to_string(j) +
                                  ": deficiency route gives " + std::to_string(via_eps) +
                                  ", dimension route gives " + std::to_string(via_dims));
    return f;
  }
};

// Fill rep.faces for j = 1..c, each from its own independently sampled Γ_j.
// Slot-indexed writes plus per-(task, j, trial) sampler streams make the
// result identical for any worker count or schedule.
template <class R>
void run_faces_fresh(const Pipeline<R>& P, GapReport& rep, int jobs) {
  const int c = P.c;
  const int nw = std::max(1, std::min(jobs, c));
  if (nw == 1) {
    for (int j = 1; j <= c; ++j) {
      auto [pts, V] = gamma_sample(P.ring, P.ev, j, P.d, P.cfg);
      rep.faces[j - 1] = P.face(j, pts, V);
    }
    return;
  }
  std::atomic<int> next{1};
  std::vector<std::exception_ptr> errs(c);
  std::vector<std::thread> pool;
  pool.reserve(nw);
  for (int w = 0; w < nw; ++w)
    pool.emplace_back([&] {
      for (;;) {
        int j = next.fetch_add(1);
        if (j > c) return;
        try {
          auto [pts, V] = gamma_sample(P.ring, P.ev, j, P.d, P.cfg);
          rep.faces[j - 1] = P.face(j, pts, V);
        } catch (...) {
          errs[j - 1] = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  for (int j = 0; j < c; ++j)
    if (errs[j]) std::rethrow_exception(errs[j]);
}

// Nested mode: one chain of c points per attempt, Γ_j = its first j points.
// Any per-j genericity failure discards the whole chain; other errors
// propagate immediately.
template <class R>
void run_faces_nested(const Pipeline<R>& P, GapReport& rep, int jobs) {
  const int c = P.c;
  const int nw = std::max(1, std::min(jobs, c));
  for (int t = 0; t < P.cfg.max_trials; ++t) {
    SeededSampler s(P.cfg.seed, stream_id("gamma-nested", 0, t));
    auto chain = sample_points(P.ring, P.ev, c, s);
    auto run_j = [&](int j) {
      std::vector<PointSample<R>> pts(chain.begin(), chain.begin() + j);
      Echelon<R> e(P.ring, P.X.m + 1);
      for (const auto& p : pts) e.add_row(p.coords);
      if (e.rank() != static_cast<size_t>(j))
        throw GenericityFailure(P.X.label + ": nested chain degenerate at j = " +
                                std::to_string(j));
      DenseMatrix<R> V = e.kernel();
      if (!detail::tangent_check_with_V(P.ring, P.ev, pts, V, P.d))
        throw GenericityFailure(P.X.label + ": nested chain tangent-degenerate at j = " +
                                std::to_string(j));
      rep.faces[j - 1] = P.face(j, pts, V);
    };
    std::vector<std::exception_ptr> errs(c);
    if (nw == 1) {
      for (int j = 1; j <= c; ++j) {
        try {
          run_j(j);
        } catch (...) {
          errs[j - 1] = std::current_exception();
          break;
        }
      }
    } else {
      std::atomic<int> next{1};
      std::vector<std::thread> pool;
      pool.reserve(nw);
      for (int w = 0; w < nw; ++w)
        pool.emplace_back([&] {
          for (;;) {
            int j = next.fetch_add(1);
            if (j > c) return;
            try {
              run_j(j);
            } catch (...) {
              errs[j - 1] = std::current_exception();
            }
          }
        });
      for (auto& th : pool) th.join();
    }
    std::exception_ptr first;
    for (int j = 0; j < c; ++j)
      if (errs[j]) {
        first = errs[j];
        break;
      }
    if (!first) return;
    try {
      std::rethrow_exception(first);
    } catch (const GenericityFailure&) {
      if (t + 1 == P.cfg.max_trials) throw;
      // else: next chain attempt
    }
  }
}

template <class R>
GapReport run_gap(R ring, const Parametrization& X, const RankConfig& cfg, const GapOptions& opts,
                  int d) {
  Pipeline<R> P(ring, X, cfg, d);
  P.base_dims();
  GapReport rep;
  rep.variety = X.label;
  rep.m = X.m;
  rep.d = d;
  rep.c = P.c;
  rep.w = X.w;
  rep.ctx = cfg.ctx;
  rep.seed = cfg.seed;
  rep.trials = cfg.max_trials;
  rep.dim_R2 = P.dimR2;
  rep.epsilon = P.eps;
  rep.faces.assign(P.c, FaceDims{});
  rep.gap.assign(P.c, 0);
  if (opts.nested)
    run_faces_nested(P, rep, opts.jobs);
  else
    run_faces_fresh(P, rep, opts.jobs);
  for (int j = 1; j <= P.c; ++j) rep.gap[j - 1] = rep.epsilon - rep.faces[j - 1].eps_Y;
  // Sanity screens on the assembled vector; anomalies are reported, not hidden.
  for (int j = 0; j < P.c; ++j) {
    if (rep.gap[j] < 0)
      std::cerr << "warning: " << X.label << ": negative gap entry g_" << (j + 1) << " = "
                << rep.gap[j] << "\n";
    if (j > 0 && rep.gap[j] < rep.gap[j - 1])
      std::cerr << "warning: " << X.label << ": gap vector not monotone at j = " << (j + 1)
                << "\n";
  }
  if (P.c >= 1 && rep.gap[P.c - 1] != rep.epsilon)
    std::cerr << "warning: " << X.label << ": g_c = " << rep.gap[P.c - 1]
              << " differs from the quadratic deficiency " << rep.epsilon << "\n";
  return rep;
}

}  // namespace

long long dim_R2(const Parametrization& X, const RankConfig& cfg) {
  validate(cfg);
  return with_ring(cfg.ctx, [&](auto ring) -> long long {
    Evaluator<decltype(ring)> ev(ring, X, false);
    return dim_R2_t(ring, ev, cfg);
  });
}

long long epsilon(const Parametrization& X, const RankConfig& cfg) {
  validate(cfg);
  VarietyInfo info = checked_info(X, cfg);
  long long dr2 = dim_R2(X, cfg);
  long long eps =
      dr2 - static_cast<long long>(X.m + 1) * (info.d + 1) + binom(info.d + 1, 2);
  if (eps < 0)
    throw InternalInconsistency(X.label + ": negative quadratic deficiency from dim R2 = " +
                                std::to_string(dr2));
  return eps;
}

std::pair<long long, long long> epsilon_projection(const Parametrization& X, int j,
                                                   const RankConfig& cfg) {
  validate(cfg);
  VarietyInfo info = checked_info(X, cfg);
  if (j < 1 || j > info.c)
    throw InvalidVariety(X.label + ": projection count j = " + std::to_string(j) +
                         " outside 1.." + std::to_string(info.c));
  return with_ring(cfg.ctx, [&](auto ring) -> std::pair<long long, long long> {
    Evaluator<decltype(ring)> ev(ring, X, true);
    auto [pts, V] = gamma_sample(ring, ev, j, info.d, cfg);
    (void)pts;
    long long ds = dim_sigma_t(ring, ev, V, j, cfg);
    long long eps_y =
        ds - static_cast<long long>(X.m + 1 - j) * (info.d + 1) + binom(info.d + 1, 2);
    long long iy2 = binom(X.m - j + 2, 2) - ds;
    if (eps_y < 0 || iy2 < 0)
      throw InternalInconsistency(X.label + ": impossible projection dims at j = " +
                                  std::to_string(j));
    return {eps_y, iy2};
  });
}

GapReport gap_vector(const Parametrization& X, const RankConfig& cfg, const GapOptions& opts) {
  validate(cfg);
  if (opts.jobs < 1) throw InvalidVariety("jobs must be >= 1");
  VarietyInfo info = checked_info(X, cfg);
  return with_ring(cfg.ctx,
                   [&](auto ring) { return run_gap(ring, X, cfg, opts, info.d); });
}

}  // namespace gapvec
