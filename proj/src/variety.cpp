#include "gapvec/variety.hpp"

#include <algorithm>
#include <set>

namespace gapvec {

Parametrization make_parametrization(std::vector<Poly> maps, std::string label) {
  if (maps.size() < 2)
    throw InvalidVariety(label + ": a parametrization needs at least two coordinate maps");
  int nvars = maps[0].nvars;
  if (nvars < 2) throw InvalidVariety(label + ": need at least two parameter variables");
  int w = -1;
  for (size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].nvars != nvars)
      throw InvalidVariety(label + ": maps disagree on the variable count");
    if (maps[i].is_zero())
      throw InvalidVariety(label + ": coordinate map " + std::to_string(i) + " is zero");
    int di = maps[i].homogeneous_degree();
    if (di < 1)
      throw InvalidVariety(label + ": coordinate map " + std::to_string(i) +
                           " is not homogeneous of positive degree");
    if (w == -1) w = di;
    if (di != w)
      throw InvalidVariety(label + ": coordinate maps have mixed degrees (" +
                           std::to_string(w) + " vs " + std::to_string(di) + ")");
  }
  Parametrization X;
  X.n = nvars - 1;
  X.m = static_cast<int>(maps.size()) - 1;
  X.w = w;
  X.maps = std::move(maps);
  X.label = std::move(label);
  return X;
}

Parametrization veronese(int n, int deg) {
  std::string label = "veronese:n=" + std::to_string(n) + ",d=" + std::to_string(deg);
  if (n < 1) throw InvalidVariety(label + ": need n >= 1");
  if (deg < 2) throw InvalidVariety(label + ": need degree >= 2 (degree 1 is a linear image)");
  std::vector<Poly> maps;
  for (auto& e : monomials_of_degree(n + 1, deg)) maps.push_back(Poly::monomial(n + 1, e));
  return make_parametrization(std::move(maps), std::move(label));
}

Parametrization segre(int a, int b) {
  std::string label = "segre:a=" + std::to_string(a) + ",b=" + std::to_string(b);
  if (a < 1 || b < 1) throw InvalidVariety(label + ": need a, b >= 1");
  int nvars = a + b + 2;  // x0..xa then y0..yb
  std::vector<Poly> maps;
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j <= b; ++j) {
      Exps e(nvars, 0);
      e[i] += 1;
      e[a + 1 + j] += 1;
      maps.push_back(Poly::monomial(nvars, e));
    }
  return make_parametrization(std::move(maps), std::move(label));
}

Parametrization toric(const std::vector<Exps>& columns, std::string label) {
  if (columns.size() < 2) throw InvalidVariety(label + ": need at least two exponent columns");
  size_t nvars = columns[0].size();
  std::set<Exps> seen;
  int w = -1;
  for (const auto& col : columns) {
    if (col.size() != nvars)
      throw InvalidVariety(label + ": exponent columns have mixed lengths");
    int s = 0;
    for (int e : col) {
      if (e < 0) throw InvalidVariety(label + ": negative exponent");
      s += e;
    }
    if (w == -1) w = s;
    if (s != w)
      throw InvalidVariety(label + ": exponent columns have unequal sums (" +
                           std::to_string(w) + " vs " + std::to_string(s) + ")");
    if (!seen.insert(col).second) throw InvalidVariety(label + ": duplicate exponent column");
  }
  std::vector<Poly> maps;
  for (const auto& col : columns) maps.push_back(Poly::monomial(static_cast<int>(nvars), col));
  return make_parametrization(std::move(maps), std::move(label));
}

Parametrization toric_scroll_s12() {
  // Lattice points of the trapezoid conv{(0,0),(1,0),(0,1),(2,1)}, homogenized
  // to degree 3: the rational normal scroll S(1,2), a surface in P^4.
  return toric({{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 1, 1}, {0, 2, 1}}, "toric:scroll-s12");
}

Parametrization delpezzo(int k, SeededSampler sampler) {
  std::string label = "delpezzo:k=" + std::to_string(k);
  if (k < 1 || k > 6)
    throw InvalidVariety(label + ": need 1 <= k <= 6 (k = 0 is the full cubic system; "
                                 "use veronese:n=2,d=3 for that)");
  std::vector<Exps> cubics = monomials_of_degree(3, 3);  // 10 monomials on P^2
  QqRing qq;
  for (int attempt = 0; attempt < 5; ++attempt) {
    // k distinct projective base points with small integer coordinates.
    std::vector<std::vector<int64_t>> base;
    std::set<std::vector<mpz_class>> seen;
    long long rejects = 0;
    while (static_cast<int>(base.size()) < k && rejects <= 5LL * k + 10) {
      std::vector<int64_t> t(3);
      for (auto& x : t) x = sampler.next_int(kSampleBoxLo, kSampleBoxHi);
      if (t[0] == 0 && t[1] == 0 && t[2] == 0) {
        ++rejects;
        continue;
      }
      std::vector<mpq_class> q{mpq_class(static_cast<long>(t[0])),
                               mpq_class(static_cast<long>(t[1])),
                               mpq_class(static_cast<long>(t[2]))};
      if (!seen.insert(row_to_primitive(q)).second) {
        ++rejects;
        continue;
      }
      base.push_back(t);
    }
    if (static_cast<int>(base.size()) < k) continue;

    // Cubics vanishing at the base points = kernel of the evaluation matrix.
    Echelon<QqRing> ech(qq, cubics.size());
    for (const auto& p : base) {
      std::vector<mpq_class> row;
      row.reserve(cubics.size());
      for (const auto& e : cubics) {
        mpz_class v = 1;
        for (int i = 0; i < 3; ++i)
          for (int rep = 0; rep < e[i]; ++rep) v *= p[i];
        row.push_back(mpq_class(v));
      }
      ech.add_row(row);
    }
    if (ech.rank() != static_cast<size_t>(k)) continue;  // dependent conditions; resample

    DenseMatrix<QqRing> ker = ech.kernel();
    std::vector<Poly> maps;
    for (size_t r = 0; r < ker.rows; ++r) {
      std::vector<mpz_class> coeffs = row_to_primitive(ker.row(r));
      Poly p{3, {}};
      for (size_t cidx = 0; cidx < cubics.size(); ++cidx)
        if (sgn(coeffs[cidx]) != 0) p.add_term(mpq_class(coeffs[cidx]), cubics[cidx]);
      p.normalize();
      maps.push_back(std::move(p));
    }
    return make_parametrization(std::move(maps), std::move(label));
  }
  throw GenericityFailure(label + ": base points kept imposing dependent conditions");
}

namespace {

template <class R>
int projective_dim_impl(R ring, const Parametrization& X, uint64_t seed) {
  Evaluator<R> ev(ring, X, true);
  SeededSampler s(seed, stream_id("projdim"));
  auto pts = sample_points(ring, ev, 3, s);
  int ranks[3];
  for (int i = 0; i < 3; ++i) {
    JetBlock<R> jb = jet_block(ev, pts[i]);
    Echelon<R> e(ring, X.m + 1);
    e.add_row(jb.value_row);
    for (const auto& row : jb.jacobian_rows) e.add_row(row);
    ranks[i] = static_cast<int>(e.rank());
  }
  if (ranks[0] != ranks[1] && ranks[1] != ranks[2] && ranks[0] != ranks[2])
    throw GenericityFailure(X.label + ": jet ranks disagree pairwise at three sampled points");
  return std::max({ranks[0], ranks[1], ranks[2]}) - 1;
}

template <class R>
bool nondegeneracy_impl(R ring, const Parametrization& X, uint64_t seed, int margin) {
  Evaluator<R> ev(ring, X, false);
  SeededSampler s(seed, stream_id("nondegen"));
  int npts = X.m + 1 + margin;
  auto pts = sample_points(ring, ev, npts, s);
  Echelon<R> e(ring, X.m + 1);
  for (const auto& p : pts) {
    e.add_row(p.coords);
    if (e.saturated()) break;
  }
  return e.rank() == static_cast<size_t>(X.m + 1);
}

}  // namespace

int projective_dim(const Parametrization& X, const FieldContext& ctx, uint64_t seed) {
  if (ctx.is_rational()) return projective_dim_impl(QqRing{}, X, seed);
  PrimeOps F(ctx.prime);
  return projective_dim_impl(FpRing{&F}, X, seed);
}

bool nondegeneracy_check(const Parametrization& X, const FieldContext& ctx, uint64_t seed,
                         int margin) {
  if (ctx.is_rational()) return nondegeneracy_impl(QqRing{}, X, seed, margin);
  PrimeOps F(ctx.prime);
  return nondegeneracy_impl(FpRing{&F}, X, seed, margin);
}

VarietyInfo variety_info(const Parametrization& X, const FieldContext& ctx, uint64_t seed) {
  int d = projective_dim(X, ctx, seed);
  if (d < 1)
    throw InvalidVariety(X.label + ": image has dimension " + std::to_string(d) +
                         "; need a positive-dimensional variety");
  if (d >= X.m)
    throw InvalidVariety(X.label + ": image fills P^" + std::to_string(X.m) +
                         "; need positive codimension");
  return {X.m, d, X.m - d};
}

}  // namespace gapvec
