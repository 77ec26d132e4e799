#pragma once

#include <set>
#include <string>
#include <type_traits>
#include <vector>

#include "gapvec/errors.hpp"
#include "gapvec/matrix.hpp"
#include "gapvec/polynomial.hpp"
#include "gapvec/rng.hpp"

namespace gapvec {

// A projective variety, always presented as the image of a homogeneous
// polynomial map P^n --> P^m: m+1 forms in t0..tn of one common degree w.
struct Parametrization {
  int n = 0;  // parameter variables are t0..tn
  int m = 0;  // ambient projective dimension
  int w = 1;  // common degree of the maps
  std::vector<Poly> maps;
  std::string label;
};

// Validates and assembles: at least two maps, none zero, all homogeneous of
// one common degree >= 1 in the same variables.
Parametrization make_parametrization(std::vector<Poly> maps, std::string label);

// Standard families.
Parametrization veronese(int n, int deg);
Parametrization segre(int a, int b);
Parametrization toric(const std::vector<Exps>& columns, std::string label = "toric");
Parametrization toric_scroll_s12();  // rational normal scroll S(1,2) in P^4
// Plane cubics through k sampled base points (1 <= k <= 6); the sampler is
// consumed for the base points, which are always small integers so the
// resulting maps are identical in both arithmetic modes.
Parametrization delpezzo(int k, SeededSampler sampler);

struct VarietyInfo {
  int m = 0, d = 0, c = 0;  // ambient dim, variety dim, codimension
};

template <class R>
struct PointSample {
  std::vector<typename R::Elem> params;  // affine representative in t-space
  std::vector<typename R::Elem> coords;  // maps evaluated there (never zero)
};

template <class R>
struct JetBlock {
  std::vector<typename R::Elem> value_row;                 // m+1
  std::vector<std::vector<typename R::Elem>> jacobian_rows;  // (n+1) x (m+1)
};

// Evaluates the maps and their first partials with coefficients converted to
// the target field once up front.
template <class R>
class Evaluator {
 public:
  Evaluator(R ring, const Parametrization& X, bool with_jets = true) : ring_(ring), X_(&X) {
    cmaps_.reserve(X.maps.size());
    for (const auto& p : X.maps) cmaps_.push_back(convert(p));
    if (with_jets) {
      cjets_.resize(X.n + 1);
      for (int i = 0; i <= X.n; ++i) {
        cjets_[i].reserve(X.maps.size());
        for (const auto& p : X.maps) cjets_[i].push_back(convert(p.derivative(i)));
      }
    }
  }

  const Parametrization& variety() const { return *X_; }
  const R& ring() const { return ring_; }
  int n() const { return X_->n; }
  int m() const { return X_->m; }
  int w() const { return X_->w; }

  std::vector<typename R::Elem> coords(const std::vector<typename R::Elem>& params) const {
    return eval_list(cmaps_, params);
  }

  std::vector<std::vector<typename R::Elem>> jacobian(
      const std::vector<typename R::Elem>& params) const {
    std::vector<std::vector<typename R::Elem>> rows;
    rows.reserve(cjets_.size());
    for (const auto& dp : cjets_) rows.push_back(eval_list(dp, params));
    return rows;
  }

 private:
  using Elem = typename R::Elem;
  struct CTerm {
    Elem c;
    Exps e;
  };
  using CPoly = std::vector<CTerm>;

  CPoly convert(const Poly& p) const {
    CPoly out;
    out.reserve(p.terms.size());
    for (const auto& t : p.terms) {
      if constexpr (std::is_same_v<R, FpRing>) {
        out.push_back({ring_.F->reduce_rat(t.c), t.e});
      } else {
        out.push_back({t.c, t.e});
      }
    }
    return out;
  }

  std::vector<Elem> eval_list(const std::vector<CPoly>& polys,
                              const std::vector<Elem>& params) const {
    // Shared powers table: pw[i][e] = params[i]^e for e <= w.
    std::vector<std::vector<Elem>> pw(params.size());
    for (size_t i = 0; i < params.size(); ++i) {
      pw[i].resize(X_->w + 1);
      pw[i][0] = ring_.one();
      for (int e = 1; e <= X_->w; ++e) pw[i][e] = ring_.mul(pw[i][e - 1], params[i]);
    }
    std::vector<Elem> out;
    out.reserve(polys.size());
    for (const auto& p : polys) {
      Elem acc = ring_.zero();
      for (const auto& t : p) {
        Elem v = t.c;
        for (size_t i = 0; i < t.e.size(); ++i)
          if (t.e[i] > 0) v = ring_.mul(v, pw[i][t.e[i]]);
        acc = ring_.add(acc, v);
      }
      out.push_back(std::move(acc));
    }
    return out;
  }

  R ring_;
  const Parametrization* X_;
  std::vector<CPoly> cmaps_;
  std::vector<std::vector<CPoly>> cjets_;
};

// Projective normalization used to detect proportional points: scale so the
// first nonzero coordinate becomes 1 (prime field), or reduce to the
// primitive integer vector with positive leading entry (rationals).
inline std::vector<uint64_t> proportionality_key(const FpRing& ring,
                                                 const std::vector<uint64_t>& coords) {
  size_t lead = 0;
  while (lead < coords.size() && coords[lead] == 0) ++lead;
  std::vector<uint64_t> key(coords);
  if (lead < coords.size()) {
    uint64_t s = ring.inv(coords[lead]);
    for (auto& x : key) x = ring.mul(x, s);
  }
  return key;
}

inline std::vector<mpz_class> proportionality_key(const QqRing&,
                                                  const std::vector<mpq_class>& coords) {
  return row_to_primitive(coords);
}

// k points of X with pairwise non-proportional, nonzero coordinate vectors.
// Rational mode draws integer parameters from the sampling box, so the points
// are honest real points of X. Fails after 5k rejected draws.
template <class R>
std::vector<PointSample<R>> sample_points(R ring, const Evaluator<R>& ev, int k,
                                          SeededSampler& s) {
  using Elem = typename R::Elem;
  std::vector<PointSample<R>> pts;
  pts.reserve(k);
  using Key = decltype(proportionality_key(ring, std::declval<std::vector<Elem>>()));
  std::set<Key> seen;
  long long rejects = 0, budget = 5LL * k;
  while (static_cast<int>(pts.size()) < k) {
    std::vector<Elem> params(ev.n() + 1);
    for (auto& t : params) {
      if constexpr (std::is_same_v<R, FpRing>) {
        t = s.next_below(ring.F->p());
      } else {
        t = mpq_class(static_cast<long>(s.next_int(kSampleBoxLo, kSampleBoxHi)));
      }
    }
    std::vector<Elem> coords = ev.coords(params);
    bool zero = true;
    for (const auto& x : coords)
      if (!ring.is_zero(x)) {
        zero = false;
        break;
      }
    if (!zero) {
      auto [it, fresh] = seen.insert(proportionality_key(ring, coords));
      if (fresh) {
        if constexpr (std::is_same_v<R, QqRing>) {
          // Store the primitive representative: keeps every downstream table
          // integral even when the maps have fractional coefficients.
          for (size_t i = 0; i < coords.size(); ++i) coords[i] = mpq_class((*it)[i]);
        }
        pts.push_back({std::move(params), std::move(coords)});
        continue;
      }
    }
    if (++rejects > budget)
      throw GenericityFailure("could not sample " + std::to_string(k) +
                              " distinct points of " + ev.variety().label + " after " +
                              std::to_string(rejects) + " rejected draws");
  }
  return pts;
}

template <class R>
JetBlock<R> jet_block(const Evaluator<R>& ev, const PointSample<R>& p) {
  return {ev.coords(p.params), ev.jacobian(p.params)};
}

// dim X, from the rank of the stacked value+Jacobian rows at three sampled
// points: rank is d+1 at generic parameters and can only drop elsewhere.
int projective_dim(const Parametrization& X, const FieldContext& ctx, uint64_t seed);

// True iff the m+1 coordinates are linearly independent as functions on X,
// measured on m+1+margin sampled points.
bool nondegeneracy_check(const Parametrization& X, const FieldContext& ctx, uint64_t seed,
                         int margin = 25);

// m, d, c with the non-degeneracy shape constraints enforced (1 <= d < m).
VarietyInfo variety_info(const Parametrization& X, const FieldContext& ctx, uint64_t seed);

}  // namespace gapvec
