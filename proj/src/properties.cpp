#include "gapvec/properties.hpp"

#include <algorithm>

namespace gapvec {

namespace {

CheckResult vec_check(std::string name, bool passed, std::vector<long long> lhs,
                      std::string note = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.passed = passed;
  r.lhs = std::move(lhs);
  r.note = std::move(note);
  return r;
}

CheckResult int_check(std::string name, long long lhs, long long rhs, std::string note = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.passed = lhs == rhs;
  r.lhs = lhs;
  r.rhs = rhs;
  r.note = std::move(note);
  return r;
}

CheckResult skip_check(std::string name, std::string note) {
  CheckResult r;
  r.name = std::move(name);
  r.passed = true;
  r.note = std::move(note);
  return r;
}

}  // namespace

std::vector<CheckResult> verify_gap_properties(const GapReport& rep) {
  const auto& g = rep.gap;
  const long long c = static_cast<long long>(g.size());
  std::vector<CheckResult> out;

  {
    bool ok = std::all_of(g.begin(), g.end(), [](long long v) { return v >= 0; });
    out.push_back(vec_check("nonnegative", ok, g, ok ? "" : "negative entry present"));
  }
  {
    bool ok = true;
    for (long long j = 0; j + 1 < c; ++j)
      if (g[j + 1] < g[j]) ok = false;
    out.push_back(vec_check("weakly-increasing", ok, g, ok ? "" : "a later entry decreases"));
  }
  out.push_back(int_check("last-entry", c >= 1 ? g[c - 1] : 0, rep.epsilon,
                          "g_c must equal the quadratic deficiency"));
  if (c >= 2) {
    long long want = rep.epsilon == 0 ? 0 : rep.epsilon - 1;
    out.push_back(int_check("penultimate-entry", g[c - 2], want,
                            rep.epsilon == 0 ? "zero-deficiency branch" : ""));
  } else {
    out.push_back(skip_check("penultimate-entry", "skipped: c = 1, no penultimate entry"));
  }
  {
    bool ok = true;
    std::string note;
    for (long long j = 1; j <= c - 1; ++j)
      if (g[j] - g[j - 1] > c - j) {
        ok = false;
        note = "increment at j = " + std::to_string(j + 1) + " exceeds " + std::to_string(c - j);
        break;
      }
    if (c == 1) note = "vacuous: c = 1, no increments";
    out.push_back(vec_check("increment-bound", ok, g, note));
  }
  {
    bool ok = true;
    std::string note;
    for (long long j = 1; j <= c - 1; ++j) {
      bool attained = g[j] - g[j - 1] == c - j;
      bool no_quadrics = rep.faces[j - 1].dim_IY2 == 0;
      if (attained != no_quadrics) {
        ok = false;
        note = "mismatch at j = " + std::to_string(j) + ": increment " +
               (attained ? "attains" : "misses") + " the bound but dim I(Y_j)_2 = " +
               std::to_string(rep.faces[j - 1].dim_IY2);
        break;
      }
    }
    if (c == 1) note = "vacuous: c = 1, no increments";
    out.push_back(vec_check("increment-equality", ok, g, note));
  }
  {
    bool ok = true;
    std::string note;
    long long first = -1;
    for (long long j = 1; j <= c - 1 && ok; ++j) {
      bool attained = g[j] - g[j - 1] == c - j;
      if (attained && first < 0) first = j;
      if (!attained && first >= 0) {
        ok = false;
        note = "bound attained at j = " + std::to_string(first) + " but missed at j = " +
               std::to_string(j);
      }
    }
    if (c == 1) note = "vacuous: c = 1, no increments";
    out.push_back(vec_check("max-growth-persists", ok, g, note));
  }
  return out;
}

std::vector<long long> veronese_p2_closed_form(int d) {
  if (d < 2) throw InvalidVariety("closed form needs degree >= 2");
  const long long c = binom(d + 2, 2) - 3;
  const long long T = binom(d + 1, 2);
  std::vector<long long> g(c, 0);
  for (long long j = T + 1; j <= c; ++j)
    g[j - 1] = (j - T) * (d - 1) - binom(j - T + 1, 2);
  return g;
}

ConjectureValues conjecture_values(int n, int d) {
  if (n < 1 || d < 1) throw InvalidVariety("conjecture needs n >= 1, d >= 1");
  const long long N = binom(n + d, d);        // coordinates of the embedding
  const long long M = binom(n + 2LL * d, 2 * d);  // degree-2 forms on the image
  const long long c = N - 1 - n;
  auto tail = [&](long long j) { return M - j * (n + 1) - binom(N - j + 1, 2); };
  // jbar = ceil((a - sqrt(K)) / 2) with a = 2N - 2n - 1 and
  // K = 4n^2 + 4n + 1 + 8(M - (n+1)N): the smaller root of the tail
  // quadratic, computed in integers only.
  const long long a = 2 * N - 2 * n - 1;
  const long long K = 4LL * n * n + 4 * n + 1 + 8 * (M - (n + 1) * N);
  long long jbar;
  if (K < 0) {
    jbar = c + 1;  // tail never positive
  } else {
    const long long s = static_cast<long long>(isqrt_floor(static_cast<uint64_t>(K)));
    jbar = (a - s + 1) / 2;  // exact ceiling for odd a (a >= s always holds here)
    if (jbar < 1) jbar = 1;
    if (jbar <= c && tail(jbar) == 0) ++jbar;  // ceiling landed on a root
  }
  ConjectureValues out;
  out.jbar = jbar;
  out.gap.assign(c, 0);
  for (long long j = jbar; j <= c; ++j) out.gap[j - 1] = tail(j);
  return out;
}

std::string classify(const GapReport& rep) {
  const auto& g = rep.gap;
  if (rep.epsilon == 0) {
    for (long long v : g)
      if (v != 0)
        throw InternalInconsistency(rep.variety +
                                    ": zero deficiency but a nonzero gap entry");
    return "MinimalDegree";
  }
  if (rep.epsilon == 1) {
    for (size_t i = 0; i < g.size(); ++i) {
      long long want = (i + 1 == g.size()) ? 1 : 0;
      if (g[i] != want)
        throw InternalInconsistency(rep.variety +
                                    ": deficiency one but gap is not (0,...,0,1)");
    }
    return "AlmostMinimalOrCubicHypersurfaceClass";
  }
  return "General";
}

}  // namespace gapvec
