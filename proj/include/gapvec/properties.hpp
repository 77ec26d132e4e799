#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gapvec/dims.hpp"

namespace gapvec {

// A value carried by a check: nothing, a number, or a vector.
using CheckValue = std::variant<std::monostate, long long, std::vector<long long>>;

struct CheckResult {
  std::string name;
  bool passed = false;
  CheckValue lhs, rhs;
  std::string note;
};

// The property battery for an assembled gap report, one result per property:
//   nonnegative          every entry >= 0
//   weakly-increasing    g_{j+1} >= g_j
//   last-entry           g_c = epsilon
//   penultimate-entry    g_{c-1} = max(epsilon - 1, 0); skipped when c = 1
//   increment-bound      g_{j+1} - g_j <= c - j
//   increment-equality   bound attained at j  <=>  no quadrics vanish on Y_j
//   max-growth-persists  once an increment attains its bound, all later ones do
std::vector<CheckResult> verify_gap_properties(const GapReport& rep);

// Closed-form gap vector of the degree-d embedding of the projective plane:
// c = C(d+2,2) - 3 entries, zero through j = C(d+1,2), then
// (j - T)(d - 1) - C(j - T + 1, 2) with T = C(d+1,2).
std::vector<long long> veronese_p2_closed_form(int d);

// Conjectured gap vector of the degree-d embedding of P^n: zero below jbar,
// from jbar on the explicit tail M - j(n+1) - C(N-j+1, 2) with N = C(n+d,d),
// M = C(n+2d,2d). jbar is the conjectured first positive index; when the
// closed-form ceiling lands exactly on a zero of the tail, the first positive
// index is one later. Informational only — never a hard gate.
struct ConjectureValues {
  long long jbar = 0;            // may exceed c, in which case gap is all-zero
  std::vector<long long> gap;    // length c = N - 1 - n
};
ConjectureValues conjecture_values(int n, int d);

// Labels a report by its quadratic deficiency and asserts the matching gap
// shape: zero deficiency forces the zero gap vector, deficiency one forces
// (0,...,0,1); a mismatch means a computation went wrong somewhere.
std::string classify(const GapReport& rep);

}  // namespace gapvec
