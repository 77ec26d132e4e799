#pragma once

#include <string>

#include "gapvec/variety.hpp"

namespace gapvec {

// Text format: line 1 `params <n+1>`, line 2 `degree <w>`, then one polynomial
// per line as a sum of `coeff * t0^a0 ... tn^an` terms (integer or p/q
// coefficients, `*` optional). `#` starts a comment. Every polynomial must be
// nonzero and homogeneous of the declared degree, and the coordinates must be
// linearly independent on the image — the non-degeneracy gate runs here with a
// fixed internal policy so a file is accepted or rejected identically
// everywhere. Parse errors carry path:line.
Parametrization from_file(const std::string& path);

// Exponent-matrix file for monomial parametrizations: one column per line,
// n+1 whitespace-separated nonnegative integers, `#` comments. Equal column
// sums (homogeneity) and distinct columns required.
Parametrization toric_from_file(const std::string& path);

// CLI spec strings: veronese:n=2,d=3 | segre:a=2,b=2 | delpezzo:k=6 |
// toric:file=PATH | file:PATH. The seed feeds the base-point sampler of the
// delpezzo family; other families ignore it.
Parametrization build_from_spec(const std::string& spec, uint64_t seed);

}  // namespace gapvec
