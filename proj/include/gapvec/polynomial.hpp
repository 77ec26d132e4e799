#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace gapvec {

// Dense exponent vector: one entry per parameter variable.
using Exps = std::vector<int>;

struct Term {
  mpq_class c;
  Exps e;
};

// Sparse multivariate polynomial over Q with a fixed variable count. Terms are
// kept merged, nonzero, and sorted graded-lex descending (t0 > t1 > ...).
struct Poly {
  int nvars = 0;
  std::vector<Term> terms;

  static Poly zero(int nvars) { return Poly{nvars, {}}; }
  static Poly monomial(int nvars, Exps e, const mpq_class& c = 1);

  bool is_zero() const { return terms.empty(); }
  // Common total degree of all terms; -1 if inhomogeneous or zero.
  int homogeneous_degree() const;
  Poly derivative(int var) const;
  void add_term(const mpq_class& c, const Exps& e);
  void normalize();  // merge equal exponent vectors, drop zeros, sort
};

int total_degree(const Exps& e);
// Graded-lex: first by total degree, ties by lexicographic comparison with t0
// most significant.
bool graded_lex_less(const Exps& a, const Exps& b);

// All exponent vectors of the given total degree, graded-lex descending.
std::vector<Exps> monomials_of_degree(int nvars, int deg);

}  // namespace gapvec
