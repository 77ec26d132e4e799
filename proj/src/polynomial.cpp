#include "gapvec/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace gapvec {

int total_degree(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool graded_lex_less(const Exps& a, const Exps& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Poly Poly::monomial(int nvars, Exps e, const mpq_class& c) {
  assert(static_cast<int>(e.size()) == nvars);
  Poly p{nvars, {}};
  if (sgn(c) != 0) p.terms.push_back({c, std::move(e)});
  return p;
}

int Poly::homogeneous_degree() const {
  if (terms.empty()) return -1;
  int w = total_degree(terms[0].e);
  for (const auto& t : terms)
    if (total_degree(t.e) != w) return -1;
  return w;
}

Poly Poly::derivative(int var) const {
  Poly d{nvars, {}};
  for (const auto& t : terms) {
    if (t.e[var] == 0) continue;
    Exps e = t.e;
    mpq_class c = t.c * e[var];
    e[var] -= 1;
    d.terms.push_back({std::move(c), std::move(e)});
  }
  d.normalize();
  return d;
}

void Poly::add_term(const mpq_class& c, const Exps& e) {
  assert(static_cast<int>(e.size()) == nvars);
  terms.push_back({c, e});
}

void Poly::normalize() {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return graded_lex_less(b.e, a.e); });
  std::vector<Term> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().e == t.e)
      merged.back().c += t.c;
    else
      merged.push_back(std::move(t));
  }
  terms.clear();
  for (auto& t : merged)
    if (sgn(t.c) != 0) terms.push_back(std::move(t));
}

static void gen_monomials(int nvars, int pos, int rem, Exps& cur, std::vector<Exps>& out) {
  if (pos == nvars - 1) {
    cur[pos] = rem;
    out.push_back(cur);
    return;
  }
  for (int e = rem; e >= 0; --e) {
    cur[pos] = e;
    gen_monomials(nvars, pos + 1, rem - e, cur, out);
  }
}

std::vector<Exps> monomials_of_degree(int nvars, int deg) {
  assert(nvars >= 1 && deg >= 0);
  std::vector<Exps> out;
  Exps cur(nvars, 0);
  gen_monomials(nvars, 0, deg, cur, out);
  return out;
}

}  // namespace gapvec
