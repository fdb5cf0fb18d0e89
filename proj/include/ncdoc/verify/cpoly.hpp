#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncdoc/ncalg/ncpoly.hpp"
#include "ncdoc/rng.hpp"

namespace ncdoc::verify {

using ncalg::Generator;
using ncalg::NCPoly;

/// Commutative polynomial in a fixed number of variables with exact
/// rational coefficients, keyed by exponent vector.
class CPoly {
 public:
  using Exponents = std::vector<int>;

  explicit CPoly(int nvars = 0) : nvars_(nvars) {}
  static CPoly constant(int nvars, const Rational& c);
  static CPoly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  void add_term(const Exponents& e, const Rational& c);

  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
  friend CPoly operator-(CPoly a) { return CPoly(a.nvars_) - a; }
  friend CPoly operator*(const CPoly& a, const CPoly& b);
  friend CPoly operator*(CPoly a, const Rational& s);
  friend bool operator==(const CPoly& a, const CPoly& b) { return a.terms_ == b.terms_; }

  CPoly partial(int i) const;
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void check_vars(const CPoly& o) const;
  int nvars_;
  std::map<Exponents, Rational> terms_;
};

/// Random polynomial with total degree <= max_degree and coefficients in [lo, hi].
CPoly random_cpoly(CounterRng& rng, int nvars, int max_degree = 3, int max_terms = 5, long lo = -3,
                   long hi = 3);

/// Poisson bracket in one degree of freedom, variables (q, p) = (0, 1).
CPoly poisson(const CPoly& a, const CPoly& b);

/// Commutative image of a normal-ordered flat-algebra polynomial: X[i] -> var i-1,
/// P[i] -> var d+i-1. Throws if a word is not of the form X...XP...P.
CPoly to_commutative(const NCPoly& p, int d);
/// Inverse of to_commutative, producing the normal-ordered word for each monomial.
NCPoly from_commutative(const CPoly& c, int d);

}  // namespace ncdoc::verify
