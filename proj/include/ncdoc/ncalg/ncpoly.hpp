#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncdoc/check_result.hpp"
#include "ncdoc/ncalg/generator.hpp"
#include "ncdoc/ncalg/rational.hpp"

namespace ncdoc::ncalg {

/// Ordered product of generators; the empty word is the unit.
using Word = std::vector<Generator>;

class DegreeCapExceeded : public std::runtime_error {
 public:
  DegreeCapExceeded(std::size_t degree, int cap);
  std::size_t degree;
  int cap;
};

/// Maximum word length any product may produce (default 12).
int degree_cap();
void set_degree_cap(int cap);

/// Restores the previous cap on scope exit.
class ScopedDegreeCap {
 public:
  explicit ScopedDegreeCap(int cap) : previous_(degree_cap()) { set_degree_cap(cap); }
  ~ScopedDegreeCap() { set_degree_cap(previous_); }
  ScopedDegreeCap(const ScopedDegreeCap&) = delete;
  ScopedDegreeCap& operator=(const ScopedDegreeCap&) = delete;

 private:
  int previous_;
};

/// Element of the free associative algebra over the rationals.
///
/// Terms are kept in a map keyed by word, ordered lexicographically by
/// generator key; zero coefficients are never stored, so equal polynomials
/// have identical term maps and identical text forms.
class NCPoly {
 public:
  using TermMap = std::map<Word, Rational>;

  NCPoly() = default;
  NCPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  NCPoly(long constant) : NCPoly(Rational(constant)) {}  // NOLINT
  NCPoly(int constant) : NCPoly(Rational(constant)) {}   // NOLINT
  NCPoly(Generator g);  // NOLINT(google-explicit-constructor)

  static NCPoly word(Word w, const Rational& coefficient = 1);
  static NCPoly gen(std::string_view name, std::vector<int> indices = {}, int dot_order = 0);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Longest word length; 0 for constants and for zero.
  std::size_t degree() const;
  /// Coefficient of the given word (zero when absent).
  Rational coefficient(const Word& w) const;
  std::set<Generator> generators() const;

  /// Adds c * w to this polynomial.
  void add_term(const Word& w, const Rational& c);
  void add_term(Word&& w, const Rational& c);

  NCPoly& operator+=(const NCPoly& other);
  NCPoly& operator-=(const NCPoly& other);
  NCPoly& operator*=(const NCPoly& other);
  NCPoly& operator*=(const Rational& scalar);

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(NCPoly a, const Rational& s) { return a *= s; }
  friend NCPoly operator*(const Rational& s, NCPoly a) { return a *= s; }
  friend NCPoly operator*(NCPoly a, int s) { return a *= Rational(s); }
  friend NCPoly operator*(int s, NCPoly a) { return a *= Rational(s); }
  friend NCPoly operator-(NCPoly a);

  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

  /// Signed sum of "coef * g1.g2.g3" terms; constant terms print as the bare
  /// coefficient and the zero polynomial as "0".
  std::string to_string() const;
  /// Inverse of to_string; also accepts a bare word ("x.y") for coefficient 1.
  /// Throws std::invalid_argument with the offending column on bad input.
  static NCPoly parse(std::string_view text);

 private:
  TermMap terms_;
};

NCPoly commutator(const NCPoly& a, const NCPoly& b);

/// [[a,b],c] + [[c,a],b] + [[b,c],a]
NCPoly jacobi_sum(const NCPoly& a, const NCPoly& b, const NCPoly& c);

std::string word_to_string(const Word& w);

/// Pass iff the residual is exactly zero; up to `max_terms` residual terms are
/// recorded in the result.
CheckResult symbolic_result(std::string name, std::string anchor, const NCPoly& residual,
                            std::string notes = {}, std::size_t max_terms = 12);

/// Labelled residuals; pass iff all are zero. Residual terms of the failing
/// parts are prefixed with their label.
CheckResult symbolic_result_multi(std::string name, std::string anchor,
                                  const std::vector<std::pair<std::string, NCPoly>>& parts,
                                  std::string notes = {}, std::size_t max_terms = 12);

}  // namespace ncdoc::ncalg
