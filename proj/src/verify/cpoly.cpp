#include "ncdoc/verify/cpoly.hpp"

#include <numeric>
#include <stdexcept>

namespace ncdoc::verify {

CPoly CPoly::constant(int nvars, const Rational& c) {
  CPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

CPoly CPoly::variable(int nvars, int i) {
  CPoly p(nvars);
  Exponents e(nvars, 0);
  e.at(i) = 1;
  p.add_term(e, 1);
  return p;
}

int CPoly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void CPoly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("CPoly: exponent arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void CPoly::check_vars(const CPoly& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("CPoly: variable count mismatch");
}

CPoly& CPoly::operator+=(const CPoly& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
  a.check_vars(b);
  CPoly out(a.nvars_);
  CPoly::Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

CPoly operator*(CPoly a, const Rational& s) {
  if (s == 0) return CPoly(a.nvars_);
  for (auto& [e, c] : a.terms_) c *= s;
  return a;
}

CPoly CPoly::partial(int i) const {
  CPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e.at(i) == 0) continue;
    Exponents f = e;
    --f[i];
    out.add_term(f, c * e[i]);
  }
  return out;
}

std::string CPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    first = false;
    out += ncdoc::to_string(Rational(abs(c)));
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      out += " " + names.at(i);
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

CPoly random_cpoly(CounterRng& rng, int nvars, int max_degree, int max_terms, long lo, long hi) {
  CPoly p(nvars);
  const long n = rng.range(1, max_terms);
  for (long t = 0; t < n; ++t) {
    CPoly::Exponents e(nvars, 0);
    const long deg = rng.range(0, max_degree);
    for (long k = 0; k < deg; ++k) ++e[static_cast<std::size_t>(rng.range(0, nvars - 1))];
    p.add_term(e, Rational(rng.range(lo, hi)));
  }
  return p;
}

CPoly poisson(const CPoly& a, const CPoly& b) {
  return a.partial(0) * b.partial(1) - a.partial(1) * b.partial(0);
}

CPoly to_commutative(const NCPoly& p, int d) {
  CPoly out(2 * d);
  for (const auto& [w, c] : p.terms()) {
    CPoly::Exponents e(2 * d, 0);
    bool seen_p = false;
    for (auto g : w) {
      if (g.indices().size() != 1 || g.dot_order() != 0) throw std::invalid_argument("to_commutative: bad generator");
      const int i = g.indices()[0];
      if (i < 1 || i > d) throw std::invalid_argument("to_commutative: index out of range");
      if (g.name() == "X") {
        if (seen_p) throw std::invalid_argument("to_commutative: word not normal ordered");
        ++e[i - 1];
      } else if (g.name() == "P") {
        seen_p = true;
        ++e[d + i - 1];
      } else {
        throw std::invalid_argument("to_commutative: unexpected generator " + g.to_string());
      }
    }
    out.add_term(e, c);
  }
  return out;
}

NCPoly from_commutative(const CPoly& c, int d) {
  NCPoly out;
  for (const auto& [e, coef] : c.terms()) {
    ncalg::Word w;
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < e[i]; ++k) w.push_back(Generator::make("X", {i + 1}));
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < e[d + i]; ++k) w.push_back(Generator::make("P", {i + 1}));
    out.add_term(w, coef);
  }
  return out;
}

}  // namespace ncdoc::verify
