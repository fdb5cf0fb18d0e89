#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

namespace ncdoc::docsim {

template <class T>
using Sequence = std::vector<T>;

/// Thrown when shifting leaves no index at which every operand is defined.
class EmptyWindow : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// f' with f'[t] = f[t + by], one element per index where that is defined.
template <class T>
Sequence<T> shift(const Sequence<T>& f, std::size_t by) {
  if (by >= f.size()) return {};
  return Sequence<T>(f.begin() + static_cast<std::ptrdiff_t>(by), f.end());
}

/// Finite sum of terms J^m f_m with f_m a numeric sequence, multiplied by
/// (J^a f)(J^b g) = J^(a+b) (f shifted by b) g. Each part has its own valid
/// window [0, length); a sum or product is defined where all contributing
/// parts are.
template <class T>
class BasicShiftOp {
 public:
  using Parts = std::map<int, Sequence<T>>;

  explicit BasicShiftOp(double tau = 1.0) : tau_(tau) {
    if (!(tau > 0)) throw std::invalid_argument("ShiftOp: tau must be positive");
  }
  static BasicShiftOp monomial(int power, Sequence<T> f, double tau = 1.0) {
    if (power < 0) throw std::invalid_argument("ShiftOp: negative shift power");
    BasicShiftOp s(tau);
    s.parts_.emplace(power, std::move(f));
    return s;
  }
  /// J^0 f
  static BasicShiftOp scalar(Sequence<T> f, double tau = 1.0) { return monomial(0, std::move(f), tau); }
  /// J^power times the constant sequence 1 of the given length.
  static BasicShiftOp J(int power, std::size_t length, double tau = 1.0) {
    return monomial(power, Sequence<T>(length, T(1)), tau);
  }

  double tau() const { return tau_; }
  const Parts& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  /// Part at power m; empty when absent.
  Sequence<T> part(int m) const {
    auto it = parts_.find(m);
    return it == parts_.end() ? Sequence<T>{} : it->second;
  }
  /// Common valid length of all parts (max size_t for the zero operator).
  std::size_t window() const {
    std::size_t w = std::numeric_limits<std::size_t>::max();
    for (const auto& [m, f] : parts_) w = std::min(w, f.size());
    return w;
  }
  /// |J^m A| = A: strip the shifts and sum the parts over the common window.
  Sequence<T> evaluate() const {
    const std::size_t w = parts_.empty() ? 0 : window();
    Sequence<T> out(w, T(0));
    for (const auto& [m, f] : parts_)
      for (std::size_t t = 0; t < w; ++t) out[t] += f[t];
    return out;
  }
  double max_abs() const {
    double m = 0;
    for (const auto& [p, f] : parts_)
      for (const auto& x : f) m = std::max(m, static_cast<double>(std::abs(x)));
    return m;
  }

  BasicShiftOp& operator+=(const BasicShiftOp& o) { return accumulate(o, T(1)); }
  BasicShiftOp& operator-=(const BasicShiftOp& o) { return accumulate(o, T(-1)); }
  BasicShiftOp& operator*=(T s) {
    for (auto& [m, f] : parts_)
      for (auto& x : f) x *= s;
    return *this;
  }
  friend BasicShiftOp operator+(BasicShiftOp a, const BasicShiftOp& b) { return a += b; }
  friend BasicShiftOp operator-(BasicShiftOp a, const BasicShiftOp& b) { return a -= b; }
  friend BasicShiftOp operator-(BasicShiftOp a) { return a *= T(-1); }
  friend BasicShiftOp operator*(BasicShiftOp a, T s) { return a *= s; }
  friend BasicShiftOp operator*(T s, BasicShiftOp a) { return a *= s; }

  friend BasicShiftOp operator*(const BasicShiftOp& a, const BasicShiftOp& b) {
    a.check_tau(b);
    BasicShiftOp out(a.parts_.empty() ? b.tau_ : a.tau_);
    for (const auto& [pa, f] : a.parts_)
      for (const auto& [pb, g] : b.parts_) {
        const auto fs = shift(f, static_cast<std::size_t>(pb));
        const std::size_t n = std::min(fs.size(), g.size());
        if (n == 0) throw EmptyWindow("ShiftOp product: empty overlap window");
        Sequence<T> h(n);
        for (std::size_t t = 0; t < n; ++t) h[t] = fs[t] * g[t];
        out.add_part(pa + pb, std::move(h), T(1));
      }
    return out;
  }

  /// Global time derivative [F, J] / tau.
  BasicShiftOp derivative() const {
    if (parts_.empty()) return *this;
    const std::size_t n = window();
    if (n < 2) throw EmptyWindow("ShiftOp derivative: window too short");
    const auto j = J(1, n, tau_);
    auto d = *this * j - j * *this;
    d *= T(1.0 / tau_);
    return d;
  }

 private:
  void check_tau(const BasicShiftOp& o) const {
    if (!parts_.empty() && !o.parts_.empty() && tau_ != o.tau_)
      throw std::invalid_argument("ShiftOp: incompatible time steps");
  }
  BasicShiftOp& accumulate(const BasicShiftOp& o, T sign) {
    check_tau(o);
    if (parts_.empty()) tau_ = o.tau_;
    for (const auto& [m, f] : o.parts_) add_part(m, f, sign);
    return *this;
  }
  void add_part(int m, const Sequence<T>& f, T sign) {
    auto it = parts_.find(m);
    if (it == parts_.end()) {
      Sequence<T> g = f;
      if (sign != T(1))
        for (auto& x : g) x *= sign;
      parts_.emplace(m, std::move(g));
      return;
    }
    auto& g = it->second;
    const std::size_t n = std::min(g.size(), f.size());
    if (n == 0) throw EmptyWindow("ShiftOp sum: empty overlap window");
    g.resize(n);
    for (std::size_t t = 0; t < n; ++t) g[t] += sign * f[t];
  }

  double tau_;
  Parts parts_;
};

using ShiftOp = BasicShiftOp<double>;
using ComplexShiftOp = BasicShiftOp<std::complex<double>>;

}  // namespace ncdoc::docsim
