#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncdoc/ncalg/vector_ops.hpp"
#include "ncdoc/ncalg/ncpoly.hpp"

/// Free-algebra identities written once over an algebra context (PolyAlgebra
/// or JetAlgebra). Each function returns labelled residuals that vanish when
/// the identity holds.
namespace ncdoc::verify::identities {

using ncalg::StructureConstants;

template <class Ctx>
using Elem = typename Ctx::Elem;
template <class Ctx>
using Parts = std::vector<std::pair<std::string, Elem<Ctx>>>;
template <class Ctx>
using EVec = std::vector<Elem<Ctx>>;

template <class E>
E comm(const E& a, const E& b) {
  return a * b - b * a;
}

template <class Ctx>
EVec<Ctx> gen_vector(const Ctx& ctx, const std::string& name, int d, int dot = 0) {
  EVec<Ctx> v;
  for (int i = 1; i <= d; ++i) v.push_back(ctx.gen(name, {i}, dot));
  return v;
}

template <class E>
std::vector<E> operator_minus(const std::vector<E>& a, const std::vector<E>& b) {
  std::vector<E> out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

template <class E>
void add_vector(std::vector<E>& acc, const std::vector<E>& b, const Rational& s = 1) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += b[i] * s;
}

template <class E, class Ctx>
void push_components(Parts<Ctx>& parts, const std::string& label, const std::vector<E>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    parts.emplace_back(label + "[" + std::to_string(i + 1) + "]", v[i]);
}

/// [[a,b],c] + [[c,a],b] + [[b,c],a] on free symbols.
template <class Ctx>
Parts<Ctx> jacobi(const Ctx& ctx) {
  auto a = ctx.gen("a"), b = ctx.gen("b"), c = ctx.gen("c");
  return {{"jacobi", comm(comm(a, b), c) + comm(comm(c, a), b) + comm(comm(b, c), a)}};
}

/// Mutant: last Jacobi term with the wrong sign.
template <class Ctx>
Parts<Ctx> jacobi_wrong_sign(const Ctx& ctx) {
  auto a = ctx.gen("a"), b = ctx.gen("b"), c = ctx.gen("c");
  return {{"jacobi", comm(comm(a, b), c) + comm(comm(c, a), b) - comm(comm(b, c), a)}};
}

/// [nabla_1, nabla_2]F - [[N_1,N_2],F] with nabla_i F = [F, N_i]; also the
/// degenerate case N_1 = N_2.
template <class Ctx>
Parts<Ctx> derivation_commutator(const Ctx& ctx) {
  auto F = ctx.gen("F"), N1 = ctx.gen("N", {1}), N2 = ctx.gen("N", {2});
  auto nab = [](const Elem<Ctx>& x, const Elem<Ctx>& n) { return comm(x, n); };
  Parts<Ctx> parts;
  parts.emplace_back("distinct", nab(nab(F, N2), N1) - nab(nab(F, N1), N2) - comm(comm(N1, N2), F));
  parts.emplace_back("equal", nab(nab(F, N1), N1) - nab(nab(F, N1), N1));
  return parts;
}

/// Double dual derivative of the acceleration against the connection built
/// from g_jk = [X_j, V_k]. `literal` selects the uncorrected statement
/// c_ijk + 2 Gamma_kij.
template <class Ctx>
Parts<Ctx> levi_civita(const Ctx& ctx, int d, bool literal = false) {
  auto X = gen_vector(ctx, "X", d, 0);
  auto V = gen_vector(ctx, "X", d, 1);
  auto A = gen_vector(ctx, "X", d, 2);
  auto g = [&](int j, int k) { return comm(X[j], V[k]); };
  auto nabla = [&](int i, const Elem<Ctx>& F) { return comm(F, V[i]); };
  auto hat = [&](int i, const Elem<Ctx>& F) { return comm(X[i], F); };
  auto gamma = [&](int i, int j, int k) {
    return (nabla(i, g(j, k)) + nabla(j, g(i, k)) - nabla(k, g(i, j))) * Rational(1, 2);
  };
  Parts<Ctx> parts;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const auto c = hat(i, g(j, k));
        const auto lhs = hat(i, hat(j, A[k]));
        const auto rhs = literal ? c + gamma(k, i, j) * 2 : ctx.d(c) + gamma(i, j, k) * 2;
        parts.emplace_back(std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                               std::to_string(k + 1),
                           lhs - rhs);
      }
  return parts;
}

/// (A x B) . C - A . (B x C) for free vectors.
template <class Ctx>
Parts<Ctx> triple_product(const Ctx& ctx) {
  const auto f = StructureConstants::epsilon();
  auto A = gen_vector(ctx, "A", 3), B = gen_vector(ctx, "B", 3), C = gen_vector(ctx, "C", 3);
  return {{"triple", ncalg::dot_t(ncalg::cross_t(A, B, f), C) - ncalg::dot_t(A, ncalg::cross_t(B, C, f))}};
}

/// Vector calculus with d_i F = [F, V_i] for a velocity vector V.
template <class Ctx>
struct Field {
  const Ctx& ctx;
  StructureConstants f;
  EVec<Ctx> V;

  Field(const Ctx& c, StructureConstants fc) : ctx(c), f(std::move(fc)), V(gen_vector(c, "X", f.dim(), 1)) {}

  int dim() const { return f.dim(); }
  Elem<Ctx> partial(int i, const Elem<Ctx>& F) const { return comm(F, V[i]); }
  EVec<Ctx> partial(int i, const EVec<Ctx>& F) const {
    EVec<Ctx> out;
    for (const auto& x : F) out.push_back(partial(i, x));
    return out;
  }
  /// d_t F = dF/dt - sum_i V_i d_i F
  Elem<Ctx> tpartial(const Elem<Ctx>& F) const {
    auto out = ctx.d(F);
    for (int i = 0; i < dim(); ++i) out -= V[i] * partial(i, F);
    return out;
  }
  EVec<Ctx> tpartial(const EVec<Ctx>& F) const {
    EVec<Ctx> out;
    for (const auto& x : F) out.push_back(tpartial(x));
    return out;
  }
  EVec<Ctx> cross(const EVec<Ctx>& a, const EVec<Ctx>& b) const { return ncalg::cross_t(a, b, f); }
  /// (curl A)_k = sum_ij f_ijk d_i A_j
  EVec<Ctx> curl(const EVec<Ctx>& A) const {
    EVec<Ctx> out(A.size());
    for (const auto& [key, c] : f.entries()) out[key[2]] += partial(key[0], A[key[1]]) * c;
    return out;
  }
  Elem<Ctx> div(const EVec<Ctx>& A) const {
    Elem<Ctx> out{};
    for (int i = 0; i < dim(); ++i) out += partial(i, A[i]);
    return out;
  }
  EVec<Ctx> laplacian(const EVec<Ctx>& A) const {
    EVec<Ctx> out(A.size());
    for (int i = 0; i < dim(); ++i) add_vector(out, partial(i, partial(i, A)));
    return out;
  }
  /// (A . grad B)_i = sum_k A_k d_k B_i
  EVec<Ctx> advect(const EVec<Ctx>& A, const EVec<Ctx>& B) const {
    EVec<Ctx> out(B.size());
    for (int k = 0; k < dim(); ++k) {
      auto dB = partial(k, B);
      for (std::size_t i = 0; i < B.size(); ++i) out[i] += A[k] * dB[i];
    }
    return out;
  }
  /// ((grad A) . B)_i = sum_k (d_k A_i) B_k
  EVec<Ctx> grad_dot(const EVec<Ctx>& A, const EVec<Ctx>& B) const {
    EVec<Ctx> out(A.size());
    for (int k = 0; k < dim(); ++k) {
      auto dA = partial(k, A);
      for (std::size_t i = 0; i < A.size(); ++i) out[i] += dA[i] * B[k];
    }
    return out;
  }
  EVec<Ctx> H() const { return cross(V, V); }
  EVec<Ctx> acceleration() const { return gen_vector(ctx, "X", dim(), 2); }
};

/// curl A + A x V + V x A, and the substitution A = V.
template <class Ctx>
Parts<Ctx> curl_as_commutator(const Ctx& ctx) {
  Field<Ctx> F(ctx, StructureConstants::epsilon());
  auto A = gen_vector(ctx, "A", 3);
  Parts<Ctx> parts;
  auto r = F.curl(A);
  add_vector(r, F.cross(A, F.V));
  add_vector(r, F.cross(F.V, A));
  push_components<Elem<Ctx>, Ctx>(parts, "A", r);
  auto s = F.curl(F.V);
  add_vector(s, F.cross(F.V, F.V), 2);
  push_components<Elem<Ctx>, Ctx>(parts, "V", s);
  return parts;
}

/// curl(A x B) + (div A)B + A.grad B - (grad A).B - A(div B)
template <class Ctx>
Parts<Ctx> curl_of_cross(const Ctx& ctx) {
  Field<Ctx> F(ctx, StructureConstants::epsilon());
  auto A = gen_vector(ctx, "A", 3), B = gen_vector(ctx, "B", 3);
  auto r = F.curl(F.cross(A, B));
  const auto divA = F.div(A), divB = F.div(B);
  for (int c = 0; c < 3; ++c) r[c] += divA * B[c] - A[c] * divB;
  add_vector(r, F.advect(A, B));
  add_vector(r, F.grad_dot(A, B), -1);
  Parts<Ctx> parts;
  push_components<Elem<Ctx>, Ctx>(parts, "curl", r);
  return parts;
}

enum class MaxwellPart { lorentz_force, divergence_free, faraday, wave, time_partial_leibniz, faraday_without_hh };

/// The field equations with H = V x V and E = d_t V.
template <class Ctx>
Parts<Ctx> maxwell(const Ctx& ctx, MaxwellPart part) {
  Field<Ctx> F(ctx, StructureConstants::epsilon());
  Parts<Ctx> parts;
  if (part == MaxwellPart::time_partial_leibniz) {
    const auto P = ctx.gen("F"), Q = ctx.gen("G");
    auto r = F.tpartial(P * Q) - F.tpartial(P) * Q - P * F.tpartial(Q);
    for (int i = 0; i < 3; ++i) r -= F.partial(i, P) * F.partial(i, Q);
    parts.emplace_back("leibniz", r);
    return parts;
  }
  const auto H = F.H();
  if (part == MaxwellPart::divergence_free) {
    parts.emplace_back("div", F.div(H));
    return parts;
  }
  const auto E = F.tpartial(F.V);
  EVec<Ctx> r;
  switch (part) {
    case MaxwellPart::lorentz_force:
      r = operator_minus(operator_minus(F.acceleration(), E), F.cross(F.V, H));
      break;
    case MaxwellPart::faraday:
    case MaxwellPart::faraday_without_hh:
      r = F.tpartial(H);
      add_vector(r, F.curl(E));
      if (part == MaxwellPart::faraday) add_vector(r, F.cross(H, H), -1);
      break;
    case MaxwellPart::wave: {
      const auto dtE = F.tpartial(E);
      r = operator_minus(dtE, F.curl(H));
      // (d_t^2 - laplacian) V = d_t E - laplacian V
      add_vector(r, operator_minus(dtE, F.laplacian(F.V)), -1);
      break;
    }
    default:
      break;
  }
  push_components<Elem<Ctx>, Ctx>(parts, "eq", r);
  return parts;
}

/// A x (B x C) - (A x B) x C - T with T_r = sum f_bmr f_acm A_a B_b C_c.
template <class Ctx>
Parts<Ctx> general_cross_jacobi(const Ctx& ctx, const StructureConstants& f) {
  const int d = f.dim();
  auto A = gen_vector(ctx, "A", d), B = gen_vector(ctx, "B", d), C = gen_vector(ctx, "C", d);
  auto r = operator_minus(ncalg::cross_t(A, ncalg::cross_t(B, C, f), f),
                          ncalg::cross_t(ncalg::cross_t(A, B, f), C, f));
  for (const auto& [k1, c1] : f.entries())
    for (const auto& [k2, c2] : f.entries()) {
      // k1 = (b, m, r), k2 = (a, c, m)
      if (k1[1] != k2[2]) continue;
      r[k1[2]] -= A[k2[0]] * B[k1[0]] * C[k2[1]] * Rational(c1 * c2);
    }
  Parts<Ctx> parts;
  push_components<Elem<Ctx>, Ctx>(parts, "r", r);
  return parts;
}

/// With H = V x V and E defined by A = E + V x H: div H = 0 and
/// d_t H + curl E + curl(V x H) + V.grad H = 0, for cyclic structure constants.
template <class Ctx>
Parts<Ctx> general_maxwell(const Ctx& ctx, const StructureConstants& f) {
  Field<Ctx> F(ctx, f);
  const auto H = F.H();
  const auto VxH = F.cross(F.V, H);
  const auto E = operator_minus(F.acceleration(), VxH);
  Parts<Ctx> parts;
  parts.emplace_back("div", F.div(H));
  auto r = F.tpartial(H);
  add_vector(r, F.curl(E));
  add_vector(r, F.curl(VxH));
  add_vector(r, F.advect(F.V, H));
  push_components<Elem<Ctx>, Ctx>(parts, "faraday", r);
  return parts;
}

template <class Ctx>
std::size_t count_nonzero(const Ctx& ctx, const Parts<Ctx>& parts) {
  std::size_t n = 0;
  for (const auto& [label, e] : parts)
    if (!ctx.is_zero(e)) ++n;
  return n;
}

}  // namespace ncdoc::verify::identities
