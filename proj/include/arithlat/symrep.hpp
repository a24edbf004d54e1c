#pragma once

// Symmetric powers of the standard representation of SL_2, the adjoint
// action on trace-zero quaternions, tensor products, and Clebsch-Gordan
// decomposition by exact weight-space analysis.

#include <arithlat/quatalg.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace arithlat {

struct Provenance {
  enum class Kind { Sym, Adjoint, Tensor, Sum, Restricted };
  Kind kind = Kind::Sym;
  int degree = 0;  // Sym only
  std::vector<Provenance> parts;

  static Provenance sym(int m) { return {Kind::Sym, m, {}}; }
  static Provenance adjoint() { return {Kind::Adjoint, 0, {}}; }
  static Provenance tensor(Provenance l, Provenance r) { return {Kind::Tensor, 0, {std::move(l), std::move(r)}}; }
  static Provenance sum(Provenance l, Provenance r) { return {Kind::Sum, 0, {std::move(l), std::move(r)}}; }
  static Provenance restricted(Provenance p) { return {Kind::Restricted, 0, {std::move(p)}}; }

  // Dimension implied by the tag tree.
  std::size_t dimension() const;
  // e.g. "Sym(2)", "Tensor(Sym(1),Sym(1))"
  std::string describe() const;
};

template <class T>
struct RepImage {
  Matrix<T> matrix;
  Provenance provenance;
};

// Induced action on degree-m binary forms in the basis x^{m-t} y^t,
// t = 0..m. Requires det g = 1.
template <class T>
RepImage<T> sym_power(const Matrix<T>& g, int m);

// v -> u v u^{-1} on span{i, j, k}; requires Nrd(u) = 1.
RepImage<Rational> adjoint_on_trace_zero(const QuaternionElem& u);

template <class T>
RepImage<T> tensor(const RepImage<T>& p, const RepImage<T>& q);

template <class T>
RepImage<T> direct_sum(const RepImage<T>& p, const RepImage<T>& q);

struct CGReport {
  int r = 0;
  int s = 0;
  std::map<int, int> multiplicities;  // highest weight -> count
};

CGReport cg_multiplicities(int r, int s);

// A representation of SL_2 given by its action on rational 2x2 matrices.
using RepBuilder = std::function<RatMatrix(const RatMatrix&)>;

RepBuilder sym_builder(int m);
RepBuilder tensor_builder(RepBuilder left, RepBuilder right);
RepBuilder sum_builder(RepBuilder left, RepBuilder right);

// Reports the highest weights of builder; r and s of the report are -1.
CGReport decompose(const RepBuilder& builder);

// Basis (as columns) of the copy-th irreducible summand of highest weight w.
RatMatrix extract_summand(const RepBuilder& builder, int w, int copy);

// Equivariant embedding P of Sym^w onto that summand:
// builder(g) P = P Sym^w(g) for every g in SL_2.
RatMatrix summand_embedding(const RepBuilder& builder, int w, int copy);

// Product of `steps` random elementary unipotents with entries in [-3, 3].
// The draw depends only on the generator state, not on the standard
// library's distribution implementations.
RatMatrix random_unimodular(std::mt19937_64& rng, int steps = 4);

// Uniform integer in [lo, hi] from a raw 64-bit draw.
long draw_int(std::mt19937_64& rng, long lo, long hi);

// Trace-zero 2x2 matrix [[p,q],[r,-p]] -> coordinates (q, -2p, -r) in the
// monomial basis of Sym^2. Intertwines conjugation with Sym^2.
template <class T>
std::vector<T> trace_zero_coords(const Matrix<T>& x);

// ------------------------------------------------------------- templates

template <class T>
RepImage<T> sym_power(const Matrix<T>& g, int m) {
  if (g.rows() != 2 || g.cols() != 2) fail(ErrorCode::DimensionMismatch, "sym_power expects a 2x2 matrix");
  if (m < 0) fail(ErrorCode::InvalidInput, "negative symmetric power");
  if (determinant(g) != T(1)) fail(ErrorCode::NotUnimodular, "sym_power requires det g = 1");
  const std::size_t n = static_cast<std::size_t>(m) + 1;

  // Polynomials in y (x implicit), coefficient index = power of y.
  auto mul = [](const std::vector<T>& p, const std::vector<T>& q) {
    std::vector<T> out(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    return out;
  };
  const std::vector<T> gx{g(0, 0), g(1, 0)};  // image of x
  const std::vector<T> gy{g(0, 1), g(1, 1)};  // image of y

  std::vector<std::vector<T>> pow_x{{T(1)}}, pow_y{{T(1)}};
  for (int k = 1; k <= m; ++k) {
    pow_x.push_back(mul(pow_x.back(), gx));
    pow_y.push_back(mul(pow_y.back(), gy));
  }
  Matrix<T> out(n, n);
  for (std::size_t t = 0; t < n; ++t) {
    const auto col = mul(pow_x[n - 1 - t], pow_y[t]);
    for (std::size_t row = 0; row < n; ++row) out(row, t) = col[row];
  }
  return {std::move(out), Provenance::sym(m)};
}

template <class T>
RepImage<T> tensor(const RepImage<T>& p, const RepImage<T>& q) {
  return {kron(p.matrix, q.matrix), Provenance::tensor(p.provenance, q.provenance)};
}

template <class T>
RepImage<T> direct_sum(const RepImage<T>& p, const RepImage<T>& q) {
  return {block_diag(p.matrix, q.matrix), Provenance::sum(p.provenance, q.provenance)};
}

template <class T>
std::vector<T> trace_zero_coords(const Matrix<T>& x) {
  if (x.rows() != 2 || x.cols() != 2) fail(ErrorCode::DimensionMismatch, "expected a 2x2 matrix");
  if (!is_zero(x(0, 0) + x(1, 1))) fail(ErrorCode::InvalidInput, "matrix is not trace zero");
  return {x(0, 1), T(-2) * x(0, 0), -x(1, 0)};
}

}  // namespace arithlat
