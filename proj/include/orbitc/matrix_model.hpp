#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "orbitc/classifier.hpp"
#include "orbitc/common.hpp"
#include "orbitc/matrix.hpp"

namespace orbitc {

// Concrete matrix models: su(n+1) for A_n, so(2n+1) for B_n, sp(n) for C_n,
// so(2n) for D_n. Matrices are complex throughout (zero imaginary parts in
// the orthogonal models); scalar S is CRat in exact mode and
// std::complex<double> in numeric mode.

/// Side length of the model matrices.
int model_size(Family family, int rank);

/// dim g = n + |Phi|: (n+1)^2 - 1, p(p-1)/2 or n(2n+1) by family.
int algebra_dim(Family family, int rank);

template <class S> struct AlgebraMatrix {
  Family family;
  int rank;
  Mat<S> m;
};

template <class S> struct GroupMatrix {
  Family family;
  int rank;
  Mat<S> m;
  bool exact;
};

/// Basis of the real Lie algebra, algebra_dim(family, rank) matrices.
template <class S> std::vector<Mat<S>> algebra_basis(Family family, int rank);

/// Torus embedding: diag(i a_j) for su, 2x2 rotation-generator blocks (plus a
/// trailing zero for so(2n+1)) for the orthogonal models, diag(i a_j) in the
/// A-block for sp.
template <class S> AlgebraMatrix<S> embed_torus(const TorusElement& x);

template <class S>
AlgebraMatrix<S> bracket(const AlgebraMatrix<S>& a, const AlgebraMatrix<S>& b) {
  if (a.family != b.family || a.rank != b.rank || a.m.rows() != b.m.rows())
    throw std::domain_error("bracket: family/shape mismatch");
  return {a.family, a.rank, a.m * b.m - b.m * a.m};
}

/// Ad(g) M = g M g^{-1}, with g^{-1} the conjugate transpose.
template <class S>
AlgebraMatrix<S> adjoint(const GroupMatrix<S>& g, const AlgebraMatrix<S>& m) {
  if (g.family != m.family || g.rank != m.rank)
    throw std::domain_error("adjoint: family/shape mismatch");
  return {m.family, m.rank, g.m * m.m * g.m.conj_transpose()};
}

/// Exactly orthogonal/unitary/symplectic group element via the Cayley
/// transform (I-S)^{-1}(I+S) of a random algebra element with small rational
/// coefficients; resamples on a singular I-S. `widen` grows the coefficient
/// range (used after repeated rank deficiency).
GroupMatrix<CRat> random_group_exact(Family family, int rank, std::uint64_t seed, int widen = 0);

/// exp of a random algebra element with seeded uniform[-1,1] coefficients
/// (scaling-and-squaring Pade).
GroupMatrix<std::complex<double>> random_group_numeric(Family family, int rank,
                                                       std::uint64_t seed);

template <class S> GroupMatrix<S> group_identity(Family family, int rank) {
  return {family, rank, Mat<S>::identity(model_size(family, rank)), true};
}

/// Spanning set of T_{Ad(g)X}(O_X): the brackets [B_k, Ad(g) X] over the
/// algebra basis. Pass g = nullptr for the base point itself.
template <class S>
std::vector<AlgebraMatrix<S>> tangent_basis(const TorusElement& x,
                                            const GroupMatrix<S>* g = nullptr);

/// Minimal real coordinates identifying an algebra element (strict upper
/// triangle for so, upper + imaginary diagonal for su, A/B blocks for sp).
/// A linear injection of g into R^d, so ranks of flattened stacks equal
/// dimensions of spans.
std::vector<Rat> flatten(const AlgebraMatrix<CRat>& a);
std::vector<double> flatten(const AlgebraMatrix<std::complex<double>>& a);

/// Membership check for tests: family invariants hold exactly (CRat) or to
/// tolerance (numeric).
bool in_algebra(const AlgebraMatrix<CRat>& a);
bool in_algebra(const AlgebraMatrix<std::complex<double>>& a, double tol);

/// Eigenvalues of a skew-Hermitian model matrix are i*lambda with lambda
/// real; returns the lambdas, ascending.
std::vector<double> skew_eigenvalues(const AlgebraMatrix<std::complex<double>>& a);

}  // namespace orbitc
