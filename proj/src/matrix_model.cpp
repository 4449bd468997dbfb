#include "orbitc/matrix_model.hpp"

#include <random>
#include <stdexcept>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace orbitc {

int model_size(Family family, int rank) {
  switch (family) {
    case Family::A: return rank + 1;
    case Family::B: return 2 * rank + 1;
    case Family::C: return 2 * rank;
    case Family::D: return 2 * rank;
  }
  return 0;
}

int algebra_dim(Family family, int rank) {
  switch (family) {
    case Family::A: return (rank + 1) * (rank + 1) - 1;
    case Family::B: return (2 * rank + 1) * rank;     // p(p-1)/2 with p = 2n+1
    case Family::C: return rank * (2 * rank + 1);
    case Family::D: return rank * (2 * rank - 1);     // p(p-1)/2 with p = 2n
  }
  return 0;
}

namespace {

template <class S> Mat<S> zeros(int p) { return Mat<S>(p, p); }

template <class S> void su_basis_into(int n, int offset_factor, std::vector<Mat<S>>& out);

// skew-Hermitian n x n (that is, u(n)) basis pieces used by su and sp
template <class S>
std::vector<Mat<S>> unitary_algebra_pieces(int n, bool traceless) {
  const S i = ScalarOps<S>::imag_unit();
  std::vector<Mat<S>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Mat<S> re = zeros<S>(n);
      re(a, b) = S(1);
      re(b, a) = S(-1);
      out.push_back(re);
      Mat<S> im = zeros<S>(n);
      im(a, b) = i;
      im(b, a) = i;
      out.push_back(im);
    }
  if (traceless) {
    for (int k = 0; k + 1 < n; ++k) {
      Mat<S> d = zeros<S>(n);
      d(k, k) = i;
      d(k + 1, k + 1) = S(0) - i;
      out.push_back(d);
    }
  } else {
    for (int k = 0; k < n; ++k) {
      Mat<S> d = zeros<S>(n);
      d(k, k) = i;
      out.push_back(d);
    }
  }
  return out;
}

// embeds an n x n A-block into the sp(n) form [[A, 0], [0, conj(A)]]
template <class S> Mat<S> sp_from_a_block(int n, const Mat<S>& a) {
  Mat<S> m = zeros<S>(2 * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      m(r, c) = a(r, c);
      m(n + r, n + c) = ScalarOps<S>::conj(a(r, c));
    }
  return m;
}

// embeds a symmetric B-block into [[0, B], [-conj(B), 0]]
template <class S> Mat<S> sp_from_b_block(int n, const Mat<S>& b) {
  Mat<S> m = zeros<S>(2 * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      m(r, n + c) = b(r, c);
      m(n + r, c) = S(0) - ScalarOps<S>::conj(b(r, c));
    }
  return m;
}

}  // namespace

template <class S>
std::vector<Mat<S>> algebra_basis(Family family, int rank) {
  const int p = model_size(family, rank);
  std::vector<Mat<S>> out;
  switch (family) {
    case Family::A:
      out = unitary_algebra_pieces<S>(p, /*traceless=*/true);
      break;
    case Family::B:
    case Family::D:
      for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b) {
          Mat<S> m = zeros<S>(p);
          m(a, b) = S(1);
          m(b, a) = S(-1);
          out.push_back(m);
        }
      break;
    case Family::C: {
      const int n = rank;
      const S i = ScalarOps<S>::imag_unit();
      for (const auto& a : unitary_algebra_pieces<S>(n, /*traceless=*/false))
        out.push_back(sp_from_a_block(n, a));
      for (int r = 0; r < n; ++r)
        for (int c = r; c < n; ++c) {
          Mat<S> b = zeros<S>(n);
          b(r, c) = S(1);
          b(c, r) = S(1);
          out.push_back(sp_from_b_block(n, b));
          Mat<S> bi = zeros<S>(n);
          bi(r, c) = i;
          bi(c, r) = i;
          out.push_back(sp_from_b_block(n, bi));
        }
      break;
    }
  }
  if (static_cast<int>(out.size()) != algebra_dim(family, rank))
    throw std::logic_error("algebra basis size mismatch");
  return out;
}

template std::vector<Mat<CRat>> algebra_basis<CRat>(Family, int);
template std::vector<Mat<std::complex<double>>> algebra_basis<std::complex<double>>(Family, int);

template <class S>
AlgebraMatrix<S> embed_torus(const TorusElement& x) {
  const int p = model_size(x.family, x.rank);
  Mat<S> m = zeros<S>(p);
  const S i = ScalarOps<S>::imag_unit();
  switch (x.family) {
    case Family::A:
      for (int k = 0; k < p; ++k) m(k, k) = i * ScalarOps<S>::from_rat(x.values[k]);
      break;
    case Family::B:
    case Family::D:
      for (int k = 0; k < x.rank; ++k) {
        const S b = ScalarOps<S>::from_rat(x.values[k]);
        m(2 * k, 2 * k + 1) = b;
        m(2 * k + 1, 2 * k) = S(0) - b;
      }
      break;
    case Family::C:
      for (int k = 0; k < x.rank; ++k) {
        const S a = i * ScalarOps<S>::from_rat(x.values[k]);
        m(k, k) = a;
        m(x.rank + k, x.rank + k) = S(0) - a;
      }
      break;
  }
  return {x.family, x.rank, std::move(m)};
}

template AlgebraMatrix<CRat> embed_torus<CRat>(const TorusElement&);
template AlgebraMatrix<std::complex<double>> embed_torus<std::complex<double>>(const TorusElement&);

namespace {

// deterministic helpers (std distributions are not bit-stable across
// implementations)
int rng_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}
double rng_pm1(std::mt19937_64& rng) {
  return 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
}

Eigen::MatrixXcd to_eigen(const Mat<std::complex<double>>& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
  return e;
}

Mat<std::complex<double>> from_eigen(const Eigen::MatrixXcd& e) {
  Mat<std::complex<double>> m(static_cast<int>(e.rows()), static_cast<int>(e.cols()));
  for (int r = 0; r < e.rows(); ++r)
    for (int c = 0; c < e.cols(); ++c) m(r, c) = e(r, c);
  return m;
}

}  // namespace

GroupMatrix<CRat> random_group_exact(Family family, int rank, std::uint64_t seed, int widen) {
  const auto basis = algebra_basis<CRat>(family, rank);
  const int num_range = 3 + 3 * widen;
  const int den_range = 4 + 4 * widen;
  std::uint64_t attempt_seed = seed;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::mt19937_64 rng(attempt_seed);
    Mat<CRat> s = zeros<CRat>(model_size(family, rank));
    for (const auto& b : basis) {
      const int num = rng_int(rng, -num_range, num_range);
      const int den = rng_int(rng, 1, den_range);
      if (num == 0) continue;
      Rat coeff(num, den);
      coeff.canonicalize();  // mpq_class(num, den) does not canonicalize
      s = s + CRat(coeff) * b;
    }
    const Mat<CRat> eye = Mat<CRat>::identity(s.rows());
    if (auto inv = invert_exact(eye - s))
      return {family, rank, (*inv) * (eye + s), true};
    attempt_seed = splitmix64(attempt_seed);  // Cayley singularity: resample
  }
  throw std::logic_error("Cayley sampling failed 64 times (should be measure zero)");
}

GroupMatrix<std::complex<double>> random_group_numeric(Family family, int rank,
                                                       std::uint64_t seed) {
  const auto basis = algebra_basis<std::complex<double>>(family, rank);
  std::mt19937_64 rng(seed);
  Mat<std::complex<double>> m = zeros<std::complex<double>>(model_size(family, rank));
  for (const auto& b : basis) m = m + std::complex<double>(rng_pm1(rng), 0.0) * b;
  return {family, rank, from_eigen(to_eigen(m).exp()), false};
}

template <class S>
std::vector<AlgebraMatrix<S>> tangent_basis(const TorusElement& x, const GroupMatrix<S>* g) {
  AlgebraMatrix<S> base = embed_torus<S>(x);
  if (g) base = adjoint(*g, base);
  std::vector<AlgebraMatrix<S>> out;
  for (const auto& b : algebra_basis<S>(x.family, x.rank))
    out.push_back(bracket(AlgebraMatrix<S>{x.family, x.rank, b}, base));
  return out;
}

template std::vector<AlgebraMatrix<CRat>> tangent_basis<CRat>(const TorusElement&,
                                                              const GroupMatrix<CRat>*);
template std::vector<AlgebraMatrix<std::complex<double>>> tangent_basis<std::complex<double>>(
    const TorusElement&, const GroupMatrix<std::complex<double>>*);

namespace {

template <class S, class Emit>
void for_each_coordinate(const AlgebraMatrix<S>& a, Emit&& emit) {
  const int p = a.m.rows();
  switch (a.family) {
    case Family::A:
      for (int r = 0; r < p; ++r)
        for (int c = r + 1; c < p; ++c) {
          emit(ScalarOps<S>::real(a.m(r, c)));
          emit(ScalarOps<S>::imag(a.m(r, c)));
        }
      for (int k = 0; k < p; ++k) emit(ScalarOps<S>::imag(a.m(k, k)));
      break;
    case Family::B:
    case Family::D:
      for (int r = 0; r < p; ++r)
        for (int c = r + 1; c < p; ++c) emit(ScalarOps<S>::real(a.m(r, c)));
      break;
    case Family::C: {
      const int n = a.rank;
      for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c) {
          emit(ScalarOps<S>::real(a.m(r, c)));
          emit(ScalarOps<S>::imag(a.m(r, c)));
        }
      for (int k = 0; k < n; ++k) emit(ScalarOps<S>::imag(a.m(k, k)));
      for (int r = 0; r < n; ++r)
        for (int c = r; c < n; ++c) {
          emit(ScalarOps<S>::real(a.m(r, n + c)));
          emit(ScalarOps<S>::imag(a.m(r, n + c)));
        }
      break;
    }
  }
}

}  // namespace

std::vector<Rat> flatten(const AlgebraMatrix<CRat>& a) {
  std::vector<Rat> v;
  for_each_coordinate(a, [&](const Rat& x) { v.push_back(x); });
  return v;
}

std::vector<double> flatten(const AlgebraMatrix<std::complex<double>>& a) {
  std::vector<double> v;
  for_each_coordinate(a, [&](double x) { v.push_back(x); });
  return v;
}

bool in_algebra(const AlgebraMatrix<CRat>& a) {
  const int p = a.m.rows();
  const Mat<CRat> neg_ct = CRat(-1) * a.m.conj_transpose();
  if (!(neg_ct == a.m)) return false;  // skew-Hermitian covers so and su
  switch (a.family) {
    case Family::A:
      return a.m.trace().is_zero();
    case Family::B:
    case Family::D:
      for (int r = 0; r < p; ++r)
        for (int c = 0; c < p; ++c)
          if (a.m(r, c).im != 0) return false;
      return true;
    case Family::C: {
      const int n = a.rank;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          if (a.m(n + r, n + c) != a.m(r, c).conj()) return false;        // lower A = conj(A)
          if (a.m(r, n + c) != a.m(c, n + r)) return false;               // B symmetric
          if (a.m(n + r, c) != CRat(-1) * a.m(c, n + r).conj()) return false;
        }
      return true;
    }
  }
  return false;
}

bool in_algebra(const AlgebraMatrix<std::complex<double>>& a, double tol) {
  const int p = a.m.rows();
  auto near = [&](std::complex<double> x, std::complex<double> y) { return std::abs(x - y) <= tol; };
  for (int r = 0; r < p; ++r)
    for (int c = 0; c < p; ++c)
      if (!near(a.m(r, c), -std::conj(a.m(c, r)))) return false;
  if (a.family == Family::A && std::abs(a.m.trace()) > tol) return false;
  if (a.family == Family::B || a.family == Family::D) {
    for (int r = 0; r < p; ++r)
      for (int c = 0; c < p; ++c)
        if (std::abs(a.m(r, c).imag()) > tol) return false;
  }
  if (a.family == Family::C) {
    const int n = a.rank;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        if (!near(a.m(n + r, n + c), std::conj(a.m(r, c)))) return false;
        if (!near(a.m(r, n + c), a.m(c, n + r))) return false;
      }
  }
  return true;
}

std::vector<double> skew_eigenvalues(const AlgebraMatrix<std::complex<double>>& a) {
  // i*lambda with lambda real: diagonalize the Hermitian matrix -i M
  Eigen::MatrixXcd h = to_eigen(a.m) * std::complex<double>(0.0, -1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  return out;
}

}  // namespace orbitc
