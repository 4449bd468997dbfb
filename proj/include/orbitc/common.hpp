#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace orbitc {

/// Exact rational scalar used everywhere a verdict depends on arithmetic.
using Rat = mpq_class;

/// Thrown when an enumeration (Weyl group, subset scan, oracle dimension)
/// exceeds its configured cap. Callers must raise the cap explicitly;
/// nothing falls back to sampling silently.
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

inline char family_letter(Family f) { return static_cast<char>(f); }

inline Family family_from_letter(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    default: throw std::domain_error(std::string("unknown family letter '") + c + "'");
  }
}

/// Smallest rank at which the family is constructed. C2, D2 and D3 are
/// permitted for internal/base-case use.
inline int min_rank(Family f) { return f == Family::A ? 1 : 2; }

/// Coordinate dimension of the ambient vector space carrying the roots.
inline int coord_dim(Family f, int rank) { return f == Family::A ? rank + 1 : rank; }

/// Complex number with exact rational real/imaginary parts.
struct CRat {
  Rat re, im;

  CRat() : re(0), im(0) {}
  CRat(int r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  CRat(Rat r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  friend CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
  friend CRat operator-(const CRat& a) { return {-a.re, -a.im}; }
  friend CRat operator*(const CRat& a, const CRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CRat operator/(const CRat& a, const CRat& b) {
    Rat d = b.re * b.re + b.im * b.im;
    if (d == 0) throw std::domain_error("division by zero (CRat)");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  CRat& operator+=(const CRat& o) { re += o.re; im += o.im; return *this; }
  CRat& operator-=(const CRat& o) { re -= o.re; im -= o.im; return *this; }
  friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }

  bool is_zero() const { return re == 0 && im == 0; }
  CRat conj() const { return {re, -im}; }
};

inline CRat crat_i() { return {Rat(0), Rat(1)}; }

// --- deterministic seeding -------------------------------------------------
//
// Trials derive child seeds as mix(master, index); results are reproducible
// bit-for-bit for a fixed (seed, trial count) regardless of evaluation order.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 0x51ed2701ULL));
}

}  // namespace orbitc
