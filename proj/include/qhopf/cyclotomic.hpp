#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A CycNumber stores its conductor N and the coefficient vector of the
// residue of a polynomial in zeta_N modulo the N-th cyclotomic polynomial,
// so two values over the same conductor are equal iff their coefficients
// agree. Operands with different conductors are lifted to the lcm.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qhopf {

using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Upper bound on the conductor any operation may produce (default 10^6).
void set_conductor_bound(std::uint64_t bound);
std::uint64_t conductor_bound();

/// Euler totient.
std::uint32_t euler_phi(std::uint32_t n);

class CycNumber {
 public:
  CycNumber();
  CycNumber(long value);  // NOLINT(google-explicit-constructor)
  CycNumber(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// Builds sum_k coeffs[k] zeta_N^k; vectors longer than phi(N) are reduced.
  static CycNumber from_coeffs(std::uint32_t conductor, std::vector<Rational> coeffs);

  std::uint32_t conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Throws if the value is not rational.
  Rational rational_value() const;

  /// Same value expressed over Q(zeta_M); requires N | M.
  CycNumber lift(std::uint32_t M) const;
  /// Same value over the smallest conductor whose field contains it.
  CycNumber reduced() const;
  /// Galois automorphism zeta_N -> zeta_N^j, gcd(j, N) = 1.
  CycNumber galois(long j) const;
  CycNumber conj() const;
  CycNumber inverse() const;

  std::complex<double> to_complex() const;

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& rhs);
  CycNumber& operator-=(const CycNumber& rhs);
  CycNumber& operator*=(const CycNumber& rhs);
  CycNumber& operator/=(const CycNumber& rhs);

  /// this += a * b, the inner-loop primitive of every contraction.
  void add_product(const CycNumber& a, const CycNumber& b);

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }
  friend bool operator==(const CycNumber& a, const CycNumber& b);
  friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

 private:
  CycNumber(std::uint32_t conductor, std::vector<Rational> coeffs);
  void normalize();

  std::uint32_t conductor_ = 1;
  std::vector<Rational> coeffs_;
};

enum class ArithOp { Add, Sub, Mul, Div };
CycNumber cyc_arith(const CycNumber& a, const CycNumber& b, ArithOp op);

/// zeta_N^k, reduced to its minimal conductor.
CycNumber root_of_unity(std::uint32_t N, long k);

/// True iff x lies in Q(zeta_n).
bool galois_fixed_in_subfield(const CycNumber& x, std::uint32_t n);

std::complex<double> to_complex(const CycNumber& x);

/// Multiplicative order of a root of unity, or nullopt if x is not one.
std::optional<std::uint32_t> root_of_unity_order(const CycNumber& x);

/// Best rational approximation with denominator <= max_den (continued fractions).
Rational rationalize(double value, long max_den = 1L << 16);

/// Recognizes a complex number as an element of Q, Q(i) or Q(zeta_3) with
/// denominators bounded by max_den. Returns nullopt if nothing fits within tol.
std::optional<CycNumber> recognize(std::complex<double> z, long max_den = 1L << 16,
                                   double tol = 1e-8);

/// Human-readable form, e.g. "1/2 - z8^3"; always printed over the reduced conductor.
std::string to_string(const CycNumber& x);

/// Deterministic total order used for sorting output (by complex value, then coefficients).
bool display_less(const CycNumber& a, const CycNumber& b);

}  // namespace qhopf
