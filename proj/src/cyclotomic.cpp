#include "qhopf/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {

std::atomic<std::uint64_t> g_conductor_bound{1000000};

struct Field {
  std::uint32_t N = 1;
  std::uint32_t phi = 1;
  // Phi_N = x^phi + sum_{i<phi} poly[i] x^i
  std::vector<long> poly;
};

std::vector<mpz_class> int_poly_div(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
  // exact division by a monic polynomial; coefficients low-to-high
  const std::size_t dn = den.size() - 1;
  std::vector<mpz_class> quot(num.size() - dn);
  for (std::size_t k = num.size(); k-- > dn;) {
    mpz_class c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  return quot;
}

std::vector<mpz_class> cyclotomic_poly(std::uint32_t n) {
  std::vector<mpz_class> p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d == 0) p = int_poly_div(std::move(p), cyclotomic_poly(d));
  }
  return p;
}

const Field& field(std::uint32_t N) {
  thread_local const Field* last = nullptr;
  if (last != nullptr && last->N == N) return *last;
  static std::mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[N];
  if (!slot) {
    auto f = std::make_unique<Field>();
    f->N = N;
    auto p = cyclotomic_poly(N);
    f->phi = static_cast<std::uint32_t>(p.size() - 1);
    f->poly.resize(f->phi);
    for (std::uint32_t i = 0; i < f->phi; ++i) f->poly[i] = p[i].get_si();
    slot = std::move(f);
  }
  last = slot.get();
  return *last;
}

// Reduces an arbitrary-length polynomial in zeta_N modulo Phi_N in place.
void reduce_raw(const Field& f, std::vector<Rational>& raw) {
  const std::size_t phi = f.phi;
  for (std::size_t k = raw.size(); k-- > phi;) {
    if (sgn(raw[k]) == 0) continue;
    const Rational c = raw[k];
    for (std::size_t i = 0; i < phi; ++i) {
      if (f.poly[i] != 0) raw[k - phi + i] -= c * f.poly[i];
    }
    raw[k] = 0;
  }
  raw.resize(phi);
}

std::uint32_t checked_lcm(std::uint32_t a, std::uint32_t b) {
  const std::uint64_t l = std::lcm<std::uint64_t>(a, b);
  if (l > g_conductor_bound.load()) {
    throw ConductorOverflow("conductor " + std::to_string(l) + " exceeds bound " +
                            std::to_string(g_conductor_bound.load()));
  }
  return static_cast<std::uint32_t>(l);
}

// Substitutes zeta_N^k -> sign * zeta_M^{(k * mul) mod M} and reduces at M.
std::vector<Rational> substitute(const std::vector<Rational>& c, std::uint32_t M, long mul,
                                 bool alternate_sign) {
  std::vector<Rational> raw(M);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    const long e = static_cast<long>((static_cast<std::int64_t>(k) * mul) % M);
    const long idx = e < 0 ? e + M : e;
    if (alternate_sign && (k % 2 == 1)) {
      raw[idx] -= c[k];
    } else {
      raw[idx] += c[k];
    }
  }
  reduce_raw(field(M), raw);
  return raw;
}

}  // namespace

void set_conductor_bound(std::uint64_t bound) { g_conductor_bound = bound; }
std::uint64_t conductor_bound() { return g_conductor_bound.load(); }

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw ParseError("bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

CycNumber::CycNumber() : coeffs_(1) {}
CycNumber::CycNumber(long value) : coeffs_{Rational(value)} {}
CycNumber::CycNumber(const Rational& value) : coeffs_{value} { coeffs_[0].canonicalize(); }

CycNumber::CycNumber(std::uint32_t conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  for (auto& q : coeffs_) q.canonicalize();
  normalize();
}

CycNumber CycNumber::from_coeffs(std::uint32_t conductor, std::vector<Rational> coeffs) {
  if (conductor == 0) throw DimensionMismatch("conductor must be positive");
  if (conductor > g_conductor_bound.load()) throw ConductorOverflow("conductor too large");
  const Field& f = field(conductor);
  if (coeffs.size() > f.phi) {
    reduce_raw(f, coeffs);
  } else {
    coeffs.resize(f.phi);
  }
  if (conductor % 4 == 2) {
    // Q(zeta_2m) = Q(zeta_m) for odd m, with zeta_2m = -zeta_m^{(m+1)/2}
    const std::uint32_t m = conductor / 2;
    return CycNumber(m, substitute(coeffs, m, (static_cast<long>(m) + 1) / 2, true));
  }
  return CycNumber(conductor, std::move(coeffs));
}

void CycNumber::normalize() {
  if (conductor_ == 1) return;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) != 0) return;
  }
  coeffs_.resize(1);
  conductor_ = 1;
}

bool CycNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool CycNumber::is_one() const { return conductor_ == 1 && coeffs_[0] == 1; }
bool CycNumber::is_rational() const { return conductor_ == 1; }

Rational CycNumber::rational_value() const {
  if (!is_rational()) throw DimensionMismatch("value " + to_string(*this) + " is not rational");
  return coeffs_[0];
}

CycNumber CycNumber::lift(std::uint32_t M) const {
  if (M == conductor_) return *this;
  if (M % conductor_ != 0) throw DimensionMismatch("lift target must be a multiple of the conductor");
  if (M > g_conductor_bound.load()) throw ConductorOverflow("conductor too large");
  CycNumber out;
  out.conductor_ = M;
  if (conductor_ == 1) {
    out.coeffs_.assign(field(M).phi, Rational(0));
    out.coeffs_[0] = coeffs_[0];
    return out;
  }
  out.coeffs_ = substitute(coeffs_, M, M / conductor_, false);
  return out;
}

CycNumber CycNumber::galois(long j) const {
  if (conductor_ == 1) return *this;
  const long N = conductor_;
  long jj = ((j % N) + N) % N;
  if (std::gcd(jj, N) != 1) throw DimensionMismatch("Galois exponent must be coprime to conductor");
  return CycNumber(conductor_, substitute(coeffs_, conductor_, jj, false));
}

CycNumber CycNumber::conj() const { return galois(-1); }

CycNumber CycNumber::reduced() const {
  if (conductor_ == 1) return *this;
  const std::uint32_t N = conductor_;
  for (std::uint32_t d = 1; d < N; ++d) {
    if (N % d != 0 || d % 4 == 2) continue;
    bool fixed = true;
    for (std::uint32_t j = 1; j < N && fixed; ++j) {
      if (std::gcd(j, N) != 1 || j % d != 1 % d) continue;
      if (galois(j).coeffs_ != coeffs_) fixed = false;
    }
    if (!fixed) continue;
    // Solve sum_k c_k zeta_d^k = this over Q by Gaussian elimination.
    const std::uint32_t pd = field(d).phi;
    const std::uint32_t pn = field(N).phi;
    std::vector<std::vector<Rational>> cols(pd);
    for (std::uint32_t k = 0; k < pd; ++k) {
      std::vector<Rational> mono(k + 1);
      mono[k] = 1;
      cols[k] = d == 1 ? std::vector<Rational>{Rational(1)} : mono;
      cols[k] = CycNumber::from_coeffs(d, cols[k]).lift(N).coeffs_;
      cols[k].resize(pn);
    }
    // augmented rows
    std::vector<std::vector<Rational>> a(pn, std::vector<Rational>(pd + 1));
    for (std::uint32_t r = 0; r < pn; ++r) {
      for (std::uint32_t k = 0; k < pd; ++k) a[r][k] = cols[k][r];
      a[r][pd] = coeffs_[r];
    }
    std::vector<Rational> sol(pd);
    std::size_t row = 0;
    std::vector<std::size_t> pivots;
    for (std::uint32_t c = 0; c < pd && row < pn; ++c) {
      std::size_t p = row;
      while (p < pn && sgn(a[p][c]) == 0) ++p;
      if (p == pn) continue;
      std::swap(a[p], a[row]);
      const Rational inv = 1 / a[row][c];
      for (auto& v : a[row]) v *= inv;
      for (std::size_t r = 0; r < pn; ++r) {
        if (r == row || sgn(a[r][c]) == 0) continue;
        const Rational f = a[r][c];
        for (std::uint32_t k = c; k <= pd; ++k) a[r][k] -= f * a[row][k];
      }
      pivots.push_back(c);
      ++row;
    }
    for (std::size_t i = 0; i < pivots.size(); ++i) sol[pivots[i]] = a[i][pd];
    return CycNumber::from_coeffs(d, std::move(sol));
  }
  return *this;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (conductor_ == 1) return CycNumber(Rational(1 / coeffs_[0]));
  // x^{-1} = (product of the other conjugates) / norm
  const std::uint32_t N = conductor_;
  CycNumber others(1L);
  for (std::uint32_t j = 2; j < N; ++j) {
    if (std::gcd(j, N) == 1) others *= galois(j);
  }
  const CycNumber norm = others * *this;
  return others * CycNumber(Rational(1 / norm.rational_value()));
}

std::complex<double> CycNumber::to_complex() const {
  std::complex<double> acc{0.0, 0.0};
  const double step = 2.0 * M_PI / conductor_;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    acc += coeffs_[k].get_d() * std::polar(1.0, step * static_cast<double>(k));
  }
  return acc;
}

CycNumber CycNumber::operator-() const {
  CycNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycNumber& CycNumber::operator+=(const CycNumber& rhs) {
  if (conductor_ == rhs.conductor_) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    normalize();
    return *this;
  }
  if (rhs.conductor_ == 1) {
    coeffs_[0] += rhs.coeffs_[0];
    return *this;
  }
  const std::uint32_t M = checked_lcm(conductor_, rhs.conductor_);
  *this = lift(M);
  const CycNumber r = rhs.lift(M);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += r.coeffs_[k];
  normalize();
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& rhs) { return *this += -rhs; }

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  if (a.conductor_ == 1 && b.conductor_ == 1) return CycNumber(Rational(a.coeffs_[0] * b.coeffs_[0]));
  if (a.conductor_ == 1 || b.conductor_ == 1) {
    const CycNumber& s = a.conductor_ == 1 ? a : b;
    const CycNumber& v = a.conductor_ == 1 ? b : a;
    if (sgn(s.coeffs_[0]) == 0) return CycNumber();
    CycNumber out = v;
    for (auto& c : out.coeffs_) c *= s.coeffs_[0];
    return out;
  }
  if (a.conductor_ != b.conductor_) {
    const std::uint32_t M = checked_lcm(a.conductor_, b.conductor_);
    return a.lift(M) * b.lift(M);
  }
  const Field& f = field(a.conductor_);
  std::vector<Rational> raw(2 * f.phi - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  reduce_raw(f, raw);
  return CycNumber(a.conductor_, std::move(raw));
}

CycNumber& CycNumber::operator*=(const CycNumber& rhs) { return *this = *this * rhs; }

CycNumber& CycNumber::operator/=(const CycNumber& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("division by zero");
  return *this = *this * rhs.inverse();
}

void CycNumber::add_product(const CycNumber& a, const CycNumber& b) {
  if (conductor_ == 1 && a.conductor_ == 1 && b.conductor_ == 1) {
    coeffs_[0] += a.coeffs_[0] * b.coeffs_[0];
    return;
  }
  *this += a * b;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const std::uint32_t M = checked_lcm(a.conductor_, b.conductor_);
  return a.lift(M).coeffs_ == b.lift(M).coeffs_;
}

CycNumber cyc_arith(const CycNumber& a, const CycNumber& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  return {};
}

CycNumber root_of_unity(std::uint32_t N, long k) {
  if (N == 0) throw DimensionMismatch("root_of_unity needs N >= 1");
  const long n = N;
  long e = ((k % n) + n) % n;
  const long g = std::gcd(e, n);
  const std::uint32_t M = static_cast<std::uint32_t>(e == 0 ? 1 : n / g);
  e = e == 0 ? 0 : e / g;
  if (M == 1) return CycNumber(1L);
  if (M == 2) return CycNumber(-1L);
  std::vector<Rational> raw(M);
  raw[static_cast<std::size_t>(e)] = 1;
  return CycNumber::from_coeffs(M, std::move(raw));
}

bool galois_fixed_in_subfield(const CycNumber& x, std::uint32_t n) {
  const std::uint32_t L = x.conductor();
  const std::uint32_t g = std::gcd(n, L);
  for (std::uint32_t j = 1; j < L; ++j) {
    if (std::gcd(j, L) != 1 || j % g != 1 % g) continue;
    if (x.galois(j) != x) return false;
  }
  return true;
}

std::complex<double> to_complex(const CycNumber& x) { return x.to_complex(); }

std::optional<std::uint32_t> root_of_unity_order(const CycNumber& x) {
  const CycNumber r = x.reduced();
  const std::uint32_t bound = 2 * r.conductor();
  CycNumber p = r;
  for (std::uint32_t k = 1; k <= bound; ++k) {
    if (p.is_one()) return k;
    p *= r;
  }
  return std::nullopt;
}

Rational rationalize(double value, long max_den) {
  // limit_denominator on the exact binary value of `value`
  Rational x(value);
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class n = x.get_num(), d = x.get_den();
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    mpz_class q2 = q0 + a * q1;
    if (q2 > max_den) break;
    mpz_class p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    mpz_class r = n - a * d;
    n = d;
    d = r;
    if (d == 0) break;
  }
  if (q1 == 0) return Rational(p0, q0);
  if (d == 0) return Rational(p1, q1);
  mpz_class k = (max_den - q0) / q1;
  Rational b1(p0 + k * p1, q0 + k * q1);
  Rational b2(p1, q1);
  b1.canonicalize();
  b2.canonicalize();
  return abs(b2 - x) <= abs(b1 - x) ? b2 : b1;
}

std::optional<CycNumber> recognize(std::complex<double> z, long max_den, double tol) {
  const double scale = std::max(1.0, std::abs(z));
  std::optional<CycNumber> best;
  mpz_class best_den;
  auto consider = [&](const Rational& p, const Rational& q, long field_n) {
    CycNumber c = CycNumber(p);
    if (field_n > 1) c += CycNumber(q) * root_of_unity(static_cast<std::uint32_t>(field_n), 1);
    if (std::abs(c.to_complex() - z) > tol * scale) return;
    const mpz_class den = lcm(p.get_den(), q.get_den());
    if (!best || den < best_den) {
      best = c;
      best_den = den;
    }
  };
  consider(rationalize(z.real(), max_den), Rational(0), 1);
  consider(rationalize(z.real(), max_den), rationalize(z.imag(), max_den), 4);
  const Rational q3 = rationalize(z.imag() / (std::sqrt(3.0) / 2.0), max_den);
  consider(rationalize(z.real() + q3.get_d() / 2.0, max_den), q3, 3);
  return best;
}

std::string to_string(const CycNumber& x) {
  const CycNumber r = x.reduced();
  if (r.is_rational()) return to_string(r.rational_value());
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < r.coeffs().size(); ++k) {
    Rational c = r.coeffs()[k];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << to_string(c);
      continue;
    }
    if (c != 1) os << to_string(c) << "*";
    os << "z" << r.conductor();
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

bool display_less(const CycNumber& a, const CycNumber& b) {
  const auto za = a.to_complex();
  const auto zb = b.to_complex();
  constexpr double eps = 1e-12;
  if (std::abs(za.real() - zb.real()) > eps) return za.real() < zb.real();
  if (std::abs(za.imag() - zb.imag()) > eps) return za.imag() < zb.imag();
  return to_string(a) < to_string(b);
}

}  // namespace qhopf
