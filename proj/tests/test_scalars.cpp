#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhopf/cyclotomic.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/linalg.hpp"

using namespace qhopf;

namespace {

CycNumber random_cyc(std::mt19937_64& rng, std::uint32_t N) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<Rational> c(euler_phi(N));
  for (auto& q : c) {
    q = Rational(num(rng), den(rng));
    q.canonicalize();
  }
  return CycNumber::from_coeffs(N, c);
}

bool near(std::complex<double> a, std::complex<double> b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("basic root of unity identities") {
  const CycNumber i = root_of_unity(4, 1);
  CHECK(i * i == CycNumber(-1L));
  CHECK(root_of_unity(2, 1) == CycNumber(-1L));
  CHECK(root_of_unity(4, 2) == CycNumber(-1L));
  CycNumber z8 = root_of_unity(8, 1);
  CycNumber p(1L);
  for (int k = 0; k < 8; ++k) p *= z8;
  CHECK(p.is_one());
  CHECK(z8 + z8.conj() == z8 + root_of_unity(8, 7));
  CHECK(root_of_unity(6, 2) == root_of_unity(3, 1));
  CHECK(root_of_unity(6, 1).conductor() == 3);
}

TEST_CASE("subfield membership") {
  CHECK(galois_fixed_in_subfield(CycNumber(2L), 3));
  CHECK_FALSE(galois_fixed_in_subfield(root_of_unity(8, 1), 2));
  CHECK(galois_fixed_in_subfield(CycNumber(-1L), 4));
  const CycNumber sqrt2 = root_of_unity(8, 1) + root_of_unity(8, 7);
  CHECK(galois_fixed_in_subfield(sqrt2, 8));
  CHECK_FALSE(galois_fixed_in_subfield(sqrt2, 4));
  CHECK(sqrt2 * sqrt2 == CycNumber(2L));
}

TEST_CASE("complex embedding") {
  CHECK(near(root_of_unity(4, 1).to_complex(), {0.0, 1.0}, 1e-12));
  CHECK(near(root_of_unity(8, 1).to_complex(), {std::sqrt(0.5), std::sqrt(0.5)}, 1e-12));
}

TEST_CASE("order of roots of unity") {
  for (std::uint32_t N : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 9u, 12u, 15u, 16u}) {
    for (long k = 0; k < static_cast<long>(N); ++k) {
      const auto ord = root_of_unity_order(root_of_unity(N, k));
      REQUIRE(ord.has_value());
      CHECK(*ord == N / std::gcd<std::uint32_t>(N, static_cast<std::uint32_t>(k)));
    }
  }
  CHECK_FALSE(root_of_unity_order(CycNumber(2L)).has_value());
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(7);
  for (std::uint32_t N : {3u, 4u, 5u, 8u, 12u, 15u}) {
    for (int trial = 0; trial < 10; ++trial) {
      const CycNumber a = random_cyc(rng, N);
      const CycNumber b = random_cyc(rng, N);
      const CycNumber c = random_cyc(rng, 4);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == CycNumber());
      if (!a.is_zero()) CHECK(a * a.inverse() == CycNumber(1L));
      if (!b.is_zero()) CHECK((a / b) * b == a);
      CHECK(near((a * b + c).to_complex(), a.to_complex() * b.to_complex() + c.to_complex(), 1e-10));
      CHECK(a.reduced() == a);
      const long j = (N == 5 || N == 15) ? 2 : (N == 3 ? 2 : 3);
      if (std::gcd<long>(j, N) == 1) {
        CHECK((a * b).galois(j) == a.galois(j) * b.galois(j));
      }
    }
  }
}

TEST_CASE("reduced picks the minimal conductor") {
  const CycNumber x = root_of_unity(3, 1).lift(12);
  CHECK(x.conductor() == 12);
  CHECK(x.reduced().conductor() == 3);
  const CycNumber i = root_of_unity(4, 1);
  CHECK((i * root_of_unity(3, 1)).reduced().conductor() == 12);
  CHECK((root_of_unity(8, 1) + root_of_unity(8, 7)).reduced().conductor() == 8);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(CycNumber(1L) / CycNumber(), DivisionByZero);
  CHECK_THROWS_AS(CycNumber().inverse(), DivisionByZero);
  const auto saved = conductor_bound();
  set_conductor_bound(20);
  CHECK_THROWS_AS(root_of_unity(5, 1) * root_of_unity(8, 1), ConductorOverflow);
  set_conductor_bound(saved);
  CHECK_THROWS_AS(parse_rational("1/x"), ParseError);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
}

TEST_CASE("recognition of numerical values") {
  const auto w = root_of_unity(3, 1);
  for (const CycNumber& x : {CycNumber(Rational(3, 7)), root_of_unity(4, 1) * CycNumber(Rational(-2, 3)) + CycNumber(1L),
                             w * CycNumber(5L) - CycNumber(Rational(1, 2)), w.conj()}) {
    const auto r = recognize(x.to_complex());
    REQUIRE(r.has_value());
    CHECK(*r == x);
  }
  CHECK_FALSE(recognize({std::sqrt(2.0), 0.0}, 1000).has_value());
  CHECK(rationalize(0.333333333333) == Rational(1, 3));
}

TEST_CASE("printing") {
  CHECK(to_string(CycNumber(Rational(-1, 2))) == "-1/2");
  CHECK(to_string(root_of_unity(4, 1)) == "z4");
  CHECK(to_string(root_of_unity(4, 3)) == "-z4");
  CHECK(to_string(CycNumber(1L) + CycNumber(2L) * root_of_unity(3, 1)) == "1 + 2*z3");
  CHECK(display_less(CycNumber(-1L), CycNumber(1L)));
}

TEST_CASE("rationals are canonicalized on entry") {
  CHECK(CycNumber(Rational(-6, 2)) == CycNumber(-3L));
  CHECK(CycNumber(Rational(4, 8)) + CycNumber(Rational(1, 2)) == CycNumber(1L));
  CHECK(CycNumber::from_coeffs(4, {Rational(2, 4), Rational(3, 3)}) ==
        CycNumber::from_coeffs(4, {Rational(1, 2), Rational(1)}));
}

TEST_CASE("large matrix products match entrywise arithmetic") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6), pick(0, 5);
  auto random_entry = [&](std::uint32_t conductor) {
    if (pick(rng) == 0) return CycNumber();
    return CycNumber(Rational(num(rng), den(rng))) * root_of_unity(conductor, num(rng)) +
           CycNumber(Rational(num(rng), den(rng)));
  };
  for (const auto& [ca, cb] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{1, 1}, {4, 1}, {3, 4}, {5, 5}, {7, 1}}) {
    Matrix a(17, 16), b(16, 18);
    for (std::size_t r = 0; r < 17; ++r) {
      for (std::size_t c = 0; c < 16; ++c) a(r, c) = random_entry(ca);
    }
    for (std::size_t r = 0; r < 16; ++r) {
      for (std::size_t c = 0; c < 18; ++c) b(r, c) = random_entry(cb);
    }
    Matrix expected(17, 18);
    for (std::size_t r = 0; r < 17; ++r) {
      for (std::size_t c = 0; c < 18; ++c) {
        for (std::size_t k = 0; k < 16; ++k) expected(r, c) += a(r, k) * b(k, c);
      }
    }
    CHECK(a * b == expected);
  }
}
