#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhopf/constructions.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/qha.hpp"
#include "qhopf/tensor_ops.hpp"

using namespace qhopf;

namespace {

CycNumber c(long n, long d = 1) { return CycNumber(Rational(n, d)); }

std::vector<QuasiHopfAlgebra> builtins() {
  const QuasiHopfAlgebra z2 = group_algebra(cyclic_group(2));
  const QuasiHopfAlgebra z4 = group_algebra(cyclic_group(4));
  return {z2,
          group_algebra(cyclic_group(3)),
          h_u(z2, SparseTensor::basis(2, 1)),
          h_u(z4, SparseTensor::basis(4, 2)),
          dual_group_algebra(sign_cocycle_z2()),
          dual_group_algebra(cyclic_cocycle(3, 1)),
          twisted_double(sign_cocycle_z2()),
          group_algebra(dihedral_group(8)),
          group_algebra(quaternion_group()),
          kac_algebra()};
}

}  // namespace

TEST_CASE("validate") {
  const QuasiHopfAlgebra z2 = group_algebra(cyclic_group(2));
  CHECK(validate(z2).passed());
  const QuasiHopfAlgebra hu = h_u(z2, SparseTensor::basis(2, 1));
  CHECK(validate(hu).passed());
  CHECK_FALSE(is_ordinary_hopf(hu));

  QuasiHopfAlgebra broken = z2;
  broken.beta = SparseTensor(1, 2);
  const ValidationReport r = validate(broken);
  CHECK_FALSE(r.passed());
  const AxiomCheck* phi_beta_alpha = r.find(axiom::kPhiBetaAlpha);
  REQUIRE(phi_beta_alpha != nullptr);
  CHECK_FALSE(phi_beta_alpha->passed);
  CHECK(r.find(axiom::kAssociativity)->passed);
}

TEST_CASE("Hausser-Nill elements") {
  for (const auto& h : {group_algebra(cyclic_group(3)), kac_algebra()}) {
    const HausserNill hn = hausser_nill_elements(h);
    const SparseTensor one = unit_tensor(h, 2);
    CHECK(hn.q_R == one);
    CHECK(hn.p_R == one);
    CHECK(hn.q_L == one);
    CHECK(hn.p_L == one);
  }

  const Cocycle3 w = sign_cocycle_z2();
  const QuasiHopfAlgebra h = dual_group_algebra(w);
  SparseTensor q_R(2, 2);
  for (std::uint32_t a = 0; a < 2; ++a) {
    for (std::uint32_t b = 0; b < 2; ++b) {
      q_R += outer(SparseTensor::basis(2, a), SparseTensor::basis(2, b)) * w(a, b, w.group.inv(b));
    }
  }
  CHECK(hausser_nill_elements(h).q_R == q_R);
}

TEST_CASE("Hausser-Nill identities and the tensor isomorphism hold for every built-in") {
  for (const auto& h : builtins()) {
    INFO(h.name);
    const HausserNill hn = hausser_nill_elements(h);
    for (const auto& check : check_hausser_nill_identities(h, hn)) {
      INFO(check.name << " " << check.witness);
      CHECK(check.passed);
    }
    CHECK(verify_theta_isomorphism(h));
  }
}

TEST_CASE("gauge_twist examples") {
  const QuasiHopfAlgebra kac = kac_algebra();
  const SparseTensor one = unit_tensor(kac, 2);
  CHECK(structurally_equal(gauge_twist(kac, {one, one}), kac));

  const QuasiHopfAlgebra z2 = group_algebra(cyclic_group(2));
  const SparseTensor u = SparseTensor::basis(2, 1);
  const QuasiHopfAlgebra hu = h_u(z2, u);
  const CharacterAssignment j = {{c(1), c(1)}, {c(1), c(-1)}};
  const auto e = central_idempotents({z2.unit, u}, sign_cocycle_z2(), j);
  const FiniteGroup& g = hu.construction.cocycle->group;
  Cochain2 b{&g, std::vector<CycNumber>(4, c(1))};
  b.values[3] = root_of_unity(4, 1);
  const Cocycle3 db = coboundary(g, b);
  SparseTensor F(2, 2), Fi(2, 2);
  for (std::uint32_t x = 0; x < 2; ++x) {
    for (std::uint32_t y = 0; y < 2; ++y) {
      F += outer(e[x], e[y]) * b(x, y).inverse();
      Fi += outer(e[x], e[y]) * b(x, y);
    }
  }
  SparseTensor expected(3, 2);
  const Cocycle3& w = *hu.construction.cocycle;
  for (std::uint32_t x = 0; x < 2; ++x) {
    for (std::uint32_t y = 0; y < 2; ++y) {
      for (std::uint32_t z = 0; z < 2; ++z) {
        expected += outer(outer(e[x], e[y]), e[z]) * (w(x, y, z) * db(x, y, z)).inverse();
      }
    }
  }
  CHECK(gauge_twist(hu, {F, Fi}).associator == expected);

  for (const auto& h : builtins()) {
    const GaugeTransform t = random_gauge_transform(h, 5);
    const QuasiHopfAlgebra there = gauge_twist(h, t);
    CHECK(structurally_equal(gauge_twist(there, {t.F_inverse, t.F}), h));
  }
}

TEST_CASE("random gauge transforms") {
  for (const auto& h : builtins()) {
    INFO(h.name);
    const GaugeTransform a = random_gauge_transform(h, 42);
    const GaugeTransform b = random_gauge_transform(h, 42);
    CHECK(a.F == b.F);
    CHECK(a.F_inverse == b.F_inverse);
    CHECK_NOTHROW(validate_gauge(h, a));
    CHECK(a.F != random_gauge_transform(h, 43).F);
    const SparseTensor lambda = normalized_integral(h);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const QuasiHopfAlgebra twisted = gauge_twist(h, random_gauge_transform(h, seed));
      CHECK(normalized_integral(twisted) == lambda);
    }
  }
}

TEST_CASE("validate_gauge rejects bad transforms") {
  const QuasiHopfAlgebra z2 = group_algebra(cyclic_group(2));
  const SparseTensor one = unit_tensor(z2, 2);
  CHECK_THROWS_AS(validate_gauge(z2, {one * c(2), one * c(1, 2)}), ValidationFailure);
  CHECK_THROWS_AS(validate_gauge(z2, {one, one * c(2)}), ValidationFailure);
}

TEST_CASE("normalized integrals") {
  const QuasiHopfAlgebra d8 = group_algebra(dihedral_group(8));
  SparseTensor expected(1, 8);
  for (std::uint32_t a = 0; a < 8; ++a) expected += SparseTensor::basis(8, a) * c(1, 8);
  CHECK(normalized_integral(d8) == expected);
  CHECK(normalized_integral(dual_group_algebra(cyclic_cocycle(4, 1))) == SparseTensor::basis(4, 0));
  CHECK(normalized_integral(kac_algebra()) == expected);
}

TEST_CASE("central elements and group-likes") {
  const QuasiHopfAlgebra q8 = group_algebra(quaternion_group());
  CHECK(is_central(q8, q8.unit));
  CHECK(is_central(q8, SparseTensor::basis(8, 1)));
  CHECK_FALSE(is_central(q8, SparseTensor::basis(8, 2)));
  CHECK_FALSE(is_central(group_algebra(dihedral_group(8)), SparseTensor::basis(8, 1)));

  const auto q8_u = find_central_grouplikes(q8, 2);
  REQUIRE(q8_u.size() == 1);
  CHECK(q8_u[0] == SparseTensor::basis(8, 1));
  const auto kac_u = find_central_grouplikes(kac_algebra(), 2);
  REQUIRE(kac_u.size() == 1);
  CHECK(kac_u[0] == SparseTensor::basis(8, 3));
  CHECK(find_central_grouplikes(group_algebra(cyclic_group(3)), 2).empty());
  CHECK(find_central_grouplikes(group_algebra(cyclic_group(3)), 3).size() == 2);
}
