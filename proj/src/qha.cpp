#include "qhopf/qha.hpp"

#include <random>
#include <sstream>

#include "qhopf/errors.hpp"
#include "qhopf/reptheory.hpp"
#include "qhopf/tensor_ops.hpp"

namespace qhopf {

namespace {

using Vec = std::vector<CycNumber>;

Vec basis_vec(const QuasiHopfAlgebra& h, std::uint32_t i) {
  Vec v(h.dim);
  v[i] = CycNumber(1L);
  return v;
}

Vec chain(const QuasiHopfAlgebra& h, std::initializer_list<Vec> factors) {
  auto it = factors.begin();
  Vec acc = *it++;
  for (; it != factors.end(); ++it) acc = multiply(h, acc, *it);
  return acc;
}

Vec apply_S(const QuasiHopfAlgebra& h, const Vec& v) { return h.antipode * v; }
Vec apply_Sinv(const QuasiHopfAlgebra& h, const Vec& v) { return h.antipode_inverse * v; }

SparseTensor pure2(const Vec& x, const Vec& y) {
  return outer(SparseTensor::from_vector(x), SparseTensor::from_vector(y));
}

SparseTensor prod(const QuasiHopfAlgebra& h, const SparseTensor& a, const SparseTensor& b) {
  return algebra_product(h, a, b);
}

SparseTensor prod(const QuasiHopfAlgebra& h, const SparseTensor& a, const SparseTensor& b, const SparseTensor& c) {
  return algebra_product(h, algebra_product(h, a, b), c);
}

Vec scale(Vec v, const CycNumber& c) {
  for (auto& x : v) {
    if (!x.is_zero()) x *= c;
  }
  return v;
}

void add_into(Vec& acc, const Vec& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (!v[i].is_zero()) acc[i] += v[i];
  }
}

SparseTensor coproduct_of(const QuasiHopfAlgebra& h, const Vec& v) {
  SparseTensor out(2, h.dim);
  for (std::uint32_t i = 0; i < h.dim; ++i) {
    if (!v[i].is_zero()) out += h.coproduct[i] * v[i];
  }
  return out;
}

CycNumber counit_of(const QuasiHopfAlgebra& h, const Vec& v) {
  CycNumber e;
  for (std::uint32_t i = 0; i < h.dim; ++i) {
    if (!v[i].is_zero()) e.add_product(h.counit[i], v[i]);
  }
  return e;
}

class Checker {
 public:
  explicit Checker(ValidationReport& r, const QuasiHopfAlgebra& h, const char* name) : report_(r), h_(h) {
    report_.checks.push_back({name, true, ""});
  }
  void fail(const std::string& witness) {
    auto& c = report_.checks.back();
    if (c.passed) {
      c.passed = false;
      c.witness = witness;
    }
  }
  std::string label(std::uint32_t i) const { return h_.basis_labels[i]; }
  bool failed() const { return !report_.checks.back().passed; }

 private:
  ValidationReport& report_;
  const QuasiHopfAlgebra& h_;
};

}  // namespace

bool ValidationReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

bool ValidationReport::passed_except_pentagon() const {
  for (const auto& c : checks) {
    if (!c.passed && c.name != axiom::kPentagon) return false;
  }
  return true;
}

const AxiomCheck* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string ValidationReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "pass  " : "FAIL  ") << c.name;
    if (!c.passed && !c.witness.empty()) os << "  (at " << c.witness << ")";
    os << "\n";
  }
  if (!passed() && passed_except_pentagon()) os << "note: only the pentagon axiom fails\n";
  return os.str();
}

ValidationReport validate(const QuasiHopfAlgebra& h) {
  ValidationReport r;
  const std::uint32_t d = h.dim;
  const Vec one = h.unit.to_vector();
  std::vector<Vec> basis(d);
  for (std::uint32_t i = 0; i < d; ++i) basis[i] = basis_vec(h, i);

  {
    Checker c(r, h, axiom::kAssociativity);
    for (std::uint32_t i = 0; i < d && !c.failed(); ++i) {
      for (std::uint32_t j = 0; j < d && !c.failed(); ++j) {
        const Vec ij = multiply(h, basis[i], basis[j]);
        for (std::uint32_t k = 0; k < d; ++k) {
          if (multiply(h, ij, basis[k]) != multiply(h, basis[i], multiply(h, basis[j], basis[k]))) {
            c.fail(c.label(i) + "," + c.label(j) + "," + c.label(k));
            break;
          }
        }
      }
    }
  }
  {
    Checker c(r, h, axiom::kUnit);
    for (std::uint32_t i = 0; i < d; ++i) {
      if (multiply(h, one, basis[i]) != basis[i] || multiply(h, basis[i], one) != basis[i]) {
        c.fail(c.label(i));
        break;
      }
    }
  }
  {
    Checker c(r, h, axiom::kCounitAlgebraMap);
    if (!counit_of(h, one).is_one()) c.fail("unit");
    for (std::uint32_t i = 0; i < d && !c.failed(); ++i) {
      for (std::uint32_t j = 0; j < d; ++j) {
        if (counit_of(h, multiply(h, basis[i], basis[j])) != h.counit[i] * h.counit[j]) {
          c.fail(c.label(i) + "," + c.label(j));
          break;
        }
      }
    }
  }
  {
    Checker c(r, h, axiom::kCoproductAlgebraMap);
    if (coproduct_of(h, one) != unit_tensor(h, 2)) c.fail("unit");
    for (std::uint32_t i = 0; i < d && !c.failed(); ++i) {
      for (std::uint32_t j = 0; j < d; ++j) {
        if (coproduct_of(h, multiply(h, basis[i], basis[j])) != prod(h, h.coproduct[i], h.coproduct[j])) {
          c.fail(c.label(i) + "," + c.label(j));
          break;
        }
      }
    }
  }
  {
    Checker c(r, h, axiom::kCounitAxiom);
    for (std::uint32_t i = 0; i < d; ++i) {
      const SparseTensor b = SparseTensor::basis(d, i);
      if (apply_counit_leg(h, h.coproduct[i], 0) != b || apply_counit_leg(h, h.coproduct[i], 1) != b) {
        c.fail(c.label(i));
        break;
      }
    }
  }
  {
    Checker c(r, h, axiom::kQuasiCoassociativity);
    for (std::uint32_t i = 0; i < d; ++i) {
      const SparseTensor left = prod(h, h.associator, apply_coproduct_leg(h, h.coproduct[i], 0));
      const SparseTensor right = prod(h, apply_coproduct_leg(h, h.coproduct[i], 1), h.associator);
      if (left != right) {
        c.fail(c.label(i));
        break;
      }
    }
  }
  {
    Checker c(r, h, axiom::kAssociatorInvertible);
    const SparseTensor one3 = unit_tensor(h, 3);
    if (prod(h, h.associator, h.associator_inverse) != one3 || prod(h, h.associator_inverse, h.associator) != one3) {
      c.fail("phi");
    }
  }
  {
    Checker c(r, h, axiom::kPentagon);
    const SparseTensor& phi = h.associator;
    const SparseTensor left = prod(h, embed_factor(phi, 4, 1, h.unit), apply_coproduct_leg(h, phi, 1),
                                   embed_factor(phi, 4, 0, h.unit));
    const SparseTensor right = prod(h, apply_coproduct_leg(h, phi, 2), apply_coproduct_leg(h, phi, 0));
    if (left != right) c.fail("phi");
  }
  {
    Checker c(r, h, axiom::kAssociatorCounit);
    if (apply_counit_leg(h, h.associator, 1) != unit_tensor(h, 2)) c.fail("phi");
  }
  {
    Checker c(r, h, axiom::kAntipodeAntiMultiplicative);
    if (apply_S(h, one) != one) c.fail("unit");
    for (std::uint32_t i = 0; i < d && !c.failed(); ++i) {
      for (std::uint32_t j = 0; j < d; ++j) {
        if (apply_S(h, multiply(h, basis[i], basis[j])) !=
            multiply(h, apply_S(h, basis[j]), apply_S(h, basis[i]))) {
          c.fail(c.label(i) + "," + c.label(j));
          break;
        }
      }
    }
  }
  const Vec alpha = h.alpha.to_vector();
  const Vec beta = h.beta.to_vector();
  {
    Checker ca(r, h, axiom::kAntipodeAlpha);
    for (std::uint32_t i = 0; i < d; ++i) {
      Vec acc(d);
      for (const auto& [f, coeff] : h.coproduct[i].entries()) {
        const auto x = static_cast<std::uint32_t>(f / d), y = static_cast<std::uint32_t>(f % d);
        add_into(acc, scale(chain(h, {apply_S(h, basis[x]), alpha, basis[y]}), coeff));
      }
      if (acc != scale(alpha, h.counit[i])) {
        ca.fail(ca.label(i));
        break;
      }
    }
  }
  {
    Checker cb(r, h, axiom::kAntipodeBeta);
    for (std::uint32_t i = 0; i < d; ++i) {
      Vec acc(d);
      for (const auto& [f, coeff] : h.coproduct[i].entries()) {
        const auto x = static_cast<std::uint32_t>(f / d), y = static_cast<std::uint32_t>(f % d);
        add_into(acc, scale(chain(h, {basis[x], beta, apply_S(h, basis[y])}), coeff));
      }
      if (acc != scale(beta, h.counit[i])) {
        cb.fail(cb.label(i));
        break;
      }
    }
  }
  {
    Checker c(r, h, axiom::kPhiBetaAlpha);
    Vec acc(d);
    for (const auto& [f, coeff] : h.associator.entries()) {
      const auto idx = h.associator.unflat(f);
      add_into(acc, scale(chain(h, {basis[idx[0]], beta, apply_S(h, basis[idx[1]]), alpha, basis[idx[2]]}), coeff));
    }
    if (acc != one) c.fail("phi");
  }
  {
    Checker c(r, h, axiom::kPhiInvAlphaBeta);
    Vec acc(d);
    for (const auto& [f, coeff] : h.associator_inverse.entries()) {
      const auto idx = h.associator_inverse.unflat(f);
      add_into(acc, scale(chain(h, {apply_S(h, basis[idx[0]]), alpha, basis[idx[1]], beta,
                                    apply_S(h, basis[idx[2]])}),
                          coeff));
    }
    if (acc != one) c.fail("phi^-1");
  }
  return r;
}

HausserNill hausser_nill_elements(const QuasiHopfAlgebra& h) {
  const std::uint32_t d = h.dim;
  const Vec alpha = h.alpha.to_vector();
  const Vec beta = h.beta.to_vector();
  HausserNill hn{SparseTensor(2, d), SparseTensor(2, d), SparseTensor(2, d), SparseTensor(2, d)};
  for (const auto& [f, c] : h.associator.entries()) {
    const auto idx = h.associator.unflat(f);
    const Vec b0 = basis_vec(h, idx[0]), b1 = basis_vec(h, idx[1]), b2 = basis_vec(h, idx[2]);
    hn.q_R += pure2(b0, multiply(h, apply_Sinv(h, multiply(h, alpha, b2)), b1)) * c;
    hn.p_L += pure2(multiply(h, b1, apply_Sinv(h, multiply(h, b0, beta))), b2) * c;
  }
  for (const auto& [f, c] : h.associator_inverse.entries()) {
    const auto idx = h.associator_inverse.unflat(f);
    const Vec b0 = basis_vec(h, idx[0]), b1 = basis_vec(h, idx[1]), b2 = basis_vec(h, idx[2]);
    hn.p_R += pure2(b0, chain(h, {b1, beta, apply_S(h, b2)})) * c;
    hn.q_L += pure2(chain(h, {apply_S(h, b0), alpha, b1}), b2) * c;
  }
  const SparseTensor one2 = unit_tensor(h, 2);
  auto sum_over = [&](const SparseTensor& t, auto&& term) {
    SparseTensor acc(2, d);
    for (const auto& [f, c] : t.entries()) {
      acc += term(static_cast<std::uint32_t>(f / d), static_cast<std::uint32_t>(f % d)) * c;
    }
    return acc;
  };
  auto unit_leg = [&](const Vec& v, std::uint32_t leg) {
    return leg == 0 ? pure2(v, h.unit.to_vector()) : pure2(h.unit.to_vector(), v);
  };
  // Δ(q_R1) p_R (1⊗S(q_R2)) and (1⊗S^{-1}(p_R2)) q_R Δ(p_R1)
  const SparseTensor r1 = sum_over(hn.q_R, [&](std::uint32_t x, std::uint32_t y) {
    return prod(h, h.coproduct[x], hn.p_R, unit_leg(apply_S(h, basis_vec(h, y)), 1));
  });
  const SparseTensor r2 = sum_over(hn.p_R, [&](std::uint32_t x, std::uint32_t y) {
    return prod(h, unit_leg(apply_Sinv(h, basis_vec(h, y)), 1), hn.q_R, h.coproduct[x]);
  });
  if (r1 != one2 || r2 != one2) throw IdentityViolation("q_R/p_R normalization identity fails");
  // Δ(q_L2) p_L (S^{-1}(q_L1)⊗1) and (S(p_L1)⊗1) q_L Δ(p_L2)
  const SparseTensor l1 = sum_over(hn.q_L, [&](std::uint32_t x, std::uint32_t y) {
    return prod(h, h.coproduct[y], hn.p_L, unit_leg(apply_Sinv(h, basis_vec(h, x)), 0));
  });
  const SparseTensor l2 = sum_over(hn.p_L, [&](std::uint32_t x, std::uint32_t y) {
    return prod(h, unit_leg(apply_S(h, basis_vec(h, x)), 0), hn.q_L, h.coproduct[y]);
  });
  if (l1 != one2 || l2 != one2) throw IdentityViolation("q_L/p_L normalization identity fails");
  return hn;
}

std::vector<AxiomCheck> check_hausser_nill_identities(const QuasiHopfAlgebra& h, const HausserNill& hn) {
  const std::uint32_t d = h.dim;
  const Vec one = h.unit.to_vector();
  std::vector<AxiomCheck> out = {{"(a⊗1) q_R = (1⊗S^-1(a2)) q_R Δ(a1)", true, ""},
                                 {"p_R (a⊗1) = Δ(a1) p_R (1⊗S(a2))", true, ""},
                                 {"(1⊗a) q_L = (S(a1)⊗1) q_L Δ(a2)", true, ""},
                                 {"p_L (1⊗a) = Δ(a2) p_L (S^-1(a1)⊗1)", true, ""}};
  for (std::uint32_t i = 0; i < d; ++i) {
    const Vec a = basis_vec(h, i);
    SparseTensor rhs[4] = {SparseTensor(2, d), SparseTensor(2, d), SparseTensor(2, d), SparseTensor(2, d)};
    for (const auto& [f, c] : h.coproduct[i].entries()) {
      const auto x = static_cast<std::uint32_t>(f / d), y = static_cast<std::uint32_t>(f % d);
      const Vec a1 = basis_vec(h, x), a2 = basis_vec(h, y);
      rhs[0] += prod(h, pure2(one, apply_Sinv(h, a2)), hn.q_R, h.coproduct[x]) * c;
      rhs[1] += prod(h, h.coproduct[x], hn.p_R, pure2(one, apply_S(h, a2))) * c;
      rhs[2] += prod(h, pure2(apply_S(h, a1), one), hn.q_L, h.coproduct[y]) * c;
      rhs[3] += prod(h, h.coproduct[y], hn.p_L, pure2(apply_Sinv(h, a1), one)) * c;
    }
    const SparseTensor lhs[4] = {prod(h, pure2(a, one), hn.q_R), prod(h, hn.p_R, pure2(a, one)),
                                 prod(h, pure2(one, a), hn.q_L), prod(h, hn.p_L, pure2(one, a))};
    for (int k = 0; k < 4; ++k) {
      if (out[k].passed && lhs[k] != rhs[k]) {
        out[k].passed = false;
        out[k].witness = h.basis_labels[i];
      }
    }
  }
  return out;
}

bool verify_theta_isomorphism(const QuasiHopfAlgebra& h) {
  const std::uint32_t d = h.dim;
  const HausserNill hn = hausser_nill_elements(h);
  const std::size_t n = static_cast<std::size_t>(d) * d;
  Matrix theta(n, n), theta_bar(n, n);
  for (std::uint32_t i = 0; i < d; ++i) {
    // θ(b_i ⊗ v) = Σ T1 ⊗ S(T2) v with T = q_R Δ(b_i)
    const SparseTensor t = apply_antipode_leg(h, prod(h, hn.q_R, h.coproduct[i]), 1);
    const SparseTensor u = prod(h, h.coproduct[i], hn.p_R);
    for (std::uint32_t j = 0; j < d; ++j) {
      const std::size_t col = static_cast<std::size_t>(i) * d + j;
      for (const auto& [f, c] : t.entries()) {
        const auto x = static_cast<std::uint32_t>(f / d), y = static_cast<std::uint32_t>(f % d);
        for (const auto& [k, s] : h.product(y, j)) theta(static_cast<std::size_t>(x) * d + k, col).add_product(c, s);
      }
      for (const auto& [f, c] : u.entries()) {
        const auto x = static_cast<std::uint32_t>(f / d), y = static_cast<std::uint32_t>(f % d);
        for (const auto& [k, s] : h.product(y, j)) {
          theta_bar(static_cast<std::size_t>(x) * d + k, col).add_product(c, s);
        }
      }
    }
  }
  return (theta * theta_bar).is_identity() && (theta_bar * theta).is_identity();
}

void validate_gauge(const QuasiHopfAlgebra& h, const GaugeTransform& g) {
  const SparseTensor one2 = unit_tensor(h, 2);
  if (g.F.legs() != 2 || g.F_inverse.legs() != 2) throw ValidationFailure("gauge transform must have 2 legs");
  if (prod(h, g.F, g.F_inverse) != one2 || prod(h, g.F_inverse, g.F) != one2) {
    throw ValidationFailure("gauge transform F^-1 is not the inverse of F");
  }
  if (apply_counit_leg(h, g.F, 0) != h.unit || apply_counit_leg(h, g.F, 1) != h.unit) {
    throw ValidationFailure("gauge transform is not counit-normalized");
  }
}

QuasiHopfAlgebra gauge_twist(const QuasiHopfAlgebra& h, const GaugeTransform& g, bool check) {
  validate_gauge(h, g);
  const std::uint32_t d = h.dim;
  QuasiHopfAlgebra out = h;
  out.name = h.name + "^F";
  for (std::uint32_t i = 0; i < d; ++i) out.coproduct[i] = prod(h, g.F, h.coproduct[i], g.F_inverse);
  const SparseTensor& F = g.F;
  const SparseTensor& Fi = g.F_inverse;
  // φ^F = (1⊗F)(id⊗Δ)(F) φ (Δ⊗id)(F^{-1}) (F^{-1}⊗1)
  out.associator = prod(h, prod(h, embed_factor(F, 3, 1, h.unit), apply_coproduct_leg(h, F, 1), h.associator),
                        apply_coproduct_leg(h, Fi, 0), embed_factor(Fi, 3, 0, h.unit));
  out.associator_inverse =
      prod(h, prod(h, embed_factor(F, 3, 0, h.unit), apply_coproduct_leg(h, F, 0), h.associator_inverse),
           apply_coproduct_leg(h, Fi, 1), embed_factor(Fi, 3, 1, h.unit));
  const Vec alpha = h.alpha.to_vector();
  const Vec beta = h.beta.to_vector();
  Vec a(d), b(d);
  for (const auto& [f, c] : Fi.entries()) {
    const auto x = static_cast<std::uint32_t>(f / d), y = static_cast<std::uint32_t>(f % d);
    add_into(a, scale(chain(h, {apply_S(h, basis_vec(h, x)), alpha, basis_vec(h, y)}), c));
  }
  for (const auto& [f, c] : F.entries()) {
    const auto x = static_cast<std::uint32_t>(f / d), y = static_cast<std::uint32_t>(f % d);
    add_into(b, scale(chain(h, {basis_vec(h, x), beta, apply_S(h, basis_vec(h, y))}), c));
  }
  out.alpha = SparseTensor::from_vector(a);
  out.beta = SparseTensor::from_vector(b);
  out.construction.gauged = true;
  if (check) {
    const ValidationReport r = validate(out);
    if (!r.passed()) throw ValidationFailure("gauge-twisted algebra fails validation:\n" + r.to_text());
  }
  return out;
}

GaugeTransform random_gauge_transform(const QuasiHopfAlgebra& h, std::uint64_t seed) {
  const std::uint32_t d = h.dim;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> count_dist(2, 4);
  std::uniform_int_distribution<std::uint64_t> index_dist(0, static_cast<std::uint64_t>(d) * d - 1);
  std::uniform_int_distribution<int> coeff_dist(0, 3);
  static const long kCoeffs[4] = {-2, -1, 1, 2};
  const SparseTensor one2 = unit_tensor(h, 2);
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<SparseTensor::Entry> raw;
    const int count = count_dist(rng);
    for (int i = 0; i < count; ++i) raw.emplace_back(index_dist(rng), CycNumber(kCoeffs[coeff_dist(rng)]));
    const SparseTensor n0 = SparseTensor::from_entries(2, d, std::move(raw));
    const SparseTensor a = apply_counit_leg(h, n0, 0);
    const SparseTensor b = apply_counit_leg(h, n0, 1);
    const CycNumber c = apply_counit_leg(h, a, 0).scalar_value();
    const SparseTensor n = n0 - outer(h.unit, a) - outer(b, h.unit) + one2 * c;
    if (n.is_zero()) continue;
    const SparseTensor F = one2 + n;
    try {
      GaugeTransform g{F, algebra_inverse(h, F)};
      return g;
    } catch (const SingularMatrix&) {
      continue;
    }
  }
  throw GenerationFailure("no invertible gauge transform after 32 attempts");
}

SparseTensor normalized_integral(const QuasiHopfAlgebra& h) {
  const std::uint32_t d = h.dim;
  Matrix constraints(2 * static_cast<std::size_t>(d) * d, d);
  const Vec one = h.unit.to_vector();
  for (std::uint32_t i = 0; i < d; ++i) {
    Vec shifted = basis_vec(h, i);
    for (std::uint32_t k = 0; k < d; ++k) {
      if (!one[k].is_zero()) shifted[k] -= h.counit[i] * one[k];
    }
    const Matrix l = left_mult_matrix(h, shifted);
    const Matrix r = right_mult_matrix(h, shifted);
    for (std::uint32_t row = 0; row < d; ++row) {
      for (std::uint32_t col = 0; col < d; ++col) {
        constraints(static_cast<std::size_t>(i) * d + row, col) = l(row, col);
        constraints(static_cast<std::size_t>(d) * d + static_cast<std::size_t>(i) * d + row, col) = r(row, col);
      }
    }
  }
  const auto ns = nullspace(constraints);
  if (ns.size() != 1) {
    throw NotUnimodularOrNotSemisimple("two-sided integral space has dimension " + std::to_string(ns.size()));
  }
  const CycNumber e = counit_of(h, ns[0]);
  if (e.is_zero()) throw CounitDegenerate("counit vanishes on the integral");
  return SparseTensor::from_vector(scale(ns[0], e.inverse()));
}

bool is_central(const QuasiHopfAlgebra& h, const SparseTensor& z) {
  const Vec v = z.to_vector();
  for (std::uint32_t i = 0; i < h.dim; ++i) {
    const Vec b = basis_vec(h, i);
    if (multiply(h, v, b) != multiply(h, b, v)) return false;
  }
  return true;
}

std::vector<SparseTensor> find_central_grouplikes(const QuasiHopfAlgebra& h, std::uint32_t order) {
  const auto blocks = ensure_block_basis(h);
  const std::size_t nb = blocks->block_count();
  std::vector<Vec> idem(nb);
  for (std::uint32_t i = 0; i < nb; ++i) idem[i] = blocks->central_idempotent(i);
  std::vector<CycNumber> roots(order);
  for (std::uint32_t k = 0; k < order; ++k) roots[k] = root_of_unity(order, k);
  std::vector<SparseTensor> out;
  std::vector<std::uint32_t> choice(nb, 0);
  const SparseTensor one = h.unit;
  while (true) {
    Vec g(h.dim);
    for (std::size_t i = 0; i < nb; ++i) add_into(g, scale(idem[i], roots[choice[i]]));
    const SparseTensor gt = SparseTensor::from_vector(g);
    if (gt != one && counit_of(h, g).is_one() && coproduct_of(h, g) == outer(gt, gt)) out.push_back(gt);
    std::size_t l = nb;
    bool done = true;
    while (l-- > 0) {
      if (++choice[l] < order) {
        done = false;
        break;
      }
      choice[l] = 0;
    }
    if (done) break;
  }
  return out;
}

}  // namespace qhopf
