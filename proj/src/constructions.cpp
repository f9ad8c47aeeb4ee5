#include "qhopf/constructions.hpp"

#include <algorithm>

#include "qhopf/errors.hpp"
#include "qhopf/qha.hpp"
#include "qhopf/reptheory.hpp"
#include "qhopf/tensor_ops.hpp"

namespace qhopf {

namespace {

using Entry = SparseTensor::Entry;

CycNumber one() { return CycNumber(1L); }

std::uint64_t idx2(std::uint32_t d, std::uint32_t a, std::uint32_t b) {
  return static_cast<std::uint64_t>(a) * d + b;
}

std::uint64_t idx3(std::uint32_t d, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return (static_cast<std::uint64_t>(a) * d + b) * d + c;
}

void init_arrays(QuasiHopfAlgebra& h, std::uint32_t d) {
  h.dim = d;
  h.mult.assign(static_cast<std::size_t>(d) * d, {});
  h.coproduct.assign(d, SparseTensor(2, d));
  h.counit.assign(d, CycNumber());
  h.antipode = Matrix(d, d);
}

void set_trivial_quasi(QuasiHopfAlgebra& h) {
  h.associator = unit_tensor(h, 3);
  h.associator_inverse = h.associator;
  h.alpha = h.unit;
  h.beta = h.unit;
}

std::vector<CycNumber> dense(const SparseTensor& t) { return t.to_vector(); }

}  // namespace

QuasiHopfAlgebra group_algebra(const FiniteGroup& g) {
  const std::uint32_t d = g.order;
  QuasiHopfAlgebra h;
  h.name = "C[" + g.name + "]";
  init_arrays(h, d);
  h.basis_labels = g.labels;
  for (std::uint32_t a = 0; a < d; ++a) {
    for (std::uint32_t b = 0; b < d; ++b) h.mult[a * d + b] = {{g.mul(a, b), one()}};
    h.coproduct[a] = SparseTensor::from_entries(2, d, {{idx2(d, a, a), one()}});
    h.counit[a] = one();
    h.antipode(g.inv(a), a) = one();
  }
  h.unit = SparseTensor::basis(d, g.identity);
  set_trivial_quasi(h);
  h.construction.kind = ConstructionKind::GroupAlgebra;
  h.construction.group = std::make_shared<const FiniteGroup>(g);
  finalize(h);
  attach_block_basis(h);
  return h;
}

QuasiHopfAlgebra dual_group_algebra(const Cocycle3& w) {
  const FiniteGroup& g = w.group;
  const std::uint32_t d = g.order;
  QuasiHopfAlgebra h;
  h.name = "H(" + g.name + ",w)";
  init_arrays(h, d);
  std::vector<CycNumber> unit(d, one());
  std::vector<Entry> phi, phi_inv, beta;
  for (std::uint32_t a = 0; a < d; ++a) {
    h.basis_labels.push_back("e(" + g.labels[a] + ")");
    h.mult[a * d + a] = {{a, one()}};
    std::vector<Entry> delta;
    for (std::uint32_t b = 0; b < d; ++b) delta.emplace_back(idx2(d, b, g.mul(g.inv(b), a)), one());
    h.coproduct[a] = SparseTensor::from_entries(2, d, std::move(delta));
    h.counit[a] = a == g.identity ? one() : CycNumber();
    h.antipode(g.inv(a), a) = one();
    beta.emplace_back(a, w(a, g.inv(a), a).inverse());
    for (std::uint32_t b = 0; b < d; ++b) {
      for (std::uint32_t c = 0; c < d; ++c) {
        phi.emplace_back(idx3(d, a, b, c), w(a, b, c));
        phi_inv.emplace_back(idx3(d, a, b, c), w(a, b, c).inverse());
      }
    }
  }
  h.unit = SparseTensor::from_vector(unit);
  h.associator = SparseTensor::from_entries(3, d, std::move(phi));
  h.associator_inverse = SparseTensor::from_entries(3, d, std::move(phi_inv));
  h.alpha = h.unit;
  h.beta = SparseTensor::from_entries(1, d, std::move(beta));
  h.construction.kind = ConstructionKind::DualGroup;
  h.construction.group = std::make_shared<const FiniteGroup>(g);
  h.construction.cocycle = std::make_shared<const Cocycle3>(w);
  finalize(h);
  // e(g) are already the primitive idempotents; the basis order is the character order.
  auto bb = std::make_shared<BlockBasis>();
  bb->dim = d;
  bb->block_dims.assign(d, 1);
  for (std::uint32_t a = 0; a < d; ++a) bb->offsets.push_back(a);
  bb->to_blocks = Matrix::identity(d);
  bb->from_blocks = Matrix::identity(d);
  h.blocks = bb;
  return h;
}

std::vector<SparseTensor> central_idempotents(const std::vector<SparseTensor>& elements, const Cocycle3& w,
                                              const CharacterAssignment& j) {
  const FiniteGroup& g = w.group;
  const CycNumber inv_order(Rational(1, g.order));
  std::vector<SparseTensor> e;
  for (std::uint32_t x = 0; x < g.order; ++x) {
    SparseTensor ex(1, elements.front().dim());
    for (std::uint32_t y = 0; y < g.order; ++y) ex += elements[y] * (j[y][x].inverse() * inv_order);
    e.push_back(std::move(ex));
  }
  return e;
}

QuasiHopfAlgebra central_twist(const QuasiHopfAlgebra& h, const std::vector<SparseTensor>& elements,
                               const Cocycle3& w, const CharacterAssignment& j) {
  const FiniteGroup& g = w.group;
  const std::uint32_t n = g.order;
  if (elements.size() != n) throw DimensionMismatch("need one algebra element per group element");
  for (std::uint32_t y = 0; y < n; ++y) {
    const SparseTensor& e = elements[y];
    const auto v = dense(e);
    CycNumber eps;
    for (std::uint32_t i = 0; i < h.dim; ++i) eps.add_product(h.counit[i], v[i]);
    SparseTensor delta(2, h.dim);
    for (const auto& [i, c] : e.entries()) delta += h.coproduct[i] * c;
    if (!eps.is_one() || delta != outer(e, e)) throw NotGrouplike("element " + g.labels[y] + " is not group-like");
    if (!is_central(h, e)) throw NotCentral("element " + g.labels[y] + " is not central");
  }
  if (elements[g.identity] != h.unit) throw NotGrouplike("the group identity must map to 1");
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (algebra_product(h, elements[a], elements[b]) != elements[g.mul(a, b)]) {
        throw NotGrouplike("the given elements do not multiply like the group");
      }
    }
  }
  if (j.size() != n) throw BadCharacterTable("character table has the wrong number of rows");
  for (std::uint32_t y = 0; y < n; ++y) {
    if (j[y].size() != n) throw BadCharacterTable("character table row has the wrong length");
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        if (j[y][g.mul(a, b)] != j[y][a] * j[y][b]) throw BadCharacterTable("row is not a character");
        if (j[g.mul(y, a)][b] != j[y][b] * j[a][b]) throw BadCharacterTable("j is not a homomorphism");
      }
    }
    for (std::uint32_t z = 0; z < y; ++z) {
      if (j[y] == j[z]) throw BadCharacterTable("j is not injective");
    }
  }
  const auto e = central_idempotents(elements, w, j);

  QuasiHopfAlgebra t = h;
  t.name = h.name + "_twist";
  t.associator = SparseTensor(3, h.dim);
  t.associator_inverse = SparseTensor(3, h.dim);
  t.beta = SparseTensor(1, h.dim);
  for (std::uint32_t x = 0; x < n; ++x) {
    t.beta += e[x] * w(x, g.inv(x), x);
    for (std::uint32_t y = 0; y < n; ++y) {
      const SparseTensor exy = outer(e[x], e[y]);
      for (std::uint32_t z = 0; z < n; ++z) {
        const SparseTensor exyz = outer(exy, e[z]);
        t.associator += exyz * w(x, y, z).inverse();
        t.associator_inverse += exyz * w(x, y, z);
      }
    }
  }
  t.alpha = h.unit;
  t.construction = ConstructionTag{};
  t.construction.kind = ConstructionKind::CentralTwist;
  t.construction.group = std::make_shared<const FiniteGroup>(g);
  t.construction.cocycle = std::make_shared<const Cocycle3>(w);
  t.construction.base = std::make_shared<const QuasiHopfAlgebra>(h);
  if (n == 2) t.construction.u = elements[g.identity == 0 ? 1 : 0];
  finalize(t);
  return t;
}

QuasiHopfAlgebra h_u(const QuasiHopfAlgebra& h, const SparseTensor& u) {
  const Cocycle3 w = sign_cocycle_z2();
  const CharacterAssignment j = {{one(), one()}, {one(), CycNumber(-1L)}};
  QuasiHopfAlgebra t = central_twist(h, {h.unit, u}, w, j);
  t.name = h.name + "_u";
  return t;
}

CycNumber DoubleCoefficients::theta(std::uint32_t g, std::uint32_t x, std::uint32_t y) const {
  const FiniteGroup& G = w->group;
  const std::uint32_t xy = G.mul(x, y);
  return (*w)(g, x, y) * (*w)(x, y, G.conj_by(g, xy)) * (*w)(x, G.conj_by(g, x), y).inverse();
}

CycNumber DoubleCoefficients::gamma(std::uint32_t g, std::uint32_t x, std::uint32_t y) const {
  const FiniteGroup& G = w->group;
  return (*w)(x, y, g) * (*w)(g, G.conj_by(x, g), G.conj_by(y, g)) * (*w)(x, g, G.conj_by(y, g)).inverse();
}

QuasiHopfAlgebra twisted_double(const Cocycle3& w) {
  const FiniteGroup& G = w.group;
  const std::uint32_t n = G.order;
  const std::uint32_t d = n * n;
  const DoubleCoefficients k{&w};
  auto at = [n](std::uint32_t g, std::uint32_t x) { return g * n + x; };
  QuasiHopfAlgebra h;
  h.name = "D(" + G.name + ",w)";
  init_arrays(h, d);
  std::vector<Entry> unit, phi, phi_inv, beta;
  for (std::uint32_t g = 0; g < n; ++g) {
    for (std::uint32_t x = 0; x < n; ++x) {
      const std::uint32_t i = at(g, x);
      h.basis_labels.push_back("e(" + G.labels[g] + ")" + G.labels[x]);
      for (std::uint32_t y = 0; y < n; ++y) {
        h.mult[i * d + at(G.conj_by(g, x), y)] = {{at(g, G.mul(x, y)), k.theta(g, x, y)}};
      }
      std::vector<Entry> delta;
      for (std::uint32_t a = 0; a < n; ++a) {
        const std::uint32_t b = G.mul(G.inv(a), g);
        delta.emplace_back(idx2(d, at(a, x), at(b, x)), k.gamma(x, a, b));
      }
      h.coproduct[i] = SparseTensor::from_entries(2, d, std::move(delta));
      h.counit[i] = g == G.identity ? one() : CycNumber();
      const std::uint32_t gi = G.inv(g), xi = G.inv(x);
      h.antipode(at(G.conj_by(gi, x), xi), i) = (k.theta(gi, x, xi) * k.gamma(x, g, gi)).inverse();
    }
    unit.emplace_back(at(g, G.identity), one());
    beta.emplace_back(at(g, G.identity), w(g, G.inv(g), g));
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        const auto f = idx3(d, at(g, G.identity), at(a, G.identity), at(b, G.identity));
        phi.emplace_back(f, w(g, a, b).inverse());
        phi_inv.emplace_back(f, w(g, a, b));
      }
    }
  }
  h.unit = SparseTensor::from_entries(1, d, std::move(unit));
  h.associator = SparseTensor::from_entries(3, d, std::move(phi));
  h.associator_inverse = SparseTensor::from_entries(3, d, std::move(phi_inv));
  h.alpha = h.unit;
  h.beta = SparseTensor::from_entries(1, d, std::move(beta));
  h.construction.kind = ConstructionKind::TwistedDouble;
  h.construction.group = std::make_shared<const FiniteGroup>(G);
  h.construction.cocycle = std::make_shared<const Cocycle3>(w);
  finalize(h);
  attach_block_basis(h);
  return h;
}

QuasiHopfAlgebra kac_algebra() {
  // index g + 4 s for g z^s, g ∈ {1, x, y, xy} encoded by bits (x = 1, y = 2)
  const std::uint32_t d = 8;
  QuasiHopfAlgebra h;
  h.name = "K";
  init_arrays(h, d);
  h.basis_labels = {"1", "x", "y", "xy", "z", "xz", "yz", "xyz"};
  auto swap = [](std::uint32_t g) { return ((g & 1u) << 1) | ((g & 2u) >> 1); };
  const CycNumber half(Rational(1, 2));
  // z^2 = (1 + x + y - xy) / 2
  const SparseVec z2 = {{0, half}, {1, half}, {2, half}, {3, -half}};
  for (std::uint32_t a = 0; a < d; ++a) {
    for (std::uint32_t b = 0; b < d; ++b) {
      const std::uint32_t g1 = a & 3u, s1 = a >> 2, g2 = b & 3u, s2 = b >> 2;
      const std::uint32_t g = g1 ^ (s1 ? swap(g2) : g2);
      SparseVec& out = h.mult[a * d + b];
      if (s1 + s2 < 2) {
        out = {{g + 4 * (s1 + s2), one()}};
      } else {
        for (const auto& [k, c] : z2) out.emplace_back(g ^ k, c);
        std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
      }
    }
  }
  h.unit = SparseTensor::basis(d, 0);
  for (std::uint32_t g = 0; g < 4; ++g) {
    h.coproduct[g] = SparseTensor::from_entries(2, d, {{idx2(d, g, g), one()}});
    h.counit[g] = h.counit[g + 4] = one();
  }
  // Δ(z) = (1/2)(1⊗1 + x⊗1 + 1⊗y - x⊗y)(z⊗z)
  const SparseTensor pre = SparseTensor::from_entries(
      2, d, {{idx2(d, 0, 0), half}, {idx2(d, 1, 0), half}, {idx2(d, 0, 2), half}, {idx2(d, 1, 2), -half}});
  const SparseTensor zz = SparseTensor::from_entries(2, d, {{idx2(d, 4, 4), one()}});
  const SparseTensor dz = algebra_product(h, pre, zz, ProductKernel::Sparse);
  for (std::uint32_t g = 0; g < 4; ++g) h.coproduct[g + 4] = algebra_product(h, h.coproduct[g], dz, ProductKernel::Sparse);
  // S(g z) = S(z) S(g) = z g = swap(g) z
  for (std::uint32_t g = 0; g < 4; ++g) {
    h.antipode(g, g) = one();
    h.antipode(swap(g) + 4, g + 4) = one();
  }
  set_trivial_quasi(h);
  h.construction.kind = ConstructionKind::Kac;
  finalize(h);
  const ValidationReport report = validate(h);
  if (!report.passed()) throw ValidationFailure("Kac algebra failed its axiom check:\n" + report.to_text());
  attach_block_basis(h);
  return h;
}

}  // namespace qhopf
