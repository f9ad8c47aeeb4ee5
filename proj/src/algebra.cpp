#include "qhopf/algebra.hpp"

#include "qhopf/errors.hpp"
#include "qhopf/tensor_ops.hpp"

namespace qhopf {

Matrix BlockBasis::block_of(std::uint32_t block, const std::vector<CycNumber>& x) const {
  const std::uint32_t n = block_dims[block];
  Matrix m(n, n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const std::size_t row = offsets[block] + a * n + b;
      CycNumber v;
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (!x[j].is_zero() && !to_blocks(row, j).is_zero()) v.add_product(to_blocks(row, j), x[j]);
      }
      m(a, b) = v;
    }
  }
  return m;
}

Matrix BlockBasis::block_of_basis(std::uint32_t block, std::uint32_t j) const {
  const std::uint32_t n = block_dims[block];
  Matrix m(n, n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) m(a, b) = to_blocks(offsets[block] + a * n + b, j);
  }
  return m;
}

std::vector<CycNumber> BlockBasis::central_idempotent(std::uint32_t block) const {
  std::vector<CycNumber> e(dim);
  const std::uint32_t n = block_dims[block];
  for (std::uint32_t a = 0; a < n; ++a) {
    const std::size_t col = offsets[block] + a * n + a;
    for (std::uint32_t r = 0; r < dim; ++r) e[r] += from_blocks(r, col);
  }
  return e;
}

void finalize(QuasiHopfAlgebra& h) {
  const std::uint32_t d = h.dim;
  if (d == 0) throw DimensionMismatch("algebra dimension must be positive");
  if (h.basis_labels.empty()) {
    for (std::uint32_t i = 0; i < d; ++i) h.basis_labels.push_back("b" + std::to_string(i));
  }
  if (h.basis_labels.size() != d || h.mult.size() != static_cast<std::size_t>(d) * d ||
      h.coproduct.size() != d || h.counit.size() != d) {
    throw DimensionMismatch("structure constant arrays do not match the dimension");
  }
  if (h.unit.legs() != 1 || h.unit.dim() != d) throw DimensionMismatch("unit must be a 1-leg tensor");
  for (const auto& c : h.coproduct) {
    if (c.legs() != 2 || c.dim() != d) throw DimensionMismatch("coproduct images must be 2-leg tensors");
  }
  if (h.associator.legs() != 3 || h.associator.dim() != d) throw DimensionMismatch("associator must have 3 legs");
  if (h.alpha.legs() != 1 || h.beta.legs() != 1 || h.alpha.dim() != d || h.beta.dim() != d) {
    throw DimensionMismatch("alpha and beta must be 1-leg tensors");
  }
  if (h.antipode.rows() != d || h.antipode.cols() != d) throw DimensionMismatch("antipode must be d x d");
  h.antipode_inverse = inverse(h.antipode);
  if (h.associator_inverse.legs() != 3) h.associator_inverse = algebra_inverse(h, h.associator);
}

bool is_ordinary_hopf(const QuasiHopfAlgebra& h) {
  return h.associator == unit_tensor(h, 3) && h.alpha == h.unit && h.beta == h.unit;
}

bool structurally_equal(const QuasiHopfAlgebra& a, const QuasiHopfAlgebra& b) {
  if (a.dim != b.dim) return false;
  for (std::size_t i = 0; i < a.mult.size(); ++i) {
    if (SparseTensor::from_sparse(a.dim, a.mult[i]) != SparseTensor::from_sparse(b.dim, b.mult[i])) return false;
  }
  return a.unit == b.unit && a.coproduct == b.coproduct && a.counit == b.counit && a.associator == b.associator &&
         a.alpha == b.alpha && a.beta == b.beta && a.antipode == b.antipode;
}

}  // namespace qhopf
