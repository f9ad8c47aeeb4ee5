#pragma once

// Algebra operations on tensors over a QuasiHopfAlgebra: products in H^{⊗k},
// coproduct/counit/antipode on single legs, and folding legs with m.

#include "qhopf/algebra.hpp"

namespace qhopf {

/// Sparse: expands entry pairs through the structure constants.
/// Block: works leg-wise in matrix-unit coordinates (needs h.blocks).
/// Auto: picks by estimated cost.
enum class ProductKernel { Auto, Sparse, Block };

SparseTensor unit_tensor(const QuasiHopfAlgebra& h, std::uint32_t legs);

SparseTensor algebra_product(const QuasiHopfAlgebra& h, const SparseTensor& a, const SparseTensor& b,
                             ProductKernel kernel = ProductKernel::Auto);

/// Two-sided inverse in H^{⊗k}; throws SingularMatrix.
SparseTensor algebra_inverse(const QuasiHopfAlgebra& h, const SparseTensor& a);

/// m^{(k)}(t), folding legs left to right.
SparseTensor multiply_all_legs(const QuasiHopfAlgebra& h, const SparseTensor& t);

SparseTensor apply_coproduct_leg(const QuasiHopfAlgebra& h, const SparseTensor& t, std::uint32_t leg);
SparseTensor apply_counit_leg(const QuasiHopfAlgebra& h, const SparseTensor& t, std::uint32_t leg);
SparseTensor apply_antipode_leg(const QuasiHopfAlgebra& h, const SparseTensor& t, std::uint32_t leg,
                                bool inverse = false);

/// Δ^{(n)}(a), right-nested: Δ^{(n+1)} = (id^{⊗ n-1} ⊗ Δ)Δ^{(n)}. n = 0 gives the 0-leg ε(a).
SparseTensor delta_n(const QuasiHopfAlgebra& h, const SparseTensor& a, std::uint32_t n);

/// Left multiplication by b_i as a d x d matrix (column j = b_i b_j).
Matrix left_mult_matrix(const QuasiHopfAlgebra& h, const std::vector<CycNumber>& x);
Matrix right_mult_matrix(const QuasiHopfAlgebra& h, const std::vector<CycNumber>& x);

/// Product of two 1-leg elements given as dense vectors.
std::vector<CycNumber> multiply(const QuasiHopfAlgebra& h, const std::vector<CycNumber>& a,
                                const std::vector<CycNumber>& b);

}  // namespace qhopf
