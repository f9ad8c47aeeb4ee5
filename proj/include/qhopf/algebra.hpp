#pragma once

// The QuasiHopfAlgebra data type: structure constants of (H, m, 1, Δ, ε, φ, α, β, S).

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qhopf/group.hpp"
#include "qhopf/linalg.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf {

struct QuasiHopfAlgebra;

enum class ConstructionKind { None, GroupAlgebra, DualGroup, CentralTwist, TwistedDouble, Kac };

/// Records how a built-in algebra was made, so closed-form indicator formulas can be used.
struct ConstructionTag {
  ConstructionKind kind = ConstructionKind::None;
  std::shared_ptr<const FiniteGroup> group;
  std::shared_ptr<const Cocycle3> cocycle;
  /// CentralTwist: the ordinary Hopf algebra being twisted.
  std::shared_ptr<const QuasiHopfAlgebra> base;
  /// CentralTwist: the central group-like u (for H_u).
  SparseTensor u;
  bool gauged = false;
};

/// Wedderburn data of a split semisimple algebra: an explicit isomorphism
/// H ≅ ⊕_i M_{n_i}. Matrix-unit coordinate (i, a, b) sits at offsets[i] + a * n_i + b.
struct BlockBasis {
  std::uint32_t dim = 0;
  std::vector<std::uint32_t> block_dims;
  std::vector<std::uint32_t> offsets;
  /// Coordinates of an element in matrix units = to_blocks * (basis coordinates).
  Matrix to_blocks;
  /// Column u is the matrix unit u expressed in the algebra basis.
  Matrix from_blocks;

  std::size_t block_count() const { return block_dims.size(); }
  /// n_i x n_i matrix of x in block i.
  Matrix block_of(std::uint32_t block, const std::vector<CycNumber>& x) const;
  /// Image of basis element j in block i, from precomputed columns of to_blocks.
  Matrix block_of_basis(std::uint32_t block, std::uint32_t j) const;
  std::vector<CycNumber> central_idempotent(std::uint32_t block) const;
};

struct QuasiHopfAlgebra {
  std::string name;
  std::uint32_t dim = 0;
  std::vector<std::string> basis_labels;
  /// mult[i * dim + j] = b_i b_j
  std::vector<SparseVec> mult;
  SparseTensor unit;
  /// coproduct[i] = Δ(b_i), 2 legs
  std::vector<SparseTensor> coproduct;
  std::vector<CycNumber> counit;
  SparseTensor associator;
  SparseTensor associator_inverse;
  SparseTensor alpha;
  SparseTensor beta;
  /// Column j is S(b_j).
  Matrix antipode;
  Matrix antipode_inverse;

  ConstructionTag construction;
  std::shared_ptr<const BlockBasis> blocks;

  const SparseVec& product(std::uint32_t i, std::uint32_t j) const { return mult[i * dim + j]; }
};

/// Computes S^{-1} and, if absent, φ^{-1}; checks shapes. Throws DimensionMismatch / SingularMatrix.
void finalize(QuasiHopfAlgebra& h);

/// True iff φ = 1⊗1⊗1 and α = β = 1.
bool is_ordinary_hopf(const QuasiHopfAlgebra& h);

/// Structural equality of all structure constants (names and tags ignored).
bool structurally_equal(const QuasiHopfAlgebra& a, const QuasiHopfAlgebra& b);

}  // namespace qhopf
