#pragma once

// Modules, characters, Wedderburn decomposition and invariants of tensor powers.

#include <cstdint>
#include <memory>
#include <vector>

#include "qhopf/algebra.hpp"

namespace qhopf {

struct Representation {
  const QuasiHopfAlgebra* algebra = nullptr;
  std::uint32_t dim_v = 0;
  /// One dim_v x dim_v matrix per algebra basis element.
  std::vector<Matrix> action;

  Matrix act(const std::vector<CycNumber>& x) const;
};

using CharacterVector = std::vector<CycNumber>;

struct SimpleCharacter {
  CharacterVector character;
  std::uint32_t dim = 0;
};

CharacterVector character(const Representation& rho);
/// ρ(b_i)ρ(b_j) = Σ m_ij^k ρ(b_k) and ρ(1) = I.
bool is_valid_representation(const Representation& rho);
Representation regular_representation(const QuasiHopfAlgebra& h);

/// Basis of the center Z(H).
std::vector<std::vector<CycNumber>> center_basis(const QuasiHopfAlgebra& h);

/// Exact Wedderburn data, seeded numerically and verified exactly.
/// Throws SplitFailure or NonIntegerDimension.
std::shared_ptr<const BlockBasis> compute_block_basis(const QuasiHopfAlgebra& h);
/// h.blocks if present, otherwise computed.
std::shared_ptr<const BlockBasis> ensure_block_basis(const QuasiHopfAlgebra& h);
/// Attaches a block basis when one can be computed; leaves h.blocks empty otherwise.
void attach_block_basis(QuasiHopfAlgebra& h);

/// Simple characters in the block order (dimension, then character values).
std::vector<SimpleCharacter> simple_characters(const QuasiHopfAlgebra& h);
/// Irreducible representation of block i.
Representation simple_representation(const QuasiHopfAlgebra& h, std::uint32_t block);

/// The action on V^{⊗n} through Δ^{(n)}; n = 0 gives the trivial module via ε.
Representation tensor_power_action(const QuasiHopfAlgebra& h, const Representation& rho, std::uint32_t n);

/// Column basis of ρ(Λ)V; throws ProjectorNotIdempotent if ρ(Λ)^2 ≠ ρ(Λ).
Matrix invariant_subspace(const QuasiHopfAlgebra& h, const Representation& rho, const SparseTensor& integral);

/// Trace of the r-th power of the cyclic rotation u1⊗…⊗un ↦ u2⊗…⊗un⊗u1 on the
/// invariants of V^{⊗n}. Ordinary Hopf algebras only (throws NotOrdinaryHopf).
CycNumber rotation_indicator(const QuasiHopfAlgebra& h, const Representation& rho, std::uint32_t n, std::uint32_t r);

/// χ∘S, the character of the left dual module.
CharacterVector dual_character(const QuasiHopfAlgebra& h, const CharacterVector& chi);

/// χ(x) for x given in basis coordinates.
CycNumber evaluate_character(const CharacterVector& chi, const SparseTensor& x);

}  // namespace qhopf
