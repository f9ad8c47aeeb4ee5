#pragma once

// Built-in algebras: C[G], H(G,ω), central twists H_(G,ω,j) and H_u, D^ω(G) and the Kac algebra K.

#include <memory>
#include <vector>

#include "qhopf/algebra.hpp"
#include "qhopf/group.hpp"

namespace qhopf {

/// Basis = group elements, Δ(g) = g⊗g, S(g) = g^{-1}, trivial associator.
QuasiHopfAlgebra group_algebra(const FiniteGroup& g);

/// C[G]^* on the dual basis e(g) with φ = Σ ω(a,b,c) e(a)⊗e(b)⊗e(c), α = 1,
/// β = Σ ω(a,a^{-1},a)^{-1} e(a).
QuasiHopfAlgebra dual_group_algebra(const Cocycle3& w);

/// j[y][x] = j(y)(x), a character table indexed by the cocycle's group.
using CharacterAssignment = std::vector<std::vector<CycNumber>>;

/// e_x = (1/|G|) Σ_y j(y)(x)^{-1} y, with elements[y] the image of y in H.
std::vector<SparseTensor> central_idempotents(const std::vector<SparseTensor>& elements, const Cocycle3& w,
                                              const CharacterAssignment& j);

/// H with φ = Σ ω(x,y,z)^{-1} e_x⊗e_y⊗e_z, α = 1, β = Σ ω(x,x^{-1},x) e_x; m, Δ, ε, S unchanged.
/// elements[y] is the central group-like of H representing y ∈ G.
/// Throws NotGrouplike, NotCentral, BadCharacterTable.
QuasiHopfAlgebra central_twist(const QuasiHopfAlgebra& h, const std::vector<SparseTensor>& elements,
                               const Cocycle3& w, const CharacterAssignment& j);

/// Central twist by the subgroup {1, u} with the sign cocycle.
QuasiHopfAlgebra h_u(const QuasiHopfAlgebra& h, const SparseTensor& u);

struct DoubleCoefficients {
  const Cocycle3* w;
  CycNumber theta(std::uint32_t g, std::uint32_t x, std::uint32_t y) const;
  CycNumber gamma(std::uint32_t g, std::uint32_t x, std::uint32_t y) const;
};

/// D^ω(G) on basis e(g)⊗x, index g * |G| + x.
QuasiHopfAlgebra twisted_double(const Cocycle3& w);

/// The 8-dimensional Kac algebra on {1, x, y, xy, z, xz, yz, xyz}. Throws ValidationFailure
/// if its own axiom check fails.
QuasiHopfAlgebra kac_algebra();

}  // namespace qhopf
