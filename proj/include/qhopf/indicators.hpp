#pragma once

// Higher Frobenius–Schur indicators: φ_n, Sweedler powers, the central element μ_n(H),
// ν_n(V) = χ(μ_n(H)), and closed forms for the built-in families.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhopf/algebra.hpp"
#include "qhopf/reptheory.hpp"

namespace qhopf {

/// Which Hausser–Nill pair enters μ_n: first letter picks q_R / q_L, second p_R / p_L.
/// RL is the defining form; Simplified is m(Δ^{(n)}(Λ)φ_n)(βα)^{-1}.
enum class MuVariant { RL, RR, LL, LR, Simplified };

/// Tensor: literal products in H^{⊗n}. Representation: the same products pushed through
/// each simple block, ρ^{⊗n}, then folded with the multiplication. Auto prefers the latter
/// whenever a block basis is available.
enum class IndicatorEngine { Auto, Tensor, Representation };

const char* to_string(MuVariant v);
const char* to_string(IndicatorEngine e);

/// φ_1 = 1, φ_2 = 1⊗1, φ_{n+1} = (1⊗φ_n)(φ1 ⊗ Δ^{(n-1)}(φ2) ⊗ φ3).
SparseTensor phi_n(const QuasiHopfAlgebra& h, std::uint32_t n);

/// a^{[n]} = m(Δ^{(n)}(a)).
SparseTensor sweedler_power(const QuasiHopfAlgebra& h, const SparseTensor& a, std::uint32_t n);

/// The central element μ_n(H). Throws NotCentral if the result is not central,
/// BetaAlphaSingular for Simplified when βα is not invertible.
SparseTensor mu_n(const QuasiHopfAlgebra& h, std::uint32_t n, MuVariant variant = MuVariant::RL,
                  IndicatorEngine engine = IndicatorEngine::Auto);

CycNumber nu_n(const QuasiHopfAlgebra& h, const CharacterVector& chi, std::uint32_t n,
               IndicatorEngine engine = IndicatorEngine::Auto);

/// ν_n of the twisted module over H_u from data of the Hopf algebra H:
/// ν_n(V) χ(u^{(n-3)n/2}) / χ(1). Throws NotScalarAction unless χ(u) = ±χ(1).
CycNumber nu_n_central_twist(const QuasiHopfAlgebra& base, const SparseTensor& u, const CharacterVector& chi,
                             std::uint32_t n);

/// ν_n(V_x) = δ_{x^n,1} Π_{r=1}^{n-1} ω(x, x^r, x) for the one-dimensional simples of H(G,ω).
CycNumber nu_n_dual_group(const Cocycle3& w, std::uint32_t x, std::uint32_t n);

enum class DoubleForm { Primary, Alternative };

/// μ_n(D^ω(G)) for n ≥ 2 from the closed-form sum over (x, a) with (a x^{-1})^n = x^{-n},
/// in the basis of twisted_double(w).
SparseTensor mu_n_twisted_double(const Cocycle3& w, std::uint32_t n, DoubleForm form = DoubleForm::Primary);
CycNumber nu_n_twisted_double(const Cocycle3& w, const CharacterVector& chi, std::uint32_t n,
                              DoubleForm form = DoubleForm::Primary);

/// μ_n from the construction tag when a closed form applies (ungauged group algebras and
/// other ordinary Hopf built-ins, H(G,ω), D^ω(G), H_u).
std::optional<SparseTensor> closed_form_mu_n(const QuasiHopfAlgebra& h, std::uint32_t n);

enum class CellSource { Generic, ClosedForm, CrossChecked, ClosedFormOnly, Hole };
const char* to_string(CellSource s);

struct IndicatorCell {
  std::optional<CycNumber> value;
  CellSource source = CellSource::Hole;
  std::string note;
};

struct IndicatorTable {
  std::string algebra_name;
  std::uint32_t n_min = 1;
  std::uint32_t n_max = 1;
  std::vector<SimpleCharacter> rows;
  /// cells[row][n - n_min]
  std::vector<std::vector<IndicatorCell>> cells;

  bool has_holes() const;
  const IndicatorCell& at(std::size_t row, std::uint32_t n) const { return cells[row][n - n_min]; }
};

struct TableOptions {
  std::uint32_t n_min = 1;
  std::uint32_t n_max = 8;
  /// Rows to evaluate; simple characters when empty.
  std::vector<SimpleCharacter> characters;
  bool use_closed_forms = true;
  /// Closed-form cells with n up to this are recomputed by the generic engine and compared.
  std::uint32_t cross_check_n_max = 6;
  IndicatorEngine engine = IndicatorEngine::Auto;
};

/// Throws IdentityViolation if a closed form disagrees with the generic engine or a value
/// fails to lie in Q(ζ_n). Budget failures become holes.
IndicatorTable indicator_table(const QuasiHopfAlgebra& h, const TableOptions& options);

}  // namespace qhopf
