#pragma once

// Axiom validation, Hausser–Nill elements, gauge twisting, integrals and centrality.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhopf/algebra.hpp"

namespace qhopf {

struct AxiomCheck {
  std::string name;
  bool passed = true;
  /// Basis index (or description) of the first failure.
  std::string witness;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;

  bool passed() const;
  /// All axioms other than the pentagon hold.
  bool passed_except_pentagon() const;
  const AxiomCheck* find(const std::string& name) const;
  std::string to_text() const;
};

namespace axiom {
inline constexpr const char* kAssociativity = "multiplication is associative";
inline constexpr const char* kUnit = "unit law";
inline constexpr const char* kCounitAlgebraMap = "counit is an algebra map";
inline constexpr const char* kCoproductAlgebraMap = "coproduct is an algebra map";
inline constexpr const char* kCounitAxiom = "counit axiom";
inline constexpr const char* kQuasiCoassociativity = "quasi-coassociativity";
inline constexpr const char* kAssociatorInvertible = "associator invertible";
inline constexpr const char* kPentagon = "pentagon";
inline constexpr const char* kAssociatorCounit = "associator counit normalization";
inline constexpr const char* kAntipodeAntiMultiplicative = "antipode is an anti-algebra map";
inline constexpr const char* kAntipodeAlpha = "S(h1) alpha h2 = eps(h) alpha";
inline constexpr const char* kAntipodeBeta = "h1 beta S(h2) = eps(h) beta";
inline constexpr const char* kPhiBetaAlpha = "phi1 beta S(phi2) alpha phi3 = 1";
inline constexpr const char* kPhiInvAlphaBeta = "S(phi^-1_1) alpha phi^-1_2 beta S(phi^-1_3) = 1";
}  // namespace axiom

ValidationReport validate(const QuasiHopfAlgebra& h);

struct HausserNill {
  SparseTensor q_R, p_R, q_L, p_L;
};

/// Builds q_R, p_R, q_L, p_L and checks the two normalization identities
/// Δ(q_R1) p_R (1⊗S(q_R2)) = 1⊗1 = (1⊗S^{-1}(p_R2)) q_R Δ(p_R1) and the L analogue.
/// Throws IdentityViolation naming the failing identity.
HausserNill hausser_nill_elements(const QuasiHopfAlgebra& h);

/// Exhaustive check over basis elements a of the four commutation identities
/// (a⊗1)q_R = (1⊗S^{-1}(a2)) q_R Δ(a1), p_R(a⊗1) = Δ(a1) p_R (1⊗S(a2)),
/// (1⊗a)q_L = (S(a1)⊗1) q_L Δ(a2), p_L(1⊗a) = Δ(a2) p_L (S^{-1}(a1)⊗1).
std::vector<AxiomCheck> check_hausser_nill_identities(const QuasiHopfAlgebra& h, const HausserNill& hn);

/// θθ̄ = θ̄θ = id for the regular bimodule V = H.
bool verify_theta_isomorphism(const QuasiHopfAlgebra& h);

struct GaugeTransform {
  SparseTensor F;
  SparseTensor F_inverse;
};

/// Invertibility and counit normalization; throws ValidationFailure.
void validate_gauge(const QuasiHopfAlgebra& h, const GaugeTransform& g);

/// H^F. With check = true, validates the result and throws ValidationFailure on failure.
QuasiHopfAlgebra gauge_twist(const QuasiHopfAlgebra& h, const GaugeTransform& g, bool check = true);

/// Deterministic in (h, seed); throws GenerationFailure after 32 singular draws.
GaugeTransform random_gauge_transform(const QuasiHopfAlgebra& h, std::uint64_t seed);

/// The unique Λ with hΛ = ε(h)Λ = Λh and ε(Λ) = 1.
SparseTensor normalized_integral(const QuasiHopfAlgebra& h);

bool is_central(const QuasiHopfAlgebra& h, const SparseTensor& z);

/// Central group-likes g ≠ 1 with g^order = 1.
std::vector<SparseTensor> find_central_grouplikes(const QuasiHopfAlgebra& h, std::uint32_t order);

}  // namespace qhopf
