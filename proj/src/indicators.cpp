#include "qhopf/indicators.hpp"

#include <cmath>

#include "qhopf/constructions.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/qha.hpp"
#include "qhopf/tensor_ops.hpp"

namespace qhopf {

namespace {

CycNumber one() { return CycNumber(1L); }

/// Δ^{(k)} applied to one leg (right-nested); k = 0 applies ε.
SparseTensor coproduct_power_on_leg(const QuasiHopfAlgebra& h, SparseTensor t, std::uint32_t leg, std::uint32_t k) {
  if (k == 0) return apply_counit_leg(h, t, leg);
  for (std::uint32_t i = 1; i < k; ++i) t = apply_coproduct_leg(h, t, leg + i - 1);
  return t;
}

const SparseTensor& pick_q(const HausserNill& hn, MuVariant v) {
  return (v == MuVariant::LL || v == MuVariant::LR) ? hn.q_L : hn.q_R;
}

const SparseTensor& pick_p(const HausserNill& hn, MuVariant v) {
  return (v == MuVariant::RR || v == MuVariant::LR) ? hn.p_R : hn.p_L;
}

SparseTensor beta_alpha_inverse(const QuasiHopfAlgebra& h) {
  try {
    return algebra_inverse(h, algebra_product(h, h.beta, h.alpha));
  } catch (const SingularMatrix&) {
    throw BetaAlphaSingular("beta alpha is not invertible");
  }
}

SparseTensor mu_n_tensor(const QuasiHopfAlgebra& h, std::uint32_t n, MuVariant variant) {
  const SparseTensor lambda = normalized_integral(h);
  const SparseTensor D = delta_n(h, lambda, n);
  const SparseTensor Phi = phi_n(h, n);
  SparseTensor mu;
  if (variant == MuVariant::Simplified) {
    const SparseTensor ba_inv = beta_alpha_inverse(h);
    mu = algebra_product(h, multiply_all_legs(h, algebra_product(h, D, Phi)), ba_inv);
  } else {
    const HausserNill hn = hausser_nill_elements(h);
    const SparseTensor A = coproduct_power_on_leg(h, pick_q(hn, variant), 1, n - 1);
    const SparseTensor B = coproduct_power_on_leg(h, pick_p(hn, variant), 0, n - 1);
    mu = multiply_all_legs(h, algebra_product(h, algebra_product(h, algebra_product(h, A, D), Phi), B));
  }
  if (!is_central(h, mu)) throw NotCentral(std::string("mu_") + std::to_string(n) + " (" + to_string(variant) + ") is not central");
  return mu;
}

// Representation route: everything is evaluated in one simple block at a time.
class BlockEvaluator {
 public:
  BlockEvaluator(const QuasiHopfAlgebra& h, std::uint32_t block, std::uint32_t n) : h_(h) {
    const Representation rho = simple_representation(h, block);
    v_ = rho.dim_v;
    if (std::pow(static_cast<double>(v_), 2.0 * n) > static_cast<double>(entry_budget())) {
      throw BudgetExceeded("representation route for n = " + std::to_string(n) + " exceeds the entry budget");
    }
    powers_.push_back(tensor_power_action(h, rho, 0));
    powers_.push_back(rho);
    for (std::uint32_t k = 2; k <= n; ++k) {
      Representation next{&h, powers_.back().dim_v * v_, {}};
      for (std::uint32_t j = 0; j < h.dim; ++j) next.action.push_back(image(h.coproduct[j], {1, k - 1}));
      powers_.push_back(std::move(next));
    }
  }

  std::uint32_t dim() const { return v_; }

  /// Image of a tensor whose leg l is sent through ρ^{⊗ k_l} (i.e. Δ^{(k_l)} then ρ^{⊗ k_l}).
  /// Every leg but the widest is expanded entry by entry; the widest one is a single
  /// linear combination of its basis images per choice of the other entries.
  Matrix image(const SparseTensor& t, const std::vector<std::uint32_t>& k) const {
    const std::size_t legs = k.size();
    std::vector<std::size_t> size(legs);
    std::size_t total = 1, wide = 0;
    for (std::size_t l = 0; l < legs; ++l) {
      size[l] = powers_[k[l]].dim_v;
      total *= size[l];
      if (size[l] > size[wide]) wide = l;
    }
    // combo = row and column index of every narrow leg, leg-major
    std::size_t combos = 1;
    for (std::size_t l = 0; l < legs; ++l) {
      if (l != wide) combos *= size[l] * size[l];
    }
    std::vector<std::vector<CycNumber>> weights(combos);
    for (const auto& [f, c] : t.entries()) {
      const std::uint32_t y = t.digit(f, static_cast<std::uint32_t>(wide));
      for (std::size_t combo = 0; combo < combos; ++combo) {
        CycNumber w = c;
        std::size_t rest = combo;
        for (std::size_t l = legs; l-- > 0;) {
          if (l == wide) continue;
          const std::size_t s = size[l];
          const std::size_t q = rest % s, p = (rest / s) % s;
          rest /= s * s;
          const CycNumber& entry = powers_[k[l]].action[t.digit(f, static_cast<std::uint32_t>(l))](p, q);
          if (entry.is_zero()) {
            w = CycNumber();
            break;
          }
          w *= entry;
        }
        if (w.is_zero()) continue;
        auto& acc = weights[combo];
        if (acc.empty()) acc.resize(h_.dim);
        acc[y] += w;
      }
    }
    Matrix out(total, total);
    const auto& big = powers_[k[wide]];
    const std::size_t sw = size[wide];
    for (std::size_t combo = 0; combo < combos; ++combo) {
      if (weights[combo].empty()) continue;
      Matrix m(sw, sw);
      for (std::uint32_t y = 0; y < h_.dim; ++y) {
        if (!weights[combo][y].is_zero()) m.add_scaled(weights[combo][y], big.action[y]);
      }
      // row/column offsets of the narrow legs; the wide leg contributes stride * index
      std::size_t row0 = 0, col0 = 0, stride = 1, rest = combo;
      std::vector<std::size_t> p(legs), q(legs);
      for (std::size_t l = legs; l-- > 0;) {
        if (l == wide) continue;
        q[l] = rest % size[l];
        p[l] = (rest / size[l]) % size[l];
        rest /= size[l] * size[l];
      }
      std::size_t scale = 1;
      for (std::size_t l = legs; l-- > 0;) {
        if (l == wide) {
          stride = scale;
        } else {
          row0 += p[l] * scale;
          col0 += q[l] * scale;
        }
        scale *= size[l];
      }
      for (std::size_t a = 0; a < sw; ++a) {
        for (std::size_t b = 0; b < sw; ++b) {
          if (!m(a, b).is_zero()) out(row0 + a * stride, col0 + b * stride) += m(a, b);
        }
      }
    }
    return out;
  }

  Matrix phi_image(std::uint32_t n) const {
    if (n == 1) return Matrix::identity(v_);
    Matrix cur = Matrix::identity(v_ * v_);
    for (std::uint32_t k = 2; k < n; ++k) {
      cur = kron(Matrix::identity(v_), cur) * image(h_.associator, {1, k - 1, 1});
    }
    return cur;
  }

  Matrix fold(const Matrix& m, std::uint32_t n) const {
    if (n == 1) return m;
    const std::uint64_t inner = ipow(v_, n - 1);
    Matrix r(v_, v_);
    for (std::uint32_t a = 0; a < v_; ++a) {
      for (std::uint32_t b = 0; b < v_; ++b) {
        CycNumber s;
        for (std::uint64_t c = 0; c < inner; ++c) s += m(a * inner + c, c * v_ + b);
        r(a, b) = s;
      }
    }
    return r;
  }

  Matrix one_leg(const SparseTensor& x) const { return image(x, {1}); }

  static std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
  }

 private:
  const QuasiHopfAlgebra& h_;
  std::uint32_t v_ = 0;
  std::vector<Representation> powers_;
};

SparseTensor mu_n_representation(const QuasiHopfAlgebra& h, std::uint32_t n, MuVariant variant) {
  const auto bb = ensure_block_basis(h);
  const SparseTensor lambda = normalized_integral(h);
  std::optional<HausserNill> hn;
  if (variant != MuVariant::Simplified) hn = hausser_nill_elements(h);
  std::vector<CycNumber> mu(h.dim);
  for (std::uint32_t i = 0; i < bb->block_count(); ++i) {
    const BlockEvaluator ev(h, i, n);
    const Matrix D = ev.image(lambda, {n});
    const Matrix Phi = ev.phi_image(n);
    Matrix r;
    if (variant == MuVariant::Simplified) {
      const Matrix ba = ev.one_leg(algebra_product(h, h.beta, h.alpha));
      Matrix ba_inv;
      try {
        ba_inv = inverse(ba);
      } catch (const SingularMatrix&) {
        throw BetaAlphaSingular("beta alpha is not invertible");
      }
      r = ev.fold(D * Phi, n) * ba_inv;
    } else {
      const Matrix A = ev.image(pick_q(*hn, variant), {1, n - 1});
      const Matrix B = ev.image(pick_p(*hn, variant), {n - 1, 1});
      r = ev.fold(A * D * Phi * B, n);
    }
    if (!r.is_scalar()) {
      throw NotCentral(std::string("mu_") + std::to_string(n) + " (" + to_string(variant) + ") is not scalar on a simple block");
    }
    const CycNumber s = r(0, 0);
    if (s.is_zero()) continue;
    const auto e = bb->central_idempotent(i);
    for (std::uint32_t j = 0; j < h.dim; ++j) {
      if (!e[j].is_zero()) mu[j].add_product(s, e[j]);
    }
  }
  return SparseTensor::from_vector(mu);
}

bool is_sign_cocycle(const Cocycle3& w) {
  if (w.group.order != 2) return false;
  const std::uint32_t u = w.group.identity == 0 ? 1 : 0;
  for (std::uint32_t a = 0; a < 2; ++a) {
    for (std::uint32_t b = 0; b < 2; ++b) {
      for (std::uint32_t c = 0; c < 2; ++c) {
        const bool all_u = a == u && b == u && c == u;
        if (w(a, b, c) != CycNumber(all_u ? -1L : 1L)) return false;
      }
    }
  }
  return true;
}

/// n(n-3)/2 mod 2
bool odd_twist_exponent(std::uint32_t n) {
  const long e = static_cast<long>(n) * (static_cast<long>(n) - 3) / 2;
  return ((e % 2) + 2) % 2 == 1;
}

}  // namespace

const char* to_string(MuVariant v) {
  switch (v) {
    case MuVariant::RL: return "RL";
    case MuVariant::RR: return "RR";
    case MuVariant::LL: return "LL";
    case MuVariant::LR: return "LR";
    case MuVariant::Simplified: return "simplified";
  }
  return "?";
}

const char* to_string(IndicatorEngine e) {
  switch (e) {
    case IndicatorEngine::Auto: return "auto";
    case IndicatorEngine::Tensor: return "tensor";
    case IndicatorEngine::Representation: return "representation";
  }
  return "?";
}

const char* to_string(CellSource s) {
  switch (s) {
    case CellSource::Generic: return "generic";
    case CellSource::ClosedForm: return "closed-form";
    case CellSource::CrossChecked: return "cross-checked";
    case CellSource::ClosedFormOnly: return "closed-form only";
    case CellSource::Hole: return "hole";
  }
  return "?";
}

SparseTensor phi_n(const QuasiHopfAlgebra& h, std::uint32_t n) {
  if (n == 0) throw DimensionMismatch("phi_n needs n >= 1");
  if (n <= 2) return unit_tensor(h, n);
  SparseTensor cur = unit_tensor(h, 2);
  for (std::uint32_t k = 2; k < n; ++k) {
    const SparseTensor mid = coproduct_power_on_leg(h, h.associator, 1, k - 1);
    cur = algebra_product(h, outer(h.unit, cur), mid);
  }
  return cur;
}

SparseTensor sweedler_power(const QuasiHopfAlgebra& h, const SparseTensor& a, std::uint32_t n) {
  if (n == 0) throw DimensionMismatch("sweedler_power needs n >= 1");
  return multiply_all_legs(h, delta_n(h, a, n));
}

SparseTensor mu_n(const QuasiHopfAlgebra& h, std::uint32_t n, MuVariant variant, IndicatorEngine engine) {
  if (n == 0) throw DimensionMismatch("mu_n needs n >= 1");
  if (engine == IndicatorEngine::Auto) {
    engine = h.blocks ? IndicatorEngine::Representation : IndicatorEngine::Tensor;
  }
  return engine == IndicatorEngine::Representation ? mu_n_representation(h, n, variant) : mu_n_tensor(h, n, variant);
}

CycNumber nu_n(const QuasiHopfAlgebra& h, const CharacterVector& chi, std::uint32_t n, IndicatorEngine engine) {
  return evaluate_character(chi, mu_n(h, n, MuVariant::RL, engine));
}

CycNumber nu_n_central_twist(const QuasiHopfAlgebra& base, const SparseTensor& u, const CharacterVector& chi,
                             std::uint32_t n) {
  const CycNumber dim = evaluate_character(chi, base.unit);
  const CycNumber chi_u = evaluate_character(chi, u);
  if (dim.is_zero() || (chi_u != dim && chi_u != -dim)) throw NotScalarAction("u does not act as a scalar");
  const CycNumber nu = evaluate_character(chi, sweedler_power(base, normalized_integral(base), n));
  return odd_twist_exponent(n) ? nu * chi_u / dim : nu;
}

CycNumber nu_n_dual_group(const Cocycle3& w, std::uint32_t x, std::uint32_t n) {
  const FiniteGroup& g = w.group;
  if (g.pow(x, n) != g.identity) return CycNumber();
  CycNumber v = one();
  for (std::uint32_t r = 1; r < n; ++r) v *= w(x, g.pow(x, r), x);
  return v;
}

SparseTensor mu_n_twisted_double(const Cocycle3& w, std::uint32_t n, DoubleForm form) {
  if (n < 2) throw DimensionMismatch("the twisted double closed form needs n >= 2");
  const FiniteGroup& G = w.group;
  const std::uint32_t m = G.order;
  const DoubleCoefficients k{&w};
  const CycNumber inv_order(Rational(1, m));
  auto conj_pow = [&](std::uint32_t a, std::uint32_t x, long i) { return G.conj_by(a, G.pow(x, i)); };
  auto run = [&](std::uint32_t a, std::uint32_t x, long from, long to) {
    std::uint32_t p = G.identity;
    for (long i = from; i <= to; ++i) p = G.mul(p, conj_pow(a, x, i));
    return p;
  };
  std::vector<CycNumber> mu(static_cast<std::size_t>(m) * m);
  for (std::uint32_t x = 0; x < m; ++x) {
    const std::uint32_t xi = G.inv(x);
    for (std::uint32_t a = 0; a < m; ++a) {
      if (G.pow(G.mul(a, xi), n) != G.pow(xi, n)) continue;
      CycNumber c = inv_order;
      for (long i = 1; i <= static_cast<long>(n) - 2; ++i) {
        if (form == DoubleForm::Primary) {
          const std::uint32_t ai = conj_pow(a, x, i);
          const std::uint32_t rest = run(a, x, i + 1, n - 1);
          c *= k.gamma(x, ai, rest) * k.theta(a, G.pow(x, i), x) / w(ai, rest, conj_pow(a, x, n));
        } else {
          const std::uint32_t ai = conj_pow(a, x, i - 1);
          const std::uint32_t rest = run(a, x, i, n - 2);
          c *= k.gamma(x, ai, rest) * k.theta(a, G.pow(x, i), x) / w(ai, rest, conj_pow(a, x, n - 1));
        }
      }
      const std::uint32_t last = conj_pow(a, x, n - 1);
      const CycNumber closing = form == DoubleForm::Primary ? k.gamma(x, a, G.inv(a)) : k.gamma(x, G.inv(last), last);
      c *= closing * k.theta(a, G.pow(x, n - 1), x) / w(a, G.inv(a), a);
      mu[a * m + G.pow(x, n)] += c;
    }
  }
  return SparseTensor::from_vector(mu);
}

CycNumber nu_n_twisted_double(const Cocycle3& w, const CharacterVector& chi, std::uint32_t n, DoubleForm form) {
  return evaluate_character(chi, mu_n_twisted_double(w, n, form));
}

std::optional<SparseTensor> closed_form_mu_n(const QuasiHopfAlgebra& h, std::uint32_t n) {
  const ConstructionTag& tag = h.construction;
  if (tag.gauged || n == 0) return std::nullopt;
  switch (tag.kind) {
    case ConstructionKind::GroupAlgebra:
    case ConstructionKind::Kac:
      return sweedler_power(h, normalized_integral(h), n);
    case ConstructionKind::DualGroup: {
      std::vector<CycNumber> mu(h.dim);
      for (std::uint32_t x = 0; x < h.dim; ++x) mu[x] = nu_n_dual_group(*tag.cocycle, x, n);
      return SparseTensor::from_vector(mu);
    }
    case ConstructionKind::CentralTwist: {
      if (!tag.base || tag.u.legs() != 1 || !is_sign_cocycle(*tag.cocycle)) return std::nullopt;
      SparseTensor mu = sweedler_power(*tag.base, normalized_integral(*tag.base), n);
      if (odd_twist_exponent(n)) mu = algebra_product(h, mu, tag.u);
      return mu;
    }
    case ConstructionKind::TwistedDouble:
      if (n == 1) return normalized_integral(h);
      return mu_n_twisted_double(*tag.cocycle, n, DoubleForm::Primary);
    case ConstructionKind::None:
      break;
  }
  return std::nullopt;
}

bool IndicatorTable::has_holes() const {
  for (const auto& row : cells) {
    for (const auto& c : row) {
      if (!c.value) return true;
    }
  }
  return false;
}

IndicatorTable indicator_table(const QuasiHopfAlgebra& h, const TableOptions& options) {
  if (options.n_min < 1 || options.n_max < options.n_min) throw DimensionMismatch("bad indicator range");
  IndicatorTable table;
  table.algebra_name = h.name;
  table.n_min = options.n_min;
  table.n_max = options.n_max;
  table.rows = options.characters.empty() ? simple_characters(h) : options.characters;
  table.cells.assign(table.rows.size(), std::vector<IndicatorCell>(options.n_max - options.n_min + 1));
  for (std::uint32_t n = options.n_min; n <= options.n_max; ++n) {
    std::optional<SparseTensor> closed, generic;
    std::string note;
    if (options.use_closed_forms) {
      try {
        closed = closed_form_mu_n(h, n);
      } catch (const BudgetExceeded& e) {
        note = e.what();
      }
    }
    bool generic_failed = false;
    if (!closed || n <= options.cross_check_n_max) {
      try {
        generic = mu_n(h, n, MuVariant::RL, options.engine);
      } catch (const BudgetExceeded& e) {
        generic_failed = true;
        note = e.what();
      }
    }
    if (closed && generic && *closed != *generic) {
      throw IdentityViolation("closed form and generic engine disagree for " + h.name + " at n = " + std::to_string(n));
    }
    const SparseTensor* mu = closed ? &*closed : (generic ? &*generic : nullptr);
    CellSource source = CellSource::Hole;
    if (closed && generic) {
      source = CellSource::CrossChecked;
    } else if (closed) {
      source = generic_failed ? CellSource::ClosedFormOnly : CellSource::ClosedForm;
    } else if (generic) {
      source = CellSource::Generic;
    }
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      IndicatorCell& cell = table.cells[r][n - options.n_min];
      cell.source = source;
      cell.note = note;
      if (!mu) continue;
      cell.value = evaluate_character(table.rows[r].character, *mu);
      if (!galois_fixed_in_subfield(*cell.value, n)) {
        throw IdentityViolation("indicator " + to_string(*cell.value) + " is not in Q(zeta_" + std::to_string(n) + ")");
      }
    }
  }
  return table;
}

}  // namespace qhopf
