#pragma once

// Finite groups by multiplication table, and cochains with values in roots of unity.

#include <cstdint>
#include <string>
#include <vector>

#include "qhopf/cyclotomic.hpp"

namespace qhopf {

struct FiniteGroup {
  std::string name;
  std::uint32_t order = 1;
  std::vector<std::uint32_t> mult_table;  // mult_table[a * order + b] = ab
  std::vector<std::uint32_t> inverse;
  std::uint32_t identity = 0;
  std::vector<std::string> labels;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mult_table[a * order + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inverse[a]; }
  std::uint32_t pow(std::uint32_t a, long n) const;
  std::uint32_t element_order(std::uint32_t a) const;
  /// x^{-1} a x
  std::uint32_t conj_by(std::uint32_t a, std::uint32_t x) const { return mul(mul(inv(x), a), x); }
  bool is_central(std::uint32_t a) const;
  bool is_abelian() const;
};

enum class GroupKind { Cyclic, Dihedral, Quaternion8, Klein4 };

/// Checks closure, associativity, identity and inverses; throws ValidationFailure.
void validate_group(const FiniteGroup& g);

/// Builds a group from its table, deriving inverses and the identity.
FiniteGroup group_from_table(std::string name, std::uint32_t order, std::vector<std::uint32_t> table,
                             std::vector<std::string> labels = {});

FiniteGroup cyclic_group(std::uint32_t n);
/// Dihedral group of order 2n; element r^a s^b has index a + n b.
FiniteGroup dihedral_group(std::uint32_t two_n);
/// Q8 with index order 1, -1, i, -i, j, -j, k, -k.
FiniteGroup quaternion_group();
FiniteGroup klein_four_group();
FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup build_group(GroupKind kind, std::uint32_t param = 0);
/// Parses "Z4", "D8", "Q8", "K4", "Z2xZ2".
FiniteGroup parse_group(const std::string& text);

struct Cochain2 {
  const FiniteGroup* group = nullptr;
  std::vector<CycNumber> values;  // values[x * n + y]
  const CycNumber& operator()(std::uint32_t x, std::uint32_t y) const { return values[x * group->order + y]; }
};

struct Cocycle3 {
  FiniteGroup group;
  std::vector<CycNumber> values;  // values[(a * n + b) * n + c]

  const CycNumber& operator()(std::uint32_t a, std::uint32_t b, std::uint32_t c) const {
    return values[(static_cast<std::size_t>(a) * group.order + b) * group.order + c];
  }
  CycNumber& at(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return values[(static_cast<std::size_t>(a) * group.order + b) * group.order + c];
  }
};

Cocycle3 trivial_cocycle(const FiniteGroup& g);

/// Normalization, the cocycle condition and root-of-unity values; throws ValidationFailure.
void validate_cocycle(const Cocycle3& w);

/// δb(x,y,z) = b(y,z) b(x,yz) / (b(xy,z) b(x,y)).
Cocycle3 coboundary(const FiniteGroup& g, const Cochain2& b);

/// (ω_x)^t on Z_N: ω(x^l, x^m, x^n) = ζ_{N^2}^{t l (m + n - (m+n mod N))}.
Cocycle3 cyclic_cocycle(std::uint32_t N, long t);

/// Pointwise product.
Cocycle3 cocycle_product(const Cocycle3& a, const Cocycle3& b);

/// The Z_2 cocycle that is -1 at (u,u,u) and 1 elsewhere.
Cocycle3 sign_cocycle_z2();

}  // namespace qhopf
