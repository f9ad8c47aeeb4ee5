#include "qhopf/group.hpp"

#include <regex>

#include "qhopf/errors.hpp"

namespace qhopf {

std::uint32_t FiniteGroup::pow(std::uint32_t a, long n) const {
  std::uint32_t base = n < 0 ? inv(a) : a;
  unsigned long e = static_cast<unsigned long>(n < 0 ? -n : n);
  std::uint32_t r = identity;
  while (e > 0) {
    if (e & 1UL) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::uint32_t FiniteGroup::element_order(std::uint32_t a) const {
  std::uint32_t k = 1;
  std::uint32_t p = a;
  while (p != identity) {
    p = mul(p, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_central(std::uint32_t a) const {
  for (std::uint32_t b = 0; b < order; ++b) {
    if (mul(a, b) != mul(b, a)) return false;
  }
  return true;
}

bool FiniteGroup::is_abelian() const {
  for (std::uint32_t a = 0; a < order; ++a) {
    if (!is_central(a)) return false;
  }
  return true;
}

void validate_group(const FiniteGroup& g) {
  const std::uint32_t n = g.order;
  if (g.mult_table.size() != static_cast<std::size_t>(n) * n) throw ValidationFailure("group table has wrong size");
  for (auto v : g.mult_table) {
    if (v >= n) throw ValidationFailure("group table entry out of range");
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    if (g.mul(g.identity, a) != a || g.mul(a, g.identity) != a) throw ValidationFailure("identity law fails");
    if (g.mul(a, g.inv(a)) != g.identity || g.mul(g.inv(a), a) != g.identity) {
      throw ValidationFailure("inverse law fails");
    }
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) throw ValidationFailure("group table not associative");
      }
    }
  }
}

FiniteGroup group_from_table(std::string name, std::uint32_t order, std::vector<std::uint32_t> table,
                             std::vector<std::string> labels) {
  FiniteGroup g;
  g.name = std::move(name);
  g.order = order;
  g.mult_table = std::move(table);
  if (g.mult_table.size() != static_cast<std::size_t>(order) * order) {
    throw ValidationFailure("group table has wrong size");
  }
  bool found = false;
  for (std::uint32_t e = 0; e < order && !found; ++e) {
    bool ok = true;
    for (std::uint32_t a = 0; a < order && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) {
      g.identity = e;
      found = true;
    }
  }
  if (!found) throw ValidationFailure("group table has no identity");
  g.inverse.assign(order, order);
  for (std::uint32_t a = 0; a < order; ++a) {
    for (std::uint32_t b = 0; b < order; ++b) {
      if (g.mul(a, b) == g.identity) g.inverse[a] = b;
    }
    if (g.inverse[a] == order) throw ValidationFailure("group element without inverse");
  }
  if (labels.empty()) {
    for (std::uint32_t a = 0; a < order; ++a) labels.push_back("g" + std::to_string(a));
  }
  g.labels = std::move(labels);
  validate_group(g);
  return g;
}

FiniteGroup cyclic_group(std::uint32_t n) {
  if (n == 0) throw DimensionMismatch("cyclic group order must be positive");
  std::vector<std::uint32_t> t(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
    labels.push_back(a == 0 ? "1" : (a == 1 ? "x" : "x^" + std::to_string(a)));
  }
  return group_from_table("Z" + std::to_string(n), n, std::move(t), std::move(labels));
}

FiniteGroup dihedral_group(std::uint32_t two_n) {
  if (two_n < 2 || two_n % 2 != 0) throw DimensionMismatch("dihedral group order must be even");
  const std::uint32_t n = two_n / 2;
  std::vector<std::uint32_t> t(static_cast<std::size_t>(two_n) * two_n);
  std::vector<std::string> labels(two_n);
  for (std::uint32_t x = 0; x < two_n; ++x) {
    const std::uint32_t a = x % n;
    const std::uint32_t b = x / n;
    std::string l = a == 0 ? "" : (a == 1 ? "r" : "r^" + std::to_string(a));
    if (b == 1) l += "s";
    labels[x] = l.empty() ? "1" : l;
    for (std::uint32_t y = 0; y < two_n; ++y) {
      const std::uint32_t c = y % n;
      const std::uint32_t d = y / n;
      const std::uint32_t ra = (b == 0 ? a + c : a + n - c) % n;
      t[x * two_n + y] = ra + n * ((b + d) % 2);
    }
  }
  return group_from_table("D" + std::to_string(two_n), two_n, std::move(t), std::move(labels));
}

FiniteGroup quaternion_group() {
  // unit quaternions ±1, ±i, ±j, ±k as (sign, unit) with index 2*unit + (sign<0)
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::uint32_t> t(64);
  for (std::uint32_t x = 0; x < 8; ++x) {
    for (std::uint32_t y = 0; y < 8; ++y) {
      const int ux = static_cast<int>(x / 2), uy = static_cast<int>(y / 2);
      int sign = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * unit_sign[ux][uy];
      t[x * 8 + y] = static_cast<std::uint32_t>(2 * unit_mul[ux][uy] + (sign < 0 ? 1 : 0));
    }
  }
  return group_from_table("Q8", 8, std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

FiniteGroup klein_four_group() {
  FiniteGroup g = product_group(cyclic_group(2), cyclic_group(2));
  g.name = "K4";
  return g;
}

FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b) {
  const std::uint32_t n = a.order * b.order;
  std::vector<std::uint32_t> t(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    labels[x] = "(" + a.labels[x / b.order] + "," + b.labels[x % b.order] + ")";
    for (std::uint32_t y = 0; y < n; ++y) {
      t[x * n + y] = a.mul(x / b.order, y / b.order) * b.order + b.mul(x % b.order, y % b.order);
    }
  }
  return group_from_table(a.name + "x" + b.name, n, std::move(t), std::move(labels));
}

FiniteGroup build_group(GroupKind kind, std::uint32_t param) {
  switch (kind) {
    case GroupKind::Cyclic: return cyclic_group(param);
    case GroupKind::Dihedral: return dihedral_group(param);
    case GroupKind::Quaternion8: return quaternion_group();
    case GroupKind::Klein4: return klein_four_group();
  }
  throw DimensionMismatch("unknown group kind");
}

FiniteGroup parse_group(const std::string& text) {
  const auto x = text.find('x');
  if (x != std::string::npos) return product_group(parse_group(text.substr(0, x)), parse_group(text.substr(x + 1)));
  static const std::regex re("([ZD])([0-9]+)");
  std::smatch m;
  if (text == "Q8") return quaternion_group();
  if (text == "K4") return klein_four_group();
  if (std::regex_match(text, m, re)) {
    const auto n = static_cast<std::uint32_t>(std::stoul(m[2]));
    if (n == 0 || n > 64) throw ParseError("group order out of range in '" + text + "'");
    if (m[1] == "Z") return cyclic_group(n);
    if (n % 2 != 0) throw ParseError("dihedral group order must be even in '" + text + "'");
    return dihedral_group(n);
  }
  throw ParseError("unknown group '" + text + "'");
}

Cocycle3 trivial_cocycle(const FiniteGroup& g) {
  Cocycle3 w;
  w.group = g;
  w.values.assign(static_cast<std::size_t>(g.order) * g.order * g.order, CycNumber(1L));
  return w;
}

void validate_cocycle(const Cocycle3& w) {
  const FiniteGroup& g = w.group;
  const std::uint32_t n = g.order;
  if (w.values.size() != static_cast<std::size_t>(n) * n * n) throw ValidationFailure("cocycle table has wrong size");
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) {
        const CycNumber& v = w(a, b, c);
        if ((a == g.identity || b == g.identity || c == g.identity) && !v.is_one()) {
          throw ValidationFailure("cocycle is not normalized");
        }
        if (!root_of_unity_order(v)) throw ValidationFailure("cocycle value is not a root of unity");
      }
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) {
        for (std::uint32_t d = 0; d < n; ++d) {
          const CycNumber lhs = w(b, c, d) * w(a, g.mul(b, c), d) * w(a, b, c);
          const CycNumber rhs = w(g.mul(a, b), c, d) * w(a, b, g.mul(c, d));
          if (lhs != rhs) throw ValidationFailure("cocycle condition fails");
        }
      }
    }
  }
}

Cocycle3 coboundary(const FiniteGroup& g, const Cochain2& b) {
  Cocycle3 w = trivial_cocycle(g);
  for (std::uint32_t x = 0; x < g.order; ++x) {
    for (std::uint32_t y = 0; y < g.order; ++y) {
      for (std::uint32_t z = 0; z < g.order; ++z) {
        w.at(x, y, z) = b(y, z) * b(x, g.mul(y, z)) / (b(g.mul(x, y), z) * b(x, y));
      }
    }
  }
  return w;
}

Cocycle3 cyclic_cocycle(std::uint32_t N, long t) {
  Cocycle3 w = trivial_cocycle(cyclic_group(N));
  for (std::uint32_t l = 0; l < N; ++l) {
    for (std::uint32_t m = 0; m < N; ++m) {
      for (std::uint32_t n = 0; n < N; ++n) {
        const long carry = (m + n >= N) ? static_cast<long>(N) : 0;
        const long exponent = (t % static_cast<long>(N)) * static_cast<long>(l) * carry;
        w.at(l, m, n) = root_of_unity(N * N, exponent);
      }
    }
  }
  return w;
}

Cocycle3 cocycle_product(const Cocycle3& a, const Cocycle3& b) {
  if (a.group.mult_table != b.group.mult_table) throw DimensionMismatch("cocycles over different groups");
  Cocycle3 w = a;
  for (std::size_t i = 0; i < w.values.size(); ++i) w.values[i] *= b.values[i];
  return w;
}

Cocycle3 sign_cocycle_z2() {
  Cocycle3 w = trivial_cocycle(cyclic_group(2));
  w.at(1, 1, 1) = CycNumber(-1L);
  return w;
}

}  // namespace qhopf
