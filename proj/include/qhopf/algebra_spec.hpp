#pragma once

// Textual algebra descriptions:
//   kac | group:G | h_u:<spec> | dual:G[:cocycle_t=t] | double:G[:cocycle_t=t] | file:<path>
// optionally followed by @gauge=<seed>.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "qhopf/algebra.hpp"

namespace qhopf {

struct AlgebraSpec {
  enum class Kind { Kac, Group, CentralTwist, DualGroup, Double, File };

  Kind kind = Kind::Kac;
  /// Group text for Group, DualGroup and Double.
  std::string group;
  long cocycle_t = 0;
  std::string path;
  /// The Hopf algebra under h_u.
  std::shared_ptr<const AlgebraSpec> inner;
  std::optional<std::uint64_t> gauge_seed;

  /// Throws ParseError.
  static AlgebraSpec parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b);
};

/// Builds the algebra; file contents are parsed but not validated. A gauge seed applies
/// random_gauge_transform(h, seed) last. Throws ParseError for unusable specs.
QuasiHopfAlgebra build_algebra(const AlgebraSpec& spec);

}  // namespace qhopf
