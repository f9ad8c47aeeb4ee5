#include "qhopf/algebra_spec.hpp"

#include <fstream>
#include <regex>

#include "qhopf/constructions.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/qha.hpp"
#include "qhopf/reptheory.hpp"
#include "qhopf/serialization.hpp"

namespace qhopf {

namespace {

const std::string kGauge = "@gauge=";

std::uint64_t parse_unsigned(const std::string& text, const std::string& what) {
  static const std::regex digits("[0-9]{1,19}");
  if (!std::regex_match(text, digits)) throw ParseError("bad " + what + " '" + text + "'");
  return std::stoull(text);
}

long parse_long(const std::string& text, const std::string& what) {
  static const std::regex integer("-?[0-9]{1,9}");
  if (!std::regex_match(text, integer)) throw ParseError("bad " + what + " '" + text + "'");
  return std::stol(text);
}

/// "G" or "G:cocycle_t=t"
void parse_group_and_cocycle(const std::string& rest, AlgebraSpec& s) {
  const auto colon = rest.find(':');
  s.group = rest.substr(0, colon);
  parse_group(s.group);
  if (colon == std::string::npos) return;
  const std::string option = rest.substr(colon + 1);
  const std::string key = "cocycle_t=";
  if (option.rfind(key, 0) != 0) throw ParseError("unknown option '" + option + "'");
  s.cocycle_t = parse_long(option.substr(key.size()), "cocycle_t");
  static const std::regex cyclic("Z[0-9]+");
  if (s.cocycle_t != 0 && !std::regex_match(s.group, cyclic)) {
    throw ParseError("cocycle_t needs a cyclic group, got '" + s.group + "'");
  }
}

AlgebraSpec parse_base(const std::string& text) {
  AlgebraSpec s;
  if (text == "kac") return s;
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("unknown algebra '" + text + "'");
  const std::string head = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  if (head == "group") {
    s.kind = AlgebraSpec::Kind::Group;
    s.group = rest;
    parse_group(rest);
  } else if (head == "h_u") {
    s.kind = AlgebraSpec::Kind::CentralTwist;
    s.inner = std::make_shared<AlgebraSpec>(parse_base(rest));
  } else if (head == "dual") {
    s.kind = AlgebraSpec::Kind::DualGroup;
    parse_group_and_cocycle(rest, s);
  } else if (head == "double") {
    s.kind = AlgebraSpec::Kind::Double;
    parse_group_and_cocycle(rest, s);
  } else if (head == "file") {
    if (rest.empty()) throw ParseError("empty file path");
    s.kind = AlgebraSpec::Kind::File;
    s.path = rest;
  } else {
    throw ParseError("unknown algebra kind '" + head + "'");
  }
  return s;
}

Cocycle3 spec_cocycle(const AlgebraSpec& s) {
  const FiniteGroup g = parse_group(s.group);
  if (s.cocycle_t == 0) return trivial_cocycle(g);
  return cyclic_cocycle(g.order, s.cocycle_t);
}

QuasiHopfAlgebra load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
  QuasiHopfAlgebra h = algebra_from_json(j);
  try {
    attach_block_basis(h);
  } catch (const Error&) {
  }
  return h;
}

QuasiHopfAlgebra build_base(const AlgebraSpec& s) {
  switch (s.kind) {
    case AlgebraSpec::Kind::Kac:
      return kac_algebra();
    case AlgebraSpec::Kind::Group:
      return group_algebra(parse_group(s.group));
    case AlgebraSpec::Kind::CentralTwist: {
      const QuasiHopfAlgebra base = build_base(*s.inner);
      if (!is_ordinary_hopf(base)) throw ParseError("h_u needs an ordinary Hopf algebra, got " + base.name);
      const auto us = find_central_grouplikes(base, 2);
      if (us.empty()) throw ParseError(base.name + " has no central group-like of order 2");
      return h_u(base, us.front());
    }
    case AlgebraSpec::Kind::DualGroup:
      return dual_group_algebra(spec_cocycle(s));
    case AlgebraSpec::Kind::Double:
      return twisted_double(spec_cocycle(s));
    case AlgebraSpec::Kind::File:
      return load_file(s.path);
  }
  throw ParseError("unknown algebra kind");
}

}  // namespace

AlgebraSpec AlgebraSpec::parse(const std::string& text) {
  std::string base = text;
  std::optional<std::uint64_t> seed;
  const auto at = text.rfind(kGauge);
  if (at != std::string::npos) {
    seed = parse_unsigned(text.substr(at + kGauge.size()), "gauge seed");
    base = text.substr(0, at);
  }
  AlgebraSpec s = parse_base(base);
  s.gauge_seed = seed;
  return s;
}

std::string AlgebraSpec::to_string() const {
  std::string out;
  switch (kind) {
    case Kind::Kac:
      out = "kac";
      break;
    case Kind::Group:
      out = "group:" + group;
      break;
    case Kind::CentralTwist:
      out = "h_u:" + inner->to_string();
      break;
    case Kind::DualGroup:
    case Kind::Double:
      out = (kind == Kind::DualGroup ? "dual:" : "double:") + group;
      if (cocycle_t != 0) out += ":cocycle_t=" + std::to_string(cocycle_t);
      break;
    case Kind::File:
      out = "file:" + path;
      break;
  }
  if (gauge_seed) out += kGauge + std::to_string(*gauge_seed);
  return out;
}

bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
  if (a.kind != b.kind || a.group != b.group || a.cocycle_t != b.cocycle_t || a.path != b.path ||
      a.gauge_seed != b.gauge_seed) {
    return false;
  }
  if (!a.inner || !b.inner) return !a.inner && !b.inner;
  return *a.inner == *b.inner;
}

QuasiHopfAlgebra build_algebra(const AlgebraSpec& spec) {
  QuasiHopfAlgebra h = build_base(spec);
  if (!spec.gauge_seed) return h;
  QuasiHopfAlgebra twisted = gauge_twist(h, random_gauge_transform(h, *spec.gauge_seed));
  twisted.name = h.name + kGauge + std::to_string(*spec.gauge_seed);
  return twisted;
}

}  // namespace qhopf
