#pragma once

// JSON and text renderings. Scalars are {"conductor": N, "coeffs": ["p/q", ...]}.

#include <string>
#include <vector>

#include <json.hpp>

#include "qhopf/algebra.hpp"
#include "qhopf/group.hpp"
#include "qhopf/indicators.hpp"
#include "qhopf/reptheory.hpp"

namespace qhopf {

using Json = nlohmann::ordered_json;

Json cyc_to_json(const CycNumber& x);
/// Throws ParseError.
CycNumber cyc_from_json(const Json& j);

/// [[i_0, ..., i_{k-1}, scalar], ...]
Json tensor_to_json(const SparseTensor& t);
SparseTensor tensor_from_json(const Json& j, std::uint32_t legs, std::uint32_t dim);

Json algebra_to_json(const QuasiHopfAlgebra& h);
/// Parses and finalizes; the result is not validated. Throws ParseError.
QuasiHopfAlgebra algebra_from_json(const Json& j);

Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);
Json cocycle_to_json(const Cocycle3& w);
/// Throws ParseError, or ValidationFailure if the values are not a normalized 3-cocycle.
Cocycle3 cocycle_from_json(const Json& j);

Json characters_to_json(const std::vector<SimpleCharacter>& chars);
std::string characters_to_text(const QuasiHopfAlgebra& h, const std::vector<SimpleCharacter>& chars);

Json table_to_json(const IndicatorTable& t);
/// Aligned markdown, one row per simple module, one column per n.
std::string table_to_markdown(const IndicatorTable& t);

}  // namespace qhopf
