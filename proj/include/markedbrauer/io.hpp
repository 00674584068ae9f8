#pragma once

#include "markedbrauer/algebra.hpp"
#include "markedbrauer/category.hpp"
#include "markedbrauer/partitions.hpp"
#include "markedbrauer/superrep.hpp"

#include <json.hpp>

#include <string>

namespace markedbrauer {

using Json = nlohmann::ordered_json;

/// {"r","s","eps",["delta"],"terms":[{"coeff":[...],"pairs":[["t1","b1"],...]}]}.
/// delta is written only when it is not the default for eps
/// (symbolic for eps = 1, 0 for eps = -1).
Json element_to_json(const Element& x);
Element element_from_json(const Json& j);
std::string serialize(const Element& x);
/// Throws ParseError naming the offending location.
Element parse_element(const std::string& text);

/// List of layers of "I", "X", "U", "N".
Json word_to_json(const GeneratorWord& w);
GeneratorWord word_from_json(const Json& j);
GeneratorWord parse_word(const std::string& text);

/// Integer when it fits in 64 bits, else its decimal string.
Json bigint_to_json(const BigInt& v);
Json scalar_to_json(const Scalar& c);
Json rational_to_json(const Rational& q);
Json report_to_json(const Report& rep);
Json supermatrix_to_json(const SuperMatrix& m, const SuperSpace& V);
Json gelement_to_json(const GElement& g, const SuperSpace& V);
Json superspace_to_json(const SuperSpace& V);
Json schur_weyl_to_json(const SchurWeylReport& rep);
Json partition_to_json(const Partition& p);
Json inflation_triple_to_json(const InflationTriple& t);

}  // namespace markedbrauer
