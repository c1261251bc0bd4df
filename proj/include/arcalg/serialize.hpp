#pragma once

#include <json.hpp>

#include "arcalg/bimodule.hpp"
#include "arcalg/genalg.hpp"
#include "arcalg/homology.hpp"

namespace arcalg {

using nlohmann::json;

json to_json(const SymbolicScalar& s);
SymbolicScalar scalar_from_json(const json& j);

json to_json(const CupDiagram& c);  // pair list [[i,j],...]

json to_json(const StackedDiagram& d);  // {lines:[...], rows:[{kind,line,i,j}...]}
CupDiagram cup_from_json(const json& j, const Block& b);

json to_json(const BasisDiagram& b);
BasisDiagram basis_from_json(const json& j, const Block& b);

json to_json(const ArcElement& x);  // {block, terms:[{cup,weight,cap,scalar}]}
ArcElement element_from_json(const json& j);

json to_json(const CompositeMatching& m);  // {blocks, moves:[{sign,i,shape}]} for basic layers
CompositeMatching matching_from_json(const json& j);

json to_json(const BimodBasis& b);
json to_json(const BimodElement& x);

json to_json(const HomologyResult& h);
json poincare_json(const CubeComplex& c);

json to_json(const Quiver& q);

}  // namespace arcalg
