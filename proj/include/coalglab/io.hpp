#pragma once

#include <json.hpp>

#include "coalglab/embeddings.hpp"

namespace coalglab {

using Json = nlohmann::json;

// Interchange documents. Every document carries {"version": "1"}; unknown
// versions are rejected. Scalars travel as strings ("p/q" for rationals,
// decimal residues for GF(p)); serialization is canonical: sorted keys,
// reduced fractions, structure constants in sorted index order.

inline constexpr const char* kSchemaVersion = "1";

Json coalgebra_to_json(const Coalgebra& c);
Coalgebra coalgebra_from_json(const Json& j);

Json comodule_to_json(const Comodule& m);  // embeds the coalgebra inline
Comodule comodule_from_json(const Json& j, CoalgebraPtr coalgebra = nullptr);

Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

Json dimension_vector_to_json(const DimensionVector& d);
DimensionVector dimension_vector_from_json(const Json& j);

Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, Field f);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, Field f);

Json free_module_to_json(const FreeAlgebraModule& m);
FreeAlgebraModule free_module_from_json(const Json& j);

Json quiver_rep_to_json(const QuiverRep& r);
QuiverRep quiver_rep_from_json(const Json& j);

// canonical byte representation (sorted keys, fixed indentation, newline)
std::string canonical_dump(const Json& j);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace coalglab
