#pragma once

// JSON encodings, root-datum files and presets, and the element shorthands
// accepted on the command line.

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "affhecke/antispherical.hpp"
#include "affhecke/hecke.hpp"
#include "affhecke/springer.hpp"

namespace affhecke {

using Json = nlohmann::ordered_json;

/// Names of the shipped presets: sl2, pgl2, gl2, sl3, c2.
const std::vector<std::string>& preset_names();
/// JSON text of a preset; throws InputError for unknown names.
const std::string& preset_json(const std::string& name);

std::shared_ptr<const RootDatum> datum_from_json(const Json& j);
Json datum_to_json(const RootDatum& d);
/// A preset name or a path to a datum JSON file.
std::shared_ptr<const RootDatum> load_datum(const std::string& path_or_preset);
/// Summary used by `datum validate`.
Json datum_report(const WeylGroup& W);

Weight weight_from_json(const Json& j, int rank);

Json lp_to_json(const LaurentPoly& p);
LaurentPoly lp_from_json(const Json& j);

/// List of {"vector": [...], "coeff": {...}} in lexicographic order.
Json ga_to_json(const GroupAlgebraElt& g);
GroupAlgebraElt ga_from_json(const Json& j, int rank);

/// {"t": [...], "w": [...]} with w a word in 1-based finite simple indices.
Json affine_to_json(const AffineWeylGroup& G, const AffineElt& a);
AffineElt affine_from_json(const AffineWeylGroup& G, const Json& j);

/// List of {"elt": ..., "coeff": ...} in output order.
Json hecke_to_json(const AffineWeylGroup& G, const HeckeElt& h);
HeckeElt hecke_from_json(const AffineWeylGroup& G, const Json& j);

/// List of {"w": [...], "mu": [...], "coeff": ...}.
Json bernstein_to_json(const AffineWeylGroup& G, const BernsteinElt& b);

Json tableau_to_json(const Tableau& t);

/// Affine element from JSON or a shorthand: a word of generator names
/// ("s0 s", "s1.s2"), "varpi"/"ϖ" for the length-zero generator, "id".
AffineElt parse_affine_arg(const AffineWeylGroup& G, const std::string& text);
/// Hecke element from JSON (a term list, or an affine element meaning its
/// delta) or a shorthand: δ_s, δ_{s0 s}, δ_ϖ, ϖ, b_s, b_{s0 s}, θ_[1,0],
/// with ASCII spellings d_, delta_, theta_, varpi also accepted.
HeckeElt parse_hecke_arg(const HeckeAlgebra& H, const std::string& text);
/// Module element from JSON (a term list or {"side", "terms"}) or θ_[...] / e^[...].
GroupAlgebraElt parse_module_arg(const std::string& text, int rank);

}  // namespace affhecke
