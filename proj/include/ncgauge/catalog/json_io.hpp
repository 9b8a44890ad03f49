#pragma once

#include <string>

#include "json.hpp"
#include "ncgauge/comodule/comodule.hpp"

// JSON forms of the structure constants. Tensors are nested arrays indexed by basis
// position: mult[i][j][k] is the e_k coefficient of e_i e_j, comult[i][j][k] that of e_j⊗e_k
// in Δe_i, antipode[i][j] that of e_j in S(e_i), dqt[a][b] = R(e_a⊗e_b), and
// coaction[v][w][h] that of e_w⊗e_h in ρ(e_v).
//
// A scalar is written {"conductor": n, "coeffs": [[num, den], ...]} in the power basis of
// Q(ζ_n). On input an integer, a string "p/q", or a bare coefficient array (read in the field
// given by "field": {"cyclotomic": n}) are accepted too.
namespace ncg {

using Json = nlohmann::json;

/// Throws ParseError naming the JSON pointer of the offending value.
Scalar scalar_from_json(const Json& j, int conductor, const std::string& where);
Json scalar_to_json(const Scalar& s);

Algebra algebra_from_json(const Json& j, int conductor, const std::string& where = "");
HopfAlgebra hopf_from_json(const Json& j, const std::string& where = "");
/// "field" records the smallest cyclotomic field holding every structure constant.
Json hopf_to_json(const HopfAlgebra& h);

/// Either "coaction" (3-index tensor) or "grading" (grouplike basis index per vector).
Comodule comodule_from_json(const Json& j, const HopfAlgebra& host, const StructuredSpace& space, int conductor,
                            const std::string& where = "");
Json comodule_to_json(const Comodule& v, const std::string& host_ref);

/// Smallest conductor containing every entry of the structure constants.
int conductor_of(const HopfAlgebra& h);

/// Parses text, converting nlohmann errors (with their line/column) into ParseError.
Json parse_json_text(const std::string& text, const std::string& source);

}  // namespace ncg
