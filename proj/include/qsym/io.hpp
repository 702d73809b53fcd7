#pragma once

// Serialization and rendering: JSON forms for every public structure, DOT
// output for diagrams, and the plain-text term format used by the CLI.

#include <string>

#include <json.hpp>

#include "qsym/composition.hpp"
#include "qsym/morphisms.hpp"
#include "qsym/posets.hpp"
#include "qsym/rigidity.hpp"
#include "qsym/schur.hpp"
#include "qsym/vector.hpp"

namespace qsym {

nlohmann::json descent_set_to_json(const DescentSet& s);
DescentSet descent_set_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const QSymVector& u);
QSymVector vector_from_json(const nlohmann::json& j);

nlohmann::json tensor_to_json(const TensorVector& t);

nlohmann::json ssrct_to_json(const Ssrct& t);
Ssrct ssrct_from_json(const nlohmann::json& j);

nlohmann::json hasse_to_json(const HasseDiagram& d);
std::string hasse_to_dot(const HasseDiagram& d);

nlohmann::json morphism_check_to_json(const std::string& map, const std::string& property,
                                      int bound, const MorphismCheck& check);

nlohmann::json report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

// Terms in descending label order, e.g. "S[2,2] + S[2,1,1]", "-3/2*F[2]";
// the zero vector renders as "0" and the empty label as "M[]".
std::string render_text(const QSymVector& u);
// Tensor terms in ascending label-pair order with an " (x) " separator.
std::string render_text(const TensorVector& t);

}  // namespace qsym
