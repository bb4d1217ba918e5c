#pragma once

// Text and JSON forms of elements and results.
//
// Expression grammar (whitespace insensitive):
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := '-' factor | power
//   power   := atom ('^' INT)?
//   atom    := INT | INT '/' INT | NAME '_' INT | 'ch0' | 'ch[' INT ']' | 'Tors' | '(' expr ')'

#include "transgress/universal.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace transgress {

/// Evaluates `text` over Q in the shadow of `ring`, then coerces into `ring`.
/// ch[d] expands to the Chern character component in the c-generators.
Element parse_element(std::string_view text, const RingPtr& ring, const Registry& registry);

nlohmann::json to_json(const Element& e);
Element element_from_json(const nlohmann::json& j, const Registry& registry);

/// "1/2*y_3 in H^3(Sp; Q/Z)", or "0" for a vanishing class.
std::string emit_text(const UniversalClassResult& result);
nlohmann::json emit_json(const UniversalClassResult& result, bool trace);

/// Rows n = 0..7, classes for k = 0..kmax.
std::string final_answer_table_md(const Maps& maps, int kmax);
nlohmann::json final_answer_table_json(const Maps& maps, int kmax);

std::string describe_ring(const RingPresentation& ring);
nlohmann::json map_to_json(const GenMap& map);

}  // namespace transgress
