#pragma once

#include <string>
#include <vector>

#include "cursor.hpp"
#include "pathkit/term.hpp"

namespace pathkit::detail {

/// Parses a term at the cursor. `scope` lists enclosing binder names,
/// innermost last; identifiers bound there become de Bruijn indices.
Term parse_term_at(Cursor& cur, std::vector<std::string>& scope);

}  // namespace pathkit::detail
