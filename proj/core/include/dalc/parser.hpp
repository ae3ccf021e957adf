#pragma once

#include <string_view>

#include "dalc/errors.hpp"
#include "dalc/kb.hpp"

namespace dalc {

/// Parse a KB file. Statements end with '.'; '#' comments to end of line.
///   strict inclusion:     C <= D.
///   defeasible inclusion: T(C) <= D.
///   concept assertion:    C(a).
///   role assertion:       r(a, b).
/// Keywords: Top Bot not and or exists forall T. Concept names, role names
/// and individual names live in disjoint namespaces; a clash is a ParseError.
KnowledgeBase parse_kb(std::string_view text);

/// Parse a bare concept, e.g. "Penguin and not Fly".
Concept parse_concept(std::string_view text);

/// Parse a subsumption query: "T(C) <= D" or "C <= D" (trailing '.' optional).
Query parse_query(std::string_view text);

}  // namespace dalc
