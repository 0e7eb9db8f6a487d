#pragma once

#include "eplan/domain.hpp"

#include <string_view>

namespace eplan {

/// Parses a domain description. Statement grammar:
///
///   program := (decl | stmt)*
///   decl    := "fluent" idlist ";" | "agent" idlist ";" | "action" idlist ";"
///   stmt    := "executable" id "if" bf ";"
///            | id "causes" lit ["if" bf] ";"
///            | id "determines" id ["if" bf] ";"
///            | id "announces" ff ["if" bf] ";"
///            | id "observes" id ["if" bf] ";"
///            | id "aware_of" id ["if" bf] ";"
///            | "initially" bf ";" | "goal" bf ";"
///   bf      := ff | "B(" id "," bf ")" | "E([" idlist "]," bf ")"
///            | "C([" idlist "]," bf ")" | "not" bf | bf "and" bf
///            | bf "or" bf | "(" bf ")"
///
/// `and` binds tighter than `or`, `not` tightest. `%` starts a comment
/// that runs to end of line. The names B, E and C are reserved.
///
/// Throws ParseError (with 1-based line/column) on syntax or unresolved
/// names, DomainError on structural violations such as mixed effect kinds.
Domain parse_domain(std::string_view text);

} // namespace eplan
