#pragma once

#include "dol/syntax.hpp"
#include "text_cursor.hpp"

namespace dol::detail {

// Entry points used by the DOL parser for `{| ... |}` blocks; `start` is the
// position of the first character of `text` in the enclosing document.
Theory parse_prop_at(std::string_view text, SourcePos start);
Theory parse_el_at(std::string_view text, SourcePos start);

std::string print_prop_formula(const Formula& f);
std::string print_subsumption(const Subsumption& s);
/// Declaration lines for symbols the axioms do not mention.
std::string print_line_declarations(const Theory& theory);

}  // namespace dol::detail
