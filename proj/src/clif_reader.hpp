#pragma once

#include <string>

#include "dol/syntax.hpp"
#include "text_cursor.hpp"

namespace dol::detail {

struct ClifContext {
  LogicId logic = LogicId::CLSub;
  SignatureMode mode = SignatureMode::Inferred;
  const PrefixMap* prefixes = nullptr;
  const Signature* declared = nullptr;
};

/// Reads top-level CLIF forms. With `until_eof` the whole remaining input
/// must be forms; otherwise reading stops before the first non-`(` token.
ClifText read_clif_forms(Cursor& cur, const ClifContext& ctx, bool until_eof);

/// CLIF surface form of a name: CURIE when `prefixes` has a namespace for it,
/// `<iri>` when the IRI contains token delimiters, the name itself otherwise.
std::string clif_name(const Name& name, const PrefixMap* prefixes);
std::string print_clif_formula(const Formula& f, const PrefixMap* prefixes);

inline constexpr int kMaxNesting = 256;

}  // namespace dol::detail
