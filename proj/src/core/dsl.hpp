#pragma once

#include <string>
#include <string_view>

#include "core/diag.hpp"
#include "core/domain.hpp"

// Concrete syntax for domain-model chains, one file per chain:
//
//   domain_model IDENT (parent IDENT)? { item* }
//   item := concept | dataset | relation | attribute | individual
//         | maplet | attr_maplet | predicate
//
// `#` starts a line comment. Serialization is canonical: parsing the output
// of serialize() yields a structurally identical chain, and serializing a
// chain parsed from canonical text reproduces it byte for byte.
namespace ontb::dsl {

struct ParseResult {
  dm::Chain chain;
  dm::PositionIndex positions;  // element path -> source position
  Report report;
  bool ok() const { return report.ok(); }
};

ParseResult parse(std::string_view source);

std::string serialize(const dm::Chain& chain);

// Quotes and escapes a DSL string literal.
std::string quote(std::string_view raw);

}  // namespace ontb::dsl
