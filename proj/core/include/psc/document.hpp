#pragma once

// JSON form of a multiplet table, schema "psc-1".

#include <string>
#include <string_view>
#include <vector>

#include "psc/multiplet.hpp"

namespace psc {

inline constexpr std::string_view kSchemaVersion = "psc-1";

std::string to_json(const MultipletTable& t, int indent = 2);

// Throws ParseError on malformed or inconsistent documents.
MultipletTable table_from_json(std::string_view text);

// Problems found in a document; empty when it is valid.
std::vector<std::string> validate_document(std::string_view text);

}  // namespace psc
