#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lstab/intset.hpp"

namespace lstab {

// Set literal grammar: comma-separated items, item := INT | INT "-" INT
// (inclusive range). Whitespace is ignored and overlapping items union.
// Example: "0,11-13,22-26,33-48".

/// Parses a literal whose integers may be negative ("-5--2,3"). Result is
/// sorted and deduplicated.
std::vector<std::int64_t> parse_int_list(std::string_view literal);

/// Parses a literal over the nonnegative universe.
IntSet parse_set_literal(std::string_view literal);

/// Canonical literal: maximal runs collapse to "lo-hi", singletons stay bare.
/// Every element is shifted by `offset` on output.
std::string format_set_literal(const IntSet& set, std::int64_t offset = 0);

}  // namespace lstab
