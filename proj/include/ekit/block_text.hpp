#pragma once

#include <string>

#include "ekit/building_blocks.hpp"

namespace ekit {

/// Canonical text form A(n;d1,...,dN), with @(t1,...,tN) appended exactly
/// when the angles differ from the default t_i = i/(N+1).
std::string format_block(const CircleBlock& b);

/// Parse the grammar A(n;d1,...,dN)[@(t1,...,tN)]; interior whitespace is
/// tolerated. Malformed text throws ParseError; well-formed text is then
/// validated as a building block (InvalidShape / DivisibilityViolation /
/// BadExceptionalPoints).
CircleBlock parse_block(const std::string& text);

}  // namespace ekit
