#pragma once

// The .shd text format.
//
//   # comment
//   points u v
//   boundary d0 d1
//   alpha A: u v
//   beta B: u v
//   region R1 genus 0: cycle(+A.0 -B.0) cycle(∂d0) corners(u:+-)
//
// Arc k of a curve runs from its k-th listed point to the next, cyclically.
// `@id` may be written for `∂id`.  A corners clause is optional; its labels
// give (alpha, beta) quadrant signs and are checked by validate.

#include "sfh/diagram.hpp"

#include <string>
#include <string_view>

namespace sfh {

// Throws ParseError (syntax), or a ParseError carrying UndeclaredIdentifier or
// DuplicateIdentifier.
Diagram parse_shd(std::string_view text);

std::string emit_shd(const Diagram& d);

Diagram read_shd_file(const std::string& path);
void write_shd_file(const std::string& path, const Diagram& d);

} // namespace sfh
