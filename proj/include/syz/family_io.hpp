#pragma once

#include <iosfwd>
#include <string>

#include "syz/monomial.hpp"

namespace syz {

// Text format:
//   N d n
//   e_0 e_1 ... e_N      (n lines, canonical order)

void write_family(std::ostream& os, const MonomialFamily& family);
std::string format_family(const MonomialFamily& family);

/// Throws ParseError on malformed input, including members of the wrong degree
/// or repeated members.
MonomialFamily read_family(std::istream& is);
MonomialFamily parse_family(const std::string& text);

MonomialFamily load_family(const std::string& path);
void save_family(const std::string& path, const MonomialFamily& family);

}  // namespace syz
