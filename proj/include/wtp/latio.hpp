#pragma once

#include <iosfwd>
#include <string>

#include "wtp/core.hpp"

namespace wtp {

// Lattice text format: a JSON document with fields `atoms` (list of strings)
// and `closed` (list of lists of strings, ∅ as the empty list).  Canonical
// serialization sorts closed sets by (size, lexicographic atom names).
std::string to_lattice_text(const ClosureSpace& l);
ClosureSpace from_lattice_text(const std::string& text);

ClosureSpace load_lattice(const std::string& path);
void save_lattice(const ClosureSpace& l, const std::string& path);

// Hasse diagram of the covering relation, transitively reduced by
// construction.
std::string to_dot(const ClosureSpace& l);

} // namespace wtp
