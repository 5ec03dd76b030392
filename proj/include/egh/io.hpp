#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "egh/ideal.hpp"
#include "egh/monomial_ideal.hpp"
#include "egh/multicomplex.hpp"

namespace egh {

// Plain-text ideal files:
//
//   ring <nvars> <p> <name1> ... <namen>
//   <generator>
//   <generator>
//
// Blank lines and everything after '#' are ignored.  The header fixes the
// ambient ring; generators are parsed with the usual polynomial grammar.

Ideal read_ideal(std::istream& in, const std::string& label = "<stream>");
Ideal read_ideal_file(const std::string& path);

void write_ideal(std::ostream& out, const Ideal& ideal);
std::string ideal_to_file_string(const Ideal& ideal);

// Monomial ideals and multicomplexes print in the same format, one
// monomial per line, in enumeration order.
void write_monomial_ideal(std::ostream& out, const MonomialIdeal& ideal);
void write_multicomplex(std::ostream& out, const Multicomplex& mc);

// Generators of a monomial ideal as printable strings (used by reports).
std::vector<std::string> monomial_strings(const RingPtr& ring,
                                          const std::vector<Monomial>& monomials);

}  // namespace egh
