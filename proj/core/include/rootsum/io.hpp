#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rootsum/oracle.hpp"
#include "rootsum/poly.hpp"

namespace rootsum {

// Text formats. '#' starts a comment (rest of line ignored) everywhere;
// parsing is locale-independent (dot decimal separator).
//
// polynomial: line 1 = integer degree d; then d+1 lines "re im",
//             lowest degree first.
// matrix:     line 1 = n; then n rows of n whitespace-separated "re,im"
//             entries.
// program:    one instruction per line, "idx op args...":
//             "i in" | "i const re im" | "i add a b" | "i sub a b" |
//             "i mul a b" | "i div a b" | "i smul re im a".
//             The last instruction's value is f(x).
// centers:    one "re im" pair per line.

Poly parse_poly(std::istream& in);
CMatrix parse_matrix(std::istream& in);
StraightLineProgram parse_slp(std::istream& in);
std::vector<Complex> parse_centers(std::istream& in);

Poly load_poly(const std::string& path);
CMatrix load_matrix(const std::string& path);
StraightLineProgram load_slp(const std::string& path);
std::vector<Complex> load_centers(const std::string& path);

// Shortest round-trip decimal ("%.17g"); deterministic across platforms.
std::string format_real(double x);
std::string format_complex(Complex z);  // "re im"

void print_poly(std::ostream& out, const Poly& p);

}  // namespace rootsum
