#pragma once

// Text formats.
//
//   vector:  decimal coordinates separated by single spaces, e.g. "0 1 2 3"
//   matrix:  first line "s n", then one generator row per line in the vector format
//
// Blank lines and lines starting with '#' are ignored by the matrix reader.

#include <iosfwd>
#include <string>
#include <string_view>

#include "modcodes/linalg.hpp"

namespace modcodes {

/// Parses one vector of length n. Rejects out-of-range coordinates and wrong lengths.
ZqVector parse_vector(std::string_view line, RingSpec ring, std::size_t n);
/// Parses a vector of whatever length the line has.
ZqVector parse_vector(std::string_view line, RingSpec ring);

std::string format_vector(const ZqVector& v);

LinearCode read_matrix(std::istream& in);
LinearCode read_matrix_file(const std::string& path);
LinearCode parse_matrix(std::string_view text);

void write_matrix(std::ostream& out, RingSpec ring, std::size_t n, const GeneratorMatrix& rows);
void write_matrix(std::ostream& out, const LinearCode& code);
std::string format_matrix(const LinearCode& code);

}  // namespace modcodes
