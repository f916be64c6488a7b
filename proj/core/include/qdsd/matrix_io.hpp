#pragma once

#include <iosfwd>
#include <string>

#include "qdsd/complex_matrix.hpp"

namespace qdsd {

// Density-matrix text format: a first line "dim N", then N lines of N
// whitespace-separated complex entries written as "re+imj" (for example
// "0.0952380952380952+0j"). The writer always emits this exact layout with
// 17 significant digits (so values round-trip); the reader accepts any
// whitespace between tokens.

void write_density_matrix(std::ostream& out, const ComplexMatrix& m);
void write_density_matrix_file(const std::string& path, const ComplexMatrix& m);

/// Throws ParseError (with 1-based line/column) on malformed input. The
/// result is a plain matrix; density-matrix invariants are checked by the
/// caller constructing a DensityMatrix from it.
ComplexMatrix read_density_matrix(std::istream& in);
ComplexMatrix read_density_matrix_file(const std::string& path);

}  // namespace qdsd
