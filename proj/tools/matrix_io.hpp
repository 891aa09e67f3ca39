#ifndef RICLAB_TOOLS_MATRIX_IO_HPP
#define RICLAB_TOOLS_MATRIX_IO_HPP

#include <istream>
#include <string>

#include "riclab/dense.hpp"

namespace riclab {

// Text formats, chosen diff-able and hand-editable:
//   matrix: header line "rows cols", then one line per row with cols values
//   vector: header line "len", then len whitespace-separated values
// Lines starting with '#' are comments. Values are written with 17
// significant digits so a write/read round-trip is bit-exact for doubles.

DenseMatrix parse_matrix(std::istream& in, const std::string& origin);
Vector parse_vector(std::istream& in, const std::string& origin);

DenseMatrix read_matrix_file(const std::string& path);
Vector read_vector_file(const std::string& path);

std::string matrix_to_text(const DenseMatrix& m);
std::string vector_to_text(const Vector& v);

void write_matrix_file(const std::string& path, const DenseMatrix& m);
void write_vector_file(const std::string& path, const Vector& v);

// Writes via a temp file in the same directory plus rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace riclab

#endif
