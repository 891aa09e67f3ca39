#include "matrix_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "riclab/errors.hpp"

namespace riclab {

namespace {

struct LineReader {
  std::istream& in;
  std::string origin;
  int line_no = 0;

  // next non-comment, non-blank line; false on EOF
  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++line_no;
      std::size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos) continue;
      if (line[i] == '#') continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void error(const std::string& msg) const {
    fail(Errc::parse_error, origin + ":" + std::to_string(line_no) + ": " + msg);
  }
};

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream ss(line);
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

double parse_value(const std::string& tok, const LineReader& reader) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v))
    reader.error("bad numeric value '" + tok + "'");
  return v;
}

int parse_positive_int(const std::string& tok, const LineReader& reader, const char* what) {
  char* end = nullptr;
  const long v = std::strtol(tok.c_str(), &end, 10);
  if (end == tok.c_str() || *end != '\0' || v <= 0 || v > 1000000)
    reader.error(std::string("bad ") + what + " '" + tok + "'");
  return static_cast<int>(v);
}

}  // namespace

DenseMatrix parse_matrix(std::istream& in, const std::string& origin) {
  LineReader reader{in, origin};
  std::string line;
  if (!reader.next(line)) reader.error("missing matrix header 'rows cols'");
  const auto header = tokens_of(line);
  if (header.size() != 2) reader.error("matrix header must be 'rows cols'");
  const int rows = parse_positive_int(header[0], reader, "row count");
  const int cols = parse_positive_int(header[1], reader, "column count");
  if (static_cast<long long>(rows) * cols > 10'000'000)
    reader.error("matrix dimensions exceed the 1e7-entry limit");

  DenseMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!reader.next(line)) reader.error("expected " + std::to_string(rows) + " matrix rows");
    const auto toks = tokens_of(line);
    if (static_cast<int>(toks.size()) != cols)
      reader.error("expected " + std::to_string(cols) + " values, got " +
                   std::to_string(toks.size()));
    for (int j = 0; j < cols; ++j) m(i, j) = parse_value(toks[static_cast<std::size_t>(j)], reader);
  }
  return m;
}

Vector parse_vector(std::istream& in, const std::string& origin) {
  LineReader reader{in, origin};
  std::string line;
  if (!reader.next(line)) reader.error("missing vector header 'len'");
  const auto header = tokens_of(line);
  if (header.size() != 1) reader.error("vector header must be a single length");
  const int len = parse_positive_int(header[0], reader, "length");

  Vector v;
  v.reserve(static_cast<std::size_t>(len));
  while (static_cast<int>(v.size()) < len) {
    if (!reader.next(line))
      reader.error("expected " + std::to_string(len) + " values, got " +
                   std::to_string(v.size()));
    for (const auto& tok : tokens_of(line)) {
      if (static_cast<int>(v.size()) == len) reader.error("more values than declared length");
      v.push_back(parse_value(tok, reader));
    }
  }
  return v;
}

DenseMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, path + ": cannot open for reading");
  return parse_matrix(in, path);
}

Vector read_vector_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, path + ": cannot open for reading");
  return parse_vector(in, path);
}

std::string matrix_to_text(const DenseMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += format_double17(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string vector_to_text(const Vector& v) {
  std::string out = std::to_string(v.size()) + "\n";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += format_double17(v[i]);
  }
  out += '\n';
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) fail(Errc::invalid_argument, tmp + ": cannot open for writing");
    out << content;
    if (!out.flush()) fail(Errc::invalid_argument, tmp + ": write failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    fail(Errc::invalid_argument, path + ": rename failed");
}

void write_matrix_file(const std::string& path, const DenseMatrix& m) {
  write_file_atomic(path, matrix_to_text(m));
}

void write_vector_file(const std::string& path, const Vector& v) {
  write_file_atomic(path, vector_to_text(v));
}

}  // namespace riclab
