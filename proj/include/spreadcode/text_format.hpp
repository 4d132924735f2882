#ifndef SPREADCODE_TEXT_FORMAT_HPP
#define SPREADCODE_TEXT_FORMAT_HPP

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spreadcode/spread_code.hpp"

/// Line-oriented text formats.
///
///   element   F_q: one base-q digit. F_{q^k}: k digits, lowest coefficient first.
///   matrix    "rows cols", then one line per row of element serializations.
///   header    "q k r p_0 p_1 ... p_{k-1}" (p monic, leading 1 omitted).
///   subspace  header line followed by a matrix over F_q with rk columns.
///   point     r coordinates of k digits each, or r prime-field digits.
///
/// Blank lines and lines starting with '#' are ignored when reading.
namespace spreadcode::text {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Whitespace tokenizer over significant lines, keeping line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) {
    std::string raw;
    std::size_t no = 0;
    while (std::getline(in, raw)) {
      ++no;
      std::istringstream ls(raw);
      std::vector<std::string> toks;
      for (std::string t; ls >> t;) toks.push_back(t);
      if (toks.empty() || toks.front().front() == '#') continue;
      lines_.push_back({no, std::move(toks)});
    }
  }

  bool done() const { return pos_ == lines_.size(); }
  std::size_t line_number() const { return done() ? (lines_.empty() ? 1 : lines_.back().number + 1) : lines_[pos_].number; }

  std::vector<std::uint64_t> next_line(const char* what) {
    if (done()) throw ParseError(line_number(), std::string("unexpected end of input, expected ") + what);
    const auto& l = lines_[pos_++];
    std::vector<std::uint64_t> out;
    for (const auto& t : l.tokens) out.push_back(parse_number(l.number, t));
    return out;
  }

  /// All remaining tokens, flattened.
  std::vector<std::uint64_t> rest() {
    std::vector<std::uint64_t> out;
    while (!done()) {
      auto l = next_line("tokens");
      out.insert(out.end(), l.begin(), l.end());
    }
    return out;
  }

 private:
  struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
  };

  static std::uint64_t parse_number(std::size_t line, const std::string& t) {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 18)
      throw ParseError(line, "not a non-negative integer: '" + t + "'");
    return std::stoull(t);
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

inline std::string format(const Residue& a) { return std::to_string(a.value); }

inline std::string format(const ExtElement& a) {
  std::string s;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(a.coeffs[i]);
  }
  return s;
}

inline ExtElement parse_element(const ExtField& f, const std::string& s) {
  std::istringstream in(s);
  LineReader reader(in);
  auto digits = reader.rest();
  if (digits.size() != f.degree()) throw ParseError(1, "expected " + std::to_string(f.degree()) + " digits");
  std::vector<std::uint32_t> c;
  for (auto d : digits) {
    if (d >= f.base().characteristic()) throw ParseError(1, "digit out of range: " + std::to_string(d));
    c.push_back(static_cast<std::uint32_t>(d));
  }
  return f.from_coeffs(std::move(c));
}

template <Field F>
void write_matrix(std::ostream& out, const Matrix<F>& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << format(m(i, j));
    out << '\n';
  }
}

inline Matrix<PrimeField> read_matrix(LineReader& in, const PrimeField& f) {
  const std::size_t header_line = in.line_number();
  const auto dims = in.next_line("matrix dimensions");
  if (dims.size() != 2) throw ParseError(header_line, "expected 'rows cols'");
  Matrix<PrimeField> m(f, dims[0], dims[1]);
  for (std::size_t i = 0; i < dims[0]; ++i) {
    const std::size_t no = in.line_number();
    const auto row = in.next_line("matrix row");
    if (row.size() != dims[1])
      throw ParseError(no, "expected " + std::to_string(dims[1]) + " entries, found " + std::to_string(row.size()));
    for (std::size_t j = 0; j < dims[1]; ++j) {
      if (row[j] >= f.characteristic()) throw ParseError(no, "entry out of range: " + std::to_string(row[j]));
      m(i, j) = {static_cast<std::uint32_t>(row[j])};
    }
  }
  return m;
}

struct CodeHeader {
  std::uint32_t q = 0;
  std::size_t k = 0;
  std::size_t r = 0;
  poly::Poly modulus;  ///< full monic coefficient vector
};

inline std::string format_header(const SpreadCode& code) {
  std::string s = std::to_string(code.q()) + ' ' + std::to_string(code.k()) + ' ' + std::to_string(code.r());
  for (std::size_t i = 0; i < code.k(); ++i) s += ' ' + std::to_string(code.modulus()[i]);
  return s;
}

inline CodeHeader read_header(LineReader& in) {
  const std::size_t no = in.line_number();
  const auto v = in.next_line("code header");
  if (v.size() < 3) throw ParseError(no, "expected 'q k r p_0 ... p_{k-1}'");
  CodeHeader h{static_cast<std::uint32_t>(v[0]), v[1], v[2], {}};
  if (v.size() != 3 + h.k) throw ParseError(no, "expected " + std::to_string(h.k) + " modulus coefficients");
  for (std::size_t i = 0; i < h.k; ++i) {
    if (v[3 + i] >= h.q) throw ParseError(no, "modulus coefficient out of range");
    h.modulus.push_back(static_cast<std::uint32_t>(v[3 + i]));
  }
  h.modulus.push_back(1);
  return h;
}

inline void write_subspace(std::ostream& out, const SpreadCode& code, const Subspace& s) {
  out << format_header(code) << '\n';
  write_matrix(out, s.basis());
}

struct SubspaceFile {
  CodeHeader header;
  Matrix<PrimeField> generators;
};

inline SubspaceFile read_subspace(std::istream& is) {
  LineReader in(is);
  const std::size_t header_line = in.line_number();
  CodeHeader h = read_header(in);
  if (!is_prime(h.q)) throw ParseError(header_line, "q is not prime");
  if (h.q >= (1u << 16)) throw ParseError(header_line, "q is too large");
  const std::size_t dims_line = in.line_number();
  Matrix<PrimeField> m = read_matrix(in, PrimeField(h.q));
  if (m.cols() != h.k * h.r) throw ParseError(dims_line, "matrix must have r*k columns");
  if (!in.done()) throw ParseError(in.line_number(), "trailing content");
  return {std::move(h), std::move(m)};
}

inline std::vector<ExtElement> read_point(std::istream& is, const SpreadCode& code) {
  LineReader in(is);
  const std::size_t first = in.line_number();
  const auto digits = in.rest();
  const ExtField& f = code.ext_field();
  const std::size_t k = code.k(), r = code.r();
  if (digits.size() != r && digits.size() != r * k)
    throw ParseError(first, "expected " + std::to_string(r * k) + " digits (or " + std::to_string(r) +
                                " prime-field coordinates), found " + std::to_string(digits.size()));
  for (auto d : digits)
    if (d >= code.q()) throw ParseError(first, "digit out of range: " + std::to_string(d));
  std::vector<ExtElement> point;
  const std::size_t width = digits.size() == r ? 1 : k;
  for (std::size_t i = 0; i < r; ++i) {
    ExtElement e = f.zero();
    for (std::size_t j = 0; j < width; ++j) e.coeffs[j] = static_cast<std::uint32_t>(digits[i * width + j]);
    point.push_back(std::move(e));
  }
  return point;
}

}  // namespace spreadcode::text

#endif  // SPREADCODE_TEXT_FORMAT_HPP
