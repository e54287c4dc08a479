#pragma once

// File formats.
//
// Binary matrix (little-endian):
//   bytes 0-3   magic "PDMX"
//   bytes 4-5   uint16 version = 1
//   bytes 6-7   uint16 n (qubits)
//   then 4^n entries row-major, each as two IEEE-754 doubles (re, im)
//
// Text matrix: a line with the dimension N (a power of two), then N lines of N
// whitespace-separated complex literals "re+imj", "re-imj" or bare "re".
//
// Term list CSV: header "label,r,s,re,im", then one line per term.

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "pauli.hpp"

namespace pauli_fwht {

enum class MatrixFormat { binary, text };

inline constexpr std::array<char, 4> kMatrixMagic = {'P', 'D', 'M', 'X'};
inline constexpr std::uint16_t kMatrixVersion = 1;
inline constexpr std::string_view kTermsHeader = "label,r,s,re,im";

/// Shortest decimal form that reads back to the same double.
inline std::string format_double(double x) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) throw Error("cannot format floating-point value");
  return std::string(buf.data(), end);
}

/// Parses a complete decimal float. An optional leading '+' is accepted.
/// Returns nullopt on malformed or non-finite input.
inline std::optional<double> parse_double(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty() || text.front() == '+') return std::nullopt;
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

/// Parses "re+imj", "re-imj", "imj" or "re".
inline std::optional<Complex> parse_complex(std::string_view token) {
  if (token.empty()) return std::nullopt;
  if (token.back() != 'j') {
    const auto re = parse_double(token);
    if (!re) return std::nullopt;
    return Complex{*re, 0.0};
  }
  const std::string_view body = token.substr(0, token.size() - 1);
  // The sign that starts the imaginary part is the last '+'/'-' that is not
  // the leading sign and not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    const auto im = parse_double(body);
    if (!im) return std::nullopt;
    return Complex{0.0, *im};
  }
  const auto re = parse_double(body.substr(0, split));
  const auto im = parse_double(body.substr(split));
  if (!re || !im) return std::nullopt;
  return Complex{*re, *im};
}

/// "re+imj" / "re-imj" with shortest round-tripping components.
inline std::string format_complex(Complex z) {
  std::string out = format_double(z.real());
  if (std::signbit(z.imag())) {
    out += '-';
    out += format_double(-z.imag());
  } else {
    out += '+';
    out += format_double(z.imag());
  }
  out += 'j';
  return out;
}

namespace detail {

inline void put_u16(std::ostream& out, std::uint16_t v) {
  const char bytes[2] = {static_cast<char>(v & 0xFF), static_cast<char>(v >> 8)};
  out.write(bytes, 2);
}

inline std::uint16_t get_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

inline void put_f64(char* dst, double x) {
  const auto bits = std::bit_cast<std::uint64_t>(x);
  for (int b = 0; b < 8; ++b) dst[b] = static_cast<char>((bits >> (8 * b)) & 0xFF);
}

inline double get_f64(const unsigned char* p) {
  std::uint64_t bits = 0;
  for (int b = 0; b < 8; ++b) bits |= std::uint64_t{p[b]} << (8 * b);
  return std::bit_cast<double>(bits);
}

inline void check_stream(const std::ostream& out) {
  if (!out) throw IoError("write failed");
}

inline ComplexMatrix read_binary_matrix(std::istream& in) {
  unsigned char header[8];
  in.read(reinterpret_cast<char*>(header), sizeof header);
  if (in.gcount() != sizeof header) throw ParseError("truncated matrix header");
  if (std::memcmp(header, kMatrixMagic.data(), 4) != 0) throw ParseError("bad magic, expected PDMX");
  const std::uint16_t version = get_u16(header + 4);
  if (version != kMatrixVersion) {
    throw ParseError("unsupported matrix file version " + std::to_string(version));
  }
  const std::uint16_t n = get_u16(header + 6);
  if (n > kMaxQubits) throw ParseError("qubit count " + std::to_string(n) + " out of range");

  ComplexMatrix m(n);
  constexpr std::size_t kChunkEntries = 4096;
  std::vector<unsigned char> buf(16 * kChunkEntries);
  std::size_t done = 0;
  while (done < m.size()) {
    const std::size_t count = std::min(kChunkEntries, m.size() - done);
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(16 * count));
    if (static_cast<std::size_t>(in.gcount()) != 16 * count) {
      throw ParseError("truncated payload: expected " + std::to_string(16 * m.size()) + " bytes");
    }
    for (std::size_t k = 0; k < count; ++k) {
      const double re = get_f64(buf.data() + 16 * k);
      const double im = get_f64(buf.data() + 16 * k + 8);
      if (!std::isfinite(re) || !std::isfinite(im)) {
        throw ParseError("non-finite entry at index " + std::to_string(done + k));
      }
      m.data()[done + k] = {re, im};
    }
    done += count;
  }
  if (in.peek() != std::istream::traits_type::eof()) {
    throw ParseError("trailing bytes after matrix payload");
  }
  return m;
}

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline ComplexMatrix read_text_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_nonblank = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!trim(line).empty()) return true;
    }
    return false;
  };

  if (!next_nonblank()) throw ParseError("empty matrix file");
  const std::string_view dim_text = trim(line);
  std::uint64_t dim = 0;
  const auto [end, ec] = std::from_chars(dim_text.data(), dim_text.data() + dim_text.size(), dim);
  if (ec != std::errc{} || end != dim_text.data() + dim_text.size()) {
    throw ParseError("expected matrix dimension, got '" + std::string(dim_text) + "'", line_no, 1);
  }
  if (!is_power_of_two(dim)) {
    throw ParseError("matrix dimension " + std::to_string(dim) + " is not a power of two", line_no, 1);
  }
  if (log2_exact(dim) > kMaxQubits) {
    throw ParseError("matrix dimension " + std::to_string(dim) + " is too large", line_no, 1);
  }

  ComplexMatrix m = ComplexMatrix::with_dimension(dim);
  for (std::size_t row = 0; row < dim; ++row) {
    if (!next_nonblank()) {
      throw ParseError("expected " + std::to_string(dim) + " rows, found " + std::to_string(row),
                       line_no + 1);
    }
    std::size_t col = 0;
    std::size_t pos = 0;
    while (true) {
      pos = line.find_first_not_of(" \t\r", pos);
      if (pos == std::string::npos) break;
      const std::size_t stop = std::min(line.find_first_of(" \t\r", pos), line.size());
      const std::string_view token(line.data() + pos, stop - pos);
      if (col >= dim) throw ParseError("too many entries in row", line_no, pos + 1);
      const auto z = parse_complex(token);
      if (!z) {
        throw ParseError("cannot parse complex literal '" + std::string(token) + "'", line_no, pos + 1);
      }
      m(row, col++) = *z;
      pos = stop;
    }
    if (col != dim) {
      throw ParseError("row has " + std::to_string(col) + " entries, expected " + std::to_string(dim),
                       line_no);
    }
  }
  if (next_nonblank()) throw ParseError("unexpected content after the last row", line_no);
  return m;
}

}  // namespace detail

inline ComplexMatrix read_matrix(std::istream& in, MatrixFormat format) {
  return format == MatrixFormat::binary ? detail::read_binary_matrix(in)
                                        : detail::read_text_matrix(in);
}

template <class Tag>
void write_matrix(const SquareMatrix<Tag>& m, std::ostream& out, MatrixFormat format) {
  if (format == MatrixFormat::binary) {
    out.write(kMatrixMagic.data(), 4);
    detail::put_u16(out, kMatrixVersion);
    detail::put_u16(out, static_cast<std::uint16_t>(m.qubits()));
    constexpr std::size_t kChunkEntries = 4096;
    std::vector<char> buf(16 * kChunkEntries);
    for (std::size_t done = 0; done < m.size();) {
      const std::size_t count = std::min(kChunkEntries, m.size() - done);
      for (std::size_t k = 0; k < count; ++k) {
        detail::put_f64(buf.data() + 16 * k, m.data()[done + k].real());
        detail::put_f64(buf.data() + 16 * k + 8, m.data()[done + k].imag());
      }
      out.write(buf.data(), static_cast<std::streamsize>(16 * count));
      done += count;
    }
  } else {
    out << m.dim() << '\n';
    for (std::size_t r = 0; r < m.dim(); ++r) {
      for (std::size_t c = 0; c < m.dim(); ++c) {
        if (c) out << ' ';
        out << format_complex(m(r, c));
      }
      out << '\n';
    }
  }
  out.flush();
  detail::check_stream(out);
}

inline void write_terms(const TermList& list, std::ostream& out) {
  out << kTermsHeader << '\n';
  for (const PauliTerm& t : list.terms) {
    out << label_of(t.r, t.s, list.n) << ',' << t.r << ',' << t.s << ',' << format_double(t.coeff.real())
        << ',' << format_double(t.coeff.imag()) << '\n';
  }
  out.flush();
  detail::check_stream(out);
}

/// Reads a term CSV. The qubit count comes from the labels; a header-only
/// file has no labels, so `qubits` supplies it (default 0). Terms are
/// returned in (r, s) order.
inline TermList read_terms(std::istream& in, std::optional<unsigned> qubits = std::nullopt) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty term file", 1);
  ++line_no;
  if (detail::trim(line) != kTermsHeader) {
    throw ParseError("expected header '" + std::string(kTermsHeader) + "'", line_no, 1);
  }

  TermList list;
  std::optional<unsigned> n = qubits;
  std::set<std::pair<BitIndex, BitIndex>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = detail::trim(line);
    if (text.empty()) continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      fields.push_back(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 5) {
      throw ParseError("expected 5 comma-separated fields, found " + std::to_string(fields.size()),
                       line_no);
    }

    ParsedLabel parsed;
    try {
      parsed = parse_label(fields[0]);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    auto parse_index = [&](std::string_view f, const char* name) {
      BitIndex v = 0;
      const auto [end, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (f.empty() || ec != std::errc{} || end != f.data() + f.size()) {
        throw ParseError(std::string("malformed ") + name + " '" + std::string(f) + "'", line_no);
      }
      return v;
    };
    const BitIndex r = parse_index(fields[1], "r");
    const BitIndex s = parse_index(fields[2], "s");
    const auto re = parse_double(fields[3]);
    const auto im = parse_double(fields[4]);
    if (!re || !im) throw ParseError("malformed coefficient", line_no);

    if (parsed.r != r || parsed.s != s) {
      throw ParseError("label '" + std::string(fields[0]) + "' does not match r=" + std::to_string(r) +
                           ", s=" + std::to_string(s),
                       line_no);
    }
    if (n && *n != parsed.n) {
      throw ParseError("label '" + std::string(fields[0]) + "' has " + std::to_string(parsed.n) +
                           " qubits, expected " + std::to_string(*n),
                       line_no);
    }
    n = parsed.n;
    if (!seen.emplace(r, s).second) {
      throw ParseError("duplicate term (" + std::to_string(r) + "," + std::to_string(s) + ")", line_no);
    }
    list.terms.push_back({r, s, Complex{*re, *im}, parsed.n});
  }

  list.n = n.value_or(0);
  check_qubits(list.n);
  std::sort(list.terms.begin(), list.terms.end(), [](const PauliTerm& a, const PauliTerm& b) {
    return std::pair(a.r, a.s) < std::pair(b.r, b.s);
  });
  return list;
}

}  // namespace pauli_fwht
