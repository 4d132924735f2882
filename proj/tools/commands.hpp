#ifndef SPREADCODE_TOOLS_COMMANDS_HPP
#define SPREADCODE_TOOLS_COMMANDS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iomanip>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spreadcode/spreadcode.hpp"

/// Command bodies for the spreadcode CLI, kept free of argument parsing so
/// they can be driven from tests with string streams.
namespace spreadcode::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kDecodeFailure = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CodeOptions {
  std::uint32_t q = 2;
  std::size_t k = 2;
  std::size_t r = 2;
  std::vector<std::uint32_t> p;  ///< p_0 .. p_{k-1}, optionally followed by the leading 1
};

inline SpreadCode make_code(const CodeOptions& o) {
  if (o.q < 2 || !is_prime(o.q)) throw UsageError("q must be prime, got " + std::to_string(o.q));
  if (o.q >= (1u << 16)) throw UsageError("q must be below 65536");
  if (o.k < 2) throw UsageError("k must be at least 2");
  if (o.r < 2) throw UsageError("r must be at least 2");
  std::optional<poly::Poly> modulus;
  if (!o.p.empty()) {
    poly::Poly m = o.p;
    if (m.size() == o.k) m.push_back(1);
    if (m.size() != o.k + 1 || m.back() != 1)
      throw UsageError("--p takes k coefficients p_0 .. p_{k-1} of a monic polynomial");
    for (auto c : m)
      if (c >= o.q) throw UsageError("--p coefficient out of range: " + std::to_string(c));
    if (!poly::is_irreducible(m, o.q)) throw UsageError("--p is not irreducible over F_q");
    modulus = std::move(m);
  }
  try {
    return SpreadCode(o.q, o.k, o.r, std::move(modulus));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

/// (q^{rk} - 1) / (q^k - 1) without overflow.
inline boost::multiprecision::cpp_int code_size(std::uint32_t q, std::size_t k, std::size_t r) {
  using boost::multiprecision::cpp_int;
  const cpp_int qk = boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(k));
  return (boost::multiprecision::pow(qk, static_cast<unsigned>(r)) - 1) / (qk - 1);
}

inline int cmd_params(const CodeOptions& o, std::ostream& out) {
  const SpreadCode code = make_code(o);
  out << text::format_header(code) << '\n';
  out << "|S|=" << code_size(code.q(), code.k(), code.r()) << " dmin=" << code.min_distance() << '\n';
  return kOk;
}

/// Point file in, subspace file out.
inline int cmd_encode(const CodeOptions& o, std::istream& in, std::ostream& out) {
  const SpreadCode code = make_code(o);
  const auto point = text::read_point(in, code);
  const ExtField& f = code.ext_field();
  bool nonzero = false;
  for (const auto& v : point) nonzero = nonzero || !f.is_zero(v);
  if (!nonzero) throw text::ParseError(1, "the all-zero point is not a codeword");
  text::write_subspace(out, code, code.encode(point).subspace);
  return kOk;
}

/// Subspace file in; on success the codeword is written as a subspace file
/// preceded by a comment carrying its projective point.
inline int cmd_decode(std::istream& in, std::ostream& out, std::ostream& err) {
  const auto file = text::read_subspace(in);
  const SpreadCode code = make_code({file.header.q, file.header.k, file.header.r, file.header.modulus});
  const Subspace received = Subspace::span(file.generators);
  const DecodeOutcome outcome = decode(received, code);
  if (!outcome.ok()) {
    err << "decoding failed: " << to_string(outcome.status) << '\n';
    return kDecodeFailure;
  }
  out << "# point:";
  for (const auto& v : outcome.codeword->point) out << " [" << text::format(v) << ']';
  out << '\n';
  text::write_subspace(out, code, outcome.codeword->subspace);
  return kOk;
}

struct SimulateOptions {
  std::size_t trials = 100;
  std::vector<std::size_t> errors{0};
  std::vector<std::size_t> erasures{0};
  std::uint64_t seed = 1;
};

inline void write_stats(std::ostream& out, const std::vector<CellStats>& cells) {
  out << "# e eps trials successes failures mean_ops max_ops\n";
  for (const auto& c : cells)
    out << c.spec.errors << ' ' << c.spec.erasures << ' ' << c.trials << ' ' << c.successes << ' ' << c.failures
        << ' ' << std::fixed << std::setprecision(2) << c.mean_ops << ' ' << c.max_ops << '\n';
}

inline int cmd_simulate(const CodeOptions& o, const SimulateOptions& s, std::ostream& out) {
  const SpreadCode code = make_code(o);
  if (s.trials == 0) throw UsageError("--trials must be positive");
  std::vector<ChannelSpec> grid;
  for (auto e : s.errors)
    for (auto eps : s.erasures) {
      if (eps > code.k()) throw UsageError("erasures cannot exceed k");
      if (e > code.n() - code.k()) throw UsageError("errors cannot exceed n - k");
      grid.push_back({e, eps});
    }
  write_stats(out, simulate(code, s.trials, grid, s.seed));
  return kOk;
}

struct BenchOptions {
  std::uint32_t q = 2;
  std::vector<std::size_t> ks{3, 5, 7, 9};
  std::size_t r = 2;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
};

/// Extension-field operation counts of decode at the edge of the unique
/// decoding radius: t = floor((k-1)/2) erasures and t errors, so d = 2t < k
/// and the received space keeps dimension k.
inline int cmd_bench(const BenchOptions& b, std::ostream& out) {
  if (b.trials == 0) throw UsageError("--trials must be positive");
  out << "# q k r trials mean_ops max_ops mean_ops/((n-k)k^3)\n";
  for (std::size_t k : b.ks) {
    const SpreadCode code = make_code({b.q, k, b.r, {}});
    const std::size_t t = (k - 1) / 2;
    const auto cells = simulate(code, b.trials, {{t, t}}, b.seed);
    const double scale = static_cast<double>((code.n() - k) * k * k * k);
    out << b.q << ' ' << k << ' ' << b.r << ' ' << b.trials << ' ' << std::fixed << std::setprecision(2)
        << cells[0].mean_ops << ' ' << cells[0].max_ops << ' ' << std::setprecision(4) << cells[0].mean_ops / scale
        << '\n';
  }
  return kOk;
}

}  // namespace spreadcode::cli

#endif  // SPREADCODE_TOOLS_COMMANDS_HPP
