#ifndef SPREADCODE_CHANNEL_HPP
#define SPREADCODE_CHANNEL_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spreadcode/decoder.hpp"
#include "spreadcode/op_counter.hpp"
#include "spreadcode/spread_code.hpp"

namespace spreadcode {

/// Drop `erasures` dimensions of the codeword and adjoin `errors` dimensions
/// from outside it: d(R, C) = errors + erasures and dim R = k - erasures + errors.
struct ChannelSpec {
  std::size_t errors = 0;
  std::size_t erasures = 0;
  friend auto operator<=>(const ChannelSpec&, const ChannelSpec&) = default;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Stream for one simulation trial. The seed is the SplitMix64 chain
/// h0 = sm(seed), h1 = sm(h0 ^ errors), h2 = sm(h1 ^ erasures), h3 = sm(h2 ^ trial),
/// which feeds std::mt19937_64. Any single trial can be replayed from
/// (seed, errors, erasures, trial).
inline std::mt19937_64 trial_rng(std::uint64_t seed, const ChannelSpec& spec, std::uint64_t trial) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ spec.errors);
  h = splitmix64(h ^ spec.erasures);
  h = splitmix64(h ^ trial);
  return std::mt19937_64(h);
}

template <class Rng>
Residue random_residue(const PrimeField& f, Rng& rng) {
  return {static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint32_t>(0, f.characteristic() - 1)(rng))};
}

template <class Rng>
Matrix<PrimeField> random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix<PrimeField> m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_residue(f, rng);
  return m;
}

template <class Rng>
Matrix<PrimeField> random_full_rank(const PrimeField& f, std::size_t rows, std::size_t cols, Rng& rng) {
  if (rows > cols) throw std::invalid_argument("random_full_rank: rows exceed cols");
  while (true) {
    auto m = random_matrix(f, rows, cols, rng);
    if (rank(m) == rows) return m;
  }
}

template <class Rng>
ExtElement random_ext(const ExtField& f, Rng& rng) {
  ExtElement e = f.zero();
  for (auto& c : e.coeffs) c = random_residue(f.base(), rng).value;
  return e;
}

/// Uniform codeword: a uniform nonzero vector of F_{q^k}^r lands on each
/// projective point equally often.
template <class Rng>
Codeword random_codeword(const SpreadCode& code, Rng& rng) {
  const ExtField& f = code.ext_field();
  while (true) {
    std::vector<ExtElement> v;
    bool nonzero = false;
    for (std::size_t i = 0; i < code.r(); ++i) {
      v.push_back(random_ext(f, rng));
      nonzero = nonzero || !f.is_zero(v.back());
    }
    if (nonzero) return code.encode(std::move(v));
  }
}

inline constexpr int kChannelRetryBudget = 100;

/// R = H + E with H a random (k - erasures)-subspace of C and E spanned by
/// `errors` random vectors; resampled until d(R, C) = errors + erasures.
template <class Rng>
ReceivedSpace corrupt(const Codeword& c, const ChannelSpec& spec, const SpreadCode& code, Rng& rng) {
  const PrimeField& f = code.base_field();
  const std::size_t k = code.k();
  if (spec.erasures > k) throw std::domain_error("corrupt: more erasures than codeword dimensions");
  if (spec.errors > code.n() - k) throw std::domain_error("corrupt: errors exceed the ambient codimension");
  const std::size_t target_dim = k - spec.erasures + spec.errors;
  for (int attempt = 0; attempt < kChannelRetryBudget; ++attempt) {
    Matrix<PrimeField> kept(f, 0, code.n());
    if (spec.erasures < k) kept = matmul(random_full_rank(f, k - spec.erasures, k, rng), c.subspace.basis());
    const auto noise = random_matrix(f, spec.errors, code.n(), rng);
    Subspace r = Subspace::span(vstack(kept, noise));
    if (r.dim() == target_dim && subspace_distance(r, c.subspace) == spec.errors + spec.erasures)
      return ReceivedSpace::from_subspace(std::move(r), k);
  }
  throw std::runtime_error("corrupt: retry budget exhausted");
}

struct CellStats {
  ChannelSpec spec;
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t failures = 0;
  double mean_ops = 0.0;  ///< mean F_{q^k} operations per decode
  std::uint64_t max_ops = 0;
  friend bool operator==(const CellStats&, const CellStats&) = default;
};

/// Runs `trials` encode-corrupt-decode rounds per cell. A success is a decode
/// returning the transmitted codeword. Cells are reported sorted by
/// (errors, erasures).
inline std::vector<CellStats> simulate(const SpreadCode& code, std::size_t trials, std::vector<ChannelSpec> grid,
                                       std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("simulate: trials must be positive");
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::vector<CellStats> out;
  for (const auto& spec : grid) {
    CellStats cell{spec, trials};
    std::uint64_t total_ops = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      auto rng = trial_rng(seed, spec, t);
      const Codeword sent = random_codeword(code, rng);
      const ReceivedSpace received = corrupt(sent, spec, code, rng);
      ScopedOpCounter counter;
      const DecodeOutcome outcome = decode(received, code);
      const std::uint64_t ops = counter.elapsed().ext_ops();
      total_ops += ops;
      cell.max_ops = std::max(cell.max_ops, ops);
      if (outcome.ok() && outcome.codeword->subspace == sent.subspace) ++cell.successes;
    }
    cell.failures = trials - cell.successes;
    cell.mean_ops = static_cast<double>(total_ops) / static_cast<double>(trials);
    out.push_back(cell);
  }
  return out;
}

}  // namespace spreadcode

#endif  // SPREADCODE_CHANNEL_HPP
