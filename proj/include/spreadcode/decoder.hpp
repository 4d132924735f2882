#ifndef SPREADCODE_DECODER_HPP
#define SPREADCODE_DECODER_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spreadcode/matrix.hpp"
#include "spreadcode/nondiagonal.hpp"
#include "spreadcode/spread_code.hpp"

namespace spreadcode {

enum class DecodeStatus {
  kDecoded,
  kNoCodewordWithinRadius,  ///< no codeword at distance < k
  kAmbiguousCandidates,     ///< more than one root passed the rank test
  kDistanceCheckFailed,     ///< a candidate was produced but is not within distance < k
  kInvalidInput,            ///< received dimension is 0 or exceeds k
};

inline const char* to_string(DecodeStatus s) {
  switch (s) {
    case DecodeStatus::kDecoded: return "decoded";
    case DecodeStatus::kNoCodewordWithinRadius: return "no codeword within distance < k";
    case DecodeStatus::kAmbiguousCandidates: return "ambiguous candidates";
    case DecodeStatus::kDistanceCheckFailed: return "distance check failed";
    case DecodeStatus::kInvalidInput: return "invalid input";
  }
  return "unknown";
}

/// Which branch of the pairwise decoder produced the outcome.
enum class DecodePath { kNone, kMembership, kSmallRankBlock, kFast, kGeneral };

/// A codeword of S_2: rowsp(0 | I) when at_infinity, else rowsp(I | phi(mu)).
struct PairDecision {
  bool at_infinity = false;
  ExtElement mu;
  friend bool operator==(const PairDecision&, const PairDecision&) = default;
};

struct PairOutcome {
  DecodeStatus status = DecodeStatus::kNoCodewordWithinRadius;
  std::optional<PairDecision> decision;
  DecodePath path = DecodePath::kNone;
  bool ok() const { return status == DecodeStatus::kDecoded; }
};

struct DecodeOutcome {
  DecodeStatus status = DecodeStatus::kNoCodewordWithinRadius;
  std::optional<Codeword> codeword;
  bool ok() const { return status == DecodeStatus::kDecoded; }
};

/// A received space split into r column blocks R_1 .. R_r of its RREF basis.
struct ReceivedSpace {
  Subspace space;
  std::vector<Matrix<PrimeField>> blocks;

  static ReceivedSpace from_subspace(Subspace s, std::size_t k) {
    if (s.ambient() % k != 0) throw std::invalid_argument("ambient dimension is not a multiple of k");
    std::vector<Matrix<PrimeField>> blocks;
    for (std::size_t i = 0; i < s.ambient() / k; ++i) blocks.push_back(column_block(s.basis(), i * k, k));
    return {std::move(s), std::move(blocks)};
  }

  std::size_t dim() const { return space.dim(); }
};

/// R(x) = A * diag(x, x^{[1]}, ..., x^{[k-1]}) - B over F_{q^k}.
struct AffinePencil {
  Matrix<ExtField> a;
  Matrix<ExtField> b;

  Matrix<ExtField> evaluate(const ExtElement& x) const {
    const ExtField& f = a.field();
    std::vector<ExtElement> conj;
    for (std::size_t j = 0; j < a.cols(); ++j) conj.push_back(f.frobenius(x, j));
    Matrix<ExtField> out(f, a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const auto& aij = a(i, j);
        ExtElement term = f.is_zero(aij) ? f.zero() : f.is_one(aij) ? conj[j] : f.mul(aij, conj[j]);
        out(i, j) = f.sub(term, b(i, j));
      }
    return out;
  }

  /// R(0) = -B.
  Matrix<ExtField> constant_term() const {
    Matrix<ExtField> out = b;
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = b.field().neg(b(i, j));
    return out;
  }
};

struct RootCandidate {
  std::size_t column;  ///< 0-based column c of the diagonal factor x^{[c]}
  ExtElement mu;
};

/// Roots of the minor [J'+K; L'+K]_{R(x)} read off from its factorization.
/// For c in K the factor is x^{[c]} + [J'+(c); L'+(c)]_{R(0)} / [J'; L']_{R(0)},
/// so the root is the negated ratio raised to the power q^{k-c}.
inline std::vector<RootCandidate> candidate_roots(const AffinePencil& pencil, const IndexTuple& j_prime,
                                                  const IndexTuple& l_prime, const IndexTuple& k_set) {
  const ExtField& f = pencil.a.field();
  const std::size_t k = f.degree();
  const Matrix<ExtField> r0 = pencil.constant_term();
  const ExtElement denom = minor(r0, j_prime, l_prime);
  if (f.is_zero(denom)) throw std::logic_error("candidate_roots: leading minor vanishes");
  const ExtElement denom_inv = f.inv(denom);
  std::vector<RootCandidate> out;
  for (std::size_t c : k_set) {
    const ExtElement num = minor(r0, append(j_prime, c), append(l_prime, c));
    const ExtElement y = f.neg(f.mul(num, denom_inv));
    out.push_back({c, f.frobenius(y, (k - c) % k)});
  }
  return out;
}

/// Intermediate state of the general pairwise path, for inspection.
struct GeneralPathTrace {
  std::optional<AffinePencil> pencil;
  std::size_t dim = 0;
  std::size_t rank_r1 = 0;
  IndexTuple reduced_index;  ///< I'
  IndexTuple j_prime;
  IndexTuple l_prime;
  IndexTuple k_set;
  std::vector<RootCandidate> candidates;
  std::size_t passing = 0;  ///< distinct candidates passing the rank test
};

enum class PathPolicy { kAuto, kGeneralOnly };

namespace detail {

// 2 * rank <= dim - 1, i.e. rank <= (dim - 1) / 2.
inline bool small_rank(std::size_t rk, std::size_t dim) { return 2 * rk < dim; }

inline Subspace pair_codeword(const PairDecision& d, const SpreadCode& code) {
  const PrimeField& f = code.base_field();
  const std::size_t k = code.k();
  if (d.at_infinity) return Subspace::span(hstack<PrimeField>({Matrix<PrimeField>(f, k, k), Matrix<PrimeField>::identity(f, k)}));
  return Subspace::span(hstack<PrimeField>({Matrix<PrimeField>::identity(f, k), code.phi(d.mu)}));
}

struct OrientedResult {
  DecodeStatus status;
  std::optional<ExtElement> mu;
  DecodePath path;
};

inline OrientedResult general_path(const Matrix<PrimeField>& r1, const Matrix<PrimeField>& r2, std::size_t dim,
                                   std::size_t rank_r1, const SpreadCode& code, GeneralPathTrace* trace) {
  const std::size_t k = code.k();
  const Matrix<ExtField>& s = code.diagonalizer();
  const auto ech = echelon(hstack<ExtField>({mixed_matmul(r1, s), mixed_matmul(r2, s)}));
  if (ech.pivot_cols.size() != dim) throw std::logic_error("general path: rank changed over F_{q^k}");
  for (std::size_t i = 0; i < rank_r1; ++i)
    if (ech.pivot_cols[i] != i) throw std::logic_error("general path: unexpected pivots in the R1 part");
  IndexTuple b_pivots;
  for (std::size_t i = rank_r1; i < dim; ++i) {
    if (ech.pivot_cols[i] < k) throw std::logic_error("general path: unexpected pivots in the R1 part");
    b_pivots.push_back(ech.pivot_cols[i] - k);
  }
  const Matrix<ExtField> reduced = top_rows(ech.reduced, dim);
  AffinePencil pencil{column_block(reduced, 0, k), column_block(reduced, k, k)};

  IndexTuple reduced_index;
  for (std::size_t c = 0; c < rank_r1; ++c)
    if (std::find(b_pivots.begin(), b_pivots.end(), c) == b_pivots.end()) reduced_index.push_back(c);

  const Matrix<ExtField> r0 = pencil.constant_term();
  const Matrix<ExtField> r0_reduced = submatrix(r0, reduced_index, reduced_index);
  IndexTuple j_prime, l_prime;
  if (!is_diagonal(r0_reduced)) {
    const auto mg = modified_gaussian(r0_reduced);
    for (auto i : mg.rows) j_prime.push_back(reduced_index[i]);
    for (auto i : mg.cols) l_prime.push_back(reduced_index[i]);
  }

  IndexTuple free;
  for (auto c : reduced_index)
    if (std::find(j_prime.begin(), j_prime.end(), c) == j_prime.end() &&
        std::find(l_prime.begin(), l_prime.end(), c) == l_prime.end())
      free.push_back(c);
  const long k_size = static_cast<long>((dim + 1) / 2) - static_cast<long>(dim) + static_cast<long>(rank_r1) -
                      static_cast<long>(j_prime.size());

  if (trace) {
    trace->pencil = pencil;
    trace->dim = dim;
    trace->rank_r1 = rank_r1;
    trace->reduced_index = reduced_index;
    trace->j_prime = j_prime;
    trace->l_prime = l_prime;
  }
  // Under unique decodability the off-diagonal rank of R'(0) is small enough
  // that K is nonempty and fits; otherwise no codeword is within reach.
  if (k_size <= 0 || static_cast<std::size_t>(k_size) > free.size())
    return {DecodeStatus::kNoCodewordWithinRadius, std::nullopt, DecodePath::kGeneral};
  IndexTuple k_set(free.begin(), free.begin() + k_size);

  auto candidates = candidate_roots(pencil, j_prime, l_prime, k_set);
  std::vector<ExtElement> passing;
  for (const auto& c : candidates) {
    if (std::find(passing.begin(), passing.end(), c.mu) != passing.end()) continue;
    if (small_rank(rank(pencil.evaluate(c.mu)), dim)) passing.push_back(c.mu);
  }
  if (trace) {
    trace->k_set = k_set;
    trace->candidates = candidates;
    trace->passing = passing.size();
  }
  if (passing.empty()) return {DecodeStatus::kNoCodewordWithinRadius, std::nullopt, DecodePath::kGeneral};
  if (passing.size() > 1) return {DecodeStatus::kAmbiguousCandidates, std::nullopt, DecodePath::kGeneral};
  return {DecodeStatus::kDecoded, passing.front(), DecodePath::kGeneral};
}

inline OrientedResult fast_path(const Matrix<PrimeField>& r1, const Matrix<PrimeField>& r2, const SpreadCode& code) {
  const ExtField& f = code.ext_field();
  const std::size_t k = code.k();
  // D = S^{-1} R1^{-1} R2 S; R(x) = diag(x^{[j]}) - D, so R(0) = -D.
  const Matrix<ExtField> d =
      matmul(code.diagonalizer_inverse(), mixed_matmul(matmul(inverse(r1), r2), code.diagonalizer()));
  const std::size_t h = (k - 1) / 2;
  const std::size_t s = rank(submatrix(d, iota_tuple(0, h), iota_tuple(k - h, h)));
  // Root of [(0)+J; (0)+L]_{R(x)} with J, L consecutive and disjoint; the x
  // term sits in column 0, so no Frobenius correction applies. Written in
  // terms of D the signs cancel.
  const IndexTuple rows = iota_tuple(1, s);
  const IndexTuple cols = iota_tuple(k - s, s);
  const ExtElement denom = minor(d, rows, cols);
  if (f.is_zero(denom)) return {DecodeStatus::kNoCodewordWithinRadius, std::nullopt, DecodePath::kFast};
  IndexTuple rows1{0}, cols1{0};
  rows1.insert(rows1.end(), rows.begin(), rows.end());
  cols1.insert(cols1.end(), cols.begin(), cols.end());
  const ExtElement mu = f.div(minor(d, rows1, cols1), denom);
  if (!small_rank(rank(sub(code.delta(mu), d)), k))
    return {DecodeStatus::kNoCodewordWithinRadius, std::nullopt, DecodePath::kFast};
  return {DecodeStatus::kDecoded, mu, DecodePath::kFast};
}

}  // namespace detail

/// Pairwise decoder for R1 invertible (k x k over F_q). Returns the unique
/// codeword rowsp(I | phi(mu)) within distance < k, if any.
inline PairOutcome decode2_fast(const Matrix<PrimeField>& r1, const Matrix<PrimeField>& r2, const SpreadCode& code) {
  const std::size_t k = code.k();
  if (r1.rows() != k || r1.cols() != k || r2.rows() != k || r2.cols() != k || rank(r1) != k)
    return {DecodeStatus::kInvalidInput, std::nullopt, DecodePath::kFast};
  auto res = detail::fast_path(r1, r2, code);
  if (!res.mu) return {res.status, std::nullopt, DecodePath::kFast};
  return {DecodeStatus::kDecoded, PairDecision{false, *res.mu}, DecodePath::kFast};
}

/// Minimum-distance decoder for S_2 = {rowsp(I | A)} ∪ {rowsp(0 | I)}.
/// R1 and R2 are the two k-column blocks of any generating matrix of the
/// received space. `trace`, when given, records the general path (in the
/// orientation in which it ran).
inline PairOutcome decode2(const Matrix<PrimeField>& r1_in, const Matrix<PrimeField>& r2_in, const SpreadCode& code,
                           PathPolicy policy = PathPolicy::kAuto, GeneralPathTrace* trace = nullptr) {
  const std::size_t k = code.k();
  if (r1_in.cols() != k || r2_in.cols() != k || r1_in.rows() != r2_in.rows())
    throw std::invalid_argument("decode2: blocks must be m x k with equal row counts");
  const Subspace received = Subspace::span(hstack<PrimeField>({r1_in, r2_in}));
  const std::size_t dim = received.dim();
  if (dim == 0 || dim > k) return {DecodeStatus::kInvalidInput, std::nullopt, DecodePath::kNone};
  const Matrix<PrimeField> r1 = column_block(received.basis(), 0, k);
  const Matrix<PrimeField> r2 = column_block(received.basis(), k, k);
  const std::size_t rank1 = rank(r1), rank2 = rank(r2);

  std::optional<PairDecision> decision;
  DecodePath path = DecodePath::kNone;
  DecodeStatus status = DecodeStatus::kDecoded;

  if (dim == k && rank1 == k && code.in_matrix_field(matmul(inverse(r1), r2))) {
    decision = PairDecision{false, code.phi_inverse(matmul(inverse(r1), r2))};
    path = DecodePath::kMembership;
  } else if (dim == k && rank1 == 0 && rank2 == k) {
    decision = PairDecision{true, code.ext_field().zero()};
    path = DecodePath::kMembership;
  } else if (detail::small_rank(rank1, dim)) {
    decision = PairDecision{true, code.ext_field().zero()};
    path = DecodePath::kSmallRankBlock;
  } else if (detail::small_rank(rank2, dim)) {
    decision = PairDecision{false, code.ext_field().zero()};
    path = DecodePath::kSmallRankBlock;
  } else {
    // Orient so that rank(R1) >= rank(R2); rowsp(A | I) = rowsp(I | A^{-1}).
    const bool swapped = rank1 < rank2;
    const auto& a = swapped ? r2 : r1;
    const auto& b = swapped ? r1 : r2;
    const std::size_t ra = swapped ? rank2 : rank1;
    const auto res = (policy == PathPolicy::kAuto && ra == k && dim == k)
                         ? detail::fast_path(a, b, code)
                         : detail::general_path(a, b, dim, ra, code, trace);
    path = res.path;
    status = res.status;
    if (res.mu) {
      const ExtField& f = code.ext_field();
      if (!swapped)
        decision = PairDecision{false, *res.mu};
      else if (f.is_zero(*res.mu))
        decision = PairDecision{true, f.zero()};
      else
        decision = PairDecision{false, f.inv(*res.mu)};
    }
  }
  if (!decision) return {status, std::nullopt, path};
  if (subspace_distance(received, detail::pair_codeword(*decision, code)) >= k)
    return {DecodeStatus::kDistanceCheckFailed, std::nullopt, path};
  return {DecodeStatus::kDecoded, decision, path};
}

/// Minimum-distance decoder for S_r: blocks of rank <= (dim-1)/2 carry zero,
/// the first larger block carries I, and each later large block is decoded
/// pairwise against it.
inline DecodeOutcome decode(const ReceivedSpace& received, const SpreadCode& code) {
  const std::size_t k = code.k();
  const std::size_t dim = received.dim();
  if (received.space.ambient() != code.n()) throw std::invalid_argument("decode: ambient dimension mismatch");
  if (dim == 0 || dim > k) return {DecodeStatus::kInvalidInput, std::nullopt};
  std::vector<bool> large;
  for (const auto& b : received.blocks) large.push_back(!detail::small_rank(rank(b), dim));
  const auto lead_it = std::find(large.begin(), large.end(), true);
  if (lead_it == large.end()) return {DecodeStatus::kNoCodewordWithinRadius, std::nullopt};
  const std::size_t lead = static_cast<std::size_t>(lead_it - large.begin());

  const ExtField& f = code.ext_field();
  std::vector<ExtElement> point(code.r(), f.zero());
  point[lead] = f.one();
  for (std::size_t i = lead + 1; i < code.r(); ++i) {
    if (!large[i]) continue;
    const auto pair = decode2(received.blocks[lead], received.blocks[i], code);
    if (!pair.ok()) return {pair.status, std::nullopt};
    if (pair.decision->at_infinity) return {DecodeStatus::kNoCodewordWithinRadius, std::nullopt};
    point[i] = pair.decision->mu;
  }
  Codeword c = code.encode(std::move(point));
  if (subspace_distance(received.space, c.subspace) >= k) return {DecodeStatus::kDistanceCheckFailed, std::nullopt};
  return {DecodeStatus::kDecoded, std::move(c)};
}

inline DecodeOutcome decode(const Subspace& received, const SpreadCode& code) {
  return decode(ReceivedSpace::from_subspace(received, code.k()), code);
}

}  // namespace spreadcode

#endif  // SPREADCODE_DECODER_HPP
