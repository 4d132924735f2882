#ifndef SPREADCODE_SPREAD_CODE_HPP
#define SPREADCODE_SPREAD_CODE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spreadcode/ext_field.hpp"
#include "spreadcode/matrix.hpp"
#include "spreadcode/polynomial.hpp"
#include "spreadcode/prime_field.hpp"

namespace spreadcode {

/// Row space of a matrix over F_q, held as its RREF basis (no zero rows).
class Subspace {
 public:
  static Subspace span(const Matrix<PrimeField>& generators) {
    auto r = rref(generators);
    return Subspace(top_rows(r.reduced, r.rank));
  }
  static Subspace zero(const PrimeField& f, std::size_t ambient) {
    return Subspace(Matrix<PrimeField>(f, 0, ambient));
  }

  const Matrix<PrimeField>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return basis_.cols(); }

  bool contains(const std::vector<Residue>& v) const {
    Matrix<PrimeField> row(basis_.field(), 1, ambient());
    for (std::size_t j = 0; j < ambient(); ++j) row(0, j) = v.at(j);
    return rank(vstack(basis_, row)) == dim();
  }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  explicit Subspace(Matrix<PrimeField> basis) : basis_(std::move(basis)) {}
  Matrix<PrimeField> basis_;
};

/// d(U, V) = dim(U + V) - dim(U ∩ V) = 2 dim(U + V) - dim U - dim V.
inline std::size_t subspace_distance(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw std::invalid_argument("subspace_distance: ambient mismatch");
  return 2 * rank(vstack(u.basis(), v.basis())) - u.dim() - v.dim();
}

/// A point of P^{r-1}(F_{q^k}) (first nonzero coordinate equal to 1) and the
/// subspace it encodes.
struct Codeword {
  std::vector<ExtElement> point;
  Subspace subspace;
};

/// Companion matrix: ones on the superdiagonal, last row -p_0 .. -p_{k-1}.
inline Matrix<PrimeField> companion_matrix(const PrimeField& f, const poly::Poly& p) {
  const std::size_t k = p.size() - 1;
  if (p.size() < 2 || p.back() != 1) throw std::invalid_argument("companion_matrix: p must be monic");
  Matrix<PrimeField> m(f, k, k);
  for (std::size_t i = 0; i + 1 < k; ++i) m(i, i + 1) = f.one();
  for (std::size_t j = 0; j < k; ++j) m(k - 1, j) = f.neg(f.from_int(p[j]));
  return m;
}

/// Diagonal matrix diag(x, x^{[1]}, ..., x^{[k-1]}).
inline Matrix<ExtField> frobenius_diagonal(const ExtField& f, const ExtElement& x) {
  std::vector<ExtElement> d;
  for (std::size_t j = 0; j < f.degree(); ++j) d.push_back(f.frobenius(x, j));
  return Matrix<ExtField>::diagonal(f, d);
}

struct Diagonalizer {
  Matrix<ExtField> s;
  Matrix<ExtField> s_inv;
};

/// S with S[i][j] = (lambda^i)^{[j]}, whose columns are eigenvectors of the
/// companion matrix, and its inverse. Throws if S^{-1} P S != diag(lambda^{[j]})
/// or if the rows of S^{-1} are not successive Frobenius images.
inline Diagonalizer make_diagonalizer(const ExtField& f, const Matrix<PrimeField>& companion) {
  const std::size_t k = f.degree();
  const ExtElement lambda = f.generator();
  Matrix<ExtField> s(f, k, k);
  ExtElement power = f.one();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) s(i, j) = f.frobenius(power, j);
    power = f.mul(power, lambda);
  }
  Matrix<ExtField> s_inv = inverse(s);
  if (matmul(mixed_matmul(companion, s), s_inv) != lift(companion, f) ||
      matmul(s_inv, mixed_matmul(companion, s)) != frobenius_diagonal(f, lambda))
    throw std::runtime_error("diagonalizer check failed: S^-1 P S is not diag(lambda^[j])");
  for (std::size_t i = 0; i + 1 < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (s_inv(i + 1, j) != f.frobenius(s_inv(i, j), 1))
        throw std::runtime_error("diagonalizer check failed: rows of S^-1 are not conjugate");
  return {std::move(s), std::move(s_inv)};
}

/// Spread code S_r in Gr(k, rk) built on F_q[P] for the companion matrix P
/// of a monic irreducible p of degree k. Immutable once constructed.
class SpreadCode {
 public:
  /// `modulus` is the full monic coefficient vector; defaults to the
  /// smallest irreducible of degree k.
  SpreadCode(std::uint32_t q, std::size_t k, std::size_t r, std::optional<poly::Poly> modulus = {})
      : base_(q),
        ext_(base_, modulus ? *modulus : poly::find_irreducible(q, static_cast<int>(k))),
        r_(r),
        companion_(companion_matrix(base_, ext_.modulus())),
        diag_(make_diagonalizer(ext_, companion_)) {
    if (ext_.degree() != k) throw std::invalid_argument("modulus degree does not match k");
    if (r < 2) throw std::invalid_argument("r must be at least 2");
    if (ext_.size() == 0) throw std::invalid_argument("q^k exceeds 64 bits");
    powers_.push_back(Matrix<PrimeField>::identity(base_, k));
    for (std::size_t i = 1; i < k; ++i) powers_.push_back(matmul(powers_.back(), companion_));
  }

  std::uint32_t q() const { return base_.characteristic(); }
  std::size_t k() const { return ext_.degree(); }
  std::size_t r() const { return r_; }
  std::size_t n() const { return r_ * k(); }
  std::size_t min_distance() const { return 2 * k(); }

  const PrimeField& base_field() const { return base_; }
  const ExtField& ext_field() const { return ext_; }
  const poly::Poly& modulus() const { return ext_.modulus(); }
  const Matrix<PrimeField>& companion() const { return companion_; }
  ExtElement lambda() const { return ext_.generator(); }
  const Matrix<ExtField>& diagonalizer() const { return diag_.s; }
  const Matrix<ExtField>& diagonalizer_inverse() const { return diag_.s_inv; }

  /// (q^n - 1) / (q^k - 1); throws if it does not fit in 64 bits.
  std::uint64_t size() const {
    const std::uint64_t qk = ext_.size();
    std::uint64_t total = 0, term = 1;
    for (std::size_t i = 0; i < r_; ++i) {
      if (total > UINT64_MAX - term) throw std::overflow_error("code size exceeds 64 bits");
      total += term;
      if (i + 1 < r_) {
        if (term > UINT64_MAX / qk) throw std::overflow_error("code size exceeds 64 bits");
        term *= qk;
      }
    }
    return total;
  }

  /// Ring isomorphism F_{q^k} -> F_q[P], sum a_i lambda^i -> sum a_i P^i.
  Matrix<PrimeField> phi(const ExtElement& a) const {
    Matrix<PrimeField> m(base_, k(), k());
    for (std::size_t i = 0; i < k(); ++i) {
      const Residue c{a.coeffs[i]};
      if (c.value == 0) continue;
      for (std::size_t u = 0; u < k(); ++u)
        for (std::size_t v = 0; v < k(); ++v)
          if (!base_.is_zero(powers_[i](u, v))) m(u, v) = base_.add(m(u, v), base_.mul(c, powers_[i](u, v)));
    }
    return m;
  }

  /// Inverse of phi on F_q[P]: row 0 of P^i is e_i, so the first row of
  /// phi(a) is the coefficient vector of a.
  ExtElement phi_inverse(const Matrix<PrimeField>& a) const {
    ExtElement e = ext_.zero();
    for (std::size_t j = 0; j < k(); ++j) e.coeffs[j] = a(0, j).value;
    return e;
  }

  /// True if A lies in F_q[P]: A commutes with P (the centralizer of a
  /// companion matrix of an irreducible polynomial is F_q[P]).
  bool in_matrix_field(const Matrix<PrimeField>& a) const {
    if (a.rows() != k() || a.cols() != k()) return false;
    if (matmul(a, companion_) != matmul(companion_, a)) return false;
    return a.is_zero() || rank(a) == k();
  }

  /// diag(x, x^{[1]}, ..., x^{[k-1]}).
  Matrix<ExtField> delta(const ExtElement& x) const { return frobenius_diagonal(ext_, x); }

  /// Normalizes the projective point and returns the RREF of
  /// (phi(v_1) ... phi(v_r)).
  Codeword encode(std::vector<ExtElement> point) const {
    if (point.size() != r_) throw std::invalid_argument("encode: point must have r coordinates");
    std::size_t lead = 0;
    while (lead < r_ && ext_.is_zero(point[lead])) ++lead;
    if (lead == r_) throw std::domain_error("encode: all-zero point");
    if (!ext_.is_one(point[lead])) {
      const ExtElement inv = ext_.inv(point[lead]);
      for (auto& v : point) v = ext_.mul(v, inv);
    }
    std::vector<Matrix<PrimeField>> blocks;
    for (const auto& v : point) blocks.push_back(phi(v));
    return {std::move(point), Subspace::span(hstack(blocks))};
  }

  /// Visits each codeword exactly once: for every leading position i,
  /// coordinates before i are 0, coordinate i is 1, later ones run over F_{q^k}.
  template <class Fn>
  void for_each_codeword(Fn&& fn) const {
    const std::uint64_t qk = ext_.size();
    for (std::size_t lead = 0; lead < r_; ++lead) {
      const std::size_t free = r_ - lead - 1;
      std::vector<std::uint64_t> idx(free, 0);
      while (true) {
        std::vector<ExtElement> point(r_, ext_.zero());
        point[lead] = ext_.one();
        for (std::size_t t = 0; t < free; ++t) point[lead + 1 + t] = ext_.from_index(idx[t]);
        fn(encode(std::move(point)));
        std::size_t t = 0;
        while (t < free && ++idx[t] == qk) idx[t++] = 0;
        if (t == free) break;
      }
    }
  }

  std::vector<Codeword> enumerate() const {
    std::vector<Codeword> out;
    for_each_codeword([&](Codeword c) { out.push_back(std::move(c)); });
    return out;
  }

  /// Membership in S_r: dim k, the first full-rank block B_j preceded by
  /// zero blocks, and B_j^{-1} B_i in F_q[P] for each later block.
  bool is_codeword(const Subspace& w) const {
    if (w.ambient() != n() || w.dim() != k()) return false;
    std::vector<Matrix<PrimeField>> blocks;
    for (std::size_t i = 0; i < r_; ++i) blocks.push_back(column_block(w.basis(), i * k(), k()));
    std::size_t j = 0;
    while (j < r_ && rank(blocks[j]) != k()) {
      if (!blocks[j].is_zero()) return false;
      ++j;
    }
    if (j == r_) return false;
    const Matrix<PrimeField> lead_inv = inverse(blocks[j]);
    for (std::size_t i = j + 1; i < r_; ++i)
      if (!in_matrix_field(matmul(lead_inv, blocks[i]))) return false;
    return true;
  }

 private:
  PrimeField base_;
  ExtField ext_;
  std::size_t r_;
  Matrix<PrimeField> companion_;
  Diagonalizer diag_;
  std::vector<Matrix<PrimeField>> powers_;
};

}  // namespace spreadcode

#endif  // SPREADCODE_SPREAD_CODE_HPP
