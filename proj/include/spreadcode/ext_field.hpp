#ifndef SPREADCODE_EXT_FIELD_HPP
#define SPREADCODE_EXT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "spreadcode/op_counter.hpp"
#include "spreadcode/polynomial.hpp"
#include "spreadcode/prime_field.hpp"

namespace spreadcode {

/// Element of F_{q^k} = F_q[x]/(p), stored as the coefficient vector of
/// sum a_i lambda^i with lambda the class of x. Always exactly k entries.
struct ExtElement {
  std::vector<std::uint32_t> coeffs;
  friend bool operator==(const ExtElement&, const ExtElement&) = default;
};

/// Handle to an extension field. Copies share the immutable tables.
class ExtField {
 public:
  using Element = ExtElement;

  /// `modulus` is the full monic coefficient vector p_0..p_{k-1},1.
  ExtField(PrimeField base, poly::Poly modulus) {
    auto d = std::make_shared<Data>(base);
    poly::trim(modulus);
    const int k = poly::degree(modulus);
    if (k < 2) throw std::invalid_argument("extension degree must be at least 2");
    if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
    for (auto c : modulus)
      if (c >= base.characteristic()) throw std::invalid_argument("coefficient out of range");
    if (!poly::is_irreducible(modulus, base.characteristic()))
      throw std::invalid_argument("modulus is not irreducible over F_q");
    d->k = static_cast<std::size_t>(k);
    d->modulus = std::move(modulus);
    build_frobenius(*d);
    data_ = std::move(d);
  }

  const PrimeField& base() const { return data_->base; }
  std::size_t degree() const { return data_->k; }
  const poly::Poly& modulus() const { return data_->modulus; }

  /// q^k, or 0 if it does not fit in 64 bits.
  std::uint64_t size() const {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < degree(); ++i) {
      if (s > UINT64_MAX / q()) return 0;
      s *= q();
    }
    return s;
  }

  ExtElement zero() const { return {std::vector<std::uint32_t>(degree(), 0)}; }
  ExtElement one() const { return embed(base().one()); }
  /// The class of x, a root of the modulus.
  ExtElement generator() const {
    ExtElement e = zero();
    e.coeffs[1] = 1;
    return e;
  }
  ExtElement embed(Residue a) const {
    ExtElement e = zero();
    e.coeffs[0] = a.value;
    return e;
  }
  ExtElement from_int(std::int64_t v) const { return embed(base().from_int(v)); }

  /// Base-q digits of i, lowest first. Enumerates the field for i < q^k.
  ExtElement from_index(std::uint64_t i) const {
    ExtElement e = zero();
    for (std::size_t j = 0; j < degree(); ++j) {
      e.coeffs[j] = static_cast<std::uint32_t>(i % q());
      i /= q();
    }
    return e;
  }
  std::uint64_t to_index(const ExtElement& a) const {
    std::uint64_t i = 0;
    for (std::size_t j = degree(); j-- > 0;) i = i * q() + a.coeffs[j];
    return i;
  }

  ExtElement from_coeffs(std::vector<std::uint32_t> c) const {
    if (c.size() != degree()) throw std::invalid_argument("wrong number of coefficients");
    for (auto v : c)
      if (v >= q()) throw std::invalid_argument("coefficient out of range");
    return {std::move(c)};
  }

  bool is_zero(const ExtElement& a) const {
    for (auto c : a.coeffs)
      if (c) return false;
    return true;
  }
  bool is_one(const ExtElement& a) const { return a == one(); }
  /// True when a lies in the prime subfield.
  bool in_base(const ExtElement& a) const {
    for (std::size_t j = 1; j < degree(); ++j)
      if (a.coeffs[j]) return false;
    return true;
  }

  ExtElement add(const ExtElement& a, const ExtElement& b) const {
    ExtElement r = a;
    for (std::size_t j = 0; j < degree(); ++j) {
      auto s = r.coeffs[j] + b.coeffs[j];
      r.coeffs[j] = s >= q() ? s - q() : s;
    }
    return r;
  }
  ExtElement sub(const ExtElement& a, const ExtElement& b) const {
    ExtElement r = a;
    for (std::size_t j = 0; j < degree(); ++j)
      r.coeffs[j] = r.coeffs[j] >= b.coeffs[j] ? r.coeffs[j] - b.coeffs[j]
                                               : r.coeffs[j] + q() - b.coeffs[j];
    return r;
  }
  ExtElement neg(const ExtElement& a) const { return sub(zero(), a); }

  ExtElement mul(const ExtElement& a, const ExtElement& b) const {
    ++thread_op_counts().ext_mul;
    const std::size_t k = degree();
    const std::uint64_t qq = q();
    std::vector<std::uint64_t> acc(2 * k - 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (!a.coeffs[i]) continue;
      for (std::size_t j = 0; j < k; ++j) acc[i + j] += std::uint64_t{a.coeffs[i]} * b.coeffs[j] % qq;
    }
    const auto& p = data_->modulus;
    for (std::size_t d = 2 * k - 1; d-- > k;) {
      const std::uint64_t c = acc[d] % qq;
      if (!c) continue;
      for (std::size_t i = 0; i < k; ++i) acc[d - k + i] += (qq - c) * p[i] % qq;
    }
    ExtElement r = zero();
    for (std::size_t i = 0; i < k; ++i) r.coeffs[i] = static_cast<std::uint32_t>(acc[i] % qq);
    return r;
  }

  /// Multiplication by an element of the prime subfield.
  ExtElement scale(Residue c, const ExtElement& a) const {
    ++thread_op_counts().ext_mul;
    ExtElement r = a;
    for (auto& x : r.coeffs) x = static_cast<std::uint32_t>(std::uint64_t{x} * c.value % q());
    return r;
  }

  ExtElement inv(const ExtElement& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero in F_{q^k}");
    ++thread_op_counts().ext_inv;
    poly::Poly pa = a.coeffs;
    poly::trim(pa);
    poly::Poly r = poly::invmod(pa, data_->modulus, q());
    r.resize(degree(), 0);
    return {std::move(r)};
  }
  ExtElement div(const ExtElement& a, const ExtElement& b) const { return mul(a, inv(b)); }

  ExtElement pow(ExtElement a, std::uint64_t e) const {
    ExtElement r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// a^{q^j}, via the precomputed F_q-linear Frobenius tables.
  ExtElement frobenius(const ExtElement& a, std::size_t j) const {
    j %= degree();
    if (j == 0) return a;
    ++thread_op_counts().ext_frobenius;
    const auto& table = data_->frobenius[j];
    const std::size_t k = degree();
    std::vector<std::uint64_t> acc(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (!a.coeffs[i]) continue;
      for (std::size_t t = 0; t < k; ++t) acc[t] += std::uint64_t{a.coeffs[i]} * table[i][t] % q();
    }
    ExtElement r = zero();
    for (std::size_t t = 0; t < k; ++t) r.coeffs[t] = static_cast<std::uint32_t>(acc[t] % q());
    return r;
  }

  /// Absolute trace a + a^{[1]} + ... + a^{[k-1]}.
  Residue trace(const ExtElement& a) const {
    ExtElement t = a;
    for (std::size_t j = 1; j < degree(); ++j) t = add(t, frobenius(a, j));
    if (!in_base(t)) throw std::logic_error("trace left the prime field");
    return {t.coeffs[0]};
  }

  friend bool operator==(const ExtField& a, const ExtField& b) {
    return a.data_ == b.data_ ||
           (a.data_->base == b.data_->base && a.data_->modulus == b.data_->modulus);
  }

 private:
  struct Data {
    explicit Data(PrimeField b) : base(b) {}
    PrimeField base;
    std::size_t k = 0;
    poly::Poly modulus;
    // frobenius[j][i] = coefficients of (lambda^i)^{q^j}
    std::vector<std::vector<std::vector<std::uint32_t>>> frobenius;
  };

  std::uint32_t q() const { return data_->base.characteristic(); }

  static void build_frobenius(Data& d) {
    const std::uint32_t q = d.base.characteristic();
    const std::size_t k = d.k;
    auto pad = [k](poly::Poly v) {
      v.resize(k, 0);
      return v;
    };
    std::vector<poly::Poly> images;  // (lambda^i)^q
    const poly::Poly lam_q = poly::powmod(poly::Poly{0, 1}, q, d.modulus, q);
    poly::Poly cur{1};
    for (std::size_t i = 0; i < k; ++i) {
      images.push_back(cur);
      cur = poly::mulmod(cur, lam_q, d.modulus, q);
    }
    d.frobenius.assign(k, {});
    for (std::size_t i = 0; i < k; ++i) {
      poly::Poly e(i + 1, 0);
      e[i] = 1;
      d.frobenius[0].push_back(pad(e));
    }
    for (std::size_t j = 1; j < k; ++j) {
      for (std::size_t i = 0; i < k; ++i) {
        // Apply one Frobenius step to the previous image.
        const auto& prev = d.frobenius[j - 1][i];
        std::vector<std::uint64_t> acc(k, 0);
        for (std::size_t s = 0; s < k; ++s) {
          if (!prev[s]) continue;
          auto img = pad(images[s]);
          for (std::size_t t = 0; t < k; ++t) acc[t] += std::uint64_t{prev[s]} * img[t] % q;
        }
        std::vector<std::uint32_t> row(k);
        for (std::size_t t = 0; t < k; ++t) row[t] = static_cast<std::uint32_t>(acc[t] % q);
        d.frobenius[j].push_back(std::move(row));
      }
    }
  }

  std::shared_ptr<const Data> data_;
};

}  // namespace spreadcode

#endif  // SPREADCODE_EXT_FIELD_HPP
