#ifndef SPREADCODE_PRIME_FIELD_HPP
#define SPREADCODE_PRIME_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "spreadcode/op_counter.hpp"

namespace spreadcode {

/// Element of F_q, always reduced into [0, q).
struct Residue {
  std::uint32_t value = 0;
  friend bool operator==(Residue, Residue) = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// The prime field F_q. Cheap to copy.
class PrimeField {
 public:
  using Element = Residue;

  explicit PrimeField(std::uint32_t q) : q_(q) {
    if (q >= (1u << 16)) throw std::invalid_argument("modulus too large: " + std::to_string(q));
    if (!is_prime(q)) throw std::invalid_argument("modulus is not prime: " + std::to_string(q));
  }

  std::uint32_t characteristic() const { return q_; }
  std::uint64_t size() const { return q_; }

  Residue zero() const { return {0}; }
  Residue one() const { return {1}; }
  Residue from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(q_);
    if (m < 0) m += q_;
    return {static_cast<std::uint32_t>(m)};
  }
  Residue from_index(std::uint64_t i) const { return {static_cast<std::uint32_t>(i % q_)}; }

  bool is_zero(Residue a) const { return a.value == 0; }
  bool is_one(Residue a) const { return a.value == 1; }

  Residue add(Residue a, Residue b) const {
    std::uint32_t s = a.value + b.value;
    return {s >= q_ ? s - q_ : s};
  }
  Residue sub(Residue a, Residue b) const {
    return {a.value >= b.value ? a.value - b.value : a.value + q_ - b.value};
  }
  Residue neg(Residue a) const { return {a.value == 0 ? 0 : q_ - a.value}; }
  Residue mul(Residue a, Residue b) const {
    ++thread_op_counts().base_mul;
    return {static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.value) * b.value) % q_)};
  }
  Residue inv(Residue a) const {
    if (a.value == 0) throw std::domain_error("inverse of zero in F_q");
    ++thread_op_counts().base_inv;
    return {raw_inv(a.value, q_)};
  }
  Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }
  Residue pow(Residue a, std::uint64_t e) const {
    Residue r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// Uncounted inverse modulo a prime, used by the extension-field internals.
  static std::uint32_t raw_inv(std::uint32_t a, std::uint32_t q) {
    std::int64_t t = 0, new_t = 1, r = q, new_r = a;
    while (new_r != 0) {
      std::int64_t quot = r / new_r;
      std::int64_t tmp = t - quot * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - quot * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += q;
    return static_cast<std::uint32_t>(t);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t q_;
};

}  // namespace spreadcode

#endif  // SPREADCODE_PRIME_FIELD_HPP
