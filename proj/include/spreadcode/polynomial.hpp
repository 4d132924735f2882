#ifndef SPREADCODE_POLYNOMIAL_HPP
#define SPREADCODE_POLYNOMIAL_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spreadcode/prime_field.hpp"

/// Dense univariate polynomials over F_q, lowest coefficient first. These
/// helpers are uncounted: they back field construction, not decoding.
namespace spreadcode::poly {

using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Degree of a trimmed polynomial; -1 for zero.
inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly sub(Poly a, const Poly& b, std::uint32_t q) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + q - b[i]) % q;
  trim(a);
  return a;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint32_t q) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % q;
  Poly out(acc.begin(), acc.end());
  trim(out);
  return out;
}

/// Quotient and remainder of a by a nonzero b.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b, std::uint32_t q) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  trim(a);
  const int db = degree(b);
  const std::uint32_t lead_inv = PrimeField::raw_inv(b.back(), q);
  Poly quot;
  if (degree(a) >= db) quot.assign(static_cast<std::size_t>(degree(a) - db + 1), 0);
  while (degree(a) >= db) {
    const int shift = degree(a) - db;
    const std::uint32_t c =
        static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.back()) * lead_inv % q);
    quot[static_cast<std::size_t>(shift)] = c;
    for (int i = 0; i <= db; ++i) {
      auto& slot = a[static_cast<std::size_t>(i + shift)];
      slot = static_cast<std::uint32_t>(
          (slot + q - static_cast<std::uint64_t>(c) * b[static_cast<std::size_t>(i)] % q) % q);
    }
    trim(a);
  }
  trim(quot);
  return {std::move(quot), std::move(a)};
}

inline Poly mod(const Poly& a, const Poly& m, std::uint32_t q) { return divmod(a, m, q).second; }

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t q) {
  return mod(mul(a, b, q), m, q);
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t q) {
  Poly r{1};
  base = mod(base, m, q);
  while (e) {
    if (e & 1) r = mulmod(r, base, m, q);
    base = mulmod(base, base, m, q);
    e >>= 1;
  }
  return mod(r, m, q);
}

/// Monic gcd.
inline Poly gcd(Poly a, Poly b, std::uint32_t q) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint32_t inv = PrimeField::raw_inv(a.back(), q);
    for (auto& c : a) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * inv % q);
  }
  return a;
}

/// Inverse of a modulo an irreducible m.
inline Poly invmod(const Poly& a, const Poly& m, std::uint32_t q) {
  Poly r0 = m, r1 = mod(a, m, q);
  Poly s0{}, s1{1};
  if (r1.empty()) throw std::domain_error("inverse of zero in F_{q^k}");
  while (!r1.empty()) {
    auto [quot, rem] = divmod(r0, r1, q);
    Poly s2 = sub(s0, mul(quot, s1, q), q);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant when m is irreducible.
  if (r0.size() != 1) throw std::domain_error("modulus is not irreducible");
  const std::uint32_t c = PrimeField::raw_inv(r0[0], q);
  for (auto& x : s0) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * c % q);
  return mod(s0, m, q);
}

/// Rabin's irreducibility test for a monic polynomial of degree >= 1.
inline bool is_irreducible(const Poly& p, std::uint32_t q) {
  const int k = degree(p);
  if (k < 1 || p.back() != 1) return false;
  if (k == 1) return true;
  const Poly x{0, 1};
  // frob[i] = x^{q^i} mod p
  std::vector<Poly> frob{mod(x, p, q)};
  for (int i = 1; i <= k; ++i) frob.push_back(powmod(frob.back(), q, p, q));
  if (frob[static_cast<std::size_t>(k)] != mod(x, p, q)) return false;
  int n = k;
  for (int d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    while (n % d == 0) n /= d;
    const Poly g = gcd(sub(frob[static_cast<std::size_t>(k / d)], x, q), p, q);
    if (degree(g) != 0) return false;
  }
  return true;
}

/// Smallest monic irreducible polynomial of degree k over F_q, ordering the
/// candidates by the integer sum p_i q^i (so p_{k-1} is most significant).
/// Returns the full coefficient vector including the leading 1.
inline Poly find_irreducible(std::uint32_t q, int k) {
  if (!is_prime(q)) throw std::invalid_argument("q must be prime");
  if (k < 2) throw std::invalid_argument("degree must be at least 2");
  Poly cand(static_cast<std::size_t>(k) + 1, 0);
  cand.back() = 1;
  while (true) {
    if (cand[0] != 0 && is_irreducible(cand, q)) return cand;
    std::size_t i = 0;
    while (i < static_cast<std::size_t>(k) && ++cand[i] == q) cand[i++] = 0;
    if (i == static_cast<std::size_t>(k)) break;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace spreadcode::poly

#endif  // SPREADCODE_POLYNOMIAL_HPP
