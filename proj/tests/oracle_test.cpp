#include <gtest/gtest.h>

#include <random>

#include "spreadcode/spreadcode.hpp"
#include "support/oracle.hpp"

using namespace spreadcode;

namespace {

// Number of d-dimensional subspaces of F_q^n.
std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t n, std::size_t d) {
  std::uint64_t num = 1, den = 1;
  for (std::size_t i = 0; i < d; ++i) {
    std::uint64_t a = 1, b = 1;
    for (std::size_t j = 0; j < n - i; ++j) a *= q;
    for (std::size_t j = 0; j < i + 1; ++j) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

}  // namespace

TEST(Grassmannian, CountsMatchGaussianBinomial) {
  for (auto [q, n] : {std::pair{2u, 4u}, std::pair{3u, 4u}, std::pair{2u, 6u}}) {
    const PrimeField f(q);
    for (std::size_t d = 0; d <= 3 && d <= n; ++d) {
      std::uint64_t count = 0;
      oracle::for_each_subspace(f, n, d, [&](const Subspace& s) {
        EXPECT_EQ(s.dim(), d);
        ++count;
      });
      EXPECT_EQ(count, gaussian_binomial(q, n, d)) << "q=" << q << " n=" << n << " d=" << d;
    }
  }
}

TEST(BruteForceDecode, Examples) {
  const SpreadCode code(2, 2, 2);
  const ExtField& f = code.ext_field();
  const Codeword c = code.encode({f.one(), code.lambda()});
  const auto self = oracle::brute_force_decode(c.subspace, code);
  EXPECT_EQ(self.distance, 0u);
  ASSERT_EQ(self.codewords.size(), 1u);
  EXPECT_EQ(self.codewords[0].subspace, c.subspace);

  std::mt19937_64 rng(157);
  const auto r = corrupt(c, {0, 1}, code, rng);
  const auto near = oracle::brute_force_decode(r.space, code);
  EXPECT_EQ(near.distance, 1u);
  ASSERT_EQ(near.codewords.size(), 1u);
  EXPECT_EQ(near.codewords[0].subspace, c.subspace);
}

TEST(BruteForceDecode, EquidistantInputsFailToDecode) {
  const SpreadCode code(2, 3, 2);
  std::mt19937_64 rng(163);
  int ties = 0;
  for (int t = 0; t < 3000 && ties < 20; ++t) {
    const std::size_t dim = 1 + rng() % 3;
    const Subspace s = Subspace::span(random_full_rank(code.base_field(), dim, code.n(), rng));
    const auto near = oracle::brute_force_decode(s, code);
    if (near.codewords.size() < 2) continue;
    ++ties;
    EXPECT_GE(near.distance, code.k());
    EXPECT_FALSE(decode(s, code).ok());
  }
  EXPECT_EQ(ties, 20);
}

TEST(BruteForceDecode, ScaleGuard) {
  const SpreadCode code(2, 10, 3);  // 2^20 + 2^10 + 1 codewords
  EXPECT_THROW(oracle::brute_force_decode(Subspace::zero(code.base_field(), code.n()), code), std::length_error);
}

TEST(MuCharacterization, Examples) {
  const SpreadCode code(2, 3, 2);
  const PrimeField& b = code.base_field();
  const auto id = Matrix<PrimeField>::identity(b, 3);
  const auto mus = oracle::mu_characterization(id, code.companion(), code);
  ASSERT_EQ(mus.size(), 1u);
  EXPECT_EQ(mus[0], code.lambda());

  std::mt19937_64 rng(167);
  int checked = 0;
  for (int t = 0; t < 500 && checked < 20; ++t) {
    const auto r2 = random_matrix(b, 3, 3, rng);
    const Subspace s = Subspace::span(hstack<PrimeField>({id, r2}));
    if (oracle::brute_force_decode(s, code).distance < code.k()) continue;
    ++checked;
    EXPECT_TRUE(oracle::mu_characterization(id, r2, code).empty());
    EXPECT_FALSE(decode2(id, r2, code).ok());
  }
  EXPECT_EQ(checked, 20);
}

TEST(MuCharacterization, AtMostOneRootExhaustively) {
  const SpreadCode code(2, 2, 2);
  for (std::size_t d = 1; d <= 2; ++d)
    oracle::for_each_subspace(code.base_field(), 4, d, [&](const Subspace& s) {
      const auto rs = ReceivedSpace::from_subspace(s, 2);
      const auto mus = oracle::mu_characterization(rs.blocks[0], rs.blocks[1], code);
      EXPECT_LE(mus.size(), 1u);
      const auto out = decode2(rs.blocks[0], rs.blocks[1], code);
      if (!mus.empty()) {
        ASSERT_TRUE(out.ok());
        EXPECT_FALSE(out.decision->at_infinity);
        EXPECT_EQ(out.decision->mu, mus[0]);
      }
    });
}

TEST(MuCharacterization, ScaleGuard) {
  const SpreadCode code(3, 11, 2);
  const Matrix<PrimeField> id = Matrix<PrimeField>::identity(code.base_field(), 11);
  EXPECT_THROW(oracle::mu_characterization(id, id, code), std::length_error);
}
