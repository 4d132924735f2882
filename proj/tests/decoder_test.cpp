#include <gtest/gtest.h>

#include <random>

#include "spreadcode/spreadcode.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

using namespace spreadcode;

namespace {

Matrix<PrimeField> join(const Matrix<PrimeField>& a, const Matrix<PrimeField>& b) { return hstack<PrimeField>({a, b}); }

Subspace swap_blocks(const Subspace& s, std::size_t k) {
  return Subspace::span(join(column_block(s.basis(), k, k), column_block(s.basis(), 0, k)));
}

template <class Rng>
Subspace random_received(const SpreadCode& code, Rng& rng) {
  // Mix channel outputs inside and beyond the radius with uniform subspaces.
  const std::size_t k = code.k();
  if (rng() % 4 == 0) {
    const std::size_t dim = 1 + rng() % k;
    return Subspace::span(random_full_rank(code.base_field(), dim, code.n(), rng));
  }
  const std::size_t eps = rng() % (k + 1);
  const std::size_t e = rng() % (eps + 1);
  if (e + eps == 0 && rng() % 2) return random_codeword(code, rng).subspace;
  return corrupt(random_codeword(code, rng), {e, eps}, code, rng).space;
}

}  // namespace

TEST(Decode2, MembershipFastAccept) {
  const SpreadCode code(2, 3, 2);
  const auto id = Matrix<PrimeField>::identity(code.base_field(), 3);
  const auto out = decode2(id, code.companion(), code);
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(out.path, DecodePath::kMembership);
  EXPECT_FALSE(out.decision->at_infinity);
  EXPECT_EQ(out.decision->mu, code.lambda());

  const auto zero = Matrix<PrimeField>(code.base_field(), 3, 3);
  const auto inf = decode2(zero, id, code);
  ASSERT_TRUE(inf.ok());
  EXPECT_TRUE(inf.decision->at_infinity);
  EXPECT_EQ(inf.path, DecodePath::kMembership);
}

TEST(Decode2, SmallRankBlockGoesToInfinity) {
  const SpreadCode code(2, 3, 2);
  const PrimeField& f = code.base_field();
  // R1 of rank 1 <= (3-1)/2 with R2 = I.
  Matrix<PrimeField> r1(f, 3, 3);
  r1(0, 2) = f.one();
  const auto out = decode2(r1, Matrix<PrimeField>::identity(f, 3), code);
  ASSERT_TRUE(out.ok());
  EXPECT_TRUE(out.decision->at_infinity);
  EXPECT_EQ(out.path, DecodePath::kSmallRankBlock);
}

TEST(Decode2, OneErasureOneErrorAtK3) {
  const SpreadCode code(2, 3, 2);
  const ExtField& f = code.ext_field();
  const Codeword c = code.encode({f.one(), code.lambda()});
  std::mt19937_64 rng(79);
  for (int t = 0; t < 50; ++t) {
    const auto r = corrupt(c, {1, 1}, code, rng);
    const auto nearest = oracle::brute_force_decode(r.space, code);
    ASSERT_EQ(nearest.distance, 2u);
    ASSERT_EQ(nearest.codewords.size(), 1u);
    EXPECT_EQ(nearest.codewords[0].subspace, c.subspace);
    const auto out = decode(r, code);
    ASSERT_TRUE(out.ok());
    EXPECT_EQ(out.codeword->subspace, c.subspace);
  }
}

TEST(Decode2Fast, RankOneErrorAtK3) {
  const SpreadCode code(2, 3, 2);
  const PrimeField& f = code.base_field();
  const auto id = Matrix<PrimeField>::identity(f, 3);
  const auto a = matmul(code.companion(), code.companion());
  const auto expected = Subspace::span(join(id, a));
  std::mt19937_64 rng(83);
  int hits = 0;
  while (hits < 20) {
    const auto e = testing_support::random_rank_matrix(f, 3, 1, rng);
    const auto r2 = add(a, e);
    if (rank(r2) != 3) continue;
    ++hits;
    const auto nearest = oracle::brute_force_decode(Subspace::span(join(id, r2)), code);
    ASSERT_EQ(nearest.codewords.size(), 1u);
    EXPECT_EQ(nearest.codewords[0].subspace, expected);

    const auto fast = decode2_fast(id, r2, code);
    ASSERT_TRUE(fast.ok());
    EXPECT_EQ(detail::pair_codeword(*fast.decision, code), expected);
    const auto general = decode2(id, r2, code, PathPolicy::kGeneralOnly);
    ASSERT_TRUE(general.ok());
    EXPECT_EQ(general.path, DecodePath::kGeneral);
    EXPECT_EQ(general.decision, fast.decision);
  }
}

TEST(Decode2Fast, FailsWhenNothingIsClose) {
  const SpreadCode code(2, 3, 2);
  const PrimeField& f = code.base_field();
  const auto id = Matrix<PrimeField>::identity(f, 3);
  std::mt19937_64 rng(89);
  int found = 0;
  for (int t = 0; t < 2000 && found < 10; ++t) {
    const auto r2 = random_matrix(f, 3, 3, rng);
    if (oracle::brute_force_decode(Subspace::span(join(id, r2)), code).distance < code.k()) continue;
    ++found;
    EXPECT_FALSE(decode2_fast(id, r2, code).ok());
    EXPECT_FALSE(decode2(id, r2, code).ok());
    EXPECT_FALSE(decode2(id, r2, code, PathPolicy::kGeneralOnly).ok());
  }
  EXPECT_EQ(found, 10);
}

TEST(Decode2Fast, RejectsSingularLeadingBlock) {
  const SpreadCode code(2, 3, 2);
  const Matrix<PrimeField> z(code.base_field(), 3, 3);
  EXPECT_EQ(decode2_fast(z, Matrix<PrimeField>::identity(code.base_field(), 3), code).status,
            DecodeStatus::kInvalidInput);
}

TEST(Decode, Examples) {
  const SpreadCode code(2, 2, 3);
  const ExtField& f = code.ext_field();
  const Codeword c = code.encode({f.zero(), f.one(), f.add(code.lambda(), f.one())});
  const auto self = decode(c.subspace, code);
  ASSERT_TRUE(self.ok());
  EXPECT_EQ(self.codeword->subspace, c.subspace);

  // Two rank-1 blocks in a 2-dimensional space: every block is small.
  const PrimeField& b = code.base_field();
  Matrix<PrimeField> thin(b, 2, 6);
  thin(0, 0) = thin(0, 2) = b.one();
  thin(1, 1) = thin(1, 4) = b.one();
  const auto fail = decode(Subspace::span(thin), code);
  EXPECT_EQ(fail.status, DecodeStatus::kNoCodewordWithinRadius);
  EXPECT_EQ(oracle::brute_force_decode(Subspace::span(thin), code).distance, 2u);

  EXPECT_EQ(decode(Subspace::span(Matrix<PrimeField>::identity(b, 6)), code).status, DecodeStatus::kInvalidInput);
  EXPECT_EQ(decode(Subspace::zero(b, 6), code).status, DecodeStatus::kInvalidInput);
}

// At k = 2 the only disturbance at distance 1 that keeps dim <= k is one erasure.
TEST(Decode, DistanceOneAtR3K2) {
  const SpreadCode code(2, 2, 3);
  const ExtField& f = code.ext_field();
  const Codeword c = code.encode({f.zero(), f.one(), code.lambda()});
  std::mt19937_64 rng(101);
  for (int t = 0; t < 30; ++t) {
    const auto r = corrupt(c, {0, 1}, code, rng);
    const auto nearest = oracle::brute_force_decode(r.space, code);
    ASSERT_EQ(nearest.codewords.size(), 1u);
    EXPECT_EQ(nearest.codewords[0].subspace, c.subspace);
    const auto out = decode(r, code);
    ASSERT_TRUE(out.ok());
    EXPECT_EQ(out.codeword->subspace, c.subspace);
  }
}

TEST(Decode, ExhaustiveAgainstOracle) {
  for (auto [q, k, r] : {std::tuple{2u, 2u, 2u}, std::tuple{2u, 2u, 3u}}) {
    const SpreadCode code(q, k, r);
    std::size_t total = 0, decodable = 0;
    for (std::size_t d = 1; d <= k; ++d)
      oracle::for_each_subspace(code.base_field(), code.n(), d, [&](const Subspace& s) {
        const auto cmp = oracle::compare_with_decoder(s, code);
        EXPECT_TRUE(cmp.agree) << "d=" << cmp.distance << " status=" << to_string(cmp.status);
        ++total;
        decodable += cmp.decodable;
      });
    EXPECT_GT(decodable, 0u);
    EXPECT_GT(total, decodable);
  }
}

class SampledOracle : public ::testing::TestWithParam<std::tuple<std::uint32_t, std::size_t, std::size_t>> {};

TEST_P(SampledOracle, DecoderMatchesOracle) {
  const auto [q, k, r] = GetParam();
  const SpreadCode code(q, k, r);
  std::mt19937_64 rng(103 + q * 17 + k * 5 + r);
  std::size_t decodable = 0;
  for (int t = 0; t < 400; ++t) {
    const Subspace s = random_received(code, rng);
    const auto cmp = oracle::compare_with_decoder(s, code);
    ASSERT_TRUE(cmp.agree) << "trial " << t << " d=" << cmp.distance << " status=" << to_string(cmp.status);
    decodable += cmp.decodable;
  }
  EXPECT_GT(decodable, 100u);
}

INSTANTIATE_TEST_SUITE_P(Params, SampledOracle,
                         ::testing::Values(std::tuple{2u, 3u, 2u}, std::tuple{3u, 2u, 2u}, std::tuple{5u, 2u, 2u},
                                           std::tuple{3u, 3u, 2u}, std::tuple{2u, 5u, 2u}, std::tuple{2u, 3u, 3u},
                                           std::tuple{2u, 2u, 4u}, std::tuple{3u, 2u, 3u}));

TEST(Decode, SoundnessOnArbitraryInput) {
  const SpreadCode code(2, 4, 3);
  std::mt19937_64 rng(107);
  int decoded = 0;
  for (int t = 0; t < 300; ++t) {
    const Subspace s = random_received(code, rng);
    const auto out = decode(s, code);
    if (!out.ok()) continue;
    ++decoded;
    EXPECT_LT(subspace_distance(s, out.codeword->subspace), code.k());
    EXPECT_TRUE(code.is_codeword(out.codeword->subspace));
  }
  EXPECT_GT(decoded, 50);
}

TEST(Decode, BlockSwapSymmetry) {
  for (auto [q, k] : {std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{2u, 4u}}) {
    const SpreadCode code(q, k, 2);
    std::mt19937_64 rng(109 + q + k);
    for (int t = 0; t < 200; ++t) {
      const Subspace s = random_received(code, rng);
      const auto a = decode(s, code);
      const auto b = decode(swap_blocks(s, k), code);
      ASSERT_EQ(a.ok(), b.ok());
      if (a.ok()) {
        EXPECT_EQ(swap_blocks(a.codeword->subspace, k), b.codeword->subspace);
      }
    }
  }
}

TEST(Decode2, RankCharacterization) {
  for (auto [q, k] : {std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{2u, 4u}, std::pair{3u, 3u}}) {
    const SpreadCode code(q, k, 2);
    std::mt19937_64 rng(113 + q + k);
    int unique = 0;
    for (int t = 0; t < 150; ++t) {
      const auto rs = ReceivedSpace::from_subspace(random_received(code, rng), k);
      const auto mus = oracle::mu_characterization(rs.blocks[0], rs.blocks[1], code);
      const auto nearest = oracle::brute_force_decode(rs.space, code);
      const auto out = decode2(rs.blocks[0], rs.blocks[1], code);
      const bool decodable = nearest.distance < k;
      ASSERT_EQ(out.ok(), decodable);
      if (decodable && !out.decision->at_infinity) {
        ASSERT_EQ(mus.size(), 1u);
        EXPECT_EQ(mus[0], out.decision->mu);
        const auto a = code.phi(mus[0]);
        EXPECT_EQ(Subspace::span(join(Matrix<PrimeField>::identity(code.base_field(), k), a)),
                  nearest.codewords[0].subspace);
        ++unique;
      } else {
        EXPECT_TRUE(mus.empty());
      }
    }
    EXPECT_GT(unique, 30);
  }
}

TEST(Decode2, CandidateRootsAnnihilateTheMinor) {
  for (auto [q, k] : {std::pair{2u, 5u}, std::pair{3u, 4u}, std::pair{2u, 7u}, std::pair{5u, 3u}}) {
    const SpreadCode code(q, k, 2);
    const ExtField& f = code.ext_field();
    std::mt19937_64 rng(127 + q + k);
    int general_runs = 0;
    for (int t = 0; t < 200 && general_runs < 40; ++t) {
      const std::size_t eps = rng() % k;
      const std::size_t e = rng() % (eps + 1);
      if (e + eps >= k) continue;
      const auto rs = corrupt(random_codeword(code, rng), {e, eps}, code, rng);
      GeneralPathTrace trace;
      const auto out = decode2(rs.blocks[0], rs.blocks[1], code, PathPolicy::kGeneralOnly, &trace);
      ASSERT_TRUE(out.ok());
      if (!trace.pencil) continue;
      ++general_runs;
      ASSERT_FALSE(trace.k_set.empty());
      EXPECT_EQ(trace.passing, 1u);
      IndexTuple jt = trace.j_prime, lt = trace.l_prime;
      jt.insert(jt.end(), trace.k_set.begin(), trace.k_set.end());
      lt.insert(lt.end(), trace.k_set.begin(), trace.k_set.end());
      for (const auto& c : trace.candidates) EXPECT_TRUE(f.is_zero(minor(trace.pencil->evaluate(c.mu), jt, lt)));
    }
    EXPECT_GT(general_runs, 10);
  }
}
