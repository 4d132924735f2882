#include <gtest/gtest.h>

#include <thread>

#include "spreadcode/spreadcode.hpp"
#include "support/oracle.hpp"

using namespace spreadcode;

TEST(Corrupt, DistanceAndDimensionAreExact) {
  for (auto [q, k, r] : {std::tuple{2u, 3u, 2u}, std::tuple{3u, 2u, 3u}, std::tuple{2u, 4u, 3u}}) {
    const SpreadCode code(q, k, r);
    std::mt19937_64 rng(131 + q + k + r);
    for (std::size_t eps = 0; eps <= k; ++eps)
      for (std::size_t e = 0; e <= code.n() - k; ++e)
        for (int t = 0; t < 10; ++t) {
          const Codeword c = random_codeword(code, rng);
          const auto rs = corrupt(c, {e, eps}, code, rng);
          ASSERT_EQ(subspace_distance(rs.space, c.subspace), e + eps);
          ASSERT_EQ(rs.dim(), k - eps + e);
          ASSERT_EQ(rs.blocks.size(), r);
        }
  }
}

TEST(Corrupt, Examples) {
  const SpreadCode code(2, 3, 2);
  std::mt19937_64 rng(137);
  const Codeword c = random_codeword(code, rng);
  EXPECT_EQ(corrupt(c, {0, 0}, code, rng).space, c.subspace);
  const auto one = corrupt(c, {0, 1}, code, rng);
  EXPECT_EQ(one.dim(), 2u);
  EXPECT_EQ(subspace_distance(one.space, c.subspace), 1u);
  for (int t = 0; t < 20; ++t) {
    const auto rs = corrupt(c, {1, 1}, code, rng);
    EXPECT_EQ(subspace_distance(rs.space, c.subspace), 2u);
    const auto nearest = oracle::brute_force_decode(rs.space, code);
    ASSERT_EQ(nearest.codewords.size(), 1u);
    EXPECT_EQ(nearest.codewords[0].subspace, c.subspace);
    const auto out = decode(rs, code);
    ASSERT_TRUE(out.ok());
    EXPECT_EQ(out.codeword->subspace, c.subspace);
  }
}

TEST(Corrupt, ImpossibleSpecs) {
  const SpreadCode code(2, 2, 2);
  std::mt19937_64 rng(139);
  const Codeword c = random_codeword(code, rng);
  EXPECT_THROW(corrupt(c, {0, 3}, code, rng), std::domain_error);
  EXPECT_THROW(corrupt(c, {3, 0}, code, rng), std::domain_error);
}

TEST(Simulate, DeterministicUnderSeed) {
  const SpreadCode code(2, 3, 3);
  const std::vector<ChannelSpec> grid{{1, 1}, {0, 2}, {0, 0}, {1, 2}, {2, 2}};
  const auto a = simulate(code, 30, grid, 42);
  const auto b = simulate(code, 30, grid, 42);
  EXPECT_EQ(a, b);
  const auto c = simulate(code, 30, grid, 43);
  bool any_diff = false;
  for (std::size_t i = 0; i < a.size(); ++i) any_diff = any_diff || a[i].mean_ops != c[i].mean_ops;
  EXPECT_TRUE(any_diff);
  // Cells come out sorted by (errors, erasures).
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_LT(a[i - 1].spec, a[i].spec);
}

TEST(Simulate, TrialIsReplayableInIsolation) {
  const SpreadCode code(2, 3, 2);
  const ChannelSpec spec{1, 1};
  auto rng_a = trial_rng(9, spec, 17);
  auto rng_b = trial_rng(9, spec, 17);
  const auto ca = random_codeword(code, rng_a);
  const auto cb = random_codeword(code, rng_b);
  EXPECT_EQ(ca.subspace, cb.subspace);
  EXPECT_EQ(corrupt(ca, spec, code, rng_a).space, corrupt(cb, spec, code, rng_b).space);
}

TEST(Simulate, WithinRadiusAlwaysSucceeds) {
  for (auto [q, k, r] : {std::tuple{2u, 3u, 2u}, std::tuple{2u, 4u, 3u}, std::tuple{3u, 3u, 2u}, std::tuple{2u, 5u, 2u}}) {
    const SpreadCode code(q, k, r);
    std::vector<ChannelSpec> grid;
    for (std::size_t eps = 0; eps < k; ++eps)
      for (std::size_t e = 0; e <= eps && e + eps < k; ++e) grid.push_back({e, eps});
    for (const auto& cell : simulate(code, 40, grid, 7)) {
      EXPECT_EQ(cell.successes, cell.trials) << "e=" << cell.spec.errors << " eps=" << cell.spec.erasures;
      EXPECT_EQ(cell.failures, 0u);
    }
  }
}

TEST(Simulate, MoreErrorsThanErasuresExceedsDecoderDimension) {
  // dim R = k - eps + e > k is outside the decoder's input range.
  const SpreadCode code(2, 3, 2);
  const auto cells = simulate(code, 10, {{1, 0}}, 5);
  EXPECT_EQ(cells[0].successes, 0u);
  std::mt19937_64 rng(149);
  const auto rs = corrupt(random_codeword(code, rng), {1, 0}, code, rng);
  EXPECT_EQ(decode(rs, code).status, DecodeStatus::kInvalidInput);
}

TEST(Simulate, NoiselessTrialsHitMembership) {
  const SpreadCode code(3, 3, 2);
  for (std::uint64_t t = 0; t < 50; ++t) {
    auto rng = trial_rng(11, {0, 0}, t);
    const Codeword c = random_codeword(code, rng);
    const auto rs = corrupt(c, {0, 0}, code, rng);
    const auto pair = decode2(rs.blocks[0], rs.blocks[1], code);
    ASSERT_TRUE(pair.ok());
    EXPECT_EQ(pair.path, DecodePath::kMembership);
  }
  const auto cells = simulate(code, 50, {{0, 0}}, 11);
  EXPECT_EQ(cells[0].successes, 50u);
}

TEST(OpCounter, ThreadLocalAttribution) {
  const SpreadCode code(2, 5, 2);
  std::mt19937_64 rng(151);
  const auto rs = corrupt(random_codeword(code, rng), {2, 2}, code, rng);
  auto measure = [&] {
    ScopedOpCounter c;
    (void)decode(rs, code);
    return c.elapsed().ext_ops();
  };
  const std::uint64_t alone = measure();
  EXPECT_GT(alone, 0u);
  std::uint64_t a = 0, b = 0;
  std::thread t1([&] { a = measure(); });
  std::thread t2([&] { b = measure(); });
  t1.join();
  t2.join();
  EXPECT_EQ(a, alone);
  EXPECT_EQ(b, alone);
}
