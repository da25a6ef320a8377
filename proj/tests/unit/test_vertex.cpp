#include <gtest/gtest.h>

#include "symchar/schur.hpp"
#include "symchar/series.hpp"
#include "symchar/vertex.hpp"

using namespace symchar;

TEST(Vertex, Bernstein) {
  for (int m = 0; m <= 5; ++m) EXPECT_EQ(bernstein(m, one()), s(row(m)));
  EXPECT_EQ(bernstein(2, bernstein(1, one())), s({2, 1}));
  EXPECT_THROW(bernstein(-1, one()), std::invalid_argument);
  // B_1 s_(2) corresponds to {1,2}, which vanishes
  EXPECT_TRUE(bernstein(1, s({2})).is_zero());
}

TEST(Vertex, ChainBuildsSchurFunctions) {
  for (const Partition& lambda : partitions_up_to(6)) ASSERT_EQ(bernstein_chain(lambda), s(lambda)) << to_string(lambda);
}

TEST(Vertex, BernsteinStraightening) {
  // B_a B_b = -B_{b-1} B_{a+1}, the raising operator rule on compositions
  for (int a = 0; a <= 3; ++a)
    for (int b = 1; b <= 4; ++b)
      ASSERT_EQ(bernstein(a, bernstein(b, one())), -bernstein(b - 1, bernstein(a + 1, one()))) << a << "," << b;
}

TEST(Vertex, ReducedEmbedding) {
  EXPECT_EQ(reduced_embedding({}, 3), one() + s({1}) + s({2}) + s({3}));
  const SymFunc m3 = series_terms(SeriesId::M, 3).sum();
  EXPECT_EQ(reduced_embedding({1}, 3), truncate(outer_mul(s({1}) - one(), m3), 3));
  for (const Partition& mu : partitions_up_to(3)) {
    const int cap = 8;
    const SymFunc e = reduced_embedding(mu, cap);
    for (int n = mu.weight() + mu[0]; n <= cap; ++n) {
      std::vector<int> parts{n - mu.weight()};
      parts.insert(parts.end(), mu.begin(), mu.end());
      ASSERT_EQ(homogeneous_part(e, n), s(Partition(parts))) << to_string(mu) << " n=" << n;
    }
  }
}

TEST(Vertex, Commutation) {
  EXPECT_EQ(commutator_lhs(one(), 3), commutator_rhs(one(), 3));
  EXPECT_TRUE(check_commutation(4));
  EXPECT_TRUE(check_commutation(0));
}

TEST(Vertex, SeriesPairing) {
  const auto pairing = series_pairing_lm(4);
  for (int z = 0; z <= 4; ++z)
    for (int w = 0; w <= 4; ++w) {
      auto it = pairing.find({z, w});
      const Integer v = it == pairing.end() ? Integer(0) : it->second;
      Integer expected = 0;
      if (z == 0 && w == 0) expected = 1;
      if (z == 1 && w == 1) expected = -1;
      ASSERT_EQ(v, expected) << z << "," << w;
    }
}
