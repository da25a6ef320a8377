#include <gtest/gtest.h>

#include "symchar/hash.hpp"
#include "symchar/inner.hpp"
#include "symchar/schur.hpp"

using namespace symchar;

namespace {

const char* kSpecs[] = {"trivial", "thibon", "newell-littlewood", "murnaghan-littlewood"};

} // namespace

TEST(Hash, NamedProducts) {
  const HashProduct trivial = build_hash(named_hash_spec("trivial"));
  for (const Partition& a : partitions_up_to(4))
    for (const Partition& b : partitions_up_to(4)) ASSERT_EQ(trivial(s(a), s(b)), outer_mul(s(a), s(b)));
  EXPECT_EQ(build_hash(named_hash_spec("thibon"))(s({1}), s({1})), s({2}) + s({1, 1}) + s({1}));
  EXPECT_EQ(build_hash(named_hash_spec("newell-littlewood"))(s({1}), s({1})), s({2}) + s({1, 1}) + one());
  EXPECT_THROW(named_hash_spec("nope"), std::invalid_argument);
}

TEST(Hash, StagesMatchConvolutionDefinition) {
  // x # y = (a_1 * ... * a_k * m)(x, y) with the convolution of pairings
  for (const char* name : kSpecs) {
    const HashSpec spec = named_hash_spec(name);
    const HashProduct product = build_hash(spec);
    const Pairing via_convolution = convolve2(product.composite_pairing(), outer_pairing());
    for (const Partition& a : partitions_up_to(4))
      for (const Partition& b : partitions_up_to(4 - a.weight()))
        ASSERT_EQ(product(s(a), s(b)), via_convolution(a, b)) << name << " " << to_string(a) << "," << to_string(b);
  }
}

TEST(Hash, AssociativeAndUnital) {
  for (const char* name : kSpecs) {
    const CheckResult r = hash_is_associative(named_hash_spec(name), 6);
    EXPECT_TRUE(r.ok) << name << ": " << r.witness;
  }
}

TEST(Hash, HopfAgreesWithBialgebraLaw) {
  for (const char* name : kSpecs) {
    const HashSpec spec = named_hash_spec(name);
    EXPECT_EQ(hash_is_hopf(spec, 4).ok, hash_bialgebra_law(spec, 4).ok) << name;
  }
  EXPECT_TRUE(hash_is_hopf(named_hash_spec("thibon"), 4));
  EXPECT_TRUE(hash_is_hopf(named_hash_spec("trivial"), 4));
  EXPECT_FALSE(hash_is_hopf(named_hash_spec("newell-littlewood"), 4).ok);
}

TEST(Hash, ThibonInterpolation) {
  const HashProduct thibon = build_hash(named_hash_spec("thibon"));
  for (int n = 1; n <= 5; ++n)
    for (const Partition& x : partitions_of(n))
      for (const Partition& y : partitions_of(n)) {
        const SymFunc r = thibon(s(x), s(y));
        ASSERT_EQ(homogeneous_part(r, n), inner_mul(s(x), s(y)));
        ASSERT_EQ(homogeneous_part(r, 2 * n), outer_mul(s(x), s(y)));
        ASSERT_EQ(min_degree(r), n);
        ASSERT_EQ(max_degree(r), 2 * n);
      }
}

TEST(Hash, SpecFromNames) {
  const HashSpec spec = hash_spec_from_names({{"inner", "id"}}, "id");
  const HashProduct a = build_hash(spec);
  const HashProduct b = build_hash(named_hash_spec("thibon"));
  for (const Partition& x : partitions_up_to(3))
    for (const Partition& y : partitions_up_to(3)) ASSERT_EQ(a(s(x), s(y)), b(s(x), s(y)));
  EXPECT_THROW(hash_spec_from_names({{"inner", "nope"}}, "id"), std::invalid_argument);
}

TEST(Hash, BuildRejectsNonLaplaceStage) {
  EXPECT_THROW(build_hash(hash_spec_from_names({{"outer", "id"}}, "id")), std::invalid_argument);
}

TEST(Hash, InversePairs) {
  EXPECT_TRUE(is_inverse_pair(SeriesId::M, SeriesId::L, 6));
  EXPECT_TRUE(is_inverse_pair(SeriesId::D, SeriesId::C, 6));
  EXPECT_FALSE(is_inverse_pair(SeriesId::M, SeriesId::D, 4).ok);
}

TEST(Hash, DeformedCoproduct) {
  EXPECT_EQ(deformed_coproduct(s({1}), SeriesId::M, SeriesId::L), coproduct(s({1})) + tensor({}, {}));
  EXPECT_EQ(deformed_coproduct(s({2}), SeriesId::C, SeriesId::D), coproduct(s({2})) - tensor({}, {}));
  EXPECT_EQ(deformed_coproduct(one(), SeriesId::M, SeriesId::L), tensor({}, {}));
  EXPECT_THROW(deformed_coproduct(s({1}), SeriesId::M, SeriesId::D), std::invalid_argument);
}

TEST(Hash, DeformedCoproductLeftAndRightFormsAgree) {
  // x_(1) <M|x_(2)> (x) x_(3) = x_(1) (x) x_(2) <M|x_(3)>
  for (SeriesId id : {SeriesId::M, SeriesId::C, SeriesId::D}) {
    for (const Partition& p : partitions_up_to(5)) {
      TensorSymFunc left;
      for (const auto& [legs, c] : iterated_coproduct(s(p), 3)) {
        Integer pair = 0;
        for (const auto& [q, v] : series_term(id, legs[1].weight()))
          if (q == legs[1]) pair = v;
        left.add({legs[0], legs[2]}, c * pair);
      }
      ASSERT_EQ(left, deformed_coproduct(s(p), id, inverse_series(id))) << to_string(p);
    }
  }
}

TEST(Hash, BasisChange) {
  EXPECT_EQ(basis_change(s({2}), BasisDirection::to_subgroup, SeriesId::D, SeriesId::C), s({2}) + one());
  EXPECT_EQ(basis_change(s({2}) + one(), BasisDirection::to_group, SeriesId::D, SeriesId::C), s({2}));
  for (SeriesId id : {SeriesId::M, SeriesId::A, SeriesId::C, SeriesId::D})
    for (const Partition& p : partitions_up_to(6)) {
      const SymFunc down = basis_change(s(p), BasisDirection::to_subgroup, id, inverse_series(id));
      ASSERT_EQ(basis_change(down, BasisDirection::to_group, id, inverse_series(id)), s(p));
    }
}
