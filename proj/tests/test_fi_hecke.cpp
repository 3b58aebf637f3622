#include <gtest/gtest.h>

#include "hecke_stab/sequence.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace hecke_stab;

namespace {

std::size_t falling(int n, int m) {
  std::size_t r = 1;
  for (int k = 0; k < m; ++k) r *= static_cast<std::size_t>(n - k);
  return n >= m ? r : 0;
}

// Multiplicities of M(S^lambda)_n from horizontal strips, keyed by unpadded labels.
std::map<Partition, int> pieri_column(const Partition& lambda, int n) {
  std::map<Partition, int> out;
  if (n < lambda.size()) return out;
  for (const auto& mu : oracle::partitions(n))
    if (oracle::horizontal_strip(lambda.parts(), mu)) {
      std::vector<int> tail(mu.begin() + (mu.empty() ? 0 : 1), mu.end());
      out[Partition(tail)] += 1;
    }
  return out;
}

const ConsistentSequence& m1() {
  static const ConsistentSequence v = build_Mm(1, 5);
  return v;
}

}  // namespace

TEST(Consistency, BuiltSequencesPass) {
  for (int m = 0; m <= 3; ++m) EXPECT_TRUE(check_consistency(build_Mm(m, 5)).ok());
  EXPECT_TRUE(check_consistency(zero_sequence(4)).ok());
  for (const auto& l : {Partition({1}), Partition({2}), Partition({1, 1}), Partition({2, 1})})
    EXPECT_TRUE(check_consistency(build_M_specht(l, 5)).ok());
}

TEST(Consistency, FaultInjectionIsLocated) {
  auto v = build_Mm(1, 4);
  const Scalar old = v.connectors[3].at(0, 0);
  v.connectors[3].set(0, 0, old + Scalar(1));
  const auto rep = check_consistency(v);
  ASSERT_FALSE(rep.ok());
  for (const auto& [n, i] : rep.violations) EXPECT_EQ(n, 3);
  auto w = build_Mm(1, 4);
  w.connectors[2] = ExactMatrix(1, 1);
  EXPECT_EQ(check_consistency(w).violations, (std::vector<std::pair<int, int>>{{2, 0}}));
}

TEST(BuildM, Dimensions) {
  const auto index_seq = build_M({{0, one_dim_rep(0, OneDimKind::index)}}, 5);
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(index_seq.dim(n), 1u);
  for (int m = 0; m <= 3; ++m) {
    const auto v = build_Mm(m, 5);
    for (int n = 0; n <= 5; ++n) EXPECT_EQ(v.dim(n), falling(n, m)) << "m=" << m << " n=" << n;
  }
  EXPECT_EQ(build_M_specht(Partition(), 4).dims(), (std::vector<std::size_t>{1, 1, 1, 1, 1}));
  EXPECT_EQ(build_M_specht(Partition({1}), 3).dim(3), 3u);
  EXPECT_EQ(build_M_specht(Partition({2, 1}), 5).dim(5), 20u);
  EXPECT_THROW(build_M_specht(Partition({3}), 2), Error);
}

TEST(BuildM, IndexSequenceIsOneDimIndex) {
  const auto v = build_M_specht(Partition(), 4);
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i < n; ++i) EXPECT_EQ(v.at(n).generator(i), ExactMatrix::from_rows({{Scalar::q()}}));
}

TEST(Span, Examples) {
  const auto& v = m1();
  const auto one = span(v, {Seed{1, unit_vector(0)}});
  EXPECT_EQ(one.sub.seq.dims(), v.dims());
  EXPECT_EQ(one.generation_degree, 1);
  const auto none = span(v, {});
  for (int n = 0; n <= v.n_max; ++n) EXPECT_EQ(none.sub.seq.dim(n), 0u);
  EXPECT_EQ(none.generation_degree, 0);
  std::vector<Seed> all;
  for (int n = 0; n <= v.n_max; ++n)
    for (std::size_t i = 0; i < v.dim(n); ++i) all.push_back(Seed{n, unit_vector(static_cast<Index>(i))});
  const auto full = span(v, all);
  EXPECT_EQ(full.sub.seq.dims(), v.dims());
  EXPECT_EQ(full.generation_degree, generation_degree(v));
  EXPECT_TRUE(check_consistency(full.sub.seq).ok());
}

TEST(Generation, MmGeneratedInDegreeM) {
  for (int m = 0; m <= 3; ++m) EXPECT_EQ(generation_degree(build_Mm(m, 5)), m);
  EXPECT_EQ(generation_degree(zero_sequence(3)), 0);
}

TEST(FreeCover, Examples) {
  const auto f = free_cover(m1(), 1);
  EXPECT_TRUE(check_morphism(f).empty());
  const auto k = kernel(f);
  for (int n = 0; n <= m1().n_max; ++n) {
    EXPECT_EQ(f.source.dim(n), m1().dim(n));
    EXPECT_EQ(k.seq.dim(n), 0u);
  }
  const auto z = free_cover(zero_sequence(3), 0);
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(z.components[n].rows(), 0u);
  EXPECT_THROW(free_cover(build_Mm(2, 4), 1), Error);
}

TEST(FreeCover, KernelByRankNullity) {
  for (const auto& l : {Partition({1}), Partition({1, 1}), Partition({2})}) {
    const auto v = build_M_specht(l, 5);
    const auto f = free_cover(v, l.size());
    const auto k = kernel(f);
    EXPECT_TRUE(check_consistency(k.seq).ok());
    for (int n = 0; n <= v.n_max; ++n) EXPECT_EQ(k.seq.dim(n), f.source.dim(n) - v.dim(n));
  }
}

TEST(Pointwise, DirectSumKernelCokernel) {
  const auto& v = m1();
  const auto z = zero_sequence(v.n_max);
  const auto s = direct_sum({&v, &z});
  EXPECT_EQ(s.dims(), v.dims());
  for (int n = 0; n < v.n_max; ++n) EXPECT_EQ(s.connector(n), v.connector(n));
  const auto id = identity_morphism(v);
  for (int n = 0; n <= v.n_max; ++n) {
    EXPECT_EQ(kernel(id).seq.dim(n), 0u);
    EXPECT_EQ(cokernel(id).dim(n), 0u);
  }
  const auto two = build_Mm(2, 4);
  const auto sum = direct_sum({&two, &two});
  EXPECT_TRUE(check_consistency(sum).ok());
  const auto f = free_cover(two, 2);
  const auto c = cokernel(f);
  EXPECT_TRUE(check_consistency(c).ok());
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(c.dim(n), 0u);
}

TEST(Pointwise, Tensor) {
  const auto a = build_Mm(1, 4);
  const auto b = build_M_specht(Partition({1}), 4);
  const auto t = tensor(a, b);
  EXPECT_TRUE(check_consistency(t.left).ok());
  EXPECT_TRUE(check_consistency(t.right).ok());
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(t.left.dim(n), a.dim(n) * b.dim(n));
}

TEST(PhiA, Examples) {
  const auto idx = build_M_specht(Partition(), 5);
  for (int a = 0; a <= 5; ++a) {
    const auto p = phi_a(idx, a);
    EXPECT_TRUE(p.well_defined);
    EXPECT_EQ(p.quotients.size(), static_cast<std::size_t>(5 - a + 1));
    for (const auto& qt : p.quotients) EXPECT_EQ(qt.quotient.dim(), 1u);
    for (const auto& t : p.maps) EXPECT_EQ(t, ExactMatrix::identity(1));
  }
  const auto top = phi_a(m1(), m1().n_max);
  EXPECT_EQ(top.quotients.size(), 1u);
  EXPECT_TRUE(top.maps.empty());
}

TEST(PhiA, LiteralModeVanishes) {
  const auto p = phi_a(build_M_specht(Partition({1}), 5), 1, CoinvariantMode::literal);
  for (std::size_t n = 2; n < p.quotients.size(); ++n) EXPECT_EQ(p.quotients[n].quotient.dim(), 0u);
}

TEST(Degrees, Mm) {
  for (int m = 0; m <= 3; ++m) {
    const auto r = degrees(build_Mm(m, 5), 2);
    EXPECT_TRUE(r.well_defined);
    EXPECT_EQ(r.injective_degree, 0) << m;
    EXPECT_EQ(r.surjective_degree, m) << m;
  }
}

TEST(Degrees, SpechtStabilityDegreeIsFirstRow) {
  for (const auto& l : {Partition({1}), Partition({2}), Partition({1, 1}), Partition({2, 1})}) {
    const auto v = build_M_specht(l, 6);
    const auto r = degrees(v, 2);
    EXPECT_EQ(r.stability_degree, l.first()) << l.to_string();
    EXPECT_LE(r.surjective_degree, generation_degree(v));
  }
}

TEST(Degrees, SpecializedMatchesExact) {
  const auto v = build_Mm(2, 5);
  const auto e = degrees(v, 2);
  const auto s = degrees(v, 2, RankMode::specialized(3, 7));
  EXPECT_EQ(e.injective_degree, s.injective_degree);
  EXPECT_EQ(e.surjective_degree, s.surjective_degree);
  EXPECT_EQ(e.stability_degree, s.stability_degree);
}

TEST(Weight, Examples) {
  EXPECT_EQ(weight(build_M_specht(Partition({2}), 5)), 2);
  EXPECT_EQ(weight(zero_sequence(4)), 0);
  EXPECT_EQ(weight(m1()), 1);
  for (const auto& l : {Partition({1, 1}), Partition({2, 1}), Partition({3})})
    EXPECT_EQ(weight(build_M_specht(l, 6)), l.size());
}

TEST(Multiplicities, MatchHorizontalStrips) {
  for (const auto& l : {Partition(), Partition({1}), Partition({2}), Partition({1, 1}), Partition({2, 1})}) {
    const auto v = build_M_specht(l, 6);
    const auto t = multiplicity_table(v);
    EXPECT_TRUE(t.invalid_pad.empty());
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(t.column(n), pieri_column(l, n)) << l.to_string() << " n=" << n;
    for (int n = l.first() + l.size(); n < 6; ++n) EXPECT_EQ(t.column(n), t.column(n + 1));
  }
  const auto t0 = multiplicity_table(build_Mm(0, 4));
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(t0.column(n), (std::map<Partition, int>{{Partition(), 1}}));
  const auto t1 = multiplicity_table(build_M_specht(Partition({1}), 5));
  for (int n = 2; n <= 5; ++n) EXPECT_EQ(t1.column(n), (std::map<Partition, int>{{Partition(), 1}, {Partition({1}), 1}}));
  EXPECT_EQ(multiplicity_table(build_M_specht(Partition({2, 1}), 6)).column(6).size(),
            stable_multiplicity_oracle(Partition({2, 1}), 6).size());
}

TEST(Stability, Verdicts) {
  const auto s1 = is_uniformly_stable(build_M_specht(Partition({1}), 6));
  EXPECT_TRUE(s1.stable);
  EXPECT_LE(s1.onset, 2);
  EXPECT_TRUE(s1.within_bound);
  const auto z = is_uniformly_stable(zero_sequence(4));
  EXPECT_TRUE(z.stable);
  EXPECT_EQ(z.onset, 0);
  const auto m2 = build_Mm(2, 5);
  const auto v2 = is_uniformly_stable(m2);
  EXPECT_TRUE(v2.stable);
  EXPECT_LE(v2.onset, 4);
  const auto a = build_M_specht(Partition({2}), 5);
  const auto b = build_M_specht(Partition({1, 1}), 5);
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(m2.dim(n), a.dim(n) + b.dim(n));
}

TEST(Stability, NonFinitelyGeneratedFails) {
  const auto v = non_finitely_generated(5);
  EXPECT_TRUE(check_consistency(v).ok());
  EXPECT_EQ(generation_degree(v), 5);
  EXPECT_FALSE(is_uniformly_stable(v).stable);
}

TEST(Shift, Examples) {
  const auto& v = m1();
  const auto s0 = shift(v, 0);
  EXPECT_EQ(s0.dims(), v.dims());
  const auto s1 = shift(v, 1);
  EXPECT_EQ(s1.n_max, v.n_max - 1);
  for (int n = 0; n <= s1.n_max; ++n) EXPECT_EQ(s1.dim(n), static_cast<std::size_t>(n + 1));
  EXPECT_TRUE(check_consistency(s1).ok());
  const auto twice = shift(shift(build_Mm(2, 5), 1), 1);
  const auto once = shift(build_Mm(2, 5), 2);
  ASSERT_EQ(twice.n_max, once.n_max);
  for (int n = 0; n <= once.n_max; ++n) {
    EXPECT_EQ(twice.at(n).generators(), once.at(n).generators());
    if (n < once.n_max) {
      EXPECT_EQ(twice.connector(n), once.connector(n));
    }
  }
}

TEST(Shift, DecomposeMm) {
  const auto r10 = shift_decompose_Mm(1, 0, 5);
  EXPECT_TRUE(r10.ok());
  for (auto d : r10.complement_dims) EXPECT_EQ(d, 0u);
  const auto r11 = shift_decompose_Mm(1, 1, 5);
  EXPECT_TRUE(r11.ok());
  for (auto d : r11.complement_dims) EXPECT_EQ(d, 1u);
  EXPECT_EQ(r11.complement_generation_degree, 0);
  for (int m = 1; m <= 3; ++m)
    for (int a = 0; a <= 2; ++a) {
      const auto r = shift_decompose_Mm(m, a, 5);
      EXPECT_TRUE(r.ok()) << "m=" << m << " a=" << a;
      EXPECT_LE(r.complement_generation_degree, m - 1);
      for (std::size_t n = 0; n < r.shifted_dims.size(); ++n)
        EXPECT_EQ(r.shifted_dims[n], r.identity_dims[n] + r.complement_dims[n]);
    }
}

TEST(Noetherian, SmallExperiment) {
  const auto r = noetherian_experiment(2, 5, 42, 5);
  EXPECT_EQ(r.runs.size(), 5u);
  EXPECT_TRUE(r.all_finitely_generated);
  EXPECT_TRUE(r.all_stable);
  EXPECT_LE(r.max_generation_degree, 5);
  const auto again = noetherian_experiment(2, 5, 42, 5);
  for (std::size_t t = 0; t < r.runs.size(); ++t) EXPECT_EQ(r.runs[t].dims, again.runs[t].dims);
}

TEST(Noetherian, SeedExtremes) {
  const auto v = build_Mm(2, 5);
  std::vector<Seed> all;
  for (std::size_t i = 0; i < v.dim(2); ++i) all.push_back(Seed{2, unit_vector(static_cast<Index>(i))});
  const auto full = span(v, all);
  EXPECT_EQ(full.generation_degree, 2);
  EXPECT_EQ(full.sub.seq.dims(), v.dims());
  const auto zero = span(v, {Seed{3, {}}});
  EXPECT_EQ(zero.generation_degree, 0);
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(zero.sub.seq.dim(n), 0u);
}
