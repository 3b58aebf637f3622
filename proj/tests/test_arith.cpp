#include <gtest/gtest.h>

#include <random>

#include "hecke_stab/linalg.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace hecke_stab;

namespace {

Poly from_oracle(const oracle::P& p) { return Poly(p); }
Scalar q() { return Scalar::q(); }

Scalar random_scalar(std::mt19937_64& rng) {
  Poly num = from_oracle(oracle::random_poly(rng, 3));
  Poly den = from_oracle(oracle::random_poly(rng, 2));
  if (den.is_zero()) den = Poly(1);
  return Scalar(num, den);
}

}  // namespace

TEST(Scalar, Examples) {
  EXPECT_EQ((q() - Scalar(1)) + Scalar(1), q());
  EXPECT_EQ(q() * q().inverse(), Scalar(1));
  EXPECT_EQ((q() * q() - Scalar(1)) / (q() + Scalar(1)), q() - Scalar(1));
}

TEST(Scalar, ZeroDivisor) {
  EXPECT_THROW(Scalar(1) / Scalar(0), Error);
  try {
    (void)Scalar(0).inverse();
  } catch (const Error& e) {
    EXPECT_EQ(e.tag(), "zero divisor");
  }
}

TEST(Scalar, Specialize) {
  EXPECT_EQ((q() + Scalar(1)).specialize(2), 3);
  try {
    (void)(Scalar(1) / (q() - Scalar(1))).specialize(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.tag(), "pole");
  }
  EXPECT_EQ(((q() * q() - Scalar(1)) / (q() - Scalar(1))).specialize(3), 4);
}

TEST(Scalar, NormalForm) {
  const Scalar x = (q() * q() - Scalar(1)) / (Scalar(2) * q() - Scalar(2));
  EXPECT_TRUE(x.is_polynomial());
  EXPECT_EQ(x, (q() + Scalar(1)) / Scalar(2));
  EXPECT_EQ(Scalar(0).serialize(), "[]/[1*q^0]");
}

TEST(Scalar, FieldAxiomsRandom) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), Scalar(1));
    }
    EXPECT_EQ(Scalar::parse(a.serialize()), a);
    const mpq_class q0(7, 3);
    try {
      EXPECT_EQ((a * b).specialize(q0), a.specialize(q0) * b.specialize(q0));
    } catch (const Error&) {
    }
  }
}

TEST(Poly, LongDivisionOracle) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto a = oracle::random_poly(rng, 5);
    auto b = oracle::random_poly(rng, 3);
    if (b.empty()) continue;
    auto r = oracle::random_poly(rng, static_cast<int>(b.size()) - 2 >= 0 ? static_cast<int>(b.size()) - 2 : 0);
    if (r.size() >= b.size()) r.resize(b.size() - 1);
    oracle::trim(r);
    const auto num = oracle::add(oracle::mul(a, b), r);
    Poly quo, rem;
    Poly::divmod(from_oracle(num), from_oracle(b), quo, rem);
    EXPECT_EQ(quo, from_oracle(a));
    EXPECT_EQ(rem, from_oracle(r));
  }
}

TEST(Poly, GcdDividesAndIsMonic) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto c = from_oracle(oracle::random_poly(rng, 2));
    const auto a = from_oracle(oracle::random_poly(rng, 3)) * c;
    const auto b = from_oracle(oracle::random_poly(rng, 3)) * c;
    if (a.is_zero() || b.is_zero()) continue;
    const Poly g = Poly::gcd(a, b);
    EXPECT_EQ(g.lead(), 1);
    Poly quo, rem;
    Poly::divmod(a, g, quo, rem);
    EXPECT_TRUE(rem.is_zero());
    if (c.degree() > 0) {
      EXPECT_GE(g.degree(), c.degree());
    }
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(ExactMatrix::identity(2)), 2u);
  EXPECT_EQ(rank(ExactMatrix::from_rows({{q(), q() * q()}, {Scalar(1), q()}})), 1u);
  EXPECT_EQ(rank(ExactMatrix(0, 0)), 0u);
}

TEST(Rank, MatchesSpecializedOracleAndTranspose) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = rng() % 6 + 1, c = rng() % 6 + 1, k = rng() % 4 + 1;
    // Product of r x k and k x c random matrices has rank <= k.
    std::vector<std::vector<Scalar>> a(r, std::vector<Scalar>(k)), b(k, std::vector<Scalar>(c));
    for (auto& row : a)
      for (auto& x : row) x = rng() % 3 ? Scalar(from_oracle(oracle::random_poly(rng, 2))) : Scalar();
    for (auto& row : b)
      for (auto& x : row) x = rng() % 3 ? Scalar(from_oracle(oracle::random_poly(rng, 2))) : Scalar();
    const ExactMatrix m = ExactMatrix::from_rows(a) * ExactMatrix::from_rows(b);
    std::size_t expected = 0;
    for (long p : {5L, 7L, 11L, 13L, 17L}) {
      std::vector<std::vector<mpq_class>> dense(r, std::vector<mpq_class>(c));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) dense[i][j] = m.at(i, j).specialize(mpq_class(p, 3));
      expected = std::max(expected, oracle::rank(dense));
    }
    EXPECT_EQ(rank(m), expected);
    EXPECT_EQ(rank(m.transpose()), expected);
    EXPECT_EQ(rank(m, RankMode::specialized(3, 99)), expected);
  }
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(kernel_basis(ExactMatrix::identity(3)).empty());
  const auto k = kernel_basis(ExactMatrix::from_rows({{q(), q() * q()}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(entry(k[0], 0), -q() * entry(k[0], 1));
  EXPECT_EQ(kernel_basis(ExactMatrix(2, 3)).size(), 3u);
}

TEST(Kernel, AnnihilatesAndRankNullity) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = rng() % 5 + 1, c = rng() % 6 + 1;
    std::vector<std::vector<Scalar>> a(r, std::vector<Scalar>(c));
    for (auto& row : a)
      for (auto& x : row) x = rng() % 2 ? Scalar(from_oracle(oracle::random_poly(rng, 2))) : Scalar();
    if (r > 1) a[r - 1] = a[0];
    const ExactMatrix m = ExactMatrix::from_rows(a);
    const auto k = kernel_basis(m);
    for (const auto& v : k) EXPECT_TRUE(m.apply(v).empty());
    EXPECT_EQ(k.size() + rank(m), c);
  }
}

TEST(Quotient, Examples) {
  const ExactMatrix map = ExactMatrix::from_rows({{q(), Scalar(1)}, {Scalar(0), Scalar(1)}});
  // The empty subspace.
  auto none = quotient_structure(2, {}, {map});
  EXPECT_EQ(none.quotient.projection, ExactMatrix::identity(2));
  EXPECT_EQ(none.induced_maps[0], map);
  // The whole space.
  auto all = quotient_structure(2, {unit_vector(0), unit_vector(1)}, {map});
  EXPECT_EQ(all.quotient.projection.rows(), 0u);
  EXPECT_EQ(all.quotient.projection.cols(), 2u);
  EXPECT_EQ(all.induced_maps[0].rows(), 0u);
  // span{(1,0)} with a map preserving it: quotient coordinate is the second one.
  auto line = quotient_structure(2, {unit_vector(0)}, {map});
  EXPECT_EQ(line.quotient.dim(), 1u);
  EXPECT_EQ(line.induced_maps[0], ExactMatrix::identity(1));
  EXPECT_EQ(line.quotient.projection * map, line.induced_maps[0] * line.quotient.projection);
}

TEST(Quotient, NotInvariant) {
  const ExactMatrix swap = ExactMatrix::from_rows({{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}});
  try {
    (void)quotient_structure(2, {unit_vector(0)}, {swap});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.tag(), "not invariant");
  }
}
