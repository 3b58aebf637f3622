#include <gtest/gtest.h>

#include <set>

#include "hecke_stab/cosets.hpp"
#include "hecke_stab/hecke.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace hecke_stab;

namespace {

std::set<oracle::Line> lines(const std::vector<Permutation>& v) {
  std::set<oracle::Line> s;
  for (const auto& p : v) s.insert(p.one_line());
  return s;
}

std::vector<std::vector<int>> compositions(int n, int max_parts) {
  std::vector<std::vector<int>> out{{}};
  std::vector<std::vector<int>> result;
  for (int parts = 1; parts <= max_parts; ++parts) {
    std::vector<std::vector<int>> next;
    for (const auto& c : out)
      for (int p = 0; p <= n; ++p) {
        auto d = c;
        d.push_back(p);
        next.push_back(d);
      }
    out = next;
    for (const auto& c : out) {
      int s = 0;
      for (int p : c) s += p;
      if (s == n) result.push_back(c);
    }
  }
  return result;
}

}  // namespace

TEST(Permutation, Length) {
  EXPECT_EQ(Permutation(4).length(), 0);
  EXPECT_EQ(Permutation::from_one_line({2, 3, 1}).length(), 2);
  EXPECT_EQ(Permutation::from_one_line({3, 2, 1}).length(), 3);
  EXPECT_EQ(Permutation::from_word(3, {1, 2}), Permutation::from_one_line({2, 3, 1}));
}

TEST(Permutation, ReducedWordExamples) {
  EXPECT_TRUE(Permutation(3).reduced_word().empty());
  EXPECT_EQ(Permutation::from_one_line({2, 1}).reduced_word(), std::vector<int>({1}));
  EXPECT_EQ(Permutation::from_one_line({3, 2, 1}).reduced_word(), std::vector<int>({1, 2, 1}));
}

TEST(Permutation, ReducedWordsAreReducedAndLexMinimal) {
  for (int n = 1; n <= 5; ++n) {
    // All reduced words by BFS over lengths; the lexicographically smallest one must match.
    std::map<oracle::Line, std::vector<int>> best;
    best[Permutation(n).one_line()] = {};
    std::vector<std::vector<int>> frontier{{}};
    for (int len = 1; len <= n * (n - 1) / 2; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& w : frontier)
        for (int i = 1; i < n; ++i) {
          auto v = w;
          v.push_back(i);
          const auto line = Permutation::from_word(n, v).one_line();
          if (oracle::inversions(line) != len) continue;
          auto it = best.find(line);
          if (it == best.end() || v < it->second) best[line] = v;
          next.push_back(v);
        }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      frontier = next;
    }
    for (const auto& [line, word] : best) EXPECT_EQ(Permutation::from_one_line(line).reduced_word(), word);
  }
}

TEST(Permutation, CompositionAndInverse) {
  for (const auto& u : all_permutations(4))
    for (const auto& v : all_permutations(4)) {
      EXPECT_EQ((u * v).one_line(), oracle::compose(u.one_line(), v.one_line()));
      EXPECT_LE((u * v).length(), u.length() + v.length());
    }
  for (const auto& u : all_permutations(4)) EXPECT_TRUE((u * u.inverse()).is_identity());
}

TEST(Permutation, Embed) {
  const auto w = Permutation::from_one_line({2, 3, 1});
  EXPECT_EQ(w.embed(4).one_line(), std::vector<int>({2, 3, 1, 4}));
  EXPECT_EQ(w.embed(4).reduced_word(), w.reduced_word());
}

TEST(Cosets, Examples) {
  EXPECT_EQ(coset_min_reps(4, Composition({4})).size(), 1u);
  EXPECT_EQ(coset_min_reps(3, Composition({2, 1})).size(), 3u);
  EXPECT_EQ(coset_min_reps(3, Composition({1, 1, 1})).size(), 6u);
  EXPECT_TRUE(coset_min_reps(3, Composition({2, 1}))[0].is_identity());
  try {
    (void)coset_min_reps(3, Composition({2, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.tag(), "composition size");
  }
}

TEST(Cosets, MatchBruteForce) {
  for (int n = 0; n <= 5; ++n)
    for (const auto& c : compositions(n, 3)) {
      const auto reps = coset_min_reps(n, Composition(c));
      EXPECT_EQ(lines(reps), oracle::min_coset_reps(n, c));
      // Lengths add with the Young subgroup.
      for (const auto& d : reps)
        for (const auto& u : oracle::young_subgroup(c))
          EXPECT_EQ(oracle::inversions(oracle::compose(d.one_line(), u)), d.length() + oracle::inversions(u));
    }
  for (int n = 0; n <= 7; ++n)
    for (int m = 0; m <= n; ++m) EXPECT_EQ(coset_min_reps(n, Composition({m, n - m})).size(), binomial(n, m));
}

TEST(DoubleCosets, Examples) {
  EXPECT_EQ(lines(double_coset_min_reps(2, Composition({1, 1}), Composition({1, 1}))),
            (std::set<oracle::Line>{{1, 2}, {2, 1}}));
  EXPECT_EQ(lines(double_coset_min_reps(3, Composition({2, 1}), Composition({2, 1}))),
            (std::set<oracle::Line>{{1, 2, 3}, {1, 3, 2}}));
  EXPECT_EQ(double_coset_min_reps(4, Composition({4}), Composition({2, 1, 1})).size(), 1u);
}

TEST(DoubleCosets, MatchBruteForceAndPartitionTheGroup) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : compositions(n, 3))
      for (const auto& la : compositions(n, 2)) {
        std::vector<std::set<oracle::Line>> cosets;
        const auto expected = oracle::min_double_coset_reps(n, mu, la, &cosets);
        EXPECT_EQ(lines(double_coset_min_reps(n, Composition(mu), Composition(la))), expected);
        std::size_t total = 0;
        for (const auto& dc : cosets) total += dc.size();
        EXPECT_EQ(total, factorial(n));
      }
}

TEST(DoubleCosets, FullBruteForceAtSeven) {
  const std::vector<int> mu{1, 1, 5}, la{3, 4};
  EXPECT_EQ(lines(double_coset_min_reps(7, Composition(mu), Composition(la))), oracle::min_double_coset_reps(7, mu, la));
}

TEST(DoubleCosets, Stabilization) {
  const auto r0 = double_coset_stabilization(0, 0, 4);
  for (const auto& s : r0.chain) EXPECT_EQ(s.reps.size(), 1u);
  const auto r1 = double_coset_stabilization(1, 1, 4);
  EXPECT_EQ(r1.stable_size, 2u);
  EXPECT_LE(r1.stable_from, 1);
  const auto r2 = double_coset_stabilization(2, 1, 5);
  EXPECT_EQ(r2.stable_size, 3u);
  EXPECT_LE(r2.stable_from, 1);
  for (int a = 0; a <= 2; ++a)
    for (int m = 0; m <= 3; ++m) {
      const auto r = double_coset_stabilization(a, m, 6);
      EXPECT_TRUE(r.inclusions_hold);
      EXPECT_TRUE(r.tableau_bijection);
      EXPECT_TRUE(r.stable_by_m);
      for (std::size_t k = 0; k + 1 < r.chain.size(); ++k)
        EXPECT_LE(r.chain[k].tableau_count, r.chain[k + 1].tableau_count);
    }
}

TEST(Conjugacy, MinimalRepresentatives) {
  const auto r3 = conjugacy_min_reps(3);
  EXPECT_TRUE(r3.at(Partition({1, 1, 1})).is_identity());
  EXPECT_EQ(r3.at(Partition({3})).length(), 2);
  EXPECT_EQ(r3.at(Partition({3})), Permutation::from_word(3, {1, 2}));
  EXPECT_EQ(r3.at(Partition({2, 1})), Permutation::simple(3, 1));
  for (int n = 1; n <= 6; ++n) {
    std::map<Partition, int> shortest;
    for (const auto& w : all_permutations(n)) {
      const Partition ct = cycle_type(w);
      auto it = shortest.find(ct);
      if (it == shortest.end() || w.length() < it->second) shortest[ct] = w.length();
    }
    for (const auto& [mu, w] : conjugacy_min_reps(n)) {
      EXPECT_EQ(cycle_type(w), mu);
      EXPECT_EQ(w.length(), shortest.at(mu));
    }
  }
}

TEST(Cosets, LengthAdditivityMatchesHeckeProduct) {
  for (const auto& u : all_permutations(3))
    for (const auto& v : all_permutations(3)) {
      const bool adds = (u * v).length() == u.length() + v.length();
      EXPECT_EQ(adds, HeckeElement::basis(u) * HeckeElement::basis(v) == HeckeElement::basis(u * v));
    }
}
