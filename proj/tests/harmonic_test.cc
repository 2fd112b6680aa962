// Copyright 2026 The fmzv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fmzv/harmonic.h"

#include <random>

#include "gtest/gtest.h"
#include "oracle.h"

namespace fmzv {
namespace {

FpField Field(uint32_t p) { return FpField(PrimeModulus(p)); }

Composition C(std::vector<int> parts) { return Composition(std::move(parts)); }

TEST(CompositionTest, Basics) {
  const Composition c = Composition::Parse("1,2,1");
  EXPECT_EQ(c.depth(), 3);
  EXPECT_EQ(c.weight(), 4);
  EXPECT_EQ(c.Prefix(1), C({1}));
  EXPECT_EQ(c.ReversedSuffix(1), C({1, 2}));
  EXPECT_EQ(c.ToString(), "(1,2,1)");
  EXPECT_EQ(Composition::Parse("").depth(), 0);
  EXPECT_THROW(Composition::Parse("1,,2"), InvalidParameters);
  EXPECT_THROW(Composition::Parse("1,0"), InvalidParameters);
  EXPECT_THROW(Composition::Parse("a"), InvalidParameters);
}

TEST(EnumerateCompositionsTest, Examples) {
  EXPECT_EQ(EnumerateCompositions(4, 3),
            (std::vector<Composition>{C({1, 1, 2}), C({1, 2, 1}), C({2, 1, 1})}));
  EXPECT_EQ(EnumerateCompositions(3, 3), (std::vector<Composition>{C({1, 1, 1})}));
  EXPECT_TRUE(EnumerateCompositions(2, 3).empty());
}

TEST(EnumerateCompositionsTest, CountsAreBinomial) {
  auto binom = [](int n, int r) {
    long long c = 1;
    for (int j = 1; j <= r; ++j) c = c * (n - r + j) / j;
    return c;
  };
  for (int k = 1; k <= 12; ++k) {
    for (int d = 1; d <= k; ++d) {
      const auto all = EnumerateCompositions(k, d);
      EXPECT_EQ(static_cast<long long>(all.size()), binom(k - 1, d - 1));
      EXPECT_TRUE(std::is_sorted(all.begin(), all.end(),
                                 [](const Composition& a, const Composition& b) {
                                   return std::lexicographical_compare(
                                       a.parts().begin(), a.parts().end(),
                                       b.parts().begin(), b.parts().end());
                                 }));
      for (const auto& c : all) EXPECT_EQ(c.weight(), k);
    }
  }
}

TEST(HarmonicSumTest, Examples) {
  EXPECT_EQ(HarmonicSum(Field(5), C({1, 1})), Fp{0});
  EXPECT_EQ(HarmonicSum(Field(7), Composition()), Fp{1});
  EXPECT_EQ(HarmonicSum(Field(5), C({4})), Fp{4});
  // Depth >= p: the strict chain is empty.
  EXPECT_EQ(HarmonicSum(Field(3), C({1, 1, 1})), Fp{0});
  EXPECT_EQ(HarmonicSum(Field(5), C({1, 1, 1, 1, 1})), Fp{0});
}

TEST(HarmonicStarSumTest, Examples) {
  const FpField f5 = Field(5);
  EXPECT_EQ(HarmonicStarSum(f5, C({1})), HarmonicSum(f5, C({1})));
  EXPECT_EQ(HarmonicStarSum(f5, C({1, 1})),
            f5.Add(HarmonicSum(f5, C({1, 1})), HarmonicSum(f5, C({2}))));
  // Frozen from the brute-force oracle.
  EXPECT_EQ(HarmonicStarSum(Field(7), C({1, 2})), Fp{3});
  EXPECT_EQ(HarmonicSum(Field(13), C({2, 3})), Fp{7});
  EXPECT_EQ(HarmonicStarSum(Field(7), Composition()), Fp{1});
  // Non-strict chains exist for any depth.
  EXPECT_EQ(HarmonicStarSum(Field(3), C({1, 1, 1})).v,
            oracle::H(3, {1, 1, 1}, true));
}

TEST(HarmonicSumTest, MatchesBruteForceOnRandomCompositions) {
  std::mt19937_64 rng(11);
  for (uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u}) {
    const FpField f = Field(p);
    for (int t = 0; t < 40; ++t) {
      const int d = 1 + static_cast<int>(rng() % 4);
      std::vector<int> parts(d);
      for (auto& k : parts) k = 1 + static_cast<int>(rng() % 6);
      EXPECT_EQ(HarmonicSum(f, C(parts)).v, oracle::H(p, parts, false));
      EXPECT_EQ(HarmonicStarSum(f, C(parts)).v, oracle::H(p, parts, true));
    }
  }
}

TEST(HarmonicSumTest, DepthOneStarEqualsPlain) {
  for (uint32_t p : {5u, 7u, 11u}) {
    for (int k = 1; k <= 20; ++k) {
      EXPECT_EQ(HarmonicSum(Field(p), C({k})), HarmonicStarSum(Field(p), C({k})));
    }
  }
}

// H* is the sum of H over all ways to merge adjacent parts (each "=" between
// consecutive indices fuses two exponents).
TEST(HarmonicStarSumTest, ContractionDecomposition) {
  std::mt19937_64 rng(5);
  for (uint32_t p : {7u, 11u, 13u}) {
    const FpField f = Field(p);
    for (int t = 0; t < 30; ++t) {
      const int d = 1 + static_cast<int>(rng() % 3);
      std::vector<int> parts(d);
      for (auto& k : parts) k = 1 + static_cast<int>(rng() % 4);
      Fp total = f.Zero();
      for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
        std::vector<int> merged{parts[0]};
        for (int j = 1; j < d; ++j) {
          if (mask & (1u << (j - 1))) {
            merged.back() += parts[j];
          } else {
            merged.push_back(parts[j]);
          }
        }
        total = f.Add(total, HarmonicSum(f, C(merged)));
      }
      EXPECT_EQ(HarmonicStarSum(f, C(parts)), total);
    }
  }
}

TEST(AntipodeTest, Examples) {
  EXPECT_EQ(AntipodeSum(Field(5), C({1, 1})), Fp{0});
  EXPECT_EQ(AntipodeSum(Field(7), C({2})), Fp{0});
  EXPECT_EQ(AntipodeSum(Field(11), C({1, 2, 1})), Fp{0});
  EXPECT_THROW(AntipodeSum(Field(5), Composition()), InvalidParameters);
}

TEST(AntipodeTest, VanishesPerPrime) {
  std::mt19937_64 rng(23);
  for (uint32_t p : {3u, 5u, 7u, 11u, 29u}) {
    for (int t = 0; t < 25; ++t) {
      const int d = 1 + static_cast<int>(rng() % 5);
      std::vector<int> parts(d);
      for (auto& k : parts) k = 1 + static_cast<int>(rng() % 3);
      EXPECT_EQ(AntipodeSum(Field(p), C(parts)), Fp{0})
          << "p=" << p << " " << C(parts).ToString();
    }
  }
}

// sum over compositions of k into d parts of H_p = -1 if (p-1) | k else 0,
// for 0 < d < p.
TEST(HarmonicSumTest, FixedDepthSumFormula) {
  for (uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
    const FpField f = Field(p);
    for (int k = 1; k <= 12; ++k) {
      for (int d = 1; d <= k && static_cast<uint32_t>(d) < p; ++d) {
        Fp total = f.Zero();
        ForEachComposition(k, d, [&](const Composition& c) {
          total = f.Add(total, HarmonicSum(f, c));
        });
        const Fp expected = k % (p - 1) == 0 ? f.FromInt(-1) : f.Zero();
        EXPECT_EQ(total, expected) << "p=" << p << " k=" << k << " d=" << d;
      }
    }
  }
}

}  // namespace
}  // namespace fmzv
