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

#include "fmzv/identity.h"

#include <functional>
#include <set>

#include "gtest/gtest.h"

namespace fmzv {
namespace {

// f evaluated by explicit chain enumeration.
Fp2 BruteF(const Fp2Field& F, const std::vector<Fp2>& x) {
  const int d = static_cast<int>(x.size());
  Fp2 total = F.Zero();
  std::vector<uint32_t> n(d);
  std::function<void(int, uint32_t)> rec = [&](int j, uint32_t lo) {
    if (j == d) {
      Fp2 t = F.One();
      for (int i = 0; i < d; ++i) {
        t = F.Mul(t, F.Inv(F.Sub(F.FromInt(n[i]), x[i])));
      }
      total = F.Add(total, t);
      return;
    }
    for (uint32_t m = lo; m < F.p(); ++m) {
      n[j] = m;
      rec(j + 1, m + 1);
    }
  };
  rec(0, 1);
  return total;
}

std::vector<Fp2> Rep(Fp2 c, int n) { return std::vector<Fp2>(n, c); }

class IdentityTest : public ::testing::Test {
 protected:
  Fp2 Point(const Fp2Field& F, uint64_t idx) {
    PointSampler s(F, 1234, idx);
    return s.NextNonBase();
  }
};

TEST_F(IdentityTest, SamplerIsDeterministicAndOffBaseField) {
  const Fp2Field F(PrimeModulus(7));
  for (uint64_t i = 0; i < 50; ++i) {
    PointSampler a(F, 42, i), b(F, 42, i);
    const Fp2 x = a.NextNonBase();
    EXPECT_EQ(x, b.NextNonBase());
    EXPECT_FALSE(F.InBaseField(x));
    EXPECT_LT(x.a.v, 7u);
    EXPECT_LT(x.b.v, 7u);
  }
  EXPECT_NE(DeriveStreamSeed(1, 0), DeriveStreamSeed(1, 1));
  EXPECT_NE(DeriveStreamSeed(1, 0), DeriveStreamSeed(2, 0));
}

TEST_F(IdentityTest, EvalFExamples) {
  const Fp2Field F5(PrimeModulus(5));
  EXPECT_EQ(EvalF(F5, {}), F5.One());
  const Fp2 zero[] = {F5.Zero()};
  EXPECT_EQ(EvalF(F5, zero), F5.Zero());
  const Fp2 pole[] = {F5.FromInt(3)};
  EXPECT_THROW(EvalF(F5, pole), PoleError);
}

TEST_F(IdentityTest, EvalFMatchesChainEnumeration) {
  for (uint32_t p : {5u, 7u, 11u}) {
    const Fp2Field F{PrimeModulus(p)};
    for (int d = 1; d <= 4; ++d) {
      for (uint64_t t = 0; t < 5; ++t) {
        PointSampler s(F, 77, t);
        std::vector<Fp2> x(d);
        for (auto& v : x) v = s.NextNonBase();
        if (t == 0) x = Rep(x[0], d);  // repeated arguments share a table
        EXPECT_EQ(EvalF(F, x), BruteF(F, x));
      }
    }
  }
}

TEST_F(IdentityTest, EvalFDiagonalClosedForm) {
  const Fp2Field F(PrimeModulus(11));
  const Fp2 c = Point(F, 0);
  const Fp2 cp = F.Pow(c, 10);
  for (int d = 1; d < 11; ++d) {
    EXPECT_EQ(EvalF(F, Rep(c, d)), F.Div(F.Pow(c, 10 - d), F.Sub(cp, F.One())));
  }
  EXPECT_EQ(EvalF(F, Rep(c, 11)), F.Zero());
}

TEST_F(IdentityTest, EvalFTildeExamples) {
  const Fp2Field F(PrimeModulus(7));
  const Fp2 c = Point(F, 1);
  EXPECT_EQ(EvalFTilde(F, F.One(), {}, F.One()), F.One());
  EXPECT_EQ(EvalFTilde(F, c, {}, c), F.Inv(F.Mul(c, c)));
  const Fp2 args[] = {c, F.Add(c, c)};
  const Fp2 x0 = Point(F, 2), xl = Point(F, 3);
  EXPECT_EQ(EvalFTilde(F, x0, args, xl), F.Div(EvalF(F, args), F.Mul(x0, xl)));
  EXPECT_THROW(EvalFTilde(F, F.Zero(), args, xl), DivisionByZero);
}

// The case split must agree with the definitions
// G = x^2 f~(x^{a+1}, 2x, x^{b+1}) and S = x^2 f~(x^{a+1}, 2x-1, x^{b+1}).
TEST_F(IdentityTest, GabBranchesMatchTildeDefinition) {
  const Fp2Field F(PrimeModulus(13));
  for (int a = -1; a <= 3; ++a) {
    for (int b = -1; b <= 3; ++b) {
      if (a == -1 && b == -1) continue;
      const GabCase ab = GabCase::Make(a, b);
      for (uint64_t t = 0; t < 3; ++t) {
        const Fp2 c = Point(F, t);
        const Fp2 c2 = F.Mul(c, c);
        for (bool s_variant : {false, true}) {
          Fp2 mid = F.Add(c, c);
          if (s_variant) mid = F.Sub(mid, F.One());
          std::vector<Fp2> tuple = Rep(c, a + 1);
          tuple.push_back(mid);
          for (int j = 0; j < b + 1; ++j) tuple.push_back(c);
          const Fp2 want = F.Mul(c2, EvalFTilde(F, tuple));
          const Fp2 got = s_variant ? EvalS(F, ab, c) : EvalG(F, ab, c);
          EXPECT_EQ(got, want) << "a=" << a << " b=" << b << " S=" << s_variant;
        }
      }
    }
  }
  EXPECT_THROW(GabCase::Make(-1, -1), InvalidParameters);
  EXPECT_THROW(GabCase::Make(-2, 3), InvalidParameters);
}

TEST_F(IdentityTest, GabExamples) {
  const Fp2Field F(PrimeModulus(7));
  const Fp2 c = Point(F, 4);
  const Fp2 half = F.Inv(F.FromInt(2));
  // degenerate branch: a + b + 1 = 1 argument
  EXPECT_EQ(EvalG(F, GabCase::Make(-1, 1), c), F.Mul(half, EvalF(F, Rep(c, 1))));
  EXPECT_EQ(EvalG(F, GabCase::Make(2, -1), c), F.Mul(half, EvalF(F, Rep(c, 2))));
  const Fp2 two_c_1[] = {F.Sub(F.Add(c, c), F.One())};
  EXPECT_EQ(EvalS(F, GabCase::Make(0, 0), c), EvalF(F, two_c_1));
  // G_{0,0}(c) = f(2c) = (2c)^{p-2} / ((2c)^{p-1} - 1).
  const Fp2 c2 = F.Add(c, c);
  EXPECT_EQ(EvalG(F, GabCase::Make(0, 0), c),
            F.Div(F.Pow(c2, 5), F.Sub(F.Pow(c2, 6), F.One())));
}

// G_{i-1,d-i}(c) = c^{p-1-d} / (2 (c^{p-1} - 1)) for odd d < p.
TEST_F(IdentityTest, GabMatchesSeriesClosedForm) {
  for (uint32_t p : {5u, 7u, 11u, 13u}) {
    const Fp2Field F{PrimeModulus(p)};
    const Fp2 c = Point(F, p);
    const Fp2 cp = F.Pow(c, p - 1);
    for (int d = 1; static_cast<uint32_t>(d) < p; d += 2) {
      const Fp2 want = F.Div(F.Pow(c, p - 1 - d),
                             F.Mul(F.FromInt(2), F.Sub(cp, F.One())));
      for (int i = 1; i <= d; ++i) {
        EXPECT_EQ(EvalG(F, GabCase::Make(i - 1, d - i), c), want);
      }
    }
  }
}

void ExpectAllPass(const VerdictList& v) {
  EXPECT_GT(v.verdicts.size(), 0u);
  EXPECT_TRUE(v.AllPassed()) << v.identity << " p=" << v.p << " " << v.params
                             << " failures=" << v.Failures();
}

TEST_F(IdentityTest, DiagonalF) {
  const VerifyOptions o{20, 42, false};
  ExpectAllPass(VerifyDiagonalF(PrimeModulus(7), 3, o));
  ExpectAllPass(VerifyDiagonalF(PrimeModulus(5), 4, o));
  EXPECT_THROW(VerifyDiagonalF(PrimeModulus(7), 7, o), InvalidParameters);
  EXPECT_THROW(VerifyDiagonalF(PrimeModulus(7), 0, o), InvalidParameters);
  EXPECT_EQ(VerifyDiagonalF(PrimeModulus(7), 3, o).verdicts.size(), 20u);
}

TEST_F(IdentityTest, Translation) {
  const VerifyOptions o{20, 7, false};
  ExpectAllPass(VerifyTranslation(PrimeModulus(7), 1, o));
  ExpectAllPass(VerifyTranslation(PrimeModulus(11), 3, o));
  ExpectAllPass(VerifyTranslation(PrimeModulus(5), 2, o));
  // Depth beyond p - 1: both sides are sums over empty chain sets.
  ExpectAllPass(VerifyTranslation(PrimeModulus(5), 6, o));
  EXPECT_THROW(VerifyTranslation(PrimeModulus(5), 0, o), InvalidParameters);
}

TEST_F(IdentityTest, GabSab) {
  const VerifyOptions o{20, 9, false};
  ExpectAllPass(VerifyGabSab(PrimeModulus(7), GabCase::Make(0, 0), o));
  ExpectAllPass(VerifyGabSab(PrimeModulus(11), GabCase::Make(1, 1), o));
  ExpectAllPass(VerifyGabSab(PrimeModulus(11), GabCase::Make(2, 0), o));
  EXPECT_THROW(VerifyGabSab(PrimeModulus(11), GabCase::Make(-1, 2), o),
               InvalidParameters);
}

TEST_F(IdentityTest, OneTranslation) {
  const VerifyOptions o{20, 3, false};
  ExpectAllPass(VerifyOneTranslation(PrimeModulus(7), 1, 1, o));
  ExpectAllPass(VerifyOneTranslation(PrimeModulus(11), 3, 2, o));
  ExpectAllPass(VerifyOneTranslation(PrimeModulus(11), 3, 3, o));
  ExpectAllPass(VerifyOneTranslation(PrimeModulus(11), 3, 1, o));
  EXPECT_THROW(VerifyOneTranslation(PrimeModulus(11), 3, 4, o),
               InvalidParameters);
}

TEST_F(IdentityTest, SabGab) {
  const VerifyOptions o{20, 5, false};
  ExpectAllPass(VerifySabGab(PrimeModulus(7), GabCase::Make(0, 0), o));
  ExpectAllPass(VerifySabGab(PrimeModulus(11), GabCase::Make(1, 1), o));
  ExpectAllPass(VerifySabGab(PrimeModulus(13), GabCase::Make(2, 2), o));
}

TEST_F(IdentityTest, InductionStep) {
  const VerifyOptions o{20, 5, false};
  ExpectAllPass(VerifyInductionStep(PrimeModulus(7), GabCase::Make(1, 1), o));
  ExpectAllPass(VerifyInductionStep(PrimeModulus(11), GabCase::Make(2, 0), o));
  ExpectAllPass(VerifyInductionStep(PrimeModulus(11), GabCase::Make(0, 2), o));
  ExpectAllPass(VerifyInductionStep(PrimeModulus(5), GabCase::Make(2, 2), o));
  EXPECT_THROW(VerifyInductionStep(PrimeModulus(11), GabCase::Make(1, 0), o),
               InvalidParameters);
  EXPECT_THROW(VerifyInductionStep(PrimeModulus(5), GabCase::Make(3, 2), o),
               InvalidParameters);
}

// Above a+b = p-1 the diagonal term f(c^{a+b}) vanishes while its closed form
// does not, so the difference equation genuinely breaks there.
TEST_F(IdentityTest, InductionStepFailsBeyondBound) {
  const Fp2Field F(PrimeModulus(5));
  const Fp2 c = Point(F, 8);
  EXPECT_EQ(EvalF(F, Rep(c, 5)), F.Zero());
  EXPECT_NE(F.Mul(F.PowSigned(c, -5), EvalU(F, c)), F.Zero());
}

TEST_F(IdentityTest, MainClosedForm) {
  const VerifyOptions o{20, 5, false};
  ExpectAllPass(VerifyMainClosedForm(PrimeModulus(7), GabCase::Make(1, 1), o));
  ExpectAllPass(VerifyMainClosedForm(PrimeModulus(7), GabCase::Make(-1, 3), o));
  ExpectAllPass(VerifyMainClosedForm(PrimeModulus(7), GabCase::Make(0, 0), o));
  EXPECT_THROW(VerifyMainClosedForm(PrimeModulus(7), GabCase::Make(1, 2), o),
               InvalidParameters);
  EXPECT_THROW(VerifyMainClosedForm(PrimeModulus(7), GabCase::Make(3, 3), o),
               InvalidParameters);
}

// Odd a+b is outside the closed form; the harness must report failures.
TEST_F(IdentityTest, ClosedFormRejectsOddWeight) {
  const Fp2Field F(PrimeModulus(11));
  int mismatches = 0;
  for (uint64_t t = 0; t < 10; ++t) {
    const Fp2 c = Point(F, t);
    const Fp2 lhs = F.Mul(F.FromInt(2), EvalG(F, GabCase::Make(1, 0), c));
    const Fp2 rhs = F.Mul(F.PowSigned(c, -2), EvalU(F, c));
    mismatches += lhs != rhs;
  }
  EXPECT_GT(mismatches, 0);
}

TEST_F(IdentityTest, SameSeedSameTranscript) {
  const VerifyOptions o{10, 99, false};
  const auto a = VerifyTranslation(PrimeModulus(13), 3, o);
  const auto b = VerifyTranslation(PrimeModulus(13), 3, o);
  ASSERT_EQ(a.verdicts.size(), b.verdicts.size());
  for (std::size_t j = 0; j < a.verdicts.size(); ++j) {
    EXPECT_EQ(a.verdicts[j].point, b.verdicts[j].point);
  }
  const auto c = VerifyTranslation(PrimeModulus(13), 3, VerifyOptions{10, 100, false});
  EXPECT_NE(a.verdicts[0].point, c.verdicts[0].point);
}

TEST_F(IdentityTest, ExhaustiveDegreeMode) {
  VerifyOptions o{0, 1, true};
  // p = 5 has only 20 points off the base field: all of them are used.
  const auto small = VerifyDiagonalF(PrimeModulus(5), 2, o);
  EXPECT_EQ(small.distinct_points, 20);
  EXPECT_FALSE(small.proof);
  EXPECT_TRUE(small.AllPassed());
  // p = 101: degree bound + 1 distinct points fit comfortably.
  const auto big = VerifyMainClosedForm(PrimeModulus(101), GabCase::Make(2, 2), o);
  EXPECT_EQ(big.distinct_points, big.degree_bound + 1);
  EXPECT_TRUE(big.proof);
  EXPECT_TRUE(big.AllPassed());
}

}  // namespace
}  // namespace fmzv
