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

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "fmzv/modular.h"

namespace fmzv {

constexpr uint64_t kDefaultSeed = 0x5eed'f2a0'0d1e'0001ULL;
constexpr int kMaxResamples = 100;

// Index-derived stream seeds: trial t always sees the same generator state
// regardless of how trials are scheduled.
uint64_t DeriveStreamSeed(uint64_t root, uint64_t index);

// Draws field elements from one derived stream. Sampling is done by
// rejection on raw mt19937_64 output so transcripts do not depend on the
// standard library's distribution implementations.
class PointSampler {
 public:
  PointSampler(const Fp2Field& field, uint64_t root_seed, uint64_t index);

  Fp NextFp();
  // Uniform over F_{p^2} \ F_p.
  Fp2 NextNonBase();

 private:
  uint64_t UniformBelow(uint64_t n);

  const Fp2Field& field_;
  std::mt19937_64 rng_;
};

// f(x_1, ..., x_d) = sum_{0<n_1<...<n_d<p} prod 1/(n_i - x_i), evaluated
// exactly; 1 for d = 0. Throws PoleError if some x_i lies in {1..p-1}.
Fp2 EvalF(const Fp2Field& F, std::span<const Fp2> args);

// f(args) / (x0 * x_last). Throws DivisionByZero on a zero boundary value.
Fp2 EvalFTilde(const Fp2Field& F, Fp2 x0, std::span<const Fp2> args,
               Fp2 x_last);
// f~ of a full tuple (x_0, ..., x_{d+1}); size >= 2.
Fp2 EvalFTilde(const Fp2Field& F, std::span<const Fp2> tuple);

// Index pair of G_{a,b} and S_{a,b}: a, b >= -1, not both -1.
struct GabCase {
  int a = 0;
  int b = 0;

  // Throws InvalidParameters for an inadmissible pair.
  static GabCase Make(int a, int b);
  std::string ToString() const;
};

// G_{a,b}(c): f(c^a, 2c, c^b) when a, b >= 0, else (1/2) f(c^{a+b+1}).
Fp2 EvalG(const Fp2Field& F, GabCase ab, Fp2 c);
// S_{a,b}(c): f(c^a, 2c-1, c^b) when a, b >= 0, else c/(2c-1) f(c^{a+b+1}).
Fp2 EvalS(const Fp2Field& F, GabCase ab, Fp2 c);

// U(c) = c^{p-1} / (c^{p-1} - 1).
Fp2 EvalU(const Fp2Field& F, Fp2 c);

struct PointVerdict {
  std::string label;          // "generic", "specialized", ...
  std::vector<Fp2> point;     // evaluation tuple
  Fp2 lhs;
  Fp2 rhs;
  bool pass = false;
};

struct VerdictList {
  std::string identity;
  uint32_t p = 0;
  std::string params;
  uint64_t seed = 0;
  int resamples = 0;
  // Distinct univariate evaluation points and the degree bound they are
  // measured against. Agreement at more than degree_bound points of the
  // specialized tuples proves those identities outright.
  int distinct_points = 0;
  int degree_bound = 0;
  bool proof = false;
  std::vector<PointVerdict> verdicts;

  bool AllPassed() const;
  int Failures() const;
};

struct VerifyOptions {
  int trials = 20;
  uint64_t seed = kDefaultSeed;
  // Sample degree_bound + 1 distinct points (capped at p^2 - p).
  bool exhaustive_degree = false;
};

// f(c, ..., c) = c^{p-1-d} / (c^{p-1} - 1), 0 < d < p.
VerdictList VerifyDiagonalF(PrimeModulus p, int d, const VerifyOptions& opts);

// f(x-1) - f(x) = f(x_2-1..x_d-1)/(x_1-1) - f(x_1..x_{d-1})/x_d, d >= 1.
// Each trial checks a generic tuple, the diagonal tuple (c..c) and the
// tuple (c..c, 2c-1, c..c).
VerdictList VerifyTranslation(PrimeModulus p, int d,
                              const VerifyOptions& opts);

// G_{a,b}(c-1) - S_{a,b}(c) = G_{a-1,b}(c-1)/(c-1) - S_{a,b-1}(c)/c.
VerdictList VerifyGabSab(PrimeModulus p, GabCase ab,
                         const VerifyOptions& opts);

// Shifting x_i by one inside f~ (1 <= i <= d). Generic tuples that make a
// correction denominator vanish are resampled, up to kMaxResamples.
VerdictList VerifyOneTranslation(PrimeModulus p, int d, int i,
                                 const VerifyOptions& opts);

// S_{a,b} - G_{a,b} = f(c^{a+b})/(c(c-1)) - S_{a-1,b}/(c-1) + G_{a,b-1}/c.
VerdictList VerifySabGab(PrimeModulus p, GabCase ab,
                         const VerifyOptions& opts);

// The difference equation for G_{a,b} combining the two identities above with
// f(c^{a+b}) = c^{-a-b} U(c). Requires a, b >= 0 and 2 <= a+b <= p-1.
VerdictList VerifyInductionStep(PrimeModulus p, GabCase ab,
                                const VerifyOptions& opts);

// 2 G_{a,b}(c) = c^{-a-b-1} U(c) for a+b even, 0 <= a+b < p-1.
VerdictList VerifyMainClosedForm(PrimeModulus p, GabCase ab,
                                 const VerifyOptions& opts);

std::string FormatFp2(Fp2 x);

}  // namespace fmzv
