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
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fmzv/harmonic.h"
#include "fmzv/modular.h"
#include "fmzv/series.h"

namespace fmzv {

using ParamValue = std::variant<int64_t, std::string, std::vector<std::string>>;
// Ordered so that serialized reports are stable.
using ParamList = std::vector<std::pair<std::string, ParamValue>>;

enum class PrimeClass { kZero, kException, kSkipped };

const char* ToString(PrimeClass c);

struct PrimeResidue {
  uint32_t p = 0;
  PrimeClass cls = PrimeClass::kZero;
  uint32_t value = 0;       // canonical residue; 0 when skipped
  std::string skip_reason;  // set iff skipped
};

enum class Prediction { kNone, kExact, kSubset };

// One statement of the form "X = 0 in A", realized per prime: zero in A
// means only finitely many exception primes, all of which are listed here.
struct AdelicObservation {
  std::string statement;
  ParamList params;
  uint32_t p_min = 3;
  uint32_t p_max = 0;
  uint64_t seed = 0;
  std::vector<PrimeResidue> residues;  // ascending in p, one per scanned prime
  Prediction prediction = Prediction::kNone;
  std::vector<uint32_t> predicted_exceptions;
  std::vector<std::string> notes;
  double elapsed_ms = 0;

  std::vector<uint32_t> Exceptions() const;
  std::vector<uint32_t> Skipped() const;
  // kExact: exceptions == predicted. kSubset: exceptions within predicted.
  std::optional<bool> PredictionHolds() const;
};

// Internal-consistency violations: every odd prime of [p_min, p_max]
// appears exactly once in ascending order and its class agrees with its
// value. Empty when consistent.
std::vector<std::string> ConsistencyViolations(const AdelicObservation& obs);

struct SweepOptions {
  uint32_t p_min = 3;
  uint32_t p_max = 100;
  unsigned threads = 0;  // 0: hardware concurrency
  uint64_t seed = 0;
};

struct FormulaVerdict {
  uint32_t p = 0;
  int d = 0;
  int k = 0;
  int i = 0;
  Fp value;
  Fp expected;
  bool pass = false;
};

// sum_{|k|=k} 2^{k_i} H_p(k_1..k_d) against 0 or -1 according to (p-1) | k.
// Requires d odd, p > d, 1 <= i <= d, k >= d.
FormulaVerdict VerifyWeightedSumFormula(PrimeModulus p, int d, int k, int i);

// All (p, k, i) with odd primes d < p in range, k in [k_min, k_max], and i
// in [1, d] (or only `only_i` when nonzero). One DP run per (p, i).
std::vector<FormulaVerdict> SweepWeightedSumFormula(int d, int k_min, int k_max,
                                           int only_i,
                                           const SweepOptions& opts);

// sum 2^{k_i} zeta_A(k) over primes in range. Predicted exceptions are
// exactly the primes p > d with (p-1) | k.
AdelicObservation VerifyFiniteMzv(int d, int k, int i,
                                  const SweepOptions& opts);
// Star variant; exceptions are predicted to lie in {p : p <= k+1}.
AdelicObservation VerifyFiniteMzvStar(int d, int k, int i,
                                      const SweepOptions& opts);

// Weight lists for the conjectures. Both fix the reading
// [1] ++ [1..r] (++ [r]).
std::vector<RationalWeight> Conjecture1Weights(int r);
std::vector<RationalWeight> Conjecture2Weights(int r);
// (a, a+b, ..., a+rb) and (b, a+b, ..., a+rb).
std::pair<std::vector<RationalWeight>, std::vector<RationalWeight>>
Conjecture3Weights(const RationalWeight& a, const RationalWeight& b, int r);

// W_k(weights) and W*_k(weights), each as one observation. Primes that
// divide a denominator, annihilate a weight, or satisfy p <= depth are
// skipped with a reason.
std::vector<AdelicObservation> ScanWeights(const std::string& statement,
                                           const std::vector<RationalWeight>& w,
                                           int k, const SweepOptions& opts);

// W_k(lhs) - W_k(rhs) and the star counterpart.
std::vector<AdelicObservation> ScanDifference(
    const std::string& statement, const std::vector<RationalWeight>& lhs,
    const std::vector<RationalWeight>& rhs, int k, const SweepOptions& opts);

std::vector<AdelicObservation> ScanConjecture1(int r, int k,
                                               const SweepOptions& opts);
// r must be odd.
std::vector<AdelicObservation> ScanConjecture2(int r, int k,
                                               const SweepOptions& opts);
std::vector<AdelicObservation> ScanConjecture3(const RationalWeight& a,
                                               const RationalWeight& b, int r,
                                               int k,
                                               const SweepOptions& opts);

// Recomputes up to `max_primes` classified residues of an observation
// produced by ScanWeights/ScanDifference through composition enumeration
// over HarmonicSum/HarmonicStarSum. Returns mismatch descriptions.
std::vector<std::string> OracleSpotCheck(
    const AdelicObservation& obs, const std::vector<RationalWeight>& lhs,
    const std::vector<RationalWeight>* rhs, int k, bool star,
    int max_primes = 2);

// sum over compositions of k into w.size() parts of prod a_i^{k_i} H_p
// (or H_p^*), by enumeration. Independent of the series DP.
Fp WeightedSumByEnumeration(const FpField& f, std::span<const Fp> w, int k,
                            bool star);

}  // namespace fmzv
