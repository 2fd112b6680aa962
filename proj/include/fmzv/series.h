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

#include <cstddef>
#include <span>
#include <vector>

#include "fmzv/modular.h"

namespace fmzv {

// Power series over F_p truncated to K coefficients (x^0 .. x^{K-1}).
class TruncatedSeries {
 public:
  // K zero coefficients; K >= 1.
  explicit TruncatedSeries(std::size_t K);
  explicit TruncatedSeries(std::vector<Fp> coeffs);

  static TruncatedSeries Constant(std::size_t K, Fp c);

  std::size_t truncation() const { return coeffs_.size(); }
  std::span<const Fp> coeffs() const { return coeffs_; }
  std::span<Fp> mutable_coeffs() { return coeffs_; }
  Fp operator[](std::size_t t) const { return coeffs_[t]; }

  friend bool operator==(const TruncatedSeries&,
                         const TruncatedSeries&) = default;

 private:
  std::vector<Fp> coeffs_;
};

// Throws TruncationMismatch if truncations differ.
TruncatedSeries SeriesAdd(const FpField& f, const TruncatedSeries& a,
                          const TruncatedSeries& b);
TruncatedSeries SeriesScale(const FpField& f, const TruncatedSeries& s, Fp c);

// s(x) / (n - a x), O(K). Throws DivisionByZero for n == 0.
TruncatedSeries MulGeometric(const FpField& f, const TruncatedSeries& s, Fp n,
                             Fp a);

// (a_1, ..., a_d) with every a_i a unit of F_p.
class WeightVector {
 public:
  WeightVector() = default;
  // Throws InvalidParameters on a zero entry.
  explicit WeightVector(std::vector<Fp> weights);
  static WeightVector FromInts(const FpField& f, std::span<const int64_t> ws);
  // (1, ..., 1, 2, 1, ..., 1) with the 2 in slot i (1-based).
  static WeightVector Doubled(const FpField& f, int d, int i);
  static WeightVector AllOnes(int d);

  int depth() const { return static_cast<int>(weights_.size()); }
  std::span<const Fp> weights() const { return weights_; }
  Fp operator[](std::size_t j) const { return weights_[j]; }

 private:
  std::vector<Fp> weights_;
};

// Expansion of f(a_1 x, ..., a_d x) at x = 0, where
//   f(x_1..x_d) = sum_{0<n_1<...<n_d<p} prod 1/(n_i - x_i),
// truncated to K terms. Coefficient t is
//   sum over compositions of t+d into d parts of prod a_i^{k_i-1} H_p(k).
// O(d p K) field operations, O(d K) memory.
TruncatedSeries GeneratingSeries(const FpField& f, const WeightVector& w,
                                 std::size_t K);
// Same with non-strict chains (H_p^*).
TruncatedSeries GeneratingStarSeries(const FpField& f, const WeightVector& w,
                                     std::size_t K);

// sum over compositions k_1+...+k_d = k of prod a_i^{k_i} H_p(k_1..k_d).
// Zero when k < d.
Fp WeightedSum(const FpField& f, const WeightVector& w, int k);
Fp WeightedStarSum(const FpField& f, const WeightVector& w, int k);

// Entry k (0 <= k <= k_max) is WeightedSum(f, w, k), sharing one DP run.
std::vector<Fp> WeightedSums(const FpField& f, const WeightVector& w,
                             int k_max, bool star);

// Compares the expansion with weights Doubled(d, i) against
// -(1/2) x^{p-1-d} (1 + x^{p-1} + x^{2(p-1)} + ...) over K coefficients.
// Requires d odd, 1 <= i <= d, d < p, K >= 1.
bool VerifyClosedFormSeries(const FpField& f, int d, int i, std::size_t K);

}  // namespace fmzv
