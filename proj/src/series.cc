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

#include "fmzv/series.h"

#include <algorithm>
#include <string>

namespace fmzv {

TruncatedSeries::TruncatedSeries(std::size_t K) : coeffs_(K) {
  if (K == 0) throw InvalidParameters("truncation order must be >= 1");
}

TruncatedSeries::TruncatedSeries(std::vector<Fp> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidParameters("truncation order must be >= 1");
}

TruncatedSeries TruncatedSeries::Constant(std::size_t K, Fp c) {
  TruncatedSeries s(K);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries SeriesAdd(const FpField& f, const TruncatedSeries& a,
                          const TruncatedSeries& b) {
  if (a.truncation() != b.truncation()) {
    throw TruncationMismatch("series add: K=" +
                             std::to_string(a.truncation()) + " vs K=" +
                             std::to_string(b.truncation()));
  }
  TruncatedSeries out(a.truncation());
  auto dst = out.mutable_coeffs();
  for (std::size_t t = 0; t < dst.size(); ++t) dst[t] = f.Add(a[t], b[t]);
  return out;
}

TruncatedSeries SeriesScale(const FpField& f, const TruncatedSeries& s, Fp c) {
  TruncatedSeries out(s.truncation());
  auto dst = out.mutable_coeffs();
  for (std::size_t t = 0; t < dst.size(); ++t) dst[t] = f.Mul(s[t], c);
  return out;
}

namespace {

// dst += src / (n - a x), given n_inv = n^{-1}. With c = a n^{-1}:
//   u_t = src_t + c u_{t-1},  dst_t += n^{-1} u_t.
void AccumulateGeometric(const FpField& f, std::span<Fp> dst,
                         std::span<const Fp> src, Fp n_inv, Fp a) {
  const Fp c = f.Mul(a, n_inv);
  Fp u = f.Zero();
  for (std::size_t t = 0; t < dst.size(); ++t) {
    u = f.Add(src[t], f.Mul(c, u));
    dst[t] = f.Add(dst[t], f.Mul(n_inv, u));
  }
}

std::vector<Fp> InverseTable(const FpField& f) {
  std::vector<Fp> ns(f.p() - 1);
  for (uint32_t n = 1; n < f.p(); ++n) ns[n - 1] = Fp{n};
  return BatchInverse(f, std::span<const Fp>(ns));
}

// prefix[j] holds sum over chains n_1 (<|<=) ... (<|<=) n_j with n_j below
// the current n (strict) or up to it (star), of prod 1/(n_i - a_i x).
// prefix[0] is the constant 1 contributed by the empty chain.
TruncatedSeries RunSeriesDp(const FpField& f, const WeightVector& w,
                            std::size_t K, bool star) {
  const int d = w.depth();
  std::vector<std::vector<Fp>> prefix(d + 1, std::vector<Fp>(K, f.Zero()));
  prefix[0][0] = f.One();
  if (d == 0) return TruncatedSeries(std::move(prefix[0]));
  const std::vector<Fp> inv = InverseTable(f);
  for (uint32_t n = 1; n < f.p(); ++n) {
    const Fp n_inv = inv[n - 1];
    // Chains of length j need n >= j when strict.
    const int top = star ? d : std::min<int>(d, static_cast<int>(n));
    if (star) {
      for (int j = 1; j <= top; ++j) {
        AccumulateGeometric(f, prefix[j], prefix[j - 1], n_inv, w[j - 1]);
      }
    } else {
      // Descending so prefix[j-1] still excludes n.
      for (int j = top; j >= 1; --j) {
        AccumulateGeometric(f, prefix[j], prefix[j - 1], n_inv, w[j - 1]);
      }
    }
  }
  return TruncatedSeries(std::move(prefix[d]));
}

Fp WeightProduct(const FpField& f, const WeightVector& w) {
  Fp prod = f.One();
  for (Fp a : w.weights()) prod = f.Mul(prod, a);
  return prod;
}

}  // namespace

TruncatedSeries MulGeometric(const FpField& f, const TruncatedSeries& s, Fp n,
                             Fp a) {
  if (f.IsZero(n)) throw DivisionByZero("mul_geometric: n = 0");
  TruncatedSeries out(s.truncation());
  AccumulateGeometric(f, out.mutable_coeffs(), s.coeffs(), f.Inv(n), a);
  return out;
}

WeightVector::WeightVector(std::vector<Fp> weights)
    : weights_(std::move(weights)) {
  for (std::size_t j = 0; j < weights_.size(); ++j) {
    if (weights_[j].v == 0) {
      throw InvalidParameters("weight " + std::to_string(j + 1) +
                              " vanishes mod p");
    }
  }
}

WeightVector WeightVector::FromInts(const FpField& f,
                                    std::span<const int64_t> ws) {
  std::vector<Fp> out;
  out.reserve(ws.size());
  for (int64_t a : ws) out.push_back(f.FromInt(a));
  return WeightVector(std::move(out));
}

WeightVector WeightVector::Doubled(const FpField& f, int d, int i) {
  if (d < 1 || i < 1 || i > d) {
    throw InvalidParameters("doubled weights need 1 <= i <= d");
  }
  std::vector<Fp> out(d, f.One());
  out[i - 1] = f.FromInt(2);
  return WeightVector(std::move(out));
}

WeightVector WeightVector::AllOnes(int d) {
  return WeightVector(std::vector<Fp>(d, Fp{1}));
}

TruncatedSeries GeneratingSeries(const FpField& f, const WeightVector& w,
                                 std::size_t K) {
  if (K == 0) throw InvalidParameters("truncation order must be >= 1");
  return RunSeriesDp(f, w, K, /*star=*/false);
}

TruncatedSeries GeneratingStarSeries(const FpField& f, const WeightVector& w,
                                     std::size_t K) {
  if (K == 0) throw InvalidParameters("truncation order must be >= 1");
  return RunSeriesDp(f, w, K, /*star=*/true);
}

std::vector<Fp> WeightedSums(const FpField& f, const WeightVector& w,
                             int k_max, bool star) {
  const int d = w.depth();
  std::vector<Fp> out(k_max + 1, f.Zero());
  if (k_max < d) return out;
  if (d == 0) {
    out[0] = f.One();
    return out;
  }
  TruncatedSeries s =
      RunSeriesDp(f, w, static_cast<std::size_t>(k_max - d + 1), star);
  const Fp prod = WeightProduct(f, w);
  for (int k = d; k <= k_max; ++k) out[k] = f.Mul(prod, s[k - d]);
  return out;
}

Fp WeightedSum(const FpField& f, const WeightVector& w, int k) {
  if (k < w.depth() || k < 0) return f.Zero();
  return WeightedSums(f, w, k, /*star=*/false)[k];
}

Fp WeightedStarSum(const FpField& f, const WeightVector& w, int k) {
  if (k < w.depth() || k < 0) return f.Zero();
  return WeightedSums(f, w, k, /*star=*/true)[k];
}

bool VerifyClosedFormSeries(const FpField& f, int d, int i, std::size_t K) {
  if (d < 1 || d % 2 == 0) throw InvalidParameters("d must be odd and >= 1");
  if (i < 1 || i > d) throw InvalidParameters("need 1 <= i <= d");
  if (static_cast<uint32_t>(d) >= f.p()) throw InvalidParameters("need d < p");
  if (K == 0) throw InvalidParameters("K must be >= 1");
  const TruncatedSeries got =
      GeneratingSeries(f, WeightVector::Doubled(f, d, i), K);
  const uint32_t period = f.p() - 1;
  const std::size_t offset = period - d;
  const Fp minus_half = f.Neg(f.Inv(f.FromInt(2)));
  for (std::size_t t = 0; t < K; ++t) {
    const bool hit = t >= offset && (t - offset) % period == 0;
    if (got[t] != (hit ? minus_half : f.Zero())) return false;
  }
  return true;
}

}  // namespace fmzv
