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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fmzv/errors.h"

namespace fmzv {

// Deterministic Miller-Rabin; exact for every n < 2^32.
bool IsPrime(uint64_t n);

// An odd prime 3 <= p < 2^31. Construction validates primality, so every
// arithmetic context built from a PrimeModulus can assume a field.
class PrimeModulus {
 public:
  static constexpr uint64_t kBound = uint64_t{1} << 31;

  explicit PrimeModulus(uint64_t p);

  uint32_t value() const { return p_; }
  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  uint32_t p_;
};

// Residue in [0, p). The modulus lives in the FpField context.
struct Fp {
  uint32_t v = 0;

  friend bool operator==(Fp, Fp) = default;
};

class FpField {
 public:
  explicit FpField(PrimeModulus p) : p_(p.value()) {}

  PrimeModulus modulus() const { return PrimeModulus(p_); }
  uint32_t p() const { return p_; }

  Fp Zero() const { return Fp{0}; }
  Fp One() const { return Fp{1}; }
  Fp FromInt(int64_t x) const;
  Fp FromUint(uint64_t x) const { return Fp{static_cast<uint32_t>(x % p_)}; }

  // Signed representative in (-p/2, p/2].
  int64_t ToSigned(Fp x) const {
    return x.v > p_ / 2 ? int64_t{x.v} - int64_t{p_} : int64_t{x.v};
  }

  bool IsZero(Fp x) const { return x.v == 0; }

  Fp Add(Fp x, Fp y) const {
    uint32_t s = x.v + y.v;  // < 2^32 since p < 2^31
    return Fp{s >= p_ ? s - p_ : s};
  }
  Fp Sub(Fp x, Fp y) const {
    return Fp{x.v >= y.v ? x.v - y.v : x.v + p_ - y.v};
  }
  Fp Neg(Fp x) const { return Fp{x.v == 0 ? 0 : p_ - x.v}; }
  Fp Mul(Fp x, Fp y) const {
    return Fp{static_cast<uint32_t>(uint64_t{x.v} * y.v % p_)};
  }
  Fp Pow(Fp x, uint64_t e) const;
  // Negative exponents require x != 0.
  Fp PowSigned(Fp x, int64_t e) const;

  // Throws DivisionByZero for x == 0.
  Fp Inv(Fp x) const;
  Fp Div(Fp x, Fp y) const { return Mul(x, Inv(y)); }

  // Legendre-symbol test via Euler's criterion.
  bool IsSquare(Fp x) const;

 private:
  uint32_t p_;
};

// Smallest delta >= 2 with delta^((p-1)/2) = -1.
Fp FindNonresidue(const FpField& f);

// a + b*w with w^2 = delta.
struct Fp2 {
  Fp a;
  Fp b;

  friend bool operator==(Fp2, Fp2) = default;
};

class Fp2Field {
 public:
  explicit Fp2Field(PrimeModulus p);

  const FpField& base() const { return base_; }
  uint32_t p() const { return base_.p(); }
  Fp delta() const { return delta_; }

  Fp2 Zero() const { return Fp2{}; }
  Fp2 One() const { return Fp2{Fp{1}, Fp{0}}; }
  Fp2 Omega() const { return Fp2{Fp{0}, Fp{1}}; }
  Fp2 Embed(Fp x) const { return Fp2{x, Fp{0}}; }
  Fp2 FromInt(int64_t x) const { return Embed(base_.FromInt(x)); }

  bool IsZero(Fp2 x) const { return x.a.v == 0 && x.b.v == 0; }
  bool InBaseField(Fp2 x) const { return x.b.v == 0; }

  Fp2 Add(Fp2 x, Fp2 y) const {
    return Fp2{base_.Add(x.a, y.a), base_.Add(x.b, y.b)};
  }
  Fp2 Sub(Fp2 x, Fp2 y) const {
    return Fp2{base_.Sub(x.a, y.a), base_.Sub(x.b, y.b)};
  }
  Fp2 Neg(Fp2 x) const { return Fp2{base_.Neg(x.a), base_.Neg(x.b)}; }
  Fp2 Mul(Fp2 x, Fp2 y) const;
  Fp2 Scale(Fp2 x, Fp s) const {
    return Fp2{base_.Mul(x.a, s), base_.Mul(x.b, s)};
  }
  Fp2 Pow(Fp2 x, uint64_t e) const;
  Fp2 PowSigned(Fp2 x, int64_t e) const;
  // Norm a^2 - delta*b^2, nonzero iff x != 0.
  Fp Norm(Fp2 x) const;
  Fp2 Inv(Fp2 x) const;
  Fp2 Div(Fp2 x, Fp2 y) const { return Mul(x, Inv(y)); }

 private:
  FpField base_;
  Fp delta_;
};

// Montgomery's prefix-product trick: one inversion and 3(n-1)
// multiplications. Any zero entry raises DivisionByZero carrying its index.
template <typename Field, typename Elem>
std::vector<Elem> BatchInverse(const Field& field, std::span<const Elem> xs) {
  std::vector<Elem> prefix(xs.size());
  Elem acc = field.One();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (field.IsZero(xs[i])) {
      throw DivisionByZero("batch inverse: zero at index " + std::to_string(i),
                           i);
    }
    prefix[i] = acc;
    acc = field.Mul(acc, xs[i]);
  }
  std::vector<Elem> out(xs.size());
  Elem inv = xs.empty() ? acc : field.Inv(acc);
  for (std::size_t i = xs.size(); i-- > 0;) {
    out[i] = field.Mul(inv, prefix[i]);
    inv = field.Mul(inv, xs[i]);
  }
  return out;
}

inline std::vector<Fp> BatchInverse(const FpField& f, std::span<const Fp> xs) {
  return BatchInverse<FpField, Fp>(f, xs);
}
inline std::vector<Fp2> BatchInverse(const Fp2Field& f,
                                     std::span<const Fp2> xs) {
  return BatchInverse<Fp2Field, Fp2>(f, xs);
}

// Reduced fraction numerator/denominator with denominator >= 1.
class RationalWeight {
 public:
  RationalWeight() = default;
  // Throws InvalidParameters on a zero denominator.
  RationalWeight(int64_t numerator, int64_t denominator = 1);

  // Accepts "n" or "n/m".
  static RationalWeight Parse(std::string_view text);

  int64_t numerator() const { return num_; }
  int64_t denominator() const { return den_; }
  bool IsZero() const { return num_ == 0; }
  bool ReducibleMod(uint32_t p) const { return den_ % p != 0; }

  RationalWeight operator+(const RationalWeight& o) const;
  RationalWeight operator*(int64_t s) const;
  friend bool operator==(const RationalWeight&, const RationalWeight&) =
      default;

  std::string ToString() const;

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

// numerator * denominator^{-1} mod p; WeightNotReducible when p | denominator.
Fp ReduceRational(const RationalWeight& w, const FpField& f);

}  // namespace fmzv
