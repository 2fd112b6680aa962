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

#include "fmzv/modular.h"

#include <cerrno>
#include <cstdlib>
#include <numeric>

namespace fmzv {
namespace {

uint64_t MulMod64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t PowMod64(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = MulMod64(r, b, m);
    b = MulMod64(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool IsPrime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Bases 2, 3, 5, 7 are a deterministic witness set below 3.2e9; the extra
  // bases extend it far past 2^32.
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17}) {
    uint64_t x = PowMod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = MulMod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(uint64_t p) {
  if (p >= kBound) {
    throw InvalidParameters("modulus " + std::to_string(p) +
                            " exceeds 2^31");
  }
  if (!IsPrime(p)) {
    throw NotPrime(std::to_string(p) + " is not prime");
  }
  if (p == 2) throw InvalidParameters("modulus must be an odd prime");
  p_ = static_cast<uint32_t>(p);
}

Fp FpField::FromInt(int64_t x) const {
  int64_t r = x % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return Fp{static_cast<uint32_t>(r)};
}

Fp FpField::Pow(Fp x, uint64_t e) const {
  Fp r = One();
  while (e > 0) {
    if (e & 1) r = Mul(r, x);
    x = Mul(x, x);
    e >>= 1;
  }
  return r;
}

Fp FpField::PowSigned(Fp x, int64_t e) const {
  if (e >= 0) return Pow(x, static_cast<uint64_t>(e));
  return Pow(Inv(x), static_cast<uint64_t>(-(e + 1)) + 1);
}

Fp FpField::Inv(Fp x) const {
  if (x.v == 0) throw DivisionByZero("inverse of zero mod " + std::to_string(p_));
  // Extended Euclid on (x, p).
  int64_t r0 = p_, r1 = x.v, t0 = 0, t1 = 1;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return FromInt(t0);
}

bool FpField::IsSquare(Fp x) const {
  if (x.v == 0) return true;
  return Pow(x, (p_ - 1) / 2).v == 1;
}

Fp FindNonresidue(const FpField& f) {
  for (uint32_t d = 2; d < f.p(); ++d) {
    if (f.Pow(Fp{d}, (f.p() - 1) / 2).v == f.p() - 1) return Fp{d};
  }
  // Unreachable for an odd prime.
  throw InvalidParameters("no quadratic nonresidue mod " +
                          std::to_string(f.p()));
}

Fp2Field::Fp2Field(PrimeModulus p) : base_(p), delta_(FindNonresidue(base_)) {}

Fp2 Fp2Field::Mul(Fp2 x, Fp2 y) const {
  const FpField& f = base_;
  Fp ac = f.Mul(x.a, y.a);
  Fp bd = f.Mul(x.b, y.b);
  return Fp2{f.Add(ac, f.Mul(delta_, bd)),
             f.Add(f.Mul(x.a, y.b), f.Mul(x.b, y.a))};
}

Fp2 Fp2Field::Pow(Fp2 x, uint64_t e) const {
  Fp2 r = One();
  while (e > 0) {
    if (e & 1) r = Mul(r, x);
    x = Mul(x, x);
    e >>= 1;
  }
  return r;
}

Fp2 Fp2Field::PowSigned(Fp2 x, int64_t e) const {
  if (e >= 0) return Pow(x, static_cast<uint64_t>(e));
  return Pow(Inv(x), static_cast<uint64_t>(-(e + 1)) + 1);
}

Fp Fp2Field::Norm(Fp2 x) const {
  return base_.Sub(base_.Mul(x.a, x.a),
                   base_.Mul(delta_, base_.Mul(x.b, x.b)));
}

Fp2 Fp2Field::Inv(Fp2 x) const {
  if (IsZero(x)) throw DivisionByZero("inverse of zero in F_p^2");
  Fp n_inv = base_.Inv(Norm(x));
  return Fp2{base_.Mul(x.a, n_inv), base_.Neg(base_.Mul(x.b, n_inv))};
}

RationalWeight::RationalWeight(int64_t numerator, int64_t denominator) {
  if (denominator == 0) throw InvalidParameters("zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

RationalWeight RationalWeight::Parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> int64_t {
    if (s.empty()) throw InvalidParameters("malformed rational '" +
                                           std::string(text) + "'");
    std::string buf(s);
    char* end = nullptr;
    errno = 0;
    long long v = std::strtoll(buf.c_str(), &end, 10);
    if (end != buf.c_str() + buf.size() || errno != 0) {
      throw InvalidParameters("malformed rational '" + std::string(text) +
                              "'");
    }
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return RationalWeight(parse_int(text));
  return RationalWeight(parse_int(text.substr(0, slash)),
                        parse_int(text.substr(slash + 1)));
}

RationalWeight RationalWeight::operator+(const RationalWeight& o) const {
  int64_t g = std::gcd(den_, o.den_);
  return RationalWeight(num_ * (o.den_ / g) + o.num_ * (den_ / g),
                        den_ / g * o.den_);
}

RationalWeight RationalWeight::operator*(int64_t s) const {
  return RationalWeight(num_ * s, den_);
}

std::string RationalWeight::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Fp ReduceRational(const RationalWeight& w, const FpField& f) {
  if (!w.ReducibleMod(f.p())) {
    throw WeightNotReducible(w.ToString() + " is not reducible mod " +
                             std::to_string(f.p()));
  }
  return f.Mul(f.FromInt(w.numerator()),
               f.Inv(f.FromInt(w.denominator())));
}

}  // namespace fmzv
