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

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fmzv/modular.h"

namespace fmzv {

// An ordered tuple (k_1, ..., k_d) of positive integers; depth 0 is the
// empty composition.
class Composition {
 public:
  Composition() = default;
  // Throws InvalidParameters if any part is < 1.
  explicit Composition(std::vector<int> parts);

  // "1,2,1" -> (1,2,1). The empty string is the empty composition.
  static Composition Parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  int depth() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  // (k_1, ..., k_j)
  Composition Prefix(int j) const;
  // (k_d, k_{d-1}, ..., k_{j+1})
  Composition ReversedSuffix(int j) const;

  std::string ToString() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// Sum over 0 < n_1 < ... < n_d < p of prod n_i^{-k_i}, in F_p. Returns 1 for
// the empty composition and 0 when d >= p (no strict chain exists).
Fp HarmonicSum(const FpField& f, const Composition& c);

// Same with 0 < n_1 <= ... <= n_d < p.
Fp HarmonicStarSum(const FpField& f, const Composition& c);

// sum_{j=0}^{d} (-1)^j H*(k_1..k_j) H(k_d..k_{j+1}); vanishes for every
// prime. Requires depth >= 1.
Fp AntipodeSum(const FpField& f, const Composition& c);

// Compositions of k into d parts in lexicographic order. Empty when k < d.
void ForEachComposition(int k, int d,
                        const std::function<void(const Composition&)>& visit);
std::vector<Composition> EnumerateCompositions(int k, int d);

}  // namespace fmzv
