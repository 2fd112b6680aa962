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

#include <algorithm>
#include <charconv>
#include <map>

namespace fmzv {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int k : parts_) {
    if (k < 1) {
      throw InvalidParameters("composition parts must be >= 1, got " +
                              std::to_string(k));
    }
    weight_ += k;
  }
}

Composition Composition::Parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Composition();
  std::size_t pos = 0;
  for (;;) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    int v = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size()) {
      throw InvalidParameters("malformed composition '" + std::string(text) +
                              "'");
    }
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Composition(std::move(parts));
}

Composition Composition::Prefix(int j) const {
  return Composition(std::vector<int>(parts_.begin(), parts_.begin() + j));
}

Composition Composition::ReversedSuffix(int j) const {
  std::vector<int> out(parts_.begin() + j, parts_.end());
  std::reverse(out.begin(), out.end());
  return Composition(std::move(out));
}

std::string Composition::ToString() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

// n^{-k} for n in [0, p), with slot 0 unused. Tables are built per distinct
// exponent from a single table of inverses.
class InversePowers {
 public:
  explicit InversePowers(const FpField& f) : f_(f), inv_(f.p()) {
    for (uint32_t n = 1; n < f.p(); ++n) inv_[n] = f.Inv(Fp{n});
  }

  const std::vector<Fp>& Get(int k) {
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    std::vector<Fp> t(f_.p());
    for (uint32_t n = 1; n < f_.p(); ++n) t[n] = f_.Pow(inv_[n], k);
    return cache_.emplace(k, std::move(t)).first->second;
  }

 private:
  const FpField& f_;
  std::vector<Fp> inv_;
  std::map<int, std::vector<Fp>> cache_;
};

// Nested sum evaluated from the innermost index outward: after stage j,
// level[n] holds the sum over chains ending with n_j = n. `strict`
// selects < versus <= between consecutive indices.
Fp NestedSum(const FpField& f, const Composition& c, bool strict) {
  const uint32_t p = f.p();
  if (c.depth() == 0) return f.One();
  if (strict && static_cast<uint64_t>(c.depth()) >= p) return f.Zero();
  InversePowers pows(f);
  std::vector<Fp> level(p, f.Zero());
  // Stage 1: chains of length one.
  const auto& first = pows.Get(c[0]);
  for (uint32_t n = 1; n < p; ++n) level[n] = first[n];
  for (int j = 1; j < c.depth(); ++j) {
    const auto& tbl = pows.Get(c[j]);
    std::vector<Fp> next(p, f.Zero());
    Fp below = f.Zero();  // sum of level[m] for m < n (or m <= n)
    for (uint32_t n = 1; n < p; ++n) {
      if (!strict) below = f.Add(below, level[n]);
      next[n] = f.Mul(below, tbl[n]);
      if (strict) below = f.Add(below, level[n]);
    }
    level.swap(next);
  }
  Fp total = f.Zero();
  for (uint32_t n = 1; n < p; ++n) total = f.Add(total, level[n]);
  return total;
}

void CompositionsRec(int k, int d, std::vector<int>& buf,
                     const std::function<void(const Composition&)>& visit) {
  if (d == 0) {
    if (k == 0) visit(Composition(buf));
    return;
  }
  for (int first = 1; first <= k - d + 1; ++first) {
    buf.push_back(first);
    CompositionsRec(k - first, d - 1, buf, visit);
    buf.pop_back();
  }
}

}  // namespace

Fp HarmonicSum(const FpField& f, const Composition& c) {
  return NestedSum(f, c, /*strict=*/true);
}

Fp HarmonicStarSum(const FpField& f, const Composition& c) {
  return NestedSum(f, c, /*strict=*/false);
}

Fp AntipodeSum(const FpField& f, const Composition& c) {
  if (c.depth() < 1) throw InvalidParameters("antipode requires depth >= 1");
  Fp total = f.Zero();
  for (int j = 0; j <= c.depth(); ++j) {
    Fp term = f.Mul(HarmonicStarSum(f, c.Prefix(j)),
                    HarmonicSum(f, c.ReversedSuffix(j)));
    total = (j % 2 == 0) ? f.Add(total, term) : f.Sub(total, term);
  }
  return total;
}

void ForEachComposition(int k, int d,
                        const std::function<void(const Composition&)>& visit) {
  if (d < 0 || k < d) return;
  std::vector<int> buf;
  buf.reserve(d);
  CompositionsRec(k, d, buf, visit);
}

std::vector<Composition> EnumerateCompositions(int k, int d) {
  std::vector<Composition> out;
  ForEachComposition(k, d, [&](const Composition& c) { out.push_back(c); });
  return out;
}

}  // namespace fmzv
