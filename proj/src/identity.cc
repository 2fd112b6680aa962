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

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <utility>

namespace fmzv {

uint64_t DeriveStreamSeed(uint64_t root, uint64_t index) {
  // splitmix64 finalizer over root + (index + 1) * golden gamma.
  uint64_t z = root + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

PointSampler::PointSampler(const Fp2Field& field, uint64_t root_seed,
                           uint64_t index)
    : field_(field), rng_(DeriveStreamSeed(root_seed, index)) {}

uint64_t PointSampler::UniformBelow(uint64_t n) {
  const uint64_t limit = std::numeric_limits<uint64_t>::max() -
                         std::numeric_limits<uint64_t>::max() % n;
  uint64_t r;
  do {
    r = rng_();
  } while (r >= limit);
  return r % n;
}

Fp PointSampler::NextFp() { return Fp{static_cast<uint32_t>(UniformBelow(field_.p()))}; }

Fp2 PointSampler::NextNonBase() {
  Fp a = NextFp();
  Fp b{static_cast<uint32_t>(1 + UniformBelow(field_.p() - 1))};
  return Fp2{a, b};
}

Fp2 EvalF(const Fp2Field& F, std::span<const Fp2> args) {
  const uint32_t p = F.p();
  const std::size_t d = args.size();
  if (d == 0) return F.One();
  // Distinct argument values; repeated arguments share inverse tables.
  std::vector<Fp2> distinct;
  std::vector<std::size_t> slot(d);
  for (std::size_t j = 0; j < d; ++j) {
    const Fp2 x = args[j];
    if (F.InBaseField(x) && x.a.v != 0) {
      throw PoleError("argument " + FormatFp2(x) + " is a pole of f");
    }
    auto it = std::find(distinct.begin(), distinct.end(), x);
    slot[j] = static_cast<std::size_t>(it - distinct.begin());
    if (it == distinct.end()) distinct.push_back(x);
  }
  if (d >= p) return F.Zero();
  // inv[s * (p-1) + (n-1)] = 1/(n - distinct[s])
  std::vector<Fp2> diffs;
  diffs.reserve(distinct.size() * (p - 1));
  for (Fp2 x : distinct) {
    for (uint32_t n = 1; n < p; ++n) diffs.push_back(F.Sub(F.FromInt(n), x));
  }
  const std::vector<Fp2> inv = BatchInverse(F, std::span<const Fp2>(diffs));
  // prefix[j]: sum over strict chains of length j with top index < n.
  std::vector<Fp2> prefix(d + 1, F.Zero());
  prefix[0] = F.One();
  for (uint32_t n = 1; n < p; ++n) {
    const std::size_t top = std::min<std::size_t>(d, n);
    for (std::size_t j = top; j >= 1; --j) {
      const Fp2 r = inv[slot[j - 1] * (p - 1) + (n - 1)];
      prefix[j] = F.Add(prefix[j], F.Mul(prefix[j - 1], r));
    }
  }
  return prefix[d];
}

Fp2 EvalFTilde(const Fp2Field& F, Fp2 x0, std::span<const Fp2> args,
               Fp2 x_last) {
  if (F.IsZero(x0) || F.IsZero(x_last)) {
    throw DivisionByZero("f~ boundary argument is zero");
  }
  return F.Div(EvalF(F, args), F.Mul(x0, x_last));
}

Fp2 EvalFTilde(const Fp2Field& F, std::span<const Fp2> tuple) {
  if (tuple.size() < 2) throw InvalidParameters("f~ needs at least two arguments");
  return EvalFTilde(F, tuple.front(), tuple.subspan(1, tuple.size() - 2),
                    tuple.back());
}

GabCase GabCase::Make(int a, int b) {
  if (a < -1 || b < -1 || (a == -1 && b == -1)) {
    throw InvalidParameters("(a,b) = (" + std::to_string(a) + "," +
                            std::to_string(b) + ") is not admissible");
  }
  return GabCase{a, b};
}

std::string GabCase::ToString() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

namespace {

std::vector<Fp2> Repeat(Fp2 x, int count) {
  return std::vector<Fp2>(static_cast<std::size_t>(std::max(count, 0)), x);
}

// (x^a, mid, x^b)
std::vector<Fp2> Pattern(Fp2 x, int a, Fp2 mid, int b) {
  std::vector<Fp2> out = Repeat(x, a);
  out.push_back(mid);
  auto tail = Repeat(x, b);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

Fp2 Two(const Fp2Field& F) { return F.FromInt(2); }

}  // namespace

Fp2 EvalG(const Fp2Field& F, GabCase ab, Fp2 c) {
  GabCase::Make(ab.a, ab.b);
  if (ab.a >= 0 && ab.b >= 0) {
    return EvalF(F, Pattern(c, ab.a, F.Mul(Two(F), c), ab.b));
  }
  const Fp2 half = F.Inv(Two(F));
  return F.Mul(half, EvalF(F, Repeat(c, ab.a + ab.b + 1)));
}

Fp2 EvalS(const Fp2Field& F, GabCase ab, Fp2 c) {
  GabCase::Make(ab.a, ab.b);
  const Fp2 two_c_minus_1 = F.Sub(F.Mul(Two(F), c), F.One());
  if (ab.a >= 0 && ab.b >= 0) {
    return EvalF(F, Pattern(c, ab.a, two_c_minus_1, ab.b));
  }
  return F.Mul(F.Div(c, two_c_minus_1), EvalF(F, Repeat(c, ab.a + ab.b + 1)));
}

Fp2 EvalU(const Fp2Field& F, Fp2 c) {
  const Fp2 cp = F.Pow(c, F.p() - 1);
  return F.Div(cp, F.Sub(cp, F.One()));
}

bool VerdictList::AllPassed() const { return Failures() == 0; }

int VerdictList::Failures() const {
  return static_cast<int>(std::count_if(verdicts.begin(), verdicts.end(),
                                        [](const PointVerdict& v) { return !v.pass; }));
}

std::string FormatFp2(Fp2 x) {
  return std::to_string(x.a.v) + "+" + std::to_string(x.b.v) + "w";
}

namespace {

// Conservative degree bound for the cleared numerator of lhs - rhs in the
// univariate specializations: at most five affine argument forms each
// contribute a product over n in [1, p-1], U contributes p-1 more, and the
// remaining prefactors are powers of c, c-1 and 2c-1.
int DegreeBound(uint32_t p, int depth) {
  return 6 * static_cast<int>(p - 1) + depth + 6;
}

struct TrialContext {
  const Fp2Field& F;
  PointSampler& sampler;
  Fp2 c;  // univariate point for the trial
  std::vector<PointVerdict>& out;
  int& resamples;

  void Record(std::string label, std::vector<Fp2> point, Fp2 lhs, Fp2 rhs) {
    out.push_back(PointVerdict{std::move(label), std::move(point), lhs, rhs,
                               lhs == rhs});
  }
};

using TrialFn = std::function<void(TrialContext&)>;

VerdictList RunTrials(const Fp2Field& F, std::string identity,
                      std::string params, const VerifyOptions& opts,
                      int depth, const TrialFn& fn) {
  VerdictList list;
  list.identity = std::move(identity);
  list.p = F.p();
  list.params = std::move(params);
  list.seed = opts.seed;
  list.degree_bound = DegreeBound(F.p(), depth);
  if (opts.trials < 0) throw InvalidParameters("trials must be >= 0");

  const uint64_t pool = uint64_t{F.p()} * (F.p() - 1);
  uint64_t trials = static_cast<uint64_t>(opts.trials);
  if (opts.exhaustive_degree) {
    trials = std::min<uint64_t>(pool, uint64_t(list.degree_bound) + 1);
  }
  const bool enumerate_all = opts.exhaustive_degree && trials == pool;

  std::set<std::pair<uint32_t, uint32_t>> seen;
  for (uint64_t t = 0; t < trials; ++t) {
    PointSampler sampler(F, opts.seed, t);
    Fp2 c;
    if (enumerate_all) {
      c = Fp2{Fp{static_cast<uint32_t>(t % F.p())},
              Fp{static_cast<uint32_t>(1 + t / F.p())}};
    } else {
      c = sampler.NextNonBase();
      while (opts.exhaustive_degree && seen.count({c.a.v, c.b.v})) {
        c = sampler.NextNonBase();
      }
    }
    seen.insert({c.a.v, c.b.v});
    TrialContext ctx{F, sampler, c, list.verdicts, list.resamples};
    fn(ctx);
  }
  list.distinct_points = static_cast<int>(seen.size());
  list.proof = list.distinct_points > list.degree_bound;
  return list;
}

std::string DParams(int d) { return "d=" + std::to_string(d); }

// f(x_1 - 1, ..., x_d - 1) - f(x)  vs  f(x_2-1..x_d-1)/(x_1-1) - f(x_1..x_{d-1})/x_d
void CheckTranslation(TrialContext& ctx, std::string label,
                      const std::vector<Fp2>& x) {
  const Fp2Field& F = ctx.F;
  std::vector<Fp2> shifted(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) shifted[j] = F.Sub(x[j], F.One());
  const std::span<const Fp2> xs(x), sh(shifted);
  const Fp2 lhs = F.Sub(EvalF(F, sh), EvalF(F, xs));
  const Fp2 rhs =
      F.Sub(F.Div(EvalF(F, sh.subspan(1)), F.Sub(x.front(), F.One())),
            F.Div(EvalF(F, xs.first(xs.size() - 1)), x.back()));
  ctx.Record(std::move(label), x, lhs, rhs);
}

std::vector<Fp2> Without(std::span<const Fp2> x, std::size_t skip) {
  std::vector<Fp2> out;
  out.reserve(x.size() - 1);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j != skip) out.push_back(x[j]);
  }
  return out;
}

// One-translation identity on a full tuple (x_0, ..., x_{d+1}) at slot i.
// Caller guarantees x_i - x_{i-1} - 1 != 0 and x_i - x_{i+1} != 0.
void CheckOneTranslation(TrialContext& ctx, std::string label,
                         const std::vector<Fp2>& x, int i) {
  const Fp2Field& F = ctx.F;
  const std::size_t s = static_cast<std::size_t>(i);
  std::vector<Fp2> moved = x;
  moved[s] = F.Sub(x[s], F.One());

  const Fp2 lhs = F.Sub(EvalFTilde(F, moved), EvalFTilde(F, x));

  // (x_0..x_{i-1}, x_{i+1}..) and (x_0..x_{i-2}, x_i - 1, x_{i+1}..)
  const Fp2 drop_i = EvalFTilde(F, Without(x, s));
  const Fp2 drop_prev_moved = EvalFTilde(F, Without(moved, s - 1));
  // (x_0..x_i, x_{i+2}..)
  const Fp2 drop_next = EvalFTilde(F, Without(x, s + 1));

  const Fp2 den1 = F.Sub(F.Sub(x[s], x[s - 1]), F.One());
  const Fp2 den2 = F.Sub(x[s], x[s + 1]);
  const Fp2 rhs = F.Add(F.Div(F.Sub(drop_i, drop_prev_moved), den1),
                        F.Div(F.Sub(drop_next, drop_i), den2));
  ctx.Record(std::move(label), x, lhs, rhs);
}

}  // namespace

VerdictList VerifyDiagonalF(PrimeModulus p, int d, const VerifyOptions& opts) {
  if (d <= 0 || static_cast<uint32_t>(d) >= p.value()) {
    throw InvalidParameters("diagonal f check requires 0 < d < p");
  }
  const Fp2Field F(p);
  return RunTrials(F, "lemma-fxx", DParams(d), opts, d, [&](TrialContext& ctx) {
    const Fp2 c = ctx.c;
    const Fp2 lhs = EvalF(F, Repeat(c, d));
    const Fp2 cp = F.Pow(c, p.value() - 1);
    const Fp2 rhs =
        F.Div(F.Pow(c, p.value() - 1 - d), F.Sub(cp, F.One()));
    ctx.Record("diagonal", {c}, lhs, rhs);
  });
}

VerdictList VerifyTranslation(PrimeModulus p, int d,
                              const VerifyOptions& opts) {
  if (d < 1) throw InvalidParameters("translation requires d >= 1");
  const Fp2Field F(p);
  int trial = 0;
  return RunTrials(F, "translation", DParams(d), opts, d,
                   [&](TrialContext& ctx) {
    std::vector<Fp2> generic(d);
    for (auto& x : generic) x = ctx.sampler.NextNonBase();
    CheckTranslation(ctx, "generic", generic);
    CheckTranslation(ctx, "diagonal", Repeat(ctx.c, d));
    const int before = trial++ % d;
    const Fp2 mid = F.Sub(F.Mul(Two(F), ctx.c), F.One());
    CheckTranslation(ctx, "specialized",
                     Pattern(ctx.c, before, mid, d - 1 - before));
  });
}

VerdictList VerifyGabSab(PrimeModulus p, GabCase ab,
                         const VerifyOptions& opts) {
  if (ab.a < 0 || ab.b < 0) throw InvalidParameters("gab-sab requires a, b >= 0");
  const Fp2Field F(p);
  return RunTrials(F, "gab-sab", "ab=" + ab.ToString(), opts, ab.a + ab.b + 1,
                   [&](TrialContext& ctx) {
    const Fp2 c = ctx.c;
    const Fp2 c1 = F.Sub(c, F.One());
    const Fp2 lhs = F.Sub(EvalG(F, ab, c1), EvalS(F, ab, c));
    const Fp2 rhs = F.Sub(F.Div(EvalG(F, GabCase::Make(ab.a - 1, ab.b), c1), c1),
                          F.Div(EvalS(F, GabCase::Make(ab.a, ab.b - 1), c), c));
    ctx.Record("univariate", {c}, lhs, rhs);
  });
}

VerdictList VerifyOneTranslation(PrimeModulus p, int d, int i,
                                 const VerifyOptions& opts) {
  if (d < 1 || i < 1 || i > d) {
    throw InvalidParameters("one-translation requires 1 <= i <= d");
  }
  const Fp2Field F(p);
  return RunTrials(F, "one-translation",
                   DParams(d) + ",i=" + std::to_string(i), opts, d + 2,
                   [&](TrialContext& ctx) {
    const std::size_t s = static_cast<std::size_t>(i);
    std::vector<Fp2> x(d + 2);
    for (int attempt = 0;; ++attempt) {
      for (auto& v : x) v = ctx.sampler.NextNonBase();
      const bool ok =
          !F.IsZero(F.Sub(F.Sub(x[s], x[s - 1]), F.One())) &&
          !F.IsZero(F.Sub(x[s], x[s + 1]));
      if (ok) break;
      if (attempt + 1 >= kMaxResamples) {
        throw DegenerateTuple("one-translation: no admissible tuple after " +
                              std::to_string(kMaxResamples) + " attempts");
      }
      ++ctx.resamples;
    }
    CheckOneTranslation(ctx, "generic", x, i);
    // (c^i, 2c, c^{d-i+1}): the doubled slot sits at position i.
    CheckOneTranslation(ctx, "specialized",
                        Pattern(ctx.c, i, F.Mul(Two(F), ctx.c), d - i + 1), i);
  });
}

VerdictList VerifySabGab(PrimeModulus p, GabCase ab,
                         const VerifyOptions& opts) {
  if (ab.a < 0 || ab.b < 0) throw InvalidParameters("sab-gab requires a, b >= 0");
  const Fp2Field F(p);
  return RunTrials(F, "sab-gab", "ab=" + ab.ToString(), opts, ab.a + ab.b + 1,
                   [&](TrialContext& ctx) {
    const Fp2 c = ctx.c;
    const Fp2 c1 = F.Sub(c, F.One());
    const Fp2 lhs = F.Sub(EvalS(F, ab, c), EvalG(F, ab, c));
    const Fp2 diag = EvalF(F, Repeat(c, ab.a + ab.b));
    Fp2 rhs = F.Div(diag, F.Mul(c, c1));
    rhs = F.Sub(rhs, F.Div(EvalS(F, GabCase::Make(ab.a - 1, ab.b), c), c1));
    rhs = F.Add(rhs, F.Div(EvalG(F, GabCase::Make(ab.a, ab.b - 1), c), c));
    ctx.Record("univariate", {c}, lhs, rhs);
  });
}

VerdictList VerifyInductionStep(PrimeModulus p, GabCase ab,
                                const VerifyOptions& opts) {
  const int w = ab.a + ab.b;
  if (ab.a < 0 || ab.b < 0 || w < 2 ||
      static_cast<uint32_t>(w) > p.value() - 1) {
    throw InvalidParameters("induction requires a, b >= 0 and 2 <= a+b <= p-1");
  }
  const Fp2Field F(p);
  return RunTrials(F, "induction", "ab=" + ab.ToString(), opts, w + 1,
                   [&](TrialContext& ctx) {
    const Fp2 c = ctx.c;
    const Fp2 c1 = F.Sub(c, F.One());
    const GabCase lower_b = GabCase::Make(ab.a, ab.b - 1);
    const GabCase lower_a = GabCase::Make(ab.a - 1, ab.b);
    const Fp2 lhs = F.Sub(EvalG(F, ab, c1), EvalG(F, ab, c));
    Fp2 rhs = F.Neg(F.Div(EvalS(F, lower_b, c), c));
    rhs = F.Add(rhs, F.Div(EvalG(F, lower_b, c), c));
    rhs = F.Add(rhs, F.Div(EvalG(F, lower_a, c1), c1));
    rhs = F.Sub(rhs, F.Div(EvalS(F, lower_a, c), c1));
    rhs = F.Add(rhs, F.Div(EvalU(F, c), F.Mul(F.Pow(c, w + 1), c1)));
    ctx.Record("univariate", {c}, lhs, rhs);
  });
}

VerdictList VerifyMainClosedForm(PrimeModulus p, GabCase ab,
                                 const VerifyOptions& opts) {
  GabCase::Make(ab.a, ab.b);
  const int w = ab.a + ab.b;
  if (w < 0 || w % 2 != 0 || static_cast<uint32_t>(w) >= p.value() - 1) {
    throw InvalidParameters(
        "closed form requires a+b even with 0 <= a+b < p-1");
  }
  const Fp2Field F(p);
  return RunTrials(F, "closed-form", "ab=" + ab.ToString(), opts, w + 1,
                   [&](TrialContext& ctx) {
    const Fp2 c = ctx.c;
    const Fp2 lhs = F.Mul(Two(F), EvalG(F, ab, c));
    const Fp2 rhs = F.Mul(F.PowSigned(c, -(w + 1)), EvalU(F, c));
    ctx.Record("univariate", {c}, lhs, rhs);
  });
}

}  // namespace fmzv
