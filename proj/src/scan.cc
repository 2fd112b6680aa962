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

#include "fmzv/scan.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "fmzv/primes.h"

namespace fmzv {

const char* ToString(PrimeClass c) {
  switch (c) {
    case PrimeClass::kZero:
      return "zero";
    case PrimeClass::kException:
      return "exception";
    case PrimeClass::kSkipped:
      return "skipped";
  }
  return "?";
}

std::vector<uint32_t> AdelicObservation::Exceptions() const {
  std::vector<uint32_t> out;
  for (const auto& r : residues) {
    if (r.cls == PrimeClass::kException) out.push_back(r.p);
  }
  return out;
}

std::vector<uint32_t> AdelicObservation::Skipped() const {
  std::vector<uint32_t> out;
  for (const auto& r : residues) {
    if (r.cls == PrimeClass::kSkipped) out.push_back(r.p);
  }
  return out;
}

std::optional<bool> AdelicObservation::PredictionHolds() const {
  const auto ex = Exceptions();
  switch (prediction) {
    case Prediction::kNone:
      return std::nullopt;
    case Prediction::kExact:
      return ex == predicted_exceptions;
    case Prediction::kSubset:
      return std::includes(predicted_exceptions.begin(),
                           predicted_exceptions.end(), ex.begin(), ex.end());
  }
  return std::nullopt;
}

std::vector<std::string> ConsistencyViolations(const AdelicObservation& obs) {
  std::vector<std::string> out;
  const auto expected = OddPrimesInRange(obs.p_min, obs.p_max);
  if (obs.residues.size() != expected.size()) {
    out.push_back(obs.statement + ": classified " +
                  std::to_string(obs.residues.size()) + " primes, expected " +
                  std::to_string(expected.size()));
  }
  const std::size_t n = std::min(obs.residues.size(), expected.size());
  for (std::size_t j = 0; j < n; ++j) {
    const PrimeResidue& r = obs.residues[j];
    if (r.p != expected[j]) {
      out.push_back(obs.statement + ": slot " + std::to_string(j) + " holds " +
                    std::to_string(r.p) + ", expected " +
                    std::to_string(expected[j]));
      break;
    }
    const bool ok =
        (r.cls == PrimeClass::kZero && r.value == 0 && r.skip_reason.empty()) ||
        (r.cls == PrimeClass::kException && r.value != 0 &&
         r.skip_reason.empty()) ||
        (r.cls == PrimeClass::kSkipped && r.value == 0 &&
         !r.skip_reason.empty());
    if (!ok) {
      out.push_back(obs.statement + ": inconsistent class at p=" +
                    std::to_string(r.p));
    }
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double MsSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

Fp ExpectedFormulaValue(const FpField& f, int k) {
  return (k % static_cast<int>(f.p() - 1) == 0) ? f.Neg(f.One()) : f.Zero();
}

void CheckFormulaParams(int d, int k, int i) {
  if (d < 1 || d % 2 == 0) throw InvalidParameters("d must be a positive odd integer");
  if (i < 1 || i > d) throw InvalidParameters("need 1 <= i <= d");
  if (k < d) throw InvalidParameters("need k >= d");
}

// Per-prime result shared by the plain and star observations of a sweep.
struct PrimeEval {
  std::string skip_reason;
  Fp plain;
  Fp star;
};

PrimeResidue Classify(uint32_t p, const PrimeEval& e, bool star) {
  PrimeResidue r;
  r.p = p;
  if (!e.skip_reason.empty()) {
    r.cls = PrimeClass::kSkipped;
    r.skip_reason = e.skip_reason;
    return r;
  }
  r.value = star ? e.star.v : e.plain.v;
  r.cls = r.value == 0 ? PrimeClass::kZero : PrimeClass::kException;
  return r;
}

// Evaluates every odd prime of the range (in parallel) and returns the
// plain and star observations, both ascending in p.
std::pair<AdelicObservation, AdelicObservation> Sweep(
    const std::string& statement, const ParamList& params,
    const SweepOptions& opts,
    const std::function<PrimeEval(const FpField&)>& eval) {
  const auto start = Clock::now();
  if (opts.p_max < opts.p_min) throw InvalidParameters("p_max < p_min");
  const auto primes = OddPrimesInRange(opts.p_min, opts.p_max);
  std::vector<PrimeEval> results(primes.size());
  ParallelFor(primes.size(), opts.threads, [&](std::size_t j) {
    results[j] = eval(FpField(PrimeModulus(primes[j])));
  });
  AdelicObservation plain;
  plain.statement = statement;
  plain.params = params;
  plain.p_min = opts.p_min;
  plain.p_max = opts.p_max;
  plain.seed = opts.seed;
  AdelicObservation star = plain;
  star.statement = statement + "-star";
  for (std::size_t j = 0; j < primes.size(); ++j) {
    plain.residues.push_back(Classify(primes[j], results[j], false));
    star.residues.push_back(Classify(primes[j], results[j], true));
  }
  plain.elapsed_ms = star.elapsed_ms = MsSince(start);
  return {std::move(plain), std::move(star)};
}

std::vector<std::string> WeightStrings(const std::vector<RationalWeight>& w) {
  std::vector<std::string> out;
  for (const auto& x : w) out.push_back(x.ToString());
  return out;
}

// Reduces weights mod p, or returns a skip reason.
std::string ReduceWeights(const FpField& f,
                          const std::vector<RationalWeight>& w,
                          std::vector<Fp>& out) {
  out.clear();
  for (const auto& x : w) {
    if (x.IsZero()) return "zero-weight";
    if (!x.ReducibleMod(f.p())) return "denominator";
    Fp r = ReduceRational(x, f);
    if (r.v == 0) return "weight-vanishes";
    out.push_back(r);
  }
  return {};
}

PrimeEval EvalWeights(const FpField& f, const std::vector<RationalWeight>& w,
                      int k) {
  PrimeEval e;
  if (f.p() <= w.size()) {
    e.skip_reason = "p<=depth";
    return e;
  }
  std::vector<Fp> red;
  e.skip_reason = ReduceWeights(f, w, red);
  if (!e.skip_reason.empty()) return e;
  WeightVector wv(std::move(red));
  e.plain = WeightedSum(f, wv, k);
  e.star = WeightedStarSum(f, wv, k);
  return e;
}

AdelicObservation FiniteMzvSweep(int d, int k, int i, const SweepOptions& opts,
                                 bool star) {
  CheckFormulaParams(d, k, i);
  ParamList params = {{"d", int64_t{d}}, {"k", int64_t{k}}, {"i", int64_t{i}}};
  auto eval = [&](const FpField& f) {
    PrimeEval e;
    if (f.p() <= static_cast<uint32_t>(d)) {
      e.skip_reason = "p<=depth";
      return e;
    }
    const WeightVector w = WeightVector::Doubled(f, d, i);
    if (star) {
      e.star = WeightedStarSum(f, w, k);
    } else {
      e.plain = WeightedSum(f, w, k);
    }
    return e;
  };
  auto [plain, starred] = Sweep("mzv", params, opts, eval);
  AdelicObservation obs = star ? std::move(starred) : std::move(plain);
  for (uint32_t p : OddPrimesInRange(opts.p_min, opts.p_max)) {
    if (p <= static_cast<uint32_t>(d)) continue;
    if (star ? p <= static_cast<uint32_t>(k) + 1 : k % (p - 1) == 0) {
      obs.predicted_exceptions.push_back(p);
    }
  }
  obs.prediction = star ? Prediction::kSubset : Prediction::kExact;
  return obs;
}

}  // namespace

FormulaVerdict VerifyWeightedSumFormula(PrimeModulus p, int d, int k, int i) {
  CheckFormulaParams(d, k, i);
  if (p.value() <= static_cast<uint32_t>(d)) {
    throw InvalidParameters("weighted sum formula requires p > d");
  }
  const FpField f(p);
  FormulaVerdict v{p.value(), d, k, i, {}, {}, false};
  v.value = WeightedSum(f, WeightVector::Doubled(f, d, i), k);
  v.expected = ExpectedFormulaValue(f, k);
  v.pass = v.value == v.expected;
  return v;
}

std::vector<FormulaVerdict> SweepWeightedSumFormula(int d, int k_min, int k_max,
                                           int only_i,
                                           const SweepOptions& opts) {
  CheckFormulaParams(d, std::max(k_min, d), only_i == 0 ? 1 : only_i);
  if (k_max < std::max(k_min, d)) throw InvalidParameters("need k_max >= max(k_min, d)");
  const auto all = OddPrimesInRange(std::max<uint32_t>(opts.p_min, d + 1),
                                    opts.p_max);
  std::vector<std::vector<FormulaVerdict>> per_prime(all.size());
  ParallelFor(all.size(), opts.threads, [&](std::size_t j) {
    const FpField f{PrimeModulus(all[j])};
    for (int i = 1; i <= d; ++i) {
      if (only_i != 0 && i != only_i) continue;
      const auto sums =
          WeightedSums(f, WeightVector::Doubled(f, d, i), k_max, false);
      for (int k = std::max(k_min, d); k <= k_max; ++k) {
        FormulaVerdict v{all[j], d, k, i, sums[k], ExpectedFormulaValue(f, k),
                          false};
        v.pass = v.value == v.expected;
        per_prime[j].push_back(v);
      }
    }
  });
  std::vector<FormulaVerdict> out;
  for (auto& v : per_prime) out.insert(out.end(), v.begin(), v.end());
  return out;
}

AdelicObservation VerifyFiniteMzv(int d, int k, int i,
                                  const SweepOptions& opts) {
  return FiniteMzvSweep(d, k, i, opts, /*star=*/false);
}

AdelicObservation VerifyFiniteMzvStar(int d, int k, int i,
                                      const SweepOptions& opts) {
  return FiniteMzvSweep(d, k, i, opts, /*star=*/true);
}

std::vector<RationalWeight> Conjecture1Weights(int r) {
  if (r < 1) throw InvalidParameters("r must be >= 1");
  std::vector<RationalWeight> w{RationalWeight(1)};
  for (int j = 1; j <= r; ++j) w.emplace_back(j);
  return w;
}

std::vector<RationalWeight> Conjecture2Weights(int r) {
  if (r < 1 || r % 2 == 0) throw InvalidParameters("r must be a positive odd integer");
  auto w = Conjecture1Weights(r);
  w.emplace_back(r);
  return w;
}

std::pair<std::vector<RationalWeight>, std::vector<RationalWeight>>
Conjecture3Weights(const RationalWeight& a, const RationalWeight& b, int r) {
  if (r < 1) throw InvalidParameters("r must be >= 1");
  std::vector<RationalWeight> lhs{a}, rhs{b};
  for (int j = 1; j <= r; ++j) {
    const RationalWeight t = a + b * j;
    lhs.push_back(t);
    rhs.push_back(t);
  }
  return {lhs, rhs};
}

std::vector<AdelicObservation> ScanWeights(const std::string& statement,
                                           const std::vector<RationalWeight>& w,
                                           int k, const SweepOptions& opts) {
  if (w.empty()) throw InvalidParameters("weight list is empty");
  if (k < 1) throw InvalidParameters("k must be >= 1");
  ParamList params = {{"k", int64_t{k}},
                      {"depth", static_cast<int64_t>(w.size())},
                      {"weights", WeightStrings(w)}};
  auto [plain, star] = Sweep(statement, params, opts, [&](const FpField& f) {
    return EvalWeights(f, w, k);
  });
  return {std::move(plain), std::move(star)};
}

std::vector<AdelicObservation> ScanDifference(
    const std::string& statement, const std::vector<RationalWeight>& lhs,
    const std::vector<RationalWeight>& rhs, int k, const SweepOptions& opts) {
  if (lhs.empty() || lhs.size() != rhs.size()) {
    throw InvalidParameters("weight lists must be nonempty and of equal depth");
  }
  if (k < 1) throw InvalidParameters("k must be >= 1");
  ParamList params = {{"k", int64_t{k}},
                      {"depth", static_cast<int64_t>(lhs.size())},
                      {"weights", WeightStrings(lhs)},
                      {"weights_rhs", WeightStrings(rhs)}};
  auto [plain, star] = Sweep(statement, params, opts, [&](const FpField& f) {
    PrimeEval l = EvalWeights(f, lhs, k);
    if (!l.skip_reason.empty()) return l;
    PrimeEval r = EvalWeights(f, rhs, k);
    if (!r.skip_reason.empty()) return r;
    return PrimeEval{{}, f.Sub(l.plain, r.plain), f.Sub(l.star, r.star)};
  });
  return {std::move(plain), std::move(star)};
}

std::vector<AdelicObservation> ScanConjecture1(int r, int k,
                                               const SweepOptions& opts) {
  auto obs = ScanWeights("conj1", Conjecture1Weights(r), k, opts);
  for (auto& o : obs) {
    o.params.insert(o.params.begin(), {"r", int64_t{r}});
    o.notes.push_back("weights read as [1] ++ [1..r]");
  }
  return obs;
}

std::vector<AdelicObservation> ScanConjecture2(int r, int k,
                                               const SweepOptions& opts) {
  auto obs = ScanWeights("conj2", Conjecture2Weights(r), k, opts);
  for (auto& o : obs) {
    o.params.insert(o.params.begin(), {"r", int64_t{r}});
    o.notes.push_back("weights read as [1] ++ [1..r] ++ [r]");
  }
  return obs;
}

std::vector<AdelicObservation> ScanConjecture3(const RationalWeight& a,
                                               const RationalWeight& b, int r,
                                               int k,
                                               const SweepOptions& opts) {
  auto [lhs, rhs] = Conjecture3Weights(a, b, r);
  auto obs = ScanDifference("conj3", lhs, rhs, k, opts);
  const bool has_zero =
      std::any_of(lhs.begin(), lhs.end(), [](auto& w) { return w.IsZero(); }) ||
      b.IsZero();
  for (auto& o : obs) {
    o.params.insert(o.params.begin(), {"b", b.ToString()});
    o.params.insert(o.params.begin(), {"a", a.ToString()});
    o.params.insert(o.params.begin() + 2, {"r", int64_t{r}});
    if (has_zero) o.notes.push_back("a zero weight makes every prime skipped");
  }
  return obs;
}

Fp WeightedSumByEnumeration(const FpField& f, std::span<const Fp> w, int k,
                            bool star) {
  Fp total = f.Zero();
  ForEachComposition(k, static_cast<int>(w.size()), [&](const Composition& c) {
    Fp term = star ? HarmonicStarSum(f, c) : HarmonicSum(f, c);
    for (std::size_t j = 0; j < w.size(); ++j) {
      term = f.Mul(term, f.Pow(w[j], c[j]));
    }
    total = f.Add(total, term);
  });
  return total;
}

std::vector<std::string> OracleSpotCheck(
    const AdelicObservation& obs, const std::vector<RationalWeight>& lhs,
    const std::vector<RationalWeight>* rhs, int k, bool star, int max_primes) {
  std::vector<std::string> out;
  int checked = 0;
  for (const auto& r : obs.residues) {
    if (checked >= max_primes) break;
    if (r.cls == PrimeClass::kSkipped) continue;
    ++checked;
    const FpField f{PrimeModulus(r.p)};
    std::vector<Fp> red;
    ReduceWeights(f, lhs, red);
    Fp want = WeightedSumByEnumeration(f, red, k, star);
    if (rhs != nullptr) {
      ReduceWeights(f, *rhs, red);
      want = f.Sub(want, WeightedSumByEnumeration(f, red, k, star));
    }
    if (want.v != r.value) {
      out.push_back(obs.statement + ": oracle disagrees at p=" +
                    std::to_string(r.p) + " (" + std::to_string(r.value) +
                    " vs " + std::to_string(want.v) + ")");
    }
  }
  return out;
}

}  // namespace fmzv
