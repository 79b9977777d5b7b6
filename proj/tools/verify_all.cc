// Copyright 2026 The qfold Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "verify_all.h"

#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "qfold/dim_calc.h"
#include "qfold/error.h"
#include "qfold/lie_fold.h"
#include "qfold/module_lab.h"
#include "qfold/rep_branch.h"
#include "qfold/split_quotient.h"

namespace qfold {

namespace {

struct Result {
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

Result Pass(std::string detail) { return {true, false, std::move(detail)}; }
Result Fail(std::string detail) { return {false, false, std::move(detail)}; }
Result Skip(std::string detail) { return {true, true, std::move(detail)}; }

// Entries at most `max` per orbit, constant along orbits.
DimensionVector OrbitConstant(const OrbitData& od, int max, Rng& rng) {
  std::vector<int> per_orbit(od.num_vertex_orbits());
  for (int& x : per_orbit) x = static_cast<int>(rng() % (max + 1));
  std::vector<int> v(od.vertex_orbit_of.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = per_orbit[od.vertex_orbit_of[i]];
  return DimensionVector(std::move(v));
}

DimensionVector PlusOne(const DimensionVector& v) {
  std::vector<int> w = v.values();
  for (int& x : w) ++x;
  return DimensionVector(std::move(w));
}

Result CheckAutomorphismEntry(const CorpusEntry& e, Rng&, int) {
  CheckAutomorphism(e.quiver, e.automorphism);
  if (!(e.automorphism.Power(e.automorphism.order()) == DiagramAutomorphism::Identity(e.quiver))) {
    return Fail("a^order is not the identity");
  }
  if (IsAdmissible(e.quiver, e.automorphism) != e.admissible) return Fail("admissible flag is stale");
  return Pass("order " + std::to_string(e.automorphism.order()) +
              (e.admissible ? ", admissible" : ", not admissible"));
}

Result CheckInvolution(const CorpusEntry& e, Rng&, int) {
  if (!e.admissible) return Skip("not admissible");
  const InvolutionWitness w = SplitInvolutionCheck(e.quiver, e.automorphism);
  if (!w.automorphisms_match) return Fail("s(s(Q)) found but a'' does not match a");
  return Pass("s(s(Q)) = Q");
}

Result CheckFibers(const CorpusEntry& e, Rng& rng, int trials) {
  if (!e.admissible) return Skip("not admissible");
  const SplitData sd = SplitQuiver(e.quiver, e.automorphism);
  long long total = 0;
  for (int t = 0; t < trials; ++t) {
    const DimensionVector v = OrbitConstant(sd.orbits, 2, rng);
    const auto fibers = FibersOfP(v, sd);
    if (static_cast<long long>(fibers.size()) != FiberCount(v, sd)) return Fail("fiber count differs from closed form");
    for (size_t k = 0; k < fibers.size(); ++k) {
      if (ProjectDim(fibers[k], sd) != v) return Fail("fiber element projects elsewhere");
      if (k > 0 && !(fibers[k - 1] < fibers[k])) return Fail("fiber not strictly lexicographic");
    }
    total += static_cast<long long>(fibers.size());
  }
  return Pass(std::to_string(total) + " fiber elements");
}

Result CheckFoldSerre(const CorpusEntry& e, Rng&, int) {
  if (!e.admissible) return Skip("not admissible");
  const CartanMatrix c = CartanFromQuiver(e.quiver);
  const TypeLabel base = ClassifyCartan(c);
  if (base.family != Family::kA && base.family != Family::kD) return Skip(base.ToString() + " base");
  const auto& perm = e.automorphism.vertex_perm();
  const FoldedAlgebraData fold = FoldCartan(c, perm);
  const DefiningFamily fam = base.family == Family::kA ? DefiningFamily::kA : DefiningFamily::kD;
  const SerreResult r = SerreCheck(fold.folded, FoldedGenerators(c.rank(), fam, perm));
  if (!r.ok) return Fail(r.violation);
  return Pass(base.ToString() + " -> " + ClassifyCartan(fold.folded).ToString());
}

Result CheckBranch(const CorpusEntry& e, Rng& rng, int trials) {
  if (!e.admissible) return Skip("not admissible");
  const CartanMatrix c = CartanFromQuiver(e.quiver);
  if (!IsFiniteType(c)) return Skip("affine base");
  const FoldedAlgebraData fold = FoldCartan(c, e.automorphism.vertex_perm());
  const OrbitData od = ComputeOrbitData(e.quiver, e.automorphism);
  constexpr int64_t kCap = 5000;
  int done = 0;
  for (int attempt = 0; attempt < 20 * trials && done < trials; ++attempt) {
    const Weight lambda = OrbitConstant(od, 1, rng).values();
    int64_t dim = 0;
    try {
      dim = WeylDimension(c, lambda, kCap);
    } catch (const Error& err) {
      if (err.code() == ErrorCode::kDimensionCapExceeded) continue;
      throw;
    }
    int64_t sum = 0;
    for (const BranchTerm& t : Branch(c, lambda, fold, kCap)) {
      if (t.multiplicity <= 0) return Fail("nonpositive multiplicity");
      sum += t.multiplicity * WeylDimension(fold.folded, t.weight, kCap);
    }
    if (sum != dim) return Fail("dimension not conserved");
    ++done;
  }
  return Pass(std::to_string(done) + " weights conserved");
}

Result CheckThetaOrder(const CorpusEntry& e, Rng& rng, int trials) {
  const RelationMode mode = e.admissible ? RelationMode::kSigned : RelationMode::kUnsigned;
  const ThetaContext ctx = MakeThetaContext(e.quiver, e.automorphism, mode);
  for (int t = 0; t < trials; ++t) {
    const DimensionVector v = OrbitConstant(ctx.od, 2, rng), w = OrbitConstant(ctx.od, 1, rng);
    const RationalModule m = RandomRelationModule<Rational>(ctx.dq, v, w, rng, mode);
    const RationalMaps sigma = RandomTwist<Rational>(ctx, w, rng);
    RationalModule x = ApplyTheta(ctx, m, sigma);
    if (!CheckRelations(ctx.dq, x, mode).ok) return Fail("theta broke the relations");
    for (int k = 1; k < ctx.od.n; ++k) x = ApplyTheta(ctx, x, sigma);
    if (!(x == m)) return Fail("theta^n differs from the identity");
  }
  return Pass("theta^" + std::to_string(ctx.od.n) + " = id on " + std::to_string(trials) + " modules");
}

Result CheckStabilityOracle(const CorpusEntry& e, Rng& rng, int trials) {
  using F = PrimeField<3>;
  const DoubledQuiver dq = BuildDoubled(e.quiver);
  const int max = e.quiver.num_vertices() <= 5 ? 2 : 1;
  int stable = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<int> v, w;
    for (int i = 0; i < e.quiver.num_vertices(); ++i) {
      v.push_back(static_cast<int>(rng() % (max + 1)));
      w.push_back(rng() % 2 ? v.back() : static_cast<int>(rng() % (max + 1)));
    }
    const auto m = RandomRelationModule<F>(dq, DimensionVector(v), DimensionVector(w), rng);
    const bool s = IsStable(dq, m);
    if (s != BruteStability<3>(dq, m)) return Fail("is_stable disagrees with enumeration");
    stable += s;
  }
  return Pass(std::to_string(stable) + " of " + std::to_string(trials) + " stable, all agree");
}

Result CheckThetaWitness(const CorpusEntry& e, Rng& rng, int trials) {
  if (!e.admissible) return Skip("not admissible");
  const ThetaContext ctx = MakeThetaContext(e.quiver, e.automorphism);
  if (ctx.od.n != 2) return Skip("automorphism is not an involution");
  const int nv = e.quiver.num_vertices();
  const DimensionVector none = DimensionVector::Zero(nv);
  const RationalMaps no_sigma(nv, RationalMatrix(0, 0));
  for (int t = 0; t < trials; ++t) {
    DimensionVector v = OrbitConstant(ctx.od, 1, rng);
    if (v.Total() == 0) v = PlusOne(v);
    const RationalModule m1 = RandomRelationModule<Rational>(ctx.dq, v, none, rng);
    const RationalMaps g = RandomGroupElement<Rational>(m1.v, rng);
    const ThetaWitness tw = BuildThetaWitness(ctx, m1, g, no_sigma);
    if (!VerifyTransition(ctx, tw.module, tw.sigma, tw.witness)) return Fail("witness does not verify");
    for (int i = 0; i < nv; ++i) {
      if (e.automorphism.vertex(i) != i) continue;
      if (ComputeEigenProfile(tw.witness[i], 2).outside != 0) return Fail("fixed-vertex eigenvalue off +-1");
    }
  }
  return Pass("exchanged witness verifies, fixed-vertex spectrum in {+1,-1}");
}

Result CheckTheorem5(const CorpusEntry& e, Rng& rng, int trials) {
  if (!e.admissible) return Skip("not admissible");
  const ThetaContext ctx = MakeThetaContext(e.quiver, e.automorphism);
  const int count = std::max(2, trials / 5);
  for (int t = 0; t < count; ++t) {
    DimensionVector v = OrbitConstant(ctx.od, 1, rng);
    if (v.Total() == 0) v = PlusOne(v);
    std::vector<int> sub(v.size());
    for (int i = 0; i < v.size(); ++i) sub[i] = v[i] == 0 ? 0 : static_cast<int>(rng() % 2);
    // Re-impose orbit constancy on the submodule dimensions.
    for (int i = 0; i < v.size(); ++i) sub[i] = sub[ctx.od.vertex_orbits[ctx.od.vertex_orbit_of[i]].front()];
    const Theorem5Instance inst = GenerateTheorem5Instance(ctx, DimensionVector(sub), v, PlusOne(v), rng);
    const Theorem5Result r = Theorem5Verify(ctx, inst.xi, inst.sub, inst.g_sub, inst.m, inst.g, inst.sigma);
    if (!r.ok) {
      return Fail("eigenvector at vertex " + e.quiver.vertex_id(r.vertex) + " leaves its eigenspace");
    }
  }
  return Pass(std::to_string(count) + " stable pairs");
}

Result CheckDims(const CorpusEntry& e, Rng& rng, int trials) {
  if (!e.admissible) return Skip("not admissible");
  const ThetaContext ctx = MakeThetaContext(e.quiver, e.automorphism);
  const SplitData sd = SplitQuiver(e.quiver, e.automorphism);
  const CartanMatrix cs = CartanFromQuiver(sd.split);
  long long records = 0;
  for (int t = 0; t < trials; ++t) {
    const DimensionVector v = OrbitConstant(ctx.od, 2, rng), w = OrbitConstant(ctx.od, 2, rng);
    const DimensionVector ws = SplitFraming(w, RandomTwist<Rational>(ctx, w, rng), sd);
    const auto rs = FixedComponents(v, sd, ws);
    if (static_cast<long long>(rs.size()) != FiberCount(v, sd)) return Fail("record count differs from closed form");
    for (const auto& r : rs) {
      if (r.dim != DimQuiverVariety(r.v_split, ws, cs) || r.empty != (r.dim < 0)) return Fail("record dimension");
    }
    if (rs.size() >= 2) {
      const auto x = DimSteinberg(rs[0].v_split, rs[1].v_split, ws, cs);
      const auto y = DimSteinberg(rs[1].v_split, rs[0].v_split, ws, cs);
      if (!(x.value == y.value) || !(x.value * 2 == Rational(static_cast<long>(rs[0].dim + rs[1].dim)))) {
        return Fail("Steinberg dimension is not the symmetric half-sum");
      }
    }
    records += static_cast<long long>(rs.size());
  }
  return Pass(std::to_string(records) + " records");
}

struct Check {
  const char* name;
  std::function<Result(const CorpusEntry&, Rng&, int)> run;
};

const std::vector<Check>& Checks() {
  static const std::vector<Check> checks = {
      {"automorphism", CheckAutomorphismEntry}, {"involution", CheckInvolution},
      {"fibers", CheckFibers},                  {"fold-serre", CheckFoldSerre},
      {"branch", CheckBranch},                  {"theta-order", CheckThetaOrder},
      {"stability-oracle", CheckStabilityOracle}, {"theta-witness", CheckThetaWitness},
      {"theorem5", CheckTheorem5},              {"dims", CheckDims},
  };
  return checks;
}

}  // namespace

std::vector<CheckOutcome> VerifyAll(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opts) {
  const auto& checks = Checks();
  const size_t total = corpus.size() * checks.size();
  std::vector<CheckOutcome> out(total);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k = next++; k < total; k = next++) {
      const CorpusEntry& entry = corpus[k / checks.size()];
      const Check& check = checks[k % checks.size()];
      std::seed_seq seq{static_cast<uint32_t>(opts.seed), static_cast<uint32_t>(opts.seed >> 32),
                        static_cast<uint32_t>(k)};
      Rng rng(seq);
      CheckOutcome& o = out[k];
      o.entry = entry.name;
      o.check = check.name;
      try {
        Result r = check.run(entry, rng, opts.trials);
        o.passed = r.passed;
        o.skipped = r.skipped;
        o.detail = std::move(r.detail);
      } catch (const std::exception& err) {
        o.passed = false;
        o.detail = err.what();
      }
    }
  };
  int threads = opts.threads > 0 ? opts.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(total)));
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace qfold
