// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "puiseux/atoms.hpp"
#include "puiseux/canonical.hpp"
#include "puiseux/closures.hpp"
#include "puiseux/constructions.hpp"
#include "puiseux/density.hpp"
#include "puiseux/numerical_monoid.hpp"
#include "puiseux/oracle.hpp"
#include "support/gen.hpp"

namespace puiseux {
namespace {

using testing::R;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

// EpsDense windows seen during the run, re-checked by criterion 10.
struct Window {
  std::string label;
  MonoidSpec spec;
  Rat r;
  Rat s;
  Rat eps;
  std::optional<std::size_t> depth;
};
std::vector<Window> g_windows;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

MonoidSpec increasing(IncreasingForm form, const char* first, const char* second,
                      std::vector<Rat> prefix = {}) {
  IncreasingParams p;
  p.form = form;
  p.first = R(first);
  if (second != nullptr) p.second = R(second);
  p.prefix = std::move(prefix);
  return build_increasing(p);
}

std::vector<MonoidSpec> non_fg_catalog() {
  return {parse_spec(R"({"variant":"unit_fraction_powers","base":2})"),
          parse_spec(R"({"variant":"unit_fraction_powers","base":10})"),
          parse_spec(R"({"variant":"geometric","ratio":"2/3"})"),
          parse_spec(R"({"variant":"geometric","ratio":"7/5"})"),
          parse_spec(R"({"variant":"prime_reciprocal_shift","max_prime":"all"})"),
          build_dense_atoms(200, SeedSequence::kCalkinWilf).spec,
          increasing(IncreasingForm::kHarmonic, "2", "1/2", {R("3/2"), R("5/3"), R("7/4")}),
          increasing(IncreasingForm::kPrimeReciprocal, "3", "1")};
}

void c1_numerical_core(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  testing::Gen gen(1001);
  std::int64_t checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto gens = gen.numerical_generators(200);
    const auto nm = NumericalMonoid::from_generators(gens);
    const std::int64_t top = *std::max_element(gens.begin(), gens.end());
    const std::int64_t bound = 4 * top * top;
    const auto dp = testing::dp_members(gens, bound);
    std::int64_t largest_gap = -1;
    for (std::int64_t v = 0; v <= bound; ++v) {
      const bool in = dp[static_cast<std::size_t>(v)] != 0;
      if (!in) largest_gap = v;
      if (nm.contains(v) != in) {
        o.require(false, "membership mismatch at " + std::to_string(v));
        return;
      }
      ++checked;
    }
    o.require(nm.frobenius() == largest_gap, "frobenius mismatch");
  }
  const double secs = seconds_since(t0);
  o.require(secs < 30.0, "runtime over 30 s");
  o.detail << "200 sets, " << checked << " memberships agree, " << secs << " s";
}

void c2_conductor_6_9_20(Outcome& o) {
  const auto spec = make_finite({R("6"), R("9"), R("20")});
  const auto r = conductor(spec);
  o.require(r.kind == ConductorKind::kTail, "conductor kind is not Tail");
  o.require(r.sigma == R("43") && r.minimum == R("44"), "sigma/minimum differ from 43/44");
  // Oracle: the conductor is {x in M : x + k in M for all k >= 0}; the
  // closure of a numerical monoid is N0.
  const auto e = enumerate(spec, R("300"), kAllGenerators);
  std::int64_t oracle_f = -1;
  for (std::int64_t v = 0; v <= 300; ++v) {
    if (!e.contains(Rat(v))) oracle_f = v;
  }
  std::int64_t oracle_min = -1;
  for (std::int64_t x = 0; x <= 150 && oracle_min < 0; ++x) {
    if (!e.contains(Rat(x))) continue;
    bool all = true;
    for (std::int64_t k = 0; k <= 150 && all; ++k) all = e.contains(Rat(x + k));
    if (all) oracle_min = x;
  }
  o.require(oracle_f == 43, "oracle frobenius is not 43");
  o.require(oracle_min == 44, "oracle conductor minimum is not 44");
  o.detail << "Tail sigma=" << r.sigma.str() << " minimum=" << r.minimum.str() << ", oracle f=" << oracle_f
           << " min=" << oracle_min;
}

void c3_root_closure(Outcome& o) {
  testing::Gen gen(1003);
  std::int64_t closure_points = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = gen.fg_generators(10, 4);
    const auto spec = make_finite(g);
    const auto c = root_closure(spec);
    const auto e = enumerate(spec, R("1024"), kAllGenerators);
    for (const Rat& x : e.elements) o.require(c.contains(x), "element outside its closure");
    for (long d = 1; d <= 64; ++d) {
      for (long a = 1; a <= 4 * d; ++a) {
        const Rat x{BigInt(a), BigInt(d)};
        if (x.den() != d || !c.contains(x)) continue;
        bool found = false;
        for (long k = 1; k <= 256 && !found; ++k) found = e.contains(x * Rat(k));
        o.require(found, "closure element " + x.str() + " has no multiple in M");
        ++closure_points;
      }
    }
  }
  const auto geo = root_closure(parse_spec(R"({"variant":"geometric","ratio":"2/3"})"));
  const long dens[] = {1, 2, 3, 4, 5, 6, 9, 12, 27, 81};
  int grid = 0;
  for (long j = 1; j <= 20; ++j) {
    for (long d : dens) {
      const Rat x{BigInt(j), BigInt(d)};
      BigInt den = x.den();
      while (den % 3 == 0) den /= 3;
      o.require(geo.contains(x) == (den == 1), "geometric 2/3 closure differs at " + x.str());
      ++grid;
    }
  }
  o.detail << "50 FG monoids, " << closure_points << " closure points with a multiple in M; " << grid
           << "-point grid matches Z[1/3]";
}

void c4_gp_density(Outcome& o) {
  const Rat bound{BigInt(1), BigInt(1000000)};
  int families = 0;
  for (const auto& spec : non_fg_catalog()) {
    const auto r = gp_density(spec, bound);
    o.require(r.kind == GpDensityKind::kDenseNotFG, "family not DenseNotFG: " + to_json_text(spec));
    if (r.kind != GpDensityKind::kDenseNotFG) continue;
    o.require(r.witnesses.back() < bound, "stream does not go below 1e-6");
    for (std::size_t i = 1; i < r.witnesses.size(); ++i) {
      o.require(r.witnesses[i] < r.witnesses[i - 1], "stream not decreasing");
    }
    const auto group = difference_group(spec);
    if (group.kind != GroupKind::kUnknown) {
      for (const Rat& w : r.witnesses) o.require(group.contains(w), "witness outside the closure");
    }
    ++families;
  }
  testing::Gen gen(1004);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = gen.fg_generators();
    const auto spec = make_finite(g);
    const Rat step = canonicalize(g).scale;
    const auto r = gp_density(spec);
    o.require(r.kind == GpDensityKind::kNowhereDenseFG && r.step == step, "FG step differs from scale");
    const auto c = root_closure(spec);
    o.require(c.generators(2) == std::vector<Rat>{step}, "FG closure is not scale*N0");
    for (std::int64_t k = 0; k < 30; ++k) {
      o.require(c.contains(step * Rat(k)), "multiple of scale missing");
      o.require(!c.contains(step * Rat(k) + step / Rat(2)), "closure finer than scale");
    }
  }
  o.detail << families << " non-FG families reach below 1e-6; 50 FG closures equal scale*N0";
}

void c5_density_classifier(Outcome& o) {
  const auto unit = parse_spec(R"({"variant":"unit_fraction_powers","base":2})");
  const auto v = classify_density(unit);
  o.require(v.cls == DensityClass::kDense, "unit fractions not Dense");
  const auto t0 = std::chrono::steady_clock::now();
  const Rat eps{BigInt(1), BigInt(1000)};
  const auto p = probe_density(unit, R("0"), R("10"), eps, 1'000'000, 14);
  const double secs = seconds_since(t0);
  o.require(p.result == ProbeOutcome::kEpsDense, "unit fractions probe not EpsDense");
  o.require(secs < 5.0, "probe slower than 5 s");
  if (p.result == ProbeOutcome::kEpsDense) g_windows.push_back({"UnitFractionPowers(2)", unit, R("0"), R("10"), eps, 14});
  o.detail << "unit fractions Dense, probe EpsDense in " << secs << " s; ";

  testing::Gen gen(1005);
  for (int trial = 0; trial < 30; ++trial) {
    const auto spec = make_finite(gen.fg_generators());
    const auto c = classify_density(spec);
    o.require(c.cls == DensityClass::kNowhereDense && c.lattice_step, "FG not NowhereDense");
    if (!c.lattice_step) continue;
    const Rat lo = gen.rat(5, 3);
    const Rat hi = lo + *c.lattice_step * Rat(3);
    const auto r = probe_density(spec, lo, hi, *c.lattice_step / Rat(2), 100000);
    o.require(r.result == ProbeOutcome::kGapWitness, "FG probe lacks a gap witness");
    const auto e = enumerate(spec, hi, kAllGenerators);
    for (const Rat& x : e.elements) {
      o.require(!(r.gap_lo < x && x < r.gap_hi), "gap witness contains an element");
    }
  }
  o.detail << "30 FG gap witnesses exact; ";

  const std::vector<std::pair<MonoidSpec, std::optional<std::size_t>>> catalog = {
      {increasing(IncreasingForm::kAffine, "2", "3"), std::nullopt},
      {increasing(IncreasingForm::kAffine, "1/2", "1/3"), std::nullopt},
      {increasing(IncreasingForm::kGeometric, "3/2", nullptr), std::nullopt},
      {increasing(IncreasingForm::kHarmonic, "2", "1/2", {R("3/2"), R("5/3"), R("7/4")}), 32},
      {increasing(IncreasingForm::kPrimeReciprocal, "3", "1"), 32},
      {increasing(IncreasingForm::kHarmonic, "5/2", "1"), 32}};
  int truncated = 0;
  for (const auto& [spec, depth] : catalog) {
    const auto c = classify_density(spec);
    o.require(c.cls == DensityClass::kNowhereDense, "increasing entry not NowhereDense");
    const auto iso = right_isolation(spec, R("3"), 1'000'000, depth);
    o.require(!iso.entries.empty(), "no isolation entries");
    for (const auto& e : iso.entries) o.require(R("0") < e.radius, "nonpositive radius");
    if (iso.truncated) ++truncated;
  }
  o.detail << catalog.size() << " increasing entries NowhereDense with positive radii to T=3 (" << truncated
           << " bounded ones at generator depth 32)";
}

void c6_dense_atoms(Outcome& o) {
  const auto d = build_dense_atoms(200, SeedSequence::kCalkinWilf);
  for (const auto& e : d.entries) {
    o.require(e.numerator % e.prime != 0, "p_k divides m_k at k=" + std::to_string(e.k));
    o.require(e.error < Rat{BigInt(1), BigInt(static_cast<long>(e.k))}, "error >= 1/k at k=" + std::to_string(e.k));
  }
  o.detail << "invariants hold for 200 entries; ";
  auto probe_atoms = [](const DenseAtomsOutput& out) {
    std::vector<Rat> pts;
    for (const auto& e : out.entries) {
      if (e.atom <= R("5")) pts.push_back(e.atom);
    }
    std::sort(pts.begin(), pts.end());
    return probe_points(pts, R("0"), R("5"), R("1/20"), true);
  };
  const auto r = probe_atoms(d);
  o.require(r.result == ProbeOutcome::kEpsDense, "atom set not 1/20-dense on [0,5]");
  o.detail << "calkin_wilf atoms: " << probe_outcome_name(r.result) << ", max gap (" << r.gap_lo.str() << ", "
           << r.gap_hi.str() << ") length " << (r.gap_hi - r.gap_lo).str();
  const auto dy = probe_atoms(build_dense_atoms(200, SeedSequence::kDyadic));
  o.detail << "; dyadic atoms: " << probe_outcome_name(dy.result) << ", max gap length "
           << (dy.gap_hi - dy.gap_lo).str();
}

void c7_cantor(Outcome& o) {
  const auto c = build_cantor_shift(6);
  const Rat mesh{BigInt(1), BigInt(729)};
  std::set<Rat> sums;
  for (const Rat& a : c.generators) {
    for (const Rat& b : c.generators) sums.insert(a + b);
  }
  const std::vector<Rat> pts(sums.begin(), sums.end());
  const auto r = probe_points(pts, R("2"), R("4"), mesh, true);
  o.require(r.result == ProbeOutcome::kEpsDense, "two-generator sums not 3^-6-dense");
  o.require(r.gap_hi - r.gap_lo == mesh, "max gap is not exactly 3^-6");
  o.detail << "sums max gap " << (r.gap_hi - r.gap_lo).str() << "; ";

  const auto m = probe_density(c.spec, R("2"), R("4"), mesh, 1'000'000);
  o.require(m.result == ProbeOutcome::kEpsDense, "monoid not 3^-6-dense on [2,4]");
  if (m.result == ProbeOutcome::kEpsDense) g_windows.push_back({"Cantor(6)", c.spec, R("2"), R("4"), mesh, std::nullopt});

  const auto a = atoms(c.spec, 1000);
  std::vector<Rat> atom_set = a.atoms_shown;
  std::sort(atom_set.begin(), atom_set.end());
  const auto gap = probe_points(atom_set, R("1"), R("2"), mesh, true);
  o.require(gap.gap_lo == R("4/3") && gap.gap_hi == R("5/3"), "atom set largest gap is not (4/3, 5/3)");
  for (const Rat& x : atom_set) o.require(!(R("4/3") < x && x < R("5/3")), "atom inside the middle third");
  o.detail << atom_set.size() << " atoms, largest gap (" << gap.gap_lo.str() << ", " << gap.gap_hi.str() << ")";
}

void c8_prime_shift(Outcome& o) {
  const auto spec = parse_spec(R"({"variant":"prime_reciprocal_shift","max_prime":100})");
  const auto gens = generator_stream(spec, 1000);
  const auto a = atoms(spec, 1000);
  std::vector<Rat> fast = a.atoms_shown;
  std::vector<Rat> all = gens;
  std::sort(fast.begin(), fast.end());
  std::sort(all.begin(), all.end());
  o.require(fast == all, "atoms differ from the generating set");
  const auto e = enumerate(spec, R("3"), kAllGenerators);
  auto naive = naive_atoms(e);
  o.require(naive == all, "brute-force irreducibles differ from the generating set");
  o.detail << all.size() << " atoms = generators (brute force agrees); radius of 1:";

  Rat previous = R("2");
  for (std::int64_t P : {10, 30, 100, 200}) {
    const auto s = parse_spec(R"({"variant":"prime_reciprocal_shift","max_prime":)" + std::to_string(P) + "}");
    const auto iso = right_isolation(s, R("2"), 1'000'000);
    Rat radius = R("0");
    for (const auto& entry : iso.entries) {
      if (entry.element == R("1")) radius = entry.radius;
    }
    o.require(R("0") < radius && radius < previous, "radius of 1 not shrinking");
    if (P == 100) o.require(radius <= Rat{BigInt(1), BigInt(97)}, "radius at P=100 above 1/97");
    previous = radius;
    o.detail << " P=" << P << ":" << radius.str();
  }
  const auto cond = conductor(parse_spec(R"({"variant":"prime_reciprocal_shift","max_prime":"all"})"));
  o.require(cond.kind == ConductorKind::kEmpty && cond.rule.rfind("R4", 0) == 0, "all-primes conductor not Empty/R4");
  o.detail << "; all-primes conductor " << conductor_name(cond.kind);
}

void c9_factorizations(Outcome& o) {
  const auto ls = length_set(make_finite({R("2"), R("3")}), R("12"), 1'000'000);
  o.require(ls.complete && ls.lengths == std::set<std::int64_t>{4, 5, 6}, "L(12) over <2,3> is not {4,5,6}");
  testing::Gen gen(1009);
  std::int64_t compared = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = gen.fg_generators(9, 4);
    const auto spec = make_finite(g);
    const auto c = canonicalize(g);
    const auto e = enumerate(spec, c.scale * Rat(60), kAllGenerators);
    for (std::int64_t i = 0; i <= 60; ++i) {
      const Rat x = c.scale * Rat(i);
      const auto fast = factorizations(spec, x, 10'000'000);
      o.require(fast.complete, "factorization search incomplete");
      auto sorted = fast.items;
      std::sort(sorted.begin(), sorted.end());
      o.require(sorted == naive_factorizations(e, c.atoms(), x), "Z(" + x.str() + ") differs from oracle");
      for (const auto& z : fast.items) o.require(z.value() == x, "factorization does not re-evaluate");
      compared += static_cast<std::int64_t>(fast.items.size());
    }
  }
  o.detail << "L(12)={4,5,6}; " << compared << " factorizations match the oracle on 50 monoids";
}

void c10_window_sweep(Outcome& o) {
  o.require(!g_windows.empty(), "no EpsDense windows recorded");
  for (const auto& w : g_windows) {
    const auto reports = eventual_window_check(w.spec, w.r, w.s, 3, w.eps, 5'000'000, w.depth);
    for (const auto& r : reports) {
      o.require(r.result == ProbeOutcome::kEpsDense,
                w.label + " window (" + r.lo.str() + ", " + r.hi.str() + ") not EpsDense");
    }
    o.detail << w.label << " (" << w.r.str() << "," << w.s.str() << ") ok for n<=3; ";
  }
}

}  // namespace
}  // namespace puiseux

int main() {
  using puiseux::Outcome;
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"numerical-monoid core vs DP oracle", puiseux::c1_numerical_core},
      {"conductor of <6,9,20>", puiseux::c2_conductor_6_9_20},
      {"root closure soundness", puiseux::c3_root_closure},
      {"difference-group density", puiseux::c4_gp_density},
      {"density classifier", puiseux::c5_density_classifier},
      {"dense-atoms construction, count 200", puiseux::c6_dense_atoms},
      {"Cantor shift at depth 6", puiseux::c7_cantor},
      {"prime reciprocal shift, P = 100", puiseux::c8_prime_shift},
      {"factorizations vs oracle", puiseux::c9_factorizations},
      {"eventual window sweep", puiseux::c10_window_sweep},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [PRIMARY] " << (i + 1) << ": " << criteria[i].first << " | "
              << o.detail.str() << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
