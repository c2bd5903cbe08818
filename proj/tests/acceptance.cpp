// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//   acceptance [--seed N]

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "hallwheels/cli.hpp"
#include "support.hpp"

using namespace hallwheels;
using namespace testing_support;

namespace {

// Tolerances: every criterion is exact; these are the sample sizes.
constexpr int kRegularMonomials = 25;
constexpr int kChainsPerRep = 10;
constexpr unsigned kAssocDegree = 4;
constexpr int kDegreeSamples = 50;
constexpr int kMembershipSamples = 240;
constexpr std::size_t kMaxSupport = 30;
constexpr int kOracleBox = 2;
constexpr int kClosureCases = 100;

unsigned long long g_seed = 0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  Outcome done(const std::string& summary) const {
    if (failed_ == 0) return {true, summary};
    std::string s = std::to_string(failed_) + " failure(s): ";
    for (std::size_t i = 0; i < failures_.size(); ++i) s += (i ? "; " : "") + failures_[i];
    return {false, s};
  }

 private:
  std::vector<std::string> failures_;
  std::size_t failed_ = 0;
};

LaurentPoly z(std::size_t i, std::size_t r) { return LaurentPoly::variable(i, r, 0); }
LinearizedRep plain(Family f, int n, bool adjoint) {
  RootDatum d = build_root_datum(f, n);
  return adjoint ? adjoint_rep(d, {{}, {}, {}}) : standard_rep(d, {{}, {}, {}});
}
LinearizedRep gfold(Family f, int n, int g) { return g_fold_character_stack(build_root_datum(f, n), g); }

std::vector<std::vector<Exponent>> sorted_roots(const RootDatum& d, const std::vector<std::size_t>& idx) {
  std::vector<std::vector<Exponent>> out;
  for (auto i : idx) out.emplace_back(d.roots[i].t_part().begin(), d.roots[i].t_part().end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Exponent> eps_diff(std::size_t n, std::size_t i, std::size_t j) {
  std::vector<Exponent> v(n, 0);
  v[i] = 1;
  v[j] = -1;
  return v;
}

Outcome ac1() {
  Check c;
  LinearizedRep rep = plain(Family::GL, 4, true);
  const RootDatum& d = rep.datum;
  Cocharacter l({1, 2, 2, 3}), n({2, 2, 2, 1});
  auto sl = dynamical_split(d, l);
  auto sn = dynamical_split(d, n);
  // displayed Levi blocks: diag(1, 2, 1) and diag(3, 1)
  std::vector<std::vector<Exponent>> want_l{eps_diff(4, 1, 2), eps_diff(4, 2, 1)};
  std::sort(want_l.begin(), want_l.end());
  std::vector<std::vector<Exponent>> want_n;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) want_n.push_back(eps_diff(4, i, j));
  std::sort(want_n.begin(), want_n.end());
  c.require(sorted_roots(d, sl.levi_roots) == want_l, "Levi roots of lambda");
  c.require(sorted_roots(d, sn.levi_roots) == want_n, "Levi roots of nu");
  c.require(levi_block_pattern(d, l) == std::vector<std::size_t>{1, 2, 1}, "block pattern of lambda");
  c.require(levi_block_pattern(d, n) == std::vector<std::size_t>{3, 1}, "block pattern of nu");
  c.require(preceq(rep, l, n), "lambda <= nu");
  c.require(!preceq(rep, n, l), "nu not <= lambda");
  return c.done("Levi sizes " + std::to_string(sl.levi_roots.size()) + ", " + std::to_string(sn.levi_roots.size()) +
                "; patterns (1,2,1), (3,1); lambda <= nu");
}

// sum_i f(x_i; others) x1 x2 x3 / prod_{j != i}(x_i - x_j)
Rational gl3_shuffle_oracle(const LaurentPoly& f, const std::vector<Rational>& x) {
  Rational total = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<Rational> y{x[i]};
    Rational den = 1;
    for (std::size_t j = 0; j < 3; ++j)
      if (j != i) {
        y.push_back(x[j]);
        den *= x[i] - x[j];
      }
    total += f.evaluate(y) * x[0] * x[1] * x[2] / den;
  }
  return total;
}

Outcome ac2() {
  Check c;
  std::mt19937_64 rng(g_seed + 2);
  LinearizedRep rep = plain(Family::GL, 3, false);
  Cocharacter l({2, 1, 1}), n = Cocharacter::zero(3);
  auto d = induction_datum(rep, l, n);
  LaurentPoly num = z(0, 3) * z(1, 3) * z(2, 3);
  LaurentPoly den = (z(0, 3) - z(1, 3)) * (z(0, 3) - z(2, 3));
  c.require(d.kernel == RationalFunction(num, den), "kernel formula");
  LaurentPoly one = LaurentPoly::constant(1, 3, 0);
  LaurentPoly i1 = induct(rep, d, one), i2 = induct(rep, d, z(0, 3).pow(2));
  c.require(i1.is_zero(), "induct(1) = 0");
  c.require(i2 == num, "induct(z1^2) = z1 z2 z3");
  auto stab = weyl_subgroup(rep.datum, l);
  std::vector<LaurentPoly> inputs{one, z(0, 3).pow(2)};
  for (int k = 0; k < 20; ++k) inputs.push_back(symmetrize(stab, random_poly(rng, 3, 0, 3, 0, 3), Realization::additive));
  int points = 0;
  for (const auto& f : inputs) {
    LaurentPoly out = induct(rep, d, f);
    for (int p = 0; p < 5; ++p) {
      auto x = random_point(rng, 3);
      if (x[0] == x[1] || x[0] == x[2] || x[1] == x[2]) continue;
      ++points;
      c.require(out.evaluate(x) == gl3_shuffle_oracle(f, x), "oracle evaluation of " + f.str());
    }
  }
  return c.done("kernel exact; induct(1) = 0, induct(z1^2) = z1*z2*z3; " + std::to_string(inputs.size()) +
                " inputs agree with the rational oracle at " + std::to_string(points) + " points");
}

Outcome ac3() {
  Check c;
  std::mt19937_64 rng(g_seed + 3);
  int checked = 0;
  for (int n = 2; n <= 3; ++n) {
    const std::size_t r = static_cast<std::size_t>(n);
    LinearizedRep rep = plain(Family::GL, n, true);
    std::vector<Exponent> reg(r);
    for (std::size_t i = 0; i < r; ++i) reg[i] = static_cast<Exponent>(r - i);
    auto d = induction_datum(rep, Cocharacter(reg), Cocharacter::zero(r));
    c.require(d.kernel == RationalFunction(LaurentPoly::constant(1, r, 0)), "kernel is 1 for gl" + std::to_string(n));
    for (int k = 0; k < kRegularMonomials; ++k) {
      ExponentVector e(random_vector(rng, r, 0, 4), {});
      LaurentPoly out = induct(rep, d, LaurentPoly::monomial(e));
      c.require(to_map(out) == oracle::permutation_orbit_sum(to_vec(e), 1), "orbit sum of " + e.str());
      ++checked;
    }
  }
  return c.done("kernel = 1 for gl2, gl3; " + std::to_string(checked) + " monomials give their Weyl orbit sums");
}

Cocharacter random_cochar(std::mt19937_64& rng, std::size_t r) { return Cocharacter(random_vector(rng, r, -2, 2)); }

Cocharacter combine(const std::vector<std::pair<Exponent, Cocharacter>>& parts) {
  Cocharacter out = Cocharacter::zero(parts.front().second.rank());
  for (const auto& [k, v] : parts)
    for (std::size_t i = 0; i < out.rank(); ++i) out.coords[i] += k * v.coords[i];
  return out;
}

Outcome ac4() {
  Check c;
  std::mt19937_64 rng(g_seed + 4);
  constexpr Exponent N = 10;
  int chains = 0;
  std::size_t polys = 0;
  for (int n = 2; n <= 4; ++n)
    for (bool adjoint : {false, true}) {
      LinearizedRep rep = plain(Family::GL, n, adjoint);
      const std::size_t r = rep.t_rank();
      for (int k = 0; k < kChainsPerRep; ++k) {
        Cocharacter nu, mu, la;
        for (int attempt = 0; attempt < 100; ++attempt) {
          nu = random_cochar(rng, r);
          Cocharacter mp = random_cochar(rng, r), lp = random_cochar(rng, r);
          mu = combine({{N, nu}, {1, mp}});
          la = combine({{N * N, nu}, {N, mp}, {1, lp}});
          if (preceq(rep, la, mu) && preceq(rep, mu, nu)) break;
        }
        auto basis = orbit_sum_basis(weyl_subgroup(rep.datum, la), r, rep.ts_rank(), kAssocDegree);
        auto bad = associativity_mismatches(rep, la, mu, nu, basis);
        c.require(bad.empty(), rep.name + " chain " + std::to_string(k));
        ++chains;
        polys += basis.size();
      }
    }
  return c.done(std::to_string(chains) + " chains over gl2..gl4 standard/adjoint agree on " + std::to_string(polys) +
                " orbit sums of degree <= 4");
}

Outcome ac5() {
  Check c;
  std::mt19937_64 rng(g_seed + 5);
  std::vector<LinearizedRep> reps{plain(Family::GL, 2, false), plain(Family::GL, 3, false), plain(Family::GL, 4, false),
                                  plain(Family::GL, 3, true),  plain(Family::Sp, 4, true),  gfold(Family::GL, 3, 1),
                                  gfold(Family::Sp, 4, 1),     sym_power_sl2(3)};
  int done = 0;
  while (done < kDegreeSamples) {
    const auto& rep = reps[static_cast<std::size_t>(uniform(rng, 0, static_cast<Exponent>(reps.size()) - 1))];
    const std::size_t r = rep.t_rank();
    Cocharacter nu = random_cochar(rng, r);
    Cocharacter la = combine({{10, nu}, {1, random_cochar(rng, r)}});
    if (!preceq(rep, la, nu)) continue;
    auto d = induction_datum(rep, la, nu);
    Exponent pi = 0, q = 0;
    for (const auto& b : rep.v_basis) pi += pair(nu, b.character) == 0 && pair(la, b.character) > 0;
    for (const auto& a : rep.datum.roots) q += pair(nu, a) == 0 && pair(la, a) > 0;
    c.require(d.dim_pi == pi && d.dim_q == q, "dimension counts for " + rep.name);
    c.require(signed_degree(d.kernel) == -2 * pi + 2 * q, "signed degree for " + rep.name);
    ++done;
  }
  return c.done(std::to_string(done) + " random (rep, lambda <= nu) satisfy deg = -2 dim_pi + 2 dim_q");
}

Outcome ac6() {
  Check c;
  LinearizedRep rep = gfold(Family::Sp, 4, 1);
  auto ideals = wheel_ideals(rep);
  auto fam = reference_family("sp4");
  std::size_t found = 0;
  for (const auto& id : fam.ideals) {
    LatticeQuotient printed({-fam.to_rep_lattice(id.m1), -fam.to_rep_lattice(id.m2)}, rep.t_rank(), rep.ts_rank());
    bool hit = false;
    for (const auto& w : ideals) hit = hit || w.quotient.same_sublattice(printed);
    c.require(hit, id.printed);
    found += hit;
  }
  std::string golden = read_file(data_dir() + "/golden/sp4_reference.json");
  c.require(!golden.empty() && render_json(reference_family_json(fam)) == golden, "reference golden file");
  return c.done(std::to_string(found) + "/12 printed ideals among " + std::to_string(ideals.size()) +
                " enumerated; golden file byte-exact");
}

Outcome ac7() {
  Check c;
  std::size_t total = 0;
  for (int n = 3; n <= 4; ++n) {
    const std::size_t r = static_cast<std::size_t>(n);
    LinearizedRep rep = gfold(Family::GL, n, 1);
    auto ideals = wheel_ideals(rep);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) {
          if (i == j || j == k || i == k) continue;
          // chi_l = q z_i / z_j, chi_l' = q' z_j / z_k, q' = t / q
          LatticeQuotient want({ExponentVector(eps_diff(r, i, j), {1, 0}), ExponentVector(eps_diff(r, j, k), {-1, 1})},
                               r, 2);
          bool hit = false;
          for (const auto& w : ideals) hit = hit || w.quotient.same_sublattice(want);
          c.require(hit, "gl" + std::to_string(n) + " (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                             std::to_string(k + 1) + ")");
          ++total;
        }
  }
  return c.done(std::to_string(total) + " ordered triples for n = 3, 4 all present");
}

Outcome ac8() {
  Check c;
  std::size_t documented = 0;
  for (int n = 1; n <= 5; ++n) {
    LinearizedRep rep = sym_power_sl2(n);
    std::set<std::pair<std::size_t, std::size_t>> got;
    for (const auto& p : cartesian_pairs(rep)) got.insert({p.v_index, p.vstar_index});
    auto fam = reference_family("sl2_sym" + std::to_string(n));
    std::set<std::pair<std::size_t, std::size_t>> printed;
    for (const auto& id : fam.ideals) {
      Exponent k = id.params[0], l = id.params[1];
      bool allowed = (id.family == "A" && l >= 1) || (id.family == "B" && k >= 1) || (id.family == "C" && k != l);
      if (allowed) printed.insert(*id.lines);
    }
    auto brute = oracle::sl2_sym_pairs(n);
    c.require(got == brute, "pairs vs action oracle, n=" + std::to_string(n));
    c.require(got == printed, "pairs vs printed families, n=" + std::to_string(n));
    auto report = compare_with_reference(rep, wheel_ideals(rep), fam);
    c.require(report.missing.empty(), "no undocumented gaps, n=" + std::to_string(n));
    std::size_t want_doc = 0;
    for (const auto& id : fam.ideals) want_doc += id.family == "C" && id.params[0] == id.params[1];
    c.require(report.documented.size() == want_doc, "k = l reported as documented, n=" + std::to_string(n));
    for (auto idx : report.documented)
      c.require(fam.ideals[idx].family == "C" && fam.ideals[idx].params[0] == fam.ideals[idx].params[1],
                "documented entry is C with k = l");
    documented += report.documented.size();
  }
  return c.done("n = 1..5 pair sets equal; " + std::to_string(documented) + " k = l entries of family C documented");
}

struct IdealFamily {
  std::string name;
  LinearizedRep rep;
  std::vector<WheelIdeal> ideals;
};

std::vector<IdealFamily> ideal_families() {
  std::vector<IdealFamily> out;
  for (auto [name, rep] : {std::pair{std::string("gl3"), gfold(Family::GL, 3, 1)},
                           std::pair{std::string("sp4"), gfold(Family::Sp, 4, 1)},
                           std::pair{std::string("sl2_sym3"), sym_power_sl2(3)}}) {
    auto ideals = wheel_ideals(rep);
    out.push_back({name, rep, ideals});
  }
  return out;
}

const WheelIdeal& pick(std::mt19937_64& rng, const std::vector<WheelIdeal>& ideals) {
  return ideals[static_cast<std::size_t>(uniform(rng, 0, static_cast<Exponent>(ideals.size()) - 1))];
}

Outcome ac9() {
  Check c;
  std::mt19937_64 rng(g_seed + 9);
  auto fams = ideal_families();
  int total = 0, members = 0;
  for (int k = 0; k < kMembershipSamples; ++k) {
    const auto& fam = fams[static_cast<std::size_t>(k) % fams.size()];
    const WheelIdeal& id = pick(rng, fam.ideals);
    ExponentVector m1 = -id.chi_l, m2 = -id.chi_lprime;
    const std::size_t r = fam.rep.t_rank(), s = fam.rep.ts_rank();
    LaurentPoly p(r, s);
    switch (k / static_cast<int>(fams.size()) % 3) {
      case 0:
        p = random_member(rng, m1, m2, static_cast<std::size_t>(uniform(rng, 1, 12)));
        break;
      case 1:
        p = random_member(rng, m1, m2, static_cast<std::size_t>(uniform(rng, 1, 10))) +
            LaurentPoly::monomial(random_exponent(rng, r, s, -3, 3), Rational(uniform(rng, 1, 3)));
        break;
      default:
        p = random_poly(rng, r, s, static_cast<std::size_t>(uniform(rng, 1, 30)), -2, 2, 3);
        break;
    }
    if (p.size() > kMaxSupport) {
      --k;
      continue;
    }
    bool lib = membership(p, id);
    bool brute = oracle::member_linear_solve(to_map(p), to_vec(m1), to_vec(m2), kOracleBox);
    c.require(lib == brute, fam.name + " " + p.str());
    ++total;
    members += lib;
  }
  return c.done(std::to_string(total) + " polynomials (" + std::to_string(members) +
                " members) agree with the bounded linear-solve oracle");
}

Outcome ac10() {
  Check c;
  std::mt19937_64 rng(g_seed + 10);
  int cases = 0;
  for (const auto& fam : ideal_families()) {
    const std::size_t r = fam.rep.t_rank(), s = fam.rep.ts_rank();
    for (int k = 0; k < kClosureCases; ++k) {
      const WheelIdeal& id = pick(rng, fam.ideals);
      LaurentPoly a = random_member(rng, -id.chi_l, -id.chi_lprime, 3);
      LaurentPoly b = random_member(rng, -id.chi_l, -id.chi_lprime, 3);
      c.require(membership(a, id) && membership(b, id), fam.name + " generated member");
      c.require(membership(a + b, id), fam.name + " sum");
      c.require(membership(a.shifted(random_exponent(rng, r, s, -4, 4)), id), fam.name + " monomial multiple");
      c.require(membership(a * random_poly(rng, r, s, 3, -2, 2), id), fam.name + " polynomial multiple");
      ++cases;
    }
  }
  return c.done(std::to_string(cases) + " cases over gl3, sp4, sl2_sym3 closed under sums and multiples");
}

Outcome ac11() {
  Check c;
  auto check = [&](const LinearizedRep& rep, const std::string& name) {
    auto report = check_ts_assumptions(rep);
    c.require(report.f_invariant, name + " f-invariance");
    c.require(report.c1_weights_ok, name + " C*_1 weights");
    c.require(report.c2_weights_ok, name + " C*_2 weights");
  };
  check(gl2_example_rep(), "GL(2) example");
  int count = 1;
  for (int n = 1; n <= 3; ++n)
    for (int g = 1; g <= 2; ++g) {
      check(gfold(Family::GL, n, g), "g_fold(GL" + std::to_string(n) + "," + std::to_string(g) + ")");
      ++count;
    }
  return c.done(std::to_string(count) + " representations pass all three T_s bullets");
}

Outcome ac12() {
  Check c;
  c.require(verify_restriction_relation(gl2_restriction_map(), "c1^2 - 4*c2 - (xi-eta)^2"), "presentation relation");
  int count = 0;
  for (int n = 1; n <= 3; ++n)
    for (int g = 1; g <= 2; ++g) {
      c.require(c1_in_stabilizers(gfold(Family::GL, n, g)), "GL" + std::to_string(n) + " g=" + std::to_string(g));
      ++count;
    }
  c.require(c1_in_stabilizers(gfold(Family::Sp, 4, 1)), "Sp4");
  c.require(c1_in_stabilizers(gl2_example_rep()), "GL(2) example");
  count += 2;
  return c.done("relation maps to 0; C*_1 in every stabilizer for " + std::to_string(count) + " instances");
}

std::vector<std::vector<std::string>> cli_suite() {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(read_file(data_dir() + "/cli_suite.txt"));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    std::vector<std::string> args;
    for (std::string w; words >> w;) args.push_back(w);
    args[1] = problem_path(args[1]);
    out.push_back(args);
  }
  return out;
}

std::string run_suite(const char* threads) {
  setenv("HALLWHEELS_THREADS", threads, 1);
  std::string all;
  for (const auto& args : cli_suite()) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    all += "== " + args[0] + " " + std::to_string(code) + "\n" + out.str() + err.str();
  }
  unsetenv("HALLWHEELS_THREADS");
  return all;
}

Outcome ac13() {
  Check c;
  auto suite = cli_suite();
  std::string a = run_suite("1");
  std::string b = run_suite("4");
  c.require(!suite.empty(), "suite is not empty");
  c.require(a == b, "outputs differ between 1 and 4 threads");
  return c.done(std::to_string(suite.size()) + " invocations byte-identical with 1 and 4 threads (" +
                std::to_string(a.size()) + " bytes)");
}

}  // namespace

int main(int argc, char** argv) {
  g_seed = seed();
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--seed" && i + 1 < argc) {
      g_seed = std::stoull(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--seed N]\n";
      return 2;
    }
  }
  std::cout << "seed " << g_seed << "\n";
  const std::vector<std::function<Outcome()>> criteria{ac1, ac2, ac3, ac4,  ac5,  ac6, ac7,
                                                       ac8, ac9, ac10, ac11, ac12, ac13};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::cout << "AC" << i + 1 << (i + 1 < 10 ? "  " : " ") << (o.pass ? "PASS" : "FAIL") << "  [" << std::fixed
              << std::setprecision(2) << secs << " s]  " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
