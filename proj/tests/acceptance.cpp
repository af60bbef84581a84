#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "chevkit/algebras.hpp"
#include "chevkit/apartments.hpp"
#include "chevkit/corpus.hpp"
#include "chevkit/group_text.hpp"
#include "chevkit/opposition.hpp"
#include "chevkit/polar.hpp"

using namespace chevkit;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
  std::vector<std::string> notes;
};

struct Criterion {
  int id;
  std::string title;
  double limit;  // seconds
  std::function<Outcome()> run;
};

// criteria reported red with an analysis in the README
const std::set<int> kKnownRed = {6, 7};

const uint64_t kSeed = kDefaultSeed;

int jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

Outcome from_records(const std::vector<CheckRecord>& recs) {
  Outcome o{true, "", {}};
  for (auto& r : recs) {
    o.pass = o.pass && r.verdict == Verdict::Pass;
    o.detail += (o.detail.empty() ? "" : "; ") + r.id + " " + verdict_name(r.verdict);
    for (auto& n : r.notes) o.notes.push_back(r.id + ": " + n);
  }
  return o;
}

Outcome root_data() {
  const RootSystem& e7 = RootSystem::get("E7");
  bool ok = e7.num_positive() == 63 && WeylElt::longest(e7).length() == 63;
  Outcome o = from_records({check_psi_systems(), check_reflection_products(), check_lengths()});
  o.pass = o.pass && ok;
  o.detail = "63 positive roots, l(w0)=63; " + o.detail;
  return o;
}

Outcome spectra() {
  Outcome o{true, "", {}};
  auto run = [&](const std::string& type, uint64_t q, const std::string& theta, bool want_domestic,
                 uint64_t want_total, std::optional<std::set<int>> want_nodes, double limit) {
    auto t0 = std::chrono::steady_clock::now();
    GroupPtr G = ChevGroup::create(RootSystem::get(type), Field::prime(q));
    SpectrumReport r = spectrum_bruteforce(parse_element(G, theta), jobs(), 100'000'000);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = r.domestic == want_domestic && r.total == want_total && s < limit;
    if (want_nodes) ok = ok && r.opposed_nodes == *want_nodes;
    o.pass = o.pass && ok;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s(F%llu) %s: %llu chambers, %s, max length %d (%.1fs)", type.c_str(),
                  (unsigned long long)q, theta.c_str(), (unsigned long long)r.total,
                  r.domestic ? "domestic" : "not domestic", r.max_length, s);
    o.detail += (o.detail.empty() ? "" : "; ") + std::string(buf);
  };
  run("A3", 2, "x[(111)](1)", true, 315, std::set<int>{1, 3}, 10);
  run("A3", 3, "x[(111)](1) h[(111)](-1)", false, 2080, std::nullopt, 10);
  run("D4", 3, "x[(1211)](1) h[(1211)](-1)", false, 2329600, std::nullopt, 1800);
  return o;
}

Outcome kangaroos() {
  Outcome o{true, "", {}};
  HyperbolicSpace d32 = HyperbolicSpace::build(3, 2);
  auto group = isometry_group(d32);
  size_t agree = 0, diligent = 0, ovoid = 0;
  for (auto& c : group) {
    auto perm = point_permutation(d32, c);
    agree += kangaroo_equivalences(d32, perm).agree();
    if (is_kangaroo(d32, perm).diligent) {
      ++diligent;
      ovoid += fixed_structure(d32, c).ovoid;
    }
  }
  o.pass = group.size() == 40320 && agree == group.size() && ovoid == diligent;
  o.detail = "D3(2): " + std::to_string(agree) + "/" + std::to_string(group.size()) + " agree, " +
             std::to_string(diligent) + " diligent with fixed ovoid";

  HyperbolicSpace d33 = HyperbolicSpace::build(3, 3);
  std::mt19937_64 rng(kSeed);
  size_t agree3 = 0, n3 = 100000, skel = 0, dil3 = 0;
  for (size_t k = 0; k < n3; ++k) {
    Collineation c = random_isometry(d33, rng);
    auto perm = point_permutation(d33, c);
    agree3 += kangaroo_equivalences(d33, perm).agree();
    if (is_kangaroo(d33, perm).diligent) {
      ++dil3;
      FixedStructure fs = fixed_structure(d33, c);
      skel += fs.ovoid && fs.skeleton == 1;
    }
  }
  o.pass = o.pass && agree3 == n3 && skel == dil3;
  o.detail += "; D3(3): " + std::to_string(agree3) + "/" + std::to_string(n3) + " agree, " + std::to_string(dil3) +
              " diligent with skeleton";

  HyperbolicSpace d23 = HyperbolicSpace::build(2, 3);
  Collineation lin = reflection(d23, PVec{0, 1, 1, 0});
  FixedStructure f1 = fixed_structure(d23, lin);
  bool ok1 = is_kangaroo(d23, point_permutation(d23, lin)).diligent && f1.ovoid && f1.linear &&
             f1.span_dim == 2 && f1.span_cap_quadric && f1.fixed.size() == 4;
  HyperbolicSpace d24 = HyperbolicSpace::build(2, 4);
  Collineation baer = baer_involution_d2q4();
  FixedStructure f2 = fixed_structure(d24, baer);
  bool ok2 = is_kangaroo(d24, point_permutation(d24, baer)).diligent && f2.ovoid && !f2.linear && f2.involution &&
             f2.span_dim == 3 && f2.fixed.size() == 5;
  o.pass = o.pass && ok1 && ok2;
  o.detail += std::string("; D2(3) linear: ") + (ok1 ? "ovoid of 4 spanning a plane" : "mismatch") +
              "; D2(4) Baer: " + (ok2 ? "involution, ovoid of 5 spanning PG(3)" : "mismatch");
  return o;
}

Outcome algebra_identities() {
  Outcome o{true, "", {}};
  std::mt19937_64 rng(kSeed);
  Field F = Field::prime(5);
  CompAlg O = CompAlg::zorn(F);
  int e6 = 0, cubic = 0;
  for (int k = 0; k < 1000; ++k) e6 += e6_equations(O, veronese_affine(O, O.random(rng), O.random(rng)).c);
  for (int k = 0; k < 1000; ++k) {
    auto v = veronese_affine(O, O.random(rng), O.random(rng)).c;
    auto w = veronese_affine(O, O.random(rng), O.random(rng)).c;
    FieldElem s = F.random(rng), t = F.random(rng);
    std::vector<FieldElem> line(v.size());
    for (size_t i = 0; i < v.size(); ++i) line[i] = s * v[i] + t * w[i];
    cubic += cubic_C(O, line).is_zero();
  }

  Field K = Field::parse("fun f2 cap 32: l1,l2");
  FieldElem l1 = K.var(0), l2 = K.var(1);
  CompAlg Z = CompAlg::zorn(K);
  CompAlg H = CompAlg::inseparable(l1, l2);
  auto pick = [&] {
    return (rng() & 1 ? K.one() : K.zero()) + (rng() & 1 ? l1 : K.zero()) + (rng() & 1 ? l2 : K.zero());
  };
  int law = 0, aut = 0, charac = 0;
  for (int k = 0; k < 100; ++k) {
    AlgElem u = H.inverse({K.one(), pick(), pick(), pick()});
    AlgElem v = H.inverse({K.one(), pick(), pick(), pick()});
    AlgElem s = H.add(u, v);
    law += aut_A(l1, l2, u[0], u[1], u[2], u[3]) * aut_A(l1, l2, v[0], v[1], v[2], v[3]) ==
           aut_A(l1, l2, s[0], s[1], s[2], s[3]);
    aut += is_admissible(l1, l2, u[0], u[1], u[2], u[3]) && is_automorphism(Z, aut_A(l1, l2, u[0], u[1], u[2], u[3]));
    // a nonzero tuple is admissible exactly when its inverse has first coordinate 1
    AlgElem x = {pick(), pick(), pick(), pick()};
    if (H.eq(x, H.zero())) x[0] = K.one();
    charac += is_admissible(l1, l2, x[0], x[1], x[2], x[3]) == H.inverse(x)[0].is_one();
  }
  o.pass = e6 == 1000 && cubic == 1000 && law == 100 && aut == 100 && charac == 100;
  o.detail = "E6 equations " + std::to_string(e6) + "/1000, cubic on lines " + std::to_string(cubic) +
             "/1000, group law " + std::to_string(law) + "/100, admissible automorphisms " + std::to_string(aut) +
             "/100, admissible-set characterization " + std::to_string(charac) + "/100";
  return o;
}

Outcome thin_models() {
  ThinModel g = build_gosset();
  bool deg = true;
  for (int v = 0; v < g.size(); ++v) deg = deg && g.degree(v) == 27;
  int pairs = 0;
  for (auto& l : g.symp_labels) pairs += l[0] == '(';
  GossetCensus c = gosset_census(g);
  bool e6ok = true;
  for (auto& ch : e6_fact_checks(build_e6_apartment())) e6ok = e6ok && ch.holds;
  Outcome o;
  o.pass = g.size() == 56 && deg && g.symps.size() == 126 && pairs == 56 && c.unclassified == 0 &&
           c.opposite_matching && c.symp_symp["opposite"] == 63 && e6ok;
  o.detail = "56 vertices, degree 27, 126 symps (" + std::to_string(pairs) + "+" +
             std::to_string(g.symps.size() - pairs) + "), unclassified pairs " + std::to_string(c.unclassified) +
             ", opposite symps matched " + (c.opposite_matching ? "yes" : "no") + ", E6 facts " +
             (e6ok ? "hold" : "fail");
  return o;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "Root and Weyl data", 1, root_data},
      {2, "Magic words", 1, [] { return from_records({check_magic_words()}); }},
      {3, "D4 characteristic polynomial", 5, [] { return from_records({check_charpoly(kSeed, 100, 20)}); }},
      {4, "Classification replay", 30, [] { return from_records({check_classification(kSeed, 50)}); }},
      {5, "Bruhat-cell witnesses", 60,
       [] { return from_records({check_e73_cells(kSeed, 1), check_e74_forcing(kSeed, 1)}); }},
      {6, "E7;3 fixed-chamber identities", 30, [] { return from_records({check_e73_chambers(kSeed, 15)}); }},
      {7, "Orbit counts", 300, [] { return from_records({check_orbit_counts(4)}); }},
      {8, "Brute-force domesticity", 1800, spectra},
      {9, "Kangaroo equivalences", 600, kangaroos},
      {10, "Algebra identities", 120, algebra_identities},
      {11, "Thin models", 10, thin_models},
  };
  std::cout << "seed " << kSeed << ", " << jobs() << " worker thread(s)\n";
  int unexpected = 0;
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what(), {}};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = o.pass && s < c.limit;
    if (o.pass && !pass) o.detail += "; over the time limit";
    char head[160];
    std::snprintf(head, sizeof head, "%s %2d  %-32s %8.2fs (limit %.0fs)", pass ? "PASS" : "FAIL", c.id,
                  c.title.c_str(), s, c.limit);
    std::cout << head << "  " << o.detail << "\n";
    for (auto& n : o.notes) std::cout << "        " << n << "\n";
    if (!pass && !kKnownRed.count(c.id)) ++unexpected;
    if (pass && kKnownRed.count(c.id)) std::cout << "        known-red criterion passed; update the list\n";
    std::cout.flush();
  }
  std::cout << (unexpected ? "unexpected failures: " + std::to_string(unexpected) : "no unexpected failures")
            << " (known red: 6, 7)\n";
  return unexpected ? 1 : 0;
}
