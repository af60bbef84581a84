#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "chevkit/algebras.hpp"
#include "chevkit/apartments.hpp"
#include "chevkit/corpus.hpp"
#include "chevkit/d4rep.hpp"
#include "chevkit/group_text.hpp"
#include "chevkit/opposition.hpp"
#include "chevkit/polar.hpp"

using namespace chevkit;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFinding = 2, kBudget = 3, kUsage = 4 };

struct Globals {
  uint64_t seed = kDefaultSeed;
  int jobs = 1;
  bool as_json = false;
  std::string config;
  std::vector<int> twist;
  std::string field = "f5";
};

std::set<int> parse_nodes(const std::string& s) {
  std::set<int> out;
  std::string tok;
  std::stringstream ss(s);
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.insert(std::stoi(tok));
  return out;
}

std::vector<int> parse_word(const std::string& s) {
  std::vector<int> w;
  bool spaced = s.find(' ') != std::string::npos || s.find(',') != std::string::npos;
  if (spaced) {
    std::string tok;
    std::stringstream ss(s);
    while (ss >> tok) {
      std::stringstream part(tok);
      std::string t;
      while (std::getline(part, t, ','))
        if (!t.empty()) w.push_back(std::stoi(t));
    }
  } else {
    for (char c : s)
      if (isdigit((unsigned char)c)) w.push_back(c - '0');
  }
  return w;
}

std::string nodes_text(const std::set<int>& s) {
  std::string out = "{";
  for (int i : s) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

uint64_t budget_from_env(uint64_t fallback) {
  if (const char* b = std::getenv("CHEVKIT_BUDGET")) return std::stoull(b);
  return fallback;
}

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

GroupPtr make_group(const Globals& g, const std::string& type, const std::string& field) {
  return ChevGroup::create(RootSystem::get(type), Field::parse(field), g.twist);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chevkit: exact computations in split Chevalley groups and their buildings"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads")->capture_default_str();
  app.add_flag("--json", g.as_json, "structured output");
  app.add_option("--config", g.config, "JSON file with \"twist\" and \"field\"");

  std::string type = "E7", field, word, act, elt, by, psi, diagram, params;
  int q = 2, n = 3, samples = 100;
  bool gosset = false, e6 = false, count_symps = false, census = false, edges = false, exhaustive = false;
  bool random_params = false;
  std::string check = "e6", suite = "e7-chamber";

  auto* rootsys = app.add_subcommand("rootsys", "root data, Psi_J and opposition diagrams");
  rootsys->add_option("--type", type)->capture_default_str();
  rootsys->add_option("--psi", psi, "node set J, e.g. 1,6,7");
  rootsys->add_option("--diagram", diagram, "diagram name, e.g. E7;3");

  auto* weyl = app.add_subcommand("weyl", "Weyl group words");
  weyl->add_option("--type", type)->capture_default_str();
  weyl->add_option("--word", word, "word in simple reflections")->required();
  weyl->add_option("--act", act, "comma separated roots to map by the inverse, e.g. (2234321)");

  auto* bruhat = app.add_subcommand("bruhat", "Bruhat normal form of an element");
  bruhat->add_option("--type", type)->capture_default_str();
  bruhat->add_option("--field", field);
  bruhat->add_option("--elt", elt)->required();

  auto* conj = app.add_subcommand("conjugate", "g^-1 theta g and its cell");
  conj->add_option("--type", type)->capture_default_str();
  conj->add_option("--field", field);
  conj->add_option("--theta", elt)->required();
  conj->add_option("--by", by)->required();

  auto* d4 = app.add_subcommand("d4", "8x8 model of the E7;4 element: char poly and normal form");
  d4->add_option("--field", field);
  d4->add_option("--params", params, "a,b,c,t1,t2,t3,t4");
  d4->add_flag("--random", random_params);

  auto* polar = app.add_subcommand("polar", "kangaroo conditions on a hyperbolic polar space");
  polar->add_option("--n", n)->capture_default_str();
  polar->add_option("--q", q)->capture_default_str();
  polar->add_flag("--exhaustive", exhaustive, "scan the whole isometry group");
  polar->add_option("--samples", samples)->capture_default_str();

  auto* algebra = app.add_subcommand("algebra", "composition algebra identities");
  algebra->add_option("--check", check, "e6 | cubic | aut")->capture_default_str();
  algebra->add_option("--samples", samples)->capture_default_str();

  auto* thin = app.add_subcommand("thin", "thin models of the E7,7 and E6,1 geometries");
  thin->add_flag("--gosset", gosset);
  thin->add_flag("--e6", e6);
  thin->add_flag("--count-symps", count_symps);
  thin->add_flag("--census", census);
  thin->add_flag("--edges", edges);

  std::string theta_text;
  auto* spectrum = app.add_subcommand("spectrum", "brute-force displacement spectrum");
  spectrum->add_option("--type", type)->required();
  spectrum->add_option("--q", q)->required();
  spectrum->add_option("--theta", theta_text)->required();

  auto* verify = app.add_subcommand("verify", "run the verification corpus");
  verify->add_option("--suite", suite)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (!g.config.empty()) {
      std::ifstream in(g.config);
      if (!in) throw std::invalid_argument("cannot read " + g.config);
      json cfg = json::parse(in);
      if (cfg.contains("twist")) g.twist = cfg["twist"].get<std::vector<int>>();
      if (cfg.contains("field")) g.field = cfg["field"].get<std::string>();
    }
    if (field.empty()) field = g.field;
    if (!g.as_json) std::cerr << "seed " << g.seed << "\n";

    if (*rootsys) {
      const RootSystem& rs = RootSystem::get(type);
      json j = {{"type", rs.name()},
                {"rank", rs.rank()},
                {"positive_roots", rs.num_positive()},
                {"l(w0)", WeylElt::longest(rs).length()},
                {"highest", rs.format(rs.highest())}};
      std::ostringstream os;
      os << rs.name() << ": " << rs.num_positive() << " positive roots, l(w0) = " << j["l(w0)"]
         << ", highest root " << rs.format(rs.highest()) << "\n";
      if (!psi.empty()) {
        PsiSystem p = psi_J(rs, parse_nodes(psi));
        json simple = json::array();
        for (int r : p.simple) simple.push_back(rs.format(r));
        j["psi"] = {{"J", nodes_text(p.J)}, {"type", p.type}, {"positive", p.positive.size()}, {"simple", simple}};
        os << "Psi_" << nodes_text(p.J) << ": " << (p.type.empty() ? "empty" : p.type) << ", " << p.positive.size()
           << " positive roots, simple";
        for (auto& s : simple) os << " " << s.get<std::string>();
        os << "\n";
      }
      if (!diagram.empty()) {
        OppDiagram d = opp_diagram(diagram);
        const RootSystem& drs = RootSystem::get(diagram_spec(diagram).system);
        json seq = json::array();
        for (int r : d.sequence) seq.push_back(drs.format(r));
        j["diagram"] = {{"name", d.name},           {"J", nodes_text(d.J)},     {"sequence", seq},
                        {"M", d.M},                 {"J_stable", d.J_stable}, {"perpendicular", d.perpendicular},
                        {"product_matches", d.product_matches}};
        os << d.name << ": J = " << nodes_text(d.J) << ", M = " << d.M << ", sequence";
        for (auto& s : seq) os << " " << s.get<std::string>();
        os << ", product " << (d.product_matches ? "matches" : "differs") << "\n";
      }
      emit(g, j, os.str());
      return kOk;
    }

    if (*weyl) {
      const RootSystem& rs = RootSystem::get(type);
      WeylElt w = WeylElt::from_word(rs, parse_word(word));
      json j = {{"length", w.length()}, {"reduced", w.str()}};
      std::ostringstream os;
      os << "length " << w.length() << ", " << w.str() << "\n";
      if (!act.empty()) {
        WeylElt wi = w.inverse();
        std::stringstream ss(act);
        std::string tok;
        json images = json::object();
        while (std::getline(ss, tok, ';')) {
          size_t start = 0;
          while ((start = tok.find('(', start)) != std::string::npos) {
            size_t end = tok.find(')', start);
            std::string r = tok.substr(start, end - start + 1);
            std::string img = rs.format(wi.act(rs.parse(r)));
            images[r] = img;
            os << "w^-1 " << r << " = " << img << "\n";
            start = end;
          }
        }
        j["inverse_images"] = images;
      }
      emit(g, j, os.str());
      return kOk;
    }

    if (*bruhat) {
      GroupPtr G = make_group(g, type, field);
      GroupElt x = parse_element(G, elt);
      json j = {{"normal_form", x.str()}, {"cell", x.w().str()}, {"cell_length", x.w().length()}};
      emit(g, j, x.str() + "\ncell " + x.w().str() + " (length " + std::to_string(x.w().length()) + ")\n");
      return kOk;
    }

    if (*conj) {
      GroupPtr G = make_group(g, type, field);
      GroupElt th = parse_element(G, elt), c = parse_element(G, by);
      GroupElt r = th.conjugate(c);
      json j = {{"conjugate", r.str()}, {"displacement", r.w().str()}, {"length", r.w().length()}};
      emit(g, j, r.str() + "\ndisplacement " + r.w().str() + " (length " + std::to_string(r.w().length()) + ")\n");
      return kOk;
    }

    if (*d4) {
      Field F = Field::parse(field);
      std::mt19937_64 rng(g.seed);
      ThetaParams p;
      if (random_params || params.empty()) {
        p = {F.random(rng), F.random(rng), F.random(rng), F.random_nonzero(rng), F.random_nonzero(rng),
             F.random_nonzero(rng), F.random_nonzero(rng)};
      } else {
        std::vector<FieldElem> v;
        std::stringstream ss(params);
        std::string tok;
        while (std::getline(ss, tok, ',')) v.push_back(parse_in(F, tok));
        if (v.size() != 7) throw std::invalid_argument("--params needs a,b,c,t1,t2,t3,t4");
        p = {v[0], v[1], v[2], v[3], v[4], v[5], v[6]};
      }
      UPoly cp = char_poly(build_theta_E74(p));
      bool factor = upoly_eq(cp, theta_expected_charpoly(p));
      Classification cl = classify_theta(p);
      json j = {{"params", {p.a.str(), p.b.str(), p.c.str(), p.t1.str(), p.t2.str(), p.t3.str(), p.t4.str()}},
                {"char_poly", upoly_str(cp)},
                {"factorisation_holds", factor},
                {"p", upoly_str(theta_p(p))},
                {"class", cl.cls},
                {"route", cl.route},
                {"canonical", cl.canonical_text},
                {"verified", cl.verified}};
      std::ostringstream os;
      os << "params " << j["params"].dump() << "\nchar poly " << upoly_str(cp) << "\n(x-1)^4 p(x)^2 "
         << (factor ? "holds" : "FAILS") << ", p = " << upoly_str(theta_p(p)) << "\nclass " << cl.cls << " via "
         << cl.route << (cl.canonical_text.empty() ? "" : ": " + cl.canonical_text)
         << (cl.verified ? " (verified)" : " (unverified)") << "\n";
      emit(g, j, os.str());
      return factor && (cl.verified || cl.cls == 0) ? kOk : kFinding;
    }

    if (*polar) {
      HyperbolicSpace sp = HyperbolicSpace::build(n, q);
      std::vector<Collineation> elems;
      if (exhaustive) {
        elems = isometry_group(sp, budget_from_env(200000));
      } else {
        std::mt19937_64 rng(g.seed);
        for (int k = 0; k < samples; ++k) elems.push_back(random_isometry(sp, rng));
      }
      long agree = 0, kangaroos = 0, lazy = 0, diligent = 0;
      for (auto& c : elems) {
        auto perm = point_permutation(sp, c);
        auto eq = kangaroo_equivalences(sp, perm);
        agree += eq.agree();
        auto v = is_kangaroo(sp, perm);
        kangaroos += v.kangaroo;
        lazy += v.lazy && v.kangaroo;
        diligent += v.diligent;
      }
      json j = {{"n", n},          {"q", q},         {"elements", elems.size()}, {"agree", agree},
                {"kangaroos", kangaroos}, {"lazy", lazy}, {"diligent", diligent}};
      std::ostringstream os;
      os << "D" << n << "(" << q << "): " << elems.size() << " collineations, conditions agree on " << agree
         << "; kangaroos " << kangaroos << " (lazy " << lazy << ", diligent " << diligent << ")\n";
      emit(g, j, os.str());
      return agree == (long)elems.size() ? kOk : kFinding;
    }

    if (*algebra) {
      std::mt19937_64 rng(g.seed);
      json j = {{"check", check}, {"samples", samples}};
      long good = 0;
      if (check == "e6" || check == "cubic") {
        Field F = Field::parse(field);
        CompAlg O = CompAlg::zorn(F);
        for (int k = 0; k < samples; ++k) {
          AlgElem X = O.random(rng), Y = O.random(rng);
          auto v = veronese_affine(O, X, Y).c;
          if (check == "e6") {
            good += e6_equations(O, v);
          } else {
            AlgElem X2 = O.random(rng), Y2 = O.random(rng);
            auto w = veronese_affine(O, X2, Y2).c;
            FieldElem s = F.random(rng), t = F.random(rng);
            std::vector<FieldElem> line(v.size());
            for (size_t i = 0; i < v.size(); ++i) line[i] = s * v[i] + t * w[i];
            good += cubic_C(O, line).is_zero();
          }
        }
      } else if (check == "aut") {
        Field F = Field::parse("fun f2 cap 32: l1,l2");
        FieldElem l1 = F.var(0), l2 = F.var(1);
        CompAlg O = CompAlg::zorn(F);
        CompAlg H = CompAlg::inseparable(l1, l2);
        auto pick = [&] {
          return (rng() & 1 ? F.one() : F.zero()) + (rng() & 1 ? l1 : F.zero()) + (rng() & 1 ? l2 : F.zero());
        };
        for (int k = 0; k < samples; ++k) {
          // inverses of units 1 + x1 e1 + x2 e2 + x3 e3 give admissible tuples
          AlgElem u = H.inverse({F.one(), pick(), pick(), pick()});
          good += is_admissible(l1, l2, u[0], u[1], u[2], u[3]) &&
                  is_automorphism(O, aut_A(l1, l2, u[0], u[1], u[2], u[3]));
        }
      } else {
        throw std::invalid_argument("unknown algebra check " + check);
      }
      j["holding"] = good;
      emit(g, j, check + ": holds on " + std::to_string(good) + " of " + std::to_string(samples) + " samples\n");
      return kOk;
    }

    if (*thin) {
      if (!gosset && !e6) gosset = true;
      ThinModel m = gosset ? build_gosset() : build_e6_apartment();
      json j = {{"model", m.name}, {"vertices", m.size()}, {"degree", m.degree(0)}, {"diameter", m.diameter()}};
      std::ostringstream os;
      if (count_symps) {
        j["symps"] = m.symps.size();
        os << m.symps.size() << "\n";
      }
      if (census && gosset) {
        GossetCensus c = gosset_census(m);
        j["point_symp"] = c.point_symp;
        j["symp_symp"] = c.symp_symp;
        j["unclassified"] = c.unclassified;
        j["symplectic_collinear"] = c.symplectic_collinear;
        j["opposite_matching"] = c.opposite_matching;
        j["imaginary_partition"] = c.imaginary_partition;
        for (auto& [k, v] : c.point_symp) os << "point-symp " << k << ": " << v << "\n";
        for (auto& [k, v] : c.symp_symp) os << "symp-symp " << k << ": " << v << "\n";
        os << "unclassified " << c.unclassified << ", opposite matching " << c.opposite_matching << "\n";
      }
      if (census && e6) {
        for (auto& ch : e6_fact_checks(m)) {
          j["facts"][ch.item] = {{"holds", ch.holds}, {"cases", ch.cases}};
          os << ch.item << ": " << (ch.holds ? "holds" : "FAILS") << "\n";
        }
      }
      if (edges) {
        j["edges"] = m.edge_list();
        os << m.edge_list();
      }
      if (!count_symps && !census && !edges)
        os << m.name << ": " << m.size() << " vertices, degree " << m.degree(0) << ", " << m.symps.size()
           << " symps\n";
      emit(g, j, os.str());
      return kOk;
    }

    if (*spectrum) {
      GroupPtr G = make_group(g, type, "f" + std::to_string(q));
      GroupElt th = parse_element(G, theta_text);
      SpectrumReport r = spectrum_bruteforce(th, g.jobs, budget_from_env(10'000'000));
      json counts = json::object();
      for (auto& [w, c] : r.counts) counts[w.str()] = c;
      json maximal = json::array();
      for (auto& w : r.maximal) maximal.push_back(w.str());
      json j = {{"type", r.type},
                {"q", r.q},
                {"chambers", r.total},
                {"expected_chambers", r.expected_total},
                {"domestic", r.domestic},
                {"fixed", r.fixed},
                {"max_length", r.max_length},
                {"maximal", maximal},
                {"diagram", nodes_text(r.opposed_nodes)},
                {"uncapped_risk", r.uncapped_risk},
                {"counts", counts}};
      if (r.inferred) j["inferred"] = nodes_text(*r.inferred);
      std::ostringstream os;
      os << "domestic=" << (r.domestic ? "true" : "false") << ", diagram " << nodes_text(r.opposed_nodes) << "\n"
         << r.str() << "\n";
      emit(g, j, os.str());
      return kOk;
    }

    if (*verify) {
      Report r = verify_paper_corpus(suite, g.seed);
      emit(g, to_json(r), to_text(r));
      return r.exit_code();
    }
  } catch (const SpectrumBudget& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kBudget;
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kBudget;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}
