// Command-line front end. Exit status: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "opgpd/algebra.hpp"
#include "opgpd/mixed_model.hpp"
#include "opgpd/suites.hpp"
#include "opgpd/voronov.hpp"

using namespace opgpd;
using nlohmann::json;

namespace {

struct Failure {
  std::string message;
};

nlohmann::json read_json(const std::string& path) {
  std::stringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("--in: cannot open " + path);
    buf << in.rdbuf();
  }
  return json::parse(buf.str());
}

Slot parse_slot(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'x' && s[0] != 'y')) throw std::invalid_argument("slot must look like x2 or y1: " + s);
  return {s[0] == 'x' ? Color::Closed : Color::Open, std::stoi(s.substr(1))};
}

std::string braid_text(const BraidWord& b) { return b.letters.empty() ? "id" : format_braid(b); }

PaPBMorphism papb_from_flags(const std::string& src, const std::string& tgt, const std::string& braid) {
  Tree s = parse_tree(src), t = parse_tree(tgt);
  return papb_make(s, t, parse_braid(braid == "id" ? "" : braid, s.m_closed()));
}

json papb_json(const PaPBMorphism& y) {
  return {{"src", to_string(y.src)}, {"tgt", to_string(y.tgt)}, {"braid", braid_to_json(y.under.braid)}};
}

PaPBMorphism papb_from_json(const json& j) {
  Tree s = parse_tree(j.at("src").get<std::string>()), t = parse_tree(j.at("tgt").get<std::string>());
  return papb_make(s, t, j.contains("braid") ? braid_from_json(j.at("braid")) : BraidWord(s.m_closed()));
}

std::string papb_text(const PaPBMorphism& y) {
  return to_string(y.src) + " -> " + to_string(y.tgt) + " : " + braid_text(y.under.braid);
}

std::string copb_text(const CoPBMorphism& x) {
  return to_string(x.src) + " -> " + to_string(x.tgt) + " : " + braid_text(x.braid);
}

std::string residual_text(const DKElement& e) { return e.s.is_zero() ? "0" : dk_to_string(e); }

const Associator& default_associator() {
  static const Associator a = solve_associator(1, 2).result;
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operads of parenthesized braids, chord diagrams and their algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::uint64_t seed = 1;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--seed", seed, "seed for randomized checks");

  std::function<void()> action;
  auto out = [&](const json& j, const std::string& text) {
    if (as_json)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << text << "\n";
  };

  // ---- braid ----
  auto* braid = app.add_subcommand("braid", "braid words")->require_subcommand(1);
  int strands = 0;
  std::string w1, w2;
  {
    auto* eq = braid->add_subcommand("eq", "decide equality of two braid words");
    eq->add_option("a", w1)->required();
    eq->add_option("b", w2)->required();
    eq->add_option("--strands", strands)->required();
    eq->callback([&] {
      action = [&] {
        bool e = braids_equal(parse_braid(w1, strands), parse_braid(w2, strands));
        out({{"equal", e}}, e ? "equal" : "not equal");
        if (!e) throw Failure{""};
      };
    });
    auto* perm = braid->add_subcommand("perm", "underlying permutation");
    perm->add_option("word", w1)->required();
    perm->add_option("--strands", strands)->required();
    perm->callback([&] {
      action = [&] {
        Permutation p = underlying_permutation(parse_braid(w1, strands));
        std::string t;
        for (int v : p.images) t += (t.empty() ? "" : " ") + std::to_string(v);
        out({{"permutation", p.images}}, t);
      };
    });
    static int strand = 1, width = 2;
    auto* cab = braid->add_subcommand("cable", "replace one strand by parallel copies");
    cab->add_option("word", w1)->required();
    cab->add_option("--strands", strands)->required();
    cab->add_option("--strand", strand, "position of the strand at the top")->required();
    cab->add_option("--width", width)->required();
    cab->callback([&] {
      action = [&] {
        BraidWord b = cable(parse_braid(w1, strands), strand, width);
        out(braid_to_json(b), braid_text(b));
      };
    });
  }

  // ---- tree ----
  auto* tree = app.add_subcommand("tree", "bicolored magma trees")->require_subcommand(1);
  std::string t1, t2, slot_text;
  {
    auto* g = tree->add_subcommand("graft", "insert INNER at SLOT of OUTER");
    g->add_option("outer", t1)->required();
    g->add_option("slot", slot_text, "x<i> or y<j>")->required();
    g->add_option("inner", t2)->required();
    g->callback([&] {
      action = [&] {
        Tree r = graft(parse_tree(t1), parse_slot(slot_text), parse_tree(t2));
        out({{"tree", to_string(r)}}, to_string(r));
      };
    });
    auto* om = tree->add_subcommand("omega", "underlying shuffle object");
    om->add_option("tree", t1)->required();
    om->callback([&] {
      action = [&] {
        ShuffleObject s = omega_map(parse_tree(t1));
        out(shuffle_to_json(s), to_string(s));
      };
    });
    static int n_open = 0, m_closed = 0;
    static bool closed_out = false, units = false;
    auto* en = tree->add_subcommand("enum", "all trees of an arity");
    en->add_option("--open", n_open)->required();
    en->add_option("--closed", m_closed)->required();
    en->add_flag("--closed-output", closed_out, "closed magma trees (requires --open 0)");
    en->add_flag("--units", units, "allow unit leaves");
    en->callback([&] {
      action = [&] {
        if (closed_out && n_open != 0) throw std::invalid_argument("--closed-output needs --open 0");
        auto ts = closed_out ? enumerate_closed(m_closed, units) : enumerate(n_open, m_closed, units);
        json arr = json::array();
        std::string text;
        for (auto& t : ts) {
          arr.push_back(to_string(t));
          text += to_string(t) + "\n";
        }
        text += std::to_string(ts.size()) + " trees";
        out({{"count", ts.size()}, {"trees", arr}}, text);
      };
    });
  }

  // ---- copb ----
  auto* copb = app.add_subcommand("copb", "colored parenthesized braids without parentheses")->require_subcommand(1);
  std::string in_path;
  {
    auto* c = copb->add_subcommand("compose", "JSON {g, f}: g after f");
    c->add_option("--in", in_path, "input file, stdin when absent");
    c->callback([&] {
      action = [&] {
        json j = read_json(in_path);
        CoPBMorphism r = copb_compose(copb_from_json(j.at("g")), copb_from_json(j.at("f")));
        out(copb_to_json(r), copb_text(r));
      };
    });
    auto* i = copb->add_subcommand("insert", "JSON {outer, slot, inner}; a closed slot takes a colored braid");
    i->add_option("--in", in_path);
    i->callback([&] {
      action = [&] {
        json j = read_json(in_path);
        Slot s = parse_slot(j.at("slot").get<std::string>());
        CoPBMorphism o = copb_from_json(j.at("outer"));
        CoPBMorphism r = s.color == Color::Open ? copb_insert_open(o, s.label, copb_from_json(j.at("inner")))
                                                : copb_insert_closed(o, s.label, cob_from_json(j.at("inner")));
        out(copb_to_json(r), copb_text(r));
      };
    });
    auto* r = copb->add_subcommand("restrict", "JSON {morphism, slot}: insert a unit at the slot");
    r->add_option("--in", in_path);
    r->callback([&] {
      action = [&] {
        json j = read_json(in_path);
        Slot s = parse_slot(j.at("slot").get<std::string>());
        CoPBMorphism res = restrict_unit(copb_from_json(j.at("morphism")),
                                         s.color == Color::Open ? UnitKind::Open : UnitKind::Closed, s.label);
        out(copb_to_json(res), copb_text(res));
      };
    });
  }

  // ---- papb ----
  auto* papb = app.add_subcommand("papb", "parenthesized colored braids")->require_subcommand(1);
  std::string shape = "left", braid_word = "id";
  {
    auto add_morphism = [&](CLI::App* c) {
      c->add_option("--src", t1)->required();
      c->add_option("--tgt", t2)->required();
      c->add_option("--braid", braid_word, "aerial braid word, s<i> over and S<i> under");
      c->add_option("--shape", shape, "left or right combs")->check(CLI::IsMember({"left", "right"}));
    };
    auto* d = papb->add_subcommand("decompose", "shuffle, braid, shuffle decomposition");
    add_morphism(d);
    d->callback([&] {
      action = [&] {
        PaPBMorphism y = papb_from_flags(t1, t2, braid_word);
        Decomposition dec = decompose(y, shape == "left" ? Comb::Left : Comb::Right);
        bool ok = papb_equal(recompose(dec), y);
        out({{"mu", papb_json(dec.mu)},
             {"x_o", papb_json(dec.x_o)},
             {"x_c", papb_json(dec.x_c)},
             {"mu_prime", papb_json(dec.mu_prime)},
             {"recomposes", ok}},
            "mu       " + papb_text(dec.mu) + "\nx_o      " + papb_text(dec.x_o) + "\nx_c      " +
                papb_text(dec.x_c) + "\nmu'      " + papb_text(dec.mu_prime) + "\nrecompose: " +
                (ok ? "ok" : "MISMATCH"));
        if (!ok) throw Failure{""};
      };
    });
    auto* ws = papb->add_subcommand("words", "generator word of a morphism");
    add_morphism(ws);
    ws->callback([&] {
      action = [&] {
        PaPBMorphism y = papb_from_flags(t1, t2, braid_word);
        GenWord w = to_generator_word(y, shape == "left" ? Comb::Left : Comb::Right);
        bool ok = papb_equal(evaluate_papb(w), y);
        out({{"word", to_string(w)}, {"evaluates_back", ok}}, to_string(w));
        if (!ok) throw Failure{"word does not evaluate back to the morphism"};
      };
    });
    auto* st = papb->add_subcommand("coherence-selftest", "coherence diagrams among the generators");
    st->callback([&] {
      action = [&] {
        json arr = json::array();
        std::string text;
        bool all = true;
        for (auto& r : coherence_selftest()) {
          arr.push_back({{"family", r.family}, {"equal", r.equal}});
          text += r.family + ": " + (r.equal ? "ok" : "FAIL") + "\n";
          all = all && r.equal;
        }
        text.pop_back();
        out({{"ok", all}, {"diagrams", arr}}, text);
        if (!all) throw Failure{""};
      };
    });
  }

  // ---- cd ----
  auto* cd = app.add_subcommand("cd", "truncated chord diagrams")->require_subcommand(1);
  int degree = 3, k_slot = 1, strands2 = 1;
  std::string e1, e2;
  {
    auto* nf = cd->add_subcommand("normalize", "normal form of an expression in t<i><j>");
    nf->add_option("expr", e1)->required();
    nf->add_option("--strands", strands)->required();
    nf->add_option("--degree", degree)->required();
    nf->callback([&] {
      action = [&] {
        DKElement x = dk_parse(e1, strands, degree);
        out(dk_to_json(x), residual_text(x));
      };
    });
    auto* ins = cd->add_subcommand("insert", "operadic insertion of INNER at --slot of OUTER");
    ins->add_option("outer", e1)->required();
    ins->add_option("inner", e2)->required();
    ins->add_option("--strands", strands, "strands of the outer element")->required();
    ins->add_option("--inner-strands", strands2)->required();
    ins->add_option("--slot", k_slot)->required();
    ins->add_option("--degree", degree)->required();
    ins->callback([&] {
      action = [&] {
        DKElement x = dk_insert(dk_parse(e1, strands, degree), k_slot, dk_parse(e2, strands2, degree));
        out(dk_to_json(x), residual_text(x));
      };
    });
    auto* res = cd->add_subcommand("restrict", "forget a strand");
    res->add_option("expr", e1)->required();
    res->add_option("--strands", strands)->required();
    res->add_option("--slot", k_slot)->required();
    res->add_option("--degree", degree)->required();
    res->callback([&] {
      action = [&] {
        DKElement x = dk_restrict(dk_parse(e1, strands, degree), k_slot);
        out(dk_to_json(x), residual_text(x));
      };
    });
    auto* dims = cd->add_subcommand("dims", "dimension of a graded component");
    dims->add_option("--strands", strands)->required();
    dims->add_option("--degree", degree)->required();
    dims->callback([&] {
      action = [&] {
        long long d = dk_dimension(strands, degree);
        out({{"strands", strands}, {"degree", degree}, {"dimension", d}}, std::to_string(d));
      };
    });
  }

  // ---- assoc ----
  auto* assoc = app.add_subcommand("assoc", "Drinfeld associators")->require_subcommand(1);
  std::string mu_text = "1";
  {
    auto* so = assoc->add_subcommand("solve", "degreewise solution, printed as JSON");
    so->add_option("--mu", mu_text);
    so->add_option("--degree", degree)->required();
    so->callback([&] {
      action = [&] {
        SolveReport r = solve_associator(parse_rational(mu_text), degree);
        if (!r.ok) throw Failure{"no solution: " + r.message};
        std::cout << associator_to_json(r.result).dump(2) << "\n";
      };
    });
    auto* ch = assoc->add_subcommand("check", "pentagon and hexagon residuals of an associator JSON");
    ch->add_option("--in", in_path, "input file, stdin when absent");
    ch->callback([&] {
      action = [&] {
        Associator a = associator_from_json(read_json(in_path));
        AssociatorResiduals r = associator_residuals(a);
        out({{"pentagon", residual_text(r.pentagon)},
             {"hexagon1", residual_text(r.hexagon1)},
             {"hexagon2", residual_text(r.hexagon2)},
             {"ok", r.all_zero()}},
            "pentagon: " + residual_text(r.pentagon) + ", hexagon1: " + residual_text(r.hexagon1) +
                ", hexagon2: " + residual_text(r.hexagon2));
        if (!r.all_zero()) throw Failure{""};
      };
    });
    auto* ev = assoc->add_subcommand("eval", "image of a closed morphism in chord diagrams");
    ev->add_option("--in", in_path, "associator JSON")->required();
    ev->add_option("--src", t1)->required();
    ev->add_option("--tgt", t2)->required();
    ev->add_option("--braid", braid_word);
    ev->callback([&] {
      action = [&] {
        Associator a = associator_from_json(read_json(in_path));
        PaCDMorphism m = lift_phi_tilde(a, papb_from_flags(t1, t2, braid_word));
        out(dk_to_json(m.g), residual_text(m.g));
      };
    });
  }

  // ---- mixed ----
  auto* mixed = app.add_subcommand("mixed", "decomposed model [u, x, mu]")->require_subcommand(1);
  {
    auto* rh = mixed->add_subcommand("rho", "braid on shifted and ordinary strands; JSON element");
    rh->add_option("--in", in_path);
    rh->callback([&] {
      action = [&] {
        Shifted<PaPBMorphism> r = rho(prime_from_json(read_json(in_path)));
        json j = papb_json(r.payload);
        j["shifted"] = r.n;
        j["ordinary"] = r.m;
        out(j, papb_text(r.payload));
      };
    });
    auto* co = mixed->add_subcommand("compose", "JSON {outer, slot, inner}; a closed slot takes {src, tgt, braid}");
    co->add_option("--in", in_path);
    co->callback([&] {
      action = [&] {
        json j = read_json(in_path);
        Slot s = parse_slot(j.at("slot").get<std::string>());
        PrimeElement o = prime_from_json(j.at("outer"));
        PrimeElement r = s.color == Color::Open ? prime_insert_open(o, s.label, prime_from_json(j.at("inner")))
                                                : prime_insert_closed(o, s.label, papb_from_json(j.at("inner")));
        json rj = prime_to_json(r);
        out(rj, rj.dump());
      };
    });
    auto* ap = mixed->add_subcommand("apply-phi", "JSON {element, associator?}; default associator mu = 1, N = 2");
    ap->add_option("--in", in_path);
    ap->callback([&] {
      action = [&] {
        json j = read_json(in_path);
        Associator a = j.contains("associator") ? associator_from_json(j.at("associator")) : default_associator();
        json rj = papcd_to_json(apply_phi(a, prime_from_json(j.at("element"))));
        out(rj, rj.dump());
      };
    });
  }

  // ---- voronov ----
  auto* vor = app.add_subcommand("voronov", "CD x PaP")->require_subcommand(1);
  int count = 200;
  {
    auto* ch = vor->add_subcommand("check", "randomized operad axioms at N = 2");
    ch->add_option("--count", count);
    ch->callback([&] {
      action = [&] {
        SuiteResult r = voronov_axioms(seed, count);
        out({{"instances", r.instances}, {"failures", r.failures}, {"first_failure", r.first_failure}},
            "voronov: " + std::to_string(r.instances) + " instances, " + std::to_string(r.failures) + " failures" +
                (r.first_failure.empty() ? "" : " (" + r.first_failure + ")"));
        if (!r.ok()) throw Failure{""};
      };
    });
  }

  // ---- coherence ----
  auto* coh = app.add_subcommand("coherence", "algebras over finite categories")->require_subcommand(1);
  {
    auto* ch = coh->add_subcommand("check", "every diagram at every object tuple");
    ch->add_option("--in", in_path)->required();
    ch->callback([&] {
      action = [&] {
        AlgebraData d = algebra_from_json(read_json(in_path));
        try {
          validate(d);
        } catch (const std::invalid_argument& e) {
          out({{"ok", false}, {"rejected", e.what()}}, std::string("rejected: ") + e.what());
          throw Failure{""};
        }
        CoherenceReport r = check_coherence(d);
        std::string text;
        for (auto& f : r.families) {
          text += f.family + ": " + std::to_string(f.instances) + " instances, " + std::to_string(f.failures.size()) +
                  " failures\n";
          for (auto& e : f.failures) text += "  " + describe(d, e) + "\n";
        }
        for (auto& u : r.unit_problems) text += "unit: " + u + "\n";
        text += r.ok() ? "ok" : "FAIL";
        out(report_to_json(d, r), text);
        if (!r.ok()) throw Failure{""};
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    if (action) action();
  } catch (const Failure& f) {
    if (!f.message.empty()) std::cerr << f.message << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: bad JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
