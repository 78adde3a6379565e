#include <doctest.h>

#include "opgpd/generator_word.hpp"
#include "opgpd/random.hpp"

using namespace opgpd;

namespace {

const PaPBMorphism& G(const std::string& n) { return generators().at(n); }

bool same(const PaPBMorphism& a, const PaPBMorphism& b) { return papb_equal(a, b); }

bool is_identity(const PaPBMorphism& x) { return x.src == x.tgt && braids_equal(x.under.braid, BraidWord(x.under.m())); }

}  // namespace

TEST_CASE("generator signatures") {
  CHECK(underlying_permutation(G("tau").under.braid) == Permutation{{2, 1}});
  CHECK(G("alpha_c").src == parse_tree("mc(mc(x1, x2), x3)"));
  CHECK(G("alpha_c").tgt == parse_tree("mc(x1, mc(x2, x3))"));
  CHECK(G("psi").src == parse_tree("mo(f(x1), y1)"));
  CHECK(G("psi").tgt == parse_tree("mo(y1, f(x1))"));
  CHECK(G("p").under.n() == 0);
  CHECK(G("p").under.m() == 2);
  CHECK(G("p").color() == Color::Open);
  for (auto& [name, g] : generators()) CHECK_NOTHROW(validate(g));
}

TEST_CASE("pullback law is enforced") {
  CHECK_THROWS(papb_make(parse_tree("mc(x1, x2)"), parse_tree("mc(x2, x1)"), BraidWord(2)));
  CHECK_THROWS(papb_make(parse_tree("mo(f(x1), y1)"), parse_tree("mo(y1, f(x1))"), BraidWord(2)));
}

TEST_CASE("psi then the reverse shuffle is the identity") {
  auto back = papb_shuffle_type(G("psi").tgt, G("psi").src);
  REQUIRE(back);
  CHECK(same(papb_compose(*back, G("psi")), papb_identity(G("psi").src)));
}

TEST_CASE("tau twice is a nontrivial endomorphism") {
  Tree t = parse_tree("mc(x1, x2)");
  // tau relabelled to start at mc(x2, x1)
  PaPBMorphism back = papb_relabel(G("tau"), Permutation{}, Permutation{{2, 1}});
  REQUIRE(back.src == G("tau").tgt);
  PaPBMorphism tt = papb_compose(back, G("tau"));
  CHECK(tt.src == t);
  CHECK(tt.tgt == t);
  CHECK(braids_equal(tt.under.braid, BraidWord(2, {1, 1})));
  CHECK_FALSE(braids_equal(tt.under.braid, BraidWord(2)));
}

TEST_CASE("psi inserted on f equals f(tau) up to p") {
  // psi o_1^o id_f has braid s1, as does f(tau)
  PaPBMorphism a = papb_insert(G("psi"), {Color::Open, 1}, G("f"));
  PaPBMorphism ft = papb_insert(G("f"), {Color::Closed, 1}, G("tau"));
  CHECK(braids_equal(a.under.braid, ft.under.braid));
  CHECK(braids_equal(a.under.braid, BraidWord(2, {1})));
}

TEST_CASE("coherence diagrams hold in PaPB") {
  auto res = coherence_selftest();
  CHECK(res.size() == 8);
  for (auto& r : res) {
    INFO(r.family);
    CHECK(r.equal);
  }
  for (auto& d : coherence_diagrams()) {
    INFO(d.family);
    CHECK(endpoints(d.lhs) == endpoints(d.rhs));
  }
}

TEST_CASE("coherence check discriminates") {
  auto& h = coherence_diagrams()[2];
  REQUIRE(h.family == "hexagon_1");
  WordBuilder b(parse_tree("mc(mc(x1, x2), x3)"));
  b.apply({0}, "tau");
  b.apply({}, "alpha_c");
  b.apply({1}, "tau", true);
  CHECK(endpoints(b.word()) == endpoints(h.rhs));
  CHECK_FALSE(same(evaluate_papb(b.word()), evaluate_papb(h.lhs)));
}

TEST_CASE("decompose identity and psi") {
  Rng rng(7);
  Tree t = parse_tree("mo(f(mc(x1, x2)), mo(f(x3), y1))");
  Decomposition d = decompose(papb_identity(t));
  CHECK(is_identity(d.x_o));
  CHECK(is_identity(d.x_c));
  CHECK(same(recompose(d), papb_identity(t)));

  Decomposition e = decompose(G("psi"));
  CHECK(is_identity(e.x_o));
  CHECK(is_identity(e.x_c));
  CHECK_FALSE(e.mu.src == e.mu.tgt);
  CHECK(is_identity(e.mu_prime));
  CHECK(same(recompose(e), G("psi")));
}

TEST_CASE("decompose rejects malformed intermediates") {
  CHECK_THROWS(decompose(G("psi"), parse_tree("mo(f(x1), y1)"), parse_tree("mo(y1, f(x1))")));
}

TEST_CASE("recompose after decompose, random (2,2)") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    PaPBMorphism y = random_papb(rng, 2, 2, 6);
    CHECK(same(recompose(decompose(y)), y));
    CHECK(same(recompose(decompose(y, Comb::Right)), y));
  }
}

TEST_CASE("word of tau is tau") { CHECK(to_string(to_generator_word(G("tau"))) == "tau"); }

TEST_CASE("shuffle-type words use no tau") {
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    int n = uniform(rng, 0, 2), m = uniform(rng, 1, 3);
    ShuffleObject a = random_shuffle_object(rng, n, m);
    ShuffleObject b = ShuffleObject::make(random_shuffle_pattern(rng, n, m), a.terrestrial_labels(), a.aerial_labels());
    auto y = papb_shuffle_type(random_tree_over(rng, a), random_tree_over(rng, b));
    REQUIRE(y);
    GenWord w = to_generator_word(*y);
    CHECK(count_gen(w, "tau") == 0);
    CHECK(same(evaluate_papb(w), *y));
  }
  // the shape mo(f(mc(x1,x2)), y1) -> mo(y1, mo(f(x1), f(x2)))
  auto y = papb_shuffle_type(parse_tree("mo(f(mc(x1, x2)), y1)"), parse_tree("mo(y1, mo(f(x1), f(x2)))"));
  REQUIRE(y);
  GenWord w = to_generator_word(*y);
  CHECK(count_gen(w, "tau") == 0);
  CHECK(count_gen(w, "p") > 0);
  CHECK(same(evaluate_papb(w), *y));
}

TEST_CASE("sigma_1 squared gives two tau letters") {
  Tree t = parse_tree("mo(y1, f(mc(x1, x2)))");
  PaPBMorphism y = papb_make(t, t, BraidWord(2, {1, 1}));
  GenWord w = to_generator_word(y);
  CHECK(count_gen(w, "tau") == 2);
  CHECK(same(evaluate_papb(w), y));
}

TEST_CASE("self-evaluation of generator words, 100 random morphisms") {
  Rng rng(2024);
  for (int i = 0; i < 100; ++i) {
    int total = uniform(rng, 1, 4);
    int n = uniform(rng, 0, total), m = total - n;
    bool closed = n == 0 && uniform(rng, 0, 3) == 0;
    PaPBMorphism y = random_papb(rng, n, m, 6, closed);
    GenWord w = to_generator_word(y);
    INFO(to_string(w));
    CHECK(same(evaluate_papb(w), y));
    GenWord r = to_generator_word(y, Comb::Right);
    CHECK(same(evaluate_papb(r), y));
    CHECK(same(evaluate_papb(word_inverse(w)), papb_inverse(y)));
  }
}

TEST_CASE("word text round trip") {
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    PaPBMorphism y = random_papb(rng, 1, 2, 4);
    GenWord w = to_generator_word(y);
    GenWord back = parse_word(to_string(w));
    CHECK(to_string(back) == to_string(w));
    CHECK(same(evaluate_papb(back), y));
  }
  GenWord w = parse_word("(op-insert alpha_o 2 (id f))");
  CHECK(endpoints(w).first == parse_tree("mo(mo(y1, f(x1)), y2)"));
  CHECK(endpoints(w).second == parse_tree("mo(y1, mo(f(x1), y2))"));
  CHECK_THROWS(parse_word("(compose tau"));
  CHECK_THROWS(parse_word("sigma"));
}
