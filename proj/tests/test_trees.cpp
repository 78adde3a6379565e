#include <doctest.h>

#include <map>
#include <set>

#include "opgpd/copb.hpp"
#include "opgpd/random.hpp"

using namespace opgpd;

namespace {

// Independent count: trees over color sequences, then multiply by label choices.
long long count_closed(int k, std::map<int, long long>& memo) {
  if (k == 1) return 1;
  if (memo.count(k)) return memo[k];
  long long s = 0;
  for (int a = 1; a < k; ++a) s += count_closed(a, memo) * count_closed(k - a, memo);
  return memo[k] = s;
}

long long count_open(const std::string& w, std::map<std::string, long long>& memo,
                     std::map<int, long long>& cm) {
  if (w == "y") return 1;
  if (memo.count(w)) return memo[w];
  long long s = 0;
  if (w.find('y') == std::string::npos) s += count_closed(static_cast<int>(w.size()), cm);
  for (size_t c = 1; c < w.size(); ++c) s += count_open(w.substr(0, c), memo, cm) * count_open(w.substr(c), memo, cm);
  return memo[w] = s;
}

long long oracle_count(int n, int m) {
  std::map<std::string, long long> memo;
  std::map<int, long long> cm;
  long long total = 0;
  for (int mask = 0; mask < (1 << (n + m)); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    std::string w;
    for (int i = 0; i < n + m; ++i) w += (mask >> i & 1) ? 'x' : 'y';
    total += count_open(w, memo, cm);
  }
  for (int i = 2; i <= n; ++i) total *= i;
  for (int i = 2; i <= m; ++i) total *= i;
  return total;
}

// Structural oracle for U, written independently of the library version.
std::string u_oracle(const Tree& t) {
  switch (t.kind) {
    case Kind::X: return "x" + std::to_string(t.label);
    case Kind::F: return u_oracle(t.kids[0]);
    default: return "mc(" + u_oracle(t.kids[0]) + ", " + u_oracle(t.kids[1]) + ")";
  }
}

// One rewriting step at a randomly chosen redex; false when none is left.
bool rewrite_once(Tree& t, Rng& rng) {
  std::vector<Tree*> redexes;
  std::function<void(Tree&)> scan = [&](Tree& s) {
    bool mcr = s.kind == Kind::MC && (s.kids[0].kind == Kind::UnitC || s.kids[1].kind == Kind::UnitC);
    bool mor = s.kind == Kind::MO && (s.kids[0].kind == Kind::UnitO || s.kids[1].kind == Kind::UnitO);
    bool fr = s.kind == Kind::F && s.kids[0].kind == Kind::UnitC;
    if (mcr || mor || fr) redexes.push_back(&s);
    for (auto& k : s.kids) scan(k);
  };
  scan(t);
  if (redexes.empty()) return false;
  Tree& r = *redexes[uniform(rng, 0, static_cast<int>(redexes.size()) - 1)];
  if (r.kind == Kind::F) {
    r = Tree::unit_o();
  } else {
    Kind unit = r.kind == Kind::MC ? Kind::UnitC : Kind::UnitO;
    Tree keep = r.kids[0].kind == unit ? r.kids[1] : r.kids[0];
    r = keep;
  }
  return true;
}

// Sprinkles units by grafting them into random slots of a larger tree.
Tree with_units(Rng& rng, Tree t) {
  int extra = uniform(rng, 1, 3);
  for (int e = 0; e < extra; ++e) {
    // replace a random leaf L by mc(L, *c) / mo(*o, L) / f(*c)-style padding
    std::vector<Tree*> leaves;
    std::function<void(Tree&)> scan = [&](Tree& s) {
      if (s.kids.empty()) leaves.push_back(&s);
      for (auto& k : s.kids) scan(k);
    };
    scan(t);
    Tree& l = *leaves[uniform(rng, 0, static_cast<int>(leaves.size()) - 1)];
    if (l.color() == Color::Closed)
      l = uniform(rng, 0, 1) ? Tree::mc(l, Tree::unit_c()) : Tree::mc(Tree::unit_c(), l);
    else
      l = uniform(rng, 0, 1) ? Tree::mo(l, Tree::f(Tree::unit_c())) : Tree::mo(Tree::unit_o(), l);
  }
  return t;
}

}  // namespace

TEST_CASE("s-expression round trip") {
  std::string s = "mo(f(mc(x1, x2)), mo(f(x3), y1))";
  Tree t = parse_tree("mo(f(mc(x1,x2)), mo(f(x3), y1))");
  CHECK(to_string(t) == s);
  CHECK(t.n_open() == 1);
  CHECK(t.m_closed() == 3);
  CHECK_THROWS(parse_tree("mo(x1, y1)"));
  CHECK_THROWS(parse_tree("mc(x1, x1)"));
}

TEST_CASE("graft examples") {
  Tree mo = parse_tree("mo(y1, y2)");
  CHECK(to_string(graft(mo, {Color::Open, 1}, parse_tree("f(x1)"))) == "mo(f(x1), y1)");
  CHECK(to_string(graft(mo, {Color::Open, 2}, Tree::unit_o())) == "y1");
  Tree both = graft(graft(mo, {Color::Open, 2}, Tree::unit_o()), {Color::Open, 1}, Tree::unit_o());
  CHECK(both == Tree::unit_o());
  CHECK(graft(parse_tree("f(x1)"), {Color::Closed, 1}, Tree::unit_c()) == Tree::unit_o());
  CHECK_THROWS(graft(mo, {Color::Open, 1}, parse_tree("mc(x1, x2)")));
  CHECK(to_string(graft(parse_tree("mo(f(x1), y1)"), {Color::Open, 1}, parse_tree("mo(y1, f(x1))"))) ==
        "mo(f(x1), mo(y1, f(x2)))");
  CHECK(to_string(graft(parse_tree("mc(x2, mc(x1, x3))"), {Color::Closed, 2}, parse_tree("mc(x2, x1)"))) ==
        "mc(mc(x3, x2), mc(x1, x4))");
}

TEST_CASE("omega map") {
  ShuffleObject a = omega_map(parse_tree("f(mc(x1, x2))"));
  CHECK(to_string(a) == "[x1 x2]");
  CHECK(to_string(omega_map(parse_tree("mo(f(x1), y1)"))) == "[x1 y1]");
  CHECK(omega_map(parse_tree("mo(f(x1), f(x2))")) == a);
  CHECK_FALSE(parse_tree("mo(f(x1), f(x2))") == parse_tree("f(mc(x1, x2))"));
}

TEST_CASE("omega is surjective onto shuffle objects") {
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m) {
      if (n + m == 0) continue;
      std::set<ShuffleObject> hit;
      for (auto& t : enumerate(n, m)) hit.insert(omega_map(t));
      CHECK(hit.size() == all_shuffle_objects(n, m).size());
    }
}

TEST_CASE("forget parenthesization") {
  CHECK(to_string(forget_parenthesization_U(parse_tree("f(mc(x1, x2))"))) == "mc(x1, x2)");
  CHECK(to_string(forget_parenthesization_U(parse_tree("mo(f(x1), f(x2))"))) == "mc(x1, x2)");
  Tree t = parse_tree("mo(f(x2), mo(f(x1), f(x3)))");
  CHECK(to_string(forget_parenthesization_U(t)) == u_oracle(t));
  CHECK(to_string(forget_parenthesization_U(t)) == "mc(x2, mc(x1, x3))");
  Rng rng(4);
  for (int i = 0; i < 30; ++i) {
    Tree r = random_open_tree(rng, 0, uniform(rng, 1, 5));
    CHECK(to_string(forget_parenthesization_U(r)) == u_oracle(r));
  }
  CHECK_THROWS(forget_parenthesization_U(parse_tree("mo(f(x1), y1)")));
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate(0, 1).size() == 1);
  CHECK(to_string(enumerate(0, 1)[0]) == "f(x1)");
  auto e20 = enumerate(2, 0);
  CHECK(e20.size() == 2);
  auto e02 = enumerate(0, 2);
  std::set<std::string> names;
  for (auto& t : e02) names.insert(to_string(t));
  CHECK(names == std::set<std::string>{"f(mc(x1, x2))", "f(mc(x2, x1))", "mo(f(x1), f(x2))", "mo(f(x2), f(x1))"});
  long long fact = 1, catalan[] = {1, 1, 2, 5, 14};
  for (int n = 1; n <= 5; ++n) {
    fact *= n;
    CHECK(static_cast<long long>(enumerate(n, 0).size()) == fact * catalan[n - 1]);
  }
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m + n <= 4; ++m) {
      if (n + m == 0) continue;
      auto all = enumerate(n, m);
      std::set<std::string> uniq;
      for (auto& t : all) {
        uniq.insert(to_string(t));
        validate(t, false);
      }
      CHECK(uniq.size() == all.size());
      CHECK(static_cast<long long>(all.size()) == oracle_count(n, m));
    }
  CHECK(enumerate(0, 0, true).size() == 1);
}

TEST_CASE("unit rewriting is confluent") {
  Rng rng(12);
  for (int i = 0; i < 60; ++i) {
    Tree base = random_open_tree(rng, uniform(rng, 0, 2), uniform(rng, 0, 2));
    Tree t = with_units(rng, base);
    Tree a = t, b = t;
    while (rewrite_once(a, rng)) {
    }
    while (rewrite_once(b, rng)) {
    }
    CHECK(a == b);
    CHECK(normalize_units(t) == a);
    CHECK(a == base);
  }
}

TEST_CASE("graft associativity and object compatibility") {
  Rng rng(13);
  for (int i = 0; i < 60; ++i) {
    int na = uniform(rng, 1, 2), ma = uniform(rng, 0, 2);
    int nb = uniform(rng, 1, 2), mb = uniform(rng, 0, 2);
    int nc = uniform(rng, 0, 2), mc = uniform(rng, 0, 2);
    if (nc + mc == 0) nc = 1;
    Tree a = random_open_tree(rng, na, ma), b = random_open_tree(rng, nb, mb), c = random_open_tree(rng, nc, mc);
    int j = uniform(rng, 1, na), k = uniform(rng, 1, nb);
    Tree lhs = graft(graft(a, {Color::Open, j}, b), {Color::Open, j + k - 1}, c);
    Tree rhs = graft(a, {Color::Open, j}, graft(b, {Color::Open, k}, c));
    CHECK(lhs == rhs);

    // omega commutes with grafting
    ShuffleObject composed = copb_insert_open(copb_identity(omega_map(a)), j, copb_identity(omega_map(b))).src;
    CHECK(omega_map(graft(a, {Color::Open, j}, b)) == composed);
    if (ma > 0) {
      Tree d = random_closed_tree(rng, uniform(rng, 1, 3));
      int ci = uniform(rng, 1, ma);
      ShuffleObject cs =
          copb_insert_closed(copb_identity(omega_map(a)), ci, CoBMorphism::identity(omega_map(Tree::f(d)).aerial_labels()))
              .src;
      CHECK(omega_map(graft(a, {Color::Closed, ci}, d)) == cs);
    }
  }
}

TEST_CASE("graft equivariance") {
  Rng rng(14);
  for (int i = 0; i < 40; ++i) {
    int n = uniform(rng, 1, 3), m = uniform(rng, 0, 2);
    Tree a = random_open_tree(rng, n, m), b = random_open_tree(rng, uniform(rng, 0, 2), uniform(rng, 1, 2));
    Permutation so = random_permutation(rng, n), sc = random_permutation(rng, m);
    int j = uniform(rng, 1, n);
    Tree lhs = graft(relabel(a, so, sc), {Color::Open, so(j)}, b);
    Permutation sc2 = sc;
    for (int l = m + 1; l <= m + b.m_closed(); ++l) sc2.images.push_back(l);
    Tree rhs = relabel(graft(a, {Color::Open, j}, b), block_permutation(so, j, b.n_open()), sc2);
    CHECK(lhs == rhs);
  }
}
