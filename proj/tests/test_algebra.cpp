#include <doctest.h>

#include <functional>
#include <map>

#include "opgpd/algebra.hpp"
#include "opgpd/random.hpp"

using namespace opgpd;

namespace {

// Number of closed and open inputs of each diagram family, written out by hand.
const std::map<std::string, std::pair<int, int>> kArity = {
    {"pentagon_c", {4, 0}}, {"pentagon_o", {0, 4}}, {"hexagon_1", {3, 0}},  {"hexagon_2", {3, 0}},
    {"f_monoidal", {3, 0}}, {"f_center", {1, 2}},   {"f_braided", {2, 0}}, {"f_monoid_center", {2, 1}}};

long long expected_instances(int k, int l) {
  long long total = 0;
  for (auto& [fam, ar] : kArity) {
    long long c = 1;
    for (int i = 0; i < ar.first; ++i) c *= k;
    for (int i = 0; i < ar.second; ++i) c *= l;
    total += c;
  }
  return total;
}

// Scalar model of the graded sign example: every component is +1 or -1.
struct Signs {
  std::map<std::vector<int>, int> a_c, a_o, t, p, psi;
};

// signed_points stores +o at 2o and -o at 2o+1
int sign_of(const std::vector<int>& table, int idx) { return table[idx] % 2 == 0 ? 1 : -1; }

Signs signs_from(const AlgebraData& d) {
  Signs s;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      s.t[{a, b}] = sign_of(d.t, a * 2 + b);
      s.p[{a, b}] = sign_of(d.p, a * 2 + b);
      s.psi[{a, b}] = sign_of(d.psi, a * 2 + b);
      for (int c = 0; c < 2; ++c) {
        s.a_c[{a, b, c}] = sign_of(d.a_c, (a * 2 + b) * 2 + c);
        s.a_o[{a, b, c}] = sign_of(d.a_o, (a * 2 + b) * 2 + c);
      }
    }
  return s;
}

// Whether the diagram of the family commutes at the given objects, computed from the scalars.
bool oracle_commutes(const Signs& s, const std::string& fam, const std::vector<int>& v) {
  auto X = [](int a, int b) { return (a + b) % 2; };
  auto A = [&](const std::map<std::vector<int>, int>& m, int a, int b, int c) { return m.at({a, b, c}); };
  auto B = [&](const std::map<std::vector<int>, int>& m, int a, int b) { return m.at({a, b}); };
  int lhs = 1, rhs = 1;
  if (fam == "pentagon_c" || fam == "pentagon_o") {
    auto& al = fam == "pentagon_c" ? s.a_c : s.a_o;
    int x1 = v[0], x2 = v[1], x3 = v[2], x4 = v[3];
    lhs = A(al, x1, x2, X(x3, x4)) * A(al, X(x1, x2), x3, x4);
    rhs = A(al, x2, x3, x4) * A(al, x1, X(x2, x3), x4) * A(al, x1, x2, x3);
  } else if (fam == "hexagon_1") {
    int x1 = v[0], x2 = v[1], x3 = v[2];
    lhs = A(s.a_c, x2, x3, x1) * B(s.t, x1, X(x2, x3)) * A(s.a_c, x1, x2, x3);
    rhs = B(s.t, x1, x3) * A(s.a_c, x2, x1, x3) * B(s.t, x1, x2);
  } else if (fam == "hexagon_2") {
    int x1 = v[0], x2 = v[1], x3 = v[2];
    lhs = A(s.a_c, x3, x1, x2) * B(s.t, X(x1, x2), x3) * A(s.a_c, x1, x2, x3);
    rhs = B(s.t, x2, x3) * A(s.a_c, x1, x3, x2) * B(s.t, x1, x3);
  } else if (fam == "f_monoidal") {
    int x1 = v[0], x2 = v[1], x3 = v[2];
    lhs = B(s.p, x1, x2) * B(s.p, X(x1, x2), x3) * A(s.a_c, x1, x2, x3);
    rhs = A(s.a_o, x1, x2, x3) * B(s.p, x2, x3) * B(s.p, x1, X(x2, x3));
  } else if (fam == "f_center") {
    int x1 = v[0], y1 = v[1], y2 = v[2];
    lhs = A(s.a_o, x1, y1, y2) * B(s.psi, x1, X(y1, y2)) * A(s.a_o, y1, y2, x1);
    rhs = B(s.psi, x1, y1) * A(s.a_o, y1, x1, y2) * B(s.psi, x1, y2);
  } else if (fam == "f_braided") {
    int x1 = v[0], x2 = v[1];
    lhs = B(s.psi, x1, x2) * B(s.p, x2, x1);
    rhs = B(s.p, x1, x2) * B(s.t, x1, x2);
  } else if (fam == "f_monoid_center") {
    int x1 = v[0], x2 = v[1], y1 = v[2];
    lhs = B(s.psi, x2, y1) * A(s.a_o, x1, y1, x2) * B(s.psi, x1, y1);
    rhs = A(s.a_o, x1, x2, y1) * B(s.p, x1, x2) * B(s.psi, X(x1, x2), y1) * B(s.p, x1, x2) * A(s.a_o, y1, x1, x2);
  } else {
    FAIL("unknown family " << fam);
  }
  return lhs == rhs;
}

std::vector<std::vector<int>> oracle_failures(const Signs& s, const std::string& fam) {
  auto [m, n] = kArity.at(fam);
  std::vector<std::vector<int>> out;
  const int len = m + n;
  for (int code = 0; code < (1 << len); ++code) {
    std::vector<int> v(len);
    for (int i = 0; i < len; ++i) v[i] = (code >> (len - 1 - i)) & 1;  // first entry most significant
    if (!oracle_commutes(s, fam, v)) out.push_back(v);
  }
  return out;
}

void check_against_oracle(const AlgebraData& d) {
  Signs s = signs_from(d);
  CoherenceReport rep = check_coherence(d);
  REQUIRE(rep.families.size() == kArity.size());
  for (auto& fr : rep.families) {
    std::vector<std::vector<int>> got;
    for (auto& e : fr.failures) {
      std::vector<int> v = e.x;
      v.insert(v.end(), e.y.begin(), e.y.end());
      got.push_back(v);
    }
    CHECK_MESSAGE(got == oracle_failures(s, fr.family), fr.family);
  }
}

// Sign of a morphism of the graded example built from any braid-like word: the Koszul sign of the
// permutation taking source leaves to target leaves.
int koszul_sign(const Tree& src, const Tree& tgt, const Env& e) {
  std::vector<std::pair<bool, int>> a, b;
  std::function<void(const Tree&, std::vector<std::pair<bool, int>>&)> walk = [&](const Tree& t, auto& out) {
    if (t.kind == Kind::X) out.push_back({false, t.label});
    if (t.kind == Kind::Y) out.push_back({true, t.label});
    for (auto& k : t.kids) walk(k, out);
  };
  walk(src, a);
  walk(tgt, b);
  auto deg = [&](std::pair<bool, int> leaf) { return leaf.first ? e.y[leaf.second - 1] : e.x[leaf.second - 1]; };
  std::vector<int> pos(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      if (a[i] == b[j]) pos[i] = static_cast<int>(j);
  int odd = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (pos[i] > pos[j]) odd += deg(a[i]) * deg(a[j]);
  return odd % 2 == 0 ? 1 : -1;
}

Env random_env(Rng& rng, int m, int n, int k, int l) {
  Env e;
  for (int i = 0; i < m; ++i) e.x.push_back(uniform(rng, 0, k - 1));
  for (int i = 0; i < n; ++i) e.y.push_back(uniform(rng, 0, l - 1));
  return e;
}

}  // namespace

TEST_CASE("categories and tables") {
  CHECK_NOTHROW(validate(FiniteCategory::discrete({"a", "b"})));
  auto c = FiniteCategory::signed_points({"0", "1"});
  CHECK_NOTHROW(validate(c));
  CHECK(c.compose(c.morphism("-1"), c.morphism("-1")) == c.morphism("+1"));
  CHECK_THROWS(c.compose(c.morphism("-1"), c.morphism("-0")));
  CHECK(c.inverse(c.morphism("-0")) == c.morphism("-0"));
  auto bad = c;
  bad.comp[1][0] = 0;  // (-0) o (+0) = +0 breaks the identity law
  CHECK_THROWS(validate(bad));
}

TEST_CASE("Z/2 discrete passes") {
  AlgebraData d = cyclic_discrete(2);
  CHECK_NOTHROW(validate(d));
  CoherenceReport r = check_coherence(d);
  CHECK(r.ok());
  CHECK(r.instances() == expected_instances(2, 2));
  CHECK(check_coherence(cyclic_discrete(3)).instances() == expected_instances(3, 3));
  CHECK(check_coherence(cyclic_discrete(3)).ok());
}

TEST_CASE("S3 discrete is rejected at typing") {
  AlgebraData d = s3_discrete();
  std::string msg;
  try {
    validate(d);
  } catch (const std::invalid_argument& e) {
    msg = e.what();
  }
  CHECK(msg.find("typing") != std::string::npos);
  CHECK(msg.find("t(") != std::string::npos);
  CHECK_THROWS_AS(check_coherence(d), std::invalid_argument);
}

TEST_CASE("validation catches broken data") {
  AlgebraData d = graded_sign_algebra();
  auto a = d;
  a.t[1] = 0;  // t(0,1) must end at object 1
  CHECK_THROWS(validate(a));
  auto b = d;
  b.m_c.mor[1][0] = 0;  // (-0) x (+0) sent to +0 breaks composition
  CHECK_THROWS(validate(b));
  auto c = d;
  c.psi.pop_back();
  CHECK_THROWS(validate(c));
  auto u = d;
  u.strict_unit = true;
  u.unit_N.reset();
  CHECK_THROWS(validate(u));
}

TEST_CASE("theta of generators") {
  AlgebraData d = graded_sign_algebra();
  CHECK(d.M.morphisms[theta_eval(d, GenWord::gen("tau"), {{1, 1}, {}})] == "-0");
  CHECK(d.M.morphisms[theta_eval(d, GenWord::gen("tau"), {{1, 0}, {}})] == "+1");
  CHECK(d.M.morphisms[theta_eval(d, GenWord::gen("tau", true), {{1, 1}, {}})] == "-0");
  CHECK(d.N.morphisms[theta_eval(d, GenWord::gen("psi"), {{1}, {1}})] == "-0");
  CHECK(d.N.morphisms[theta_eval(d, GenWord::gen("f"), {{1}, {}})] == "+1");
  CHECK(d.M.morphisms[theta_eval(d, GenWord::id(parse_tree("mc(x1,mc(x2,x3))")), {{1, 1, 0}, {}})] == "+0");
  CHECK_THROWS(theta_eval(d, GenWord::gen("tau"), {{1}, {}}));
}

TEST_CASE("graded sign example is coherent and matches the scalar oracle") {
  AlgebraData d = graded_sign_algebra();
  CoherenceReport r = check_coherence(d);
  CHECK(r.ok());
  CHECK(r.instances() == expected_instances(2, 2));
  check_against_oracle(d);
}

TEST_CASE("single component perturbations fail exactly as predicted") {
  const AlgebraData base = graded_sign_algebra();
  std::vector<std::vector<int> AlgebraData::*> tables = {&AlgebraData::a_c, &AlgebraData::a_o, &AlgebraData::t,
                                                         &AlgebraData::p, &AlgebraData::psi};
  int failing = 0;
  for (auto tab : tables)
    for (size_t i = 0; i < (base.*tab).size(); ++i) {
      AlgebraData d = base;
      (d.*tab)[i] ^= 1;  // flip the sign, keep the object
      check_against_oracle(d);
      if (!check_coherence(d).ok()) ++failing;
    }
  CHECK(failing > 0);
  // a_c(0,1,1) = -1 breaks the pentagon at (0,0,1,1) and the first hexagon
  AlgebraData d = base;
  d.a_c[(0 * 2 + 1) * 2 + 1] = 1;
  CoherenceReport r = check_coherence(d);
  CHECK_FALSE(r.ok());
  bool pent = false, hex = false;
  for (auto& f : r.families) {
    if (f.family == "pentagon_c")
      for (auto& e : f.failures) pent |= e.x == std::vector<int>{0, 0, 1, 1};
    if (f.family == "hexagon_1") hex = !f.failures.empty();
  }
  CHECK(pent);
  CHECK(hex);
  CHECK(describe(d, Env{{0, 0, 1, 1}, {}}) == "x1=0 x2=0 x3=1 x4=1");
}

TEST_CASE("serial and parallel reports agree") {
  AlgebraData d = graded_sign_algebra();
  d.psi[3] = 0;
  d.a_o[5] ^= 1;
  auto a = check_coherence(d), b = check_coherence_serial(d);
  REQUIRE(a.families.size() == b.families.size());
  for (size_t i = 0; i < a.families.size(); ++i) {
    CHECK(a.families[i].family == b.families[i].family);
    CHECK(a.families[i].instances == b.families[i].instances);
    REQUIRE(a.families[i].failures.size() == b.families[i].failures.size());
    for (size_t j = 0; j < a.families[i].failures.size(); ++j) {
      CHECK(a.families[i].failures[j].x == b.families[i].failures[j].x);
      CHECK(a.families[i].failures[j].y == b.families[i].failures[j].y);
    }
  }
  CHECK(report_to_json(d, a) == report_to_json(d, b));
}

TEST_CASE("theta of a morphism does not depend on the word") {
  AlgebraData d = graded_sign_algebra();
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    int n = uniform(rng, 0, 2), m = uniform(rng, n == 0 ? 1 : 0, 3);
    PaPBMorphism y = random_papb(rng, n, m, 4, n == 0);
    GenWord wl = to_generator_word(y, Comb::Left), wr = to_generator_word(y, Comb::Right);
    for (int k = 0; k < 4; ++k) {
      Env e = random_env(rng, m, n, 2, 2);
      int vl = theta_eval(d, wl, e), vr = theta_eval(d, wr, e);
      CHECK(vl == vr);
      const FiniteCategory& C = y.src.color() == Color::Closed ? d.M : d.N;
      CHECK(C.src[vl] == tree_object(d, y.src, e));
      CHECK(C.tgt[vl] == tree_object(d, y.tgt, e));
      CHECK((vl % 2 == 0 ? 1 : -1) == koszul_sign(y.src, y.tgt, e));
    }
  }
}

TEST_CASE("f braided square as a word") {
  // p o (psi inserted with f at its open slot) against F(tau) o p, at every pair of objects
  AlgebraData d = graded_sign_algebra();
  d.p[1] = 3;  // p(0,1) = -1 keeps naturality and breaks the square where x1 != x2
  Permutation swap = Permutation::identity(2);
  swap.images = {2, 1};
  GenWord lhs = GenWord::compose(
      {GenWord::relabel(GenWord::gen("p"), Permutation::identity(0), swap),
       GenWord::insert(GenWord::gen("psi"), Slot{Color::Open, 1}, GenWord::gen("f"))});
  GenWord rhs = GenWord::compose(
      {GenWord::insert(GenWord::gen("f"), Slot{Color::Closed, 1}, GenWord::gen("tau")), GenWord::gen("p")});
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Env e{{a, b}, {}};
      CHECK((theta_eval(d, lhs, e) == theta_eval(d, rhs, e)) == (a == b));
    }
}

TEST_CASE("strict units") {
  AlgebraData d = graded_sign_algebra();
  d.strict_unit = true;
  CHECK(check_coherence(d).unit_problems.empty());
  d.unit_M = 1;
  d.unit_N = 1;
  CHECK_FALSE(check_coherence(d).unit_problems.empty());
  CHECK_FALSE(check_coherence(d).ok());
}

TEST_CASE("json round trip and shorthand") {
  AlgebraData d = graded_sign_algebra();
  d.strict_unit = true;
  auto j = algebra_to_json(d);
  CHECK(algebra_to_json(algebra_from_json(j)) == j);
  auto z2 = nlohmann::json::parse(R"({
    "M": {"objects": ["0", "1"]}, "N": "M",
    "m_c": {"objects": [["0","0","0"],["0","1","1"],["1","0","1"],["1","1","0"]]},
    "m_o": {"objects": [["0","0","0"],["0","1","1"],["1","0","1"],["1","1","0"]]},
    "F": "identity",
    "a_c": [["0","0","0","id_0"],["0","0","1","id_1"],["0","1","0","id_1"],["0","1","1","id_0"],
            ["1","0","0","id_1"],["1","0","1","id_0"],["1","1","0","id_0"],["1","1","1","id_1"]],
    "a_o": [["0","0","0","id_0"],["0","0","1","id_1"],["0","1","0","id_1"],["0","1","1","id_0"],
            ["1","0","0","id_1"],["1","0","1","id_0"],["1","1","0","id_0"],["1","1","1","id_1"]],
    "t": [["0","0","id_0"],["0","1","id_1"],["1","0","id_1"],["1","1","id_0"]],
    "p": [["0","0","id_0"],["0","1","id_1"],["1","0","id_1"],["1","1","id_0"]],
    "psi": [["0","0","id_0"],["0","1","id_1"],["1","0","id_1"],["1","1","id_0"]],
    "units": {"M": "0", "N": "0", "strict": true}
  })");
  AlgebraData z = algebra_from_json(z2);
  auto expected = algebra_to_json(cyclic_discrete(2));
  expected["units"]["strict"] = true;
  CHECK(algebra_to_json(z) == expected);
  CHECK(check_coherence(z).ok());
  z2["t"].erase(1);
  CHECK_THROWS(validate(algebra_from_json(z2)));
}
