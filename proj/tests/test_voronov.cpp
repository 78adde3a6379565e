#include <doctest.h>

#include "opgpd/random.hpp"
#include "opgpd/voronov.hpp"

using namespace opgpd;

namespace {

const CDxPaP& V() {
  static const CDxPaP v = build_cd_pap_instance(2);
  return v;
}

DKElement rnd_p(Rng& rng, int m) {
  DKElement g = dk_one(m, 2);
  if (m < 2) return g;
  for (int k = uniform(rng, 0, 3); k > 0; --k) {
    int i = uniform(rng, 1, m - 1), j = uniform(rng, i + 1, m);
    g = dk_mul(g, dk_exp(dk_scale(dk_t(m, 2, i, j), frac(uniform(rng, -4, 4), 3))));
  }
  return g;
}

Tree tree_over(Rng& rng, const std::vector<int>& seq) {
  if (seq.empty()) return Tree::unit_c();
  return forget_parenthesization_U(
      random_tree_over(rng, ShuffleObject::make(std::vector<bool>(seq.size(), true), {}, {seq})));
}

CDxPaP::Element rnd(Rng& rng, int cap, bool needs_open = false, bool needs_closed = false) {
  int n, m;
  do {
    n = uniform(rng, needs_open ? 1 : 0, cap);
    m = uniform(rng, needs_closed ? 1 : 0, cap);
  } while (n + m == 0);
  auto seq = random_permutation(rng, n).images;
  return V().make(rnd_p(rng, m), {tree_over(rng, seq), tree_over(rng, seq)});
}

// Exchanges two consecutive blocks of widths a and b sitting after `before` labels.
Permutation block_swap(int before, int a, int b) {
  Permutation s = Permutation::identity(before + a + b);
  for (int t = 1; t <= a; ++t) s.images[before + t - 1] = before + b + t;
  for (int t = 1; t <= b; ++t) s.images[before + a + t - 1] = before + t;
  return s;
}

}  // namespace

TEST_CASE("shape of the instance") {
  CHECK(V().closed_side().merge(dk_one(1, 2), dk_one(2, 2)) == dk_one(3, 2));
  // (0, m) components are present, (0, 0) is removed
  CHECK_NOTHROW(V().make(dk_one(2, 2), {Tree::unit_c(), Tree::unit_c()}));
  CHECK_THROWS(V().make(dk_one(0, 2), {Tree::unit_c(), Tree::unit_c()}));
  CDxPaP plain(CDOperad{2}, PaPOperad{}, false);
  CHECK_NOTHROW(plain.make(dk_one(0, 2), {Tree::unit_c(), Tree::unit_c()}));
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    auto e = rnd(rng, 3, false, true), f = rnd(rng, 3, true);
    auto x = rnd_p(rng, uniform(rng, 1, 3));
    int ci = uniform(rng, 1, V().m(e));
    auto c = V().insert_closed(e, ci, x);
    CHECK(V().n(c) == V().n(e));
    CHECK(V().m(c) == V().m(e) + x.r - 1);
    auto o = V().insert_open(f, 1, e);
    CHECK(V().n(o) == V().n(f) + V().n(e) - 1);
    CHECK(V().m(o) == V().m(f) + V().m(e));
  }
  CHECK_THROWS(V().insert_open(rnd(rng, 2, false, true), 5, rnd(rng, 2)));
}

TEST_CASE("unit laws") {
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    auto e = rnd(rng, 3);
    CHECK(V().equal(V().insert_open(V().unit(), 1, e), e));
    if (V().n(e) > 0) CHECK(V().equal(V().insert_open(e, uniform(rng, 1, V().n(e)), V().unit()), e));
    if (V().m(e) > 0) CHECK(V().equal(V().insert_closed(e, uniform(rng, 1, V().m(e)), dk_one(1, 2)), e));
  }
}

TEST_CASE("the merge is commutative up to the block swap") {
  Rng rng(3);
  const CDOperad& P = V().closed_side();
  for (int i = 0; i < 100; ++i) {
    DKElement a = rnd_p(rng, uniform(rng, 0, 3)), b = rnd_p(rng, uniform(rng, 0, 3));
    CHECK(P.relabel(P.merge(a, b), block_swap(0, a.r, b.r)) == P.merge(b, a));
  }
}

TEST_CASE("associativity") {
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    // open into open, nested
    auto a = rnd(rng, 3, true), b = rnd(rng, 3, true), c = rnd(rng, 2);
    int j = uniform(rng, 1, V().n(a)), k = uniform(rng, 1, V().n(b));
    CHECK(V().equal(V().insert_open(V().insert_open(a, j, b), j + k - 1, c),
                    V().insert_open(a, j, V().insert_open(b, k, c))));
    // open into two different slots
    auto d = V().make(rnd_p(rng, uniform(rng, 0, 2)), [&] {
      auto seq = random_permutation(rng, uniform(rng, 2, 3)).images;
      return PaPMorphism{tree_over(rng, seq), tree_over(rng, seq)};
    }());
    int p = uniform(rng, 1, V().n(d) - 1), q = uniform(rng, p + 1, V().n(d));
    auto lhs = V().insert_open(V().insert_open(d, q, c), p, b);
    auto rhs = V().insert_open(V().insert_open(d, p, b), q + V().n(b) - 1, c);
    CHECK(V().equal(V().relabel(lhs, Permutation::identity(V().n(lhs)), block_swap(V().m(d), V().m(c), V().m(b))),
                    rhs));
    // closed into closed
    auto e = rnd(rng, 3, false, true);
    DKElement x = rnd_p(rng, uniform(rng, 1, 3)), y = rnd_p(rng, uniform(rng, 0, 2));
    int ci = uniform(rng, 1, V().m(e)), cj = uniform(rng, 1, x.r);
    CHECK(V().equal(V().insert_closed(V().insert_closed(e, ci, x), ci + cj - 1, y),
                    V().insert_closed(e, ci, V().closed_side().insert(x, cj, y))));
  }
}

TEST_CASE("interchange of closed and open insertions") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    auto e = rnd(rng, 3, true, true), f = rnd(rng, 3, false, true);
    DKElement x = rnd_p(rng, uniform(rng, 1, 3));
    int j = uniform(rng, 1, V().n(e)), ci = uniform(rng, 1, V().m(e)), cf = uniform(rng, 1, V().m(f));
    CHECK(V().equal(V().insert_closed(V().insert_open(e, j, f), ci, x),
                    V().insert_open(V().insert_closed(e, ci, x), j, f)));
    CHECK(V().equal(V().insert_closed(V().insert_open(e, j, f), V().m(e) + cf, x),
                    V().insert_open(e, j, V().insert_closed(f, cf, x))));
  }
}

TEST_CASE("equivariance") {
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    auto a = rnd(rng, 3, true), b = rnd(rng, 3);
    int j = uniform(rng, 1, V().n(a));
    auto ab = V().insert_open(a, j, b);
    Permutation qo = random_permutation(rng, V().n(a)), qc = random_permutation(rng, V().m(a));
    auto lhs = V().insert_open(V().relabel(a, qo, qc), qo(j), b);
    Permutation ext = Permutation::identity(V().m(ab));
    for (int t = 1; t <= qc.size(); ++t) ext.images[t - 1] = qc(t);
    CHECK(V().equal(lhs, V().relabel(ab, block_permutation(qo, j, V().n(b)), ext)));
  }
}

TEST_CASE("json round trip") {
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    auto e = rnd(rng, 3);
    CHECK(V().equal(voronov_from_json(V(), voronov_to_json(e)), e));
  }
}
