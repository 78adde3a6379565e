#include "opgpd/suites.hpp"

#include <functional>

#include "opgpd/mixed_model.hpp"
#include "opgpd/voronov.hpp"

namespace opgpd {

namespace {

// Runs `count` instances; an instance fails when any of its checks fails or it throws.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int count,
                      const std::function<void(Rng&, std::function<void(bool, const char*)>&)>& body) {
  SuiteResult r{name, 0, 0, {}};
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    bool good = true;
    std::string what;
    std::function<void(bool, const char*)> check = [&](bool c, const char* label) {
      if (!c && good) {
        good = false;
        what = label;
      }
    };
    try {
      body(rng, check);
    } catch (const std::exception& e) {
      good = false;
      what = std::string("exception: ") + e.what();
    }
    ++r.instances;
    if (!good) {
      ++r.failures;
      if (r.first_failure.empty()) r.first_failure = "instance " + std::to_string(i) + ": " + what;
    }
  }
  return r;
}

Permutation block_swap(int before, int a, int b) {
  Permutation s = Permutation::identity(before + a + b);
  for (int t = 1; t <= a; ++t) s.images[before + t - 1] = before + b + t;
  for (int t = 1; t <= b; ++t) s.images[before + a + t - 1] = before + t;
  return s;
}

Permutation extend(const Permutation& p, int total) {
  Permutation r = Permutation::identity(total);
  for (int i = 1; i <= p.size(); ++i) r.images[i - 1] = p(i);
  return r;
}

Permutation shift_block(const Permutation& p, int offset, int total) {
  Permutation r = Permutation::identity(total);
  for (int i = 1; i <= p.size(); ++i) r.images[offset + i - 1] = offset + p(i);
  return r;
}

const Associator& assoc2() {
  static const Associator a = solve_associator(1, 2).result;
  return a;
}

DKElement comm(const DKElement& a, const DKElement& b) { return dk_add(dk_mul(a, b), dk_scale(dk_mul(b, a), -1)); }

DKElement random_grouplike(Rng& rng, int r, int N) {
  if (r < 2) return dk_one(r, N);
  DKElement x = dk_zero(r, N);
  for (int i = 0; i < 3; ++i) {
    int a = uniform(rng, 1, r - 1), b = uniform(rng, a + 1, r);
    x = dk_add(x, dk_scale(dk_t(r, N, a, b), frac(uniform(rng, -3, 3), 2)));
  }
  int a = uniform(rng, 1, r - 1), b = uniform(rng, a + 1, r);
  int c = uniform(rng, 1, r - 1), d = uniform(rng, c + 1, r);
  x = dk_add(x, dk_scale(comm(dk_t(r, N, a, b), dk_t(r, N, c, d)), frac(uniform(rng, -3, 3), 5)));
  return dk_exp(x);
}

PrimeElement rnd_prime(Rng& rng, int cap, bool needs_open = false) {
  int n = uniform(rng, needs_open ? 1 : 0, cap);
  int m = uniform(rng, 0, cap - n);
  return random_prime(rng, n, m, 4);
}

PaPCDElement rnd_cd(Rng& rng, int cap, bool needs_open = false) {
  PaPCDElement e = apply_phi(assoc2(), rnd_prime(rng, cap, needs_open));
  const int m = e.m();
  if (m >= 2) {
    int i = uniform(rng, 1, m - 1), j = uniform(rng, i + 1, m);
    DKElement tw = dk_exp(dk_scale(dk_t(m, assoc2().N, i, j), frac(uniform(rng, -3, 3), 2)));
    e.alpha = pacd_compose(e.alpha, pacd_make(e.alpha.src, e.alpha.src, tw));
  }
  return e;
}

}  // namespace

SuiteResult copb_axioms(std::uint64_t seed, int count) {
  const CoPBMorphism unit = copb_identity(parse_shuffle_object("[y1]"));
  return run_suite("CoPB", seed, count, [&](Rng& rng, auto& check) {
    int n = uniform(rng, 1, 3), m = uniform(rng, 0, 5 - n);
    CoPBMorphism a = random_copb(rng, n, m, 8);
    int bn = uniform(rng, 1, 2);
    CoPBMorphism b = random_copb(rng, bn, uniform(rng, 0, 5 - bn), 8);
    int cn = uniform(rng, 0, 2);
    CoPBMorphism c = random_copb(rng, cn, uniform(rng, cn == 0 ? 1 : 0, 5 - cn), 8);
    int j = uniform(rng, 1, n), k = uniform(rng, 1, b.n());
    check(copb_equal(copb_insert_open(copb_insert_open(a, j, b), j + k - 1, c),
                     copb_insert_open(a, j, copb_insert_open(b, k, c))),
          "sequential associativity");
    if (n >= 2) {
      int p = uniform(rng, 1, n - 1), q = uniform(rng, p + 1, n);
      CoPBMorphism lhs = copb_insert_open(copb_insert_open(a, q, c), p, b);
      CoPBMorphism rhs = copb_insert_open(copb_insert_open(a, p, b), q + b.n() - 1, c);
      check(copb_equal(copb_relabel(lhs, Permutation::identity(lhs.n()), block_swap(m, c.m(), b.m())), rhs),
            "parallel associativity");
    }
    check(copb_equal(copb_insert_open(unit, 1, a), a), "left unit");
    check(copb_equal(copb_insert_open(a, j, unit), a), "right unit");
    CoPBMorphism a2 = random_copb_from(rng, a.tgt, 8), b2 = random_copb_from(rng, b.tgt, 8);
    check(copb_equal(copb_insert_open(copb_compose(a2, a), j, copb_compose(b2, b)),
                     copb_compose(copb_insert_open(a2, j, b2), copb_insert_open(a, j, b))),
          "functoriality");
    if (m > 0) {
      int i = uniform(rng, 1, m);
      CoBMorphism x = random_cob(rng, uniform(rng, 0, 2), 8), y = random_cob(rng, uniform(rng, 0, 2), 8);
      check(copb_equal(copb_insert_closed(copb_insert_open(a, j, b), i, x),
                       copb_insert_open(copb_insert_closed(a, i, x), j, b)),
            "interchange");
      if (x.arity() > 0) {
        int l = uniform(rng, 1, x.arity());
        check(copb_equal(copb_insert_closed(copb_insert_closed(a, i, x), i + l - 1, y),
                         copb_insert_closed(a, i, cob_insert(x, l, y))),
              "closed associativity");
      }
      check(copb_equal(copb_insert_closed(a, i, CoBMorphism::identity(Permutation::identity(1))), a), "closed unit");
    }
    Permutation so = random_permutation(rng, n), sc = random_permutation(rng, m);
    check(copb_equal(copb_insert_open(copb_relabel(a, so, sc), so(j), b),
                     copb_relabel(copb_insert_open(a, j, b), block_permutation(so, j, b.n()), extend(sc, m + b.m()))),
          "equivariance");
  });
}

SuiteResult prime_axioms(std::uint64_t seed, int count) {
  return run_suite("PaPB'", seed, count, [](Rng& rng, auto& check) {
    PrimeElement a = rnd_prime(rng, 3, true), b = rnd_prime(rng, 3, true), c = rnd_prime(rng, 2);
    int j = uniform(rng, 1, a.n()), k = uniform(rng, 1, b.n());
    check(prime_equal(prime_insert_open(prime_insert_open(a, j, b), j + k - 1, c),
                      prime_insert_open(a, j, prime_insert_open(b, k, c))),
          "sequential associativity");
    check(prime_equal(prime_insert_open(prime_unit(), 1, a), a), "left unit");
    check(prime_equal(prime_insert_open(a, j, prime_unit()), a), "right unit");
    PrimeElement d = random_prime(rng, uniform(rng, 2, 3), uniform(rng, 0, 1), 4);
    int p = uniform(rng, 1, d.n() - 1), q = uniform(rng, p + 1, d.n());
    PrimeElement lhs = prime_insert_open(prime_insert_open(d, q, c), p, b);
    PrimeElement rhs = prime_insert_open(prime_insert_open(d, p, b), q + b.n() - 1, c);
    check(prime_equal(prime_relabel(lhs, Permutation::identity(lhs.n()), block_swap(d.m(), c.m(), b.m())), rhs),
          "parallel associativity");
    if (a.m() > 0) {
      int ci = uniform(rng, 1, a.m());
      PaPBMorphism y = random_papb(rng, 0, uniform(rng, 1, 2), 4, true);
      check(prime_equal(prime_insert_open(prime_insert_closed(a, ci, y), j, b),
                        prime_insert_closed(prime_insert_open(a, j, b), ci, y)),
            "interchange");
    }
    Permutation qo = random_permutation(rng, a.n()), qc = random_permutation(rng, a.m());
    PrimeElement ab = prime_insert_open(a, j, b);
    check(prime_equal(prime_insert_open(prime_relabel(a, qo, qc), qo(j), b),
                      prime_relabel(ab, block_permutation(qo, j, b.n()), extend(qc, a.m() + b.m()))),
          "outer equivariance");
    Permutation po = random_permutation(rng, b.n()), pc = random_permutation(rng, b.m());
    Permutation so = Permutation::identity(ab.n());
    for (int t = 1; t <= b.n(); ++t) so.images[j + t - 2] = j - 1 + po(t);
    check(prime_equal(prime_insert_open(a, j, prime_relabel(b, po, pc)),
                      prime_relabel(ab, so, shift_block(pc, a.m(), a.m() + b.m()))),
          "inner equivariance");
  });
}

SuiteResult cd_axioms(std::uint64_t seed, int count) {
  const int N = 3;
  return run_suite("CD", seed, count, [](Rng& rng, auto& check) {
    int r = uniform(rng, 1, 4), s = uniform(rng, 1, 5 - r), t = uniform(rng, 1, 6 - r - s);
    DKElement a = random_grouplike(rng, r, N), b = random_grouplike(rng, s, N), c = random_grouplike(rng, t, N);
    int i = uniform(rng, 1, r), j = uniform(rng, 1, s);
    check(dk_insert(dk_insert(a, i, b), i + j - 1, c) == dk_insert(a, i, dk_insert(b, j, c)),
          "sequential associativity");
    if (r >= 2) {
      int k = uniform(rng, 1, r - 1), l = uniform(rng, k + 1, r);
      check(dk_insert(dk_insert(a, l, c), k, b) == dk_insert(dk_insert(a, k, b), l + s - 1, c),
            "parallel associativity");
    }
    check(dk_insert(a, i, dk_one(1, N)) == a, "right unit");
    check(dk_insert(dk_one(1, N), 1, a) == a, "left unit");
    check(grouplike_check(dk_insert(a, i, b)), "grouplike");
    Permutation sg = random_permutation(rng, r);
    check(dk_insert(dk_relabel(a, sg), sg(i), b) == dk_relabel(dk_insert(a, i, b), block_permutation(sg, i, s)),
          "equivariance");
  });
}

SuiteResult papcd_axioms(std::uint64_t seed, int count) {
  const Associator& A = assoc2();
  return run_suite("PaPCD", seed, count, [&](Rng& rng, auto& check) {
    PaPCDElement x = rnd_cd(rng, 3, true), y = rnd_cd(rng, 3, true), z = rnd_cd(rng, 2);
    int j = uniform(rng, 1, x.n()), k = uniform(rng, 1, y.n());
    check(papcd_equal(papcd_insert_open(A, papcd_insert_open(A, x, j, y), j + k - 1, z),
                      papcd_insert_open(A, x, j, papcd_insert_open(A, y, k, z))),
          "sequential associativity");
    check(papcd_equal(papcd_insert_open(A, papcd_unit(A.N), 1, z), z), "left unit");
    check(papcd_equal(papcd_insert_open(A, x, j, papcd_unit(A.N)), x), "right unit");
    if (x.m() > 0) {
      int ci = uniform(rng, 1, x.m());
      PaCDMorphism g = lift_phi_tilde(A, random_papb(rng, 0, uniform(rng, 1, 2), 4, true));
      check(papcd_equal(papcd_insert_open(A, papcd_insert_closed(x, ci, g), j, y),
                        papcd_insert_closed(papcd_insert_open(A, x, j, y), ci, g)),
            "interchange");
    }
    Permutation qo = random_permutation(rng, x.n()), qc = random_permutation(rng, x.m());
    check(papcd_equal(papcd_insert_open(A, papcd_relabel(x, qo, qc), qo(j), y),
                      papcd_relabel(papcd_insert_open(A, x, j, y), block_permutation(qo, j, y.n()),
                                    extend(qc, x.m() + y.m()))),
          "equivariance");
  });
}

SuiteResult voronov_axioms(std::uint64_t seed, int count) {
  const CDxPaP V = build_cd_pap_instance(2);
  auto rnd_p = [](Rng& rng, int m) {
    DKElement g = dk_one(m, 2);
    if (m < 2) return g;
    for (int k = uniform(rng, 0, 3); k > 0; --k) {
      int i = uniform(rng, 1, m - 1), j = uniform(rng, i + 1, m);
      g = dk_mul(g, dk_exp(dk_scale(dk_t(m, 2, i, j), frac(uniform(rng, -4, 4), 3))));
    }
    return g;
  };
  auto tree_over = [](Rng& rng, const std::vector<int>& seq) {
    if (seq.empty()) return Tree::unit_c();
    return forget_parenthesization_U(
        random_tree_over(rng, ShuffleObject::make(std::vector<bool>(seq.size(), true), {}, {seq})));
  };
  auto rnd = [&](Rng& rng, int lo_n, int lo_m) {
    int n, m;
    do {
      n = uniform(rng, lo_n, 3);
      m = uniform(rng, lo_m, 3);
    } while (n + m == 0);
    auto seq = random_permutation(rng, n).images;
    return V.make(rnd_p(rng, m), {tree_over(rng, seq), tree_over(rng, seq)});
  };
  return run_suite("Voronov CD x PaP", seed, count, [&](Rng& rng, auto& check) {
    auto a = rnd(rng, 1, 0), b = rnd(rng, 1, 0), c = rnd(rng, 0, 0);
    int j = uniform(rng, 1, V.n(a)), k = uniform(rng, 1, V.n(b));
    check(V.equal(V.insert_open(V.insert_open(a, j, b), j + k - 1, c), V.insert_open(a, j, V.insert_open(b, k, c))),
          "sequential associativity");
    check(V.equal(V.insert_open(V.unit(), 1, a), a), "left unit");
    check(V.equal(V.insert_open(a, j, V.unit()), a), "right unit");
    auto d = rnd(rng, 2, 0);
    int p = uniform(rng, 1, V.n(d) - 1), q = uniform(rng, p + 1, V.n(d));
    auto lhs = V.insert_open(V.insert_open(d, q, c), p, b);
    auto rhs = V.insert_open(V.insert_open(d, p, b), q + V.n(b) - 1, c);
    check(V.equal(V.relabel(lhs, Permutation::identity(V.n(lhs)), block_swap(V.m(d), V.m(c), V.m(b))), rhs),
          "parallel associativity");
    auto e = rnd(rng, 1, 1);
    DKElement x = rnd_p(rng, uniform(rng, 1, 3));
    int ci = uniform(rng, 1, V.m(e)), je = uniform(rng, 1, V.n(e));
    check(V.equal(V.insert_closed(V.insert_open(e, je, b), ci, x), V.insert_open(V.insert_closed(e, ci, x), je, b)),
          "interchange");
    Permutation qo = random_permutation(rng, V.n(a)), qc = random_permutation(rng, V.m(a));
    auto ab = V.insert_open(a, j, b);
    check(V.equal(V.insert_open(V.relabel(a, qo, qc), qo(j), b),
                  V.relabel(ab, block_permutation(qo, j, V.n(b)), extend(qc, V.m(ab)))),
          "equivariance");
  });
}

SuiteResult apply_phi_morphism(std::uint64_t seed, int count) {
  const Associator& A = assoc2();
  return run_suite("apply_phi", seed, count, [&](Rng& rng, auto& check) {
    PrimeElement e = rnd_prime(rng, 3, true), f = rnd_prime(rng, 3);
    int j = uniform(rng, 1, e.n());
    check(papcd_equal(apply_phi(A, prime_insert_open(e, j, f)), papcd_insert_open(A, apply_phi(A, e), j, apply_phi(A, f))),
          "open insertion");
    PrimeElement g = random_prime(rng, uniform(rng, 0, 2), uniform(rng, 1, 2), 4);
    int ci = uniform(rng, 1, g.m());
    PaPBMorphism y = random_papb(rng, 0, uniform(rng, 1, 2), 4, true);
    check(papcd_equal(apply_phi(A, prime_insert_closed(g, ci, y)),
                      papcd_insert_closed(apply_phi(A, g), ci, lift_phi_tilde(A, y))),
          "closed insertion");
  });
}

SuiteResult decomposition_roundtrip(std::uint64_t seed, int count) {
  return run_suite("decomposition", seed, count, [](Rng& rng, auto& check) {
    int total = uniform(rng, 1, 4);
    int n = uniform(rng, 0, total), m = total - n;
    bool closed = n == 0 && uniform(rng, 0, 3) == 0;
    PaPBMorphism y = random_papb(rng, n, m, 6, closed);
    if (!closed) {
      check(papb_equal(recompose(decompose(y)), y), "recompose(decompose)");
      check(papb_equal(recompose(decompose(y, Comb::Right)), y), "recompose(decompose), right comb");
    }
    check(papb_equal(evaluate_papb(to_generator_word(y)), y), "evaluate(to_generator_word)");
    check(papb_equal(evaluate_papb(to_generator_word(y, Comb::Right)), y), "evaluate(to_generator_word), right comb");
  });
}

SuiteResult zeta_exhaustive() {
  SuiteResult r{"zeta exhaustive", 0, 0, {}};
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m) {
      if (n + m == 0) continue;
      // every braid word with at most 4 letters on m strands
      std::vector<BraidWord> words{BraidWord(m)};
      std::vector<BraidWord> frontier{BraidWord(m)};
      for (int len = 1; len <= 4 && m >= 2; ++len) {
        std::vector<BraidWord> next;
        for (auto& w : frontier)
          for (int q = 1; q < m; ++q)
            for (int sgn : {1, -1}) {
              BraidWord v = w;
              v.letters.push_back(sgn * q);
              next.push_back(v);
            }
        words.insert(words.end(), next.begin(), next.end());
        frontier = next;
      }
      for (const ShuffleObject& src : all_shuffle_objects(n, m))
        for (const BraidWord& b : words) {
          Permutation perm = underlying_permutation(b);
          Permutation aer = src.aerial_labels(), moved = aer;
          for (int p = 1; p <= m; ++p) moved.images[perm(p) - 1] = aer(p);
          for (const auto& pat : all_shuffles(n, m)) {
            CoPBMorphism f{src, ShuffleObject::make(pat, src.terrestrial_labels(), moved), b};
            ++r.instances;
            bool good = false;
            try {
              validate(f);
              good = copb_equal(zeta(zeta_inverse(f)), f);
            } catch (const std::exception&) {
            }
            if (!good) {
              ++r.failures;
              if (r.first_failure.empty()) r.first_failure = to_string(src) + " " + format_braid(b);
            }
          }
        }
    }
  return r;
}

SuiteResult zeta_composition(std::uint64_t seed, int count) {
  return run_suite("zeta composition", seed, count, [](Rng& rng, auto& check) {
    CoPBMorphism f = random_copb(rng, uniform(rng, 0, 2), uniform(rng, 0, 3), 4);
    CoPBMorphism g = random_copb_from(rng, f.tgt, 4);
    check(copb_equal(zeta(triple_compose(zeta_inverse(g), zeta_inverse(f))), copb_compose(g, f)), "composition");
  });
}

}  // namespace opgpd
