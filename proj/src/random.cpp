#include "opgpd/random.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace opgpd {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

BraidWord random_braid(Rng& rng, int strands, int max_len) {
  BraidWord b(strands);
  if (strands < 2) return b;
  int len = uniform(rng, 0, max_len);
  for (int i = 0; i < len; ++i) {
    int g = uniform(rng, 1, strands - 1);
    b.letters.push_back(uniform(rng, 0, 1) ? g : -g);
  }
  return b;
}

Permutation random_permutation(Rng& rng, int n) {
  Permutation p = Permutation::identity(n);
  std::shuffle(p.images.begin(), p.images.end(), rng);
  return p;
}

std::vector<bool> random_shuffle_pattern(Rng& rng, int n, int m) {
  std::vector<bool> p(n + m, false);
  std::fill(p.begin() + n, p.end(), true);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

ShuffleObject random_shuffle_object(Rng& rng, int n, int m) {
  return ShuffleObject::make(random_shuffle_pattern(rng, n, m), random_permutation(rng, n),
                             random_permutation(rng, m));
}

CoBMorphism random_cob(Rng& rng, int m, int max_len) {
  CoBMorphism x = CoBMorphism::from_braid(random_braid(rng, m, max_len));
  return cob_relabel(x, random_permutation(rng, m));
}

CoPBMorphism random_copb_from(Rng& rng, const ShuffleObject& src, int max_len) {
  CoPBMorphism x;
  x.src = src;
  x.braid = random_braid(rng, src.m(), max_len);
  CoBMorphism carried = cob_relabel(CoBMorphism::from_braid(x.braid), src.aerial_labels());
  x.tgt = ShuffleObject::make(random_shuffle_pattern(rng, src.n(), src.m()), src.terrestrial_labels(),
                              carried.tgt);
  validate(x);
  return x;
}

CoPBMorphism random_copb(Rng& rng, int n, int m, int max_len) {
  return random_copb_from(rng, random_shuffle_object(rng, n, m), max_len);
}

namespace {

Tree closed_on(Rng& rng, std::vector<int> labels) {
  if (labels.size() == 1) return Tree::x(labels[0]);
  int cut = uniform(rng, 1, static_cast<int>(labels.size()) - 1);
  return Tree::mc(closed_on(rng, {labels.begin(), labels.begin() + cut}),
                  closed_on(rng, {labels.begin() + cut, labels.end()}));
}

// leaves: (aerial?, label) in left-to-right order
Tree open_on(Rng& rng, const std::vector<Point>& leaves) {
  bool all_closed = std::all_of(leaves.begin(), leaves.end(), [](auto& p) { return p.aerial; });
  if (leaves.size() == 1 && !leaves[0].aerial) return Tree::y(leaves[0].label);
  if (all_closed && (leaves.size() == 1 || uniform(rng, 0, 2) == 0)) {
    std::vector<int> l;
    for (auto& p : leaves) l.push_back(p.label);
    return Tree::f(closed_on(rng, l));
  }
  int cut = uniform(rng, 1, static_cast<int>(leaves.size()) - 1);
  return Tree::mo(open_on(rng, {leaves.begin(), leaves.begin() + cut}),
                  open_on(rng, {leaves.begin() + cut, leaves.end()}));
}

}  // namespace

Tree random_closed_tree(Rng& rng, int m) {
  if (m == 0) return Tree::unit_c();
  return closed_on(rng, random_permutation(rng, m).images);
}

Tree random_open_tree(Rng& rng, int n, int m) {
  if (n + m == 0) return Tree::unit_o();
  return open_on(rng, random_shuffle_object(rng, n, m).points);
}

Tree random_tree_over(Rng& rng, const ShuffleObject& s) {
  if (s.points.empty()) return Tree::unit_o();
  return open_on(rng, s.points);
}

PaPBMorphism random_papb(Rng& rng, int n, int m, int max_len, bool closed) {
  if (closed) {
    if (n != 0 || m == 0) throw std::invalid_argument("random_papb: closed output needs (0, m>0)");
    CoBMorphism x = random_cob(rng, m, max_len);
    return papb_make(closed_on(rng, x.src.images), closed_on(rng, x.tgt.images), x.braid);
  }
  CoPBMorphism x = random_copb(rng, n, m, max_len);
  return papb_make(random_tree_over(rng, x.src), random_tree_over(rng, x.tgt), x.braid);
}

PaPBMorphism random_papb_from(Rng& rng, const Tree& src, int max_len) {
  ShuffleObject s = omega_map(src);
  if (src.color() == Color::Closed) {
    CoBMorphism x = cob_relabel(CoBMorphism::from_braid(random_braid(rng, s.m(), max_len)), s.aerial_labels());
    Tree tgt = s.m() == 0 ? Tree::unit_c() : closed_on(rng, x.tgt.images);
    return papb_make(src, tgt, x.braid);
  }
  CoPBMorphism x = random_copb_from(rng, s, max_len);
  return papb_make(src, random_tree_over(rng, x.tgt), x.braid);
}

}  // namespace opgpd
