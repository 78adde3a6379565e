#include "opgpd/papb.hpp"

#include <stdexcept>

namespace opgpd {

namespace {

CoPBMorphism from_cob(const CoBMorphism& x) {
  std::vector<bool> pat(x.arity(), true);
  return {ShuffleObject::make(pat, {}, x.src), ShuffleObject::make(pat, {}, x.tgt), x.braid};
}

}  // namespace

CoBMorphism as_cob(const CoPBMorphism& x) {
  if (x.n() != 0) throw std::invalid_argument("terrestrial points in a closed morphism");
  return {x.src.aerial_labels(), x.tgt.aerial_labels(), x.braid};
}

void validate(const PaPBMorphism& x) {
  validate(x.src);
  validate(x.tgt);
  if (x.src.color() != x.tgt.color()) throw std::invalid_argument("PaPB: endpoint colors differ");
  if (omega_map(x.src) != x.under.src || omega_map(x.tgt) != x.under.tgt)
    throw std::invalid_argument("PaPB: endpoints do not lie over the underlying morphism");
  validate(x.under);
}

bool papb_equal(const PaPBMorphism& a, const PaPBMorphism& b) {
  return a.src == b.src && a.tgt == b.tgt && copb_equal(a.under, b.under);
}

PaPBMorphism papb_identity(const Tree& t) {
  validate(t);
  return {t, t, copb_identity(omega_map(t))};
}

PaPBMorphism papb_compose(const PaPBMorphism& g, const PaPBMorphism& f) {
  if (!(f.tgt == g.src))
    throw std::invalid_argument("PaPB compose: " + to_string(f.tgt) + " vs " + to_string(g.src));
  return {f.src, g.tgt, copb_compose(g.under, f.under)};
}

PaPBMorphism papb_inverse(const PaPBMorphism& f) { return {f.tgt, f.src, copb_inverse(f.under)}; }

PaPBMorphism papb_insert(const PaPBMorphism& outer, Slot slot, const PaPBMorphism& inner) {
  if (inner.color() != slot.color) throw std::invalid_argument("PaPB insert: color mismatch");
  PaPBMorphism r;
  r.src = graft(outer.src, slot, inner.src);
  r.tgt = graft(outer.tgt, slot, inner.tgt);
  if (outer.color() == Color::Closed)
    r.under = from_cob(cob_insert(as_cob(outer.under), slot.label, as_cob(inner.under)));
  else if (slot.color == Color::Closed)
    r.under = copb_insert_closed(outer.under, slot.label, as_cob(inner.under));
  else
    r.under = copb_insert_open(outer.under, slot.label, inner.under);
  validate(r);
  return r;
}

PaPBMorphism papb_relabel(const PaPBMorphism& x, const Permutation& so, const Permutation& sc) {
  return {relabel(x.src, so, sc), relabel(x.tgt, so, sc), copb_relabel(x.under, so, sc)};
}

PaPBMorphism papb_make(const Tree& src, const Tree& tgt, const BraidWord& braid) {
  PaPBMorphism r{src, tgt, {omega_map(src), omega_map(tgt), braid}};
  validate(r);
  return r;
}

std::optional<PaPBMorphism> papb_shuffle_type(const Tree& src, const Tree& tgt) {
  auto s = shuffle_type_morphism(omega_map(src), omega_map(tgt));
  if (!s) return std::nullopt;
  return PaPBMorphism{src, tgt, *s};
}

const std::map<std::string, PaPBMorphism>& generators() {
  static const std::map<std::string, PaPBMorphism> g = [] {
    std::map<std::string, PaPBMorphism> m;
    m["mu_c"] = papb_identity(parse_tree("mc(x1, x2)"));
    m["mu_o"] = papb_identity(parse_tree("mo(y1, y2)"));
    m["f"] = papb_identity(parse_tree("f(x1)"));
    m["tau"] = papb_make(parse_tree("mc(x1, x2)"), parse_tree("mc(x2, x1)"), BraidWord(2, {1}));
    m["alpha_c"] = papb_make(parse_tree("mc(mc(x1, x2), x3)"), parse_tree("mc(x1, mc(x2, x3))"), BraidWord(3));
    m["alpha_o"] = papb_make(parse_tree("mo(mo(y1, y2), y3)"), parse_tree("mo(y1, mo(y2, y3))"), BraidWord(0));
    m["p"] = papb_make(parse_tree("mo(f(x1), f(x2))"), parse_tree("f(mc(x1, x2))"), BraidWord(2));
    m["psi"] = papb_make(parse_tree("mo(f(x1), y1)"), parse_tree("mo(y1, f(x1))"), BraidWord(1));
    return m;
  }();
  return g;
}

Tree left_comb(Kind op, const std::vector<Tree>& atoms) {
  if (atoms.empty()) throw std::invalid_argument("comb over no atoms");
  Tree t = atoms[0];
  for (size_t i = 1; i < atoms.size(); ++i) t = Tree{op, 0, {t, atoms[i]}};
  return t;
}

Tree right_comb(Kind op, const std::vector<Tree>& atoms) {
  if (atoms.empty()) throw std::invalid_argument("comb over no atoms");
  Tree t = atoms.back();
  for (size_t i = atoms.size() - 1; i-- > 0;) t = Tree{op, 0, {atoms[i], t}};
  return t;
}

Tree concatenated_form(const ShuffleObject& s, Comb shape) {
  std::vector<Tree> ys, xs;
  for (int l : s.terrestrial_labels().images) ys.push_back(Tree::y(l));
  for (int l : s.aerial_labels().images) xs.push_back(Tree::x(l));
  auto comb = shape == Comb::Left ? left_comb : right_comb;
  if (ys.empty() && xs.empty()) return Tree::unit_o();
  if (xs.empty()) return comb(Kind::MO, ys);
  Tree fc = Tree::f(comb(Kind::MC, xs));
  if (ys.empty()) return fc;
  return Tree::mo(comb(Kind::MO, ys), fc);
}

namespace {

bool is_concatenated(const Tree& t, int n, int m) {
  if (n == 0 && m == 0) return t.kind == Kind::UnitO;
  if (m == 0) return t.m_closed() == 0 && !t.has_units();
  if (n == 0) return t.kind == Kind::F;
  return t.kind == Kind::MO && t.kids[0].m_closed() == 0 && t.kids[1].kind == Kind::F;
}

}  // namespace

Decomposition decompose(const PaPBMorphism& y, const Tree& x1, const Tree& x2) {
  validate(y);
  if (y.color() != Color::Open) throw std::invalid_argument("decompose: expects an open-output morphism");
  const int n = y.under.n(), m = y.under.m();
  if (!is_concatenated(x1, n, m) || !is_concatenated(x2, n, m))
    throw std::invalid_argument("decompose: intermediate objects must have the form mo(x_o, f(x_c))");
  auto mu = papb_shuffle_type(y.src, x1);
  auto mup = papb_shuffle_type(x2, y.tgt);
  if (!mu || !mup) throw std::invalid_argument("decompose: intermediate objects have the wrong label orders");
  Decomposition d;
  d.mu = *mu;
  d.mu_prime = *mup;
  auto open_part = [&](const Tree& t) { return m == 0 ? t : (n == 0 ? Tree::unit_o() : t.kids[0]); };
  auto closed_part = [&](const Tree& t) { return m == 0 ? Tree::unit_c() : (n == 0 ? t.kids[0] : t.kids[1].kids[0]); };
  Tree o1 = open_part(x1), o2 = open_part(x2), c1 = closed_part(x1), c2 = closed_part(x2);
  // terrestrial strands never cross, so the PaP part carries no braid
  d.x_o = papb_make(o1, o2, BraidWord(0));
  d.x_c = papb_make(c1, c2, y.under.braid);
  return d;
}

Decomposition decompose(const PaPBMorphism& y, Comb shape) {
  return decompose(y, concatenated_form(y.under.src, shape), concatenated_form(y.under.tgt, shape));
}

PaPBMorphism recompose(const Decomposition& d) {
  const int n = d.x_o.src.n_open(), m = d.x_c.src.m_closed();
  PaPBMorphism mid;
  if (n == 0 && m == 0)
    mid = papb_identity(Tree::unit_o());
  else if (m == 0)
    mid = d.x_o;
  else {
    PaPBMorphism fx = papb_insert(generators().at("f"), {Color::Closed, 1}, d.x_c);
    if (n == 0)
      mid = fx;
    else
      mid = papb_insert(papb_insert(generators().at("mu_o"), {Color::Open, 2}, fx), {Color::Open, 1}, d.x_o);
  }
  return papb_compose(d.mu_prime, papb_compose(mid, d.mu));
}

}  // namespace opgpd
