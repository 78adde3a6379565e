#include "opgpd/mixed_model.hpp"

#include <stdexcept>

namespace opgpd {

namespace {

Tree open_to_units(const Tree& t) {
  if (t.kind == Kind::Y) return Tree::unit_o();
  Tree r = t;
  for (auto& k : r.kids) k = open_to_units(k);
  return r;
}

Tree flatten_rec(const Tree& t, int n) {
  switch (t.kind) {
    case Kind::Y: return Tree::x(t.label);
    case Kind::X: return Tree::x(n + t.label);
    case Kind::F: return flatten_rec(t.kids[0], n);
    case Kind::MO:
    case Kind::MC: return Tree::mc(flatten_rec(t.kids[0], n), flatten_rec(t.kids[1], n));
    default: return Tree::unit_c();
  }
}

bool closed_magma(const Tree& t) {
  if (t.kind == Kind::X || t.kind == Kind::UnitC) return true;
  if (t.kind != Kind::MC) return false;
  return closed_magma(t.kids[0]) && closed_magma(t.kids[1]);
}

std::vector<int> filter(const std::vector<int>& v, int n, bool shifted) {
  std::vector<int> r;
  for (int a : v)
    if ((a <= n) == shifted) r.push_back(a);
  return r;
}

const Permutation kNone{};

// Final relabeling after filling the shifted slots of rho: the inner block sits at 1..l.
Permutation after_fill(int s, int l) {
  Permutation p = Permutation::identity(s + l);
  for (int a = 1; a <= l; ++a) p.images[a - 1] = s + a;
  for (int a = l + 1; a <= l + s; ++a) p.images[a - 1] = a - l;
  return p;
}

void check_sides(const Tree& u_src, const Tree& u_tgt, const Tree& mu_src, const Tree& mu_tgt,
                 const Tree& x_src, const Tree& x_tgt) {
  validate(mu_src);
  validate(mu_tgt);
  validate(u_src);
  validate(u_tgt);
  if (mu_src.color() != Color::Open || mu_tgt.color() != Color::Open)
    throw std::invalid_argument("mixed: shuffle part must have open output");
  if (!closed_magma(u_src) || !closed_magma(u_tgt)) throw std::invalid_argument("mixed: u must be a closed magma tree");
  const auto t = open_leaves(mu_src);
  if (closed_leaves(u_src) != t || closed_leaves(u_tgt) != t || open_leaves(mu_tgt) != t)
    throw std::invalid_argument("mixed: terrestrial orders disagree");
  if ((u_src.kind == Kind::UnitC) != t.empty() || (u_tgt.kind == Kind::UnitC) != t.empty())
    throw std::invalid_argument("mixed: unit mismatch in u");
  if (!(x_src == aerial_shadow(mu_src)) || !(x_tgt == aerial_shadow(mu_tgt)))
    throw std::invalid_argument("mixed: object condition U(mu(*o, ..., *o)) = x fails");
}

PaCDMorphism pacd_mc(const PaCDMorphism& a, const PaCDMorphism& b, int N) {
  return pacd_insert(pacd_insert(pacd_identity(parse_tree("mc(x1, x2)"), N), 2, b), 1, a);
}

}  // namespace

Tree aerial_shadow(const Tree& mu) { return forget_parenthesization_U(normalize_units(open_to_units(mu))); }

Tree flatten_shifted(const Tree& mu) { return normalize_units(flatten_rec(mu, mu.n_open())); }

PaPBMorphism shifted_shuffle(const Tree& src, const Tree& tgt, int n) {
  std::vector<int> cur = closed_leaves(src);
  const std::vector<int> want = closed_leaves(tgt);
  if (cur.size() != want.size() || filter(cur, n, true) != filter(want, n, true) ||
      filter(cur, n, false) != filter(want, n, false))
    throw std::invalid_argument("shifted shuffle: orders of the two kinds differ");
  std::vector<int> letters;
  for (size_t t = 0; t < want.size(); ++t) {
    size_t p = t;
    while (cur[p] != want[t]) ++p;
    for (; p > t; --p) {
      const int q = static_cast<int>(p);  // strand at q+1 (1-based) moves to q
      letters.push_back(cur[p] > n ? -q : q);
      std::swap(cur[p], cur[p - 1]);
    }
  }
  return papb_make(src, tgt, BraidWord(static_cast<int>(want.size()), letters));
}

bool shifted_strands_pass_under(const BraidWord& b, const std::vector<int>& src_labels, int n) {
  std::vector<int> cur = src_labels;
  for (int l : b.letters) {
    const int q = std::abs(l);
    if ((l > 0 ? cur[q - 1] : cur[q]) <= n) return false;
    std::swap(cur[q - 1], cur[q]);
  }
  return true;
}

void validate(const PrimeElement& e) {
  validate(e.x);
  if (e.x.color() != Color::Closed) throw std::invalid_argument("mixed: x must have closed output");
  check_sides(e.u_src, e.u_tgt, e.mu_src, e.mu_tgt, e.x.src, e.x.tgt);
}

void validate(const PaPCDElement& e) {
  check_sides(e.u_src, e.u_tgt, e.mu_src, e.mu_tgt, e.alpha.src, e.alpha.tgt);
  if (e.alpha.g.r != e.m()) throw std::invalid_argument("mixed: chord part on the wrong number of strands");
}

bool prime_equal(const PrimeElement& a, const PrimeElement& b) {
  return a.u_src == b.u_src && a.u_tgt == b.u_tgt && a.mu_src == b.mu_src && a.mu_tgt == b.mu_tgt &&
         papb_equal(a.x, b.x);
}

bool papcd_equal(const PaPCDElement& a, const PaPCDElement& b) {
  return a.u_src == b.u_src && a.u_tgt == b.u_tgt && a.mu_src == b.mu_src && a.mu_tgt == b.mu_tgt &&
         pacd_equal(a.alpha, b.alpha);
}

PrimeElement prime_object(const Tree& u, const Tree& mu) {
  PrimeElement e{u, u, papb_identity(aerial_shadow(mu)), mu, mu};
  validate(e);
  return e;
}

PrimeElement prime_make(const Tree& u_src, const Tree& u_tgt, const BraidWord& b, const Tree& mu_src,
                        const Tree& mu_tgt) {
  PrimeElement e{u_src, u_tgt, papb_make(aerial_shadow(mu_src), aerial_shadow(mu_tgt), b), mu_src, mu_tgt};
  validate(e);
  return e;
}

PrimeElement prime_identity(const PrimeElement& e) { return prime_object(e.u_src, e.mu_src); }

PrimeElement prime_unit() { return prime_object(Tree::x(1), Tree::y(1)); }

PrimeElement prime_vcompose(const PrimeElement& g, const PrimeElement& f) {
  if (!(f.u_tgt == g.u_src) || !(f.mu_tgt == g.mu_src)) throw std::invalid_argument("mixed compose: not composable");
  PrimeElement r{f.u_src, g.u_tgt, papb_compose(g.x, f.x), f.mu_src, g.mu_tgt};
  validate(r);
  return r;
}

PrimeElement prime_relabel(const PrimeElement& e, const Permutation& so, const Permutation& sc) {
  PrimeElement r{relabel(e.u_src, kNone, so), relabel(e.u_tgt, kNone, so), papb_relabel(e.x, kNone, sc),
                 relabel(e.mu_src, so, sc), relabel(e.mu_tgt, so, sc)};
  validate(r);
  return r;
}

Shifted<PaPBMorphism> rho(const PrimeElement& e) {
  const int n = e.n(), m = e.m();
  PaPBMorphism iota = papb_make(e.u_src, e.u_tgt, BraidWord(n));
  PaPBMorphism mid = papb_insert(papb_insert(generators().at("mu_c"), {Color::Closed, 2}, e.x),
                                 {Color::Closed, 1}, iota);
  PaPBMorphism s0 = shifted_shuffle(flatten_shifted(e.mu_src), mid.src, n);
  PaPBMorphism s1 = shifted_shuffle(mid.tgt, flatten_shifted(e.mu_tgt), n);
  return {n, m, papb_compose(s1, papb_compose(mid, s0))};
}

PrimeElement prime_insert_closed(const PrimeElement& e, int i, const PaPBMorphism& y) {
  Slot s{Color::Closed, i};
  PrimeElement r{e.u_src, e.u_tgt, papb_insert(e.x, s, y), graft(e.mu_src, s, y.src), graft(e.mu_tgt, s, y.tgt)};
  validate(r);
  return r;
}

PrimeElement prime_insert_open(const PrimeElement& e, int j, const PrimeElement& in) {
  const int r = e.n(), s = e.m(), l = in.m();
  if (j < 1 || j > r) throw std::out_of_range("mixed insert: open slot out of range");
  PaPBMorphism R = rho(e).payload;
  const PaPBMorphism unit = papb_identity(Tree::unit_c());
  for (int t = r; t >= 1; --t) R = papb_insert(R, {Color::Closed, t}, t == j ? in.x : unit);
  R = papb_relabel(R, kNone, after_fill(s, l));
  Slot so{Color::Open, j}, sc{Color::Closed, j};
  PrimeElement out{graft(e.u_src, sc, in.u_src), graft(e.u_tgt, sc, in.u_tgt), R, graft(e.mu_src, so, in.mu_src),
                   graft(e.mu_tgt, so, in.mu_tgt)};
  validate(out);
  return out;
}

PrimeElement compose_prime(const PrimeElement& e, const std::vector<PrimeElement>& inners) {
  if (static_cast<int>(inners.size()) != e.n()) throw std::invalid_argument("mixed compose: arity mismatch");
  PrimeElement r = e;
  int pos = 1;
  for (const auto& in : inners) {
    r = prime_insert_open(r, pos, in);
    pos += in.n();
  }
  return r;
}

CoPBMorphism to_copb(const PrimeElement& e) {
  CoPBMorphism c{omega_map(e.mu_src), omega_map(e.mu_tgt), e.x.under.braid};
  validate(c);
  return c;
}

PaCDMorphism lift_phi_unitary(const Associator& a, const PaPBMorphism& y) {
  if (y.src.kind == Kind::UnitC) return pacd_identity(y.src, a.N);
  return lift_phi_tilde(a, y);
}

PaPCDElement apply_phi(const Associator& a, const PrimeElement& e) {
  PaPCDElement r{e.u_src, e.u_tgt, lift_phi_unitary(a, e.x), e.mu_src, e.mu_tgt};
  validate(r);
  return r;
}

PaPCDElement papcd_unit(int N) {
  return {Tree::x(1), Tree::x(1), pacd_identity(Tree::unit_c(), N), Tree::y(1), Tree::y(1)};
}

PaPCDElement papcd_relabel(const PaPCDElement& e, const Permutation& so, const Permutation& sc) {
  PaPCDElement r{relabel(e.u_src, kNone, so), relabel(e.u_tgt, kNone, so), pacd_relabel(e.alpha, sc),
                 relabel(e.mu_src, so, sc), relabel(e.mu_tgt, so, sc)};
  validate(r);
  return r;
}

Shifted<PaCDMorphism> rho_phi(const Associator& a, const PaPCDElement& e) {
  const int n = e.n(), m = e.m();
  PaCDMorphism iota = lift_phi_unitary(a, papb_make(e.u_src, e.u_tgt, BraidWord(n)));
  PaCDMorphism mid = pacd_mc(iota, e.alpha, a.N);
  PaCDMorphism s0 = lift_phi_unitary(a, shifted_shuffle(flatten_shifted(e.mu_src), mid.src, n));
  PaCDMorphism s1 = lift_phi_unitary(a, shifted_shuffle(mid.tgt, flatten_shifted(e.mu_tgt), n));
  return {n, m, pacd_compose(s1, pacd_compose(mid, s0))};
}

PaPCDElement papcd_insert_closed(const PaPCDElement& e, int i, const PaCDMorphism& y) {
  Slot s{Color::Closed, i};
  PaPCDElement r{e.u_src, e.u_tgt, pacd_insert(e.alpha, i, y), graft(e.mu_src, s, y.src), graft(e.mu_tgt, s, y.tgt)};
  validate(r);
  return r;
}

PaPCDElement papcd_insert_open(const Associator& a, const PaPCDElement& e, int j, const PaPCDElement& in) {
  const int r = e.n(), s = e.m(), l = in.m();
  if (j < 1 || j > r) throw std::out_of_range("mixed insert: open slot out of range");
  PaCDMorphism R = rho_phi(a, e).payload;
  const PaCDMorphism unit = pacd_identity(Tree::unit_c(), a.N);
  for (int t = r; t >= 1; --t) R = pacd_insert(R, t, t == j ? in.alpha : unit);
  R = pacd_relabel(R, after_fill(s, l));
  Slot so{Color::Open, j}, sc{Color::Closed, j};
  PaPCDElement out{graft(e.u_src, sc, in.u_src), graft(e.u_tgt, sc, in.u_tgt), R, graft(e.mu_src, so, in.mu_src),
                   graft(e.mu_tgt, so, in.mu_tgt)};
  validate(out);
  return out;
}

PaPCDElement compose_papcd(const Associator& a, const PaPCDElement& e, const std::vector<PaPCDElement>& inners) {
  if (static_cast<int>(inners.size()) != e.n()) throw std::invalid_argument("mixed compose: arity mismatch");
  PaPCDElement r = e;
  int pos = 1;
  for (const auto& in : inners) {
    r = papcd_insert_open(a, r, pos, in);
    pos += in.n();
  }
  return r;
}

namespace {

nlohmann::json ends(const Tree& a, const Tree& b) { return {{"src", to_string(a)}, {"tgt", to_string(b)}}; }

}  // namespace

nlohmann::json prime_to_json(const PrimeElement& e) {
  nlohmann::json x = ends(e.x.src, e.x.tgt);
  x["braid"] = braid_to_json(e.x.under.braid);
  return {{"u", ends(e.u_src, e.u_tgt)}, {"x", x}, {"mu", ends(e.mu_src, e.mu_tgt)}};
}

PrimeElement prime_from_json(const nlohmann::json& j) {
  const auto& u = j.at("u");
  const auto& mu = j.at("mu");
  Tree ms = parse_tree(mu.at("src").get<std::string>()), mt = parse_tree(mu.at("tgt").get<std::string>());
  BraidWord b = j.contains("x") && j.at("x").contains("braid") ? braid_from_json(j.at("x").at("braid"))
                                                                 : BraidWord(ms.m_closed());
  return prime_make(parse_tree(u.at("src").get<std::string>()), parse_tree(u.at("tgt").get<std::string>()), b, ms, mt);
}

namespace {

Tree random_closed_over(Rng& rng, const std::vector<int>& seq) {
  if (seq.empty()) return Tree::unit_c();
  return forget_parenthesization_U(
      random_tree_over(rng, ShuffleObject::make(std::vector<bool>(seq.size(), true), {}, {seq})));
}

}  // namespace

PrimeElement random_prime_from(Rng& rng, const Tree& u_src, const Tree& mu_src, int max_len) {
  const int n = mu_src.n_open(), m = mu_src.m_closed();
  const auto terr = open_leaves(mu_src);
  const auto aer = closed_leaves(aerial_shadow(mu_src));
  BraidWord b = random_braid(rng, m, max_len);
  const Permutation pos = underlying_permutation(b);
  std::vector<int> after(m);
  for (int p = 1; p <= m; ++p) after[pos(p) - 1] = aer[p - 1];
  Tree mu_tgt = n + m == 0 ? Tree::unit_o()
                           : random_tree_over(rng, ShuffleObject::make(random_shuffle_pattern(rng, n, m), {terr}, {after}));
  return prime_make(u_src, random_closed_over(rng, terr), b, mu_src, mu_tgt);
}

PrimeElement random_prime(Rng& rng, int n, int m, int max_len) {
  Tree mu_src = random_open_tree(rng, n, m);
  return random_prime_from(rng, random_closed_over(rng, open_leaves(mu_src)), mu_src, max_len);
}

nlohmann::json papcd_to_json(const PaPCDElement& e) {
  nlohmann::json x = ends(e.alpha.src, e.alpha.tgt);
  x["series"] = dk_to_json(e.alpha.g);
  return {{"u", ends(e.u_src, e.u_tgt)}, {"x", x}, {"mu", ends(e.mu_src, e.mu_tgt)}};
}

}  // namespace opgpd
