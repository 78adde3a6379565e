#include "opgpd/generator_word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace opgpd {

GenWord GenWord::gen(std::string name, bool inv) {
  GenWord w;
  w.op = Op::Gen;
  w.name = std::move(name);
  w.inv = inv;
  return w;
}

GenWord GenWord::id(Tree t) {
  GenWord w;
  w.op = Op::Id;
  w.tree = std::move(t);
  return w;
}

GenWord GenWord::compose(std::vector<GenWord> ws) {
  if (ws.empty()) throw std::invalid_argument("empty composition");
  std::vector<GenWord> kept;
  for (auto& x : ws)
    if (x.op != Op::Id) kept.push_back(std::move(x));
  if (kept.empty()) return ws.back();
  ws = std::move(kept);
  if (ws.size() == 1) return ws[0];
  GenWord w;
  w.op = Op::Compose;
  for (auto& x : ws) {
    if (x.op == Op::Compose)
      w.args.insert(w.args.end(), x.args.begin(), x.args.end());
    else
      w.args.push_back(std::move(x));
  }
  return w;
}

GenWord GenWord::insert(GenWord outer, Slot slot, GenWord inner) {
  GenWord w;
  w.op = Op::Insert;
  w.slot = slot;
  w.args = {std::move(outer), std::move(inner)};
  return w;
}

GenWord GenWord::relabel(GenWord body, Permutation so, Permutation sc) {
  if (body.op == Op::Relabel) {
    so = so * body.so;
    sc = sc * body.sc;
    GenWord inner = body.args[0];
    return relabel(std::move(inner), std::move(so), std::move(sc));
  }
  GenWord w;
  w.op = Op::Relabel;
  w.so = std::move(so);
  w.sc = std::move(sc);
  w.args = {std::move(body)};
  return w;
}

TreeTarget::Value TreeTarget::gen(const std::string& name, bool inv) {
  const PaPBMorphism& g = generators().at(name);
  return inv ? Value{g.tgt, g.src} : Value{g.src, g.tgt};
}

TreeTarget::Value TreeTarget::compose(const Value& g, const Value& f) {
  if (!(f.second == g.first))
    throw std::invalid_argument("word compose: " + to_string(f.second) + " vs " + to_string(g.first));
  return {f.first, g.second};
}

TreeTarget::Value TreeTarget::insert(const Value& outer, Slot slot, const Value& inner) {
  return {graft(outer.first, slot, inner.first), graft(outer.second, slot, inner.second)};
}

TreeTarget::Value TreeTarget::relabel(const Value& v, const Permutation& so, const Permutation& sc) {
  return {opgpd::relabel(v.first, so, sc), opgpd::relabel(v.second, so, sc)};
}

PaPBTarget::Value PaPBTarget::gen(const std::string& name, bool inv) {
  const PaPBMorphism& g = generators().at(name);
  return inv ? papb_inverse(g) : g;
}

std::pair<Tree, Tree> endpoints(const GenWord& w) {
  TreeTarget t;
  return evaluate(w, t);
}

PaPBMorphism evaluate_papb(const GenWord& w) {
  PaPBTarget t;
  return evaluate(w, t);
}

GenWord word_inverse(const GenWord& w) {
  switch (w.op) {
    case GenWord::Op::Gen: return GenWord::gen(w.name, !w.inv);
    case GenWord::Op::Id: return w;
    case GenWord::Op::Compose: {
      std::vector<GenWord> r;
      for (auto it = w.args.rbegin(); it != w.args.rend(); ++it) r.push_back(word_inverse(*it));
      return GenWord::compose(std::move(r));
    }
    case GenWord::Op::Insert: return GenWord::insert(word_inverse(w.args[0]), w.slot, word_inverse(w.args[1]));
    case GenWord::Op::Relabel: return GenWord::relabel(word_inverse(w.args[0]), w.so, w.sc);
  }
  throw std::logic_error("bad word node");
}

int count_gen(const GenWord& w, const std::string& name) {
  int c = w.op == GenWord::Op::Gen && w.name == name ? 1 : 0;
  for (auto& a : w.args) c += count_gen(a, name);
  return c;
}

int word_size(const GenWord& w) {
  int c = 1;
  for (auto& a : w.args) c += word_size(a);
  return c;
}

namespace {

std::string perm_text(const Permutation& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.images.size(); ++i) s += (i ? " " : "") + std::to_string(p.images[i]);
  return s + ")";
}

struct WordParser {
  const std::string& s;
  size_t pos = 0;

  void ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("word parse error at " + std::to_string(pos) + ": " + what);
  }
  void expect(char c) {
    ws();
    if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  std::string ident() {
    ws();
    size_t b = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' ||
                              s[pos] == '-' || s[pos] == '^' || s[pos] == '*'))
      ++pos;
    if (b == pos) fail("expected a symbol");
    return s.substr(b, pos - b);
  }
  std::string tree_text() {
    std::string t = ident();
    if (pos < s.size() && s[pos] == '(') {
      int depth = 0;
      size_t b = pos;
      do {
        if (pos >= s.size()) fail("unbalanced tree");
        if (s[pos] == '(') ++depth;
        if (s[pos] == ')') --depth;
        ++pos;
      } while (depth > 0);
      t += s.substr(b, pos - b);
    }
    return t;
  }
  int number() {
    ws();
    size_t b = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (b == pos) fail("expected a number");
    return std::stoi(s.substr(b, pos - b));
  }
  Permutation perm() {
    expect('(');
    Permutation p;
    ws();
    while (pos < s.size() && s[pos] != ')') {
      p.images.push_back(number());
      ws();
    }
    expect(')');
    if (!p.is_valid()) fail("not a permutation");
    return p;
  }
  GenWord gen_symbol(std::string name) {
    bool inv = false;
    if (name.size() > 3 && name.substr(name.size() - 3) == "^-1") {
      inv = true;
      name.resize(name.size() - 3);
    }
    if (!generators().count(name)) fail("unknown generator " + name);
    return GenWord::gen(name, inv);
  }
  GenWord expr() {
    ws();
    if (pos < s.size() && s[pos] == '(') {
      ++pos;
      std::string head = ident();
      GenWord w;
      if (head == "id") {
        ws();
        std::string t = tree_text();
        w = generators().count(t) ? GenWord::gen(t) : GenWord::id(parse_tree(t));
      } else if (head == "compose") {
        std::vector<GenWord> parts;
        ws();
        while (pos < s.size() && s[pos] != ')') {
          parts.push_back(expr());
          ws();
        }
        if (parts.empty()) fail("empty compose");
        w = GenWord::compose(std::move(parts));
      } else if (head == "op-insert") {
        GenWord outer = expr();
        int slot = number();
        GenWord inner = expr();
        Color c = endpoints(inner).first.color();
        w = GenWord::insert(std::move(outer), {c, slot}, std::move(inner));
      } else if (head == "relabel") {
        GenWord body = expr();
        Permutation so = perm();
        Permutation sc = perm();
        w = GenWord::relabel(std::move(body), std::move(so), std::move(sc));
      } else {
        fail("unknown form " + head);
      }
      expect(')');
      return w;
    }
    return gen_symbol(ident());
  }
};

void collect_labels(const Tree& t, std::vector<int>& xs, std::vector<int>& ys) {
  if (t.kind == Kind::X) xs.push_back(t.label);
  if (t.kind == Kind::Y) ys.push_back(t.label);
  for (auto& k : t.kids) collect_labels(k, xs, ys);
}

Tree map_labels(const Tree& t, const std::map<int, int>& xs, const std::map<int, int>& ys) {
  Tree r = t;
  if (t.kind == Kind::X) r.label = xs.at(t.label);
  if (t.kind == Kind::Y) r.label = ys.at(t.label);
  for (auto& k : r.kids) k = map_labels(k, xs, ys);
  return r;
}

void match_shape(const Tree& s, const Tree& t, std::vector<int>& so, std::vector<int>& sc) {
  if (s.kind != t.kind || s.kids.size() != t.kids.size())
    throw std::invalid_argument("place: shapes differ: " + to_string(s) + " vs " + to_string(t));
  if (s.kind == Kind::X) sc.at(s.label - 1) = t.label;
  if (s.kind == Kind::Y) so.at(s.label - 1) = t.label;
  for (size_t i = 0; i < s.kids.size(); ++i) match_shape(s.kids[i], t.kids[i], so, sc);
}

void match_pattern(const Tree& g, const Tree& t, std::map<int, Tree>& closed, std::map<int, Tree>& open) {
  if (g.kind == Kind::X || g.kind == Kind::Y) {
    Color want = g.kind == Kind::X ? Color::Closed : Color::Open;
    if (t.color() != want) throw std::invalid_argument("local_apply: color mismatch at " + to_string(t));
    (g.kind == Kind::X ? closed : open)[g.label] = t;
    return;
  }
  if (g.kind != t.kind || g.kids.size() != t.kids.size())
    throw std::invalid_argument("local_apply: " + to_string(t) + " does not match " + to_string(g));
  for (size_t i = 0; i < g.kids.size(); ++i) match_pattern(g.kids[i], t.kids[i], closed, open);
}

bool is_leaf(const Tree& t) { return t.kind == Kind::X || t.kind == Kind::Y; }

// Path to the first node (preorder) satisfying pred.
template <class Pred>
bool find_node(const Tree& t, Pred pred, std::vector<int>& path) {
  if (pred(t)) return true;
  for (size_t i = 0; i < t.kids.size(); ++i) {
    path.push_back(static_cast<int>(i));
    if (find_node(t.kids[i], pred, path)) return true;
    path.pop_back();
  }
  return false;
}

void split_f(WordBuilder& b) {
  for (;;) {
    std::vector<int> path;
    auto pred = [](const Tree& t) { return t.kind == Kind::F && t.kids[0].kind == Kind::MC; };
    if (!find_node(b.current(), pred, path)) return;
    b.apply(path, "p", true);
  }
}

std::vector<Tree> comb_atoms(const Tree& t, Kind op) {
  std::vector<Tree> atoms;
  const Tree* c = &t;
  while (c->kind == op) {
    atoms.push_back(c->kids[1]);
    c = &c->kids[0];
  }
  atoms.push_back(*c);
  std::reverse(atoms.begin(), atoms.end());
  return atoms;
}

std::vector<int> spine(int depth) { return std::vector<int>(std::max(depth, 0), 0); }

// Swaps atoms k, k+1 (1-based) of a left comb with N atoms, using gen on the pair.
void swap_in_comb(WordBuilder& b, int N, int k, const std::string& gen, const std::string& assoc, bool inv) {
  if (k == 1) {
    b.apply(spine(N - 2), gen, inv);
    return;
  }
  std::vector<int> path = spine(N - k - 1);
  b.apply(path, assoc);
  auto inner = path;
  inner.push_back(1);
  b.apply(inner, gen, inv);
  b.apply(path, assoc, true);
}

std::vector<Tree> leaves_of(const Permutation& labels, bool closed) {
  std::vector<Tree> r;
  for (int l : labels.images) r.push_back(closed ? Tree::x(l) : Tree::y(l));
  return r;
}

}  // namespace

std::string to_string(const GenWord& w) {
  switch (w.op) {
    case GenWord::Op::Gen: return w.name + (w.inv ? "^-1" : "");
    case GenWord::Op::Id: return "(id " + to_string(w.tree) + ")";
    case GenWord::Op::Compose: {
      std::string s = "(compose";
      for (auto& a : w.args) s += " " + to_string(a);
      return s + ")";
    }
    case GenWord::Op::Insert:
      return "(op-insert " + to_string(w.args[0]) + " " + std::to_string(w.slot.label) + " " +
             to_string(w.args[1]) + ")";
    case GenWord::Op::Relabel:
      return "(relabel " + to_string(w.args[0]) + " " + perm_text(w.so) + " " + perm_text(w.sc) + ")";
  }
  throw std::logic_error("bad word node");
}

GenWord parse_word(const std::string& s) {
  WordParser p{s};
  GenWord w = p.expr();
  p.ws();
  if (p.pos != s.size()) p.fail("trailing input");
  return w;
}

Tree compress_labels(const Tree& t) {
  std::vector<int> xs, ys;
  collect_labels(t, xs, ys);
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  std::map<int, int> mx, my;
  for (size_t i = 0; i < xs.size(); ++i) mx[xs[i]] = static_cast<int>(i) + 1;
  for (size_t i = 0; i < ys.size(); ++i) my[ys[i]] = static_cast<int>(i) + 1;
  return map_labels(t, mx, my);
}

GenWord place(const GenWord& w, const Tree& t) {
  Tree s = endpoints(w).first;
  std::vector<int> so(s.n_open()), sc(s.m_closed());
  match_shape(s, t, so, sc);
  Permutation pso{so}, psc{sc};
  if (pso == Permutation::identity(pso.size()) && psc == Permutation::identity(psc.size())) return w;
  return GenWord::relabel(w, pso, psc);
}

const Tree& subtree(const Tree& t, const std::vector<int>& path) {
  const Tree* c = &t;
  for (int i : path) c = &c->kids.at(i);
  return *c;
}

GenWord whisker(const Tree& t, const std::vector<int>& path, const GenWord& w) {
  if (path.empty()) return place(w, t);
  std::vector<int> rest(path.begin() + 1, path.end());
  GenWord res;
  switch (t.kind) {
    case Kind::F:
      res = GenWord::insert(GenWord::gen("f"), {Color::Closed, 1}, whisker(compress_labels(t.kids[0]), rest, w));
      break;
    case Kind::MC:
    case Kind::MO: {
      Color c = t.kind == Kind::MC ? Color::Closed : Color::Open;
      auto side = [&](int i) {
        Tree k = compress_labels(t.kids[i]);
        return path[0] == i ? whisker(k, rest, w) : GenWord::id(k);
      };
      res = GenWord::gen(t.kind == Kind::MC ? "mu_c" : "mu_o");
      res = GenWord::insert(res, {c, 2}, side(1));
      res = GenWord::insert(res, {c, 1}, side(0));
      break;
    }
    default: throw std::invalid_argument("whisker: path runs past a leaf");
  }
  return place(res, t);
}

GenWord local_apply(const std::string& gen, bool inv, const Tree& t) {
  GenWord w = GenWord::gen(gen, inv);
  std::map<int, Tree> closed, open;
  match_pattern(endpoints(w).first, t, closed, open);
  for (auto it = closed.rbegin(); it != closed.rend(); ++it)
    if (!is_leaf(it->second)) w = GenWord::insert(w, {Color::Closed, it->first}, GenWord::id(compress_labels(it->second)));
  for (auto it = open.rbegin(); it != open.rend(); ++it)
    if (!is_leaf(it->second)) w = GenWord::insert(w, {Color::Open, it->first}, GenWord::id(compress_labels(it->second)));
  return place(w, t);
}

void WordBuilder::apply(const std::vector<int>& path, const std::string& gen, bool inv) {
  apply_word(path, local_apply(gen, inv, compress_labels(subtree(cur_, path))));
}

void WordBuilder::apply_word(const std::vector<int>& path, const GenWord& w) {
  GenWord full = whisker(cur_, path, w);
  cur_ = endpoints(full).second;
  steps_.push_back(std::move(full));
}

GenWord WordBuilder::word() const {
  if (steps_.empty()) return GenWord::id(start_);
  return GenWord::compose({steps_.rbegin(), steps_.rend()});
}

void to_left_comb(WordBuilder& b) {
  for (;;) {
    std::vector<int> path;
    auto pred = [](const Tree& t) {
      return (t.kind == Kind::MC || t.kind == Kind::MO) && t.kids[1].kind == t.kind;
    };
    if (!find_node(b.current(), pred, path)) return;
    b.apply(path, subtree(b.current(), path).kind == Kind::MC ? "alpha_c" : "alpha_o", true);
  }
}

GenWord reparen_word(const Tree& s, const Tree& t) {
  if (s == t) return GenWord::id(s);
  WordBuilder a(s), b(t);
  to_left_comb(a);
  to_left_comb(b);
  if (!(a.current() == b.current()))
    throw std::invalid_argument("reparen: " + to_string(s) + " and " + to_string(t) + " differ beyond brackets");
  return GenWord::compose({word_inverse(b.word()), a.word()});
}

GenWord shuffle_word(const Tree& u, Comb shape) {
  const ShuffleObject s = omega_map(u);
  const int n = s.n(), m = s.m();
  if (n + m == 0) return GenWord::id(u);
  WordBuilder b(u);
  split_f(b);
  to_left_comb(b);
  const int N = n + m;
  for (;;) {
    auto atoms = comb_atoms(b.current(), Kind::MO);
    int k = 0;
    for (int i = 0; i + 1 < N; ++i)
      if (atoms[i].kind == Kind::F && atoms[i + 1].kind == Kind::Y) {
        k = i + 1;
        break;
      }
    if (k == 0) break;
    swap_in_comb(b, N, k, "psi", "alpha_o", false);
  }
  if (m > 0) {
    std::vector<int> glue_at;
    if (n > 0) {
      auto atoms = comb_atoms(b.current(), Kind::MO);
      std::vector<Tree> ys(atoms.begin(), atoms.begin() + n), fs(atoms.begin() + n, atoms.end());
      Tree target = Tree::mo(left_comb(Kind::MO, ys), left_comb(Kind::MO, fs));
      b.apply_word({}, reparen_word(b.current(), target));
      glue_at = {1};
    }
    WordBuilder g(Tree::f(left_comb(Kind::MC, leaves_of(s.aerial_labels(), true))));
    split_f(g);
    to_left_comb(g);
    if (!(g.current() == subtree(b.current(), glue_at)))
      throw std::logic_error("shuffle_word: aerial block mismatch");
    b.apply_word(glue_at, word_inverse(g.word()));
  }
  Tree goal = concatenated_form(s, shape);
  if (!(b.current() == goal)) b.apply_word({}, reparen_word(b.current(), goal));
  return b.word();
}

GenWord pab_word(const Tree& lc, const BraidWord& braid) {
  WordBuilder b(lc);
  const int m = lc.m_closed();
  for (int letter : braid.letters)
    swap_in_comb(b, m, std::abs(letter), "tau", "alpha_c", letter < 0);
  return b.word();
}

GenWord to_generator_word(const PaPBMorphism& y, Comb shape) {
  validate(y);
  const ShuffleObject& s0 = y.under.src;
  const ShuffleObject& s1 = y.under.tgt;
  if (y.color() == Color::Closed) {
    Tree l0 = left_comb(Kind::MC, leaves_of(s0.aerial_labels(), true));
    Tree l1 = left_comb(Kind::MC, leaves_of(s1.aerial_labels(), true));
    std::vector<GenWord> parts;
    if (shape == Comb::Right) {
      Tree r0 = right_comb(Kind::MC, leaves_of(s0.aerial_labels(), true));
      Tree r1 = right_comb(Kind::MC, leaves_of(s1.aerial_labels(), true));
      parts = {reparen_word(r1, y.tgt), reparen_word(l1, r1), pab_word(l0, y.under.braid),
               reparen_word(r0, l0), reparen_word(y.src, r0)};
    } else {
      parts = {reparen_word(l1, y.tgt), pab_word(l0, y.under.braid), reparen_word(y.src, l0)};
    }
    return GenWord::compose(std::move(parts));
  }
  const int n = s0.n(), m = s0.m();
  Tree c0 = concatenated_form(s0, Comb::Left);
  GenWord mid = GenWord::id(c0);
  if (m > 0) {
    Tree lc = left_comb(Kind::MC, leaves_of(s0.aerial_labels(), true));
    GenWord fw = GenWord::insert(GenWord::gen("f"), {Color::Closed, 1}, pab_word(lc, y.under.braid));
    if (n > 0) {
      GenWord w = GenWord::insert(GenWord::gen("mu_o"), {Color::Open, 2}, fw);
      w = GenWord::insert(w, {Color::Open, 1}, GenWord::id(c0.kids[0]));
      mid = place(w, c0);
    } else {
      mid = place(fw, c0);
    }
  }
  Tree c1 = concatenated_form(s1, Comb::Left);
  std::vector<GenWord> parts;
  if (shape == Comb::Right) {
    Tree r0 = concatenated_form(s0, Comb::Right), r1 = concatenated_form(s1, Comb::Right);
    parts = {word_inverse(shuffle_word(y.tgt, shape)), reparen_word(c1, r1), mid, reparen_word(r0, c0),
             shuffle_word(y.src, shape)};
  } else {
    parts = {word_inverse(shuffle_word(y.tgt, shape)), mid, shuffle_word(y.src, shape)};
  }
  return GenWord::compose(std::move(parts));
}

namespace {

struct Step {
  std::vector<int> path;
  std::string gen;
  bool inv = false;
};

GenWord path_word(const std::string& start, const std::vector<Step>& steps) {
  WordBuilder b(parse_tree(start));
  for (auto& s : steps) b.apply(s.path, s.gen, s.inv);
  return b.word();
}

Diagram diagram(const std::string& family, const std::string& start, const std::vector<Step>& lhs,
                const std::vector<Step>& rhs) {
  return {family, path_word(start, lhs), path_word(start, rhs)};
}

}  // namespace

const std::vector<Diagram>& coherence_diagrams() {
  static const std::vector<Diagram> d = [] {
    std::vector<Diagram> r;
    r.push_back(diagram("pentagon_c", "mc(mc(mc(x1, x2), x3), x4)", {{{}, "alpha_c"}, {{}, "alpha_c"}},
                        {{{0}, "alpha_c"}, {{}, "alpha_c"}, {{1}, "alpha_c"}}));
    r.push_back(diagram("pentagon_o", "mo(mo(mo(y1, y2), y3), y4)", {{{}, "alpha_o"}, {{}, "alpha_o"}},
                        {{{0}, "alpha_o"}, {{}, "alpha_o"}, {{1}, "alpha_o"}}));
    r.push_back(diagram("hexagon_1", "mc(mc(x1, x2), x3)", {{{}, "alpha_c"}, {{}, "tau"}, {{}, "alpha_c"}},
                        {{{0}, "tau"}, {{}, "alpha_c"}, {{1}, "tau"}}));
    r.push_back(diagram("hexagon_2", "mc(x1, mc(x2, x3))",
                        {{{}, "alpha_c", true}, {{}, "tau"}, {{}, "alpha_c", true}},
                        {{{1}, "tau"}, {{}, "alpha_c", true}, {{0}, "tau"}}));
    r.push_back(diagram("f_monoidal", "mo(mo(f(x1), f(x2)), f(x3))", {{{0}, "p"}, {{}, "p"}, {{0}, "alpha_c"}},
                        {{{}, "alpha_o"}, {{1}, "p"}, {{}, "p"}}));
    r.push_back(diagram("f_center", "mo(mo(f(x1), y1), y2)", {{{}, "alpha_o"}, {{}, "psi"}, {{}, "alpha_o"}},
                        {{{0}, "psi"}, {{}, "alpha_o"}, {{1}, "psi"}}));
    r.push_back(diagram("f_braided", "mo(f(x1), f(x2))", {{{}, "psi"}, {{}, "p"}}, {{{}, "p"}, {{0}, "tau"}}));
    r.push_back(diagram("f_monoid_center", "mo(f(x1), mo(f(x2), y1))",
                        {{{1}, "psi"}, {{}, "alpha_o", true}, {{0}, "psi"}},
                        {{{}, "alpha_o", true}, {{0}, "p"}, {{}, "psi"}, {{1}, "p", true}, {{}, "alpha_o", true}}));
    return r;
  }();
  return d;
}

std::vector<DiagramResult> coherence_selftest() {
  std::vector<DiagramResult> out;
  for (auto& d : coherence_diagrams())
    out.push_back({d.family, papb_equal(evaluate_papb(d.lhs), evaluate_papb(d.rhs))});
  return out;
}

}  // namespace opgpd
