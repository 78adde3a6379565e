#include "opgpd/trees.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace opgpd {

Color Tree::color() const {
  switch (kind) {
    case Kind::MC:
    case Kind::UnitC:
    case Kind::X:
      return Color::Closed;
    default:
      return Color::Open;
  }
}

int Tree::n_open() const {
  if (kind == Kind::Y) return 1;
  int s = 0;
  for (auto& k : kids) s += k.n_open();
  return s;
}

int Tree::m_closed() const {
  if (kind == Kind::X) return 1;
  int s = 0;
  for (auto& k : kids) s += k.m_closed();
  return s;
}

bool Tree::has_units() const {
  if (kind == Kind::UnitC || kind == Kind::UnitO) return true;
  for (auto& k : kids)
    if (k.has_units()) return true;
  return false;
}

bool Tree::operator<(const Tree& o) const {
  if (kind != o.kind) return kind < o.kind;
  if (label != o.label) return label < o.label;
  return std::lexicographical_compare(kids.begin(), kids.end(), o.kids.begin(), o.kids.end());
}

namespace {

void check_colors(const Tree& t) {
  auto need = [](const Tree& k, Color c) {
    if (k.color() != c) throw std::invalid_argument("color discipline violated at " + to_string(k));
  };
  switch (t.kind) {
    case Kind::MC:
      if (t.kids.size() != 2) throw std::invalid_argument("mc needs two children");
      need(t.kids[0], Color::Closed);
      need(t.kids[1], Color::Closed);
      break;
    case Kind::MO:
      if (t.kids.size() != 2) throw std::invalid_argument("mo needs two children");
      need(t.kids[0], Color::Open);
      need(t.kids[1], Color::Open);
      break;
    case Kind::F:
      if (t.kids.size() != 1) throw std::invalid_argument("f needs one child");
      need(t.kids[0], Color::Closed);
      break;
    default:
      if (!t.kids.empty()) throw std::invalid_argument("leaf with children");
  }
  for (auto& k : t.kids) check_colors(k);
}

bool is_bijection(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != static_cast<int>(i) + 1) return false;
  return true;
}

}  // namespace

void validate(const Tree& t, bool allow_units) {
  check_colors(t);
  if (!allow_units && t.has_units()) throw std::invalid_argument("unit leaves not allowed");
  if (!is_bijection(closed_leaves(t))) throw std::invalid_argument("closed labels not a bijection");
  if (!is_bijection(open_leaves(t))) throw std::invalid_argument("open labels not a bijection");
}

namespace {

struct TreeParser {
  const std::string& s;
  size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  void expect(char c) {
    ws();
    if (i >= s.size() || s[i] != c) throw std::invalid_argument(std::string("expected '") + c + "' in tree: " + s);
    ++i;
  }
  Tree parse() {
    ws();
    if (i >= s.size()) throw std::invalid_argument("unexpected end of tree text");
    if (s.compare(i, 2, "*c") == 0) { i += 2; return Tree::unit_c(); }
    if (s.compare(i, 2, "*o") == 0) { i += 2; return Tree::unit_o(); }
    if (s.compare(i, 2, "mc") == 0 || s.compare(i, 2, "mo") == 0) {
      bool closed = s[i + 1] == 'c';
      i += 2;
      expect('(');
      Tree a = parse();
      expect(',');
      Tree b = parse();
      expect(')');
      return closed ? Tree::mc(a, b) : Tree::mo(a, b);
    }
    if (s[i] == 'f') {
      ++i;
      expect('(');
      Tree a = parse();
      expect(')');
      return Tree::f(a);
    }
    if (s[i] == 'x' || s[i] == 'y') {
      char c = s[i++];
      size_t j = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (j == i) throw std::invalid_argument("leaf without label in tree: " + s);
      int l = std::stoi(s.substr(j, i - j));
      return c == 'x' ? Tree::x(l) : Tree::y(l);
    }
    throw std::invalid_argument("unexpected character in tree: " + s);
  }
};

}  // namespace

Tree parse_tree(const std::string& s) {
  TreeParser p{s};
  Tree t = p.parse();
  p.ws();
  if (p.i != s.size()) throw std::invalid_argument("trailing text in tree: " + s);
  validate(t);
  return t;
}

std::string to_string(const Tree& t) {
  switch (t.kind) {
    case Kind::X: return "x" + std::to_string(t.label);
    case Kind::Y: return "y" + std::to_string(t.label);
    case Kind::UnitC: return "*c";
    case Kind::UnitO: return "*o";
    case Kind::F: return "f(" + to_string(t.kids[0]) + ")";
    case Kind::MC: return "mc(" + to_string(t.kids[0]) + ", " + to_string(t.kids[1]) + ")";
    case Kind::MO: return "mo(" + to_string(t.kids[0]) + ", " + to_string(t.kids[1]) + ")";
  }
  return "?";
}

Tree normalize_units(const Tree& t) {
  if (t.kids.empty()) return t;
  Tree r = t;
  for (auto& k : r.kids) k = normalize_units(k);
  if (r.kind == Kind::F && r.kids[0].kind == Kind::UnitC) return Tree::unit_o();
  if (r.kind == Kind::MC || r.kind == Kind::MO) {
    Kind unit = r.kind == Kind::MC ? Kind::UnitC : Kind::UnitO;
    if (r.kids[0].kind == unit) return r.kids[1];
    if (r.kids[1].kind == unit) return r.kids[0];
  }
  return r;
}

namespace {

void shift_labels(Tree& t, int dx_from, int dx, int dy_from, int dy) {
  if (t.kind == Kind::X && t.label > dx_from) t.label += dx;
  if (t.kind == Kind::Y && t.label > dy_from) t.label += dy;
  for (auto& k : t.kids) shift_labels(k, dx_from, dx, dy_from, dy);
}

bool substitute(Tree& t, Kind leaf, int label, const Tree& inner) {
  if (t.kind == leaf && t.label == label) {
    t = inner;
    return true;
  }
  for (auto& k : t.kids)
    if (substitute(k, leaf, label, inner)) return true;
  return false;
}

}  // namespace

Tree graft(const Tree& outer, Slot slot, const Tree& inner) {
  const int n = outer.n_open(), m = outer.m_closed();
  if (slot.color != inner.color()) throw std::invalid_argument("graft: color mismatch");
  const Kind leaf = slot.color == Color::Closed ? Kind::X : Kind::Y;
  const int range = slot.color == Color::Closed ? m : n;
  if (slot.label < 1 || slot.label > range) throw std::out_of_range("graft: slot out of range");
  Tree out = outer, in = inner;
  // park the slot on label 0 so that relabeling cannot collide with it
  substitute(out, leaf, slot.label, Tree{leaf, 0, {}});
  if (slot.color == Color::Closed) {
    shift_labels(out, slot.label, inner.m_closed() - 1, n, 0);
    shift_labels(in, 0, slot.label - 1, 0, 0);
  } else {
    shift_labels(out, m, 0, slot.label, inner.n_open() - 1);
    shift_labels(in, 0, m, 0, slot.label - 1);
  }
  substitute(out, leaf, 0, in);
  return normalize_units(out);
}

Tree relabel(const Tree& t, const Permutation& so, const Permutation& sc) {
  Tree r = t;
  if (r.kind == Kind::X) r.label = sc(r.label);
  if (r.kind == Kind::Y) r.label = so(r.label);
  for (auto& k : r.kids) k = relabel(k, so, sc);
  return r;
}

static void collect(const Tree& t, Kind k, std::vector<int>& out) {
  if (t.kind == k) out.push_back(t.label);
  for (auto& c : t.kids) collect(c, k, out);
}

std::vector<int> closed_leaves(const Tree& t) {
  std::vector<int> v;
  collect(t, Kind::X, v);
  return v;
}

std::vector<int> open_leaves(const Tree& t) {
  std::vector<int> v;
  collect(t, Kind::Y, v);
  return v;
}

int ShuffleObject::n() const {
  return static_cast<int>(std::count_if(points.begin(), points.end(), [](auto& p) { return !p.aerial; }));
}

int ShuffleObject::m() const { return static_cast<int>(points.size()) - n(); }

std::vector<bool> ShuffleObject::pattern() const {
  std::vector<bool> v;
  for (auto& p : points) v.push_back(p.aerial);
  return v;
}

Permutation ShuffleObject::terrestrial_labels() const {
  Permutation p;
  for (auto& q : points)
    if (!q.aerial) p.images.push_back(q.label);
  return p;
}

Permutation ShuffleObject::aerial_labels() const {
  Permutation p;
  for (auto& q : points)
    if (q.aerial) p.images.push_back(q.label);
  return p;
}

int ShuffleObject::index_of(bool aerial, int label) const {
  for (size_t i = 0; i < points.size(); ++i)
    if (points[i].aerial == aerial && points[i].label == label) return static_cast<int>(i);
  throw std::out_of_range("point not found in shuffle object");
}

bool ShuffleObject::is_valid() const {
  return terrestrial_labels().is_valid() && aerial_labels().is_valid();
}

ShuffleObject ShuffleObject::make(const std::vector<bool>& pattern, const Permutation& terr,
                                  const Permutation& aer) {
  ShuffleObject s;
  int a = 0, t = 0;
  for (bool b : pattern) s.points.push_back({b, b ? aer.images.at(a++) : terr.images.at(t++)});
  if (a != aer.size() || t != terr.size()) throw std::invalid_argument("shuffle pattern size mismatch");
  return s;
}

std::string to_string(const ShuffleObject& s) {
  std::string r = "[";
  for (size_t i = 0; i < s.points.size(); ++i) {
    if (i) r += ' ';
    r += (s.points[i].aerial ? 'x' : 'y') + std::to_string(s.points[i].label);
  }
  return r + "]";
}

ShuffleObject parse_shuffle_object(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != '[' && c != ']' && c != ',') t += c;
  std::istringstream in(t);
  std::string tok;
  ShuffleObject s;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'y'))
      throw std::invalid_argument("bad point: " + tok);
    s.points.push_back({tok[0] == 'x', std::stoi(tok.substr(1))});
  }
  if (!s.is_valid()) throw std::invalid_argument("labels are not bijective: " + text);
  return s;
}

nlohmann::json shuffle_to_json(const ShuffleObject& s) { return to_string(s); }

ShuffleObject shuffle_from_json(const nlohmann::json& j) {
  return parse_shuffle_object(j.get<std::string>());
}

static void omega_rec(const Tree& t, ShuffleObject& s) {
  if (t.kind == Kind::X) s.points.push_back({true, t.label});
  if (t.kind == Kind::Y) s.points.push_back({false, t.label});
  for (auto& k : t.kids) omega_rec(k, s);
}

ShuffleObject omega_map(const Tree& t) {
  ShuffleObject s;
  omega_rec(t, s);
  return s;
}

Tree forget_parenthesization_U(const Tree& t) {
  if (t.n_open() != 0) throw std::invalid_argument("U: open inputs present");
  switch (t.kind) {
    case Kind::F: return forget_parenthesization_U(t.kids[0]);
    case Kind::MO:
    case Kind::MC:
      return Tree::mc(forget_parenthesization_U(t.kids[0]), forget_parenthesization_U(t.kids[1]));
    case Kind::UnitO: return Tree::unit_c();
    default: return t;
  }
}

namespace {

using Labels = std::vector<int>;

std::vector<Tree> closed_on(const Labels& c) {
  std::vector<Tree> out;
  if (c.size() == 1) return {Tree::x(c[0])};
  const int k = static_cast<int>(c.size());
  for (int mask = 1; mask < (1 << k) - 1; ++mask) {
    Labels a, b;
    for (int i = 0; i < k; ++i) (mask >> i & 1 ? a : b).push_back(c[i]);
    for (auto& l : closed_on(a))
      for (auto& r : closed_on(b)) out.push_back(Tree::mc(l, r));
  }
  return out;
}

std::vector<Tree> open_on(const Labels& o, const Labels& c) {
  std::vector<Tree> out;
  if (o.size() == 1 && c.empty()) return {Tree::y(o[0])};
  if (o.empty() && !c.empty())
    for (auto& t : closed_on(c)) out.push_back(Tree::f(t));
  const int k = static_cast<int>(o.size() + c.size());
  for (int mask = 1; mask < (1 << k) - 1; ++mask) {
    Labels ao, bo, ac, bc;
    for (int i = 0; i < k; ++i) {
      bool left = mask >> i & 1;
      if (i < static_cast<int>(o.size()))
        (left ? ao : bo).push_back(o[i]);
      else
        (left ? ac : bc).push_back(c[i - o.size()]);
    }
    for (auto& l : open_on(ao, ac))
      for (auto& r : open_on(bo, bc)) out.push_back(Tree::mo(l, r));
  }
  return out;
}

Labels iota(int n) {
  Labels v(n);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

}  // namespace

std::vector<Tree> enumerate(int n, int m, bool with_units) {
  if (n == 0 && m == 0) return with_units ? std::vector<Tree>{Tree::unit_o()} : std::vector<Tree>{};
  return open_on(iota(n), iota(m));
}

std::vector<Tree> enumerate_closed(int m, bool with_units) {
  if (m == 0) return with_units ? std::vector<Tree>{Tree::unit_c()} : std::vector<Tree>{};
  return closed_on(iota(m));
}

std::vector<std::vector<bool>> all_shuffles(int n, int m) {
  std::vector<std::vector<bool>> out;
  const int k = n + m;
  for (int mask = 0; mask < (1 << k); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    std::vector<bool> p;
    for (int i = 0; i < k; ++i) p.push_back(mask >> i & 1);
    out.push_back(p);
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p = Permutation::identity(n);
  do out.push_back(p);
  while (std::next_permutation(p.images.begin(), p.images.end()));
  return out;
}

std::vector<ShuffleObject> all_shuffle_objects(int n, int m) {
  std::vector<ShuffleObject> out;
  for (auto& sh : all_shuffles(n, m))
    for (auto& pt : all_permutations(n))
      for (auto& pa : all_permutations(m)) out.push_back(ShuffleObject::make(sh, pt, pa));
  return out;
}

}  // namespace opgpd
