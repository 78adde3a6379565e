#include "opgpd/algebra.hpp"

#include <omp.h>

#include <atomic>
#include <stdexcept>

namespace opgpd {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

int index_of(const std::vector<std::string>& v, const std::string& name, const char* what) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] == name) return static_cast<int>(i);
  fail(std::string("unknown ") + what + " '" + name + "'");
}

int idx2(int a, int b, int k) { return a * k + b; }
int idx3(int a, int b, int c, int k) { return (a * k + b) * k + c; }

}  // namespace

int FiniteCategory::object(const std::string& name) const { return index_of(objects, name, "object"); }
int FiniteCategory::morphism(const std::string& name) const { return index_of(morphisms, name, "morphism"); }

int FiniteCategory::compose(int g, int f) const {
  int r = comp.at(g).at(f);
  if (r < 0) fail("compose: " + morphisms[g] + " o " + morphisms[f] + " is not defined");
  return r;
}

std::optional<int> FiniteCategory::inverse(int f) const {
  for (int g = 0; g < n_morphisms(); ++g)
    if (src[g] == tgt[f] && tgt[g] == src[f] && comp[g][f] == identity[src[f]] && comp[f][g] == identity[tgt[f]])
      return g;
  return std::nullopt;
}

FiniteCategory FiniteCategory::discrete(const std::vector<std::string>& objects) {
  FiniteCategory c;
  c.objects = objects;
  const int k = static_cast<int>(objects.size());
  c.comp.assign(k, std::vector<int>(k, -1));
  for (int a = 0; a < k; ++a) {
    c.morphisms.push_back("id_" + objects[a]);
    c.src.push_back(a);
    c.tgt.push_back(a);
    c.identity.push_back(a);
    c.comp[a][a] = a;
  }
  return c;
}

FiniteCategory FiniteCategory::signed_points(const std::vector<std::string>& objects) {
  FiniteCategory c;
  c.objects = objects;
  const int k = static_cast<int>(objects.size());
  c.comp.assign(2 * k, std::vector<int>(2 * k, -1));
  for (int a = 0; a < k; ++a) {
    c.morphisms.push_back("+" + objects[a]);
    c.morphisms.push_back("-" + objects[a]);
    c.src.insert(c.src.end(), {a, a});
    c.tgt.insert(c.tgt.end(), {a, a});
    c.identity.push_back(2 * a);
    for (int s = 0; s < 2; ++s)
      for (int u = 0; u < 2; ++u) c.comp[2 * a + s][2 * a + u] = 2 * a + (s ^ u);
  }
  return c;
}

void validate(const FiniteCategory& c) {
  const int k = c.n_objects(), n = c.n_morphisms();
  if (static_cast<int>(c.src.size()) != n || static_cast<int>(c.tgt.size()) != n ||
      static_cast<int>(c.identity.size()) != k || static_cast<int>(c.comp.size()) != n)
    fail("category: table sizes disagree");
  for (int f = 0; f < n; ++f) {
    if (c.src[f] < 0 || c.src[f] >= k || c.tgt[f] < 0 || c.tgt[f] >= k) fail("category: endpoint out of range");
    if (static_cast<int>(c.comp[f].size()) != n) fail("category: composition table is not square");
  }
  for (int a = 0; a < k; ++a) {
    int i = c.identity[a];
    if (i < 0 || i >= n || c.src[i] != a || c.tgt[i] != a) fail("category: bad identity at " + c.objects[a]);
  }
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      int h = c.comp[g][f];
      if ((c.src[g] == c.tgt[f]) != (h >= 0))
        fail("category: composition " + c.morphisms[g] + " o " + c.morphisms[f] + " missing or spurious");
      if (h < 0) continue;
      if (h >= n || c.src[h] != c.src[f] || c.tgt[h] != c.tgt[g]) fail("category: composite has wrong endpoints");
    }
  for (int f = 0; f < n; ++f)
    if (c.comp[f][c.identity[c.src[f]]] != f || c.comp[c.identity[c.tgt[f]]][f] != f)
      fail("category: identity law fails at " + c.morphisms[f]);
  for (int h = 0; h < n; ++h)
    for (int g = 0; g < n; ++g) {
      if (c.comp[h][g] < 0) continue;
      for (int f = 0; f < n; ++f) {
        if (c.comp[g][f] < 0) continue;
        if (c.comp[c.comp[h][g]][f] != c.comp[h][c.comp[g][f]]) fail("category: composition is not associative");
      }
    }
}

namespace {

void check_bifunctor(const Bifunctor& b, const FiniteCategory& A, const FiniteCategory& B, const FiniteCategory& C,
                     const std::string& name) {
  const int ka = A.n_objects(), kb = B.n_objects(), na = A.n_morphisms(), nb = B.n_morphisms();
  if (static_cast<int>(b.obj.size()) != ka || static_cast<int>(b.mor.size()) != na)
    fail(name + ": table sizes disagree");
  for (int a = 0; a < ka; ++a) {
    if (static_cast<int>(b.obj[a].size()) != kb) fail(name + ": table sizes disagree");
    for (int c = 0; c < kb; ++c)
      if (b.obj[a][c] < 0 || b.obj[a][c] >= C.n_objects()) fail(name + ": object missing");
  }
  for (int f = 0; f < na; ++f) {
    if (static_cast<int>(b.mor[f].size()) != nb) fail(name + ": table sizes disagree");
    for (int g = 0; g < nb; ++g) {
      int h = b.mor[f][g];
      if (h < 0 || h >= C.n_morphisms()) fail(name + ": morphism missing");
      if (C.src[h] != b.obj[A.src[f]][B.src[g]] || C.tgt[h] != b.obj[A.tgt[f]][B.tgt[g]])
        fail(name + ": image of (" + A.morphisms[f] + ", " + B.morphisms[g] + ") has wrong endpoints");
    }
  }
  for (int a = 0; a < ka; ++a)
    for (int c = 0; c < kb; ++c)
      if (b.mor[A.identity[a]][B.identity[c]] != C.identity[b.obj[a][c]]) fail(name + ": identities not preserved");
  for (int f2 = 0; f2 < na; ++f2)
    for (int f1 = 0; f1 < na; ++f1) {
      if (A.comp[f2][f1] < 0) continue;
      for (int g2 = 0; g2 < nb; ++g2)
        for (int g1 = 0; g1 < nb; ++g1) {
          if (B.comp[g2][g1] < 0) continue;
          if (b.mor[A.comp[f2][f1]][B.comp[g2][g1]] != C.compose(b.mor[f2][g2], b.mor[f1][g1]))
            fail(name + ": composition not preserved");
        }
    }
}

void check_functor(const Functor& F, const FiniteCategory& A, const FiniteCategory& B) {
  if (static_cast<int>(F.obj.size()) != A.n_objects() || static_cast<int>(F.mor.size()) != A.n_morphisms())
    fail("F: table sizes disagree");
  for (int o : F.obj)
    if (o < 0 || o >= B.n_objects()) fail("F: object missing");
  for (int f = 0; f < A.n_morphisms(); ++f) {
    int h = F.mor[f];
    if (h < 0 || h >= B.n_morphisms()) fail("F: morphism missing");
    if (B.src[h] != F.obj[A.src[f]] || B.tgt[h] != F.obj[A.tgt[f]]) fail("F: image of " + A.morphisms[f] + " has wrong endpoints");
  }
  for (int a = 0; a < A.n_objects(); ++a)
    if (F.mor[A.identity[a]] != B.identity[F.obj[a]]) fail("F: identities not preserved");
  for (int g = 0; g < A.n_morphisms(); ++g)
    for (int f = 0; f < A.n_morphisms(); ++f)
      if (A.comp[g][f] >= 0 && F.mor[A.comp[g][f]] != B.compose(F.mor[g], F.mor[f])) fail("F: composition not preserved");
}

// Component c : from -> to in C, invertible.
void check_component(const FiniteCategory& C, int c, int from, int to, const std::string& what) {
  if (c < 0 || c >= C.n_morphisms()) fail("missing component " + what);
  if (C.src[c] != from || C.tgt[c] != to)
    fail("typing: component " + what + " must go from " + C.objects[from] + " to " + C.objects[to] + ", got " +
         C.morphisms[c] + " : " + C.objects[C.src[c]] + " -> " + C.objects[C.tgt[c]]);
  if (!C.inverse(c)) fail("component " + what + " is not invertible");
}

std::string tuple_name(std::initializer_list<std::string> xs) {
  std::string s = "(";
  bool first = true;
  for (auto& x : xs) {
    if (!first) s += ", ";
    s += x;
    first = false;
  }
  return s + ")";
}

}  // namespace

void validate(const AlgebraData& d) {
  validate(d.M);
  validate(d.N);
  check_bifunctor(d.m_c, d.M, d.M, d.M, "m_c");
  check_bifunctor(d.m_o, d.N, d.N, d.N, "m_o");
  check_functor(d.F, d.M, d.N);
  const FiniteCategory &M = d.M, &N = d.N;
  const int k = M.n_objects(), l = N.n_objects();
  const auto& mc = d.m_c.obj;
  const auto& mo = d.m_o.obj;
  const auto& F = d.F.obj;
  auto sized = [](const std::vector<int>& v, size_t n, const char* what) {
    if (v.size() != n) fail(std::string("component table ") + what + " has the wrong size");
  };
  sized(d.a_c, static_cast<size_t>(k * k * k), "a_c");
  sized(d.a_o, static_cast<size_t>(l * l * l), "a_o");
  sized(d.t, static_cast<size_t>(k * k), "t");
  sized(d.p, static_cast<size_t>(k * k), "p");
  sized(d.psi, static_cast<size_t>(k * l), "psi");
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      const std::string ab = tuple_name({M.objects[a], M.objects[b]});
      check_component(M, d.t[idx2(a, b, k)], mc[a][b], mc[b][a], "t" + ab);
      check_component(N, d.p[idx2(a, b, k)], mo[F[a]][F[b]], F[mc[a][b]], "p" + ab);
      for (int c = 0; c < k; ++c)
        check_component(M, d.a_c[idx3(a, b, c, k)], mc[mc[a][b]][c], mc[a][mc[b][c]],
                        "a_c" + tuple_name({M.objects[a], M.objects[b], M.objects[c]}));
    }
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b)
      for (int c = 0; c < l; ++c)
        check_component(N, d.a_o[idx3(a, b, c, l)], mo[mo[a][b]][c], mo[a][mo[b][c]],
                        "a_o" + tuple_name({N.objects[a], N.objects[b], N.objects[c]}));
  for (int a = 0; a < k; ++a)
    for (int y = 0; y < l; ++y)
      check_component(N, d.psi[idx2(a, y, l)], mo[F[a]][y], mo[y][F[a]], "psi" + tuple_name({M.objects[a], N.objects[y]}));

  // naturality
  const auto& mcm = d.m_c.mor;
  const auto& mom = d.m_o.mor;
  const auto& Fm = d.F.mor;
  for (int f = 0; f < M.n_morphisms(); ++f)
    for (int g = 0; g < M.n_morphisms(); ++g) {
      const int sf = M.src[f], tf = M.tgt[f], sg = M.src[g], tg = M.tgt[g];
      if (M.compose(d.t[idx2(tf, tg, k)], mcm[f][g]) != M.compose(mcm[g][f], d.t[idx2(sf, sg, k)]))
        fail("t is not natural at " + tuple_name({M.morphisms[f], M.morphisms[g]}));
      if (N.compose(d.p[idx2(tf, tg, k)], mom[Fm[f]][Fm[g]]) != N.compose(Fm[mcm[f][g]], d.p[idx2(sf, sg, k)]))
        fail("p is not natural at " + tuple_name({M.morphisms[f], M.morphisms[g]}));
      for (int h = 0; h < M.n_morphisms(); ++h) {
        const int sh = M.src[h], th = M.tgt[h];
        if (M.compose(d.a_c[idx3(tf, tg, th, k)], mcm[mcm[f][g]][h]) !=
            M.compose(mcm[f][mcm[g][h]], d.a_c[idx3(sf, sg, sh, k)]))
          fail("a_c is not natural");
      }
    }
  for (int f = 0; f < N.n_morphisms(); ++f)
    for (int g = 0; g < N.n_morphisms(); ++g)
      for (int h = 0; h < N.n_morphisms(); ++h) {
        const int sf = N.src[f], tf = N.tgt[f], sg = N.src[g], tg = N.tgt[g], sh = N.src[h], th = N.tgt[h];
        if (N.compose(d.a_o[idx3(tf, tg, th, l)], mom[mom[f][g]][h]) !=
            N.compose(mom[f][mom[g][h]], d.a_o[idx3(sf, sg, sh, l)]))
          fail("a_o is not natural");
      }
  for (int f = 0; f < M.n_morphisms(); ++f)
    for (int g = 0; g < N.n_morphisms(); ++g) {
      const int sf = M.src[f], tf = M.tgt[f], sg = N.src[g], tg = N.tgt[g];
      if (N.compose(d.psi[idx2(tf, tg, l)], mom[Fm[f]][g]) != N.compose(mom[g][Fm[f]], d.psi[idx2(sf, sg, l)]))
        fail("psi is not natural");
    }
  if (d.strict_unit && (!d.unit_M || !d.unit_N)) fail("strict unit requested without unit objects");
  if (d.unit_M && (*d.unit_M < 0 || *d.unit_M >= k)) fail("unit of M out of range");
  if (d.unit_N && (*d.unit_N < 0 || *d.unit_N >= l)) fail("unit of N out of range");
}

int tree_object(const AlgebraData& d, const Tree& t, const Env& e) {
  switch (t.kind) {
    case Kind::X: return e.x.at(t.label - 1);
    case Kind::Y: return e.y.at(t.label - 1);
    case Kind::MC: return d.m_c.obj[tree_object(d, t.kids[0], e)][tree_object(d, t.kids[1], e)];
    case Kind::MO: return d.m_o.obj[tree_object(d, t.kids[0], e)][tree_object(d, t.kids[1], e)];
    case Kind::F: return d.F.obj[tree_object(d, t.kids[0], e)];
    case Kind::UnitC:
      if (!d.unit_M) fail("no unit object in M");
      return *d.unit_M;
    case Kind::UnitO:
      if (!d.unit_N) fail("no unit object in N");
      return *d.unit_N;
  }
  fail("bad tree");
}

namespace {

const FiniteCategory& category_of(const AlgebraData& d, const Tree& t) {
  return t.color() == Color::Closed ? d.M : d.N;
}

// The functor of the tree applied to identities, except at one leaf where eta is used.
int tree_morphism(const AlgebraData& d, const Tree& t, const Env& e, Slot slot, int eta) {
  switch (t.kind) {
    case Kind::X:
      if (slot.color == Color::Closed && slot.label == t.label) return eta;
      return d.M.identity[e.x.at(t.label - 1)];
    case Kind::Y:
      if (slot.color == Color::Open && slot.label == t.label) return eta;
      return d.N.identity[e.y.at(t.label - 1)];
    case Kind::MC: return d.m_c.mor[tree_morphism(d, t.kids[0], e, slot, eta)][tree_morphism(d, t.kids[1], e, slot, eta)];
    case Kind::MO: return d.m_o.mor[tree_morphism(d, t.kids[0], e, slot, eta)][tree_morphism(d, t.kids[1], e, slot, eta)];
    case Kind::F: return d.F.mor[tree_morphism(d, t.kids[0], e, slot, eta)];
    default: return category_of(d, t).identity[tree_object(d, t, e)];
  }
}

int must_invert(const FiniteCategory& C, int f) {
  auto g = C.inverse(f);
  if (!g) fail("component " + C.morphisms[f] + " is not invertible");
  return *g;
}

}  // namespace

ThetaTarget::Value ThetaTarget::gen(const std::string& name, bool inv) {
  const PaPBMorphism& g = generators().at(name);
  const AlgebraData* D = d;
  Value v;
  v.src = inv ? g.tgt : g.src;
  v.tgt = inv ? g.src : g.tgt;
  const Tree src = g.src;
  std::function<int(const Env&)> base;
  const int k = D->M.n_objects(), l = D->N.n_objects();
  if (name == "tau") base = [D, k](const Env& e) { return D->t[idx2(e.x[0], e.x[1], k)]; };
  else if (name == "alpha_c") base = [D, k](const Env& e) { return D->a_c[idx3(e.x[0], e.x[1], e.x[2], k)]; };
  else if (name == "alpha_o") base = [D, l](const Env& e) { return D->a_o[idx3(e.y[0], e.y[1], e.y[2], l)]; };
  else if (name == "p") base = [D, k](const Env& e) { return D->p[idx2(e.x[0], e.x[1], k)]; };
  else if (name == "psi") base = [D, l](const Env& e) { return D->psi[idx2(e.x[0], e.y[0], l)]; };
  else base = [D, src](const Env& e) { return category_of(*D, src).identity[tree_object(*D, src, e)]; };
  if (inv)
    v.at = [D, src, base](const Env& e) { return must_invert(category_of(*D, src), base(e)); };
  else
    v.at = base;
  return v;
}

ThetaTarget::Value ThetaTarget::id(const Tree& t) {
  const AlgebraData* D = d;
  return {t, t, [D, t](const Env& e) { return category_of(*D, t).identity[tree_object(*D, t, e)]; }};
}

ThetaTarget::Value ThetaTarget::compose(const Value& g, const Value& f) {
  if (!(f.tgt == g.src)) fail("theta compose: " + to_string(f.tgt) + " vs " + to_string(g.src));
  const AlgebraData* D = d;
  auto gf = g.at, ff = f.at;
  const Tree s = f.src;
  return {f.src, g.tgt, [D, gf, ff, s](const Env& e) { return category_of(*D, s).compose(gf(e), ff(e)); }};
}

ThetaTarget::Value ThetaTarget::insert(const Value& o, Slot s, const Value& i) {
  const AlgebraData* D = d;
  const int mo = o.src.m_closed(), ki_c = i.src.m_closed(), ki_o = i.src.n_open();
  const Tree osrc = o.src, itgt = i.tgt;
  auto oat = o.at, iat = i.at;
  Value v;
  v.src = graft(o.src, s, i.src);
  v.tgt = graft(o.tgt, s, i.tgt);
  v.at = [=](const Env& e) {
    Env ei, eo;
    if (s.color == Color::Closed) {
      ei.x.assign(e.x.begin() + (s.label - 1), e.x.begin() + (s.label - 1 + ki_c));
      for (int l = 1; l <= mo; ++l)
        eo.x.push_back(l < s.label ? e.x[l - 1] : l == s.label ? tree_object(*D, itgt, ei) : e.x[l - 1 + ki_c - 1]);
      eo.y = e.y;
    } else {
      ei.y.assign(e.y.begin() + (s.label - 1), e.y.begin() + (s.label - 1 + ki_o));
      ei.x.assign(e.x.begin() + mo, e.x.begin() + mo + ki_c);
      eo.x.assign(e.x.begin(), e.x.begin() + mo);
      const int no = osrc.n_open();
      for (int l = 1; l <= no; ++l)
        eo.y.push_back(l < s.label ? e.y[l - 1] : l == s.label ? tree_object(*D, itgt, ei) : e.y[l - 1 + ki_o - 1]);
    }
    const int eta = iat(ei);
    return category_of(*D, osrc).compose(oat(eo), tree_morphism(*D, osrc, eo, s, eta));
  };
  return v;
}

ThetaTarget::Value ThetaTarget::relabel(const Value& v, const Permutation& so, const Permutation& sc) {
  auto at = v.at;
  const int m = v.src.m_closed(), n = v.src.n_open();
  Value r;
  r.src = opgpd::relabel(v.src, so, sc);
  r.tgt = opgpd::relabel(v.tgt, so, sc);
  r.at = [at, so, sc, m, n](const Env& e) {
    Env old;
    old.x.resize(m);
    old.y.resize(n);
    for (int l = 1; l <= m; ++l) old.x[l - 1] = e.x[sc(l) - 1];
    for (int l = 1; l <= n; ++l) old.y[l - 1] = e.y[so(l) - 1];
    return at(old);
  };
  return r;
}

int theta_eval(const AlgebraData& d, const GenWord& w, const Env& e) {
  ThetaTarget T(d);
  auto v = evaluate(w, T);
  if (static_cast<int>(e.x.size()) != v.src.m_closed() || static_cast<int>(e.y.size()) != v.src.n_open())
    fail("theta: wrong number of objects");
  return v.at(e);
}

bool CoherenceReport::ok() const {
  for (auto& f : families)
    if (!f.failures.empty()) return false;
  return unit_problems.empty();
}

long long CoherenceReport::instances() const {
  long long n = 0;
  for (auto& f : families) n += f.instances;
  return n;
}

namespace {

Env decode(long long idx, int m, int n, int k, int l) {
  Env e;
  e.x.resize(m);
  e.y.resize(n);
  for (int i = n - 1; i >= 0; --i) {
    e.y[i] = static_cast<int>(idx % l);
    idx /= l;
  }
  for (int i = m - 1; i >= 0; --i) {
    e.x[i] = static_cast<int>(idx % k);
    idx /= k;
  }
  return e;
}

std::vector<std::string> unit_checks(const AlgebraData& d) {
  std::vector<std::string> out;
  if (!d.strict_unit) return out;
  const int uM = *d.unit_M, uN = *d.unit_N;
  if (d.F.obj[uM] != uN) out.push_back("F(1_M) = " + d.N.objects[d.F.obj[uM]] + " is not 1_N");
  for (int a = 0; a < d.M.n_objects(); ++a)
    if (d.m_c.obj[uM][a] != a || d.m_c.obj[a][uM] != a) out.push_back("1_M is not a strict unit at " + d.M.objects[a]);
  for (int a = 0; a < d.N.n_objects(); ++a)
    if (d.m_o.obj[uN][a] != a || d.m_o.obj[a][uN] != a) out.push_back("1_N is not a strict unit at " + d.N.objects[a]);
  return out;
}

CoherenceReport run(const AlgebraData& d, bool parallel) {
  validate(d);
  CoherenceReport rep;
  ThetaTarget T(d);
  const int k = d.M.n_objects(), l = d.N.n_objects();
  for (const Diagram& dg : coherence_diagrams()) {
    auto L = evaluate(dg.lhs, T), R = evaluate(dg.rhs, T);
    const int m = L.src.m_closed(), n = L.src.n_open();
    long long total = 1;
    for (int i = 0; i < m; ++i) total *= k;
    for (int i = 0; i < n; ++i) total *= l;
    std::vector<char> bad(static_cast<size_t>(total), 0);
    std::atomic<bool> error{false};
    std::string what;
    if (parallel) {
#pragma omp parallel for schedule(static)
      for (long long idx = 0; idx < total; ++idx) {
        try {
          Env e = decode(idx, m, n, k, l);
          bad[idx] = L.at(e) != R.at(e);
        } catch (const std::exception& ex) {
#pragma omp critical
          {
            if (!error.exchange(true)) what = ex.what();
          }
        }
      }
    } else {
      for (long long idx = 0; idx < total; ++idx) {
        Env e = decode(idx, m, n, k, l);
        bad[idx] = L.at(e) != R.at(e);
      }
    }
    if (error) fail(what);
    FamilyReport fr{dg.family, total, {}};
    for (long long idx = 0; idx < total; ++idx)
      if (bad[idx]) fr.failures.push_back(decode(idx, m, n, k, l));
    rep.families.push_back(std::move(fr));
  }
  rep.unit_problems = unit_checks(d);
  return rep;
}

}  // namespace

CoherenceReport check_coherence(const AlgebraData& d) { return run(d, true); }
CoherenceReport check_coherence_serial(const AlgebraData& d) { return run(d, false); }

std::string describe(const AlgebraData& d, const Env& e) {
  std::string s;
  for (size_t i = 0; i < e.x.size(); ++i) s += (s.empty() ? "" : " ") + ("x" + std::to_string(i + 1)) + "=" + d.M.objects[e.x[i]];
  for (size_t i = 0; i < e.y.size(); ++i) s += (s.empty() ? "" : " ") + ("y" + std::to_string(i + 1)) + "=" + d.N.objects[e.y[i]];
  return s;
}

nlohmann::json report_to_json(const AlgebraData& d, const CoherenceReport& r) {
  nlohmann::json fams = nlohmann::json::array();
  for (auto& f : r.families) {
    nlohmann::json fails = nlohmann::json::array();
    for (auto& e : f.failures) {
      nlohmann::json x = nlohmann::json::array(), y = nlohmann::json::array();
      for (int o : e.x) x.push_back(d.M.objects[o]);
      for (int o : e.y) y.push_back(d.N.objects[o]);
      fails.push_back({{"x", x}, {"y", y}});
    }
    fams.push_back({{"family", f.family}, {"instances", f.instances}, {"failures", fails}});
  }
  return {{"ok", r.ok()}, {"instances", r.instances()}, {"families", fams}, {"unit_problems", r.unit_problems}};
}

// ---- json ----

namespace {

nlohmann::json category_to_json(const FiniteCategory& c) {
  nlohmann::json mors = nlohmann::json::array(), ids = nlohmann::json::object(), comp = nlohmann::json::array();
  for (int f = 0; f < c.n_morphisms(); ++f)
    mors.push_back({{"name", c.morphisms[f]}, {"src", c.objects[c.src[f]]}, {"tgt", c.objects[c.tgt[f]]}});
  for (int a = 0; a < c.n_objects(); ++a) ids[c.objects[a]] = c.morphisms[c.identity[a]];
  for (int g = 0; g < c.n_morphisms(); ++g)
    for (int f = 0; f < c.n_morphisms(); ++f)
      if (c.comp[g][f] >= 0) comp.push_back({c.morphisms[g], c.morphisms[f], c.morphisms[c.comp[g][f]]});
  return {{"objects", c.objects}, {"morphisms", mors}, {"identities", ids}, {"compose", comp}};
}

FiniteCategory category_from_json(const nlohmann::json& j) {
  auto objs = j.at("objects").get<std::vector<std::string>>();
  if (j.value("signed", false)) return FiniteCategory::signed_points(objs);
  if (!j.contains("morphisms")) return FiniteCategory::discrete(objs);
  FiniteCategory c;
  c.objects = objs;
  for (auto& m : j.at("morphisms")) {
    c.morphisms.push_back(m.at("name").get<std::string>());
    c.src.push_back(c.object(m.at("src").get<std::string>()));
    c.tgt.push_back(c.object(m.at("tgt").get<std::string>()));
  }
  c.identity.assign(objs.size(), -1);
  for (auto& [o, m] : j.at("identities").items()) c.identity[c.object(o)] = c.morphism(m.get<std::string>());
  c.comp.assign(c.morphisms.size(), std::vector<int>(c.morphisms.size(), -1));
  for (auto& t : j.at("compose"))
    c.comp[c.morphism(t.at(0).get<std::string>())][c.morphism(t.at(1).get<std::string>())] =
        c.morphism(t.at(2).get<std::string>());
  return c;
}

bool is_discrete(const FiniteCategory& c) { return c.n_morphisms() == c.n_objects(); }

nlohmann::json bifunctor_to_json(const Bifunctor& b, const FiniteCategory& A, const FiniteCategory& C) {
  nlohmann::json o = nlohmann::json::array(), m = nlohmann::json::array();
  for (int a = 0; a < A.n_objects(); ++a)
    for (int c = 0; c < A.n_objects(); ++c) o.push_back({A.objects[a], A.objects[c], C.objects[b.obj[a][c]]});
  for (int f = 0; f < A.n_morphisms(); ++f)
    for (int g = 0; g < A.n_morphisms(); ++g) m.push_back({A.morphisms[f], A.morphisms[g], C.morphisms[b.mor[f][g]]});
  return {{"objects", o}, {"morphisms", m}};
}

Bifunctor bifunctor_from_json(const nlohmann::json& j, const FiniteCategory& A) {
  Bifunctor b;
  const int k = A.n_objects(), n = A.n_morphisms();
  b.obj.assign(k, std::vector<int>(k, -1));
  b.mor.assign(n, std::vector<int>(n, -1));
  for (auto& t : j.at("objects"))
    b.obj[A.object(t.at(0).get<std::string>())][A.object(t.at(1).get<std::string>())] = A.object(t.at(2).get<std::string>());
  if (j.contains("morphisms")) {
    for (auto& t : j.at("morphisms"))
      b.mor[A.morphism(t.at(0).get<std::string>())][A.morphism(t.at(1).get<std::string>())] =
          A.morphism(t.at(2).get<std::string>());
  } else {
    if (!is_discrete(A)) fail("tensor on morphisms omitted for a category that is not discrete");
    for (int a = 0; a < k; ++a)
      for (int c = 0; c < k; ++c)
        if (b.obj[a][c] >= 0) b.mor[A.identity[a]][A.identity[c]] = A.identity[b.obj[a][c]];
  }
  return b;
}

std::vector<int> components_from_json(const nlohmann::json& j, const std::vector<const FiniteCategory*>& cats,
                                      const FiniteCategory& target, const char* what) {
  const int arity = static_cast<int>(cats.size());
  size_t size = 1;
  for (auto* c : cats) size *= static_cast<size_t>(c->n_objects());
  std::vector<int> out(size, -1);
  for (auto& row : j) {
    if (static_cast<int>(row.size()) != arity + 1) fail(std::string("component row of ") + what + " has the wrong length");
    size_t idx = 0;
    for (int i = 0; i < arity; ++i) idx = idx * cats[i]->n_objects() + cats[i]->object(row.at(i).get<std::string>());
    out[idx] = target.morphism(row.at(arity).get<std::string>());
  }
  return out;
}

nlohmann::json components_to_json(const std::vector<int>& v, const std::vector<const FiniteCategory*>& cats,
                                  const FiniteCategory& target) {
  nlohmann::json out = nlohmann::json::array();
  for (size_t idx = 0; idx < v.size(); ++idx) {
    nlohmann::json row = nlohmann::json::array();
    size_t rest = idx;
    std::vector<std::string> names(cats.size());
    for (size_t i = cats.size(); i-- > 0;) {
      names[i] = cats[i]->objects[rest % cats[i]->n_objects()];
      rest /= cats[i]->n_objects();
    }
    for (auto& s : names) row.push_back(s);
    row.push_back(v[idx] >= 0 ? target.morphisms[v[idx]] : "");
    out.push_back(row);
  }
  return out;
}

}  // namespace

AlgebraData algebra_from_json(const nlohmann::json& j) {
  AlgebraData d;
  d.M = category_from_json(j.at("M"));
  d.N = j.at("N").is_string() && j.at("N").get<std::string>() == "M" ? d.M : category_from_json(j.at("N"));
  validate(d.M);
  validate(d.N);
  d.m_c = bifunctor_from_json(j.at("m_c"), d.M);
  d.m_o = bifunctor_from_json(j.at("m_o"), d.N);
  const auto& jf = j.at("F");
  if (jf.is_string() && jf.get<std::string>() == "identity") {
    if (d.M.objects != d.N.objects || d.M.morphisms != d.N.morphisms) fail("F = identity needs M = N");
    for (int a = 0; a < d.M.n_objects(); ++a) d.F.obj.push_back(a);
    for (int f = 0; f < d.M.n_morphisms(); ++f) d.F.mor.push_back(f);
  } else {
    d.F.obj.assign(d.M.n_objects(), -1);
    d.F.mor.assign(d.M.n_morphisms(), -1);
    for (auto& t : jf.at("objects")) d.F.obj[d.M.object(t.at(0).get<std::string>())] = d.N.object(t.at(1).get<std::string>());
    if (jf.contains("morphisms")) {
      for (auto& t : jf.at("morphisms"))
        d.F.mor[d.M.morphism(t.at(0).get<std::string>())] = d.N.morphism(t.at(1).get<std::string>());
    } else {
      if (!is_discrete(d.M)) fail("F on morphisms omitted for a category that is not discrete");
      for (int a = 0; a < d.M.n_objects(); ++a)
        if (d.F.obj[a] >= 0) d.F.mor[d.M.identity[a]] = d.N.identity[d.F.obj[a]];
    }
  }
  const FiniteCategory *M = &d.M, *N = &d.N;
  d.a_c = components_from_json(j.at("a_c"), {M, M, M}, d.M, "a_c");
  d.a_o = components_from_json(j.at("a_o"), {N, N, N}, d.N, "a_o");
  d.t = components_from_json(j.at("t"), {M, M}, d.M, "t");
  d.p = components_from_json(j.at("p"), {M, M}, d.N, "p");
  d.psi = components_from_json(j.at("psi"), {M, N}, d.N, "psi");
  if (j.contains("units")) {
    const auto& u = j.at("units");
    if (u.contains("M")) d.unit_M = d.M.object(u.at("M").get<std::string>());
    if (u.contains("N")) d.unit_N = d.N.object(u.at("N").get<std::string>());
    d.strict_unit = u.value("strict", false);
  }
  return d;
}

nlohmann::json algebra_to_json(const AlgebraData& d) {
  const FiniteCategory *M = &d.M, *N = &d.N;
  nlohmann::json F = {{"objects", nlohmann::json::array()}, {"morphisms", nlohmann::json::array()}};
  for (int a = 0; a < d.M.n_objects(); ++a) F["objects"].push_back({d.M.objects[a], d.N.objects[d.F.obj[a]]});
  for (int f = 0; f < d.M.n_morphisms(); ++f) F["morphisms"].push_back({d.M.morphisms[f], d.N.morphisms[d.F.mor[f]]});
  nlohmann::json j = {{"M", category_to_json(d.M)},
                      {"N", category_to_json(d.N)},
                      {"m_c", bifunctor_to_json(d.m_c, d.M, d.M)},
                      {"m_o", bifunctor_to_json(d.m_o, d.N, d.N)},
                      {"F", F},
                      {"a_c", components_to_json(d.a_c, {M, M, M}, d.M)},
                      {"a_o", components_to_json(d.a_o, {N, N, N}, d.N)},
                      {"t", components_to_json(d.t, {M, M}, d.M)},
                      {"p", components_to_json(d.p, {M, M}, d.N)},
                      {"psi", components_to_json(d.psi, {M, N}, d.N)}};
  nlohmann::json u = nlohmann::json::object();
  if (d.unit_M) u["M"] = d.M.objects[*d.unit_M];
  if (d.unit_N) u["N"] = d.N.objects[*d.unit_N];
  if (d.strict_unit) u["strict"] = true;
  if (!u.empty()) j["units"] = u;
  return j;
}

// ---- examples ----

AlgebraData discrete_group_algebra(const std::vector<std::string>& elements, const std::vector<std::vector<int>>& mult) {
  AlgebraData d;
  d.M = FiniteCategory::discrete(elements);
  d.N = d.M;
  const int k = static_cast<int>(elements.size());
  d.m_c.obj = mult;
  d.m_c.mor.assign(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) d.m_c.mor[a][b] = mult[a][b];  // identities are indexed like objects
  d.m_o = d.m_c;
  for (int a = 0; a < k; ++a) {
    d.F.obj.push_back(a);
    d.F.mor.push_back(a);
  }
  d.a_c.assign(static_cast<size_t>(k * k * k), 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) d.a_c[idx3(a, b, c, k)] = mult[mult[a][b]][c];
  d.a_o = d.a_c;
  d.t.assign(static_cast<size_t>(k * k), 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) d.t[idx2(a, b, k)] = mult[a][b];
  d.p = d.t;
  d.psi = d.t;
  for (int a = 0; a < k; ++a)
    if (mult[a][a] == a) {
      d.unit_M = d.unit_N = a;
      break;
    }
  return d;
}

AlgebraData cyclic_discrete(int k) {
  std::vector<std::string> el;
  std::vector<std::vector<int>> mult(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a) {
    el.push_back(std::to_string(a));
    for (int b = 0; b < k; ++b) mult[a][b] = (a + b) % k;
  }
  return discrete_group_algebra(el, mult);
}

AlgebraData s3_discrete() {
  // permutations of {0,1,2} as image lists
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::string> names = {"e", "(12)", "(23)", "(13)", "(123)", "(132)"};
  std::vector<std::vector<int>> mult(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      for (int r = 0; r < 6; ++r)
        if (perms[r] == c) mult[a][b] = r;
    }
  return discrete_group_algebra(names, mult);
}

AlgebraData graded_sign_algebra() {
  AlgebraData d;
  d.M = FiniteCategory::signed_points({"0", "1"});
  d.N = d.M;
  auto plus = [](int a) { return 2 * a; };
  auto sign = [](int a, bool neg) { return 2 * a + (neg ? 1 : 0); };
  d.m_c.obj = {{0, 1}, {1, 0}};
  d.m_c.mor.assign(4, std::vector<int>(4));
  for (int f = 0; f < 4; ++f)
    for (int g = 0; g < 4; ++g) d.m_c.mor[f][g] = sign((f / 2 + g / 2) % 2, ((f % 2) ^ (g % 2)) != 0);
  d.m_o = d.m_c;
  d.F.obj = {0, 1};
  d.F.mor = {0, 1, 2, 3};
  d.a_c.assign(8, 0);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) d.a_c[idx3(a, b, c, 2)] = plus((a + b + c) % 2);
  d.a_o = d.a_c;
  d.t.assign(4, 0);
  d.p.assign(4, 0);
  d.psi.assign(4, 0);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      d.t[idx2(a, b, 2)] = sign((a + b) % 2, a * b == 1);
      d.p[idx2(a, b, 2)] = plus((a + b) % 2);
      d.psi[idx2(a, b, 2)] = sign((a + b) % 2, a * b == 1);
    }
  d.unit_M = d.unit_N = 0;
  return d;
}

}  // namespace opgpd
