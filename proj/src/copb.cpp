#include "opgpd/copb.hpp"

#include <stdexcept>

namespace opgpd {

namespace {

// tgt sequence forced by a braid acting on a source sequence
Permutation carry(const Permutation& src, const BraidWord& b) {
  Permutation pi = underlying_permutation(b);
  Permutation t;
  t.images.assign(src.size(), 0);
  for (int p = 1; p <= src.size(); ++p) t.images[pi(p) - 1] = src(p);
  return t;
}

int position_of(const Permutation& seq, int label) {
  for (int p = 1; p <= seq.size(); ++p)
    if (seq(p) == label) return p;
  throw std::out_of_range("label not present");
}

// Replace label i by a block (inner labels shifted by i-1); labels above i shift by k-1.
Permutation splice_labels(const Permutation& seq, int i, const Permutation& block) {
  const int k = block.size();
  Permutation r;
  for (int l : seq.images) {
    if (l == i)
      for (int b : block.images) r.images.push_back(b + i - 1);
    else
      r.images.push_back(l > i ? l + k - 1 : l);
  }
  return r;
}

struct Aerial {
  Permutation src, tgt;
  BraidWord braid;
};

Aerial closed_splice(const Aerial& outer, int i, const CoBMorphism& inner) {
  const int m = outer.src.size();
  if (i < 1 || i > m) throw std::out_of_range("closed slot out of range");
  const int k = inner.arity();
  const int p = position_of(outer.src, i), q = position_of(outer.tgt, i);
  Aerial r;
  r.braid = cable(outer.braid, p, k).then(inner.braid.shifted(q - 1, m + k - 1));
  r.src = splice_labels(outer.src, i, inner.src);
  r.tgt = splice_labels(outer.tgt, i, inner.tgt);
  return r;
}

std::vector<Point> remap(const ShuffleObject& s, int j, int dn, const ShuffleObject* inner, int m) {
  std::vector<Point> out;
  for (auto& pt : s.points) {
    if (!pt.aerial && pt.label == j) {
      for (auto q : inner->points) {
        q.label += q.aerial ? m : j - 1;
        out.push_back(q);
      }
    } else if (!pt.aerial && pt.label > j) {
      out.push_back({false, pt.label + dn});
    } else {
      out.push_back(pt);
    }
  }
  return out;
}

int aerial_before(const ShuffleObject& s, int j) {
  int c = 0;
  for (auto& pt : s.points) {
    if (!pt.aerial && pt.label == j) return c;
    if (pt.aerial) ++c;
  }
  throw std::out_of_range("terrestrial slot out of range");
}

}  // namespace

CoBMorphism CoBMorphism::identity(const Permutation& order) {
  return {order, order, BraidWord(order.size())};
}

CoBMorphism CoBMorphism::from_braid(const BraidWord& b) {
  Permutation id = Permutation::identity(b.strands);
  return {id, carry(id, b), b};
}

void validate(const CoBMorphism& x) {
  if (!x.src.is_valid() || !x.tgt.is_valid()) throw std::invalid_argument("CoB: labels not a permutation");
  if (x.braid.strands != x.src.size() || x.tgt.size() != x.src.size() || !x.braid.is_valid())
    throw std::invalid_argument("CoB: strand count mismatch");
  if (carry(x.src, x.braid) != x.tgt) throw std::invalid_argument("CoB: braid does not carry source to target");
}

bool cob_equal(const CoBMorphism& a, const CoBMorphism& b) {
  return a.src == b.src && a.tgt == b.tgt && braids_equal(a.braid, b.braid);
}

CoBMorphism cob_compose(const CoBMorphism& g, const CoBMorphism& f) {
  if (f.tgt != g.src) throw std::invalid_argument("CoB compose: object mismatch");
  return {f.src, g.tgt, f.braid.then(g.braid)};
}

CoBMorphism cob_insert(const CoBMorphism& outer, int i, const CoBMorphism& inner) {
  Aerial a = closed_splice({outer.src, outer.tgt, outer.braid}, i, inner);
  return {a.src, a.tgt, a.braid};
}

CoBMorphism cob_relabel(const CoBMorphism& x, const Permutation& s) {
  return {s * x.src, s * x.tgt, x.braid};
}

void validate(const CoPBMorphism& x) {
  if (!x.src.is_valid() || !x.tgt.is_valid()) throw std::invalid_argument("CoPB: labels not bijective");
  if (x.src.n() != x.tgt.n() || x.src.m() != x.tgt.m()) throw std::invalid_argument("CoPB: arity mismatch");
  if (x.src.terrestrial_labels() != x.tgt.terrestrial_labels())
    throw std::invalid_argument("CoPB: terrestrial order not preserved");
  if (x.braid.strands != x.src.m() || !x.braid.is_valid())
    throw std::invalid_argument("CoPB: braid strand count mismatch");
  if (carry(x.src.aerial_labels(), x.braid) != x.tgt.aerial_labels())
    throw std::invalid_argument("CoPB: braid does not carry aerial order");
}

bool copb_equal(const CoPBMorphism& a, const CoPBMorphism& b) {
  return a.src == b.src && a.tgt == b.tgt && braids_equal(a.braid, b.braid);
}

CoPBMorphism copb_identity(const ShuffleObject& x) { return {x, x, BraidWord(x.m())}; }

CoPBMorphism copb_compose(const CoPBMorphism& g, const CoPBMorphism& f) {
  if (f.tgt != g.src)
    throw std::invalid_argument("CoPB compose: object mismatch " + to_string(f.tgt) + " vs " + to_string(g.src));
  return {f.src, g.tgt, f.braid.then(g.braid)};
}

CoPBMorphism copb_inverse(const CoPBMorphism& f) { return {f.tgt, f.src, f.braid.inverse()}; }

CoPBMorphism copb_insert_closed(const CoPBMorphism& outer, int i, const CoBMorphism& inner) {
  Aerial a = closed_splice({outer.src.aerial_labels(), outer.tgt.aerial_labels(), outer.braid}, i, inner);
  auto rebuild = [&](const ShuffleObject& s, const Permutation& aer) {
    std::vector<bool> pat;
    for (auto& pt : s.points) {
      if (!pt.aerial)
        pat.push_back(false);
      else if (pt.label == i)
        pat.insert(pat.end(), inner.arity(), true);
      else
        pat.push_back(true);
    }
    return ShuffleObject::make(pat, s.terrestrial_labels(), aer);
  };
  CoPBMorphism r{rebuild(outer.src, a.src), rebuild(outer.tgt, a.tgt), a.braid};
  validate(r);
  return r;
}

CoPBMorphism copb_insert_open(const CoPBMorphism& outer, int j, const CoPBMorphism& inner) {
  const int n = outer.n(), m = outer.m(), n2 = inner.n(), m2 = inner.m();
  if (j < 1 || j > n) throw std::out_of_range("open slot out of range");
  const int total = m + m2;
  const int a = aerial_before(outer.src, j), a2 = aerial_before(outer.tgt, j);
  CoPBMorphism r;
  r.src.points = remap(outer.src, j, n2 - 1, &inner.src, m);
  r.tgt.points = remap(outer.tgt, j, n2 - 1, &inner.tgt, m);
  // outer strands left of the corridor pass over the inner aerial block, then return
  r.braid = block_swap_over(a, m2, total)
                .then(outer.braid.shifted(m2, total))
                .then(block_swap_under(m2, a2, total))
                .then(inner.braid.shifted(a2, total));
  validate(r);
  return r;
}

CoPBMorphism copb_relabel(const CoPBMorphism& x, const Permutation& so, const Permutation& sc) {
  CoPBMorphism r = x;
  for (auto* s : {&r.src, &r.tgt})
    for (auto& pt : s->points) pt.label = pt.aerial ? sc(pt.label) : so(pt.label);
  return r;
}

CoPBMorphism restrict_unit(const CoPBMorphism& x, UnitKind which, int slot) {
  if (which == UnitKind::Closed) return copb_insert_closed(x, slot, CoBMorphism::unit());
  return copb_insert_open(x, slot, copb_identity(ShuffleObject{}));
}

std::optional<CoPBMorphism> shuffle_type_morphism(const ShuffleObject& x, const ShuffleObject& y) {
  if (x.terrestrial_labels() != y.terrestrial_labels() || x.aerial_labels() != y.aerial_labels())
    return std::nullopt;
  return CoPBMorphism{x, y, BraidWord(x.m())};
}

bool is_shuffle_type(const CoPBMorphism& x) {
  return x.src.aerial_labels() == x.tgt.aerial_labels() && braids_equal(x.braid, BraidWord(x.m()));
}

Permutation block_permutation(const Permutation& s, int i, int k) {
  Permutation r;
  const int si = s(i);
  for (int l = 1; l <= s.size(); ++l) {
    if (l == i) {
      for (int b = 0; b < k; ++b) r.images.push_back(si + b);
    } else {
      int v = s(l);
      r.images.push_back(v > si ? v + k - 1 : v);
    }
  }
  return r;
}

bool is_valid(const ShuffleMorphism& s) {
  return s.src.is_valid() && s.tgt.is_valid() &&
         s.src.terrestrial_labels() == s.tgt.terrestrial_labels() &&
         s.src.aerial_labels() == s.tgt.aerial_labels();
}

namespace {

ShuffleObject compose_labels(const ShuffleObject& s, const Permutation& u, const Permutation& x) {
  // point at position p with intermediate label l gets final label T(l) or A(l)
  Permutation T = s.terrestrial_labels(), A = s.aerial_labels();
  return ShuffleObject::make(s.pattern(), T * u, A * x);
}

}  // namespace

ZetaTriple canonicalize(const ZetaTriple& t) {
  validate(t.x);
  if (!is_valid(t.s)) throw std::invalid_argument("zeta: shuffle part is not a morphism");
  ZetaTriple r;
  const int n = t.u.size();
  Permutation hinv = t.x.src.inverse();
  r.u = Permutation::identity(n);
  r.x = cob_relabel(t.x, hinv);
  Permutation T = t.s.src.terrestrial_labels() * t.u;
  Permutation A = t.s.src.aerial_labels() * t.x.src;
  r.s.src = ShuffleObject::make(t.s.src.pattern(), T, A);
  r.s.tgt = ShuffleObject::make(t.s.tgt.pattern(), T, A);
  return r;
}

bool triple_equal(const ZetaTriple& a, const ZetaTriple& b) {
  ZetaTriple ca = canonicalize(a), cb = canonicalize(b);
  return ca.u == cb.u && cob_equal(ca.x, cb.x) && ca.s.src == cb.s.src && ca.s.tgt == cb.s.tgt;
}

CoPBMorphism zeta(const ZetaTriple& t) {
  validate(t.x);
  if (!is_valid(t.s)) throw std::invalid_argument("zeta: shuffle part is not a morphism");
  if (t.u.size() != t.s.src.n() || t.x.arity() != t.s.src.m()) throw std::invalid_argument("zeta: arity mismatch");
  CoPBMorphism r{compose_labels(t.s.src, t.u, t.x.src), compose_labels(t.s.tgt, t.u, t.x.tgt), t.x.braid};
  validate(r);
  return r;
}

ZetaTriple zeta_inverse(const CoPBMorphism& x) {
  validate(x);
  ZetaTriple t;
  t.u = Permutation::identity(x.n());
  t.x = CoBMorphism::from_braid(x.braid);
  t.s.src = x.src;
  t.s.tgt = ShuffleObject::make(x.tgt.pattern(), x.src.terrestrial_labels(), x.src.aerial_labels());
  return t;
}

ZetaTriple triple_compose(const ZetaTriple& g, const ZetaTriple& f) {
  ZetaTriple cf = canonicalize(f), cg = canonicalize(g);
  // re-represent g so that its source end reads like f's target end
  const Permutation h = cf.x.tgt;
  ZetaTriple g2;
  g2.u = cg.u;
  g2.x = cob_relabel(cg.x, h);
  Permutation hinv = h.inverse();
  Permutation A = cg.s.src.aerial_labels() * hinv;
  Permutation T = cg.s.src.terrestrial_labels();
  g2.s.src = ShuffleObject::make(cg.s.src.pattern(), T, A);
  g2.s.tgt = ShuffleObject::make(cg.s.tgt.pattern(), T, A);
  if (g2.u != cf.u || g2.s.src != cf.s.tgt || g2.x.src != cf.x.tgt)
    throw std::invalid_argument("triple compose: object mismatch");
  ZetaTriple r;
  r.u = cf.u;
  r.x = cob_compose(g2.x, cf.x);
  r.s = {cf.s.src, g2.s.tgt};
  return canonicalize(r);
}

nlohmann::json cob_to_json(const CoBMorphism& x) {
  return {{"src", perm_to_json(x.src)}, {"tgt", perm_to_json(x.tgt)}, {"braid", braid_to_json(x.braid)}};
}

CoBMorphism cob_from_json(const nlohmann::json& j) {
  CoBMorphism x;
  x.braid = braid_from_json(j.at("braid"));
  x.src = j.contains("src") ? perm_from_json(j.at("src")) : Permutation::identity(x.braid.strands);
  x.tgt = j.contains("tgt") ? perm_from_json(j.at("tgt")) : carry(x.src, x.braid);
  validate(x);
  return x;
}

nlohmann::json copb_to_json(const CoPBMorphism& x) {
  return {{"src", shuffle_to_json(x.src)}, {"tgt", shuffle_to_json(x.tgt)}, {"braid", braid_to_json(x.braid)}};
}

CoPBMorphism copb_from_json(const nlohmann::json& j) {
  CoPBMorphism x;
  x.src = shuffle_from_json(j.at("src"));
  x.tgt = shuffle_from_json(j.at("tgt"));
  x.braid = j.contains("braid") ? braid_from_json(j.at("braid")) : BraidWord(x.src.m());
  validate(x);
  return x;
}

long long copb_object_count(int n, int m) {
  long long r = static_cast<long long>(all_shuffles(n, m).size());
  for (int i = 2; i <= n; ++i) r *= i;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

}  // namespace opgpd
