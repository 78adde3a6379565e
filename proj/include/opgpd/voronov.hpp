#pragma once
// Voronov product of two operads in groupoids along Com -> P, and the instance CD x_0 PaP.

#include <stdexcept>

#include "opgpd/chord.hpp"

namespace opgpd {

// P and Q provide: Element, arity(e), insert(a, i, b), relabel(e, s), equal(a, b).
// P additionally provides merge(a, b): the Com product applied to a and b, a first.
template <class P, class Q>
class VoronovProduct {
 public:
  struct Element {
    typename P::Element p;  // arity m (closed inputs)
    typename Q::Element q;  // arity n (open inputs)
  };

  VoronovProduct(P p, Q q, bool drop_empty) : P_(std::move(p)), Q_(std::move(q)), drop_(drop_empty) {}

  const P& closed_side() const { return P_; }
  const Q& open_side() const { return Q_; }

  int n(const Element& e) const { return Q_.arity(e.q); }
  int m(const Element& e) const { return P_.arity(e.p); }

  Element make(typename P::Element p, typename Q::Element q) const {
    Element e{std::move(p), std::move(q)};
    check(e);
    return e;
  }

  Element insert_closed(const Element& e, int i, const typename P::Element& x) const {
    if (i < 1 || i > m(e)) throw std::out_of_range("voronov: closed slot out of range");
    return make(P_.insert(e.p, i, x), e.q);
  }

  Element insert_open(const Element& e, int j, const Element& f) const {
    if (j < 1 || j > n(e)) throw std::out_of_range("voronov: open slot out of range");
    return make(P_.merge(e.p, f.p), Q_.insert(e.q, j, f.q));
  }

  Element relabel(const Element& e, const Permutation& so, const Permutation& sc) const {
    return make(P_.relabel(e.p, sc), Q_.relabel(e.q, so));
  }

  bool equal(const Element& a, const Element& b) const { return P_.equal(a.p, b.p) && Q_.equal(a.q, b.q); }

  // (1 in P(0), identity in Q(1))
  Element unit() const { return make(P_.unit0(), Q_.identity1()); }

 private:
  void check(const Element& e) const {
    if (drop_ && n(e) == 0 && m(e) == 0) throw std::invalid_argument("voronov: the (0, 0) component is removed");
  }

  P P_;
  Q Q_;
  bool drop_;
};

// Truncated chord diagrams: one object per arity, morphisms grouplike series.
struct CDOperad {
  using Element = DKElement;
  int N = 2;

  int arity(const Element& e) const { return e.r; }
  Element insert(const Element& a, int i, const Element& b) const { return dk_insert(a, i, b); }
  // empty chord diagram in arity 2 composed with a and b
  Element merge(const Element& a, const Element& b) const;
  Element relabel(const Element& e, const Permutation& s) const { return dk_relabel(e, s); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element unit0() const { return dk_one(0, N); }
};

// Parenthesized permutations: a morphism is a pair of trees with the same leaf order.
struct PaPMorphism {
  Tree src, tgt;
};

struct PaPOperad {
  using Element = PaPMorphism;

  int arity(const Element& e) const;
  Element insert(const Element& a, int i, const Element& b) const;
  Element relabel(const Element& e, const Permutation& s) const;
  bool equal(const Element& a, const Element& b) const { return a.src == b.src && a.tgt == b.tgt; }
  Element identity1() const { return {Tree::x(1), Tree::x(1)}; }
};

void validate(const PaPMorphism& x);

using CDxPaP = VoronovProduct<CDOperad, PaPOperad>;
CDxPaP build_cd_pap_instance(int N);

nlohmann::json voronov_to_json(const CDxPaP::Element& e);
CDxPaP::Element voronov_from_json(const CDxPaP& V, const nlohmann::json& j);

}  // namespace opgpd
