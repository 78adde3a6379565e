#include "opgpd/voronov.hpp"

namespace opgpd {

namespace {

bool closed_magma(const Tree& t) {
  if (t.kind == Kind::X || t.kind == Kind::UnitC) return true;
  return t.kind == Kind::MC && closed_magma(t.kids[0]) && closed_magma(t.kids[1]);
}

}  // namespace

DKElement CDOperad::merge(const DKElement& a, const DKElement& b) const {
  return dk_insert(dk_insert(dk_one(2, N), 2, b), 1, a);
}

void validate(const PaPMorphism& x) {
  validate(x.src);
  validate(x.tgt);
  if (!closed_magma(x.src) || !closed_magma(x.tgt)) throw std::invalid_argument("PaP: closed magma trees expected");
  if (closed_leaves(x.src) != closed_leaves(x.tgt)) throw std::invalid_argument("PaP: leaf orders differ");
}

int PaPOperad::arity(const PaPMorphism& e) const { return e.src.m_closed(); }

PaPMorphism PaPOperad::insert(const PaPMorphism& a, int i, const PaPMorphism& b) const {
  Slot s{Color::Closed, i};
  PaPMorphism r{graft(a.src, s, b.src), graft(a.tgt, s, b.tgt)};
  validate(r);
  return r;
}

PaPMorphism PaPOperad::relabel(const PaPMorphism& e, const Permutation& s) const {
  return {opgpd::relabel(e.src, {}, s), opgpd::relabel(e.tgt, {}, s)};
}

CDxPaP build_cd_pap_instance(int N) { return CDxPaP(CDOperad{N}, PaPOperad{}, true); }

nlohmann::json voronov_to_json(const CDxPaP::Element& e) {
  return {{"p", dk_to_json(e.p)}, {"q", {{"src", to_string(e.q.src)}, {"tgt", to_string(e.q.tgt)}}}};
}

CDxPaP::Element voronov_from_json(const CDxPaP& V, const nlohmann::json& j) {
  PaPMorphism q{parse_tree(j.at("q").at("src").get<std::string>()), parse_tree(j.at("q").at("tgt").get<std::string>())};
  validate(q);
  DKElement p = dk_from_json(j.at("p"));
  const int N = V.closed_side().N;
  if (p.degree() < N) throw std::invalid_argument("voronov: series truncated below the instance degree");
  if (p.degree() > N) p = dk_normal_form(p.s.truncated(N), p.r);
  return V.make(p, q);
}

}  // namespace opgpd
