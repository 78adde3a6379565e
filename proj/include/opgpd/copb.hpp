#pragma once
// Colored braids CoB, shuffles Sh and the two-colored operad CoPB, unitary versions included.
// A CoPB morphism is stored as (source, target, aerial braid); terrestrial strands never cross.

#include <optional>

#include "opgpd/braid.hpp"
#include "opgpd/trees.hpp"

namespace opgpd {

// Aerial labels read left to right at both ends; braid on m strands.
struct CoBMorphism {
  Permutation src, tgt;
  BraidWord braid;

  static CoBMorphism identity(const Permutation& order);
  static CoBMorphism from_braid(const BraidWord& b);  // source is the identity order
  static CoBMorphism unit() { return identity(Permutation{}); }  // *c
  int arity() const { return src.size(); }
};

void validate(const CoBMorphism& x);
bool cob_equal(const CoBMorphism& a, const CoBMorphism& b);
CoBMorphism cob_compose(const CoBMorphism& g, const CoBMorphism& f);  // f first
CoBMorphism cob_insert(const CoBMorphism& outer, int i, const CoBMorphism& inner);
CoBMorphism cob_relabel(const CoBMorphism& x, const Permutation& s);  // label l -> s(l)

struct CoPBMorphism {
  ShuffleObject src, tgt;
  BraidWord braid;  // on m aerial strands

  int n() const { return src.n(); }
  int m() const { return src.m(); }
};

void validate(const CoPBMorphism& x);
bool copb_equal(const CoPBMorphism& a, const CoPBMorphism& b);
CoPBMorphism copb_identity(const ShuffleObject& x);
CoPBMorphism copb_compose(const CoPBMorphism& g, const CoPBMorphism& f);  // f first
CoPBMorphism copb_inverse(const CoPBMorphism& f);
CoPBMorphism copb_insert_closed(const CoPBMorphism& outer, int i, const CoBMorphism& inner);
CoPBMorphism copb_insert_open(const CoPBMorphism& outer, int j, const CoPBMorphism& inner);
// Relabels terrestrial labels by so and aerial labels by sc.
CoPBMorphism copb_relabel(const CoPBMorphism& x, const Permutation& so, const Permutation& sc);

enum class UnitKind { Closed, Open };
CoPBMorphism restrict_unit(const CoPBMorphism& x, UnitKind which, int slot);

std::optional<CoPBMorphism> shuffle_type_morphism(const ShuffleObject& x, const ShuffleObject& y);
bool is_shuffle_type(const CoPBMorphism& x);

// Operadic block permutation s o_i id_k on labels (s acting on outer labels, block of width k).
Permutation block_permutation(const Permutation& s, int i, int k);

// Morphisms of Sh: exist iff both label orders agree.
struct ShuffleMorphism {
  ShuffleObject src, tgt;
};
bool is_valid(const ShuffleMorphism& s);

// Triple (u, x, s) of the product description of CoPB, u an object of the discrete CoP.
// Labels of u and x are intermediate names; the shuffle's labels map them to final labels.
struct ZetaTriple {
  Permutation u;
  CoBMorphism x;
  ShuffleMorphism s;
};

ZetaTriple canonicalize(const ZetaTriple& t);
bool triple_equal(const ZetaTriple& a, const ZetaTriple& b);
CoPBMorphism zeta(const ZetaTriple& t);
ZetaTriple zeta_inverse(const CoPBMorphism& x);
// Composition in the product groupoid, f first.
ZetaTriple triple_compose(const ZetaTriple& g, const ZetaTriple& f);

nlohmann::json copb_to_json(const CoPBMorphism& x);
CoPBMorphism copb_from_json(const nlohmann::json& j);
nlohmann::json cob_to_json(const CoBMorphism& x);
CoBMorphism cob_from_json(const nlohmann::json& j);

// |Sh_{n,m}| * n! * m!
long long copb_object_count(int n, int m);

}  // namespace opgpd
