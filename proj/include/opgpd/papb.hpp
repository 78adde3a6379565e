#pragma once
// Parenthesized operads PaB, PaP, PaPB: morphisms between magma trees borrowed from CoB/CoPB.

#include <map>
#include <string>

#include "opgpd/copb.hpp"

namespace opgpd {

// Closed-output trees carry CoB data stored with an all-aerial shuffle object.
struct PaPBMorphism {
  Tree src, tgt;
  CoPBMorphism under;

  Color color() const { return src.color(); }
};

void validate(const PaPBMorphism& x);
bool papb_equal(const PaPBMorphism& a, const PaPBMorphism& b);
PaPBMorphism papb_identity(const Tree& t);
PaPBMorphism papb_compose(const PaPBMorphism& g, const PaPBMorphism& f);  // f first
PaPBMorphism papb_inverse(const PaPBMorphism& f);
PaPBMorphism papb_insert(const PaPBMorphism& outer, Slot slot, const PaPBMorphism& inner);
PaPBMorphism papb_relabel(const PaPBMorphism& x, const Permutation& so, const Permutation& sc);
// Morphism with the given endpoints and underlying data; checks the pullback condition.
PaPBMorphism papb_make(const Tree& src, const Tree& tgt, const BraidWord& braid);
std::optional<PaPBMorphism> papb_shuffle_type(const Tree& src, const Tree& tgt);
CoBMorphism as_cob(const CoPBMorphism& x);

// The eight named generators: mu_c, mu_o, f (objects), tau, alpha_c, alpha_o, p, psi.
const std::map<std::string, PaPBMorphism>& generators();

// Left- and right-nested combs over a label sequence.
Tree left_comb(Kind op, const std::vector<Tree>& atoms);
Tree right_comb(Kind op, const std::vector<Tree>& atoms);

enum class Comb { Left, Right };
// Concatenated form mo(x_o, f(x_c)) with the terrestrial and aerial orders of s.
Tree concatenated_form(const ShuffleObject& s, Comb shape = Comb::Left);

struct Decomposition {
  PaPBMorphism mu;        // shuffle type, src -> x1'
  PaPBMorphism x_o;       // PaP part on the terrestrial strands
  PaPBMorphism x_c;       // PaB part on the aerial strands
  PaPBMorphism mu_prime;  // shuffle type, x2' -> tgt
};

Decomposition decompose(const PaPBMorphism& y, const Tree& x1, const Tree& x2);
Decomposition decompose(const PaPBMorphism& y, Comb shape = Comb::Left);
PaPBMorphism recompose(const Decomposition& d);

}  // namespace opgpd
