#pragma once
// Truncated Drinfeld-Kohno algebras: chord diagrams on r strands modulo the
// infinitesimal braid relations, normal forms, coproduct, insertion, restriction.
// Generator t_ij (i < j) is letter index_of(r, i, j); strands are input labels.

#include <map>
#include <utility>

#include "opgpd/series.hpp"
#include "opgpd/trees.hpp"

namespace opgpd {

int dk_alphabet(int r);
int dk_letter(int r, int i, int j);  // order of the pair is irrelevant
std::pair<int, int> dk_pair(int r, int letter);

struct DKElement {
  int r = 0;
  NCSeries s;

  int degree() const { return s.degree; }
  bool operator==(const DKElement& o) const { return r == o.r && s == o.s; }
};

// Defining relations of degree 2 (with repetitions), as raw series.
std::vector<NCSeries> dk_relations(int r, int N);
// Rank of the degree-d part of the two-sided relation ideal (cached).
int dk_ideal_rank(int r, int d);
// Dimension of the degree-d part of the quotient algebra.
long long dk_dimension(int r, int d);

DKElement dk_normal_form(const NCSeries& raw, int r);
DKElement dk_one(int r, int N);
DKElement dk_zero(int r, int N);
DKElement dk_t(int r, int N, int i, int j);
DKElement dk_mul(const DKElement& a, const DKElement& b);
DKElement dk_add(const DKElement& a, const DKElement& b);
DKElement dk_scale(const DKElement& a, const Rational& c);
DKElement dk_exp(const DKElement& x);
DKElement dk_inverse(const DKElement& g);  // constant term 1 required

// Truncated tensor square, both factors in normal form.
using Tensor = std::map<std::pair<Word, Word>, Rational>;
Tensor dk_coproduct(const DKElement& e);
Tensor dk_tensor_square(const DKElement& e);
bool grouplike_check(const DKElement& g);

// Image of each letter under an algebra map into the r2-strand algebra.
DKElement dk_substitute(const DKElement& e, int r2, const std::vector<NCSeries>& images);
// u o_k v = d_k(u) . shift_k(v) on r + s - 1 strands.
DKElement dk_insert(const DKElement& u, int k, const DKElement& v);
// Strand k forgotten; monomials with a chord on k vanish.
DKElement dk_restrict(const DKElement& u, int k);
// t_ij -> t_{s(i) s(j)}
DKElement dk_relabel(const DKElement& u, const Permutation& s);
// Doubling map d_k alone (block of width w).
DKElement dk_double(const DKElement& u, int k, int w);

std::string dk_to_string(const DKElement& e);
DKElement dk_parse(const std::string& text, int r, int N);
nlohmann::json dk_to_json(const DKElement& e);
DKElement dk_from_json(const nlohmann::json& j);

// Parenthesized chord diagrams: pullback along the terminal map from the magma operad.
struct PaCDMorphism {
  Tree src, tgt;
  DKElement g;
};

PaCDMorphism pacd_identity(const Tree& t, int N);
PaCDMorphism pacd_make(const Tree& src, const Tree& tgt, const DKElement& g);  // any two objects of equal arity
// f first; the series of f stands on the left.
PaCDMorphism pacd_compose(const PaCDMorphism& g, const PaCDMorphism& f);
PaCDMorphism pacd_inverse(const PaCDMorphism& f);
PaCDMorphism pacd_insert(const PaCDMorphism& outer, int i, const PaCDMorphism& inner);
PaCDMorphism pacd_relabel(const PaCDMorphism& x, const Permutation& s);
bool pacd_equal(const PaCDMorphism& a, const PaCDMorphism& b);

}  // namespace opgpd
