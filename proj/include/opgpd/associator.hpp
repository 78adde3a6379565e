#pragma once
// Drinfeld associators as truncated data and the induced map from PaB to chord diagrams.

#include "opgpd/chord.hpp"
#include "opgpd/generator_word.hpp"

namespace opgpd {

// Phi is a series in two letters: 0 stands for t12, 1 for t13 (or t23, see PhiVariables).
struct Associator {
  Rational mu = 1;
  int N = 0;
  NCSeries phi;

  static Associator trivial(const Rational& mu, int N);
};

enum class PhiVariables { T12_T13, T12_T23 };

// Phi as an element on 3 strands.
DKElement phi_element(const Associator& a, PhiVariables v = PhiVariables::T12_T13);
// Rewrites a Phi recorded in (t12, t23) into (t12, t13). Requires no linear part in log Phi.
NCSeries phi_t23_to_t13(const NCSeries& phi);

// Evaluates words in tau, alpha_c, mu_c (and units) as parenthesized chord diagrams.
struct CDTarget {
  using Value = PaCDMorphism;
  Associator A;
  DKElement phi3, tau2;

  explicit CDTarget(const Associator& a);
  Value gen(const std::string& name, bool inv);
  Value id(const Tree& t) { return pacd_identity(t, A.N); }
  Value compose(const Value& g, const Value& f) { return pacd_compose(g, f); }
  Value insert(const Value& o, Slot s, const Value& i);
  Value relabel(const Value& v, const Permutation& so, const Permutation& sc);
};

// Image of a closed-output PaPB (that is, PaB) morphism.
DKElement phi_eval(const Associator& a, const PaPBMorphism& y, Comb shape = Comb::Left);
PaCDMorphism lift_phi_tilde(const Associator& a, const PaPBMorphism& y, Comb shape = Comb::Left);
PaCDMorphism eval_word_cd(const Associator& a, const GenWord& w);

struct AssociatorResiduals {
  DKElement pentagon, hexagon1, hexagon2;
  bool all_zero() const { return pentagon.s.is_zero() && hexagon1.s.is_zero() && hexagon2.s.is_zero(); }
};

// Both paths of each diagram pushed through the map; differences in 4 and 3 strands.
AssociatorResiduals associator_residuals(const Associator& a);
DKElement check_pentagon(const Associator& a);
std::pair<DKElement, DKElement> check_hexagons(const Associator& a);
// Phi grouplike in the free algebra on two letters.
bool phi_grouplike(const Associator& a);

struct SolveReport {
  bool ok = false;
  Associator result;
  std::vector<int> free_parameters;  // per degree
  std::string message;
};

// Degree by degree: constraints on Phi_d are affine once lower degrees are fixed.
SolveReport solve_associator(const Rational& mu, int N);
// All coefficients up to degree 2 at once, products of unknowns linearized.
SolveReport solve_associator_oneshot(const Rational& mu);

nlohmann::json associator_to_json(const Associator& a);
Associator associator_from_json(const nlohmann::json& j);

}  // namespace opgpd
