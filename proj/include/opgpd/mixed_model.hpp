#pragma once
// PaPB' and its chord-diagram analogue: triples [u, x, mu] over parenthesized shuffles.
//
// Elements are stored with final labels everywhere: the leaves of u read like the open
// leaves of mu, the leaves of x.src read like the closed leaves of mu.src, and x.tgt like
// those of mu.tgt. This picks one representative per coinvariant class.

#include "opgpd/associator.hpp"
#include "opgpd/random.hpp"

namespace opgpd {

// P[n](m) = P(n+m); shifted inputs carry labels 1..n, ordinary ones n+1..n+m.
template <class M>
struct Shifted {
  int n = 0, m = 0;
  M payload;
};

struct PrimeElement {
  Tree u_src, u_tgt;  // closed magma trees on the open labels (PaP part)
  PaPBMorphism x;     // closed output, m strands (PaB part)
  Tree mu_src, mu_tgt;

  int n() const { return mu_src.n_open(); }
  int m() const { return mu_src.m_closed(); }
};

struct PaPCDElement {
  Tree u_src, u_tgt;
  PaCDMorphism alpha;
  Tree mu_src, mu_tgt;

  int n() const { return mu_src.n_open(); }
  int m() const { return mu_src.m_closed(); }
};

// U(mu(*o, ..., *o)).
Tree aerial_shadow(const Tree& mu);
// Bimagma tree read as a closed tree on n+m labels: y_j -> x_j, x_i -> x_{n+i}.
Tree flatten_shifted(const Tree& mu);
// Unique braid between two closed trees on n+m labels keeping the shifted and the
// ordinary labels in order; ordinary strands pass over shifted ones.
PaPBMorphism shifted_shuffle(const Tree& src, const Tree& tgt, int n);
// Every crossing involving a shifted strand has it underneath; shifted strands never meet.
bool shifted_strands_pass_under(const BraidWord& b, const std::vector<int>& src_labels, int n);

void validate(const PrimeElement& e);
void validate(const PaPCDElement& e);
bool prime_equal(const PrimeElement& a, const PrimeElement& b);
bool papcd_equal(const PaPCDElement& a, const PaPCDElement& b);

// Object [u, x, mu] given by u and mu; x is forced.
PrimeElement prime_object(const Tree& u, const Tree& mu);
PrimeElement prime_make(const Tree& u_src, const Tree& u_tgt, const BraidWord& b, const Tree& mu_src,
                        const Tree& mu_tgt);
PrimeElement prime_identity(const PrimeElement& object_at_source);
// Operad unit [x1, *c, y1] in arity (1, 0).
PrimeElement prime_unit();
PrimeElement prime_vcompose(const PrimeElement& g, const PrimeElement& f);  // f first
PrimeElement prime_relabel(const PrimeElement& e, const Permutation& so, const Permutation& sc);

Shifted<PaPBMorphism> rho(const PrimeElement& e);
// Right PaB-module action on closed label i.
PrimeElement prime_insert_closed(const PrimeElement& e, int i, const PaPBMorphism& y);
PrimeElement prime_insert_open(const PrimeElement& e, int j, const PrimeElement& inner);
// gamma(e; e_1, ..., e_r); closed labels of e_i follow those of e and of e_1..e_{i-1}.
PrimeElement compose_prime(const PrimeElement& e, const std::vector<PrimeElement>& inners);

CoPBMorphism to_copb(const PrimeElement& e);

// Chord-diagram side, relative to an associator.
PaPCDElement papcd_unit(int N);
PaPCDElement papcd_relabel(const PaPCDElement& e, const Permutation& so, const Permutation& sc);
Shifted<PaCDMorphism> rho_phi(const Associator& a, const PaPCDElement& e);
PaPCDElement papcd_insert_closed(const PaPCDElement& e, int i, const PaCDMorphism& y);
PaPCDElement papcd_insert_open(const Associator& a, const PaPCDElement& e, int j, const PaPCDElement& inner);
PaPCDElement compose_papcd(const Associator& a, const PaPCDElement& e, const std::vector<PaPCDElement>& inners);
PaPCDElement apply_phi(const Associator& a, const PrimeElement& e);
PaCDMorphism lift_phi_unitary(const Associator& a, const PaPBMorphism& y);

// Random element of arity (n, m) with braid words of length at most max_len.
PrimeElement random_prime(Rng& rng, int n, int m, int max_len);
PrimeElement random_prime_from(Rng& rng, const Tree& u_src, const Tree& mu_src, int max_len);

nlohmann::json prime_to_json(const PrimeElement& e);
PrimeElement prime_from_json(const nlohmann::json& j);
nlohmann::json papcd_to_json(const PaPCDElement& e);

}  // namespace opgpd
