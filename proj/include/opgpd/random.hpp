#pragma once
// Random instances for the randomized suites. Deterministic given the generator state.

#include <random>

#include "opgpd/papb.hpp"

namespace opgpd {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);
BraidWord random_braid(Rng& rng, int strands, int max_len);
Permutation random_permutation(Rng& rng, int n);
std::vector<bool> random_shuffle_pattern(Rng& rng, int n, int m);
ShuffleObject random_shuffle_object(Rng& rng, int n, int m);
CoBMorphism random_cob(Rng& rng, int m, int max_len);
// Random morphism out of a given source.
CoPBMorphism random_copb_from(Rng& rng, const ShuffleObject& src, int max_len);
CoPBMorphism random_copb(Rng& rng, int n, int m, int max_len);
// Random normal-form trees (no units).
Tree random_closed_tree(Rng& rng, int m);
Tree random_open_tree(Rng& rng, int n, int m);
// Random normal-form tree whose leaves read left to right are the given points.
Tree random_tree_over(Rng& rng, const ShuffleObject& s);
// Random PaPB morphism of arity (n, m); closed output when n = 0 and closed is set.
PaPBMorphism random_papb(Rng& rng, int n, int m, int max_len, bool closed = false);
PaPBMorphism random_papb_from(Rng& rng, const Tree& src, int max_len);

}  // namespace opgpd
