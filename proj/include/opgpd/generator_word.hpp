#pragma once
// Words in the PaPB generators, their evaluation against any target operad,
// and extraction of a word from a PaPB morphism.

#include <string>
#include <vector>

#include "opgpd/papb.hpp"

namespace opgpd {

struct GenWord {
  enum class Op { Gen, Id, Compose, Insert, Relabel };
  Op op = Op::Gen;
  std::string name;  // Gen
  bool inv = false;  // Gen
  Tree tree;         // Id
  std::vector<GenWord> args;  // Compose: a o b o c (last applied first); Insert: outer, inner; Relabel: body
  Slot slot{Color::Closed, 1};
  Permutation so, sc;  // Relabel

  static GenWord gen(std::string name, bool inv = false);
  static GenWord id(Tree t);
  static GenWord compose(std::vector<GenWord> ws);
  static GenWord insert(GenWord outer, Slot slot, GenWord inner);
  static GenWord relabel(GenWord w, Permutation so, Permutation sc);
};

// Structural evaluation. Target supplies Value and gen/id/compose/insert/relabel.
template <class Target>
typename Target::Value evaluate(const GenWord& w, Target& t) {
  switch (w.op) {
    case GenWord::Op::Gen: return t.gen(w.name, w.inv);
    case GenWord::Op::Id: return t.id(w.tree);
    case GenWord::Op::Compose: {
      auto v = evaluate(w.args.back(), t);
      for (size_t i = w.args.size() - 1; i-- > 0;) v = t.compose(evaluate(w.args[i], t), v);
      return v;
    }
    case GenWord::Op::Insert: return t.insert(evaluate(w.args[0], t), w.slot, evaluate(w.args[1], t));
    case GenWord::Op::Relabel: return t.relabel(evaluate(w.args[0], t), w.so, w.sc);
  }
  throw std::logic_error("bad word node");
}

// Endpoints only.
struct TreeTarget {
  using Value = std::pair<Tree, Tree>;
  Value gen(const std::string& name, bool inv);
  Value id(const Tree& t) { return {t, t}; }
  Value compose(const Value& g, const Value& f);
  Value insert(const Value& outer, Slot slot, const Value& inner);
  Value relabel(const Value& v, const Permutation& so, const Permutation& sc);
};

struct PaPBTarget {
  using Value = PaPBMorphism;
  Value gen(const std::string& name, bool inv);
  Value id(const Tree& t) { return papb_identity(t); }
  Value compose(const Value& g, const Value& f) { return papb_compose(g, f); }
  Value insert(const Value& o, Slot s, const Value& i) { return papb_insert(o, s, i); }
  Value relabel(const Value& v, const Permutation& so, const Permutation& sc) { return papb_relabel(v, so, sc); }
};

std::pair<Tree, Tree> endpoints(const GenWord& w);
PaPBMorphism evaluate_papb(const GenWord& w);

GenWord word_inverse(const GenWord& w);
int count_gen(const GenWord& w, const std::string& name);
int word_size(const GenWord& w);

// s-expression text: tau, tau^-1, (id TREE), (compose A B ...), (op-insert OUTER SLOT INNER),
// (relabel W (so...) (sc...)).
std::string to_string(const GenWord& w);
GenWord parse_word(const std::string& s);

// Tree with leaf labels compressed to 1..k, relative order kept.
Tree compress_labels(const Tree& t);
// Relabels w so that its source is exactly t (same shape required).
GenWord place(const GenWord& w, const Tree& t);
const Tree& subtree(const Tree& t, const std::vector<int>& path);
// Applies w (source = subtree at path) inside t, identities elsewhere.
GenWord whisker(const Tree& t, const std::vector<int>& path, const GenWord& w);
// A generator applied to a tree of the generator's source shape.
GenWord local_apply(const std::string& gen, bool inv, const Tree& t);

// Records a chain of rewrites starting from a tree.
class WordBuilder {
 public:
  explicit WordBuilder(Tree start) : start_(start), cur_(std::move(start)) {}
  const Tree& current() const { return cur_; }
  void apply(const std::vector<int>& path, const std::string& gen, bool inv = false);
  void apply_word(const std::vector<int>& path, const GenWord& w);
  GenWord word() const;

 private:
  Tree start_, cur_;
  std::vector<GenWord> steps_;
};

// Rotations alpha^-1 until every mc/mo node has a right child of another kind.
void to_left_comb(WordBuilder& b);
// Word between two parenthesizations of the same atom sequence.
GenWord reparen_word(const Tree& s, const Tree& t);
// Shuffle-type word u -> concatenated_form(omega(u), shape); uses no tau.
GenWord shuffle_word(const Tree& u, Comb shape = Comb::Left);
// Word on a closed left comb realizing the braid letter by letter.
GenWord pab_word(const Tree& left_comb_src, const BraidWord& braid);
GenWord to_generator_word(const PaPBMorphism& y, Comb shape = Comb::Left);

// One coherence diagram: two parallel words.
struct Diagram {
  std::string family;  // pentagon_c, pentagon_o, hexagon_1, hexagon_2, f_monoidal, f_center, f_braided, f_monoid_center
  GenWord lhs, rhs;
};
const std::vector<Diagram>& coherence_diagrams();

struct DiagramResult {
  std::string family;
  bool equal;
};
std::vector<DiagramResult> coherence_selftest();

}  // namespace opgpd
