#pragma once
// Free magma operads: parenthesized words in closed (x) and open (y) inputs.

#include <string>
#include <vector>

#include "opgpd/braid.hpp"

namespace opgpd {

enum class Kind { MC, MO, F, UnitC, UnitO, X, Y };
enum class Color { Closed, Open };

struct Tree {
  Kind kind = Kind::X;
  int label = 0;  // for X and Y leaves
  std::vector<Tree> kids;

  static Tree x(int i) { return {Kind::X, i, {}}; }
  static Tree y(int j) { return {Kind::Y, j, {}}; }
  static Tree unit_c() { return {Kind::UnitC, 0, {}}; }
  static Tree unit_o() { return {Kind::UnitO, 0, {}}; }
  static Tree mc(Tree a, Tree b) { return {Kind::MC, 0, {std::move(a), std::move(b)}}; }
  static Tree mo(Tree a, Tree b) { return {Kind::MO, 0, {std::move(a), std::move(b)}}; }
  static Tree f(Tree a) { return {Kind::F, 0, {std::move(a)}}; }

  Color color() const;
  int n_open() const;    // number of y leaves
  int m_closed() const;  // number of x leaves
  bool has_units() const;
  bool operator==(const Tree& o) const {
    return kind == o.kind && label == o.label && kids == o.kids;
  }
  bool operator<(const Tree& o) const;
};

// Checks color discipline and label bijectivity. Throws on violation.
void validate(const Tree& t, bool allow_units = true);

Tree parse_tree(const std::string& s);
std::string to_string(const Tree& t);

// Rewrites mc(*,T), mc(T,*), mo(*,T), mo(T,*) and f(*c) to normal form.
Tree normalize_units(const Tree& t);

// Input slot reference: color and label.
struct Slot {
  Color color;
  int label;
};

// Operadic substitution. Closed labels of inner go after the outer closed labels
// for an open slot; standard block relabeling otherwise.
Tree graft(const Tree& outer, Slot slot, const Tree& inner);

// Relabel leaves: x_i -> x_{sc(i)}, y_j -> y_{so(j)}.
Tree relabel(const Tree& t, const Permutation& so, const Permutation& sc);

// Left-to-right closed and open label sequences.
std::vector<int> closed_leaves(const Tree& t);
std::vector<int> open_leaves(const Tree& t);

// Object of the colored operad: a sequence of terrestrial/aerial labelled points.
struct Point {
  bool aerial;
  int label;
  bool operator==(const Point&) const = default;
  auto operator<=>(const Point&) const = default;
};

struct ShuffleObject {
  std::vector<Point> points;

  int n() const;  // terrestrial count
  int m() const;  // aerial count
  std::vector<bool> pattern() const;  // true = aerial
  Permutation terrestrial_labels() const;
  Permutation aerial_labels() const;
  // Slot index (0-based) of the given point.
  int index_of(bool aerial, int label) const;
  bool is_valid() const;
  bool operator==(const ShuffleObject&) const = default;
  auto operator<=>(const ShuffleObject&) const = default;

  static ShuffleObject make(const std::vector<bool>& pattern, const Permutation& terr,
                            const Permutation& aer);
};

std::string to_string(const ShuffleObject& s);
ShuffleObject parse_shuffle_object(const std::string& s);
nlohmann::json shuffle_to_json(const ShuffleObject& s);
ShuffleObject shuffle_from_json(const nlohmann::json& j);

ShuffleObject omega_map(const Tree& t);
// Erases f and turns mo into mc. Requires no open inputs.
Tree forget_parenthesization_U(const Tree& t);

// All normal-form trees of arity (n, m) with open output.
std::vector<Tree> enumerate(int n, int m, bool with_units = false);
// All closed-output magma trees on m labels (parenthesized permutations).
std::vector<Tree> enumerate_closed(int m, bool with_units = false);
// All shuffle objects of arity (n, m).
std::vector<ShuffleObject> all_shuffle_objects(int n, int m);
std::vector<std::vector<bool>> all_shuffles(int n, int m);
std::vector<Permutation> all_permutations(int n);

}  // namespace opgpd
