#pragma once
// PaPB-algebra data on finite categories: tables, preconditions, coherence checking and
// evaluation of generator words as natural transformations.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "opgpd/generator_word.hpp"

namespace opgpd {

struct FiniteCategory {
  std::vector<std::string> objects;
  std::vector<std::string> morphisms;
  std::vector<int> src, tgt;
  std::vector<int> identity;           // per object
  std::vector<std::vector<int>> comp;  // comp[g][f] = g o f, or -1 when not composable

  int n_objects() const { return static_cast<int>(objects.size()); }
  int n_morphisms() const { return static_cast<int>(morphisms.size()); }
  int object(const std::string& name) const;
  int morphism(const std::string& name) const;
  int compose(int g, int f) const;  // throws when not composable
  std::optional<int> inverse(int f) const;

  static FiniteCategory discrete(const std::vector<std::string>& objects);
  // One object per group element of Z/k-graded lines: Aut(a) = {+1, -1}.
  static FiniteCategory signed_points(const std::vector<std::string>& objects);
};

void validate(const FiniteCategory& c);

struct Bifunctor {
  std::vector<std::vector<int>> obj, mor;
};

struct Functor {
  std::vector<int> obj, mor;
};

// Components are flat tables: index (a, b, c) -> (a * k + b) * k + c for k objects.
struct AlgebraData {
  FiniteCategory M, N;
  Bifunctor m_c, m_o;
  Functor F;
  std::vector<int> a_c, a_o, t, p, psi;  // psi indexed by (a in M, y in N)
  std::optional<int> unit_M, unit_N;
  bool strict_unit = false;
};

// Category axioms, functor laws, typing, invertibility and naturality of every component.
// Throws std::invalid_argument describing the first problem found.
void validate(const AlgebraData& d);

struct Env {
  std::vector<int> x, y;  // objects of M for closed labels, of N for open labels
};

// Objects and morphisms assigned by a tree, using m_c, m_o and F.
int tree_object(const AlgebraData& d, const Tree& t, const Env& e);

// Generator words as natural transformations.
struct ThetaTarget {
  struct Value {
    Tree src, tgt;
    std::function<int(const Env&)> at;
  };
  const AlgebraData* d;

  explicit ThetaTarget(const AlgebraData& data) : d(&data) {}
  Value gen(const std::string& name, bool inv);
  Value id(const Tree& t);
  Value compose(const Value& g, const Value& f);
  Value insert(const Value& o, Slot s, const Value& i);
  Value relabel(const Value& v, const Permutation& so, const Permutation& sc);
};

// Component of the word at the given objects; in M for closed output, in N otherwise.
int theta_eval(const AlgebraData& d, const GenWord& w, const Env& e);

struct FamilyReport {
  std::string family;
  long long instances = 0;
  std::vector<Env> failures;  // in enumeration order
};

struct CoherenceReport {
  std::vector<FamilyReport> families;
  std::vector<std::string> unit_problems;  // strict unit flag only
  bool ok() const;
  long long instances() const;
};

// Every object tuple of every diagram. The parallel version returns the same report.
CoherenceReport check_coherence(const AlgebraData& d);
CoherenceReport check_coherence_serial(const AlgebraData& d);

std::string describe(const AlgebraData& d, const Env& e);
nlohmann::json report_to_json(const AlgebraData& d, const CoherenceReport& r);

AlgebraData algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const AlgebraData& d);

// Discrete category on a finite group, product as tensor, every structure map an identity.
// validate rejects it at typing when the group is not abelian.
AlgebraData discrete_group_algebra(const std::vector<std::string>& elements,
                                   const std::vector<std::vector<int>>& mult);
AlgebraData cyclic_discrete(int k);
AlgebraData s3_discrete();
// Z/2-graded lines with the Koszul sign as symmetry and as half-braiding.
AlgebraData graded_sign_algebra();

}  // namespace opgpd
