#include "opgpd/associator.hpp"

#include <stdexcept>

namespace opgpd {

Associator Associator::trivial(const Rational& mu, int N) { return {mu, N, NCSeries::one(2, N)}; }

DKElement phi_element(const Associator& a, PhiVariables v) {
  const int N = a.N;
  std::vector<NCSeries> img = {NCSeries::generator(2, N, 0), NCSeries::generator(2, N, 1)};
  // substitute through a 2-letter "3-strand" map
  NCSeries out(dk_alphabet(3), N);
  int b = v == PhiVariables::T12_T13 ? dk_letter(3, 1, 3) : dk_letter(3, 2, 3);
  for (auto& [w, c] : a.phi.terms) {
    Word u;
    for (int x : w) u.push_back(x == 0 ? dk_letter(3, 1, 2) : b);
    out.add_term(u, c);
  }
  return dk_normal_form(out, 3);
}

NCSeries phi_t23_to_t13(const NCSeries& phi) {
  const int N = phi.degree;
  NCSeries L = series_log(phi, N);
  if (!L.homogeneous(1).is_zero()) throw std::invalid_argument("phi has a linear part; the rewrite is not exact");
  // b -> -a - b on Lie elements of degree >= 2
  NCSeries out(2, N);
  for (auto& [w, c] : L.terms) {
    NCSeries p = NCSeries::one(2, N);
    for (int x : w) {
      NCSeries img = x == 0 ? NCSeries::generator(2, N, 0)
                            : -(NCSeries::generator(2, N, 0) + NCSeries::generator(2, N, 1));
      p = series_mul(p, img, N);
    }
    out += c * p;
  }
  return series_exp(out, N);
}

CDTarget::CDTarget(const Associator& a)
    : A(a), phi3(phi_element(a)), tau2(dk_exp(dk_scale(dk_t(2, a.N, 1, 2), a.mu / 2))) {}

CDTarget::Value CDTarget::gen(const std::string& name, bool inv) {
  PaCDMorphism m;
  if (name == "mu_c")
    return pacd_identity(parse_tree("mc(x1, x2)"), A.N);
  else if (name == "tau")
    m = pacd_make(parse_tree("mc(x1, x2)"), parse_tree("mc(x2, x1)"), tau2);
  else if (name == "alpha_c")
    m = pacd_make(parse_tree("mc(mc(x1, x2), x3)"), parse_tree("mc(x1, mc(x2, x3))"), phi3);
  else
    throw std::invalid_argument("generator " + name + " has no chord-diagram image");
  return inv ? pacd_inverse(m) : m;
}

CDTarget::Value CDTarget::insert(const Value& o, Slot s, const Value& i) {
  if (s.color != Color::Closed) throw std::invalid_argument("chord diagrams have closed inputs only");
  return pacd_insert(o, s.label, i);
}

CDTarget::Value CDTarget::relabel(const Value& v, const Permutation& so, const Permutation& sc) {
  if (so.size() != 0) throw std::invalid_argument("chord diagrams have closed inputs only");
  return pacd_relabel(v, sc);
}

PaCDMorphism eval_word_cd(const Associator& a, const GenWord& w) {
  CDTarget t(a);
  return evaluate(w, t);
}

PaCDMorphism lift_phi_tilde(const Associator& a, const PaPBMorphism& y, Comb shape) {
  if (y.color() != Color::Closed) throw std::invalid_argument("phi is defined on closed-output morphisms");
  PaCDMorphism r = eval_word_cd(a, to_generator_word(y, shape));
  if (!(r.src == y.src && r.tgt == y.tgt)) throw std::logic_error("lift: endpoints moved");
  return r;
}

DKElement phi_eval(const Associator& a, const PaPBMorphism& y, Comb shape) { return lift_phi_tilde(a, y, shape).g; }

namespace {

const Diagram& find_diagram(const std::string& family) {
  for (auto& d : coherence_diagrams())
    if (d.family == family) return d;
  throw std::logic_error("missing diagram " + family);
}

DKElement residual(const Associator& a, const std::string& family) {
  CDTarget t(a);
  const Diagram& d = find_diagram(family);
  PaCDMorphism l = evaluate(d.lhs, t), r = evaluate(d.rhs, t);
  return dk_add(l.g, dk_scale(r.g, -1));
}

using Tensor2 = std::map<std::pair<Word, Word>, Rational>;

void prune(Tensor2& t) {
  for (auto it = t.begin(); it != t.end();) it = it->second == 0 ? t.erase(it) : std::next(it);
}

// Delta(phi) - phi (x) phi in the free algebra on two primitive letters.
Tensor2 grouplike_defect(const NCSeries& phi) {
  Tensor2 t;
  for (auto& [w, c] : phi.terms) {
    const int d = static_cast<int>(w.size());
    for (long mask = 0; mask < (1L << d); ++mask) {
      Word l, r;
      for (int i = 0; i < d; ++i) (mask >> i & 1 ? l : r).push_back(w[i]);
      t[{l, r}] += c;
    }
  }
  for (auto& [u, a] : phi.terms)
    for (auto& [v, b] : phi.terms)
      if (static_cast<int>(u.size() + v.size()) <= phi.degree) t[{u, v}] -= a * b;
  prune(t);
  return t;
}

// Residual coordinates of every constraint, keyed by (constraint, word(s)).
using Coords = std::map<std::tuple<int, Word, Word>, Rational>;

Coords constraint_coords(const Associator& a, int only_degree) {
  Coords out;
  auto put = [&](int tag, const DKElement& e) {
    for (auto& [w, c] : e.s.terms)
      if (only_degree < 0 || static_cast<int>(w.size()) == only_degree) out[{tag, w, {}}] += c;
  };
  AssociatorResiduals r = associator_residuals(a);
  put(0, r.pentagon);
  put(1, r.hexagon1);
  put(2, r.hexagon2);
  for (auto& [k, c] : grouplike_defect(a.phi))
    if (only_degree < 0 || static_cast<int>(k.first.size() + k.second.size()) == only_degree)
      out[{3, k.first, k.second}] += c;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::vector<Word> words_of_length(int d) {
  std::vector<Word> ws{{}};
  for (int i = 0; i < d; ++i) {
    std::vector<Word> next;
    for (auto& w : ws)
      for (int x = 0; x < 2; ++x) {
        Word v = w;
        v.push_back(x);
        next.push_back(v);
      }
    ws = next;
  }
  return ws;
}

Coords diff(const Coords& a, const Coords& b) {
  Coords r = a;
  for (auto& [k, c] : b) r[k] -= c;
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

}  // namespace

AssociatorResiduals associator_residuals(const Associator& a) {
  return {residual(a, "pentagon_c"), residual(a, "hexagon_1"), residual(a, "hexagon_2")};
}

DKElement check_pentagon(const Associator& a) { return residual(a, "pentagon_c"); }

std::pair<DKElement, DKElement> check_hexagons(const Associator& a) {
  return {residual(a, "hexagon_1"), residual(a, "hexagon_2")};
}

bool phi_grouplike(const Associator& a) { return a.phi.constant() == 1 && grouplike_defect(a.phi).empty(); }

SolveReport solve_associator(const Rational& mu, int N) {
  SolveReport rep;
  NCSeries phi = NCSeries::one(2, N);
  for (int d = 1; d <= N; ++d) {
    Associator base{mu, d, phi.truncated(d)};
    Coords r0 = constraint_coords(base, d);
    std::vector<Word> ws = words_of_length(d);
    std::vector<Coords> cols;
    for (auto& w : ws) {
      Associator p = base;
      p.phi.add_term(w, 1);
      cols.push_back(diff(constraint_coords(p, d), r0));
    }
    std::map<std::tuple<int, Word, Word>, std::map<int, Rational>> rows;
    for (size_t j = 0; j < cols.size(); ++j)
      for (auto& [k, c] : cols[j]) rows[k][static_cast<int>(j)] = c;
    for (auto& [k, c] : r0) rows[k];
    LinearSystem sys;
    sys.num_columns = static_cast<int>(ws.size());
    for (auto& [k, row] : rows) {
      auto it = r0.find(k);
      sys.add_row(row, it == r0.end() ? Rational(0) : Rational(-it->second));
    }
    SolveResult s = solve_exact(sys);
    if (!s.consistent) {
      rep.message = "inconsistent constraints in degree " + std::to_string(d);
      rep.result = {mu, N, phi};
      return rep;
    }
    rep.free_parameters.push_back(static_cast<int>(s.nullspace.size()));
    for (size_t j = 0; j < ws.size(); ++j) phi.add_term(ws[j], s.solution[j]);
  }
  rep.ok = true;
  rep.result = {mu, N, phi};
  return rep;
}

SolveReport solve_associator_oneshot(const Rational& mu) {
  const int N = 2;
  std::vector<Word> ws = words_of_length(1);
  for (auto& w : words_of_length(2)) ws.push_back(w);
  const int n = static_cast<int>(ws.size());
  auto at = [&](const std::vector<Rational>& x) {
    Associator a{mu, N, NCSeries::one(2, N)};
    for (int i = 0; i < n; ++i) a.phi.add_term(ws[i], x[i]);
    return constraint_coords(a, -1);
  };
  std::vector<Rational> zero(n, 0);
  Coords r0 = at(zero);
  std::vector<Coords> r1(n), r2(n);
  for (int i = 0; i < n; ++i) {
    auto e = zero;
    e[i] = 1;
    r1[i] = at(e);
    e[i] = 2;
    r2[i] = at(e);
  }
  // variable layout: x_i, then y_ij (i <= j) standing for x_i x_j
  std::map<std::pair<int, int>, int> yidx;
  int next = n;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) yidx[{i, j}] = next++;
  std::map<std::tuple<int, Word, Word>, std::map<int, Rational>> rows;
  for (int i = 0; i < n; ++i) {
    // Q_ii = (R(2e) - 2R(e) + R0) / 2, L_i = R(e) - R0 - Q_ii
    Coords q = diff(diff(r2[i], r1[i]), diff(r1[i], r0));
    for (auto& [k, c] : q) rows[k][yidx[{i, i}]] += c / 2;
    Coords l = diff(r1[i], r0);
    for (auto& [k, c] : l) rows[k][i] += c;
    for (auto& [k, c] : q) rows[k][i] -= c / 2;
    for (int j = i + 1; j < n; ++j) {
      auto e = zero;
      e[i] = 1;
      e[j] = 1;
      Coords cross = diff(diff(at(e), r1[i]), diff(r1[j], r0));
      for (auto& [k, c] : cross) rows[k][yidx[{i, j}]] += c;
    }
  }
  for (auto& [k, c] : r0) rows[k];
  auto build = [&]() {
    LinearSystem sys;
    sys.num_columns = next;
    for (auto& [k, row] : rows) {
      auto it = r0.find(k);
      sys.add_row(row, it == r0.end() ? Rational(0) : Rational(-it->second));
    }
    return sys;
  };
  SolveReport rep;
  LinearSystem sys = build();
  SolveResult s = solve_exact(sys);
  if (!s.consistent) {
    rep.message = "one-shot system inconsistent";
    return rep;
  }
  // the linear part of the system must force the degree-1 coefficients to vanish
  for (int i = 0; i < 2; ++i) {
    bool forced = s.solution[i] == 0;
    for (auto& v : s.nullspace) forced = forced && v[i] == 0;
    if (!forced) {
      rep.message = "degree-1 coefficients not determined by the linear part";
      return rep;
    }
  }
  for (auto& [ij, col] : yidx)
    if (ij.first < 2 || ij.second < 2) sys.add_row({{col, 1}}, 0);
  s = solve_exact(sys);
  if (!s.consistent) {
    rep.message = "one-shot system inconsistent after products vanish";
    return rep;
  }
  Associator a{mu, N, NCSeries::one(2, N)};
  for (int i = 0; i < n; ++i) a.phi.add_term(ws[i], s.solution[i]);
  rep.ok = true;
  rep.result = a;
  return rep;
}

nlohmann::json associator_to_json(const Associator& a) {
  return {{"mu", to_string(a.mu)}, {"degree", a.N}, {"variables", "t12,t13"}, {"phi", series_to_json(a.phi)}};
}

Associator associator_from_json(const nlohmann::json& j) {
  Associator a;
  auto& m = j.at("mu");
  a.mu = m.is_string() ? parse_rational(m.get<std::string>()) : Rational(m.get<long>());
  a.N = j.at("degree").get<int>();
  a.phi = series_from_json(j.at("phi")).truncated(a.N);
  if (a.phi.alphabet != 2) throw std::invalid_argument("phi must be a series in two letters");
  if (j.contains("variables") && j.at("variables") == "t12,t23") a.phi = phi_t23_to_t13(a.phi);
  return a;
}

}  // namespace opgpd
