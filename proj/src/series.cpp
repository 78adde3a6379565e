#include "opgpd/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace opgpd {

Rational frac(long a, long b) {
  if (b == 0) throw std::invalid_argument("zero denominator");
  Rational q(a, b);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != ' ') t += c;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  Rational q;
  if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

NCSeries NCSeries::one(int alphabet, int N) { return monomial(alphabet, N, {}, 1); }

NCSeries NCSeries::monomial(int alphabet, int N, const Word& w, const Rational& c) {
  NCSeries s(alphabet, N);
  s.add_term(w, c);
  return s;
}

Rational NCSeries::coef(const Word& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? Rational(0) : it->second;
}

void NCSeries::add_term(const Word& w, const Rational& c) {
  if (c == 0 || static_cast<int>(w.size()) > degree) return;
  for (int g : w)
    if (g < 0 || g >= alphabet) throw std::out_of_range("generator index out of range");
  auto [it, fresh] = terms.try_emplace(w, c);
  if (fresh) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

NCSeries NCSeries::homogeneous(int d) const {
  NCSeries r(alphabet, degree);
  for (auto& [w, c] : terms)
    if (static_cast<int>(w.size()) == d) r.terms.emplace(w, c);
  return r;
}

NCSeries NCSeries::truncated(int N) const {
  NCSeries r(alphabet, N);
  for (auto& [w, c] : terms)
    if (static_cast<int>(w.size()) <= N) r.terms.emplace(w, c);
  return r;
}

int NCSeries::max_word_length() const {
  int d = -1;
  for (auto& [w, c] : terms) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

static void check_alpha(const NCSeries& a, const NCSeries& b) {
  if (a.alphabet != b.alphabet) throw std::invalid_argument("alphabet mismatch");
}

NCSeries& NCSeries::operator+=(const NCSeries& o) {
  check_alpha(*this, o);
  degree = std::min(degree, o.degree);
  for (auto it = terms.begin(); it != terms.end();)
    it = static_cast<int>(it->first.size()) > degree ? terms.erase(it) : std::next(it);
  for (auto& [w, c] : o.terms) add_term(w, c);
  return *this;
}

NCSeries& NCSeries::operator-=(const NCSeries& o) {
  NCSeries neg = o;
  neg *= -1;
  return *this += neg;
}

NCSeries& NCSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [w, v] : terms) v *= c;
  return *this;
}

NCSeries operator+(NCSeries a, const NCSeries& b) { return a += b; }
NCSeries operator-(NCSeries a, const NCSeries& b) { return a -= b; }
NCSeries operator-(NCSeries a) { return a *= -1; }
NCSeries operator*(const Rational& c, NCSeries a) { return a *= c; }

NCSeries series_mul(const NCSeries& a, const NCSeries& b, std::optional<int> N) {
  check_alpha(a, b);
  int n = N.value_or(std::min(a.degree, b.degree));
  if (n > std::min(a.degree, b.degree)) throw std::invalid_argument("truncation exceeds operands");
  NCSeries r(a.alphabet, n);
  Word w;
  for (auto& [u, cu] : a.terms) {
    if (static_cast<int>(u.size()) > n) continue;
    for (auto& [v, cv] : b.terms) {
      if (u.size() + v.size() > static_cast<size_t>(n)) continue;
      w = u;
      w.insert(w.end(), v.begin(), v.end());
      r.add_term(w, cu * cv);
    }
  }
  return r;
}

NCSeries series_pow(const NCSeries& a, int k, int N) {
  NCSeries r = NCSeries::one(a.alphabet, N);
  for (int i = 0; i < k; ++i) r = series_mul(r, a, N);
  return r;
}

NCSeries series_exp(const NCSeries& x, int N) {
  if (x.constant() != 0) throw std::invalid_argument("series_exp: nonzero constant term");
  NCSeries xt = x.truncated(N);
  NCSeries r = NCSeries::one(x.alphabet, N);
  NCSeries p = r;
  for (int k = 1; k <= N; ++k) {
    p = series_mul(p, xt, N);
    p *= Rational(1, k);
    r += p;
  }
  return r;
}

NCSeries series_log(const NCSeries& g, int N) {
  if (g.constant() != 1) throw std::invalid_argument("series_log: constant term must be 1");
  NCSeries y = g.truncated(N) - NCSeries::one(g.alphabet, N);
  NCSeries r(g.alphabet, N);
  NCSeries p = NCSeries::one(g.alphabet, N);
  for (int k = 1; k <= N; ++k) {
    p = series_mul(p, y, N);
    NCSeries t = p;
    t *= Rational(k % 2 ? 1 : -1, k);
    r += t;
  }
  return r;
}

NCSeries commutator(const NCSeries& a, const NCSeries& b, int N) {
  return series_mul(a, b, N) - series_mul(b, a, N);
}

void LinearSystem::add_row(std::map<int, Rational> coeffs, Rational rhs) {
  for (auto it = coeffs.begin(); it != coeffs.end();) {
    if (it->first < 0) throw std::out_of_range("negative column");
    num_columns = std::max(num_columns, it->first + 1);
    it = it->second == 0 ? coeffs.erase(it) : std::next(it);
  }
  rows.emplace_back(std::move(coeffs), std::move(rhs));
}

Echelon::Row Echelon::reduce(Row v) const {
  std::vector<std::pair<int, Rational>> hits;
  for (auto& [c, x] : v)
    if (rows_.count(c)) hits.emplace_back(c, x);
  for (auto& [p, x] : hits) {
    for (auto& [c, y] : rows_.at(p)) {
      auto [it, fresh] = v.try_emplace(c, 0);
      it->second -= x * y;
      if (it->second == 0) v.erase(it);
    }
  }
  return v;
}

bool Echelon::insert(Row v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  int p = v.begin()->first;
  Rational lead = v.begin()->second;
  for (auto& [c, x] : v) x /= lead;
  for (auto& [q, row] : rows_) {
    auto it = row.find(p);
    if (it == row.end()) continue;
    Rational f = it->second;
    for (auto& [c, x] : v) {
      auto [jt, fresh] = row.try_emplace(c, 0);
      jt->second -= f * x;
      if (jt->second == 0) row.erase(jt);
    }
  }
  rows_.emplace(p, std::move(v));
  return true;
}

SolveResult solve_exact(const LinearSystem& sys) {
  const int nc = sys.num_columns;
  Echelon e;
  for (auto& [coeffs, rhs] : sys.rows) {
    Echelon::Row r = coeffs;
    if (rhs != 0) r[nc] = rhs;
    e.insert(std::move(r));
  }
  SolveResult res;
  res.consistent = e.rows().count(nc) == 0;
  if (!res.consistent) return res;
  res.rank = e.rank();
  res.solution.assign(nc, 0);
  std::vector<bool> is_pivot(nc, false);
  for (auto& [p, row] : e.rows()) {
    is_pivot[p] = true;
    res.pivots.push_back(p);
    auto it = row.find(nc);
    if (it != row.end()) res.solution[p] = it->second;
  }
  for (int f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(nc, 0);
    v[f] = 1;
    for (auto& [p, row] : e.rows()) {
      auto it = row.find(f);
      if (it != row.end()) v[p] = -it->second;
    }
    res.nullspace.push_back(std::move(v));
  }
  return res;
}

nlohmann::json series_to_json(const NCSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto& [w, c] : s.terms) terms.push_back({{"coef", to_string(c)}, {"word", w}});
  return {{"alphabet", s.alphabet}, {"degree", s.degree}, {"terms", terms}};
}

NCSeries series_from_json(const nlohmann::json& j) {
  NCSeries s(j.at("alphabet").get<int>(), j.at("degree").get<int>());
  for (auto& t : j.at("terms")) {
    auto& c = t.at("coef");
    Rational q = c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>());
    s.add_term(t.at("word").get<Word>(), q);
  }
  return s;
}

}  // namespace opgpd
