#include "opgpd/chord.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace opgpd {

int dk_alphabet(int r) { return r * (r - 1) / 2; }

int dk_letter(int r, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > r || i == j) throw std::out_of_range("chord t" + std::to_string(i) + std::to_string(j));
  return (i - 1) * (2 * r - i) / 2 + (j - i - 1);
}

std::pair<int, int> dk_pair(int r, int letter) {
  for (int i = 1; i < r; ++i) {
    int row = r - i;
    if (letter < row) return {i, i + 1 + letter};
    letter -= row;
  }
  throw std::out_of_range("chord letter");
}

std::vector<NCSeries> dk_relations(int r, int N) {
  const int A = dk_alphabet(r);
  std::vector<NCSeries> rel;
  auto gen = [&](int i, int j) { return NCSeries::generator(A, N, dk_letter(r, i, j)); };
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j)
      for (int k = 1; k <= r; ++k)
        for (int l = k + 1; l <= r; ++l)
          if (i != k && i != l && j != k && j != l && dk_letter(r, i, j) < dk_letter(r, k, l))
            rel.push_back(commutator(gen(i, j), gen(k, l), N));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      for (int k = 1; k <= r; ++k)
        if (i != j && j != k && i != k) rel.push_back(commutator(gen(i, k), gen(i, j) + gen(j, k), N));
  return rel;
}

namespace {

long long ipow(long long a, int d) {
  long long r = 1;
  for (int i = 0; i < d; ++i) r *= a;
  return r;
}

int column(const Word& w, int A) {
  long long c = 0;
  for (int x : w) c = c * A + x;
  return static_cast<int>(c);
}

Word word_of(long long c, int A, int d) {
  Word w(d);
  for (int i = d - 1; i >= 0; --i) {
    w[i] = static_cast<int>(c % A);
    c /= A;
  }
  return w;
}

// Reduction basis of the degree-d ideal piece, built once per (r, d).
const Echelon& ideal_basis(int r, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Echelon>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{r, d}];
  if (slot) return *slot;
  auto e = std::make_unique<Echelon>();
  const int A = dk_alphabet(r);
  if (d >= 2 && A > 0) {
    if (ipow(A, d) > (1LL << 30)) throw std::length_error("chord algebra degree piece too large");
    auto rel = dk_relations(r, 2);
    for (int a = 0; a <= d - 2; ++a) {
      const int b = d - 2 - a;
      const long long nu = ipow(A, a), nv = ipow(A, b);
      for (long long u = 0; u < nu; ++u)
        for (long long v = 0; v < nv; ++v)
          for (auto& R : rel) {
            Echelon::Row row;
            for (auto& [w, c] : R.terms) {
              long long col = (u * ipow(A, 2) + column(w, A)) * nv + v;
              row[static_cast<int>(col)] += c;
            }
            for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
            e->insert(std::move(row));
          }
    }
  }
  slot = std::move(e);
  return *slot;
}

void check_same(const DKElement& a, const DKElement& b) {
  if (a.r != b.r) throw std::invalid_argument("chord diagrams on different strand counts");
}

}  // namespace

int dk_ideal_rank(int r, int d) { return ideal_basis(r, d).rank(); }

long long dk_dimension(int r, int d) { return ipow(dk_alphabet(r), d) - dk_ideal_rank(r, d); }

DKElement dk_normal_form(const NCSeries& raw, int r) {
  const int A = dk_alphabet(r);
  if (raw.alphabet != A) throw std::invalid_argument("alphabet does not match the strand count");
  DKElement out{r, NCSeries(A, raw.degree)};
  std::map<int, Echelon::Row> by_degree;
  for (auto& [w, c] : raw.terms) {
    if (w.size() < 2) {
      out.s.add_term(w, c);
      continue;
    }
    by_degree[static_cast<int>(w.size())][column(w, A)] += c;
  }
  for (auto& [d, row] : by_degree) {
    for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
    for (auto& [col, c] : ideal_basis(r, d).reduce(std::move(row))) out.s.add_term(word_of(col, A, d), c);
  }
  return out;
}

DKElement dk_one(int r, int N) { return {r, NCSeries::one(dk_alphabet(r), N)}; }
DKElement dk_zero(int r, int N) { return {r, NCSeries::zero(dk_alphabet(r), N)}; }
DKElement dk_t(int r, int N, int i, int j) { return {r, NCSeries::generator(dk_alphabet(r), N, dk_letter(r, i, j))}; }

DKElement dk_mul(const DKElement& a, const DKElement& b) {
  check_same(a, b);
  return dk_normal_form(series_mul(a.s, b.s), a.r);
}

DKElement dk_add(const DKElement& a, const DKElement& b) {
  check_same(a, b);
  return {a.r, a.s + b.s};
}

DKElement dk_scale(const DKElement& a, const Rational& c) { return {a.r, c * a.s}; }

DKElement dk_exp(const DKElement& x) { return dk_normal_form(series_exp(x.s, x.s.degree), x.r); }

DKElement dk_inverse(const DKElement& g) {
  if (g.s.constant() != 1) throw std::invalid_argument("dk_inverse: constant term must be 1");
  const int N = g.s.degree;
  NCSeries y = NCSeries::one(g.s.alphabet, N) - g.s;  // g = 1 - y
  NCSeries r = NCSeries::one(g.s.alphabet, N), p = r;
  for (int k = 1; k <= N; ++k) {
    p = series_mul(p, y, N);
    r += p;
  }
  return dk_normal_form(r, g.r);
}

namespace {

// Applies the normal form to the right factors, then to the left ones.
Tensor normalize_tensor(const Tensor& t, int r, int N) {
  const int A = dk_alphabet(r);
  auto side = [&](const Tensor& in, bool right) {
    std::map<Word, NCSeries> groups;
    for (auto& [k, c] : in) {
      const Word& fixed = right ? k.first : k.second;
      const Word& var = right ? k.second : k.first;
      auto [it, fresh] = groups.try_emplace(fixed, A, N);
      it->second.add_term(var, c);
    }
    Tensor out;
    for (auto& [fixed, s] : groups)
      for (auto& [w, c] : dk_normal_form(s, r).s.terms) out[right ? std::make_pair(fixed, w) : std::make_pair(w, fixed)] += c;
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
  };
  return side(side(t, true), false);
}

}  // namespace

Tensor dk_coproduct(const DKElement& e) {
  Tensor t;
  for (auto& [w, c] : e.s.terms) {
    const int d = static_cast<int>(w.size());
    for (long mask = 0; mask < (1L << d); ++mask) {
      Word l, r;
      for (int i = 0; i < d; ++i) (mask >> i & 1 ? l : r).push_back(w[i]);
      t[{l, r}] += c;
    }
  }
  for (auto it = t.begin(); it != t.end();) it = it->second == 0 ? t.erase(it) : std::next(it);
  return normalize_tensor(t, e.r, e.s.degree);
}

Tensor dk_tensor_square(const DKElement& e) {
  Tensor t;
  const size_t N = e.s.degree;
  for (auto& [u, a] : e.s.terms)
    for (auto& [v, b] : e.s.terms)
      if (u.size() + v.size() <= N) t[{u, v}] += a * b;
  for (auto it = t.begin(); it != t.end();) it = it->second == 0 ? t.erase(it) : std::next(it);
  return t;
}

bool grouplike_check(const DKElement& g) {
  DKElement n = dk_normal_form(g.s, g.r);
  return n.s.constant() == 1 && dk_coproduct(n) == dk_tensor_square(n);
}

DKElement dk_substitute(const DKElement& e, int r2, const std::vector<NCSeries>& images) {
  const int N = e.s.degree;
  const int A2 = dk_alphabet(r2);
  if (static_cast<int>(images.size()) != dk_alphabet(e.r)) throw std::invalid_argument("substitution size");
  NCSeries out(A2, N);
  for (auto& [w, c] : e.s.terms) {
    NCSeries p = NCSeries::one(A2, N);
    for (int x : w) p = series_mul(p, images[x].truncated(N), N);
    out += c * p;
  }
  return dk_normal_form(out, r2);
}

DKElement dk_double(const DKElement& u, int k, int w) {
  const int r = u.r, N = u.s.degree;
  if (k < 1 || k > r) throw std::out_of_range("dk_double: strand out of range");
  const int r2 = r + w - 1;
  const int A2 = dk_alphabet(r2);
  auto pos = [&](int a) { return a < k ? a : a + w - 1; };
  std::vector<NCSeries> img;
  for (int x = 0; x < dk_alphabet(r); ++x) {
    auto [i, j] = dk_pair(r, x);
    NCSeries s(A2, N);
    if (i != k && j != k) {
      s.add_term({dk_letter(r2, pos(i), pos(j))}, 1);
    } else {
      int other = pos(i == k ? j : i);
      for (int l = k; l < k + w; ++l) s.add_term({dk_letter(r2, l, other)}, 1);
    }
    img.push_back(std::move(s));
  }
  return dk_substitute(u, r2, img);
}

DKElement dk_insert(const DKElement& u, int k, const DKElement& v) {
  const int r = u.r, s = v.r, N = std::min(u.s.degree, v.s.degree);
  if (k < 1 || k > r) throw std::out_of_range("dk_insert: strand out of range");
  const int r2 = r + s - 1;
  DKElement du = dk_double({u.r, u.s.truncated(N)}, k, s);
  std::vector<NCSeries> img;
  for (int x = 0; x < dk_alphabet(s); ++x) {
    auto [i, j] = dk_pair(s, x);
    img.push_back(NCSeries::generator(dk_alphabet(r2), N, dk_letter(r2, k - 1 + i, k - 1 + j)));
  }
  DKElement sv = dk_substitute({v.r, v.s.truncated(N)}, r2, img);
  return dk_mul(du, sv);
}

DKElement dk_restrict(const DKElement& u, int k) { return dk_double(u, k, 0); }

DKElement dk_relabel(const DKElement& u, const Permutation& s) {
  if (s.size() != u.r || !s.is_valid()) throw std::invalid_argument("dk_relabel: bad permutation");
  std::vector<NCSeries> img;
  for (int x = 0; x < dk_alphabet(u.r); ++x) {
    auto [i, j] = dk_pair(u.r, x);
    img.push_back(NCSeries::generator(dk_alphabet(u.r), u.s.degree, dk_letter(u.r, s(i), s(j))));
  }
  return dk_substitute(u, u.r, img);
}

namespace {

std::string letter_text(int r, int x) {
  auto [i, j] = dk_pair(r, x);
  if (r < 10) return "t" + std::to_string(i) + std::to_string(j);
  return "t" + std::to_string(i) + "_" + std::to_string(j);
}

}  // namespace

std::string dk_to_string(const DKElement& e) {
  std::vector<std::pair<Word, Rational>> terms(e.s.terms.begin(), e.s.terms.end());
  std::stable_sort(terms.begin(), terms.end(), [](auto& a, auto& b) { return a.first.size() < b.first.size(); });
  if (terms.empty()) return "0";
  std::string out;
  for (size_t n = 0; n < terms.size(); ++n) {
    auto& [w, c] = terms[n];
    Rational a = abs(c);
    std::string sign = c < 0 ? "-" : "+";
    if (n == 0)
      out += c < 0 ? "-" : "";
    else
      out += " " + sign + " ";
    std::string mono;
    for (size_t i = 0; i < w.size(); ++i) mono += (i ? "*" : "") + letter_text(e.r, w[i]);
    if (w.empty())
      out += to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += to_string(a) + "*" + mono;
  }
  return out;
}

DKElement dk_parse(const std::string& text, int r, int N) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty chord expression");
  NCSeries out(dk_alphabet(r), N);
  size_t pos = 0;
  while (pos < s.size()) {
    Rational sign = 1;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
    }
    size_t end = s.find_first_of("+-", pos);
    std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? s.size() : end;
    if (term.empty()) throw std::invalid_argument("bad chord expression: " + text);
    Rational c = sign;
    Word w;
    size_t b = 0;
    while (b <= term.size()) {
      size_t e = term.find('*', b);
      std::string f = term.substr(b, e == std::string::npos ? std::string::npos : e - b);
      if (f.empty()) throw std::invalid_argument("bad chord factor in: " + text);
      if (f[0] == 't') {
        std::string idx = f.substr(1);
        int i, j;
        auto us = idx.find('_');
        if (us != std::string::npos) {
          i = std::stoi(idx.substr(0, us));
          j = std::stoi(idx.substr(us + 1));
        } else {
          if (idx.size() != 2 || !std::isdigit(static_cast<unsigned char>(idx[0])) ||
              !std::isdigit(static_cast<unsigned char>(idx[1])))
            throw std::invalid_argument("bad chord " + f);
          i = idx[0] - '0';
          j = idx[1] - '0';
        }
        w.push_back(dk_letter(r, i, j));
      } else {
        c *= parse_rational(f);
      }
      if (e == std::string::npos) break;
      b = e + 1;
    }
    if (static_cast<int>(w.size()) <= N) out.add_term(w, c);
  }
  return dk_normal_form(out, r);
}

nlohmann::json dk_to_json(const DKElement& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto& [w, c] : e.s.terms) {
    nlohmann::json word = nlohmann::json::array();
    for (int x : w) {
      auto [i, j] = dk_pair(e.r, x);
      word.push_back({i, j});
    }
    terms.push_back({{"coef", to_string(c)}, {"word", word}});
  }
  return {{"strands", e.r}, {"degree", e.s.degree}, {"terms", terms}};
}

DKElement dk_from_json(const nlohmann::json& j) {
  int r = j.at("strands").get<int>();
  NCSeries s(dk_alphabet(r), j.at("degree").get<int>());
  for (auto& t : j.at("terms")) {
    Word w;
    for (auto& p : t.at("word")) w.push_back(dk_letter(r, p.at(0).get<int>(), p.at(1).get<int>()));
    auto& c = t.at("coef");
    s.add_term(w, c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()));
  }
  return dk_normal_form(s, r);
}

PaCDMorphism pacd_identity(const Tree& t, int N) {
  validate(t);
  return {t, t, dk_one(t.m_closed(), N)};
}

PaCDMorphism pacd_make(const Tree& src, const Tree& tgt, const DKElement& g) {
  validate(src);
  validate(tgt);
  if (src.color() != Color::Closed || tgt.color() != Color::Closed)
    throw std::invalid_argument("PaCD objects are closed trees");
  if (src.m_closed() != tgt.m_closed() || g.r != src.m_closed())
    throw std::invalid_argument("PaCD: arity mismatch");
  return {src, tgt, g};
}

PaCDMorphism pacd_compose(const PaCDMorphism& g, const PaCDMorphism& f) {
  if (!(f.tgt == g.src)) throw std::invalid_argument("PaCD compose: " + to_string(f.tgt) + " vs " + to_string(g.src));
  return {f.src, g.tgt, dk_mul(f.g, g.g)};
}

PaCDMorphism pacd_inverse(const PaCDMorphism& f) { return {f.tgt, f.src, dk_inverse(f.g)}; }

PaCDMorphism pacd_insert(const PaCDMorphism& outer, int i, const PaCDMorphism& inner) {
  Slot s{Color::Closed, i};
  return {graft(outer.src, s, inner.src), graft(outer.tgt, s, inner.tgt), dk_insert(outer.g, i, inner.g)};
}

PaCDMorphism pacd_relabel(const PaCDMorphism& x, const Permutation& s) {
  return {relabel(x.src, {}, s), relabel(x.tgt, {}, s), dk_relabel(x.g, s)};
}

bool pacd_equal(const PaCDMorphism& a, const PaCDMorphism& b) {
  return a.src == b.src && a.tgt == b.tgt && a.g.r == b.g.r && a.g.s.terms == b.g.s.terms;
}

}  // namespace opgpd
