#pragma once
// Exact rationals, truncated noncommutative series and exact linear solving.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace opgpd {

using Rational = mpq_class;
using Word = std::vector<int>;  // generator indices, 0-based

// Canonicalized a/b (the raw two-argument mpq constructor does not reduce).
Rational frac(long a, long b);
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

struct NCSeries {
  int alphabet = 0;
  int degree = 0;
  std::map<Word, Rational> terms;

  NCSeries() = default;
  NCSeries(int alphabet_size, int truncation) : alphabet(alphabet_size), degree(truncation) {}

  static NCSeries zero(int alphabet, int N) { return NCSeries(alphabet, N); }
  static NCSeries one(int alphabet, int N);
  static NCSeries monomial(int alphabet, int N, const Word& w, const Rational& c = 1);
  static NCSeries generator(int alphabet, int N, int i) { return monomial(alphabet, N, {i}); }

  Rational coef(const Word& w) const;
  Rational constant() const { return coef({}); }
  void add_term(const Word& w, const Rational& c);
  bool is_zero() const { return terms.empty(); }
  NCSeries homogeneous(int d) const;
  NCSeries truncated(int N) const;
  int max_word_length() const;

  NCSeries& operator+=(const NCSeries& o);
  NCSeries& operator-=(const NCSeries& o);
  NCSeries& operator*=(const Rational& c);

  bool operator==(const NCSeries& o) const {
    return alphabet == o.alphabet && terms == o.terms;
  }
};

NCSeries operator+(NCSeries a, const NCSeries& b);
NCSeries operator-(NCSeries a, const NCSeries& b);
NCSeries operator-(NCSeries a);
NCSeries operator*(const Rational& c, NCSeries a);

// Truncated product. N defaults to min of the two truncation degrees.
NCSeries series_mul(const NCSeries& a, const NCSeries& b, std::optional<int> N = std::nullopt);
NCSeries series_pow(const NCSeries& a, int k, int N);
NCSeries series_exp(const NCSeries& x, int N);
NCSeries series_log(const NCSeries& g, int N);
NCSeries commutator(const NCSeries& a, const NCSeries& b, int N);

struct LinearSystem {
  int num_columns = 0;
  std::vector<std::pair<std::map<int, Rational>, Rational>> rows;

  void add_row(std::map<int, Rational> coeffs, Rational rhs);
};

struct SolveResult {
  bool consistent = false;
  int rank = 0;
  std::vector<Rational> solution;               // free coordinates set to zero
  std::vector<std::vector<Rational>> nullspace;  // one vector per free column
  std::vector<int> pivots;
};

SolveResult solve_exact(const LinearSystem& sys);

// Sparse exact row echelon form, kept fully reduced. Rows are indexed by pivot column.
class Echelon {
 public:
  using Row = std::map<int, Rational>;
  // Reduces v against the stored rows. Returns the residue (zero at every pivot).
  Row reduce(Row v) const;
  // Adds v to the span. Returns true when the rank grew.
  bool insert(Row v);
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::map<int, Row>& rows() const { return rows_; }

 private:
  std::map<int, Row> rows_;
};

nlohmann::json series_to_json(const NCSeries& s);
NCSeries series_from_json(const nlohmann::json& j);

}  // namespace opgpd
