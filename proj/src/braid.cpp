#include "opgpd/braid.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace opgpd {

Permutation Permutation::identity(int n) {
  Permutation p;
  for (int i = 1; i <= n; ++i) p.images.push_back(i);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images.assign(images.size(), 0);
  for (int i = 0; i < size(); ++i) r.images[images[i] - 1] = i + 1;
  return r;
}

bool Permutation::is_valid() const {
  std::vector<bool> seen(images.size() + 1, false);
  for (int v : images) {
    if (v < 1 || v > size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("permutation size mismatch");
  Permutation r;
  for (int i = 1; i <= q.size(); ++i) r.images.push_back(p(q(i)));
  return r;
}

BraidWord::BraidWord(int n, std::vector<int> w) : strands(n), letters(std::move(w)) {
  if (!is_valid()) throw std::invalid_argument("braid letter out of range");
}

bool BraidWord::is_valid() const {
  if (strands < 0) return false;
  for (int l : letters)
    if (l == 0 || std::abs(l) > strands - 1) return false;
  return true;
}

BraidWord BraidWord::inverse() const {
  BraidWord r;
  r.strands = strands;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(-*it);
  return r;
}

BraidWord BraidWord::then(const BraidWord& other) const {
  if (other.strands != strands) throw std::invalid_argument("strand count mismatch");
  BraidWord r = *this;
  r.letters.insert(r.letters.end(), other.letters.begin(), other.letters.end());
  return r;
}

BraidWord BraidWord::shifted(int offset, int total) const {
  if (offset < 0 || offset + strands > total) throw std::out_of_range("shift out of range");
  BraidWord r;
  r.strands = total;
  for (int l : letters) r.letters.push_back(l > 0 ? l + offset : l - offset);
  return r;
}

FreeGroupWord free_reduce(const FreeGroupWord& w) {
  FreeGroupWord r;
  for (int x : w) {
    if (!r.empty() && r.back() == -x)
      r.pop_back();
    else
      r.push_back(x);
  }
  return r;
}

namespace {

// Substitution for a single letter: sigma_i sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1} to x_i.
void apply_letter(int letter, const FreeGroupWord& in, FreeGroupWord& out) {
  const int i = std::abs(letter);
  out.clear();
  auto push = [&out](int x) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  };
  for (int x : in) {
    const int g = std::abs(x);
    const bool inv = x < 0;
    if (g != i && g != i + 1) {
      push(x);
      continue;
    }
    if (letter > 0) {
      if (g == i) {
        if (!inv) {
          push(i); push(i + 1); push(-i);
        } else {
          push(i); push(-(i + 1)); push(-i);
        }
      } else {
        push(inv ? -i : i);
      }
    } else {
      // inverse: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
      if (g == i) {
        push(inv ? -(i + 1) : i + 1);
      } else if (!inv) {
        push(-(i + 1)); push(i); push(i + 1);
      } else {
        push(-(i + 1)); push(-i); push(i + 1);
      }
    }
  }
}

}  // namespace

FreeGroupWord artin_action(const BraidWord& b, const FreeGroupWord& w) {
  for (int x : w)
    if (x == 0 || std::abs(x) > b.strands) throw std::invalid_argument("alphabet mismatch");
  FreeGroupWord cur = free_reduce(w), tmp;
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
    apply_letter(*it, cur, tmp);
    cur.swap(tmp);
  }
  return cur;
}

BraidWord cancel_adjacent(const BraidWord& b) {
  BraidWord r;
  r.strands = b.strands;
  r.letters = free_reduce(b.letters);
  return r;
}

bool braids_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("strand-count mismatch");
  BraidWord d = cancel_adjacent(a.then(b.inverse()));
  if (d.letters.empty()) return true;
  for (int i = 1; i <= a.strands; ++i) {
    FreeGroupWord img = artin_action(d, {i});
    if (img.size() != 1 || img[0] != i) return false;
  }
  return true;
}

Permutation underlying_permutation(const BraidWord& b) {
  // at[pos] = starting position of the strand now at pos
  std::vector<int> at(b.strands);
  for (int i = 0; i < b.strands; ++i) at[i] = i + 1;
  for (int l : b.letters) {
    int i = std::abs(l);
    std::swap(at[i - 1], at[i]);
  }
  Permutation p;
  p.images.assign(b.strands, 0);
  for (int pos = 0; pos < b.strands; ++pos) p.images[at[pos] - 1] = pos + 1;
  return p;
}

BraidWord cable(const BraidWord& b, int c, int k) {
  if (c < 1 || c > b.strands) throw std::out_of_range("strand position out of range");
  if (k < 0) throw std::invalid_argument("negative cable width");
  BraidWord r;
  r.strands = b.strands + k - 1;
  for (int l : b.letters) {
    const int i = std::abs(l);
    const int s = l > 0 ? 1 : -1;
    if (i == c) {
      // cable on the left crosses the strand at i+1
      for (int j = i + k - 1; j >= i; --j) r.letters.push_back(s * j);
      c = i + 1;
    } else if (i + 1 == c) {
      for (int j = i; j <= i + k - 1; ++j) r.letters.push_back(s * j);
      c = i;
    } else {
      r.letters.push_back(i < c ? l : s * (i + k - 1));
    }
  }
  return r;
}

BraidWord delete_strand(const BraidWord& b, int c) { return cable(b, c, 0); }

BraidWord block_swap_over(int a, int b, int total, int offset) {
  BraidWord r;
  r.strands = total;
  if (offset + a + b > total) throw std::out_of_range("block swap out of range");
  for (int s = a; s >= 1; --s)
    for (int j = 0; j < b; ++j) r.letters.push_back(offset + s + j);
  return r;
}

BraidWord block_swap_under(int a, int b, int total, int offset) {
  BraidWord r = block_swap_over(a, b, total, offset);
  for (int& l : r.letters) l = -l;
  return r;
}

BraidWord parse_braid(const std::string& text, int strands) {
  std::istringstream in(text);
  std::string tok;
  BraidWord b;
  b.strands = strands;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S'))
      throw std::invalid_argument("bad braid letter: " + tok);
    int i = std::stoi(tok.substr(1));
    b.letters.push_back(tok[0] == 's' ? i : -i);
  }
  if (!b.is_valid()) throw std::invalid_argument("braid letter out of range for " + std::to_string(strands) + " strands");
  return b;
}

std::string format_braid(const BraidWord& b) {
  std::string s;
  for (int l : b.letters) {
    if (!s.empty()) s += ' ';
    s += (l > 0 ? 's' : 'S') + std::to_string(std::abs(l));
  }
  return s;
}

nlohmann::json braid_to_json(const BraidWord& b) { return {{"strands", b.strands}, {"word", b.letters}}; }

BraidWord braid_from_json(const nlohmann::json& j) {
  return BraidWord(j.at("strands").get<int>(), j.at("word").get<std::vector<int>>());
}

nlohmann::json perm_to_json(const Permutation& p) { return p.images; }

Permutation perm_from_json(const nlohmann::json& j) {
  Permutation p{j.get<std::vector<int>>()};
  if (!p.is_valid()) throw std::invalid_argument("not a permutation");
  return p;
}

}  // namespace opgpd
