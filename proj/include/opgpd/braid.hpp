#pragma once
// Braid words, the Artin action on free groups, permutations, cabling.

#include <string>
#include <vector>

#include <json.hpp>

namespace opgpd {

// images[i] is the image of i+1; values are 1-based.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  int size() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images.at(i - 1); }
  Permutation inverse() const;
  bool is_valid() const;
  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;
};

// (p * q)(i) = p(q(i))
Permutation operator*(const Permutation& p, const Permutation& q);

// Letter +i is sigma_i (strand at position i passes over i+1), -i its inverse.
struct BraidWord {
  int strands = 0;
  std::vector<int> letters;

  BraidWord() = default;
  explicit BraidWord(int n, std::vector<int> w = {});

  bool is_valid() const;
  BraidWord inverse() const;
  BraidWord then(const BraidWord& other) const;  // this first, other below
  BraidWord shifted(int offset, int total) const;  // embed into positions offset+1..
  bool operator==(const BraidWord&) const = default;
};

using FreeGroupWord = std::vector<int>;  // signed 1-based generator indices

FreeGroupWord free_reduce(const FreeGroupWord& w);
FreeGroupWord artin_action(const BraidWord& b, const FreeGroupWord& w);
bool braids_equal(const BraidWord& a, const BraidWord& b);
// Position map: the strand starting at position p ends at position perm(p).
Permutation underlying_permutation(const BraidWord& b);
BraidWord cable(const BraidWord& b, int strand_position, int width);
BraidWord delete_strand(const BraidWord& b, int strand_position);
// Cancels adjacent letter/inverse pairs. Same braid, never longer.
BraidWord cancel_adjacent(const BraidWord& b);

// Positive braid taking the block at positions 1..a over the block a+1..a+b,
// so that afterwards the second block sits at 1..b.
BraidWord block_swap_over(int a, int b, int total, int offset = 0);
// Block 1..a moves right under the block a+1..a+b.
BraidWord block_swap_under(int a, int b, int total, int offset = 0);

BraidWord parse_braid(const std::string& text, int strands);
std::string format_braid(const BraidWord& b);
nlohmann::json braid_to_json(const BraidWord& b);
BraidWord braid_from_json(const nlohmann::json& j);
nlohmann::json perm_to_json(const Permutation& p);
Permutation perm_from_json(const nlohmann::json& j);

}  // namespace opgpd
