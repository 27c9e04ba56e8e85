#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cubsurf {

constexpr std::size_t kLetters = 5;
constexpr std::size_t kLines = 27;

// Element (t, sigma) of T x| S5: sigma[i] is the image of letter i and t is a
// sign vector with an even number of -1 entries.
struct GroupElt {
  std::array<int, kLetters> t{1, 1, 1, 1, 1};
  std::array<int, kLetters> sigma{0, 1, 2, 3, 4};

  static GroupElt identity() { return {}; }
  bool valid() const;
  friend bool operator==(const GroupElt&, const GroupElt&) = default;
  friend auto operator<=>(const GroupElt&, const GroupElt&) = default;
};

// g * h acts as g after h.
GroupElt compose(const GroupElt& g, const GroupElt& h);
GroupElt inverse(const GroupElt& g);

// Multiset of (cycle length, product of t over the cycle), sorted.
using FrobClass = std::vector<std::pair<int, int>>;

FrobClass class_of(const GroupElt& g);
// Same, restricted to each block of letters (blocks must be sigma-stable).
std::vector<FrobClass> class_of(const GroupElt& g, const std::vector<std::vector<int>>& blocks);
int total_sign(const FrobClass& c);
std::string to_string(const FrobClass& c);

// Element realizing c with cycles laid out on the letters of each block in
// order; the sign of a cycle sits on its first letter.
GroupElt representative(const std::vector<FrobClass>& per_block, const std::vector<std::vector<int>>& blocks);
GroupElt representative(const FrobClass& c);

// Labels: 0 is L0; 1 + 2i + (s == -1) is the pair line (i, s); then
// the sixteen even sign vectors from 11 on, lexicographic with + before -.
struct Lines27 {
  using PicVec = std::array<int, 7>;  // coordinates on (l, e1, ..., e6)

  std::array<PicVec, kLines> pic{};
  std::array<std::array<int, kLetters>, 16> sign_vectors{};

  // Builds the model and runs its self-checks (internal error on failure).
  static const Lines27& instance();

  static std::size_t pair_label(int i, int s) { return 1 + 2 * static_cast<std::size_t>(i) + (s < 0 ? 1 : 0); }
  std::size_t sign_label(const std::array<int, kLetters>& eps) const;
  std::string name(std::size_t label) const;

  static int intersect(const PicVec& a, const PicVec& b);
  int intersect(std::size_t a, std::size_t b) const { return intersect(pic[a], pic[b]); }

  std::size_t act(const GroupElt& g, std::size_t label) const;
  std::array<std::size_t, kLines> permutation(const GroupElt& g) const;
  // Trace of the induced map on Pic (rank 7).
  int pic_trace(const GroupElt& g) const;
};

// All 1920 elements, sorted.
std::vector<GroupElt> enumerate_group();
// Elements preserving every block (as a set).
std::vector<GroupElt> block_stabilizer(const std::vector<std::vector<int>>& blocks);

std::vector<GroupElt> closure(const std::vector<GroupElt>& generators);
// Sorted orbit lengths of the group generated by gens on the 27 lines.
std::vector<std::size_t> orbit_lengths(const std::vector<GroupElt>& gens);

}  // namespace cubsurf
