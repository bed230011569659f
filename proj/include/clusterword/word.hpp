#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace clusterword {

/// A letter of the internal alphabet {1, ..., r}.
using Letter = std::uint32_t;

/// Ordered alphabet of external tokens; the rank of a token is its 1-based
/// position in declaration order.
class OrderedAlphabet {
 public:
  explicit OrderedAlphabet(std::vector<std::string> symbols);

  /// Alphabet "1" < "2" < ... < "r".
  static OrderedAlphabet numeric(std::size_t r);

  std::size_t size() const { return symbols_.size(); }
  const std::vector<std::string>& symbols() const { return symbols_; }

  /// Rank of `token` in 1..r; throws std::invalid_argument naming the token.
  Letter rank(const std::string& token) const;
  const std::string& symbol(Letter letter) const;

 private:
  std::vector<std::string> symbols_;
  std::map<std::string, Letter> rank_;
};

class Word {
 public:
  Word() = default;
  /// Throws std::invalid_argument if some letter is 0.
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// Largest letter occurring, or 0 for the empty word.
  Letter max_letter() const;

  /// Cyclic conjugate starting at 0-based position `shift`.
  Word rotation(std::size_t shift) const;
  Word power(std::size_t k) const;
  Word operator+(const Word& other) const;

  /// Word on {1..d} obtained by ranking the occurring letters.
  Word reindexed() const;
  /// Sorted list of letters that occur.
  std::vector<Letter> occurring_letters() const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

class ParikhVector {
 public:
  ParikhVector() = default;
  explicit ParikhVector(std::vector<std::size_t> counts) : counts_(std::move(counts)) {}

  std::size_t alphabet_size() const { return counts_.size(); }
  /// Count of 1-based `letter`.
  std::size_t operator[](Letter letter) const { return counts_.at(letter - 1); }
  const std::vector<std::size_t>& counts() const { return counts_; }
  std::size_t total() const;

  friend auto operator<=>(const ParikhVector&, const ParikhVector&) = default;
  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;

 private:
  std::vector<std::size_t> counts_;
};

/// A bijection on {1..r}, stored as its images (pi 1, ..., pi r).
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a permutation of 1..r.
  explicit Permutation(std::vector<Letter> images);
  Permutation(std::initializer_list<Letter> images);

  static Permutation identity(std::size_t r);
  /// The order-reversing permutation i -> r + 1 - i.
  static Permutation reversal(std::size_t r);
  /// All permutations of {1..r} in lexicographic order of images.
  static std::vector<Permutation> all(std::size_t r);

  std::size_t size() const { return images_.size(); }
  Letter operator()(Letter i) const { return images_.at(i - 1); }
  /// pi^{-1}(j).
  Letter inverse(Letter j) const { return inverse_.at(j - 1); }
  const std::vector<Letter>& images() const { return images_; }

  bool is_identity() const;
  bool is_reversal() const;
  /// Irreducible: pi{1..d} != {1..d} for every d < r.
  bool is_irreducible() const;

  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }
  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }

 private:
  std::vector<Letter> images_;
  std::vector<Letter> inverse_;
};

/// Map external tokens to their ranks. Throws on an unknown token.
Word normalize(std::span<const std::string> tokens, const OrderedAlphabet& alphabet);

/// Letter counts over {1..r}; r defaults to the largest letter of w.
ParikhVector parikh(const Word& w);
ParikhVector parikh(const Word& w, std::size_t r);

bool is_primitive(const Word& w);

/// w = root^power with root primitive.
struct PrimitiveRoot {
  Word root;
  std::size_t power = 1;
};
PrimitiveRoot primitive_root(const Word& w);

struct Conjugate {
  std::size_t rotation_index = 1;  ///< 1-based starting position
  Word word;
  friend bool operator==(const Conjugate&, const Conjugate&) = default;
};

std::vector<Conjugate> conjugates(const Word& w);

/// Rotations in ascending lexicographic order, ties by rotation index.
std::vector<Conjugate> sorted_conjugates(const Word& w);

/// 0-based starting positions of the rotations of w, in sorted order.
std::vector<std::size_t> sorted_rotation_starts(const Word& w);

/// Lexicographically least conjugate.
Word canonical_conjugate(const Word& w);

bool are_conjugate(const Word& a, const Word& b);

/// The permutation pi' on {1..d} induced by pi on the ordered subset
/// `occurring` = {j_1 < ... < j_d}.
Permutation restrict_permutation(const Permutation& pi, std::span<const Letter> occurring);

// Text formats ---------------------------------------------------------

/// Digit string (`122131313`) or comma-separated letters (`10,2,10,1`).
Word parse_word(const std::string& text);
/// Digits when every letter is <= 9, comma-separated otherwise.
std::string format_word(const Word& w);
std::string format_word(const Word& w, const OrderedAlphabet& alphabet);

/// Comma-separated images, `3,2,1`.
Permutation parse_permutation(const std::string& text);
std::string format_permutation(const Permutation& pi);

/// Comma-separated positive integers.
std::vector<std::size_t> parse_lengths(const std::string& text);

std::vector<std::string> split(const std::string& text, char sep);

}  // namespace clusterword
