#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "clusterword/word.hpp"

namespace clusterword {

/// Cycles of a discrete exchange, each with its coding read from its least point.
struct OrbitDecomposition {
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<Word> words;
};

/// Discrete r-interval exchange on the points 1..n, n = sum of lengths.
/// Block i holds the points sum_{j<i} n_j < k <= sum_{j<=i} n_j and is
/// translated by s_i, so that the image blocks appear in the order
/// pi 1, pi 2, ..., pi r.
class DiscreteIET {
 public:
  /// Throws std::invalid_argument on a zero length or a size mismatch.
  DiscreteIET(std::vector<std::size_t> lengths, Permutation pi);

  std::size_t interval_count() const { return lengths_.size(); }
  std::size_t point_count() const { return n_; }
  const std::vector<std::size_t>& lengths() const { return lengths_; }
  const Permutation& permutation() const { return pi_; }
  const std::vector<std::int64_t>& offsets() const { return offsets_; }
  std::int64_t offset(Letter i) const { return offsets_.at(i - 1); }

  /// Block containing point k.
  Letter letter(std::size_t k) const;
  /// k + s_{letter(k)}. Throws std::out_of_range for k outside 1..n.
  std::size_t apply(std::size_t k) const;

  OrbitDecomposition orbit_decomposition() const;
  bool is_minimal() const;
  std::size_t cycle_length(std::size_t k) const;

  /// Coding of the forward orbit of `start`. `labels[i-1]` replaces letter i
  /// when given.
  Word trajectory(std::size_t start, std::size_t length,
                  const std::optional<std::vector<Letter>>& labels = std::nullopt) const;

  /// Trajectory word of length n from point 1 when minimal.
  std::optional<Word> clustering_word() const;

  /// For a non-minimal exchange, the coding of a shortest cycle; its offsets
  /// sum to zero.
  std::optional<Word> nonminimality_witness() const;

  friend bool operator==(const DiscreteIET& a, const DiscreteIET& b) {
    return a.lengths_ == b.lengths_ && a.pi_ == b.pi_;
  }

 private:
  std::vector<std::size_t> lengths_;
  Permutation pi_;
  std::vector<std::int64_t> offsets_;
  std::vector<std::size_t> block_end_;  // cumulative lengths
  std::size_t n_ = 0;
};

/// Closed-form minimality for r = 3. Throws unless three lengths >= 1.
bool minimality_criterion_r3(const std::vector<std::size_t>& lengths, const Permutation& pi);

/// Exchange induced by the sorted rotation array of a primitive clustering
/// word, on the reindexed alphabet of its occurring letters. Throws if w is
/// not primitive or not clustering, or if the rotation array map disagrees
/// with the constructed exchange.
DiscreteIET from_clustering_word(const Word& w);

}  // namespace clusterword
