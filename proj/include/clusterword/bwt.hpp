#pragma once

#include <optional>
#include <vector>

#include "clusterword/word.hpp"

namespace clusterword {

/// Burrows-Wheeler transform: last column of the sorted rotation array.
/// Non-primitive words are accepted (tied rows are identical).
Word bwt(const Word& w);

/// Verdict of clustering detection on the letters that occur in w.
struct ClusterReport {
  bool is_clustering = false;
  /// Run order of B(w) on the reindexed alphabet {1..d}; set iff clustering.
  std::optional<Permutation> permutation;
  bool perfect = false;
  Word bwt_image;
  std::vector<Letter> occurring_letters;
};

ClusterReport clustering_report(const Word& w);

enum class AntecedentStatus { PrimitiveAntecedent, NonPrimitiveAntecedent, NoAntecedent };

const char* to_string(AntecedentStatus status);

struct InverseResult {
  AntecedentStatus status = AntecedentStatus::NoAntecedent;
  /// Canonical root u and power k with B(u^k) equal to the input.
  std::optional<PrimitiveRoot> antecedent;
  /// Canonical words spelled by the cycles of the standard permutation, sorted.
  std::vector<Word> cycle_words;
};

/// Inverts B by decomposing the standard permutation into cycles.
/// Throws std::invalid_argument on empty input.
InverseResult inverse_bwt(const Word& b);

/// (pi 1)^{n_{pi 1}} ... (pi r)^{n_{pi r}}. Throws if some count is zero or
/// sizes disagree.
Word clustering_image(const Permutation& pi, const ParikhVector& counts);

}  // namespace clusterword
