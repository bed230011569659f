#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "clusterword/exact_real.hpp"
#include "clusterword/iet_discrete.hpp"
#include "clusterword/word.hpp"

namespace clusterword {

/// Interval exchange on [0,1) with half-open intervals
/// Delta_i = [cut_i, cut_i + alpha_i), translated by tau_i.
class ContinuousIET {
 public:
  /// Throws std::invalid_argument unless every alpha is positive, the alphas
  /// sum to exactly 1, share one quadratic field and match pi in size.
  ContinuousIET(std::vector<ExactReal> alphas, Permutation pi);

  std::size_t interval_count() const { return alphas_.size(); }
  const std::vector<ExactReal>& alphas() const { return alphas_; }
  const Permutation& permutation() const { return pi_; }
  const std::vector<ExactReal>& taus() const { return taus_; }
  /// Left endpoints; cuts()[0] == 0.
  const std::vector<ExactReal>& cuts() const { return cuts_; }

  /// Interval containing x. Throws std::out_of_range unless 0 <= x < 1.
  Letter letter(const ExactReal& x) const;
  ExactReal apply(const ExactReal& x) const;
  Word trajectory(const ExactReal& x, std::size_t length,
                  const std::optional<std::vector<Letter>>& labels = std::nullopt) const;

 private:
  std::vector<ExactReal> alphas_;
  Permutation pi_;
  std::vector<ExactReal> taus_;
  std::vector<ExactReal> cuts_;
};

/// Rotation x -> x + alpha mod 1 written as the 2-interval exchange with
/// lengths (1 - alpha, alpha) and permutation (2,1).
ContinuousIET rotation(const ExactReal& alpha);
/// Rotation by (sqrt(5) - 1) / 2.
ContinuousIET golden_rotation();

/// Characteristic Sturmian coding of the rotation by alpha: the trajectory
/// of x = alpha, with Delta_1 written as letter 2 and Delta_2 as letter 1.
/// For the golden rotation this is the fixed point of 1 -> 12, 2 -> 1.
Word sturmian_word(const ExactReal& alpha, std::size_t length);

struct SquareOccurrence {
  std::size_t start_index = 0;  ///< index into the supplied start list
  std::size_t offset = 0;       ///< position of ww in that trajectory
};

/// Searches ww in the first `horizon` letters of the trajectory of each
/// start. An empty result only means nothing was found within the budget.
/// Throws std::invalid_argument if horizon < 2|w|.
std::optional<SquareOccurrence> contains_square(const ContinuousIET& t, const Word& w,
                                                const std::vector<ExactReal>& starts, std::size_t horizon);

/// 0 followed by the interior cuts.
std::vector<ExactReal> default_starts(const ContinuousIET& t);

struct CollisionFound {
  std::size_t from_cut = 0;  ///< i: gamma_i = cuts()[i-1], 2 <= i <= r
  std::size_t to_cut = 0;    ///< j
  std::size_t steps = 0;     ///< m with T^m gamma_i == gamma_j
};
struct NoCollisionUpTo {
  std::size_t depth = 0;
};
using KeaneVerdict = std::variant<CollisionFound, NoCollisionUpTo>;

/// Exact search for T^m gamma_i == gamma_j over interior cuts, 1 <= m <= depth.
/// Reports the smallest m, then smallest i, then smallest j.
KeaneVerdict keane_check(const ContinuousIET& t, std::size_t depth);

/// The rational exchange with alphas n_i / n whose trajectories from
/// (k - 1) / n match those of t from point k.
ContinuousIET from_discrete(const DiscreteIET& t);

}  // namespace clusterword
