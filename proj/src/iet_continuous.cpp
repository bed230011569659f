#include "clusterword/iet_continuous.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace clusterword {

ContinuousIET::ContinuousIET(std::vector<ExactReal> alphas, Permutation pi)
    : alphas_(std::move(alphas)), pi_(std::move(pi)) {
  const std::size_t r = alphas_.size();
  if (r == 0) throw std::invalid_argument("continuous IET needs at least one interval");
  if (pi_.size() != r) throw std::invalid_argument("permutation size differs from probability vector size");

  ExactReal total(0);
  for (const auto& a : alphas_) {
    if (a.sign() <= 0) throw std::invalid_argument("interval lengths must be positive, got " + a.to_string());
    total += a;  // throws on mixed radicands
  }
  if (total != ExactReal(1)) throw std::invalid_argument("interval lengths sum to " + total.to_string() + ", not 1");

  cuts_.reserve(r);
  ExactReal running(0);
  for (const auto& a : alphas_) {
    cuts_.push_back(running);
    running += a;
  }

  taus_.reserve(r);
  for (Letter i = 1; i <= r; ++i) {
    ExactReal before_image(0);
    for (Letter j = 1; j <= r; ++j)
      if (pi_.inverse(j) < pi_.inverse(i)) before_image += alphas_[j - 1];
    taus_.push_back(before_image - cuts_[i - 1]);
  }

  // Images listed in the order pi 1, ..., pi r must tile [0,1).
  ExactReal expected(0);
  for (Letter pos = 1; pos <= r; ++pos) {
    const Letter i = pi_(pos);
    if (cuts_[i - 1] + taus_[i - 1] != expected) throw std::logic_error("interval images do not tile [0,1)");
    expected += alphas_[i - 1];
  }
}

Letter ContinuousIET::letter(const ExactReal& x) const {
  if (x.sign() < 0 || x >= ExactReal(1)) throw std::out_of_range("point " + x.to_string() + " outside [0,1)");
  Letter i = 1;
  while (i < cuts_.size() && cuts_[i] <= x) ++i;
  return i;
}

ExactReal ContinuousIET::apply(const ExactReal& x) const { return x + taus_[letter(x) - 1]; }

Word ContinuousIET::trajectory(const ExactReal& x, std::size_t length,
                               const std::optional<std::vector<Letter>>& labels) const {
  if (labels && labels->size() != interval_count())
    throw std::invalid_argument("label map size differs from interval count");
  std::vector<Letter> out;
  out.reserve(length);
  ExactReal p = x;
  (void)letter(p);  // range check even when length == 0
  for (std::size_t k = 0; k < length; ++k) {
    const Letter c = letter(p);
    out.push_back(labels ? (*labels)[c - 1] : c);
    if (k + 1 < length) p += taus_[c - 1];
  }
  return Word(std::move(out));
}

ContinuousIET rotation(const ExactReal& alpha) {
  if (alpha.sign() <= 0 || alpha >= ExactReal(1))
    throw std::invalid_argument("rotation number must lie strictly between 0 and 1");
  return ContinuousIET({ExactReal(1) - alpha, alpha}, Permutation{2, 1});
}

ContinuousIET golden_rotation() { return rotation(ExactReal::golden_conjugate()); }

Word sturmian_word(const ExactReal& alpha, std::size_t length) {
  return rotation(alpha).trajectory(alpha, length, std::vector<Letter>{2, 1});
}

std::optional<SquareOccurrence> contains_square(const ContinuousIET& t, const Word& w,
                                                const std::vector<ExactReal>& starts, std::size_t horizon) {
  if (horizon < 2 * w.size()) throw std::invalid_argument("horizon must be at least twice the word length");
  const Word ww = w + w;
  for (std::size_t s = 0; s < starts.size(); ++s) {
    const Word traj = t.trajectory(starts[s], horizon);
    auto hit = std::search(traj.begin(), traj.end(), ww.begin(), ww.end());
    if (hit != traj.end()) return SquareOccurrence{s, static_cast<std::size_t>(hit - traj.begin())};
  }
  return std::nullopt;
}

std::vector<ExactReal> default_starts(const ContinuousIET& t) { return t.cuts(); }

KeaneVerdict keane_check(const ContinuousIET& t, std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("keane_check depth must be >= 1");
  const auto& cuts = t.cuts();
  std::vector<ExactReal> orbit(cuts.begin() + 1, cuts.end());
  for (std::size_t m = 1; m <= depth; ++m) {
    for (auto& x : orbit) x = t.apply(x);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t j = 1; j < cuts.size(); ++j)
        if (orbit[i] == cuts[j]) return CollisionFound{i + 2, j + 1, m};
    }
  }
  return NoCollisionUpTo{depth};
}

ContinuousIET from_discrete(const DiscreteIET& t) {
  const auto n = static_cast<std::int64_t>(t.point_count());
  std::vector<ExactReal> alphas;
  for (std::size_t len : t.lengths()) alphas.push_back(ExactReal::fraction(static_cast<std::int64_t>(len), n));
  return ContinuousIET(std::move(alphas), t.permutation());
}

}  // namespace clusterword
