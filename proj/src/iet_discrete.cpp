#include "clusterword/iet_discrete.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "clusterword/bwt.hpp"

namespace clusterword {

DiscreteIET::DiscreteIET(std::vector<std::size_t> lengths, Permutation pi)
    : lengths_(std::move(lengths)), pi_(std::move(pi)) {
  const std::size_t r = lengths_.size();
  if (r == 0) throw std::invalid_argument("discrete IET needs at least one interval");
  if (pi_.size() != r) throw std::invalid_argument("permutation size differs from length vector size");
  for (std::size_t len : lengths_)
    if (len == 0) throw std::invalid_argument("interval lengths must be positive");

  block_end_.resize(r);
  std::partial_sum(lengths_.begin(), lengths_.end(), block_end_.begin());
  n_ = block_end_.back();

  offsets_.resize(r);
  for (Letter i = 1; i <= r; ++i) {
    std::int64_t before_image = 0;
    for (Letter j = 1; j <= r; ++j)
      if (pi_.inverse(j) < pi_.inverse(i)) before_image += static_cast<std::int64_t>(lengths_[j - 1]);
    const auto before_domain = static_cast<std::int64_t>(block_end_[i - 1] - lengths_[i - 1]);
    offsets_[i - 1] = before_image - before_domain;
  }

  std::vector<bool> hit(n_ + 1, false);
  for (std::size_t k = 1; k <= n_; ++k) {
    const std::size_t image = apply(k);
    if (hit[image]) throw std::logic_error("discrete IET point map is not a bijection");
    hit[image] = true;
  }
}

Letter DiscreteIET::letter(std::size_t k) const {
  if (k == 0 || k > n_) throw std::out_of_range("point " + std::to_string(k) + " outside 1.." + std::to_string(n_));
  auto it = std::lower_bound(block_end_.begin(), block_end_.end(), k);
  return static_cast<Letter>(it - block_end_.begin() + 1);
}

std::size_t DiscreteIET::apply(std::size_t k) const {
  const auto image = static_cast<std::int64_t>(k) + offsets_[letter(k) - 1];
  if (image < 1 || image > static_cast<std::int64_t>(n_)) throw std::logic_error("point image out of range");
  return static_cast<std::size_t>(image);
}

OrbitDecomposition DiscreteIET::orbit_decomposition() const {
  OrbitDecomposition out;
  std::vector<bool> visited(n_ + 1, false);
  for (std::size_t k = 1; k <= n_; ++k) {
    if (visited[k]) continue;
    std::vector<std::size_t> cycle;
    std::vector<Letter> word;
    for (std::size_t p = k; !visited[p]; p = apply(p)) {
      visited[p] = true;
      cycle.push_back(p);
      word.push_back(letter(p));
    }
    out.cycles.push_back(std::move(cycle));
    out.words.emplace_back(std::move(word));
  }
  return out;
}

std::size_t DiscreteIET::cycle_length(std::size_t k) const {
  std::size_t len = 1;
  for (std::size_t p = apply(k); p != k; p = apply(p)) ++len;
  return len;
}

bool DiscreteIET::is_minimal() const { return cycle_length(1) == n_; }

Word DiscreteIET::trajectory(std::size_t start, std::size_t length,
                             const std::optional<std::vector<Letter>>& labels) const {
  if (start == 0 || start > n_) throw std::out_of_range("start point outside 1.." + std::to_string(n_));
  if (labels && labels->size() != interval_count())
    throw std::invalid_argument("label map size differs from interval count");
  std::vector<Letter> out;
  out.reserve(length);
  std::size_t p = start;
  for (std::size_t i = 0; i < length; ++i, p = apply(p)) {
    const Letter c = letter(p);
    out.push_back(labels ? (*labels)[c - 1] : c);
  }
  return Word(std::move(out));
}

std::optional<Word> DiscreteIET::clustering_word() const {
  if (!is_minimal()) return std::nullopt;
  return trajectory(1, n_);
}

std::optional<Word> DiscreteIET::nonminimality_witness() const {
  if (is_minimal()) return std::nullopt;
  auto orbits = orbit_decomposition();
  auto shortest = std::min_element(orbits.words.begin(), orbits.words.end(),
                                   [](const Word& a, const Word& b) { return a.size() < b.size(); });
  std::int64_t sum = 0;
  for (Letter c : *shortest) sum += offset(c);
  if (sum != 0) throw std::logic_error("cycle offsets do not sum to zero");
  return *shortest;
}

bool minimality_criterion_r3(const std::vector<std::size_t>& lengths, const Permutation& pi) {
  if (lengths.size() != 3 || pi.size() != 3)
    throw std::invalid_argument("minimality_criterion_r3 requires exactly three intervals");
  for (std::size_t len : lengths)
    if (len == 0) throw std::invalid_argument("interval lengths must be positive");
  const std::size_t n1 = lengths[0], n2 = lengths[1], n3 = lengths[2];
  if (pi == Permutation{3, 2, 1}) return std::gcd(n1 + n2, n2 + n3) == 1;
  if (pi == Permutation{2, 3, 1}) return std::gcd(n1, n2 + n3) == 1;
  if (pi == Permutation{3, 1, 2}) return std::gcd(n3, n1 + n2) == 1;
  return false;
}

DiscreteIET from_clustering_word(const Word& w) {
  if (w.empty()) throw std::invalid_argument("from_clustering_word: empty word");
  if (!is_primitive(w)) throw std::invalid_argument("from_clustering_word: word is not primitive");
  auto report = clustering_report(w);
  if (!report.is_clustering) throw std::invalid_argument("from_clustering_word: word is not clustering");

  const Word u = w.reindexed();
  DiscreteIET iet(parikh(u).counts(), *report.permutation);

  // The occurrence heading row p reappears in the last column of the row
  // whose rotation starts one position later.
  const std::size_t n = u.size();
  const auto starts = sorted_rotation_starts(u);
  std::vector<std::size_t> row_of_start(n);
  for (std::size_t row = 0; row < n; ++row) row_of_start[starts[row]] = row + 1;
  for (std::size_t row = 0; row < n; ++row) {
    if (iet.apply(row + 1) != row_of_start[(starts[row] + 1) % n])
      throw std::logic_error("rotation array map disagrees with the induced exchange");
  }
  return iet;
}

}  // namespace clusterword
