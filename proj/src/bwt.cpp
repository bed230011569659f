#include "clusterword/bwt.hpp"

#include <algorithm>
#include <stdexcept>

namespace clusterword {

Word bwt(const Word& w) {
  const std::size_t n = w.size();
  std::vector<Letter> last;
  last.reserve(n);
  for (std::size_t start : sorted_rotation_starts(w)) last.push_back(w[(start + n - 1) % n]);
  return Word(std::move(last));
}

ClusterReport clustering_report(const Word& w) {
  ClusterReport report;
  report.occurring_letters = w.occurring_letters();
  report.bwt_image = bwt(w);
  const std::size_t d = report.occurring_letters.size();
  if (d < 2) return report;

  // B commutes with the order-preserving reindexing, so reindex the image.
  const Word image = report.bwt_image.reindexed();
  std::vector<Letter> runs;
  for (std::size_t i = 0; i < image.size(); ++i)
    if (i == 0 || image[i] != image[i - 1]) runs.push_back(image[i]);
  if (runs.size() != d) return report;

  Permutation pi(std::move(runs));
  if (pi.is_identity()) return report;
  report.is_clustering = true;
  report.perfect = pi.is_reversal();
  report.permutation = std::move(pi);
  return report;
}

const char* to_string(AntecedentStatus status) {
  switch (status) {
    case AntecedentStatus::PrimitiveAntecedent: return "primitive";
    case AntecedentStatus::NonPrimitiveAntecedent: return "non-primitive";
    case AntecedentStatus::NoAntecedent: return "none";
  }
  return "none";
}

InverseResult inverse_bwt(const Word& b) {
  const std::size_t n = b.size();
  if (n == 0) throw std::invalid_argument("inverse_bwt: empty input");

  std::vector<Letter> first(b.begin(), b.end());
  std::sort(first.begin(), first.end());

  // successor[i] = row of the last column holding the occurrence that
  // starts row i; the j-th c of the first column is the j-th c of b.
  const Letter r = b.max_letter();
  std::vector<std::vector<std::size_t>> positions_in_last(r + 1);
  for (std::size_t i = 0; i < n; ++i) positions_in_last[b[i]].push_back(i);
  std::vector<std::size_t> successor(n);
  std::vector<std::size_t> seen(r + 1, 0);
  for (std::size_t i = 0; i < n; ++i) successor[i] = positions_in_last[first[i]][seen[first[i]]++];

  InverseResult result;
  std::vector<bool> visited(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (visited[i]) continue;
    std::vector<Letter> spelled;
    for (std::size_t row = i; !visited[row]; row = successor[row]) {
      visited[row] = true;
      spelled.push_back(first[row]);
    }
    result.cycle_words.push_back(canonical_conjugate(Word(std::move(spelled))));
  }
  std::sort(result.cycle_words.begin(), result.cycle_words.end());

  const auto& cycles = result.cycle_words;
  if (cycles.size() == 1) {
    result.status = AntecedentStatus::PrimitiveAntecedent;
    result.antecedent = PrimitiveRoot{cycles.front(), 1};
  } else if (cycles.front() == cycles.back() && is_primitive(cycles.front())) {
    result.status = AntecedentStatus::NonPrimitiveAntecedent;
    result.antecedent = PrimitiveRoot{cycles.front(), cycles.size()};
  }
  return result;
}

Word clustering_image(const Permutation& pi, const ParikhVector& counts) {
  if (pi.size() != counts.alphabet_size())
    throw std::invalid_argument("clustering_image: permutation and Parikh vector sizes differ");
  std::vector<Letter> out;
  for (std::size_t i = 1; i <= pi.size(); ++i) {
    const Letter c = pi(static_cast<Letter>(i));
    if (counts[c] == 0)
      throw std::invalid_argument("clustering_image: letter " + std::to_string(c) + " has zero count");
    out.insert(out.end(), counts[c], c);
  }
  return Word(std::move(out));
}

}  // namespace clusterword
