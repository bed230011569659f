#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "clusterword/word.hpp"

namespace clusterword {

/// Outcome of an exhaustive verification sweep. `failures` is empty iff the
/// checked statement held on every enumerated instance.
struct VerificationReport {
  std::string suite;
  std::size_t r = 0;
  std::size_t bound = 0;
  std::map<std::string, std::size_t> counts;
  std::vector<std::string> failures;
  double elapsed_seconds = 0.0;

  bool ok() const { return failures.empty(); }
  /// Associative merge of counts and failures.
  void merge(const VerificationReport& other);
};

/// Called with each failure descriptor as soon as it is found.
using FailureSink = std::function<void(const std::string&)>;

struct VerifyOptions {
  /// Number of prefix partitions processed concurrently; 0 picks the
  /// hardware concurrency.
  std::size_t threads = 0;
  FailureSink on_failure;
};

/// Visits, in lexicographic order, every primitive word of length n over
/// {1..r} in which all r letters occur. Restricting `first_letter` to
/// 1..r visits only the words starting with it. Throws if r > n or r == 0.
void for_each_primitive_word(std::size_t r, std::size_t n, const std::function<void(const Word&)>& visit,
                             Letter first_letter = 0);
std::vector<Word> enumerate_primitive_words(std::size_t r, std::size_t n);

/// Clustering by BWT versus occurrence of ww in a trajectory of a minimal
/// discrete exchange with lengths parikh(w), for every r-letter primitive
/// word of length r..n_max.
VerificationReport verify_theorem1(std::size_t r, std::size_t n_max, const VerifyOptions& options = {});

/// inverse_bwt(bwt(w)) recovers the conjugacy class of w, and distinct
/// classes have distinct images.
VerificationReport verify_injectivity(std::size_t r, std::size_t n_max, const VerifyOptions& options = {});

/// For every length vector with r parts and total <= length_bound and every
/// pi != Id: a non-minimal exchange has a clustering image without primitive
/// antecedent; a minimal one has its cycle word as antecedent.
VerificationReport verify_nonsurjectivity(std::size_t r, std::size_t length_bound,
                                          const VerifyOptions& options = {});

struct CensusEntry {
  Word word;  ///< canonical conjugate
  Permutation permutation;
  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

/// One canonical representative per conjugacy class of clustering words of
/// length n over exactly r letters, sorted by word.
std::vector<CensusEntry> clustering_census(std::size_t r, std::size_t n);

/// Every pair of equal-length factors differs by at most one in the count of
/// each letter. Binary words only.
bool is_balanced(const Word& w);

std::string report_to_text(const VerificationReport& report);
std::string report_to_json(const VerificationReport& report, int indent = 2);
VerificationReport report_from_json(const std::string& text);

}  // namespace clusterword
