#include "clusterword/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "clusterword/bwt.hpp"
#include "clusterword/iet_continuous.hpp"
#include "clusterword/iet_discrete.hpp"
#include "json.hpp"

namespace clusterword {

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& [key, value] : other.counts) counts[key] += value;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

void for_each_primitive_word(std::size_t r, std::size_t n, const std::function<void(const Word&)>& visit,
                             Letter first_letter) {
  if (r == 0) throw std::invalid_argument("alphabet size must be >= 1");
  if (r > n) throw std::invalid_argument("cannot use " + std::to_string(r) + " letters in a word of length " +
                                         std::to_string(n));
  if (first_letter > r) throw std::invalid_argument("first letter outside alphabet");

  std::vector<Letter> letters(n, 1);
  if (first_letter != 0) letters[0] = first_letter;
  std::vector<std::size_t> counts(r + 1, 0);
  while (true) {
    std::fill(counts.begin(), counts.end(), 0);
    for (Letter c : letters) ++counts[c];
    bool full_support = std::all_of(counts.begin() + 1, counts.end(), [](std::size_t c) { return c > 0; });
    if (full_support) {
      Word w(letters);
      if (is_primitive(w)) visit(w);
    }
    // Odometer step, leaving a pinned first letter alone.
    std::size_t pos = n;
    const std::size_t lowest = first_letter != 0 ? 1 : 0;
    while (pos > lowest && letters[pos - 1] == r) letters[--pos] = 1;
    if (pos == lowest) return;
    ++letters[pos - 1];
  }
}

std::vector<Word> enumerate_primitive_words(std::size_t r, std::size_t n) {
  std::vector<Word> out;
  for_each_primitive_word(r, n, [&](const Word& w) { out.push_back(w); });
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

class Collector {
 public:
  Collector(VerificationReport& report, const FailureSink& sink) : report_(report), sink_(sink) {}

  void fail(const std::string& what) {
    std::lock_guard lock(mutex_);
    report_.failures.push_back(what);
    if (sink_) sink_(what);
  }

 private:
  VerificationReport& report_;
  const FailureSink& sink_;
  std::mutex mutex_;
};

/// Runs `work(key, partial)` for keys 1..partitions, concurrently when
/// allowed, and merges the partial counts in key order.
template <typename Work>
void run_partitioned(std::size_t partitions, const VerifyOptions& options, VerificationReport& report, Work work) {
  const std::size_t threads =
      options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<VerificationReport> partials(partitions);
  if (threads <= 1 || partitions <= 1) {
    for (std::size_t key = 1; key <= partitions; ++key) work(static_cast<Letter>(key), partials[key - 1]);
  } else {
    std::vector<std::future<void>> pending;
    for (std::size_t key = 1; key <= partitions; ++key)
      pending.push_back(
          std::async(std::launch::async, [&, key] { work(static_cast<Letter>(key), partials[key - 1]); }));
    for (auto& f : pending) f.get();
  }
  for (const auto& p : partials) report.merge(p);
}

std::string describe(const Word& w) { return format_word(w); }

struct ExchangeFacts {
  Permutation pi;
  bool minimal = false;
  std::vector<Word> cycle_words;
  std::vector<std::size_t> cycle_starts;
};

/// Per-thread cache of the exchanges with a given length vector.
class ExchangeCache {
 public:
  const std::vector<ExchangeFacts>& lookup(const ParikhVector& lengths) {
    auto it = cache_.find(lengths.counts());
    if (it != cache_.end()) return it->second;
    std::vector<ExchangeFacts> facts;
    for (auto& pi : Permutation::all(lengths.alphabet_size())) {
      if (pi.is_identity()) continue;
      DiscreteIET t(lengths.counts(), pi);
      auto orbits = t.orbit_decomposition();
      ExchangeFacts f{pi, orbits.cycles.size() == 1, std::move(orbits.words), {}};
      for (const auto& c : orbits.cycles) f.cycle_starts.push_back(c.front());
      facts.push_back(std::move(f));
    }
    return cache_.emplace(lengths.counts(), std::move(facts)).first->second;
  }

 private:
  std::map<std::vector<std::size_t>, std::vector<ExchangeFacts>> cache_;
};

/// Offset at which ww starts in the periodic word cycle^infinity.
std::optional<std::size_t> square_offset_in_periodic(const Word& w, const Word& cycle) {
  const std::size_t need = 2 * w.size() + cycle.size();
  const Word periodic = cycle.power((need + cycle.size() - 1) / cycle.size());
  const Word ww = w + w;
  auto hit = std::search(periodic.begin(), periodic.end(), ww.begin(), ww.end());
  if (hit == periodic.end()) return std::nullopt;
  return static_cast<std::size_t>(hit - periodic.begin());
}

}  // namespace

VerificationReport verify_theorem1(std::size_t r, std::size_t n_max, const VerifyOptions& options) {
  const auto started = Clock::now();
  VerificationReport report;
  report.suite = "theorem1";
  report.r = r;
  report.bound = n_max;
  Collector collector(report, options.on_failure);

  auto work = [&](Letter first, VerificationReport& part) {
    ExchangeCache cache;
    auto& counts = part.counts;
    for (std::size_t n = r; n <= n_max; ++n) {
      for_each_primitive_word(r, n, [&](const Word& w) {
        ++counts["words"];
        const auto verdict = clustering_report(w);
        ++counts[verdict.is_clustering ? "clustering" : "non_clustering"];

        // Independent route: look for ww in the trajectories of every
        // exchange with lengths parikh(w).
        std::set<Permutation> in_minimal, in_any;
        const ParikhVector lengths = parikh(w, r);
        for (const auto& facts : cache.lookup(lengths)) {
          ++counts[facts.minimal ? "minimal_instances" : "non_minimal_instances"];
          for (std::size_t c = 0; c < facts.cycle_words.size(); ++c) {
            auto offset = square_offset_in_periodic(w, facts.cycle_words[c]);
            if (!offset) continue;
            in_any.insert(facts.pi);
            if (!facts.minimal) continue;
            in_minimal.insert(facts.pi);

            // Same occurrence in the rational continuous exchange.
            DiscreteIET discrete(lengths.counts(), facts.pi);
            std::size_t point = facts.cycle_starts[c];
            for (std::size_t s = 0; s < *offset; ++s) point = discrete.apply(point);
            const auto continuous = from_discrete(discrete);
            const auto x = ExactReal::fraction(static_cast<std::int64_t>(point - 1),
                                               static_cast<std::int64_t>(discrete.point_count()));
            ++counts["continuous_checked"];
            if (continuous.trajectory(x, 2 * n) != w + w)
              collector.fail(describe(w) + ": continuous trajectory differs from discrete for pi=" +
                             format_permutation(facts.pi));
          }
        }

        if (verdict.is_clustering) {
          const std::set<Permutation> expected{*verdict.permutation};
          if (in_minimal != expected)
            collector.fail(describe(w) + ": clustering with pi=" + format_permutation(*verdict.permutation) +
                           " but ww found in minimal exchanges for " + std::to_string(in_minimal.size()) +
                           " permutations");
          if (in_any != expected)
            collector.fail(describe(w) + ": ww occurs in a non-minimal exchange with another permutation");
        } else if (!in_minimal.empty() || !in_any.empty()) {
          collector.fail(describe(w) + ": not clustering but ww occurs in an exchange trajectory");
        }

        if (r == 2 && is_balanced(w + w) != verdict.is_clustering)
          collector.fail(describe(w) + ": binary clustering disagrees with balance of ww");
      }, first);
    }
  };
  run_partitioned(r, options, report, work);
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return report;
}

VerificationReport verify_injectivity(std::size_t r, std::size_t n_max, const VerifyOptions& options) {
  const auto started = Clock::now();
  VerificationReport report;
  report.suite = "injectivity";
  report.r = r;
  report.bound = n_max;
  Collector collector(report, options.on_failure);

  // Images of different first-letter partitions can collide, so the image
  // table is shared.
  std::mutex table_mutex;
  std::map<Word, Word> antecedent_of_image;
  auto work = [&](Letter first, VerificationReport& part) {
    for (std::size_t n = r; n <= n_max; ++n) {
      for_each_primitive_word(r, n, [&](const Word& w) {
        ++part.counts["words"];
        const Word image = bwt(w);
        const Word canonical = canonical_conjugate(w);
        const auto inverse = inverse_bwt(image);
        if (inverse.status != AntecedentStatus::PrimitiveAntecedent || inverse.antecedent->root != canonical)
          collector.fail(describe(w) + ": inverse of " + describe(image) + " does not recover the class");
        std::lock_guard lock(table_mutex);
        auto [it, inserted] = antecedent_of_image.emplace(image, canonical);
        if (!inserted && it->second != canonical)
          collector.fail(describe(image) + ": image of non-conjugate words " + describe(it->second) + " and " +
                         describe(canonical));
      }, first);
    }
  };
  run_partitioned(r, options, report, work);
  report.counts["classes"] = antecedent_of_image.size();
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return report;
}

namespace {

void for_each_composition(std::size_t parts, std::size_t total, std::vector<std::size_t>& prefix,
                          const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (parts == 0) {
    if (total == 0) visit(prefix);
    return;
  }
  for (std::size_t first = 1; first + (parts - 1) <= total; ++first) {
    prefix.push_back(first);
    for_each_composition(parts - 1, total - first, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

VerificationReport verify_nonsurjectivity(std::size_t r, std::size_t length_bound, const VerifyOptions& options) {
  const auto started = Clock::now();
  VerificationReport report;
  report.suite = "nonsurjectivity";
  report.r = r;
  report.bound = length_bound;
  Collector collector(report, options.on_failure);
  if (r == 0) throw std::invalid_argument("alphabet size must be >= 1");

  auto check = [&](const std::vector<std::size_t>& lengths, VerificationReport& part) {
    const std::size_t common = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0},
                                               [](std::size_t g, std::size_t x) { return std::gcd(g, x); });
    for (const auto& pi : Permutation::all(r)) {
      if (pi.is_identity()) continue;
      DiscreteIET t(lengths, pi);
      const Word image = clustering_image(pi, ParikhVector(lengths));
      const auto inverse = inverse_bwt(image);
      const std::string where = describe(image) + " (pi=" + format_permutation(pi) + ")";
      if (t.is_minimal()) {
        ++part.counts["minimal"];
        if (inverse.status != AntecedentStatus::PrimitiveAntecedent ||
            !are_conjugate(inverse.antecedent->root, *t.clustering_word()))
          collector.fail(where + ": minimal exchange but antecedent is not its cycle word");
      } else {
        ++part.counts["non_minimal"];
        if (inverse.status == AntecedentStatus::PrimitiveAntecedent)
          collector.fail(where + ": non-minimal exchange but image has a primitive antecedent");
        if (inverse.status == AntecedentStatus::NonPrimitiveAntecedent) {
          ++part.counts["non_primitive_antecedent"];
          if (common < 2) collector.fail(where + ": non-primitive antecedent with coprime lengths");
        } else {
          ++part.counts["no_antecedent"];
        }
      }
    }
  };

  auto work = [&](std::size_t first, VerificationReport& part) {
    for (std::size_t total = r; total <= length_bound; ++total) {
      if (first + (r - 1) > total) continue;
      std::vector<std::size_t> prefix{first};
      for_each_composition(r - 1, total - first, prefix, [&](const auto& lengths) { check(lengths, part); });
    }
  };
  // Partitioned by the first length.
  run_partitioned(length_bound >= r ? length_bound - r + 1 : 0, options, report, work);
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return report;
}

std::vector<CensusEntry> clustering_census(std::size_t r, std::size_t n) {
  std::map<Word, Permutation> classes;
  for_each_primitive_word(r, n, [&](const Word& w) {
    auto verdict = clustering_report(w);
    if (verdict.is_clustering) classes.emplace(canonical_conjugate(w), *verdict.permutation);
  });
  std::vector<CensusEntry> out;
  for (auto& [word, pi] : classes) out.push_back({word, pi});
  return out;
}

bool is_balanced(const Word& w) {
  const std::size_t n = w.size();
  const Letter marker = w.empty() ? 0 : w.max_letter();
  std::vector<std::size_t> prefix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + (w[i] == marker ? 1 : 0);
  for (std::size_t len = 1; len <= n; ++len) {
    std::size_t lo = n, hi = 0;
    for (std::size_t i = 0; i + len <= n; ++i) {
      const std::size_t count = prefix[i + len] - prefix[i];
      lo = std::min(lo, count);
      hi = std::max(hi, count);
    }
    if (hi > lo + 1) return false;
  }
  return true;
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "suite: " << report.suite << '\n';
  out << "r: " << report.r << '\n';
  out << "bound: " << report.bound << '\n';
  for (const auto& [key, value] : report.counts) out << key << ": " << value << '\n';
  for (const auto& f : report.failures) out << "failure: " << f << '\n';
  out << "failures: " << report.failures.size() << '\n';
  out << "elapsed_seconds: " << report.elapsed_seconds << '\n';
  return out.str();
}

std::string report_to_json(const VerificationReport& report, int indent) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["r"] = report.r;
  j["bound"] = report.bound;
  j["counts"] = report.counts;
  j["failures"] = report.failures;
  j["ok"] = report.ok();
  j["elapsed_seconds"] = report.elapsed_seconds;
  return j.dump(indent);
}

VerificationReport report_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  VerificationReport report;
  report.suite = j.at("suite").get<std::string>();
  report.r = j.at("r").get<std::size_t>();
  report.bound = j.at("bound").get<std::size_t>();
  report.counts = j.at("counts").get<std::map<std::string, std::size_t>>();
  report.failures = j.at("failures").get<std::vector<std::string>>();
  report.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  return report;
}

}  // namespace clusterword
