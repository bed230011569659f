#include "clusterword/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "clusterword/bwt.hpp"
#include "clusterword/exact_real.hpp"
#include "clusterword/iet_continuous.hpp"
#include "clusterword/iet_discrete.hpp"
#include "clusterword/oracle.hpp"
#include "json.hpp"

namespace clusterword {
namespace {

using nlohmann::ordered_json;

constexpr const char* kExactRealHelp =
    "Exact reals: p/q, a+b*sqrt(d), a-b*sqrt(d), b*sqrt(d) or sqrt(d) with rational a, b and "
    "square-free d >= 2, e.g. -1/2+1/2*sqrt(5).";

struct Options {
  bool json = false;
  std::string alphabet;
};

/// Word I/O honouring --alphabet.
class WordCodec {
 public:
  explicit WordCodec(const std::string& alphabet) {
    if (!alphabet.empty()) alphabet_.emplace(split(alphabet, ','));
  }

  Word parse(const std::string& text) const {
    if (!alphabet_) return parse_word(text);
    if (text.empty()) throw std::invalid_argument("empty word");
    std::vector<std::string> tokens;
    if (text.find(',') != std::string::npos) {
      tokens = split(text, ',');
    } else {
      for (char c : text) tokens.emplace_back(1, c);
    }
    return normalize(tokens, *alphabet_);
  }

  std::string format(const Word& w) const { return alphabet_ ? format_word(w, *alphabet_) : format_word(w); }

 private:
  std::optional<OrderedAlphabet> alphabet_;
};

std::vector<ExactReal> parse_reals(const std::string& text) {
  std::vector<ExactReal> out;
  for (const auto& tok : split(text, ',')) out.push_back(parse_exact_real(tok));
  return out;
}

std::vector<std::string> real_strings(const std::vector<ExactReal>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

int cmd_bwt(const std::string& text, const Options& opt, std::ostream& out) {
  WordCodec codec(opt.alphabet);
  const Word w = codec.parse(text);
  const Word image = bwt(w);
  if (opt.json) {
    emit(out, {{"command", "bwt"}, {"input", codec.format(w)}, {"bwt", codec.format(image)}});
  } else {
    out << codec.format(image) << '\n';
  }
  return kExitOk;
}

int cmd_unbwt(const std::string& text, const Options& opt, std::ostream& out) {
  WordCodec codec(opt.alphabet);
  const Word b = codec.parse(text);
  const auto result = inverse_bwt(b);
  if (opt.json) {
    ordered_json j{{"command", "unbwt"}, {"input", codec.format(b)}, {"status", to_string(result.status)}};
    j["root"] = result.antecedent ? ordered_json(codec.format(result.antecedent->root)) : ordered_json(nullptr);
    j["power"] = result.antecedent ? ordered_json(result.antecedent->power) : ordered_json(nullptr);
    j["cycle_words"] = ordered_json::array();
    for (const auto& c : result.cycle_words) j["cycle_words"].push_back(codec.format(c));
    emit(out, j);
    return kExitOk;
  }
  switch (result.status) {
    case AntecedentStatus::PrimitiveAntecedent:
      out << "primitive: " << codec.format(result.antecedent->root) << '\n';
      break;
    case AntecedentStatus::NonPrimitiveAntecedent:
      out << "non-primitive: (" << codec.format(result.antecedent->root) << ")^" << result.antecedent->power << '\n';
      break;
    case AntecedentStatus::NoAntecedent:
      out << "no antecedent\n";
      break;
  }
  return kExitOk;
}

int cmd_cluster(const std::string& text, const Options& opt, std::ostream& out) {
  WordCodec codec(opt.alphabet);
  const Word w = codec.parse(text);
  const auto report = clustering_report(w);
  if (opt.json) {
    ordered_json j{{"command", "cluster"}, {"word", codec.format(w)}, {"clustering", report.is_clustering}};
    j["permutation"] =
        report.permutation ? ordered_json(format_permutation(*report.permutation)) : ordered_json(nullptr);
    j["perfect"] = report.perfect;
    j["bwt"] = codec.format(report.bwt_image);
    j["occurring_letters"] = report.occurring_letters;
    emit(out, j);
    return kExitOk;
  }
  if (!report.is_clustering) {
    out << "not clustering\n";
  } else {
    out << "clustering pi=" << format_permutation(*report.permutation)
        << (report.perfect ? " perfect" : " not perfect") << '\n';
  }
  return kExitOk;
}

struct IetFlags {
  bool minimal = false;
  bool word = false;
  bool orbits = false;
  bool witness = false;
};

int cmd_iet(const std::string& lengths_text, const std::string& pi_text, IetFlags flags, const Options& opt,
            std::ostream& out) {
  const DiscreteIET t(parse_lengths(lengths_text), parse_permutation(pi_text));
  const auto orbits = t.orbit_decomposition();
  const auto word = t.clustering_word();
  const auto witness = t.nonminimality_witness();
  auto optional_word = [](const std::optional<Word>& w) {
    return w ? ordered_json(format_word(*w)) : ordered_json(nullptr);
  };

  if (opt.json) {
    ordered_json j{{"command", "iet"}, {"lengths", t.lengths()}, {"permutation", format_permutation(t.permutation())}};
    j["offsets"] = t.offsets();
    j["minimal"] = t.is_minimal();
    j["word"] = optional_word(word);
    j["orbits"] = ordered_json::array();
    for (std::size_t c = 0; c < orbits.cycles.size(); ++c)
      j["orbits"].push_back({{"points", orbits.cycles[c]}, {"word", format_word(orbits.words[c])}});
    j["witness"] = optional_word(witness);
    emit(out, j);
    return kExitOk;
  }

  const bool all = !(flags.minimal || flags.word || flags.orbits || flags.witness);
  if (all || flags.minimal) out << (all ? "minimal: " : "") << (t.is_minimal() ? "minimal" : "non-minimal") << '\n';
  if (all || flags.word) out << (all ? "word: " : "") << (word ? format_word(*word) : "none") << '\n';
  if (all || flags.orbits) {
    if (all) out << "orbits:";
    for (const auto& w : orbits.words) out << (all ? " " : "") << format_word(w) << (all ? "" : "\n");
    if (all) out << '\n';
  }
  if (all || flags.witness) out << (all ? "witness: " : "") << (witness ? format_word(*witness) : "none") << '\n';
  return kExitOk;
}

int cmd_cont(const std::string& alphas_text, const std::string& pi_text, const std::string& start_text,
             std::size_t length, const Options& opt, std::ostream& out) {
  const ContinuousIET t(parse_reals(alphas_text), parse_permutation(pi_text));
  const ExactReal start = parse_exact_real(start_text);
  const Word traj = t.trajectory(start, length);
  if (opt.json) {
    emit(out, {{"command", "cont"},
               {"alphas", real_strings(t.alphas())},
               {"permutation", format_permutation(t.permutation())},
               {"taus", real_strings(t.taus())},
               {"start", start.to_string()},
               {"length", length},
               {"trajectory", format_word(traj)}});
  } else {
    out << format_word(traj) << '\n';
  }
  return kExitOk;
}

int cmd_sturmian(const std::string& slope, std::size_t length, const Options& opt, std::ostream& out) {
  const ExactReal alpha = slope == "golden" ? ExactReal::golden_conjugate() : parse_exact_real(slope);
  const Word w = sturmian_word(alpha, length);
  if (opt.json) {
    emit(out, {{"command", "sturmian"}, {"alpha", alpha.to_string()}, {"length", length}, {"word", format_word(w)}});
  } else {
    out << format_word(w) << '\n';
  }
  return kExitOk;
}

int cmd_keane(const std::string& alphas_text, const std::string& pi_text, std::size_t depth, const Options& opt,
              std::ostream& out) {
  const ContinuousIET t(parse_reals(alphas_text), parse_permutation(pi_text));
  const auto verdict = keane_check(t, depth);
  if (const auto* hit = std::get_if<CollisionFound>(&verdict)) {
    if (opt.json) {
      emit(out, {{"command", "keane"},
                 {"verdict", "collision"},
                 {"from_cut", hit->from_cut},
                 {"to_cut", hit->to_cut},
                 {"steps", hit->steps}});
    } else {
      out << "collision: T^" << hit->steps << "(gamma_" << hit->from_cut << ") = gamma_" << hit->to_cut << '\n';
    }
  } else {
    if (opt.json) {
      emit(out, {{"command", "keane"}, {"verdict", "no-collision"}, {"depth", depth}});
    } else {
      out << "no collision up to depth " << depth << '\n';
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::size_t r, std::size_t bound, std::size_t threads, const Options& opt,
               std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.threads = threads;
  options.on_failure = [&err](const std::string& f) { err << "failure: " << f << '\n'; };
  VerificationReport report;
  if (suite == "theorem1") {
    report = verify_theorem1(r, bound, options);
  } else if (suite == "injectivity") {
    report = verify_injectivity(r, bound, options);
  } else if (suite == "nonsurjectivity") {
    report = verify_nonsurjectivity(r, bound, options);
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  out << (opt.json ? report_to_json(report) + "\n" : report_to_text(report));
  return report.ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_census(std::size_t r, std::size_t n, const Options& opt, std::ostream& out) {
  const auto census = clustering_census(r, n);
  if (opt.json) {
    ordered_json j{{"command", "census"}, {"r", r}, {"n", n}, {"count", census.size()}};
    j["classes"] = ordered_json::array();
    for (const auto& e : census)
      j["classes"].push_back({{"word", format_word(e.word)}, {"permutation", format_permutation(e.permutation)}});
    emit(out, j);
  } else {
    for (const auto& e : census) out << format_word(e.word) << ' ' << format_permutation(e.permutation) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Burrows-Wheeler clustering and interval exchange toolkit", "clusterword"};
  app.require_subcommand(1);
  app.footer(std::string("Words: digit strings (122131313) or comma-separated letters (10,2,10,1).\n") +
             "Permutations: comma-separated images (3,2,1 means pi1=3, pi2=2, pi3=1).\n" + kExactRealHelp);

  Options opt;
  app.add_flag("--json", opt.json, "Print machine-readable JSON");
  app.add_option("--alphabet", opt.alphabet, "Ordered external tokens, comma-separated (bwt, unbwt, cluster)");

  std::string word, lengths, pi, alphas, start, slope, suite;
  std::size_t length = 0, depth = 0, r = 0, n = 0, threads = 0;
  IetFlags iet_flags;

  auto* bwt_cmd = app.add_subcommand("bwt", "Burrows-Wheeler transform of a word")->fallthrough();
  bwt_cmd->add_option("word", word, "Input word")->required();

  auto* unbwt_cmd = app.add_subcommand("unbwt", "Antecedent of a word under the transform")->fallthrough();
  unbwt_cmd->add_option("word", word, "Transformed word")->required();

  auto* cluster_cmd = app.add_subcommand("cluster", "Clustering verdict and permutation")->fallthrough();
  cluster_cmd->add_option("word", word, "Input word")->required();

  auto* iet_cmd = app.add_subcommand("iet", "Analyse a discrete interval exchange")->fallthrough();
  iet_cmd->add_option("lengths", lengths, "Length vector, e.g. 4,2,3")->required();
  iet_cmd->add_option("permutation", pi, "Permutation images, e.g. 3,2,1")->required();
  iet_cmd->add_flag("--minimal", iet_flags.minimal, "Print minimal/non-minimal");
  iet_cmd->add_flag("--word", iet_flags.word, "Print the trajectory word of point 1 when minimal");
  iet_cmd->add_flag("--orbits", iet_flags.orbits, "Print each cycle word from its least point");
  iet_cmd->add_flag("--witness", iet_flags.witness, "Print a zero-offset-sum cycle word when non-minimal");

  auto* cont_cmd = app.add_subcommand("cont", "Trajectory of a continuous interval exchange")->fallthrough();
  cont_cmd->add_option("alphas", alphas, "Exact interval lengths summing to 1")->required();
  cont_cmd->add_option("permutation", pi, "Permutation images")->required();
  cont_cmd->add_option("start", start, "Exact start point in [0,1)")->required();
  cont_cmd->add_option("length", length, "Trajectory length")->required();

  auto* sturmian_cmd = app.add_subcommand("sturmian", "Characteristic Sturmian word of a rotation")->fallthrough();
  sturmian_cmd->add_option("slope", slope, "Rotation number in (0,1), or 'golden'")->required();
  sturmian_cmd->add_option("length", length, "Number of letters")->required();

  auto* keane_cmd = app.add_subcommand("keane", "Search for collisions between discontinuity orbits")->fallthrough();
  keane_cmd->add_option("alphas", alphas, "Exact interval lengths summing to 1")->required();
  keane_cmd->add_option("permutation", pi, "Permutation images")->required();
  keane_cmd->add_option("depth", depth, "Number of iterates")->required()->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive verification suite")->fallthrough();
  verify_cmd->add_option("suite", suite, "theorem1 | injectivity | nonsurjectivity")
      ->required()
      ->check(CLI::IsMember({"theorem1", "injectivity", "nonsurjectivity"}));
  verify_cmd->add_option("--r", r, "Alphabet size")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--nmax", n, "Largest word length (total length for nonsurjectivity)")->required();
  verify_cmd->add_option("--threads", threads, "Concurrent partitions (0 = hardware)");

  auto* census_cmd = app.add_subcommand("census", "Clustering conjugacy classes of a given size")->fallthrough();
  census_cmd->add_option("r", r, "Alphabet size")->required()->check(CLI::PositiveNumber);
  census_cmd->add_option("n", n, "Word length")->required()->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (bwt_cmd->parsed()) return cmd_bwt(word, opt, out);
    if (unbwt_cmd->parsed()) return cmd_unbwt(word, opt, out);
    if (cluster_cmd->parsed()) return cmd_cluster(word, opt, out);
    if (iet_cmd->parsed()) return cmd_iet(lengths, pi, iet_flags, opt, out);
    if (cont_cmd->parsed()) return cmd_cont(alphas, pi, start, length, opt, out);
    if (sturmian_cmd->parsed()) return cmd_sturmian(slope, length, opt, out);
    if (keane_cmd->parsed()) return cmd_keane(alphas, pi, depth, opt, out);
    if (verify_cmd->parsed()) return cmd_verify(suite, r, n, threads, opt, out, err);
    if (census_cmd->parsed()) return cmd_census(r, n, opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace clusterword
