#include "clusterword/word.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

namespace clusterword {

OrderedAlphabet::OrderedAlphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("alphabet must contain at least one symbol");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!rank_.emplace(symbols_[i], static_cast<Letter>(i + 1)).second)
      throw std::invalid_argument("duplicate alphabet symbol '" + symbols_[i] + "'");
  }
}

OrderedAlphabet OrderedAlphabet::numeric(std::size_t r) {
  std::vector<std::string> symbols;
  for (std::size_t i = 1; i <= r; ++i) symbols.push_back(std::to_string(i));
  return OrderedAlphabet(std::move(symbols));
}

Letter OrderedAlphabet::rank(const std::string& token) const {
  auto it = rank_.find(token);
  if (it == rank_.end()) throw std::invalid_argument("unknown token '" + token + "'");
  return it->second;
}

const std::string& OrderedAlphabet::symbol(Letter letter) const {
  if (letter == 0 || letter > symbols_.size())
    throw std::out_of_range("letter " + std::to_string(letter) + " outside alphabet");
  return symbols_[letter - 1];
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter c : letters_)
    if (c == 0) throw std::invalid_argument("letters must be >= 1");
}

Word::Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

Letter Word::max_letter() const {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

Word Word::rotation(std::size_t shift) const {
  std::vector<Letter> out(letters_);
  if (!out.empty()) std::rotate(out.begin(), out.begin() + (shift % out.size()), out.end());
  Word w;
  w.letters_ = std::move(out);
  return w;
}

Word Word::power(std::size_t k) const {
  Word w;
  w.letters_.reserve(letters_.size() * k);
  for (std::size_t i = 0; i < k; ++i) w.letters_.insert(w.letters_.end(), letters_.begin(), letters_.end());
  return w;
}

Word Word::operator+(const Word& other) const {
  Word w = *this;
  w.letters_.insert(w.letters_.end(), other.letters_.begin(), other.letters_.end());
  return w;
}

std::vector<Letter> Word::occurring_letters() const {
  std::set<Letter> seen(letters_.begin(), letters_.end());
  return {seen.begin(), seen.end()};
}

Word Word::reindexed() const {
  auto occurring = occurring_letters();
  Word w;
  w.letters_.reserve(letters_.size());
  for (Letter c : letters_) {
    auto pos = std::lower_bound(occurring.begin(), occurring.end(), c) - occurring.begin();
    w.letters_.push_back(static_cast<Letter>(pos + 1));
  }
  return w;
}

std::size_t ParikhVector::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

Permutation::Permutation(std::vector<Letter> images) : images_(std::move(images)) {
  const std::size_t r = images_.size();
  inverse_.assign(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    Letter v = images_[i];
    if (v == 0 || v > r || inverse_[v - 1] != 0)
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(r));
    inverse_[v - 1] = static_cast<Letter>(i + 1);
  }
}

Permutation::Permutation(std::initializer_list<Letter> images)
    : Permutation(std::vector<Letter>(images)) {}

Permutation Permutation::identity(std::size_t r) {
  std::vector<Letter> images(r);
  std::iota(images.begin(), images.end(), Letter{1});
  return Permutation(std::move(images));
}

Permutation Permutation::reversal(std::size_t r) {
  std::vector<Letter> images(r);
  for (std::size_t i = 0; i < r; ++i) images[i] = static_cast<Letter>(r - i);
  return Permutation(std::move(images));
}

std::vector<Permutation> Permutation::all(std::size_t r) {
  std::vector<Letter> images(r);
  std::iota(images.begin(), images.end(), Letter{1});
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

bool Permutation::is_reversal() const {
  const std::size_t r = images_.size();
  for (std::size_t i = 0; i < r; ++i)
    if (images_[i] != r - i) return false;
  return true;
}

bool Permutation::is_irreducible() const {
  Letter running_max = 0;
  for (std::size_t d = 1; d < images_.size(); ++d) {
    running_max = std::max(running_max, images_[d - 1]);
    if (running_max == d) return false;
  }
  return true;
}

Word normalize(std::span<const std::string> tokens, const OrderedAlphabet& alphabet) {
  std::vector<Letter> letters;
  letters.reserve(tokens.size());
  for (const auto& t : tokens) letters.push_back(alphabet.rank(t));
  return Word(std::move(letters));
}

ParikhVector parikh(const Word& w) { return parikh(w, w.max_letter()); }

ParikhVector parikh(const Word& w, std::size_t r) {
  std::vector<std::size_t> counts(r, 0);
  for (Letter c : w) {
    if (c > r) throw std::invalid_argument("letter exceeds alphabet size");
    ++counts[c - 1];
  }
  return ParikhVector(std::move(counts));
}

bool is_primitive(const Word& w) {
  const std::size_t n = w.size();
  if (n <= 1) return true;
  // w is primitive iff its only occurrences in ww are at 0 and n.
  Word ww = w + w;
  auto first = ww.begin() + 1;
  auto hit = std::search(first, ww.end(), w.begin(), w.end());
  return static_cast<std::size_t>(hit - ww.begin()) == n;
}

PrimitiveRoot primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = w[i] == w[i - p];
    if (periodic) {
      std::vector<Letter> root(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
      return {Word(std::move(root)), n / p};
    }
  }
  return {w, 1};
}

std::vector<Conjugate> conjugates(const Word& w) {
  std::vector<Conjugate> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back({i + 1, w.rotation(i)});
  return out;
}

std::vector<std::size_t> sorted_rotation_starts(const Word& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> starts(n);
  std::iota(starts.begin(), starts.end(), std::size_t{0});
  Word ww = w + w;
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(ww.begin() + a, ww.begin() + a + n, ww.begin() + b,
                                        ww.begin() + b + n);
  };
  std::stable_sort(starts.begin(), starts.end(), less);
  return starts;
}

std::vector<Conjugate> sorted_conjugates(const Word& w) {
  std::vector<Conjugate> out;
  out.reserve(w.size());
  for (std::size_t start : sorted_rotation_starts(w)) out.push_back({start + 1, w.rotation(start)});
  return out;
}

Word canonical_conjugate(const Word& w) {
  if (w.empty()) return w;
  return w.rotation(sorted_rotation_starts(w).front());
}

bool are_conjugate(const Word& a, const Word& b) {
  return a.size() == b.size() && canonical_conjugate(a) == canonical_conjugate(b);
}

Permutation restrict_permutation(const Permutation& pi, std::span<const Letter> occurring) {
  if (occurring.empty()) throw std::invalid_argument("occurring letter set must be nonempty");
  std::vector<Letter> by_position(occurring.size());
  std::iota(by_position.begin(), by_position.end(), Letter{1});
  // Order the reindexed letters y by pi^{-1}(j_y); that order lists pi'(1), pi'(2), ...
  std::sort(by_position.begin(), by_position.end(), [&](Letter y, Letter z) {
    return pi.inverse(occurring[y - 1]) < pi.inverse(occurring[z - 1]);
  });
  return Permutation(std::move(by_position));
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t begin = 0;
  while (true) {
    auto end = text.find(sep, begin);
    parts.push_back(text.substr(begin, end - begin));
    if (end == std::string::npos) break;
    begin = end + 1;
  }
  return parts;
}

namespace {

std::size_t parse_positive(const std::string& token, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value == 0)
    throw std::invalid_argument(std::string("malformed ") + what + " '" + token + "'");
  return value;
}

}  // namespace

Word parse_word(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty word");
  std::vector<Letter> letters;
  if (text.find(',') != std::string::npos) {
    for (const auto& tok : split(text, ',')) letters.push_back(static_cast<Letter>(parse_positive(tok, "letter")));
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument(std::string("malformed letter '") + c + "'");
      letters.push_back(static_cast<Letter>(c - '0'));
    }
  }
  return Word(std::move(letters));
}

std::string format_word(const Word& w) {
  std::string out;
  const bool digits = w.max_letter() <= 9;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (digits) {
      out.push_back(static_cast<char>('0' + w[i]));
    } else {
      if (i) out.push_back(',');
      out += std::to_string(w[i]);
    }
  }
  return out;
}

std::string format_word(const Word& w, const OrderedAlphabet& alphabet) {
  bool single_chars = std::all_of(alphabet.symbols().begin(), alphabet.symbols().end(),
                                  [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !single_chars) out.push_back(',');
    out += alphabet.symbol(w[i]);
  }
  return out;
}

Permutation parse_permutation(const std::string& text) {
  std::vector<Letter> images;
  for (const auto& tok : split(text, ',')) images.push_back(static_cast<Letter>(parse_positive(tok, "permutation image")));
  return Permutation(std::move(images));
}

std::string format_permutation(const Permutation& pi) {
  std::string out;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(pi.images()[i]);
  }
  return out;
}

std::vector<std::size_t> parse_lengths(const std::string& text) {
  std::vector<std::size_t> lengths;
  for (const auto& tok : split(text, ',')) lengths.push_back(parse_positive(tok, "length"));
  return lengths;
}

}  // namespace clusterword
