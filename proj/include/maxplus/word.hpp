#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace maxplus {

/// A finite ordered set of symbol names. Symbols are arbitrary nonempty
/// strings; the creation order is fixed and used for every deterministic
/// iteration (candidate scans, word enumeration).
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(std::size_t i) const { return symbols_.at(i); }
  const std::vector<std::string>& symbols() const { return symbols_; }

  std::optional<std::size_t> index(std::string_view symbol) const;
  /// Index of the symbol; throws std::domain_error for foreign symbols.
  std::size_t require(std::string_view symbol) const;

  bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }

 private:
  std::vector<std::string> symbols_;
};

/// A finite word: a sequence of symbols, possibly empty (epsilon).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {}

  static Word single(std::string symbol);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  const std::string& symbol(std::size_t i) const { return symbols_.at(i); }
  const std::vector<std::string>& symbols() const { return symbols_; }

  Word append(const std::string& symbol) const;
  Word prepend(const std::string& symbol) const;
  friend Word operator+(const Word& a, const Word& b);

  /// First len symbols. Requires len <= size().
  Word prefix(std::size_t len) const;
  /// Last len symbols. Requires len <= size().
  Word suffix(std::size_t len) const;
  /// All suffixes, shortest first: epsilon, ..., the word itself.
  std::vector<Word> suffixes() const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

  /// Display form: plain concatenation when every symbol is a single
  /// character, comma-separated otherwise; epsilon renders as "".
  std::string str() const;

  /// Parses a word over the given alphabet: comma-separated symbols, or
  /// plain concatenation when all alphabet symbols are single characters.
  /// Throws std::domain_error on foreign symbols.
  static Word parse(std::string_view text, const Alphabet& alphabet);

 private:
  std::vector<std::string> symbols_;
};

/// Shortlex order: by length first, then lexicographically by the
/// position of each symbol in the alphabet.
bool shortlex_less(const Word& a, const Word& b, const Alphabet& alphabet);

/// All words over the alphabet of length <= max_len, in shortlex order.
std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t max_len);

}  // namespace maxplus
