#include "maxplus/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxplus {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("Alphabet: empty symbol list");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].empty()) throw std::invalid_argument("Alphabet: empty symbol name");
    for (std::size_t j = i + 1; j < symbols_.size(); ++j) {
      if (symbols_[i] == symbols_[j]) {
        throw std::invalid_argument("Alphabet: duplicate symbol '" + symbols_[i] + "'");
      }
    }
  }
}

std::optional<std::size_t> Alphabet::index(std::string_view symbol) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == symbol) return i;
  }
  return std::nullopt;
}

std::size_t Alphabet::require(std::string_view symbol) const {
  if (auto i = index(symbol)) return *i;
  throw std::domain_error("Alphabet: foreign symbol '" + std::string(symbol) + "'");
}

Word Word::single(std::string symbol) { return Word({std::move(symbol)}); }

Word Word::append(const std::string& symbol) const {
  std::vector<std::string> s = symbols_;
  s.push_back(symbol);
  return Word(std::move(s));
}

Word Word::prepend(const std::string& symbol) const {
  std::vector<std::string> s;
  s.reserve(symbols_.size() + 1);
  s.push_back(symbol);
  s.insert(s.end(), symbols_.begin(), symbols_.end());
  return Word(std::move(s));
}

Word operator+(const Word& a, const Word& b) {
  std::vector<std::string> s = a.symbols_;
  s.insert(s.end(), b.symbols_.begin(), b.symbols_.end());
  return Word(std::move(s));
}

Word Word::prefix(std::size_t len) const {
  if (len > size()) throw std::out_of_range("Word::prefix");
  return Word({symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(len)});
}

Word Word::suffix(std::size_t len) const {
  if (len > size()) throw std::out_of_range("Word::suffix");
  return Word({symbols_.end() - static_cast<std::ptrdiff_t>(len), symbols_.end()});
}

std::vector<Word> Word::suffixes() const {
  std::vector<Word> out;
  out.reserve(size() + 1);
  for (std::size_t len = 0; len <= size(); ++len) out.push_back(suffix(len));
  return out;
}

std::string Word::str() const {
  bool single_chars = std::all_of(symbols_.begin(), symbols_.end(),
                                  [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i > 0 && !single_chars) out += ',';
    out += symbols_[i];
  }
  return out;
}

Word Word::parse(std::string_view text, const Alphabet& alphabet) {
  if (text.empty()) return Word();
  std::vector<std::string> parts;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      parts.emplace_back(text.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else if (alphabet.index(text)) {
    parts.emplace_back(text);
  } else {
    const bool single_chars = std::all_of(alphabet.symbols().begin(), alphabet.symbols().end(),
                                          [](const std::string& s) { return s.size() == 1; });
    if (!single_chars) {
      throw std::domain_error("Word::parse: '" + std::string(text) +
                              "' is not a symbol and the alphabet has multi-character "
                              "symbols; separate symbols with commas");
    }
    for (char c : text) parts.emplace_back(1, c);
  }
  for (const auto& p : parts) alphabet.require(p);
  return Word(std::move(parts));
}

bool shortlex_less(const Word& a, const Word& b, const Alphabet& alphabet) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto ia = alphabet.require(a.symbol(i));
    const auto ib = alphabet.require(b.symbol(i));
    if (ia != ib) return ia < ib;
  }
  return false;
}

std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t max_len) {
  std::vector<Word> out{Word()};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (const auto& sym : alphabet.symbols()) out.push_back(out[i].append(sym));
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace maxplus
