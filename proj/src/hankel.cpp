#include "maxplus/hankel.hpp"

#include <stdexcept>

namespace maxplus {

HankelMask::HankelMask() {
  rows_.push_back(Word());
  suffixes_.push_back(Word());
  row_set_.insert(Word());
  suffix_set_.insert(Word());
}

HankelMask::HankelMask(std::vector<Word> rows, std::vector<Word> suffixes)
    : rows_(std::move(rows)), suffixes_(std::move(suffixes)) {
  if (rows_.empty() || !rows_.front().empty() || suffixes_.empty() ||
      !suffixes_.front().empty()) {
    throw std::invalid_argument("HankelMask: both lists must start with epsilon");
  }
  for (const Word& w : rows_) {
    if (!row_set_.insert(w).second) {
      throw std::invalid_argument("HankelMask: duplicate row " + w.str());
    }
  }
  for (const Word& w : suffixes_) {
    if (!suffix_set_.insert(w).second) {
      throw std::invalid_argument("HankelMask: duplicate suffix " + w.str());
    }
  }
  for (const Word& w : rows_) {
    if (!w.empty() && !row_set_.count(w.prefix(w.size() - 1))) {
      throw std::invalid_argument("HankelMask: rows not prefix-closed at " + w.str());
    }
  }
  for (const Word& w : suffixes_) {
    if (!w.empty() && !suffix_set_.count(w.suffix(w.size() - 1))) {
      throw std::invalid_argument("HankelMask: suffixes not suffix-closed at " + w.str());
    }
  }
}

void HankelMask::add_row(const Word& p) {
  if (row_set_.count(p)) return;
  if (p.empty() || !row_set_.count(p.prefix(p.size() - 1))) {
    throw std::domain_error("HankelMask::add_row: " + p.str() +
                            " would break prefix-closedness");
  }
  rows_.push_back(p);
  row_set_.insert(p);
}

bool HankelMask::add_suffixes(const Word& s) {
  bool grew = false;
  for (const Word& w : s.suffixes()) {
    if (suffix_set_.insert(w).second) {
      suffixes_.push_back(w);
      grew = true;
    }
  }
  return grew;
}

HankelTable::HankelTable(MembershipOracle oracle, EventSink log)
    : oracle_(std::move(oracle)), log_(std::move(log)) {}

HankelTable::HankelTable(HankelMask mask, MembershipOracle oracle, EventSink log)
    : mask_(std::move(mask)), oracle_(std::move(oracle)), log_(std::move(log)) {}

Scalar HankelTable::entry(const Word& p, const Word& s) {
  const Word w = p + s;
  const auto it = cache_.find(w);
  if (it != cache_.end()) return it->second;
  Scalar value = oracle_(w);
  ++queries_;
  emit(log_, {{"event", "membership"},
              {"word", w.symbols()},
              {"value", value.str()},
              {"queries", queries_}});
  cache_.emplace(w, value);
  return value;
}

Matrix HankelTable::subblock(const std::vector<Word>& rows, const std::vector<Word>& cols) {
  Matrix out(Axis::of_words(rows), Axis::of_words(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = entry(rows[i], cols[j]);
  }
  return out;
}

Matrix HankelTable::current() { return subblock(mask_.rows(), mask_.suffixes()); }

std::string HankelTable::dump() {
  std::string out;
  for (const Word& s : mask_.suffixes()) {
    out += '\t';
    out += s.empty() ? "ε" : s.str();
  }
  out += '\n';
  for (const Word& p : mask_.rows()) {
    out += p.empty() ? "ε" : p.str();
    for (const Word& s : mask_.suffixes()) {
      out += '\t';
      out += entry(p, s).str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace maxplus
