#include "maxplus/wfa.hpp"

#include <json.hpp>

namespace maxplus {

Wfa::Wfa(Alphabet alphabet, Vector initial, Vector final, std::vector<Matrix> transitions)
    : alphabet_(std::move(alphabet)),
      initial_(std::move(initial)),
      final_(std::move(final)),
      transitions_(std::move(transitions)) {
  const std::size_t d = initial_.size();
  if (final_.size() != d) throw std::invalid_argument("Wfa: initial/final size mismatch");
  if (transitions_.size() != alphabet_.size()) {
    throw std::invalid_argument("Wfa: one transition matrix per symbol required");
  }
  for (const Matrix& m : transitions_) {
    if (m.row_count() != d || m.col_count() != d) {
      throw std::invalid_argument("Wfa: transition matrix dimension mismatch");
    }
  }
}

bool Wfa::operator==(const Wfa& o) const {
  return alphabet_ == o.alphabet_ && initial_ == o.initial_ && final_ == o.final_ &&
         transitions_ == o.transitions_;
}

Vector configuration(const Wfa& a, const Word& w) {
  Vector x = a.initial();
  for (std::size_t i = 0; i < w.size(); ++i) {
    x = mat_mul(x, a.transition(a.alphabet().require(w.symbol(i))));
  }
  return x;
}

Scalar evaluate(const Wfa& a, const Word& w) { return dot(configuration(a, w), a.final()); }

bool is_rational(const Wfa& a) {
  const auto all_finite = [](const std::vector<Scalar>& v) {
    for (const Scalar& s : v) {
      if (s.is_bottom()) return false;
    }
    return true;
  };
  if (!all_finite(a.initial().entries()) || !all_finite(a.final().entries())) return false;
  for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
    const Matrix& m = a.transition(s);
    for (std::size_t i = 0; i < m.row_count(); ++i) {
      for (std::size_t j = 0; j < m.col_count(); ++j) {
        if (m(i, j).is_bottom()) return false;
      }
    }
  }
  return true;
}

namespace {

using nlohmann::json;

Scalar parse_scalar_at(const json& node, const std::string& where) {
  if (!node.is_string()) {
    throw WfaParseError(where + ": scalar tokens must be strings");
  }
  try {
    return Scalar::parse(node.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw WfaParseError(where + ": " + e.what());
  }
}

Vector parse_vector(const json& node, std::size_t want, const std::string& where) {
  if (!node.is_array()) throw WfaParseError(where + ": expected an array of scalar tokens");
  if (node.size() != want) {
    throw WfaParseError(where + ": expected " + std::to_string(want) + " entries, got " +
                        std::to_string(node.size()));
  }
  std::vector<Scalar> entries;
  entries.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    entries.push_back(parse_scalar_at(node[i], where + "[" + std::to_string(i) + "]"));
  }
  return Vector(std::move(entries));
}

}  // namespace

Wfa read_wfa(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw WfaParseError(std::string("WFA document: ") + e.what());
  }
  if (!doc.is_object()) throw WfaParseError("WFA document: top level must be an object");
  for (const char* key : {"alphabet", "initial", "final", "transitions"}) {
    if (!doc.contains(key)) {
      throw WfaParseError(std::string("WFA document: missing key '") + key + "'");
    }
  }

  const json& alpha_node = doc["alphabet"];
  if (!alpha_node.is_array() || alpha_node.empty()) {
    throw WfaParseError("alphabet: expected a nonempty array of symbol strings");
  }
  std::vector<std::string> symbols;
  for (std::size_t i = 0; i < alpha_node.size(); ++i) {
    if (!alpha_node[i].is_string()) {
      throw WfaParseError("alphabet[" + std::to_string(i) + "]: expected a string");
    }
    symbols.push_back(alpha_node[i].get<std::string>());
  }
  Alphabet alphabet(std::move(symbols));

  if (!doc["initial"].is_array()) throw WfaParseError("initial: expected an array");
  const std::size_t d = doc["initial"].size();
  Vector initial = parse_vector(doc["initial"], d, "initial");
  Vector final = parse_vector(doc["final"], d, "final");

  const json& trans_node = doc["transitions"];
  if (!trans_node.is_object()) {
    throw WfaParseError("transitions: expected a map from symbol to matrix");
  }
  std::vector<Matrix> transitions;
  for (const std::string& sym : alphabet.symbols()) {
    if (!trans_node.contains(sym)) {
      throw WfaParseError("transitions: missing matrix for symbol '" + sym + "'");
    }
    const json& rows = trans_node[sym];
    const std::string where = "transitions." + sym;
    if (!rows.is_array() || rows.size() != d) {
      throw WfaParseError(where + ": expected " + std::to_string(d) + " rows");
    }
    Matrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      Vector row = parse_vector(rows[i], d, where + " row " + std::to_string(i));
      for (std::size_t j = 0; j < d; ++j) m(i, j) = row[j];
    }
    transitions.push_back(std::move(m));
  }
  for (auto it = trans_node.begin(); it != trans_node.end(); ++it) {
    if (!alphabet.index(it.key())) {
      throw WfaParseError("transitions: symbol '" + it.key() + "' is not in the alphabet");
    }
  }
  return Wfa(std::move(alphabet), std::move(initial), std::move(final), std::move(transitions));
}

std::string write_wfa(const Wfa& a) {
  json doc;
  doc["alphabet"] = a.alphabet().symbols();
  const auto vec_tokens = [](const Vector& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const Scalar& s : v.entries()) out.push_back(s.str());
    return out;
  };
  doc["initial"] = vec_tokens(a.initial());
  doc["final"] = vec_tokens(a.final());
  json trans = json::object();
  for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
    const Matrix& m = a.transition(s);
    json rows = json::array();
    for (std::size_t i = 0; i < m.row_count(); ++i) rows.push_back(vec_tokens(m.row(i)));
    trans[a.alphabet().symbol(s)] = std::move(rows);
  }
  doc["transitions"] = std::move(trans);
  return doc.dump(2) + "\n";
}

}  // namespace maxplus
