#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "pairspec/verify.hpp"

namespace pairspec {

using Json = nlohmann::json;

/// A pair as written in a file: everything by label.
struct PairFile {
  std::string name;
  std::vector<std::string> elements;
  std::string zero;
  std::string one;
  std::vector<std::vector<std::string>> add;
  std::vector<std::vector<std::string>> mul;
  std::vector<std::string> tangible;
  std::vector<std::string> a0;
  std::optional<std::vector<std::string>> negation;  // image of each element, in order

  friend bool operator==(const PairFile&, const PairFile&) = default;
};

struct HyperFile {
  std::string name;
  std::vector<std::string> elements;
  std::string zero;
  std::string one;
  std::vector<std::vector<std::vector<std::string>>> hyperadd;
  std::vector<std::vector<std::string>> mul;
  std::optional<std::vector<std::string>> hypernegation;

  friend bool operator==(const HyperFile&, const HyperFile&) = default;
};

namespace detail {

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::SyntaxError,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
  }
}

inline const Json& field(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorCode::MissingField, std::string("missing field '") + key + "'");
  return *it;
}

inline std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw Error(ErrorCode::SyntaxError, where + " must be a string");
  return j.get<std::string>();
}

inline std::vector<std::string> as_strings(const Json& j, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorCode::SyntaxError, where + " must be an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_string(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

class LabelIndex {
 public:
  explicit LabelIndex(const std::vector<std::string>& labels) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (!map_.emplace(labels[i], static_cast<Elem>(i)).second) {
        throw Error(ErrorCode::DuplicateLabel, "label '" + labels[i] + "' declared twice");
      }
    }
  }
  Elem operator()(const std::string& label, const std::string& where) const {
    auto it = map_.find(label);
    if (it == map_.end()) throw Error(ErrorCode::UnknownLabel, where + ": undeclared label '" + label + "'");
    return it->second;
  }
  std::vector<Elem> all(const std::vector<std::string>& labels, const std::string& where) const {
    std::vector<Elem> out;
    for (const auto& l : labels) out.push_back((*this)(l, where));
    return out;
  }

 private:
  std::unordered_map<std::string, Elem> map_;
};

inline std::vector<std::vector<std::string>> label_table(const Json& j, std::size_t n, const std::string& what,
                                                         const LabelIndex& idx) {
  if (!j.is_array() || j.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, what + " table must have " + std::to_string(n) + " rows");
  }
  std::vector<std::vector<std::string>> out;
  for (std::size_t r = 0; r < n; ++r) {
    const std::string where = what + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != n) {
      throw Error(ErrorCode::DimensionMismatch, where + " must have " + std::to_string(n) + " entries");
    }
    out.push_back(as_strings(j[r], where));
    idx.all(out.back(), where);
  }
  return out;
}

inline void check_header(const std::vector<std::string>& elements, const std::string& zero, const std::string& one,
                         const LabelIndex& idx) {
  if (elements.empty()) throw Error(ErrorCode::DimensionMismatch, "no elements declared");
  idx(zero, "zero");
  idx(one, "one");
}

inline std::optional<std::vector<std::string>> permutation_field(const Json& obj, const char* key, std::size_t n,
                                                                 const LabelIndex& idx) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  auto v = as_strings(*it, key);
  if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, std::string(key) + " must have one entry per element");
  idx.all(v, key);
  return v;
}

/// Objects with sorted keys, one scalar array (a table row, a label list)
/// per line.
inline void write_canonical(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) os << ",\n";
      first = false;
      os << inner << Json(it.key()).dump() << ": ";
      write_canonical(os, it.value(), indent + 2);
    }
    os << "\n" << pad << "}";
    return;
  }
  if (j.is_array()) {
    bool flat = true;
    for (const auto& x : j) {
      if (x.is_object() || (x.is_array() && !x.empty() && (x[0].is_array() || x[0].is_object()))) flat = false;
    }
    if (flat) {
      os << "[";
      for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << j[i].dump();
      os << "]";
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << inner;
      write_canonical(os, j[i], indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << pad << "]";
    return;
  }
  os << j.dump();
}

}  // namespace detail

inline std::string canonical_dump(const Json& j) {
  std::ostringstream os;
  detail::write_canonical(os, j, 0);
  os << "\n";
  return os.str();
}

// ---- pair files ----

inline PairFile pair_file_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::SyntaxError, "top level must be an object");
  PairFile f;
  f.name = j.contains("name") ? detail::as_string(j["name"], "name") : std::string{};
  f.elements = detail::as_strings(detail::field(j, "elements"), "elements");
  const detail::LabelIndex idx(f.elements);
  f.zero = detail::as_string(detail::field(j, "zero"), "zero");
  f.one = detail::as_string(detail::field(j, "one"), "one");
  detail::check_header(f.elements, f.zero, f.one, idx);
  const std::size_t n = f.elements.size();
  f.add = detail::label_table(detail::field(j, "add"), n, "add", idx);
  f.mul = detail::label_table(detail::field(j, "mul"), n, "mul", idx);
  f.tangible = detail::as_strings(detail::field(j, "tangible"), "tangible");
  idx.all(f.tangible, "tangible");
  f.a0 = detail::as_strings(detail::field(j, "a0"), "a0");
  idx.all(f.a0, "a0");
  f.negation = detail::permutation_field(j, "negation", n, idx);
  return f;
}

inline PairFile parse_pair_file(const std::string& text) { return pair_file_from_json(detail::parse_json(text)); }

inline Json to_json(const PairFile& f) {
  Json j;
  j["name"] = f.name;
  j["elements"] = f.elements;
  j["zero"] = f.zero;
  j["one"] = f.one;
  j["add"] = f.add;
  j["mul"] = f.mul;
  j["tangible"] = f.tangible;
  j["a0"] = f.a0;
  if (f.negation) j["negation"] = *f.negation;
  return j;
}

inline std::string serialize_pair_file(const PairFile& f) { return canonical_dump(to_json(f)); }

inline PairFile to_pair_file(const Pair& p) {
  PairFile f;
  const auto n = static_cast<Elem>(p.size());
  f.name = p.name();
  f.elements = p.structure().names();
  f.zero = p.label(p.zero());
  f.one = p.label(p.one());
  f.add.assign(n, {});
  f.mul.assign(n, {});
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      f.add[a].push_back(p.label(p.add(a, b)));
      f.mul[a].push_back(p.label(p.mul(a, b)));
    }
  }
  for (Elem t : p.tangible()) f.tangible.push_back(p.label(t));
  for (Elem z : p.a_zero()) f.a0.push_back(p.label(z));
  if (p.negation()) {
    f.negation.emplace();
    for (Elem x = 0; x < n; ++x) f.negation->push_back(p.label((*p.negation())(x)));
  }
  return f;
}

inline RawStructure raw_structure(const PairFile& f) {
  const detail::LabelIndex idx(f.elements);
  RawStructure raw;
  raw.names = f.elements;
  raw.zero = idx(f.zero, "zero");
  raw.one = idx(f.one, "one");
  for (const auto& row : f.add) raw.add.push_back(idx.all(row, "add"));
  for (const auto& row : f.mul) raw.mul.push_back(idx.all(row, "mul"));
  return raw;
}

/// Full semantic validation: axioms, pair conditions, negation map.
inline Pair to_pair(const PairFile& f) {
  const detail::LabelIndex idx(f.elements);
  const auto t = idx.all(f.tangible, "tangible");
  const auto z = idx.all(f.a0, "a0");
  Pair p = validate_pair(raw_structure(f), t, z, f.name);
  if (f.negation) p = with_negation(p, idx.all(*f.negation, "negation"));
  return p;
}

inline Pair load_pair(const std::string& text) { return to_pair(parse_pair_file(text)); }

// ---- hyperstructure files ----

inline HyperFile hyper_file_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::SyntaxError, "top level must be an object");
  HyperFile f;
  f.name = j.contains("name") ? detail::as_string(j["name"], "name") : std::string{};
  f.elements = detail::as_strings(detail::field(j, "elements"), "elements");
  const detail::LabelIndex idx(f.elements);
  f.zero = detail::as_string(detail::field(j, "zero"), "zero");
  f.one = detail::as_string(detail::field(j, "one"), "one");
  detail::check_header(f.elements, f.zero, f.one, idx);
  const std::size_t n = f.elements.size();
  const Json& ha = detail::field(j, "hyperadd");
  if (!ha.is_array() || ha.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "hyperadd table must have " + std::to_string(n) + " rows");
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (!ha[r].is_array() || ha[r].size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "hyperadd[" + std::to_string(r) + "] must have " +
                                                    std::to_string(n) + " entries");
    }
    f.hyperadd.emplace_back();
    for (std::size_t c = 0; c < n; ++c) {
      const std::string where = "hyperadd[" + std::to_string(r) + "][" + std::to_string(c) + "]";
      auto cell = detail::as_strings(ha[r][c], where);
      if (cell.empty()) throw Error(ErrorCode::HyperAddEmpty, where + " is empty");
      idx.all(cell, where);
      f.hyperadd.back().push_back(std::move(cell));
    }
  }
  f.mul = detail::label_table(detail::field(j, "mul"), n, "mul", idx);
  f.hypernegation = detail::permutation_field(j, "hypernegation", n, idx);
  return f;
}

inline HyperFile parse_hyper_file(const std::string& text) { return hyper_file_from_json(detail::parse_json(text)); }

inline Json to_json(const HyperFile& f) {
  Json j;
  j["name"] = f.name;
  j["elements"] = f.elements;
  j["zero"] = f.zero;
  j["one"] = f.one;
  j["hyperadd"] = f.hyperadd;
  j["mul"] = f.mul;
  if (f.hypernegation) j["hypernegation"] = *f.hypernegation;
  return j;
}

inline std::string serialize_hyper_file(const HyperFile& f) { return canonical_dump(to_json(f)); }

inline HyperFile to_hyper_file(const HyperStructure& h, std::string name = {}) {
  HyperFile f;
  const auto n = static_cast<Elem>(h.size());
  f.name = std::move(name);
  f.elements = h.names();
  f.zero = h.name(h.zero());
  f.one = h.name(h.one());
  f.hyperadd.assign(n, {});
  f.mul.assign(n, {});
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      std::vector<std::string> cell;
      for (Elem c : subset_members(h.sum(a, b))) cell.push_back(h.name(c));
      f.hyperadd[a].push_back(std::move(cell));
      f.mul[a].push_back(h.name(h.mul(a, b)));
    }
  }
  if (h.hypernegation()) {
    f.hypernegation.emplace();
    for (Elem x : *h.hypernegation()) f.hypernegation->push_back(h.name(x));
  }
  return f;
}

inline HyperStructure to_hyperstructure(const HyperFile& f) {
  const detail::LabelIndex idx(f.elements);
  RawHyper raw;
  raw.names = f.elements;
  raw.zero = idx(f.zero, "zero");
  raw.one = idx(f.one, "one");
  for (const auto& row : f.mul) raw.mul.push_back(idx.all(row, "mul"));
  for (const auto& row : f.hyperadd) {
    raw.hyperadd.emplace_back();
    for (const auto& cell : row) raw.hyperadd.back().push_back(idx.all(cell, "hyperadd"));
  }
  if (f.hypernegation) raw.hypernegation = idx.all(*f.hypernegation, "hypernegation");
  return validate_hyperstructure(raw);
}

/// A file holding either a pair or a hyperstructure, told apart by "hyperadd".
inline bool is_hyper_json(const Json& j) { return j.is_object() && j.contains("hyperadd"); }

// ---- reports ----

inline Json blocks_json(const Pair& p, const Congruence& c) {
  Json out = Json::array();
  for (const auto& block : c.blocks()) {
    Json b = Json::array();
    for (Elem x : block) b.push_back(p.label(x));
    out.push_back(std::move(b));
  }
  return out;
}

inline Json labels_json(const Pair& p, const std::vector<Elem>& xs) {
  Json out = Json::array();
  for (Elem x : xs) out.push_back(p.label(x));
  return out;
}

template <class T>
Json opt_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline Json classification_json(const Pair& p, const PairClassification& c) {
  Json j;
  j["name"] = p.name();
  j["size"] = p.size();
  j["kind"] = std::string(to_string(c.kind));
  j["proper"] = c.proper;
  j["shallow"] = c.shallow;
  j["cancellative"] = c.cancellative;
  j["metatangible"] = c.metatangible;
  j["a0_bipotent"] = c.a0_bipotent;
  j["admissible"] = c.admissible;
  j["t_distributive"] = c.t_distributive;
  j["semiring"] = c.semiring;
  j["property_n"] = c.property_n;
  j["characteristic"] = c.characteristic ? Json::array({c.characteristic->p, c.characteristic->k}) : Json(nullptr);
  j["a0_characteristic"] = c.a0_characteristic;
  j["e_distributive"] = opt_json(c.e_distributive);
  j["e_central"] = opt_json(c.e_central);
  j["e_idempotent"] = opt_json(c.e_idempotent);
  j["e_final"] = opt_json(c.e_final);
  j["e_type"] = c.e_type ? Json::array({c.e_type->k, c.e_type->k_prime}) : Json(nullptr);
  j["positive_e_type"] = opt_json(c.positive_e_type);
  if (p.property_n()) {
    j["e"] = p.label(p.e());
    j["one_dagger"] = p.label(p.witness().one_dagger);
  }
  const auto& f = p.structure().flags();
  j["flags"] = {{"mul_associative", f.mul_associative},
                {"left_distributive", f.left_distributive},
                {"right_distributive", f.right_distributive},
                {"commutative_mul", f.commutative_mul}};
  return j;
}

inline Json congruence_class_json(const CongruenceClassification& c) {
  Json j;
  j["radical"] = c.radical;
  j["strongly_prime"] = c.strongly_prime;
  j["prime"] = opt_json(c.prime);
  j["semiprime"] = opt_json(c.semiprime);
  j["irreducible"] = opt_json(c.irreducible);
  j["t_cancellative"] = c.t_cancellative;
  j["proper"] = c.proper;
  j["weakly_proper"] = c.weakly_proper;
  j["contains_1e"] = opt_json(c.contains_1e);
  j["e_type"] = opt_json(c.e_type);
  return j;
}

inline Json lattice_json(const CongruenceLattice& lat) {
  const Pair& p = lat.pair();
  Json list = Json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    Json c;
    c["index"] = i;
    c["blocks"] = blocks_json(p, lat.at(i));
    c["covers"] = lat.covers(i);
    list.push_back(std::move(c));
  }
  return {{"pair", p.name()}, {"count", lat.size()}, {"congruences", std::move(list)}};
}

inline Json verdict_json(const IsomorphismVerdict& v) {
  return {{"applicable", v.applicable}, {"canonical_map", v.canonical_map}, {"abstract", v.abstract},
          {"left_size", v.left_size},   {"right_size", v.right_size},       {"note", v.note}};
}

inline Json spectrum_json(const CongruenceLattice& lat, const SpectrumReport& r) {
  const Pair& p = lat.pair();
  Json list = Json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    Json c = congruence_class_json(r.classes[i]);
    c["index"] = i;
    c["blocks"] = blocks_json(p, lat.at(i));
    list.push_back(std::move(c));
  }
  Json j;
  j["pair"] = p.name();
  j["lattice_size"] = r.lattice_size;
  j["congruences"] = std::move(list);
  j["hspec"] = r.hspec;
  j["spec_e"] = r.spec_e;
  j["strongly_prime"] = r.strongly_prime;
  j["radical"] = r.radical;
  j["maximal_proper"] = r.maximal_proper;
  j["maximal_weakly_proper"] = r.maximal_weakly_proper;
  j["radical_contains_1e"] = opt_json(r.radical_contains_1e);
  j["ae_spectrum"] = verdict_json(r.ae_spectrum);
  j["diag_e_spectrum"] = verdict_json(r.diag_e_spectrum);
  if (p.property_n()) {
    const SqrtResult s = sqrt_phi(p, diagonal(p));
    const auto d = s.depth[couple_index(p.size(), {p.one(), p.e()})];
    j["sqrt_diag"] = {{"size", std::count(s.members.begin(), s.members.end(), true)},
                      {"iterations", s.iterations},
                      {"is_congruence", s.is_congruence()},
                      {"one_e_depth", opt_json(d)}};
  }
  return j;
}

/// Witness labels refer to the carrier of the pair the witness lives on;
/// congruences of A/Diag_e or Ae are printed by block index.
inline Json witness_json(const Pair& p, const Witness& w) {
  Json j;
  j["part"] = w.part;
  j["elements"] = labels_json(p, w.elements);
  Json cs = Json::array();
  for (const auto& c : w.congruences) {
    if (c.size() == p.size()) {
      cs.push_back(blocks_json(p, c));
    } else {
      cs.push_back(c.blocks());
    }
  }
  j["congruences"] = std::move(cs);
  j["numbers"] = w.numbers;
  return j;
}

inline Json check_report_json(const Pair& p, const CheckReport& r, bool timings = false) {
  Json j;
  j["check_id"] = r.check_id;
  j["hypotheses_held"] = r.hypotheses_held;
  j["passed"] = opt_json(r.passed);
  j["counterexample"] = r.counterexample ? witness_json(p, *r.counterexample) : Json(nullptr);
  j["note"] = r.note;
  if (timings) j["runtime_ms"] = r.runtime_ms;
  return j;
}

inline Json check_reports_json(const Pair& p, const std::vector<CheckReport>& rs, bool timings = false) {
  Json list = Json::array();
  std::size_t applicable = 0, passed = 0, failed = 0;
  for (const auto& r : rs) {
    list.push_back(check_report_json(p, r, timings));
    if (r.hypotheses_held) {
      ++applicable;
      (*r.passed ? passed : failed)++;
    }
  }
  return {{"pair", p.name()},
          {"reports", std::move(list)},
          {"summary", {{"total", rs.size()}, {"applicable", applicable}, {"passed", passed}, {"failed", failed}}}};
}

inline Json error_json(const Error& e) {
  Json j;
  j["error"] = std::string(to_string(e.code()));
  j["message"] = e.what();
  j["witness"] = e.witness();
  if (const auto* cap = dynamic_cast<const CapExceededError*>(&e)) j["partial_count"] = cap->partial_count();
  return j;
}

}  // namespace pairspec
