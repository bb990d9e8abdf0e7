#pragma once

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pairspec/io.hpp"

namespace pairspec {

using Params = std::map<std::string, std::string>;

/// The output of a builder: a pair, or a hyperstructure (residue, krasner, ...).
struct Built {
  std::string name;
  std::optional<Pair> pair;
  std::optional<HyperStructure> hyper;
};

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::BadParameter, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// "k=v" -> (k, v)
inline std::pair<std::string, std::string> parse_param(const std::string& kv) {
  const auto eq = kv.find('=');
  if (eq == std::string::npos || eq == 0) throw Error(ErrorCode::BadParameter, "expected key=value, got '" + kv + "'");
  return {kv.substr(0, eq), kv.substr(eq + 1)};
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

class ParamReader {
 public:
  explicit ParamReader(const Params& p) : p_(p) {}

  std::string str(const std::string& key, const std::string& def) {
    used_.insert(key);
    auto it = p_.find(key);
    return it == p_.end() ? def : it->second;
  }
  std::optional<std::string> opt(const std::string& key) {
    used_.insert(key);
    auto it = p_.find(key);
    if (it == p_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t num(const std::string& key, std::size_t def) {
    const auto v = opt(key);
    if (!v) return def;
    try {
      std::size_t pos = 0;
      const long long x = std::stoll(*v, &pos);
      if (pos != v->size() || x < 0) throw std::invalid_argument(*v);
      return static_cast<std::size_t>(x);
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadParameter, key + " must be a non-negative integer, got '" + *v + "'");
    }
  }
  void finish(const std::string& builder) const {
    for (const auto& [k, v] : p_) {
      if (!used_.count(k)) throw Error(ErrorCode::BadParameter, builder + " does not take parameter '" + k + "'");
    }
  }

 private:
  const Params& p_;
  std::set<std::string> used_;
};

inline FiniteMonoid monoid_param(ParamReader& r, const std::string& def_kind, std::size_t def_n) {
  const std::string kind = r.str("monoid", def_kind);
  const std::size_t n = r.num("n", def_n);
  if (kind == "cyclic") return cyclic_group(n);
  if (kind == "saturating") return saturating_monoid(n);
  throw Error(ErrorCode::BadParameter, "monoid must be cyclic or saturating, got '" + kind + "'");
}

inline std::vector<Elem> labels_to_elems(const std::vector<std::string>& names, const std::string& csv,
                                         const std::string& what) {
  std::vector<Elem> out;
  for (const auto& l : split(csv, ',')) {
    auto it = std::find(names.begin(), names.end(), l);
    if (it == names.end()) throw Error(ErrorCode::UnknownLabel, what + ": no element labelled '" + l + "'");
    out.push_back(static_cast<Elem>(it - names.begin()));
  }
  return out;
}

}  // namespace detail

inline Built build(const std::string& builder, const Params& params);

namespace detail {

inline Pair pair_param(ParamReader& r, const std::string& def) {
  if (auto f = r.opt("base_file")) return load_pair(read_text_file(*f));
  const std::string b = r.str("base", def);
  Built out = build(b, {});
  if (!out.pair) throw Error(ErrorCode::BadParameter, "base '" + b + "' does not build a pair");
  return *out.pair;
}

inline HyperStructure residue_from(ParamReader& r) {
  Pair base = [&] {
    if (auto f = r.opt("base_file")) return load_pair(read_text_file(*f));
    return prime_field(r.num("p", 5));
  }();
  const std::string g = r.str("g", "1,4");
  return residue_hyperstructure(base, labels_to_elems(base.structure().names(), g, "g"));
}

inline std::pair<HyperStructure, std::string> hyper_param(ParamReader& r) {
  if (auto f = r.opt("hyper_file")) {
    const HyperFile hf = parse_hyper_file(read_text_file(*f));
    return {to_hyperstructure(hf), hf.name};
  }
  const std::string kind = r.str("hyper", "krasner");
  if (kind == "krasner") return {krasner(), kind};
  if (kind == "signs") return {signs(), kind};
  if (kind == "group_hyperfield") {
    const std::size_t order = r.num("order", 2);
    return {group_hyperfield(order), kind + std::to_string(order)};
  }
  if (kind == "residue") return {residue_from(r), kind};
  throw Error(ErrorCode::BadParameter, "hyper must be krasner, signs, group_hyperfield or residue, got '" + kind + "'");
}

inline std::optional<Subset> s0_param(ParamReader& r, const HyperStructure& h) {
  const auto s = r.opt("s0");
  if (!s) return std::nullopt;
  Subset out = 0;
  for (Elem x : labels_to_elems(h.names(), *s, "s0")) out |= singleton(x);
  return out;
}

}  // namespace detail

inline std::vector<std::string> builder_names() {
  return {"double",  "function_pair",    "group_hyperfield", "hyperpair", "krasner",      "minimal_bipotent",
          "power_set", "prime_field",    "residue",          "signs",     "super_boolean", "supertropical",
          "truncated"};
}

/// Builds a catalog structure by name. Unknown parameters are rejected.
inline Built build(const std::string& builder, const Params& params) {
  detail::ParamReader r(params);
  Built out;
  const std::size_t cap = r.num("cap", default_carrier_cap());
  if (builder == "super_boolean") {
    out.pair = super_boolean();
  } else if (builder == "supertropical") {
    const FiniteMonoid t = detail::monoid_param(r, "cyclic", 2);
    const std::string nu = r.str("nu", "id");
    if (nu == "id") {
      std::vector<int> rank(t.size());
      for (std::size_t i = 0; i < rank.size(); ++i) rank[i] = static_cast<int>(i);
      out.pair = standard_supertropical(t, rank);
    } else if (nu == "constant") {
      out.pair = constant_supertropical(t);
    } else {
      throw Error(ErrorCode::BadParameter, "nu must be id or constant");
    }
  } else if (builder == "truncated") {
    out.pair = truncated_supertropical(r.num("m", 3));
  } else if (builder == "minimal_bipotent") {
    const FiniteMonoid t = detail::monoid_param(r, "cyclic", 2);
    const std::string kind = r.str("kind", "first");
    if (kind != "first" && kind != "second") throw Error(ErrorCode::BadParameter, "kind must be first or second");
    out.pair = minimal_bipotent(t, kind == "first" ? BipotentKind::First : BipotentKind::Second);
  } else if (builder == "double") {
    out.pair = double_pair(detail::pair_param(r, "super_boolean")).pair;
  } else if (builder == "power_set" || builder == "hyperpair") {
    auto [h, hname] = detail::hyper_param(r);
    if (builder == "power_set") {
      out.pair = power_set_pair(h, detail::s0_param(r, h), cap, "power_set(" + hname + ")");
    } else {
      out.pair = hyperpair_generated(h, cap, "hyperpair(" + hname + ")");
    }
  } else if (builder == "function_pair") {
    const Pair base = detail::pair_param(r, "super_boolean");
    const FiniteMonoid s = detail::monoid_param(r, "saturating", 2);
    out.pair = function_pair(base, s, cap);
  } else if (builder == "prime_field") {
    out.pair = prime_field(r.num("p", 5));
  } else if (builder == "residue") {
    out.hyper = detail::residue_from(r);
    out.name = "residue";
  } else if (builder == "krasner") {
    out.hyper = krasner();
    out.name = "krasner";
  } else if (builder == "signs") {
    out.hyper = signs();
    out.name = "signs";
  } else if (builder == "group_hyperfield") {
    const std::size_t order = r.num("order", 2);
    out.hyper = group_hyperfield(order);
    out.name = "group_hyperfield" + std::to_string(order);
  } else {
    throw Error(ErrorCode::BadParameter, "unknown builder '" + builder + "'");
  }
  r.finish(builder);
  if (out.pair) out.name = out.pair->name();
  return out;
}

struct CatalogEntry {
  std::string id;
  std::string builder;
  Params params;

  Pair pair() const { return *build(builder, params).pair; }
};

/// The standard catalog of small pairs.
inline std::vector<CatalogEntry> core_catalog() {
  return {
      {"super_boolean", "super_boolean", {}},
      {"minimal_bipotent_first", "minimal_bipotent", {{"kind", "first"}}},
      {"minimal_bipotent_second", "minimal_bipotent", {{"kind", "second"}}},
      {"supertropical_c2", "supertropical", {}},
      {"truncated_3", "truncated", {{"m", "3"}}},
      {"power_set_krasner", "power_set", {{"hyper", "krasner"}}},
      {"power_set_signs", "power_set", {{"hyper", "signs"}}},
      {"power_set_residue_f5", "power_set", {{"hyper", "residue"}, {"p", "5"}, {"g", "1,4"}}},
  };
}

/// Core catalog plus further constructions used for broader checking.
inline std::vector<CatalogEntry> extended_catalog() {
  auto c = core_catalog();
  const std::vector<CatalogEntry> more = {
      {"supertropical_constant", "supertropical", {{"nu", "constant"}}},
      {"supertropical_c3", "supertropical", {{"n", "3"}}},
      {"truncated_2", "truncated", {{"m", "2"}}},
      {"power_set_group_hyperfield2", "power_set", {{"hyper", "group_hyperfield"}, {"order", "2"}}},
      {"power_set_group_hyperfield3", "power_set", {{"hyper", "group_hyperfield"}, {"order", "3"}}},
      {"power_set_group_hyperfield4", "power_set", {{"hyper", "group_hyperfield"}, {"order", "4"}}},
      {"hyperpair_signs", "hyperpair", {{"hyper", "signs"}}},
      {"hyperpair_krasner", "hyperpair", {{"hyper", "krasner"}}},
      {"function_pair_super_boolean", "function_pair", {}},
      {"double_super_boolean", "double", {}},
      {"double_minimal_bipotent_first", "double", {{"base", "minimal_bipotent"}}},
      {"prime_field_3", "prime_field", {{"p", "3"}}},
  };
  c.insert(c.end(), more.begin(), more.end());
  return c;
}

}  // namespace pairspec
