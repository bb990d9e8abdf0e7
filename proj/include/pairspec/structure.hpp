#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pairspec/error.hpp"

namespace pairspec {

/// A subset of a carrier, kept both as a sorted member list and a membership
/// mask so that iteration order is canonical and lookups are O(1).
class ElementSet {
 public:
  ElementSet() = default;

  ElementSet(std::size_t universe, std::span<const Elem> members) : mask_(universe, false) {
    for (Elem m : members) {
      if (m >= universe) {
        throw Error(ErrorCode::BadTable, "set member out of range", {m});
      }
      mask_[m] = true;
    }
    rebuild();
  }

  ElementSet(std::size_t universe, std::initializer_list<Elem> members)
      : ElementSet(universe, std::span<const Elem>(members.begin(), members.size())) {}

  static ElementSet all(std::size_t universe) {
    ElementSet s;
    s.mask_.assign(universe, true);
    s.rebuild();
    return s;
  }

  bool contains(Elem x) const { return x < mask_.size() && mask_[x]; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::size_t universe() const { return mask_.size(); }
  const std::vector<Elem>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  void insert(Elem x) {
    if (!mask_[x]) {
      mask_[x] = true;
      members_.insert(std::lower_bound(members_.begin(), members_.end(), x), x);
    }
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.mask_ == b.mask_; }

 private:
  void rebuild() {
    members_.clear();
    for (std::size_t i = 0; i < mask_.size(); ++i) {
      if (mask_[i]) members_.push_back(static_cast<Elem>(i));
    }
  }

  std::vector<bool> mask_;
  std::vector<Elem> members_;
};

/// Unvalidated operation tables as they come from a file or a builder.
struct RawStructure {
  std::vector<std::string> names;
  Elem zero = 0;
  Elem one = 0;
  std::vector<std::vector<Elem>> add;
  std::vector<std::vector<Elem>> mul;
};

struct StructureFlags {
  bool mul_associative = false;
  bool left_distributive = false;
  bool right_distributive = false;
  bool commutative_mul = false;

  bool distributive() const { return left_distributive && right_distributive; }
  bool semiring() const { return mul_associative && distributive(); }
};

/// An nd-semiring over indices 0..n-1: commutative associative addition with
/// neutral zero, and a multiplication for which zero is absorbing. The
/// remaining multiplicative laws are recorded in flags, never assumed.
class FiniteStructure {
 public:
  std::size_t size() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Elem x) const { return names_[x]; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  const StructureFlags& flags() const { return flags_; }

  Elem add(Elem a, Elem b) const { return add_[a * n_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }

  std::optional<Elem> index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// k-fold sum x + ... + x; zero for k = 0.
  Elem multiple(std::size_t k, Elem x) const {
    if (k == 0) return zero_;
    Elem acc = x;
    for (std::size_t i = 1; i < k; ++i) acc = add(acc, x);
    return acc;
  }

  RawStructure raw() const {
    RawStructure r;
    r.names = names_;
    r.zero = zero_;
    r.one = one_;
    r.add.assign(n_, std::vector<Elem>(n_));
    r.mul.assign(n_, std::vector<Elem>(n_));
    for (Elem a = 0; a < n_; ++a) {
      for (Elem b = 0; b < n_; ++b) {
        r.add[a][b] = add(a, b);
        r.mul[a][b] = mul(a, b);
      }
    }
    return r;
  }

  friend FiniteStructure validate_structure(const RawStructure& raw);

 private:
  std::size_t n_ = 0;
  std::vector<std::string> names_;
  Elem zero_ = 0;
  Elem one_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  StructureFlags flags_;
  std::unordered_map<std::string, Elem> index_;
};

namespace detail {

inline std::vector<Elem> flatten(const std::vector<std::vector<Elem>>& table, std::size_t n,
                                 const char* what) {
  if (table.size() != n) {
    throw Error(ErrorCode::BadTable, std::string(what) + " table has " +
                                         std::to_string(table.size()) + " rows, expected " +
                                         std::to_string(n));
  }
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw Error(ErrorCode::BadTable, std::string(what) + " table row " + std::to_string(i) +
                                           " has wrong length",
                  {static_cast<Elem>(i)});
    }
    for (Elem v : table[i]) {
      if (v >= n) {
        throw Error(ErrorCode::BadTable, std::string(what) + " table entry out of range",
                    {static_cast<Elem>(i), v});
      }
      flat.push_back(v);
    }
  }
  return flat;
}

}  // namespace detail

/// Exhaustively checks the nd-semiring axioms and computes the flags.
inline FiniteStructure validate_structure(const RawStructure& raw) {
  const std::size_t n = raw.names.size();
  if (n == 0) throw Error(ErrorCode::BadTable, "empty carrier");
  if (raw.zero >= n || raw.one >= n) {
    throw Error(ErrorCode::BadTable, "zero/one index out of range");
  }
  FiniteStructure s;
  s.n_ = n;
  s.names_ = raw.names;
  s.zero_ = raw.zero;
  s.one_ = raw.one;
  s.add_ = detail::flatten(raw.add, n, "add");
  s.mul_ = detail::flatten(raw.mul, n, "mul");
  for (Elem i = 0; i < n; ++i) {
    if (!s.index_.emplace(raw.names[i], i).second) {
      throw Error(ErrorCode::BadTable, "duplicate element label '" + raw.names[i] + "'", {i});
    }
  }

  const auto N = static_cast<Elem>(n);
  for (Elem a = 0; a < N; ++a) {
    for (Elem b = 0; b < N; ++b) {
      if (s.add(a, b) != s.add(b, a)) {
        throw Error(ErrorCode::NonCommutativeAdd, s.name(a) + " + " + s.name(b), {a, b});
      }
    }
  }
  for (Elem a = 0; a < N; ++a) {
    for (Elem b = 0; b < N; ++b) {
      for (Elem c = 0; c < N; ++c) {
        if (s.add(s.add(a, b), c) != s.add(a, s.add(b, c))) {
          throw Error(ErrorCode::NonAssociativeAdd,
                      "(" + s.name(a) + " + " + s.name(b) + ") + " + s.name(c), {a, b, c});
        }
      }
    }
  }
  for (Elem a = 0; a < N; ++a) {
    if (s.add(s.zero_, a) != a) {
      throw Error(ErrorCode::ZeroNotNeutral, "0 + " + s.name(a), {s.zero_, a});
    }
    if (s.mul(s.zero_, a) != s.zero_ || s.mul(a, s.zero_) != s.zero_) {
      throw Error(ErrorCode::ZeroNotAbsorbing, "0 * " + s.name(a), {s.zero_, a});
    }
  }

  StructureFlags f{true, true, true, true};
  for (Elem a = 0; a < N; ++a) {
    for (Elem b = 0; b < N; ++b) {
      if (s.mul(a, b) != s.mul(b, a)) f.commutative_mul = false;
      for (Elem c = 0; c < N; ++c) {
        if (f.mul_associative && s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c))) {
          f.mul_associative = false;
        }
        if (f.left_distributive && s.mul(a, s.add(b, c)) != s.add(s.mul(a, b), s.mul(a, c))) {
          f.left_distributive = false;
        }
        if (f.right_distributive && s.mul(s.add(b, c), a) != s.add(s.mul(b, a), s.mul(c, a))) {
          f.right_distributive = false;
        }
      }
    }
  }
  s.flags_ = f;
  return s;
}

/// Elements that commute, associate, and distribute with every element.
inline ElementSet distributive_center(const FiniteStructure& s) {
  const auto n = static_cast<Elem>(s.size());
  std::vector<Elem> center;
  for (Elem z = 0; z < n; ++z) {
    bool ok = true;
    for (Elem b = 0; b < n && ok; ++b) {
      if (s.mul(z, b) != s.mul(b, z)) ok = false;
      for (Elem c = 0; c < n && ok; ++c) {
        ok = s.mul(s.mul(z, b), c) == s.mul(z, s.mul(b, c)) &&
             s.mul(s.mul(b, z), c) == s.mul(b, s.mul(z, c)) &&
             s.mul(s.mul(b, c), z) == s.mul(b, s.mul(c, z)) &&
             s.mul(z, s.add(b, c)) == s.add(s.mul(z, b), s.mul(z, c)) &&
             s.mul(s.add(b, c), z) == s.add(s.mul(b, z), s.mul(c, z));
      }
    }
    if (ok) center.push_back(z);
  }
  return ElementSet(s.size(), center);
}

}  // namespace pairspec
