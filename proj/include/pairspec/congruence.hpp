#pragma once

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pairspec/classify.hpp"
#include "pairspec/twist.hpp"

namespace pairspec {

/// An equivalence relation stored as a canonical partition: block ids are
/// assigned in order of each block's least member.
class Congruence {
 public:
  Congruence() = default;

  static Congruence from_labels(std::span<const Elem> labels) {
    Congruence c;
    c.block_of_.resize(labels.size());
    std::unordered_map<Elem, Elem> remap;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto [it, inserted] = remap.emplace(labels[i], static_cast<Elem>(remap.size()));
      c.block_of_[i] = it->second;
    }
    c.blocks_ = remap.size();
    return c;
  }

  static Congruence identity(std::size_t n) {
    std::vector<Elem> labels(n);
    std::iota(labels.begin(), labels.end(), Elem{0});
    return from_labels(labels);
  }

  static Congruence full(std::size_t n) { return from_labels(std::vector<Elem>(n, 0)); }

  /// Blocks must cover 0..n-1 exactly once.
  static Congruence from_blocks(std::size_t n, const std::vector<std::vector<Elem>>& blocks) {
    std::vector<Elem> labels(n, static_cast<Elem>(-1));
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (Elem x : blocks[b]) {
        if (x >= n || labels[x] != static_cast<Elem>(-1)) {
          throw Error(ErrorCode::NotACongruence, "blocks do not partition the carrier", {x});
        }
        labels[x] = static_cast<Elem>(b);
      }
    }
    for (Elem x = 0; x < n; ++x) {
      if (labels[x] == static_cast<Elem>(-1)) {
        throw Error(ErrorCode::NotACongruence, "element missing from blocks", {x});
      }
    }
    return from_labels(labels);
  }

  std::size_t size() const { return block_of_.size(); }
  std::size_t block_count() const { return blocks_; }
  Elem block_of(Elem x) const { return block_of_[x]; }
  const std::vector<Elem>& labels() const { return block_of_; }
  bool related(Elem x, Elem y) const { return block_of_[x] == block_of_[y]; }
  bool contains(Couple b) const { return related(b.first, b.second); }

  std::vector<std::vector<Elem>> blocks() const {
    std::vector<std::vector<Elem>> out(blocks_);
    for (Elem x = 0; x < block_of_.size(); ++x) out[block_of_[x]].push_back(x);
    return out;
  }

  /// Least member of each block, indexed by block id.
  std::vector<Elem> representatives() const {
    std::vector<Elem> reps(blocks_, static_cast<Elem>(-1));
    for (Elem x = 0; x < block_of_.size(); ++x) {
      if (reps[block_of_[x]] == static_cast<Elem>(-1)) reps[block_of_[x]] = x;
    }
    return reps;
  }

  /// This relation is contained in `other`.
  bool refines(const Congruence& other) const {
    std::vector<Elem> image(blocks_, static_cast<Elem>(-1));
    for (Elem x = 0; x < block_of_.size(); ++x) {
      Elem& slot = image[block_of_[x]];
      if (slot == static_cast<Elem>(-1)) {
        slot = other.block_of_[x];
      } else if (slot != other.block_of_[x]) {
        return false;
      }
    }
    return true;
  }

  /// Number of related ordered pairs.
  std::size_t relation_size() const {
    std::vector<std::size_t> counts(blocks_, 0);
    for (Elem b : block_of_) ++counts[b];
    std::size_t total = 0;
    for (std::size_t c : counts) total += c * c;
    return total;
  }

  friend bool operator==(const Congruence& a, const Congruence& b) {
    return a.block_of_ == b.block_of_;
  }

 private:
  std::vector<Elem> block_of_;
  std::size_t blocks_ = 0;
};

struct CongruenceHash {
  std::size_t operator()(const Congruence& c) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Elem x : c.labels()) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

/// Finest first, then lexicographic on block labels.
inline bool canonical_less(const Congruence& a, const Congruence& b) {
  if (a.block_count() != b.block_count()) return a.block_count() > b.block_count();
  return a.labels() < b.labels();
}

inline Congruence meet(const Congruence& a, const Congruence& b) {
  std::vector<Elem> labels(a.size());
  const auto width = static_cast<Elem>(b.block_count());
  for (Elem x = 0; x < a.size(); ++x) labels[x] = a.block_of(x) * width + b.block_of(x);
  return Congruence::from_labels(labels);
}

/// Where closure under an operation breaks: (x, y) related but the
/// translates by c are not.
struct CongruenceViolation {
  char op = '+';  // '+', 'l' (c*x), 'r' (x*c)
  Elem x = 0;
  Elem y = 0;
  Elem c = 0;
};

inline std::optional<CongruenceViolation> congruence_violation(const Pair& p,
                                                              const Congruence& phi) {
  const auto n = static_cast<Elem>(p.size());
  if (phi.size() != n) throw Error(ErrorCode::NotACongruence, "partition sized for another carrier");
  const auto reps = phi.representatives();
  for (Elem x = 0; x < n; ++x) {
    const Elem y = reps[phi.block_of(x)];
    if (x == y) continue;
    for (Elem c = 0; c < n; ++c) {
      if (!phi.related(p.add(x, c), p.add(y, c))) return CongruenceViolation{'+', x, y, c};
      if (!phi.related(p.mul(c, x), p.mul(c, y))) return CongruenceViolation{'l', x, y, c};
      if (!phi.related(p.mul(x, c), p.mul(y, c))) return CongruenceViolation{'r', x, y, c};
    }
  }
  return std::nullopt;
}

inline bool is_congruence(const Pair& p, const Congruence& phi) {
  return !congruence_violation(p, phi).has_value();
}

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Elem{0}); }

  Elem find(Elem x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(Elem a, Elem b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  std::vector<Elem> labels() {
    std::vector<Elem> out(parent_.size());
    for (Elem x = 0; x < parent_.size(); ++x) out[x] = find(x);
    return out;
  }

 private:
  std::vector<Elem> parent_;
};

}  // namespace detail

/// Least congruence containing `seed` (assumed to be a congruence) and the
/// generator pairs. Each merged pair pushes its additive and two-sided
/// multiplicative translates; the block count strictly decreases per merge.
inline Congruence generated_congruence(const Pair& p, std::span<const Couple> generators,
                                       const Congruence* seed = nullptr) {
  const auto n = static_cast<Elem>(p.size());
  detail::UnionFind uf(n);
  if (seed != nullptr) {
    const auto reps = seed->representatives();
    for (Elem x = 0; x < n; ++x) uf.unite(x, reps[seed->block_of(x)]);
  }
  std::deque<Couple> work(generators.begin(), generators.end());
  while (!work.empty()) {
    const Couple g = work.front();
    work.pop_front();
    if (!uf.unite(g.first, g.second)) continue;
    for (Elem c = 0; c < n; ++c) {
      work.push_back({p.add(g.first, c), p.add(g.second, c)});
      work.push_back({p.mul(c, g.first), p.mul(c, g.second)});
      work.push_back({p.mul(g.first, c), p.mul(g.second, c)});
    }
  }
  return Congruence::from_labels(uf.labels());
}

inline Congruence generated_congruence(const Pair& p, std::initializer_list<Couple> generators) {
  return generated_congruence(p, std::span<const Couple>(generators.begin(), generators.size()));
}

inline Congruence join(const Pair& p, const Congruence& a, const Congruence& b) {
  std::vector<Couple> gens;
  const auto reps = b.representatives();
  for (Elem x = 0; x < b.size(); ++x) {
    const Elem r = reps[b.block_of(x)];
    if (r != x) gens.push_back({r, x});
  }
  return generated_congruence(p, gens, &a);
}

inline Congruence diagonal(const Pair& p) { return Congruence::identity(p.size()); }

/// Least (1,e)-congruence.
inline Congruence diag_e(const Pair& p) {
  return generated_congruence(p, {Couple{p.one(), p.e()}});
}

inline std::size_t default_congruence_cap() {
  if (const char* env = std::getenv("PAIRSPEC_MAX_CONGRUENCES")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 100000;
}

/// All congruences of a pair, in canonical order, with lattice operations.
class CongruenceLattice {
 public:
  CongruenceLattice(Pair pair, std::vector<Congruence> members)
      : pair_(std::move(pair)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end(), canonical_less);
    for (std::size_t i = 0; i < members_.size(); ++i) index_.emplace(members_[i], i);
  }

  const Pair& pair() const { return pair_; }
  std::size_t size() const { return members_.size(); }
  const Congruence& at(std::size_t i) const { return members_[i]; }
  const std::vector<Congruence>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  std::optional<std::size_t> index_of(const Congruence& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t bottom() const { return 0; }
  std::size_t top() const { return members_.size() - 1; }

  bool leq(std::size_t i, std::size_t j) const { return members_[i].refines(members_[j]); }

  std::size_t meet_index(std::size_t i, std::size_t j) const {
    return require(meet(members_[i], members_[j]));
  }

  std::size_t join_index(std::size_t i, std::size_t j) const {
    return require(join(pair_, members_[i], members_[j]));
  }

  /// Upper covers of member i. Every cover is the join of i with a
  /// principal congruence, so only those candidates are examined.
  const std::vector<std::size_t>& covers(std::size_t i) const {
    if (covers_.empty()) covers_.resize(members_.size());
    auto& slot = covers_[i];
    if (slot) return *slot;
    const Congruence& phi = members_[i];
    const auto n = static_cast<Elem>(pair_.size());
    std::vector<std::size_t> cands;
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = x + 1; y < n; ++y) {
        if (phi.related(x, y)) continue;
        cands.push_back(require(generated_congruence(pair_, std::array<Couple, 1>{Couple{x, y}}, &phi)));
      }
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<std::size_t> minimal;
    for (std::size_t a : cands) {
      bool is_min = true;
      for (std::size_t b : cands) {
        if (a != b && leq(b, a)) {
          is_min = false;
          break;
        }
      }
      if (is_min) minimal.push_back(a);
    }
    slot = std::move(minimal);
    return *slot;
  }

 private:
  std::size_t require(const Congruence& c) const {
    auto idx = index_of(c);
    if (!idx) throw Error(ErrorCode::NotACongruence, "result is not in the lattice");
    return *idx;
  }

  Pair pair_;
  std::vector<Congruence> members_;
  std::unordered_map<Congruence, std::size_t, CongruenceHash> index_;
  mutable std::vector<std::optional<std::vector<std::size_t>>> covers_;
};

/// Every congruence is a join of principal ones, so closing the diagonal
/// under joins with principals reaches the whole lattice.
inline CongruenceLattice enumerate_congruences(const Pair& p,
                                               std::size_t cap = default_congruence_cap()) {
  const auto n = static_cast<Elem>(p.size());
  std::vector<Congruence> principals;
  {
    std::unordered_set<Congruence, CongruenceHash> seen;
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = x + 1; y < n; ++y) {
        Congruence c = generated_congruence(p, {Couple{x, y}});
        if (seen.insert(c).second) principals.push_back(std::move(c));
      }
    }
    std::sort(principals.begin(), principals.end(), canonical_less);
  }
  std::unordered_set<Congruence, CongruenceHash> found;
  std::vector<Congruence> order;
  std::deque<std::size_t> queue;
  auto add = [&](Congruence c) {
    if (found.contains(c)) return;
    if (found.size() >= cap) {
      throw CapExceededError("congruence enumeration exceeded cap " + std::to_string(cap),
                             found.size());
    }
    found.insert(c);
    order.push_back(std::move(c));
    queue.push_back(order.size() - 1);
  };
  add(Congruence::identity(n));
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    const Congruence phi = order[i];
    for (const Congruence& prin : principals) {
      if (prin.refines(phi)) continue;
      add(join(p, phi, prin));
    }
  }
  return CongruenceLattice(p, std::move(order));
}

/// The relation Cong_b: pairs (x, y) with (x, y) + i in Diag for some i in
/// the additive closure of {0} and the products (c (s, s)) c', s = b1 + b2.
struct CongBResult {
  std::vector<bool> relation;  // n*n, row-major
  bool hypothesis = false;     // semiring, or b1 + b2 in the distributive center
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  bool compatible = false;     // closed under + and two-sided multiplication
  bool contains_b = false;
  bool equals_generated = false;

  bool is_congruence() const { return reflexive && symmetric && transitive && compatible; }
};

inline CongBResult cong_b(const Pair& p, Couple b) {
  const auto n = static_cast<Elem>(p.size());
  const std::size_t N = static_cast<std::size_t>(n) * n;
  const Elem s = p.add(b.first, b.second);
  CongBResult r;
  r.hypothesis =
      p.structure().flags().semiring() || distributive_center(p.structure()).contains(s);

  const Couple ss{s, s};
  std::vector<bool> left_seen(N, false);
  std::vector<Couple> left;
  for (std::size_t ci = 0; ci < N; ++ci) {
    const Couple l = twist(p, couple_at(n, ci), ss);
    if (!left_seen[couple_index(n, l)]) {
      left_seen[couple_index(n, l)] = true;
      left.push_back(l);
    }
  }
  std::vector<bool> in_ideal(N, false);
  std::vector<Couple> generators;
  for (const Couple& l : left) {
    for (std::size_t ci = 0; ci < N; ++ci) {
      const Couple g = twist(p, l, couple_at(n, ci));
      if (!in_ideal[couple_index(n, g)]) {
        in_ideal[couple_index(n, g)] = true;
        generators.push_back(g);
      }
    }
  }
  // additive closure, including the empty sum
  std::vector<Couple> sums;
  std::vector<bool> in_sums(N, false);
  auto push = [&](Couple c) {
    if (!in_sums[couple_index(n, c)]) {
      in_sums[couple_index(n, c)] = true;
      sums.push_back(c);
    }
  };
  push(Couple{p.zero(), p.zero()});
  for (std::size_t i = 0; i < sums.size(); ++i) {
    for (const Couple& g : generators) push(couple_add(p, sums[i], g));
  }

  r.relation.assign(N, false);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (const Couple& i : sums) {
        const Couple t = couple_add(p, Couple{x, y}, i);
        if (t.first == t.second) {
          r.relation[x * n + y] = true;
          break;
        }
      }
    }
  }
  auto rel = [&](Elem x, Elem y) { return r.relation[static_cast<std::size_t>(x) * n + y]; };
  r.reflexive = r.symmetric = r.transitive = r.compatible = true;
  for (Elem x = 0; x < n; ++x) {
    if (!rel(x, x)) r.reflexive = false;
    for (Elem y = 0; y < n; ++y) {
      if (!rel(x, y)) continue;
      if (!rel(y, x)) r.symmetric = false;
      for (Elem z = 0; z < n; ++z) {
        if (rel(y, z) && !rel(x, z)) r.transitive = false;
        if (!rel(p.add(x, z), p.add(y, z)) || !rel(p.mul(z, x), p.mul(z, y)) ||
            !rel(p.mul(x, z), p.mul(y, z))) {
          r.compatible = false;
        }
      }
    }
  }
  r.contains_b = rel(b.first, b.second);
  if (r.is_congruence()) {
    const Congruence gen = generated_congruence(p, {b});
    bool same = true;
    for (Elem x = 0; x < n && same; ++x) {
      for (Elem y = 0; y < n && same; ++y) same = rel(x, y) == gen.related(x, y);
    }
    r.equals_generated = same;
  }
  return r;
}

}  // namespace pairspec
