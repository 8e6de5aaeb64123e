#pragma once

#include <atomic>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "demflag/qpoly.hpp"

namespace demflag {

/// A partition of shape (xi0, (xi+1)^{len-1-p}, xi^p, tail).
///
/// `len` counts the parts after xi0. For len == 1 the repeated value is
/// unused and stored equal to `tail`, with p == 0.
struct Partition {
  int xi0 = 0;
  int xi = 0;
  int len = 0;
  int p = 0;
  int tail = 0;

  /// Validates a concrete tuple (xi0, xi1, ..., xi_len) against the template.
  /// Throws InvalidShape when it does not fit.
  static Partition from_parts(std::span<const int> parts);

  std::vector<int> parts() const;
  /// Sum of the parts after xi0.
  int weight() const;
  /// Part xi_j for 0 <= j <= len.
  int part(int j) const;
  /// For len > 1 the module does not depend on xi0; this sets xi0 := xi1.
  Partition canonical() const;
  bool valid() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Parts (m^{n1+1}, n0) with n = n1*m + n0, 0 < n0 <= m, for which V(parts) is D(m, n).
/// For n == 0 this is the single entry {m}: the trivial module.
std::vector<int> demazure_parts(int m, int n);

/// Graded multiplicity of D(m, s) in the level-xi0 module D(xi0, xi1), for m >= xi0.
QPoly mult_base(int xi0, int xi1, int m, int s);

/// Closed values of [D(m, s) : D(m+1, n)]_q for 0 <= n <= m.
QPoly closed_step_table(int m, int s, int n);

/// The integer k(xi) for a partition with last two parts (prev, tail) and p copies of prev.
int k_of(int tail, int prev, int p);

struct StripResult {
  int shift = 0;
  std::vector<int> reduced_parts;
  int level = 0;
  int target = 0;
};

/// Head-stripping identity: [V(xi) : D(xi0, s)] = q^shift [V(reduced) : D(level, target)].
StripResult strip_head(std::span<const int> parts, int s);

struct MultiplicityTable {
  int from_level = 0;
  int to_level = 0;
  int s_max = 0;
  std::map<std::pair<int, int>, QPoly> entries;  // (s, n) -> multiplicity

  const QPoly& at(int s, int n) const;
};

enum class StepDispatch {
  table_first,     // closed table whenever 0 <= n <= m
  recursion_only,  // level-step recursion down to s <= m, then the l = 1 base case
};

struct EngineStats {
  std::size_t hits = 0;
  std::size_t misses = 0;
  std::size_t entries = 0;
};

/// Memoized graded-multiplicity engine.
///
/// Two independent algorithms: the level-step recursion chained through
/// intermediate levels (`mult`), and the general partition recursion
/// (`mult_partition`). Results are identical with or without memoization and
/// across threads; the memo tables are guarded by a mutex and values are
/// computed outside the lock.
class FlagEngine {
 public:
  struct Options {
    bool memoize = true;
    std::optional<std::size_t> memo_limit;
    StepDispatch dispatch = StepDispatch::table_first;
  };

  FlagEngine();
  explicit FlagEngine(Options opts);

  /// Process-wide engine; honours DEMFLAG_MEMO_LIMIT.
  static FlagEngine& shared();

  /// [D(m, s) : D(m+1, n)]_q.
  QPoly mult_step(int m, int s, int n);
  /// [D(m_from, s) : D(m_to, n)]_q, chained through every intermediate level.
  QPoly mult(int m_from, int s, int m_to, int n);
  /// [V(xi) : D(m, n)]_q by the partition recursion.
  QPoly mult_partition(const Partition& xi, int m, int n);
  /// Like mult_partition but accepts raw tuples; trailing zeros are dropped and
  /// a tuple reduced to {xi0} is the trivial module.
  QPoly mult_parts(std::vector<int> parts, int m, int n);
  /// (r, w) with q^r w = mult(...).
  std::pair<int, QPoly> weighted_mult(int m_from, int s, int m_to, int n);
  MultiplicityTable mult_table(int m_from, int m_to, int s_max);

  EngineStats stats() const;
  void clear();
  const Options& options() const { return opts_; }

 private:
  struct Key {
    int tag;
    int a, b, c, d, e, f, g;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  std::optional<QPoly> lookup(const Key& k);
  void store(const Key& k, const QPoly& v);

  QPoly compute_step(int m, int s, int n);
  QPoly compute_partition(const Partition& xi, int m, int n);
  QPoly recurse_image(const Partition& from, std::vector<int> parts, int m, int n);

  Options opts_;
  mutable std::mutex mu_;
  std::unordered_map<Key, QPoly, KeyHash> memo_;
  std::atomic<std::size_t> hits_{0};
  std::atomic<std::size_t> misses_{0};
};

}  // namespace demflag
