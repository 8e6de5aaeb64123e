#include "demflag/flag_engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "demflag/errors.hpp"

namespace demflag {

namespace {

int pos(int y) { return y > 0 ? y : 0; }

QPoly delta(int a, int b) { return a == b ? QPoly(1) : QPoly(); }

std::string parts_str(std::span<const int> parts) {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

// Length first, then reverse lexicographic on the parts after xi0
// (compare the last part first).
bool precedes(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = a.size(); i-- > 1;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

enum Tag : int { kStep = 1, kChain = 2, kPartition = 3 };

}  // namespace

Partition Partition::from_parts(std::span<const int> parts) {
  if (parts.size() < 2) throw InvalidShape("partition " + parts_str(parts) + " needs xi0 and at least one part");
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw InvalidShape("partition " + parts_str(parts) + " has a non-positive part");
    if (i > 0 && parts[i] > parts[i - 1]) throw InvalidShape("partition " + parts_str(parts) + " is not non-increasing");
  }
  Partition xi;
  xi.xi0 = parts[0];
  xi.len = static_cast<int>(parts.size()) - 1;
  xi.tail = parts.back();
  if (xi.len == 1) {
    xi.xi = xi.tail;
    xi.p = 0;
    return xi;
  }
  xi.xi = parts[parts.size() - 2];
  for (int j = 1; j < xi.len; ++j) {
    int v = parts[static_cast<size_t>(j)];
    if (v == xi.xi) {
      ++xi.p;
    } else if (v != xi.xi + 1) {
      throw InvalidShape("partition " + parts_str(parts) + " has middle parts outside {xi, xi+1}");
    }
  }
  return xi;
}

std::vector<int> Partition::parts() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(len) + 1);
  out.push_back(xi0);
  if (len == 1) {
    out.push_back(tail);
    return out;
  }
  out.insert(out.end(), static_cast<size_t>(len - 1 - p), xi + 1);
  out.insert(out.end(), static_cast<size_t>(p), xi);
  out.push_back(tail);
  return out;
}

int Partition::weight() const {
  if (len == 1) return tail;
  return (len - 1 - p) * (xi + 1) + p * xi + tail;
}

int Partition::part(int j) const {
  if (j == 0) return xi0;
  if (j == len) return tail;
  return j <= len - 1 - p ? xi + 1 : xi;
}

Partition Partition::canonical() const {
  Partition c = *this;
  if (len > 1) c.xi0 = part(1);
  return c;
}

bool Partition::valid() const {
  if (len < 1 || tail <= 0 || xi0 < part(1)) return false;
  if (len == 1) return p == 0 && xi == tail;
  return p >= 1 && p <= len - 1 && tail <= xi && xi >= 1;
}

std::vector<int> demazure_parts(int m, int n) {
  if (m < 1) throw InvalidLevel("demazure_parts: level must be >= 1");
  if (n < 0) throw std::invalid_argument("demazure_parts: weight must be >= 0");
  if (n == 0) return {m};
  int n0 = ((n - 1) % m) + 1;
  int n1 = (n - n0) / m;
  std::vector<int> parts(static_cast<size_t>(n1) + 1, m);
  parts.push_back(n0);
  return parts;
}

QPoly mult_base(int xi0, int xi1, int m, int s) {
  if (xi1 < 0 || xi1 > xi0) throw InvalidShape("mult_base: need 0 <= xi1 <= xi0");
  if (m < xi0) throw InvalidLevel("mult_base: flag level " + std::to_string(m) + " below xi0 = " + std::to_string(xi0));
  int d = xi1 - s;
  if (s == xi1 || (pos(2 * xi1 - m) < d && d <= pos(2 * xi1 - xi0))) return QPoly::q_power(d);
  return QPoly();
}

QPoly closed_step_table(int m, int s, int n) {
  if (m < 1) throw InvalidLevel("closed_step_table: level must be >= 1");
  if (n < 0 || n > m) throw std::invalid_argument("closed_step_table: need 0 <= n <= m");
  if (s < n) return QPoly();
  int j = s / m;
  int k = s % m;
  if (n == k) return QPoly::q_power(j * (m * j + 2 * k));
  if (n == m - k) return QPoly::q_power((j + 1) * (m * j + 2 * k - m));
  return QPoly();
}

int k_of(int tail, int prev, int p) {
  int d = 2 * tail - prev;
  if (d >= 3 && p == 1) return 2;
  if (d == 2 || (d >= 3 && p > 1)) return 1;
  if (d == 1) return 0;
  return -1;
}

StripResult strip_head(std::span<const int> parts, int s) {
  if (parts.size() < 3) throw InvalidShape("strip_head: needs at least two parts after xi0");
  Partition::from_parts(parts);
  int weight = std::accumulate(parts.begin() + 1, parts.end(), 0);
  StripResult r;
  r.shift = 2 * (weight - s);
  r.reduced_parts.assign(parts.begin() + 1, parts.end());
  r.level = parts[0];
  r.target = s - parts[0];
  return r;
}

const QPoly& MultiplicityTable::at(int s, int n) const {
  static const QPoly zero;
  auto it = entries.find({s, n});
  return it == entries.end() ? zero : it->second;
}

std::size_t FlagEngine::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t h = static_cast<std::size_t>(k.tag);
  for (int v : {k.a, k.b, k.c, k.d, k.e, k.f, k.g}) h = h * 1000003U ^ static_cast<std::size_t>(static_cast<unsigned>(v));
  return h;
}

FlagEngine::FlagEngine() : FlagEngine(Options{}) {}

FlagEngine::FlagEngine(Options opts) : opts_(opts) {}

FlagEngine& FlagEngine::shared() {
  static FlagEngine engine = [] {
    Options o;
    if (const char* env = std::getenv("DEMFLAG_MEMO_LIMIT"); env != nullptr && *env != '\0')
      o.memo_limit = static_cast<std::size_t>(std::stoull(env));
    return FlagEngine(o);
  }();
  return engine;
}

std::optional<QPoly> FlagEngine::lookup(const Key& k) {
  if (!opts_.memoize) return std::nullopt;
  std::lock_guard lock(mu_);
  auto it = memo_.find(k);
  if (it == memo_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void FlagEngine::store(const Key& k, const QPoly& v) {
  if (!opts_.memoize) return;
  std::lock_guard lock(mu_);
  if (opts_.memo_limit && memo_.size() >= *opts_.memo_limit && memo_.find(k) == memo_.end())
    throw MemoLimitExceeded("memo table reached DEMFLAG_MEMO_LIMIT = " + std::to_string(*opts_.memo_limit));
  memo_.emplace(k, v);
}

EngineStats FlagEngine::stats() const {
  std::lock_guard lock(mu_);
  return {hits_.load(), misses_.load(), memo_.size()};
}

void FlagEngine::clear() {
  std::lock_guard lock(mu_);
  memo_.clear();
  hits_ = 0;
  misses_ = 0;
}

QPoly FlagEngine::mult_step(int m, int s, int n) {
  if (m < 1) throw InvalidLevel("mult_step: level must be >= 1");
  if (n < 0 || s < n) return QPoly();
  if (opts_.dispatch == StepDispatch::table_first && n <= m) return closed_step_table(m, s, n);
  Key key{kStep, m, s, n, 0, 0, 0, static_cast<int>(opts_.dispatch)};
  if (auto hit = lookup(key)) return *hit;
  QPoly v = compute_step(m, s, n);
  store(key, v);
  return v;
}

QPoly FlagEngine::compute_step(int m, int s, int n) {
  // Here n <= s. With s <= m the module D(m, s) is itself an l = 1 module.
  if (s <= m) return mult_base(m, s, m + 1, n);
  int s0 = ((s - 1) % m) + 1;
  int s1 = (s - s0) / m;
  if (2 * s0 <= m)
    return mult_step(m, s - m - 1, n - m - 1).shifted(2 * (s - n)) + mult_step(m, s - 2 * s0, n).shifted(4 * s1 * s0);
  // [V(m+1, m^a, t) : D(m+1, N)]: a level-m Demazure module unless the parts
  // after the head reduce to at most one, when it is a level-(m+1) one.
  auto reduced = [&](int a, int t, int big_n) {
    int parts = a + (t > 0 ? 1 : 0);
    if (parts <= 1) return delta(big_n, m * a + t);
    return mult_step(m, m * a + t, big_n);
  };
  QPoly r = reduced(s1 - 1, s0 - 1, n - m - 1).shifted(2 * (s - n));
  r += reduced(s1, m - s0, n).shifted((2 * s1 + 1) * (2 * s0 - m));
  int k = k_of(s0, m, s1);
  for (int j = 1; j <= k; ++j)
    r += reduced(s1 - 1, m - s0 + (j == 2 ? 1 : 0), n - m - 1).shifted(2 * s1 * (2 * s0 - j) + j + m - 2 * n);
  if (s0 == m && (s1 == 1 || s1 == 2))
    r += delta(n, s1 == 1 ? 0 : m + 1).shifted(4 * m * s1 - (s1 - 1) * (2 * s1 + 1));
  return r;
}

QPoly FlagEngine::mult(int m_from, int s, int m_to, int n) {
  if (m_from < 1) throw InvalidLevel("mult: level must be >= 1");
  if (m_to < m_from)
    throw InvalidLevel("mult: target level " + std::to_string(m_to) + " below source level " + std::to_string(m_from));
  if (n < 0 || s < n) return QPoly();
  if (m_to == m_from) return delta(n, s);
  if (m_to == m_from + 1) return mult_step(m_from, s, n);
  Key key{kChain, m_from, s, m_to, n, 0, 0, static_cast<int>(opts_.dispatch)};
  if (auto hit = lookup(key)) return *hit;
  QPoly r;
  for (int p = n; p <= s; ++p) {
    QPoly upper = mult(m_from, s, m_to - 1, p);
    if (upper.is_zero()) continue;
    QPoly lower = mult_step(m_to - 1, p, n);
    if (lower.is_zero()) continue;
    r += upper * lower;
  }
  store(key, r);
  return r;
}

std::pair<int, QPoly> FlagEngine::weighted_mult(int m_from, int s, int m_to, int n) {
  return mult(m_from, s, m_to, n).weight_split();
}

MultiplicityTable FlagEngine::mult_table(int m_from, int m_to, int s_max) {
  if (s_max < 0) throw std::invalid_argument("mult_table: s_max must be >= 0");
  MultiplicityTable t{m_from, m_to, s_max, {}};
  for (int s = 0; s <= s_max; ++s)
    for (int n = 0; n <= s; ++n) t.entries.emplace(std::make_pair(s, n), mult(m_from, s, m_to, n));
  return t;
}

QPoly FlagEngine::mult_parts(std::vector<int> parts, int m, int n) {
  if (parts.empty()) throw InvalidShape("mult_parts: empty tuple");
  while (parts.size() > 1 && parts.back() == 0) parts.pop_back();
  if (parts.size() == 1) {
    if (m < parts[0]) throw InvalidLevel("mult_parts: flag level below xi0");
    return delta(n, 0);
  }
  return mult_partition(Partition::from_parts(parts), m, n);
}

QPoly FlagEngine::mult_partition(const Partition& xi, int m, int n) {
  if (!xi.valid()) throw InvalidShape("mult_partition: partition violates the shape invariants");
  if (m < xi.xi0)
    throw InvalidLevel("mult_partition: flag level " + std::to_string(m) + " below xi0 = " + std::to_string(xi.xi0));
  if (n < 0) return QPoly();
  Partition c = xi.canonical();
  Key key{kPartition, c.xi0, c.xi, c.len, c.p, c.tail, m, n};
  if (auto hit = lookup(key)) return *hit;
  QPoly v = compute_partition(c, m, n);
  store(key, v);
  return v;
}

QPoly FlagEngine::recurse_image(const Partition& from, std::vector<int> parts, int m, int n) {
  while (parts.size() > 1 && parts.back() == 0) parts.pop_back();
  if (!precedes(parts, from.parts()))
    throw InternalError("partition recursion did not descend: " + parts_str(parts) + " from " +
                        parts_str(from.parts()));
  return mult_parts(std::move(parts), m, n);
}

QPoly FlagEngine::compute_partition(const Partition& xi, int m, int n) {
  if (n > xi.weight()) return QPoly();
  if (xi.len == 1) return mult_base(xi.xi0, xi.tail, m, n);
  // Every middle part equals m: V(xi) is D(m, |xi|) itself.
  if (xi.xi == m) return delta(n, xi.weight());

  const int l = xi.len;
  const int p = xi.p;
  const int x = xi.xi;
  const int t = xi.tail;
  auto image = [&](int n_hi, int n_mid, int last) {
    std::vector<int> v(static_cast<size_t>(n_hi), x + 1);
    v.insert(v.end(), static_cast<size_t>(n_mid), x);
    if (last >= 0) v.push_back(last);
    return v;
  };
  // xi(j) = ((x+1)^{l-p+1-[j=0]-[j=-1]}, x^{p-1+[j=0]}, x - t + [j=2]), xi0 included.
  auto xi_j = [&](int j) { return image(l - p + 1 - (j == 0) - (j == -1), p - 1 + (j == 0), x - t + (j == 2)); };

  QPoly r = recurse_image(xi, image(l - p + 1, p - 1, t - 1), m, n);
  if (2 * t > x) {
    int k = k_of(t, x, p);
    for (int j = 0; j <= k; ++j) r += recurse_image(xi, xi_j(j), m, n).shifted((2 * l - 1) * (2 * t - x - j));
    if (t == x && (p == 1 || p == 2))
      r += recurse_image(xi, image(l - 1, 0, -1), m, n).shifted(4 * t * (l - 1) - (p - 1) * (2 * l - 1));
  } else {
    r += recurse_image(xi, xi_j(-1), m, n).shifted(4 * t * (l - 1));
    if (2 * t != x && p == 1) r += recurse_image(xi, image(l - 1, 0, t), m, n).shifted((2 * l - 3) * x + 2 * t);
    if (t == 1 && p == 2) r += recurse_image(xi, image(l - 1, 0, -1), m, n).shifted((2 * l - 3) * x);
  }
  return r;
}

}  // namespace demflag
