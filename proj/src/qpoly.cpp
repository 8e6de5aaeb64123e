#include "demflag/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "demflag/errors.hpp"

namespace demflag {

QPoly::QPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

QPoly::QPoly(const BigInt& c) {
  if (c != 0) c_.push_back(c);
}

QPoly QPoly::monomial(const BigInt& c, int exp) {
  QPoly r;
  if (c != 0) {
    r.c_.push_back(c);
    r.offset_ = exp;
  }
  return r;
}

QPoly QPoly::from_terms(const std::vector<std::pair<int, BigInt>>& terms) {
  QPoly r;
  if (terms.empty()) return r;
  auto [lo, hi] = std::minmax_element(terms.begin(), terms.end(),
                                      [](const auto& a, const auto& b) { return a.first < b.first; });
  r.offset_ = lo->first;
  r.c_.assign(static_cast<size_t>(hi->first - lo->first + 1), BigInt(0));
  for (const auto& [e, c] : terms) r.c_[static_cast<size_t>(e - r.offset_)] += c;
  r.normalize();
  return r;
}

void QPoly::normalize() {
  size_t first = 0;
  while (first < c_.size() && c_[first] == 0) ++first;
  if (first == c_.size()) {
    c_.clear();
    offset_ = 0;
    return;
  }
  size_t last = c_.size();
  while (c_[last - 1] == 0) --last;
  if (first > 0 || last < c_.size()) {
    c_.erase(c_.begin() + static_cast<std::ptrdiff_t>(last), c_.end());
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(first));
    offset_ += static_cast<int>(first);
  }
}

BigInt QPoly::coeff(int exp) const {
  if (is_zero() || exp < min_exp() || exp > max_exp()) return 0;
  return c_[static_cast<size_t>(exp - offset_)];
}

std::vector<std::pair<int, BigInt>> QPoly::terms() const {
  std::vector<std::pair<int, BigInt>> out;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.emplace_back(offset_ + static_cast<int>(i), c_[i]);
  return out;
}

bool QPoly::in_nq() const {
  if (is_zero()) return true;
  if (offset_ < 0) return false;
  return std::all_of(c_.begin(), c_.end(), [](const BigInt& c) { return sgn(c) >= 0; });
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(min_exp(), o.min_exp());
  int hi = std::max(max_exp(), o.max_exp());
  if (lo < offset_) {
    c_.insert(c_.begin(), static_cast<size_t>(offset_ - lo), BigInt(0));
    offset_ = lo;
  }
  if (hi - offset_ + 1 > static_cast<int>(c_.size())) c_.resize(static_cast<size_t>(hi - offset_ + 1), BigInt(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[static_cast<size_t>(o.offset_ - offset_) + i] += o.c_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) { return *this += -o; }

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.offset_ = a.offset_ + b.offset_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  r.normalize();
  return r;
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly QPoly::shifted(int k) const {
  QPoly r = *this;
  if (!r.is_zero()) r.offset_ += k;
  return r;
}

QPoly QPoly::sub_qpower(int k) const {
  if (k < 1) throw std::invalid_argument("sub_qpower: k must be >= 1");
  if (is_zero() || k == 1) return *this;
  QPoly r;
  r.offset_ = offset_ * k;
  r.c_.assign((c_.size() - 1) * static_cast<size_t>(k) + 1, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i * static_cast<size_t>(k)] = c_[i];
  return r;
}

BigInt QPoly::eval_one() const {
  BigInt s = 0;
  for (const auto& c : c_) s += c;
  return s;
}

std::pair<int, QPoly> QPoly::weight_split() const {
  if (is_zero()) return {0, QPoly()};
  return {offset_, shifted(-offset_)};
}

std::optional<QPoly> QPoly::divide_exact(const QPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
  if (is_zero()) return QPoly();
  if (c_.size() < d.c_.size()) return std::nullopt;
  // Long division from the low end; both lowest coefficients are non-zero.
  std::vector<BigInt> rem = c_;
  size_t qlen = c_.size() - d.c_.size() + 1;
  std::vector<BigInt> quo(qlen);
  const BigInt& lead = d.c_[0];
  for (size_t i = 0; i < qlen; ++i) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    BigInt t;
    mpz_divexact(t.get_mpz_t(), rem[i].get_mpz_t(), lead.get_mpz_t());
    for (size_t j = 0; j < d.c_.size(); ++j) rem[i + j] -= t * d.c_[j];
    quo[i] = std::move(t);
  }
  for (size_t i = qlen; i < rem.size(); ++i)
    if (rem[i] != 0) return std::nullopt;
  QPoly r;
  r.offset_ = offset_ - d.offset_;
  r.c_ = std::move(quo);
  r.normalize();
  return r;
}

QPoly QPoly::pow(unsigned k) const {
  QPoly result(1);
  QPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  QPoly parse() {
    std::vector<std::pair<int, BigInt>> terms;
    skip_ws();
    if (at_end()) fail("empty input");
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      skip_ws();
      auto [e, c] = term();
      if (sign < 0) c = -c;
      terms.emplace_back(e, std::move(c));
      skip_ws();
      if (at_end()) break;
      if (peek() == '+') {
        sign = 1;
      } else if (peek() == '-') {
        sign = -1;
      } else {
        fail("expected '+' or '-'");
      }
      ++pos_;
    }
    return QPoly::from_terms(terms);
  }

 private:
  std::pair<int, BigInt> term() {
    BigInt c = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = BigInt(digits());
      have_coeff = true;
      skip_ws();
      if (at_end() || peek() != '*') return {0, c};
      ++pos_;
      skip_ws();
    }
    if (at_end() || peek() != 'q') fail(have_coeff ? "expected 'q' after '*'" : "expected coefficient or 'q'");
    ++pos_;
    skip_ws();
    if (at_end() || peek() != '^') return {1, c};
    ++pos_;
    skip_ws();
    bool neg = false;
    if (!at_end() && peek() == '-') {
      neg = true;
      ++pos_;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    int e = std::stoi(digits());
    return {neg ? -e : e, c};
  }

  std::string digits() {
    size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse polynomial at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

QPoly QPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

// (1 - q^k) divides exactly; synthetic division from the low end.
static QPoly divide_by_one_minus_qk(const QPoly& p, int k) {
  auto r = p.divide_exact(QPoly(1) - QPoly::q_power(k));
  if (!r) throw InternalError("q_binomial: intermediate product not divisible by (1 - q^k)");
  return *r;
}

QPoly q_binomial(int n, int m) {
  if (m == 0) return QPoly(1);
  if (m < 0 || m > n) return QPoly();
  if (m > n - m) m = n - m;
  if (m == 0) return QPoly(1);

  static std::mutex mu;
  static std::map<std::pair<int, int>, QPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({n, m}); it != cache.end()) return it->second;
  }
  // prod_{i=1}^{k} (1 - q^{n-m+i}) / (1 - q^i) is [n-m+k, k]_q at every k.
  QPoly acc(1);
  for (int i = 1; i <= m; ++i) {
    acc *= QPoly(1) - QPoly::q_power(n - m + i);
    acc = divide_by_one_minus_qk(acc, i);
  }
  std::lock_guard lock(mu);
  cache.emplace(std::make_pair(n, m), acc);
  return acc;
}

QPoly q_pochhammer(const QPoly& a, int n, const QPoly& step) {
  if (n < 0) throw std::invalid_argument("q_pochhammer: n must be >= 0");
  QPoly acc(1);
  QPoly factor = a;
  for (int i = 0; i < n; ++i) {
    acc *= QPoly(1) - factor;
    factor *= step;
  }
  return acc;
}

QPoly q_factorial(int n) { return q_pochhammer(QPoly::q_power(1), n, QPoly::q_power(1)); }

int res2(long s) { return static_cast<int>(((s % 2) + 2) % 2); }

}  // namespace demflag
