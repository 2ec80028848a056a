#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace freiman {

// A monomial in K[x_1..x_n], stored as a dense exponent vector. Variable
// indices are 1-based in the API, storage is 0-based. The ambient n is part
// of the value: monomials with different n never compare equal and refuse to
// combine. Use extended() to re-embed into a larger ring.
class Monomial {
 public:
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    if (exps_.empty())
      throw std::invalid_argument("Monomial: need at least one variable");
    long long total = 0;
    for (int e : exps_) {
      if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
      total += e;
    }
    if (total > kMaxDegree)
      throw std::invalid_argument("Monomial: degree too large");
    deg_ = static_cast<int>(total);
  }

  static Monomial one(int n) { return Monomial(std::vector<int>(check_n(n), 0)); }

  // builds x_{s_1} * x_{s_2} * ... from a nondecreasing 1-based index list
  static Monomial from_index_seq(const std::vector<int>& seq, int n) {
    std::vector<int> e(check_n(n), 0);
    int prev = 1;
    for (int i : seq) {
      if (i < prev) throw std::invalid_argument("from_index_seq: indices must be nondecreasing");
      if (i > n) throw std::invalid_argument("from_index_seq: index exceeds n");
      ++e[i - 1];
      prev = i;
    }
    return Monomial(std::move(e));
  }

  int n() const { return static_cast<int>(exps_.size()); }
  int deg() const { return deg_; }
  const std::vector<int>& exps() const { return exps_; }

  int exp(int var) const {
    if (var < 1 || var > n()) throw std::out_of_range("Monomial::exp: variable index out of range");
    return exps_[var - 1];
  }

  // largest index with a positive exponent, 0 for the unit monomial
  int max_index() const {
    for (int i = n(); i >= 1; --i)
      if (exps_[i - 1] > 0) return i;
    return 0;
  }

  // variable indices listed with multiplicity, nondecreasing; length = deg()
  std::vector<int> index_seq() const {
    std::vector<int> seq;
    seq.reserve(deg_);
    for (int i = 1; i <= n(); ++i)
      seq.insert(seq.end(), exps_[i - 1], i);
    return seq;
  }

  bool is_k_bounded(int k) const {
    if (k < 0) throw std::invalid_argument("is_k_bounded: k must be nonnegative");
    return std::all_of(exps_.begin(), exps_.end(), [k](int e) { return e <= k; });
  }

  bool divides(const Monomial& other) const {
    require_same_ring(other);
    for (int i = 0; i < n(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  // same exponent vector after padding the shorter one with zeros
  bool same_exponents(const Monomial& other) const {
    int m = std::max(n(), other.n());
    for (int i = 1; i <= m; ++i) {
      int a = (i <= n()) ? exps_[i - 1] : 0;
      int b = (i <= other.n()) ? other.exps_[i - 1] : 0;
      if (a != b) return false;
    }
    return true;
  }

  Monomial extended(int m) const {
    if (m < n()) throw std::invalid_argument("Monomial::extended: cannot shrink the ring");
    std::vector<int> e = exps_;
    e.resize(m, 0);
    return Monomial(std::move(e));
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    a.require_same_ring(b);
    std::vector<int> e(a.n());
    for (int i = 0; i < a.n(); ++i) e[i] = a.exps_[i] + b.exps_[i];
    return Monomial(std::move(e));
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::string str() const;

 private:
  static int check_n(int n) {
    if (n < 1 || n > kMaxVars) throw std::invalid_argument("Monomial: n out of range");
    return n;
  }
  void require_same_ring(const Monomial& other) const {
    if (n() != other.n())
      throw std::invalid_argument("Monomial: operands live in different rings");
  }

  static constexpr int kMaxVars = 1024;
  static constexpr long long kMaxDegree = 1 << 30;

  std::vector<int> exps_;
  int deg_ = 0;
};

// descending lexicographic order on exponent vectors, x1 heaviest
inline bool lex_greater(const Monomial& a, const Monomial& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("lex_greater: operands live in different rings");
  return a.exps() > b.exps();
}

// Accepts either a product ("x1*x3^2", "1") or a bracketed exponent vector
// ("[1,0,2]"). Product form: indices are 1-based, exponents must be positive,
// repeated variables multiply together. Vector form fixes n to the entry
// count. n_hint, when given, widens the ambient ring and must not be smaller
// than the largest index used.
inline Monomial parse_monomial(const std::string& text, std::optional<int> n_hint = std::nullopt) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw std::invalid_argument("parse_monomial: " + msg + " at position " +
                                std::to_string(pos) + " in \"" + text + "\"");
  };
  auto read_int = [&]() -> int {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected an integer");
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) fail("integer too large");
      ++pos;
    }
    return static_cast<int>(v);
  };

  if (n_hint && (*n_hint < 1 || *n_hint > 1024)) fail("n_hint out of range");
  if (text.empty()) fail("empty input");

  if (text[0] == '[') {
    ++pos;
    std::vector<int> exps;
    exps.push_back(read_int());
    while (pos < text.size() && text[pos] == ',') {
      ++pos;
      exps.push_back(read_int());
    }
    if (pos >= text.size() || text[pos] != ']') fail("expected ',' or ']'");
    ++pos;
    if (pos != text.size()) fail("trailing characters after ']'");
    if (n_hint) {
      if (*n_hint < static_cast<int>(exps.size()))
        fail("n_hint smaller than the vector length");
      exps.resize(*n_hint, 0);
    }
    return Monomial(std::move(exps));
  }

  if (text == "1") return Monomial::one(n_hint.value_or(1));

  std::vector<std::pair<int, int>> terms;  // (index, exponent)
  int max_idx = 0;
  for (;;) {
    if (pos >= text.size() || text[pos] != 'x') fail("expected 'x'");
    ++pos;
    int idx = read_int();
    if (idx < 1) fail("variable index must be at least 1");
    int e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      e = read_int();
      if (e < 1) fail("exponent must be positive");
    }
    terms.emplace_back(idx, e);
    max_idx = std::max(max_idx, idx);
    if (pos == text.size()) break;
    if (text[pos] != '*') fail("expected '*' or end of input");
    ++pos;
  }
  if (n_hint && *n_hint < max_idx) fail("n_hint smaller than the largest index");
  std::vector<int> exps(n_hint.value_or(max_idx), 0);
  for (auto [idx, e] : terms) exps[idx - 1] += e;
  return Monomial(std::move(exps));
}

// canonical product form: ascending indices, '^' only for exponents above 1,
// "1" for the unit monomial
inline std::string format_monomial(const Monomial& u) {
  std::string s;
  for (int i = 1; i <= u.n(); ++i) {
    int e = u.exp(i);
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x';
    s += std::to_string(i);
    if (e > 1) {
      s += '^';
      s += std::to_string(e);
    }
  }
  return s.empty() ? "1" : s;
}

inline std::string Monomial::str() const { return format_monomial(*this); }

}  // namespace freiman
