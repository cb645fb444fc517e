#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gammatch/bigint.hpp"

namespace gammatch {

/// Dense exact-integer polynomial in y. Canonical form: no trailing zero
/// coefficients; the zero polynomial stores nothing.
class YPoly {
 public:
  YPoly() = default;
  explicit YPoly(Int constant) {
    if (constant != 0) c_.push_back(std::move(constant));
  }
  explicit YPoly(long constant) : YPoly(Int(constant)) {}

  static YPoly one() { return YPoly(Int(1)); }
  static YPoly monomial(int exp, Int coeff) {
    YPoly p;
    if (coeff != 0) {
      p.c_.assign(exp + 1, Int(0));
      p.c_[exp] = std::move(coeff);
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  /// Lowest exponent with nonzero coefficient; -1 for the zero polynomial.
  int lowest_exponent() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return static_cast<int>(i);
    return -1;
  }

  Int coeff(int e) const {
    if (e < 0 || e > degree()) return 0;
    return c_[e];
  }

  void set_coeff(int e, Int v) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e >= static_cast<int>(c_.size())) c_.resize(e + 1, Int(0));
    c_[e] = std::move(v);
    trim();
  }

  const std::vector<Int>& coeffs() const { return c_; }

  YPoly& operator+=(const YPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  YPoly& operator-=(const YPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
  friend YPoly operator-(YPoly a, const YPoly& b) { return a -= b; }

  friend YPoly operator*(const YPoly& a, const YPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    YPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }

  friend YPoly operator*(const Int& s, YPoly p) {
    if (s == 0) return {};
    for (auto& c : p.c_) c *= s;
    return p;
  }

  YPoly operator-() const {
    YPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  /// p * y^k.
  YPoly shifted(int k) const {
    if (k < 0) throw std::invalid_argument("negative shift");
    if (is_zero()) return {};
    YPoly r;
    r.c_.assign(c_.size() + k, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
  }

  /// p(-y).
  YPoly negated_variable() const {
    YPoly r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
  }

  Int evaluate(const Int& v) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
  }

  bool operator==(const YPoly&) const = default;

  /// Ascending powers, e.g. "2y^2 + y^3"; negatives as "-y + y^2".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = 0; e <= degree(); ++e) {
      if (c_[e] == 0) continue;
      Int a = c_[e];
      if (first) {
        if (a < 0) os << "-";
        first = false;
      } else {
        os << (a < 0 ? " - " : " + ");
      }
      Int mag = a < 0 ? Int(-a) : a;
      if (mag != 1 || e == 0) os << mag.str();
      if (e >= 1) {
        os << "y";
        if (e >= 2) os << "^" << e;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

/// Sparse exact-integer polynomial in x and y, canonical (no zero entries),
/// terms ordered by (x-exponent, y-exponent).
class XYPoly {
 public:
  using TermMap = std::map<std::pair<int, int>, Int>;

  XYPoly() = default;
  explicit XYPoly(Int constant) {
    if (constant != 0) t_[{0, 0}] = std::move(constant);
  }

  static XYPoly one() { return XYPoly(Int(1)); }
  static XYPoly monomial(int xe, int ye, Int coeff) {
    XYPoly p;
    if (coeff != 0) p.t_[{xe, ye}] = std::move(coeff);
    return p;
  }
  static XYPoly from_y(const YPoly& p) {
    XYPoly r;
    for (int e = 0; e <= p.degree(); ++e)
      if (p.coeff(e) != 0) r.t_[{0, e}] = p.coeff(e);
    return r;
  }

  bool is_zero() const { return t_.empty(); }
  const TermMap& terms() const { return t_; }

  Int coeff(int xe, int ye) const {
    auto it = t_.find({xe, ye});
    return it == t_.end() ? Int(0) : it->second;
  }

  void add_term(int xe, int ye, const Int& v) {
    if (v == 0) return;
    auto [it, fresh] = t_.try_emplace({xe, ye}, v);
    if (!fresh) {
      it->second += v;
      if (it->second == 0) t_.erase(it);
    }
  }

  XYPoly& operator+=(const XYPoly& o) {
    for (auto& [m, c] : o.t_) add_term(m.first, m.second, c);
    return *this;
  }
  XYPoly& operator-=(const XYPoly& o) {
    for (auto& [m, c] : o.t_) add_term(m.first, m.second, -c);
    return *this;
  }
  friend XYPoly operator+(XYPoly a, const XYPoly& b) { return a += b; }
  friend XYPoly operator-(XYPoly a, const XYPoly& b) { return a -= b; }

  friend XYPoly operator*(const XYPoly& a, const XYPoly& b) {
    XYPoly r;
    for (auto& [ma, ca] : a.t_)
      for (auto& [mb, cb] : b.t_)
        r.add_term(ma.first + mb.first, ma.second + mb.second, ca * cb);
    return r;
  }

  friend XYPoly operator*(const Int& s, XYPoly p) {
    if (s == 0) return {};
    for (auto& [m, c] : p.t_) c *= s;
    return p;
  }

  int x_degree() const {
    int d = -1;
    for (auto& [m, c] : t_) d = std::max(d, m.first);
    return d;
  }

  /// Substitute an integer for x.
  YPoly substitute_x(const Int& x) const {
    YPoly r;
    for (auto& [m, c] : t_) {
      Int pw = 1;
      for (int i = 0; i < m.first; ++i) pw *= x;
      r += YPoly::monomial(m.second, c * pw);
    }
    return r;
  }

  bool operator==(const XYPoly&) const = default;

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : t_) {
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      Int mag = c < 0 ? Int(-c) : c;
      bool has_var = m.first > 0 || m.second > 0;
      if (mag != 1 || !has_var) os << mag.str();
      if (m.first >= 1) {
        os << "x";
        if (m.first >= 2) os << "^" << m.first;
      }
      if (m.second >= 1) {
        os << "y";
        if (m.second >= 2) os << "^" << m.second;
      }
    }
    return os.str();
  }

 private:
  TermMap t_;
};

}  // namespace gammatch
