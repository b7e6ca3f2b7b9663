#pragma once

#include <cstdlib>
#include <initializer_list>
#include <map>
#include <utility>

#include "fbms/errors.hpp"
#include "fbms/vec3.hpp"

namespace fbms {

/// Laurent polynomial: finitely many terms c_n z^n, n in Z.  Exact coefficient
/// arithmetic; no zero coefficients are stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  LaurentPoly(std::initializer_list<std::pair<const int, Complex>> terms) {
    for (const auto& [n, c] : terms) set(n, c);
  }

  static LaurentPoly monomial(int n, Complex c) {
    LaurentPoly p;
    p.set(n, c);
    return p;
  }

  void set(int n, Complex c) {
    if (c == Complex{}) {
      coeff_.erase(n);
    } else {
      coeff_[n] = c;
    }
  }

  Complex coeff(int n) const {
    auto it = coeff_.find(n);
    return it == coeff_.end() ? Complex{} : it->second;
  }

  bool empty() const { return coeff_.empty(); }
  int min_exponent() const { return coeff_.begin()->first; }
  int max_exponent() const { return coeff_.rbegin()->first; }
  const std::map<int, Complex>& coefficients() const { return coeff_; }

  /// Sum of c_n z^n over stored exponents.
  Complex operator()(Complex z) const {
    if (coeff_.empty()) return {};
    if (z == Complex{}) {
      if (coeff_.begin()->first < 0) {
        throw PoleError("laurent evaluation at z=0 with negative exponents");
      }
      return coeff(0);
    }
    // Walk exponents upward, maintaining z^n incrementally.
    int n = coeff_.begin()->first;
    Complex zn = int_pow(z, n);
    Complex acc{};
    for (const auto& [e, c] : coeff_) {
      for (; n < e; ++n) zn *= z;
      acc += c * zn;
    }
    return acc;
  }

  /// Term-wise derivative: n c_n at exponent n-1.
  LaurentPoly derivative() const {
    LaurentPoly d;
    for (const auto& [n, c] : coeff_) {
      if (n != 0) d.set(n - 1, static_cast<double>(n) * c);
    }
    return d;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [n, c] : o.coeff_) set(n, coeff(n) + c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [n, c] : o.coeff_) set(n, coeff(n) - c);
    return *this;
  }
  LaurentPoly& operator*=(Complex s) {
    if (s == Complex{}) {
      coeff_.clear();
      return *this;
    }
    for (auto& [n, c] : coeff_) c *= s;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, Complex s) { return a *= s; }
  friend LaurentPoly operator*(Complex s, LaurentPoly a) { return a *= s; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly prod;
    for (const auto& [n, cn] : a.coeff_) {
      for (const auto& [m, cm] : b.coeff_) {
        prod.set(n + m, prod.coeff(n + m) + cn * cm);
      }
    }
    return prod;
  }

  bool operator==(const LaurentPoly& o) const { return coeff_ == o.coeff_; }

  /// p(lambda z): c_n -> c_n lambda^n.
  LaurentPoly with_scaled_argument(Complex lambda) const {
    LaurentPoly q;
    for (const auto& [n, c] : coeff_) q.set(n, c * int_pow(lambda, n));
    return q;
  }

  /// p(lambda / z): c_n lambda^n moves to exponent -n.
  LaurentPoly with_inverted_argument(Complex lambda) const {
    LaurentPoly q;
    for (const auto& [n, c] : coeff_) q.set(-n, c * int_pow(lambda, n));
    return q;
  }

  static Complex int_pow(Complex z, int n) {
    if (n == 0) return Complex{1.0, 0.0};
    Complex base = n > 0 ? z : Complex{1.0, 0.0} / z;
    Complex out{1.0, 0.0};
    for (int k = std::abs(n); k > 0; k >>= 1) {
      if (k & 1) out *= base;
      if (k > 1) base *= base;
    }
    return out;
  }

 private:
  std::map<int, Complex> coeff_;
};

}  // namespace fbms
