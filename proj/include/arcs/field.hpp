#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arcs/errors.hpp"

namespace arcs {

/// Element of GF(q) encoded as the base-p integer sum c_i p^i of its
/// polynomial coefficients. Code 0 is zero, code 1 is one.
using Elem = std::uint16_t;

/// Largest supported field order.
inline constexpr int kMaxFieldOrder = 1 << 16;

struct FieldParams {
  int p = 2;
  int h = 1;
  /// Ascending coefficients c0..ch of a monic primitive polynomial.
  std::vector<int> modulus;

  int q() const;

  friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

bool is_prime(int n);

/// All monic primitive polynomials of degree h over GF(p), ordered
/// lexicographically by ascending-coefficient tuple.
std::vector<std::vector<int>> primitive_polynomials(int p, int h);

std::string polynomial_to_string(const std::vector<int>& coeffs);

/// Immutable GF(p^h) arithmetic. Multiplication goes through exp/log tables
/// in powers of the modulus root xi; addition works digit-wise on codes.
class Field {
 public:
  /// Builds the field using the lexicographically least primitive modulus.
  static Field build(int p, int h);
  static Field build(int p, int h, const std::vector<int>& modulus);
  static Field build(const FieldParams& params) { return build(params.p, params.h, params.modulus); }

  const FieldParams& params() const noexcept { return params_; }
  int p() const noexcept { return params_.p; }
  int h() const noexcept { return params_.h; }
  int q() const noexcept { return q_; }

  Elem add(Elem a, Elem b) const noexcept {
    if (prime_) {
      unsigned s = unsigned(a) + b;
      return Elem(s >= unsigned(q_) ? s - q_ : s);
    }
    if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
    return add_digits(a, b);
  }

  Elem neg(Elem a) const noexcept {
    if (prime_) return a == 0 ? 0 : Elem(q_ - a);
    return neg_table_[a];
  }

  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const noexcept {
    if (prime_) return Elem(std::uint32_t(a) * b % unsigned(q_));
    if (a == 0 || b == 0) return 0;
    return exp2_[std::size_t(log_[a]) + log_[b]];
  }

  /// Throws DivisionByZero for 0.
  Elem inv(Elem a) const;

  /// Unchecked inverse for hot loops; a must be nonzero.
  Elem inv_unchecked(Elem a) const noexcept {
    int l = log_[a];
    return exp2_[l == 0 ? 0 : (q_ - 1) - l];
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// xi^k for any integer k (taken modulo q-1).
  Elem exp(long long k) const noexcept;

  /// Discrete log base xi; throws DivisionByZero for 0.
  int log(Elem a) const;

  Elem pow(Elem a, long long e) const;

  /// a^(p^i), 0 <= i < h.
  Elem frobenius(Elem a, int i) const;

  Elem primitive_element() const noexcept { return exp2_[q_ == 2 ? 0 : 1]; }

  bool contains(long long code) const noexcept { return code >= 0 && code < q_; }

 private:
  Field() = default;
  Elem add_digits(Elem a, Elem b) const noexcept;

  FieldParams params_;
  int q_ = 0;
  bool prime_ = true;
  std::vector<Elem> exp2_;  // xi^k for k in [0, 2(q-1))
  std::vector<int> log_;    // log_[0] unused
  std::vector<Elem> add_table_;
  std::vector<Elem> neg_table_;
};

}  // namespace arcs
