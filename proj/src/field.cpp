#include "arcs/field.hpp"

#include <sstream>

namespace arcs {

namespace {

using Poly = std::vector<int>;  // ascending coefficients

int ipow(int base, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) {
    r *= base;
    if (r > kMaxFieldOrder) return kMaxFieldOrder + 1;
  }
  return int(r);
}

void trim(Poly& f) {
  while (f.size() > 1 && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g over GF(p).
Poly poly_mod(Poly f, const Poly& g, int p) {
  const std::size_t dg = g.size() - 1;
  trim(f);
  while (f.size() - 1 >= dg && !(f.size() == 1 && f[0] == 0)) {
    int lead = f.back();
    std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = ((f[shift + i] - lead * g[i]) % p + p) % p;
    }
    f.pop_back();
    trim(f);
    if (dg == 0) break;
  }
  return f;
}

bool is_zero(const Poly& f) {
  for (int c : f)
    if (c != 0) return false;
  return true;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, int p) {
  const int deg = int(f.size()) - 1;
  if (deg <= 1) return true;
  for (int d = 1; d <= deg / 2; ++d) {
    const int count = ipow(p, d);
    for (int code = 0; code < count; ++code) {
      Poly g(d + 1);
      int c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      if (is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

// Powers xi^0, xi^1, ... of the root of `modulus` as codes, stopping at the
// first return to 1. Returns the full cycle.
std::vector<Elem> root_powers(const Poly& modulus, int p) {
  const int h = int(modulus.size()) - 1;
  const int q = ipow(p, h);
  std::vector<Elem> powers;
  std::vector<int> digits(h, 0);
  digits[0] = 1;
  auto code_of = [&] {
    int code = 0;
    for (int i = h - 1; i >= 0; --i) code = code * p + digits[i];
    return Elem(code);
  };
  for (int k = 0; k < q; ++k) {
    Elem code = code_of();
    if (k > 0 && code == 1) break;
    if (code == 0) break;
    powers.push_back(code);
    // multiply by x and reduce with x^h = -(c0 + ... + c_{h-1} x^{h-1})
    int top = digits[h - 1];
    for (int i = h - 1; i > 0; --i) digits[i] = digits[i - 1];
    digits[0] = 0;
    for (int i = 0; i < h; ++i) digits[i] = ((digits[i] - top * modulus[i]) % p + p) % p;
  }
  return powers;
}

}  // namespace

int FieldParams::q() const { return ipow(p, h); }

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::vector<int>> primitive_polynomials(int p, int h) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (h < 1) throw Error(ErrorKind::DegreeMismatch, "extension degree must be positive");
  const int q = ipow(p, h);
  if (q > kMaxFieldOrder) throw Error(ErrorKind::CapacityExceeded, "field order above 2^16");
  std::vector<std::vector<int>> out;
  // c0 is the most significant digit of the lexicographic order.
  for (int code = 0; code < q; ++code) {
    Poly f(h + 1);
    int c = code;
    for (int i = h - 1; i >= 0; --i) {
      f[i] = c % p;
      c /= p;
    }
    f[h] = 1;
    if (f[0] == 0) continue;
    if (!is_irreducible(f, p)) continue;
    if (int(root_powers(f, p).size()) == q - 1) out.push_back(f);
  }
  return out;
}

std::string polynomial_to_string(const std::vector<int>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (int i = int(coeffs.size()) - 1; i >= 0; --i) {
    int c = coeffs[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

Field Field::build(int p, int h) {
  auto polys = primitive_polynomials(p, h);
  // Some primitive polynomial always exists for a valid (p, h).
  return build(p, h, polys.front());
}

Field Field::build(int p, int h, const std::vector<int>& modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (h < 1) throw Error(ErrorKind::DegreeMismatch, "extension degree must be positive");
  const int q = ipow(p, h);
  if (q > kMaxFieldOrder) throw Error(ErrorKind::CapacityExceeded, "field order above 2^16");
  if (int(modulus.size()) != h + 1)
    throw Error(ErrorKind::DegreeMismatch,
                "modulus has degree " + std::to_string(int(modulus.size()) - 1) + ", expected " +
                    std::to_string(h));
  for (int c : modulus)
    if (c < 0 || c >= p) throw Error(ErrorKind::DegreeMismatch, "modulus coefficient out of range");
  if (modulus.back() != 1) throw Error(ErrorKind::DegreeMismatch, "modulus must be monic");
  if (!is_irreducible(modulus, p))
    throw Error(ErrorKind::NotIrreducible, polynomial_to_string(modulus) + " is reducible");
  auto powers = root_powers(modulus, p);
  if (int(powers.size()) != q - 1)
    throw Error(ErrorKind::NotPrimitive, polynomial_to_string(modulus) + " has a root of order " +
                                             std::to_string(powers.size()));

  Field f;
  f.params_ = FieldParams{p, h, modulus};
  f.q_ = q;
  f.prime_ = (h == 1);
  f.exp2_.resize(2 * std::size_t(q - 1));
  f.log_.assign(q, 0);
  for (int k = 0; k < q - 1; ++k) {
    f.exp2_[k] = powers[k];
    f.exp2_[k + q - 1] = powers[k];
    f.log_[powers[k]] = k;
  }
  if (!f.prime_) {
    f.neg_table_.resize(q);
    for (int a = 0; a < q; ++a) {
      int code = 0, place = 1, x = a;
      for (int i = 0; i < h; ++i) {
        int d = x % p;
        x /= p;
        code += ((p - d) % p) * place;
        place *= p;
      }
      f.neg_table_[a] = Elem(code);
    }
    if (std::size_t(q) * q <= (1u << 20)) {
      f.add_table_.resize(std::size_t(q) * q);
      for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) f.add_table_[std::size_t(a) * q + b] = f.add_digits(Elem(a), Elem(b));
    }
  }
  return f;
}

Elem Field::add_digits(Elem a, Elem b) const noexcept {
  const int p = params_.p;
  if (p == 2) return Elem(a ^ b);
  int code = 0, place = 1, x = a, y = b;
  for (int i = 0; i < params_.h; ++i) {
    code += ((x % p + y % p) % p) * place;
    x /= p;
    y /= p;
    place *= p;
  }
  return Elem(code);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return inv_unchecked(a);
}

Elem Field::exp(long long k) const noexcept {
  const long long n = q_ - 1;
  long long r = ((k % n) + n) % n;
  return exp2_[std::size_t(r)];
}

int Field::log(Elem a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "logarithm of zero");
  return log_[a];
}

Elem Field::pow(Elem a, long long e) const {
  if (a == 0) {
    if (e < 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    return e == 0 ? 1 : 0;
  }
  return exp(static_cast<long long>(log_[a]) * (e % (q_ - 1)));
}

Elem Field::frobenius(Elem a, int i) const {
  if (a == 0 || i == 0) return a;
  long long e = 1;
  for (int k = 0; k < i; ++k) e = e * params_.p % (q_ - 1);
  return exp(static_cast<long long>(log_[a]) * e);
}

}  // namespace arcs
