#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "covgal/errors.hpp"

namespace covgal {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using ComplexF = std::complex<double>;

inline BigInt rat_floor(const Rat& x) {
  BigInt num = numerator(x), den = denominator(x);
  if (num >= 0) return num / den;
  return -((-num + den - 1) / den);
}

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline std::string rat_to_string(const Rat& x) {
  BigInt num = numerator(x), den = denominator(x);
  std::string s = num.str();
  if (den != 1) s += "/" + den.str();
  return s;
}

inline Rat rat_from_string(std::string s) {
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::exception& e) {
    throw InputError("bad rational '" + s + "'");
  }
}

/// Element of Q(i). Components are arbitrary-precision rationals kept in
/// lowest terms with positive denominator (cpp_rational canonical form).
struct GaussianRational {
  Rat re{};
  Rat im{};

  GaussianRational() = default;
  GaussianRational(Rat r) : re(std::move(r)) {}
  GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r) {}
  GaussianRational(long r, long i) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }

  friend bool operator==(const GaussianRational&,
                         const GaussianRational&) = default;

  GaussianRational operator-() const { return {-re, -im}; }

  friend GaussianRational operator+(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a,
                                    const GaussianRational& b) {
    Rat n = b.re * b.re + b.im * b.im;
    if (n == 0) throw SingularSystem("division by zero in Q(i)");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  GaussianRational& operator+=(const GaussianRational& b) {
    return *this = *this + b;
  }
  GaussianRational& operator-=(const GaussianRational& b) {
    return *this = *this - b;
  }
  GaussianRational& operator*=(const GaussianRational& b) {
    return *this = *this * b;
  }
  GaussianRational& operator/=(const GaussianRational& b) {
    return *this = *this / b;
  }
};

inline ComplexF to_complex(const GaussianRational& q) {
  return {static_cast<double>(q.re), static_cast<double>(q.im)};
}
inline ComplexF to_complex(const ComplexF& z) { return z; }

/// "p/q+r/s i" textual form (pure-real and pure-imaginary parts elided).
inline std::string to_string(const GaussianRational& q) {
  if (q.im == 0) return rat_to_string(q.re);
  std::string im = rat_to_string(rat_abs(q.im)) + " i";
  std::string sign = q.im < 0 ? "-" : "+";
  if (q.re == 0) return (q.im < 0 ? "-" : "") + im;
  return rat_to_string(q.re) + sign + im;
}

inline GaussianRational gaussian_rational_from_string(std::string s) {
  std::erase_if(s, [](char c) { return std::isspace(c) != 0; });
  if (s.empty()) throw InputError("empty Q(i) literal");
  bool has_i = s.back() == 'i';
  if (has_i) s.pop_back();
  if (!has_i) return {rat_from_string(s), Rat(0)};
  // Find the sign separating real and imaginary parts, if both are present.
  size_t split = std::string::npos;
  for (size_t k = 1; k < s.size(); ++k) {
    if ((s[k] == '+' || s[k] == '-') && std::isdigit(s[k - 1])) split = k;
  }
  if (split == std::string::npos) {
    if (s.empty() || s == "+") return {Rat(0), Rat(1)};
    if (s == "-") return {Rat(0), Rat(-1)};
    return {Rat(0), rat_from_string(s)};
  }
  std::string im = s.substr(split);
  if (im == "+") im = "1";
  if (im == "-") im = "-1";
  return {rat_from_string(s.substr(0, split)), rat_from_string(im)};
}

// ---------------------------------------------------------------------------
// Univariate polynomials in x, low degree first, templated on the scalar.
// ---------------------------------------------------------------------------

inline bool scalar_is_zero(const GaussianRational& q) { return q.is_zero(); }
inline bool scalar_is_zero(const ComplexF& z) { return z == ComplexF(0.0); }

template <class Scalar>
struct Poly {
  std::vector<Scalar> c;  // coefficient of x^k at index k

  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs) : c(std::move(coeffs)) { trim(); }
  static Poly constant(Scalar v) { return Poly(std::vector<Scalar>{std::move(v)}); }

  void trim() {
    while (!c.empty() && scalar_is_zero(c.back())) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }

  Scalar coeff(size_t k) const { return k < c.size() ? c[k] : Scalar{}; }

  template <class Point>
  Point eval(const Point& x) const {
    Point acc{};
    for (size_t k = c.size(); k-- > 0;) acc = acc * x + Point(c[k]);
    return acc;
  }

  Poly derivative() const {
    Poly d;
    for (size_t k = 1; k < c.size(); ++k) d.c.push_back(c[k] * Scalar(long(k)));
    d.trim();
    return d;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Scalar{});
    for (size_t k = 0; k < a.c.size(); ++k) r.c[k] = r.c[k] + a.c[k];
    for (size_t k = 0; k < b.c.size(); ++k) r.c[k] = r.c[k] + b.c[k];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly nb = b;
    for (auto& v : nb.c) v = -v;
    return a + nb;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c.resize(a.c.size() + b.c.size() - 1, Scalar{});
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j)
        r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  friend Poly operator*(const Scalar& s, const Poly& p) {
    Poly r = p;
    for (auto& v : r.c) v = s * v;
    r.trim();
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

  /// Substitution x -> s(y).
  Poly compose(const Poly& s) const {
    Poly acc;
    for (size_t k = c.size(); k-- > 0;)
      acc = acc * s + Poly::constant(c[k]);
    return acc;
  }
};

using PolyExact = Poly<GaussianRational>;
using PolyFloat = Poly<ComplexF>;

inline PolyFloat to_float(const PolyExact& p) {
  PolyFloat r;
  r.c.reserve(p.c.size());
  for (const auto& q : p.c) r.c.push_back(to_complex(q));
  return r;
}
inline const PolyFloat& to_float(const PolyFloat& p) { return p; }

/// Coefficient polynomial of a Weierstrass spec: exact (Q(i)[x]) or float.
struct PolyX {
  std::variant<PolyExact, PolyFloat> v;

  PolyX() : v(PolyFloat{}) {}
  PolyX(PolyExact p) : v(std::move(p)) {}
  PolyX(PolyFloat p) : v(std::move(p)) {}

  bool exact() const { return std::holds_alternative<PolyExact>(v); }
  const PolyExact& as_exact() const { return std::get<PolyExact>(v); }
  const PolyFloat& as_float() const { return std::get<PolyFloat>(v); }

  PolyFloat to_float() const {
    return exact() ? covgal::to_float(as_exact()) : as_float();
  }
  int degree() const {
    return std::visit([](const auto& p) { return p.degree(); }, v);
  }
};

/// Horner evaluation; exact coefficients are converted at evaluation time.
inline ComplexF poly_eval(const PolyX& p, ComplexF x) {
  return p.to_float().eval(x);
}

// ---------------------------------------------------------------------------
// Determinants / linear solves over an exact field (Gaussian elimination).
// ---------------------------------------------------------------------------

inline GaussianRational exact_det(std::vector<std::vector<GaussianRational>> m) {
  const size_t n = m.size();
  GaussianRational det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return GaussianRational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    GaussianRational inv = GaussianRational(1) / m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      GaussianRational factor = m[r][col] * inv;
      for (size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

inline std::vector<GaussianRational> exact_solve(
    std::vector<std::vector<GaussianRational>> m,
    std::vector<GaussianRational> rhs) {
  const size_t n = m.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw SingularSystem("exact linear system is singular");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    GaussianRational inv = GaussianRational(1) / m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      GaussianRational factor = m[r][col] * inv;
      for (size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  std::vector<GaussianRational> x(n);
  for (size_t r = n; r-- > 0;) {
    GaussianRational acc = rhs[r];
    for (size_t c = r + 1; c < n; ++c) acc -= m[r][c] * x[c];
    x[r] = acc / m[r][r];
  }
  return x;
}

// ---------------------------------------------------------------------------
// Discriminant of a monic degree-n polynomial in z with Poly coefficients:
// (-1)^{n(n-1)/2} Res(f, df/dz), recovered by evaluation + interpolation.
// ---------------------------------------------------------------------------

namespace detail {

// Sylvester-matrix resultant of the monic polynomial with scalar z-coeffs
// a (a_0..a_{n-1}, leading 1 implicit) and its z-derivative.
template <class Scalar>
Scalar scalar_discriminant(const std::vector<Scalar>& a) {
  const int n = static_cast<int>(a.size());
  if (n <= 1) return Scalar(1);
  // f: degree n, monic; g = f': degree n-1 with nonzero leading coeff n.
  std::vector<Scalar> f(n + 1), g(n);
  f[0] = Scalar(1);
  for (int k = 0; k < n; ++k) f[n - k] = a[k];
  for (int k = 1; k <= n - 1; ++k) g[n - k] = Scalar(long(k)) * a[k];
  g[0] = Scalar(long(n));
  const int dim = 2 * n - 1;
  std::vector<std::vector<Scalar>> syl(dim, std::vector<Scalar>(dim, Scalar{}));
  for (int r = 0; r < n - 1; ++r)
    for (int k = 0; k <= n; ++k) syl[r][r + k] = f[k];
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= n - 1; ++k) syl[n - 1 + r][r + k] = g[k];

  Scalar det;
  if constexpr (std::is_same_v<Scalar, GaussianRational>) {
    det = exact_det(std::move(syl));
  } else {
    Eigen::MatrixXcd m(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) m(r, c) = syl[r][c];
    det = m.partialPivLu().determinant();
  }
  const bool flip = ((n * (n - 1) / 2) % 2) != 0;
  return flip ? -det : det;
}

}  // namespace detail

/// Discriminant in x of z^n + a_{n-1}(x) z^{n-1} + ... + a_0(x), monic.
/// Exact scalars interpolate through integer nodes; floats through scaled
/// roots of unity with an inverse DFT.
template <class Scalar>
Poly<Scalar> discriminant(const std::vector<Poly<Scalar>>& a) {
  const int n = static_cast<int>(a.size());
  if (n <= 1) return Poly<Scalar>::constant(Scalar(1));
  int dmax = 0;
  for (const auto& p : a) dmax = std::max(dmax, std::max(0, p.degree()));
  const int bound = (2 * n - 1) * dmax;  // degree bound for disc in x

  auto coeffs_at = [&](const Scalar& x) {
    std::vector<Scalar> v(n);
    for (int k = 0; k < n; ++k) v[k] = a[k].template eval<Scalar>(x);
    return v;
  };

  if constexpr (std::is_same_v<Scalar, GaussianRational>) {
    // Newton divided differences on nodes x = 0, 1, ..., bound.
    const int m = bound + 1;
    std::vector<GaussianRational> nodes(m), vals(m);
    for (int k = 0; k < m; ++k) {
      nodes[k] = GaussianRational(long(k));
      vals[k] = detail::scalar_discriminant(coeffs_at(nodes[k]));
    }
    std::vector<GaussianRational> dd = vals;
    for (int lvl = 1; lvl < m; ++lvl)
      for (int k = m - 1; k >= lvl; --k)
        dd[k] = (dd[k] - dd[k - 1]) / (nodes[k] - nodes[k - lvl]);
    Poly<GaussianRational> result = Poly<GaussianRational>::constant(dd[m - 1]);
    for (int k = m - 2; k >= 0; --k) {
      Poly<GaussianRational> lin(
          std::vector<GaussianRational>{-nodes[k], GaussianRational(1)});
      result = result * lin + Poly<GaussianRational>::constant(dd[k]);
    }
    return result;
  } else {
    const int m = bound + 1;
    std::vector<ComplexF> vals(m);
    for (int k = 0; k < m; ++k) {
      ComplexF x = std::polar(1.0, 2.0 * M_PI * k / m);
      vals[k] = detail::scalar_discriminant(coeffs_at(x));
    }
    Poly<ComplexF> result;
    result.c.resize(m);
    double maxabs = 0.0;
    for (int j = 0; j < m; ++j) {
      ComplexF acc = 0.0;
      for (int k = 0; k < m; ++k)
        acc += vals[k] * std::polar(1.0, -2.0 * M_PI * j * k / m);
      result.c[j] = acc / double(m);
      maxabs = std::max(maxabs, std::abs(result.c[j]));
    }
    for (auto& v : result.c)
      if (std::abs(v) < 1e-10 * maxabs) v = 0.0;
    result.trim();
    return result;
  }
}

// ---------------------------------------------------------------------------
// Best Gaussian-rational approximation with bounded denominators.
// ---------------------------------------------------------------------------

namespace detail {

/// Best rational approximation of x with denominator <= bound, via
/// continued-fraction convergents and the final semiconvergent.
inline Rat best_rational(const Rat& x, const BigInt& bound) {
  BigInt p_prev = 1, q_prev = 0;  // h_{-1}/k_{-1}
  BigInt a = rat_floor(x);
  BigInt p = a, q = 1;
  Rat frac = x - Rat(a);
  while (frac != 0) {
    Rat inv = Rat(1) / frac;
    a = rat_floor(inv);
    frac = inv - Rat(a);
    BigInt p_next = a * p + p_prev;
    BigInt q_next = a * q + q_prev;
    if (q_next > bound) {
      BigInt k = (bound - q_prev) / q;
      Rat best(p, q);
      if (k >= 1) {
        Rat semi(k * p + p_prev, k * q + q_prev);
        if (rat_abs(x - semi) < rat_abs(x - best)) best = semi;
      }
      return best;
    }
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }
  return Rat(p, q);
}

}  // namespace detail

/// Componentwise best Q(i) approximation with denominators <= den_bound.
inline GaussianRational rationalize_value(ComplexF c, const BigInt& den_bound) {
  BigInt b = den_bound < 1 ? BigInt(1) : den_bound;
  return {detail::best_rational(Rat(c.real()), b),
          detail::best_rational(Rat(c.imag()), b)};
}

// ---------------------------------------------------------------------------
// Pretty printing.
// ---------------------------------------------------------------------------

inline std::string format_complex(ComplexF z) {
  std::string s = std::to_string(z.real());
  if (z.imag() != 0.0) {
    s += (z.imag() < 0 ? " - " : " + ") +
         std::to_string(std::abs(z.imag())) + " i";
  }
  return s;
}

template <class Scalar>
std::string poly_to_string(const Poly<Scalar>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    if (scalar_is_zero(p.coeff(k))) continue;
    std::string coeff;
    if constexpr (std::is_same_v<Scalar, GaussianRational>)
      coeff = to_string(p.coeff(k));
    else
      coeff = format_complex(p.coeff(k));
    if (!out.empty()) out += " + ";
    bool needs_parens = coeff.find('+') != std::string::npos ||
                        coeff.find('-', 1) != std::string::npos;
    if (k == 0) {
      out += coeff;
    } else {
      if (coeff == "1")
        ;  // elide unit coefficient
      else
        out += (needs_parens ? "(" + coeff + ")" : coeff) + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

inline std::string poly_to_string(const PolyX& p, const std::string& var) {
  return p.exact() ? poly_to_string(p.as_exact(), var)
                   : poly_to_string(p.as_float(), var);
}

}  // namespace covgal
