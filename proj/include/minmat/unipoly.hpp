#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "minmat/rational.hpp"

namespace minmat {

// Dense univariate polynomial over Rat; coefficients ascending by degree with
// no trailing zero.  The zero polynomial stores nothing and has degree -1.
// Evaluation at rational points is exact.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> ascending) : coeffs_(std::move(ascending)) { normalize(); }
  UniPoly(std::initializer_list<Rat> ascending) : coeffs_(ascending) { normalize(); }

  static UniPoly constant(const Rat& c) { return UniPoly({c}); }
  static UniPoly variable() { return UniPoly({Rat(0), Rat(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coefficients() const { return coeffs_; }
  Rat coefficient(int d) const;
  const Rat& leading() const;

  Rat operator()(const Rat& x) const;
  Rat operator()(long x) const { return (*this)(Rat(x)); }

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rat& c) const;
  UniPoly operator/(const Rat& c) const;

  UniPoly derivative() const;

  // p(t + s), expanded exactly.
  UniPoly shifted(long s) const;

  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

  // Display form over a single positive denominator, e.g. "(2t^3+9t^2+13t+6)/6".
  std::string str(const std::string& var = "t") const;

 private:
  void normalize();
  std::vector<Rat> coeffs_;
};

// a = q*b + r with deg r < deg b; domain_error when b is zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

// Monic gcd (zero when both inputs are zero).
UniPoly poly_gcd(UniPoly a, UniPoly b);

// p / gcd(p, p'); domain_error on the zero polynomial.
UniPoly square_free_part(const UniPoly& p);

}  // namespace minmat
