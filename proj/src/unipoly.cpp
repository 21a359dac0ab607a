#include "minmat/unipoly.hpp"

#include <algorithm>

namespace minmat {

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat UniPoly::coefficient(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[d];
}

const Rat& UniPoly::leading() const {
  if (is_zero()) throw domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rat UniPoly::operator()(const Rat& x) const {
  Rat acc(0);
  for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
  return acc;
}

UniPoly UniPoly::operator-() const {
  std::vector<Rat> c(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Rat& c) const {
  std::vector<Rat> r(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i] * c;
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator/(const Rat& c) const {
  if (c == 0) throw domain_error("polynomial division by zero scalar");
  return *this * (Rat(1) / c);
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<Rat> c(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return UniPoly(std::move(c));
}

UniPoly UniPoly::shifted(long s) const {
  UniPoly result;
  const UniPoly lin({Rat(s), Rat(1)});
  for (int i = degree(); i >= 0; --i) result = result * lin + constant(coeffs_[i]);
  return result;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  Int den(1);
  for (const Rat& c : coeffs_) lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  std::string body;
  for (int d = degree(); d >= 0; --d) {
    Int num = coeffs_[d].get_num() * (den / coeffs_[d].get_den());
    if (num == 0) continue;
    if (!body.empty()) body += num > 0 ? "+" : "-";
    else if (num < 0) body += "-";
    Int a = abs(num);
    if (a != 1 || d == 0) body += a.get_str();
    if (d >= 1) body += var;
    if (d >= 2) body += "^" + std::to_string(d);
  }
  if (den == 1) return body;
  return "(" + body + ")/" + den.get_str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw domain_error("polynomial division by zero");
  UniPoly q;
  UniPoly r = a;
  const Rat& lead = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int d = r.degree() - b.degree();
    Rat c = r.leading() / lead;
    std::vector<Rat> mono(static_cast<size_t>(d) + 1, Rat(0));
    mono[d] = c;
    UniPoly m(std::move(mono));
    q = q + m;
    r = r - m * b;
  }
  return {q, r};
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a / a.leading();
}

UniPoly square_free_part(const UniPoly& p) {
  if (p.is_zero()) throw domain_error("square-free part of the zero polynomial");
  if (p.degree() == 0) return p;
  UniPoly g = poly_gcd(p, p.derivative());
  auto [q, r] = divmod(p, g);
  if (!r.is_zero()) throw std::logic_error("square-free division left a remainder");
  return q;
}

}  // namespace minmat
