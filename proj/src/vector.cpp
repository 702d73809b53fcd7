#include "qsym/vector.hpp"

#include <set>
#include <stdexcept>

namespace qsym {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::M: return "M";
    case Basis::F: return "F";
    case Basis::S: return "S";
  }
  throw std::logic_error("basis_name: unknown basis");
}

Basis basis_from_name(const std::string& name) {
  if (name == "M") return Basis::M;
  if (name == "F") return Basis::F;
  if (name == "S") return Basis::S;
  throw std::invalid_argument("basis_from_name: expected M, F or S, got '" + name + "'");
}

QSymVector QSymVector::unit(Basis b) {
  return basis_element(b, {});
}

QSymVector QSymVector::basis_element(Basis b, const Composition& a, const Rational& c) {
  if (!is_valid_composition(a))
    throw std::invalid_argument("basis_element: parts must be positive");
  QSymVector u(b);
  u.add_term(a, c);
  return u;
}

void QSymVector::add_term(const Composition& a, const Rational& c) {
  if (sgn(c) == 0) return;
  auto it = terms.find(a);
  if (it == terms.end()) {
    terms.emplace(a, c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

void QSymVector::add_scaled(const QSymVector& other, const Rational& c) {
  if (other.basis != basis)
    throw std::invalid_argument("add_scaled: basis mismatch");
  if (sgn(c) == 0) return;
  for (const auto& [a, ca] : other.terms) add_term(a, c * ca);
}

Rational QSymVector::coefficient(const Composition& a) const {
  auto it = terms.find(a);
  return it == terms.end() ? Rational(0) : it->second;
}

QSymVector QSymVector::graded_component(int w) const {
  QSymVector out(basis);
  for (const auto& [a, c] : terms)
    if (weight(a) == w) out.terms.emplace(a, c);
  return out;
}

std::vector<int> QSymVector::weights() const {
  std::set<int> ws;
  for (const auto& [a, c] : terms) ws.insert(weight(a));
  return {ws.begin(), ws.end()};
}

bool operator==(const QSymVector& u, const QSymVector& v) {
  return u.basis == v.basis && u.terms == v.terms;
}

QSymVector operator+(QSymVector u, const QSymVector& v) {
  u.add_scaled(v, Rational(1));
  return u;
}

QSymVector operator-(QSymVector u, const QSymVector& v) {
  u.add_scaled(v, Rational(-1));
  return u;
}

QSymVector operator*(const Rational& c, QSymVector u) {
  if (sgn(c) == 0) return QSymVector(u.basis);
  for (auto& [a, ca] : u.terms) ca *= c;
  return u;
}

Rational counit(const QSymVector& u) {
  return u.coefficient({});
}

void TensorVector::add_term(const Composition& a, const Composition& b, const Rational& c) {
  if (sgn(c) == 0) return;
  auto key = std::make_pair(a, b);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

Rational TensorVector::coefficient(const Composition& a, const Composition& b) const {
  auto it = terms.find(std::make_pair(a, b));
  return it == terms.end() ? Rational(0) : it->second;
}

bool operator==(const TensorVector& u, const TensorVector& v) {
  return u.left == v.left && u.right == v.right && u.terms == v.terms;
}

TensorVector operator+(TensorVector u, const TensorVector& v) {
  if (u.left != v.left || u.right != v.right)
    throw std::invalid_argument("tensor sum: basis mismatch");
  for (const auto& [k, c] : v.terms) u.add_term(k.first, k.second, c);
  return u;
}

TensorVector operator-(TensorVector u, const TensorVector& v) {
  if (u.left != v.left || u.right != v.right)
    throw std::invalid_argument("tensor difference: basis mismatch");
  for (const auto& [k, c] : v.terms) u.add_term(k.first, k.second, -c);
  return u;
}

}  // namespace qsym
