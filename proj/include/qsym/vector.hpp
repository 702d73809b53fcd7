#pragma once

// Sparse vectors over the rationals, indexed by compositions, tagged with the
// basis they are expressed in; plus two-fold tensors of the same shape.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsym/composition.hpp"
#include "qsym/scalar.hpp"

namespace qsym {

enum class Basis { M, F, S };

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& name);

struct QSymVector {
  Basis basis = Basis::M;
  std::map<Composition, Rational> terms;  // zero coefficients never stored

  QSymVector() = default;
  explicit QSymVector(Basis b) : basis(b) {}

  static QSymVector unit(Basis b);  // the basis element of the empty composition
  static QSymVector basis_element(Basis b, const Composition& a, const Rational& c = Rational(1));

  void add_term(const Composition& a, const Rational& c);
  void add_scaled(const QSymVector& other, const Rational& c);  // bases must agree
  Rational coefficient(const Composition& a) const;
  QSymVector graded_component(int w) const;
  std::vector<int> weights() const;  // sorted distinct weights of present terms
  bool is_zero() const { return terms.empty(); }
};

bool operator==(const QSymVector& u, const QSymVector& v);
inline bool operator!=(const QSymVector& u, const QSymVector& v) { return !(u == v); }
QSymVector operator+(QSymVector u, const QSymVector& v);
QSymVector operator-(QSymVector u, const QSymVector& v);
QSymVector operator*(const Rational& c, QSymVector u);

// Coefficient of the empty composition.
Rational counit(const QSymVector& u);

struct TensorVector {
  Basis left = Basis::M;
  Basis right = Basis::M;
  std::map<std::pair<Composition, Composition>, Rational> terms;

  TensorVector() = default;
  TensorVector(Basis l, Basis r) : left(l), right(r) {}

  void add_term(const Composition& a, const Composition& b, const Rational& c);
  Rational coefficient(const Composition& a, const Composition& b) const;
  bool is_zero() const { return terms.empty(); }
};

bool operator==(const TensorVector& u, const TensorVector& v);
inline bool operator!=(const TensorVector& u, const TensorVector& v) { return !(u == v); }
TensorVector operator+(TensorVector u, const TensorVector& v);
TensorVector operator-(TensorVector u, const TensorVector& v);

}  // namespace qsym
