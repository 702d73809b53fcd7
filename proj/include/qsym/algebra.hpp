#pragma once

// Graded Hopf structure in the M and F bases: quasi-shuffle product, the
// triangular change of basis between M and F, deconcatenation coproducts.

#include <array>
#include <functional>
#include <map>

#include "qsym/composition.hpp"
#include "qsym/scalar.hpp"
#include "qsym/vector.hpp"

namespace qsym {

// Product structure constants on monomial labels: the multiset of overlapping
// shuffles of a and b with multiplicity.  Results are memoized internally.
std::map<Composition, Integer> quasi_shuffle(const Composition& a, const Composition& b);

// All b that refine a, i.e. all b with refines(b, a).  Cached; the returned
// reference stays valid for the lifetime of the program.
const std::vector<Composition>& refinements(const Composition& a);

QSymVector m_product(const QSymVector& u, const QSymVector& v);
QSymVector f_product(const QSymVector& u, const QSymVector& v);

QSymVector f_to_m(const QSymVector& u);
QSymVector m_to_f(const QSymVector& u);

// Coproduct in the vector's own basis; accepts M and F input only.
TensorVector coproduct(const QSymVector& u);

// Componentwise product of tensors; legs must carry matching M or F bases.
TensorVector tensor_multiply(const TensorVector& u, const TensorVector& v);

// Three-fold expansions for coassociativity checks.
using TripleTerms = std::map<std::array<Composition, 3>, Rational>;
using CoproductFn = std::function<TensorVector(const QSymVector&)>;
TripleTerms coproduct_then_left(const QSymVector& u, const CoproductFn& delta);   // (delta x id) after delta
TripleTerms coproduct_then_right(const QSymVector& u, const CoproductFn& delta);  // (id x delta) after delta

}  // namespace qsym
