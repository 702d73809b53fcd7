#pragma once

// Linear maps induced by relabeling the F basis: reversal, complement, and
// their composite; property checkers that hunt for minimal counterexamples.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsym/composition.hpp"
#include "qsym/vector.hpp"

namespace qsym {

enum class MapTag { identity, rho, psi, omega };

std::string map_name(MapTag t);
MapTag map_from_name(const std::string& name);

// The relabeling each tagged map applies to F-basis labels.
Composition map_action(MapTag t, const Composition& a);

// Any label relabeling, extended linearly through the F basis.
using LabelMap = std::function<Composition(const Composition&)>;

// Applies the relabeling to a vector in any basis by routing through F.
QSymVector apply_label_map(const LabelMap& f, const QSymVector& u);
QSymVector apply_map(MapTag t, const QSymVector& u);

struct MorphismCheck {
  bool pass = true;
  // First failure in the scan order, as text: for products the pair of
  // factor labels, for coproducts the single label.
  std::vector<std::string> witnesses;
};

// Compares map(uv) with map(u)map(v) over all pairs of basis elements with
// total weight up to the bound, in order of (total weight, labels).
MorphismCheck check_algebra_morphism(const LabelMap& f, int bound);

// Compares the two routes around the coproduct square, and the counit,
// over all basis elements of weight up to the bound.
MorphismCheck check_coalgebra_morphism(const LabelMap& f, int bound);

// For each label of weight 1..bound: the label the mapped basis element
// lands on when the image is again a signed basis element, or nothing.
std::map<Composition, std::optional<Composition>>
basis_preservation_table(MapTag t, Basis basis, int bound);

// True when the map sends every basis element of the given basis (up to the
// bound) to plus or minus a single basis element.
bool preserves_basis(MapTag t, Basis basis, int bound,
                     std::optional<Composition>* first_failure = nullptr);

}  // namespace qsym
