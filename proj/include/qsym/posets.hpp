#pragma once

// Four graded partial orders on compositions, each generated by an explicit
// cover rule; Hasse diagram extraction and down-set comparison utilities.

#include <string>
#include <utility>
#include <vector>

#include "qsym/composition.hpp"

namespace qsym {

enum class OrderTag { C, M, F, Q };

std::string order_name(OrderTag t);
OrderTag order_from_name(const std::string& name);

// Covers lie one weight above (below); results are sorted and duplicate-free.
std::vector<Composition> up_covers(OrderTag order, const Composition& a);
std::vector<Composition> down_covers(OrderTag order, const Composition& b);

// Graded reachability b from a through covers.  Weight gaps larger than
// max_gap are rejected to keep the search bounded.
bool leq(OrderTag order, const Composition& a, const Composition& b, int max_gap = 16);

struct HasseDiagram {
  OrderTag order = OrderTag::C;
  int max_weight = 0;
  std::vector<Composition> nodes;                            // weights 1..max_weight
  std::vector<std::pair<Composition, Composition>> edges;    // lower, upper
};

HasseDiagram hasse(OrderTag order, int max_weight);

// Unordered pairs {a, b} of distinct compositions of n with identical
// down-cover sets, each pair sorted, the list sorted by its smaller member.
std::vector<std::pair<Composition, Composition>> equal_down_set_pairs(OrderTag order, int n);

// Closed forms for which pairs coincide, one per order where a classification
// exists.  Both predicates are symmetric in their arguments.
bool q_classification_predicate(const Composition& a, const Composition& b);
bool c_classification_predicate(const Composition& a, const Composition& b);

}  // namespace qsym
