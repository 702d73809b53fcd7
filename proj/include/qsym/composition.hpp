#pragma once

// Compositions of nonnegative integers: subset encoding, involutions,
// refinement, concatenations and their splits, enumeration, text format.

#include <string>
#include <utility>
#include <vector>

namespace qsym {

// A composition is a finite list of positive parts; the empty list is the
// unique composition of 0.  Plain vectors, compared lexicographically.
using Composition = std::vector<int>;
using Partition = std::vector<int>;  // weakly decreasing positive parts

int weight(const Composition& a);
inline int length(const Composition& a) { return static_cast<int>(a.size()); }
bool is_valid_composition(const Composition& a);

// Subset of [1, n-1] encoding a composition of n via partial sums.
struct DescentSet {
  int n = 0;
  std::vector<int> elems;  // strictly increasing, each in [1, n-1]
  friend bool operator==(const DescentSet&, const DescentSet&) = default;
};

DescentSet set_of(const Composition& a);
Composition comp_of(const DescentSet& s);

Composition reversal(Composition a);
Composition complement(const Composition& a);  // subset complement of set_of
Composition transpose(const Composition& a);   // reversal of complement

// a refines b: b is obtained by summing adjacent parts of a (same weight).
bool refines(const Composition& a, const Composition& b);

Composition concat(const Composition& a, const Composition& b);
// Joins a and b while fusing the last part of a with the first part of b.
// Both operands must be nonempty.
Composition near_concat(const Composition& a, const Composition& b);

Partition underlying_partition(Composition a);

// All 2^(n-1) compositions of n in lexicographic order; {()} for n = 0.
// The returned reference stays valid for the lifetime of the program.
const std::vector<Composition>& compositions_of(int n);

// Every way of writing d as concat(a, b) or near_concat(a, b).
struct ConcatSplits {
  std::vector<std::pair<Composition, Composition>> concat;       // includes empty factors
  std::vector<std::pair<Composition, Composition>> near_concat;  // both factors nonempty
};
ConcatSplits set_concat_split(const Composition& d);

std::string to_text(const Composition& a);  // "1,3,2"; "" for the empty composition
Composition composition_from_text(const std::string& s);

}  // namespace qsym
