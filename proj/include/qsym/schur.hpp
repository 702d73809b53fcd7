#pragma once

// The third basis: tableau combinatorics on composition shapes, expansion
// into the monomial basis, exact base change, products, coproducts, and the
// row/column removal operators with their strip-driven product rules.

#include <optional>
#include <utility>
#include <vector>

#include "qsym/composition.hpp"
#include "qsym/scalar.hpp"
#include "qsym/vector.hpp"

namespace qsym {

// Composition shape with an optional inner shape removed.  Row r of the outer
// shape has outer[r] cells in columns 1..outer[r]; the inner shape occupies
// the last inner.size() rows, as a prefix of each such row.  Rows are indexed
// from 1 at the top.  Construction checks that the inner composition sits
// below the outer one in the C order.
struct SkewReverseShape {
  Composition outer;
  Composition inner;

  int rows() const { return static_cast<int>(outer.size()); }
  int inner_in_row(int r) const;               // cells of inner shape in row r
  bool is_cell(int r, int c) const;            // cell of the outer shape
  bool is_inner(int r, int c) const;           // cell of the inner shape
  bool is_skew_cell(int r, int c) const;       // cell of outer minus inner
  int cell_count() const;                      // number of skew cells
};

SkewReverseShape make_skew_shape(const Composition& outer, const Composition& inner);

// Tableau on a skew reverse shape: rows holds the entries of the skew cells
// of each row, left to right.
struct Ssrct {
  SkewReverseShape shape;
  std::vector<std::vector<int>> rows;

  int entry(int r, int c) const;  // entry at a skew cell
};

Ssrct make_ssrct(SkewReverseShape shape, std::vector<std::vector<int>> rows);

// The three defining conditions: rows weakly decrease left to right; the
// skew cells of column 1 strictly increase top to bottom; and the triple
// condition across pairs of rows.
bool is_valid_ssrct(const Ssrct& t);

// Multiplicity vector of entries 1..max: content[i-1] counts entries i.
std::vector<int> ssrct_content(const Ssrct& t, int max_entry);

// All valid tableaux on the shape with entries in 1..max_entry, in a fixed
// deterministic order.
std::vector<Ssrct> enumerate_ssrct(const SkewReverseShape& shape, int max_entry);

// Expansion of the S basis element of a into the M basis: the coefficient of
// M_g counts tableaux of straight shape a whose content is exactly g.
QSymVector schur_to_m(const Composition& a);

// Exact base-change data for one graded component.
struct BasisMatrix {
  int n = 0;
  std::vector<Composition> comps;            // compositions_of(n), lexicographic
  std::vector<std::vector<Rational>> s_over_m;  // row i: schur_to_m of comps[i]
  std::vector<std::vector<Rational>> m_over_s;  // inverse of s_over_m
  Rational det;
};

const BasisMatrix& basis_matrix(int n);
Rational basis_matrix_det(int n);

// Largest graded component the base change will compute; guards runaway input.
int basis_weight_cap();
void set_basis_weight_cap(int cap);

// Optional on-disk cache for basis matrices ("" disables).
void set_basis_cache_dir(const std::string& dir);
std::string basis_cache_dir();

QSymVector m_to_s(const QSymVector& u);
QSymVector s_to_m(const QSymVector& u);

QSymVector s_product(const QSymVector& u, const QSymVector& v);
TensorVector s_coproduct(const QSymVector& u);

// Coefficient of S_a x S_b in the coproduct of S_g.
Rational lr_coefficient(const Composition& a, const Composition& b, const Composition& g);

// Subtracts 1 from the rightmost part equal to s, dropping the part if it
// reaches zero; disengaged when no part equals s.
std::optional<Composition> rem(const Composition& a, int s);

// Iterated removal: row_op takes distinct sizes and applies rem largest
// first; col_op takes weakly increasing sizes and applies rem smallest first.
std::optional<Composition> row_op(const Composition& a, const std::vector<int>& sizes);
std::optional<Composition> col_op(const Composition& a, const std::vector<int>& sizes);

// Partition skew shapes (inner inside outer, rows top-aligned) and the two
// strip predicates used by the product rules.
bool partition_contains(const Partition& outer, const Partition& inner);
bool is_horizontal_strip(const Partition& outer, const Partition& inner);  // no two cells share a column
bool is_vertical_strip(const Partition& outer, const Partition& inner);    // no two cells share a row
std::vector<int> strip_columns(const Partition& outer, const Partition& inner);          // set, increasing
std::vector<int> strip_column_multiset(const Partition& outer, const Partition& inner);  // weakly increasing

// Vertical strip test for a composition skew shape.
bool is_vertical_strip_skew(const SkewReverseShape& shape);

// Product of the S basis element of a by a single row (n) or column (1^n),
// expanded in the S basis via strips and the removal operators.
QSymVector pieri_row(int n, const Composition& a);
QSymVector pieri_col(int n, const Composition& a);

// Membership test for the family of labels whose S and F elements coincide.
bool s_equals_f_form(const Composition& a);

}  // namespace qsym
