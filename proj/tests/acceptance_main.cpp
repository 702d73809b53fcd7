// Acceptance runner: one pass/fail line per criterion, each with a wall-clock
// budget.  Exits nonzero when any criterion fails or overruns its budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qsym/algebra.hpp"
#include "qsym/composition.hpp"
#include "qsym/io.hpp"
#include "qsym/morphisms.hpp"
#include "qsym/posets.hpp"
#include "qsym/rigidity.hpp"
#include "qsym/schur.hpp"
#include "qsym/vector.hpp"

using namespace qsym;

namespace {

Composition C(std::initializer_list<int> parts) { return Composition(parts); }

QSymVector M(std::initializer_list<int> parts) {
  return QSymVector::basis_element(Basis::M, Composition(parts));
}

QSymVector F(std::initializer_list<int> parts) {
  return QSymVector::basis_element(Basis::F, Composition(parts));
}

QSymVector S(std::initializer_list<int> parts) {
  return QSymVector::basis_element(Basis::S, Composition(parts));
}

QSymVector terms(Basis b, std::initializer_list<std::pair<Composition, int>> list) {
  QSymVector out(b);
  for (const auto& [a, c] : list) out.add_term(a, Rational(c));
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

void require_check(const std::string& id, int bound) {
  CheckResult r = run_check(id, bound);
  require(r.pass, id + " failed at bound " + std::to_string(bound) + ": " + r.details);
}

struct Criterion {
  int number;
  std::string label;
  double budget_seconds;
  std::function<void()> body;
};

void golden_examples() {
  require(complement(C({1, 3, 2})) == C({2, 1, 2, 1}), "complement of (1,3,2)");
  require(transpose(C({1, 3, 2})) == C({1, 2, 1, 2}), "transpose of (1,3,2)");
  require(reversal(C({1, 3, 2})) == C({2, 3, 1}), "reversal of (1,3,2)");
  require(comp_of(set_of(C({1, 3, 2}))) == C({1, 3, 2}), "descent set round trip");

  require(m_product(M({1, 3, 2}), M({2})) ==
              terms(Basis::M, {{C({3, 3, 2}), 1},
                               {C({2, 1, 3, 2}), 1},
                               {C({1, 5, 2}), 1},
                               {C({1, 3, 4}), 1},
                               {C({1, 3, 2, 2}), 2},
                               {C({1, 2, 3, 2}), 1}}),
          "overlapping shuffle product of M[1,3,2] and M[2]");
  require(m_product(M({1}), M({1})) == terms(Basis::M, {{C({1, 1}), 2}, {C({2}), 1}}),
          "product M[1]*M[1]");
  require(m_product(M({2}), M({1, 1})) ==
              terms(Basis::M, {{C({2, 1, 1}), 1},
                               {C({1, 2, 1}), 1},
                               {C({1, 1, 2}), 1},
                               {C({1, 3}), 1},
                               {C({3, 1}), 1}}),
          "product M[2]*M[1,1]");
  require(f_product(F({1}), F({2})) ==
              terms(Basis::F, {{C({1, 2}), 1}, {C({2, 1}), 1}, {C({3}), 1}}),
          "product F[1]*F[2]");

  {
    TensorVector d(Basis::F, Basis::F);
    d.add_term({}, C({2}), Rational(1));
    d.add_term(C({1}), C({1}), Rational(1));
    d.add_term(C({2}), {}, Rational(1));
    require(coproduct(F({2})) == d, "coproduct of F[2]");
  }
  {
    TensorVector d(Basis::M, Basis::M);
    d.add_term({}, C({1, 2}), Rational(1));
    d.add_term(C({1}), C({2}), Rational(1));
    d.add_term(C({1, 2}), {}, Rational(1));
    require(coproduct(M({1, 2})) == d, "coproduct of M[1,2]");
  }

  require(s_to_m(S({2})) == terms(Basis::M, {{C({2}), 1}, {C({1, 1}), 1}}),
          "expansion of S[2]");
  require(s_to_m(S({2, 1})) == terms(Basis::M, {{C({2, 1}), 1}, {C({1, 1, 1}), 1}}),
          "expansion of S[2,1]");
  require(s_to_m(S({2, 2})) == terms(Basis::M, {{C({2, 2}), 1},
                                                {C({2, 1, 1}), 1},
                                                {C({1, 2, 1}), 1},
                                                {C({1, 1, 2}), 1},
                                                {C({1, 1, 1, 1}), 2}}),
          "expansion of S[2,2]");
  require(s_to_m(S({1, 3})) == terms(Basis::M, {{C({1, 3}), 1},
                                                {C({2, 2}), 1},
                                                {C({1, 1, 2}), 2},
                                                {C({1, 2, 1}), 1},
                                                {C({2, 1, 1}), 1},
                                                {C({1, 1, 1, 1}), 2}}),
          "expansion of S[1,3]");
  require(m_to_s(M({2})) == S({2}) - S({1, 1}), "change of basis for M[2]");
  require(s_product(S({2}), S({1})) ==
              terms(Basis::S, {{C({3}), 1}, {C({2, 1}), 1}, {C({1, 2}), 1}}),
          "product S[2]*S[1]");

  require(row_op(C({1, 2, 3}), {2, 3}) == Composition{1, 2, 1}, "row removal on (1,2,3)");
  require(col_op(C({1, 2, 3}), {2, 3}) == Composition{1, 1, 2}, "column removal on (1,2,3)");
  require(col_op(C({2, 2}), {2, 2}) == Composition{1, 1}, "column removal on (2,2)");
  require(rem(C({1, 2, 2}), 2) == Composition{1, 2, 1}, "cell removal on (1,2,2)");

  {
    SkewReverseShape shape = make_skew_shape(C({3, 4, 2, 3}), C({1, 2}));
    Ssrct bad = make_ssrct(shape, {{4, 3, 1}, {5, 4, 4, 3}, {6}, {7}});
    require(!is_valid_ssrct(bad), "rejected filling of (3,4,2,3) over (1,2)");
    require(ssrct_content(bad, 7) == std::vector<int>{1, 0, 2, 3, 1, 1, 1},
            "content of the rejected filling");
    Ssrct good = make_ssrct(shape, {{3, 3, 1}, {5, 4, 4, 3}, {6}, {7}});
    require(is_valid_ssrct(good), "accepted filling of (3,4,2,3) over (1,2)");
  }
  require(enumerate_ssrct(make_skew_shape(C({1, 2}), {}), 3).size() == 4,
          "tableau count for shape (1,2), entries up to 3");

  {
    std::vector<Composition> ups = up_covers(OrderTag::Q, C({2}));
    std::vector<Composition> expected = {C({1, 2}), C({2, 1}), C({3})};
    require(ups == expected, "upward covers of (2) in the fourth order");
  }
  {
    std::vector<Composition> ups = up_covers(OrderTag::C, C({2, 2}));
    std::vector<Composition> expected = {C({1, 2, 2}), C({3, 2})};
    require(ups == expected, "upward covers of (2,2) in the containment order");
  }

  require(pieri_row(2, C({2})) == terms(Basis::S, {{C({4}), 1},
                                                   {C({3, 1}), 1},
                                                   {C({2, 2}), 1},
                                                   {C({1, 3}), 1}}),
          "row rule for S[2]*S[2]");
  require(pieri_col(2, C({1, 1})) == terms(Basis::S, {{C({2, 2}), 1},
                                                      {C({2, 1, 1}), 1},
                                                      {C({1, 2, 1}), 1},
                                                      {C({1, 1, 2}), 1},
                                                      {C({1, 1, 1, 1}), 1}}),
          "column rule for S[1,1]*S[1,1]");

  require(apply_map(MapTag::psi, M({1, 1})) == M({2}) + M({1, 1}),
          "complement map on M[1,1]");
  require(apply_map(MapTag::rho, F({1, 2})) == F({2, 1}), "reversal map on F[1,2]");

  require(render_text(m_product(M({1, 3, 2}), M({2}))) ==
              "M[3,3,2] + M[2,1,3,2] + M[1,5,2] + M[1,3,4] + 2*M[1,3,2,2] + "
              "M[1,2,3,2]",
          "text rendering of the worked product");
}

void hasse_matches_reference() {
  std::size_t expected_sizes[] = {16, 21, 23, 24};
  OrderTag orders[] = {OrderTag::C, OrderTag::Q, OrderTag::M, OrderTag::F};
  for (int i = 0; i < 4; ++i) {
    const auto& ref = reference_hasse_edges(orders[i]);
    require(ref.size() == expected_sizes[i],
            std::string("reference edge count for order ") + order_name(orders[i]));
    std::set<std::pair<Composition, Composition>> expected(ref.begin(), ref.end());
    std::set<std::pair<Composition, Composition>> got;
    for (const auto& e : hasse(orders[i], 4).edges) got.insert(e);
    require(got == expected,
            std::string("generated diagram for order ") + order_name(orders[i]));
  }
}

void lr_coefficients() {
  require_check("lr_vertical_strip", 6);
  require(lr_coefficient(C({1}), C({3}), C({1, 3})) == Rational(1), "c[(1),(3)]^(1,3)");
  require(lr_coefficient(C({1}), C({1, 2}), C({1, 3})) == Rational(1), "c[(1),(1,2)]^(1,3)");
  require(lr_coefficient(C({1}), C({2, 1}), C({1, 3})) == Rational(0), "c[(1),(2,1)]^(1,3)");
  require(lr_coefficient(C({1}), C({1, 1, 1}), C({1, 3})) == Rational(0),
          "c[(1),(1,1,1)]^(1,3)");
  require(lr_coefficient(C({2}), C({2}), C({1, 3})) == Rational(1), "c[(2),(2)]^(1,3)");
  require(lr_coefficient({}, C({1, 3}), C({1, 3})) == Rational(1), "c[(),(1,3)]^(1,3)");
}

int run(const std::vector<Criterion>& criteria) {
  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double elapsed = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start).count();
    bool on_time = elapsed <= c.budget_seconds;
    bool pass = error.empty() && on_time;
    std::printf("%s criterion-%d %s (%.2fs, budget %.0fs)", pass ? "PASS" : "FAIL",
                c.number, c.label.c_str(), elapsed, c.budget_seconds);
    if (!error.empty()) std::printf(": %s", error.c_str());
    if (error.empty() && !on_time) std::printf(": over budget");
    std::printf("\n");
    if (!pass) ++failures;
  }
  if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures ? 1 : 0;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "golden-examples", 1, golden_examples},
      {2, "hasse-reference", 1, hasse_matches_reference},
      {3, "order-inclusions", 30, [] { require_check("order_inclusions", 9); }},
      {4, "downset-and-pair-classification", 120,
       [] {
         require_check("downset_rigidity_M", 9);
         require_check("downset_rigidity_F", 9);
         require_check("q_pair_classification", 10);
         require_check("c_pair_classification", 10);
       }},
      {5, "pieri-rules", 300, [] { require_check("pieri_consistency", 6); }},
      {6, "product-term-counts", 300, [] { require_check("product_term_counts", 3); }},
      {7, "s-equals-f-classification", 300, [] { require_check("s_equals_f", 7); }},
      {8, "lr-coefficients", 600, lr_coefficients},
      {9, "automorphism-suite", 300, [] { require_check("automorphism_suite", 7); }},
      {10, "complement-duality", 10, [] { require_check("complement_duality", 10); }},
      {11, "structural-laws", 600, [] { require_check("structural_laws", 8); }},
  };
  return run(criteria);
}
