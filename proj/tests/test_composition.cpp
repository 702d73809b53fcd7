#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qsym/composition.hpp"

using namespace qsym;

namespace {
Composition C(std::initializer_list<int> parts) { return Composition(parts); }
}  // namespace

TEST_CASE("weight, length, validity") {
  CHECK(weight({}) == 0);
  CHECK(weight(C({1, 3, 2})) == 6);
  CHECK(length(C({1, 3, 2})) == 3);
  CHECK(length({}) == 0);
  CHECK(is_valid_composition({}));
  CHECK(is_valid_composition(C({5})));
  CHECK_FALSE(is_valid_composition(C({1, 0, 2})));
  CHECK_FALSE(is_valid_composition(C({-1})));
}

TEST_CASE("descent set bijection") {
  DescentSet s = set_of(C({1, 3, 2}));
  CHECK(s.n == 6);
  CHECK(s.elems == std::vector<int>{1, 4});
  CHECK(comp_of(s) == C({1, 3, 2}));

  DescentSet empty = set_of({});
  CHECK(empty.n == 0);
  CHECK(empty.elems.empty());
  CHECK(comp_of(empty).empty());

  DescentSet row = set_of(C({3}));
  CHECK(row.n == 3);
  CHECK(row.elems.empty());

  CHECK(comp_of({4, {1, 3}}) == C({1, 2, 1}));
  CHECK_THROWS_AS(comp_of({4, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(comp_of({4, {4}}), std::invalid_argument);
  CHECK_THROWS_AS(comp_of({4, {3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(comp_of({4, {2, 2}}), std::invalid_argument);
}

TEST_CASE("reversal, complement, transpose on pinned values") {
  CHECK(reversal(C({1, 3, 2})) == C({2, 3, 1}));
  CHECK(reversal({}).empty());

  CHECK(complement(C({1, 3, 2})) == C({2, 1, 2, 1}));
  CHECK(complement(C({1, 2})) == C({2, 1}));
  CHECK(complement(C({4})) == C({1, 1, 1, 1}));
  CHECK(complement(C({1, 1, 1})) == C({3}));
  CHECK(complement({}).empty());

  CHECK(transpose(C({1, 3, 2})) == C({1, 2, 1, 2}));
  CHECK(transpose({}).empty());
}

TEST_CASE("involution laws up to weight 7") {
  for (int n = 0; n <= 7; ++n)
    for (const Composition& a : compositions_of(n)) {
      CHECK(reversal(reversal(a)) == a);
      CHECK(complement(complement(a)) == a);
      CHECK(transpose(transpose(a)) == a);
      CHECK(transpose(a) == reversal(complement(a)));
      CHECK(transpose(a) == complement(reversal(a)));
    }
}

TEST_CASE("refinement") {
  CHECK(refines(C({1, 1, 2}), C({2, 2})));
  CHECK_FALSE(refines(C({2, 2}), C({1, 1, 2})));
  CHECK(refines(C({2, 2}), C({2, 2})));
  CHECK(refines(C({1, 1, 1, 1}), C({4})));
  CHECK_FALSE(refines(C({1, 1, 1}), C({2, 2})));  // weights differ
  CHECK(refines({}, {}));
}

TEST_CASE("concatenation and near concatenation") {
  CHECK(concat(C({1, 2}), C({2})) == C({1, 2, 2}));
  CHECK(concat({}, C({3})) == C({3}));
  CHECK(near_concat(C({1, 2}), C({2})) == C({1, 4}));
  CHECK(near_concat(C({1}), C({1})) == C({2}));
  CHECK_THROWS_AS(near_concat({}, C({1})), std::invalid_argument);
  CHECK_THROWS_AS(near_concat(C({1}), {}), std::invalid_argument);

  // descent set of a concatenation: left descents, the split point, shifted
  // right descents
  Composition a = C({2, 1}), b = C({1, 3});
  DescentSet s = set_of(concat(a, b));
  CHECK(s.elems == std::vector<int>{2, 3, 4});
}

TEST_CASE("complement exchanges the two concatenations") {
  for (int wa = 1; wa <= 3; ++wa)
    for (int wb = 1; wb <= 3; ++wb)
      for (const Composition& a : compositions_of(wa))
        for (const Composition& b : compositions_of(wb)) {
          CHECK(complement(concat(a, b)) == near_concat(complement(a), complement(b)));
          CHECK(complement(near_concat(a, b)) == concat(complement(a), complement(b)));
        }
}

TEST_CASE("underlying partition") {
  CHECK(underlying_partition(C({1, 3, 2})) == C({3, 2, 1}));
  CHECK(underlying_partition({}).empty());
}

TEST_CASE("compositions_of enumeration") {
  CHECK(compositions_of(0) == std::vector<Composition>{{}});
  CHECK(compositions_of(1) == std::vector<Composition>{C({1})});
  CHECK(compositions_of(3) ==
        std::vector<Composition>{C({1, 1, 1}), C({1, 2}), C({2, 1}), C({3})});
  for (int n = 0; n <= 8; ++n) {
    const auto& all = compositions_of(n);
    CHECK(all.size() == (n == 0 ? 1u : (1u << (n - 1))));
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (const Composition& a : all) CHECK(weight(a) == n);
  }
  CHECK_THROWS_AS(compositions_of(-1), std::invalid_argument);
}

TEST_CASE("concatenation splits") {
  ConcatSplits s2 = set_concat_split(C({2}));
  CHECK(s2.concat == std::vector<std::pair<Composition, Composition>>{
                         {{}, C({2})}, {C({2}), {}}});
  CHECK(s2.near_concat ==
        std::vector<std::pair<Composition, Composition>>{{C({1}), C({1})}});

  ConcatSplits s12 = set_concat_split(C({1, 2}));
  CHECK(s12.concat == std::vector<std::pair<Composition, Composition>>{
                          {{}, C({1, 2})}, {C({1}), C({2})}, {C({1, 2}), {}}});
  CHECK(s12.near_concat ==
        std::vector<std::pair<Composition, Composition>>{{C({1, 1}), C({1})}});

  ConcatSplits s0 = set_concat_split({});
  CHECK(s0.concat ==
        std::vector<std::pair<Composition, Composition>>{{{}, {}}});
  CHECK(s0.near_concat.empty());

  // splits invert the two concatenations
  for (int n = 1; n <= 6; ++n)
    for (const Composition& d : compositions_of(n)) {
      ConcatSplits s = set_concat_split(d);
      for (const auto& [l, r] : s.concat) CHECK(concat(l, r) == d);
      for (const auto& [l, r] : s.near_concat) CHECK(near_concat(l, r) == d);
      CHECK(s.concat.size() == size_t(length(d)) + 1);
      CHECK(s.near_concat.size() == size_t(weight(d) - length(d)));
    }
}

TEST_CASE("text round trips") {
  CHECK(to_text(C({1, 3, 2})) == "1,3,2");
  CHECK(to_text({}) == "");
  CHECK(composition_from_text("1,3,2") == C({1, 3, 2}));
  CHECK(composition_from_text("").empty());
  CHECK(composition_from_text("12") == C({12}));
  for (int n = 0; n <= 6; ++n)
    for (const Composition& a : compositions_of(n))
      CHECK(composition_from_text(to_text(a)) == a);
  CHECK_THROWS_AS(composition_from_text("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(composition_from_text("a"), std::invalid_argument);
  CHECK_THROWS_AS(composition_from_text("0"), std::invalid_argument);
  CHECK_THROWS_AS(composition_from_text("1, 2"), std::invalid_argument);
  CHECK_THROWS_AS(composition_from_text("-1"), std::invalid_argument);
  CHECK_THROWS_AS(composition_from_text("1,2,"), std::invalid_argument);
  CHECK_THROWS_AS(composition_from_text(",1"), std::invalid_argument);
}
