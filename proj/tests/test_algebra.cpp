#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "qsym/algebra.hpp"

using namespace qsym;

namespace {

Composition C(std::initializer_list<int> parts) { return Composition(parts); }

QSymVector M(std::initializer_list<int> parts) {
  return QSymVector::basis_element(Basis::M, Composition(parts));
}
QSymVector F(std::initializer_list<int> parts) {
  return QSymVector::basis_element(Basis::F, Composition(parts));
}

QSymVector m_terms(std::initializer_list<std::pair<Composition, int>> terms) {
  QSymVector out(Basis::M);
  for (const auto& [a, c] : terms) out.add_term(a, Rational(c));
  return out;
}

}  // namespace

TEST_CASE("quasi shuffle pinned tables") {
  using Map = std::map<Composition, Integer>;
  CHECK(quasi_shuffle(C({1}), C({1})) == Map{{C({1, 1}), 2}, {C({2}), 1}});
  CHECK(quasi_shuffle(C({1}), C({1, 1})) ==
        Map{{C({1, 1, 1}), 3}, {C({1, 2}), 1}, {C({2, 1}), 1}});
  CHECK(quasi_shuffle(C({1}), C({2})) ==
        Map{{C({1, 2}), 1}, {C({2, 1}), 1}, {C({3}), 1}});
  CHECK(quasi_shuffle(C({2}), C({2})) == Map{{C({2, 2}), 2}, {C({4}), 1}});
  CHECK(quasi_shuffle(C({2}), C({1, 1})) ==
        Map{{C({2, 1, 1}), 1}, {C({1, 2, 1}), 1}, {C({1, 1, 2}), 1},
            {C({1, 3}), 1}, {C({3, 1}), 1}});
  CHECK(quasi_shuffle(C({1, 1}), C({1, 1})) ==
        Map{{C({1, 1, 1, 1}), 6}, {C({1, 1, 2}), 2}, {C({1, 2, 1}), 2},
            {C({2, 1, 1}), 2}, {C({2, 2}), 1}});
  CHECK(quasi_shuffle(C({1, 3, 2}), C({2})) ==
        Map{{C({1, 3, 2, 2}), 2}, {C({1, 2, 3, 2}), 1}, {C({2, 1, 3, 2}), 1},
            {C({1, 3, 4}), 1}, {C({1, 5, 2}), 1}, {C({3, 3, 2}), 1}});
  CHECK(quasi_shuffle({}, C({2, 1})) == Map{{C({2, 1}), 1}});
  CHECK(quasi_shuffle({}, {}) == Map{{{}, 1}});
  CHECK_THROWS_AS(quasi_shuffle(C({0}), C({1})), std::invalid_argument);
}

TEST_CASE("quasi shuffle totals, weights, and positivity") {
  auto factorial = [](int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  for (int wa = 0; wa <= 5; ++wa)
    for (int wb = 0; wb + wa <= 8; ++wb)
      for (const Composition& a : compositions_of(wa))
        for (const Composition& b : compositions_of(wb)) {
          Integer total = 0;
          for (const auto& [d, c] : quasi_shuffle(a, b)) {
            CHECK(weight(d) == wa + wb);
            CHECK(c > 0);
            total += c;
          }
          // the number of shuffle words with k coincidences is
          // (p+q-k)! / (k! (p-k)! (q-k)!)
          int p = length(a), q = length(b);
          long long expected = 0;
          for (int k = 0; k <= std::min(p, q); ++k)
            expected += factorial(p + q - k) /
                        (factorial(k) * factorial(p - k) * factorial(q - k));
          CHECK(total == Integer(static_cast<long>(expected)));
        }
}

TEST_CASE("m_product matches the golden example and is commutative") {
  QSymVector p = m_product(M({1, 3, 2}), M({2}));
  CHECK(p == m_terms({{C({1, 3, 2, 2}), 2},
                      {C({1, 2, 3, 2}), 1},
                      {C({2, 1, 3, 2}), 1},
                      {C({1, 3, 4}), 1},
                      {C({1, 5, 2}), 1},
                      {C({3, 3, 2}), 1}}));
  CHECK(p == m_product(M({2}), M({1, 3, 2})));
  CHECK(m_product(QSymVector::unit(Basis::M), M({1, 3, 2})) == M({1, 3, 2}));

  for (int wa = 1; wa <= 4; ++wa)
    for (const Composition& a : compositions_of(wa))
      for (const Composition& b : compositions_of(5 - wa))
        CHECK(m_product(QSymVector::basis_element(Basis::M, a),
                        QSymVector::basis_element(Basis::M, b)) ==
              m_product(QSymVector::basis_element(Basis::M, b),
                        QSymVector::basis_element(Basis::M, a)));

  CHECK_THROWS_AS(m_product(M({1}), F({1})), std::invalid_argument);
}

TEST_CASE("refinements") {
  auto as_set = [](const std::vector<Composition>& v) {
    return std::set<Composition>(v.begin(), v.end());
  };
  CHECK(as_set(refinements(C({2, 2}))) ==
        std::set<Composition>{C({2, 2}), C({2, 1, 1}), C({1, 1, 2}),
                              C({1, 1, 1, 1})});
  CHECK(as_set(refinements(C({3}))) ==
        std::set<Composition>{C({3}), C({2, 1}), C({1, 2}), C({1, 1, 1})});
  CHECK(refinements({}) == std::vector<Composition>{{}});
  CHECK(refinements(C({1, 1})) == std::vector<Composition>{C({1, 1})});
  for (int n = 1; n <= 7; ++n)
    for (const Composition& a : compositions_of(n))
      for (const Composition& b : refinements(a)) CHECK(refines(b, a));
}

TEST_CASE("base change between M and F") {
  CHECK(f_to_m(F({2, 1})) == m_terms({{C({2, 1}), 1}, {C({1, 1, 1}), 1}}));
  CHECK(f_to_m(F({2})) == m_terms({{C({2}), 1}, {C({1, 1}), 1}}));

  QSymVector m21 = m_to_f(M({2, 1}));
  CHECK(m21.basis == Basis::F);
  CHECK(m21.coefficient(C({2, 1})) == Rational(1));
  CHECK(m21.coefficient(C({1, 1, 1})) == Rational(-1));

  for (int n = 0; n <= 7; ++n)
    for (const Composition& a : compositions_of(n)) {
      CHECK(m_to_f(f_to_m(QSymVector::basis_element(Basis::F, a))) ==
            QSymVector::basis_element(Basis::F, a));
      CHECK(f_to_m(m_to_f(QSymVector::basis_element(Basis::M, a))) ==
            QSymVector::basis_element(Basis::M, a));
    }
}

TEST_CASE("f_product golden example") {
  QSymVector p = f_product(F({1}), F({2}));
  QSymVector expected = F({1, 2}) + F({2, 1}) + F({3});
  CHECK(p == expected);
  CHECK(p.coefficient(C({1, 1, 1})) == Rational(0));
  CHECK(f_product(QSymVector::unit(Basis::F), F({3})) == F({3}));
}

TEST_CASE("coproduct pinned values") {
  TensorVector dm = coproduct(M({1, 2}));
  TensorVector dm_expected(Basis::M, Basis::M);
  dm_expected.add_term({}, C({1, 2}), Rational(1));
  dm_expected.add_term(C({1}), C({2}), Rational(1));
  dm_expected.add_term(C({1, 2}), {}, Rational(1));
  CHECK(dm == dm_expected);

  TensorVector df = coproduct(F({2}));
  TensorVector df_expected(Basis::F, Basis::F);
  df_expected.add_term({}, C({2}), Rational(1));
  df_expected.add_term(C({1}), C({1}), Rational(1));
  df_expected.add_term(C({2}), {}, Rational(1));
  CHECK(df == df_expected);

  TensorVector du = coproduct(QSymVector::unit(Basis::M));
  CHECK(du.coefficient({}, {}) == Rational(1));
  CHECK(du.terms.size() == 1);

  CHECK_THROWS_AS(coproduct(QSymVector::basis_element(Basis::S, C({2}))),
                  std::invalid_argument);
}

TEST_CASE("counit laws") {
  for (int n = 0; n <= 5; ++n)
    for (const Composition& a : compositions_of(n))
      for (Basis b : {Basis::M, Basis::F}) {
        QSymVector u = QSymVector::basis_element(b, a);
        TensorVector d = coproduct(u);
        QSymVector left(b), right(b);
        for (const auto& [k, c] : d.terms) {
          if (k.first.empty()) left.add_term(k.second, c);
          if (k.second.empty()) right.add_term(k.first, c);
        }
        CHECK(left == u);
        CHECK(right == u);
      }
}

TEST_CASE("coassociativity in both bases") {
  for (int n = 0; n <= 4; ++n)
    for (const Composition& a : compositions_of(n))
      for (Basis b : {Basis::M, Basis::F}) {
        QSymVector u = QSymVector::basis_element(b, a);
        CoproductFn delta = [](const QSymVector& x) { return coproduct(x); };
        CHECK(coproduct_then_left(u, delta) == coproduct_then_right(u, delta));
      }
}

TEST_CASE("the coproduct is multiplicative") {
  for (Basis b : {Basis::M, Basis::F})
    for (int wa = 1; wa <= 3; ++wa)
      for (const Composition& a : compositions_of(wa))
        for (const Composition& c : compositions_of(4 - wa)) {
          QSymVector u = QSymVector::basis_element(b, a);
          QSymVector v = QSymVector::basis_element(b, c);
          QSymVector uv = b == Basis::M ? m_product(u, v) : f_product(u, v);
          CHECK(coproduct(uv) == tensor_multiply(coproduct(u), coproduct(v)));
        }
}
