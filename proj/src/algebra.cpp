#include "qsym/algebra.hpp"

#include <mutex>
#include <stdexcept>

namespace qsym {

namespace {

using ShuffleMap = std::map<Composition, Integer>;

ShuffleMap quasi_shuffle_impl(const Composition& a, const Composition& b);

// Memo cache over suffix pairs.  Lookups and inserts hold the lock; the
// recursive computation runs unlocked, so a pair may occasionally be computed
// twice, after which one result wins the insert.
std::mutex shuffle_mu;
std::map<std::pair<Composition, Composition>, ShuffleMap> shuffle_cache;

// Cache nodes are never erased, so returned references stay valid.
const ShuffleMap& quasi_shuffle_cached(const Composition& a, const Composition& b) {
  auto key = std::make_pair(a, b);
  {
    std::lock_guard<std::mutex> lock(shuffle_mu);
    auto it = shuffle_cache.find(key);
    if (it != shuffle_cache.end()) return it->second;
  }
  ShuffleMap out = quasi_shuffle_impl(a, b);
  std::lock_guard<std::mutex> lock(shuffle_mu);
  return shuffle_cache.emplace(std::move(key), std::move(out)).first->second;
}

ShuffleMap quasi_shuffle_impl(const Composition& a, const Composition& b) {
  if (a.empty()) return {{b, Integer(1)}};
  if (b.empty()) return {{a, Integer(1)}};
  Composition ta(a.begin() + 1, a.end());
  Composition tb(b.begin() + 1, b.end());
  ShuffleMap out;
  auto absorb = [&out](int head, const ShuffleMap& rest) {
    for (const auto& [d, c] : rest) {
      Composition full;
      full.reserve(d.size() + 1);
      full.push_back(head);
      full.insert(full.end(), d.begin(), d.end());
      out[std::move(full)] += c;
    }
  };
  absorb(a[0], quasi_shuffle_cached(ta, b));
  absorb(b[0], quasi_shuffle_cached(a, tb));
  absorb(a[0] + b[0], quasi_shuffle_cached(ta, tb));
  return out;
}

void require_basis(const QSymVector& u, Basis b, const char* who) {
  if (u.basis != b)
    throw std::invalid_argument(std::string(who) + ": expected basis " + basis_name(b) +
                                ", got " + basis_name(u.basis));
}

}  // namespace

std::map<Composition, Integer> quasi_shuffle(const Composition& a, const Composition& b) {
  if (!is_valid_composition(a) || !is_valid_composition(b))
    throw std::invalid_argument("quasi_shuffle: parts must be positive");
  return quasi_shuffle_cached(a, b);
}

namespace {

std::vector<Composition> refinements_impl(const Composition& a) {
  DescentSet s = set_of(a);
  std::vector<int> free_elems;
  std::vector<bool> in(s.n + 1, false);
  for (int e : s.elems) in[e] = true;
  for (int e = 1; e <= s.n - 1; ++e)
    if (!in[e]) free_elems.push_back(e);
  std::vector<Composition> out;
  size_t k = free_elems.size();
  out.reserve(size_t(1) << k);
  for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
    DescentSet t;
    t.n = s.n;
    size_t fi = 0, si = 0;
    // merge the fixed elements with the chosen free ones, keeping order
    while (fi < k || si < s.elems.size()) {
      bool take_free = fi < k && (si == s.elems.size() || free_elems[fi] < s.elems[si]);
      if (take_free) {
        if (mask & (size_t(1) << fi)) t.elems.push_back(free_elems[fi]);
        ++fi;
      } else {
        t.elems.push_back(s.elems[si]);
        ++si;
      }
    }
    out.push_back(comp_of(t));
  }
  return out;
}

}  // namespace

const std::vector<Composition>& refinements(const Composition& a) {
  static std::mutex mu;
  static std::map<Composition, std::vector<Composition>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
  }
  std::vector<Composition> out = refinements_impl(a);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(a, std::move(out)).first->second;
}

QSymVector m_product(const QSymVector& u, const QSymVector& v) {
  require_basis(u, Basis::M, "m_product");
  require_basis(v, Basis::M, "m_product");
  QSymVector out(Basis::M);
  for (const auto& [a, ca] : u.terms)
    for (const auto& [b, cb] : v.terms) {
      Rational c = ca * cb;
      for (const auto& [d, n] : quasi_shuffle_cached(a, b)) out.add_term(d, c * Rational(n));
    }
  return out;
}

QSymVector f_to_m(const QSymVector& u) {
  require_basis(u, Basis::F, "f_to_m");
  QSymVector out(Basis::M);
  for (const auto& [a, c] : u.terms)
    for (const Composition& b : refinements(a)) out.add_term(b, c);
  return out;
}

QSymVector m_to_f(const QSymVector& u) {
  require_basis(u, Basis::M, "m_to_f");
  QSymVector out(Basis::F);
  for (const auto& [a, c] : u.terms) {
    int la = length(a);
    for (const Composition& b : refinements(a)) {
      Rational cb = ((length(b) - la) % 2 == 0) ? c : -c;
      out.add_term(b, cb);
    }
  }
  return out;
}

QSymVector f_product(const QSymVector& u, const QSymVector& v) {
  require_basis(u, Basis::F, "f_product");
  require_basis(v, Basis::F, "f_product");
  return m_to_f(m_product(f_to_m(u), f_to_m(v)));
}

TensorVector coproduct(const QSymVector& u) {
  if (u.basis == Basis::S)
    throw std::invalid_argument("coproduct: use s_coproduct for the S basis");
  TensorVector out(u.basis, u.basis);
  for (const auto& [d, c] : u.terms) {
    ConcatSplits splits = set_concat_split(d);
    for (const auto& [l, r] : splits.concat) out.add_term(l, r, c);
    if (u.basis == Basis::F)
      for (const auto& [l, r] : splits.near_concat) out.add_term(l, r, c);
  }
  return out;
}

TensorVector tensor_multiply(const TensorVector& u, const TensorVector& v) {
  if (u.left != v.left || u.right != v.right)
    throw std::invalid_argument("tensor_multiply: basis mismatch");
  auto leg_product = [](Basis b, const QSymVector& x, const QSymVector& y) {
    return b == Basis::M ? m_product(x, y) : f_product(x, y);
  };
  if (u.left == Basis::S || u.right == Basis::S)
    throw std::invalid_argument("tensor_multiply: S legs are not supported");
  TensorVector out(u.left, u.right);
  for (const auto& [ku, cu] : u.terms)
    for (const auto& [kv, cv] : v.terms) {
      QSymVector l = leg_product(u.left, QSymVector::basis_element(u.left, ku.first),
                                 QSymVector::basis_element(u.left, kv.first));
      QSymVector r = leg_product(u.right, QSymVector::basis_element(u.right, ku.second),
                                 QSymVector::basis_element(u.right, kv.second));
      Rational c = cu * cv;
      for (const auto& [la, lc] : l.terms)
        for (const auto& [ra, rc] : r.terms) out.add_term(la, ra, c * lc * rc);
    }
  return out;
}

TripleTerms coproduct_then_left(const QSymVector& u, const CoproductFn& delta) {
  TripleTerms out;
  TensorVector first = delta(u);
  for (const auto& [k, c] : first.terms) {
    TensorVector second = delta(QSymVector::basis_element(first.left, k.first));
    for (const auto& [k2, c2] : second.terms) {
      Rational add = c * c2;
      auto key = std::array<Composition, 3>{k2.first, k2.second, k.second};
      auto it = out.find(key);
      if (it == out.end()) out.emplace(std::move(key), add);
      else {
        it->second += add;
        if (sgn(it->second) == 0) out.erase(it);
      }
    }
  }
  return out;
}

TripleTerms coproduct_then_right(const QSymVector& u, const CoproductFn& delta) {
  TripleTerms out;
  TensorVector first = delta(u);
  for (const auto& [k, c] : first.terms) {
    TensorVector second = delta(QSymVector::basis_element(first.right, k.second));
    for (const auto& [k2, c2] : second.terms) {
      Rational add = c * c2;
      auto key = std::array<Composition, 3>{k.first, k2.first, k2.second};
      auto it = out.find(key);
      if (it == out.end()) out.emplace(std::move(key), add);
      else {
        it->second += add;
        if (sgn(it->second) == 0) out.erase(it);
      }
    }
  }
  return out;
}

}  // namespace qsym
