#include "qsym/posets.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "qsym/schur.hpp"

namespace qsym {

std::string order_name(OrderTag t) {
  switch (t) {
    case OrderTag::C: return "C";
    case OrderTag::M: return "M";
    case OrderTag::F: return "F";
    case OrderTag::Q: return "Q";
  }
  throw std::logic_error("order_name: unknown order");
}

OrderTag order_from_name(const std::string& name) {
  if (name == "C") return OrderTag::C;
  if (name == "M") return OrderTag::M;
  if (name == "F") return OrderTag::F;
  if (name == "Q") return OrderTag::Q;
  throw std::invalid_argument("order_from_name: expected C, M, F or Q, got '" + name + "'");
}

namespace {

void require_valid(const Composition& a, const char* who) {
  if (!is_valid_composition(a))
    throw std::invalid_argument(std::string(who) + ": parts must be positive");
}

void sort_unique(std::vector<Composition>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Composition> up_covers_c(const Composition& a) {
  std::vector<Composition> out;
  Composition p;
  p.push_back(1);
  p.insert(p.end(), a.begin(), a.end());
  out.push_back(std::move(p));
  for (size_t j = 0; j < a.size(); ++j) {
    bool earlier_equal = false;
    for (size_t i = 0; i < j; ++i)
      if (a[i] == a[j]) { earlier_equal = true; break; }
    if (earlier_equal) continue;
    Composition b = a;
    ++b[j];
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<Composition> up_covers_m(const Composition& a) {
  std::vector<Composition> out;
  for (size_t j = 0; j < a.size(); ++j) {
    Composition b = a;
    ++b[j];
    out.push_back(std::move(b));
  }
  for (size_t p = 0; p <= a.size(); ++p) {
    Composition b = a;
    b.insert(b.begin() + p, 1);
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<Composition> up_covers_f(const Composition& a) {
  if (a.empty()) return {{1}};
  std::vector<Composition> out;
  for (size_t j = 0; j < a.size(); ++j) {
    Composition b = a;
    ++b[j];
    out.push_back(std::move(b));
    for (int h = 1; h <= a[j]; ++h) {
      Composition s(a.begin(), a.begin() + j);
      s.push_back(h);
      s.push_back(a[j] + 1 - h);
      s.insert(s.end(), a.begin() + j + 1, a.end());
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<Composition> up_covers_q(const Composition& a) {
  // Covers are exactly the one-step enlargements b with rem(b, s) == a for
  // some part size s of b; every such b is also a cover in the M order.
  std::vector<Composition> out;
  for (const Composition& b : up_covers(OrderTag::M, a)) {
    std::set<int> sizes(b.begin(), b.end());
    for (int s : sizes) {
      auto r = rem(b, s);
      if (r && *r == a) {
        out.push_back(b);
        break;
      }
    }
  }
  return out;
}

std::vector<Composition> down_covers_c(const Composition& b) {
  std::vector<Composition> out;
  if (!b.empty() && b.front() == 1)
    out.emplace_back(b.begin() + 1, b.end());
  for (size_t j = 0; j < b.size(); ++j) {
    if (b[j] < 2) continue;
    Composition a = b;
    --a[j];
    bool earlier_equal = false;
    for (size_t i = 0; i < j; ++i)
      if (a[i] == a[j]) { earlier_equal = true; break; }
    if (!earlier_equal) out.push_back(std::move(a));
  }
  return out;
}

std::vector<Composition> down_covers_m(const Composition& b) {
  std::vector<Composition> out;
  for (size_t j = 0; j < b.size(); ++j) {
    if (b[j] >= 2) {
      Composition a = b;
      --a[j];
      out.push_back(std::move(a));
    } else {
      Composition a;
      a.reserve(b.size() - 1);
      a.insert(a.end(), b.begin(), b.begin() + j);
      a.insert(a.end(), b.begin() + j + 1, b.end());
      out.push_back(std::move(a));
    }
  }
  return out;
}

std::vector<Composition> down_covers_f(const Composition& b) {
  if (b.size() == 1 && b[0] == 1) return {{}};
  std::vector<Composition> out;
  for (size_t j = 0; j < b.size(); ++j) {
    if (b[j] < 2) continue;
    Composition a = b;
    --a[j];
    out.push_back(std::move(a));
  }
  for (size_t j = 0; j + 1 < b.size(); ++j) {
    Composition a;
    a.reserve(b.size() - 1);
    a.insert(a.end(), b.begin(), b.begin() + j);
    a.push_back(b[j] + b[j + 1] - 1);
    a.insert(a.end(), b.begin() + j + 2, b.end());
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<Composition> down_covers_q(const Composition& b) {
  std::vector<Composition> out;
  std::set<int> sizes(b.begin(), b.end());
  for (int s : sizes) {
    auto r = rem(b, s);
    if (r) out.push_back(std::move(*r));
  }
  return out;
}

}  // namespace

std::vector<Composition> up_covers(OrderTag order, const Composition& a) {
  require_valid(a, "up_covers");
  std::vector<Composition> out;
  switch (order) {
    case OrderTag::C: out = up_covers_c(a); break;
    case OrderTag::M: out = up_covers_m(a); break;
    case OrderTag::F: out = up_covers_f(a); break;
    case OrderTag::Q: out = up_covers_q(a); break;
  }
  sort_unique(out);
  return out;
}

std::vector<Composition> down_covers(OrderTag order, const Composition& b) {
  require_valid(b, "down_covers");
  std::vector<Composition> out;
  switch (order) {
    case OrderTag::C: out = down_covers_c(b); break;
    case OrderTag::M: out = down_covers_m(b); break;
    case OrderTag::F: out = down_covers_f(b); break;
    case OrderTag::Q: out = down_covers_q(b); break;
  }
  sort_unique(out);
  return out;
}

bool leq(OrderTag order, const Composition& a, const Composition& b, int max_gap) {
  require_valid(a, "leq");
  require_valid(b, "leq");
  int wa = weight(a), wb = weight(b);
  if (wa > wb) return false;
  if (wa == wb) return a == b;
  if (wb - wa > max_gap)
    throw std::invalid_argument("leq: weight gap exceeds the configured bound");
  std::set<Composition> frontier = {b};
  for (int w = wb; w > wa; --w) {
    std::set<Composition> next;
    for (const Composition& c : frontier)
      for (Composition& d : down_covers(order, c)) next.insert(std::move(d));
    frontier = std::move(next);
  }
  return frontier.count(a) > 0;
}

HasseDiagram hasse(OrderTag order, int max_weight) {
  if (max_weight < 1)
    throw std::invalid_argument("hasse: max_weight must be at least 1");
  HasseDiagram d;
  d.order = order;
  d.max_weight = max_weight;
  for (int w = 1; w <= max_weight; ++w)
    for (const Composition& a : compositions_of(w)) d.nodes.push_back(a);
  for (const Composition& a : d.nodes) {
    if (weight(a) == max_weight) continue;
    for (const Composition& b : up_covers(order, a)) d.edges.emplace_back(a, b);
  }
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

std::vector<std::pair<Composition, Composition>> equal_down_set_pairs(OrderTag order, int n) {
  if (n < 1) throw std::invalid_argument("equal_down_set_pairs: weight must be at least 1");
  std::map<std::vector<Composition>, std::vector<Composition>> groups;
  for (const Composition& a : compositions_of(n))
    groups[down_covers(order, a)].push_back(a);
  std::vector<std::pair<Composition, Composition>> out;
  for (const auto& [d, members] : groups)
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j)
        out.emplace_back(members[i], members[j]);
  std::sort(out.begin(), out.end());
  return out;
}

bool q_classification_predicate(const Composition& a, const Composition& b) {
  if (a == b || a.size() != b.size() || a.size() < 2) return false;
  auto matches = [](const Composition& x, const Composition& y) {
    size_t k = x.size();
    if (x[k - 2] != 1 || x[k - 1] != 2) return false;
    if (y[k - 2] != 2 || y[k - 1] != 1) return false;
    for (size_t i = 0; i + 2 < k; ++i) {
      if (x[i] != y[i]) return false;
      if (x[i] != 1 && x[i] != 2) return false;
    }
    return true;
  };
  return matches(a, b) || matches(b, a);
}

bool c_classification_predicate(const Composition& a, const Composition& b) {
  if (a == b) return false;
  auto matches = [](const Composition& x, const Composition& y) {
    // x = (2), y = (1,1)
    if (x == Composition{2} && y == Composition{1, 1}) return true;
    // x = (3), y = (1,2)
    if (x == Composition{3} && y == Composition{1, 2}) return true;
    // x = (v+1, 1, b_1..b_k), y = (1, v, 1, b_1..b_k) with v in {1, 2} and
    // each b_j at most one more than the largest earlier b (seeded with 1).
    if (x.size() < 2 || y.size() != x.size() + 1) return false;
    if (x[0] != 2 && x[0] != 3) return false;
    int v = x[0] - 1;
    if (x[1] != 1) return false;
    if (y[0] != 1 || y[1] != v || y[2] != 1) return false;
    int mx = 1;
    for (size_t j = 2; j < x.size(); ++j) {
      if (x[j] != y[j + 1]) return false;
      if (x[j] > mx + 1) return false;
      mx = std::max(mx, x[j]);
    }
    return true;
  };
  return matches(a, b) || matches(b, a);
}

}  // namespace qsym
