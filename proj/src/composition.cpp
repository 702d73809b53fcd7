#include "qsym/composition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qsym {

int weight(const Composition& a) {
  return std::accumulate(a.begin(), a.end(), 0);
}

bool is_valid_composition(const Composition& a) {
  return std::all_of(a.begin(), a.end(), [](int p) { return p >= 1; });
}

static void require_valid(const Composition& a, const char* who) {
  if (!is_valid_composition(a))
    throw std::invalid_argument(std::string(who) + ": parts must be positive");
}

DescentSet set_of(const Composition& a) {
  require_valid(a, "set_of");
  DescentSet s;
  s.n = weight(a);
  int acc = 0;
  for (size_t i = 0; i + 1 < a.size(); ++i) {
    acc += a[i];
    s.elems.push_back(acc);
  }
  return s;
}

Composition comp_of(const DescentSet& s) {
  if (s.n < 0) throw std::invalid_argument("comp_of: negative ambient weight");
  int prev = 0;
  for (int e : s.elems) {
    if (e <= prev || e > s.n - 1)
      throw std::invalid_argument("comp_of: elements must be strictly increasing within [1, n-1]");
    prev = e;
  }
  Composition out;
  prev = 0;
  for (int e : s.elems) {
    out.push_back(e - prev);
    prev = e;
  }
  if (s.n > 0) out.push_back(s.n - prev);
  return out;
}

Composition reversal(Composition a) {
  require_valid(a, "reversal");
  std::reverse(a.begin(), a.end());
  return a;
}

Composition complement(const Composition& a) {
  DescentSet s = set_of(a);
  std::vector<bool> in(s.n + 1, false);
  for (int e : s.elems) in[e] = true;
  DescentSet c;
  c.n = s.n;
  for (int e = 1; e <= s.n - 1; ++e)
    if (!in[e]) c.elems.push_back(e);
  return comp_of(c);
}

Composition transpose(const Composition& a) {
  return reversal(complement(a));
}

bool refines(const Composition& a, const Composition& b) {
  if (weight(a) != weight(b)) return false;
  DescentSet sa = set_of(a);
  DescentSet sb = set_of(b);
  return std::includes(sa.elems.begin(), sa.elems.end(), sb.elems.begin(), sb.elems.end());
}

Composition concat(const Composition& a, const Composition& b) {
  require_valid(a, "concat");
  require_valid(b, "concat");
  Composition out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Composition near_concat(const Composition& a, const Composition& b) {
  require_valid(a, "near_concat");
  require_valid(b, "near_concat");
  if (a.empty() || b.empty())
    throw std::invalid_argument("near_concat: both operands must be nonempty");
  Composition out = a;
  out.back() += b.front();
  out.insert(out.end(), b.begin() + 1, b.end());
  return out;
}

Partition underlying_partition(Composition a) {
  require_valid(a, "underlying_partition");
  std::sort(a.begin(), a.end(), std::greater<int>());
  return a;
}

const std::vector<Composition>& compositions_of(int n) {
  if (n < 0) throw std::invalid_argument("compositions_of: negative weight");
  static std::mutex mu;
  static std::map<int, std::vector<Composition>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Build all weights up to n iteratively so recursion depth stays flat.
  for (int m = 0; m <= n; ++m) {
    if (cache.count(m)) continue;
    std::vector<Composition> out;
    if (m == 0) {
      out.push_back({});
    } else {
      for (int first = 1; first <= m; ++first)
        for (const Composition& rest : cache.at(m - first)) {
          Composition c;
          c.reserve(rest.size() + 1);
          c.push_back(first);
          c.insert(c.end(), rest.begin(), rest.end());
          out.push_back(std::move(c));
        }
    }
    cache.emplace(m, std::move(out));
  }
  return cache.at(n);
}

ConcatSplits set_concat_split(const Composition& d) {
  require_valid(d, "set_concat_split");
  ConcatSplits out;
  for (size_t i = 0; i <= d.size(); ++i) {
    Composition left(d.begin(), d.begin() + i);
    Composition right(d.begin() + i, d.end());
    out.concat.emplace_back(std::move(left), std::move(right));
  }
  for (size_t i = 0; i < d.size(); ++i)
    for (int h = 1; h < d[i]; ++h) {
      Composition left(d.begin(), d.begin() + i);
      left.push_back(h);
      Composition right;
      right.push_back(d[i] - h);
      right.insert(right.end(), d.begin() + i + 1, d.end());
      out.near_concat.emplace_back(std::move(left), std::move(right));
    }
  return out;
}

std::string to_text(const Composition& a) {
  std::string s;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  return s;
}

Composition composition_from_text(const std::string& s) {
  if (s.empty()) return {};
  Composition out;
  size_t i = 0;
  while (i <= s.size()) {
    size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    if (j == i) throw std::invalid_argument("composition_from_text: empty part in '" + s + "'");
    long long v = 0;
    for (size_t k = i; k < j; ++k) {
      char c = s[k];
      if (c < '0' || c > '9')
        throw std::invalid_argument("composition_from_text: invalid character in '" + s + "'");
      v = v * 10 + (c - '0');
      if (v > 1000000000)
        throw std::invalid_argument("composition_from_text: part too large in '" + s + "'");
    }
    if (v < 1) throw std::invalid_argument("composition_from_text: parts must be positive in '" + s + "'");
    out.push_back(static_cast<int>(v));
    if (j == s.size()) break;
    i = j + 1;
  }
  return out;
}

}  // namespace qsym
