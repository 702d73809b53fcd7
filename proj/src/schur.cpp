#include "qsym/schur.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "qsym/algebra.hpp"
#include "qsym/posets.hpp"

namespace qsym {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

void require_valid(const Composition& a, const char* who) {
  if (!is_valid_composition(a))
    throw std::invalid_argument(std::string(who) + ": parts must be positive");
}

}  // namespace

int SkewReverseShape::inner_in_row(int r) const {
  int skew_rows = rows() - static_cast<int>(inner.size());
  if (r <= skew_rows || r > rows()) return 0;
  return inner[r - skew_rows - 1];
}

bool SkewReverseShape::is_cell(int r, int c) const {
  return r >= 1 && r <= rows() && c >= 1 && c <= outer[r - 1];
}

bool SkewReverseShape::is_inner(int r, int c) const {
  return is_cell(r, c) && c <= inner_in_row(r);
}

bool SkewReverseShape::is_skew_cell(int r, int c) const {
  return is_cell(r, c) && c > inner_in_row(r);
}

int SkewReverseShape::cell_count() const {
  int total = 0;
  for (int r = 1; r <= rows(); ++r) total += outer[r - 1] - inner_in_row(r);
  return total;
}

SkewReverseShape make_skew_shape(const Composition& outer, const Composition& inner) {
  require_valid(outer, "make_skew_shape");
  require_valid(inner, "make_skew_shape");
  if (inner.size() > outer.size())
    throw std::invalid_argument("make_skew_shape: inner shape has too many rows");
  SkewReverseShape s{outer, inner};
  for (int r = 1; r <= s.rows(); ++r)
    if (s.inner_in_row(r) > outer[r - 1])
      throw std::invalid_argument("make_skew_shape: inner shape does not fit inside the outer shape");
  if (!inner.empty() && !leq(OrderTag::C, inner, outer, weight(outer) - weight(inner)))
    throw std::invalid_argument("make_skew_shape: inner shape is not below the outer one in the C order");
  return s;
}

int Ssrct::entry(int r, int c) const {
  if (!shape.is_skew_cell(r, c))
    throw std::out_of_range("Ssrct::entry: not a skew cell");
  return rows[r - 1][c - shape.inner_in_row(r) - 1];
}

Ssrct make_ssrct(SkewReverseShape shape, std::vector<std::vector<int>> rows) {
  if (static_cast<int>(rows.size()) != shape.rows())
    throw std::invalid_argument("make_ssrct: row count mismatch");
  for (int r = 1; r <= shape.rows(); ++r) {
    int expected = shape.outer[r - 1] - shape.inner_in_row(r);
    if (static_cast<int>(rows[r - 1].size()) != expected)
      throw std::invalid_argument("make_ssrct: wrong number of entries in a row");
    for (int v : rows[r - 1])
      if (v < 1) throw std::invalid_argument("make_ssrct: entries must be positive");
  }
  return Ssrct{std::move(shape), std::move(rows)};
}

bool is_valid_ssrct(const Ssrct& t) {
  const SkewReverseShape& s = t.shape;
  // rows weakly decreasing left to right
  for (int r = 1; r <= s.rows(); ++r) {
    const auto& row = t.rows[r - 1];
    for (size_t i = 0; i + 1 < row.size(); ++i)
      if (row[i] < row[i + 1]) return false;
  }
  // first-column skew cells strictly increasing top to bottom
  int prev = 0;
  for (int r = 1; r <= s.rows(); ++r) {
    if (!s.is_skew_cell(r, 1)) continue;
    int v = t.entry(r, 1);
    if (prev != 0 && v <= prev) return false;
    prev = v;
  }
  // triple condition
  auto value = [&](int r, int c) {  // inner cells read as infinity
    return s.is_inner(r, c) ? kInf : t.entry(r, c);
  };
  for (int j = 2; j <= s.rows(); ++j)
    for (int k = 1; k + 1 <= s.outer[j - 1]; ++k) {
      if (!s.is_skew_cell(j, k + 1)) continue;
      int y = t.entry(j, k + 1);
      for (int i = 1; i < j; ++i) {
        if (!s.is_cell(i, k)) continue;
        if (value(i, k) < y) continue;
        if (!s.is_cell(i, k + 1)) return false;
        if (value(i, k + 1) <= y) return false;
      }
    }
  return true;
}

std::vector<int> ssrct_content(const Ssrct& t, int max_entry) {
  if (max_entry < 0) throw std::invalid_argument("ssrct_content: negative bound");
  std::vector<int> content(max_entry, 0);
  for (const auto& row : t.rows)
    for (int v : row) {
      if (v > max_entry)
        throw std::invalid_argument("ssrct_content: entry exceeds the requested bound");
      ++content[v - 1];
    }
  return content;
}

std::vector<Ssrct> enumerate_ssrct(const SkewReverseShape& shape, int max_entry) {
  if (max_entry < 0) throw std::invalid_argument("enumerate_ssrct: negative entry bound");
  int max_col = 0;
  for (int r = 1; r <= shape.rows(); ++r) max_col = std::max(max_col, shape.outer[r - 1]);

  // Column-major, top-down: when a cell is placed, every cell of any triple
  // condition it completes has already been decided.
  std::vector<std::pair<int, int>> order;
  for (int c = 1; c <= max_col; ++c)
    for (int r = 1; r <= shape.rows(); ++r)
      if (shape.is_skew_cell(r, c)) order.emplace_back(r, c);

  std::vector<std::vector<int>> grid(shape.rows() + 1, std::vector<int>(max_col + 1, 0));
  auto value = [&](int r, int c) { return shape.is_inner(r, c) ? kInf : grid[r][c]; };

  auto admissible = [&](int r, int c, int v) {
    if (c > 1 && shape.is_skew_cell(r, c - 1) && grid[r][c - 1] < v) return false;
    if (c == 1) {
      for (int i = r - 1; i >= 1; --i)
        if (shape.is_skew_cell(i, 1)) {
          if (grid[i][1] >= v) return false;
          break;
        }
    }
    if (c > 1) {
      for (int i = 1; i < r; ++i) {
        if (!shape.is_cell(i, c - 1)) continue;
        if (value(i, c - 1) < v) continue;
        if (!shape.is_cell(i, c)) return false;
        if (value(i, c) <= v) return false;
      }
    }
    return true;
  };

  std::vector<Ssrct> out;
  std::vector<std::vector<int>> rows(shape.rows());
  auto emit = [&]() {
    for (int r = 1; r <= shape.rows(); ++r) {
      rows[r - 1].clear();
      for (int c = shape.inner_in_row(r) + 1; c <= shape.outer[r - 1]; ++c)
        rows[r - 1].push_back(grid[r][c]);
    }
    out.push_back(Ssrct{shape, rows});
  };

  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == order.size()) {
      emit();
      return;
    }
    auto [r, c] = order[idx];
    for (int v = 1; v <= max_entry; ++v) {
      if (!admissible(r, c, v)) continue;
      grid[r][c] = v;
      self(self, idx + 1);
      grid[r][c] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

QSymVector schur_to_m_impl(const Composition& a) {
  QSymVector out(Basis::M);
  if (a.empty()) {
    out.add_term({}, Rational(1));
    return out;
  }
  SkewReverseShape shape{a, {}};
  int n = weight(a);
  for (const Ssrct& t : enumerate_ssrct(shape, n)) {
    std::vector<int> content = ssrct_content(t, n);
    int top = n;
    while (top > 0 && content[top - 1] == 0) --top;
    bool packed = true;
    Composition g;
    for (int i = 1; i <= top; ++i) {
      if (content[i - 1] == 0) { packed = false; break; }
      g.push_back(content[i - 1]);
    }
    if (packed) out.add_term(g, Rational(1));
  }
  return out;
}

std::mutex schur_m_mu;
std::map<Composition, QSymVector> schur_m_cache;

}  // namespace

QSymVector schur_to_m(const Composition& a) {
  require_valid(a, "schur_to_m");
  {
    std::lock_guard<std::mutex> lock(schur_m_mu);
    auto it = schur_m_cache.find(a);
    if (it != schur_m_cache.end()) return it->second;
  }
  QSymVector out = schur_to_m_impl(a);
  std::lock_guard<std::mutex> lock(schur_m_mu);
  return schur_m_cache.emplace(a, std::move(out)).first->second;
}

namespace {

int weight_cap = 9;
std::string cache_dir_value;
bool cache_dir_loaded = false;
std::mutex cache_dir_mu;

std::mutex matrix_mu;
std::map<int, BasisMatrix> matrix_cache;

constexpr int kCacheFormat = 1;

std::string cache_file_path(const std::string& dir, int n) {
  return dir + "/basis_matrix_v" + std::to_string(kCacheFormat) + "_" + std::to_string(n) + ".json";
}

std::vector<std::vector<Rational>> matrix_from_json(const nlohmann::json& j, size_t dim) {
  std::vector<std::vector<Rational>> m;
  if (!j.is_array() || j.size() != dim) throw std::invalid_argument("bad matrix");
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != dim) throw std::invalid_argument("bad matrix row");
    std::vector<Rational> r;
    for (const auto& e : row) r.push_back(rational_from_text(e.get<std::string>()));
    m.push_back(std::move(r));
  }
  return m;
}

nlohmann::json matrix_to_json(const std::vector<std::vector<Rational>>& m) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& e : row) jr.push_back(rational_text(e));
    j.push_back(std::move(jr));
  }
  return j;
}

bool load_cached_matrix(const std::string& dir, int n, BasisMatrix& out) {
  std::ifstream in(cache_file_path(dir, n));
  if (!in) return false;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("format").get<int>() != kCacheFormat) return false;
    if (j.at("n").get<int>() != n) return false;
    const std::vector<Composition>& comps = compositions_of(n);
    const auto& names = j.at("comps");
    if (!names.is_array() || names.size() != comps.size()) return false;
    for (size_t i = 0; i < comps.size(); ++i)
      if (composition_from_text(names[i].get<std::string>()) != comps[i]) return false;
    out.n = n;
    out.comps = comps;
    out.s_over_m = matrix_from_json(j.at("s_over_m"), comps.size());
    out.m_over_s = matrix_from_json(j.at("m_over_s"), comps.size());
    out.det = rational_from_text(j.at("det").get<std::string>());
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

void store_cached_matrix(const std::string& dir, const BasisMatrix& b) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  nlohmann::json j;
  j["format"] = kCacheFormat;
  j["n"] = b.n;
  nlohmann::json names = nlohmann::json::array();
  for (const Composition& a : b.comps) names.push_back(to_text(a));
  j["comps"] = std::move(names);
  j["s_over_m"] = matrix_to_json(b.s_over_m);
  j["m_over_s"] = matrix_to_json(b.m_over_s);
  j["det"] = rational_text(b.det);
  std::string tmp = dir + "/.basis_matrix_tmp_" + std::to_string(b.n);
  {
    std::ofstream outf(tmp);
    if (!outf) return;
    outf << j.dump();
  }
  std::rename(tmp.c_str(), cache_file_path(dir, b.n).c_str());
}

BasisMatrix compute_basis_matrix(int n) {
  BasisMatrix b;
  b.n = n;
  b.comps = compositions_of(n);
  size_t dim = b.comps.size();
  std::map<Composition, size_t> index;
  for (size_t i = 0; i < dim; ++i) index.emplace(b.comps[i], i);
  b.s_over_m.assign(dim, std::vector<Rational>(dim, Rational(0)));
  for (size_t i = 0; i < dim; ++i) {
    QSymVector row = schur_to_m(b.comps[i]);
    for (const auto& [g, c] : row.terms) b.s_over_m[i][index.at(g)] = c;
  }
  // Gauss-Jordan with exact arithmetic; pivot on the first nonzero entry.
  std::vector<std::vector<Rational>> a = b.s_over_m;
  std::vector<std::vector<Rational>> inv(dim, std::vector<Rational>(dim, Rational(0)));
  for (size_t i = 0; i < dim; ++i) inv[i][i] = Rational(1);
  Rational det(1);
  for (size_t col = 0; col < dim; ++col) {
    size_t pivot = col;
    while (pivot < dim && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == dim) throw std::logic_error("basis_matrix: singular base-change matrix");
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      std::swap(inv[pivot], inv[col]);
      det = -det;
    }
    Rational p = a[col][col];
    det *= p;
    if (p != 1) {
      Rational ip = Rational(1) / p;
      for (size_t k = 0; k < dim; ++k) {
        a[col][k] *= ip;
        inv[col][k] *= ip;
      }
    }
    for (size_t row = 0; row < dim; ++row) {
      if (row == col || sgn(a[row][col]) == 0) continue;
      Rational f = a[row][col];
      for (size_t k = 0; k < dim; ++k) {
        a[row][k] -= f * a[col][k];
        inv[row][k] -= f * inv[col][k];
      }
    }
  }
  b.m_over_s = std::move(inv);
  b.det = det;
  return b;
}

}  // namespace

int basis_weight_cap() { return weight_cap; }

void set_basis_weight_cap(int cap) {
  if (cap < 0) throw std::invalid_argument("set_basis_weight_cap: negative cap");
  weight_cap = cap;
}

void set_basis_cache_dir(const std::string& dir) {
  std::lock_guard<std::mutex> lock(cache_dir_mu);
  cache_dir_value = dir;
  cache_dir_loaded = true;
}

std::string basis_cache_dir() {
  std::lock_guard<std::mutex> lock(cache_dir_mu);
  if (!cache_dir_loaded) {
    const char* env = std::getenv("QSYM_CACHE_DIR");
    cache_dir_value = env ? env : "";
    cache_dir_loaded = true;
  }
  return cache_dir_value;
}

const BasisMatrix& basis_matrix(int n) {
  if (n < 0) throw std::invalid_argument("basis_matrix: negative weight");
  if (n > weight_cap)
    throw std::invalid_argument("basis_matrix: weight " + std::to_string(n) +
                                " exceeds the cap " + std::to_string(weight_cap) +
                                "; raise it with set_basis_weight_cap");
  {
    std::lock_guard<std::mutex> lock(matrix_mu);
    auto it = matrix_cache.find(n);
    if (it != matrix_cache.end()) return it->second;
  }
  std::string dir = basis_cache_dir();
  BasisMatrix b;
  bool loaded = !dir.empty() && load_cached_matrix(dir, n, b);
  if (!loaded) {
    b = compute_basis_matrix(n);
    if (!dir.empty()) store_cached_matrix(dir, b);
  }
  std::lock_guard<std::mutex> lock(matrix_mu);
  return matrix_cache.emplace(n, std::move(b)).first->second;
}

Rational basis_matrix_det(int n) { return basis_matrix(n).det; }

QSymVector m_to_s(const QSymVector& u) {
  if (u.basis != Basis::M) throw std::invalid_argument("m_to_s: expected the M basis");
  QSymVector out(Basis::S);
  for (const auto& [a, c] : u.terms) {
    int w = weight(a);
    if (w == 0) {
      out.add_term({}, c);
      continue;
    }
    const BasisMatrix& b = basis_matrix(w);
    size_t i = std::lower_bound(b.comps.begin(), b.comps.end(), a) - b.comps.begin();
    for (size_t j = 0; j < b.comps.size(); ++j)
      out.add_term(b.comps[j], c * b.m_over_s[i][j]);
  }
  return out;
}

QSymVector s_to_m(const QSymVector& u) {
  if (u.basis != Basis::S) throw std::invalid_argument("s_to_m: expected the S basis");
  QSymVector out(Basis::M);
  for (const auto& [a, c] : u.terms) out.add_scaled(schur_to_m(a), c);
  return out;
}

QSymVector s_product(const QSymVector& u, const QSymVector& v) {
  if (u.basis != Basis::S || v.basis != Basis::S)
    throw std::invalid_argument("s_product: expected the S basis");
  return m_to_s(m_product(s_to_m(u), s_to_m(v)));
}

TensorVector s_coproduct(const QSymVector& u) {
  if (u.basis != Basis::S) throw std::invalid_argument("s_coproduct: expected the S basis");
  TensorVector mm = coproduct(s_to_m(u));
  TensorVector out(Basis::S, Basis::S);
  for (const auto& [k, c] : mm.terms) {
    QSymVector l = m_to_s(QSymVector::basis_element(Basis::M, k.first));
    QSymVector r = m_to_s(QSymVector::basis_element(Basis::M, k.second));
    for (const auto& [la, lc] : l.terms)
      for (const auto& [ra, rc] : r.terms) out.add_term(la, ra, c * lc * rc);
  }
  return out;
}

Rational lr_coefficient(const Composition& a, const Composition& b, const Composition& g) {
  require_valid(a, "lr_coefficient");
  require_valid(b, "lr_coefficient");
  require_valid(g, "lr_coefficient");
  if (weight(a) + weight(b) != weight(g)) return Rational(0);
  return s_coproduct(QSymVector::basis_element(Basis::S, g)).coefficient(a, b);
}

std::optional<Composition> rem(const Composition& a, int s) {
  require_valid(a, "rem");
  if (s < 1) throw std::invalid_argument("rem: size must be positive");
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != s) continue;
    Composition out = a;
    if (s == 1) out.erase(out.begin() + i);
    else --out[i];
    return out;
  }
  return std::nullopt;
}

std::optional<Composition> row_op(const Composition& a, const std::vector<int>& sizes) {
  require_valid(a, "row_op");
  for (size_t i = 0; i + 1 < sizes.size(); ++i)
    if (sizes[i] >= sizes[i + 1])
      throw std::invalid_argument("row_op: sizes must be strictly increasing");
  Composition cur = a;
  for (size_t i = sizes.size(); i-- > 0;) {
    auto next = rem(cur, sizes[i]);
    if (!next) return std::nullopt;
    cur = std::move(*next);
  }
  return cur;
}

std::optional<Composition> col_op(const Composition& a, const std::vector<int>& sizes) {
  require_valid(a, "col_op");
  for (size_t i = 0; i + 1 < sizes.size(); ++i)
    if (sizes[i] > sizes[i + 1])
      throw std::invalid_argument("col_op: sizes must be weakly increasing");
  Composition cur = a;
  for (int s : sizes) {
    auto next = rem(cur, s);
    if (!next) return std::nullopt;
    cur = std::move(*next);
  }
  return cur;
}

namespace {

int part_at(const Partition& p, size_t i) {
  return i < p.size() ? p[i] : 0;
}

void require_partition(const Partition& p, const char* who) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) throw std::invalid_argument(std::string(who) + ": parts must be positive");
    if (i && p[i] > p[i - 1])
      throw std::invalid_argument(std::string(who) + ": parts must weakly decrease");
  }
}

}  // namespace

bool partition_contains(const Partition& outer, const Partition& inner) {
  require_partition(outer, "partition_contains");
  require_partition(inner, "partition_contains");
  if (inner.size() > outer.size()) return false;
  for (size_t i = 0; i < inner.size(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!partition_contains(outer, inner)) return false;
  for (size_t i = 0; i + 1 < outer.size(); ++i)
    if (outer[i + 1] > part_at(inner, i)) return false;
  return true;
}

bool is_vertical_strip(const Partition& outer, const Partition& inner) {
  if (!partition_contains(outer, inner)) return false;
  for (size_t i = 0; i < outer.size(); ++i)
    if (outer[i] - part_at(inner, i) > 1) return false;
  return true;
}

std::vector<int> strip_columns(const Partition& outer, const Partition& inner) {
  if (!is_horizontal_strip(outer, inner))
    throw std::invalid_argument("strip_columns: not a horizontal strip");
  std::vector<int> cols;
  for (size_t i = 0; i < outer.size(); ++i)
    for (int c = part_at(inner, i) + 1; c <= outer[i]; ++c) cols.push_back(c);
  std::sort(cols.begin(), cols.end());
  return cols;
}

std::vector<int> strip_column_multiset(const Partition& outer, const Partition& inner) {
  if (!is_vertical_strip(outer, inner))
    throw std::invalid_argument("strip_column_multiset: not a vertical strip");
  std::vector<int> cols;
  for (size_t i = 0; i < outer.size(); ++i)
    if (outer[i] > part_at(inner, i)) cols.push_back(outer[i]);
  std::sort(cols.begin(), cols.end());
  return cols;
}

bool is_vertical_strip_skew(const SkewReverseShape& shape) {
  for (int r = 1; r <= shape.rows(); ++r)
    if (shape.outer[r - 1] - shape.inner_in_row(r) > 1) return false;
  return true;
}

QSymVector pieri_row(int n, const Composition& a) {
  require_valid(a, "pieri_row");
  if (n < 1) throw std::invalid_argument("pieri_row: the row length must be positive");
  Partition inner = underlying_partition(a);
  QSymVector out(Basis::S);
  for (const Composition& b : compositions_of(weight(a) + n)) {
    Partition outer = underlying_partition(b);
    if (!is_horizontal_strip(outer, inner)) continue;
    auto res = row_op(b, strip_columns(outer, inner));
    if (res && *res == a) out.add_term(b, Rational(1));
  }
  return out;
}

QSymVector pieri_col(int n, const Composition& a) {
  require_valid(a, "pieri_col");
  if (n < 1) throw std::invalid_argument("pieri_col: the column length must be positive");
  Partition inner = underlying_partition(a);
  QSymVector out(Basis::S);
  for (const Composition& b : compositions_of(weight(a) + n)) {
    Partition outer = underlying_partition(b);
    if (!is_vertical_strip(outer, inner)) continue;
    auto res = col_op(b, strip_column_multiset(outer, inner));
    if (res && *res == a) out.add_term(b, Rational(1));
  }
  return out;
}

bool s_equals_f_form(const Composition& a) {
  require_valid(a, "s_equals_f_form");
  // Optional leading part of size at least 2, then blocks of (1-run, 2) with
  // each 1-run nonempty, then a trailing run of 1s.
  auto blocks_then_tail = [](const Composition& x, size_t start) {
    size_t i = start;
    while (i < x.size()) {
      size_t run = 0;
      while (i < x.size() && x[i] == 1) { ++i; ++run; }
      if (i == x.size()) return true;  // trailing 1s
      if (x[i] != 2 || run == 0) return false;
      ++i;
    }
    return true;
  };
  if (a.empty()) return true;
  if (a[0] >= 2) return blocks_then_tail(a, 1);
  return blocks_then_tail(a, 0);
}

}  // namespace qsym
