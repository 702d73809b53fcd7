#include "qsym/io.hpp"

#include <sstream>
#include <stdexcept>

namespace qsym {

using nlohmann::json;

json descent_set_to_json(const DescentSet& s) {
  return json{{"n", s.n}, {"set", s.elems}};
}

DescentSet descent_set_from_json(const json& j) {
  DescentSet s;
  s.n = j.at("n").get<int>();
  s.elems = j.at("set").get<std::vector<int>>();
  comp_of(s);  // validates
  return s;
}

json vector_to_json(const QSymVector& u) {
  json terms = json::array();
  for (const auto& [a, c] : u.terms)
    terms.push_back(json{{"comp", to_text(a)}, {"num", num_string(c)}, {"den", den_string(c)}});
  return json{{"basis", basis_name(u.basis)}, {"terms", std::move(terms)}};
}

QSymVector vector_from_json(const json& j) {
  QSymVector u(basis_from_name(j.at("basis").get<std::string>()));
  for (const auto& t : j.at("terms")) {
    Composition a = composition_from_text(t.at("comp").get<std::string>());
    Rational c = rational_from_strings(t.at("num").get<std::string>(), t.at("den").get<std::string>());
    u.add_term(a, c);
  }
  return u;
}

json tensor_to_json(const TensorVector& t) {
  json terms = json::array();
  for (const auto& [k, c] : t.terms)
    terms.push_back(json{{"left", to_text(k.first)},
                         {"right", to_text(k.second)},
                         {"num", num_string(c)},
                         {"den", den_string(c)}});
  return json{{"left_basis", basis_name(t.left)},
              {"right_basis", basis_name(t.right)},
              {"terms", std::move(terms)}};
}

json ssrct_to_json(const Ssrct& t) {
  return json{{"outer", to_text(t.shape.outer)},
              {"inner", to_text(t.shape.inner)},
              {"rows", t.rows}};
}

Ssrct ssrct_from_json(const json& j) {
  Composition outer = composition_from_text(j.at("outer").get<std::string>());
  Composition inner;
  if (j.contains("inner")) inner = composition_from_text(j.at("inner").get<std::string>());
  auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
  return make_ssrct(make_skew_shape(outer, inner), std::move(rows));
}

json hasse_to_json(const HasseDiagram& d) {
  json nodes = json::array();
  for (const Composition& a : d.nodes) nodes.push_back(to_text(a));
  json edges = json::array();
  for (const auto& [a, b] : d.edges) edges.push_back(json::array({to_text(a), to_text(b)}));
  return json{{"order", order_name(d.order)},
              {"max_weight", d.max_weight},
              {"nodes", std::move(nodes)},
              {"edges", std::move(edges)}};
}

std::string hasse_to_dot(const HasseDiagram& d) {
  std::ostringstream out;
  out << "digraph hasse_" << order_name(d.order) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (int w = 1; w <= d.max_weight; ++w) {
    out << "  { rank=same;";
    for (const Composition& a : d.nodes)
      if (weight(a) == w) out << " \"" << to_text(a) << "\";";
    out << " }\n";
  }
  for (const auto& [a, b] : d.edges)
    out << "  \"" << to_text(a) << "\" -> \"" << to_text(b) << "\";\n";
  out << "}\n";
  return out.str();
}

json morphism_check_to_json(const std::string& map, const std::string& property,
                           int bound, const MorphismCheck& check) {
  json j{{"map", map}, {"property", property}, {"bound", bound}, {"pass", check.pass}};
  if (!check.pass && !check.witnesses.empty()) j["witness"] = check.witnesses.front();
  return j;
}

json report_to_json(const VerificationReport& report) {
  json config = json::object();
  for (const auto& [id, bound] : report.config.bounds) config[id] = bound;
  json results = json::array();
  for (const CheckResult& r : report.results)
    results.push_back(json{{"check_id", r.check_id},
                           {"bound", r.bound},
                           {"pass", r.pass},
                           {"details", r.details},
                           {"elapsed_seconds", r.elapsed_seconds}});
  return json{{"suite_version", report.suite_version},
              {"config", std::move(config)},
              {"results", std::move(results)},
              {"all_pass", report.all_pass()}};
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "verification suite " << report.suite_version << "\n";
  for (const CheckResult& r : report.results) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", r.elapsed_seconds);
    out << (r.pass ? "PASS" : "FAIL") << " " << r.check_id << " (bound " << r.bound << ", "
        << buf << "s)";
    if (!r.details.empty()) out << ": " << r.details;
    out << "\n";
  }
  out << (report.all_pass() ? "all checks passed" : "some checks FAILED") << "\n";
  return out.str();
}

namespace {

std::string term_text(Basis basis, const Composition& a, const Rational& c, bool first) {
  Rational mag = abs(c);
  std::string body = basis_name(basis) + "[" + to_text(a) + "]";
  if (mag != 1) body = rational_text(mag) + "*" + body;
  if (first) return (sgn(c) < 0 ? "-" : "") + body;
  return (sgn(c) < 0 ? " - " : " + ") + body;
}

std::string tensor_term_text(const TensorVector& t, const std::pair<Composition, Composition>& k,
                             const Rational& c, bool first) {
  Rational mag = abs(c);
  std::string body = basis_name(t.left) + "[" + to_text(k.first) + "] (x) " +
                     basis_name(t.right) + "[" + to_text(k.second) + "]";
  if (mag != 1) body = rational_text(mag) + "*" + body;
  if (first) return (sgn(c) < 0 ? "-" : "") + body;
  return (sgn(c) < 0 ? " - " : " + ") + body;
}

}  // namespace

std::string render_text(const QSymVector& u) {
  if (u.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = u.terms.rbegin(); it != u.terms.rend(); ++it) {
    out += term_text(u.basis, it->first, it->second, first);
    first = false;
  }
  return out;
}

std::string render_text(const TensorVector& t) {
  if (t.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : t.terms) {
    out += tensor_term_text(t, k, c, first);
    first = false;
  }
  return out;
}

}  // namespace qsym
