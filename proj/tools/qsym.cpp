// Command-line front end: products, coproducts, base change, poset queries,
// tableau enumeration, structure coefficients, induced maps, and the
// verification suite.  Exit codes: 0 success, 1 usage or input error,
// 2 verification failure.

#include <cctype>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsym/algebra.hpp"
#include "qsym/composition.hpp"
#include "qsym/io.hpp"
#include "qsym/morphisms.hpp"
#include "qsym/posets.hpp"
#include "qsym/rigidity.hpp"
#include "qsym/schur.hpp"
#include "qsym/vector.hpp"

namespace {

using namespace qsym;

QSymVector to_basis(const QSymVector& u, Basis target) {
  if (u.basis == target) return u;
  QSymVector m = u.basis == Basis::M ? u
               : u.basis == Basis::F ? f_to_m(u)
                                     : s_to_m(u);
  if (target == Basis::M) return m;
  return target == Basis::F ? m_to_f(m) : m_to_s(m);
}

// Operands are either a bare composition ("1,3,2", "" for the empty one) or
// a JSON vector object, converted into the requested basis.
QSymVector parse_operand(const std::string& text, Basis basis) {
  if (!text.empty() && text.front() == '{')
    return to_basis(vector_from_json(nlohmann::json::parse(text)), basis);
  return QSymVector::basis_element(basis, composition_from_text(text));
}

int parse_weight(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("expected a positive weight");
  for (char ch : text)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("expected a positive weight, got '" + text + "'");
  int w = std::stoi(text);
  if (w < 1) throw std::invalid_argument("expected a positive weight, got '" + text + "'");
  return w;
}

std::string paren(const Composition& a) { return "(" + to_text(a) + ")"; }

void emit(const QSymVector& u, const std::string& fmt) {
  if (fmt == "json") std::cout << vector_to_json(u).dump() << "\n";
  else std::cout << render_text(u) << "\n";
}

void emit(const TensorVector& t, const std::string& fmt) {
  if (fmt == "json") std::cout << tensor_to_json(t).dump() << "\n";
  else std::cout << render_text(t) << "\n";
}

std::string tableau_line(const Ssrct& t) {
  std::string out;
  for (size_t r = 0; r < t.rows.size(); ++r) {
    if (r > 0) out += " / ";
    for (size_t c = 0; c < t.rows[r].size(); ++c) {
      if (c > 0) out += ",";
      out += std::to_string(t.rows[r][c]);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for quasisymmetric functions in the M, F, and S bases"};
  app.require_subcommand(1);

  std::string cache_dir;
  int cap = 0;
  app.add_option("--cache", cache_dir, "directory for the on-disk base-change cache");
  app.add_option("--bound", cap,
                 "weight cap for S-basis base change; for verify, a uniform "
                 "bound applied to every check");

  const std::vector<std::string> bases{"M", "F", "S"};
  auto add_basis = [&bases](CLI::App* sub, std::string& target) {
    sub->add_option("-b,--basis", target, "basis to work in")
        ->check(CLI::IsMember(bases));
  };
  auto add_format = [](CLI::App* sub, std::string& target,
                       std::vector<std::string> allowed) {
    sub->add_option("--format", target, "output format")
        ->check(CLI::IsMember(allowed));
  };

  std::string prod_basis = "M", prod_format = "text", prod_a, prod_b;
  CLI::App* prod = app.add_subcommand("product", "multiply two elements");
  prod->fallthrough();
  add_basis(prod, prod_basis);
  add_format(prod, prod_format, {"text", "json"});
  prod->add_option("lhs", prod_a, "first factor (composition or JSON vector)")->required();
  prod->add_option("rhs", prod_b, "second factor (composition or JSON vector)")->required();

  std::string cop_basis = "M", cop_format = "text", cop_arg;
  CLI::App* cop = app.add_subcommand("coproduct", "coproduct of an element");
  cop->fallthrough();
  add_basis(cop, cop_basis);
  add_format(cop, cop_format, {"text", "json"});
  cop->add_option("a", cop_arg, "element (composition or JSON vector)")->required();

  std::string conv_from = "M", conv_to, conv_format = "text", conv_arg;
  CLI::App* conv = app.add_subcommand("convert", "change of basis");
  conv->fallthrough();
  conv->add_option("--from", conv_from, "basis of a bare composition operand")
      ->check(CLI::IsMember(bases));
  conv->add_option("--to", conv_to, "target basis")->check(CLI::IsMember(bases))->required();
  add_format(conv, conv_format, {"text", "json"});
  conv->add_option("a", conv_arg, "element (composition or JSON vector)")->required();

  std::string poset_order, poset_action, poset_arg, poset_format = "text";
  bool poset_dot = false;
  CLI::App* pos = app.add_subcommand("poset", "cover and diagram queries on the four orders");
  pos->fallthrough();
  pos->add_option("order", poset_order, "one of C, M, F, Q")->required();
  pos->add_option("action", poset_action, "covers, hasse, or downset")
      ->check(CLI::IsMember(std::vector<std::string>{"covers", "hasse", "downset"}))
      ->required();
  pos->add_option("arg", poset_arg, "composition (covers, downset) or max weight (hasse)")
      ->required();
  add_format(pos, poset_format, {"text", "json", "dot"});
  pos->add_flag("--dot", poset_dot, "shorthand for --format dot (hasse only)");

  std::string ssrct_outer, ssrct_inner;
  int ssrct_max = 0;
  std::string ssrct_format = "text";
  bool ssrct_count = false;
  CLI::App* ssr = app.add_subcommand("ssrct", "enumerate tableaux on a shape");
  ssr->fallthrough();
  ssr->add_option("outer", ssrct_outer, "outer composition")->required();
  ssr->add_option("max_entry", ssrct_max, "largest entry allowed")
      ->check(CLI::PositiveNumber)
      ->required();
  ssr->add_option("--inner", ssrct_inner, "inner composition to remove");
  add_format(ssr, ssrct_format, {"text", "json"});
  ssr->add_flag("--count", ssrct_count, "print only the number of tableaux");

  std::string lr_a, lr_b, lr_g, lr_format = "text";
  CLI::App* lr = app.add_subcommand("lr", "structure coefficient of the S coproduct");
  lr->fallthrough();
  lr->add_option("a", lr_a, "left tensor label")->required();
  lr->add_option("b", lr_b, "right tensor label")->required();
  lr->add_option("g", lr_g, "coproduct argument")->required();
  add_format(lr, lr_format, {"text", "json"});

  std::string map_name_arg, map_basis = "M", map_format = "text", map_arg;
  CLI::App* mp = app.add_subcommand("map", "apply an induced linear map");
  mp->fallthrough();
  mp->add_option("name", map_name_arg, "identity, rho, psi, or omega")->required();
  add_basis(mp, map_basis);
  add_format(mp, map_format, {"text", "json"});
  mp->add_option("a", map_arg, "element (composition or JSON vector)")->required();

  std::string ver_format = "text";
  std::vector<std::string> ver_sets;
  bool ver_list = false;
  CLI::App* ver = app.add_subcommand("verify", "run the verification suite");
  ver->fallthrough();
  add_format(ver, ver_format, {"text", "json"});
  ver->add_option("--set", ver_sets, "override one check's bound, as id=N");
  ver->add_flag("--list", ver_list, "list check ids with their default bounds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (!cache_dir.empty()) set_basis_cache_dir(cache_dir);
    if (cap > 0 && !*ver) set_basis_weight_cap(cap);

    if (*prod) {
      Basis b = basis_from_name(prod_basis);
      QSymVector u = parse_operand(prod_a, b);
      QSymVector v = parse_operand(prod_b, b);
      QSymVector w = b == Basis::M ? m_product(u, v)
                   : b == Basis::F ? f_product(u, v)
                                   : s_product(u, v);
      emit(w, prod_format);
    } else if (*cop) {
      Basis b = basis_from_name(cop_basis);
      QSymVector u = parse_operand(cop_arg, b);
      emit(b == Basis::S ? s_coproduct(u) : coproduct(u), cop_format);
    } else if (*conv) {
      QSymVector u = parse_operand(conv_arg, basis_from_name(conv_from));
      emit(to_basis(u, basis_from_name(conv_to)), conv_format);
    } else if (*pos) {
      OrderTag order = order_from_name(poset_order);
      if (poset_dot) poset_format = "dot";
      if (poset_format == "dot" && poset_action != "hasse")
        throw std::invalid_argument("dot output is only available for hasse");
      if (poset_action == "hasse") {
        HasseDiagram d = hasse(order, parse_weight(poset_arg));
        if (poset_format == "dot") std::cout << hasse_to_dot(d);
        else if (poset_format == "json") std::cout << hasse_to_json(d).dump() << "\n";
        else
          for (const auto& [lo, hi] : d.edges)
            std::cout << paren(lo) << " -> " << paren(hi) << "\n";
      } else {
        Composition a = composition_from_text(poset_arg);
        auto line = [](const std::vector<Composition>& list) {
          std::string out;
          for (const Composition& c : list) {
            if (!out.empty()) out += " ";
            out += paren(c);
          }
          return out;
        };
        if (poset_action == "covers") {
          std::vector<Composition> up = up_covers(order, a);
          std::vector<Composition> down = down_covers(order, a);
          if (poset_format == "json") {
            nlohmann::json j{{"order", order_name(order)}, {"label", to_text(a)}};
            nlohmann::json ju = nlohmann::json::array(), jd = nlohmann::json::array();
            for (const Composition& c : up) ju.push_back(to_text(c));
            for (const Composition& c : down) jd.push_back(to_text(c));
            j["up"] = ju;
            j["down"] = jd;
            std::cout << j.dump() << "\n";
          } else {
            std::cout << "up: " << line(up) << "\n";
            std::cout << "down: " << line(down) << "\n";
          }
        } else {  // downset
          std::vector<Composition> down = down_covers(order, a);
          if (poset_format == "json") {
            nlohmann::json j{{"order", order_name(order)}, {"label", to_text(a)}};
            nlohmann::json jd = nlohmann::json::array();
            for (const Composition& c : down) jd.push_back(to_text(c));
            j["down"] = jd;
            std::cout << j.dump() << "\n";
          } else {
            std::cout << line(down) << "\n";
          }
        }
      }
    } else if (*ssr) {
      SkewReverseShape shape = make_skew_shape(composition_from_text(ssrct_outer),
                                               composition_from_text(ssrct_inner));
      std::vector<Ssrct> all = enumerate_ssrct(shape, ssrct_max);
      if (ssrct_count) {
        std::cout << all.size() << "\n";
      } else if (ssrct_format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const Ssrct& t : all) arr.push_back(ssrct_to_json(t));
        std::cout << arr.dump() << "\n";
      } else {
        for (const Ssrct& t : all) std::cout << tableau_line(t) << "\n";
      }
    } else if (*lr) {
      Composition a = composition_from_text(lr_a);
      Composition b = composition_from_text(lr_b);
      Composition g = composition_from_text(lr_g);
      Rational c = lr_coefficient(a, b, g);
      if (lr_format == "json") {
        nlohmann::json j{{"a", to_text(a)}, {"b", to_text(b)}, {"g", to_text(g)},
                         {"coefficient", rational_text(c)}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << rational_text(c) << "\n";
      }
    } else if (*mp) {
      Basis b = basis_from_name(map_basis);
      QSymVector u = parse_operand(map_arg, b);
      emit(apply_map(map_from_name(map_name_arg), u), map_format);
    } else if (*ver) {
      if (ver_list) {
        VerifyConfig defaults = default_verify_config();
        for (const std::string& id : registered_check_ids())
          std::cout << id << " " << defaults.bounds.at(id) << "\n";
        return 0;
      }
      VerifyConfig config = default_verify_config();
      if (cap > 0)
        for (auto& [id, bound] : config.bounds) bound = cap;
      for (const std::string& s : ver_sets) {
        auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == s.size())
          throw std::invalid_argument("--set expects id=N, got '" + s + "'");
        config.bounds[s.substr(0, eq)] = parse_weight(s.substr(eq + 1));
      }
      VerificationReport report = run_all(config);
      if (ver_format == "json") std::cout << report_to_json(report).dump(2) << "\n";
      else std::cout << report_to_text(report);
      return report.all_pass() ? 0 : 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
