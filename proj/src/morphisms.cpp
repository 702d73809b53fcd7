#include "qsym/morphisms.hpp"

#include <stdexcept>

#include "qsym/algebra.hpp"
#include "qsym/schur.hpp"

namespace qsym {

std::string map_name(MapTag t) {
  switch (t) {
    case MapTag::identity: return "identity";
    case MapTag::rho: return "rho";
    case MapTag::psi: return "psi";
    case MapTag::omega: return "omega";
  }
  throw std::logic_error("map_name: unknown map");
}

MapTag map_from_name(const std::string& name) {
  if (name == "identity") return MapTag::identity;
  if (name == "rho") return MapTag::rho;
  if (name == "psi") return MapTag::psi;
  if (name == "omega") return MapTag::omega;
  throw std::invalid_argument("map_from_name: expected identity, rho, psi or omega, got '" + name + "'");
}

Composition map_action(MapTag t, const Composition& a) {
  switch (t) {
    case MapTag::identity: return a;
    case MapTag::rho: return reversal(a);
    case MapTag::psi: return complement(a);
    case MapTag::omega: return transpose(a);
  }
  throw std::logic_error("map_action: unknown map");
}

QSymVector apply_label_map(const LabelMap& f, const QSymVector& u) {
  QSymVector in_f = u;
  switch (u.basis) {
    case Basis::F: break;
    case Basis::M: in_f = m_to_f(u); break;
    case Basis::S: in_f = m_to_f(s_to_m(u)); break;
  }
  QSymVector mapped(Basis::F);
  for (const auto& [a, c] : in_f.terms) mapped.add_term(f(a), c);
  switch (u.basis) {
    case Basis::F: return mapped;
    case Basis::M: return f_to_m(mapped);
    case Basis::S: return m_to_s(f_to_m(mapped));
  }
  throw std::logic_error("apply_label_map: unknown basis");
}

QSymVector apply_map(MapTag t, const QSymVector& u) {
  return apply_label_map([t](const Composition& a) { return map_action(t, a); }, u);
}

MorphismCheck check_algebra_morphism(const LabelMap& f, int bound) {
  MorphismCheck out;
  for (int total = 0; total <= bound; ++total)
    for (int wa = 0; wa <= total; ++wa) {
      int wb = total - wa;
      for (const Composition& a : compositions_of(wa))
        for (const Composition& b : compositions_of(wb)) {
          QSymVector u = QSymVector::basis_element(Basis::F, a);
          QSymVector v = QSymVector::basis_element(Basis::F, b);
          QSymVector lhs = apply_label_map(f, f_product(u, v));
          QSymVector rhs = f_product(apply_label_map(f, u), apply_label_map(f, v));
          if (lhs != rhs) {
            out.pass = false;
            out.witnesses.push_back(to_text(a) + " | " + to_text(b));
            return out;
          }
        }
    }
  return out;
}

MorphismCheck check_coalgebra_morphism(const LabelMap& f, int bound) {
  MorphismCheck out;
  for (int w = 0; w <= bound; ++w)
    for (const Composition& a : compositions_of(w)) {
      QSymVector u = QSymVector::basis_element(Basis::F, a);
      QSymVector mapped = apply_label_map(f, u);
      if (counit(mapped) != counit(u)) {
        out.pass = false;
        out.witnesses.push_back(to_text(a));
        return out;
      }
      TensorVector lhs = coproduct(mapped);
      TensorVector rhs(Basis::F, Basis::F);
      for (const auto& [k, c] : coproduct(u).terms) rhs.add_term(f(k.first), f(k.second), c);
      if (lhs != rhs) {
        out.pass = false;
        out.witnesses.push_back(to_text(a));
        return out;
      }
    }
  return out;
}

std::map<Composition, std::optional<Composition>>
basis_preservation_table(MapTag t, Basis basis, int bound) {
  std::map<Composition, std::optional<Composition>> out;
  for (int w = 1; w <= bound; ++w)
    for (const Composition& a : compositions_of(w)) {
      QSymVector img = apply_map(t, QSymVector::basis_element(basis, a));
      std::optional<Composition> target;
      if (img.terms.size() == 1) {
        const auto& [b, c] = *img.terms.begin();
        if (c == 1 || c == -1) target = b;
      }
      out.emplace(a, std::move(target));
    }
  return out;
}

bool preserves_basis(MapTag t, Basis basis, int bound, std::optional<Composition>* first_failure) {
  for (int w = 1; w <= bound; ++w)
    for (const Composition& a : compositions_of(w)) {
      QSymVector img = apply_map(t, QSymVector::basis_element(basis, a));
      bool ok = false;
      if (img.terms.size() == 1) {
        const auto& c = img.terms.begin()->second;
        ok = (c == 1 || c == -1);
      }
      if (!ok) {
        if (first_failure) *first_failure = a;
        return false;
      }
    }
  return true;
}

}  // namespace qsym
