#include "gengroup/groupoid.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace gengroup {

Index FiniteGroupoid::compose_checked(Index f, Index g) const {
  const auto& cell = comp(f, g);
  if (morphisms[f].cod != morphisms[g].dom || !cell) {
    throw std::domain_error("morphisms " + morphisms[f].label + " and " + morphisms[g].label +
                            " are not composable");
  }
  return *cell;
}

std::vector<Index> FiniteGroupoid::hom(Index a, Index b) const {
  std::vector<Index> out;
  for (Index f = 0; f < morphisms.size(); ++f) {
    if (morphisms[f].dom == a && morphisms[f].cod == b) out.push_back(f);
  }
  return out;
}

bool FiniteGroupoid::thin() const {
  std::set<std::pair<Index, Index>> seen;
  for (const auto& m : morphisms) {
    if (!seen.emplace(m.dom, m.cod).second) return false;
  }
  return true;
}

std::vector<std::string> FiniteGroupoid::morphism_labels() const {
  std::vector<std::string> out;
  out.reserve(morphisms.size());
  for (const auto& m : morphisms) out.push_back(m.label);
  return out;
}

std::optional<Index> FiniteGroupoid::find_morphism(std::string_view label) const {
  for (Index f = 0; f < morphisms.size(); ++f)
    if (morphisms[f].label == label) return f;
  return std::nullopt;
}

std::optional<Index> FiniteGroupoid::find_object(std::string_view label) const {
  for (Index a = 0; a < objects.size(); ++a)
    if (objects[a] == label) return a;
  return std::nullopt;
}

void validate_shape(const FiniteGroupoid& g) {
  const std::size_t n_obj = g.objects.size();
  const std::size_t n_mor = g.morphisms.size();
  if (n_obj == 0) throw PreconditionError("groupoid needs at least one object");
  if (g.comp.size() != n_mor) throw PreconditionError("composition table has wrong size");
  if (g.identity.size() != n_obj) throw PreconditionError("identity map has wrong size");
  if (g.inverse.size() != n_mor) throw PreconditionError("inverse map has wrong size");
  for (const auto& m : g.morphisms) {
    if (m.dom >= n_obj || m.cod >= n_obj) {
      throw PreconditionError("morphism " + m.label + " has an out-of-range endpoint");
    }
  }
  for (Index f = 0; f < n_mor; ++f) {
    if (g.inverse[f] >= n_mor) throw PreconditionError("inverse index out of range");
    for (Index h = 0; h < n_mor; ++h) {
      if (g.comp(f, h) && *g.comp(f, h) >= n_mor) {
        throw PreconditionError("composition table entry out of range");
      }
    }
  }
  for (Index id : g.identity)
    if (id >= n_mor) throw PreconditionError("identity index out of range");
}

InferredUnits infer_units(const std::vector<std::string>& objects,
                          const std::vector<Morphism>& morphisms, const PartialTable& comp) {
  InferredUnits out;
  const std::size_t n_mor = morphisms.size();
  std::vector<Index> identity(objects.size());
  for (Index a = 0; a < objects.size(); ++a) {
    std::optional<Index> found;
    for (Index e = 0; e < n_mor && !found; ++e) {
      if (morphisms[e].dom != a || morphisms[e].cod != a) continue;
      bool unit = true;
      for (Index f = 0; f < n_mor && unit; ++f) {
        if (morphisms[f].dom == a && comp(e, f) != std::optional<Index>(f)) unit = false;
        if (morphisms[f].cod == a && comp(f, e) != std::optional<Index>(f)) unit = false;
      }
      if (unit) found = e;
    }
    if (!found) {
      out.failure = Witness{"GPD-IDENTITY", {a}, "object " + objects[a] + " has no identity morphism"};
      return out;
    }
    identity[a] = *found;
  }
  std::vector<Index> inverse(n_mor);
  for (Index f = 0; f < n_mor; ++f) {
    const Index dom_id = identity[morphisms[f].dom];
    const Index cod_id = identity[morphisms[f].cod];
    std::optional<Index> found;
    for (Index g = 0; g < n_mor && !found; ++g) {
      if (comp(f, g) == std::optional<Index>(dom_id) && comp(g, f) == std::optional<Index>(cod_id)) {
        found = g;
      }
    }
    if (!found) {
      out.failure = Witness{"GPD-INVERSE", {f}, "morphism " + morphisms[f].label + " has no inverse"};
      return out;
    }
    inverse[f] = *found;
  }
  out.identity = std::move(identity);
  out.inverse = std::move(inverse);
  return out;
}

Verdict check_groupoid(const FiniteGroupoid& g) {
  Verdict v;
  const std::size_t n_mor = g.morphism_count();
  const auto& M = g.morphisms;

  std::optional<Witness> domain_fail;
  std::optional<Witness> type_fail;
  for (Index f = 0; f < n_mor && !(domain_fail && type_fail); ++f) {
    for (Index h = 0; h < n_mor; ++h) {
      const bool composable = M[f].cod == M[h].dom;
      const auto& cell = g.comp(f, h);
      if (!domain_fail && composable != cell.has_value()) {
        domain_fail = Witness{"GPD-COMP-DOMAIN", {f, h},
                              M[f].label + " o " + M[h].label +
                                  (composable ? " is composable but undefined" : " is defined but cod != dom")};
      }
      if (!type_fail && cell && (M[*cell].dom != M[f].dom || M[*cell].cod != M[h].cod)) {
        type_fail = Witness{"GPD-COMP-TYPE", {f, h},
                            M[f].label + " o " + M[h].label + " = " + M[*cell].label +
                                " has the wrong endpoints"};
      }
    }
  }
  v.record("GPD-COMP-DOMAIN", "f o g defined iff cod f = dom g", domain_fail);
  v.record("GPD-COMP-TYPE", "f o g : dom f -> cod g", type_fail);

  std::optional<Witness> assoc_fail;
  for (Index f = 0; f < n_mor && !assoc_fail; ++f) {
    for (Index h = 0; h < n_mor && !assoc_fail; ++h) {
      const auto& fh = g.comp(f, h);
      if (!fh) continue;
      for (Index k = 0; k < n_mor; ++k) {
        const auto& hk = g.comp(h, k);
        if (!hk) continue;
        const auto l = g.comp(*fh, k);
        const auto r = g.comp(f, *hk);
        if (l != r) {
          assoc_fail = Witness{"GPD-ASSOC", {f, h, k},
                               "(" + M[f].label + " o " + M[h].label + ") o " + M[k].label +
                                   " != " + M[f].label + " o (" + M[h].label + " o " + M[k].label + ")"};
          break;
        }
      }
    }
  }
  v.record("GPD-ASSOC", "(f o g) o h = f o (g o h)", assoc_fail);

  std::optional<Witness> unit_fail;
  for (Index a = 0; a < g.object_count() && !unit_fail; ++a) {
    const Index id = g.identity[a];
    if (M[id].dom != a || M[id].cod != a) {
      unit_fail = Witness{"GPD-IDENTITY", {a, id}, "1_" + g.objects[a] + " = " + M[id].label + " is not a loop at " + g.objects[a]};
      break;
    }
    for (Index f = 0; f < n_mor; ++f) {
      if (M[f].dom == a && g.comp(id, f) != std::optional<Index>(f)) {
        unit_fail = Witness{"GPD-IDENTITY", {a, f}, "1_" + g.objects[a] + " o " + M[f].label + " != " + M[f].label};
        break;
      }
      if (M[f].cod == a && g.comp(f, id) != std::optional<Index>(f)) {
        unit_fail = Witness{"GPD-IDENTITY", {a, f}, M[f].label + " o 1_" + g.objects[a] + " != " + M[f].label};
        break;
      }
    }
  }
  v.record("GPD-IDENTITY", "1_a o f = f, f o 1_b = f", unit_fail);

  std::optional<Witness> inv_fail;
  for (Index f = 0; f < n_mor; ++f) {
    const Index inv = g.inverse[f];
    const auto left = g.comp(f, inv);
    const auto right = g.comp(inv, f);
    const bool ok = left == std::optional<Index>(g.identity[M[f].dom]) &&
                    right == std::optional<Index>(g.identity[M[f].cod]);
    if (!ok) {
      std::string why;
      if (!left) why = M[f].label + " o " + M[inv].label + " is undefined";
      else if (!right) why = M[inv].label + " o " + M[f].label + " is undefined";
      else why = M[inv].label + " is not a two-sided inverse of " + M[f].label;
      inv_fail = Witness{"GPD-INVERSE", {f}, why};
      break;
    }
  }
  v.record("GPD-INVERSE", "f o f^-1 = 1_dom f, f^-1 o f = 1_cod f", inv_fail);
  return v;
}

bool is_connected(const FiniteGroupoid& g) {
  const std::size_t n = g.object_count();
  std::vector<bool> seen(n * n, false);
  for (const auto& m : g.morphisms) seen[m.dom * n + m.cod] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::string TransversalPolicy::describe() const {
  return kind == Kind::Lexicographic ? "lex" : "seed:" + std::to_string(seed);
}

Transversal choose_transversal(const FiniteGroupoid& g, TransversalPolicy policy) {
  const std::size_t n = g.object_count();
  Transversal t{n, std::vector<Index>(n * n, 0)};
  std::mt19937_64 rng(policy.seed);
  for (Index a = 0; a < n; ++a) {
    t.h[a * n + a] = g.identity[a];
    for (Index b = a + 1; b < n; ++b) {
      const auto candidates = g.hom(a, b);
      if (candidates.empty()) {
        throw PreconditionError("groupoid is not connected: hom(" + g.objects[a] + ", " +
                                g.objects[b] + ") is empty");
      }
      Index pick = candidates.front();
      if (policy.kind == TransversalPolicy::Kind::Seeded) {
        // Modulo reduction keeps the choice reproducible across standard libraries.
        pick = candidates[rng() % candidates.size()];
      }
      t.h[a * n + b] = pick;
      t.h[b * n + a] = g.inverse[pick];
    }
  }
  return t;
}

void validate_transversal(const FiniteGroupoid& g, const Transversal& t) {
  const std::size_t n = g.object_count();
  if (t.objects != n || t.h.size() != n * n) throw PreconditionError("transversal has wrong size");
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const Index f = t(a, b);
      if (f >= g.morphism_count() || g.morphisms[f].dom != a || g.morphisms[f].cod != b) {
        throw PreconditionError("transversal entry h[" + g.objects[a] + "][" + g.objects[b] +
                                "] is not a morphism between them");
      }
      if (a == b && f != g.identity[a]) {
        throw PreconditionError("transversal must pick the identity on " + g.objects[a]);
      }
      if (t(b, a) != g.inverse[f]) {
        throw PreconditionError("transversal is not inverse-closed at (" + g.objects[a] + ", " +
                                g.objects[b] + ")");
      }
    }
  }
}

GStar gstar(const FiniteGroupoid& g, const Transversal& t) {
  const auto verdict = check_groupoid(g);
  if (!verdict.passed()) {
    throw PreconditionError("not a groupoid: " + verdict.first_witness()->detail);
  }
  validate_transversal(g, t);

  const std::size_t n = g.morphism_count();
  GStar out;
  out.magma.labels = g.morphism_labels();
  out.magma.table = Table::square(n);
  for (Index f = 0; f < n; ++f) {
    const Index b = g.morphisms[f].cod;
    for (Index h = 0; h < n; ++h) {
      const Index c = g.morphisms[h].dom;
      out.magma.table(f, h) = g.compose_checked(g.compose_checked(f, t(b, c)), h);
    }
  }
  out.formula.identity.resize(n);
  out.formula.inverse.resize(n);
  for (Index f = 0; f < n; ++f) {
    const Index hab = t(g.morphisms[f].dom, g.morphisms[f].cod);
    out.formula.identity[f] = hab;
    out.formula.inverse[f] = g.compose_checked(g.compose_checked(hab, g.inverse[f]), hab);
  }
  return out;
}

FiniteGroupoid pair_groupoid(std::size_t n) {
  if (n == 0) throw PreconditionError("pair groupoid needs n >= 1");
  FiniteGroupoid g;
  g.objects = numeric_labels(n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) g.morphisms.push_back({pair_label(g.objects[x], g.objects[y]), x, y});
  g.comp = PartialTable(n * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z) g.comp(x * n + y, y * n + z) = x * n + z;
  for (Index x = 0; x < n; ++x) g.identity.push_back(x * n + x);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) g.inverse.push_back(y * n + x);
  return g;
}

namespace {

GGCertificate require_group(const FiniteMagma& group) {
  const auto rep = classify(group);
  if (rep.classification != Classification::Group) {
    throw PreconditionError("vertex structure must be a group");
  }
  return *rep.certificate;
}

}  // namespace

FiniteGroupoid one_object_groupoid(const FiniteMagma& group) {
  const auto cert = require_group(group);
  const std::size_t n = group.size();
  FiniteGroupoid g;
  g.objects = {"*"};
  for (Index x = 0; x < n; ++x) g.morphisms.push_back({group.label(x), 0, 0});
  g.comp = PartialTable(n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) g.comp(x, y) = group.op(x, y);
  g.identity = {cert.identity[0]};
  g.inverse = cert.inverse;
  return g;
}

FiniteGroupoid pair_groupoid_with_group(std::size_t n, const FiniteMagma& group) {
  if (n == 0) throw PreconditionError("pair groupoid needs n >= 1");
  const auto cert = require_group(group);
  const std::size_t k = group.size();
  auto index = [n, k](Index x, Index y, Index v) { return (x * n + y) * k + v; };

  FiniteGroupoid g;
  g.objects = numeric_labels(n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index v = 0; v < k; ++v)
        g.morphisms.push_back({"(" + g.objects[x] + "," + g.objects[y] + ";" + group.label(v) + ")", x, y});
  g.comp = PartialTable(n * n * k);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        for (Index u = 0; u < k; ++u)
          for (Index v = 0; v < k; ++v) g.comp(index(x, y, u), index(y, z, v)) = index(x, z, group.op(u, v));
  const Index e = cert.identity[0];
  for (Index x = 0; x < n; ++x) g.identity.push_back(index(x, x, e));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index v = 0; v < k; ++v) g.inverse.push_back(index(y, x, cert.inverse[v]));
  return g;
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const std::size_t oa = a.object_count();
  const std::size_t ma = a.morphism_count();
  FiniteGroupoid g;
  g.objects = a.objects;
  g.objects.insert(g.objects.end(), b.objects.begin(), b.objects.end());
  g.morphisms = a.morphisms;
  for (auto m : b.morphisms) {
    m.dom += oa;
    m.cod += oa;
    g.morphisms.push_back(std::move(m));
  }
  g.comp = PartialTable(g.morphisms.size());
  for (Index f = 0; f < ma; ++f)
    for (Index h = 0; h < ma; ++h) g.comp(f, h) = a.comp(f, h);
  for (Index f = 0; f < b.morphism_count(); ++f)
    for (Index h = 0; h < b.morphism_count(); ++h)
      if (b.comp(f, h)) g.comp(ma + f, ma + h) = ma + *b.comp(f, h);
  g.identity = a.identity;
  for (Index id : b.identity) g.identity.push_back(ma + id);
  g.inverse = a.inverse;
  for (Index inv : b.inverse) g.inverse.push_back(ma + inv);
  return g;
}

}  // namespace gengroup
