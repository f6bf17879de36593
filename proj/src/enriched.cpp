#include "gengroup/enriched.hpp"

#include <functional>

namespace gengroup {

GGGroupoid make_gg_groupoid(FiniteGroupoid g, Table add) {
  FiniteMagma magma{g.morphism_labels(), add};
  const auto rep = classify(magma);
  if (!rep.certificate) throw PreconditionError("morphism addition is not a generalized group");
  return GGGroupoid{std::move(g), std::move(add), rep.certificate->inverse, rep.certificate->identity};
}

std::optional<Table> induced_object_operation(const GGGroupoid& x) {
  const auto& g = x.groupoid;
  const std::size_t n_obj = g.object_count();
  constexpr Index kNone = static_cast<Index>(-1);
  Table dom_op(n_obj, n_obj, kNone);
  Table cod_op(n_obj, n_obj, kNone);
  for (Index f = 0; f < g.morphism_count(); ++f) {
    for (Index h = 0; h < g.morphism_count(); ++h) {
      const auto& s = g.morphism(x.add(f, h));
      const auto& mf = g.morphism(f);
      const auto& mh = g.morphism(h);
      Index& d = dom_op(mf.dom, mh.dom);
      Index& c = cod_op(mf.cod, mh.cod);
      if (d == kNone) d = s.dom;
      if (c == kNone) c = s.cod;
      if (d != s.dom || c != s.cod) return std::nullopt;
    }
  }
  // The same object operation must govern domains and codomains.
  for (Index a = 0; a < n_obj; ++a)
    for (Index b = 0; b < n_obj; ++b)
      if (dom_op(a, b) != kNone && cod_op(a, b) != kNone && dom_op(a, b) != cod_op(a, b)) return std::nullopt;
  for (Index a = 0; a < n_obj; ++a)
    for (Index b = 0; b < n_obj; ++b)
      if (dom_op(a, b) == kNone) dom_op(a, b) = cod_op(a, b);
  return dom_op;
}

namespace {

// Direct functoriality of a unary structure map on morphisms.
std::optional<Witness> unary_functor_failure(const FiniteGroupoid& g, const std::vector<Index>& map,
                                             const std::string& id, const std::string& name) {
  const auto& M = g.morphisms;
  constexpr Index kNone = static_cast<Index>(-1);
  std::vector<Index> obj(g.object_count(), kNone);
  for (Index f = 0; f < g.morphism_count(); ++f) {
    const auto& img = M[map[f]];
    for (auto [src, dst] : {std::pair{M[f].dom, img.dom}, std::pair{M[f].cod, img.cod}}) {
      if (obj[src] == kNone) obj[src] = dst;
      if (obj[src] != dst) {
        return Witness{id, {f}, name + "(" + M[f].label + ") = " + img.label + " breaks the object map at " + g.objects[src]};
      }
    }
  }
  for (Index a = 0; a < g.object_count(); ++a) {
    const Index img = map[g.identity[a]];
    if (M[img].dom != M[img].cod || g.identity[M[img].dom] != img) {
      return Witness{id, {g.identity[a]}, name + "(1_" + g.objects[a] + ") = " + M[img].label + " is not an identity"};
    }
  }
  for (Index f = 0; f < g.morphism_count(); ++f) {
    for (Index h = 0; h < g.morphism_count(); ++h) {
      const auto fh = g.compose(f, h);
      if (!fh) continue;
      const auto rhs = g.compose(map[f], map[h]);
      if (rhs != std::optional<Index>(map[*fh])) {
        return Witness{id, {f, h},
                       name + "(" + M[f].label + " o " + M[h].label + ") != " + name + "(" + M[f].label + ") o " + name + "(" + M[h].label + ")"};
      }
    }
  }
  return std::nullopt;
}

template <typename Fn>
void for_each_composable_pair(const FiniteGroupoid& g, Fn&& fn) {
  for (Index f = 0; f < g.morphism_count(); ++f)
    for (Index h = 0; h < g.morphism_count(); ++h)
      if (auto fh = g.compose(f, h)) {
        if (!fn(f, h, *fh)) return;
      }
}

std::string tuple_label(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  return out + ")";
}

}  // namespace

Verdict check_gg_groupoid(const GGGroupoid& x) {
  Verdict v;
  const auto& g = x.groupoid;
  const auto& M = g.morphisms;
  v.append(check_groupoid(g));

  const auto rep = classify(x.add_magma());
  std::optional<Witness> cert_fail;
  if (!rep.certificate) {
    cert_fail = rep.witness;
    cert_fail->check = "GGG-ADD-CERT";
  } else if (rep.certificate->identity != x.eid || rep.certificate->inverse != x.neg) {
    cert_fail = Witness{"GGG-ADD-CERT", {}, "declared e/neg maps differ from the classified certificate"};
  }
  v.record("GGG-ADD-CERT", "(morphisms, +) generalized group with certificate (e, -)", cert_fail);

  const auto obj_op = induced_object_operation(x);
  v.record("FUNCTOR-ADD-OBJ", "+ : hom(a,b) x hom(c,d) -> hom(a+c, b+d)",
           obj_op ? std::nullopt
                  : std::optional<Witness>(Witness{"FUNCTOR-ADD-OBJ", {}, "endpoints of f+g are not determined by those of f and g"}));

  std::optional<Witness> add_id_fail;
  if (obj_op) {
    for (Index a = 0; a < g.object_count() && !add_id_fail; ++a) {
      for (Index c = 0; c < g.object_count(); ++c) {
        const Index s = x.add(g.identity[a], g.identity[c]);
        if (s != g.identity[(*obj_op)(a, c)]) {
          add_id_fail = Witness{"FUNCTOR-ADD-ID", {g.identity[a], g.identity[c]},
                                "1_" + g.objects[a] + " + 1_" + g.objects[c] + " = " + M[s].label + " is not an identity"};
          break;
        }
      }
    }
  } else {
    add_id_fail = Witness{"FUNCTOR-ADD-ID", {}, "no induced object operation"};
  }
  v.record("FUNCTOR-ADD-ID", "1_a + 1_c = 1_(a+c)", add_id_fail);
  v.record("FUNCTOR-NEG", "- is a functor", unary_functor_failure(g, x.neg, "FUNCTOR-NEG", "-"));
  v.record("FUNCTOR-EID", "e is a functor", unary_functor_failure(g, x.eid, "FUNCTOR-EID", "e"));

  std::optional<Witness> inter_fail;
  for_each_composable_pair(g, [&](Index f, Index gg, Index fg) {
    for_each_composable_pair(g, [&](Index h, Index k, Index hk) {
      const Index lhs = x.add(fg, hk);
      const auto rhs = g.compose(x.add(f, h), x.add(gg, k));
      if (rhs != std::optional<Index>(lhs)) {
        const std::string l = "(" + M[f].label + " o " + M[gg].label + ") + (" + M[h].label + " o " + M[k].label + ")";
        const std::string r = "(" + M[f].label + " + " + M[h].label + ") o (" + M[gg].label + " + " + M[k].label + ")";
        inter_fail = Witness{"INTERCHANGE", {f, gg, h, k},
                             rhs ? l + " = " + M[lhs].label + " but " + r + " = " + M[*rhs].label
                                 : r + " is undefined"};
        return false;
      }
      return true;
    });
    return !inter_fail;
  });
  v.record("INTERCHANGE", "(f o g) + (h o k) = (f + h) o (g + k)", inter_fail);
  return v;
}

GGGroupoid pair_gg_groupoid(const FiniteMagma& gm) {
  const auto rep = classify(gm);
  if (!rep.certificate) throw PreconditionError("pair construction needs a generalized group");
  const auto& cert = *rep.certificate;
  const std::size_t n = gm.size();

  GGGroupoid x;
  x.groupoid = pair_groupoid(n);
  x.groupoid.objects = gm.labels;
  for (Index f = 0; f < n * n; ++f) x.groupoid.morphisms[f].label = pair_label(gm.label(f / n), gm.label(f % n));
  x.add = Table::square(n * n);
  for (Index f = 0; f < n * n; ++f)
    for (Index h = 0; h < n * n; ++h) x.add(f, h) = gm.op(f / n, h / n) * n + gm.op(f % n, h % n);
  for (Index f = 0; f < n * n; ++f) {
    x.neg.push_back(cert.inverse[f / n] * n + cert.inverse[f % n]);
    x.eid.push_back(cert.identity[f / n] * n + cert.identity[f % n]);
  }
  return x;
}

GeneralizedModule GMGroupoid::as_module() const { return make_module(ring, gg.add_magma(), action); }

std::vector<EtaViolation> eta_identity_violations(const GMGroupoid& x) {
  const auto& g = x.gg.groupoid;
  std::vector<EtaViolation> out;
  for (Index r = 0; r < x.ring.size(); ++r) {
    for (Index a = 0; a < g.object_count(); ++a) {
      const Index img = x.action(r, g.identity[a]);
      const auto& m = g.morphism(img);
      if (m.dom != m.cod || g.identity[m.dom] != img) out.push_back({r, a, img});
    }
  }
  return out;
}

Verdict check_gm_groupoid(const GMGroupoid& x) {
  Verdict v = check_gg_groupoid(x.gg);
  const auto& g = x.gg.groupoid;
  const auto& M = g.morphisms;
  const auto& RL = x.ring.labels;

  if (x.action.rows() != x.ring.size() || x.action.cols() != g.morphism_count() ||
      !x.action.closed_under(g.morphism_count())) {
    v.fail("GMG-ACTION-SHAPE", "action is |R| x |morphisms|", Witness{"GMG-ACTION-SHAPE", {}, "malformed action table"});
    return v;
  }
  if (classify(x.gg.add_magma()).certificate) {
    v.append(check_generalized_module(x.as_module()));
  } else {
    v.fail("MOD-CARRIER", "morphisms form a generalized group",
           Witness{"MOD-CARRIER", {}, "module axioms need a generalized-group carrier"});
  }

  const auto eta = eta_identity_violations(x);
  std::optional<Witness> eta_id;
  if (!eta.empty()) {
    const auto& e = eta.front();
    eta_id = Witness{"ETA-FUNCTOR-ID", {e.r, e.object, e.image},
                     "eta_" + RL[e.r] + "(1_" + g.objects[e.object] + ") = " + M[e.image].label + " is not an identity arrow"};
  }
  v.record("ETA-FUNCTOR-ID", "eta_r(1_x) is an identity arrow", eta_id);

  std::optional<Witness> eta_comp;
  for (Index r = 0; r < x.ring.size() && !eta_comp; ++r) {
    for_each_composable_pair(g, [&](Index f, Index h, Index fh) {
      const auto rhs = g.compose(x.action(r, f), x.action(r, h));
      if (rhs != std::optional<Index>(x.action(r, fh))) {
        eta_comp = Witness{"ETA-FUNCTOR-COMP", {r, f, h},
                           RL[r] + "(" + M[f].label + " o " + M[h].label + ") != " + RL[r] + M[f].label + " o " + RL[r] + M[h].label};
        return false;
      }
      return true;
    });
  }
  v.record("ETA-FUNCTOR-COMP", "r(g o h) = rg o rh", eta_comp);
  return v;
}

GMGroupoid pair_gm_groupoid(const GeneralizedModule& m) {
  if (!is_ordinary(m)) throw PreconditionError("pair module groupoid needs an ordinary module");
  GMGroupoid x{pair_gg_groupoid(m.carrier), m.ring, Table(m.ring.size(), m.size() * m.size())};
  const std::size_t n = m.size();
  for (Index r = 0; r < m.ring.size(); ++r)
    for (Index f = 0; f < n * n; ++f) x.action(r, f) = m.act(r, f / n) * n + m.act(r, f % n);
  return x;
}

GMGroupoid product_gm_groupoid(const std::vector<GMGroupoid>& family) {
  if (family.empty()) throw PreconditionError("product needs a non-empty family");
  for (const auto& f : family) {
    if (!(f.ring == family.front().ring)) throw PreconditionError("product factors over different rings");
  }
  double total = 1;
  std::size_t n_mor = 1, n_obj = 1;
  for (const auto& f : family) {
    total *= static_cast<double>(f.gg.groupoid.morphism_count());
    n_mor *= f.gg.groupoid.morphism_count();
    n_obj *= f.gg.groupoid.object_count();
  }
  if (total > static_cast<double>(kProductMorphismGuard)) {
    throw GuardExceeded("product would have more than 10^6 morphisms");
  }

  const std::size_t k = family.size();
  // Mixed-radix digits; the first factor is most significant.
  auto digits = [&](Index idx, auto count) {
    std::vector<Index> d(k);
    for (std::size_t i = k; i-- > 0;) {
      const std::size_t base = count(family[i]);
      d[i] = idx % base;
      idx /= base;
    }
    return d;
  };
  auto compose_index = [&](const std::vector<Index>& d, auto count) {
    Index idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * count(family[i]) + d[i];
    return idx;
  };
  auto mor_count = [](const GMGroupoid& f) { return f.gg.groupoid.morphism_count(); };
  auto obj_count = [](const GMGroupoid& f) { return f.gg.groupoid.object_count(); };

  GMGroupoid out;
  out.ring = family.front().ring;
  auto& g = out.gg.groupoid;
  for (Index o = 0; o < n_obj; ++o) {
    const auto d = digits(o, obj_count);
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < k; ++i) parts.push_back(family[i].gg.groupoid.objects[d[i]]);
    g.objects.push_back(tuple_label(parts));
  }
  std::vector<std::vector<Index>> mdig(n_mor);
  for (Index f = 0; f < n_mor; ++f) {
    mdig[f] = digits(f, mor_count);
    std::vector<std::string> parts;
    std::vector<Index> dom(k), cod(k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& m = family[i].gg.groupoid.morphism(mdig[f][i]);
      parts.push_back(m.label);
      dom[i] = m.dom;
      cod[i] = m.cod;
    }
    g.morphisms.push_back({tuple_label(parts), compose_index(dom, obj_count), compose_index(cod, obj_count)});
  }
  g.comp = PartialTable(n_mor);
  out.gg.add = Table::square(n_mor);
  std::vector<Index> d(k);
  for (Index f = 0; f < n_mor; ++f) {
    for (Index h = 0; h < n_mor; ++h) {
      bool defined = true;
      for (std::size_t i = 0; i < k && defined; ++i) {
        const auto c = family[i].gg.groupoid.compose(mdig[f][i], mdig[h][i]);
        if (c) d[i] = *c;
        else defined = false;
      }
      if (defined) g.comp(f, h) = compose_index(d, mor_count);
      for (std::size_t i = 0; i < k; ++i) d[i] = family[i].gg.add(mdig[f][i], mdig[h][i]);
      out.gg.add(f, h) = compose_index(d, mor_count);
    }
  }
  for (Index o = 0; o < n_obj; ++o) {
    const auto od = digits(o, obj_count);
    for (std::size_t i = 0; i < k; ++i) d[i] = family[i].gg.groupoid.identity[od[i]];
    g.identity.push_back(compose_index(d, mor_count));
  }
  for (Index f = 0; f < n_mor; ++f) {
    for (std::size_t i = 0; i < k; ++i) d[i] = family[i].gg.groupoid.inverse[mdig[f][i]];
    g.inverse.push_back(compose_index(d, mor_count));
    for (std::size_t i = 0; i < k; ++i) d[i] = family[i].gg.neg[mdig[f][i]];
    out.gg.neg.push_back(compose_index(d, mor_count));
    for (std::size_t i = 0; i < k; ++i) d[i] = family[i].gg.eid[mdig[f][i]];
    out.gg.eid.push_back(compose_index(d, mor_count));
  }
  out.action = Table(out.ring.size(), n_mor);
  for (Index r = 0; r < out.ring.size(); ++r) {
    for (Index f = 0; f < n_mor; ++f) {
      for (std::size_t i = 0; i < k; ++i) d[i] = family[i].action(r, mdig[f][i]);
      out.action(r, f) = compose_index(d, mor_count);
    }
  }
  return out;
}

Verdict check_gmg_hom(const GMGHom& F) {
  Verdict v;
  const auto& src = F.source->gg.groupoid;
  const auto& dst = F.target->gg.groupoid;
  const auto& M = src.morphisms;
  if (F.object_map.size() != src.object_count() || F.morphism_map.size() != src.morphism_count()) {
    v.fail("FUN-SHAPE", "maps are total", Witness{"FUN-SHAPE", {}, "map sizes disagree with the source"});
    return v;
  }

  std::optional<Witness> obj_fail;
  for (Index f = 0; f < src.morphism_count(); ++f) {
    const auto& img = dst.morphism(F.morphism_map[f]);
    if (img.dom != F.object_map[M[f].dom] || img.cod != F.object_map[M[f].cod]) {
      obj_fail = Witness{"FUN-OBJ", {f}, "F(" + M[f].label + ") has the wrong endpoints"};
      break;
    }
  }
  v.record("FUN-OBJ", "F(f) : F(dom f) -> F(cod f)", obj_fail);

  std::optional<Witness> id_fail;
  for (Index a = 0; a < src.object_count(); ++a) {
    if (F.morphism_map[src.identity[a]] != dst.identity[F.object_map[a]]) {
      id_fail = Witness{"FUN-ID", {a}, "F(1_" + src.objects[a] + ") != 1_F(" + src.objects[a] + ")"};
      break;
    }
  }
  v.record("FUN-ID", "F(1_a) = 1_F(a)", id_fail);

  std::optional<Witness> comp_fail;
  for_each_composable_pair(src, [&](Index f, Index h, Index fh) {
    if (dst.compose(F.morphism_map[f], F.morphism_map[h]) != std::optional<Index>(F.morphism_map[fh])) {
      comp_fail = Witness{"FUN-COMP", {f, h}, "F(" + M[f].label + " o " + M[h].label + ") != F(" + M[f].label + ") o F(" + M[h].label + ")"};
      return false;
    }
    return true;
  });
  v.record("FUN-COMP", "F(f o g) = F(f) o F(g)", comp_fail);

  std::optional<Witness> add_fail;
  for (Index f = 0; f < src.morphism_count() && !add_fail; ++f) {
    for (Index h = 0; h < src.morphism_count(); ++h) {
      if (F.morphism_map[F.source->gg.add(f, h)] != F.target->gg.add(F.morphism_map[f], F.morphism_map[h])) {
        add_fail = Witness{"FUN-ADD", {f, h}, "F(" + M[f].label + " + " + M[h].label + ") != F(" + M[f].label + ") + F(" + M[h].label + ")"};
        break;
      }
    }
  }
  v.record("FUN-ADD", "F(f + g) = F(f) + F(g)", add_fail);

  std::optional<Witness> act_fail;
  if (!(F.source->ring == F.target->ring)) {
    act_fail = Witness{"FUN-ACT", {}, "rings differ"};
  } else {
    for (Index r = 0; r < F.source->ring.size() && !act_fail; ++r) {
      for (Index f = 0; f < src.morphism_count(); ++f) {
        if (F.morphism_map[F.source->action(r, f)] != F.target->action(r, F.morphism_map[f])) {
          act_fail = Witness{"FUN-ACT", {r, f}, "F(" + F.source->ring.labels[r] + M[f].label + ") != " + F.source->ring.labels[r] + "F(" + M[f].label + ")"};
          break;
        }
      }
    }
  }
  v.record("FUN-ACT", "F(rf) = rF(f)", act_fail);
  return v;
}

GMGHom identity_gmg_hom(std::shared_ptr<const GMGroupoid> x) {
  GMGHom h{x, x, {}, {}};
  for (Index a = 0; a < x->gg.groupoid.object_count(); ++a) h.object_map.push_back(a);
  for (Index f = 0; f < x->gg.groupoid.morphism_count(); ++f) h.morphism_map.push_back(f);
  return h;
}

GMGHom then(const GMGHom& f, const GMGHom& g) {
  if (!(*f.target == *g.source)) throw PreconditionError("cannot compose: target differs from source");
  GMGHom out{f.source, g.target, {}, {}};
  for (Index a : f.object_map) out.object_map.push_back(g.object_map[a]);
  for (Index m : f.morphism_map) out.morphism_map.push_back(g.morphism_map[m]);
  return out;
}

bool same_hom(const GMGHom& a, const GMGHom& b) {
  return *a.source == *b.source && *a.target == *b.target && a.object_map == b.object_map &&
         a.morphism_map == b.morphism_map;
}

GMGHom functor_F(const ModuleHom& f) {
  if (!is_ordinary(*f.source) || !is_ordinary(*f.target)) {
    throw PreconditionError("F is defined here on homs between ordinary modules");
  }
  const auto v = check_module_hom(*f.source, *f.target, f.map);
  if (!v.passed()) throw PreconditionError("not a module homomorphism: " + v.first_witness()->detail);

  auto src = std::make_shared<const GMGroupoid>(pair_gm_groupoid(*f.source));
  auto dst = std::make_shared<const GMGroupoid>(pair_gm_groupoid(*f.target));
  const std::size_t n = f.source->size();
  const std::size_t m = f.target->size();
  GMGHom out{src, dst, f.map, {}};
  for (Index p = 0; p < n * n; ++p) out.morphism_map.push_back(f.map[p / n] * m + f.map[p % n]);
  return out;
}

}  // namespace gengroup
