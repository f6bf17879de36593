#include "gengroup/module.hpp"

#include <algorithm>
#include <set>

namespace gengroup {

GeneralizedModule make_module(FiniteRing ring, FiniteMagma carrier, Table action) {
  const auto rep = classify(carrier);
  if (!rep.certificate) {
    throw PreconditionError("module carrier is not a generalized group: " + rep.witness->detail);
  }
  if (action.rows() != ring.size() || action.cols() != carrier.size() ||
      !action.closed_under(carrier.size())) {
    throw PreconditionError("action table must be |R| x |M| with entries in M");
  }
  return GeneralizedModule{std::move(ring), std::move(carrier), *rep.certificate, std::move(action)};
}

Verdict check_generalized_module(const GeneralizedModule& mod) {
  Verdict v;
  v.append(check_ring(mod.ring));

  const auto& RL = mod.ring.labels;
  const auto& ML = mod.carrier.labels;
  const auto& R = mod.ring;
  const std::size_t nr = R.size();
  const std::size_t nm = mod.size();

  std::optional<Witness> ax1, ax2, ax3;
  for (Index r = 0; r < nr; ++r) {
    for (Index s = 0; s < nr; ++s) {
      for (Index m = 0; m < nm; ++m) {
        if (!ax1 && mod.act(R.add(r, s), m) != mod.add(mod.act(r, m), mod.act(s, m))) {
          ax1 = Witness{"MOD-AX1", {r, s, m}, "(" + RL[r] + "+" + RL[s] + ")" + ML[m] + " != " + RL[r] + ML[m] + "+" + RL[s] + ML[m]};
        }
        if (!ax3 && mod.act(r, mod.act(s, m)) != mod.act(R.mul(r, s), m)) {
          ax3 = Witness{"MOD-AX3", {r, s, m}, RL[r] + "(" + RL[s] + ML[m] + ") != (" + RL[r] + RL[s] + ")" + ML[m]};
        }
      }
    }
    for (Index m = 0; m < nm && !ax2; ++m) {
      for (Index n = 0; n < nm; ++n) {
        if (mod.act(r, mod.add(m, n)) != mod.add(mod.act(r, m), mod.act(r, n))) {
          ax2 = Witness{"MOD-AX2", {r, m, n}, RL[r] + "(" + ML[m] + "+" + ML[n] + ") != " + RL[r] + ML[m] + "+" + RL[r] + ML[n]};
          break;
        }
      }
    }
  }
  v.record("MOD-AX1", "(r+s)m = rm+sm", ax1);
  v.record("MOD-AX2", "r(m+n) = rm+rn", ax2);
  v.record("MOD-AX3", "r(sm) = (rs)m", ax3);

  std::optional<Witness> ax4;
  for (Index r = 0; r < nr && !ax4; ++r) {
    for (Index m = 0; m < nm; ++m) {
      const Index lhs = mod.act(r, mod.e(m));
      if (lhs != mod.e(m)) {
        ax4 = Witness{"MOD-AX4", {r, m}, RL[r] + "e(" + ML[m] + ") = " + ML[lhs] + " but e(" + ML[m] + ") = " + ML[mod.e(m)]};
        break;
      }
    }
  }
  v.record("MOD-AX4", "r e(m) = e(m)", ax4);

  std::optional<Witness> ax5;
  for (Index m = 0; m < nm; ++m) {
    if (mod.act(R.one, m) != m) {
      ax5 = Witness{"MOD-AX5", {m}, "1" + ML[m] + " = " + ML[mod.act(R.one, m)]};
      break;
    }
  }
  v.record("MOD-AX5", "1m = m", ax5);

  std::optional<Witness> thm_e, thm_inv, derived;
  for (Index r = 0; r < nr; ++r) {
    for (Index m = 0; m < nm; ++m) {
      const Index rm = mod.act(r, m);
      if (!thm_e && mod.e(rm) != mod.act(r, mod.e(m))) {
        thm_e = Witness{"MOD-THM-E-RM", {r, m}, "e(" + RL[r] + ML[m] + ") != " + RL[r] + "e(" + ML[m] + ")"};
      }
      if (!thm_inv && mod.neg(rm) != mod.act(r, mod.neg(m))) {
        thm_inv = Witness{"MOD-THM-INV-RM", {r, m}, "(" + RL[r] + ML[m] + ")^-1 != " + RL[r] + "(" + ML[m] + "^-1)"};
      }
      if (!derived && mod.e(rm) != mod.e(m)) {
        derived = Witness{"MOD-DERIVED-E-RM", {r, m}, "e(" + RL[r] + ML[m] + ") != e(" + ML[m] + ")"};
      }
    }
  }
  v.record("MOD-THM-E-RM", "e(rm) = r e(m)", thm_e);
  v.record("MOD-THM-INV-RM", "(rm)^-1 = r(m^-1)", thm_inv);
  v.record("MOD-DERIVED-E-RM", "e(rm) = e(m) (derived)", derived, CheckKind::Property);
  return v;
}

bool is_ordinary(const GeneralizedModule& m) {
  const auto rep = classify(m.carrier);
  return rep.classification == Classification::Group && rep.abelian;
}

GeneralizedModule cyclic_module(std::size_t ring_order, std::size_t n) {
  if (n == 0 || ring_order == 0 || ring_order % n != 0) {
    throw PreconditionError("Z_n is a Z_m-module only when n divides m");
  }
  FiniteRing ring = ring_zn(ring_order);
  FiniteMagma carrier = cyclic_group(n);
  Table action(ring_order, n);
  for (Index r = 0; r < ring_order; ++r)
    for (Index x = 0; x < n; ++x) action(r, x) = (r % n) * x % n;
  return make_module(std::move(ring), std::move(carrier), std::move(action));
}

GeneralizedModule regular_module(const FiniteRing& ring) {
  return make_module(ring, ring.additive(), ring.mul);
}

GeneralizedModule zero_module(const FiniteRing& ring) {
  return make_module(ring, FiniteMagma{{"0"}, Table::square(1)}, Table(ring.size(), 1));
}

SkewPairModule skew_pair_module(const GeneralizedModule& base) {
  if (!is_ordinary(base)) throw PreconditionError("skew pair module needs an ordinary module as base");
  const std::size_t n = base.size();
  std::vector<std::string> labels;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) labels.push_back(pair_label(base.carrier.label(x), base.carrier.label(y)));
  Table add = Table::square(n * n);
  for (Index p = 0; p < n * n; ++p)
    for (Index q = 0; q < n * n; ++q) add(p, q) = (p / n) * n + base.add(p % n, q % n);
  Table action(base.ring.size(), n * n);
  for (Index r = 0; r < base.ring.size(); ++r)
    for (Index p = 0; p < n * n; ++p) action(r, p) = (p / n) * n + base.act(r, p % n);
  return SkewPairModule{base, make_module(base.ring, FiniteMagma{std::move(labels), std::move(add)}, std::move(action))};
}

GeneralizedModule restrict_module(const GeneralizedModule& m, std::span<const Index> subset) {
  std::vector<Index> local(m.size(), static_cast<Index>(-1));
  std::vector<std::string> labels;
  for (Index i = 0; i < subset.size(); ++i) {
    local[subset[i]] = i;
    labels.push_back(m.carrier.label(subset[i]));
  }
  const std::size_t k = subset.size();
  Table add = Table::square(k);
  Table action(m.ring.size(), k);
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) {
      const Index s = local[m.add(subset[i], subset[j])];
      if (s == static_cast<Index>(-1)) throw PreconditionError("subset is not closed under +");
      add(i, j) = s;
    }
    for (Index r = 0; r < m.ring.size(); ++r) {
      const Index s = local[m.act(r, subset[i])];
      if (s == static_cast<Index>(-1)) throw PreconditionError("subset is not closed under the action");
      action(r, i) = s;
    }
  }
  return make_module(m.ring, FiniteMagma{std::move(labels), std::move(add)}, std::move(action));
}

FiberSubmodule fiber_submodule(const SkewPairModule& p, Index x) {
  if (x >= p.base.size()) throw PreconditionError("fiber index is not in the base carrier");
  FiberSubmodule out;
  out.x = x;
  for (Index y = 0; y < p.base.size(); ++y) out.subset.push_back(p.pair(x, y));
  out.module = restrict_module(p.module, out.subset);

  out.verification.append(check_generalized_module(out.module));
  const auto rep = classify(out.module.carrier);
  std::optional<Witness> ordinary_fail;
  if (rep.classification != Classification::Group || !rep.abelian) {
    ordinary_fail = rep.witness.value_or(Witness{"FIBER-ABELIAN-GROUP", {}, "fiber is not abelian"});
    ordinary_fail->check = "FIBER-ABELIAN-GROUP";
  } else if (out.module.carrier.label(rep.certificate->identity[0]) !=
             p.module.carrier.label(p.pair(x, p.base.e(0)))) {
    ordinary_fail = Witness{"FIBER-ABELIAN-GROUP", {}, "fiber identity is not (x, 0)"};
  }
  out.verification.record("FIBER-ABELIAN-GROUP", "M_x is an abelian group with identity (x,0)", ordinary_fail);
  return out;
}

bool is_submodule(const GeneralizedModule& m, std::span<const Index> subset) {
  if (!is_generalized_subgroup(m.carrier, m.cert, subset)) return false;
  std::vector<bool> member(m.size(), false);
  for (Index x : subset) member[x] = true;
  for (Index r = 0; r < m.ring.size(); ++r)
    for (Index x : subset)
      if (!member[m.act(r, x)]) return false;
  return true;
}

std::vector<Index> trivial_submodule(const GeneralizedModule& m) {
  const auto rep = classify(m.carrier);
  if (!at_least(rep.classification, Classification::NormalGeneralizedGroup)) {
    throw PreconditionError("e(M) is a submodule only for a normal carrier");
  }
  std::set<Index> ids(m.cert.identity.begin(), m.cert.identity.end());
  return {ids.begin(), ids.end()};
}

Verdict check_module_hom(const GeneralizedModule& src, const GeneralizedModule& dst,
                         std::span<const Index> map) {
  Verdict v;
  if (!(src.ring == dst.ring)) {
    v.fail("HOM-SAME-RING", "source and target share a ring", Witness{"HOM-SAME-RING", {}, "rings differ"});
    return v;
  }
  if (map.size() != src.size() ||
      std::any_of(map.begin(), map.end(), [&](Index y) { return y >= dst.size(); })) {
    v.fail("HOM-TOTAL", "f : M -> N is total", Witness{"HOM-TOTAL", {}, "map has wrong size or range"});
    return v;
  }
  const auto& L = src.carrier.labels;
  std::optional<Witness> add_fail, act_fail;
  for (Index m = 0; m < src.size() && !add_fail; ++m) {
    for (Index n = 0; n < src.size(); ++n) {
      if (map[src.add(m, n)] != dst.add(map[m], map[n])) {
        add_fail = Witness{"HOM-ADD", {m, n}, "f(" + L[m] + "+" + L[n] + ") != f(" + L[m] + ")+f(" + L[n] + ")"};
        break;
      }
    }
  }
  for (Index r = 0; r < src.ring.size() && !act_fail; ++r) {
    for (Index m = 0; m < src.size(); ++m) {
      if (map[src.act(r, m)] != dst.act(r, map[m])) {
        act_fail = Witness{"HOM-ACT", {r, m}, "f(" + src.ring.labels[r] + L[m] + ") != " + src.ring.labels[r] + "f(" + L[m] + ")"};
        break;
      }
    }
  }
  v.record("HOM-ADD", "f(m+n) = f(m)+f(n)", add_fail);
  v.record("HOM-ACT", "f(rm) = r f(m)", act_fail);
  return v;
}

ModuleHom make_module_hom(std::shared_ptr<const GeneralizedModule> src,
                          std::shared_ptr<const GeneralizedModule> dst, std::vector<Index> map) {
  const auto v = check_module_hom(*src, *dst, map);
  if (!v.passed()) throw PreconditionError("not a module homomorphism: " + v.first_witness()->detail);
  return ModuleHom{std::move(src), std::move(dst), std::move(map)};
}

namespace {

constexpr Index kUnassigned = static_cast<Index>(-1);

struct HomSearch {
  const GeneralizedModule& src;
  const GeneralizedModule& dst;
  std::size_t guard;
  std::size_t nodes = 0;
  std::vector<Index> map;
  std::vector<std::vector<Index>> found;

  // Constraints whose every index is already assigned must hold.
  bool consistent(Index k) const {
    for (Index m = 0; m <= k; ++m) {
      for (Index n = 0; n <= k; ++n) {
        const Index s = src.add(m, n);
        if (s <= k && map[s] != dst.add(map[m], map[n])) return false;
      }
      for (Index r = 0; r < src.ring.size(); ++r) {
        const Index s = src.act(r, m);
        if (s <= k && map[s] != dst.act(r, map[m])) return false;
      }
    }
    return true;
  }

  void extend(Index k) {
    if (k == src.size()) {
      found.push_back(map);
      return;
    }
    for (Index y = 0; y < dst.size(); ++y) {
      if (++nodes > guard) throw GuardExceeded("module hom search exceeded its node budget");
      map[k] = y;
      if (consistent(k)) extend(k + 1);
    }
    map[k] = kUnassigned;
  }
};

void require_kernel_preconditions(const ModuleHom& f) {
  for (const auto* m : {f.source.get(), f.target.get()}) {
    if (!at_least(classify(m->carrier).classification, Classification::NormalGeneralizedGroup)) {
      throw PreconditionError("kernel/image need normal generalized modules");
    }
  }
  const auto v = check_module_hom(*f.source, *f.target, f.map);
  if (!v.passed()) throw PreconditionError("not a module homomorphism: " + v.first_witness()->detail);
}

}  // namespace

std::vector<ModuleHom> enumerate_module_homs(std::shared_ptr<const GeneralizedModule> src,
                                             std::shared_ptr<const GeneralizedModule> dst,
                                             std::size_t node_guard) {
  if (!(src->ring == dst->ring)) throw PreconditionError("module homs need a common ring");
  HomSearch search{*src, *dst, node_guard, 0, std::vector<Index>(src->size(), kUnassigned), {}};
  search.extend(0);
  std::vector<ModuleHom> out;
  out.reserve(search.found.size());
  for (auto& map : search.found) out.push_back(ModuleHom{src, dst, std::move(map)});
  return out;
}

std::vector<Index> kernel(const ModuleHom& f) {
  require_kernel_preconditions(f);
  const auto ids = trivial_submodule(*f.target);
  std::vector<Index> out;
  for (Index x = 0; x < f.source->size(); ++x) {
    if (std::binary_search(ids.begin(), ids.end(), f.map[x])) out.push_back(x);
  }
  return out;
}

std::vector<Index> image(const ModuleHom& f) {
  require_kernel_preconditions(f);
  std::set<Index> im(f.map.begin(), f.map.end());
  return {im.begin(), im.end()};
}

std::optional<CyclicPromotion> cyclic_promote(const GeneralizedModule& m) {
  for (Index x = 0; x < m.size(); ++x) {
    std::set<Index> orbit;
    for (Index r = 0; r < m.ring.size(); ++r) orbit.insert(m.act(r, x));
    if (orbit.size() == m.size()) {
      const auto rep = classify(m.carrier);
      return CyclicPromotion{x, rep.classification == Classification::Group && rep.abelian};
    }
  }
  return std::nullopt;
}

GeneralizedModule product_module(const GeneralizedModule& a, const GeneralizedModule& b) {
  if (!(a.ring == b.ring)) throw PreconditionError("product of modules over different rings");
  const std::size_t na = a.size(), nb = b.size();
  std::vector<std::string> labels;
  for (Index i = 0; i < na; ++i)
    for (Index j = 0; j < nb; ++j) labels.push_back(pair_label(a.carrier.label(i), b.carrier.label(j)));
  Table add = Table::square(na * nb);
  for (Index p = 0; p < na * nb; ++p)
    for (Index q = 0; q < na * nb; ++q)
      add(p, q) = a.add(p / nb, q / nb) * nb + b.add(p % nb, q % nb);
  Table action(a.ring.size(), na * nb);
  for (Index r = 0; r < a.ring.size(); ++r)
    for (Index p = 0; p < na * nb; ++p) action(r, p) = a.act(r, p / nb) * nb + b.act(r, p % nb);
  return make_module(a.ring, FiniteMagma{std::move(labels), std::move(add)}, std::move(action));
}

}  // namespace gengroup
