#include "gengroup/ring.hpp"

namespace gengroup {

FiniteRing ring_zn(std::size_t n) {
  if (n == 0) throw PreconditionError("Z_n needs n >= 1");
  FiniteRing r;
  r.labels = numeric_labels(n);
  r.add = Table::square(n);
  r.mul = Table::square(n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      r.add(a, b) = (a + b) % n;
      r.mul(a, b) = (a * b) % n;
    }
  }
  r.zero = 0;
  r.one = 1 % n;
  return r;
}

namespace {

std::optional<Witness> find_mul_assoc_failure(const std::vector<std::string>& L, const Table& mul,
                                              std::string_view id) {
  const std::size_t n = L.size();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          return Witness{std::string(id), {a, b, c}, "(" + L[a] + "*" + L[b] + ")*" + L[c] + " != " + L[a] + "*(" + L[b] + "*" + L[c] + ")"};
  return std::nullopt;
}

std::optional<Witness> find_left_distrib_failure(const std::vector<std::string>& L, const Table& add,
                                                 const Table& mul, std::string_view id) {
  const std::size_t n = L.size();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z)))
          return Witness{std::string(id), {x, y, z}, L[x] + "(" + L[y] + "+" + L[z] + ") = " + L[mul(x, add(y, z))] + " but " + L[x] + L[y] + "+" + L[x] + L[z] + " = " + L[add(mul(x, y), mul(x, z))]};
  return std::nullopt;
}

std::optional<Witness> find_right_distrib_failure(const std::vector<std::string>& L, const Table& add,
                                                  const Table& mul, std::string_view id) {
  const std::size_t n = L.size();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        if (mul(add(x, y), z) != add(mul(x, z), mul(y, z)))
          return Witness{std::string(id), {x, y, z}, "(" + L[x] + "+" + L[y] + ")" + L[z] + " = " + L[mul(add(x, y), z)] + " but " + L[x] + L[z] + "+" + L[y] + L[z] + " = " + L[add(mul(x, z), mul(y, z))]};
  return std::nullopt;
}

}  // namespace

Verdict check_ring(const FiniteRing& r) {
  Verdict v;
  const auto& L = r.labels;
  const auto add_rep = classify(r.additive());
  std::optional<Witness> group_fail;
  if (add_rep.classification != Classification::Group || !add_rep.abelian) {
    group_fail = add_rep.witness.value_or(Witness{"RING-ADD-ABELIAN", {}, "addition is not abelian"});
    group_fail->check = "RING-ADD-ABELIAN";
  } else if (add_rep.certificate->identity[0] != r.zero) {
    group_fail = Witness{"RING-ADD-ABELIAN", {r.zero}, L[r.zero] + " is not the additive identity"};
  }
  v.record("RING-ADD-ABELIAN", "(R, +) abelian group with identity 0", group_fail);
  v.record("RING-MUL-ASSOC", "(xy)z = x(yz)", find_mul_assoc_failure(L, r.mul, "RING-MUL-ASSOC"));
  v.record("RING-DISTRIB-LEFT", "x(y+z) = xy+xz", find_left_distrib_failure(L, r.add, r.mul, "RING-DISTRIB-LEFT"));
  v.record("RING-DISTRIB-RIGHT", "(x+y)z = xz+yz", find_right_distrib_failure(L, r.add, r.mul, "RING-DISTRIB-RIGHT"));
  std::optional<Witness> unit_fail;
  for (Index x = 0; x < r.size(); ++x) {
    if (r.mul(r.one, x) != x || r.mul(x, r.one) != x) {
      unit_fail = Witness{"RING-ONE", {x}, "1*" + L[x] + " or " + L[x] + "*1 != " + L[x]};
      break;
    }
  }
  v.record("RING-ONE", "1x = x1 = x", unit_fail);
  return v;
}

GeneralizedRing as_generalized_ring(const FiniteRing& r) { return {r.labels, r.add, r.mul}; }

Verdict check_generalized_ring(const GeneralizedRing& r) {
  Verdict v;
  const auto& L = r.labels;
  const auto add_rep = classify(r.additive());
  std::optional<Witness> gg_fail;
  if (!add_rep.certificate) {
    gg_fail = add_rep.witness;
    gg_fail->check = "GRING-ADD-GG";
  }
  v.record("GRING-ADD-GG", "(R, +) is a generalized group", gg_fail);
  v.record("GRING-MUL-ASSOC", "(xy)z = x(yz)", find_mul_assoc_failure(L, r.mul, "GRING-MUL-ASSOC"));
  v.record("GRING-DISTRIB-LEFT", "x(y+z) = xy+xz", find_left_distrib_failure(L, r.add, r.mul, "GRING-DISTRIB-LEFT"));
  v.record("GRING-DISTRIB-RIGHT", "(x+y)z = xz+yz", find_right_distrib_failure(L, r.add, r.mul, "GRING-DISTRIB-RIGHT"));

  std::optional<Witness> e_fail;
  if (add_rep.certificate) {
    const auto& e = add_rep.certificate->identity;
    for (Index a = 0; a < r.size() && !e_fail; ++a) {
      for (Index b = 0; b < r.size(); ++b) {
        if (e[r.mul(a, b)] != r.mul(e[a], e[b])) {
          e_fail = Witness{"GRING-E-MULT", {a, b}, "e(" + L[a] + L[b] + ") != e(" + L[a] + ")e(" + L[b] + ")"};
          break;
        }
      }
    }
  } else {
    e_fail = Witness{"GRING-E-MULT", {}, "no e(.) map: addition is not a generalized group"};
  }
  v.record("GRING-E-MULT", "e(ab) = e(a)e(b)", e_fail);
  return v;
}

GeneralizedRing skew_ring(const FiniteRing& base) {
  const std::size_t n = base.size();
  GeneralizedRing r;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) r.labels.push_back(pair_label(base.labels[a], base.labels[b]));
  r.add = Table::square(n * n);
  r.mul = Table::square(n * n);
  for (Index x = 0; x < n * n; ++x) {
    const Index a = x / n, b = x % n;
    for (Index y = 0; y < n * n; ++y) {
      const Index c = y / n, d = y % n;
      r.add(x, y) = a * n + d;
      r.mul(x, y) = base.mul(a, c) * n + base.mul(b, d);
    }
  }
  return r;
}

}  // namespace gengroup
