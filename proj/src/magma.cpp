#include "gengroup/magma.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace gengroup {

std::optional<Index> FiniteMagma::find(std::string_view label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<Index>(it - labels.begin());
}

FiniteMagma make_magma(std::vector<std::string> labels, Table table) {
  const std::size_t n = labels.size();
  if (n == 0) throw PreconditionError("magma carrier must be non-empty");
  if (table.rows() != n || table.cols() != n) {
    throw PreconditionError("magma table must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  if (!table.closed_under(n)) throw PreconditionError("magma table is not closed");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != n) throw PreconditionError("magma labels must be distinct");
  return FiniteMagma{std::move(labels), std::move(table)};
}

namespace {

constexpr std::array<std::string_view, 5> kClassNames = {
    "not-associative", "semigroup-only", "generalized-group", "normal-generalized-group", "group"};

std::vector<Index> local_identities(const FiniteMagma& m, Index a) {
  std::vector<Index> out;
  for (Index e = 0; e < m.size(); ++e) {
    if (m.op(a, e) == a && m.op(e, a) == a) out.push_back(e);
  }
  return out;
}

}  // namespace

std::string_view to_string(Classification c) { return kClassNames[static_cast<int>(c)]; }

std::optional<Classification> parse_classification(std::string_view s) {
  for (std::size_t i = 0; i < kClassNames.size(); ++i) {
    if (kClassNames[i] == s) return static_cast<Classification>(i);
  }
  return std::nullopt;
}

AssociativityCheck check_associativity(const FiniteMagma& m) {
  const std::size_t n = m.size();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const Index ab = m.op(a, b);
      for (Index c = 0; c < n; ++c) {
        if (m.op(ab, c) != m.op(a, m.op(b, c))) return {false, std::array<Index, 3>{a, b, c}};
      }
    }
  }
  return {true, std::nullopt};
}

StructureReport classify(const FiniteMagma& m) {
  StructureReport rep;
  const std::size_t n = m.size();
  const auto& L = m.labels;

  bool symmetric = true;
  for (Index a = 0; a < n && symmetric; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (m.op(a, b) != m.op(b, a)) {
        symmetric = false;
        break;
      }
    }
  }
  rep.abelian = symmetric;

  auto stop = [&](Classification c, Witness w) {
    rep.classification = c;
    rep.witness = std::move(w);
    return rep;
  };

  const auto assoc = check_associativity(m);
  if (!assoc.associative) {
    const auto [a, b, c] = *assoc.violation;
    Witness w{"ASSOC", {a, b, c},
              "(" + L[a] + L[b] + ")" + L[c] + " = " + L[m.op(m.op(a, b), c)] + " but " + L[a] +
                  "(" + L[b] + L[c] + ") = " + L[m.op(a, m.op(b, c))]};
    rep.checks.fail("ASSOC", "(ab)c = a(bc)", w);
    return stop(Classification::NotAssociative, w);
  }
  rep.checks.pass("ASSOC", "(ab)c = a(bc)");

  GGCertificate cert;
  cert.identity.resize(n);
  cert.inverse.resize(n);
  for (Index a = 0; a < n; ++a) {
    const auto ids = local_identities(m, a);
    if (ids.empty()) {
      Witness w{"GG-AX2-EXISTS", {a}, "no e with " + L[a] + "e = e" + L[a] + " = " + L[a]};
      rep.checks.fail("GG-AX2-EXISTS", "exists e(a): a e(a) = e(a) a = a", w);
      return stop(Classification::SemigroupOnly, w);
    }
    if (ids.size() > 1) {
      Witness w{"GG-AX2-UNIQUE", {a, ids[0], ids[1]},
                L[a] + " has two local identities " + L[ids[0]] + " and " + L[ids[1]]};
      rep.checks.pass("GG-AX2-EXISTS", "exists e(a): a e(a) = e(a) a = a");
      rep.checks.fail("GG-AX2-UNIQUE", "e(a) is unique", w);
      return stop(Classification::SemigroupOnly, w);
    }
    cert.identity[a] = ids.front();
  }
  rep.checks.pass("GG-AX2-EXISTS", "exists e(a): a e(a) = e(a) a = a");
  rep.checks.pass("GG-AX2-UNIQUE", "e(a) is unique");

  for (Index a = 0; a < n; ++a) {
    std::optional<Index> inv;
    for (Index b = 0; b < n && !inv; ++b) {
      if (m.op(a, b) == cert.identity[a] && m.op(b, a) == cert.identity[a]) inv = b;
    }
    if (!inv) {
      Witness w{"GG-AX3-INVERSE", {a},
                "no b with " + L[a] + "b = b" + L[a] + " = e(" + L[a] + ") = " + L[cert.identity[a]]};
      rep.checks.fail("GG-AX3-INVERSE", "a a^-1 = a^-1 a = e(a)", w);
      return stop(Classification::SemigroupOnly, w);
    }
    cert.inverse[a] = *inv;
  }
  rep.checks.pass("GG-AX3-INVERSE", "a a^-1 = a^-1 a = e(a)");

  for (Index a = 0; a < n; ++a) {
    const Index inv = cert.inverse[a];
    if (cert.identity[inv] != cert.identity[a]) {
      Witness w{"GG-INV-SAME-ID", {a, inv},
                "e(" + L[a] + ") = " + L[cert.identity[a]] + " but e(" + L[inv] + ") = " +
                    L[cert.identity[inv]]};
      rep.checks.fail("GG-INV-SAME-ID", "e(a) = e(a^-1)", w);
      return stop(Classification::SemigroupOnly, w);
    }
  }
  rep.checks.pass("GG-INV-SAME-ID", "e(a) = e(a^-1)");
  rep.certificate = cert;

  std::optional<Witness> normal_fail;
  for (Index a = 0; a < n && !normal_fail; ++a) {
    for (Index b = 0; b < n; ++b) {
      const Index lhs = cert.identity[m.op(a, b)];
      const Index rhs = m.op(cert.identity[a], cert.identity[b]);
      if (lhs != rhs) {
        normal_fail = Witness{"NORMAL-E-MULT", {a, b},
                              "e(" + L[a] + L[b] + ") = " + L[lhs] + " but e(" + L[a] + ")e(" +
                                  L[b] + ") = " + L[rhs]};
        break;
      }
    }
  }
  rep.checks.record("NORMAL-E-MULT", "e(ab) = e(a)e(b)", normal_fail, CheckKind::Property);

  std::optional<Witness> group_fail;
  for (Index a = 1; a < n; ++a) {
    if (cert.identity[a] != cert.identity[0]) {
      group_fail = Witness{"GROUP-GLOBAL-ID", {0, a},
                           "e(" + L[0] + ") = " + L[cert.identity[0]] + " but e(" + L[a] +
                               ") = " + L[cert.identity[a]]};
      break;
    }
  }
  rep.checks.record("GROUP-GLOBAL-ID", "e(a) = e(b) for all a, b", group_fail, CheckKind::Property);

  std::optional<Witness> abelian_fail;
  for (Index a = 0; a < n && !abelian_fail; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (m.op(a, b) != m.op(b, a)) {
        abelian_fail = Witness{"ABELIAN", {a, b}, L[a] + L[b] + " != " + L[b] + L[a]};
        break;
      }
    }
  }
  rep.checks.record("ABELIAN", "ab = ba", abelian_fail, CheckKind::Property);

  if (normal_fail) return stop(Classification::GeneralizedGroup, *normal_fail);
  if (group_fail) return stop(Classification::NormalGeneralizedGroup, *group_fail);
  rep.classification = Classification::Group;
  return rep;
}

bool certificate_holds(const FiniteMagma& m, const GGCertificate& cert) {
  const std::size_t n = m.size();
  if (cert.identity.size() != n || cert.inverse.size() != n) return false;
  for (Index a = 0; a < n; ++a) {
    const Index e = cert.identity[a];
    const Index inv = cert.inverse[a];
    if (e >= n || inv >= n) return false;
    const auto ids = local_identities(m, a);
    if (ids.size() != 1 || ids.front() != e) return false;
    if (m.op(a, inv) != e || m.op(inv, a) != e) return false;
    if (cert.identity[inv] != e) return false;
  }
  return true;
}

bool is_generalized_subgroup(const FiniteMagma& m, const GGCertificate& cert,
                             std::span<const Index> subset) {
  if (subset.empty()) throw PreconditionError("generalized subgroup test needs a non-empty subset");
  std::vector<bool> member(m.size(), false);
  for (Index x : subset) {
    if (x >= m.size()) throw PreconditionError("subset index out of range");
    member[x] = true;
  }
  for (Index a : subset) {
    for (Index b : subset) {
      if (!member[m.op(a, cert.inverse[b])]) return false;
    }
  }
  return true;
}

bool is_generalized_subgroup(const FiniteMagma& m, std::span<const Index> subset) {
  const auto rep = classify(m);
  if (!rep.certificate) throw PreconditionError("magma is not a generalized group");
  return is_generalized_subgroup(m, *rep.certificate, subset);
}

FiniteMagma cyclic_group(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic group order must be >= 1");
  Table t = Table::square(n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) t(a, b) = (a + b) % n;
  return FiniteMagma{numeric_labels(n), std::move(t)};
}

FiniteMagma rect_band(std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) throw PreconditionError("rect_band needs p, q >= 1");
  const std::size_t n = p * q;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t l = 0; l < q; ++l) labels.push_back(pair_label(std::to_string(i), std::to_string(l)));
  Table t = Table::square(n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) t(x, y) = (x / q) * q + (y % q);
  return FiniteMagma{std::move(labels), std::move(t)};
}

FiniteMagma complete_digraph_gg(std::size_t n) {
  if (n == 0) throw PreconditionError("complete digraph needs n >= 1 vertices");
  // Edge (u,v) has index u*n + v; f o g runs from start(f) to end(g).
  std::vector<std::string> labels;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) labels.push_back(pair_label(std::to_string(u), std::to_string(v)));
  Table t = Table::square(n * n);
  for (Index f = 0; f < n * n; ++f) {
    const std::size_t start = f / n;
    for (Index g = 0; g < n * n; ++g) {
      const std::size_t end = g % n;
      t(f, g) = start * n + end;
    }
  }
  return FiniteMagma{std::move(labels), std::move(t)};
}

namespace {

constexpr Index kUnset = static_cast<Index>(-1);

struct CensusSearch {
  std::size_t n;
  std::vector<Index> cells;
  Census* out;

  Index at(Index a, Index b) const { return cells[a * n + b]; }

  // Every triple whose four lookups are all filled must associate.
  bool consistent() const {
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        const Index ab = at(a, b);
        if (ab == kUnset) continue;
        for (Index c = 0; c < n; ++c) {
          const Index bc = at(b, c);
          if (bc == kUnset) continue;
          const Index l = at(ab, c);
          const Index r = at(a, bc);
          if (l != kUnset && r != kUnset && l != r) return false;
        }
      }
    }
    return true;
  }

  void fill(std::size_t k) {
    if (k == cells.size()) {
      ++out->semigroups;
      Table t = Table::square(n);
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) t(a, b) = at(a, b);
      FiniteMagma m{numeric_labels(n), std::move(t)};
      const auto rep = classify(m);
      if (at_least(rep.classification, Classification::GeneralizedGroup)) {
        ++out->counts[rep.classification];
        if (rep.abelian) ++out->abelian;
        out->structures.push_back(std::move(m));
      }
      return;
    }
    for (Index v = 0; v < n; ++v) {
      cells[k] = v;
      if (consistent()) fill(k + 1);
    }
    cells[k] = kUnset;
  }
};

}  // namespace

Census enumerate_generalized_groups(std::size_t n) {
  if (n < 1 || n > kMaxCensusOrder) {
    throw PreconditionError("census order must be in 1.." + std::to_string(kMaxCensusOrder));
  }
  Census census;
  census.order = n;
  CensusSearch search{n, std::vector<Index>(n * n, kUnset), &census};
  search.fill(0);
  return census;
}

bool is_magma_hom(const FiniteMagma& src, const FiniteMagma& dst, std::span<const Index> map) {
  if (map.size() != src.size()) return false;
  for (Index x : map)
    if (x >= dst.size()) return false;
  for (Index a = 0; a < src.size(); ++a)
    for (Index b = 0; b < src.size(); ++b)
      if (map[src.op(a, b)] != dst.op(map[a], map[b])) return false;
  return true;
}

std::vector<MagmaHom> enumerate_homs(const FiniteMagma& src, const FiniteMagma& dst) {
  const double space = std::pow(static_cast<double>(dst.size()), static_cast<double>(src.size()));
  if (space > kHomEnumerationGuard) {
    throw GuardExceeded("hom enumeration space " + std::to_string(dst.size()) + "^" +
                        std::to_string(src.size()) + " exceeds 1e7");
  }
  const auto src_rep = classify(src);
  const auto dst_rep = classify(dst);
  const bool both_gg = src_rep.certificate && dst_rep.certificate;

  std::vector<MagmaHom> homs;
  std::vector<Index> map(src.size(), 0);
  while (true) {
    if (is_magma_hom(src, dst, map)) {
      if (both_gg) {
        const auto& se = src_rep.certificate->identity;
        const auto& si = src_rep.certificate->inverse;
        const auto& de = dst_rep.certificate->identity;
        const auto& di = dst_rep.certificate->inverse;
        for (Index a = 0; a < src.size(); ++a) {
          if (map[se[a]] != de[map[a]] || map[si[a]] != di[map[a]]) {
            throw std::logic_error("homomorphism fails to preserve identity/inverse at " + src.label(a));
          }
        }
      }
      homs.push_back(MagmaHom{map});
    }
    // Odometer increment, last position fastest: lexicographic order.
    std::size_t pos = src.size();
    while (pos > 0) {
      --pos;
      if (++map[pos] < dst.size()) break;
      map[pos] = 0;
      if (pos == 0) return homs;
    }
  }
}

}  // namespace gengroup
