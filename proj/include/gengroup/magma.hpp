#pragma once

// Finite magmas and their classification ladder:
//   not-associative < semigroup-only < generalized-group
//     < normal-generalized-group < group.
//
// A generalized group is an associative magma in which every element a has
// a unique local identity e(a) (a e(a) = e(a) a = a) and an inverse a^-1
// with a a^-1 = a^-1 a = e(a). It is normal when e(ab) = e(a) e(b).

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gengroup/common.hpp"

namespace gengroup {

struct FiniteMagma {
  std::vector<std::string> labels;
  Table table;  // table(a, b) = index of a*b

  std::size_t size() const { return labels.size(); }
  Index op(Index a, Index b) const { return table(a, b); }
  const std::string& label(Index a) const { return labels[a]; }
  std::optional<Index> find(std::string_view label) const;

  bool operator==(const FiniteMagma&) const = default;
};

/// Validates n >= 1, a square n x n table, closure and distinct labels.
FiniteMagma make_magma(std::vector<std::string> labels, Table table);

enum class Classification {
  NotAssociative = 0,
  SemigroupOnly = 1,
  GeneralizedGroup = 2,
  NormalGeneralizedGroup = 3,
  Group = 4,
};

std::string_view to_string(Classification c);
std::optional<Classification> parse_classification(std::string_view s);

/// Ladder comparison: a group is also a normal generalized group, etc.
inline bool at_least(Classification c, Classification floor) {
  return static_cast<int>(c) >= static_cast<int>(floor);
}

struct GGCertificate {
  std::vector<Index> identity;  // e(a)
  std::vector<Index> inverse;   // a^-1

  bool operator==(const GGCertificate&) const = default;
};

struct StructureReport {
  Classification classification = Classification::NotAssociative;
  bool abelian = false;
  std::optional<GGCertificate> certificate;  // present iff >= generalized-group
  std::optional<Witness> witness;            // first failure along the ladder
  Verdict checks;
};

struct AssociativityCheck {
  bool associative = true;
  std::optional<std::array<Index, 3>> violation;  // lexicographically first (a,b,c)
};

AssociativityCheck check_associativity(const FiniteMagma& m);

/// Runs the classification ladder and fills certificate or witness.
StructureReport classify(const FiniteMagma& m);

/// Checks the certificate invariants directly against the table: each e(a)
/// is the unique local identity of a, a^-1 is a two-sided inverse onto
/// e(a), and e(a) = e(a^-1).
bool certificate_holds(const FiniteMagma& m, const GGCertificate& cert);

/// True iff a * b^-1 lies in `subset` for all a, b in it.
/// Throws PreconditionError on an empty subset or out-of-range index.
bool is_generalized_subgroup(const FiniteMagma& m, const GGCertificate& cert,
                             std::span<const Index> subset);
/// As above; classifies `m` first and throws if it is not a generalized group.
bool is_generalized_subgroup(const FiniteMagma& m, std::span<const Index> subset);

/// Cyclic group Z_n under addition mod n, labels "0".."n-1".
FiniteMagma cyclic_group(std::size_t n);

/// Rectangular band I x L with (i,l)(j,m) = (i,m); labels "(i,l)".
FiniteMagma rect_band(std::size_t p, std::size_t q);

/// All n^2 edges (u,v) of the complete digraph with loops; f o g is the
/// edge from the start of f to the end of g. Labels "(u,v)".
FiniteMagma complete_digraph_gg(std::size_t n);

/// Largest order accepted by enumerate_generalized_groups.
inline constexpr std::size_t kMaxCensusOrder = 4;

struct Census {
  std::size_t order = 0;
  std::size_t semigroups = 0;                     // associative tables seen
  std::vector<FiniteMagma> structures;            // generalized groups, lexicographic
  std::map<Classification, std::size_t> counts;   // per classification >= generalized-group
  std::size_t abelian = 0;
};

/// Labeled census of all generalized groups on {0..n-1}. Tables are filled
/// cell by cell in row-major order and pruned as soon as a fully determined
/// triple breaks associativity, so output is in lexicographic table order.
Census enumerate_generalized_groups(std::size_t n);

struct MagmaHom {
  std::vector<Index> map;
  bool operator==(const MagmaHom&) const = default;
};

bool is_magma_hom(const FiniteMagma& src, const FiniteMagma& dst, std::span<const Index> map);

/// Upper bound on |dst|^|src| for enumerate_homs.
inline constexpr double kHomEnumerationGuard = 1e7;

/// Every homomorphism src -> dst in lexicographic order of the map.
/// When both sides are generalized groups each hom is additionally checked
/// to carry e(a) to e(f(a)) and a^-1 to f(a)^-1; a failure there throws
/// std::logic_error. Throws GuardExceeded when |dst|^|src| > 1e7.
std::vector<MagmaHom> enumerate_homs(const FiniteMagma& src, const FiniteMagma& dst);

}  // namespace gengroup
