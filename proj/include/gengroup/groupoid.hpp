#pragma once

// Finite groupoids with explicit partial composition, and the construction
// that totalizes a connected groupoid into a generalized group by routing
// every non-composable pair through a chosen transversal:
//
//   f + g = f o h[b][c] o g      for f: a -> b, g: c -> d.
//
// Composition is written left to right throughout: for f: a -> b and
// g: b -> c, f o g : a -> c.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gengroup/common.hpp"
#include "gengroup/magma.hpp"

namespace gengroup {

struct Morphism {
  std::string label;
  Index dom = 0;
  Index cod = 0;
  bool operator==(const Morphism&) const = default;
};

/// Square table with optional cells; "undefined" is an explicit state.
class PartialTable {
 public:
  PartialTable() = default;
  explicit PartialTable(std::size_t n) : n_(n), cells_(n * n) {}

  std::size_t size() const { return n_; }
  const std::optional<Index>& operator()(Index f, Index g) const { return cells_[f * n_ + g]; }
  std::optional<Index>& operator()(Index f, Index g) { return cells_[f * n_ + g]; }

  bool operator==(const PartialTable&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::optional<Index>> cells_;
};

struct FiniteGroupoid {
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  PartialTable comp;
  std::vector<Index> identity;  // per object
  std::vector<Index> inverse;   // per morphism

  std::size_t object_count() const { return objects.size(); }
  std::size_t morphism_count() const { return morphisms.size(); }
  const Morphism& morphism(Index f) const { return morphisms[f]; }

  std::optional<Index> compose(Index f, Index g) const { return comp(f, g); }
  /// f o g; throws std::domain_error when cod f != dom g or the cell is empty.
  Index compose_checked(Index f, Index g) const;
  /// Morphisms a -> b in index order.
  std::vector<Index> hom(Index a, Index b) const;
  /// True iff every hom-set has at most one element.
  bool thin() const;
  std::vector<std::string> morphism_labels() const;
  std::optional<Index> find_morphism(std::string_view label) const;
  std::optional<Index> find_object(std::string_view label) const;

  bool operator==(const FiniteGroupoid&) const = default;
};

/// Throws PreconditionError if any index is out of range or sizes disagree.
void validate_shape(const FiniteGroupoid& g);

/// Identity of each object and inverse of each morphism, derived from the
/// composition table alone. Fails (nullopt) when some object has no
/// two-sided unit or some morphism has no inverse.
struct InferredUnits {
  std::optional<std::vector<Index>> identity;
  std::optional<std::vector<Index>> inverse;
  std::optional<Witness> failure;
};
InferredUnits infer_units(const std::vector<std::string>& objects,
                          const std::vector<Morphism>& morphisms, const PartialTable& comp);

/// Checks, in order: composability domain, typing of composites,
/// associativity on composable triples, units, and inverses.
Verdict check_groupoid(const FiniteGroupoid& g);

/// hom(a, b) is non-empty for every ordered pair of objects.
bool is_connected(const FiniteGroupoid& g);

struct TransversalPolicy {
  enum class Kind { Lexicographic, Seeded };
  Kind kind = Kind::Lexicographic;
  std::uint64_t seed = 0;

  static TransversalPolicy lexicographic() { return {}; }
  static TransversalPolicy seeded(std::uint64_t s) { return {Kind::Seeded, s}; }
  std::string describe() const;
};

struct Transversal {
  std::size_t objects = 0;
  std::vector<Index> h;  // h[a * objects + b] is a morphism a -> b

  Index operator()(Index a, Index b) const { return h[a * objects + b]; }
  bool operator==(const Transversal&) const = default;
};

/// h[a][a] = 1_a; for a < b picks h[a][b] per policy and sets
/// h[b][a] = h[a][b]^-1. Throws PreconditionError if some hom-set is empty.
Transversal choose_transversal(const FiniteGroupoid& g, TransversalPolicy policy);

/// Throws PreconditionError unless h[a][b] : a -> b, h[a][a] = 1_a and
/// h[b][a] = h[a][b]^-1 for all a, b.
void validate_transversal(const FiniteGroupoid& g, const Transversal& t);

struct GStar {
  FiniteMagma magma;            // carrier = morphisms, labels = morphism labels
  GGCertificate formula;        // e(f) = h[a][b], -f = h[a][b] o f^-1 o h[a][b]
};

/// Totalized operation on the morphisms of a groupoid. Throws
/// PreconditionError if `g` fails check_groupoid or `t` is not a valid
/// transversal for it.
GStar gstar(const FiniteGroupoid& g, const Transversal& t);

/// Pair groupoid on n objects: one morphism (x,y) per ordered pair,
/// (x,y) o (y,z) = (x,z).
FiniteGroupoid pair_groupoid(std::size_t n);

/// A group viewed as a groupoid with a single object "*".
/// Throws PreconditionError unless `group` classifies as a group.
FiniteGroupoid one_object_groupoid(const FiniteMagma& group);

/// Pair groupoid on n objects with every hom-set a copy of `group`:
/// morphisms (x,y;g), (x,y;g) o (y,z;k) = (x,z;gk).
FiniteGroupoid pair_groupoid_with_group(std::size_t n, const FiniteMagma& group);

/// Disjoint union; objects and morphisms of `b` follow those of `a`.
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

}  // namespace gengroup
