#pragma once

// Groupoids whose morphisms also carry a generalized group (and possibly a
// module action), with the structure maps required to be functors.
//
// For + this means: there is an operation on objects such that + maps
// hom(a,b) x hom(c,d) into hom(a+c, b+d), sends identities to identities,
// and satisfies the interchange law (f o g) + (h o k) = (f + h) o (g + k).

#include <memory>
#include <optional>
#include <vector>

#include "gengroup/groupoid.hpp"
#include "gengroup/module.hpp"

namespace gengroup {

struct GGGroupoid {
  FiniteGroupoid groupoid;
  Table add;               // over morphism indices
  std::vector<Index> neg;  // -f
  std::vector<Index> eid;  // e(f)

  FiniteMagma add_magma() const { return FiniteMagma{groupoid.morphism_labels(), add}; }

  bool operator==(const GGGroupoid&) const = default;
};

/// Build from a groupoid and an add table, deriving neg/eid from classify.
/// Throws PreconditionError if the add table is not a generalized group.
GGGroupoid make_gg_groupoid(FiniteGroupoid g, Table add);

/// Groupoid axioms, the generalized-group certificate (eid, neg), direct
/// functoriality of +, -, e (object maps, identities, composition for the
/// unary maps), and the interchange law over every composable quadruple,
/// including that its right side is defined.
Verdict check_gg_groupoid(const GGGroupoid& x);

/// Object-level operation induced by +, when well defined: dom(f+g)
/// depends only on (dom f, dom g) and cod(f+g) on (cod f, cod g).
std::optional<Table> induced_object_operation(const GGGroupoid& x);

/// G x G as a groupoid on objects G with componentwise +.
/// Throws PreconditionError unless g is a generalized group.
GGGroupoid pair_gg_groupoid(const FiniteMagma& g);

struct GMGroupoid {
  GGGroupoid gg;
  FiniteRing ring;
  Table action;  // |R| x |morphisms|

  /// Morphisms with + and the action, as a generalized module.
  GeneralizedModule as_module() const;

  bool operator==(const GMGroupoid&) const = default;
};

struct EtaViolation {
  Index r = 0;
  Index object = 0;
  Index image = 0;  // r 1_x
};

/// Every (r, x) with r 1_x not an identity arrow, lexicographic.
std::vector<EtaViolation> eta_identity_violations(const GMGroupoid& x);

/// Everything check_gg_groupoid checks, the module axioms on morphisms, and
/// for each r that g -> rg preserves identities and composition.
Verdict check_gm_groupoid(const GMGroupoid& x);

/// M x M over an ordinary module M: componentwise + and r(x,y) = (rx, ry).
/// Throws PreconditionError unless the carrier is an abelian group.
GMGroupoid pair_gm_groupoid(const GeneralizedModule& m);

/// Upper bound on the number of morphisms of a product.
inline constexpr std::size_t kProductMorphismGuard = 1'000'000;

/// Componentwise product of a family over a common ring. Throws
/// PreconditionError on ring mismatch or an empty family, GuardExceeded when
/// the product has more than 10^6 morphisms.
GMGroupoid product_gm_groupoid(const std::vector<GMGroupoid>& family);

struct GMGHom {
  std::shared_ptr<const GMGroupoid> source;
  std::shared_ptr<const GMGroupoid> target;
  std::vector<Index> object_map;
  std::vector<Index> morphism_map;
};

/// Functor of the underlying groupoids that preserves + and the action.
Verdict check_gmg_hom(const GMGHom& f);

GMGHom identity_gmg_hom(std::shared_ptr<const GMGroupoid> x);

/// f then g. Throws PreconditionError when f's target is not g's source.
GMGHom then(const GMGHom& f, const GMGHom& g);

/// Equal endpoints (by value) and equal maps.
bool same_hom(const GMGHom& a, const GMGHom& b);

/// Image of a module hom f : M -> N under M |-> M x M:
/// objects m |-> f(m), morphisms (m,n) |-> (f(m), f(n)).
/// Throws PreconditionError unless both modules are ordinary and f is a hom.
GMGHom functor_F(const ModuleHom& f);

}  // namespace gengroup
