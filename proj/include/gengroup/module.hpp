#pragma once

// Generalized modules: a generalized group (M, +) with a scalar action of a
// ring with unity satisfying
//   (r+s)m = rm + sm,  r(m+n) = rm + rn,  r(sm) = (rs)m,
//   r e(m) = e(m),     1m = m.
// Ordinary modules are the special case whose carrier is an abelian group.

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "gengroup/common.hpp"
#include "gengroup/magma.hpp"
#include "gengroup/ring.hpp"

namespace gengroup {

struct GeneralizedModule {
  FiniteRing ring;
  FiniteMagma carrier;
  GGCertificate cert;  // e(.) and inverse of the carrier
  Table action;        // action(r, m) = rm, |R| x |M|

  std::size_t size() const { return carrier.size(); }
  Index add(Index m, Index n) const { return carrier.op(m, n); }
  Index act(Index r, Index m) const { return action(r, m); }
  Index e(Index m) const { return cert.identity[m]; }
  Index neg(Index m) const { return cert.inverse[m]; }
};

/// Classifies the carrier and validates the action table's shape.
/// Throws PreconditionError if the carrier is not a generalized group or the
/// action table is not |R| x |M| with entries in M.
GeneralizedModule make_module(FiniteRing ring, FiniteMagma carrier, Table action);

/// The five action axioms, exhaustively, followed by the consequences
/// e(rm) = r e(m) and (rm)^-1 = r(m^-1), and the derived e(rm) = e(m).
/// Ring axioms are checked first and prefixed to the report.
Verdict check_generalized_module(const GeneralizedModule& m);

/// Carrier is an abelian group.
bool is_ordinary(const GeneralizedModule& m);

/// Z_n as a module over ring Z_m via r.x = (r mod n) x; requires n | m.
GeneralizedModule cyclic_module(std::size_t ring_order, std::size_t n);

/// R over itself: carrier (R, +), action r.x = rx.
GeneralizedModule regular_module(const FiniteRing& ring);

/// The one-element module over `ring`.
GeneralizedModule zero_module(const FiniteRing& ring);

struct SkewPairModule {
  GeneralizedModule base;
  GeneralizedModule module;

  /// Index of (x, y) in the pair carrier.
  Index pair(Index x, Index y) const { return x * base.size() + y; }
};

/// M x M with (x,y) + (m,n) = (x, y+n) and r(x,y) = (x, ry), where M is an
/// ordinary module. Throws PreconditionError if the base carrier is not an
/// abelian group.
SkewPairModule skew_pair_module(const GeneralizedModule& base);

struct FiberSubmodule {
  Index x = 0;
  std::vector<Index> subset;   // {(x, y) : y in M}, in y order
  GeneralizedModule module;    // the fiber as a standalone module
  Verdict verification;
};

/// The fiber over x and a check that it is an ordinary module.
FiberSubmodule fiber_submodule(const SkewPairModule& p, Index x);

/// Generalized subgroup (a b^-1 closure) that is closed under the action.
/// Throws PreconditionError on an empty subset.
bool is_submodule(const GeneralizedModule& m, std::span<const Index> subset);

/// Restriction of m to a subset closed under + and the action.
/// Throws PreconditionError if the subset is not closed.
GeneralizedModule restrict_module(const GeneralizedModule& m, std::span<const Index> subset);

/// e(M) = {e(x)}, sorted. Throws PreconditionError unless the carrier is a
/// normal generalized group.
std::vector<Index> trivial_submodule(const GeneralizedModule& m);

struct ModuleHom {
  std::shared_ptr<const GeneralizedModule> source;
  std::shared_ptr<const GeneralizedModule> target;
  std::vector<Index> map;
};

/// f(m+n) = f(m)+f(n) and f(rm) = r f(m); requires equal rings.
Verdict check_module_hom(const GeneralizedModule& src, const GeneralizedModule& dst,
                         std::span<const Index> map);

/// Throws PreconditionError if the rings differ or `map` is not a hom.
ModuleHom make_module_hom(std::shared_ptr<const GeneralizedModule> src,
                          std::shared_ptr<const GeneralizedModule> dst, std::vector<Index> map);

/// Search-node budget for enumerate_module_homs.
inline constexpr std::size_t kModuleHomNodeGuard = 10'000'000;

/// All module homs src -> dst in lexicographic order of the map, by
/// backtracking with early constraint checks. Throws GuardExceeded when the
/// search visits more than `node_guard` partial maps.
std::vector<ModuleHom> enumerate_module_homs(std::shared_ptr<const GeneralizedModule> src,
                                             std::shared_ptr<const GeneralizedModule> dst,
                                             std::size_t node_guard = kModuleHomNodeGuard);

/// {x : f(x) in e(N)}. Both modules must be normal and f a hom.
std::vector<Index> kernel(const ModuleHom& f);
/// {f(x)}, sorted. Same preconditions as kernel.
std::vector<Index> image(const ModuleHom& f);

struct CyclicPromotion {
  Index generator = 0;
  bool abelian_group = false;  // carrier table symmetric and classified as a group
};

/// First x with Rx = M, if any.
std::optional<CyclicPromotion> cyclic_promote(const GeneralizedModule& m);

/// A x B with componentwise addition and action. Throws PreconditionError
/// when the rings differ.
GeneralizedModule product_module(const GeneralizedModule& a, const GeneralizedModule& b);

}  // namespace gengroup
