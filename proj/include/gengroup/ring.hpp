#pragma once

// Finite rings with unity, and generalized rings (addition only needs to
// be a generalized group).

#include <string>
#include <vector>

#include "gengroup/common.hpp"
#include "gengroup/magma.hpp"

namespace gengroup {

struct FiniteRing {
  std::vector<std::string> labels;
  Table add;
  Table mul;
  Index zero = 0;
  Index one = 0;

  std::size_t size() const { return labels.size(); }
  FiniteMagma additive() const { return FiniteMagma{labels, add}; }
  FiniteMagma multiplicative() const { return FiniteMagma{labels, mul}; }

  bool operator==(const FiniteRing&) const = default;
};

/// Integers mod n; Z_1 is the zero ring with one = zero.
FiniteRing ring_zn(std::size_t n);

/// (R, +) abelian group with identity `zero`, associative multiplication,
/// both distributive laws and a two-sided unit `one`.
Verdict check_ring(const FiniteRing& r);

struct GeneralizedRing {
  std::vector<std::string> labels;
  Table add;
  Table mul;

  std::size_t size() const { return labels.size(); }
  FiniteMagma additive() const { return FiniteMagma{labels, add}; }

  bool operator==(const GeneralizedRing&) const = default;
};

GeneralizedRing as_generalized_ring(const FiniteRing& r);

/// (R, +) a generalized group, associative multiplication, both
/// distributive laws, and e(ab) = e(a)e(b).
Verdict check_generalized_ring(const GeneralizedRing& r);

/// base x base with (a,b) + (c,d) = (a,d) and (a,b)(c,d) = (ac, bd).
GeneralizedRing skew_ring(const FiniteRing& base);

}  // namespace gengroup
