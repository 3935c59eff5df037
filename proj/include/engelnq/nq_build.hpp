#pragma once

#include <variant>

#include "engelnq/lie_algebra.hpp"
#include "engelnq/presentation.hpp"

namespace engelnq::nqcore {

using RationalAlgebra = GradedLieAlgebra<RationalRing>;
using GFpAlgebra = GradedLieAlgebra<PrimeFieldRing>;
using AlgebraVariant = std::variant<RationalAlgebra, GFpAlgebra>;

/// Largest graded Lie ring on the presentation: built class by class, each
/// layer introducing a candidate [b, g] per weight-(c-1) basis element and
/// generator within caps, then eliminating against Jacobi consistency rows,
/// the presentation relations, and the Engel rows for that layer.
RationalAlgebra build_rational(const Presentation &pres, unsigned threads = 0);
GFpAlgebra build_gfp(const Presentation &pres, unsigned threads = 0);
AlgebraVariant build(const Presentation &pres, unsigned threads = 0);

} // namespace engelnq::nqcore
