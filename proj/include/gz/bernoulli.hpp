#pragma once

#include <gmpxx.h>

namespace gz {

/// Exact Bernoulli number B_{2k} (k >= 1) as a reduced rational.
///
/// Computed from the tangent numbers with integer-only arithmetic and cached
/// process-wide; the cache grows on demand and is safe for concurrent use.
mpq_class bernoulli_even(unsigned k);

}  // namespace gz
