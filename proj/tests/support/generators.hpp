#pragma once

#include "posethom/functor.hpp"
#include "posethom/poset.hpp"

#include <cstdint>
#include <random>

namespace gen {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi] by modulo (platform independent).
long uniform(Rng& rng, long lo, long hi);

posethom::IntMatrix random_matrix(Rng& rng, long rows, long cols, long lo, long hi);

/// Product of random elementary row operations and sign flips.
posethom::IntMatrix random_unimodular(Rng& rng, long n);

/// Random order on n elements: each i < j kept with probability `percent`/100,
/// then transitively closed. Elements are named e0, e1, ...
posethom::Poset random_poset(Rng& rng, std::size_t n, int percent);

/// Adjoins a new top element "1" above everything.
posethom::Poset with_top(const posethom::Poset& p);

/// Path-independent functor with ranks <= max_rank: coordinate projections
/// on convex supports, scaled by c^(h(y)-h(x)), conjugated by unimodular
/// changes of basis. Only covering maps are stored.
posethom::PosetFunctor random_functor(Rng& rng, const posethom::Poset& p, std::size_t max_rank,
                                      posethom::Variance variance);

}  // namespace gen
