#pragma once

#include "posethom/chain_complex.hpp"
#include "posethom/functor.hpp"
#include "posethom/poset.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace posethom {

/// Poset with a unique maximal element (the "1") and a covariant colouring.
class ColouredPoset {
 public:
  /// Throws NoUniqueMax, WrongDirection, or any functor validation error.
  static ColouredPoset make(Poset poset, const PosetFunctor& colouring);

  [[nodiscard]] const Poset& poset() const { return poset_; }
  [[nodiscard]] const ValidatedFunctor& colouring() const { return colouring_; }
  [[nodiscard]] std::size_t top() const { return top_; }

 private:
  Poset poset_;
  ValidatedFunctor colouring_;
  std::size_t top_ = 0;
};

/// Length-n sequences in P∖1 that increase weakly (x_i <= x_{i+1}) or
/// strictly, sorted lexicographically. Throws NoUniqueMax.
std::vector<Chain> enumerate_multichains(const Poset& p, std::size_t n, bool strict);

struct ColouredComplex {
  ChainComplex complex;
  /// Degrees >= valid_below may be distorted by the truncation.
  std::size_t valid_below = 0;
  bool truncated = false;
  std::vector<std::string> notes;
};

/// S_0 = F(1), S_n = ⊕ F(x_1) over length-n (multi)chains of P∖1 with
///   d_n(λ x_1…x_n) = F(x_1 <= x_2)(λ) x_2…x_n − Σ_{i=2..n} (−1)^i λ x_1…x̂_i…x_n,
///   d_1(λ x) = F(x <= 1)(λ).
/// Degrees 0..max_degree are built.
ColouredComplex coloured_chain_complex(const ColouredPoset& cp, bool strict, std::size_t max_degree);

/// Homology of Hom(S_*, Z).
HomologySummary coloured_cohomology(const ColouredPoset& cp, bool strict, std::size_t max_degree);

}  // namespace posethom
