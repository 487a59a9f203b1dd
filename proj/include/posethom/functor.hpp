#pragma once

#include "posethom/chain_complex.hpp"
#include "posethom/poset.hpp"
#include "posethom/space.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace posethom {

enum class Variance { Covariant, Contravariant };

using ElementPair = std::pair<std::size_t, std::size_t>;

/// Free-Z-module valued functor given on covering relations.
///
/// For a covering pair x ≺ y the stored matrix is F(x) -> F(y) (shape
/// rank(y) x rank(x)) when covariant, and F(y) -> F(x) (shape
/// rank(x) x rank(y)) when contravariant.
struct PosetFunctor {
  Variance variance = Variance::Contravariant;
  std::vector<std::size_t> rank_of;
  std::map<ElementPair, IntMatrix> map_on;

  /// Z in every degree with identity maps.
  static PosetFunctor constant(const Poset& p, Variance variance);
};

/// Functor extended to every comparable pair by composition.
class ValidatedFunctor {
 public:
  [[nodiscard]] Variance variance() const { return variance_; }
  [[nodiscard]] std::size_t rank(std::size_t x) const { return rank_of_[x]; }
  [[nodiscard]] const std::vector<std::size_t>& ranks() const { return rank_of_; }
  /// Map attached to x <= y, in the direction of the variance. Identity when x == y.
  [[nodiscard]] IntMatrix map(std::size_t x, std::size_t y) const;

 private:
  friend ValidatedFunctor validate_functor(const Poset& p, const PosetFunctor& f);
  Variance variance_ = Variance::Contravariant;
  std::vector<std::size_t> rank_of_;
  std::map<ElementPair, IntMatrix> maps_;
};

/// Throws ShapeMismatch, NotACoveringPair or PathDependence(x, z, chains).
ValidatedFunctor validate_functor(const Poset& p, const PosetFunctor& f);

/// Transposed functor (covariant <-> contravariant) on the same poset.
PosetFunctor transpose(const PosetFunctor& f);

/// Ordered-chain cochains with local coefficients, with every generator
/// recorded so that subcomplexes can be cut out by index.
struct OrderedChainCochains {
  std::vector<std::vector<Chain>> chains;                // per degree, sorted
  std::vector<std::vector<Eigen::Index>> block_offset;   // per degree, per chain
  ChainComplex complex;                                  // cochain direction

  /// Coordinates (in degree n) of chains accepted by `keep`.
  template <typename Pred>
  [[nodiscard]] std::vector<Eigen::Index> coordinates(std::size_t n, Pred keep) const {
    std::vector<Eigen::Index> out;
    if (n >= chains.size()) return out;
    for (std::size_t k = 0; k < chains[n].size(); ++k) {
      if (!keep(chains[n][k])) continue;
      const Eigen::Index end =
          k + 1 < chains[n].size() ? block_offset[n][k + 1] : static_cast<Eigen::Index>(complex.ranks[n]);
      for (Eigen::Index i = block_offset[n][k]; i < end; ++i) out.push_back(i);
    }
    return out;
  }
};

/// δ(s)(x0<...<x_{n+1}) = F(x0<=x1) s(x1<...) + Σ_{i>=1} (-1)^i s(d_i chain).
OrderedChainCochains ordered_chain_cochains(const Poset& p, const ValidatedFunctor& f);

/// Cochain complex whose cohomology is HS^* = lim^* F. Throws WrongDirection
/// for covariant functors.
ChainComplex functor_cochain_complex(const Poset& p, const ValidatedFunctor& f);

struct PosetPair {
  Poset ambient;
  Poset sub;
};

/// Resolves `pair.sub` inside the ambient by element name. Throws
/// NotInducedSubposet when an element is missing or the orders disagree.
ElementSet resolve_subposet(const PosetPair& pair);

/// Cochains supported on chains of the ambient not contained in `sub`.
ChainComplex relative_cochain_complex(const PosetPair& pair, const ValidatedFunctor& f);
ChainComplex relative_cochain_complex(const Poset& ambient, const ElementSet& sub, const ValidatedFunctor& f);

struct LimitDescription {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
};

/// Families (s_x) with F(x<=y) s_y = s_x for all x < y, by integer kernel.
LimitDescription brute_force_limit(const Poset& p, const ValidatedFunctor& f);

struct CellularComparison {
  ChainComplex complex;  // cochain direction
  HomologySummary cellular;
  HomologySummary ordered;
  /// concentrated[n]: HS^k(P^n, P^{n-1}) vanishes for every k != n and HS^n is free.
  std::vector<bool> concentrated;
  bool agrees = false;
  std::vector<std::string> notes;
};

inline constexpr const char* kCellularConvention =
    "cellular coboundary: HS^n(P^n,P^n-1) basis from Smith form; extend cocycle by zero, apply the "
    "ordered-chain coboundary of P^n+1, read coordinates in HS^n+1(P^n+1,P^n)";

/// C^n = HS^n(P^n, P^{n-1}; F) with the connecting coboundary, plus the
/// degree-wise comparison against the ordered-chain cohomology.
/// Throws NotGraded or WrongDirection.
CellularComparison cellular_complex(const Poset& p, const ValidatedFunctor& f, const GradingReport& grading);

/// Throws ComparisonFailure unless the comparison agrees.
void require_agreement(const CellularComparison& c);

}  // namespace posethom
