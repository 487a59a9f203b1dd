#pragma once

#include "posethom/integer.hpp"
#include "posethom/smith.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace posethom {

/// Whether the differential lowers (chain) or raises (cochain) degree.
enum class Direction { Chain, Cochain };

/// Graded free Z-module with integer differentials.
///
/// Degrees run 0..top. For a chain complex `maps[n]` is the boundary
/// C_n -> C_{n-1} with shape ranks[n-1] x ranks[n]; `maps[0]` has zero rows,
/// or a single all-ones row when the complex is augmented. For a cochain
/// complex `maps[n]` is the coboundary C^n -> C^{n+1}, shape
/// ranks[n+1] x ranks[n], and `maps[top]` has zero rows; the dual of an
/// augmentation is kept in `coaugmentation` (ranks[0] x 1, else x 0).
struct ChainComplex {
  Direction direction = Direction::Chain;
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> maps;
  IntMatrix coaugmentation;
  /// Optional generator labels per degree (same length as ranks when present).
  std::vector<std::vector<std::string>> labels;

  [[nodiscard]] std::size_t size() const { return ranks.size(); }
  [[nodiscard]] bool augmented() const {
    if (direction == Direction::Chain) return !maps.empty() && maps[0].rows() > 0;
    return coaugmentation.cols() > 0;
  }

  /// Differential leaving degree n (zero-row matrix past the top).
  [[nodiscard]] const IntMatrix& outgoing(std::size_t n) const { return maps[n]; }
  /// Differential arriving in degree n, or nullopt when none exists.
  [[nodiscard]] std::optional<IntMatrix> incoming(std::size_t n) const;
};

/// Chain complex with all differentials zero.
ChainComplex zero_differential_complex(std::vector<std::size_t> ranks, Direction dir = Direction::Chain);

/// Throws ShapeMismatch or NotAComplex(n).
void validate(const ChainComplex& c);

struct DegreeHomology {
  std::size_t betti = 0;
  std::vector<Integer> torsion;  // each >= 2, in divisibility order

  friend bool operator==(const DegreeHomology&, const DegreeHomology&) = default;
};

struct HomologySummary {
  std::vector<DegreeHomology> degrees;

  [[nodiscard]] std::vector<std::size_t> betti() const;
  [[nodiscard]] long euler_characteristic() const;
  friend bool operator==(const HomologySummary&, const HomologySummary&) = default;
};

/// H_n = ker / im in every degree (cohomology for cochain complexes).
/// Revalidates d∘d = 0 first.
HomologySummary homology(const ChainComplex& c);

/// Hom(-, Z): transposes every differential and flips the direction, so the
/// homology of the result in degree n is the cohomology H^n of the input.
ChainComplex dualize(const ChainComplex& c);

/// Adds the augmentation C_0 -> Z (chain complexes only).
ChainComplex augment(const ChainComplex& c);

long euler_characteristic(const ChainComplex& c);

/// Explicit presentation of one homology group.
///
/// Given the differential `incoming` (into the degree) and `outgoing` (out of
/// it), describes ker(outgoing)/im(incoming) with generating cycles.
struct HomologyPresentation {
  std::size_t ambient_rank = 0;
  /// Columns are cycles whose classes form a basis of the free part.
  IntMatrix free_cycles;
  /// Rows map a cycle to its free-part coordinates (torsion is ignored).
  IntMatrix free_coordinates;
  /// Torsion generators (columns) and their orders.
  IntMatrix torsion_cycles;
  std::vector<Integer> torsion_orders;

  [[nodiscard]] std::size_t betti() const { return static_cast<std::size_t>(free_cycles.cols()); }
};

HomologyPresentation present_homology(const IntMatrix& incoming, const IntMatrix& outgoing);

/// Degree-wise submatrix helper used by relative and filtered complexes.
IntMatrix select(const IntMatrix& m, const std::vector<Eigen::Index>& rows,
                 const std::vector<Eigen::Index>& cols);

}  // namespace posethom
