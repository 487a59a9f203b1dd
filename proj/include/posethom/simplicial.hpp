#pragma once

#include "posethom/chain_complex.hpp"
#include "posethom/poset.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace posethom {

/// Abstract simplicial complex; faces are strictly increasing vertex-index
/// tuples grouped by dimension and sorted lexicographically.
struct SimplicialComplex {
  std::vector<std::string> vertices;
  std::vector<std::vector<Chain>> faces;

  [[nodiscard]] std::size_t dimension_count() const { return faces.size(); }
};

/// Δ(P): vertices are the elements, faces the chains. Vertex order follows a
/// linear extension so every face tuple lists its chain bottom to top.
SimplicialComplex order_complex(const Poset& p);

/// Alternating-face boundary complex; generators are labelled by their
/// vertex names. With `reduced` the augmentation C_0 -> Z is attached.
ChainComplex simplicial_chain_complex(const SimplicialComplex& sc, bool reduced = false);

/// Finite truncation of a simplicial set presented by its nondegenerate
/// simplices. A simplex of degree n is a weakly increasing sequence of n+1
/// elements; it is nondegenerate when strictly increasing.
class TruncatedSimplicialSet {
 public:
  struct Face {
    std::size_t target = 0;  // index into simplices(n-1), valid when !degenerate
    bool degenerate = false;
  };

  [[nodiscard]] std::size_t truncation() const { return truncation_; }
  [[nodiscard]] const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  /// Nondegenerate simplices of degree n (0..truncation).
  [[nodiscard]] const std::vector<Chain>& simplices(std::size_t n) const { return simplices_[n]; }
  /// d_i of the k-th nondegenerate simplex of degree n >= 1.
  [[nodiscard]] const Face& face(std::size_t n, std::size_t k, std::size_t i) const { return faces_[n][k][i]; }
  [[nodiscard]] std::vector<std::size_t> counts() const;

  /// Face map d_i on an arbitrary (possibly degenerate) simplex.
  [[nodiscard]] static Chain apply_face(const Chain& simplex, std::size_t i);
  /// Degeneracy s_i: repeats position i.
  [[nodiscard]] static Chain apply_degeneracy(const Chain& simplex, std::size_t i);
  [[nodiscard]] static bool is_degenerate(const Chain& simplex);

 private:
  friend TruncatedSimplicialSet nerve_truncation(const Poset& p, std::size_t max_degree);
  std::size_t truncation_ = 0;
  std::vector<std::string> vertex_names_;
  std::vector<std::vector<Chain>> simplices_;
  std::vector<std::vector<std::vector<Face>>> faces_;
};

/// Nerve of P through degree N. Throws TruncationTooSmall when N is below
/// the dimension of the order complex.
TruncatedSimplicialSet nerve_truncation(const Poset& p, std::size_t max_degree);

/// Normalized chains: nondegenerate generators, boundary Σ(-1)^i d_i with
/// degenerate faces dropped.
ChainComplex normalized_chain_complex(const TruncatedSimplicialSet& ss);

}  // namespace posethom
