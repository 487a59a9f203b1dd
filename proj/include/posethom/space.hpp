#pragma once

#include "posethom/poset.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace posethom {

/// Cover description as given by a caller, before validation.
struct RawSpace {
  std::vector<std::string> points;
  std::vector<std::pair<std::string, std::vector<std::string>>> cover;
};

struct CoverSet {
  std::string name;
  ElementSet members;  // point indices, ascending
};

/// Finite point set with a named finite cover. Construct through
/// validate_space; every point lies in at least one cover set.
class StructuredSpace {
 public:
  [[nodiscard]] const std::vector<std::string>& points() const { return points_; }
  [[nodiscard]] const std::vector<CoverSet>& cover() const { return cover_; }
  [[nodiscard]] std::size_t point_count() const { return points_.size(); }
  [[nodiscard]] std::size_t cover_count() const { return cover_.size(); }
  [[nodiscard]] std::optional<std::size_t> point_index(const std::string& id) const;
  [[nodiscard]] std::optional<std::size_t> cover_index(const std::string& name) const;

 private:
  friend StructuredSpace validate_space(const RawSpace& raw);
  std::vector<std::string> points_;
  std::vector<CoverSet> cover_;
};

/// Throws EmptyInput, DuplicateName, UnknownPoint or UncoveredPoint.
StructuredSpace validate_space(const RawSpace& raw);

/// h(p): indices of the cover sets containing p. Throws UnknownPoint.
Signature signature(const StructuredSpace& space, const std::string& point);
Signature signature(const StructuredSpace& space, std::size_t point);

/// "[U1,U2]" with names in cover order.
std::string signature_name(const StructuredSpace& space, const Signature& sig);

/// X/~ with its projection. Classes are ordered by (signature size, indices).
struct Quotient {
  Poset poset;
  std::vector<Signature> signatures;  // per class
  std::vector<std::size_t> class_of;  // per point
  std::vector<ElementSet> members;    // per class, point indices
};

Quotient quotient_poset(const StructuredSpace& space);

/// Every nonempty subcollection of the cover is some point's signature.
bool is_h_surjective(const StructuredSpace& space);

struct GradingReport {
  std::vector<std::size_t> rank_of;    // per class: |signature|
  std::vector<std::size_t> corank_of;  // per class: r_observed - rank
  std::size_t r_observed = 0;
  bool is_graded = false;
  bool strictly_monotone = false;
  std::vector<std::pair<std::size_t, std::size_t>> violations;  // covers x ≺ y with rk(y) != rk(x)+1
  bool h_surjective = false;
  std::vector<std::string> notes;
};

/// Checks a rank function on an abstract poset (no surjectivity, no notes).
GradingReport grade_poset(const Poset& p, std::vector<std::size_t> rank_of);
/// Rank from signature labels when present, else longest chain ending at x.
GradingReport grade_poset(const Poset& p);

GradingReport grading_report(const StructuredSpace& space);
GradingReport grading_report(const StructuredSpace& space, const Quotient& q);

struct UniqueMax {
  std::size_t element = 0;
  /// The intersection of all cover sets is a single point.
  bool via_singleton_intersection = false;
};

std::optional<UniqueMax> unique_max_check(const StructuredSpace& space);
std::optional<UniqueMax> unique_max_check(const StructuredSpace& space, const Quotient& q);

/// Finite topology on named points; opens are sorted point-index sets.
class FiniteTopology {
 public:
  /// Throws InvalidTopology unless ∅ and the ground set are open and the
  /// opens are closed under pairwise union and intersection.
  static FiniteTopology make(std::vector<std::string> ground, std::vector<ElementSet> opens);

  [[nodiscard]] const std::vector<std::string>& ground() const { return ground_; }
  [[nodiscard]] const std::vector<ElementSet>& opens() const { return opens_; }
  [[nodiscard]] bool is_open(const ElementSet& s) const;

 private:
  std::vector<std::string> ground_;
  std::vector<ElementSet> opens_;
};

/// Cover sets as a subbasis: closure under finite intersection and union,
/// together with ∅ and X.
FiniteTopology default_topology(const StructuredSpace& space);
FiniteTopology discrete_topology(const StructuredSpace& space);
FiniteTopology indiscrete_topology(const StructuredSpace& space);

struct ContinuityWitness {
  ElementSet up_set;    // classes
  ElementSet preimage;  // points
  std::string reason;
};

struct StratificationReport {
  bool surjective = false;
  bool continuous = false;
  std::optional<ContinuityWitness> witness;
  /// Every Alexandroff open of X/~ with its preimage under s(x) = [x].
  std::vector<std::pair<ElementSet, ElementSet>> preimages;
  /// preorder[x] = points y with x ≤_s y (reflexive).
  std::vector<ElementSet> preorder;
};

/// Throws GroundMismatch when the topology lives on a different point set.
StratificationReport stratification_report(const StructuredSpace& space, const FiniteTopology& topology);

}  // namespace posethom
