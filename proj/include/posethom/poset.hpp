#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace posethom {

/// Nonempty set of cover indices, kept sorted ascending.
struct Signature {
  std::vector<std::size_t> indices;

  [[nodiscard]] std::size_t size() const { return indices.size(); }
  /// Strict inclusion.
  [[nodiscard]] bool proper_subset_of(const Signature& other) const;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

using Chain = std::vector<std::size_t>;
using ElementSet = std::vector<std::size_t>;

/// Finite strict partial order on labelled elements.
///
/// The relation is stored transitively closed as a dense boolean table, so
/// comparisons are O(1). Elements keep their construction order.
class Poset {
 public:
  Poset() = default;

  /// Builds the transitive closure of `less`. Throws InvalidOrder on cycles,
  /// reflexive pairs, out-of-range indices or duplicate element names.
  static Poset from_relations(std::vector<std::string> elements,
                              const std::vector<std::pair<std::size_t, std::size_t>>& less,
                              std::vector<std::optional<Signature>> labels = {});

  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  [[nodiscard]] bool empty() const { return elements_.empty(); }
  [[nodiscard]] const std::string& element(std::size_t i) const { return elements_[i]; }
  [[nodiscard]] const std::vector<std::string>& elements() const { return elements_; }
  [[nodiscard]] std::optional<std::size_t> index_of(const std::string& name) const;
  [[nodiscard]] const std::optional<Signature>& label(std::size_t i) const { return labels_[i]; }

  [[nodiscard]] bool less(std::size_t a, std::size_t b) const { return table_[a * size() + b] != 0; }
  [[nodiscard]] bool less_equal(std::size_t a, std::size_t b) const { return a == b || less(a, b); }
  [[nodiscard]] bool comparable(std::size_t a, std::size_t b) const { return less_equal(a, b) || less(b, a); }

  /// All pairs (a, b) with a < b, lexicographic.
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> relations() const;
  [[nodiscard]] ElementSet maximal_elements() const;
  [[nodiscard]] ElementSet minimal_elements() const;

  /// Induced subposet on `keep` (element order follows ascending index).
  [[nodiscard]] Poset induced(ElementSet keep) const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  std::vector<std::string> elements_;
  std::vector<std::optional<Signature>> labels_;
  std::vector<std::uint8_t> table_;
};

/// Pairs x ≺ z: x < z with nothing strictly between.
std::vector<std::pair<std::size_t, std::size_t>> covering_relations(const Poset& p);

/// Strictly increasing chains with at most `max_length` elements, grouped by
/// simplex dimension (entry n holds the chains with n+1 elements). Each group
/// is sorted lexicographically by element index.
std::vector<std::vector<Chain>> enumerate_chains(const Poset& p, std::size_t max_length);

/// Number of elements in a longest chain.
std::size_t height(const Poset& p);

inline constexpr std::size_t kDefaultUpSetLimit = 20;

/// Alexandroff opens: all upward-closed subsets, sorted by (size, lex).
/// Throws SizeLimit when the poset has more than `limit` elements.
std::vector<ElementSet> up_sets(const Poset& p, std::size_t limit = kDefaultUpSetLimit);

/// Element indices with corank <= k. Throws MissingCorank when `corank`
/// does not cover every element.
ElementSet filtration_members(const Poset& p, const std::vector<std::size_t>& corank, std::size_t k);

/// Induced subposet P^k = {x : |x| <= k}.
Poset filtration(const Poset& p, const std::vector<std::size_t>& corank, std::size_t k);

enum class Extremum { Max, Min, Both };

/// Index of the unique maximal (or minimal) element, if there is exactly one.
std::optional<std::size_t> unique_maximum(const Poset& p);
std::optional<std::size_t> unique_minimum(const Poset& p);

/// Removes the unique maximum and/or minimum. Throws NoUniqueExtremum.
Poset folkman_trim(const Poset& p, Extremum which);

}  // namespace posethom
