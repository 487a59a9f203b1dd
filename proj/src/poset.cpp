#include "posethom/poset.hpp"

#include "posethom/error.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace posethom {

bool Signature::proper_subset_of(const Signature& other) const {
  return indices.size() < other.indices.size() &&
         std::includes(other.indices.begin(), other.indices.end(), indices.begin(), indices.end());
}

Poset Poset::from_relations(std::vector<std::string> elements,
                            const std::vector<std::pair<std::size_t, std::size_t>>& less,
                            std::vector<std::optional<Signature>> labels) {
  const std::size_t n = elements.size();
  {
    std::set<std::string> seen;
    for (const auto& e : elements) {
      if (!seen.insert(e).second) throw Error(ErrorCode::InvalidOrder, "duplicate poset element '" + e + "'");
    }
  }
  if (labels.empty()) labels.resize(n);
  if (labels.size() != n) throw Error(ErrorCode::InvalidOrder, "label count does not match element count");

  Poset p;
  p.elements_ = std::move(elements);
  p.labels_ = std::move(labels);
  p.table_.assign(n * n, 0);
  for (const auto& [a, b] : less) {
    if (a >= n || b >= n) throw Error(ErrorCode::InvalidOrder, "relation refers to a missing element");
    if (a == b) throw Error(ErrorCode::InvalidOrder, "relation is not irreflexive at '" + p.elements_[a] + "'");
    p.table_[a * n + b] = 1;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (p.table_[i * n + k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (p.table_[k * n + j] != 0) p.table_[i * n + j] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (p.table_[i * n + i] != 0) {
      throw Error(ErrorCode::InvalidOrder, "relation has a cycle through '" + p.elements_[i] + "'");
    }
  }
  return p;
}

std::optional<std::size_t> Poset::index_of(const std::string& name) const {
  const auto it = std::find(elements_.begin(), elements_.end(), name);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::relations() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (less(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

ElementSet Poset::maximal_elements() const {
  ElementSet out;
  for (std::size_t a = 0; a < size(); ++a) {
    bool maximal = true;
    for (std::size_t b = 0; b < size() && maximal; ++b) maximal = !less(a, b);
    if (maximal) out.push_back(a);
  }
  return out;
}

ElementSet Poset::minimal_elements() const {
  ElementSet out;
  for (std::size_t a = 0; a < size(); ++a) {
    bool minimal = true;
    for (std::size_t b = 0; b < size() && minimal; ++b) minimal = !less(b, a);
    if (minimal) out.push_back(a);
  }
  return out;
}

Poset Poset::induced(ElementSet keep) const {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  Poset p;
  const std::size_t m = keep.size();
  p.table_.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    p.elements_.push_back(elements_.at(keep[i]));
    p.labels_.push_back(labels_[keep[i]]);
    for (std::size_t j = 0; j < m; ++j) p.table_[i * m + j] = table_[keep[i] * size() + keep[j]];
  }
  return p;
}

std::vector<std::pair<std::size_t, std::size_t>> covering_relations(const Poset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [x, z] : p.relations()) {
    bool cover = true;
    for (std::size_t y = 0; y < p.size() && cover; ++y) cover = !(p.less(x, y) && p.less(y, z));
    if (cover) out.emplace_back(x, z);
  }
  return out;
}

namespace {

void extend_chains(const Poset& p, Chain& current, std::size_t max_length,
                   std::vector<std::vector<Chain>>& out) {
  out[current.size() - 1].push_back(current);
  if (current.size() == max_length) return;
  const std::size_t last = current.back();
  for (std::size_t y = 0; y < p.size(); ++y) {
    if (!p.less(last, y)) continue;
    current.push_back(y);
    extend_chains(p, current, max_length, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Chain>> enumerate_chains(const Poset& p, std::size_t max_length) {
  std::vector<std::vector<Chain>> out(std::min(max_length, p.size()));
  if (out.empty()) return out;
  Chain current;
  for (std::size_t x = 0; x < p.size(); ++x) {
    current.assign(1, x);
    extend_chains(p, current, max_length, out);
  }
  for (auto& group : out) std::sort(group.begin(), group.end());
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

std::size_t height(const Poset& p) {
  // Longest chain ending at each element, processed in an order where
  // smaller elements come first (count of elements below).
  std::vector<std::size_t> order(p.size());
  std::vector<std::size_t> below(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    order[i] = i;
    for (std::size_t j = 0; j < p.size(); ++j) below[i] += p.less(j, i) ? 1 : 0;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  std::vector<std::size_t> longest(p.size(), 1);
  std::size_t best = 0;
  for (const std::size_t x : order) {
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (p.less(y, x)) longest[x] = std::max(longest[x], longest[y] + 1);
    }
    best = std::max(best, longest[x]);
  }
  return best;
}

std::vector<ElementSet> up_sets(const Poset& p, std::size_t limit) {
  if (p.size() > limit) {
    throw Error(ErrorCode::SizeLimit, "up-set enumeration refused: " + std::to_string(p.size()) +
                                          " elements exceeds the limit of " + std::to_string(limit));
  }
  // Decide elements from the top down: x may join only if everything above
  // x already joined.
  std::vector<std::size_t> order(p.size());
  std::vector<std::size_t> above(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    order[i] = i;
    for (std::size_t j = 0; j < p.size(); ++j) above[i] += p.less(i, j) ? 1 : 0;
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return above[a] < above[b]; });

  std::vector<ElementSet> out;
  std::vector<char> in(p.size(), 0);
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      ElementSet s;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (in[i] != 0) s.push_back(i);
      }
      out.push_back(std::move(s));
      return;
    }
    const std::size_t x = order[pos];
    self(self, pos + 1);
    bool allowed = true;
    for (std::size_t y = 0; y < p.size() && allowed; ++y) allowed = !p.less(x, y) || in[y] != 0;
    if (allowed) {
      in[x] = 1;
      self(self, pos + 1);
      in[x] = 0;
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

ElementSet filtration_members(const Poset& p, const std::vector<std::size_t>& corank, std::size_t k) {
  if (corank.size() != p.size()) {
    throw Error(ErrorCode::MissingCorank, "corank given for " + std::to_string(corank.size()) + " of " +
                                              std::to_string(p.size()) + " elements");
  }
  ElementSet keep;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (corank[i] <= k) keep.push_back(i);
  }
  return keep;
}

Poset filtration(const Poset& p, const std::vector<std::size_t>& corank, std::size_t k) {
  return p.induced(filtration_members(p, corank, k));
}

std::optional<std::size_t> unique_maximum(const Poset& p) {
  const auto m = p.maximal_elements();
  if (m.size() != 1) return std::nullopt;
  return m.front();
}

std::optional<std::size_t> unique_minimum(const Poset& p) {
  const auto m = p.minimal_elements();
  if (m.size() != 1) return std::nullopt;
  return m.front();
}

Poset folkman_trim(const Poset& p, Extremum which) {
  ElementSet drop;
  if (which == Extremum::Max || which == Extremum::Both) {
    const auto top = unique_maximum(p);
    if (!top) throw Error(ErrorCode::NoUniqueExtremum, "poset has no unique maximal element (max)");
    drop.push_back(*top);
  }
  if (which == Extremum::Min || which == Extremum::Both) {
    const auto bottom = unique_minimum(p);
    if (!bottom) throw Error(ErrorCode::NoUniqueExtremum, "poset has no unique minimal element (min)");
    drop.push_back(*bottom);
  }
  ElementSet keep;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) keep.push_back(i);
  }
  return p.induced(std::move(keep));
}

}  // namespace posethom
