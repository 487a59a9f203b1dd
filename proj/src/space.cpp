#include "posethom/space.hpp"

#include "posethom/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace posethom {

std::optional<std::size_t> StructuredSpace::point_index(const std::string& id) const {
  const auto it = std::find(points_.begin(), points_.end(), id);
  if (it == points_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

std::optional<std::size_t> StructuredSpace::cover_index(const std::string& name) const {
  for (std::size_t i = 0; i < cover_.size(); ++i) {
    if (cover_[i].name == name) return i;
  }
  return std::nullopt;
}

StructuredSpace validate_space(const RawSpace& raw) {
  if (raw.points.empty()) throw Error(ErrorCode::EmptyInput, "space has no points");
  if (raw.cover.empty()) throw Error(ErrorCode::EmptyInput, "space has no cover sets");

  StructuredSpace s;
  std::map<std::string, std::size_t> index;
  for (const auto& p : raw.points) {
    if (!index.emplace(p, index.size()).second) {
      throw Error(ErrorCode::DuplicateName, "duplicate point identifier '" + p + "'");
    }
    s.points_.push_back(p);
  }
  std::set<std::string> names;
  std::vector<char> covered(raw.points.size(), 0);
  for (const auto& [name, members] : raw.cover) {
    if (!names.insert(name).second) throw Error(ErrorCode::DuplicateName, "duplicate cover set name '" + name + "'");
    CoverSet set{name, {}};
    for (const auto& m : members) {
      const auto it = index.find(m);
      if (it == index.end()) {
        throw Error(ErrorCode::UnknownPoint, "cover set '" + name + "' names unknown point '" + m + "'");
      }
      set.members.push_back(it->second);
      covered[it->second] = 1;
    }
    std::sort(set.members.begin(), set.members.end());
    set.members.erase(std::unique(set.members.begin(), set.members.end()), set.members.end());
    s.cover_.push_back(std::move(set));
  }
  for (std::size_t i = 0; i < covered.size(); ++i) {
    if (covered[i] == 0) {
      throw Error(ErrorCode::UncoveredPoint, "point '" + raw.points[i] + "' lies in no cover set");
    }
  }
  return s;
}

Signature signature(const StructuredSpace& space, std::size_t point) {
  if (point >= space.point_count()) throw Error(ErrorCode::UnknownPoint, "point index out of range");
  Signature sig;
  for (std::size_t i = 0; i < space.cover_count(); ++i) {
    const auto& m = space.cover()[i].members;
    if (std::binary_search(m.begin(), m.end(), point)) sig.indices.push_back(i);
  }
  return sig;
}

Signature signature(const StructuredSpace& space, const std::string& point) {
  const auto idx = space.point_index(point);
  if (!idx) throw Error(ErrorCode::UnknownPoint, "unknown point '" + point + "'");
  return signature(space, *idx);
}

std::string signature_name(const StructuredSpace& space, const Signature& sig) {
  std::string out = "[";
  for (std::size_t i = 0; i < sig.indices.size(); ++i) {
    if (i > 0) out += ",";
    out += space.cover().at(sig.indices[i]).name;
  }
  return out + "]";
}

namespace {

bool canonical_before(const Signature& a, const Signature& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.indices < b.indices;
}

}  // namespace

Quotient quotient_poset(const StructuredSpace& space) {
  std::vector<Signature> per_point;
  per_point.reserve(space.point_count());
  for (std::size_t p = 0; p < space.point_count(); ++p) per_point.push_back(signature(space, p));

  std::vector<Signature> classes = per_point;
  std::sort(classes.begin(), classes.end(), canonical_before);
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

  Quotient q;
  q.signatures = classes;
  q.members.resize(classes.size());
  for (std::size_t p = 0; p < per_point.size(); ++p) {
    const auto it = std::lower_bound(classes.begin(), classes.end(), per_point[p], canonical_before);
    const auto c = static_cast<std::size_t>(it - classes.begin());
    q.class_of.push_back(c);
    q.members[c].push_back(p);
  }

  std::vector<std::string> names;
  std::vector<std::optional<Signature>> labels;
  std::vector<std::pair<std::size_t, std::size_t>> less;
  for (std::size_t a = 0; a < classes.size(); ++a) {
    names.push_back(signature_name(space, classes[a]));
    labels.emplace_back(classes[a]);
    for (std::size_t b = 0; b < classes.size(); ++b) {
      if (classes[a].proper_subset_of(classes[b])) less.emplace_back(a, b);
    }
  }
  q.poset = Poset::from_relations(std::move(names), less, std::move(labels));
  return q;
}

bool is_h_surjective(const StructuredSpace& space) {
  const std::size_t k = space.cover_count();
  // 2^k - 1 nonempty subcollections; a space with fewer points cannot realise them.
  if (k >= 63) return false;
  const std::size_t needed = (std::size_t{1} << k) - 1;
  if (space.point_count() < needed) return false;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t p = 0; p < space.point_count(); ++p) seen.insert(signature(space, p).indices);
  return seen.size() == needed;
}

GradingReport grading_report(const StructuredSpace& space) { return grading_report(space, quotient_poset(space)); }

GradingReport grade_poset(const Poset& p, std::vector<std::size_t> rank_of) {
  if (rank_of.size() != p.size()) throw Error(ErrorCode::MissingCorank, "rank function does not cover every element");
  GradingReport r;
  r.rank_of = std::move(rank_of);
  for (const auto rk : r.rank_of) r.r_observed = std::max(r.r_observed, rk);
  for (const auto rk : r.rank_of) r.corank_of.push_back(r.r_observed - rk);

  r.strictly_monotone = true;
  for (const auto& [x, y] : p.relations()) {
    if (!(r.rank_of[x] < r.rank_of[y])) r.strictly_monotone = false;
  }
  for (const auto& [x, y] : covering_relations(p)) {
    if (r.rank_of[y] != r.rank_of[x] + 1) r.violations.emplace_back(x, y);
  }
  r.is_graded = r.strictly_monotone && r.violations.empty();
  return r;
}

GradingReport grade_poset(const Poset& p) {
  std::vector<std::size_t> rank(p.size(), 0);
  bool labelled = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.label(i)) {
      rank[i] = p.label(i)->size();
    } else {
      labelled = false;
    }
  }
  if (!labelled) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      ElementSet below;
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (p.less_equal(j, i)) below.push_back(j);
      }
      rank[i] = height(p.induced(below));
    }
  }
  return grade_poset(p, std::move(rank));
}

GradingReport grading_report(const StructuredSpace& space, const Quotient& q) {
  std::vector<std::size_t> rank;
  for (const auto& sig : q.signatures) rank.push_back(sig.size());
  GradingReport r = grade_poset(q.poset, std::move(rank));
  r.h_surjective = is_h_surjective(space);

  const std::size_t k = space.cover_count();
  if (k < 63) {
    const std::size_t claimed = (std::size_t{1} << k) - 1;
    if (claimed != r.r_observed) {
      r.notes.push_back("maximum rank observed is " + std::to_string(r.r_observed) + "; the value 2^|U|-1 = " +
                        std::to_string(claimed) +
                        " is not attainable by rk = |h(x)| since h(x) is a subcollection of U (|U| = " +
                        std::to_string(k) + ")");
    }
  }
  if (!r.h_surjective) {
    r.notes.push_back("h is not surjective onto the nonempty subcollections; gradedness is checked, not implied");
  }
  return r;
}

std::optional<UniqueMax> unique_max_check(const StructuredSpace& space) {
  return unique_max_check(space, quotient_poset(space));
}

std::optional<UniqueMax> unique_max_check(const StructuredSpace& space, const Quotient& q) {
  const auto top = unique_maximum(q.poset);
  if (!top) return std::nullopt;
  ElementSet common = space.cover().front().members;
  for (const auto& set : space.cover()) {
    ElementSet next;
    std::set_intersection(common.begin(), common.end(), set.members.begin(), set.members.end(),
                          std::back_inserter(next));
    common = std::move(next);
  }
  return UniqueMax{*top, common.size() == 1};
}

namespace {

bool size_lex_before(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet full_set(std::size_t n) {
  ElementSet all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return all;
}

}  // namespace

FiniteTopology FiniteTopology::make(std::vector<std::string> ground, std::vector<ElementSet> opens) {
  const std::size_t n = ground.size();
  for (auto& o : opens) {
    std::sort(o.begin(), o.end());
    o.erase(std::unique(o.begin(), o.end()), o.end());
    if (!o.empty() && o.back() >= n) throw Error(ErrorCode::InvalidTopology, "open set refers to a missing point");
  }
  std::sort(opens.begin(), opens.end(), size_lex_before);
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

  FiniteTopology t;
  t.ground_ = std::move(ground);
  t.opens_ = std::move(opens);
  if (!t.is_open({})) throw Error(ErrorCode::InvalidTopology, "the empty set is not open");
  if (!t.is_open(full_set(n))) throw Error(ErrorCode::InvalidTopology, "the whole space is not open");
  for (std::size_t i = 0; i < t.opens_.size(); ++i) {
    for (std::size_t j = i + 1; j < t.opens_.size(); ++j) {
      if (!t.is_open(set_union(t.opens_[i], t.opens_[j]))) {
        throw Error(ErrorCode::InvalidTopology, "opens are not closed under union");
      }
      if (!t.is_open(set_intersection(t.opens_[i], t.opens_[j]))) {
        throw Error(ErrorCode::InvalidTopology, "opens are not closed under intersection");
      }
    }
  }
  return t;
}

bool FiniteTopology::is_open(const ElementSet& s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s, size_lex_before);
}

FiniteTopology default_topology(const StructuredSpace& space) {
  const std::size_t n = space.point_count();
  // Basis: all finite intersections of cover sets (plus X for the empty one).
  std::set<ElementSet> basis{full_set(n)};
  for (const auto& c : space.cover()) {
    std::vector<ElementSet> fresh;
    for (const auto& b : basis) fresh.push_back(set_intersection(b, c.members));
    basis.insert(fresh.begin(), fresh.end());
  }
  std::set<ElementSet> opens{ElementSet{}};
  for (const auto& b : basis) {
    std::vector<ElementSet> fresh;
    for (const auto& o : opens) fresh.push_back(set_union(o, b));
    opens.insert(fresh.begin(), fresh.end());
  }
  return FiniteTopology::make(space.points(), {opens.begin(), opens.end()});
}

FiniteTopology discrete_topology(const StructuredSpace& space) {
  const std::size_t n = space.point_count();
  std::vector<ElementSet> opens;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    ElementSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) s.push_back(i);
    }
    opens.push_back(std::move(s));
  }
  return FiniteTopology::make(space.points(), std::move(opens));
}

FiniteTopology indiscrete_topology(const StructuredSpace& space) {
  return FiniteTopology::make(space.points(), {ElementSet{}, full_set(space.point_count())});
}

StratificationReport stratification_report(const StructuredSpace& space, const FiniteTopology& topology) {
  // Topology points may be listed in another order; translate to space indices.
  const auto& ground = topology.ground();
  if (ground.size() != space.point_count()) {
    throw Error(ErrorCode::GroundMismatch, "topology ground set has " + std::to_string(ground.size()) +
                                               " points, the space has " + std::to_string(space.point_count()));
  }
  std::vector<std::size_t> to_space(ground.size());
  for (std::size_t i = 0; i < ground.size(); ++i) {
    const auto idx = space.point_index(ground[i]);
    if (!idx) throw Error(ErrorCode::GroundMismatch, "topology point '" + ground[i] + "' is not a point of the space");
    to_space[i] = *idx;
  }
  std::set<ElementSet> opens;
  for (const auto& o : topology.opens()) {
    ElementSet mapped;
    for (const auto i : o) mapped.push_back(to_space[i]);
    std::sort(mapped.begin(), mapped.end());
    opens.insert(std::move(mapped));
  }

  const Quotient q = quotient_poset(space);
  StratificationReport r;
  std::vector<char> hit(q.poset.size(), 0);
  for (const auto c : q.class_of) hit[c] = 1;
  r.surjective = std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });

  r.continuous = true;
  for (const auto& u : up_sets(q.poset)) {
    ElementSet pre;
    for (const auto c : u) pre.insert(pre.end(), q.members[c].begin(), q.members[c].end());
    std::sort(pre.begin(), pre.end());
    if (r.continuous && opens.count(pre) == 0) {
      r.continuous = false;
      r.witness = ContinuityWitness{u, pre, "preimage of this up-set is not open"};
    }
    r.preimages.emplace_back(u, std::move(pre));
  }

  r.preorder.resize(space.point_count());
  for (std::size_t x = 0; x < space.point_count(); ++x) {
    for (std::size_t y = 0; y < space.point_count(); ++y) {
      if (q.poset.less_equal(q.class_of[x], q.class_of[y])) r.preorder[x].push_back(y);
    }
  }
  return r;
}

}  // namespace posethom
