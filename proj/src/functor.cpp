#include "posethom/functor.hpp"

#include "posethom/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace posethom {

namespace {

std::vector<std::size_t> linear_extension(const Poset& p) {
  std::vector<std::size_t> below(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) below[i] += p.less(j, i) ? 1 : 0;
  }
  std::vector<std::size_t> order(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  return order;
}

std::string chain_text(const Poset& p, const Chain& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += " < ";
    out += p.element(c[i]);
  }
  return out;
}

Eigen::Index dim(std::size_t r) { return static_cast<Eigen::Index>(r); }

}  // namespace

PosetFunctor PosetFunctor::constant(const Poset& p, Variance variance) {
  PosetFunctor f;
  f.variance = variance;
  f.rank_of.assign(p.size(), 1);
  for (const auto& cover : covering_relations(p)) f.map_on.emplace(cover, IntMatrix::Identity(1, 1));
  return f;
}

IntMatrix ValidatedFunctor::map(std::size_t x, std::size_t y) const {
  if (x == y) return IntMatrix::Identity(dim(rank_of_[x]), dim(rank_of_[x]));
  return maps_.at({x, y});
}

ValidatedFunctor validate_functor(const Poset& p, const PosetFunctor& f) {
  if (f.rank_of.size() != p.size()) {
    throw Error(ErrorCode::ShapeMismatch, "functor gives ranks for " + std::to_string(f.rank_of.size()) + " of " +
                                              std::to_string(p.size()) + " elements");
  }
  const bool covariant = f.variance == Variance::Covariant;
  const auto covers = covering_relations(p);
  const std::set<ElementPair> cover_set(covers.begin(), covers.end());
  auto expected_shape = [&](ElementPair c) {
    const auto [x, y] = c;
    return covariant ? std::pair{dim(f.rank_of[y]), dim(f.rank_of[x])} : std::pair{dim(f.rank_of[x]), dim(f.rank_of[y])};
  };
  for (const auto& [key, m] : f.map_on) {
    if (key.first >= p.size() || key.second >= p.size() || cover_set.count(key) == 0) {
      throw Error(ErrorCode::NotACoveringPair, "functor map given on a pair that is not a covering relation");
    }
    const auto [rows, cols] = expected_shape(key);
    if (m.rows() != rows || m.cols() != cols) {
      throw Error(ErrorCode::ShapeMismatch, "map on " + p.element(key.first) + " < " + p.element(key.second) +
                                                " has shape " + std::to_string(m.rows()) + "x" +
                                                std::to_string(m.cols()) + ", expected " + std::to_string(rows) +
                                                "x" + std::to_string(cols));
    }
  }

  std::map<ElementPair, IntMatrix> cover_maps;
  for (const auto& c : covers) {
    const auto it = f.map_on.find(c);
    if (it != f.map_on.end()) {
      cover_maps.emplace(c, it->second);
      continue;
    }
    const auto [rows, cols] = expected_shape(c);
    if (rows != 0 && cols != 0) {
      throw Error(ErrorCode::ShapeMismatch,
                  "no map given for covering pair " + p.element(c.first) + " < " + p.element(c.second));
    }
    cover_maps.emplace(c, IntMatrix::Zero(rows, cols));
  }

  ValidatedFunctor v;
  v.variance_ = f.variance;
  v.rank_of_ = f.rank_of;
  std::map<ElementPair, Chain> witness;
  const auto order = linear_extension(p);
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (const std::size_t z : order) {
      if (!p.less(x, z)) continue;
      // Every maximal chain from x to z ends in some cover y ≺ z with x <= y.
      bool have = false;
      for (const auto& [cover, step] : cover_maps) {
        const auto [y, top] = cover;
        if (top != z || !p.less_equal(x, y)) continue;
        const IntMatrix lower = v.map(x, y);
        IntMatrix candidate = covariant ? IntMatrix(step * lower) : IntMatrix(lower * step);
        Chain path = x == y ? Chain{x} : witness.at({x, y});
        path.push_back(z);
        if (!have) {
          v.maps_.emplace(ElementPair{x, z}, std::move(candidate));
          witness.emplace(ElementPair{x, z}, std::move(path));
          have = true;
        } else if (!(v.maps_.at({x, z}) == candidate)) {
          throw Error(ErrorCode::PathDependence, "functor is path dependent between " + p.element(x) + " and " +
                                                     p.element(z) + ": chains (" +
                                                     chain_text(p, witness.at({x, z})) + ") and (" +
                                                     chain_text(p, path) + ") give different maps");
        }
      }
    }
  }
  return v;
}

PosetFunctor transpose(const PosetFunctor& f) {
  PosetFunctor t;
  t.variance = f.variance == Variance::Covariant ? Variance::Contravariant : Variance::Covariant;
  t.rank_of = f.rank_of;
  for (const auto& [key, m] : f.map_on) t.map_on.emplace(key, m.transpose());
  return t;
}

OrderedChainCochains ordered_chain_cochains(const Poset& p, const ValidatedFunctor& f) {
  OrderedChainCochains out;
  out.chains = enumerate_chains(p, p.size());
  const std::size_t top = out.chains.size();
  ChainComplex& c = out.complex;
  c.direction = Direction::Cochain;
  for (std::size_t n = 0; n < top; ++n) {
    std::vector<Eigen::Index> offsets;
    std::vector<std::string> labels;
    Eigen::Index total = 0;
    for (const auto& chain : out.chains[n]) {
      offsets.push_back(total);
      const auto r = f.rank(chain.front());
      total += dim(r);
      for (std::size_t i = 0; i < r; ++i) {
        labels.push_back("(" + chain_text(p, chain) + ")" + (r > 1 ? "#" + std::to_string(i) : ""));
      }
    }
    out.block_offset.push_back(std::move(offsets));
    c.ranks.push_back(static_cast<std::size_t>(total));
    c.labels.push_back(std::move(labels));
  }
  for (std::size_t n = 0; n < top; ++n) {
    if (n + 1 >= top) {
      c.maps.push_back(IntMatrix::Zero(0, dim(c.ranks[n])));
      continue;
    }
    IntMatrix delta = IntMatrix::Zero(dim(c.ranks[n + 1]), dim(c.ranks[n]));
    for (std::size_t k = 0; k < out.chains[n + 1].size(); ++k) {
      const Chain& sigma = out.chains[n + 1][k];
      const Eigen::Index row = out.block_offset[n + 1][k];
      const auto r0 = dim(f.rank(sigma.front()));
      for (std::size_t i = 0; i < sigma.size(); ++i) {
        Chain face = sigma;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        const auto it = std::lower_bound(out.chains[n].begin(), out.chains[n].end(), face);
        const Eigen::Index col = out.block_offset[n][static_cast<std::size_t>(it - out.chains[n].begin())];
        if (i == 0) {
          const IntMatrix restrict = f.map(sigma[0], sigma[1]);
          delta.block(row, col, r0, restrict.cols()) += restrict;
        } else {
          const Integer sign(i % 2 == 0 ? 1 : -1);
          for (Eigen::Index d = 0; d < r0; ++d) delta(row + d, col + d) += sign;
        }
      }
    }
    c.maps.push_back(std::move(delta));
  }
  return out;
}

ChainComplex functor_cochain_complex(const Poset& p, const ValidatedFunctor& f) {
  if (f.variance() != Variance::Contravariant) {
    throw Error(ErrorCode::WrongDirection, "higher limits need a contravariant functor (presheaf)");
  }
  return ordered_chain_cochains(p, f).complex;
}

ElementSet resolve_subposet(const PosetPair& pair) {
  ElementSet idx;
  for (const auto& name : pair.sub.elements()) {
    const auto i = pair.ambient.index_of(name);
    if (!i) throw Error(ErrorCode::NotInducedSubposet, "element '" + name + "' is not in the ambient poset");
    idx.push_back(*i);
  }
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (pair.sub.less(a, b) != pair.ambient.less(idx[a], idx[b])) {
        throw Error(ErrorCode::NotInducedSubposet, "order between '" + pair.sub.element(a) + "' and '" +
                                                       pair.sub.element(b) + "' differs from the ambient order");
      }
    }
  }
  std::sort(idx.begin(), idx.end());
  return idx;
}

namespace {

ChainComplex restrict_complex(const OrderedChainCochains& full, const std::function<bool(const Chain&)>& keep) {
  ChainComplex c;
  c.direction = Direction::Cochain;
  const std::size_t top = full.chains.size();
  std::vector<std::vector<Eigen::Index>> coords;
  for (std::size_t n = 0; n < top; ++n) {
    coords.push_back(full.coordinates(n, keep));
    c.ranks.push_back(coords.back().size());
    std::vector<std::string> labels;
    for (const auto i : coords.back()) labels.push_back(full.complex.labels[n][static_cast<std::size_t>(i)]);
    c.labels.push_back(std::move(labels));
  }
  for (std::size_t n = 0; n < top; ++n) {
    if (n + 1 < top) {
      c.maps.push_back(select(full.complex.maps[n], coords[n + 1], coords[n]));
    } else {
      c.maps.push_back(IntMatrix::Zero(0, dim(c.ranks[n])));
    }
  }
  return c;
}

bool contained(const Chain& chain, const std::vector<char>& member) {
  return std::all_of(chain.begin(), chain.end(), [&](std::size_t x) { return member[x] != 0; });
}

}  // namespace

ChainComplex relative_cochain_complex(const Poset& ambient, const ElementSet& sub, const ValidatedFunctor& f) {
  if (f.variance() != Variance::Contravariant) {
    throw Error(ErrorCode::WrongDirection, "relative cochains need a contravariant functor (presheaf)");
  }
  std::vector<char> member(ambient.size(), 0);
  for (const auto x : sub) {
    if (x >= ambient.size()) throw Error(ErrorCode::NotInducedSubposet, "subposet index out of range");
    member[x] = 1;
  }
  const auto full = ordered_chain_cochains(ambient, f);
  return restrict_complex(full, [&](const Chain& c) { return !contained(c, member); });
}

ChainComplex relative_cochain_complex(const PosetPair& pair, const ValidatedFunctor& f) {
  return relative_cochain_complex(pair.ambient, resolve_subposet(pair), f);
}

LimitDescription brute_force_limit(const Poset& p, const ValidatedFunctor& f) {
  if (f.variance() != Variance::Contravariant) {
    throw Error(ErrorCode::WrongDirection, "limits are taken of contravariant functors here");
  }
  std::vector<Eigen::Index> offset(p.size() + 1, 0);
  for (std::size_t x = 0; x < p.size(); ++x) offset[x + 1] = offset[x] + dim(f.rank(x));
  const auto relations = p.relations();
  Eigen::Index rows = 0;
  for (const auto& [x, y] : relations) rows += dim(f.rank(x));
  IntMatrix compat = IntMatrix::Zero(rows, offset.back());
  Eigen::Index row = 0;
  for (const auto& [x, y] : relations) {
    const auto rx = dim(f.rank(x));
    compat.block(row, offset[y], rx, dim(f.rank(y))) = f.map(x, y);
    for (Eigen::Index d = 0; d < rx; ++d) compat(row + d, offset[x] + d) -= Integer(1);
    row += rx;
  }
  // A kernel of an integer matrix is a saturated sublattice, hence free.
  return {static_cast<std::size_t>(offset.back() - rational_rank(compat)), {}};
}

CellularComparison cellular_complex(const Poset& p, const ValidatedFunctor& f, const GradingReport& grading) {
  if (f.variance() != Variance::Contravariant) {
    throw Error(ErrorCode::WrongDirection, "cellular cohomology needs a contravariant functor (presheaf)");
  }
  if (!grading.is_graded) throw Error(ErrorCode::NotGraded, "cellular cochains need a graded poset");
  const auto& corank = grading.corank_of;
  if (corank.size() != p.size()) throw Error(ErrorCode::MissingCorank, "corank does not cover every element");

  const auto full = ordered_chain_cochains(p, f);
  const std::size_t degrees = full.chains.size();
  const std::size_t top_corank = corank.empty() ? 0 : *std::max_element(corank.begin(), corank.end());
  const std::size_t stages = p.empty() ? 0 : top_corank + 1;

  // Coordinates of relative chains of (P^n, P^{n-1}) in degree d.
  auto relative = [&](std::size_t n, std::size_t d) {
    return full.coordinates(d, [&](const Chain& c) {
      const bool in_n = std::all_of(c.begin(), c.end(), [&](std::size_t x) { return corank[x] <= n; });
      const bool in_prev = n > 0 && std::all_of(c.begin(), c.end(), [&](std::size_t x) { return corank[x] <= n - 1; });
      return in_n && !in_prev;
    });
  };
  auto coboundary = [&](std::size_t d, const std::vector<Eigen::Index>& rows, const std::vector<Eigen::Index>& cols) {
    if (d + 1 >= degrees) return IntMatrix(IntMatrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size())));
    return select(full.complex.maps[d], rows, cols);
  };

  CellularComparison out;
  std::vector<HomologyPresentation> groups;
  std::vector<std::vector<Eigen::Index>> cells;
  for (std::size_t n = 0; n < stages; ++n) {
    bool concentrated = true;
    for (std::size_t d = 0; d < degrees; ++d) {
      const auto here = relative(n, d);
      const auto up = d + 1 < degrees ? relative(n, d + 1) : std::vector<Eigen::Index>{};
      const IntMatrix outgoing = coboundary(d, up, here);
      const IntMatrix incoming =
          d == 0 ? IntMatrix(IntMatrix::Zero(static_cast<Eigen::Index>(here.size()), 0)) : coboundary(d - 1, here, relative(n, d - 1));
      const auto form_out = smith_diagonal(outgoing);
      const auto form_in = smith_diagonal(incoming);
      const auto betti = static_cast<Eigen::Index>(here.size()) - form_out.rank() - form_in.rank();
      bool torsion = false;
      for (const auto& dv : form_in.divisors()) torsion = torsion || dv > Integer(1);
      if (d != n && (betti != 0 || torsion)) concentrated = false;
      if (d == n && torsion) concentrated = false;
    }
    out.concentrated.push_back(concentrated);

    const auto here = n < degrees ? relative(n, n) : std::vector<Eigen::Index>{};
    const auto up = n + 1 < degrees ? relative(n, n + 1) : std::vector<Eigen::Index>{};
    const IntMatrix outgoing = n < degrees ? coboundary(n, up, here) : IntMatrix(0, 0);
    const IntMatrix incoming = n > 0 && n < degrees ? coboundary(n - 1, here, relative(n, n - 1))
                                                    : IntMatrix(IntMatrix::Zero(static_cast<Eigen::Index>(here.size()), 0));
    groups.push_back(present_homology(incoming, outgoing));
    cells.push_back(here);
    if (!groups.back().torsion_orders.empty()) {
      out.notes.push_back("HS^" + std::to_string(n) + "(P^" + std::to_string(n) + ",P^" + std::to_string(n) +
                          "-1) has torsion; only its free part enters the cellular complex");
    }
    if (!concentrated) {
      out.notes.push_back("relative cohomology of (P^" + std::to_string(n) + ",P^" + std::to_string(n) +
                          "-1) is not concentrated in degree " + std::to_string(n));
    }
  }

  ChainComplex& c = out.complex;
  c.direction = Direction::Cochain;
  for (std::size_t n = 0; n < stages; ++n) {
    c.ranks.push_back(groups[n].betti());
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < groups[n].betti(); ++j) {
      labels.push_back("HS^" + std::to_string(n) + "[" + std::to_string(j) + "]");
    }
    c.labels.push_back(std::move(labels));
  }
  for (std::size_t n = 0; n < stages; ++n) {
    if (n + 1 >= stages) {
      c.maps.push_back(IntMatrix::Zero(0, dim(c.ranks[n])));
      continue;
    }
    // Extend by zero, apply the ambient coboundary, read relative coordinates.
    const IntMatrix connecting = coboundary(n, cells[n + 1], cells[n]);
    c.maps.push_back(groups[n + 1].free_coordinates * connecting * groups[n].free_cycles);
  }

  out.cellular = homology(c);
  out.ordered = homology(full.complex);
  const std::size_t span = std::max(out.cellular.degrees.size(), out.ordered.degrees.size());
  out.agrees = true;
  for (std::size_t n = 0; n < span; ++n) {
    const DegreeHomology zero{};
    const auto& a = n < out.cellular.degrees.size() ? out.cellular.degrees[n] : zero;
    const auto& b = n < out.ordered.degrees.size() ? out.ordered.degrees[n] : zero;
    if (!(a == b)) out.agrees = false;
  }
  out.notes.insert(out.notes.begin(), kCellularConvention);
  return out;
}

void require_agreement(const CellularComparison& c) {
  if (c.agrees) return;
  std::string detail;
  for (const auto& n : c.notes) detail += "; " + n;
  throw Error(ErrorCode::ComparisonFailure,
              "cellular cohomology differs from the ordered-chain cohomology" + detail);
}

}  // namespace posethom
