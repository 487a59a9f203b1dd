#include "posethom/simplicial.hpp"

#include "posethom/error.hpp"

#include <algorithm>
#include <map>

namespace posethom {

namespace {

// Elements sorted by the number of elements below them (ties by index).
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

std::string face_label(const std::vector<std::string>& names, const Chain& face) {
  std::string out = "(";
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i > 0) out += "<";
    out += names[face[i]];
  }
  return out + ")";
}

std::size_t locate(const std::vector<Chain>& sorted, const Chain& c) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), c);
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

SimplicialComplex order_complex(const Poset& p) {
  const auto order = linear_extension(p);
  std::vector<std::size_t> position(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  SimplicialComplex sc;
  for (const auto e : order) sc.vertices.push_back(p.element(e));
  for (auto group : enumerate_chains(p, p.size())) {
    for (auto& chain : group) {
      for (auto& v : chain) v = position[v];
    }
    std::sort(group.begin(), group.end());
    sc.faces.push_back(std::move(group));
  }
  return sc;
}

ChainComplex simplicial_chain_complex(const SimplicialComplex& sc, bool reduced) {
  ChainComplex c;
  c.direction = Direction::Chain;
  const std::size_t top = sc.faces.size();
  for (std::size_t n = 0; n < top; ++n) {
    c.ranks.push_back(sc.faces[n].size());
    std::vector<std::string> labels;
    for (const auto& f : sc.faces[n]) labels.push_back(face_label(sc.vertices, f));
    c.labels.push_back(std::move(labels));
  }
  for (std::size_t n = 0; n < top; ++n) {
    const auto cols = static_cast<Eigen::Index>(sc.faces[n].size());
    if (n == 0) {
      c.maps.push_back(IntMatrix::Zero(0, cols));
      continue;
    }
    IntMatrix d = IntMatrix::Zero(static_cast<Eigen::Index>(sc.faces[n - 1].size()), cols);
    for (std::size_t k = 0; k < sc.faces[n].size(); ++k) {
      const Chain& face = sc.faces[n][k];
      for (std::size_t i = 0; i <= n; ++i) {
        Chain sub = face;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
        const auto row = static_cast<Eigen::Index>(locate(sc.faces[n - 1], sub));
        d(row, static_cast<Eigen::Index>(k)) += Integer(i % 2 == 0 ? 1 : -1);
      }
    }
    c.maps.push_back(std::move(d));
  }
  return reduced ? augment(c) : c;
}

std::vector<std::size_t> TruncatedSimplicialSet::counts() const {
  std::vector<std::size_t> out;
  for (const auto& s : simplices_) out.push_back(s.size());
  return out;
}

Chain TruncatedSimplicialSet::apply_face(const Chain& simplex, std::size_t i) {
  Chain out = simplex;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

Chain TruncatedSimplicialSet::apply_degeneracy(const Chain& simplex, std::size_t i) {
  Chain out = simplex;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(i), simplex[i]);
  return out;
}

bool TruncatedSimplicialSet::is_degenerate(const Chain& simplex) {
  return std::adjacent_find(simplex.begin(), simplex.end()) != simplex.end();
}

TruncatedSimplicialSet nerve_truncation(const Poset& p, std::size_t max_degree) {
  const std::size_t h = height(p);
  if (h > 0 && max_degree + 1 < h) {
    throw Error(ErrorCode::TruncationTooSmall, "truncation degree " + std::to_string(max_degree) +
                                                   " is below the order-complex dimension " + std::to_string(h - 1));
  }
  // Nondegenerate simplices of the nerve are the chains, listed bottom-up
  // in poset order (not index order).
  TruncatedSimplicialSet ss;
  ss.truncation_ = max_degree;
  ss.vertex_names_ = p.elements();
  auto chains = enumerate_chains(p, max_degree + 1);
  chains.resize(max_degree + 1);
  ss.simplices_ = std::move(chains);

  ss.faces_.resize(max_degree + 1);
  for (std::size_t n = 1; n <= max_degree; ++n) {
    for (const auto& s : ss.simplices_[n]) {
      std::vector<TruncatedSimplicialSet::Face> faces;
      for (std::size_t i = 0; i <= n; ++i) {
        const Chain f = TruncatedSimplicialSet::apply_face(s, i);
        if (TruncatedSimplicialSet::is_degenerate(f)) {
          faces.push_back({0, true});
        } else {
          faces.push_back({locate(ss.simplices_[n - 1], f), false});
        }
      }
      ss.faces_[n].push_back(std::move(faces));
    }
  }
  return ss;
}

ChainComplex normalized_chain_complex(const TruncatedSimplicialSet& ss) {
  ChainComplex c;
  c.direction = Direction::Chain;
  const std::size_t top = ss.truncation() + 1;
  for (std::size_t n = 0; n < top; ++n) {
    c.ranks.push_back(ss.simplices(n).size());
    std::vector<std::string> labels;
    for (const auto& s : ss.simplices(n)) labels.push_back(face_label(ss.vertex_names(), s));
    c.labels.push_back(std::move(labels));
  }
  for (std::size_t n = 0; n < top; ++n) {
    const auto cols = static_cast<Eigen::Index>(c.ranks[n]);
    if (n == 0) {
      c.maps.push_back(IntMatrix::Zero(0, cols));
      continue;
    }
    IntMatrix d = IntMatrix::Zero(static_cast<Eigen::Index>(c.ranks[n - 1]), cols);
    for (std::size_t k = 0; k < c.ranks[n]; ++k) {
      for (std::size_t i = 0; i <= n; ++i) {
        const auto& f = ss.face(n, k, i);
        if (f.degenerate) continue;
        d(static_cast<Eigen::Index>(f.target), static_cast<Eigen::Index>(k)) += Integer(i % 2 == 0 ? 1 : -1);
      }
    }
    c.maps.push_back(std::move(d));
  }
  return c;
}

}  // namespace posethom
