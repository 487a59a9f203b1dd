#include "posethom/coloured.hpp"

#include "posethom/error.hpp"

#include <algorithm>

namespace posethom {

namespace {

std::size_t require_top(const Poset& p) {
  const auto top = unique_maximum(p);
  if (!top) {
    throw Error(ErrorCode::NoUniqueMax, "coloured homology needs a unique maximal element; found " +
                                            std::to_string(p.maximal_elements().size()) + " maximal elements");
  }
  return *top;
}

void extend(const Poset& p, std::size_t top, bool strict, std::size_t n, Chain& current, std::vector<Chain>& out) {
  if (current.size() == n) {
    out.push_back(current);
    return;
  }
  for (std::size_t y = 0; y < p.size(); ++y) {
    if (y == top) continue;
    if (!current.empty()) {
      const std::size_t last = current.back();
      if (strict ? !p.less(last, y) : !p.less_equal(last, y)) continue;
    }
    current.push_back(y);
    extend(p, top, strict, n, current, out);
    current.pop_back();
  }
}

std::string sequence_text(const Poset& p, const Chain& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += " ";
    out += p.element(c[i]);
  }
  return out;
}

}  // namespace

ColouredPoset ColouredPoset::make(Poset poset, const PosetFunctor& colouring) {
  if (colouring.variance != Variance::Covariant) {
    throw Error(ErrorCode::WrongDirection, "a colouring is a covariant functor");
  }
  ColouredPoset cp;
  cp.top_ = require_top(poset);
  cp.colouring_ = validate_functor(poset, colouring);
  cp.poset_ = std::move(poset);
  return cp;
}

std::vector<Chain> enumerate_multichains(const Poset& p, std::size_t n, bool strict) {
  const std::size_t top = require_top(p);
  std::vector<Chain> out;
  Chain current;
  extend(p, top, strict, n, current, out);
  return out;  // generated in lexicographic order
}

ColouredComplex coloured_chain_complex(const ColouredPoset& cp, bool strict, std::size_t max_degree) {
  if (max_degree < 1) throw Error(ErrorCode::TruncationTooSmall, "coloured complex needs max degree >= 1");
  const Poset& p = cp.poset();
  const ValidatedFunctor& f = cp.colouring();
  const std::size_t one = cp.top();

  // Generators: degree 0 is F(1); degree n is one F(x_1) block per sequence.
  std::vector<std::vector<Chain>> seqs(max_degree + 1);
  seqs[0] = {Chain{}};
  for (std::size_t n = 1; n <= max_degree; ++n) seqs[n] = enumerate_multichains(p, n, strict);
  std::vector<std::vector<Eigen::Index>> offset(max_degree + 1);

  ColouredComplex out;
  ChainComplex& c = out.complex;
  c.direction = Direction::Chain;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    Eigen::Index total = 0;
    std::vector<std::string> labels;
    for (const auto& s : seqs[n]) {
      offset[n].push_back(total);
      const std::size_t lead = n == 0 ? one : s.front();
      total += static_cast<Eigen::Index>(f.rank(lead));
      for (std::size_t i = 0; i < f.rank(lead); ++i) {
        labels.push_back((n == 0 ? p.element(one) : sequence_text(p, s)) +
                         (f.rank(lead) > 1 ? "#" + std::to_string(i) : ""));
      }
    }
    c.ranks.push_back(static_cast<std::size_t>(total));
    c.labels.push_back(std::move(labels));
  }

  auto locate = [&](std::size_t n, const Chain& s) {
    const auto it = std::lower_bound(seqs[n].begin(), seqs[n].end(), s);
    return offset[n][static_cast<std::size_t>(it - seqs[n].begin())];
  };

  for (std::size_t n = 0; n <= max_degree; ++n) {
    const auto cols = static_cast<Eigen::Index>(c.ranks[n]);
    if (n == 0) {
      c.maps.push_back(IntMatrix::Zero(0, cols));
      continue;
    }
    IntMatrix d = IntMatrix::Zero(static_cast<Eigen::Index>(c.ranks[n - 1]), cols);
    for (std::size_t k = 0; k < seqs[n].size(); ++k) {
      const Chain& s = seqs[n][k];
      const Eigen::Index col = offset[n][k];
      const auto r1 = static_cast<Eigen::Index>(f.rank(s.front()));
      if (n == 1) {
        const IntMatrix m = f.map(s.front(), one);
        d.block(0, col, m.rows(), r1) += m;
        continue;
      }
      // F(x_1 <= x_2)(λ) x_2 … x_n
      const Chain tail(s.begin() + 1, s.end());
      const IntMatrix m = f.map(s[0], s[1]);
      d.block(locate(n - 1, tail), col, m.rows(), r1) += m;
      // − Σ_{i=2}^{n} (−1)^i λ x_1 … x̂_i … x_n  (i is 1-based)
      for (std::size_t i = 2; i <= n; ++i) {
        Chain face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i - 1));
        const Eigen::Index row = locate(n - 1, face);
        const Integer coeff(i % 2 == 0 ? -1 : 1);
        for (Eigen::Index j = 0; j < r1; ++j) d(row + j, col + j) += coeff;
      }
    }
    c.maps.push_back(std::move(d));
  }

  // The strict complex stops at the height of P∖1; the weak one never does.
  const bool grows = strict ? !enumerate_multichains(p, max_degree + 1, true).empty() : p.size() > 1;
  out.truncated = grows;
  out.valid_below = grows ? max_degree : max_degree + 1;
  if (grows) {
    out.notes.push_back("truncated at degree " + std::to_string(max_degree) + "; homology is valid below degree " +
                        std::to_string(max_degree));
  }
  return out;
}

HomologySummary coloured_cohomology(const ColouredPoset& cp, bool strict, std::size_t max_degree) {
  return homology(dualize(coloured_chain_complex(cp, strict, max_degree).complex));
}

}  // namespace posethom
