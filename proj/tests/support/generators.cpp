#include "generators.hpp"

#include <algorithm>

namespace gen {

using posethom::Integer;
using posethom::IntMatrix;
using posethom::Poset;

long uniform(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

IntMatrix random_matrix(Rng& rng, long rows, long cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (long i = 0; i < rows; ++i) {
    for (long j = 0; j < cols; ++j) m(i, j) = Integer(uniform(rng, lo, hi));
  }
  return m;
}

IntMatrix random_unimodular(Rng& rng, long n) {
  IntMatrix u = IntMatrix::Identity(n, n);
  if (n == 0) return u;
  for (int step = 0; step < 3 * n; ++step) {
    const long i = uniform(rng, 0, n - 1);
    const long j = uniform(rng, 0, n - 1);
    if (i == j) {
      u.row(i) = (-u.row(i)).eval();
    } else {
      const Integer k(uniform(rng, -2, 2));
      u.row(i) = (u.row(i) + u.row(j) * k).eval();
    }
  }
  return u;
}

// Integer Gauss-Jordan; for a unimodular input every pivot ends up +-1.
static IntMatrix unimodular_inverse(const IntMatrix& u) {
  const long n = u.rows();
  IntMatrix a = u;
  IntMatrix inv = IntMatrix::Identity(n, n);
  for (long c = 0; c < n; ++c) {
    // Euclid on column c below the diagonal brings a unit to the pivot.
    for (;;) {
      long best = -1;
      for (long i = c; i < n; ++i) {
        if (!a(i, c).is_zero() && (best < 0 || posethom::abs(a(i, c)) < posethom::abs(a(best, c)))) best = i;
      }
      a.row(best).swap(a.row(c));
      inv.row(best).swap(inv.row(c));
      bool done = true;
      for (long i = c + 1; i < n; ++i) {
        if (a(i, c).is_zero()) continue;
        const Integer q = a(i, c) / a(c, c);
        a.row(i) = (a.row(i) - a.row(c) * q).eval();
        inv.row(i) = (inv.row(i) - inv.row(c) * q).eval();
        if (!a(i, c).is_zero()) done = false;
      }
      if (done) break;
    }
    if (a(c, c) == Integer(-1)) {
      a.row(c) = (-a.row(c)).eval();
      inv.row(c) = (-inv.row(c)).eval();
    }
  }
  for (long c = n - 1; c >= 0; --c) {
    for (long i = 0; i < c; ++i) {
      const Integer q = a(i, c);
      if (q.is_zero()) continue;
      a.row(i) = (a.row(i) - a.row(c) * q).eval();
      inv.row(i) = (inv.row(i) - inv.row(c) * q).eval();
    }
  }
  return inv;
}

Poset random_poset(Rng& rng, std::size_t n, int percent) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> less;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (uniform(rng, 0, 99) < percent) less.emplace_back(i, j);
    }
  }
  return Poset::from_relations(names, less);
}

Poset with_top(const Poset& p) {
  std::vector<std::string> names = p.elements();
  names.push_back("1");
  auto less = p.relations();
  for (std::size_t i = 0; i < p.size(); ++i) less.emplace_back(i, p.size());
  return Poset::from_relations(names, less);
}

posethom::PosetFunctor random_functor(Rng& rng, const Poset& p, std::size_t max_rank, posethom::Variance variance) {
  const std::size_t n = p.size();
  const long k = uniform(rng, 1, static_cast<long>(std::max<std::size_t>(1, max_rank)));
  std::vector<std::size_t> h(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) h[x] += p.less(y, x) ? 1 : 0;
  }
  // Coordinate j lives on an up-set or down-set generated by a random element
  // (or everywhere); intersections of such supports are convex, which is
  // exactly what path independence of the projections needs.
  std::vector<std::vector<long>> support(n);
  std::vector<long> scale(static_cast<std::size_t>(k));
  for (long j = 0; j < k; ++j) {
    const long kind = uniform(rng, 0, 2);
    const std::size_t g = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    static const long kScales[] = {-2, -1, 0, 1, 1, 2, 3};
    scale[static_cast<std::size_t>(j)] = kScales[uniform(rng, 0, 6)];
    for (std::size_t x = 0; x < n; ++x) {
      const bool in = kind == 0 || (kind == 1 ? p.less_equal(g, x) : p.less_equal(x, g));
      if (in) support[x].push_back(j);
    }
  }
  std::vector<IntMatrix> basis(n), basis_inv(n);
  for (std::size_t x = 0; x < n; ++x) {
    basis[x] = random_unimodular(rng, static_cast<long>(support[x].size()));
    basis_inv[x] = unimodular_inverse(basis[x]);
  }

  posethom::PosetFunctor f;
  f.variance = posethom::Variance::Contravariant;
  for (std::size_t x = 0; x < n; ++x) f.rank_of.push_back(support[x].size());
  for (const auto& [x, y] : posethom::covering_relations(p)) {
    // F(x <= y): F(y) -> F(x), rows indexed by support[x].
    IntMatrix m = IntMatrix::Zero(static_cast<long>(support[x].size()), static_cast<long>(support[y].size()));
    for (std::size_t a = 0; a < support[x].size(); ++a) {
      for (std::size_t b = 0; b < support[y].size(); ++b) {
        if (support[x][a] != support[y][b]) continue;
        Integer v(1);
        for (std::size_t e = h[x]; e < h[y]; ++e) v *= Integer(scale[static_cast<std::size_t>(support[x][a])]);
        m(static_cast<long>(a), static_cast<long>(b)) = v;
      }
    }
    f.map_on.emplace(posethom::ElementPair{x, y}, IntMatrix(basis_inv[x] * m * basis[y]));
  }
  if (variance == posethom::Variance::Covariant) return posethom::transpose(f);
  return f;
}

}  // namespace gen
