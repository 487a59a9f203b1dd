#include "posethom/chain_complex.hpp"

#include "posethom/error.hpp"

#include <string>

namespace posethom {

std::optional<IntMatrix> ChainComplex::incoming(std::size_t n) const {
  if (direction == Direction::Chain) {
    if (n + 1 < maps.size()) return maps[n + 1];
    return std::nullopt;
  }
  if (n == 0) {
    if (coaugmentation.cols() > 0) return coaugmentation;
    return std::nullopt;
  }
  return maps[n - 1];
}

ChainComplex zero_differential_complex(std::vector<std::size_t> ranks, Direction dir) {
  ChainComplex c;
  c.direction = dir;
  c.ranks = std::move(ranks);
  const std::size_t top = c.ranks.size();
  for (std::size_t n = 0; n < top; ++n) {
    const auto cols = static_cast<Eigen::Index>(c.ranks[n]);
    Eigen::Index rows = 0;
    if (dir == Direction::Chain && n > 0) rows = static_cast<Eigen::Index>(c.ranks[n - 1]);
    if (dir == Direction::Cochain && n + 1 < top) rows = static_cast<Eigen::Index>(c.ranks[n + 1]);
    c.maps.push_back(IntMatrix::Zero(rows, cols));
  }
  return c;
}

namespace {

void check_shape(const IntMatrix& m, std::size_t rows, std::size_t cols, std::size_t degree) {
  if (static_cast<std::size_t>(m.rows()) != rows || static_cast<std::size_t>(m.cols()) != cols) {
    throw Error(ErrorCode::ShapeMismatch,
                "differential at degree " + std::to_string(degree) + " has shape " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                    std::to_string(rows) + "x" + std::to_string(cols));
  }
}

}  // namespace

void validate(const ChainComplex& c) {
  const std::size_t top = c.ranks.size();
  if (c.maps.size() != top) {
    throw Error(ErrorCode::ShapeMismatch, "complex has " + std::to_string(top) + " degrees but " +
                                              std::to_string(c.maps.size()) + " differentials");
  }
  for (std::size_t n = 0; n < top; ++n) {
    if (c.direction == Direction::Chain && n == 0) {
      // zero rows, or the one-row augmentation
      check_shape(c.maps[0], c.maps[0].rows() > 0 ? 1 : 0, c.ranks[0], 0);
    } else if (c.direction == Direction::Chain) {
      check_shape(c.maps[n], c.ranks[n - 1], c.ranks[n], n);
    } else {
      check_shape(c.maps[n], n + 1 < top ? c.ranks[n + 1] : 0, c.ranks[n], n);
    }
  }
  if (c.direction == Direction::Cochain && c.coaugmentation.cols() > 0 && top > 0) {
    check_shape(c.coaugmentation, c.ranks[0], 1, 0);
  }
  // d∘d = 0 between consecutive differentials.
  for (std::size_t n = 0; n + 1 < top; ++n) {
    const IntMatrix product = c.direction == Direction::Chain ? IntMatrix(c.maps[n] * c.maps[n + 1])
                                                              : IntMatrix(c.maps[n + 1] * c.maps[n]);
    if (!all_zero(product)) {
      throw Error(ErrorCode::NotAComplex,
                  "d∘d is nonzero at degree " + std::to_string(c.direction == Direction::Chain ? n + 1 : n));
    }
  }
  if (c.direction == Direction::Cochain && c.coaugmentation.cols() > 0 && top > 0) {
    if (!all_zero(c.maps[0] * c.coaugmentation)) {
      throw Error(ErrorCode::NotAComplex, "coboundary does not vanish on the coaugmentation");
    }
  }
}

std::vector<std::size_t> HomologySummary::betti() const {
  std::vector<std::size_t> out;
  out.reserve(degrees.size());
  for (const auto& d : degrees) out.push_back(d.betti);
  return out;
}

long HomologySummary::euler_characteristic() const {
  long chi = 0;
  for (std::size_t n = 0; n < degrees.size(); ++n) {
    const long b = static_cast<long>(degrees[n].betti);
    chi += (n % 2 == 0) ? b : -b;
  }
  return chi;
}

HomologySummary homology(const ChainComplex& c) {
  validate(c);
  const std::size_t top = c.ranks.size();
  // Ranks and divisors of every differential, computed once.
  std::vector<SmithForm<Integer>> forms;
  forms.reserve(top);
  for (const auto& m : c.maps) forms.push_back(smith_diagonal(m));
  std::optional<SmithForm<Integer>> coaug;
  if (c.direction == Direction::Cochain && c.coaugmentation.cols() > 0) coaug = smith_diagonal(c.coaugmentation);

  HomologySummary out;
  out.degrees.resize(top);
  for (std::size_t n = 0; n < top; ++n) {
    const auto rank_out = static_cast<std::size_t>(forms[n].rank());
    const SmithForm<Integer>* in = nullptr;
    if (c.direction == Direction::Chain) {
      if (n + 1 < top) in = &forms[n + 1];
    } else if (n > 0) {
      in = &forms[n - 1];
    } else if (coaug) {
      in = &*coaug;
    }
    std::size_t rank_in = 0;
    if (in != nullptr) {
      rank_in = static_cast<std::size_t>(in->rank());
      for (const auto& d : in->divisors()) {
        if (d > Integer(1)) out.degrees[n].torsion.push_back(d);
      }
    }
    out.degrees[n].betti = c.ranks[n] - rank_out - rank_in;
  }
  return out;
}

ChainComplex dualize(const ChainComplex& c) {
  validate(c);
  ChainComplex d;
  d.ranks = c.ranks;
  d.labels = c.labels;
  const std::size_t top = c.ranks.size();
  if (c.direction == Direction::Chain) {
    d.direction = Direction::Cochain;
    for (std::size_t n = 0; n < top; ++n) {
      if (n + 1 < top) {
        d.maps.push_back(c.maps[n + 1].transpose());
      } else {
        d.maps.push_back(IntMatrix::Zero(0, static_cast<Eigen::Index>(c.ranks[n])));
      }
    }
    if (c.augmented()) d.coaugmentation = c.maps[0].transpose();
  } else {
    d.direction = Direction::Chain;
    for (std::size_t n = 0; n < top; ++n) {
      if (n == 0) {
        d.maps.push_back(c.coaugmentation.cols() > 0 ? IntMatrix(c.coaugmentation.transpose())
                                                     : IntMatrix::Zero(0, static_cast<Eigen::Index>(c.ranks[0])));
      } else {
        d.maps.push_back(c.maps[n - 1].transpose());
      }
    }
  }
  return d;
}

ChainComplex augment(const ChainComplex& c) {
  if (c.direction != Direction::Chain) {
    throw Error(ErrorCode::ShapeMismatch, "only chain complexes carry an augmentation");
  }
  ChainComplex a = c;
  if (!a.ranks.empty()) {
    a.maps[0] = IntMatrix::Constant(1, static_cast<Eigen::Index>(a.ranks[0]), Integer(1));
  }
  return a;
}

long euler_characteristic(const ChainComplex& c) {
  long chi = 0;
  for (std::size_t n = 0; n < c.ranks.size(); ++n) {
    const long r = static_cast<long>(c.ranks[n]);
    chi += (n % 2 == 0) ? r : -r;
  }
  return chi;
}

HomologyPresentation present_homology(const IntMatrix& incoming, const IntMatrix& outgoing) {
  const Eigen::Index dim = outgoing.cols();
  if (incoming.rows() != dim) {
    throw Error(ErrorCode::ShapeMismatch, "incoming and outgoing differentials disagree on the degree rank");
  }
  if (!all_zero(outgoing * incoming)) {
    throw Error(ErrorCode::NotAComplex, "composite of presented differentials is nonzero");
  }
  HomologyPresentation p;
  p.ambient_rank = static_cast<std::size_t>(dim);

  // Cycles: trailing columns of the right transform of `outgoing`.
  const auto out_form = smith_normal_form(outgoing);
  const Eigen::Index r_out = out_form.rank();
  const Eigen::Index k = dim - r_out;
  const IntMatrix cycles = out_form.right.rightCols(k);
  const IntMatrix cycle_coords = out_form.right_inverse.bottomRows(k);

  // Boundaries expressed in cycle coordinates, then diagonalised.
  const IntMatrix in_coords = cycle_coords * incoming;
  const auto in_form = smith_normal_form(in_coords);
  const Eigen::Index r_in = in_form.rank();

  const IntMatrix generators = cycles * in_form.left_inverse;
  p.free_cycles = generators.rightCols(k - r_in);
  p.free_coordinates = in_form.left.bottomRows(k - r_in) * cycle_coords;

  std::vector<Eigen::Index> torsion_idx;
  for (Eigen::Index i = 0; i < r_in; ++i) {
    if (in_form.diag(i, i) > Integer(1)) {
      torsion_idx.push_back(i);
      p.torsion_orders.push_back(in_form.diag(i, i));
    }
  }
  p.torsion_cycles = IntMatrix(dim, static_cast<Eigen::Index>(torsion_idx.size()));
  for (std::size_t j = 0; j < torsion_idx.size(); ++j) {
    p.torsion_cycles.col(static_cast<Eigen::Index>(j)) = generators.col(torsion_idx[j]);
  }
  return p;
}

IntMatrix select(const IntMatrix& m, const std::vector<Eigen::Index>& rows,
                 const std::vector<Eigen::Index>& cols) {
  IntMatrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(rows[i], cols[j]);
    }
  }
  return out;
}

}  // namespace posethom
