#pragma once

#include "posethom/integer.hpp"

#include <cstdlib>
#include <utility>
#include <vector>

namespace posethom {

namespace detail {

template <typename Scalar>
Scalar magnitude(const Scalar& v) {
  using std::abs;
  return abs(v);
}

inline bool is_zero(const Integer& v) { return v.is_zero(); }
template <typename Scalar>
bool is_zero(const Scalar& v) {
  return v == Scalar(0);
}

}  // namespace detail

/// Smith normal form `left * input * right == diag`.
///
/// `left` and `right` are unimodular; `left_inverse` and `right_inverse` are
/// their exact inverses (tracked alongside, never computed by elimination).
/// The transforms are empty when the decomposition was requested without them.
template <typename Scalar>
struct SmithForm {
  MatrixX<Scalar> left;
  MatrixX<Scalar> diag;
  MatrixX<Scalar> right;
  MatrixX<Scalar> left_inverse;
  MatrixX<Scalar> right_inverse;

  /// Diagonal entries d_1 | d_2 | ... (nonnegative; zeros trail).
  [[nodiscard]] std::vector<Scalar> divisors() const {
    std::vector<Scalar> out;
    const Eigen::Index n = std::min(diag.rows(), diag.cols());
    out.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) out.push_back(diag(i, i));
    return out;
  }

  /// Rank over the rationals: the number of nonzero divisors.
  [[nodiscard]] Eigen::Index rank() const {
    Eigen::Index r = 0;
    const Eigen::Index n = std::min(diag.rows(), diag.cols());
    while (r < n && !detail::is_zero(diag(r, r))) ++r;
    return r;
  }
};

namespace detail {

// Elimination state. Row operations act on a and left; column operations on
// a and right. Inverses receive the inverse operation on the opposite side.
template <typename Scalar>
class SmithReducer {
 public:
  SmithReducer(MatrixX<Scalar> a, bool track) : a_(std::move(a)), track_(track) {
    if (track_) {
      left_ = MatrixX<Scalar>::Identity(a_.rows(), a_.rows());
      left_inv_ = left_;
      right_ = MatrixX<Scalar>::Identity(a_.cols(), a_.cols());
      right_inv_ = right_;
    }
  }

  SmithForm<Scalar> run() {
    const Eigen::Index steps = std::min(a_.rows(), a_.cols());
    for (Eigen::Index t = 0; t < steps; ++t) {
      if (!move_min_to_pivot(t)) break;
      reduce_pivot(t);
    }
    return {std::move(left_), std::move(a_), std::move(right_), std::move(left_inv_),
            std::move(right_inv_)};
  }

 private:
  // Minimal nonzero |entry| of the trailing block goes to (t, t).
  bool move_min_to_pivot(Eigen::Index t) {
    Eigen::Index bi = -1, bj = -1;
    Scalar best{};
    for (Eigen::Index j = t; j < a_.cols(); ++j) {
      for (Eigen::Index i = t; i < a_.rows(); ++i) {
        if (is_zero(a_(i, j))) continue;
        Scalar m = magnitude(a_(i, j));
        if (bi < 0 || m < best) {
          best = std::move(m);
          bi = i;
          bj = j;
        }
      }
    }
    if (bi < 0) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void reduce_pivot(Eigen::Index t) {
    for (;;) {
      bool clean = true;
      for (Eigen::Index i = t + 1; i < a_.rows(); ++i) {
        if (is_zero(a_(i, t))) continue;
        Scalar q = a_(i, t) / a_(t, t);
        if (!is_zero(q)) add_row_multiple(i, t, -q);
        if (!is_zero(a_(i, t))) clean = false;
      }
      for (Eigen::Index j = t + 1; j < a_.cols(); ++j) {
        if (is_zero(a_(t, j))) continue;
        Scalar q = a_(t, j) / a_(t, t);
        if (!is_zero(q)) add_col_multiple(j, t, -q);
        if (!is_zero(a_(t, j))) clean = false;
      }
      if (!clean) {
        move_min_in_cross(t);
        continue;
      }
      // Divisibility: pull a non-divisible row into the pivot row and repeat.
      bool divisible = true;
      for (Eigen::Index i = t + 1; i < a_.rows() && divisible; ++i) {
        for (Eigen::Index j = t + 1; j < a_.cols(); ++j) {
          if (!is_zero(a_(i, j) % a_(t, t))) {
            add_row_multiple(t, i, Scalar(1));
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    if (a_(t, t) < Scalar(0)) negate_row(t);
  }

  // Smallest nonzero entry of row t / column t (from t on) becomes the pivot.
  void move_min_in_cross(Eigen::Index t) {
    Eigen::Index bi = t, bj = t;
    Scalar best = magnitude(a_(t, t));
    bool have = !is_zero(a_(t, t));
    for (Eigen::Index i = t + 1; i < a_.rows(); ++i) {
      if (is_zero(a_(i, t))) continue;
      Scalar m = magnitude(a_(i, t));
      if (!have || m < best) {
        best = std::move(m);
        bi = i;
        bj = t;
        have = true;
      }
    }
    for (Eigen::Index j = t + 1; j < a_.cols(); ++j) {
      if (is_zero(a_(t, j))) continue;
      Scalar m = magnitude(a_(t, j));
      if (!have || m < best) {
        best = std::move(m);
        bi = t;
        bj = j;
        have = true;
      }
    }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  void swap_rows(Eigen::Index i, Eigen::Index k) {
    if (i == k) return;
    a_.row(i).swap(a_.row(k));
    if (track_) {
      left_.row(i).swap(left_.row(k));
      left_inv_.col(i).swap(left_inv_.col(k));
    }
  }

  void swap_cols(Eigen::Index j, Eigen::Index k) {
    if (j == k) return;
    a_.col(j).swap(a_.col(k));
    if (track_) {
      right_.col(j).swap(right_.col(k));
      right_inv_.row(j).swap(right_inv_.row(k));
    }
  }

  // row_dst += q * row_src
  void add_row_multiple(Eigen::Index dst, Eigen::Index src, const Scalar& q) {
    a_.row(dst) += q * a_.row(src);
    if (track_) {
      left_.row(dst) += q * left_.row(src);
      left_inv_.col(src) -= q * left_inv_.col(dst);
    }
  }

  // col_dst += q * col_src
  void add_col_multiple(Eigen::Index dst, Eigen::Index src, const Scalar& q) {
    a_.col(dst) += q * a_.col(src);
    if (track_) {
      right_.col(dst) += q * right_.col(src);
      right_inv_.row(src) -= q * right_inv_.row(dst);
    }
  }

  void negate_row(Eigen::Index t) {
    a_.row(t) = -a_.row(t);
    if (track_) {
      left_.row(t) = -left_.row(t);
      left_inv_.col(t) = -left_inv_.col(t);
    }
  }

  MatrixX<Scalar> a_;
  bool track_;
  MatrixX<Scalar> left_, left_inv_, right_, right_inv_;
};

}  // namespace detail

/// Smith normal form with unimodular transforms (and their inverses).
///
/// Pivots on an entry of minimal absolute value to limit coefficient growth.
template <typename Derived>
SmithForm<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  return detail::SmithReducer<Scalar>(MatrixX<Scalar>(m), true).run();
}

/// Elementary divisors only; transforms are not accumulated.
template <typename Derived>
SmithForm<typename Derived::Scalar> smith_diagonal(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  return detail::SmithReducer<Scalar>(MatrixX<Scalar>(m), false).run();
}

template <typename Derived>
Eigen::Index rational_rank(const Eigen::MatrixBase<Derived>& m) {
  return smith_diagonal(m).rank();
}

}  // namespace posethom
