#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>

namespace posethom {

/// Arbitrary-precision signed integer.
///
/// Every arithmetic operator evaluates eagerly and returns an `Integer`, so the
/// type can be used as an Eigen scalar (gmpxx's own expression templates do not
/// compose with Eigen's).
class Integer {
 public:
  Integer() = default;
  Integer(int v) : value_(v) {}                 // NOLINT(google-explicit-constructor)
  Integer(long v) : value_(v) {}                // NOLINT(google-explicit-constructor)
  Integer(long long v) : value_(static_cast<long>(v)) {}  // NOLINT
  Integer(unsigned long v) : value_(v) {}       // NOLINT
  explicit Integer(mpz_class v) : value_(std::move(v)) {}

  /// Parses a base-10 integer; throws std::invalid_argument on bad input.
  static Integer parse(std::string_view text);

  [[nodiscard]] const mpz_class& mpz() const { return value_; }
  [[nodiscard]] std::string str() const { return value_.get_str(); }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool fits_long() const { return value_.fits_slong_p(); }
  [[nodiscard]] long to_long() const { return value_.get_si(); }

  Integer& operator+=(const Integer& o) { value_ += o.value_; return *this; }
  Integer& operator-=(const Integer& o) { value_ -= o.value_; return *this; }
  Integer& operator*=(const Integer& o) { value_ *= o.value_; return *this; }

  friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.value_ + b.value_)); }
  friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.value_ - b.value_)); }
  friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.value_ * b.value_)); }
  // Truncating division and remainder, matching the builtin integer semantics.
  friend Integer operator/(const Integer& a, const Integer& b) {
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
    return Integer(std::move(q));
  }
  friend Integer operator%(const Integer& a, const Integer& b) {
    mpz_class r;
    mpz_tdiv_r(r.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
    return Integer(std::move(r));
  }
  Integer operator-() const { return Integer(mpz_class(-value_)); }

  friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.value_; }

 private:
  mpz_class value_;
};

inline Integer abs(const Integer& a) { return Integer(mpz_class(::abs(a.mpz()))); }

inline Integer gcd(const Integer& a, const Integer& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Integer(std::move(g));
}

}  // namespace posethom

namespace Eigen {

template <>
struct NumTraits<posethom::Integer> : GenericNumTraits<posethom::Integer> {
  using Real = posethom::Integer;
  using NonInteger = posethom::Integer;
  using Literal = posethom::Integer;
  using Nested = posethom::Integer;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16
  };
  static inline int digits10() { return 0; }
  static inline posethom::Integer epsilon() { return 0; }
  static inline posethom::Integer dummy_precision() { return 0; }
};

}  // namespace Eigen

namespace posethom {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = MatrixX<Integer>;
using IntVector = VectorX<Integer>;

inline bool all_zero(const IntMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!m(i, j).is_zero()) return false;
    }
  }
  return true;
}

/// Row-major construction helper, mostly for tests and literals.
IntMatrix make_matrix(Eigen::Index rows, Eigen::Index cols, std::initializer_list<long> entries);

}  // namespace posethom
