#include "posethom/integer.hpp"

#include <stdexcept>
#include <string>

namespace posethom {

Integer Integer::parse(std::string_view text) {
  mpz_class v;
  const std::string s(text);
  if (s.empty() || v.set_str(s, 10) != 0) {
    throw std::invalid_argument("not a base-10 integer: '" + s + "'");
  }
  return Integer(std::move(v));
}

IntMatrix make_matrix(Eigen::Index rows, Eigen::Index cols, std::initializer_list<long> entries) {
  if (static_cast<Eigen::Index>(entries.size()) != rows * cols) {
    throw std::invalid_argument("make_matrix: entry count does not match shape");
  }
  IntMatrix m(rows, cols);
  auto it = entries.begin();
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Integer(*it++);
  }
  return m;
}

}  // namespace posethom
