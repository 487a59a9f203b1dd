#pragma once

#include "posethom/chain_complex.hpp"

#include <string>
#include <vector>

namespace audit {

struct Finding {
  bool uct = true;    // H^n betti = H_n betti, H^n torsion = H_{n-1} torsion
  bool euler = true;  // alternating betti sum = alternating rank sum
  std::string detail;
};

/// Checks one complex; a cochain complex is read as the dual of its own dual.
Finding check(const posethom::ChainComplex& c);

/// Every complex a test computes goes through here.
struct Registry {
  std::size_t complexes = 0;
  std::size_t uct_failures = 0;
  std::size_t euler_failures = 0;
  std::vector<std::string> failures;

  void record(const std::string& origin, const posethom::ChainComplex& c);
};

Registry& registry();

}  // namespace audit
