#pragma once

#include "audit.hpp"
#include "posethom/error.hpp"

#include <doctest.h>

#include <functional>

// Runs `fn` and returns the code of the posethom::Error it throws.
inline std::optional<posethom::ErrorCode> error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const posethom::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline std::vector<std::size_t> betti(const posethom::HomologySummary& h) { return h.betti(); }

// Every complex built in a unit test passes through the audit as well.
inline void audited(const posethom::ChainComplex& c) {
  const auto f = audit::check(c);
  CHECK_MESSAGE(f.uct, f.detail);
  CHECK_MESSAGE(f.euler, f.detail);
}
