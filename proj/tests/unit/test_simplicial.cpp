#include "fixtures.hpp"
#include "generators.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "posethom/simplicial.hpp"

using namespace posethom;

namespace {

Poset e1q() { return quotient_poset(fixture::e1()).poset; }

HomologySummary order_homology(const Poset& p, bool reduced = false) {
  const auto c = simplicial_chain_complex(order_complex(p), reduced);
  audited(c);
  return homology(c);
}

}  // namespace

TEST_CASE("order complexes") {
  const auto sc = order_complex(e1q());
  CHECK(sc.vertices.size() == 3);
  REQUIRE(sc.faces.size() == 2);
  CHECK(sc.faces[1].size() == 2);

  const auto hex = order_complex(fixture::hexagon());
  CHECK(hex.vertices.size() == 6);
  CHECK(hex.faces[1].size() == 6);
  CHECK(hex.faces.size() == 2);

  CHECK(order_complex(fixture::antichain(4)).faces.size() == 1);
}

TEST_CASE("simplicial homology of the small examples") {
  const auto c = simplicial_chain_complex(order_complex(e1q()));
  CHECK(c.ranks == std::vector<std::size_t>{3, 2});
  CHECK(euler_characteristic(c) == 1);
  CHECK(betti(order_homology(e1q())) == std::vector<std::size_t>{1, 0});
  CHECK(betti(order_homology(fixture::hexagon())) == std::vector<std::size_t>{1, 1});
  CHECK(betti(order_homology(fixture::chain_poset(1))) == std::vector<std::size_t>{1});
  CHECK(betti(order_homology(quotient_poset(fixture::e3()).poset)) == std::vector<std::size_t>{1, 0, 0});
  CHECK(betti(order_homology(folkman_trim(e1q(), Extremum::Max))) == std::vector<std::size_t>{2});
}

TEST_CASE("reduced homology drops one Z from connected complexes") {
  CHECK(betti(order_homology(e1q(), true)) == std::vector<std::size_t>{0, 0});
  CHECK(betti(order_homology(fixture::hexagon(), true)) == std::vector<std::size_t>{0, 1});
  CHECK(betti(order_homology(fixture::antichain(3), true)) == std::vector<std::size_t>{2});
}

TEST_CASE("simplicial homology against the rank oracle") {
  gen::Rng rng(21);
  for (int t = 0; t < 25; ++t) {
    const auto p = gen::random_poset(rng, 1 + t % 7, 45);
    const auto c = simplicial_chain_complex(order_complex(p));
    CHECK(oracle::squares_to_zero(c));
    const auto h = homology(c);
    const auto o = oracle::homology(c, false);
    for (std::size_t n = 0; n < h.degrees.size(); ++n) CHECK(h.degrees[n].betti == o[n].betti);
    audited(c);
  }
}

TEST_CASE("nerve truncation counts") {
  CHECK(nerve_truncation(e1q(), 2).counts() == std::vector<std::size_t>{3, 2, 0});
  CHECK(nerve_truncation(fixture::chain_poset(3), 3).counts() == std::vector<std::size_t>{3, 3, 1, 0});
  CHECK(nerve_truncation(fixture::chain_poset(1), 1).counts() == std::vector<std::size_t>{1, 0});
  CHECK(error_of([] { (void)nerve_truncation(fixture::chain_poset(3), 1); }) == ErrorCode::TruncationTooSmall);
}

TEST_CASE("simplicial identities on the nerve") {
  const auto ss = nerve_truncation(fixture::chain_poset(4), 4);
  for (std::size_t n = 2; n <= 3; ++n) {
    for (const auto& s : ss.simplices(n)) {
      for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          using T = TruncatedSimplicialSet;
          CHECK(T::apply_face(T::apply_face(s, j), i) == T::apply_face(T::apply_face(s, i), j - 1));
        }
      }
    }
  }
  using T = TruncatedSimplicialSet;
  const Chain x{0, 1, 2};
  CHECK(T::is_degenerate(T::apply_degeneracy(x, 1)));
  CHECK(T::apply_face(T::apply_degeneracy(x, 1), 1) == x);
  CHECK(T::apply_face(T::apply_degeneracy(x, 1), 2) == x);
}

TEST_CASE("nerve and order complex agree") {
  CHECK(betti(homology(normalized_chain_complex(nerve_truncation(e1q(), 2)))) == std::vector<std::size_t>{1, 0, 0});
  CHECK(betti(homology(normalized_chain_complex(nerve_truncation(fixture::hexagon(), 2)))) ==
        std::vector<std::size_t>{1, 1, 0});
  CHECK(betti(homology(normalized_chain_complex(nerve_truncation(fixture::chain_poset(1), 1)))) ==
        std::vector<std::size_t>{1, 0});

  gen::Rng rng(99);
  for (int t = 0; t < 20; ++t) {
    const auto p = gen::random_poset(rng, 1 + t % 6, 50);
    const std::size_t n = std::max<std::size_t>(3, height(p));
    const auto c = normalized_chain_complex(nerve_truncation(p, n));
    audited(c);
    const auto hn = homology(c);
    const auto ho = homology(simplicial_chain_complex(order_complex(p)));
    for (std::size_t d = 0; d < hn.degrees.size(); ++d) {
      const DegreeHomology zero{};
      CHECK(hn.degrees[d] == (d < ho.degrees.size() ? ho.degrees[d] : zero));
    }
  }
}
