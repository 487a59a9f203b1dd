#include "fixtures.hpp"
#include "generators.hpp"
#include "helpers.hpp"
#include "posethom/poset.hpp"

#include <algorithm>
#include <set>

using namespace posethom;

namespace {

Poset e1q() { return quotient_poset(fixture::e1()).poset; }
Poset e3q() { return quotient_poset(fixture::e3()).poset; }

}  // namespace

TEST_CASE("construction rejects non-orders") {
  CHECK(error_of([] { Poset::from_relations({"a", "b"}, {{0, 1}, {1, 0}}); }) == ErrorCode::InvalidOrder);
  CHECK(error_of([] { Poset::from_relations({"a"}, {{0, 0}}); }) == ErrorCode::InvalidOrder);
  CHECK(error_of([] { Poset::from_relations({"a", "a"}, {}); }) == ErrorCode::InvalidOrder);
  const auto p = Poset::from_relations({"a", "b", "c"}, {{0, 1}, {1, 2}});
  CHECK(p.less(0, 2));  // closed
}

TEST_CASE("covering relations") {
  CHECK(covering_relations(e1q()) == std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 2}});
  const auto c3 = covering_relations(e3q());
  CHECK(c3.size() == 9);
  std::size_t to_top = 0;
  for (const auto& [x, y] : c3) to_top += y == 6 ? 1 : 0;
  CHECK(to_top == 3);
  CHECK(covering_relations(fixture::antichain(2)).empty());
}

TEST_CASE("covering relations generate the order") {
  gen::Rng rng(3);
  for (int t = 0; t < 40; ++t) {
    const auto p = gen::random_poset(rng, 1 + t % 8, 40);
    const auto rebuilt = Poset::from_relations(p.elements(), covering_relations(p));
    CHECK(rebuilt == p);
  }
}

TEST_CASE("chain enumeration") {
  const auto e1 = enumerate_chains(e1q(), 3);
  REQUIRE(e1.size() == 2);
  CHECK(e1[0] == std::vector<Chain>{{0}, {1}, {2}});
  CHECK(e1[1] == std::vector<Chain>{{0, 2}, {1, 2}});

  const auto c = enumerate_chains(fixture::chain_poset(3), 3);
  REQUIRE(c.size() == 3);
  CHECK(c[0].size() == 3);
  CHECK(c[1].size() == 3);
  CHECK(c[2] == std::vector<Chain>{{0, 1, 2}});

  const auto a = enumerate_chains(fixture::antichain(3), 3);
  REQUIRE(a.size() == 1);
  CHECK(a[0].size() == 3);
}

TEST_CASE("chains are downward closed") {
  gen::Rng rng(8);
  for (int t = 0; t < 30; ++t) {
    const auto p = gen::random_poset(rng, 2 + t % 7, 50);
    const auto chains = enumerate_chains(p, p.size());
    for (std::size_t d = 1; d < chains.size(); ++d) {
      for (const auto& ch : chains[d]) {
        for (std::size_t i = 0; i < ch.size(); ++i) {
          Chain face = ch;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
          CHECK(std::binary_search(chains[d - 1].begin(), chains[d - 1].end(), face));
        }
        for (std::size_t i = 0; i + 1 < ch.size(); ++i) CHECK(p.less(ch[i], ch[i + 1]));
      }
    }
  }
}

TEST_CASE("up-sets") {
  const auto u = up_sets(e1q());
  CHECK(u == std::vector<ElementSet>{{}, {2}, {0, 2}, {1, 2}, {0, 1, 2}});
  CHECK(up_sets(fixture::antichain(2)).size() == 4);
  CHECK(up_sets(fixture::chain_poset(2)) == std::vector<ElementSet>{{}, {1}, {0, 1}});
  CHECK(error_of([] { (void)up_sets(fixture::antichain(21)); }) == ErrorCode::SizeLimit);
  CHECK(error_of([] { (void)up_sets(fixture::antichain(5), 4); }) == ErrorCode::SizeLimit);
}

TEST_CASE("up-sets form a topology") {
  gen::Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto p = gen::random_poset(rng, 1 + t % 7, 35);
    const auto u = up_sets(p);
    const std::set<ElementSet> all(u.begin(), u.end());
    for (const auto& a : u) {
      for (const auto& b : u) {
        ElementSet uni, inter;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
        CHECK(all.count(uni) == 1);
        CHECK(all.count(inter) == 1);
      }
      for (const auto x : a) {
        for (std::size_t y = 0; y < p.size(); ++y) {
          if (p.less(x, y)) CHECK(std::binary_search(a.begin(), a.end(), y));
        }
      }
    }
  }
}

TEST_CASE("corank filtration") {
  const auto p = e1q();
  CHECK(filtration(p, {1, 1, 0}, 0).elements() == std::vector<std::string>{"[U1,U2]"});
  CHECK(filtration(p, {1, 1, 0}, 1) == p);
  CHECK(filtration(p, {1, 1, 0}, 7) == p);
  CHECK(error_of([&] { (void)filtration(p, {1, 0}, 0); }) == ErrorCode::MissingCorank);

  const auto q3 = e3q();
  const auto g = grade_poset(q3);
  CHECK(filtration(q3, g.corank_of, 1).size() == 4);
  for (std::size_t k = 0; k < 3; ++k) {
    const auto a = filtration_members(q3, g.corank_of, k);
    const auto b = filtration_members(q3, g.corank_of, k + 1);
    CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
  }
}

TEST_CASE("folkman trim") {
  const auto hex = folkman_trim(e3q(), Extremum::Max);
  CHECK(hex.size() == 6);
  const auto e1 = folkman_trim(e1q(), Extremum::Max);
  CHECK(e1.size() == 2);
  CHECK(e1.relations().empty());
  CHECK(error_of([] { (void)folkman_trim(e1q(), Extremum::Min); }) == ErrorCode::NoUniqueExtremum);
  CHECK(error_of([] { (void)folkman_trim(e1q(), Extremum::Both); }) == ErrorCode::NoUniqueExtremum);
  const auto c = folkman_trim(fixture::chain_poset(4), Extremum::Both);
  CHECK(c.elements() == std::vector<std::string>{"b", "c"});
  for (std::size_t x = 0; x < hex.size(); ++x) CHECK(hex.label(x)->size() < 3);
}
