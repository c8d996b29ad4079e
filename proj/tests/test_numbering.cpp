#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "oracles.hpp"
#include "vbraid/error.hpp"
#include "vbraid/moves.hpp"
#include "vbraid/numbering.hpp"
#include "vbraid/projection.hpp"

using namespace vbraid;

namespace {
  std::vector<std::pair<int, int>> incoming(BraidWord const& x) {
    std::vector<std::pair<int, int>> out;
    for (auto const& c : integer_numbering(x).crossings) {
      if (c.numbers) {
        out.emplace_back(c.numbers->lambda, c.numbers->mu);
      }
    }
    return out;
  }

  std::vector<Parity> parities(BraidWord const& x) {
    std::vector<Parity> out;
    for (auto const& [k, p] : parity(x)) {
      out.push_back(p);
    }
    return out;
  }

  std::vector<int> iota_vec(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return v;
  }
}  // namespace

TEST_SUITE("numbering") {
  TEST_CASE("single classical crossing") {
    auto const num = integer_numbering(w(2, "s1"));
    REQUIRE(num.crossings.size() == 1);
    CHECK(num.crossings[0].numbers == ClassicalIncidence{1, 2, Parity::even});
    CHECK(num.top_numbers == std::vector<int>{1, 2});
    CHECK(num.top_strands == std::vector<int>{2, 1});
  }

  TEST_CASE("non-numberable example t1 s1 t1 s1") {
    auto const num = integer_numbering(w(2, "t1 s1 t1 s1"));
    REQUIRE(num.crossings.size() == 4);
    CHECK_FALSE(num.crossings[0].numbers.has_value());
    CHECK(num.crossings[1].numbers == ClassicalIncidence{2, 1, Parity::odd});
    CHECK(num.crossings[3].numbers == ClassicalIncidence{3, 0, Parity::odd});
    CHECK(parity(w(2, "t1 s1 t1 s1"))
          == std::vector<std::pair<std::size_t, Parity>>{{1, Parity::odd},
                                                        {3, Parity::odd}});
    CHECK_FALSE(is_almost_classical(w(2, "t1 s1 t1 s1")));
  }

  TEST_CASE("trivial word t1 s2 S2 t1") {
    auto const x = w(3, "t1 s2 S2 t1");
    CHECK(incoming(x) == std::vector<std::pair<int, int>>{{1, 3}, {2, 2}});
    CHECK(parity(x)
          == std::vector<std::pair<std::size_t, Parity>>{{1, Parity::odd},
                                                        {2, Parity::odd}});
  }

  TEST_CASE("virtual letters only swap") {
    auto const num = integer_numbering(w(2, "t1"));
    CHECK(num.top_numbers == std::vector<int>{2, 1});
    CHECK(is_almost_classical(w(2, "t1")));
    CHECK(top_numbering(w(3, "t1 t2 t2 t1")) == std::vector<int>{1, 2, 3});
    CHECK(top_numbering(w(2, "s1")) == std::vector<int>{1, 2});
    CHECK(top_numbering(w(2, "t1")) == std::vector<int>{2, 1});
  }

  TEST_CASE("sign does not affect numbering") {
    CHECK(incoming(w(3, "t1 s2 t1 s1")) == incoming(w(3, "t1 S2 t1 S1")));
  }

  TEST_CASE("smooth") {
    CHECK(smooth(w(2, "s1"), 0).empty());
    CHECK(smooth(w(3, "t1 s2 S2 t1"), 1) == w(3, "t1 S2 t1"));
    CHECK_THROWS_AS(smooth(w(3, "t1 s2"), 0), PreconditionError);
    CHECK_THROWS_AS(smooth(w(3, "t1 s2"), 2), PreconditionError);
  }

  TEST_CASE("sweep agrees with arc-graph constraint solving") {
    std::mt19937_64 rng(31);
    std::size_t     almost = 0;
    for (int trial = 0; trial < 5000; ++trial) {
      int const  n = 2 + static_cast<int>(oracle::below(rng, 5));
      auto const x = oracle::random_word(rng, n, 14, true);

      auto const integer = oracle::solve_arcs(x, false);
      REQUIRE(integer.has_value());
      std::vector<std::pair<int, int>> expected;
      for (auto const& [l, m] : integer->incoming) {
        expected.emplace_back(static_cast<int>(l), static_cast<int>(m));
      }
      REQUIRE(incoming(x) == expected);

      bool const exists = oracle::solve_arcs(x, true).has_value();
      REQUIRE(is_almost_classical(x) == exists);
      almost += exists;
    }
    // Make sure both outcomes were exercised.
    CHECK(almost > 100);
    CHECK(almost < 4900);
  }

  TEST_CASE("property: classical words are all even with top 1..n") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 2000; ++trial) {
      int const  n = 2 + static_cast<int>(oracle::below(rng, 7));
      auto const x = oracle::random_word(rng, n, 40, false);
      REQUIRE(is_almost_classical(x));
      REQUIRE(top_numbering(x) == iota_vec(n));
    }
  }

  TEST_CASE("property: even crossings leave position numbers unchanged") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 2000; ++trial) {
      int const  n   = 2 + static_cast<int>(oracle::below(rng, 5));
      auto const x   = oracle::random_word(rng, n, 20, true);
      auto const num = integer_numbering(x);
      for (std::size_t k = 0; k < x.size(); ++k) {
        auto const& c = num.crossings[k];
        if (!c.numbers || c.numbers->parity != Parity::even) {
          continue;
        }
        // Numbers right above crossing k, read from the prefix ending there.
        BraidWord const prefix(n, {x.begin(), x.begin() + static_cast<long>(k) + 1});
        auto const      above = top_numbering(prefix);
        REQUIRE(above[c.position() - 1] == c.numbers->lambda);
        REQUIRE(above[c.position()] == c.numbers->mu);
      }
    }
  }

  TEST_CASE("property: smoothing an even crossing keeps other parities") {
    std::mt19937_64 rng(8);
    int             checked = 0;
    while (checked < 10000) {
      int const  n = 2 + static_cast<int>(oracle::below(rng, 5));
      // Projections are almost classical; mix in raw words too.
      auto       x = oracle::random_word(rng, n, 16, true);
      if (checked % 2 == 0) {
        x = gauss_project(x).result;
      }
      auto const par = parity(x);
      for (std::size_t j = 0; j < par.size(); ++j) {
        if (par[j].second != Parity::even) {
          continue;
        }
        auto expected = parities(x);
        expected.erase(expected.begin() + static_cast<long>(j));
        REQUIRE(parities(smooth(x, par[j].first)) == expected);
      }
      ++checked;
    }
  }

  TEST_CASE("property: detour moves do not change persisting numbers") {
    std::mt19937_64 rng(12);
    std::map<MoveKind, int> seen;
    for (int trial = 0; trial < 20000; ++trial) {
      int const  n  = 2 + static_cast<int>(oracle::below(rng, 4));
      auto const x  = oracle::random_word(rng, n, 12, true);
      for (auto const& m : enumerate_moves(x)) {
        bool const detour = m.kind == MoveKind::V1 || m.kind == MoveKind::V3
                            || m.kind == MoveKind::V4 || m.kind == MoveKind::V5
                            || (m.kind == MoveKind::V2
                                && m.direction == Direction::backward);
        if (!detour) {
          continue;
        }
        ++seen[m.kind];
        REQUIRE(incoming(apply_move(x, m)) == incoming(x));
      }
    }
    for (auto k : {MoveKind::V1, MoveKind::V2, MoveKind::V3, MoveKind::V4, MoveKind::V5}) {
      CHECK(seen[k] > 10);
    }
  }
}
