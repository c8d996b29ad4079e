#include <doctest.h>

#include "helpers.hpp"
#include "lemmas.hpp"
#include "oracles.hpp"
#include "vbraid/artin.hpp"
#include "vbraid/moves.hpp"
#include "vbraid/numbering.hpp"
#include "vbraid/projection.hpp"

using namespace vbraid;

TEST_SUITE("projection") {
  TEST_CASE("gauss_project examples") {
    auto const classical = gauss_project(w(3, "s1 S2"));
    CHECK(classical.rounds.empty());
    CHECK(classical.result == w(3, "s1 S2"));

    auto const fig9 = gauss_project(w(2, "t1 s1 t1 s1"));
    REQUIRE(fig9.rounds.size() == 1);
    CHECK(fig9.rounds[0].virtualized == std::vector<std::size_t>{1, 3});
    CHECK(fig9.result == w(2, "t1 t1 t1 t1"));

    auto const trivial = gauss_project(w(3, "t1 s2 S2 t1"));
    CHECK(trivial.result == w(3, "t1 t2 t2 t1"));
    CHECK(trivial.result.classical_count() == 0);
  }

  TEST_CASE("projection may need several rounds") {
    // Find a word whose first round creates new odd crossings.
    std::mt19937_64 rng(99);
    bool            found = false;
    for (int trial = 0; trial < 20000 && !found; ++trial) {
      auto const x = oracle::random_word(rng, 4, 12, true);
      auto const t = gauss_project(x);
      if (t.rounds.size() >= 2) {
        found = true;
        CHECK(is_almost_classical(t.result));
        CHECK(t.rounds[1].input.classical_count() < x.classical_count());
      }
    }
    CHECK(found);
  }

  TEST_CASE("classicalize") {
    CHECK(classicalize(w(3, "t1 t2 t2 t1")).empty());
    CHECK(classicalize(w(3, "s2 S1")) == w(3, "s2 S1"));
    CHECK_THROWS_AS(classicalize(w(2, "t1")), PreconditionError);
    CHECK_THROWS_AS(classicalize(w(2, "t1 s1 t1 s1")), PreconditionError);
    // t2 t1 s2 t1 t2 = s1 by V4 and V2.
    auto const x = w(3, "t2 t1 s2 t1 t2");
    REQUIRE(is_almost_classical(x));
    REQUIRE(top_numbering(x) == std::vector<int>{1, 2, 3});
    CHECK(classicalize(x) == w(3, "s1"));
  }

  TEST_CASE("injectivity_pipeline examples") {
    std::vector<BraidWord> single{w(3, "s1 s2 S1")};
    auto const             r1 = injectivity_pipeline(single);
    CHECK(r1.classical_chain == single);
    CHECK(r1.equal);
    CHECK_FALSE(r1.first_failure);

    std::vector<BraidWord> chain{w(3, "s2 S2"), w(3, "t1 s2 S2 t1"), w(3, "t1 t1")};
    auto const             r2 = injectivity_pipeline(chain);
    CHECK(r2.equal);
    CHECK(r2.classical_chain[0] == w(3, "s2 S2"));
    CHECK(r2.classical_chain[1].empty());
    CHECK(r2.classical_chain[2].empty());
    CHECK(r2.projected_chain[1] == w(3, "t1 t2 t2 t1"));
  }

  TEST_CASE("injectivity_pipeline reports inequality and errors") {
    std::vector<BraidWord> unrelated{w(3, "s1 s2"), w(3, "s2 s1")};
    auto const             r = injectivity_pipeline(unrelated);
    CHECK_FALSE(r.equal);
    CHECK(r.first_failure == 1);

    CHECK_THROWS_AS(injectivity_pipeline(std::vector<BraidWord>{}), PreconditionError);
    CHECK_THROWS_AS(injectivity_pipeline(std::vector<BraidWord>{w(2, "t1")}),
                    PipelineError);
    try {
      injectivity_pipeline(std::vector<BraidWord>{w(2, "s1"), w(2, "t1")});
      FAIL("expected PipelineError");
    } catch (PipelineError const& e) {
      CHECK(e.index() == 1);
    }
    CHECK_THROWS_AS(
        injectivity_pipeline(std::vector<BraidWord>{w(2, "s1"), w(3, "s1")}),
        PipelineError);
  }

  TEST_CASE("property: idempotent, identity on classical, permutation, termination") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 5000; ++trial) {
      int const  n = 2 + static_cast<int>(oracle::below(rng, 5));
      auto const x = oracle::random_word(rng, n, 24, true);
      auto const t = gauss_project(x);
      REQUIRE(is_almost_classical(t.result));
      REQUIRE(gauss_project(t.result).result == t.result);
      REQUIRE(permutation(t.result) == permutation(x));
      REQUIRE(t.rounds.size() <= x.classical_count());
      for (auto const& r : t.rounds) {
        REQUIRE_FALSE(r.virtualized.empty());
      }
      auto const c = oracle::random_word(rng, n, 24, false);
      REQUIRE(gauss_project(c).result == c);
      REQUIRE(gauss_project(c).rounds.empty());
    }
  }

  TEST_CASE("property: every move preserves top numbering") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 3000; ++trial) {
      int const  n   = 2 + static_cast<int>(oracle::below(rng, 4));
      auto const x   = oracle::random_word(rng, n, 10, true);
      auto const top = top_numbering(x);
      for (auto const& m : enumerate_moves(x)) {
        REQUIRE(top_numbering(apply_move(x, m)) == top);
      }
    }
  }

  TEST_CASE("property: projection commutes with single moves up to B_n") {
    // Start from walks off classical words so that projections have top
    // numbering 1..n, then take one more move.
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 2000; ++trial) {
      int const  n    = 2 + static_cast<int>(oracle::below(rng, 4));
      auto const c    = oracle::random_word(rng, n, 8, false);
      auto const walk = random_walk(c, 1 + oracle::below(rng, 15), rng());
      auto const x    = walk.back().word;
      auto const ms   = enumerate_moves(x);
      auto const y    = apply_move(x, ms[oracle::below(rng, ms.size())]);
      auto const px = gauss_project(x).result, py = gauss_project(y).result;
      REQUIRE(top_numbering(px) == top_numbering(py));
      REQUIRE(classical_equal(classicalize(px), classicalize(py)));
      REQUIRE(classical_equal(classicalize(py), c));
    }
  }

  TEST_CASE("main theorem on short walks") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 300; ++trial) {
      int const              n = 2 + static_cast<int>(oracle::below(rng, 4));
      auto const             c = oracle::random_word(rng, n, 12, false);
      std::vector<BraidWord> chain{c};
      for (auto const& s : random_walk(c, 20, rng())) {
        chain.push_back(s.word);
      }
      auto const r = injectivity_pipeline(chain);
      REQUIRE(r.equal);
      REQUIRE(classical_equal(r.classical_chain.back(), c));
    }
  }
}


TEST_CASE("parity lemmas around U2 and U3" * doctest::test_suite("projection")) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 2000; ++trial) {
    int const n = 3 + static_cast<int>(oracle::below(rng, 4));
    {
      auto const [x, m] = lemmas::random_u2(rng, n);
      REQUIRE(lemmas::check_u2(x, m) == "");
    }
    {
      auto const [x, m] = lemmas::planted_u3(rng, n);
      REQUIRE(is_applicable(x, m));
      REQUIRE(lemmas::check_u3(x, m) == "");
    }
  }
}
