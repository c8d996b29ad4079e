// Checks for the local parity lemmas around U2 and U3 moves, shared by the
// unit and acceptance suites. Each returns an empty string on success and a
// description of the violation otherwise.

#ifndef VBRAID_TESTS_LEMMAS_HPP_
#define VBRAID_TESTS_LEMMAS_HPP_

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "vbraid/moves.hpp"
#include "vbraid/numbering.hpp"

namespace vbraid::lemmas {

  inline std::string describe(BraidWord const& x, MoveInstance const& m) {
    return "word '" + format(x) + "' (n=" + std::to_string(x.strands())
           + "), move " + to_string(m);
  }

  // Parities of classical letters with word index outside [lo, hi).
  inline std::vector<Parity> parities_outside(BraidWord const& x,
                                              std::size_t      lo,
                                              std::size_t      hi) {
    std::vector<Parity> out;
    for (auto const& [k, p] : parity(x)) {
      if (k < lo || k >= hi) {
        out.push_back(p);
      }
    }
    return out;
  }

  // m is a U2 move. The pair (in whichever of x, y is longer) has equal
  // parities and every other crossing keeps its parity.
  inline std::string check_u2(BraidWord const& x, MoveInstance const& m) {
    auto const y     = apply_move(x, m);
    bool const grows = y.size() > x.size();
    auto const& big   = grows ? y : x;
    auto const& small = grows ? x : y;
    auto const  num   = integer_numbering(big);
    auto const& a     = num.crossings[m.site].numbers;
    auto const& b     = num.crossings[m.site + 1].numbers;
    if (!a || !b) {
      return "U2 pair is not classical: " + describe(x, m);
    }
    if (a->parity != b->parity) {
      return "U2 pair has mixed parity: " + describe(x, m);
    }
    if (a->parity == Parity::even && a->mu != a->lambda + 1) {
      return "inconsistent even crossing: " + describe(x, m);
    }
    if (parities_outside(big, m.site, m.site + 2)
        != parities_outside(small, 0, 0)) {
      return "U2 changed an off-move parity: " + describe(x, m);
    }
    return {};
  }

  // m is a U3 move. Among the three crossings the number of even ones is not
  // two; crossings between the same pair of strands keep their parity; all
  // other crossings keep theirs.
  inline std::string check_u3(BraidWord const& x, MoveInstance const& m) {
    auto const y  = apply_move(x, m);
    auto const nx = integer_numbering(x);
    auto const ny = integer_numbering(y);

    auto triple = [&](IntegerNumbering const& num) {
      std::vector<std::pair<std::pair<int, int>, Parity>> out;
      for (std::size_t k = m.site; k < m.site + 3; ++k) {
        auto const& c = num.crossings[k];
        out.push_back({std::minmax(c.left_in_strand, c.right_in_strand),
                       c.numbers->parity});
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    auto const tx = triple(nx), ty = triple(ny);
    auto const evens = std::count_if(tx.begin(), tx.end(), [](auto const& e) {
      return e.second == Parity::even;
    });
    if (evens == 2) {
      return "U3 triple has exactly two even crossings: " + describe(x, m);
    }
    if (tx != ty) {
      return "U3 changed the parity of a strand pair: " + describe(x, m);
    }
    if (parities_outside(x, m.site, m.site + 3)
        != parities_outside(y, m.site, m.site + 3)) {
      return "U3 changed an off-move parity: " + describe(x, m);
    }
    return {};
  }

  // A random word over n strands with a U3 left or right side planted at a
  // random site; returns the word and the forward/backward U3 instance there.
  inline std::pair<BraidWord, MoveInstance> planted_u3(std::mt19937_64& rng, int n) {
    auto const  base = oracle::random_word(rng, n, 12, true);
    std::size_t site = oracle::below(rng, base.size() + 1);
    int const   i    = 2 + static_cast<int>(oracle::below(rng, n - 2));
    int const   e    = oracle::below(rng, 2) == 0 ? 1 : -1;
    bool const  fwd  = oracle::below(rng, 2) == 0;
    int const   hi = fwd ? i : i - 1, mid = fwd ? i - 1 : i;
    std::vector<Letter> ls(base.begin(), base.end());
    ls.insert(ls.begin() + static_cast<long>(site),
              {Letter::sigma(hi, e), Letter::sigma(mid, e), Letter::sigma(hi, e)});
    return {BraidWord(n, std::move(ls)),
            MoveInstance{MoveKind::U3,
                         site,
                         fwd ? Direction::forward : Direction::backward,
                         std::nullopt}};
  }

  // A random word with a random U2 move (insertion or deletion when one exists).
  inline std::pair<BraidWord, MoveInstance> random_u2(std::mt19937_64& rng, int n) {
    auto const                x = oracle::random_word(rng, n, 14, true);
    std::vector<MoveInstance> u2;
    for (auto const& m : enumerate_moves(x)) {
      if (m.kind == MoveKind::U2) {
        u2.push_back(m);
      }
    }
    std::vector<MoveInstance> deletions;
    std::copy_if(u2.begin(), u2.end(), std::back_inserter(deletions), [](auto const& m) {
      return m.direction == Direction::forward;
    });
    auto const& pool = (!deletions.empty() && oracle::below(rng, 2) == 0) ? deletions : u2;
    return {x, pool[oracle::below(rng, pool.size())]};
  }

}  // namespace vbraid::lemmas

#endif  // VBRAID_TESTS_LEMMAS_HPP_
