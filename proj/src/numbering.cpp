#include "vbraid/numbering.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "vbraid/error.hpp"

namespace vbraid {

  std::string_view to_string(Parity p) noexcept {
    return p == Parity::even ? "even" : "odd";
  }

  IntegerNumbering integer_numbering(BraidWord const& w) {
    auto const       n = static_cast<std::size_t>(w.strands());
    std::vector<int> strand(n), number(n);
    std::iota(strand.begin(), strand.end(), 1);
    std::iota(number.begin(), number.end(), 1);

    IntegerNumbering out{w.strands(), {}, {}, {}};
    out.crossings.reserve(w.size());

    for (std::size_t k = 0; k < w.size(); ++k) {
      Letter const&     l     = w[k];
      std::size_t const left  = static_cast<std::size_t>(l.index - 1);
      std::size_t const right = left + 1;
      CrossingRecord    rec{k, l, strand[left], strand[right], std::nullopt};

      if (l.is_classical()) {
        int const lambda = number[left];
        int const mu     = number[right];
        rec.numbers      = ClassicalIncidence{
            lambda, mu, mu == lambda + 1 ? Parity::even : Parity::odd};
        number[left]  = mu - 1;
        number[right] = lambda + 1;
      } else {
        std::swap(number[left], number[right]);
      }
      std::swap(strand[left], strand[right]);
      out.crossings.push_back(rec);
    }
    out.top_strands = std::move(strand);
    out.top_numbers = std::move(number);
    return out;
  }

  std::vector<std::pair<std::size_t, Parity>> parity(BraidWord const& w) {
    std::vector<std::pair<std::size_t, Parity>> out;
    for (auto const& c : integer_numbering(w).crossings) {
      if (c.numbers) {
        out.emplace_back(c.word_index, c.numbers->parity);
      }
    }
    return out;
  }

  std::vector<std::size_t> odd_crossings(BraidWord const& w) {
    std::vector<std::size_t> out;
    for (auto const& [k, p] : parity(w)) {
      if (p == Parity::odd) {
        out.push_back(k);
      }
    }
    return out;
  }

  bool is_almost_classical(BraidWord const& w) {
    return odd_crossings(w).empty();
  }

  std::vector<int> top_numbering(BraidWord const& w) {
    return integer_numbering(w).top_numbers;
  }

  BraidWord smooth(BraidWord const& w, std::size_t k) {
    if (k >= w.size()) {
      throw PreconditionError("cannot smooth letter " + std::to_string(k)
                              + ": word has " + std::to_string(w.size())
                              + " letters");
    }
    if (w[k].is_virtual()) {
      throw PreconditionError("cannot smooth letter " + std::to_string(k)
                              + ": it is virtual");
    }
    std::vector<Letter> out(w.begin(), w.end());
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(k));
    return BraidWord(w.strands(), std::move(out));
  }

}  // namespace vbraid
