#ifndef VBRAID_NUMBERING_HPP_
#define VBRAID_NUMBERING_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "vbraid/word.hpp"

namespace vbraid {

  enum class Parity : unsigned char { even, odd };

  std::string_view to_string(Parity p) noexcept;

  // Incoming arc numbers at a classical crossing: `lambda` on the left,
  // `mu` on the right. The crossing is even iff mu == lambda + 1.
  struct ClassicalIncidence {
    int    lambda;
    int    mu;
    Parity parity;

    friend bool operator==(ClassicalIncidence const&,
                           ClassicalIncidence const&) = default;
  };

  // One letter of the word seen as a crossing of the diagram. Virtual
  // crossings have no `numbers`.
  struct CrossingRecord {
    std::size_t                       word_index;
    Letter                            letter;
    int                               left_in_strand;
    int                               right_in_strand;
    std::optional<ClassicalIncidence> numbers;

    int position() const noexcept {
      return letter.index;
    }

    friend bool operator==(CrossingRecord const&,
                           CrossingRecord const&) = default;
  };

  struct IntegerNumbering {
    int                         strands;
    std::vector<CrossingRecord> crossings;
    // Indexed by top position, left to right.
    std::vector<int> top_strands;
    std::vector<int> top_numbers;
  };

  // Bottom-to-top sweep. Strand i starts at position i with number i. A
  // virtual letter t_i swaps the (strand, number) pairs at positions i and
  // i + 1. A classical letter s_i^{+-1} with incoming numbers (lambda, mu)
  // sends the right strand out on the left numbered mu - 1 and the left strand
  // out on the right numbered lambda + 1. The over/under sign plays no role.
  IntegerNumbering integer_numbering(BraidWord const& w);

  // One entry per classical letter, in word order.
  std::vector<std::pair<std::size_t, Parity>> parity(BraidWord const& w);

  // Word indices of the odd classical letters.
  std::vector<std::size_t> odd_crossings(BraidWord const& w);

  // The bottom anchors determine the numbering uniquely, so an Alexander
  // numbering exists iff the propagated one is even everywhere.
  bool is_almost_classical(BraidWord const& w);

  std::vector<int> top_numbering(BraidWord const& w);

  // Oriented smoothing of the classical letter at index k: the two strands
  // stay at their incoming positions, so the letter is deleted. Throws
  // PreconditionError if k is out of range or the letter is virtual.
  BraidWord smooth(BraidWord const& w, std::size_t k);

}  // namespace vbraid

#endif  // VBRAID_NUMBERING_HPP_
