#ifndef VBRAID_ARTIN_HPP_
#define VBRAID_ARTIN_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "vbraid/word.hpp"

// Artin's action of the classical braid group on the free group F_n. It is
// faithful, so two classical words are equal in B_n iff their actions agree.
// This is the equality oracle that certifies pipeline outputs.

namespace vbraid {

  struct FreeLetter {
    int generator;  // in [1, n]
    int sign;       // +1 or -1

    constexpr FreeLetter inverse() const noexcept {
      return {generator, -sign};
    }

    friend constexpr bool operator==(FreeLetter const&,
                                     FreeLetter const&) = default;
  };

  // A freely reduced word in x_1, ..., x_n.
  class FreeWord {
   public:
    FreeWord() = default;
    // Reduces its input.
    explicit FreeWord(std::vector<FreeLetter> letters);

    static FreeWord generator(int g) {
      return FreeWord(std::vector<FreeLetter>{{g, 1}});
    }

    std::span<FreeLetter const> letters() const noexcept {
      return _letters;
    }

    std::size_t size() const noexcept {
      return _letters.size();
    }

    bool empty() const noexcept {
      return _letters.empty();
    }

    FreeWord inverse() const;

    friend bool operator==(FreeWord const&, FreeWord const&) = default;

   private:
    friend FreeWord free_multiply(FreeWord const&, FreeWord const&);
    std::vector<FreeLetter> _letters;
  };

  FreeWord free_multiply(FreeWord const& a, FreeWord const& b);

  // "x1 x2 x1^-1"; the empty word prints as "1".
  std::string to_string(FreeWord const& w);

  // Images of the free generators under an endomorphism of F_n.
  class EndoImages {
   public:
    static EndoImages identity(int n);
    explicit EndoImages(std::vector<FreeWord> images);

    int rank() const noexcept {
      return static_cast<int>(_images.size());
    }

    FreeWord const& image(int g) const {
      return _images.at(static_cast<std::size_t>(g - 1));
    }

    std::span<FreeWord const> images() const noexcept {
      return _images;
    }

    std::size_t total_length() const noexcept;

    // The image of an arbitrary free word under this endomorphism.
    FreeWord apply(FreeWord const& w) const;

    // (this o inner): x_g -> this(inner(x_g)).
    EndoImages compose(EndoImages const& inner) const;

    // this o sigma_i^sign, computed in place without materialising the
    // letter's action.
    void right_multiply(Letter const& l);

    friend bool operator==(EndoImages const&, EndoImages const&) = default;

   private:
    std::vector<FreeWord> _images;
  };

  // The action of a single classical letter:
  //   s_i   : x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i
  //   s_i^-1: x_i -> x_{i+1},            x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
  EndoImages letter_action(Letter const& l, int strands);

  // The action of a word, a homomorphism: artin_action(a b) equals
  // artin_action(a).compose(artin_action(b)). Throws UnsupportedInput on
  // virtual letters.
  EndoImages artin_action(BraidWord const& w);

  // Equality in B_n. Throws UnsupportedInput on virtual letters and
  // StrandMismatch on differing strand counts.
  bool classical_equal(BraidWord const& a, BraidWord const& b);

}  // namespace vbraid

#endif  // VBRAID_ARTIN_HPP_
