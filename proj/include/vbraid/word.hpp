#ifndef VBRAID_WORD_HPP_
#define VBRAID_WORD_HPP_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vbraid {

  enum class LetterKind : unsigned char { classical, virtual_ };

  // One generator of the virtual braid group: sigma_i^{+1}, sigma_i^{-1} or
  // tau_i. Virtual letters always carry sign +1.
  struct Letter {
    LetterKind kind;
    int        index;
    int        sign;

    static constexpr Letter sigma(int i, int s = 1) noexcept {
      return {LetterKind::classical, i, s};
    }

    static constexpr Letter tau(int i) noexcept {
      return {LetterKind::virtual_, i, 1};
    }

    constexpr bool is_classical() const noexcept {
      return kind == LetterKind::classical;
    }

    constexpr bool is_virtual() const noexcept {
      return kind == LetterKind::virtual_;
    }

    // The letter l with l * this = 1.
    constexpr Letter inverse() const noexcept {
      return is_classical() ? sigma(index, -sign) : *this;
    }

    friend constexpr bool operator==(Letter const&, Letter const&) = default;
  };

  std::string to_string(Letter const& l);

  // A virtual braid word over a fixed number of strands. Letters are read
  // left to right and stacked bottom to top. The strand count is part of the
  // value, so words over different groups never compare equal.
  class BraidWord {
   public:
    explicit BraidWord(int strands);
    BraidWord(int strands, std::vector<Letter> letters);

    int strands() const noexcept {
      return _strands;
    }

    std::span<Letter const> letters() const noexcept {
      return _letters;
    }

    std::size_t size() const noexcept {
      return _letters.size();
    }

    bool empty() const noexcept {
      return _letters.empty();
    }

    Letter const& operator[](std::size_t i) const {
      return _letters[i];
    }

    auto begin() const noexcept {
      return _letters.cbegin();
    }

    auto end() const noexcept {
      return _letters.cend();
    }

    // True iff no letter is virtual.
    bool is_classical() const noexcept;
    std::size_t classical_count() const noexcept;

    friend bool operator==(BraidWord const&, BraidWord const&) = default;

   private:
    int                 _strands;
    std::vector<Letter> _letters;
  };

  std::ostream& operator<<(std::ostream&, BraidWord const&);

  // A bijection of {1, ..., n}. For the permutation of a braid word, image(p)
  // is the bottom position of the strand that ends at top position p.
  class Permutation {
   public:
    static Permutation identity(int n);
    explicit Permutation(std::vector<int> images);

    int degree() const noexcept {
      return static_cast<int>(_images.size());
    }

    int image(int p) const {
      return _images.at(static_cast<std::size_t>(p - 1));
    }

    std::span<int const> images() const noexcept {
      return _images;
    }

    bool is_identity() const noexcept;

    // The permutation of a word that reads this braid and then `next` above it.
    Permutation then(Permutation const& next) const;

    friend bool operator==(Permutation const&, Permutation const&) = default;

   private:
    std::vector<int> _images;
  };

  std::string to_string(Permutation const& p);

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  // Parses the ASCII word grammar: tokens sK / SK / tK separated by a run of
  // whitespace or a single '.'. Throws ParseError or IndexError.
  BraidWord parse(std::string_view text, int strands);

  // Canonical spelling, tokens separated by single spaces.
  std::string format(BraidWord const& w);

  BraidWord inverse(BraidWord const& w);

  // Throws StrandMismatch if the strand counts differ.
  BraidWord concat(BraidWord const& a, BraidWord const& b);

  // Deletes adjacent s_i^e s_i^-e and t_i t_i pairs until none remain.
  // Commutations are not applied.
  BraidWord free_reduce(BraidWord const& w);

  Permutation permutation(BraidWord const& w);

}  // namespace vbraid

#endif  // VBRAID_WORD_HPP_
