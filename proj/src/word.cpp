#include "vbraid/word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>

#include "vbraid/error.hpp"

namespace vbraid {

  namespace {
    void check_index(Letter const& l, int strands) {
      if (l.index < 1 || l.index > strands - 1) {
        throw IndexError("generator " + to_string(l)
                         + " out of range for " + std::to_string(strands)
                         + " strands (index must be in [1, "
                         + std::to_string(strands - 1) + "])");
      }
    }

    bool is_space(char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    }

    bool is_digit(char c) {
      return c >= '0' && c <= '9';
    }
  }  // namespace

  std::string to_string(Letter const& l) {
    char const head = l.is_virtual() ? 't' : (l.sign > 0 ? 's' : 'S');
    return head + std::to_string(l.index);
  }

  ////////////////////////////////////////////////////////////////////////
  // BraidWord
  ////////////////////////////////////////////////////////////////////////

  BraidWord::BraidWord(int strands) : BraidWord(strands, {}) {}

  BraidWord::BraidWord(int strands, std::vector<Letter> letters)
      : _strands(strands), _letters(std::move(letters)) {
    if (strands < 1) {
      throw PreconditionError("strand count must be at least 1, found "
                              + std::to_string(strands));
    }
    for (auto const& l : _letters) {
      check_index(l, strands);
      if (l.sign != 1 && l.sign != -1) {
        throw PreconditionError("letter sign must be +1 or -1");
      }
      if (l.is_virtual() && l.sign != 1) {
        throw PreconditionError("virtual letters carry no sign");
      }
    }
  }

  bool BraidWord::is_classical() const noexcept {
    return std::none_of(_letters.begin(), _letters.end(), [](Letter const& l) {
      return l.is_virtual();
    });
  }

  std::size_t BraidWord::classical_count() const noexcept {
    return std::count_if(_letters.begin(),
                         _letters.end(),
                         [](Letter const& l) { return l.is_classical(); });
  }

  std::ostream& operator<<(std::ostream& os, BraidWord const& w) {
    return os << '[' << format(w) << "] (n=" << w.strands() << ')';
  }

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
  }

  Permutation::Permutation(std::vector<int> images) : _images(std::move(images)) {
    std::vector<bool> seen(_images.size(), false);
    for (int x : _images) {
      if (x < 1 || x > degree() || seen[x - 1]) {
        throw PreconditionError("not a permutation of 1.."
                                + std::to_string(degree()));
      }
      seen[x - 1] = true;
    }
  }

  bool Permutation::is_identity() const noexcept {
    for (std::size_t p = 0; p < _images.size(); ++p) {
      if (_images[p] != static_cast<int>(p) + 1) {
        return false;
      }
    }
    return true;
  }

  Permutation Permutation::then(Permutation const& next) const {
    if (next.degree() != degree()) {
      throw StrandMismatch("cannot compose permutations of different degree");
    }
    std::vector<int> out(_images.size());
    for (std::size_t p = 0; p < out.size(); ++p) {
      out[p] = image(next._images[p]);
    }
    return Permutation(std::move(out));
  }

  std::string to_string(Permutation const& p) {
    std::string out;
    for (int x : p.images()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += std::to_string(x);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // parse / format
  ////////////////////////////////////////////////////////////////////////

  BraidWord parse(std::string_view text, int strands) {
    if (strands < 1) {
      throw PreconditionError("strand count must be at least 1");
    }
    std::vector<Letter> letters;
    std::size_t         pos = 0;
    auto const          n   = text.size();

    while (pos < n && is_space(text[pos])) {
      ++pos;
    }
    if (pos == n) {
      return BraidWord(strands);
    }

    while (true) {
      std::size_t const start = pos;
      char const        head  = text[pos];
      if (head != 's' && head != 'S' && head != 't') {
        throw ParseError(std::string("expected one of 's', 'S', 't', found '")
                             + head + "'",
                         pos);
      }
      ++pos;
      if (pos == n || !is_digit(text[pos])) {
        throw ParseError("expected generator index after '"
                             + std::string(1, head) + "'",
                         pos);
      }
      long index = 0;
      while (pos < n && is_digit(text[pos])) {
        // Saturate; anything this large is out of range anyway.
        index = std::min<long>(index * 10 + (text[pos] - '0'), 1L << 30);
        ++pos;
      }
      std::string const token(text.substr(start, pos - start));
      if (index < 1 || index > strands - 1) {
        throw IndexError("token '" + token + "' at position "
                         + std::to_string(start) + " is out of range for "
                         + std::to_string(strands) + " strands");
      }
      int const i = static_cast<int>(index);
      letters.push_back(head == 't' ? Letter::tau(i)
                                    : Letter::sigma(i, head == 's' ? 1 : -1));

      if (pos == n) {
        break;
      }
      if (text[pos] == '.') {
        ++pos;
      } else if (is_space(text[pos])) {
        while (pos < n && is_space(text[pos])) {
          ++pos;
        }
        if (pos == n) {
          break;
        }
      } else {
        throw ParseError(std::string("expected separator, found '") + text[pos]
                             + "'",
                         pos);
      }
      if (pos == n) {
        throw ParseError("expected token after '.'", pos);
      }
    }
    return BraidWord(strands, std::move(letters));
  }

  std::string format(BraidWord const& w) {
    std::string out;
    for (auto const& l : w) {
      if (!out.empty()) {
        out += ' ';
      }
      out += to_string(l);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Algebra
  ////////////////////////////////////////////////////////////////////////

  BraidWord inverse(BraidWord const& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      out.push_back(it->inverse());
    }
    return BraidWord(w.strands(), std::move(out));
  }

  BraidWord concat(BraidWord const& a, BraidWord const& b) {
    if (a.strands() != b.strands()) {
      throw StrandMismatch("cannot concatenate words on "
                           + std::to_string(a.strands()) + " and "
                           + std::to_string(b.strands()) + " strands");
    }
    std::vector<Letter> out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return BraidWord(a.strands(), std::move(out));
  }

  BraidWord free_reduce(BraidWord const& w) {
    // Single left-to-right pass with a stack is the unique normal form of the
    // length-reducing system {x x^-1 -> 1}.
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (auto const& l : w) {
      if (!stack.empty() && stack.back() == l.inverse()) {
        stack.pop_back();
      } else {
        stack.push_back(l);
      }
    }
    return BraidWord(w.strands(), std::move(stack));
  }

  Permutation permutation(BraidWord const& w) {
    // at[p] = bottom position of the strand currently at position p.
    std::vector<int> at(static_cast<std::size_t>(w.strands()));
    std::iota(at.begin(), at.end(), 1);
    for (auto const& l : w) {
      std::swap(at[l.index - 1], at[l.index]);
    }
    return Permutation(std::move(at));
  }

}  // namespace vbraid
