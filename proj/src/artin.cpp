#include "vbraid/artin.hpp"

#include <deque>

#include "vbraid/error.hpp"

namespace vbraid {

  namespace {
    void append_reduced(std::vector<FreeLetter>& out, FreeLetter x) {
      if (!out.empty() && out.back() == x.inverse()) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }

    void require_classical(BraidWord const& w) {
      if (!w.is_classical()) {
        throw UnsupportedInput("the Artin action is defined on classical words "
                               "only, found virtual letters in '"
                               + format(w) + "'");
      }
    }
  }  // namespace

  FreeWord::FreeWord(std::vector<FreeLetter> letters) {
    _letters.reserve(letters.size());
    for (auto x : letters) {
      append_reduced(_letters, x);
    }
  }

  FreeWord FreeWord::inverse() const {
    FreeWord out;
    out._letters.reserve(_letters.size());
    for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
      out._letters.push_back(it->inverse());
    }
    return out;
  }

  FreeWord free_multiply(FreeWord const& a, FreeWord const& b) {
    FreeWord out;
    out._letters.reserve(a.size() + b.size());
    out._letters = a._letters;
    for (auto x : b._letters) {
      append_reduced(out._letters, x);
    }
    return out;
  }

  std::string to_string(FreeWord const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& x : w.letters()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += 'x' + std::to_string(x.generator);
      if (x.sign < 0) {
        out += "^-1";
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // EndoImages
  ////////////////////////////////////////////////////////////////////////

  EndoImages EndoImages::identity(int n) {
    std::vector<FreeWord> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int g = 1; g <= n; ++g) {
      images.push_back(FreeWord::generator(g));
    }
    return EndoImages(std::move(images));
  }

  EndoImages::EndoImages(std::vector<FreeWord> images)
      : _images(std::move(images)) {}

  std::size_t EndoImages::total_length() const noexcept {
    std::size_t total = 0;
    for (auto const& w : _images) {
      total += w.size();
    }
    return total;
  }

  FreeWord EndoImages::apply(FreeWord const& w) const {
    FreeWord out;
    for (auto const& x : w.letters()) {
      FreeWord const& img = image(x.generator);
      out = free_multiply(out, x.sign > 0 ? img : img.inverse());
    }
    return out;
  }

  EndoImages EndoImages::compose(EndoImages const& inner) const {
    if (inner.rank() != rank()) {
      throw StrandMismatch("cannot compose endomorphisms of different rank");
    }
    std::vector<FreeWord> out;
    out.reserve(_images.size());
    for (auto const& w : inner._images) {
      out.push_back(apply(w));
    }
    return EndoImages(std::move(out));
  }

  void EndoImages::right_multiply(Letter const& l) {
    auto const i = static_cast<std::size_t>(l.index - 1);
    FreeWord&  a = _images.at(i);
    FreeWord&  b = _images.at(i + 1);
    if (l.sign > 0) {
      FreeWord next = free_multiply(free_multiply(a, b), a.inverse());
      b             = std::move(a);
      a             = std::move(next);
    } else {
      FreeWord next = free_multiply(free_multiply(b.inverse(), a), b);
      a             = std::move(b);
      b             = std::move(next);
    }
  }

  EndoImages letter_action(Letter const& l, int strands) {
    if (l.is_virtual()) {
      throw UnsupportedInput("virtual letter " + to_string(l)
                             + " has no Artin action");
    }
    auto out = EndoImages::identity(strands);
    out.right_multiply(l);
    return out;
  }

  EndoImages artin_action(BraidWord const& w) {
    require_classical(w);
    auto out = EndoImages::identity(w.strands());
    for (auto const& l : w) {
      out.right_multiply(l);
    }
    return out;
  }

  bool classical_equal(BraidWord const& a, BraidWord const& b) {
    require_classical(a);
    require_classical(b);
    if (a.strands() != b.strands()) {
      throw StrandMismatch("cannot compare words on "
                           + std::to_string(a.strands()) + " and "
                           + std::to_string(b.strands()) + " strands");
    }
    if (permutation(a) != permutation(b)) {
      return false;
    }
    // a = b iff a b^-1 acts trivially, and triviality is invariant under
    // conjugation, so strip the free and cyclic cancellations first. This
    // keeps intermediate images short when a and b share a long prefix or
    // suffix.
    auto const            u = free_reduce(concat(a, inverse(b)));
    std::deque<Letter> cyc(u.begin(), u.end());
    while (cyc.size() >= 2 && cyc.front() == cyc.back().inverse()) {
      cyc.pop_front();
      cyc.pop_back();
    }
    auto action = EndoImages::identity(a.strands());
    for (auto const& l : cyc) {
      action.right_multiply(l);
    }
    return action == EndoImages::identity(a.strands());
  }

}  // namespace vbraid
