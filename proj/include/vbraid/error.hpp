#ifndef VBRAID_ERROR_HPP_
#define VBRAID_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vbraid {

  // Base for every error raised by the library. The CLI maps all of these to
  // exit code 3.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)),
          _position(position) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  // A generator index outside [1, n-1].
  class IndexError : public Error {
   public:
    using Error::Error;
  };

  class StrandMismatch : public Error {
   public:
    using Error::Error;
  };

  class InapplicableMove : public Error {
   public:
    using Error::Error;
  };

  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // Raised by the Artin oracle when handed a word with virtual letters.
  class UnsupportedInput : public Error {
   public:
    using Error::Error;
  };

}  // namespace vbraid

#endif  // VBRAID_ERROR_HPP_
