#ifndef VBRAID_PROJECTION_HPP_
#define VBRAID_PROJECTION_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vbraid/error.hpp"
#include "vbraid/word.hpp"

namespace vbraid {

  // One pass of the Gaussian projection: the word it started from and the
  // letters it turned virtual.
  struct ProjectionRound {
    BraidWord                input;
    std::vector<std::size_t> virtualized;
  };

  struct ProjectionTrace {
    std::vector<ProjectionRound> rounds;
    BraidWord                    result;
  };

  // Repeatedly replaces every odd s_i^{+-1} by t_i until no odd crossing is
  // left. Only passes that change the word are recorded, so a word that is
  // already almost classical has no rounds.
  ProjectionTrace gauss_project(BraidWord const& w);

  // Reads the classical braid off an almost classical word whose top numbers
  // are 1..n: each classical crossing with incoming left number lambda and
  // sign e becomes s_lambda^e, and virtual letters are dropped.
  //
  // Throws PreconditionError if w is not almost classical or its top
  // numbering is not 1..n, and LambdaOutOfRange if some lambda falls outside
  // [1, n - 1].
  BraidWord classicalize(BraidWord const& w);

  class LambdaOutOfRange : public PreconditionError {
   public:
    LambdaOutOfRange(std::string const& what, BraidWord word)
        : PreconditionError(what), _word(std::move(word)) {}

    BraidWord const& word() const noexcept {
      return _word;
    }

   private:
    BraidWord _word;
  };

  struct PipelineReport {
    int                        strands;
    std::vector<BraidWord>     input_chain;
    std::vector<BraidWord>     projected_chain;
    std::vector<BraidWord>     classical_chain;
    bool                       equal;
    // Smallest k >= 1 with classical_chain[k] != classical_chain[k - 1] in B_n.
    std::optional<std::size_t> first_failure;
  };

  // Raised when a chain element fails the classicalize preconditions.
  class PipelineError : public Error {
   public:
    PipelineError(std::size_t index, std::string const& what)
        : Error("chain element " + std::to_string(index) + ": " + what),
          _index(index) {}

    std::size_t index() const noexcept {
      return _index;
    }

   private:
    std::size_t _index;
  };

  // Projects every word of a chain of virtual braid words starting at a
  // classical word, classicalizes the projections and certifies that
  // consecutive classical words are equal in B_n.
  PipelineReport injectivity_pipeline(std::span<BraidWord const> chain);

}  // namespace vbraid

#endif  // VBRAID_PROJECTION_HPP_
