#include "vbraid/projection.hpp"

#include "vbraid/artin.hpp"
#include "vbraid/numbering.hpp"

namespace vbraid {

  ProjectionTrace gauss_project(BraidWord const& w) {
    ProjectionTrace trace{{}, w};
    while (true) {
      auto odd = odd_crossings(trace.result);
      if (odd.empty()) {
        return trace;
      }
      std::vector<Letter> next(trace.result.begin(), trace.result.end());
      for (auto k : odd) {
        next[k] = Letter::tau(next[k].index);
      }
      BraidWord projected(w.strands(), std::move(next));
      trace.rounds.push_back({std::move(trace.result), std::move(odd)});
      trace.result = std::move(projected);
    }
  }

  BraidWord classicalize(BraidWord const& w) {
    auto const numbering = integer_numbering(w);
    for (auto const& c : numbering.crossings) {
      if (c.numbers && c.numbers->parity == Parity::odd) {
        throw PreconditionError("'" + format(w)
                                + "' is not almost classical (letter "
                                + std::to_string(c.word_index) + " is odd)");
      }
    }
    for (int p = 1; p <= w.strands(); ++p) {
      if (numbering.top_numbers[p - 1] != p) {
        throw PreconditionError("top numbering of '" + format(w)
                                + "' is not 1.." + std::to_string(w.strands()));
      }
    }
    std::vector<Letter> out;
    for (auto const& c : numbering.crossings) {
      if (!c.numbers) {
        continue;
      }
      int const lambda = c.numbers->lambda;
      if (lambda < 1 || lambda > w.strands() - 1) {
        throw LambdaOutOfRange("crossing at letter "
                                   + std::to_string(c.word_index) + " of '"
                                   + format(w) + "' has left number "
                                   + std::to_string(lambda),
                               w);
      }
      out.push_back(Letter::sigma(lambda, c.letter.sign));
    }
    return BraidWord(w.strands(), std::move(out));
  }

  PipelineReport injectivity_pipeline(std::span<BraidWord const> chain) {
    if (chain.empty()) {
      throw PreconditionError("pipeline chain is empty");
    }
    int const n = chain.front().strands();
    for (std::size_t k = 0; k < chain.size(); ++k) {
      if (chain[k].strands() != n) {
        throw PipelineError(k,
                            "word has " + std::to_string(chain[k].strands())
                                + " strands, expected " + std::to_string(n));
      }
    }
    if (!chain.front().is_classical()) {
      throw PipelineError(0, "the first word of the chain must be classical");
    }

    PipelineReport report{
        n, {chain.begin(), chain.end()}, {}, {}, true, std::nullopt};
    report.projected_chain.reserve(chain.size());
    report.classical_chain.reserve(chain.size());
    for (std::size_t k = 0; k < chain.size(); ++k) {
      report.projected_chain.push_back(gauss_project(chain[k]).result);
      try {
        report.classical_chain.push_back(
            classicalize(report.projected_chain.back()));
      } catch (PreconditionError const& e) {
        throw PipelineError(k, e.what());
      }
    }
    for (std::size_t k = 1; k < chain.size(); ++k) {
      if (!classical_equal(report.classical_chain[k - 1],
                           report.classical_chain[k])) {
        report.equal         = false;
        report.first_failure = k;
        break;
      }
    }
    return report;
  }

}  // namespace vbraid
