#ifndef VBRAID_REPORT_HPP_
#define VBRAID_REPORT_HPP_

#include <iosfwd>
#include <vector>

#include <nlohmann/json.hpp>

#include "vbraid/artin.hpp"
#include "vbraid/moves.hpp"
#include "vbraid/numbering.hpp"
#include "vbraid/projection.hpp"
#include "vbraid/word.hpp"

// JSON encodings of the library's results. Words are always encoded in the
// ASCII token grammar; strand counts travel alongside.

namespace vbraid::report {

  using json = nlohmann::json;

  json to_json(BraidWord const& w);
  json to_json(IntegerNumbering const& numbering);
  json to_json(ProjectionTrace const& trace);
  json to_json(PipelineReport const& report);
  json to_json(EndoImages const& images);
  json to_json(MoveInstance const& m);

  // One line of a walk log. Step 0 records the starting word with null move
  // fields so that a log doubles as a complete chain file.
  json walk_entry(std::size_t step, MoveInstance const* move, BraidWord const& w);

  MoveInstance move_from_json(json const& j);

  // Reads a chain file: JSON lines, each either a string holding a word or an
  // object with a "word" member (walk log lines). Blank lines and objects
  // without "word" are skipped. Throws ParseError with the 1-based line
  // number on malformed JSON.
  std::vector<BraidWord> read_chain(std::istream& in, int strands);

}  // namespace vbraid::report

#endif  // VBRAID_REPORT_HPP_
