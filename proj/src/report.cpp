#include "vbraid/report.hpp"

#include <istream>
#include <string>

#include "vbraid/error.hpp"

namespace vbraid::report {

  json to_json(BraidWord const& w) {
    return format(w);
  }

  json to_json(IntegerNumbering const& numbering) {
    json crossings = json::array();
    for (auto const& c : numbering.crossings) {
      json entry = {{"index", c.word_index},
                    {"kind", c.letter.is_classical() ? "classical" : "virtual"},
                    {"position", c.position()},
                    {"left_strand", c.left_in_strand},
                    {"right_strand", c.right_in_strand}};
      if (c.numbers) {
        entry["sign"]   = c.letter.sign;
        entry["lambda"] = c.numbers->lambda;
        entry["mu"]     = c.numbers->mu;
        entry["parity"] = to_string(c.numbers->parity);
      } else {
        entry["sign"]   = nullptr;
        entry["lambda"] = nullptr;
        entry["mu"]     = nullptr;
        entry["parity"] = nullptr;
      }
      crossings.push_back(std::move(entry));
    }
    return {{"strands", numbering.strands},
            {"crossings", std::move(crossings)},
            {"top_strands", numbering.top_strands},
            {"top_numbers", numbering.top_numbers}};
  }

  json to_json(ProjectionTrace const& trace) {
    json rounds = json::array();
    for (auto const& r : trace.rounds) {
      rounds.push_back(
          {{"input", to_json(r.input)}, {"virtualized", r.virtualized}});
    }
    return {{"strands", trace.result.strands()},
            {"rounds", std::move(rounds)},
            {"result", to_json(trace.result)}};
  }

  namespace {
    json words(std::vector<BraidWord> const& ws) {
      json out = json::array();
      for (auto const& w : ws) {
        out.push_back(to_json(w));
      }
      return out;
    }
  }  // namespace

  json to_json(PipelineReport const& report) {
    return {{"strands", report.strands},
            {"chain", words(report.input_chain)},
            {"projected", words(report.projected_chain)},
            {"classical", words(report.classical_chain)},
            {"equal", report.equal},
            {"first_failure",
             report.first_failure ? json(*report.first_failure) : json()}};
  }

  json to_json(EndoImages const& images) {
    json out = json::array();
    for (auto const& img : images.images()) {
      json word = json::array();
      for (auto const& x : img.letters()) {
        word.push_back({{"generator", x.generator}, {"sign", x.sign}});
      }
      out.push_back(std::move(word));
    }
    return {{"strands", images.rank()}, {"images", std::move(out)}};
  }

  json to_json(MoveInstance const& m) {
    json out = {{"kind", to_string(m.kind)},
                {"site", m.site},
                {"direction", to_string(m.direction)}};
    if (m.payload) {
      out["payload"] = {{"index", m.payload->index}, {"sign", m.payload->sign}};
    }
    return out;
  }

  json walk_entry(std::size_t step, MoveInstance const* move, BraidWord const& w) {
    json out = {{"step", step}};
    if (move != nullptr) {
      out.update(to_json(*move));
    } else {
      out["kind"]      = nullptr;
      out["site"]      = nullptr;
      out["direction"] = nullptr;
    }
    out["word"] = to_json(w);
    return out;
  }

  MoveInstance move_from_json(json const& j) {
    try {
      MoveInstance m{move_kind_from_string(j.at("kind").get<std::string>()),
                     j.at("site").get<std::size_t>(),
                     direction_from_string(j.at("direction").get<std::string>()),
                     std::nullopt};
      if (j.contains("payload") && !j["payload"].is_null()) {
        m.payload = PairPayload{j["payload"].at("index").get<int>(),
                                j["payload"].at("sign").get<int>()};
      }
      return m;
    } catch (json::exception const& e) {
      throw Error(std::string("malformed move: ") + e.what());
    }
  }

  std::vector<BraidWord> read_chain(std::istream& in, int strands) {
    std::vector<BraidWord> out;
    std::string            line;
    std::size_t            lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) {
        continue;
      }
      json j;
      try {
        j = json::parse(line);
      } catch (json::parse_error const& e) {
        throw ParseError("invalid JSON on line " + std::to_string(lineno)
                             + " of chain file",
                         e.byte);
      }
      if (j.is_string()) {
        out.push_back(parse(j.get<std::string>(), strands));
      } else if (j.is_object() && j.contains("word")
                 && j["word"].is_string()) {
        out.push_back(parse(j["word"].get<std::string>(), strands));
      }
    }
    return out;
  }

}  // namespace vbraid::report
