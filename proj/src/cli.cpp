#include "vbraid/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "vbraid/artin.hpp"
#include "vbraid/error.hpp"
#include "vbraid/moves.hpp"
#include "vbraid/numbering.hpp"
#include "vbraid/projection.hpp"
#include "vbraid/render.hpp"
#include "vbraid/report.hpp"
#include "vbraid/word.hpp"

namespace vbraid::cli {

  namespace {
    using report::json;

    struct Invocation {
      int                      strands = 0;
      bool                     as_json = false;
      bool                     trace   = false;
      bool                     numbers = false;
      std::vector<std::string> words;
      std::string              file;
      std::string              output;
      std::uint64_t            seed   = 0;
      std::size_t              steps  = 30;
      std::size_t              trials = 1;
      double                   insertion_weight = WalkPolicy{}.insertion;
      double                   pattern_weight   = WalkPolicy{}.pattern;
      std::size_t              letter = 0;
      std::string              kind;
      std::size_t              site = 0;
      std::string              direction = "forward";
      std::optional<int>       pair_index;
      int                      pair_sign = 1;
    };

    std::string join(std::vector<std::size_t> const& xs, char const* sep) {
      std::string out;
      for (auto x : xs) {
        if (!out.empty()) {
          out += sep;
        }
        out += std::to_string(x);
      }
      return out;
    }

    template <typename T>
    std::string join_ints(std::vector<T> const& xs) {
      std::string out;
      for (auto x : xs) {
        if (!out.empty()) {
          out += ' ';
        }
        out += std::to_string(x);
      }
      return out;
    }

    json word_json(BraidWord const& w) {
      return {{"strands", w.strands()}, {"word", format(w)}};
    }

    int emit_word(Invocation const& inv, BraidWord const& w, std::ostream& out) {
      if (inv.as_json) {
        out << word_json(w).dump() << '\n';
      } else {
        out << format(w) << '\n';
      }
      return ok;
    }

    BraidWord word_arg(Invocation const& inv, std::size_t i = 0) {
      return parse(inv.words.at(i), inv.strands);
    }

    ////////////////////////////////////////////////////////////////////////
    // Subcommands
    ////////////////////////////////////////////////////////////////////////

    int cmd_parse(Invocation const& inv, std::ostream& out) {
      auto const w = word_arg(inv);
      if (!inv.as_json) {
        return emit_word(inv, w, out);
      }
      json letters = json::array();
      for (auto const& l : w) {
        letters.push_back(
            {{"kind", l.is_classical() ? "classical" : "virtual"},
             {"index", l.index},
             {"sign", l.is_classical() ? json(l.sign) : json()}});
      }
      auto j       = word_json(w);
      j["letters"] = std::move(letters);
      out << j.dump() << '\n';
      return ok;
    }

    int cmd_number(Invocation const& inv, std::ostream& out) {
      auto const numbering = integer_numbering(word_arg(inv));
      if (inv.as_json) {
        out << report::to_json(numbering).dump() << '\n';
        return ok;
      }
      for (auto const& c : numbering.crossings) {
        out << c.word_index << ' ' << to_string(c.letter) << " strands "
            << c.left_in_strand << ',' << c.right_in_strand;
        if (c.numbers) {
          out << " lambda=" << c.numbers->lambda << " mu=" << c.numbers->mu
              << ' ' << to_string(c.numbers->parity);
        } else {
          out << " virtual";
        }
        out << '\n';
      }
      out << "top strands: " << join_ints(numbering.top_strands) << '\n'
          << "top numbers: " << join_ints(numbering.top_numbers) << '\n';
      return ok;
    }

    int cmd_parity(Invocation const& inv, std::ostream& out) {
      auto const w = word_arg(inv);
      auto const p = parity(w);
      if (inv.as_json) {
        json entries = json::array();
        for (auto const& [k, par] : p) {
          entries.push_back({{"index", k}, {"parity", to_string(par)}});
        }
        out << json{{"strands", w.strands()}, {"parity", entries}}.dump()
            << '\n';
        return ok;
      }
      for (auto const& [k, par] : p) {
        out << k << ' ' << to_string(par) << '\n';
      }
      return ok;
    }

    int cmd_almost_classical(Invocation const& inv, std::ostream& out) {
      auto const odd = odd_crossings(word_arg(inv));
      if (inv.as_json) {
        out << json{{"almost_classical", odd.empty()}, {"odd", odd}}.dump()
            << '\n';
      } else if (odd.empty()) {
        out << "almost classical\n";
      } else {
        out << "odd crossings at letters " << join(odd, ",") << '\n';
      }
      return odd.empty() ? ok : no;
    }

    int cmd_top(Invocation const& inv, std::ostream& out) {
      auto const top = top_numbering(word_arg(inv));
      if (inv.as_json) {
        out << json{{"top_numbers", top}}.dump() << '\n';
      } else {
        out << join_ints(top) << '\n';
      }
      return ok;
    }

    int cmd_project(Invocation const& inv, std::ostream& out) {
      auto const trace = gauss_project(word_arg(inv));
      if (inv.as_json) {
        auto j = report::to_json(trace);
        if (!inv.trace) {
          j.erase("rounds");
        }
        out << j.dump() << '\n';
        return ok;
      }
      if (inv.trace) {
        for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
          out << "round " << r + 1 << ": " << format(trace.rounds[r].input)
              << " -> virtualized letters "
              << join(trace.rounds[r].virtualized, ",") << '\n';
        }
      }
      out << format(trace.result) << '\n';
      return ok;
    }

    int cmd_perm(Invocation const& inv, std::ostream& out) {
      auto const p = permutation(word_arg(inv));
      if (inv.as_json) {
        out << json{{"images", std::vector<int>(p.images().begin(),
                                                p.images().end())}}
                   .dump()
            << '\n';
      } else {
        out << to_string(p) << '\n';
      }
      return ok;
    }

    int cmd_artin(Invocation const& inv, std::ostream& out) {
      auto const images = artin_action(word_arg(inv));
      if (inv.as_json) {
        out << report::to_json(images).dump() << '\n';
        return ok;
      }
      for (int g = 1; g <= images.rank(); ++g) {
        out << 'x' << g << " -> " << to_string(images.image(g)) << '\n';
      }
      return ok;
    }

    int cmd_equal(Invocation const& inv, std::ostream& out) {
      bool const eq = classical_equal(word_arg(inv, 0), word_arg(inv, 1));
      if (inv.as_json) {
        out << json{{"equal", eq}}.dump() << '\n';
      } else {
        out << (eq ? "equal" : "not equal") << '\n';
      }
      return eq ? ok : no;
    }

    int cmd_moves(Invocation const& inv, std::ostream& out) {
      auto const moves = enumerate_moves(word_arg(inv));
      if (inv.as_json) {
        json j = json::array();
        for (auto const& m : moves) {
          j.push_back(report::to_json(m));
        }
        out << j.dump() << '\n';
        return ok;
      }
      for (auto const& m : moves) {
        out << to_string(m) << '\n';
      }
      return ok;
    }

    int cmd_apply(Invocation const& inv, std::ostream& out) {
      MoveInstance m{move_kind_from_string(inv.kind),
                     inv.site,
                     direction_from_string(inv.direction),
                     std::nullopt};
      if (inv.pair_index) {
        m.payload = PairPayload{*inv.pair_index, inv.pair_sign};
      }
      return emit_word(inv, apply_move(word_arg(inv), m), out);
    }

    std::vector<BraidWord> read_chain_file(Invocation const& inv) {
      if (inv.file == "-") {
        return report::read_chain(std::cin, inv.strands);
      }
      std::ifstream in(inv.file);
      if (!in) {
        throw Error("cannot open chain file '" + inv.file + "'");
      }
      return report::read_chain(in, inv.strands);
    }

    int cmd_pipeline(Invocation const& inv, std::ostream& out) {
      auto const chain = read_chain_file(inv);
      auto const rep   = injectivity_pipeline(chain);
      if (inv.as_json) {
        out << report::to_json(rep).dump() << '\n';
      } else {
        for (std::size_t k = 0; k < chain.size(); ++k) {
          out << k << ": " << format(rep.input_chain[k]) << " | "
              << format(rep.projected_chain[k]) << " | "
              << format(rep.classical_chain[k]) << '\n';
        }
        if (rep.equal) {
          out << "equal\n";
        } else {
          out << "not equal at chain index " << *rep.first_failure << '\n';
        }
      }
      return rep.equal ? ok : no;
    }

    json fuzz_verdict(BraidWord const&             start,
                      std::vector<WalkStep> const& walk) {
      std::vector<BraidWord> chain{start};
      for (auto const& s : walk) {
        chain.push_back(s.word);
      }
      auto const rep = injectivity_pipeline(chain);
      return {{"equal", rep.equal},
              {"first_failure",
               rep.first_failure ? json(*rep.first_failure) : json()},
              {"classical_endpoint", format(rep.classical_chain.back())}};
    }

    int cmd_fuzz(Invocation const& inv, std::ostream& out) {
      auto const       start = word_arg(inv);
      WalkPolicy const policy{inv.insertion_weight, inv.pattern_weight};
      if (inv.trials <= 1) {
        auto const walk = random_walk(start, inv.steps, inv.seed, policy);
        out << report::walk_entry(0, nullptr, start).dump() << '\n';
        for (std::size_t k = 0; k < walk.size(); ++k) {
          out << report::walk_entry(k + 1, &walk[k].move, walk[k].word).dump()
              << '\n';
        }
        auto const verdict = fuzz_verdict(start, walk);
        out << json{{"verdict", verdict}}.dump() << '\n';
        return verdict["equal"].get<bool>() ? ok : no;
      }
      std::size_t failures = 0;
      for (std::size_t t = 0; t < inv.trials; ++t) {
        auto const seed    = inv.seed + t;
        auto const walk    = random_walk(start, inv.steps, seed, policy);
        auto       verdict = fuzz_verdict(start, walk);
        failures += verdict["equal"].get<bool>() ? 0 : 1;
        verdict["trial"] = t;
        verdict["seed"]  = seed;
        out << verdict.dump() << '\n';
      }
      out << json{{"trials", inv.trials}, {"failures", failures}}.dump()
          << '\n';
      return failures == 0 ? ok : no;
    }

    int cmd_render(Invocation const& inv, std::ostream& out) {
      auto const svg = render_svg(word_arg(inv), {inv.numbers});
      if (inv.output.empty()) {
        out << svg;
        return ok;
      }
      std::ofstream file(inv.output);
      if (!file) {
        throw Error("cannot write '" + inv.output + "'");
      }
      file << svg;
      return ok;
    }
  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    Invocation inv;
    CLI::App   app{"Virtual braid words: numberings, parity, Gaussian "
                 "projection and classical equality",
                 "vbraid"};
    app.require_subcommand(1);

    using Handler = int (*)(Invocation const&, std::ostream&);
    std::vector<std::pair<CLI::App*, Handler>> handlers;

    auto add = [&](char const* name,
                   char const* help,
                   Handler     handler,
                   int         word_count = 1) {
      auto* sub = app.add_subcommand(name, help);
      sub->add_option("-n,--strands", inv.strands, "number of strands")
          ->required()
          ->check(CLI::PositiveNumber);
      sub->add_flag("--json", inv.as_json, "emit JSON");
      if (word_count > 0) {
        sub->add_option("words", inv.words, "braid word(s)")
            ->required()
            ->expected(word_count);
      }
      handlers.emplace_back(sub, handler);
      return sub;
    };

    add("parse", "print the canonical spelling of a word", cmd_parse);
    add("inverse", "print the inverse word", [](Invocation const& inv, std::ostream& out) {
      return emit_word(inv, inverse(word_arg(inv)), out);
    });
    add("reduce", "cancel adjacent inverse pairs", [](Invocation const& inv, std::ostream& out) {
      return emit_word(inv, free_reduce(word_arg(inv)), out);
    });
    add(
        "concat",
        "concatenate two words",
        [](Invocation const& inv, std::ostream& out) {
          return emit_word(inv, concat(word_arg(inv, 0), word_arg(inv, 1)), out);
        },
        2);
    add("perm", "permutation: bottom position of the strand at each top position", cmd_perm);
    add("number", "integer numbering report", cmd_number);
    add("parity", "parity of each classical crossing", cmd_parity);
    add("almost-classical", "exit 0 iff the word is almost classical", cmd_almost_classical);
    add("top", "numbers of the top endpoints", cmd_top);
    add("smooth", "smooth a classical crossing", [](Invocation const& inv, std::ostream& out) {
      return emit_word(inv, smooth(word_arg(inv), inv.letter), out);
    })->add_option("-k,--letter", inv.letter, "letter index")->required();
    add("moves", "list applicable moves", cmd_moves);
    {
      auto* sub = add("apply", "apply one move", cmd_apply);
      sub->add_option("--kind", inv.kind, "U1..U3, V1..V5")->required();
      sub->add_option("--site", inv.site, "letter index")->required();
      sub->add_option("--direction", inv.direction, "forward|backward");
      sub->add_option("--index", inv.pair_index, "U2/V2 pair generator index");
      sub->add_option("--sign", inv.pair_sign, "U2 pair first sign");
    }
    add("project", "Gaussian projection", cmd_project)
        ->add_flag("--trace", inv.trace, "print every round");
    add("classicalize", "classical word of an almost classical word", [](Invocation const& inv, std::ostream& out) {
      return emit_word(inv, classicalize(word_arg(inv)), out);
    });
    add("equal", "exit 0 iff two classical words are equal in B_n", cmd_equal, 2);
    add("artin", "Artin action on the free group", cmd_artin);
    add("pipeline", "project and certify a chain file", cmd_pipeline, 0)
        ->add_option("file", inv.file, "JSON-lines chain file, '-' for stdin")
        ->required();
    {
      auto* sub = add("fuzz", "random move walk from a classical word", cmd_fuzz);
      sub->add_option("--seed", inv.seed, "walk seed");
      sub->add_option("--steps", inv.steps, "moves per walk");
      sub->add_option("--trials", inv.trials, "independent walks, seeds seed..seed+trials-1");
      sub->add_option("--insertion-weight", inv.insertion_weight)
          ->check(CLI::NonNegativeNumber);
      sub->add_option("--pattern-weight", inv.pattern_weight)
          ->check(CLI::NonNegativeNumber);
    }
    {
      auto* sub = add("render", "SVG diagram", cmd_render);
      sub->add_flag("--numbers", inv.numbers, "label arcs with their numbers");
      sub->add_option("-o,--output", inv.output, "write to file");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return ok;
    } catch (CLI::ParseError const& e) {
      err << "usage error: " << e.what() << '\n';
      return usage;
    }

    for (auto const& [sub, handler] : handlers) {
      if (sub->parsed()) {
        try {
          return handler(inv, out);
        } catch (vbraid::Error const& e) {
          err << "error: " << e.what() << '\n';
          return failure;
        }
      }
    }
    return usage;
  }

}  // namespace vbraid::cli
