#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vbraid/artin.hpp"
#include "vbraid/error.hpp"
#include "vbraid/moves.hpp"
#include "vbraid/numbering.hpp"
#include "vbraid/projection.hpp"
#include "vbraid/render.hpp"
#include "vbraid/word.hpp"

namespace py = pybind11;
using namespace vbraid;

namespace {

  std::vector<Letter> letters_of(BraidWord const& w) {
    return {w.begin(), w.end()};
  }

  std::string repr(BraidWord const& w) {
    return "BraidWord(" + std::to_string(w.strands()) + ", '" + format(w) + "')";
  }

  std::vector<std::pair<int, int>> free_letters(FreeWord const& f) {
    std::vector<std::pair<int, int>> out;
    for (auto const& l : f.letters()) {
      out.emplace_back(l.generator, l.sign);
    }
    return out;
  }

  template <typename T>
  void bind_error(py::module_& m, char const* name, py::handle base) {
    py::register_exception<T>(m, name, base);
  }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Virtual braid words, moves, integer numberings and the Gaussian projection";

  // Exceptions. Bases are registered first so the more specific translators
  // are tried before them.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::handle const error = m.attr("Error");
  bind_error<ParseError>(m, "ParseError", py::make_tuple(error, py::handle(PyExc_ValueError)));
  bind_error<IndexError>(m, "IndexError", py::make_tuple(error, py::handle(PyExc_IndexError)));
  bind_error<StrandMismatch>(m, "StrandMismatch", py::make_tuple(error, py::handle(PyExc_ValueError)));
  bind_error<InapplicableMove>(m, "InapplicableMove", error);
  bind_error<PreconditionError>(m, "PreconditionError", error);
  bind_error<UnsupportedInput>(m, "UnsupportedInput", error);
  bind_error<PipelineError>(m, "PipelineError", error);
  bind_error<LambdaOutOfRange>(m, "LambdaOutOfRange", m.attr("PreconditionError"));

  // Words

  py::class_<Letter>(m, "Letter")
      .def_static("sigma", &Letter::sigma, py::arg("index"), py::arg("sign") = 1)
      .def_static("tau", &Letter::tau, py::arg("index"))
      .def_property_readonly("kind",
                             [](Letter const& l) {
                               return l.is_classical() ? "classical" : "virtual";
                             })
      .def_readonly("index", &Letter::index)
      .def_readonly("sign", &Letter::sign)
      .def("is_classical", &Letter::is_classical)
      .def("is_virtual", &Letter::is_virtual)
      .def("inverse", &Letter::inverse)
      .def(py::self == py::self)
      .def("__hash__",
           [](Letter const& l) {
             return py::hash(py::make_tuple(l.is_classical(), l.index, l.sign));
           })
      .def("__str__", [](Letter const& l) { return to_string(l); })
      .def("__repr__", [](Letter const& l) { return "Letter('" + to_string(l) + "')"; });

  py::class_<BraidWord>(m, "BraidWord")
      .def(py::init<int>(), py::arg("strands"))
      .def(py::init<int, std::vector<Letter>>(), py::arg("strands"), py::arg("letters"))
      .def_property_readonly("strands", &BraidWord::strands)
      .def_property_readonly("letters", &letters_of)
      .def("is_classical", &BraidWord::is_classical)
      .def("classical_count", &BraidWord::classical_count)
      .def("__len__", &BraidWord::size)
      .def("__getitem__",
           [](BraidWord const& w, std::size_t i) {
             if (i >= w.size()) {
               throw py::index_error();
             }
             return w[i];
           })
      .def("__iter__",
           [](BraidWord const& w) { return py::iter(py::cast(letters_of(w))); })
      .def(py::self == py::self)
      .def("__hash__",
           [](BraidWord const& w) { return py::hash(py::make_tuple(w.strands(), format(w))); })
      .def("__str__", &format)
      .def("__repr__", &repr);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>(), py::arg("images"))
      .def_static("identity", &Permutation::identity, py::arg("n"))
      .def_property_readonly("images",
                             [](Permutation const& p) {
                               return std::vector<int>(p.images().begin(), p.images().end());
                             })
      .def("image", &Permutation::image, py::arg("position"))
      .def("is_identity", &Permutation::is_identity)
      .def("then", &Permutation::then, py::arg("next"))
      .def(py::self == py::self)
      .def("__str__", [](Permutation const& p) { return to_string(p); })
      .def("__repr__", [](Permutation const& p) { return "Permutation(" + to_string(p) + ")"; });

  m.def("parse", &parse, py::arg("text"), py::arg("strands"));
  m.def("format", &format, py::arg("word"));
  m.def("inverse", py::overload_cast<BraidWord const&>(&inverse), py::arg("word"));
  m.def("concat", &concat, py::arg("a"), py::arg("b"));
  m.def("free_reduce", &free_reduce, py::arg("word"));
  m.def("permutation", &permutation, py::arg("word"));

  // Moves

  py::enum_<MoveKind>(m, "MoveKind")
      .value("U1", MoveKind::U1)
      .value("U2", MoveKind::U2)
      .value("U3", MoveKind::U3)
      .value("V1", MoveKind::V1)
      .value("V2", MoveKind::V2)
      .value("V3", MoveKind::V3)
      .value("V4", MoveKind::V4)
      .value("V5", MoveKind::V5);

  py::enum_<Direction>(m, "Direction")
      .value("forward", Direction::forward)
      .value("backward", Direction::backward);

  py::class_<MoveInstance>(m, "MoveInstance")
      .def(py::init([](MoveKind kind,
                       std::size_t site,
                       Direction direction,
                       std::optional<std::pair<int, int>> payload) {
             MoveInstance mi{kind, site, direction, std::nullopt};
             if (payload) {
               mi.payload = PairPayload{payload->first, payload->second};
             }
             return mi;
           }),
           py::arg("kind"),
           py::arg("site"),
           py::arg("direction") = Direction::forward,
           py::arg("payload")   = py::none())
      .def_readonly("kind", &MoveInstance::kind)
      .def_readonly("site", &MoveInstance::site)
      .def_readonly("direction", &MoveInstance::direction)
      .def_property_readonly("payload",
                             [](MoveInstance const& mi) -> std::optional<std::pair<int, int>> {
                               if (!mi.payload) {
                                 return std::nullopt;
                               }
                               return std::make_pair(mi.payload->index, mi.payload->sign);
                             })
      .def("reversed", &MoveInstance::reversed)
      .def(py::self == py::self)
      .def("__repr__",
           [](MoveInstance const& mi) { return "MoveInstance(" + to_string(mi) + ")"; });

  m.def(
      "enumerate_moves",
      [](BraidWord const& w, bool insertions, std::optional<std::size_t> max_insertions) {
        EnumerateOptions opts;
        opts.insertions = insertions;
        if (max_insertions) {
          opts.max_insertions = *max_insertions;
        }
        return enumerate_moves(w, opts);
      },
      py::arg("word"),
      py::arg("insertions")     = true,
      py::arg("max_insertions") = py::none());
  m.def("is_applicable", &is_applicable, py::arg("word"), py::arg("move"));
  m.def("apply_move", &apply_move, py::arg("word"), py::arg("move"));
  m.def(
      "random_walk",
      [](BraidWord const& w,
         std::size_t steps,
         std::uint64_t seed,
         double insertion_weight,
         double pattern_weight) {
        std::vector<std::pair<MoveInstance, BraidWord>> out;
        for (auto& s : random_walk(w, steps, seed, {insertion_weight, pattern_weight})) {
          out.emplace_back(s.move, std::move(s.word));
        }
        return out;
      },
      py::arg("word"),
      py::arg("steps"),
      py::arg("seed"),
      py::arg("insertion_weight") = 1.0,
      py::arg("pattern_weight")   = 3.0);

  // Numbering

  py::enum_<Parity>(m, "Parity").value("even", Parity::even).value("odd", Parity::odd);

  py::class_<ClassicalIncidence>(m, "ClassicalIncidence")
      .def_readonly("lambda_", &ClassicalIncidence::lambda)
      .def_readonly("mu", &ClassicalIncidence::mu)
      .def_readonly("parity", &ClassicalIncidence::parity)
      .def("__repr__", [](ClassicalIncidence const& c) {
        return "ClassicalIncidence(lambda=" + std::to_string(c.lambda) + ", mu="
               + std::to_string(c.mu) + ", " + std::string(to_string(c.parity)) + ")";
      });

  py::class_<CrossingRecord>(m, "CrossingRecord")
      .def_readonly("word_index", &CrossingRecord::word_index)
      .def_readonly("letter", &CrossingRecord::letter)
      .def_readonly("left_in_strand", &CrossingRecord::left_in_strand)
      .def_readonly("right_in_strand", &CrossingRecord::right_in_strand)
      .def_readonly("numbers", &CrossingRecord::numbers)
      .def_property_readonly("position", &CrossingRecord::position);

  py::class_<IntegerNumbering>(m, "IntegerNumbering")
      .def_readonly("strands", &IntegerNumbering::strands)
      .def_readonly("crossings", &IntegerNumbering::crossings)
      .def_readonly("top_strands", &IntegerNumbering::top_strands)
      .def_readonly("top_numbers", &IntegerNumbering::top_numbers);

  m.def("integer_numbering", &integer_numbering, py::arg("word"));
  m.def("parity", &parity, py::arg("word"));
  m.def("odd_crossings", &odd_crossings, py::arg("word"));
  m.def("is_almost_classical", &is_almost_classical, py::arg("word"));
  m.def("top_numbering", &top_numbering, py::arg("word"));
  m.def("smooth", &smooth, py::arg("word"), py::arg("index"));

  // Projection

  py::class_<ProjectionRound>(m, "ProjectionRound")
      .def_readonly("input", &ProjectionRound::input)
      .def_readonly("virtualized", &ProjectionRound::virtualized);

  py::class_<ProjectionTrace>(m, "ProjectionTrace")
      .def_readonly("rounds", &ProjectionTrace::rounds)
      .def_readonly("result", &ProjectionTrace::result);

  py::class_<PipelineReport>(m, "PipelineReport")
      .def_readonly("strands", &PipelineReport::strands)
      .def_readonly("input_chain", &PipelineReport::input_chain)
      .def_readonly("projected_chain", &PipelineReport::projected_chain)
      .def_readonly("classical_chain", &PipelineReport::classical_chain)
      .def_readonly("equal", &PipelineReport::equal)
      .def_readonly("first_failure", &PipelineReport::first_failure);

  m.def("gauss_project", &gauss_project, py::arg("word"));
  m.def("classicalize", &classicalize, py::arg("word"));
  m.def(
      "injectivity_pipeline",
      [](std::vector<BraidWord> const& chain) { return injectivity_pipeline(chain); },
      py::arg("chain"));

  // Artin action

  py::class_<EndoImages>(m, "EndoImages")
      .def_property_readonly("rank", &EndoImages::rank)
      .def_property_readonly("images",
                             [](EndoImages const& e) {
                               std::vector<std::vector<std::pair<int, int>>> out;
                               for (auto const& f : e.images()) {
                                 out.push_back(free_letters(f));
                               }
                               return out;
                             })
      .def("image",
           [](EndoImages const& e, int g) { return free_letters(e.image(g)); },
           py::arg("generator"))
      .def("compose", &EndoImages::compose, py::arg("inner"))
      .def(py::self == py::self)
      .def("__str__", [](EndoImages const& e) {
        std::ostringstream out;
        for (int g = 1; g <= e.rank(); ++g) {
          out << (g > 1 ? "\n" : "") << "x" << g << " -> " << to_string(e.image(g));
        }
        return out.str();
      });

  m.def("artin_action", &artin_action, py::arg("word"));
  m.def("classical_equal", &classical_equal, py::arg("a"), py::arg("b"));

  // Rendering

  m.def(
      "render_svg",
      [](BraidWord const& w, bool numbers) { return render_svg(w, {numbers}); },
      py::arg("word"),
      py::arg("numbers") = false);
}
