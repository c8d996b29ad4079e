#include "vbraid/moves.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <random>
#include <tuple>

#include "vbraid/error.hpp"

namespace vbraid {

  namespace {
    constexpr std::array<MoveKind, 8> all_kinds{MoveKind::U1,
                                                MoveKind::U2,
                                                MoveKind::U3,
                                                MoveKind::V1,
                                                MoveKind::V2,
                                                MoveKind::V3,
                                                MoveKind::V4,
                                                MoveKind::V5};

    bool is_pair_kind(MoveKind k) {
      return k == MoveKind::U2 || k == MoveKind::V2;
    }

    bool is_insertion(MoveInstance const& m) {
      return is_pair_kind(m.kind) && m.direction == Direction::backward;
    }

    bool distant(Letter const& a, Letter const& b) {
      return std::abs(a.index - b.index) > 1;
    }

    // Length of the subword matched by a non-insertion move.
    std::size_t window(MoveKind k) {
      switch (k) {
        case MoveKind::U3:
        case MoveKind::V3:
        case MoveKind::V4:
          return 3;
        default:
          return 2;
      }
    }

    using Window = std::span<Letter const>;

    // (i, i-1, i) when `descending_middle`, else (i-1, i, i-1); all letters of
    // kind `kind` with the same sign.
    bool matches_triple(Window x, LetterKind kind, bool descending_middle) {
      if (x[0].kind != kind || x[1].kind != kind || x[2].kind != kind) {
        return false;
      }
      if (x[0].sign != x[1].sign || x[1].sign != x[2].sign) {
        return false;
      }
      if (x[0].index != x[2].index) {
        return false;
      }
      int const step = descending_middle ? -1 : 1;
      return x[1].index == x[0].index + step;
    }

    std::vector<Letter> swap_pair(Window x) {
      return {x[1], x[0]};
    }

    std::vector<Letter> flip_triple(Window x) {
      return {x[1], x[0], x[1]};
    }

    // Replacement for the matched window of a non-insertion move, or nothing
    // if the pattern is absent. For U2/V2 deletions the payload is filled in.
    std::optional<std::vector<Letter>> rewrite(MoveKind                    kind,
                                               Direction                   dir,
                                               Window                      x,
                                               std::optional<PairPayload>* payload) {
      bool const fwd = dir == Direction::forward;
      switch (kind) {
        case MoveKind::U1:
          if (fwd && x[0].is_classical() && x[1].is_classical()
              && distant(x[0], x[1])) {
            return swap_pair(x);
          }
          return std::nullopt;
        case MoveKind::V1:
          if (fwd && x[0].is_virtual() && x[1].is_virtual()
              && distant(x[0], x[1])) {
            return swap_pair(x);
          }
          return std::nullopt;
        case MoveKind::U2:
        case MoveKind::V2: {
          auto const want = kind == MoveKind::U2 ? LetterKind::classical
                                                 : LetterKind::virtual_;
          if (fwd && x[0].kind == want && x[1] == x[0].inverse()) {
            *payload = PairPayload{x[0].index, x[0].sign};
            return std::vector<Letter>{};
          }
          return std::nullopt;
        }
        case MoveKind::U3:
          if (matches_triple(x, LetterKind::classical, fwd)) {
            return flip_triple(x);
          }
          return std::nullopt;
        case MoveKind::V3:
          if (matches_triple(x, LetterKind::virtual_, fwd)) {
            return flip_triple(x);
          }
          return std::nullopt;
        case MoveKind::V4:
          if (fwd) {
            // t_i t_{i-1} s_i -> s_{i-1} t_i t_{i-1}
            if (x[0].is_virtual() && x[1].is_virtual() && x[2].is_classical()
                && x[2].sign == 1 && x[1].index == x[0].index - 1
                && x[2].index == x[0].index) {
              return std::vector<Letter>{
                  Letter::sigma(x[1].index), x[0], x[1]};
            }
          } else {
            // s_{i-1} t_i t_{i-1} -> t_i t_{i-1} s_i
            if (x[0].is_classical() && x[0].sign == 1 && x[1].is_virtual()
                && x[2].is_virtual() && x[2].index == x[1].index - 1
                && x[0].index == x[2].index) {
              return std::vector<Letter>{
                  x[1], x[2], Letter::sigma(x[1].index)};
            }
          }
          return std::nullopt;
        case MoveKind::V5:
          if (!distant(x[0], x[1])) {
            return std::nullopt;
          }
          if (fwd ? (x[0].is_virtual() && x[1].is_classical())
                  : (x[0].is_classical() && x[1].is_virtual())) {
            return swap_pair(x);
          }
          return std::nullopt;
      }
      return std::nullopt;
    }

    std::vector<Letter> insertion_pair(MoveKind kind, PairPayload const& p) {
      if (kind == MoveKind::U2) {
        return {Letter::sigma(p.index, p.sign), Letter::sigma(p.index, -p.sign)};
      }
      return {Letter::tau(p.index), Letter::tau(p.index)};
    }

    auto sort_key(MoveInstance const& m) {
      auto const p = m.payload.value_or(PairPayload{0, 0});
      return std::make_tuple(m.site, m.kind, m.direction, p.index, p.sign);
    }

    // Uniform integer in [0, bound) from a 64-bit engine, by rejection.
    std::size_t uniform_below(std::mt19937_64& rng, std::size_t bound) {
      std::uint64_t const b     = bound;
      std::uint64_t const limit = std::numeric_limits<std::uint64_t>::max()
                                  - std::numeric_limits<std::uint64_t>::max() % b;
      std::uint64_t x;
      do {
        x = rng();
      } while (x >= limit);
      return static_cast<std::size_t>(x % b);
    }

    double uniform_unit(std::mt19937_64& rng) {
      return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }
  }  // namespace

  std::string_view to_string(MoveKind k) noexcept {
    switch (k) {
      case MoveKind::U1:
        return "U1";
      case MoveKind::U2:
        return "U2";
      case MoveKind::U3:
        return "U3";
      case MoveKind::V1:
        return "V1";
      case MoveKind::V2:
        return "V2";
      case MoveKind::V3:
        return "V3";
      case MoveKind::V4:
        return "V4";
      case MoveKind::V5:
        return "V5";
    }
    return "?";
  }

  std::string_view to_string(Direction d) noexcept {
    return d == Direction::forward ? "forward" : "backward";
  }

  MoveKind move_kind_from_string(std::string_view s) {
    for (auto k : all_kinds) {
      if (to_string(k) == s) {
        return k;
      }
    }
    throw Error("unknown move kind '" + std::string(s) + "'");
  }

  Direction direction_from_string(std::string_view s) {
    if (s == "forward") {
      return Direction::forward;
    } else if (s == "backward") {
      return Direction::backward;
    }
    throw Error("unknown move direction '" + std::string(s) + "'");
  }

  MoveInstance MoveInstance::reversed() const {
    if (kind == MoveKind::U1 || kind == MoveKind::V1) {
      return *this;
    }
    MoveInstance r = *this;
    r.direction    = direction == Direction::forward ? Direction::backward
                                                     : Direction::forward;
    return r;
  }

  std::string to_string(MoveInstance const& m) {
    std::string out = std::string(to_string(m.kind)) + " "
                      + std::string(to_string(m.direction)) + " @"
                      + std::to_string(m.site);
    if (m.payload) {
      auto const pair = insertion_pair(m.kind, *m.payload);
      out += " [" + to_string(pair[0]) + " " + to_string(pair[1]) + "]";
    }
    return out;
  }

  std::vector<MoveInstance> enumerate_moves(BraidWord const&        w,
                                            EnumerateOptions const& opts) {
    std::vector<MoveInstance> out;
    auto const                letters    = w.letters();
    std::size_t               insertions = 0;

    for (std::size_t site = 0; site <= letters.size(); ++site) {
      for (auto kind : all_kinds) {
        std::size_t const len = window(kind);
        if (site + len <= letters.size()) {
          for (auto dir : {Direction::forward, Direction::backward}) {
            std::optional<PairPayload> payload;
            if (rewrite(kind, dir, letters.subspan(site, len), &payload)) {
              out.push_back({kind, site, dir, payload});
            }
          }
        }
        if (opts.insertions && is_pair_kind(kind)) {
          for (int i = 1; i < w.strands(); ++i) {
            for (int sign : {1, -1}) {
              if (kind == MoveKind::V2 && sign == -1) {
                continue;
              }
              if (insertions == opts.max_insertions) {
                break;
              }
              ++insertions;
              out.push_back(
                  {kind, site, Direction::backward, PairPayload{i, sign}});
            }
          }
        }
      }
    }
    std::stable_sort(out.begin(),
                     out.end(),
                     [](MoveInstance const& a, MoveInstance const& b) {
                       return sort_key(a) < sort_key(b);
                     });
    return out;
  }

  namespace {
    std::optional<std::vector<Letter>> try_apply(BraidWord const&    w,
                                                 MoveInstance const& m) {
      auto const letters = w.letters();
      std::vector<Letter> out;
      if (is_insertion(m)) {
        if (m.site > letters.size() || !m.payload
            || m.payload->index < 1 || m.payload->index >= w.strands()
            || (m.payload->sign != 1 && m.payload->sign != -1)
            || (m.kind == MoveKind::V2 && m.payload->sign != 1)) {
          return std::nullopt;
        }
        out.assign(letters.begin(), letters.begin() + m.site);
        auto const pair = insertion_pair(m.kind, *m.payload);
        out.insert(out.end(), pair.begin(), pair.end());
        out.insert(out.end(), letters.begin() + m.site, letters.end());
        return out;
      }
      std::size_t const len = window(m.kind);
      if (m.site + len > letters.size()) {
        return std::nullopt;
      }
      std::optional<PairPayload> payload;
      auto replacement
          = rewrite(m.kind, m.direction, letters.subspan(m.site, len), &payload);
      if (!replacement || payload != m.payload) {
        return std::nullopt;
      }
      out.assign(letters.begin(), letters.begin() + m.site);
      out.insert(out.end(), replacement->begin(), replacement->end());
      out.insert(out.end(), letters.begin() + m.site + len, letters.end());
      return out;
    }
  }  // namespace

  bool is_applicable(BraidWord const& w, MoveInstance const& m) {
    return try_apply(w, m).has_value();
  }

  BraidWord apply_move(BraidWord const& w, MoveInstance const& m) {
    auto out = try_apply(w, m);
    if (!out) {
      throw InapplicableMove("move " + to_string(m)
                             + " does not apply to word '" + format(w) + "'");
    }
    return BraidWord(w.strands(), std::move(*out));
  }

  std::vector<WalkStep> random_walk(BraidWord const&  w,
                                    std::size_t       steps,
                                    std::uint64_t     seed,
                                    WalkPolicy const& policy) {
    std::mt19937_64       rng(seed);
    std::vector<WalkStep> out;
    out.reserve(steps);
    BraidWord current = w;

    for (std::size_t k = 0; k < steps; ++k) {
      std::vector<MoveInstance> inserts, patterns;
      for (auto const& m : enumerate_moves(current)) {
        (is_insertion(m) ? inserts : patterns).push_back(m);
      }
      // A word over one strand has no generators at all.
      if (inserts.empty() && patterns.empty()) {
        break;
      }
      bool pick_insert;
      if (patterns.empty()) {
        pick_insert = true;
      } else if (inserts.empty()) {
        pick_insert = false;
      } else {
        double const total = policy.insertion + policy.pattern;
        pick_insert = uniform_unit(rng) * total < policy.insertion;
      }
      auto const& pool = pick_insert ? inserts : patterns;
      auto const& move = pool[uniform_below(rng, pool.size())];
      current          = apply_move(current, move);
      out.push_back({move, current});
    }
    return out;
  }

}  // namespace vbraid
