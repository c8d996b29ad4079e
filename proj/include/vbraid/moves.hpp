#ifndef VBRAID_MOVES_HPP_
#define VBRAID_MOVES_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vbraid/word.hpp"

namespace vbraid {

  // The relations of the classical (U*) and virtual (V*) braid groups as
  // local rewrites:
  //
  //   U1  s_i s_j = s_j s_i            |i - j| > 1, any signs
  //   U2  s_i^e s_i^-e = 1
  //   U3  s_i s_{i-1} s_i = s_{i-1} s_i s_{i-1}, all signs +1 or all -1
  //   V1  t_i t_j = t_j t_i            |i - j| > 1
  //   V2  t_i t_i = 1
  //   V3  t_i t_{i-1} t_i = t_{i-1} t_i t_{i-1}
  //   V4  t_i t_{i-1} s_i = s_{i-1} t_i t_{i-1}
  //   V5  t_i s_j^e = s_j^e t_i         |i - j| > 1
  //
  // Forward rewrites the left side into the right side, backward the right
  // side into the left. For U2/V2 forward deletes a pair and backward inserts
  // one. U1 and V1 are symmetric and only ever forward.
  enum class MoveKind : unsigned char { U1, U2, U3, V1, V2, V3, V4, V5 };

  enum class Direction : unsigned char { forward, backward };

  std::string_view to_string(MoveKind k) noexcept;
  std::string_view to_string(Direction d) noexcept;
  MoveKind         move_kind_from_string(std::string_view s);
  Direction        direction_from_string(std::string_view s);

  // The generator pair inserted or deleted by a U2/V2 move. For U2, `sign`
  // is the sign of the first letter of the pair; for V2 it is always +1.
  struct PairPayload {
    int index;
    int sign;

    friend constexpr bool operator==(PairPayload const&,
                                     PairPayload const&) = default;
  };

  struct MoveInstance {
    MoveKind                   kind;
    std::size_t                site;
    Direction                  direction;
    std::optional<PairPayload> payload;

    // The instance that undoes this one when applied to its result.
    MoveInstance reversed() const;

    friend bool operator==(MoveInstance const&, MoveInstance const&) = default;
  };

  std::string to_string(MoveInstance const& m);

  struct EnumerateOptions {
    bool        insertions     = true;
    std::size_t max_insertions = std::numeric_limits<std::size_t>::max();
  };

  // Every applicable instance, sorted by (site, kind, direction, payload).
  std::vector<MoveInstance> enumerate_moves(BraidWord const&        w,
                                            EnumerateOptions const& opts = {});

  bool is_applicable(BraidWord const& w, MoveInstance const& m);

  // Throws InapplicableMove if the pattern of m is not present at m.site.
  BraidWord apply_move(BraidWord const& w, MoveInstance const& m);

  struct WalkPolicy {
    double insertion = 1.0;
    double pattern   = 3.0;
  };

  struct WalkStep {
    MoveInstance move;
    BraidWord    word;
  };

  // Seeded random walk: each step picks the insertion or pattern category with
  // probability proportional to the policy weights (falling back to whichever
  // is non-empty), then a uniform instance within it. Reproducible for a fixed
  // seed on every platform.
  std::vector<WalkStep> random_walk(BraidWord const&  w,
                                    std::size_t       steps,
                                    std::uint64_t     seed,
                                    WalkPolicy const& policy = {});

}  // namespace vbraid

#endif  // VBRAID_MOVES_HPP_
