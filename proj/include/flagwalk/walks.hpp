#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagwalk/autgroup.hpp"
#include "flagwalk/flagmap.hpp"
#include "flagwalk/perm.hpp"

namespace flagwalk {

enum class WalkKindTag { Hole, Petrie };

std::string to_string(WalkKindTag t);

struct WalkKind {
    WalkKindTag tag = WalkKindTag::Hole;
    int j = 1; // 1 <= j <= q-1
};

// A closed flag-walk generated by the hole or Petrie permutation of its
// kind; flags[i+1] is the image of flags[i]. The shunt, when present, is an
// automorphism advancing the walk one step, of order equal to the length.
struct FlagWalk {
    int base = 0;
    WalkKind kind;
    std::vector<int> flags;
    std::optional<Automorphism> shunt;
    int length() const { return static_cast<int>(flags.size()); }
};

// r0 r1 (r2 r1)^{j-1}: advance along an edge and turn past j faces, keeping
// the walk's flags on one side.
Permutation hole_permutation(const FlagSystem& m, const FaceStructure& fs, int j);
// r0 (r2 r1)^j: as above with sides alternating.
Permutation petrie_permutation(const FlagSystem& m, const FaceStructure& fs, int j);
Permutation walk_permutation(const FlagSystem& m, const FaceStructure& fs, WalkKind kind);

// The cycle of the kind's permutation through the given flag. Walk length is
// the length of that cycle, not the global order of the permutation.
FlagWalk walk_at(const FlagSystem& m, const FaceStructure& fs, int flag, WalkKind kind);

// Elementwise r2 image; a j-walk's partner is a (q-j)-walk of the same kind
// inducing the same dart sequence.
FlagWalk partner(const FlagSystem& m, const FaceStructure& fs, const FlagWalk& w);

// Traversal reversal: elementwise r0 (holes) or r0 r2 (Petrie paths), order
// flipped; same kind and j.
FlagWalk reverse(const FlagSystem& m, const FlagWalk& w);

// The unique candidate shunt (base -> successor of base) when it exists and
// lies in the given subgroup; its order always equals the walk length.
std::optional<Automorphism> consistency(const FlagSystem& m, const FlagWalk& w,
                                        const std::vector<Automorphism>& group);

// True when some element of the subgroup maps the walk onto its reversal.
// The reversal of travel is witnessed by the reverse walk or, when q is even
// and j = q/2 and the walk is a hole, by the reverse of its partner (the
// other flag walk inducing the reversed dart sequence).
bool is_symmetric_walk(const FlagSystem& m, const FaceStructure& fs, const FlagWalk& w,
                       const std::vector<Automorphism>& group);

// Lines exist at even valence: the q/2-hole and q/2-Petrie path through a
// flag visit the same edge set.
bool is_line(const FlagSystem& m, const FaceStructure& fs, const FlagWalk& w);

std::vector<int> edge_set_of(const FaceStructure& fs, const FlagWalk& w); // sorted, distinct

struct WalkOrbitRow {
    int flag_orbit = 0;
    int j = 0;
    WalkKindTag kind = WalkKindTag::Hole;
    int length = 0;
    bool symmetric = false;
    bool line = false;
    int orbit_size = 0; // distinct edge sets in the subgroup orbit
    FlagWalk representative;
};

struct WalkOrbitReport {
    int valence = 0;
    int group_order = 0;
    std::vector<WalkOrbitRow> rows;          // sorted by (flag_orbit, j, kind)
    std::vector<std::string> notes;          // surfaced anomalies
};

// One row per orbit of consistent walks under the subgroup, keyed by
// (flag orbit of the base, j, kind). Requires an equivelar map and a
// dart-transitive subgroup; the row count must come out as 2(q-1), anything
// else is reported as a theorem violation.
WalkOrbitReport enumerate_consistent_orbits(const FlagSystem& m, const FaceStructure& fs,
                                            const std::vector<Automorphism>& group);

} // namespace flagwalk
