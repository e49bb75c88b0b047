#pragma once

#include <optional>
#include <vector>

#include "flagwalk/autgroup.hpp"
#include "flagwalk/flagmap.hpp"
#include "flagwalk/walks.hpp"

namespace flagwalk {

// A directed closed dart sequence without immediate backtracking, together
// with the automorphism whose induced dart action advances it one step.
// Canonical form: the lexicographically least rotation.
struct DartCyclet {
    std::vector<int> darts;
    Automorphism shunt;
    int length() const { return static_cast<int>(darts.size()); }
};

struct CycletOrbit {
    DartCyclet representative; // least canonical form in the orbit
    int length = 0;
    int orbit_size = 0;
};

// Action of an automorphism on skeleton darts; preserves initial vertices
// and commutes with reversal.
Permutation induced_dart_action(const FaceStructure& fs, const Automorphism& g);

// Brute-force enumeration over (group element, dart) pairs: keep the
// <sigma>-orbit of a dart when consecutive darts are sequential and sigma's
// dart order equals the orbit length; deduplicate by rotation and group into
// orbits under the subgroup. Deliberately shares no logic with the
// hole/Petrie machinery.
std::vector<CycletOrbit> consistent_cyclets(const FlagSystem& m, const FaceStructure& fs,
                                            const Skeleton& sk,
                                            const std::vector<Automorphism>& group);

// The dart sequence induced by a consistent flag walk, when it is a valid
// cyclet; partner walks induce the same cyclet.
std::optional<DartCyclet> walk_to_cyclet(const FlagSystem& m, const FaceStructure& fs,
                                         const Skeleton& sk, const FlagWalk& w);

} // namespace flagwalk
