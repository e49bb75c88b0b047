#pragma once

#include <string>
#include <vector>

#include "flagwalk/flagmap.hpp"

namespace flagwalk {

enum class PairOrientation { Orientable, NonOrientable };

// A single polygon with its sides identified in pairs. Side p carries flags
// 2p (at corner p) and 2p+1 (at corner p+1). Orientable identification glues
// f(p, i) to f(p', 1-i); non-orientable glues f(p, i) to f(p', i).
struct PolygonGluing {
    int n_sides = 0;                          // even, >= 2
    std::vector<int> pairing;                 // fixed-point-free involution on sides
    std::vector<PairOrientation> orientation; // per side, equal across a pair
};

// Builds the one-face map of a gluing; throws MapError(invalid_map) with the
// validation report when the result breaks a map axiom.
FlagSystem glue(const PolygonGluing& p);

// 2n-gon with side p glued to side p+n: orientable for M_n, non-orientable
// for delta_n. Both have n edges and one face.
FlagSystem build_M(int n);
FlagSystem build_delta(int n);

// 2n-gon with sides alternately blue (even positions, edge x at position 2x)
// and yellow (odd positions, edge x+a+1 at position 2x+1), blue x glued
// orientably to yellow x. gcd(n,a) vertices of valence n/gcd(n,a) and
// gcd(n,a+1) of valence n/gcd(n,a+1).
FlagSystem build_H(int n, int a);

// Orientable map from a rotation system: sigma = next dart in rotation at
// the same vertex, theta = dart reversal. Dart d carries flags 2d and 2d+1.
FlagSystem from_rotation_system(const Permutation& sigma, const Permutation& theta);

// Hand-entered reference maps, stored as embedded mapfiles with checksums:
// "M12_7", "DM12_7", "cunningham", "tetrahedron", "pp_loop".
FlagSystem fixture(const std::string& name);
std::vector<std::string> fixture_names();
// The embedded mapfile text (what write_mapfile yields on the fixture).
std::string fixture_text(const std::string& name);

} // namespace flagwalk
