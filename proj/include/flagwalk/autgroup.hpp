#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagwalk/flagmap.hpp"
#include "flagwalk/perm.hpp"

namespace flagwalk {

// An automorphism is a flag permutation commuting with r0, r1 and r2.
using Automorphism = Permutation;

struct AutGroup {
    std::vector<Automorphism> elements; // ordered by image of base_flag
    int base_flag = 0;
    int order() const { return static_cast<int>(elements.size()); }
};

// The unique automorphism sending source to target, grown by propagating
// phi(x^{r_i}) = phi(x)^{r_i} from the seed pair; absent when the
// propagation contradicts itself.
std::optional<Automorphism> extend_automorphism(const FlagSystem& m, int source, int target);

// All automorphisms, obtained as the successful extensions base_flag -> t
// over every target t. The action on flags is free, so |Aut| = size of the
// base flag's orbit.
AutGroup automorphism_group(const FlagSystem& m);

bool commutes_with_connections(const FlagSystem& m, const Permutation& g);

enum class SubgroupKind { Full, Rotation, FaceBipartite, Custom };

struct SubgroupSpec {
    SubgroupKind kind = SubgroupKind::Full;
    std::vector<Automorphism> custom;

    static SubgroupSpec full() { return {SubgroupKind::Full, {}}; }
    static SubgroupSpec rotation() { return {SubgroupKind::Rotation, {}}; }
    static SubgroupSpec face_bipartite() { return {SubgroupKind::FaceBipartite, {}}; }
    static SubgroupSpec custom_group(std::vector<Automorphism> elems) {
        return {SubgroupKind::Custom, std::move(elems)};
    }
};

// Materializes the selected subgroup as an element list. Custom lists are
// checked: identity present, closed under composition, every element an
// automorphism.
std::vector<Automorphism> resolve_subgroup(const FlagSystem& m, const AutGroup& aut,
                                           const SubgroupSpec& spec);

// Orientation-preserving elements: those fixing the two orientation classes.
// Errors on non-orientable maps, where no such proper subgroup exists.
std::vector<Automorphism> rotation_subgroup(const FlagSystem& m, const AutGroup& aut);

// Proper 2-colouring of faces across edges; throws when the face-adjacency
// relation has a loop or an odd cycle.
std::vector<int> face_two_coloring(const FlagSystem& m, const FaceStructure& fs);
bool is_face_bipartite(const FlagSystem& m, const FaceStructure& fs);

// Stabilizer of the two face colour classes; index <= 2.
std::vector<Automorphism> face_bipartite_subgroup(const FlagSystem& m, const AutGroup& aut);

// Induced actions of an automorphism on the derived cell sets.
Permutation induced_vertex_action(const FaceStructure& fs, const Automorphism& g);
Permutation induced_edge_action(const FaceStructure& fs, const Automorphism& g);

OrbitPartition flag_orbits(const FlagSystem& m, const std::vector<Automorphism>& group);
OrbitPartition dart_orbits(const FlagSystem& m, const FaceStructure& fs,
                           const std::vector<Automorphism>& group);
bool is_dart_transitive(const FlagSystem& m, const FaceStructure& fs,
                        const std::vector<Automorphism>& group);

enum class SymmetryClass { Reflexible, Chiral2, Class2_0, Class2_1, Class2_01, NotDartTransitive };

std::string to_string(SymmetryClass c);

struct SymmetryReport {
    SymmetryClass cls = SymmetryClass::NotDartTransitive;
    int flag_orbit_count = 0;
};

// Dart-transitive maps are reflexible or fall in one of the four 2-orbit
// classes, decided by whether 0- and 1-neighbours share a flag orbit.
SymmetryReport symmetry_class(const FlagSystem& m, const FaceStructure& fs, const AutGroup& aut);
SymmetryReport symmetry_class(const FlagSystem& m);

} // namespace flagwalk
