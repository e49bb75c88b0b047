#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flagwalk/perm.hpp"

namespace flagwalk {

// A map on a surface given by its flag set {0,...,n_flags-1} and the three
// connection involutions. r0 changes the vertex of a flag, r1 the edge, r2
// the face.
struct FlagSystem {
    int n_flags = 0;
    Permutation r0, r1, r2;
    std::optional<std::string> name;

    const Permutation& r(int i) const { return i == 0 ? r0 : i == 1 ? r1 : r2; }
};

struct Violation {
    std::string axiom;   // short code, e.g. "r1-fixed-point"
    int witness = -1;    // a flag witnessing the violation, or -1
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

// Checks all map axioms and reports every violated one with a witness flag:
// each r_i a fixed-point-free involution, (r0 r2)^2 = id, transitivity of
// <r0,r1,r2>, and distinctness of the three neighbours of every flag.
ValidationReport validate(const FlagSystem& m);

// Vertices, edges, faces and darts as orbit partitions of the flag set.
// Ids are assigned by least contained flag.
struct FaceStructure {
    OrbitPartition vertices, edges, faces, darts;
    std::vector<int> vertex_valence; // per vertex id; |orbit| / 2
    bool equivelar = false;
    int valence = -1; // common valence q when equivelar

    int V() const { return vertices.count(); }
    int E() const { return edges.count(); }
    int F() const { return faces.count(); }
    int D() const { return darts.count(); }
    int vertex_of(int flag) const { return vertices.orbit_id[flag]; }
    int edge_of(int flag) const { return edges.orbit_id[flag]; }
    int face_of(int flag) const { return faces.orbit_id[flag]; }
    int dart_of(int flag) const { return darts.orbit_id[flag]; }
};

FaceStructure face_structure(const FlagSystem& m);

struct SkeletonDart {
    int initial_vertex = -1;
    int terminal_vertex = -1;
    int reverse = -1; // dart id
    int edge = -1;    // parent edge id
};

// The underlying pseudograph: one entry per dart id of the face structure.
struct Skeleton {
    std::vector<SkeletonDart> darts;
    int n_vertices = 0;
    bool sequential(int d1, int d2) const {
        return d2 != darts[d1].reverse && darts[d1].terminal_vertex == darts[d2].initial_vertex;
    }
};

Skeleton skeleton(const FlagSystem& m, const FaceStructure& fs);

// A map is orientable iff its flags admit a 2-colouring swapped by every
// connection. Returns the colour classes, or an empty vector when the
// parity propagation meets a contradiction.
std::vector<int> orientation_classes(const FlagSystem& m);
bool is_orientable(const FlagSystem& m);

int euler_characteristic(const FlagSystem& m);
int euler_characteristic(const FaceStructure& fs);

struct GenusReport {
    int chi = 0;
    bool orientable = false;
    int genus = 0;   // orientable genus when orientable
    int crosscap = 0; // crosscap number otherwise
};

GenusReport genus_report(const FlagSystem& m);
GenusReport genus_report(const FlagSystem& m, const FaceStructure& fs);

// All d in 1..q-1 such that some flag of (v, e) reaches edge e2 after d
// face-rotation steps about v. Both e and e2 must be incident to v.
std::set<int> subtend(const FlagSystem& m, const FaceStructure& fs, int v, int e, int e2);

// (F, r2, r1, r0); swaps vertices and faces.
FlagSystem dual(const FlagSystem& m);
// (F, r0 r2, r1, r2); faces become Petrie polygons.
FlagSystem petrie(const FlagSystem& m);

// A flag bijection phi with phi(x^{r_i(a)}) = phi(x)^{r_i(b)}, found by
// anchoring flag 0 of a to every flag of b; flag i of a corresponds to flag
// phi[i] of b. Deterministic: the least admissible anchor wins.
std::optional<Permutation> are_isomorphic(const FlagSystem& a, const FlagSystem& b);

// Mapfile v1: {"flags":n,"r0":[...],"r1":[...],"r2":[...],"name":...}
// with keys in exactly that order, no extra keys, compact whitespace.
// read_mapfile additionally runs validate() and throws on axiom violations;
// the _unchecked variant performs structural checks only.
FlagSystem read_mapfile(const std::string& text);
FlagSystem read_mapfile_unchecked(const std::string& text);
std::string write_mapfile(const FlagSystem& m);

} // namespace flagwalk
