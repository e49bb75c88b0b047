#include "flagwalk/autgroup.hpp"

#include <algorithm>
#include <cassert>

#include "flagwalk/errors.hpp"
#include "flagwalk/parallel.hpp"

namespace flagwalk {

std::optional<Automorphism> extend_automorphism(const FlagSystem& m, int source, int target) {
    const int n = m.n_flags;
    if (source < 0 || source >= n || target < 0 || target >= n)
        throw MapError(Errc::bad_argument, "extend_automorphism: flag out of range");
    std::vector<int> phi(n, -1);
    phi[source] = target;
    std::vector<int> stack{source};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int i = 0; i < 3; ++i) {
            int y = m.r(i)[x];
            int img = m.r(i)[phi[x]];
            if (phi[y] < 0) {
                phi[y] = img;
                stack.push_back(y);
            } else if (phi[y] != img) {
                return std::nullopt;
            }
        }
    }
    // Transitivity assigns every flag; a consistent assignment is forced to
    // be a bijection, which the Permutation constructor re-checks.
    if (std::find(phi.begin(), phi.end(), -1) != phi.end()) return std::nullopt;
    return Permutation(std::move(phi));
}

AutGroup automorphism_group(const FlagSystem& m) {
    const int n = m.n_flags;
    std::vector<std::optional<Automorphism>> found(n);
    parallel_for(n, [&](int t) { found[t] = extend_automorphism(m, 0, t); });
    AutGroup g;
    g.base_flag = 0;
    for (auto& f : found)
        if (f) g.elements.push_back(std::move(*f));
    return g;
}

bool commutes_with_connections(const FlagSystem& m, const Permutation& g) {
    if (g.size() != m.n_flags) return false;
    for (int i = 0; i < 3; ++i) {
        const Permutation& r = m.r(i);
        for (int x = 0; x < m.n_flags; ++x)
            if (g[r[x]] != r[g[x]]) return false;
    }
    return true;
}

std::vector<Automorphism> rotation_subgroup(const FlagSystem& m, const AutGroup& aut) {
    auto colour = orientation_classes(m);
    if (colour.empty())
        throw MapError(Errc::not_orientable,
                       "rotation subgroup requested on a non-orientable map");
    std::vector<Automorphism> out;
    for (const auto& g : aut.elements)
        if (colour[g[aut.base_flag]] == colour[aut.base_flag]) out.push_back(g);
    return out;
}

std::vector<int> face_two_coloring(const FlagSystem& m, const FaceStructure& fs) {
    std::vector<std::vector<int>> adj(fs.F());
    for (int x = 0; x < m.n_flags; ++x) {
        int a = fs.face_of(x), b = fs.face_of(m.r2[x]);
        if (a == b)
            throw MapError(Errc::not_face_bipartite,
                           "face adjacent to itself across an edge");
        adj[a].push_back(b);
    }
    std::vector<int> colour(fs.F(), -1);
    colour[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int g : adj[f]) {
            if (colour[g] < 0) {
                colour[g] = 1 - colour[f];
                stack.push_back(g);
            } else if (colour[g] == colour[f]) {
                throw MapError(Errc::not_face_bipartite, "faces admit no proper 2-colouring");
            }
        }
    }
    return colour;
}

bool is_face_bipartite(const FlagSystem& m, const FaceStructure& fs) {
    try {
        face_two_coloring(m, fs);
        return true;
    } catch (const MapError&) {
        return false;
    }
}

std::vector<Automorphism> face_bipartite_subgroup(const FlagSystem& m, const AutGroup& aut) {
    FaceStructure fs = face_structure(m);
    auto colour = face_two_coloring(m, fs);
    std::vector<Automorphism> out;
    for (const auto& g : aut.elements) {
        int f0 = fs.face_of(aut.base_flag);
        int f1 = fs.face_of(g[aut.base_flag]);
        if (colour[f0] == colour[f1]) out.push_back(g);
    }
    return out;
}

std::vector<Automorphism> resolve_subgroup(const FlagSystem& m, const AutGroup& aut,
                                           const SubgroupSpec& spec) {
    switch (spec.kind) {
        case SubgroupKind::Full:
            return aut.elements;
        case SubgroupKind::Rotation:
            return rotation_subgroup(m, aut);
        case SubgroupKind::FaceBipartite:
            return face_bipartite_subgroup(m, aut);
        case SubgroupKind::Custom:
            break;
    }
    const auto& elems = spec.custom;
    if (elems.empty())
        throw MapError(Errc::bad_argument, "custom subgroup: empty element list");
    bool has_identity = false;
    for (const auto& g : elems) {
        if (!commutes_with_connections(m, g))
            throw MapError(Errc::bad_argument, "custom subgroup: element is not an automorphism");
        if (g.is_identity()) has_identity = true;
    }
    if (!has_identity)
        throw MapError(Errc::bad_argument, "custom subgroup: identity missing");
    for (const auto& a : elems)
        for (const auto& b : elems)
            if (std::find(elems.begin(), elems.end(), compose(a, b)) == elems.end())
                throw MapError(Errc::bad_argument, "custom subgroup: not closed under composition");
    return elems;
}

Permutation induced_vertex_action(const FaceStructure& fs, const Automorphism& g) {
    std::vector<int> img(fs.V());
    for (int v = 0; v < fs.V(); ++v)
        img[v] = fs.vertex_of(g[fs.vertices.orbits[v].front()]);
    return Permutation(std::move(img));
}

Permutation induced_edge_action(const FaceStructure& fs, const Automorphism& g) {
    std::vector<int> img(fs.E());
    for (int e = 0; e < fs.E(); ++e)
        img[e] = fs.edge_of(g[fs.edges.orbits[e].front()]);
    return Permutation(std::move(img));
}

OrbitPartition flag_orbits(const FlagSystem& m, const std::vector<Automorphism>& group) {
    return orbits_under(group, m.n_flags);
}

OrbitPartition dart_orbits(const FlagSystem& m, const FaceStructure& fs,
                           const std::vector<Automorphism>& group) {
    (void)m;
    std::vector<Permutation> dart_perms;
    dart_perms.reserve(group.size());
    for (const auto& g : group) {
        std::vector<int> img(fs.D());
        for (int d = 0; d < fs.D(); ++d)
            img[d] = fs.dart_of(g[fs.darts.orbits[d].front()]);
        dart_perms.emplace_back(std::move(img));
    }
    return orbits_under(dart_perms, fs.D());
}

bool is_dart_transitive(const FlagSystem& m, const FaceStructure& fs,
                        const std::vector<Automorphism>& group) {
    return dart_orbits(m, fs, group).count() == 1;
}

std::string to_string(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::Reflexible: return "reflexible";
        case SymmetryClass::Chiral2: return "2";
        case SymmetryClass::Class2_0: return "2_0";
        case SymmetryClass::Class2_1: return "2_1";
        case SymmetryClass::Class2_01: return "2_01";
        case SymmetryClass::NotDartTransitive: return "not_dart_transitive";
    }
    return "?";
}

SymmetryReport symmetry_class(const FlagSystem& m, const FaceStructure& fs, const AutGroup& aut) {
    auto fo = flag_orbits(m, aut.elements);
    if (dart_orbits(m, fs, aut.elements).count() != 1)
        return {SymmetryClass::NotDartTransitive, fo.count()};
    if (fo.count() == 1) return {SymmetryClass::Reflexible, 1};
    assert(fo.count() == 2);
    auto same = [&](int x, int y) { return fo.orbit_id[x] == fo.orbit_id[y]; };
    bool n0 = same(0, m.r0[0]);
    bool n1 = same(0, m.r1[0]);
#ifndef NDEBUG
    for (int x = 0; x < m.n_flags; ++x) {
        assert(same(x, m.r0[x]) == n0);
        assert(same(x, m.r1[x]) == n1);
        assert(!same(x, m.r2[x]));
    }
#endif
    if (n0 && n1) return {SymmetryClass::Class2_01, 2};
    if (n0) return {SymmetryClass::Class2_0, 2};
    if (n1) return {SymmetryClass::Class2_1, 2};
    return {SymmetryClass::Chiral2, 2};
}

SymmetryReport symmetry_class(const FlagSystem& m) {
    FaceStructure fs = face_structure(m);
    AutGroup aut = automorphism_group(m);
    return symmetry_class(m, fs, aut);
}

} // namespace flagwalk
