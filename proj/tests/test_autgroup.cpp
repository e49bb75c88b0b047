#include "doctest.h"
#include "flagwalk/autgroup.hpp"
#include "flagwalk/errors.hpp"
#include "flagwalk/families.hpp"
#include "test_util.hpp"

using namespace flagwalk;
using testutil::chiral_torus;

TEST_CASE("extend_automorphism") {
    FlagSystem tet = fixture("tetrahedron");
    auto id = extend_automorphism(tet, 5, 5);
    REQUIRE(id.has_value());
    CHECK(id->is_identity());

    // Full transitivity: every target extends (checked exhaustively).
    for (int t = 0; t < tet.n_flags; ++t) CHECK(extend_automorphism(tet, 0, t).has_value());

    // In a chiral map no flag reaches its 2-neighbour.
    FlagSystem ct = chiral_torus();
    CHECK_FALSE(extend_automorphism(ct, 0, ct.r2[0]).has_value());
    CHECK_FALSE(extend_automorphism(ct, 0, ct.r0[0]).has_value());
    CHECK_FALSE(extend_automorphism(ct, 0, ct.r1[0]).has_value());
}

TEST_CASE("automorphism groups of the fixtures") {
    // Reflexible: the group is as large as the flag set.
    AutGroup tet = automorphism_group(fixture("tetrahedron"));
    CHECK(tet.order() == 24);

    AutGroup pp = automorphism_group(fixture("pp_loop"));
    CHECK(pp.order() == 4);

    AutGroup m127 = automorphism_group(fixture("M12_7"));
    CHECK(m127.order() == 48);

    // Half-reflexible dual: two flag orbits of 24 on 48 flags.
    FlagSystem dh = dual(build_H(12, 3));
    AutGroup aut = automorphism_group(dh);
    CHECK(aut.order() == 24);
    CHECK(flag_orbits(dh, aut.elements).count() == 2);
}

TEST_CASE("group axioms and free action") {
    for (const auto& name : fixture_names()) {
        FlagSystem m = fixture(name);
        AutGroup aut = automorphism_group(m);
        CAPTURE(name);
        for (const auto& g : aut.elements) {
            CHECK(commutes_with_connections(m, g));
            if (!g.is_identity())
                for (int x = 0; x < m.n_flags; ++x) CHECK(g[x] != x);
            CHECK(std::find(aut.elements.begin(), aut.elements.end(), g.inverse()) !=
                  aut.elements.end());
        }
        // closure on a sample
        for (size_t i = 0; i < aut.elements.size(); i += 3)
            for (size_t j = 0; j < aut.elements.size(); j += 5)
                CHECK(std::find(aut.elements.begin(), aut.elements.end(),
                                compose(aut.elements[i], aut.elements[j])) != aut.elements.end());
        // orbits have equal size under a free action
        auto fo = flag_orbits(m, aut.elements);
        CHECK(aut.order() * fo.count() == m.n_flags);
    }
}

TEST_CASE("flag and dart orbits") {
    FlagSystem tet = fixture("tetrahedron");
    FaceStructure fs = face_structure(tet);
    AutGroup aut = automorphism_group(tet);
    CHECK(flag_orbits(tet, aut.elements).count() == 1);
    CHECK(is_dart_transitive(tet, fs, aut.elements));

    FlagSystem dh = dual(build_H(12, 3));
    FaceStructure dhfs = face_structure(dh);
    AutGroup dhaut = automorphism_group(dh);
    CHECK(flag_orbits(dh, dhaut.elements).count() == 2);
    CHECK(is_dart_transitive(dh, dhfs, dhaut.elements));

    auto trivial = resolve_subgroup(tet, aut,
                                    SubgroupSpec::custom_group({Permutation::identity(24)}));
    CHECK(flag_orbits(tet, trivial).count() == 24);
    CHECK_FALSE(is_dart_transitive(tet, fs, trivial));
}

TEST_CASE("symmetry classes") {
    CHECK(symmetry_class(fixture("tetrahedron")).cls == SymmetryClass::Reflexible);
    CHECK(symmetry_class(fixture("pp_loop")).cls == SymmetryClass::Reflexible);
    CHECK(symmetry_class(dual(build_H(12, 3))).cls == SymmetryClass::Class2_01);
    CHECK(symmetry_class(fixture("cunningham")).cls == SymmetryClass::Class2_01);
    CHECK(symmetry_class(chiral_torus()).cls == SymmetryClass::Chiral2);
    for (int n = 3; n <= 8; ++n)
        CHECK(symmetry_class(dual(build_M(n))).cls == SymmetryClass::Reflexible);
}

TEST_CASE("petrie swaps the symmetry classes 2 <-> 2_0 and 2_1 <-> 2_01") {
    CHECK(symmetry_class(petrie(chiral_torus())).cls == SymmetryClass::Class2_0);
    CHECK(symmetry_class(petrie(fixture("cunningham"))).cls == SymmetryClass::Class2_1);
    CHECK(symmetry_class(petrie(fixture("tetrahedron"))).cls == SymmetryClass::Reflexible);
    CHECK(symmetry_class(petrie(petrie(chiral_torus()))).cls == SymmetryClass::Chiral2);
}

TEST_CASE("rotation subgroup") {
    FlagSystem tet = fixture("tetrahedron");
    AutGroup aut = automorphism_group(tet);
    auto rot = rotation_subgroup(tet, aut);
    CHECK(rot.size() == 12); // index 2

    // two flag orbits under the rotations of a reflexible orientable map
    CHECK(flag_orbits(tet, rot).count() == 2);

    CHECK_THROWS_AS(rotation_subgroup(fixture("pp_loop"), automorphism_group(fixture("pp_loop"))),
                    MapError);
}

TEST_CASE("face-bipartite subgroup") {
    // D(M_n) is face-bipartite exactly for odd n.
    for (int n : {3, 5, 7}) {
        FlagSystem m = dual(build_M(n));
        AutGroup aut = automorphism_group(m);
        auto sub = face_bipartite_subgroup(m, aut);
        CHECK(static_cast<int>(sub.size()) * 2 == aut.order());
    }
    for (int n : {4, 6}) {
        FlagSystem m = dual(build_M(n));
        AutGroup aut = automorphism_group(m);
        CHECK_THROWS_AS(face_bipartite_subgroup(m, aut), MapError);
        CHECK_FALSE(is_face_bipartite(m, face_structure(m)));
    }
}

TEST_CASE("custom subgroup validation") {
    FlagSystem tet = fixture("tetrahedron");
    AutGroup aut = automorphism_group(tet);
    CHECK_THROWS_AS(resolve_subgroup(tet, aut, SubgroupSpec::custom_group({})), MapError);
    // missing identity
    CHECK_THROWS_AS(
        resolve_subgroup(tet, aut, SubgroupSpec::custom_group({aut.elements[1]})), MapError);
    // a permutation that is not an automorphism
    CHECK_THROWS_AS(resolve_subgroup(
                        tet, aut, SubgroupSpec::custom_group({Permutation::identity(24), tet.r0})),
                    MapError);
}

TEST_CASE("the dual shares the automorphism group element-for-element") {
    for (const auto& name : {"tetrahedron", "M12_7", "cunningham"}) {
        FlagSystem m = fixture(name);
        CAPTURE(name);
        CHECK(automorphism_group(m).elements == automorphism_group(dual(m)).elements);
        CHECK(automorphism_group(m).elements == automorphism_group(petrie(m)).elements);
    }
}

TEST_CASE("induced actions are homomorphisms") {
    FlagSystem m = fixture("M12_7");
    FaceStructure fs = face_structure(m);
    AutGroup aut = automorphism_group(m);
    for (size_t i = 0; i < aut.elements.size(); i += 7)
        for (size_t j = 0; j < aut.elements.size(); j += 5) {
            const auto& g = aut.elements[i];
            const auto& h = aut.elements[j];
            CHECK(induced_edge_action(fs, compose(g, h)) ==
                  compose(induced_edge_action(fs, g), induced_edge_action(fs, h)));
            CHECK(induced_vertex_action(fs, compose(g, h)) ==
                  compose(induced_vertex_action(fs, g), induced_vertex_action(fs, h)));
        }
}
