#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "doctest.h"
#include "flagwalk/autgroup.hpp"
#include "flagwalk/classify.hpp"
#include "flagwalk/errors.hpp"
#include "flagwalk/families.hpp"
#include "flagwalk/walks.hpp"
#include "test_util.hpp"

using namespace flagwalk;

TEST_CASE("glue rejects degenerate and malformed gluings") {
    // A 2-gon with its sides identified orientably collapses r1 into r2.
    PolygonGluing digon;
    digon.n_sides = 2;
    digon.pairing = {1, 0};
    digon.orientation = {PairOrientation::Orientable, PairOrientation::Orientable};
    CHECK_THROWS_AS(glue(digon), MapError);

    PolygonGluing bad;
    bad.n_sides = 4;
    bad.pairing = {0, 1, 2, 3}; // fixed points
    bad.orientation.assign(4, PairOrientation::Orientable);
    CHECK_THROWS_AS(glue(bad), MapError);
}

TEST_CASE("glue always produces a single face") {
    for (int n = 2; n <= 8; ++n) {
        CHECK(face_structure(build_M(n)).F() == 1);
        CHECK(face_structure(build_delta(n)).F() == 1);
    }
    for (int n = 4; n <= 9; ++n)
        for (int a = 1; a + 1 < n; ++a) {
            FlagSystem h;
            try {
                h = build_H(n, a);
            } catch (const MapError&) {
                continue;
            }
            CHECK(face_structure(h).F() == 1);
        }
}

TEST_CASE("the two opposite-side families differ by orientability") {
    for (int n = 2; n <= 10; ++n) {
        FlagSystem m = build_M(n);
        FlagSystem d = build_delta(n);
        CAPTURE(n);
        CHECK(is_orientable(m));
        CHECK_FALSE(is_orientable(d));
        FaceStructure mfs = face_structure(m), dfs = face_structure(d);
        CHECK(mfs.E() == n);
        CHECK(mfs.F() == 1);
        CHECK(dfs.E() == n);
        CHECK(dfs.F() == 1);
        CHECK(dfs.V() == n); // n valence-2 vertices on the projective plane
        CHECK(euler_characteristic(dfs) == 1);
    }
}

TEST_CASE("duals of the orientable one-face maps are reflexible") {
    for (int n = 3; n <= 8; ++n)
        CHECK(symmetry_class(dual(build_M(n))).cls == SymmetryClass::Reflexible);
}

TEST_CASE("H(12,3) vertex structure") {
    FlagSystem h = build_H(12, 3);
    FaceStructure fs = face_structure(h);
    CHECK(fs.V() == 7);
    CHECK(fs.E() == 12);
    CHECK(fs.F() == 1);
    int val3 = 0, val4 = 0;
    for (int v : fs.vertex_valence) {
        if (v == 3) ++val3;
        if (v == 4) ++val4;
    }
    CHECK(val4 == 3); // gcd(12,3) vertices of valence 12/gcd(12,3)
    CHECK(val3 == 4); // gcd(12,4) vertices of valence 12/gcd(12,4)
}

TEST_CASE("H family identities") {
    for (int n = 4; n <= 10; ++n) {
        for (int a = 0; a < n; ++a) {
            FlagSystem h;
            try {
                h = build_H(n, a);
            } catch (const MapError&) {
                continue;
            }
            CAPTURE(n);
            CAPTURE(a);
            CHECK(are_isomorphic(h, build_H(n, n - 1 - a)).has_value());
            if (2 * a + 1 == n) CHECK(are_isomorphic(h, build_M(n)).has_value());

            FaceStructure fs = face_structure(h);
            std::multiset<int> got(fs.vertex_valence.begin(), fs.vertex_valence.end()), want;
            for (int i = 0; i < std::gcd(n, a); ++i) want.insert(static_cast<int>(order_mod(a, n)));
            for (int i = 0; i < std::gcd(n, a + 1); ++i)
                want.insert(static_cast<int>(order_mod(a + 1, n)));
            CHECK(got == want);
        }
    }
}

TEST_CASE("half-reflexible duals of H and their dihedral group order") {
    FlagSystem m = dual(build_H(12, 3));
    AutGroup aut = automorphism_group(m);
    CHECK(symmetry_class(m).cls == SymmetryClass::Class2_01);
    // rotation of order 12 plus a reflection: 24 elements, half the flags
    CHECK(aut.order() == 24);
    CHECK(2 * aut.order() == m.n_flags);
}

TEST_CASE("rotation-system construction") {
    FlagSystem ct = testutil::chiral_torus();
    FaceStructure fs = face_structure(ct);
    CHECK(fs.V() == 5);
    CHECK(fs.E() == 10);
    CHECK(fs.F() == 5);
    CHECK(is_orientable(ct));
    CHECK(euler_characteristic(fs) == 0);

    CHECK_THROWS_AS(
        from_rotation_system(Permutation::identity(2), Permutation::identity(2)), MapError);
}

TEST_CASE("fixtures load, verify, and match the exported files") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        FlagSystem m = fixture(name);
        CHECK(validate(m).ok());

        std::ifstream f(std::string(FLAGWALK_FIXTURES_DIR) + "/" + name + ".map");
        REQUIRE(f.good());
        std::ostringstream os;
        os << f.rdbuf();
        std::string file_text = os.str();
        if (!file_text.empty() && file_text.back() == '\n') file_text.pop_back();
        CHECK(file_text == fixture_text(name));
        CHECK(file_text == write_mapfile(m));
    }
    CHECK_THROWS_AS(fixture("nonesuch"), MapError);
}

TEST_CASE("the dual fixture is byte-identical to applying the operator") {
    CHECK(write_mapfile(fixture("DM12_7")) == write_mapfile(dual(fixture("M12_7"))));
}

TEST_CASE("pp_loop is exactly the documented four-flag system") {
    FlagSystem pp = fixture("pp_loop");
    CHECK(pp.n_flags == 4);
    CHECK(pp.r0 == Permutation({1, 0, 3, 2}));
    CHECK(pp.r1 == Permutation({3, 2, 1, 0}));
    CHECK(pp.r2 == Permutation({2, 3, 0, 1}));
}

TEST_CASE("one-face map fixture gates") {
    FlagSystem m = fixture("M12_7");
    CHECK(symmetry_class(m).cls == SymmetryClass::Reflexible);
    FlagSystem gc = fixture("cunningham");
    CHECK(symmetry_class(gc).cls == SymmetryClass::Class2_01);
    CHECK(is_orientable(gc));
}

TEST_CASE("the dual of the non-orientable family is the petrie of the orientable one") {
    for (int n = 3; n <= 8; ++n)
        CHECK(are_isomorphic(dual(build_delta(n)), petrie(dual(build_M(n)))).has_value());
}

namespace {

// Edge labels carried from the gluing layout to the dual (edge ids agree
// between a map and its dual): side p of the polygon holds flags 2p, 2p+1.
// In build_M, edge x consists of sides x and x+n; in build_H, side 2x is the
// blue side of edge x.
std::vector<int> m_edge_labels(const FaceStructure& fs, int n) {
    std::vector<int> label(fs.E(), -1);
    for (int x = 0; x < n; ++x) label[fs.edge_of(2 * x)] = x;
    return label;
}

std::vector<int> h_edge_labels(const FaceStructure& fs, int n) {
    std::vector<int> label(fs.E(), -1);
    for (int x = 0; x < n; ++x) label[fs.edge_of(4 * x)] = x;
    return label;
}

int norm_mod(int x, int n) { return ((x % n) + n) % n; }

// The constant label step of a walk's edge sequence, or -1.
int circuit_step(const std::vector<int>& labels, const FaceStructure& fs, const FlagWalk& w,
                 int n) {
    if (w.length() < 2) return 0;
    int step = norm_mod(labels[fs.edge_of(w.flags[1])] - labels[fs.edge_of(w.flags[0])], n);
    for (int i = 0; i + 1 < w.length(); ++i) {
        int d = norm_mod(labels[fs.edge_of(w.flags[i + 1])] - labels[fs.edge_of(w.flags[i])], n);
        if (d != step) return -1;
    }
    return step;
}

} // namespace

TEST_CASE("circuit oracle on the one-vertex duals of M_n") {
    for (int n = 3; n <= 8; ++n) {
        FlagSystem m = dual(build_M(n));
        FaceStructure fs = face_structure(m);
        AutGroup aut = automorphism_group(m);
        auto labels = m_edge_labels(fs, n);
        CAPTURE(n);
        for (const auto& r : enumerate_consistent_orbits(m, fs, aut.elements).rows) {
            int step = circuit_step(labels, fs, r.representative, n);
            REQUIRE(step >= 0);
            if (r.kind == WalkKindTag::Hole) {
                // edge sequence i, i+j, i+2j, ... (mod n), one direction
                CHECK((step == norm_mod(r.j, n) || step == norm_mod(-r.j, n)));
                CHECK(r.length == order_mod(r.j + n, 2 * n));
            } else if (!r.line) {
                CHECK(r.length == 2);
                CHECK((step == norm_mod(r.j, n) || step == norm_mod(-r.j, n)));
            }
        }
    }
}

TEST_CASE("circuit oracle on the one-vertex duals of H(n,a)") {
    for (auto [n, a] : {std::pair{12, 3}, std::pair{10, 3}}) {
        FlagSystem m = dual(build_H(n, a));
        FaceStructure fs = face_structure(m);
        AutGroup aut = automorphism_group(m);
        auto labels = h_edge_labels(fs, n);
        CAPTURE(n);
        CAPTURE(a);
        std::map<int, std::set<int>> hole_steps; // j -> normalized steps seen
        for (const auto& r : enumerate_consistent_orbits(m, fs, aut.elements).rows) {
            int step = circuit_step(labels, fs, r.representative, n);
            REQUIRE(step >= 0);
            if (r.kind == WalkKindTag::Hole) {
                int k = (r.j - 1) / 2;
                // one colour steps by a-k, the other by a+k+1
                int s1 = norm_mod(a - k, n), s2 = norm_mod(a + k + 1, n);
                bool matches = step == s1 || step == norm_mod(-s1, n) || step == s2 ||
                               step == norm_mod(-s2, n);
                CHECK(matches);
                CHECK((r.length == order_mod(a - k, n) || r.length == order_mod(a + k + 1, n)));
                hole_steps[r.j].insert(std::min(step, norm_mod(-step, n)));
            } else {
                int k = r.j / 2;
                CHECK(r.length == 2);
                CHECK((step == norm_mod(k, n) || step == norm_mod(-k, n)));
            }
        }
        // both colours appear for every odd j unless the steps coincide
        for (const auto& [j, steps] : hole_steps) {
            int k = (j - 1) / 2;
            int s1 = std::min(norm_mod(a - k, n), norm_mod(-(a - k), n));
            int s2 = std::min(norm_mod(a + k + 1, n), norm_mod(-(a + k + 1), n));
            CHECK(steps == (s1 == s2 ? std::set<int>{s1} : std::set<int>{s1, s2}));
        }
    }
}

TEST_CASE("dipole-traced holes have bead spacing gcd(q, j)") {
    for (const auto& name : fixture_names()) {
        FlagSystem m = fixture(name);
        FaceStructure fs = face_structure(m);
        if (!fs.equivelar || fs.V() < 2) continue;
        AutGroup aut = automorphism_group(m);
        if (!is_dart_transitive(m, fs, aut.elements)) continue;
        for (const auto& r : enumerate_consistent_orbits(m, fs, aut.elements).rows) {
            if (r.kind != WalkKindTag::Hole) continue;
            EdgeVisitTrace t = trace(m, fs, r.representative);
            if (t.closure != ProofCase::Dipole02) continue;
            auto bead = is_bead(m, fs, t);
            REQUIRE(bead.has_value());
            CHECK(bead->d == std::gcd(fs.valence, r.j));
        }
    }
}
