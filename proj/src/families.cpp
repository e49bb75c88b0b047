#include "flagwalk/families.hpp"

#include <array>
#include <cstdint>

#include "flagwalk/errors.hpp"

namespace flagwalk {

FlagSystem glue(const PolygonGluing& p) {
    const int s = p.n_sides;
    if (s < 2 || s % 2 != 0)
        throw MapError(Errc::bad_argument, "glue: side count must be even and positive");
    if (static_cast<int>(p.pairing.size()) != s ||
        static_cast<int>(p.orientation.size()) != s)
        throw MapError(Errc::bad_argument, "glue: pairing/orientation size mismatch");
    for (int i = 0; i < s; ++i) {
        int q = p.pairing[i];
        if (q < 0 || q >= s || q == i || p.pairing[q] != i)
            throw MapError(Errc::bad_argument, "glue: pairing is not a fixed-point-free involution");
        if (p.orientation[i] != p.orientation[q])
            throw MapError(Errc::bad_argument, "glue: pair members disagree on orientation");
    }

    const int n = 2 * s;
    std::vector<int> r0(n), r1(n), r2(n);
    for (int pos = 0; pos < s; ++pos) {
        r0[2 * pos] = 2 * pos + 1;
        r0[2 * pos + 1] = 2 * pos;
        int next = (pos + 1) % s;
        r1[2 * pos + 1] = 2 * next;
        r1[2 * next] = 2 * pos + 1;
        int q = p.pairing[pos];
        for (int c = 0; c < 2; ++c) {
            int cc = p.orientation[pos] == PairOrientation::Orientable ? 1 - c : c;
            r2[2 * pos + c] = 2 * q + cc;
        }
    }
    FlagSystem m{n, Permutation(std::move(r0)), Permutation(std::move(r1)),
                 Permutation(std::move(r2)), std::nullopt};
    ValidationReport rep = validate(m);
    if (!rep.ok())
        throw MapError(Errc::invalid_map, "glue: result violates map axioms: " + rep.summary());
    return m;
}

namespace {

FlagSystem opposite_sides(int n, PairOrientation orient, const std::string& name) {
    if (n < 2)
        throw MapError(Errc::bad_argument, "one-face family needs n >= 2");
    PolygonGluing p;
    p.n_sides = 2 * n;
    p.pairing.resize(2 * n);
    p.orientation.assign(2 * n, orient);
    for (int i = 0; i < 2 * n; ++i) p.pairing[i] = (i + n) % (2 * n);
    FlagSystem m = glue(p);
    m.name = name;
    return m;
}

} // namespace

FlagSystem build_M(int n) { return opposite_sides(n, PairOrientation::Orientable, "M_" + std::to_string(n)); }

FlagSystem build_delta(int n) {
    return opposite_sides(n, PairOrientation::NonOrientable, "delta_" + std::to_string(n));
}

FlagSystem build_H(int n, int a) {
    if (n < 1 || a < 0 || a >= n)
        throw MapError(Errc::bad_argument, "build_H: need n >= 1 and 0 <= a < n");
    PolygonGluing p;
    p.n_sides = 2 * n;
    p.pairing.assign(2 * n, -1);
    p.orientation.assign(2 * n, PairOrientation::Orientable);
    for (int x = 0; x < n; ++x) {
        int blue = 2 * x;
        int yellow = 2 * (((x - a - 1) % n + n) % n) + 1;
        p.pairing[blue] = yellow;
        p.pairing[yellow] = blue;
    }
    FlagSystem m = glue(p);
    m.name = "H_" + std::to_string(n) + "_" + std::to_string(a);
    return m;
}

FlagSystem from_rotation_system(const Permutation& sigma, const Permutation& theta) {
    const int d = sigma.size();
    if (theta.size() != d)
        throw MapError(Errc::bad_argument, "from_rotation_system: domain mismatch");
    if (!is_involution(theta) || !is_fixed_point_free(theta))
        throw MapError(Errc::bad_argument,
                       "from_rotation_system: reversal must be a fixed-point-free involution");
    const int n = 2 * d;
    std::vector<int> r0(n), r1(n), r2(n);
    Permutation sigma_inv = sigma.inverse();
    for (int x = 0; x < d; ++x) {
        r2[2 * x] = 2 * x + 1;
        r2[2 * x + 1] = 2 * x;
        r0[2 * x] = 2 * theta[x] + 1;
        r0[2 * x + 1] = 2 * theta[x];
        r1[2 * x] = 2 * sigma[x] + 1;
        r1[2 * x + 1] = 2 * sigma_inv[x];
    }
    FlagSystem m{n, Permutation(std::move(r0)), Permutation(std::move(r1)),
                 Permutation(std::move(r2)), std::nullopt};
    ValidationReport rep = validate(m);
    if (!rep.ok())
        throw MapError(Errc::invalid_map,
                       "from_rotation_system: result violates map axioms: " + rep.summary());
    return m;
}

// ---------------------------------------------------------------------------
// Embedded fixtures. Regenerate with tools/freeze_fixtures if the reference
// constructions change; checksums are FNV-1a over the mapfile bytes.
// ---------------------------------------------------------------------------

namespace {

struct EmbeddedFixture {
    const char* name;
    const char* text;
    std::uint64_t checksum;
};

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// Placeholders; frozen data is appended by the fixture generator.
#include "fixture_data.inc"

const EmbeddedFixture* find_fixture(const std::string& name) {
    for (const auto& f : kFixtures)
        if (name == f.name) return &f;
    return nullptr;
}

} // namespace

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& f : kFixtures) out.push_back(f.name);
    out.push_back("DM12_7");
    return out;
}

std::string fixture_text(const std::string& name) {
    if (name == "DM12_7") return write_mapfile(dual(fixture("M12_7")));
    const EmbeddedFixture* f = find_fixture(name);
    if (!f)
        throw MapError(Errc::bad_argument, "unknown fixture \"" + name + "\"");
    return f->text;
}

FlagSystem fixture(const std::string& name) {
    if (name == "DM12_7") return dual(fixture("M12_7"));
    const EmbeddedFixture* f = find_fixture(name);
    if (!f)
        throw MapError(Errc::bad_argument, "unknown fixture \"" + name + "\"");
    std::string text = f->text;
    if (fnv1a(text) != f->checksum)
        throw MapError(Errc::corrupt_fixture, "fixture \"" + name + "\" failed its checksum");
    return read_mapfile(text);
}

} // namespace flagwalk
