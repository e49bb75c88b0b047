#include "flagwalk/walks.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

#include "flagwalk/errors.hpp"

namespace flagwalk {

std::string to_string(WalkKindTag t) { return t == WalkKindTag::Hole ? "hole" : "petrie"; }

namespace {

void require_equivelar(const FaceStructure& fs) {
    if (!fs.equivelar)
        throw MapError(Errc::not_equivelar, "operation requires all vertices of equal valence");
}

void require_j(const FaceStructure& fs, int j) {
    if (j < 1 || j >= fs.valence)
        throw MapError(Errc::bad_argument,
                       "j must lie in 1.." + std::to_string(fs.valence - 1));
}

bool cyclically_equal(const std::vector<int>& a, const std::vector<int>& b) {
    const int n = static_cast<int>(a.size());
    if (n != static_cast<int>(b.size())) return false;
    for (int r = 0; r < n; ++r) {
        if (b[r] != a[0]) continue;
        bool match = true;
        for (int i = 1; i < n && match; ++i)
            if (a[i] != b[(r + i) % n]) match = false;
        if (match) return true;
    }
    return false;
}

} // namespace

Permutation hole_permutation(const FlagSystem& m, const FaceStructure& fs, int j) {
    require_equivelar(fs);
    require_j(fs, j);
    Permutation p = compose(m.r0, m.r1);
    const Permutation turn = compose(m.r2, m.r1);
    for (int i = 1; i < j; ++i) p = compose(p, turn);
    return p;
}

Permutation petrie_permutation(const FlagSystem& m, const FaceStructure& fs, int j) {
    require_equivelar(fs);
    require_j(fs, j);
    Permutation p = m.r0;
    const Permutation turn = compose(m.r2, m.r1);
    for (int i = 0; i < j; ++i) p = compose(p, turn);
    return p;
}

Permutation walk_permutation(const FlagSystem& m, const FaceStructure& fs, WalkKind kind) {
    return kind.tag == WalkKindTag::Hole ? hole_permutation(m, fs, kind.j)
                                         : petrie_permutation(m, fs, kind.j);
}

FlagWalk walk_at(const FlagSystem& m, const FaceStructure& fs, int flag, WalkKind kind) {
    if (flag < 0 || flag >= m.n_flags)
        throw MapError(Errc::bad_argument, "walk_at: flag out of range");
    FlagWalk w;
    w.base = flag;
    w.kind = kind;
    w.flags = cycle_of(walk_permutation(m, fs, kind), flag);
    return w;
}

FlagWalk partner(const FlagSystem& m, const FaceStructure& fs, const FlagWalk& w) {
    require_equivelar(fs);
    FlagWalk p;
    p.kind = {w.kind.tag, fs.valence - w.kind.j};
    p.flags.reserve(w.flags.size());
    for (int f : w.flags) p.flags.push_back(m.r2[f]);
    p.base = p.flags.empty() ? -1 : p.flags.front();
    return p;
}

FlagWalk reverse(const FlagSystem& m, const FlagWalk& w) {
    FlagWalk r;
    r.kind = w.kind;
    r.flags.reserve(w.flags.size());
    for (auto it = w.flags.rbegin(); it != w.flags.rend(); ++it) {
        int f = m.r0[*it];
        if (w.kind.tag == WalkKindTag::Petrie) f = m.r2[f];
        r.flags.push_back(f);
    }
    r.base = r.flags.empty() ? -1 : r.flags.front();
    return r;
}

std::optional<Automorphism> consistency(const FlagSystem& m, const FlagWalk& w,
                                        const std::vector<Automorphism>& group) {
    if (w.flags.empty()) return std::nullopt;
    const int len = w.length();
    int successor = w.flags[1 % len];
    auto candidate = extend_automorphism(m, w.base, successor);
    if (!candidate) return std::nullopt;
    if (std::find(group.begin(), group.end(), *candidate) == group.end()) return std::nullopt;
    // Free action forces the candidate's order to equal the closing length.
    if (order(*candidate) != len) return std::nullopt;
#ifndef NDEBUG
    for (int i = 0; i < len; ++i)
        assert((*candidate)[w.flags[i]] == w.flags[(i + 1) % len]);
#endif
    return candidate;
}

bool is_symmetric_walk(const FlagSystem& m, const FaceStructure& fs, const FlagWalk& w,
                       const std::vector<Automorphism>& group) {
    std::vector<std::vector<int>> targets;
    targets.push_back(reverse(m, w).flags);
    if (w.kind.tag == WalkKindTag::Hole && fs.equivelar && 2 * w.kind.j == fs.valence)
        targets.push_back(reverse(m, partner(m, fs, w)).flags);
    std::vector<int> image(w.flags.size());
    for (const auto& g : group) {
        for (size_t i = 0; i < w.flags.size(); ++i) image[i] = g[w.flags[i]];
        for (const auto& t : targets)
            if (cyclically_equal(image, t)) return true;
    }
    return false;
}

std::vector<int> edge_set_of(const FaceStructure& fs, const FlagWalk& w) {
    std::vector<int> edges;
    edges.reserve(w.flags.size());
    for (int f : w.flags) edges.push_back(fs.edge_of(f));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

bool is_line(const FlagSystem& m, const FaceStructure& fs, const FlagWalk& w) {
    require_equivelar(fs);
    if (fs.valence % 2 != 0 || 2 * w.kind.j != fs.valence) return false;
    auto hole = edge_set_of(fs, walk_at(m, fs, w.base, {WalkKindTag::Hole, w.kind.j}));
    auto pet = edge_set_of(fs, walk_at(m, fs, w.base, {WalkKindTag::Petrie, w.kind.j}));
    return hole == pet;
}

WalkOrbitReport enumerate_consistent_orbits(const FlagSystem& m, const FaceStructure& fs,
                                            const std::vector<Automorphism>& group) {
    require_equivelar(fs);
    if (!is_dart_transitive(m, fs, group))
        throw MapError(Errc::not_dart_transitive,
                       "consistent-walk enumeration requires a dart-transitive subgroup");
    const int q = fs.valence;
    WalkOrbitReport report;
    report.valence = q;
    report.group_order = static_cast<int>(group.size());
    auto fo = flag_orbits(m, group);

    std::vector<Permutation> edge_actions;
    edge_actions.reserve(group.size());
    for (const auto& g : group) edge_actions.push_back(induced_edge_action(fs, g));

    for (int orbit = 0; orbit < fo.count(); ++orbit) {
        int rep = fo.orbits[orbit].front();
        for (int j = 1; j < q; ++j) {
            for (WalkKindTag tag : {WalkKindTag::Hole, WalkKindTag::Petrie}) {
                FlagWalk w = walk_at(m, fs, rep, {tag, j});
                auto shunt = consistency(m, w, group);
                if (!shunt) continue;
                w.shunt = shunt;

                Permutation gamma = walk_permutation(m, fs, w.kind);
                if (order(gamma) != w.length()) {
                    std::ostringstream os;
                    os << "j=" << j << " " << to_string(tag) << ": cycle length " << w.length()
                       << " at flag " << rep << " differs from permutation order "
                       << order(gamma);
                    report.notes.push_back(os.str());
                }

                std::set<std::vector<int>> edge_sets;
                auto base_set = edge_set_of(fs, w);
                for (const auto& ea : edge_actions) {
                    std::vector<int> img;
                    img.reserve(base_set.size());
                    for (int e : base_set) img.push_back(ea[e]);
                    std::sort(img.begin(), img.end());
                    edge_sets.insert(std::move(img));
                }

                WalkOrbitRow row;
                row.flag_orbit = orbit;
                row.j = j;
                row.kind = tag;
                row.length = w.length();
                row.symmetric = is_symmetric_walk(m, fs, w, group);
                row.line = is_line(m, fs, w);
                row.orbit_size = static_cast<int>(edge_sets.size());
                row.representative = std::move(w);
                report.rows.push_back(std::move(row));
            }
        }
    }

    std::sort(report.rows.begin(), report.rows.end(), [](const auto& a, const auto& b) {
        if (a.flag_orbit != b.flag_orbit) return a.flag_orbit < b.flag_orbit;
        if (a.j != b.j) return a.j < b.j;
        return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    });

    if (static_cast<int>(report.rows.size()) != 2 * (q - 1)) {
        std::ostringstream os;
        os << "consistent-walk orbit count " << report.rows.size() << " != 2(q-1) = "
           << 2 * (q - 1) << " (q = " << q << ", group order " << group.size() << ")";
        throw TheoremViolation(os.str());
    }
    return report;
}

} // namespace flagwalk
