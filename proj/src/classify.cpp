#include "flagwalk/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "flagwalk/errors.hpp"

namespace flagwalk {

std::string to_string(ProofCase c) {
    switch (c) {
        case ProofCase::Circuit: return "circuit";
        case ProofCase::Dipole02: return "dipole";
        case ProofCase::Line2: return "line-double";
        case ProofCase::Forbidden0: return "forbidden";
        case ProofCase::Other: return "other";
    }
    return "?";
}

std::string to_string(PrimaryLabel p) {
    switch (p) {
        case PrimaryLabel::None: return "none";
        case PrimaryLabel::Cycle: return "cycle";
        case PrimaryLabel::Bead: return "bead";
        case PrimaryLabel::Bracelet: return "bracelet";
        case PrimaryLabel::Twining: return "twining";
    }
    return "?";
}

std::vector<std::string> EdgeSetClassification::labels() const {
    std::vector<std::string> out;
    if (cycle) out.push_back("cycle");
    if (bead) out.push_back("bead");
    if (bracelet) out.push_back("bracelet");
    if (twining) out.push_back("twining");
    return out;
}

EdgeVisitTrace trace(const FlagSystem& m, const FaceStructure& fs, const FlagWalk& w) {
    EdgeVisitTrace t;
    t.edges.reserve(w.flags.size());
    t.vertices.reserve(w.flags.size());
    for (int f : w.flags) {
        t.edges.push_back(fs.edge_of(f));
        t.vertices.push_back(fs.vertex_of(f));
        ++t.multiplicity[fs.edge_of(f)];
    }
    t.distinct_edges = static_cast<int>(t.multiplicity.size());
    const int len = w.length();
    int after = w.flags[t.distinct_edges % len];
    int base = w.flags[0];
    if (after == base)
        t.closure = ProofCase::Circuit;
    else if (after == m.r2[m.r0[base]])
        t.closure = ProofCase::Dipole02;
    else if (after == m.r2[base])
        t.closure = ProofCase::Line2;
    else if (after == m.r0[base])
        t.closure = ProofCase::Forbidden0;
    else
        t.closure = ProofCase::Other;
    return t;
}

namespace {

// Endpoint pair of an edge, or empty for a loop.
std::optional<std::pair<int, int>> endpoints(const FaceStructure& fs, int e) {
    std::set<int> vs;
    for (int f : fs.edges.orbits[e]) vs.insert(fs.vertex_of(f));
    if (vs.size() != 2) return std::nullopt;
    auto it = vs.begin();
    int u = *it++;
    return std::make_pair(u, *it);
}

// Edges around v in rotation order: one full (r1 r2)-cycle of length q.
std::vector<int> rotation_edges(const FlagSystem& m, const FaceStructure& fs, int v) {
    int start = fs.vertices.orbits[v].front();
    std::vector<int> rot;
    rot.reserve(fs.vertex_valence[v]);
    int y = start;
    do {
        rot.push_back(fs.edge_of(y));
        y = m.r2[m.r1[y]];
    } while (y != start);
    return rot;
}

// Gap when the edges sit equally spaced in v's rotation; -1 otherwise.
int spacing_at(const FlagSystem& m, const FaceStructure& fs, int v,
               const std::vector<int>& edges) {
    auto rot = rotation_edges(m, fs, v);
    const int q = static_cast<int>(rot.size());
    std::vector<int> pos;
    for (int i = 0; i < q; ++i)
        if (std::find(edges.begin(), edges.end(), rot[i]) != edges.end()) pos.push_back(i);
    if (pos.size() != edges.size()) return -1;
    const int k = static_cast<int>(pos.size());
    if (q % k != 0) return -1;
    const int d = q / k;
    for (int i = 0; i < k; ++i) {
        int gap = (i + 1 < k ? pos[i + 1] - pos[i] : q - pos[k - 1] + pos[0]);
        if (gap != d) return -1;
    }
    return d;
}

std::vector<int> distinct_edges_of(const EdgeVisitTrace& t) {
    std::vector<int> out;
    out.reserve(t.multiplicity.size());
    for (const auto& [e, mult] : t.multiplicity) out.push_back(e);
    return out;
}

} // namespace

bool is_cycle_edges(const EdgeVisitTrace& t) {
    std::set<int> verts(t.vertices.begin(), t.vertices.end());
    if (verts.size() < 2) return false;
    if (t.multiplicity.size() != verts.size()) return false;
    // Each distinct vertex must meet exactly two distinct edges of the set.
    // Edge i of the visit sequence runs between vertices[i] and vertices[i+1].
    std::map<int, std::set<int>> at_vertex;
    const int len = static_cast<int>(t.edges.size());
    for (int i = 0; i < len; ++i) {
        at_vertex[t.vertices[i]].insert(t.edges[i]);
        at_vertex[t.vertices[(i + 1) % len]].insert(t.edges[i]);
    }
    for (const auto& [v, es] : at_vertex)
        if (es.size() != 2) return false;
    // Connectivity: walk the cycle from one edge.
    std::set<int> reached;
    std::vector<int> stack{t.edges[0]};
    std::map<int, std::pair<int, int>> ends;
    for (int i = 0; i < len; ++i)
        ends[t.edges[i]] = {t.vertices[i], t.vertices[(i + 1) % len]};
    while (!stack.empty()) {
        int e = stack.back();
        stack.pop_back();
        if (!reached.insert(e).second) continue;
        for (int v : {ends[e].first, ends[e].second})
            for (int f : at_vertex[v])
                if (!reached.count(f)) stack.push_back(f);
    }
    return reached.size() == t.multiplicity.size();
}

std::optional<BeadResult> is_bead(const FlagSystem& m, const FaceStructure& fs,
                                  const EdgeVisitTrace& t) {
    auto edges = distinct_edges_of(t);
    if (edges.size() < 2) return std::nullopt;
    auto pair0 = endpoints(fs, edges[0]);
    if (!pair0) return std::nullopt;
    for (int e : edges) {
        auto p = endpoints(fs, e);
        if (!p || *p != *pair0) return std::nullopt;
    }
    int du = spacing_at(m, fs, pair0->first, edges);
    int dv = spacing_at(m, fs, pair0->second, edges);
    if (du <= 0 || du != dv) return std::nullopt;
    return BeadResult{du, edges.size() % 2 == 1};
}

std::optional<BraceletResult> is_bracelet(const FlagSystem& m, const FaceStructure& fs,
                                          const EdgeVisitTrace& t) {
    auto edges = distinct_edges_of(t);
    if (edges.size() < 4) return std::nullopt;
    std::map<std::pair<int, int>, std::vector<int>> classes;
    for (int e : edges) {
        auto p = endpoints(fs, e);
        if (!p) return std::nullopt;
        classes[*p].push_back(e);
    }
    std::set<int> verts;
    for (const auto& [p, es] : classes) {
        verts.insert(p.first);
        verts.insert(p.second);
    }

    if (verts.size() == 2) {
        // One parallel class; look for a split into >= 2 equally spaced beads.
        auto it = verts.begin();
        int u = *it++;
        int v = *it;
        const int q = fs.vertex_valence[u];
        auto rot = rotation_edges(m, fs, u);
        for (int d = 1; d < q; ++d) {
            if (q % d != 0) continue;
            const int bead_size = q / d;
            if (bead_size < 2) continue;
            if (edges.size() % bead_size != 0) continue;
            const int k = static_cast<int>(edges.size()) / bead_size;
            if (k < 2) continue;
            std::map<int, std::vector<int>> groups; // position residue mod d -> edges
            bool ok = true;
            for (int e : edges) {
                auto pit = std::find(rot.begin(), rot.end(), e);
                if (pit == rot.end()) {
                    ok = false;
                    break;
                }
                groups[static_cast<int>(pit - rot.begin()) % d].push_back(e);
            }
            if (!ok || static_cast<int>(groups.size()) != k) continue;
            for (const auto& [res, g] : groups) {
                if (static_cast<int>(g.size()) != bead_size ||
                    spacing_at(m, fs, u, g) != d || spacing_at(m, fs, v, g) != d) {
                    ok = false;
                    break;
                }
            }
            if (ok) return BraceletResult{d, k};
        }
        return std::nullopt;
    }

    // Three or more vertices: each parallel class one bead, strung in a cycle.
    int d = -1;
    std::map<int, int> degree;
    for (const auto& [p, es] : classes) {
        if (es.size() < 2) return std::nullopt;
        int du = spacing_at(m, fs, p.first, es);
        int dv = spacing_at(m, fs, p.second, es);
        if (du <= 0 || du != dv) return std::nullopt;
        if (d < 0) d = du;
        if (du != d) return std::nullopt;
        ++degree[p.first];
        ++degree[p.second];
    }
    for (int v : verts)
        if (degree[v] != 2) return std::nullopt;
    // Connected 2-regular class graph = one closed cycle through the vertices.
    std::map<int, std::vector<int>> adj;
    int idx = 0;
    std::vector<std::pair<int, int>> class_pairs;
    for (const auto& [p, es] : classes) {
        adj[p.first].push_back(idx);
        adj[p.second].push_back(idx);
        class_pairs.push_back(p);
        ++idx;
    }
    std::set<int> seen_classes;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        if (!seen_classes.insert(c).second) continue;
        for (int v : {class_pairs[c].first, class_pairs[c].second})
            for (int other : adj[v])
                if (!seen_classes.count(other)) stack.push_back(other);
    }
    if (seen_classes.size() != classes.size()) return std::nullopt;
    return BraceletResult{d, static_cast<int>(classes.size())};
}

std::optional<TwiningResult> is_twining(const FlagSystem& m, const FaceStructure& fs,
                                        const EdgeVisitTrace& t,
                                        const std::vector<Automorphism>& aut, int j) {
    const int len = static_cast<int>(t.edges.size());
    if (len < 4 || len % 2 != 0) return std::nullopt;
    const int k = len / 2;
    for (int i = 0; i < k; ++i)
        if (t.vertices[i + k] != t.vertices[i]) return std::nullopt;
    std::set<int> vs(t.vertices.begin(), t.vertices.begin() + k);
    if (static_cast<int>(vs.size()) != k) return std::nullopt;
    for (int i = 0; i < k; ++i) {
        int e1 = t.edges[i], e2 = t.edges[i + k];
        if (e1 == e2) return std::nullopt;
        auto p1 = endpoints(fs, e1);
        auto p2 = endpoints(fs, e2);
        if (!p1 || !p2 || *p1 != *p2) return std::nullopt;
    }

    // Uniform subtend values: d at the initial vertex of each pair, d' at the
    // terminal one.
    std::set<int> D, Dp;
    for (int i = 0; i < k; ++i) {
        int e1 = t.edges[i], e2 = t.edges[i + k];
        auto at_initial = subtend(m, fs, t.vertices[i], e1, e2);
        auto at_terminal = subtend(m, fs, t.vertices[(i + 1) % len], e1, e2);
        if (i == 0) {
            D = at_initial;
            Dp = at_terminal;
        } else {
            std::set<int> d2, dp2;
            std::set_intersection(D.begin(), D.end(), at_initial.begin(), at_initial.end(),
                                  std::inserter(d2, d2.begin()));
            std::set_intersection(Dp.begin(), Dp.end(), at_terminal.begin(), at_terminal.end(),
                                  std::inserter(dp2, dp2.begin()));
            D = std::move(d2);
            Dp = std::move(dp2);
        }
        if (D.empty() || Dp.empty()) return std::nullopt;
    }

    bool found = false;
    for (const auto& g : aut) {
        auto va = induced_vertex_action(fs, g);
        bool fixes = true;
        for (int v : vs)
            if (va[v] != v) {
                fixes = false;
                break;
            }
        if (!fixes) continue;
        auto ea = induced_edge_action(fs, g);
        bool swaps = true;
        for (int i = 0; i < k && swaps; ++i)
            if (ea[t.edges[i]] != t.edges[i + k] || ea[t.edges[i + k]] != t.edges[i])
                swaps = false;
        if (swaps) {
            found = true;
            break;
        }
    }
    if (!found) return std::nullopt;

    const int q = fs.valence > 0 ? fs.valence : fs.vertex_valence[t.vertices[0]];
    auto norm = [&](int x) {
        int r = ((x % q) + q) % q;
        return r;
    };
    TwiningResult res;
    res.half_length = k;
    res.d = *D.begin();
    res.d_prime = *Dp.begin();
    res.sign = '0';
    for (int a : D) {
        int plus = norm(q - 2 * j + a);
        int minus = norm(q - 2 * j - a);
        bool has_plus = plus > 0 && Dp.count(plus);
        bool has_minus = minus > 0 && Dp.count(minus);
        if (has_plus || has_minus) {
            res.d = a;
            res.d_prime = has_plus ? plus : minus;
            res.sign = has_plus && has_minus ? 'b' : has_plus ? '+' : '-';
            break;
        }
    }
    return res;
}

EdgeSetClassification classify(const FlagSystem& m, const FaceStructure& fs, const FlagWalk& w,
                               const AutGroup& aut) {
    EdgeVisitTrace t = trace(m, fs, w);
    EdgeSetClassification c;
    c.proof_case = t.closure;
    c.one_vertex_map = fs.V() == 1;
    c.line = is_line(m, fs, w);
    c.cycle = is_cycle_edges(t);
    c.bead = is_bead(m, fs, t);
    c.bracelet = is_bracelet(m, fs, t);
    c.twining = is_twining(m, fs, t, aut.elements, w.kind.j);
    if (c.cycle)
        c.primary = PrimaryLabel::Cycle;
    else if (c.bead)
        c.primary = PrimaryLabel::Bead;
    else if (c.bracelet)
        c.primary = PrimaryLabel::Bracelet;
    else if (c.twining)
        c.primary = PrimaryLabel::Twining;
    else
        c.primary = PrimaryLabel::None;

    if (t.closure == ProofCase::Forbidden0) {
        std::ostringstream os;
        os << "walk closes on the r0-image of its base after " << t.distinct_edges
           << " distinct edges (base flag " << w.base << ", j = " << w.kind.j << ", "
           << to_string(w.kind.tag) << ")";
        throw TheoremViolation(os.str());
    }
    if (!c.one_vertex_map && c.primary == PrimaryLabel::None) {
        std::ostringstream os;
        os << "consistent walk received no structural label: base " << w.base << ", j = "
           << w.kind.j << ", " << to_string(w.kind.tag) << ", length " << w.length()
           << ", closure " << to_string(t.closure) << ", edges";
        for (int e : distinct_edges_of(t)) os << ' ' << e;
        throw TheoremViolation(os.str());
    }
    return c;
}

} // namespace flagwalk
