#include "flagwalk/flagmap.hpp"

#include <algorithm>
#include <sstream>

#include "flagwalk/errors.hpp"
#include "json.hpp"

namespace flagwalk {

std::string ValidationReport::summary() const {
    if (ok()) return "pass";
    std::ostringstream os;
    os << violations.size() << " violation(s):";
    for (const auto& v : violations) {
        os << "\n  " << v.axiom;
        if (v.witness >= 0) os << " (witness flag " << v.witness << ")";
        if (!v.detail.empty()) os << ": " << v.detail;
    }
    return os.str();
}

ValidationReport validate(const FlagSystem& m) {
    ValidationReport rep;
    const int n = m.n_flags;
    if (n <= 0) {
        rep.violations.push_back({"empty-flag-set", -1, "no flags"});
        return rep;
    }
    for (int i = 0; i < 3; ++i) {
        if (m.r(i).size() != n)
            throw MapError(Errc::bad_argument, "validate: r" + std::to_string(i) +
                                                   " domain differs from n_flags");
    }
    for (int i = 0; i < 3; ++i) {
        const Permutation& r = m.r(i);
        for (int x = 0; x < n; ++x) {
            if (r[r[x]] != x) {
                rep.violations.push_back({"r" + std::to_string(i) + "-not-involution", x, ""});
                break;
            }
        }
        for (int x = 0; x < n; ++x) {
            if (r[x] == x) {
                rep.violations.push_back({"r" + std::to_string(i) + "-fixed-point", x, ""});
                break;
            }
        }
    }
    for (int x = 0; x < n; ++x) {
        int y = m.r2[m.r0[m.r2[m.r0[x]]]];
        if (y != x) {
            rep.violations.push_back({"r0r2-not-involution", x, ""});
            break;
        }
    }
    for (int x = 0; x < n; ++x) {
        int a = m.r0[x], b = m.r1[x], c = m.r2[x];
        if (a == b || a == c || b == c) {
            rep.violations.push_back({"neighbours-not-distinct", x, ""});
            break;
        }
    }
    auto orbits = orbits_under({m.r0, m.r1, m.r2}, n);
    if (orbits.count() != 1) {
        int witness = orbits.orbits[1].front();
        rep.violations.push_back({"not-transitive", witness,
                                  std::to_string(orbits.count()) + " connection components"});
    }
    return rep;
}

FaceStructure face_structure(const FlagSystem& m) {
    FaceStructure fs;
    fs.vertices = orbits_under({m.r1, m.r2}, m.n_flags);
    fs.edges = orbits_under({m.r0, m.r2}, m.n_flags);
    fs.faces = orbits_under({m.r0, m.r1}, m.n_flags);
    fs.darts = orbits_under({m.r2}, m.n_flags);
    fs.vertex_valence.resize(fs.V());
    for (int v = 0; v < fs.V(); ++v)
        fs.vertex_valence[v] = static_cast<int>(fs.vertices.orbits[v].size()) / 2;
    fs.equivelar = true;
    for (int v = 1; v < fs.V(); ++v)
        if (fs.vertex_valence[v] != fs.vertex_valence[0]) fs.equivelar = false;
    fs.valence = fs.equivelar && fs.V() > 0 ? fs.vertex_valence[0] : -1;
    return fs;
}

Skeleton skeleton(const FlagSystem& m, const FaceStructure& fs) {
    Skeleton sk;
    sk.n_vertices = fs.V();
    sk.darts.resize(fs.D());
    for (int d = 0; d < fs.D(); ++d) {
        int rep = fs.darts.orbits[d].front();
        sk.darts[d].initial_vertex = fs.vertex_of(rep);
        sk.darts[d].reverse = fs.dart_of(m.r0[rep]);
        sk.darts[d].edge = fs.edge_of(rep);
    }
    for (int d = 0; d < fs.D(); ++d)
        sk.darts[d].terminal_vertex = sk.darts[sk.darts[d].reverse].initial_vertex;
    return sk;
}

std::vector<int> orientation_classes(const FlagSystem& m) {
    std::vector<int> colour(m.n_flags, -1);
    colour[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int i = 0; i < 3; ++i) {
            int y = m.r(i)[x];
            if (colour[y] < 0) {
                colour[y] = 1 - colour[x];
                stack.push_back(y);
            } else if (colour[y] == colour[x]) {
                return {};
            }
        }
    }
    return colour;
}

bool is_orientable(const FlagSystem& m) { return !orientation_classes(m).empty(); }

int euler_characteristic(const FaceStructure& fs) { return fs.V() - fs.E() + fs.F(); }

int euler_characteristic(const FlagSystem& m) { return euler_characteristic(face_structure(m)); }

GenusReport genus_report(const FlagSystem& m, const FaceStructure& fs) {
    GenusReport g;
    g.chi = euler_characteristic(fs);
    g.orientable = is_orientable(m);
    if (g.orientable)
        g.genus = (2 - g.chi) / 2;
    else
        g.crosscap = 2 - g.chi;
    return g;
}

GenusReport genus_report(const FlagSystem& m) { return genus_report(m, face_structure(m)); }

std::set<int> subtend(const FlagSystem& m, const FaceStructure& fs, int v, int e, int e2) {
    if (v < 0 || v >= fs.V() || e < 0 || e >= fs.E() || e2 < 0 || e2 >= fs.E())
        throw MapError(Errc::bad_argument, "subtend: id out of range");
    auto incident = [&](int edge) {
        for (int f : fs.edges.orbits[edge])
            if (fs.vertex_of(f) == v) return true;
        return false;
    };
    if (!incident(e) || !incident(e2))
        throw MapError(Errc::bad_argument, "subtend: edge not incident to vertex");
    const int q = fs.vertex_valence[v];
    std::set<int> result;
    for (int f : fs.edges.orbits[e]) {
        if (fs.vertex_of(f) != v) continue;
        int y = f;
        for (int d = 1; d < q; ++d) {
            y = m.r2[m.r1[y]]; // one step of (r1 r2)
            if (fs.edge_of(y) == e2) result.insert(d);
        }
    }
    return result;
}

FlagSystem dual(const FlagSystem& m) { return {m.n_flags, m.r2, m.r1, m.r0, m.name}; }

FlagSystem petrie(const FlagSystem& m) {
    return {m.n_flags, compose(m.r0, m.r2), m.r1, m.r2, m.name};
}

std::optional<Permutation> are_isomorphic(const FlagSystem& a, const FlagSystem& b) {
    if (a.n_flags != b.n_flags) return std::nullopt;
    const int n = a.n_flags;
    for (int anchor = 0; anchor < n; ++anchor) {
        std::vector<int> phi(n, -1);
        phi[0] = anchor;
        std::vector<int> stack{0};
        bool ok = true;
        while (ok && !stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int i = 0; i < 3 && ok; ++i) {
                int y = a.r(i)[x];
                int img = b.r(i)[phi[x]];
                if (phi[y] < 0) {
                    phi[y] = img;
                    stack.push_back(y);
                } else if (phi[y] != img) {
                    ok = false;
                }
            }
        }
        if (!ok) continue;
        if (std::find(phi.begin(), phi.end(), -1) != phi.end()) continue;
        std::vector<char> seen(n, 0);
        for (int v : phi) {
            if (seen[v]) {
                ok = false;
                break;
            }
            seen[v] = 1;
        }
        if (ok) return Permutation(std::move(phi));
    }
    return std::nullopt;
}

namespace {

std::vector<int> json_int_array(const nlohmann::ordered_json& j, const std::string& key, int n) {
    if (!j.contains(key) || !j[key].is_array())
        throw MapError(Errc::bad_mapfile, "mapfile: missing array \"" + key + "\"");
    const auto& arr = j[key];
    if (static_cast<int>(arr.size()) != n)
        throw MapError(Errc::bad_mapfile, "mapfile: \"" + key + "\" has wrong length");
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) {
        if (!arr[i].is_number_integer())
            throw MapError(Errc::bad_mapfile, "mapfile: \"" + key + "\" entry not an integer");
        out[i] = arr[i].get<int>();
    }
    return out;
}

} // namespace

FlagSystem read_mapfile_unchecked(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MapError(Errc::bad_mapfile, std::string("mapfile: malformed JSON: ") + e.what());
    }
    if (!j.is_object())
        throw MapError(Errc::bad_mapfile, "mapfile: top level must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        if (k != "flags" && k != "r0" && k != "r1" && k != "r2" && k != "name")
            throw MapError(Errc::bad_mapfile, "mapfile: unknown key \"" + k + "\"");
    }
    if (!j.contains("flags") || !j["flags"].is_number_integer())
        throw MapError(Errc::bad_mapfile, "mapfile: missing integer key \"flags\"");
    const long long n = j["flags"].get<long long>();
    if (n < 4 || n > 1'000'000)
        throw MapError(Errc::bad_mapfile, "mapfile: \"flags\" must be an integer >= 4");
    FlagSystem m;
    m.n_flags = static_cast<int>(n);
    try {
        m.r0 = Permutation(json_int_array(j, "r0", m.n_flags));
        m.r1 = Permutation(json_int_array(j, "r1", m.n_flags));
        m.r2 = Permutation(json_int_array(j, "r2", m.n_flags));
    } catch (const std::invalid_argument& e) {
        throw MapError(Errc::bad_mapfile, std::string("mapfile: ") + e.what());
    }
    if (j.contains("name")) {
        if (!j["name"].is_string())
            throw MapError(Errc::bad_mapfile, "mapfile: \"name\" must be a string");
        m.name = j["name"].get<std::string>();
    }
    return m;
}

FlagSystem read_mapfile(const std::string& text) {
    FlagSystem m = read_mapfile_unchecked(text);
    ValidationReport rep = validate(m);
    if (!rep.ok())
        throw MapError(Errc::invalid_map, "mapfile: map axioms violated: " + rep.summary());
    return m;
}

std::string write_mapfile(const FlagSystem& m) {
    nlohmann::ordered_json j;
    j["flags"] = m.n_flags;
    j["r0"] = m.r0.images();
    j["r1"] = m.r1.images();
    j["r2"] = m.r2.images();
    if (m.name) j["name"] = *m.name;
    return j.dump();
}

} // namespace flagwalk
