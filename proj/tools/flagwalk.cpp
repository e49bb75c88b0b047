// flagwalk: analyze maps on surfaces given as flag systems.
//
// Subcommands: validate, info, sym, walks, classify, dual, petrie, gen,
// cyclets. Maps are read from a file, from stdin ("-"), or generated with
// --family/--n/--a. Exit codes: 0 ok, 1 invalid or unsuitable input, 2 usage
// error, 3 theorem-violation diagnostic.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "flagwalk/autgroup.hpp"
#include "flagwalk/classify.hpp"
#include "flagwalk/cyclets.hpp"
#include "flagwalk/errors.hpp"
#include "flagwalk/families.hpp"
#include "flagwalk/flagmap.hpp"
#include "flagwalk/json_io.hpp"
#include "flagwalk/walks.hpp"

namespace {

using namespace flagwalk;

struct Options {
    std::string input;  // path or "-"
    std::string family; // M | delta | H
    int n = -1;
    int a = -1;
    std::string group = "full";
    bool json = false;
};

std::string slurp(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

FlagSystem load_unchecked(const Options& opt) {
    const bool has_file = !opt.input.empty();
    const bool has_gen = !opt.family.empty();
    if (has_file == has_gen)
        throw CLI::ValidationError("input", "give exactly one of INPUT or --family");
    if (has_gen) {
        if (opt.n < 0) throw CLI::ValidationError("--n", "--family requires --n");
        if (opt.family == "M") return build_M(opt.n);
        if (opt.family == "delta") return build_delta(opt.n);
        if (opt.family == "H") {
            if (opt.a < 0) throw CLI::ValidationError("--a", "family H requires --a");
            return build_H(opt.n, opt.a);
        }
        throw CLI::ValidationError("--family", "choose M, delta or H");
    }
    std::string text;
    if (opt.input == "-") {
        text = slurp(std::cin);
    } else {
        std::ifstream f(opt.input);
        if (!f) throw MapError(Errc::bad_mapfile, "cannot read " + opt.input);
        text = slurp(f);
    }
    return read_mapfile_unchecked(text);
}

FlagSystem load_valid(const Options& opt) {
    FlagSystem m = load_unchecked(opt);
    ValidationReport rep = validate(m);
    if (!rep.ok())
        throw MapError(Errc::invalid_map, "map axioms violated: " + rep.summary());
    return m;
}

std::vector<Automorphism> pick_group(const Options& opt, const FlagSystem& m,
                                     const AutGroup& aut) {
    if (opt.group == "full") return resolve_subgroup(m, aut, SubgroupSpec::full());
    if (opt.group == "rotation") return resolve_subgroup(m, aut, SubgroupSpec::rotation());
    if (opt.group == "facebip") return resolve_subgroup(m, aut, SubgroupSpec::face_bipartite());
    throw CLI::ValidationError("--group", "choose full, rotation or facebip");
}

int cmd_validate(const Options& opt) {
    FlagSystem m = load_unchecked(opt);
    ValidationReport rep = validate(m);
    if (opt.json)
        std::cout << to_json(rep).dump() << "\n";
    else
        std::cout << rep.summary() << "\n";
    return rep.ok() ? 0 : 1;
}

int cmd_info(const Options& opt) {
    FlagSystem m = load_valid(opt);
    FaceStructure fs = face_structure(m);
    if (opt.json) {
        std::cout << info_json(m, fs).dump() << "\n";
        return 0;
    }
    GenusReport g = genus_report(m, fs);
    if (m.name) std::cout << "name: " << *m.name << "\n";
    std::cout << "flags: " << m.n_flags << "\n"
              << "vertices: " << fs.V() << "  edges: " << fs.E() << "  faces: " << fs.F()
              << "  darts: " << fs.D() << "\n"
              << "euler characteristic: " << g.chi << "\n";
    if (g.orientable)
        std::cout << "orientable, genus " << g.genus << "\n";
    else
        std::cout << "non-orientable, crosscap " << g.crosscap << "\n";
    std::cout << "valences:";
    for (int v : fs.vertex_valence) std::cout << ' ' << v;
    std::cout << (fs.equivelar ? "  (equivelar)" : "") << "\n";
    return 0;
}

int cmd_sym(const Options& opt) {
    FlagSystem m = load_valid(opt);
    FaceStructure fs = face_structure(m);
    AutGroup aut = automorphism_group(m);
    SymmetryReport rep = symmetry_class(m, fs, aut);
    if (opt.json)
        std::cout << to_json(rep, aut).dump() << "\n";
    else
        std::cout << to_string(rep.cls) << "\n";
    return 0;
}

int cmd_walks(const Options& opt) {
    FlagSystem m = load_valid(opt);
    FaceStructure fs = face_structure(m);
    AutGroup aut = automorphism_group(m);
    auto group = pick_group(opt, m, aut);
    WalkOrbitReport report = enumerate_consistent_orbits(m, fs, group);
    if (opt.json) {
        std::cout << to_json(report).dump() << "\n";
        return 0;
    }
    std::cout << "valence " << report.valence << ", group order " << report.group_order << ", "
              << report.rows.size() << " orbits\n";
    for (const auto& r : report.rows) {
        std::cout << "orbit " << r.flag_orbit << "  j=" << r.j << "  " << to_string(r.kind)
                  << "  length=" << r.length << "  symmetric=" << (r.symmetric ? "yes" : "no")
                  << "  line=" << (r.line ? "yes" : "no") << "  edge_sets=" << r.orbit_size
                  << "\n";
    }
    for (const auto& n : report.notes) std::cout << "note: " << n << "\n";
    return 0;
}

int cmd_classify(const Options& opt) {
    FlagSystem m = load_valid(opt);
    FaceStructure fs = face_structure(m);
    AutGroup aut = automorphism_group(m);
    auto group = pick_group(opt, m, aut);
    WalkOrbitReport report = enumerate_consistent_orbits(m, fs, group);
    Json rows = Json::array();
    for (const auto& r : report.rows) {
        EdgeSetClassification c = classify(m, fs, r.representative, aut);
        if (opt.json) {
            Json row = to_json(r);
            row["classification"] = to_json(c);
            rows.push_back(std::move(row));
        } else {
            std::cout << "orbit " << r.flag_orbit << "  j=" << r.j << "  " << to_string(r.kind)
                      << "  primary=" << to_string(c.primary) << "  labels=[";
            auto labels = c.labels();
            for (size_t i = 0; i < labels.size(); ++i)
                std::cout << (i ? "," : "") << labels[i];
            std::cout << "]  line=" << (c.line ? "yes" : "no")
                      << (c.one_vertex_map ? "  one-vertex" : "") << "\n";
        }
    }
    if (opt.json) std::cout << rows.dump() << "\n";
    return 0;
}

int cmd_transform(const Options& opt, bool petrie_op) {
    FlagSystem m = load_valid(opt);
    std::cout << write_mapfile(petrie_op ? petrie(m) : dual(m)) << "\n";
    return 0;
}

int cmd_gen(const Options& opt) {
    if (opt.family.empty()) throw CLI::ValidationError("--family", "gen requires --family");
    FlagSystem m = load_valid(opt);
    std::cout << write_mapfile(m) << "\n";
    return 0;
}

int cmd_cyclets(const Options& opt) {
    FlagSystem m = load_valid(opt);
    FaceStructure fs = face_structure(m);
    Skeleton sk = skeleton(m, fs);
    AutGroup aut = automorphism_group(m);
    auto group = pick_group(opt, m, aut);
    auto orbits = consistent_cyclets(m, fs, sk, group);
    if (opt.json)
        std::cout << cyclets_json(fs.valence, orbits).dump() << "\n";
    else {
        std::cout << "valence " << fs.valence << ": " << orbits.size()
                  << " consistent cyclet orbits (expected " << fs.valence - 1 << ")\n";
        for (const auto& o : orbits)
            std::cout << "length " << o.length << "  orbit_size " << o.orbit_size << "\n";
    }
    if (static_cast<int>(orbits.size()) != fs.valence - 1) {
        std::ostringstream os;
        os << "cyclet orbit count " << orbits.size() << " != q-1 = " << fs.valence - 1;
        throw TheoremViolation(os.str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"flag-system map analyzer"};
    app.require_subcommand(1);

    Options opt;
    std::string subcmd;
    for (const char* name : {"validate", "info", "sym", "walks", "classify", "dual", "petrie",
                             "gen", "cyclets"}) {
        CLI::App* sub = app.add_subcommand(name);
        if (std::string(name) != "gen")
            sub->add_option("input", opt.input, "mapfile path, or - for stdin");
        sub->add_option("--family", opt.family, "generate a family map: M, delta or H");
        sub->add_option("--n", opt.n, "family parameter n");
        sub->add_option("--a", opt.a, "family parameter a (H only)");
        sub->add_option("--group", opt.group, "subgroup: full, rotation, facebip")
            ->default_val("full");
        sub->add_flag("--json", opt.json, "machine-readable output");
        sub->callback([&subcmd, name] { subcmd = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (subcmd == "validate") return cmd_validate(opt);
        if (subcmd == "info") return cmd_info(opt);
        if (subcmd == "sym") return cmd_sym(opt);
        if (subcmd == "walks") return cmd_walks(opt);
        if (subcmd == "classify") return cmd_classify(opt);
        if (subcmd == "dual") return cmd_transform(opt, false);
        if (subcmd == "petrie") return cmd_transform(opt, true);
        if (subcmd == "gen") return cmd_gen(opt);
        if (subcmd == "cyclets") return cmd_cyclets(opt);
        std::cerr << "unknown subcommand\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const TheoremViolation& e) {
        std::cerr << "THEOREM VIOLATION: " << e.what() << "\n";
        return 3;
    } catch (const MapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
