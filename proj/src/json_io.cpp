#include "flagwalk/json_io.hpp"

namespace flagwalk {

Json to_json(const ValidationReport& rep) {
    Json j;
    j["valid"] = rep.ok();
    Json arr = Json::array();
    for (const auto& v : rep.violations) {
        Json e;
        e["axiom"] = v.axiom;
        e["witness"] = v.witness;
        if (!v.detail.empty()) e["detail"] = v.detail;
        arr.push_back(std::move(e));
    }
    j["violations"] = std::move(arr);
    return j;
}

Json info_json(const FlagSystem& m, const FaceStructure& fs) {
    Json j;
    if (m.name) j["name"] = *m.name;
    j["flags"] = m.n_flags;
    j["vertices"] = fs.V();
    j["edges"] = fs.E();
    j["faces"] = fs.F();
    j["darts"] = fs.D();
    GenusReport g = genus_report(m, fs);
    j["euler_characteristic"] = g.chi;
    j["orientable"] = g.orientable;
    if (g.orientable)
        j["genus"] = g.genus;
    else
        j["crosscap"] = g.crosscap;
    j["valences"] = fs.vertex_valence;
    j["equivelar"] = fs.equivelar;
    if (fs.equivelar) j["valence"] = fs.valence;
    return j;
}

Json to_json(const SymmetryReport& rep, const AutGroup& aut) {
    Json j;
    j["class"] = to_string(rep.cls);
    j["flag_orbits"] = rep.flag_orbit_count;
    j["aut_order"] = aut.order();
    return j;
}

Json to_json(const WalkOrbitRow& row) {
    Json j;
    j["flag_orbit"] = row.flag_orbit;
    j["j"] = row.j;
    j["kind"] = to_string(row.kind);
    j["length"] = row.length;
    j["symmetric"] = row.symmetric;
    j["line"] = row.line;
    j["orbit_size"] = row.orbit_size;
    j["base_flag"] = row.representative.base;
    j["flags"] = row.representative.flags;
    return j;
}

Json to_json(const WalkOrbitReport& report) {
    Json j;
    j["valence"] = report.valence;
    j["group_order"] = report.group_order;
    j["orbit_count"] = report.rows.size();
    Json rows = Json::array();
    for (const auto& r : report.rows) rows.push_back(to_json(r));
    j["rows"] = std::move(rows);
    if (!report.notes.empty()) j["notes"] = report.notes;
    return j;
}

Json to_json(const EdgeSetClassification& c) {
    Json j;
    j["labels"] = c.labels();
    j["primary"] = to_string(c.primary);
    if (c.bead) {
        j["bead"] = Json{{"d", c.bead->d}, {"parity", c.bead->odd ? "odd" : "even"}};
    }
    if (c.bracelet) {
        j["bracelet"] = Json{{"d", c.bracelet->d}, {"beads", c.bracelet->bead_count}};
    }
    if (c.twining) {
        j["twining"] = Json{{"d", c.twining->d},
                            {"d_prime", c.twining->d_prime},
                            {"k", c.twining->half_length},
                            {"sign", std::string(1, c.twining->sign)}};
    }
    j["line"] = c.line;
    j["one_vertex_map"] = c.one_vertex_map;
    j["proof_case"] = to_string(c.proof_case);
    return j;
}

Json cyclets_json(int valence, const std::vector<CycletOrbit>& orbits) {
    Json j;
    j["valence"] = valence;
    j["expected_orbits"] = valence - 1;
    j["orbit_count"] = orbits.size();
    Json arr = Json::array();
    for (const auto& o : orbits) {
        Json e;
        e["length"] = o.length;
        e["orbit_size"] = o.orbit_size;
        e["darts"] = o.representative.darts;
        arr.push_back(std::move(e));
    }
    j["orbits"] = std::move(arr);
    j["count_matches"] = static_cast<int>(orbits.size()) == valence - 1;
    return j;
}

} // namespace flagwalk
