#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagwalk/autgroup.hpp"
#include "flagwalk/flagmap.hpp"
#include "flagwalk/walks.hpp"

namespace flagwalk {

// How a walk closes after visiting all of its distinct edges: back at the
// starting flag, at its r0r2-image (dipole traversal), or at its r2-image
// (double cover of a line on a non-orientable map). Closing at the r0-image
// cannot happen; Forbidden0 is reported so that callers can flag it.
enum class ProofCase { Circuit, Dipole02, Line2, Forbidden0, Other };

std::string to_string(ProofCase c);

struct EdgeVisitTrace {
    std::vector<int> edges;        // edge of flags[i]
    std::vector<int> vertices;     // vertex of flags[i]
    int distinct_edges = 0;
    std::map<int, int> multiplicity; // visits per edge
    ProofCase closure = ProofCase::Other;
};

EdgeVisitTrace trace(const FlagSystem& m, const FaceStructure& fs, const FlagWalk& w);

// The edge set forms a single closed cycle: as many distinct edges as
// distinct vertices, every vertex meeting exactly two of them. Two parallel
// edges on two vertices count.
bool is_cycle_edges(const EdgeVisitTrace& t);

struct BeadResult {
    int d = 0;
    bool odd = false; // odd number of edges
};

// All edges share one endpoint pair {u, v}, u != v, equally spaced at both
// ends with gap d in the vertex rotation.
std::optional<BeadResult> is_bead(const FlagSystem& m, const FaceStructure& fs,
                                  const EdgeVisitTrace& t);

struct BraceletResult {
    int d = 0;
    int bead_count = 0;
};

// The edge set splits into >= 2 d-beads, one fixed d, whose endpoint pairs
// trace a closed cycle through the distinct vertices. On two vertices this
// is a pair of beads; the union need not be a bead itself.
std::optional<BraceletResult> is_bracelet(const FlagSystem& m, const FaceStructure& fs,
                                          const EdgeVisitTrace& t);

struct TwiningResult {
    int d = 0;
    int d_prime = 0;
    int half_length = 0; // k: the walk has length 2k
    char sign = '0';     // '+', '-', 'b' (both) when d' = q - 2j +- d matches, '0' otherwise
};

// Doubled closed walk: length 2k over k distinct vertices, e_i and e_{i+k}
// parallel with uniform subtend values d and d', swapped by a symmetry that
// fixes every vertex of the walk.
std::optional<TwiningResult> is_twining(const FlagSystem& m, const FaceStructure& fs,
                                        const EdgeVisitTrace& t,
                                        const std::vector<Automorphism>& aut, int j);

enum class PrimaryLabel { None, Cycle, Bead, Bracelet, Twining };

std::string to_string(PrimaryLabel p);

struct EdgeSetClassification {
    bool cycle = false;
    std::optional<BeadResult> bead;
    std::optional<BraceletResult> bracelet;
    std::optional<TwiningResult> twining;
    PrimaryLabel primary = PrimaryLabel::None;
    bool line = false;
    bool one_vertex_map = false;
    ProofCase proof_case = ProofCase::Other;
    std::vector<std::string> labels() const;
};

// Runs all four structural tests on a consistent walk of a dart-transitive
// map. On maps with a single vertex the label set may be empty; on larger
// maps an unlabelled walk is a theorem violation and throws.
EdgeSetClassification classify(const FlagSystem& m, const FaceStructure& fs, const FlagWalk& w,
                               const AutGroup& aut);

} // namespace flagwalk
