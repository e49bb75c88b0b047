#include "flagwalk/cyclets.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "flagwalk/errors.hpp"

namespace flagwalk {

Permutation induced_dart_action(const FaceStructure& fs, const Automorphism& g) {
    std::vector<int> img(fs.D());
    for (int d = 0; d < fs.D(); ++d)
        img[d] = fs.dart_of(g[fs.darts.orbits[d].front()]);
    return Permutation(std::move(img));
}

namespace {

std::vector<int> least_rotation(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size());
    std::vector<int> best = seq;
    std::vector<int> cur(n);
    for (int r = 1; r < n; ++r) {
        for (int i = 0; i < n; ++i) cur[i] = seq[(r + i) % n];
        if (cur < best) best = cur;
    }
    return best;
}

bool cyclet_valid(const Skeleton& sk, const std::vector<int>& darts) {
    const int n = static_cast<int>(darts.size());
    for (int i = 0; i < n; ++i)
        if (!sk.sequential(darts[i], darts[(i + 1) % n])) return false;
    return true;
}

} // namespace

std::vector<CycletOrbit> consistent_cyclets(const FlagSystem& m, const FaceStructure& fs,
                                            const Skeleton& sk,
                                            const std::vector<Automorphism>& group) {
    (void)m;
    if (!fs.equivelar)
        throw MapError(Errc::not_equivelar, "cyclet count requires a skeleton of one valence");
    std::vector<Permutation> dart_actions;
    dart_actions.reserve(group.size());
    for (const auto& g : group) dart_actions.push_back(induced_dart_action(fs, g));
    if (orbits_under(dart_actions, fs.D()).count() != 1)
        throw MapError(Errc::not_dart_transitive,
                       "cyclet count requires a dart-transitive subgroup");

    // Collect consistent cyclets, canonicalized by rotation.
    std::map<std::vector<int>, Automorphism> found;
    for (size_t gi = 0; gi < group.size(); ++gi) {
        const Permutation& action = dart_actions[gi];
        const long long dart_order = order(action);
        std::vector<char> done(fs.D(), 0);
        for (int d = 0; d < fs.D(); ++d) {
            if (done[d]) continue;
            std::vector<int> orbit = cycle_of(action, d);
            for (int x : orbit) done[x] = 1;
            if (static_cast<long long>(orbit.size()) != dart_order) continue;
            if (!cyclet_valid(sk, orbit)) continue;
            found.emplace(least_rotation(orbit), group[gi]);
        }
    }

    // Group the distinct cyclets into orbits under the subgroup.
    std::vector<std::vector<int>> cyclets;
    std::vector<Automorphism> shunts;
    std::map<std::vector<int>, int> index;
    for (auto& [darts, shunt] : found) {
        index[darts] = static_cast<int>(cyclets.size());
        cyclets.push_back(darts);
        shunts.push_back(shunt);
    }
    const int n = static_cast<int>(cyclets.size());
    std::vector<int> orbit_of(n, -1);
    std::vector<CycletOrbit> result;
    for (int i = 0; i < n; ++i) {
        if (orbit_of[i] >= 0) continue;
        int id = static_cast<int>(result.size());
        std::vector<int> stack{i};
        orbit_of[i] = id;
        int size = 0;
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            ++size;
            for (const auto& action : dart_actions) {
                std::vector<int> img(cyclets[c].size());
                for (size_t t = 0; t < img.size(); ++t) img[t] = action[cyclets[c][t]];
                auto it = index.find(least_rotation(img));
                // Every image of a consistent cyclet is again one.
                if (it == index.end())
                    throw TheoremViolation("cyclet orbit left the enumerated set");
                if (orbit_of[it->second] < 0) {
                    orbit_of[it->second] = id;
                    stack.push_back(it->second);
                }
            }
        }
        CycletOrbit orb;
        orb.representative = {cyclets[i], shunts[i]};
        orb.length = static_cast<int>(cyclets[i].size());
        orb.orbit_size = size;
        result.push_back(std::move(orb));
    }
    std::sort(result.begin(), result.end(), [](const CycletOrbit& a, const CycletOrbit& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.representative.darts < b.representative.darts;
    });
    return result;
}

std::optional<DartCyclet> walk_to_cyclet(const FlagSystem& m, const FaceStructure& fs,
                                         const Skeleton& sk, const FlagWalk& w) {
    (void)m;
    if (!w.shunt)
        throw MapError(Errc::bad_argument, "walk_to_cyclet: walk carries no shunt");
    std::vector<int> darts;
    darts.reserve(w.flags.size());
    for (int f : w.flags) darts.push_back(fs.dart_of(f));
    if (!cyclet_valid(sk, darts)) return std::nullopt;
    return DartCyclet{least_rotation(darts), *w.shunt};
}

} // namespace flagwalk
