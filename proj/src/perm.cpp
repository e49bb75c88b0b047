#include "flagwalk/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace flagwalk {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    const int n = static_cast<int>(img_.size());
    std::vector<char> seen(n, 0);
    for (int v : img_) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("Permutation: image table is not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img), unchecked_t{});
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> moved(n, 0);
    for (const auto& c : cycles) {
        for (size_t i = 0; i < c.size(); ++i) {
            int from = c[i], to = c[(i + 1) % c.size()];
            if (from < 0 || from >= n || moved[from])
                throw std::invalid_argument("from_cycles: cycles not disjoint or out of range");
            moved[from] = 1;
            img[from] = to;
        }
    }
    return Permutation(std::move(img), unchecked_t{});
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < size(); ++i) inv[img_[i]] = i;
    return Permutation(std::move(inv), unchecked_t{});
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("compose: domain sizes differ");
    std::vector<int> img(p.size());
    for (int i = 0; i < p.size(); ++i) img[i] = q[p[i]];
    return Permutation(std::move(img), Permutation::unchecked_t{});
}

long long order(const Permutation& p) {
    std::vector<char> done(p.size(), 0);
    long long result = 1;
    for (int s = 0; s < p.size(); ++s) {
        if (done[s]) continue;
        long long len = 0;
        for (int x = s; !done[x]; x = p[x]) {
            done[x] = 1;
            ++len;
        }
        result = std::lcm(result, len);
    }
    return result;
}

std::vector<int> cycle_of(const Permutation& p, int x) {
    if (x < 0 || x >= p.size())
        throw std::invalid_argument("cycle_of: point out of domain");
    std::vector<int> cyc{x};
    for (int y = p[x]; y != x; y = p[y]) cyc.push_back(y);
    return cyc;
}

bool is_involution(const Permutation& p) {
    for (int i = 0; i < p.size(); ++i)
        if (p[p[i]] != i) return false;
    return true;
}

bool is_fixed_point_free(const Permutation& p) {
    for (int i = 0; i < p.size(); ++i)
        if (p[i] == i) return false;
    return true;
}

OrbitPartition orbits_under(const std::vector<Permutation>& generators, int n) {
    if (n == 0)
        throw std::invalid_argument("orbits_under: empty domain");
    std::vector<Permutation> gens = generators;
    for (const auto& g : generators) {
        if (g.size() != n)
            throw std::invalid_argument("orbits_under: generator domain mismatch");
        gens.push_back(g.inverse());
    }
    OrbitPartition part;
    part.orbit_id.assign(n, -1);
    for (int s = 0; s < n; ++s) {
        if (part.orbit_id[s] >= 0) continue;
        int id = part.count();
        std::vector<int> stack{s}, members{s};
        part.orbit_id[s] = id;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (const auto& g : gens) {
                int y = g[x];
                if (part.orbit_id[y] < 0) {
                    part.orbit_id[y] = id;
                    stack.push_back(y);
                    members.push_back(y);
                }
            }
        }
        std::sort(members.begin(), members.end());
        part.orbits.push_back(std::move(members));
    }
    return part;
}

long long order_mod(long long a, long long n) {
    if (n < 1)
        throw std::invalid_argument("order_mod: modulus must be positive");
    long long r = a % n;
    if (r < 0) r += n;
    return n / std::gcd(n, r);
}

} // namespace flagwalk
