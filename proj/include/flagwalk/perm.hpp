#pragma once

#include <vector>

namespace flagwalk {

// Permutation of {0,...,n-1} stored as a full image table.
// Composition is written left-to-right: compose(p, q) applies p first.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images); // validates bijectivity

    static Permutation identity(int n);
    // Convenience for tests and hand-entered data: disjoint cycles on n points.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int size() const { return static_cast<int>(img_.size()); }
    int operator[](int x) const { return img_[x]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;
    bool is_identity() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> img_;

    struct unchecked_t {};
    Permutation(std::vector<int> images, unchecked_t) : img_(std::move(images)) {}

    friend Permutation compose(const Permutation& p, const Permutation& q);
};

// Applies p first, then q.
Permutation compose(const Permutation& p, const Permutation& q);

// Least k >= 1 with p^k = id; the lcm of the cycle lengths.
long long order(const Permutation& p);

// Orbit of x under <p>, listed in application order starting at x.
std::vector<int> cycle_of(const Permutation& p, int x);

bool is_involution(const Permutation& p);
bool is_fixed_point_free(const Permutation& p);

struct OrbitPartition {
    std::vector<int> orbit_id;             // point -> orbit index
    std::vector<std::vector<int>> orbits;  // sorted members, ordered by least member
    int count() const { return static_cast<int>(orbits.size()); }
};

// Connected components of the union of the generators' functional graphs.
// Orbits are numbered by least member, so the result does not depend on
// generator order.
OrbitPartition orbits_under(const std::vector<Permutation>& generators, int n);

// Additive order of a modulo n, i.e. n / gcd(n, a); the order of 0 is 1.
long long order_mod(long long a, long long n);

} // namespace flagwalk
