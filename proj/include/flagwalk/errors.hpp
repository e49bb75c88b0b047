#pragma once

#include <stdexcept>
#include <string>

namespace flagwalk {

enum class Errc {
    invalid_map,
    bad_mapfile,
    bad_argument,
    not_equivelar,
    not_dart_transitive,
    not_orientable,
    not_face_bipartite,
    corrupt_fixture,
};

// Input-level failures: bad files, axiom violations, operations requested on
// maps that do not satisfy their preconditions.
class MapError : public std::runtime_error {
public:
    MapError(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

// Raised when a computation contradicts an invariant that must hold for every
// valid dart-transitive map (e.g. a consistent walk with no structural label).
// These indicate either an implementation bug or a genuine counterexample and
// are never swallowed.
class TheoremViolation : public std::runtime_error {
public:
    explicit TheoremViolation(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace flagwalk
