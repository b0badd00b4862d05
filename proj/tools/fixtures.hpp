#pragma once
// Small module-algebra fixtures shared by the verification suite, the CLI and
// the benchmarks.

#include "hopforbit/action.hpp"

namespace hopforbit::fixtures {

/// Taft(n) on k[u,v]: g·u = u, g·v = qv, x·u = 0, x·v = u (basis g^i x^j at i·n + j).
/// q = −1 for n = 2, otherwise ζ of the field, which must contain n-th roots.
ActionSpec taft_plane(size_t n, const FieldDescriptor& f);
/// C₂ on k[u] by u ↦ −u.
ActionSpec sign_action(const FieldDescriptor& f);
/// C₂ on k[x^±1] by inversion.
ActionSpec inversion_action(const FieldDescriptor& f);
/// S₃ permuting the variables of k[x0,x1,x2], optionally Laurent.
ActionSpec permutation_action(const FieldDescriptor& f, bool laurent = false);
/// k^{C_n} grading k[u] with u in degree 1 (needs n-th roots of unity only for the points).
ActionSpec grading_action(const FieldDescriptor& f, size_t n);
/// The trivial action of C₂ on k[u,v].
ActionSpec trivial_c2(const FieldDescriptor& f);

Point point(const PolyRing& R, const std::vector<long>& user);

}  // namespace hopforbit::fixtures
