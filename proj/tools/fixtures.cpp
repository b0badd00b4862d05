#include "fixtures.hpp"

#include <algorithm>
#include <array>

namespace hopforbit::fixtures {

ActionSpec taft_plane(size_t n, const FieldDescriptor& f) {
    Scalar q = n == 2 ? Scalar(f, -1L) : primitive_root(f, static_cast<long>(n));
    PolyRing R(f, {"u", "v"});
    Poly u = Poly::var(R, 0), v = Poly::var(R, 1);
    std::vector<std::vector<Poly>> table;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Poly tu = j == 0 ? u : Poly(R);
            Poly tv = j == 0 ? v.scaled(q.pow(static_cast<long>(i))) : (j == 1 ? u : Poly(R));
            table.push_back({tu, tv});
        }
    return ActionSpec(taft_fd(n, q), AffineAlgebra(Ideal::zero(R)), table);
}

ActionSpec sign_action(const FieldDescriptor& f) {
    PolyRing R(f, {"u"});
    Poly u = Poly::var(R, 0);
    return ActionSpec(group_algebra(f, cyclic_group_table(2)), AffineAlgebra(Ideal::zero(R)), {{u}, {-u}});
}

ActionSpec inversion_action(const FieldDescriptor& f) {
    PolyRing R(f, {"x"}, {true});
    return ActionSpec(group_algebra(f, cyclic_group_table(2)), AffineAlgebra(Ideal::zero(R)),
                      {{Poly::var(R, 0)}, {parse_poly(R, "x^-1")}});
}

ActionSpec permutation_action(const FieldDescriptor& f, bool laurent) {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::vector<size_t>> t(6, std::vector<size_t>(6));
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) {
            std::array<int, 3> c{};
            for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
            t[i][j] = std::find(perms.begin(), perms.end(), c) - perms.begin();
        }
    PolyRing R(f, {"x0", "x1", "x2"}, std::vector<bool>(3, laurent));
    std::vector<std::vector<Poly>> table;
    for (const auto& q : perms) table.push_back({Poly::var(R, q[0]), Poly::var(R, q[1]), Poly::var(R, q[2])});
    return ActionSpec(group_algebra(f, t), AffineAlgebra(Ideal::zero(R)), table);
}

ActionSpec grading_action(const FieldDescriptor& f, size_t n) {
    auto kg = dual(group_algebra(f, cyclic_group_table(n)));
    PolyRing R(f, {"u"});
    std::vector<std::vector<Poly>> table;
    for (size_t g = 0; g < n; ++g) table.push_back({g == 1 ? Poly::var(R, 0) : Poly(R)});
    return ActionSpec(kg, AffineAlgebra(Ideal::zero(R)), table);
}

ActionSpec trivial_c2(const FieldDescriptor& f) {
    PolyRing R(f, {"u", "v"});
    return trivial_action(group_algebra(f, cyclic_group_table(2)), AffineAlgebra(Ideal::zero(R)));
}

Point point(const PolyRing& R, const std::vector<long>& user) {
    Vec v;
    for (long x : user) v.push_back(Scalar(R.field(), x));
    return Point::from_user(R, v);
}

}  // namespace hopforbit::fixtures
