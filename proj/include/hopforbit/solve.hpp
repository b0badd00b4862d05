#pragma once

#include "hopforbit/polyring.hpp"
#include "hopforbit/upoly.hpp"

namespace hopforbit {

/// A rational maximal ideal: one coordinate per ring variable (Laurent
/// partners carry the inverse of their base coordinate).
struct Point {
    PolyRing ring;
    Vec coords;

    static Point from_user(const PolyRing& ring, const Vec& user_coords);
    Vec user_coords() const;
    Ideal ideal() const;  // ⟨x_i − c_i⟩ over the user variables
    std::string to_string() const;
    friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
    friend bool operator<(const Point& a, const Point& b) { return a.coords < b.coords; }
};

struct RootReport {
    std::vector<Scalar> roots;  // distinct, sorted
    int unresolved_degree = 0;   // degree of the part without roots in the field
};

/// Roots of f lying in its coefficient field.
RootReport roots_in_field(const UPoly& f);

struct SolveReport {
    std::vector<Point> points;  // sorted
    int unresolved_degree = 0;   // total residue degree of non-rational components
};

/// Rational points of a zero-dimensional ideal, plus the degree left over.
SolveReport solve_zero_dim_partial(const Ideal& I);
/// Throws NonRationalPoint(degree) if any component is non-rational and
/// InfiniteQuotient if the ideal is not zero-dimensional.
std::vector<Point> solve_zero_dim(const Ideal& I);

}  // namespace hopforbit
