#pragma once
// Hand-rolled generators for property tests.

#include "hopforbit/polyring.hpp"
#include "hopforbit/scalar.hpp"

#include <random>

namespace testgen {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline hopforbit::Scalar scalar(Rng& rng, const hopforbit::FieldDescriptor& f, long range = 9) {
    std::vector<mpq_class> c;
    for (int i = 0; i < f.degree(); ++i) {
        if (uniform(rng, 0, 3) == 0) {
            c.emplace_back(0);
            continue;
        }
        mpq_class x(uniform(rng, -range, range), f.characteristic() ? 1 : uniform(rng, 1, 4));
        x.canonicalize();
        c.push_back(x);
    }
    return hopforbit::Scalar::from_coeffs(f, c);
}

inline mpz_class bigint(Rng& rng) {
    mpz_class r = 0;
    for (int i = 0; i < 4; ++i) r = r * mpz_class(1u << 30) + static_cast<unsigned long>(uniform(rng, 0, (1 << 30) - 1));
    return uniform(rng, 0, 1) ? r : mpz_class(-r);
}

inline hopforbit::Poly poly(Rng& rng, const hopforbit::PolyRing& R, int terms, int maxdeg) {
    using namespace hopforbit;
    std::vector<Poly::Term> ts;
    for (int k = 0; k < terms; ++k) {
        Exp e(R.nvars(), 0);
        int budget = static_cast<int>(uniform(rng, 0, maxdeg));
        for (int b = 0; b < budget; ++b) ++e[uniform(rng, 0, static_cast<long>(R.nuser()) - 1)];
        ts.push_back({e, scalar(rng, R.field(), 5)});
    }
    return Poly::from_terms(R, ts);
}

}  // namespace testgen
