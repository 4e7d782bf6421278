#pragma once

#include "ncg/scalar.hpp"

#include <random>

namespace ncg::prop {

// Small hand-rolled generators for property tests; fixed seeds keep runs reproducible.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    GaussRat rational() {
        long den = integer(1, 5);
        return GaussRat::frac(integer(-6, 6), den);
    }

    GaussRat gauss() {
        long den = integer(1, 4);
        return GaussRat::frac(integer(-4, 4), den, integer(-3, 3), integer(1, 3));
    }

    Scalar laurent(const ParamList& params, int max_terms = 4, int max_exp = 3, bool allow_negative = true) {
        Scalar s;
        int terms = int(integer(0, max_terms));
        for (int k = 0; k < terms; ++k) {
            Exponents e{};
            for (std::size_t j = 0; j < params->size(); ++j)
                e[j] = std::int32_t(integer(allow_negative ? -max_exp : 0, max_exp));
            s += Scalar::monomial(params, e, gauss());
        }
        return s.with_params(params);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace ncg::prop
