#ifndef BCAPPROX_TESTS_SUPPORT_HPP
#define BCAPPROX_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include <bcapprox/bicomplex.hpp>

namespace bc::test
{

inline double rel_err(cplx got, cplx want)
{
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

inline double rel_err(const Bicomplex &got, const Bicomplex &want)
{
    return std::max(rel_err(got.beta1(), want.beta1()), rel_err(got.beta2(), want.beta2()));
}

inline double rel_err(double got, double want)
{
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

inline double rel_err(Hyperbolic got, Hyperbolic want)
{
    return std::max(rel_err(got.a1, want.a1), rel_err(got.a2, want.a2));
}

class Rng
{
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo = -1.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
    cplx complex(double scale = 1.0) { return {scale * uniform(), scale * uniform()}; }
    // Uniform in the disk of the given radius.
    cplx in_disk(double radius)
    {
        const double r = radius * std::sqrt(uniform(0.0, 1.0));
        return std::polar(r, uniform(0.0, 2.0 * M_PI));
    }
    cplx unimodular() { return std::polar(1.0, uniform(0.0, 2.0 * M_PI)); }
    Bicomplex bicomplex(double scale = 1.0) { return Bicomplex::idempotent(complex(scale), complex(scale)); }
    std::mt19937_64 &engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

} // namespace bc::test

#endif
