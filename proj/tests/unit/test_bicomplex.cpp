#include <doctest.h>

#include <bcapprox/bicomplex.hpp>
#include <bcapprox/errors.hpp>

#include "support.hpp"

using namespace bc;
using bc::test::rel_err;
using bc::test::Rng;

namespace
{

constexpr cplx I{0.0, 1.0};

// (Z1 + j Z2)(W1 + j W2) with j^2 = -1 and i j = j i.
std::pair<cplx, cplx> cartesian_product(cplx z1, cplx z2, cplx w1, cplx w2)
{
    return {z1 * w1 - z2 * w2, z1 * w2 + z2 * w1};
}

} // namespace

TEST_CASE("idempotent decomposition")
{
    auto [a1, a2] = idempotent_decompose(1.0, 0.0);
    CHECK(a1 == cplx(1.0));
    CHECK(a2 == cplx(1.0));

    // e1 = (1 + k) / 2 with k = i j, so Z1 = 1/2 and Z2 = i/2.
    auto [b1, b2] = idempotent_decompose(0.5, 0.5 * I);
    CHECK(std::abs(b1 - 1.0) < 1e-15);
    CHECK(std::abs(b2) < 1e-15);
    CHECK(e1.z1() == cplx(0.5));
    CHECK(e1.z2() == 0.5 * I);

    auto [c1, c2] = idempotent_decompose(cplx(3, 1), cplx(2, -1));
    CHECK(c1 == cplx(2, -1));
    CHECK(c2 == cplx(4, 3));
    auto [z1, z2] = idempotent_compose(c1, c2);
    CHECK(z1 == cplx(3, 1));
    CHECK(z2 == cplx(2, -1));
}

TEST_CASE("units satisfy the multiplication table")
{
    const Bicomplex one = 1.0;
    CHECK(unit_i * unit_i == -one);
    CHECK(unit_j * unit_j == -one);
    CHECK(unit_k * unit_k == one);
    CHECK(unit_i * unit_j == unit_k);
    CHECK(unit_j * unit_i == unit_k);
    CHECK(e1 * e2 == Bicomplex(0.0));
    CHECK(e1 * e1 == e1);
    CHECK(e2 * e2 == e2);
    CHECK(e1 + e2 == one);
    CHECK(Bicomplex::cartesian(0.0, 1.0) == unit_j);
}

TEST_CASE("multiplication")
{
    CHECK(Bicomplex::idempotent(2, 3) * Bicomplex::idempotent(5, 7) == Bicomplex::idempotent(10, 21));
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        const Bicomplex z = rng.bicomplex(3.0);
        CHECK(z * Bicomplex(1.0) == z);
        const Bicomplex w = rng.bicomplex(3.0);
        auto [p1, p2] = cartesian_product(z.z1(), z.z2(), w.z1(), w.z2());
        CHECK(rel_err(multiply(z, w), Bicomplex::cartesian(p1, p2)) < 1e-12);
    }
}

TEST_CASE("inversion")
{
    CHECK(invert(2.0) == Bicomplex(0.5));
    CHECK(invert(Bicomplex::idempotent(2, 4)) == Bicomplex::idempotent(0.5, 0.25));
    CHECK_THROWS_AS(invert(e1), NullConeError);
    CHECK_THROWS_AS(invert(e2), NullConeError);
    CHECK_THROWS_AS(invert(0.0), NullConeError);
    CHECK_THROWS_AS(Bicomplex(1.0) / e2, NullConeError);
    CHECK_THROWS_AS(invert(Bicomplex::idempotent(1e-3, 1.0), 1e-2), NullConeError);

    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        const Bicomplex z = rng.bicomplex(2.0);
        CHECK(rel_err(z * invert(z), Bicomplex(1.0)) < 1e-12);
    }
}

TEST_CASE("conjugations")
{
    for (auto kind : {Conjugation::bar, Conjugation::dagger, Conjugation::star})
        CHECK(conjugate(Bicomplex(2.5), kind) == Bicomplex(2.5));

    // Z = j -> Z^dagger = -j.
    const Bicomplex d = conjugate(Bicomplex::cartesian(0.0, 1.0), Conjugation::dagger);
    CHECK(std::abs(d.z1()) < 1e-15);
    CHECK(std::abs(d.z2() + 1.0) < 1e-15);

    const Bicomplex z = Bicomplex::cartesian(3.0, 4.0);
    const Bicomplex zz = z * conjugate(z, Conjugation::dagger);
    CHECK(zz == Bicomplex(25.0));

    // bar conjugates i only; star conjugates i and flips j.
    const Bicomplex w = Bicomplex::cartesian(cplx(1, 2), cplx(3, -4));
    const Bicomplex bar = conjugate(w, Conjugation::bar);
    CHECK(rel_err(bar.z1(), cplx(1, -2)) < 1e-15);
    CHECK(rel_err(bar.z2(), cplx(3, 4)) < 1e-15);
    const Bicomplex star = conjugate(w, Conjugation::star);
    CHECK(rel_err(star.z1(), cplx(1, -2)) < 1e-15);
    CHECK(rel_err(star.z2(), -cplx(3, 4)) < 1e-15);

    Rng rng(5);
    for (int t = 0; t < 200; ++t) {
        const Bicomplex a = rng.bicomplex(), b = rng.bicomplex();
        for (auto kind : {Conjugation::bar, Conjugation::dagger, Conjugation::star}) {
            CHECK(conjugate(conjugate(a, kind), kind) == a);
            CHECK(rel_err(conjugate(a * b, kind), conjugate(a, kind) * conjugate(b, kind)) < 1e-14);
        }
    }
}

TEST_CASE("norm_k")
{
    CHECK(norm_k(0.0) == Hyperbolic(0, 0));
    CHECK(norm_k(e1) == Hyperbolic(1, 0));
    CHECK(norm_k(Bicomplex::idempotent(cplx(3, 4), -5.0)) == Hyperbolic(5, 5));
    Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        const Bicomplex a = rng.bicomplex(4.0), b = rng.bicomplex(4.0);
        CHECK(rel_err(norm_k(a * b), norm_k(a) * norm_k(b)) < 1e-12);
    }
}

TEST_CASE("hyperbolic order")
{
    CHECK(hyp_leq({0, 0}, {1, 1}));
    CHECK_FALSE(hyp_leq({1, 0}, {0, 1}));
    CHECK_FALSE(hyp_leq({0, 1}, {1, 0}));
    CHECK(hyp_leq({0.3, 0.9}, {0.3, 1.0}));
    CHECK_FALSE(hyp_less({0.3, 0.9}, {0.3, 1.0}));
    CHECK(hyp_less({0.2, 0.9}, {0.3, 1.0}));

    Rng rng(13);
    auto draw = [&] { return Hyperbolic(std::round(rng.uniform(0, 3)), std::round(rng.uniform(0, 3))); };
    for (int t = 0; t < 2000; ++t) {
        const Hyperbolic a = draw(), b = draw(), c = draw();
        CHECK(hyp_leq(a, a));
        if (hyp_leq(a, b) && hyp_leq(b, a))
            CHECK(a == b);
        if (hyp_leq(a, b) && hyp_leq(b, c))
            CHECK(hyp_leq(a, c));
    }
}

TEST_CASE("zero divisors and the null cone")
{
    CHECK(is_zero_divisor(e1));
    CHECK(is_zero_divisor(e2));
    CHECK_FALSE(is_zero_divisor(1.0));
    CHECK_FALSE(is_zero_divisor(0.0));
    CHECK(in_null_cone(0.0));
    // 1 + j i: Z1^2 + Z2^2 = 0.
    CHECK(is_zero_divisor(Bicomplex::cartesian(1.0, I)));

    Rng rng(17);
    for (int t = 0; t < 300; ++t) {
        Bicomplex z = rng.bicomplex();
        if (t % 3 == 0)
            z = Bicomplex::idempotent(z.beta1(), 0.0);
        else if (t % 3 == 1)
            z = Bicomplex::idempotent(0.0, z.beta2());
        bool threw = false;
        try {
            (void)invert(z);
        } catch (const NullConeError &) {
            threw = true;
        }
        CHECK(threw == in_null_cone(z));
        CHECK(threw == (is_zero_divisor(z) || z.is_zero()));
    }
}

TEST_CASE("extended values")
{
    const ExtendedBicomplex fin(Bicomplex(2.0));
    CHECK(fin.is_finite());
    CHECK(fin.finite_value() == Bicomplex(2.0));
    const ExtendedBicomplex a(ExtendedComplex::infinity(), cplx(1.0));
    CHECK(a.kind() == ExtendedBicomplex::Kind::infinite_e1);
    CHECK_THROWS_AS(a.finite_value(), DomainError);
    const ExtendedBicomplex b(cplx(1.0), ExtendedComplex::infinity());
    CHECK(b.kind() == ExtendedBicomplex::Kind::infinite_e2);
    const ExtendedBicomplex c(ExtendedComplex::infinity(), ExtendedComplex::infinity());
    CHECK(c.kind() == ExtendedBicomplex::Kind::infinite_both);
    CHECK(ExtendedComplex::infinity() == ExtendedComplex::infinity());
    CHECK_FALSE(ExtendedComplex::infinity() == ExtendedComplex(cplx(0.0)));
}
