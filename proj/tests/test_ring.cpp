#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arcalg/ring.hpp"

using namespace arcalg;

namespace {

SymbolicScalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 3), expa(0, 2), expw(-2, 2), expe(0, 1), coeff(-4, 4);
    SymbolicScalar s;
    int n = nterms(rng);
    for (int k = 0; k < n; ++k) {
        Monomial m{static_cast<uint32_t>(expa(rng)), expw(rng), static_cast<uint8_t>(expe(rng))};
        s += SymbolicScalar(m, BigInt(coeff(rng)));
    }
    return s;
}

}  // namespace

TEST_CASE("eps squares to one") {
    SymbolicScalar ew = SymbolicScalar::eps() * SymbolicScalar::omega();
    CHECK(ew * ew == SymbolicScalar::omega(2));
    CHECK(SymbolicScalar::eps() * SymbolicScalar::eps(3) == SymbolicScalar::one());
    // (1 + a e)(1 - a e) = 1 - a^2
    SymbolicScalar ae = SymbolicScalar::alpha() * SymbolicScalar::eps();
    SymbolicScalar lhs = (SymbolicScalar::one() + ae) * (SymbolicScalar::one() - ae);
    CHECK(lhs == SymbolicScalar::one() - SymbolicScalar::alpha(2));
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10000; ++t) {
        SymbolicScalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y) * z == x * (y * z));
    }
}

TEST_CASE("homogeneous degree") {
    CHECK(SymbolicScalar::alpha(2).homogeneous_degree() == 8);
    SymbolicScalar we = SymbolicScalar::omega(3) * SymbolicScalar::eps();
    CHECK(we.homogeneous_degree() == 0);
    CHECK(!(SymbolicScalar::one() + SymbolicScalar::alpha()).homogeneous_degree().has_value());
    CHECK(!SymbolicScalar::zero().homogeneous_degree().has_value());
}

TEST_CASE("units invert") {
    SymbolicScalar u = SymbolicScalar::unit_monomial(0, -2, 1, true);  // -w^-2 e
    CHECK(u.is_unit());
    CHECK(u * u.inverse_unit() == SymbolicScalar::one());
    CHECK(!SymbolicScalar::alpha().is_unit());
    CHECK((SymbolicScalar::one() + SymbolicScalar::omega()).is_unit() == false);
}

TEST_CASE("named specializations hit the published values") {
    SymbolicScalar ew = SymbolicScalar::eps() * SymbolicScalar::omega();
    auto kbn = Specialization::named("kbn");
    auto bl = Specialization::named("bl");
    auto ca = Specialization::named("ca");
    CHECK(kbn.apply(ew) == AlphaPoly(1));
    CHECK(bl.apply(ew) == AlphaPoly(-1));
    CHECK(ca.apply(SymbolicScalar::omega(2)) == AlphaPoly(-1));
    CHECK(ca.apply(SymbolicScalar::omega()) == AlphaPoly(GaussInt::i()));
    CHECK(kbn.apply(SymbolicScalar::alpha()) == AlphaPoly::alpha());
}

TEST_CASE("specialization is a ring homomorphism") {
    std::mt19937_64 rng(17);
    for (const char* name : {"kbn", "bl", "ca"}) {
        auto sp = Specialization::named(name);
        for (int t = 0; t < 1000; ++t) {
            SymbolicScalar x = random_scalar(rng), y = random_scalar(rng);
            CHECK(sp.apply(x * y) == sp.apply(x) * sp.apply(y));
            CHECK(sp.apply(x + y) == sp.apply(x) + sp.apply(y));
        }
    }
}

TEST_CASE("custom specializations parse") {
    auto s = Specialization::parse("custom:0,-1,i");
    CHECK(s.alpha_is_zero());
    CHECK(s.eps_image() == -1);
    CHECK(s.omega_image() == GaussInt::i());
    CHECK_THROWS_AS(Specialization::parse("custom:0,2,1"), ImageNotRepresentable);
    auto w = Specialization::parse("custom:a,-1,w");
    CHECK(w.symbolic_target());
    SymbolicScalar x = SymbolicScalar::eps() * SymbolicScalar::omega(-1);
    CHECK(w.apply_symbolic(x) == -SymbolicScalar::omega(-1));
}

TEST_CASE("rendering") {
    SymbolicScalar s = SymbolicScalar(Monomial{1, -1, 1}, BigInt(-2));
    CHECK(s.to_string() == "-2 a w^-1 e");
    CHECK(SymbolicScalar::zero().to_string() == "0");
}
