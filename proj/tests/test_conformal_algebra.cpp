#include "qvac/conformal_algebra.hpp"

#include "qvac/errors.hpp"

#include <doctest.h>
#include <random>
#include <vector>

using namespace qvac::conformal;

namespace {

// All monomials with total degree <= deg_max.
std::vector<RationalPoly> monomial_basis(int deg_max) {
    std::vector<RationalPoly> basis;
    for (int a = 0; a <= deg_max; ++a)
        for (int b = 0; a + b <= deg_max; ++b)
            for (int c = 0; a + b + c <= deg_max; ++c)
                for (int d = 0; a + b + c + d <= deg_max; ++d) {
                    RationalPoly p;
                    p.add_term({a, b, c, d}, Rational(1));
                    basis.push_back(p);
                }
    return basis;
}

} // namespace

TEST_CASE("rational polynomial arithmetic") {
    const RationalPoly x0 = RationalPoly::coordinate(0);
    const RationalPoly x1 = RationalPoly::coordinate(1);

    SUBCASE("derivative and product rule") {
        const RationalPoly p = x0 * x0 * x1; // x0^2 x1
        CHECK(p.derivative(0) == Rational(2) * (x0 * x1));
        CHECK(p.derivative(1) == x0 * x0);
        CHECK(p.derivative(2).is_zero());
    }
    SUBCASE("cancellation removes stored terms") {
        RationalPoly p = x0;
        p -= x0;
        CHECK(p.is_zero());
        CHECK(p.terms().empty());
    }
    SUBCASE("coordinate square has the right signs") {
        const RationalPoly x2 = RationalPoly::coordinate_square();
        CHECK(x2.coefficient({2, 0, 0, 0}) == Rational(1));
        CHECK(x2.coefficient({0, 2, 0, 0}) == Rational(-1));
    }
}

TEST_CASE("generator actions on low-degree polynomials") {
    SUBCASE("P0 differentiates x0 to 1") {
        const auto p0 = generator(GeneratorName::P0);
        const RationalPoly r = p0.apply(RationalPoly::coordinate(0));
        CHECK(r == RationalPoly::constant(Rational(1)));
    }
    SUBCASE("D scales x0*x1 by its degree with the sign fixed by (D,P) = P") {
        const auto d = generator(GeneratorName::D);
        const RationalPoly p = RationalPoly::coordinate(0) * RationalPoly::coordinate(1);
        CHECK(d.apply(p) == Rational(-2) * p);
        // the sign choice must reproduce (D, P_mu) = P_mu
        for (auto name : {GeneratorName::P0, GeneratorName::P2}) {
            const auto bracket = commutator(d, generator(name));
            CHECK(bracket == generator(name));
        }
    }
    SUBCASE("J01 rotates x0 into the lowered x1") {
        const auto j01 = generator(GeneratorName::J01);
        const RationalPoly r = j01.apply(RationalPoly::coordinate(0));
        // J01 x^0 = -x_1 ... sign pinned by (J_{mu nu}, P_rho)
        CHECK(r == -RationalPoly::coordinate_lowered(1));
        const auto bracket = commutator(j01, generator(GeneratorName::P0));
        // (J01, P0) = eta_10 P0 - eta_00 P1 = -P1
        CHECK(bracket == -generator(GeneratorName::P1));
    }
}

TEST_CASE("commutator identities") {
    SUBCASE("(P0, P1) and (C0, C1) vanish") {
        CHECK(commutator(generator(GeneratorName::P0), generator(GeneratorName::P1)).is_zero());
        CHECK(commutator(generator(GeneratorName::C0), generator(GeneratorName::C1)).is_zero());
    }
    SUBCASE("(P0, C0) = -2 D") {
        const auto bracket = commutator(generator(GeneratorName::P0), generator(GeneratorName::C0));
        const auto expected = Rational(-2) * generator(GeneratorName::D);
        CHECK(bracket == expected);
    }
    SUBCASE("(J_{mu nu}, C_rho) = eta_{nu rho} C_mu - eta_{mu rho} C_nu") {
        const auto bracket =
            commutator(generator(GeneratorName::J12), generator(GeneratorName::C2));
        // eta_22 = -1: expect -C1
        CHECK(bracket == -generator(GeneratorName::C1));
    }
    SUBCASE("antisymmetry is exact") {
        const auto gens = standard_generators();
        std::mt19937 rng(7);
        std::uniform_int_distribution<std::size_t> pick(0, generator_count - 1);
        for (int trial = 0; trial < 30; ++trial) {
            const auto& a = gens[pick(rng)];
            const auto& b = gens[pick(rng)];
            CHECK(commutator(a, b) == -commutator(b, a));
        }
    }
    SUBCASE("Jacobi identity holds exactly for 50 random triples") {
        const auto gens = standard_generators();
        std::mt19937 rng(11);
        std::uniform_int_distribution<std::size_t> pick(0, generator_count - 1);
        for (int trial = 0; trial < 50; ++trial) {
            const auto& a = gens[pick(rng)];
            const auto& b = gens[pick(rng)];
            const auto& c = gens[pick(rng)];
            DiffOperator jacobi = commutator(commutator(a, b), c);
            jacobi += commutator(commutator(b, c), a);
            jacobi += commutator(commutator(c, a), b);
            CHECK(jacobi.is_zero());
        }
    }
}

TEST_CASE("operator equality is decided by action on degree <= 3 monomials") {
    // Generator coefficients have degree <= 2, so their brackets act
    // faithfully on the degree-3 monomial basis: two operators agree as
    // operators iff they agree on that basis.
    const auto basis = monomial_basis(3);
    const auto gens = standard_generators();
    std::mt19937 rng(23);
    std::uniform_int_distribution<std::size_t> pick(0, generator_count - 1);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = gens[pick(rng)];
        const auto b = gens[pick(rng)];
        const auto lhs = commutator(a, b);
        const auto rhs = -commutator(b, a);
        bool same_action = true;
        for (const auto& m : basis)
            if (!(lhs.apply(m) == rhs.apply(m)))
                same_action = false;
        CHECK(same_action == (lhs == rhs));
    }
    // and a deliberately different pair must differ on the basis
    const auto p0 = generator(GeneratorName::P0);
    const auto p1 = generator(GeneratorName::P1);
    bool differs = false;
    for (const auto& m : basis)
        if (!(p0.apply(m) == p1.apply(m)))
            differs = true;
    CHECK(differs);
}

TEST_CASE("check_structure_constants") {
    SUBCASE("full run: 105/105 brackets pass") {
        const auto report = check_structure_constants();
        CHECK(report.total == 105);
        CHECK(report.passed == 105);
        CHECK(report.all_passed());
        CHECK(report.convention == "(A,B) = AB - BA");
        for (const auto& row : report.brackets)
            CHECK(row.pass);
    }

    SUBCASE("flipped D sign fails exactly the (D,P) and (D,C) rows") {
        auto inputs = standard_generators();
        inputs[10] = -inputs[10]; // D
        const auto report = check_structure_constants(inputs);
        CHECK(report.total == 105);
        CHECK(report.passed == 105 - 8);
        for (const auto& row : report.brackets) {
            const bool involves_d = row.name.find("D") != std::string::npos;
            const bool with_j = row.name.find("J") != std::string::npos;
            if (involves_d && !with_j)
                CHECK_FALSE(row.pass); // (P, D) and (D, C): 8 rows
            else if (involves_d && with_j)
                CHECK(row.pass); // (J, D) = 0 survives the flip
            else
                CHECK(row.pass);
        }
    }

    SUBCASE("report rows carry the expected combinations") {
        const auto report = check_structure_constants();
        bool found = false;
        for (const auto& row : report.brackets) {
            if (row.name == "(P0, C0)") {
                CHECK(row.expected == "-2*D");
                found = true;
            }
        }
        CHECK(found);
    }
}

TEST_CASE("generator name round-trip") {
    CHECK(generator_from_string("J13") == GeneratorName::J13);
    CHECK(generator_from_string("D") == GeneratorName::D);
    CHECK_THROWS_AS(generator_from_string("Q7"), qvac::invalid_input);
}
