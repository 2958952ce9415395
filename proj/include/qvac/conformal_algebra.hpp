#pragma once

#include <array>
#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qvac::conformal {

using Rational = boost::rational<long long>;

/// Multivariate polynomial in the four coordinates x^0..x^3 with exact
/// rational coefficients. Terms are kept in canonical (lexicographic
/// exponent) order and zero coefficients are never stored.
class RationalPoly {
public:
    using Exponents = std::array<int, 4>;

    RationalPoly() = default;
    static RationalPoly constant(const Rational& c);
    /// The coordinate monomial x^mu.
    static RationalPoly coordinate(int mu);
    /// Covariant coordinate x_mu = eta_{mu nu} x^nu.
    static RationalPoly coordinate_lowered(int mu);
    /// Minkowski square x.x as a polynomial.
    static RationalPoly coordinate_square();

    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    Rational coefficient(const Exponents& e) const;

    RationalPoly operator-() const;
    RationalPoly& operator+=(const RationalPoly& other);
    RationalPoly& operator-=(const RationalPoly& other);
    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator*(const Rational& c, const RationalPoly& p);
    bool operator==(const RationalPoly& other) const = default;

    /// Partial derivative with respect to x^mu.
    RationalPoly derivative(int mu) const;

    std::string to_string() const;

    void add_term(const Exponents& e, const Rational& c);

private:
    std::map<Exponents, Rational> terms_;
};

/// First-order differential operator  m(x) + c^mu(x) d_mu  with exact
/// polynomial coefficients.
struct DiffOperator {
    RationalPoly mult;
    std::array<RationalPoly, 4> vec;

    bool is_zero() const;
    RationalPoly apply(const RationalPoly& p) const;

    DiffOperator operator-() const;
    DiffOperator& operator+=(const DiffOperator& other);
    DiffOperator& operator-=(const DiffOperator& other);
    friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
    friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
    friend DiffOperator operator*(const Rational& c, const DiffOperator& op);
    bool operator==(const DiffOperator& other) const = default;

    std::string to_string() const;
};

/// Exact commutator A B - B A; first-order operators close under it.
DiffOperator commutator(const DiffOperator& a, const DiffOperator& b);

/// The 15 conformal generators, in the fixed order
///   P0..P3, J01, J02, J03, J12, J13, J23, D, C0..C3.
/// Representation: P_mu = d_mu, J_mu_nu = x_mu d_nu - x_nu d_mu,
/// D = -x^nu d_nu, C_mu = 2 x_mu x^nu d_nu - x^2 d_mu; the two signs were
/// fixed by a brute-force search over the four sign combinations so that all
/// pairwise brackets close on the printed structure constants.
constexpr int generator_count = 15;

enum class GeneratorName {
    P0, P1, P2, P3,
    J01, J02, J03, J12, J13, J23,
    D,
    C0, C1, C2, C3,
};

DiffOperator generator(GeneratorName name);
GeneratorName generator_from_string(const std::string& name);
const char* to_string(GeneratorName name);
std::array<DiffOperator, generator_count> standard_generators();

/// One row of the structure-constant report.
struct BracketCheck {
    std::string name;     // e.g. "(P0, C1)"
    std::string expected; // linear combination dictated by the algebra
    std::string computed; // what the commutator actually produced
    bool pass = false;
};

struct StructureReport {
    std::string convention; // "(A,B) = AB - BA" or "(A,B) = BA - AB"
    int passed = 0;
    int total = 0;
    std::vector<BracketCheck> brackets;
    bool all_passed() const { return passed == total; }
};

/// Computes every pairwise bracket among 15 generator inputs and matches it
/// against the combination required by the conformal algebra. The expected
/// side is always formed from the canonical representation, so perturbing an
/// input operator localizes failures to the brackets that consume it. Both
/// global bracket orientations are tried; the better-matching one is
/// reported. With no argument the canonical generators are checked
/// (105 brackets, all expected to pass).
StructureReport check_structure_constants();
StructureReport check_structure_constants(const std::array<DiffOperator, generator_count>& inputs);

} // namespace qvac::conformal
