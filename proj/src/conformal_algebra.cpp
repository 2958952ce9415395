#include "qvac/conformal_algebra.hpp"

#include "qvac/errors.hpp"

#include <algorithm>
#include <sstream>

namespace qvac::conformal {

namespace {

Rational eta(int mu, int nu) {
    if (mu != nu)
        return Rational(0);
    return Rational(mu == 0 ? 1 : -1);
}

void check_index(int mu) {
    if (mu < 0 || mu > 3)
        throw invalid_input("coordinate index out of range [0,3]");
}

std::string monomial_string(const RationalPoly::Exponents& e) {
    std::ostringstream os;
    bool first = true;
    for (int mu = 0; mu < 4; ++mu) {
        const int p = e[static_cast<std::size_t>(mu)];
        if (p == 0)
            continue;
        if (!first)
            os << "*";
        os << "x" << mu;
        if (p > 1)
            os << "^" << p;
        first = false;
    }
    return os.str();
}

std::string rational_string(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1)
        os << "/" << r.denominator();
    return os.str();
}

} // namespace

RationalPoly RationalPoly::constant(const Rational& c) {
    RationalPoly p;
    p.add_term({0, 0, 0, 0}, c);
    return p;
}

RationalPoly RationalPoly::coordinate(int mu) {
    check_index(mu);
    RationalPoly p;
    Exponents e{0, 0, 0, 0};
    e[static_cast<std::size_t>(mu)] = 1;
    p.add_term(e, Rational(1));
    return p;
}

RationalPoly RationalPoly::coordinate_lowered(int mu) {
    check_index(mu);
    RationalPoly p;
    Exponents e{0, 0, 0, 0};
    e[static_cast<std::size_t>(mu)] = 1;
    p.add_term(e, eta(mu, mu));
    return p;
}

RationalPoly RationalPoly::coordinate_square() {
    RationalPoly p;
    for (int mu = 0; mu < 4; ++mu) {
        Exponents e{0, 0, 0, 0};
        e[static_cast<std::size_t>(mu)] = 2;
        p.add_term(e, eta(mu, mu));
    }
    return p;
}

void RationalPoly::add_term(const Exponents& e, const Rational& c) {
    if (c == Rational(0))
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == Rational(0))
        terms_.erase(it);
}

int RationalPoly::total_degree() const {
    int deg = 0;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, e[0] + e[1] + e[2] + e[3]);
    return deg;
}

Rational RationalPoly::coefficient(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly p;
    for (const auto& [e, c] : terms_)
        p.terms_.emplace(e, -c);
    return p;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& other) {
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& other) {
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly p;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            RationalPoly::Exponents e;
            for (std::size_t mu = 0; mu < 4; ++mu)
                e[mu] = ea[mu] + eb[mu];
            p.add_term(e, ca * cb);
        }
    }
    return p;
}

RationalPoly operator*(const Rational& c, const RationalPoly& p) {
    RationalPoly out;
    if (c == Rational(0))
        return out;
    for (const auto& [e, pc] : p.terms())
        out.add_term(e, c * pc);
    return out;
}

RationalPoly RationalPoly::derivative(int mu) const {
    check_index(mu);
    RationalPoly p;
    for (const auto& [e, c] : terms_) {
        const int power = e[static_cast<std::size_t>(mu)];
        if (power == 0)
            continue;
        Exponents de = e;
        de[static_cast<std::size_t>(mu)] = power - 1;
        p.add_term(de, c * Rational(power));
    }
    return p;
}

std::string RationalPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < Rational(0);
        const Rational mag = negative ? -c : c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        const std::string mono = monomial_string(e);
        if (mono.empty())
            os << rational_string(mag);
        else if (mag == Rational(1))
            os << mono;
        else
            os << rational_string(mag) << "*" << mono;
    }
    return os.str();
}

bool DiffOperator::is_zero() const {
    return mult.is_zero() && vec[0].is_zero() && vec[1].is_zero() && vec[2].is_zero() &&
           vec[3].is_zero();
}

RationalPoly DiffOperator::apply(const RationalPoly& p) const {
    RationalPoly out = mult * p;
    for (int mu = 0; mu < 4; ++mu)
        out += vec[static_cast<std::size_t>(mu)] * p.derivative(mu);
    return out;
}

DiffOperator DiffOperator::operator-() const {
    DiffOperator r;
    r.mult = -mult;
    for (std::size_t mu = 0; mu < 4; ++mu)
        r.vec[mu] = -vec[mu];
    return r;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& other) {
    mult += other.mult;
    for (std::size_t mu = 0; mu < 4; ++mu)
        vec[mu] += other.vec[mu];
    return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& other) {
    mult -= other.mult;
    for (std::size_t mu = 0; mu < 4; ++mu)
        vec[mu] -= other.vec[mu];
    return *this;
}

DiffOperator operator*(const Rational& c, const DiffOperator& op) {
    DiffOperator r;
    r.mult = c * op.mult;
    for (std::size_t mu = 0; mu < 4; ++mu)
        r.vec[mu] = c * op.vec[mu];
    return r;
}

std::string DiffOperator::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (!mult.is_zero()) {
        os << "(" << mult.to_string() << ")";
        first = false;
    }
    for (int mu = 0; mu < 4; ++mu) {
        const auto& c = vec[static_cast<std::size_t>(mu)];
        if (c.is_zero())
            continue;
        if (!first)
            os << " + ";
        os << "(" << c.to_string() << ")*d" << mu;
        first = false;
    }
    return os.str();
}

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b) {
    // For first-order operators the second-order cross terms cancel by the
    // symmetry of mixed partials, so the commutator is again first order:
    //   mult   = c_a . grad(m_b) - c_b . grad(m_a)
    //   vec^nu = c_a^mu d_mu c_b^nu - c_b^mu d_mu c_a^nu
    DiffOperator r;
    for (int mu = 0; mu < 4; ++mu) {
        const auto m = static_cast<std::size_t>(mu);
        r.mult += a.vec[m] * b.mult.derivative(mu) - b.vec[m] * a.mult.derivative(mu);
        for (std::size_t nu = 0; nu < 4; ++nu)
            r.vec[nu] += a.vec[m] * b.vec[nu].derivative(mu) - b.vec[m] * a.vec[nu].derivative(mu);
    }
    return r;
}

namespace {

struct GeneratorInfo {
    char kind; // 'P', 'J', 'D', 'C'
    int mu = -1;
    int nu = -1;
};

GeneratorInfo generator_info(int index) {
    static constexpr std::array<std::pair<int, int>, 6> j_pairs{
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    if (index < 4)
        return {'P', index, -1};
    if (index < 10)
        return {'J', j_pairs[static_cast<std::size_t>(index - 4)].first,
                j_pairs[static_cast<std::size_t>(index - 4)].second};
    if (index == 10)
        return {'D', -1, -1};
    return {'C', index - 11, -1};
}

int j_index(int mu, int nu) {
    // mu < nu required
    static constexpr int lookup[4][4] = {
        {-1, 4, 5, 6}, {-1, -1, 7, 8}, {-1, -1, -1, 9}, {-1, -1, -1, -1}};
    return lookup[mu][nu];
}

DiffOperator build_generator(const GeneratorInfo& info) {
    DiffOperator op;
    switch (info.kind) {
    case 'P':
        op.vec[static_cast<std::size_t>(info.mu)] = RationalPoly::constant(Rational(1));
        break;
    case 'J':
        // x_mu d_nu - x_nu d_mu
        op.vec[static_cast<std::size_t>(info.nu)] = RationalPoly::coordinate_lowered(info.mu);
        op.vec[static_cast<std::size_t>(info.mu)] = -RationalPoly::coordinate_lowered(info.nu);
        break;
    case 'D':
        // -x^nu d_nu
        for (int nu = 0; nu < 4; ++nu)
            op.vec[static_cast<std::size_t>(nu)] = -RationalPoly::coordinate(nu);
        break;
    case 'C':
        // 2 x_mu x^nu d_nu - x^2 d_mu
        for (int nu = 0; nu < 4; ++nu)
            op.vec[static_cast<std::size_t>(nu)] = Rational(2) *
                (RationalPoly::coordinate_lowered(info.mu) * RationalPoly::coordinate(nu));
        op.vec[static_cast<std::size_t>(info.mu)] -= RationalPoly::coordinate_square();
        break;
    default:
        throw invalid_input("unknown generator kind");
    }
    return op;
}

/// Linear combination of basis generators, kept as exact coefficients so it
/// can be rendered and realized from the canonical representation.
struct Combination {
    std::array<Rational, generator_count> coeff{};

    void add_p(int mu, const Rational& c) { coeff[static_cast<std::size_t>(mu)] += c; }
    void add_d(const Rational& c) { coeff[10] += c; }
    void add_c(int mu, const Rational& c) { coeff[static_cast<std::size_t>(11 + mu)] += c; }
    void add_j(int mu, int nu, const Rational& c) {
        if (mu == nu)
            return;
        if (mu < nu)
            coeff[static_cast<std::size_t>(j_index(mu, nu))] += c;
        else
            coeff[static_cast<std::size_t>(j_index(nu, mu))] -= c;
    }

    DiffOperator realize(const std::array<DiffOperator, generator_count>& basis) const {
        DiffOperator op;
        for (int g = 0; g < generator_count; ++g)
            if (coeff[static_cast<std::size_t>(g)] != Rational(0))
                op += coeff[static_cast<std::size_t>(g)] * basis[static_cast<std::size_t>(g)];
        return op;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (int g = 0; g < generator_count; ++g) {
            const Rational& c = coeff[static_cast<std::size_t>(g)];
            if (c == Rational(0))
                continue;
            const bool negative = c < Rational(0);
            const Rational mag = negative ? -c : c;
            if (first)
                os << (negative ? "-" : "");
            else
                os << (negative ? " - " : " + ");
            first = false;
            if (mag != Rational(1))
                os << rational_string(mag) << "*";
            os << conformal::to_string(static_cast<GeneratorName>(g));
        }
        return first ? "0" : os.str();
    }
};

/// Structure constants for the ordered pair (i, j), i < j in the fixed
/// generator order P < J < D < C.
Combination expected_combination(int i, int j) {
    Combination out;
    const GeneratorInfo gi = generator_info(i), gj = generator_info(j);

    if (gi.kind == 'P' && gj.kind == 'P')
        return out; // (P,P) = 0
    if (gi.kind == 'P' && gj.kind == 'J') {
        // (P_a, J_{mu nu}) = -(J_{mu nu}, P_a) = eta_{mu a} P_nu - eta_{nu a} P_mu
        out.add_p(gj.nu, eta(gj.mu, gi.mu));
        out.add_p(gj.mu, -eta(gj.nu, gi.mu));
        return out;
    }
    if (gi.kind == 'P' && gj.kind == 'D') {
        // (P_a, D) = -(D, P_a) = -P_a
        out.add_p(gi.mu, Rational(-1));
        return out;
    }
    if (gi.kind == 'P' && gj.kind == 'C') {
        // (P_mu, C_nu) = -2 eta_{mu nu} D - 2 J_{mu nu}
        out.add_d(Rational(-2) * eta(gi.mu, gj.mu));
        out.add_j(gi.mu, gj.mu, Rational(-2));
        return out;
    }
    if (gi.kind == 'J' && gj.kind == 'J') {
        // (J_{mu nu}, J_{rho sigma}) = eta_{nu rho} J_{mu sigma}
        //   + eta_{mu sigma} J_{nu rho} - eta_{mu rho} J_{nu sigma}
        //   - eta_{nu sigma} J_{mu rho}
        const int mu = gi.mu, nu = gi.nu, rho = gj.mu, sigma = gj.nu;
        out.add_j(mu, sigma, eta(nu, rho));
        out.add_j(nu, rho, eta(mu, sigma));
        out.add_j(nu, sigma, -eta(mu, rho));
        out.add_j(mu, rho, -eta(nu, sigma));
        return out;
    }
    if (gi.kind == 'J' && gj.kind == 'D')
        return out; // (J, D) = 0
    if (gi.kind == 'J' && gj.kind == 'C') {
        // (J_{mu nu}, C_rho) = eta_{nu rho} C_mu - eta_{mu rho} C_nu
        out.add_c(gi.mu, eta(gi.nu, gj.mu));
        out.add_c(gi.nu, -eta(gi.mu, gj.mu));
        return out;
    }
    if (gi.kind == 'D' && gj.kind == 'C') {
        // (D, C_mu) = -C_mu
        out.add_c(gj.mu, Rational(-1));
        return out;
    }
    if (gi.kind == 'C' && gj.kind == 'C')
        return out; // (C,C) = 0
    throw invalid_input("unexpected generator pair ordering");
}

} // namespace

DiffOperator generator(GeneratorName name) {
    return build_generator(generator_info(static_cast<int>(name)));
}

const char* to_string(GeneratorName name) {
    static constexpr std::array<const char*, generator_count> names{
        "P0", "P1", "P2", "P3", "J01", "J02", "J03", "J12", "J13", "J23",
        "D",  "C0", "C1", "C2", "C3"};
    return names[static_cast<std::size_t>(name)];
}

GeneratorName generator_from_string(const std::string& name) {
    for (int g = 0; g < generator_count; ++g)
        if (name == to_string(static_cast<GeneratorName>(g)))
            return static_cast<GeneratorName>(g);
    throw invalid_input("unknown generator name: " + name);
}

std::array<DiffOperator, generator_count> standard_generators() {
    std::array<DiffOperator, generator_count> gens;
    for (int g = 0; g < generator_count; ++g)
        gens[static_cast<std::size_t>(g)] = build_generator(generator_info(g));
    return gens;
}

StructureReport check_structure_constants() {
    return check_structure_constants(standard_generators());
}

StructureReport check_structure_constants(
    const std::array<DiffOperator, generator_count>& inputs) {
    const auto canonical = standard_generators();

    struct Row {
        std::string name;
        Combination expected;
        DiffOperator expected_op;
        DiffOperator raw;
    };
    std::vector<Row> rows;
    rows.reserve(105);
    for (int i = 0; i < generator_count; ++i) {
        for (int j = i + 1; j < generator_count; ++j) {
            Row row;
            row.name = std::string("(") + to_string(static_cast<GeneratorName>(i)) + ", " +
                       to_string(static_cast<GeneratorName>(j)) + ")";
            row.expected = expected_combination(i, j);
            row.expected_op = row.expected.realize(canonical);
            row.raw = commutator(inputs[static_cast<std::size_t>(i)],
                                 inputs[static_cast<std::size_t>(j)]);
            rows.push_back(std::move(row));
        }
    }

    // Either global bracket orientation is acceptable; report whichever one
    // the inputs actually satisfy.
    int forward_passes = 0, reverse_passes = 0;
    for (const auto& row : rows) {
        if (row.raw == row.expected_op)
            ++forward_passes;
        if (-row.raw == row.expected_op)
            ++reverse_passes;
    }
    const bool forward = forward_passes >= reverse_passes;

    StructureReport report;
    report.convention = forward ? "(A,B) = AB - BA" : "(A,B) = BA - AB";
    report.total = static_cast<int>(rows.size());
    report.brackets.reserve(rows.size());
    for (const auto& row : rows) {
        const DiffOperator value = forward ? row.raw : -row.raw;
        BracketCheck check;
        check.name = row.name;
        check.expected = row.expected.to_string();
        check.pass = value == row.expected_op;
        check.computed = check.pass ? check.expected : value.to_string();
        if (check.pass)
            ++report.passed;
        report.brackets.push_back(std::move(check));
    }
    return report;
}

} // namespace qvac::conformal
