#ifndef IDEALKIT_INTEGRALITY_HPP
#define IDEALKIT_INTEGRALITY_HPP

#include "idealkit/monomial.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace idealkit {

/// r^n + a_1 r^{n-1} + ... + a_n = 0 with a_i in I^i. Zero coefficients
/// may be omitted (stored as zero polynomials).
struct ExplicitEquationCert {
    Polynomial element;
    std::vector<Polynomial> ideal_gens;
    unsigned degree = 0;
    std::vector<Polynomial> coefficients;  // a_1..a_degree
};

/// Level n at which I * (I + <r>)^n = (I + <r>)^{n+1} was established.
struct DeterminantalCert {
    Polynomial element;
    std::vector<Polynomial> ideal_gens;
    unsigned level = 0;
};

/// Convex weights placing the exponent point inside the Newton polyhedron
/// of the (monomial) ideal.
struct NewtonPointCert {
    RingPtr ring;
    Exponents point;
    std::vector<Exponents> generators;
    std::vector<Rational> weights;
};

class IntegralityCertificate {
public:
    enum class Kind { ExplicitEquation, DeterminantalLevel, NewtonPoint };

    IntegralityCertificate(ExplicitEquationCert c) : data_(std::move(c)) {}
    IntegralityCertificate(DeterminantalCert c) : data_(std::move(c)) {}
    IntegralityCertificate(NewtonPointCert c) : data_(std::move(c)) {}

    Kind kind() const;
    const ExplicitEquationCert& explicit_equation() const;
    const DeterminantalCert& determinantal() const;
    const NewtonPointCert& newton_point() const;

    std::string to_json() const;
    static IntegralityCertificate from_json(const std::string& text);

private:
    std::variant<ExplicitEquationCert, DeterminantalCert, NewtonPointCert> data_;
};

enum class ClosureStatus { Integral, NotIntegralMonomialCase, UnknownWithinBudget };

struct ClosureVerdict {
    ClosureStatus status;
    std::optional<IntegralityCertificate> certificate;
    unsigned budget_used = 0;
};

/// Integral-closure membership for r over I. Monomial data goes through
/// the Newton polyhedron (sound in both directions); otherwise the
/// determinantal levels 1..budget are tried and a negative answer is
/// never claimed.
ClosureVerdict is_integral_over(const Polynomial& r, const Ideal& I, unsigned budget = 4);

/// Independent replay of a certificate; false on any failure.
bool verify_certificate(const IntegralityCertificate& c);

struct ClosureBoundResult {
    Ideal ideal;  // I plus every candidate proven integral
    std::vector<std::pair<Polynomial, ClosureVerdict>> verdicts;
    bool all_integral() const;
};

ClosureBoundResult closure_lower_bound(const Ideal& I,
                                       const std::vector<Polynomial>& candidates,
                                       unsigned budget = 4);

}  // namespace idealkit

#endif
