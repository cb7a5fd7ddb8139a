#ifndef IDEALKIT_POLY_HPP
#define IDEALKIT_POLY_HPP

#include "idealkit/ring.hpp"

#include <string>
#include <vector>

namespace idealkit {

struct Term {
    Exponents mono;
    FieldElem coeff;
};

/// Multivariate polynomial in canonical form: terms strictly descending
/// under the ring's default lex order, no zero coefficients, no duplicate
/// exponent vectors. The empty term list is the zero polynomial.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(const RingPtr& ring, FieldElem c);
    static Polynomial constant(const RingPtr& ring, const Rational& q);
    static Polynomial variable(const RingPtr& ring, int var);
    static Polynomial term(const RingPtr& ring, FieldElem c, Exponents mono);
    /// Normalizes an arbitrary term list (sorts, combines, drops zeros).
    static Polynomial from_terms(const RingPtr& ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial scaled(const FieldElem& c) const;
    /// this * c * x^mono
    Polynomial times_term(const FieldElem& c, const Exponents& mono) const;
    Polynomial pow(unsigned e) const;

    const Term& leading_term(const MonomialOrder& ord) const;
    Exponents leading_monomial(const MonomialOrder& ord) const;
    /// Scales so the leading coefficient under ord is one.
    Polynomial monic(const MonomialOrder& ord) const;

    Polynomial derivative(int var) const;

    long long total_degree() const;
    long long degree_in(int var) const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    /// Componentwise minimum over all terms (exponent of the monomial
    /// content); requires a nonzero polynomial.
    Exponents monomial_content() const;

    std::string to_text() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

inline Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

/// Maps p into `target`, sending source variable i to target variable
/// var_map[i]; target coordinates not in var_map get exponent zero.
/// Coefficients are coerced when target's field extends the source's.
Polynomial map_to_ring(const Polynomial& p, const RingPtr& target,
                       const std::vector<int>& var_map);

/// Substitutes images[i] for variable i; all images must live in one ring,
/// which becomes the result's ring. Ring homomorphism on coefficients via
/// coerce.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);

Polynomial partial_derivative(const Polynomial& p, int var);

/// Coefficient of the leading monomial in the variables outside U, viewed
/// as a polynomial over k[U]; ord must place U below its complement.
Polynomial leading_coeff_in_subring(const Polynomial& p, const std::vector<int>& u_vars,
                                    const MonomialOrder& ord);

/// Divides out rational content so coefficients are coprime integers with
/// positive leading sign (QQ only; other fields are returned monic).
Polynomial content_normalized(const Polynomial& p, const MonomialOrder& ord);

}  // namespace idealkit

#endif
