#ifndef IDEALKIT_FIELD_HPP
#define IDEALKIT_FIELD_HPP

#include "idealkit/error.hpp"
#include "idealkit/numeric.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace idealkit {

enum class FieldKind { Rationals, PrimeField, SimpleExtension };

class FieldDescriptor;
class FieldElem;

using FieldPtr = std::shared_ptr<const FieldDescriptor>;

/// Coefficient domain: QQ, Fp(p), or a one-step extension base[gen]/(m).
///
/// Extension minimal polynomials are stored monic with degree >= 2.
/// Irreducibility is the caller's contract; for degree 2 and 3 over QQ it
/// is spot-checked by rational-root absence, and over small Fp by an
/// exhaustive root scan.
class FieldDescriptor : public std::enable_shared_from_this<FieldDescriptor> {
public:
    static FieldPtr rationals();
    static FieldPtr prime_field(long long p);
    /// minimal_poly lists coefficients c0..cd of c0 + c1*a + ... + cd*a^d
    /// over the base field; it is normalized to monic form internally.
    static FieldPtr simple_extension(FieldPtr base, std::string generator_name,
                                     std::vector<FieldElem> minimal_poly);

    FieldKind kind() const { return kind_; }
    long long prime() const;
    const FieldPtr& base() const;
    const std::string& generator_name() const;
    /// Monic minimal polynomial as c0..c_{d-1} (the coefficient of a^d is 1).
    const std::vector<FieldElem>& minimal_poly_tail() const;
    int extension_degree() const;

    /// 0 for QQ and QQ-based extensions, p for Fp and Fp-based extensions.
    long long characteristic() const;

    bool same(const FieldDescriptor& other) const;
    std::string to_text() const;

private:
    FieldDescriptor() = default;

    FieldKind kind_ = FieldKind::Rationals;
    long long prime_ = 0;
    FieldPtr base_;
    std::string generator_;
    std::vector<FieldElem> minpoly_tail_;
};

/// Immutable exact scalar in one of the supported coefficient domains.
class FieldElem {
public:
    FieldElem() = default;  // zero of QQ

    static FieldElem zero(const FieldPtr& field);
    static FieldElem one(const FieldPtr& field);
    static FieldElem from_integer(const FieldPtr& field, const BigInt& n);
    static FieldElem from_rational(const FieldPtr& field, const Rational& q);
    /// The extension generator a of base[a]/(m).
    static FieldElem generator(const FieldPtr& field);
    /// Element with the given coordinates over the base (length <= degree).
    static FieldElem from_coords(const FieldPtr& field,
                                 std::vector<FieldElem> coords);

    const FieldPtr& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;
    bool operator==(const FieldElem& other) const;
    bool operator!=(const FieldElem& other) const { return !(*this == other); }

    FieldElem operator+(const FieldElem& other) const;
    FieldElem operator-(const FieldElem& other) const;
    FieldElem operator*(const FieldElem& other) const;
    FieldElem operator/(const FieldElem& other) const;
    FieldElem operator-() const;
    FieldElem inverse() const;
    FieldElem pow(unsigned long long e) const;

    /// Accessors; each asserts the matching kind.
    const Rational& rational() const;
    long long residue() const;
    /// Coordinates over the base, length == extension degree.
    std::vector<FieldElem> coords() const;

    std::string to_text() const;

private:
    using Rep = std::variant<Rational, long long, std::vector<FieldElem>>;

    FieldElem(FieldPtr field, Rep rep)
        : field_(std::move(field)), rep_(std::move(rep)) {}

    static void require_same_field(const FieldElem& a, const FieldElem& b);

    FieldPtr field_ = FieldDescriptor::rationals();
    Rep rep_ = Rational(0);
};

/// Embeds a base-field element into an extension of that base.
FieldElem extension_embed(const FieldElem& a, const FieldPtr& target);

/// Coerces a into target when target equals a's field or extends it.
FieldElem coerce(const FieldElem& a, const FieldPtr& target);

inline FieldElem field_add(const FieldElem& a, const FieldElem& b) { return a + b; }
inline FieldElem field_mul(const FieldElem& a, const FieldElem& b) { return a * b; }
inline FieldElem field_neg(const FieldElem& a) { return -a; }
inline FieldElem field_inv(const FieldElem& a) { return a.inverse(); }

}  // namespace idealkit

#endif
