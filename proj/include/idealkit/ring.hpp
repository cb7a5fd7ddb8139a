#ifndef IDEALKIT_RING_HPP
#define IDEALKIT_RING_HPP

#include "idealkit/field.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace idealkit {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Multivariate polynomial ring: an ordered variable list over a field.
/// The declared variable sequence fixes indices and the default order.
class PolyRing {
public:
    static RingPtr make(std::vector<std::string> variables, FieldPtr field);

    int arity() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::string& variable_name(int i) const { return vars_.at(static_cast<std::size_t>(i)); }
    std::optional<int> variable_index(const std::string& name) const;
    const FieldPtr& field() const { return field_; }

    bool same(const PolyRing& other) const;
    std::string to_text() const;

private:
    PolyRing(std::vector<std::string> vars, FieldPtr field)
        : vars_(std::move(vars)), field_(std::move(field)) {}

    std::vector<std::string> vars_;
    FieldPtr field_;
};

/// Dense exponent vector; length always equals the ring arity.
using Exponents = std::vector<int>;

Exponents expo_add(const Exponents& a, const Exponents& b);
/// Componentwise a - b; requires b componentwise <= a.
Exponents expo_sub(const Exponents& a, const Exponents& b);
bool expo_divides(const Exponents& divisor, const Exponents& multiple);
Exponents expo_lcm(const Exponents& a, const Exponents& b);
Exponents expo_gcd(const Exponents& a, const Exponents& b);
bool expo_coprime(const Exponents& a, const Exponents& b);
long long expo_total_degree(const Exponents& a);
bool expo_is_zero(const Exponents& a);

/// Monomial order realized as lexicographic comparison along a variable
/// priority permutation. Block orders place one variable group strictly
/// above the other, which pure lex on the reordered sequence provides.
class MonomialOrder {
public:
    /// Lex with the ring's declared variable sequence.
    static MonomialOrder lex(int arity);
    static MonomialOrder lex_permuted(std::vector<int> priority);
    /// Block order with the variables `low` strictly below the rest;
    /// both blocks keep the declared sequence internally.
    static MonomialOrder block_lowest(int arity, const std::vector<int>& low);
    /// Elimination order: `high` strictly above the rest.
    static MonomialOrder block_highest(int arity, const std::vector<int>& high);

    int arity() const { return static_cast<int>(priority_.size()); }
    const std::vector<int>& priority() const { return priority_; }

    int compare(const Exponents& a, const Exponents& b) const;
    bool less(const Exponents& a, const Exponents& b) const { return compare(a, b) < 0; }
    bool greater(const Exponents& a, const Exponents& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& other) const { return priority_ == other.priority_; }

private:
    explicit MonomialOrder(std::vector<int> priority) : priority_(std::move(priority)) {}
    std::vector<int> priority_;
};

}  // namespace idealkit

#endif
