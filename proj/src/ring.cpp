#include "idealkit/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace idealkit {

RingPtr PolyRing::make(std::vector<std::string> variables, FieldPtr field) {
    if (!field) throw RingError("ring requires a coefficient field");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (v.empty()) throw RingError("empty variable name");
        if (!seen.insert(v).second)
            throw RingError("duplicate variable '" + v + "'");
        if (field->kind() == FieldKind::SimpleExtension &&
            v == field->generator_name())
            throw RingError("variable '" + v + "' clashes with the field generator");
    }
    return RingPtr(new PolyRing(std::move(variables), std::move(field)));
}

std::optional<int> PolyRing::variable_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

bool PolyRing::same(const PolyRing& other) const {
    if (this == &other) return true;
    return vars_ == other.vars_ && field_->same(*other.field_);
}

std::string PolyRing::to_text() const {
    std::string out = field_->to_text() + "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) out += ",";
        out += vars_[i];
    }
    return out + "]";
}

Exponents expo_add(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Exponents expo_sub(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] - b[i];
        if (out[i] < 0) throw RingError("monomial division with negative exponent");
    }
    return out;
}

bool expo_divides(const Exponents& divisor, const Exponents& multiple) {
    for (std::size_t i = 0; i < divisor.size(); ++i)
        if (divisor[i] > multiple[i]) return false;
    return true;
}

Exponents expo_lcm(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

Exponents expo_gcd(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
    return out;
}

bool expo_coprime(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

long long expo_total_degree(const Exponents& a) {
    return std::accumulate(a.begin(), a.end(), 0LL);
}

bool expo_is_zero(const Exponents& a) {
    return std::all_of(a.begin(), a.end(), [](int e) { return e == 0; });
}

MonomialOrder MonomialOrder::lex(int arity) {
    std::vector<int> p(static_cast<std::size_t>(arity));
    std::iota(p.begin(), p.end(), 0);
    return MonomialOrder(std::move(p));
}

MonomialOrder MonomialOrder::lex_permuted(std::vector<int> priority) {
    std::vector<int> sorted = priority;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i))
            throw RingError("order priority must be a permutation of the variables");
    return MonomialOrder(std::move(priority));
}

MonomialOrder MonomialOrder::block_lowest(int arity, const std::vector<int>& low) {
    std::vector<bool> is_low(static_cast<std::size_t>(arity), false);
    for (int v : low) {
        if (v < 0 || v >= arity) throw RingError("block variable out of range");
        is_low[static_cast<std::size_t>(v)] = true;
    }
    std::vector<int> p;
    for (int i = 0; i < arity; ++i)
        if (!is_low[static_cast<std::size_t>(i)]) p.push_back(i);
    for (int i = 0; i < arity; ++i)
        if (is_low[static_cast<std::size_t>(i)]) p.push_back(i);
    return lex_permuted(std::move(p));
}

MonomialOrder MonomialOrder::block_highest(int arity, const std::vector<int>& high) {
    std::vector<bool> is_high(static_cast<std::size_t>(arity), false);
    for (int v : high) {
        if (v < 0 || v >= arity) throw RingError("block variable out of range");
        is_high[static_cast<std::size_t>(v)] = true;
    }
    std::vector<int> p;
    for (int i = 0; i < arity; ++i)
        if (is_high[static_cast<std::size_t>(i)]) p.push_back(i);
    for (int i = 0; i < arity; ++i)
        if (!is_high[static_cast<std::size_t>(i)]) p.push_back(i);
    return lex_permuted(std::move(p));
}

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
    for (int v : priority_) {
        int d = a[static_cast<std::size_t>(v)] - b[static_cast<std::size_t>(v)];
        if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
}

}  // namespace idealkit
