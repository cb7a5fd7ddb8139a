#include "idealkit/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace idealkit {

namespace {

// Canonical storage order: descending lex along the declared sequence.
int canonical_compare(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

struct CanonicalDesc {
    bool operator()(const Exponents& a, const Exponents& b) const {
        return canonical_compare(a, b) > 0;
    }
};

void require_same_ring(const Polynomial& p, const Polynomial& q) {
    if (!p.ring() || !q.ring() || !p.ring()->same(*q.ring()))
        throw RingError("polynomials live in different rings");
}

struct CoeffText {
    bool negative;
    std::string magnitude;
    bool parenthesize;
};

CoeffText coeff_text(const FieldElem& c) {
    std::string t = c.to_text();
    bool multi = t.find(" + ") != std::string::npos || t.find(" - ") != std::string::npos;
    if (multi) return {false, t, true};
    if (!t.empty() && t[0] == '-') return {true, t.substr(1), false};
    return {false, t, false};
}

std::string monomial_text(const RingPtr& ring, const Exponents& e) {
    std::string out;
    for (int v = 0; v < ring->arity(); ++v) {
        int k = e[static_cast<std::size_t>(v)];
        if (k == 0) continue;
        if (!out.empty()) out += "*";
        out += ring->variable_name(v);
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace

Polynomial Polynomial::constant(const RingPtr& ring, FieldElem c) {
    Polynomial p(ring);
    if (!c.field()->same(*ring->field()))
        throw RingError("constant coefficient not in the ring's field");
    if (!c.is_zero())
        p.terms_.push_back({Exponents(static_cast<std::size_t>(ring->arity()), 0), std::move(c)});
    return p;
}

Polynomial Polynomial::constant(const RingPtr& ring, const Rational& q) {
    return constant(ring, FieldElem::from_rational(ring->field(), q));
}

Polynomial Polynomial::variable(const RingPtr& ring, int var) {
    if (var < 0 || var >= ring->arity()) throw RingError("variable index out of range");
    Exponents e(static_cast<std::size_t>(ring->arity()), 0);
    e[static_cast<std::size_t>(var)] = 1;
    return term(ring, FieldElem::one(ring->field()), std::move(e));
}

Polynomial Polynomial::term(const RingPtr& ring, FieldElem c, Exponents mono) {
    if (static_cast<int>(mono.size()) != ring->arity())
        throw RingError("exponent vector length mismatch");
    Polynomial p(ring);
    if (!c.field()->same(*ring->field()))
        throw RingError("coefficient not in the ring's field");
    if (!c.is_zero()) p.terms_.push_back({std::move(mono), std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(const RingPtr& ring, std::vector<Term> terms) {
    std::map<Exponents, FieldElem, CanonicalDesc> acc;
    for (auto& t : terms) {
        if (static_cast<int>(t.mono.size()) != ring->arity())
            throw RingError("exponent vector length mismatch");
        auto it = acc.find(t.mono);
        if (it == acc.end())
            acc.emplace(std::move(t.mono), std::move(t.coeff));
        else
            it->second = it->second + t.coeff;
    }
    Polynomial p(ring);
    for (auto& [mono, coeff] : acc)
        if (!coeff.is_zero()) p.terms_.push_back({mono, coeff});
    return p;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (!ring_ || !other.ring_) return is_zero() && other.is_zero();
    if (!ring_->same(*other.ring_)) return false;
    if (terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].mono != other.terms_[i].mono) return false;
        if (terms_[i].coeff != other.terms_[i].coeff) return false;
    }
    return true;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    require_same_ring(*this, other);
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
        int c = canonical_compare(terms_[i].mono, other.terms_[j].mono);
        if (c > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(other.terms_[j++]);
        } else {
            FieldElem s = terms_[i].coeff + other.terms_[j].coeff;
            if (!s.is_zero()) out.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < other.terms_.size(); ++j) out.terms_.push_back(other.terms_[j]);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono, -t.coeff});
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    require_same_ring(*this, other);
    if (is_zero() || other.is_zero()) return Polynomial(ring_);
    std::map<Exponents, FieldElem, CanonicalDesc> acc;
    for (const auto& a : terms_) {
        for (const auto& b : other.terms_) {
            Exponents m = expo_add(a.mono, b.mono);
            FieldElem c = a.coeff * b.coeff;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), std::move(c));
            else
                it->second = it->second + c;
        }
    }
    Polynomial out(ring_);
    for (auto& [mono, coeff] : acc)
        if (!coeff.is_zero()) out.terms_.push_back({mono, coeff});
    return out;
}

Polynomial Polynomial::scaled(const FieldElem& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono, t.coeff * c});
    return out;
}

Polynomial Polynomial::times_term(const FieldElem& c, const Exponents& mono) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back({expo_add(t.mono, mono), t.coeff * c});
    return out;
}

Polynomial Polynomial::pow(unsigned e) const {
    if (!ring_) throw RingError("pow on ringless polynomial");
    Polynomial result = Polynomial::constant(ring_, FieldElem::one(ring_->field()));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

const Term& Polynomial::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw RingError("leading term of the zero polynomial");
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (ord.compare(terms_[i].mono, terms_[best].mono) > 0) best = i;
    return terms_[best];
}

Exponents Polynomial::leading_monomial(const MonomialOrder& ord) const {
    return leading_term(ord).mono;
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
    if (terms_.empty()) return *this;
    const FieldElem& lc = leading_term(ord).coeff;
    if (lc.is_one()) return *this;
    return scaled(lc.inverse());
}

Polynomial Polynomial::derivative(int var) const {
    if (!ring_ || var < 0 || var >= ring_->arity())
        throw RingError("unknown variable in derivative");
    Polynomial out(ring_);
    for (const auto& t : terms_) {
        int e = t.mono[static_cast<std::size_t>(var)];
        if (e == 0) continue;
        FieldElem c = t.coeff * FieldElem::from_integer(ring_->field(), e);
        if (c.is_zero()) continue;  // positive characteristic can kill terms
        Exponents m = t.mono;
        m[static_cast<std::size_t>(var)] -= 1;
        out.terms_.push_back({std::move(m), std::move(c)});
    }
    return out;
}

long long Polynomial::total_degree() const {
    long long d = -1;
    for (const auto& t : terms_) d = std::max(d, expo_total_degree(t.mono));
    return d;
}

long long Polynomial::degree_in(int var) const {
    long long d = -1;
    for (const auto& t : terms_)
        d = std::max(d, static_cast<long long>(t.mono[static_cast<std::size_t>(var)]));
    return d;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && expo_is_zero(terms_[0].mono));
}

Exponents Polynomial::monomial_content() const {
    if (terms_.empty()) throw RingError("monomial content of the zero polynomial");
    Exponents out = terms_[0].mono;
    for (std::size_t i = 1; i < terms_.size(); ++i) out = expo_gcd(out, terms_[i].mono);
    return out;
}

std::string Polynomial::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        CoeffText c = coeff_text(t.coeff);
        std::string mono = monomial_text(ring_, t.mono);
        std::string body;
        if (mono.empty()) {
            body = c.parenthesize ? "(" + c.magnitude + ")" : c.magnitude;
        } else if (c.magnitude == "1" && !c.parenthesize) {
            body = mono;
        } else {
            body = (c.parenthesize ? "(" + c.magnitude + ")" : c.magnitude) + "*" + mono;
        }
        if (first) {
            if (c.negative) os << "-";
            os << body;
            first = false;
        } else {
            os << (c.negative ? " - " : " + ") << body;
        }
    }
    return os.str();
}

Polynomial map_to_ring(const Polynomial& p, const RingPtr& target,
                       const std::vector<int>& var_map) {
    if (!p.ring()) return Polynomial(target);
    if (var_map.size() != static_cast<std::size_t>(p.ring()->arity()))
        throw RingError("variable map arity mismatch");
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Exponents m(static_cast<std::size_t>(target->arity()), 0);
        for (std::size_t i = 0; i < var_map.size(); ++i) {
            int e = t.mono[i];
            if (e == 0) continue;
            if (var_map[i] < 0)
                throw RingError("polynomial uses variable '" +
                                p.ring()->variable_name(static_cast<int>(i)) +
                                "' absent from the target ring");
            m[static_cast<std::size_t>(var_map[i])] = e;
        }
        terms.push_back({std::move(m), coerce(t.coeff, target->field())});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
    if (!p.ring()) throw RingError("substitute on ringless polynomial");
    if (images.size() != static_cast<std::size_t>(p.ring()->arity()))
        throw RingError("substitution must assign every ring variable");
    if (images.empty()) throw RingError("substitution needs at least one variable");
    RingPtr target = images[0].ring();
    for (const auto& im : images)
        if (!im.ring() || !im.ring()->same(*target))
            throw RingError("substitution images live in different rings");

    // memoized powers of each image
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto image_power = [&](std::size_t v, int e) -> const Polynomial& {
        auto& ladder = powers[v];
        if (ladder.empty())
            ladder.push_back(Polynomial::constant(target, FieldElem::one(target->field())));
        while (static_cast<int>(ladder.size()) <= e)
            ladder.push_back(ladder.back() * images[v]);
        return ladder[static_cast<std::size_t>(e)];
    };

    Polynomial out(target);
    for (const auto& t : p.terms()) {
        Polynomial prod = Polynomial::constant(target, coerce(t.coeff, target->field()));
        for (std::size_t v = 0; v < images.size(); ++v) {
            int e = t.mono[v];
            if (e > 0) prod = prod * image_power(v, e);
        }
        out = out + prod;
    }
    return out;
}

Polynomial partial_derivative(const Polynomial& p, int var) {
    return p.derivative(var);
}

Polynomial leading_coeff_in_subring(const Polynomial& p, const std::vector<int>& u_vars,
                                    const MonomialOrder& ord) {
    if (p.is_zero()) throw RingError("leading coefficient of the zero polynomial");
    const RingPtr& ring = p.ring();
    std::vector<bool> in_u(static_cast<std::size_t>(ring->arity()), false);
    for (int v : u_vars) in_u[static_cast<std::size_t>(v)] = true;

    auto complement_part = [&](const Exponents& e) {
        Exponents out = e;
        for (std::size_t i = 0; i < out.size(); ++i)
            if (in_u[i]) out[i] = 0;
        return out;
    };

    Exponents best = complement_part(p.terms()[0].mono);
    for (const auto& t : p.terms()) {
        Exponents c = complement_part(t.mono);
        if (ord.compare(c, best) > 0) best = c;
    }
    std::vector<Term> coeff_terms;
    for (const auto& t : p.terms()) {
        if (complement_part(t.mono) != best) continue;
        Exponents u_part = t.mono;
        for (std::size_t i = 0; i < u_part.size(); ++i)
            if (!in_u[i]) u_part[i] = 0;
        coeff_terms.push_back({std::move(u_part), t.coeff});
    }
    return Polynomial::from_terms(ring, std::move(coeff_terms));
}

Polynomial content_normalized(const Polynomial& p, const MonomialOrder& ord) {
    if (p.is_zero()) return p;
    if (p.ring()->field()->kind() != FieldKind::Rationals) return p.monic(ord);
    BigInt num_gcd = 0;
    BigInt den_lcm = 1;
    for (const auto& t : p.terms()) {
        const Rational& q = t.coeff.rational();
        num_gcd = gcd(num_gcd, BigInt(numerator(q)));
        den_lcm = lcm(den_lcm, BigInt(denominator(q)));
    }
    Rational scale(den_lcm, num_gcd);
    if (p.leading_term(ord).coeff.rational() < 0) scale = -scale;
    return p.scaled(FieldElem::from_rational(p.ring()->field(), scale));
}

}  // namespace idealkit
