#include "idealkit/field.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace idealkit {

std::string rational_to_text(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

bool is_supported_prime(long long p) {
    if (p < 2 || p >= (1LL << 31)) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

long long mod_pos(long long a, long long p) {
    long long r = a % p;
    return r < 0 ? r + p : r;
}

long long mod_inverse(long long a, long long p) {
    long long t = 0, new_t = 1, r = p, new_r = mod_pos(a, p);
    while (new_r != 0) {
        long long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw FieldError("division by zero in F_" + std::to_string(p));
    return mod_pos(t, p);
}

// Univariate helpers over an arbitrary base field; coefficient vectors are
// low-degree-first with no trailing-zero guarantee.
using UniPoly = std::vector<FieldElem>;

void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b, const FieldPtr& base) {
    if (a.empty() || b.empty()) return {};
    UniPoly out(a.size() + b.size() - 1, FieldElem::zero(base));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = out[i + j] + a[i] * b[j];
    uni_trim(out);
    return out;
}

// Remainder of a modulo b; b nonempty with invertible leading coefficient.
UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    uni_trim(a);
    const FieldElem lead_inv = b.back().inverse();
    while (a.size() >= b.size()) {
        FieldElem factor = a.back() * lead_inv;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
            a[shift + i] = a[shift + i] - factor * b[i];
        a.pop_back();  // leading term cancels exactly
        uni_trim(a);
    }
    return a;
}

// Extended gcd: returns (g, s) with s*a = g mod m, g the monic gcd.
std::pair<UniPoly, UniPoly> uni_half_ext_gcd(UniPoly a, UniPoly m,
                                             const FieldPtr& base) {
    UniPoly r0 = std::move(m), r1 = std::move(a);
    UniPoly s0 = {}, s1 = {FieldElem::one(base)};
    uni_trim(r0);
    uni_trim(r1);
    while (!r1.empty()) {
        // divide r0 by r1: quotient q, remainder r
        UniPoly q;
        UniPoly r = r0;
        uni_trim(r);
        const FieldElem lead_inv = r1.back().inverse();
        if (r.size() >= r1.size()) q.assign(r.size() - r1.size() + 1, FieldElem::zero(base));
        while (r.size() >= r1.size() && !r.empty()) {
            FieldElem factor = r.back() * lead_inv;
            std::size_t shift = r.size() - r1.size();
            q[shift] = factor;
            for (std::size_t i = 0; i < r1.size(); ++i)
                r[shift + i] = r[shift + i] - factor * r1[i];
            uni_trim(r);
        }
        UniPoly s_next = s0;
        UniPoly qs1 = uni_mul(q, s1, base);
        std::size_t n = std::max(s_next.size(), qs1.size());
        s_next.resize(n, FieldElem::zero(base));
        for (std::size_t i = 0; i < qs1.size(); ++i)
            s_next[i] = s_next[i] - qs1[i];
        uni_trim(s_next);
        r0 = std::exchange(r1, std::move(r));
        s0 = std::exchange(s1, std::move(s_next));
    }
    if (r0.empty()) throw FieldError("gcd of zero polynomials");
    FieldElem lead_inv = r0.back().inverse();
    for (auto& c : r0) c = c * lead_inv;
    for (auto& c : s0) c = c * lead_inv;
    return {std::move(r0), std::move(s0)};
}

bool rational_root_exists(const std::vector<Rational>& coeffs) {
    // coeffs c0..cd over QQ; clear denominators, then apply the rational
    // root theorem to the integer polynomial.
    BigInt denom_lcm = 1;
    for (const auto& c : coeffs)
        denom_lcm = lcm(denom_lcm, BigInt(denominator(c)));
    std::vector<BigInt> ic;
    ic.reserve(coeffs.size());
    for (const auto& c : coeffs)
        ic.push_back(BigInt(numerator(c)) * (denom_lcm / BigInt(denominator(c))));
    if (ic.empty() || ic.front() == 0) return true;  // 0 is a root
    BigInt a0 = abs(ic.front());
    BigInt ad = abs(ic.back());
    auto divisors = [](const BigInt& n) {
        std::vector<BigInt> out;
        for (BigInt d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                out.push_back(d);
                out.push_back(n / d);
            }
        return out;
    };
    for (const BigInt& p : divisors(a0))
        for (const BigInt& q : divisors(ad)) {
            for (int s : {1, -1}) {
                Rational root(p * s, q);
                Rational acc = 0;
                for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
                    acc = acc * root + *it;
                if (acc == 0) return true;
            }
        }
    return false;
}

}  // namespace

FieldPtr FieldDescriptor::rationals() {
    static const FieldPtr instance = [] {
        auto d = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
        d->kind_ = FieldKind::Rationals;
        return FieldPtr(d);
    }();
    return instance;
}

FieldPtr FieldDescriptor::prime_field(long long p) {
    if (!is_supported_prime(p))
        throw FieldError("Fp modulus must be a prime below 2^31, got " +
                         std::to_string(p));
    auto d = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
    d->kind_ = FieldKind::PrimeField;
    d->prime_ = p;
    return d;
}

FieldPtr FieldDescriptor::simple_extension(FieldPtr base, std::string generator_name,
                                           std::vector<FieldElem> minimal_poly) {
    if (!base) throw FieldError("extension requires a base field");
    if (base->kind() == FieldKind::SimpleExtension)
        throw FieldError("extension towers are not supported");
    for (const auto& c : minimal_poly)
        if (!c.field()->same(*base))
            throw FieldError("minimal polynomial coefficients must lie in the base field");
    while (!minimal_poly.empty() && minimal_poly.back().is_zero())
        minimal_poly.pop_back();
    if (minimal_poly.size() < 3)
        throw FieldError("minimal polynomial must have degree >= 2");
    // normalize monic
    FieldElem lead_inv = minimal_poly.back().inverse();
    for (auto& c : minimal_poly) c = c * lead_inv;
    minimal_poly.pop_back();  // drop the unit leading coefficient

    int deg = static_cast<int>(minimal_poly.size());
    if (deg <= 3) {
        // spot-check irreducibility by root absence
        if (base->kind() == FieldKind::Rationals) {
            std::vector<Rational> coeffs;
            for (const auto& c : minimal_poly) coeffs.push_back(c.rational());
            coeffs.push_back(Rational(1));
            if (rational_root_exists(coeffs))
                throw FieldError("minimal polynomial has a rational root; not irreducible");
        } else if (base->kind() == FieldKind::PrimeField && base->prime() <= 65536) {
            long long p = base->prime();
            for (long long r = 0; r < p; ++r) {
                long long acc = 1;  // value of x^deg at r
                long long val = 0;
                long long power = 1;
                for (const auto& c : minimal_poly) {
                    val = mod_pos(val + c.residue() % p * power, p);
                    power = mod_pos(power * r, p);
                }
                acc = power;  // r^deg
                val = mod_pos(val + acc, p);
                if (val == 0)
                    throw FieldError("minimal polynomial has a root in F_" +
                                     std::to_string(p) + "; not irreducible");
            }
        }
    }

    auto d = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
    d->kind_ = FieldKind::SimpleExtension;
    d->base_ = std::move(base);
    d->generator_ = std::move(generator_name);
    d->minpoly_tail_ = std::move(minimal_poly);
    return d;
}

long long FieldDescriptor::prime() const {
    if (kind_ != FieldKind::PrimeField) throw FieldError("not a prime field");
    return prime_;
}

const FieldPtr& FieldDescriptor::base() const {
    if (kind_ != FieldKind::SimpleExtension) throw FieldError("not an extension field");
    return base_;
}

const std::string& FieldDescriptor::generator_name() const {
    if (kind_ != FieldKind::SimpleExtension) throw FieldError("not an extension field");
    return generator_;
}

const std::vector<FieldElem>& FieldDescriptor::minimal_poly_tail() const {
    if (kind_ != FieldKind::SimpleExtension) throw FieldError("not an extension field");
    return minpoly_tail_;
}

int FieldDescriptor::extension_degree() const {
    return static_cast<int>(minimal_poly_tail().size());
}

long long FieldDescriptor::characteristic() const {
    switch (kind_) {
        case FieldKind::Rationals: return 0;
        case FieldKind::PrimeField: return prime_;
        case FieldKind::SimpleExtension: return base_->characteristic();
    }
    return 0;
}

bool FieldDescriptor::same(const FieldDescriptor& other) const {
    if (this == &other) return true;
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case FieldKind::Rationals: return true;
        case FieldKind::PrimeField: return prime_ == other.prime_;
        case FieldKind::SimpleExtension: {
            if (generator_ != other.generator_) return false;
            if (!base_->same(*other.base_)) return false;
            if (minpoly_tail_.size() != other.minpoly_tail_.size()) return false;
            for (std::size_t i = 0; i < minpoly_tail_.size(); ++i)
                if (minpoly_tail_[i] != other.minpoly_tail_[i]) return false;
            return true;
        }
    }
    return false;
}

std::string FieldDescriptor::to_text() const {
    switch (kind_) {
        case FieldKind::Rationals: return "QQ";
        case FieldKind::PrimeField: return "Fp(" + std::to_string(prime_) + ")";
        case FieldKind::SimpleExtension: {
            // monic minimal polynomial, highest power first
            std::ostringstream os;
            os << base_->to_text() << "[" << generator_ << "]/(";
            os << generator_ << "^" << minpoly_tail_.size();
            for (int i = static_cast<int>(minpoly_tail_.size()) - 1; i >= 0; --i) {
                const FieldElem& c = minpoly_tail_[static_cast<std::size_t>(i)];
                if (c.is_zero()) continue;
                std::string t = c.to_text();
                bool neg = !t.empty() && t[0] == '-';
                os << (neg ? " - " : " + ");
                if (neg) t = t.substr(1);
                if (i == 0) {
                    os << t;
                } else {
                    if (t != "1") os << t << "*";
                    os << generator_;
                    if (i > 1) os << "^" << i;
                }
            }
            os << ")";
            return os.str();
        }
    }
    return "?";
}

FieldElem FieldElem::zero(const FieldPtr& field) {
    switch (field->kind()) {
        case FieldKind::Rationals: return FieldElem(field, Rational(0));
        case FieldKind::PrimeField: return FieldElem(field, 0LL);
        case FieldKind::SimpleExtension:
            return FieldElem(field, std::vector<FieldElem>{});
    }
    throw FieldError("bad field kind");
}

FieldElem FieldElem::one(const FieldPtr& field) {
    return from_integer(field, 1);
}

FieldElem FieldElem::from_integer(const FieldPtr& field, const BigInt& n) {
    switch (field->kind()) {
        case FieldKind::Rationals: return FieldElem(field, Rational(n));
        case FieldKind::PrimeField: {
            BigInt r = n % field->prime();
            if (r < 0) r += field->prime();
            return FieldElem(field, r.convert_to<long long>());
        }
        case FieldKind::SimpleExtension: {
            FieldElem c = from_integer(field->base(), n);
            if (c.is_zero()) return zero(field);
            return FieldElem(field, std::vector<FieldElem>{std::move(c)});
        }
    }
    throw FieldError("bad field kind");
}

FieldElem FieldElem::from_rational(const FieldPtr& field, const Rational& q) {
    switch (field->kind()) {
        case FieldKind::Rationals: return FieldElem(field, q);
        case FieldKind::PrimeField: {
            FieldElem num = from_integer(field, BigInt(numerator(q)));
            FieldElem den = from_integer(field, BigInt(denominator(q)));
            return num / den;
        }
        case FieldKind::SimpleExtension: {
            FieldElem c = from_rational(field->base(), q);
            if (c.is_zero()) return zero(field);
            return FieldElem(field, std::vector<FieldElem>{std::move(c)});
        }
    }
    throw FieldError("bad field kind");
}

FieldElem FieldElem::generator(const FieldPtr& field) {
    if (field->kind() != FieldKind::SimpleExtension)
        throw FieldError("generator only exists for extension fields");
    std::vector<FieldElem> coords{FieldElem::zero(field->base()),
                                  FieldElem::one(field->base())};
    return FieldElem(field, std::move(coords));
}

FieldElem FieldElem::from_coords(const FieldPtr& field, std::vector<FieldElem> coords) {
    if (field->kind() != FieldKind::SimpleExtension)
        throw FieldError("coordinates only exist for extension fields");
    if (static_cast<int>(coords.size()) > field->extension_degree())
        throw FieldError("coordinate vector longer than extension degree");
    for (const auto& c : coords)
        if (!c.field()->same(*field->base()))
            throw FieldError("coordinates must lie in the base field");
    while (!coords.empty() && coords.back().is_zero()) coords.pop_back();
    return FieldElem(field, std::move(coords));
}

bool FieldElem::is_zero() const {
    switch (field_->kind()) {
        case FieldKind::Rationals: return std::get<Rational>(rep_) == 0;
        case FieldKind::PrimeField: return std::get<long long>(rep_) == 0;
        case FieldKind::SimpleExtension:
            return std::get<std::vector<FieldElem>>(rep_).empty();
    }
    return false;
}

bool FieldElem::is_one() const {
    switch (field_->kind()) {
        case FieldKind::Rationals: return std::get<Rational>(rep_) == 1;
        case FieldKind::PrimeField: return std::get<long long>(rep_) == 1;
        case FieldKind::SimpleExtension: {
            const auto& v = std::get<std::vector<FieldElem>>(rep_);
            return v.size() == 1 && v[0].is_one();
        }
    }
    return false;
}

bool FieldElem::operator==(const FieldElem& other) const {
    if (!field_->same(*other.field_)) return false;
    if (rep_.index() != other.rep_.index()) return false;
    if (std::holds_alternative<Rational>(rep_))
        return std::get<Rational>(rep_) == std::get<Rational>(other.rep_);
    if (std::holds_alternative<long long>(rep_))
        return std::get<long long>(rep_) == std::get<long long>(other.rep_);
    const auto& a = std::get<std::vector<FieldElem>>(rep_);
    const auto& b = std::get<std::vector<FieldElem>>(other.rep_);
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

void FieldElem::require_same_field(const FieldElem& a, const FieldElem& b) {
    if (!a.field_->same(*b.field_))
        throw FieldError("incompatible fields: " + a.field_->to_text() + " vs " +
                         b.field_->to_text());
}

FieldElem FieldElem::operator+(const FieldElem& other) const {
    require_same_field(*this, other);
    switch (field_->kind()) {
        case FieldKind::Rationals:
            return FieldElem(field_, std::get<Rational>(rep_) + std::get<Rational>(other.rep_));
        case FieldKind::PrimeField:
            return FieldElem(field_, mod_pos(std::get<long long>(rep_) +
                                                 std::get<long long>(other.rep_),
                                             field_->prime()));
        case FieldKind::SimpleExtension: {
            const auto& a = std::get<std::vector<FieldElem>>(rep_);
            const auto& b = std::get<std::vector<FieldElem>>(other.rep_);
            std::vector<FieldElem> out(std::max(a.size(), b.size()),
                                       FieldElem::zero(field_->base()));
            for (std::size_t i = 0; i < a.size(); ++i) out[i] = out[i] + a[i];
            for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b[i];
            while (!out.empty() && out.back().is_zero()) out.pop_back();
            return FieldElem(field_, std::move(out));
        }
    }
    throw FieldError("bad field kind");
}

FieldElem FieldElem::operator-() const {
    switch (field_->kind()) {
        case FieldKind::Rationals:
            return FieldElem(field_, -std::get<Rational>(rep_));
        case FieldKind::PrimeField:
            return FieldElem(field_, mod_pos(-std::get<long long>(rep_), field_->prime()));
        case FieldKind::SimpleExtension: {
            auto v = std::get<std::vector<FieldElem>>(rep_);
            for (auto& c : v) c = -c;
            return FieldElem(field_, std::move(v));
        }
    }
    throw FieldError("bad field kind");
}

FieldElem FieldElem::operator-(const FieldElem& other) const { return *this + (-other); }

FieldElem FieldElem::operator*(const FieldElem& other) const {
    require_same_field(*this, other);
    switch (field_->kind()) {
        case FieldKind::Rationals:
            return FieldElem(field_, std::get<Rational>(rep_) * std::get<Rational>(other.rep_));
        case FieldKind::PrimeField:
            return FieldElem(field_, mod_pos(std::get<long long>(rep_) *
                                                 std::get<long long>(other.rep_),
                                             field_->prime()));
        case FieldKind::SimpleExtension: {
            const auto& a = std::get<std::vector<FieldElem>>(rep_);
            const auto& b = std::get<std::vector<FieldElem>>(other.rep_);
            if (a.empty() || b.empty())
                return zero(field_);
            UniPoly prod = uni_mul(a, b, field_->base());
            // reduce modulo the monic minimal polynomial
            UniPoly m = field_->minimal_poly_tail();
            m.push_back(FieldElem::one(field_->base()));
            UniPoly red = uni_rem(std::move(prod), m);
            return FieldElem(field_, std::move(red));
        }
    }
    throw FieldError("bad field kind");
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    switch (field_->kind()) {
        case FieldKind::Rationals:
            return FieldElem(field_, Rational(1) / std::get<Rational>(rep_));
        case FieldKind::PrimeField:
            return FieldElem(field_, mod_inverse(std::get<long long>(rep_), field_->prime()));
        case FieldKind::SimpleExtension: {
            UniPoly m = field_->minimal_poly_tail();
            m.push_back(FieldElem::one(field_->base()));
            auto [g, s] = uni_half_ext_gcd(std::get<std::vector<FieldElem>>(rep_), m,
                                           field_->base());
            if (g.size() != 1)
                throw FieldError("element not invertible; minimal polynomial reducible?");
            // s * this == g == 1 (g normalized monic, degree 0)
            UniPoly inv = s;
            uni_trim(inv);
            return FieldElem(field_, std::move(inv));
        }
    }
    throw FieldError("bad field kind");
}

FieldElem FieldElem::operator/(const FieldElem& other) const {
    return *this * other.inverse();
}

FieldElem FieldElem::pow(unsigned long long e) const {
    FieldElem result = one(field_);
    FieldElem b = *this;
    while (e > 0) {
        if (e & 1ULL) result = result * b;
        b = b * b;
        e >>= 1ULL;
    }
    return result;
}

const Rational& FieldElem::rational() const {
    if (field_->kind() != FieldKind::Rationals)
        throw FieldError("element is not a rational");
    return std::get<Rational>(rep_);
}

long long FieldElem::residue() const {
    if (field_->kind() != FieldKind::PrimeField)
        throw FieldError("element is not a prime-field residue");
    return std::get<long long>(rep_);
}

std::vector<FieldElem> FieldElem::coords() const {
    if (field_->kind() != FieldKind::SimpleExtension)
        throw FieldError("element is not an extension element");
    auto v = std::get<std::vector<FieldElem>>(rep_);
    v.resize(static_cast<std::size_t>(field_->extension_degree()),
             FieldElem::zero(field_->base()));
    return v;
}

std::string FieldElem::to_text() const {
    switch (field_->kind()) {
        case FieldKind::Rationals:
            return rational_to_text(std::get<Rational>(rep_));
        case FieldKind::PrimeField:
            return std::to_string(std::get<long long>(rep_));
        case FieldKind::SimpleExtension: {
            const auto& v = std::get<std::vector<FieldElem>>(rep_);
            if (v.empty()) return "0";
            std::ostringstream os;
            bool first = true;
            for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
                const FieldElem& c = v[static_cast<std::size_t>(i)];
                if (c.is_zero()) continue;
                std::string t = c.to_text();
                bool neg = !t.empty() && t[0] == '-';
                if (neg) t = t.substr(1);
                if (first) {
                    if (neg) os << "-";
                    first = false;
                } else {
                    os << (neg ? " - " : " + ");
                }
                if (i == 0) {
                    os << t;
                } else {
                    if (t != "1") os << t << "*";
                    os << field_->generator_name();
                    if (i > 1) os << "^" << i;
                }
            }
            return os.str();
        }
    }
    return "?";
}

FieldElem extension_embed(const FieldElem& a, const FieldPtr& target) {
    if (target->kind() != FieldKind::SimpleExtension)
        throw FieldError("embedding target must be an extension field");
    if (!target->base()->same(*a.field()))
        throw FieldError("incompatible fields: cannot embed " + a.field()->to_text() +
                         " into " + target->to_text());
    if (a.is_zero()) return FieldElem::zero(target);
    return FieldElem::from_coords(target, {a});
}

FieldElem coerce(const FieldElem& a, const FieldPtr& target) {
    if (target->same(*a.field())) return a;
    if (target->kind() == FieldKind::SimpleExtension &&
        target->base()->same(*a.field()))
        return extension_embed(a, target);
    throw FieldError("incompatible fields: cannot coerce " + a.field()->to_text() +
                     " into " + target->to_text());
}

}  // namespace idealkit
