#include "idealkit/slice.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace idealkit {

namespace {

// Univariate machinery over QQ; coefficient vectors ascending, trimmed.
using UniQ = std::vector<Rational>;

void trim(UniQ& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Rational eval(const UniQ& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniQ derivative(const UniQ& p) {
    UniQ out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<int>(i));
    return out;
}

UniQ neg_rem(UniQ a, const UniQ& b) {
    trim(a);
    while (a.size() >= b.size()) {
        Rational factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i + 1 < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    for (auto& c : a) c = -c;
    return a;
}

std::vector<UniQ> sturm_chain(const UniQ& p) {
    std::vector<UniQ> chain;
    UniQ p0 = p;
    trim(p0);
    chain.push_back(p0);
    UniQ p1 = derivative(p0);
    trim(p1);
    while (!p1.empty()) {
        chain.push_back(p1);
        UniQ r = neg_rem(chain[chain.size() - 2], p1);
        p1 = std::move(r);
    }
    return chain;
}

int sign_variations(const std::vector<UniQ>& chain, const Rational& x) {
    int variations = 0, last = 0;
    for (const auto& p : chain) {
        int s = sign_of(eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

// number of distinct real roots in (a, b]
int count_roots(const std::vector<UniQ>& chain, const Rational& a, const Rational& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

Rational root_bound(const UniQ& p) {
    Rational lead = abs(p.back());
    Rational m(0);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        Rational c = abs(p[i]) / lead;
        if (c > m) m = c;
    }
    return m + 1;
}

// midpoint of (lo, hi) nudged off any root of p
Rational split_point(const UniQ& p, const Rational& lo, const Rational& hi) {
    Rational m = (lo + hi) / 2;
    while (eval(p, m) == 0) m = (lo + m) / 2;
    return m;
}

// exactly one simple root in (lo, hi) with a sign change; bisect to width
void refine_to_width(const UniQ& p, Rational lo, Rational hi, const Rational& width,
                     std::vector<RootInterval>& out) {
    int slo = sign_of(eval(p, lo));
    while (hi - lo > width) {
        Rational m = (lo + hi) / 2;
        int sm = sign_of(eval(p, m));
        if (sm == 0) {
            out.push_back({m, m});
            return;
        }
        if (sm == slo)
            lo = m;
        else
            hi = m;
    }
    out.push_back({lo, hi});
}

void isolate(const std::vector<UniQ>& chain, const UniQ& p, const Rational& lo,
             const Rational& hi, const Rational& width, std::vector<RootInterval>& out) {
    int n = count_roots(chain, lo, hi);
    if (n == 0) return;
    if (n == 1 && sign_of(eval(p, lo)) * sign_of(eval(p, hi)) < 0) {
        refine_to_width(p, lo, hi, width, out);
        return;
    }
    Rational m = split_point(p, lo, hi);
    isolate(chain, p, lo, m, width, out);
    isolate(chain, p, m, hi, width, out);
}

std::vector<RootInterval> real_roots(const UniQ& p, const Rational& width) {
    UniQ q = p;
    trim(q);
    if (q.size() <= 1) throw RingError("root isolation needs a nonconstant polynomial");
    std::vector<UniQ> chain = sturm_chain(q);
    Rational b = root_bound(q);
    std::vector<RootInterval> out;
    isolate(chain, q, -b, b, width, out);
    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return out;
}

const Rational& bisection_width() {
    static const Rational w(BigInt(1), BigInt(1) << 40);
    return w;
}

std::string decimal_text(const Rational& q) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", q.convert_to<double>());
    return buf;
}

}  // namespace

std::vector<RootInterval> real_roots_cubic(const Rational& p, const Rational& q,
                                           const Rational& width) {
    if (p == 0 && q == 0) return {{Rational(0), Rational(0)}};
    Rational disc_factor = 4 * p * p * p + 27 * q * q;
    if (disc_factor == 0)
        throw RingError("cubic has a repeated root; isolation requires squarefree input");
    return real_roots(UniQ{q, p, Rational(0), Rational(1)}, width);
}

int real_embedding_sign(const FieldElem& a) {
    const FieldPtr& field = a.field();
    if (field->kind() == FieldKind::Rationals) return sign_of(a.rational());
    if (field->kind() != FieldKind::SimpleExtension ||
        field->base()->kind() != FieldKind::Rationals)
        throw FieldError("real sign needs a rational or QQ-extension element");
    if (a.is_zero()) return 0;

    UniQ m;
    for (const auto& c : field->minimal_poly_tail()) m.push_back(c.rational());
    m.push_back(Rational(1));
    std::vector<UniQ> chain = sturm_chain(m);
    Rational b = root_bound(m);
    if (count_roots(chain, -b, b) != 1)
        throw FieldError("field " + field->to_text() + " has no unique real embedding");
    std::vector<RootInterval> iso;
    isolate(chain, m, -b, b, Rational(1, 16), iso);
    Rational lo = iso[0].lo, hi = iso[0].hi;

    UniQ g;
    for (const auto& c : a.coords()) g.push_back(c.rational());
    trim(g);

    int s_lo = sign_of(eval(m, lo));
    while (true) {
        // interval Horner enclosure of g over [lo, hi]
        Rational glo(0), ghi(0);
        for (auto it = g.rbegin(); it != g.rend(); ++it) {
            Rational cands[4] = {glo * lo, glo * hi, ghi * lo, ghi * hi};
            Rational nlo = cands[0], nhi = cands[0];
            for (const auto& c : cands) {
                nlo = std::min(nlo, c);
                nhi = std::max(nhi, c);
            }
            glo = nlo + *it;
            ghi = nhi + *it;
        }
        if (glo > 0) return 1;
        if (ghi < 0) return -1;
        // tighten around the root; the minimal polynomial is irreducible,
        // so no rational midpoint can be a root
        Rational mid = (lo + hi) / 2;
        int sm = sign_of(eval(m, mid));
        if (sm == s_lo)
            lo = mid;
        else
            hi = mid;
    }
}

SliceClassification classify_slice(const FieldElem& t0) {
    const FieldPtr& field = t0.field();
    if (field->kind() == FieldKind::PrimeField)
        throw FieldError("slice classification is a real computation; use QQ data");
    FieldElem s = FieldElem::from_integer(field, 4) * t0.pow(3) +
                  FieldElem::from_integer(field, 27);
    int sign = s.is_zero() ? 0 : real_embedding_sign(s);
    if (sign > 0) return {DiscriminantSign::Positive, 1};
    if (sign == 0) return {DiscriminantSign::Zero, 2};
    return {DiscriminantSign::Negative, 3};
}

std::vector<SliceSample> emit_slice_samples(const Rational& t0, const Rational& x_min,
                                            const Rational& x_max, const Rational& step) {
    if (step <= 0) throw RingError("slice sampling needs a positive step");
    if (x_min > x_max) throw RingError("empty x range");
    std::vector<SliceSample> out;
    for (Rational x = x_min; x <= x_max; x += step) {
        Rational x4 = x * x * x * x;
        std::vector<RootInterval> roots =
            real_roots_cubic(t0 * x4, x4 * x * x, bisection_width());
        int branch = 0;
        for (const auto& r : roots) out.push_back({x, branch++, r});
    }
    return out;
}

std::string slice_samples_tsv(const std::vector<SliceSample>& samples) {
    std::ostringstream os;
    os << "x\tbranch\tz_lo\tz_hi\n";
    for (const auto& s : samples)
        os << decimal_text(s.x) << "\t" << s.branch << "\t" << decimal_text(s.z.lo)
           << "\t" << decimal_text(s.z.hi) << "\n";
    return os.str();
}

}  // namespace idealkit
