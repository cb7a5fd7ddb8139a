#include "idealkit/primary.hpp"

#include <algorithm>

namespace idealkit {

std::optional<PseudoPrimaryData> detect_pseudo_primary(const Ideal& I) {
    if (I.generators().empty()) return std::nullopt;
    const RingPtr& ring = I.ring();
    std::vector<int> radical_vars;
    std::vector<bool> in_radical(static_cast<std::size_t>(ring->arity()), false);
    for (int v = 0; v < ring->arity(); ++v) {
        if (radical_member(Polynomial::variable(ring, v), I)) {
            radical_vars.push_back(v);
            in_radical[static_cast<std::size_t>(v)] = true;
        }
    }
    if (radical_vars.empty()) return std::nullopt;
    // every generator must lie in <radical_vars>: each term uses one of them
    for (const auto& g : I.generators()) {
        for (const auto& t : g.terms()) {
            bool covered = false;
            for (int v : radical_vars)
                if (t.mono[static_cast<std::size_t>(v)] > 0) covered = true;
            if (!covered) return std::nullopt;
        }
    }
    std::vector<int> independent;
    for (int v = 0; v < ring->arity(); ++v)
        if (!in_radical[static_cast<std::size_t>(v)]) independent.push_back(v);
    return PseudoPrimaryData{I, std::move(radical_vars), std::move(independent)};
}

Polynomial saturating_polynomial(const Ideal& I, const std::vector<int>& u_vars) {
    const RingPtr& ring = I.ring();
    MonomialOrder block = MonomialOrder::block_lowest(ring->arity(), u_vars);
    const GroebnerBasis& gb = I.groebner(block);

    Exponents mono_lcm(static_cast<std::size_t>(ring->arity()), 0);
    std::vector<Polynomial> mixed;
    for (const auto& g : gb.elements()) {
        Polynomial lc = leading_coeff_in_subring(g, u_vars, block).monic(block);
        if (lc.is_monomial()) {
            mono_lcm = expo_lcm(mono_lcm, lc.terms()[0].mono);
        } else if (std::find(mixed.begin(), mixed.end(), lc) == mixed.end()) {
            mixed.push_back(std::move(lc));
        }
    }
    Polynomial f = Polynomial::term(ring, FieldElem::one(ring->field()), mono_lcm);
    for (const auto& m : mixed) f = f * m;
    return f;
}

std::optional<PrimaryEvidence> is_primary_pseudo(const Ideal& I) {
    auto data = detect_pseudo_primary(I);
    if (!data) return std::nullopt;
    PrimaryEvidence ev;
    ev.data = *data;
    ev.saturating = saturating_polynomial(I, data->independent_vars);
    if (ev.saturating.is_constant()) {
        ev.saturated = I;
        ev.primary = true;
        return ev;
    }
    ev.saturated = saturation(I, ev.saturating);
    ev.primary = ideal_equal(I, ev.saturated);
    return ev;
}

bool verify_witness(const Ideal& I, const Polynomial& g, const Polynomial& h) {
    if (g.is_zero() || h.is_zero()) return false;
    if (!ideal_member(g * h, I)) return false;
    if (ideal_member(g, I)) return false;
    if (radical_member(h, I)) return false;
    return true;
}

namespace {

// Divisors of a monomial, ascending by total degree with a canonical
// tie-break, so the smallest viable g is found first.
std::vector<Exponents> divisors_ascending(const Exponents& m) {
    std::vector<Exponents> out;
    Exponents cur(m.size(), 0);
    while (true) {
        out.push_back(cur);
        std::size_t j = 0;
        while (j < m.size() && cur[j] == m[j]) {
            cur[j] = 0;
            ++j;
        }
        if (j == m.size()) break;
        ++cur[j];
    }
    std::sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) {
        long long da = expo_total_degree(a), db = expo_total_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    return out;
}

}  // namespace

std::optional<NonPrimaryWitness> find_non_primary_witness(const Ideal& I) {
    if (I.generators().empty()) return std::nullopt;
    const RingPtr& ring = I.ring();
    const GroebnerBasis& gb = I.groebner();
    if (gb.is_unit()) return std::nullopt;

    // reduced-basis elements, largest leading monomial first
    std::vector<Polynomial> elems(gb.elements().rbegin(), gb.elements().rend());
    const FieldElem one = FieldElem::one(ring->field());
    const MonomialOrder lex = MonomialOrder::lex(ring->arity());

    for (const auto& e : elems) {
        Exponents content = e.monomial_content();
        if (expo_is_zero(content)) continue;
        Polynomial cofactor =
            exact_divide(e, Polynomial::term(ring, one, content), lex);
        for (const auto& d : divisors_ascending(content)) {
            Polynomial g = Polynomial::term(ring, one, d);
            Polynomial h = cofactor.times_term(one, expo_sub(content, d));
            if (verify_witness(I, g, h))
                return NonPrimaryWitness{std::move(g), std::move(h), e};
        }
    }

    // fallback: bounded pairwise products of generators' monomial parts
    std::vector<Exponents> parts;
    for (const auto& e : elems)
        if (!expo_is_zero(e.monomial_content())) parts.push_back(e.monomial_content());
    std::size_t tried = 0;
    for (const auto& a : parts) {
        for (const auto& b : parts) {
            if (++tried > 10000) return std::nullopt;
            Polynomial g = Polynomial::term(ring, one, a);
            Polynomial h = Polynomial::term(ring, one, b);
            if (verify_witness(I, g, h))
                return NonPrimaryWitness{g, h, g * h};
        }
    }
    return std::nullopt;
}

}  // namespace idealkit
