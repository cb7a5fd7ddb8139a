#include "idealkit/groebner.hpp"

#include <algorithm>
#include <set>

namespace idealkit {

namespace {

// Engine-internal representation: terms sorted strictly descending under
// the engine's order. Multiplying by a monomial preserves this, so
// reduction steps are linear merges.
using OrderedTerms = std::vector<Term>;

OrderedTerms to_ordered(const Polynomial& p, const MonomialOrder& ord) {
    OrderedTerms t = p.terms();
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) {
        return ord.compare(a.mono, b.mono) > 0;
    });
    return t;
}

Polynomial from_ordered(const RingPtr& ring, OrderedTerms t) {
    return Polynomial::from_terms(ring, std::move(t));
}

// a + c * x^shift * b, both inputs descending under ord.
OrderedTerms merge_add_scaled(const OrderedTerms& a, std::size_t a_from,
                              const OrderedTerms& b, const FieldElem& c,
                              const Exponents& shift, const MonomialOrder& ord) {
    OrderedTerms out;
    out.reserve(a.size() - a_from + b.size());
    std::size_t i = a_from, j = 0;
    while (i < a.size() && j < b.size()) {
        Exponents bm = expo_add(b[j].mono, shift);
        int cmp = ord.compare(a[i].mono, bm);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.push_back({std::move(bm), b[j].coeff * c});
            ++j;
        } else {
            FieldElem s = a[i].coeff + b[j].coeff * c;
            if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j)
        out.push_back({expo_add(b[j].mono, shift), b[j].coeff * c});
    return out;
}

struct Engine {
    const RingPtr& ring;
    const MonomialOrder& ord;
    // basis elements are monic under ord
    std::vector<OrderedTerms> basis;
    std::vector<Exponents> lms;

    // Full normal form of `work` against the current basis.
    OrderedTerms reduce(OrderedTerms work) const {
        OrderedTerms result;
        std::size_t head = 0;
        while (head < work.size()) {
            const Term& lt = work[head];
            int reducer = -1;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (expo_divides(lms[k], lt.mono)) {
                    reducer = static_cast<int>(k);
                    break;
                }
            }
            if (reducer < 0) {
                result.push_back(lt);
                ++head;
                continue;
            }
            Exponents shift = expo_sub(lt.mono, lms[static_cast<std::size_t>(reducer)]);
            work = merge_add_scaled(work, head, basis[static_cast<std::size_t>(reducer)],
                                    -lt.coeff, shift, ord);
            head = 0;
        }
        return result;
    }
};

// Normalize for insertion: integer-primitive over QQ, then monic.
Polynomial canonical_element(const Polynomial& p, const MonomialOrder& ord) {
    return content_normalized(p, ord).monic(ord);
}

}  // namespace

bool GroebnerBasis::is_unit() const {
    for (const auto& g : elements_)
        if (g.is_constant() && !g.is_zero()) return true;
    return false;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    const Term& fl = f.leading_term(ord);
    const Term& gl = g.leading_term(ord);
    Exponents l = expo_lcm(fl.mono, gl.mono);
    Polynomial left = f.times_term(fl.coeff.inverse(), expo_sub(l, fl.mono));
    Polynomial right = g.times_term(gl.coeff.inverse(), expo_sub(l, gl.mono));
    return left - right;
}

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& generators,
                         const MonomialOrder& ord) {
    if (ord.arity() != ring->arity())
        throw RingError("monomial order arity mismatch");

    Engine eng{ring, ord, {}, {}};
    auto add_element = [&](const Polynomial& p) {
        OrderedTerms t = to_ordered(p, ord);
        eng.lms.push_back(t.front().mono);
        eng.basis.push_back(std::move(t));
    };

    // seed with distinct normalized nonzero generators
    std::vector<Polynomial> seeds;
    for (const auto& g : generators) {
        if (!g.ring() || !g.ring()->same(*ring))
            throw RingError("generator outside the ideal's ring");
        if (g.is_zero()) continue;
        Polynomial c = canonical_element(g, ord);
        if (std::find(seeds.begin(), seeds.end(), c) == seeds.end())
            seeds.push_back(std::move(c));
    }
    if (seeds.empty()) return GroebnerBasis(ord, {});
    for (const auto& s : seeds) add_element(s);

    struct PairKey {
        long long degree;
        int i, j;
        bool operator<(const PairKey& o) const {
            if (degree != o.degree) return degree < o.degree;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    std::set<PairKey> queue;
    std::set<std::pair<int, int>> handled;
    auto push_pairs_for = [&](int k) {
        for (int i = 0; i < k; ++i) {
            Exponents l = expo_lcm(eng.lms[static_cast<std::size_t>(i)],
                                   eng.lms[static_cast<std::size_t>(k)]);
            queue.insert({expo_total_degree(l), i, k});
        }
    };
    for (int k = 0; k < static_cast<int>(eng.basis.size()); ++k) push_pairs_for(k);

    while (!queue.empty()) {
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        int i = pk.i, j = pk.j;
        handled.insert({i, j});
        const Exponents& lmi = eng.lms[static_cast<std::size_t>(i)];
        const Exponents& lmj = eng.lms[static_cast<std::size_t>(j)];

        // Buchberger's first criterion: coprime leading monomials.
        if (expo_coprime(lmi, lmj)) continue;

        // Chain criterion: some k with LM_k | lcm and both side pairs done.
        Exponents l = expo_lcm(lmi, lmj);
        bool skip = false;
        for (int k = 0; k < static_cast<int>(eng.basis.size()) && !skip; ++k) {
            if (k == i || k == j) continue;
            if (!expo_divides(eng.lms[static_cast<std::size_t>(k)], l)) continue;
            auto pair_done = [&](int a, int b) {
                if (a > b) std::swap(a, b);
                return handled.count({a, b}) > 0;
            };
            if (pair_done(i, k) && pair_done(j, k)) skip = true;
        }
        if (skip) continue;

        // S-polynomial; heads cancel since both elements are monic
        OrderedTerms lifted;
        Exponents shift_i = expo_sub(l, lmi);
        lifted.reserve(eng.basis[static_cast<std::size_t>(i)].size());
        for (const auto& t : eng.basis[static_cast<std::size_t>(i)])
            lifted.push_back({expo_add(t.mono, shift_i), t.coeff});
        OrderedTerms s = merge_add_scaled(lifted, 0, eng.basis[static_cast<std::size_t>(j)],
                                          -FieldElem::one(ring->field()),
                                          expo_sub(l, lmj), ord);
        OrderedTerms r = eng.reduce(std::move(s));
        if (r.empty()) continue;
        Polynomial rp = canonical_element(from_ordered(ring, std::move(r)), ord);
        add_element(rp);
        push_pairs_for(static_cast<int>(eng.basis.size()) - 1);
    }

    // minimal: drop any element whose LM another kept LM divides; among
    // equal LMs (possible for seed generators) keep the earliest
    std::size_t n = eng.basis.size();
    std::vector<bool> keep(n, true);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n && keep[a]; ++b) {
            if (a == b || !keep[b]) continue;
            if (!expo_divides(eng.lms[b], eng.lms[a])) continue;
            if (eng.lms[a] != eng.lms[b] || b < a) keep[a] = false;
        }
    }
    std::vector<Polynomial> minimal;
    for (std::size_t a = 0; a < n; ++a)
        if (keep[a]) minimal.push_back(from_ordered(ring, eng.basis[a]));

    // inter-reduce tails to the unique reduced basis; LMs are pairwise
    // non-dividing so reduction rewrites tails only
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < minimal.size(); ++a) {
            Engine sub{ring, ord, {}, {}};
            for (std::size_t b = 0; b < minimal.size(); ++b) {
                if (a == b) continue;
                OrderedTerms t = to_ordered(minimal[b], ord);
                sub.lms.push_back(t.front().mono);
                sub.basis.push_back(std::move(t));
            }
            Polynomial red = from_ordered(ring, sub.reduce(to_ordered(minimal[a], ord)));
            red = red.monic(ord);
            if (red != minimal[a]) {
                minimal[a] = std::move(red);
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& x, const Polynomial& y) {
        return ord.compare(x.leading_monomial(ord), y.leading_monomial(ord)) < 0;
    });
    return GroebnerBasis(ord, std::move(minimal));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G) {
    if (p.is_zero() || G.elements().empty()) return p;
    const RingPtr& ring = p.ring();
    Engine eng{ring, G.order(), {}, {}};
    for (const auto& g : G.elements()) {
        OrderedTerms t = to_ordered(g, G.order());
        eng.lms.push_back(t.front().mono);
        eng.basis.push_back(std::move(t));
    }
    return from_ordered(ring, eng.reduce(to_ordered(p, G.order())));
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    if (!ring_) throw RingError("ideal requires a ring");
    for (auto& g : generators) {
        if (!g.ring() || !g.ring()->same(*ring_))
            throw RingError("generator outside the ideal's ring");
        if (g.is_zero()) continue;
        gens_.push_back(std::move(g));
    }
}

const GroebnerBasis& Ideal::groebner(const MonomialOrder& ord) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->bases.find(ord.priority());
    if (it == cache_->bases.end()) {
        auto basis = std::make_shared<const GroebnerBasis>(buchberger(ring_, gens_, ord));
        it = cache_->bases.emplace(ord.priority(), std::move(basis)).first;
    }
    return *it->second;
}

bool ideal_member(const Polynomial& p, const Ideal& I, const MonomialOrder& ord) {
    if (!p.ring() || !p.ring()->same(*I.ring()))
        throw RingError("membership test across different rings");
    return normal_form(p, I.groebner(ord)).is_zero();
}

bool ideal_member(const Polynomial& p, const Ideal& I) {
    return ideal_member(p, I, I.default_order());
}

bool ideal_equal(const Ideal& A, const Ideal& B, const MonomialOrder& ord) {
    if (!A.ring()->same(*B.ring())) return false;
    const auto& ga = A.groebner(ord).elements();
    const auto& gb = B.groebner(ord).elements();
    if (ga.size() != gb.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i)
        if (ga[i] != gb[i]) return false;
    return true;
}

bool ideal_equal(const Ideal& A, const Ideal& B) {
    return ideal_equal(A, B, A.default_order());
}

Ideal ideal_sum(const Ideal& A, const Ideal& B) {
    if (!A.ring()->same(*B.ring())) throw RingError("ideal sum across different rings");
    std::vector<Polynomial> gens = A.generators();
    for (const auto& g : B.generators()) gens.push_back(g);
    return Ideal(A.ring(), std::move(gens));
}

Ideal ideal_sum(const Ideal& A, const std::vector<Polynomial>& extra) {
    std::vector<Polynomial> gens = A.generators();
    for (const auto& g : extra) gens.push_back(g);
    return Ideal(A.ring(), std::move(gens));
}

namespace {

void append_unique(std::vector<Polynomial>& out, Polynomial p) {
    if (p.is_zero()) return;
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
}

}  // namespace

Ideal ideal_product(const Ideal& A, const Ideal& B) {
    if (!A.ring()->same(*B.ring())) throw RingError("ideal product across different rings");
    std::vector<Polynomial> gens;
    for (const auto& a : A.generators())
        for (const auto& b : B.generators()) append_unique(gens, a * b);
    return Ideal(A.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& A, unsigned k) {
    const RingPtr& ring = A.ring();
    if (k == 0) {
        return Ideal(ring, {Polynomial::constant(ring, FieldElem::one(ring->field()))});
    }
    if (A.generators().empty()) return A;
    // distinct k-fold products = combinations with repetition
    std::vector<Polynomial> gens;
    const auto& base = A.generators();
    std::vector<unsigned> pick(k, 0);
    while (true) {
        Polynomial prod = base[pick[0]];
        for (unsigned i = 1; i < k; ++i) prod = prod * base[pick[i]];
        append_unique(gens, std::move(prod));
        // advance non-decreasing index tuple
        int pos = static_cast<int>(k) - 1;
        while (pos >= 0 && pick[static_cast<std::size_t>(pos)] + 1 >= base.size()) --pos;
        if (pos < 0) break;
        unsigned next = pick[static_cast<std::size_t>(pos)] + 1;
        for (unsigned i = static_cast<unsigned>(pos); i < k; ++i)
            pick[i] = next;
    }
    return Ideal(ring, std::move(gens));
}

namespace {

// Fresh tag-variable name not clashing with ring variables or the field
// generator.
std::string fresh_tag_name(const RingPtr& ring) {
    auto taken = [&](const std::string& name) {
        if (ring->variable_index(name)) return true;
        if (ring->field()->kind() == FieldKind::SimpleExtension &&
            ring->field()->generator_name() == name)
            return true;
        return false;
    };
    if (!taken("w")) return "w";
    for (int i = 0;; ++i) {
        std::string name = "w" + std::to_string(i);
        if (!taken(name)) return name;
    }
}

struct TaggedRing {
    RingPtr ring;          // original vars plus tag appended
    int tag;               // index of the tag variable
    std::vector<int> lift; // var_map for map_to_ring old -> new
};

TaggedRing extend_with_tag(const RingPtr& ring) {
    std::vector<std::string> vars = ring->variables();
    vars.push_back(fresh_tag_name(ring));
    TaggedRing out;
    out.ring = PolyRing::make(std::move(vars), ring->field());
    out.tag = ring->arity();
    out.lift.resize(static_cast<std::size_t>(ring->arity()));
    for (int i = 0; i < ring->arity(); ++i) out.lift[static_cast<std::size_t>(i)] = i;
    return out;
}

}  // namespace

Polynomial exact_divide(const Polynomial& p, const Polynomial& f, const MonomialOrder& ord) {
    if (f.is_zero()) throw RingError("division by the zero polynomial");
    if (p.is_zero()) return p;
    const RingPtr& ring = p.ring();
    const Term& fl = f.leading_term(ord);
    FieldElem flc_inv = fl.coeff.inverse();
    Polynomial rem = p;
    std::vector<Term> quotient_terms;
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term(ord);
        if (!expo_divides(fl.mono, lt.mono))
            throw RingError("exact division failed: '" + f.to_text() +
                            "' does not divide '" + p.to_text() + "'");
        FieldElem qc = lt.coeff * flc_inv;
        Exponents qm = expo_sub(lt.mono, fl.mono);
        quotient_terms.push_back({qm, qc});
        rem = rem - f.times_term(qc, qm);
    }
    return Polynomial::from_terms(ring, std::move(quotient_terms));
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) throw RingError("ideal quotient by zero");
    if (I.generators().empty()) return I;
    if (f.is_constant()) return I;
    const RingPtr& ring = I.ring();
    TaggedRing ext = extend_with_tag(ring);
    Polynomial w = Polynomial::variable(ext.ring, ext.tag);
    Polynomial one = Polynomial::constant(ext.ring, FieldElem::one(ext.ring->field()));
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators())
        gens.push_back(w * map_to_ring(g, ext.ring, ext.lift));
    Polynomial f_lift = map_to_ring(f, ext.ring, ext.lift);
    gens.push_back((one - w) * f_lift);

    MonomialOrder elim = MonomialOrder::block_highest(ext.ring->arity(), {ext.tag});
    GroebnerBasis gb = buchberger(ext.ring, gens, elim);

    MonomialOrder base_ord = MonomialOrder::lex(ring->arity());
    std::vector<int> back(static_cast<std::size_t>(ext.ring->arity()), -1);
    for (int i = 0; i < ring->arity(); ++i) back[static_cast<std::size_t>(i)] = i;

    std::vector<Polynomial> quotient_gens;
    for (const auto& g : gb.elements()) {
        if (g.degree_in(ext.tag) > 0) continue;
        // element of I cap <f>; strip the tag coordinate and divide by f
        Polynomial in_base = map_to_ring(g, ring, back);
        quotient_gens.push_back(exact_divide(in_base, f, base_ord));
    }
    return Ideal(ring, std::move(quotient_gens));
}

Ideal saturation(const Ideal& I, const Polynomial& f, SaturationMethod method) {
    if (f.is_zero()) throw RingError("saturation by zero");
    if (I.generators().empty() || f.is_constant()) return I;
    if (method == SaturationMethod::IteratedQuotient) {
        Ideal current = I;
        while (true) {
            Ideal next = ideal_quotient(current, f);
            if (ideal_equal(next, current)) return current;
            current = std::move(next);
        }
    }
    // elimination method: (I + <1 - w*f>) cap k[x]
    const RingPtr& ring = I.ring();
    TaggedRing ext = extend_with_tag(ring);
    Polynomial w = Polynomial::variable(ext.ring, ext.tag);
    Polynomial one = Polynomial::constant(ext.ring, FieldElem::one(ext.ring->field()));
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(map_to_ring(g, ext.ring, ext.lift));
    gens.push_back(one - w * map_to_ring(f, ext.ring, ext.lift));
    Ideal tagged(ext.ring, std::move(gens));
    Ideal eliminated = eliminate(tagged, {ext.tag});
    // move back into the original ring object (eliminate rebuilt the ring)
    std::vector<int> ident(static_cast<std::size_t>(ring->arity()));
    for (int i = 0; i < ring->arity(); ++i) ident[static_cast<std::size_t>(i)] = i;
    std::vector<Polynomial> out;
    for (const auto& g : eliminated.generators())
        out.push_back(map_to_ring(g, ring, ident));
    return Ideal(ring, std::move(out));
}

Ideal eliminate(const Ideal& I, const std::vector<int>& drop) {
    const RingPtr& ring = I.ring();
    std::vector<bool> dropped(static_cast<std::size_t>(ring->arity()), false);
    for (int v : drop) {
        if (v < 0 || v >= ring->arity()) throw RingError("eliminate: variable out of range");
        dropped[static_cast<std::size_t>(v)] = true;
    }
    std::vector<std::string> kept_names;
    std::vector<int> var_map(static_cast<std::size_t>(ring->arity()), -1);
    for (int i = 0; i < ring->arity(); ++i) {
        if (dropped[static_cast<std::size_t>(i)]) continue;
        var_map[static_cast<std::size_t>(i)] = static_cast<int>(kept_names.size());
        kept_names.push_back(ring->variable_name(i));
    }
    if (kept_names.empty()) throw RingError("eliminate: cannot drop every variable");
    RingPtr small = PolyRing::make(std::move(kept_names), ring->field());

    MonomialOrder elim = MonomialOrder::block_highest(ring->arity(), drop);
    const GroebnerBasis& gb = I.groebner(elim);
    std::vector<Polynomial> kept;
    for (const auto& g : gb.elements()) {
        bool uses_dropped = false;
        for (int v : drop)
            if (g.degree_in(v) > 0) uses_dropped = true;
        if (!uses_dropped) kept.push_back(map_to_ring(g, small, var_map));
    }
    return Ideal(small, std::move(kept));
}

bool radical_member(const Polynomial& p, const Ideal& I) {
    if (!p.ring() || !p.ring()->same(*I.ring()))
        throw RingError("radical membership across different rings");
    if (p.is_zero()) return true;
    if (ideal_member(p, I)) return true;
    const RingPtr& ring = I.ring();
    TaggedRing ext = extend_with_tag(ring);
    Polynomial w = Polynomial::variable(ext.ring, ext.tag);
    Polynomial one = Polynomial::constant(ext.ring, FieldElem::one(ext.ring->field()));
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(map_to_ring(g, ext.ring, ext.lift));
    gens.push_back(one - w * map_to_ring(p, ext.ring, ext.lift));
    GroebnerBasis gb = buchberger(ext.ring, gens, MonomialOrder::lex(ext.ring->arity()));
    return gb.is_unit();
}

}  // namespace idealkit
