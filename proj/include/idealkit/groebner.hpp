#ifndef IDEALKIT_GROEBNER_HPP
#define IDEALKIT_GROEBNER_HPP

#include "idealkit/poly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace idealkit {

/// Reduced Groebner basis: monic elements, no term of any element
/// divisible by another element's leading monomial, sorted by ascending
/// leading monomial. Uniqueness of this form backs ideal_equal.
class GroebnerBasis {
public:
    GroebnerBasis(MonomialOrder order, std::vector<Polynomial> elements)
        : order_(std::move(order)), elements_(std::move(elements)) {}

    const MonomialOrder& order() const { return order_; }
    const std::vector<Polynomial>& elements() const { return elements_; }
    bool is_unit() const;

private:
    MonomialOrder order_;
    std::vector<Polynomial> elements_;
};

/// Ideal given by generators, with a per-order cache of reduced bases.
/// Copies share the cache; lookups are internally synchronized so
/// concurrent readers are safe.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> generators);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    const GroebnerBasis& groebner(const MonomialOrder& ord) const;
    MonomialOrder default_order() const { return MonomialOrder::lex(ring_->arity()); }
    const GroebnerBasis& groebner() const { return groebner(default_order()); }

private:
    struct Cache {
        std::mutex mutex;
        std::map<std::vector<int>, std::shared_ptr<const GroebnerBasis>> bases;
    };

    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& generators,
                         const MonomialOrder& ord);

/// Remainder of p on division by G; no term of the result is divisible by
/// any leading monomial of G, and p - result lies in <G>.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

bool ideal_member(const Polynomial& p, const Ideal& I);
bool ideal_member(const Polynomial& p, const Ideal& I, const MonomialOrder& ord);
bool ideal_equal(const Ideal& A, const Ideal& B);
bool ideal_equal(const Ideal& A, const Ideal& B, const MonomialOrder& ord);

Ideal ideal_sum(const Ideal& A, const Ideal& B);
Ideal ideal_sum(const Ideal& A, const std::vector<Polynomial>& extra);
Ideal ideal_product(const Ideal& A, const Ideal& B);
/// A^k; k = 0 gives the unit ideal. Generators are the distinct k-fold
/// products of A's generators.
Ideal ideal_power(const Ideal& A, unsigned k);

/// { g : g*f in I }, via tag-variable intersection with <f>.
Ideal ideal_quotient(const Ideal& I, const Polynomial& f);

enum class SaturationMethod { IteratedQuotient, Elimination };

/// I : f^inf. The default iterates ideal_quotient to stabilization; the
/// elimination method adjoins 1 - w*f and eliminates w, and serves as an
/// independent cross-check.
Ideal saturation(const Ideal& I, const Polynomial& f,
                 SaturationMethod method = SaturationMethod::IteratedQuotient);

/// I intersected with the subring omitting `drop`; result lives in the
/// smaller ring.
Ideal eliminate(const Ideal& I, const std::vector<int>& drop);

/// True iff some power of p lies in I (Rabinowitsch trick).
bool radical_member(const Polynomial& p, const Ideal& I);

/// Exact division p / f; throws if f does not divide p.
Polynomial exact_divide(const Polynomial& p, const Polynomial& f, const MonomialOrder& ord);

}  // namespace idealkit

#endif
