#ifndef IDEALKIT_PRIMARY_HPP
#define IDEALKIT_PRIMARY_HPP

#include "idealkit/monomial.hpp"

#include <optional>
#include <vector>

namespace idealkit {

/// Pseudo-primary shape: the radical is the prime generated by
/// radical_vars, and independent_vars is the complementary maximally
/// independent set.
struct PseudoPrimaryData {
    Ideal ideal;
    std::vector<int> radical_vars;
    std::vector<int> independent_vars;
};

/// Detects a variable-generated prime radical: collects the variables in
/// the radical and checks every generator lies in the ideal they span.
std::optional<PseudoPrimaryData> detect_pseudo_primary(const Ideal& I);

/// lcm of the leading coefficients in k[U] over the reduced basis for the
/// block order with U lowest. Monomial coefficients combine by
/// componentwise max; non-monomial ones enter as a product, which
/// saturates at least as far (see docs/design-notes.md).
Polynomial saturating_polynomial(const Ideal& I, const std::vector<int>& u_vars);

struct PrimaryEvidence {
    bool primary = false;
    PseudoPrimaryData data;
    Polynomial saturating;
    Ideal saturated;  // I : f^inf; equals I exactly when I is primary
};

/// Primary test for pseudo-primary ideals: I is primary iff it equals the
/// saturation by the saturating polynomial. nullopt when the ideal is not
/// pseudo-primary in the detected sense.
std::optional<PrimaryEvidence> is_primary_pseudo(const Ideal& I);

/// g*h in I, g not in I, no power of h in I.
struct NonPrimaryWitness {
    Polynomial g;
    Polynomial h;
    Polynomial product;
};

/// Replays the three witness conditions.
bool verify_witness(const Ideal& I, const Polynomial& g, const Polynomial& h);

/// Searches monomial-times-cofactor splittings of the reduced-basis
/// elements (largest leading monomial first, divisors by ascending
/// degree), then bounded pairwise products of generators' monomial parts.
std::optional<NonPrimaryWitness> find_non_primary_witness(const Ideal& I);

}  // namespace idealkit

#endif
