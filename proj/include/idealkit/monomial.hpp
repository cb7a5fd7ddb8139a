#ifndef IDEALKIT_MONOMIAL_HPP
#define IDEALKIT_MONOMIAL_HPP

#include "idealkit/groebner.hpp"

#include <optional>
#include <vector>

namespace idealkit {

/// Monomial ideal as an antichain of exponent vectors (no generator
/// divides another).
class MonomialIdeal {
public:
    MonomialIdeal(RingPtr ring, std::vector<Exponents> generators);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Exponents>& generators() const { return gens_; }

    bool contains_monomial(const Exponents& m) const;
    /// Ideal containment: every generator of other is a multiple of one of
    /// ours.
    bool contains(const MonomialIdeal& other) const;
    bool operator==(const MonomialIdeal& other) const;

    std::vector<Polynomial> generator_polys() const;
    Ideal as_ideal() const;
    std::string to_text() const;

private:
    RingPtr ring_;
    std::vector<Exponents> gens_;  // minimal, canonically sorted
};

/// Prunes non-minimal vectors and sorts canonically.
MonomialIdeal minimalize(const RingPtr& ring, std::vector<Exponents> vectors);

/// Reads a monomial ideal off an Ideal whose reduced Groebner basis is
/// all monomials; nullopt otherwise.
std::optional<MonomialIdeal> as_monomial_ideal(const Ideal& I);

/// Newton polyhedron of a monomial ideal: conv(generators) + R_{>=0}^d.
class NewtonPolyhedron {
public:
    explicit NewtonPolyhedron(std::vector<Exponents> generators);
    const std::vector<Exponents>& generators() const { return gens_; }

    /// Exact membership of v, decided by rational Fourier-Motzkin
    /// feasibility of  lambda >= 0, sum lambda = 1, sum lambda_i e_i <= v.
    bool contains(const Exponents& v) const;
    /// Membership witness: convex weights per generator, or nullopt.
    std::optional<std::vector<Rational>> witness(const Exponents& v) const;

private:
    std::vector<Exponents> gens_;
};

/// All lattice points of the Newton polyhedron, as a monomial ideal.
/// Minimal generators of the closure divide the componentwise maximum of
/// the input generators (see docs/design-notes.md), so the search box is
/// finite.
MonomialIdeal mono_integral_closure(const MonomialIdeal& M);

MonomialIdeal mono_intersection(const MonomialIdeal& A, const MonomialIdeal& B);

/// Standard criterion: every variable dividing a minimal generator occurs
/// as a pure power among the generators.
bool mono_is_primary(const MonomialIdeal& M);

/// Irredundant primary decomposition by coprime splitting of mixed
/// generators; components with equal radical are intersected, redundant
/// components dropped, output canonically ordered.
std::vector<MonomialIdeal> mono_primary_decomposition(const MonomialIdeal& M);

/// Variables in the radical, i.e. appearing in some generator.
std::vector<int> mono_radical_support(const MonomialIdeal& M);

}  // namespace idealkit

#endif
