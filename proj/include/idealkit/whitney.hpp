#ifndef IDEALKIT_WHITNEY_HPP
#define IDEALKIT_WHITNEY_HPP

#include "idealkit/poly.hpp"

#include <string>
#include <vector>

namespace idealkit {

/// Hypersurface V1 = {f = 0} with singular locus V2 cut out by a variable
/// subset, and the variable spanning the tangent direction of V2.
/// Construction checks f and its Jacobian vanish identically on the locus.
class HypersurfacePair {
public:
    HypersurfacePair(Polynomial f, std::vector<int> locus_vars, int direction);

    const Polynomial& f() const { return f_; }
    const std::vector<int>& locus_vars() const { return locus_; }
    int direction() const { return direction_; }
    const RingPtr& ring() const { return f_.ring(); }

private:
    Polynomial f_;
    std::vector<int> locus_;
    int direction_;
};

/// One-parameter polynomial curve: a coordinate polynomial in the curve
/// parameter per ambient variable, coefficients in the ambient field or
/// an extension of it. The base point is the parameter-zero evaluation.
class CurveFamily {
public:
    CurveFamily(RingPtr curve_ring, std::vector<Polynomial> coordinates);

    const RingPtr& curve_ring() const { return curve_ring_; }
    const std::vector<Polynomial>& coordinates() const { return coords_; }

private:
    RingPtr curve_ring_;  // one-variable ring over the (extension) field
    std::vector<Polynomial> coords_;
};

/// Limit of the hypersurface's normal direction along the curve: the
/// substituted Jacobian row, the common parameter valuation factored out,
/// and the leading coefficient vector (raw and scaled to make its first
/// nonzero coordinate one).
struct TangentLimit {
    std::vector<Polynomial> jacobian_along;  // in the curve ring
    long long valuation = 0;
    std::vector<FieldElem> leading;
    std::vector<FieldElem> normalized;
};

/// True iff f vanishes identically along the curve while some locus
/// coordinate is a nonzero monomial in the parameter (so the curve leaves
/// the locus for nonzero parameter values). Throws if the base point is
/// off the locus.
bool check_on_variety(const HypersurfacePair& pair, const CurveFamily& curve);

/// Requires check_on_variety to have passed; throws DegenerateCurveError
/// when the Jacobian vanishes identically along the curve.
TangentLimit limit_tangent(const HypersurfacePair& pair, const CurveFamily& curve);

struct WhitneyRefutation {
    bool fails_condition_a = false;
    FieldElem pairing;  // leading normal paired with the stratum direction
    TangentLimit limit;
    std::string certificate_json;
};

WhitneyRefutation refute_condition_a(const HypersurfacePair& pair, const CurveFamily& curve);

/// Re-substitutes the stored curve into the stored data and confirms the
/// certificate reproduces itself; false on any mismatch.
bool replay_whitney_certificate(const std::string& certificate_json);

}  // namespace idealkit

#endif
