#include "idealkit/whitney.hpp"

#include "idealkit/parse.hpp"

#include <json.hpp>

#include <algorithm>

namespace idealkit {

using nlohmann::ordered_json;

namespace {

// f with the locus variables set to zero, as a polynomial in the same ring.
Polynomial kill_locus(const Polynomial& p, const std::vector<int>& locus) {
    std::vector<bool> zeroed(static_cast<std::size_t>(p.ring()->arity()), false);
    for (int v : locus) zeroed[static_cast<std::size_t>(v)] = true;
    std::vector<Term> kept;
    for (const auto& t : p.terms()) {
        bool killed = false;
        for (std::size_t i = 0; i < t.mono.size(); ++i)
            if (zeroed[i] && t.mono[i] > 0) killed = true;
        if (!killed) kept.push_back(t);
    }
    return Polynomial::from_terms(p.ring(), std::move(kept));
}

long long min_parameter_exponent(const Polynomial& p) {
    // terms are sorted descending, so the last term carries the lowest power
    return p.terms().back().mono[0];
}

FieldElem coefficient_of(const Polynomial& p, int exponent) {
    for (const auto& t : p.terms())
        if (t.mono[0] == exponent) return t.coeff;
    return FieldElem::zero(p.ring()->field());
}

}  // namespace

HypersurfacePair::HypersurfacePair(Polynomial f, std::vector<int> locus_vars, int direction)
    : f_(std::move(f)), locus_(std::move(locus_vars)), direction_(direction) {
    if (!f_.ring()) throw RingError("hypersurface requires a ring");
    const RingPtr& ring = f_.ring();
    if (locus_.empty() || static_cast<int>(locus_.size()) >= ring->arity())
        throw RingError("singular locus must be a proper nonempty variable subset");
    for (int v : locus_)
        if (v < 0 || v >= ring->arity()) throw RingError("locus variable out of range");
    if (direction_ < 0 || direction_ >= ring->arity())
        throw RingError("stratum direction out of range");
    if (std::find(locus_.begin(), locus_.end(), direction_) != locus_.end())
        throw RingError("stratum direction must lie outside the singular locus");
    if (f_.is_zero()) throw RingError("hypersurface polynomial must be nonzero");
    if (!kill_locus(f_, locus_).is_zero())
        throw RingError("locus does not lie on the hypersurface");
    for (int v = 0; v < ring->arity(); ++v) {
        if (!kill_locus(f_.derivative(v), locus_).is_zero())
            throw RingError("Jacobian does not vanish along the declared locus");
    }
}

CurveFamily::CurveFamily(RingPtr curve_ring, std::vector<Polynomial> coordinates)
    : curve_ring_(std::move(curve_ring)), coords_(std::move(coordinates)) {
    if (!curve_ring_ || curve_ring_->arity() != 1)
        throw RingError("curve ring must have exactly one parameter variable");
    for (const auto& c : coords_)
        if (c.ring() && !c.ring()->same(*curve_ring_))
            throw RingError("curve coordinate in a different ring");
}

bool check_on_variety(const HypersurfacePair& pair, const CurveFamily& curve) {
    const RingPtr& ambient = pair.ring();
    if (static_cast<int>(curve.coordinates().size()) != ambient->arity())
        throw RingError("curve must assign every ambient variable");

    // invariant: base point on the locus
    for (int v : pair.locus_vars()) {
        const Polynomial& c = curve.coordinates()[static_cast<std::size_t>(v)];
        for (const auto& t : c.terms())
            if (t.mono[0] == 0)
                throw RingError("curve base point lies off the singular locus");
    }

    if (!substitute(pair.f(), curve.coordinates()).is_zero()) return false;

    // off-locus for nonzero parameter: some locus coordinate is c*eps^k
    for (int v : pair.locus_vars()) {
        const Polynomial& c = curve.coordinates()[static_cast<std::size_t>(v)];
        if (c.is_monomial() && c.terms()[0].mono[0] >= 1) return true;
    }
    return false;
}

TangentLimit limit_tangent(const HypersurfacePair& pair, const CurveFamily& curve) {
    const RingPtr& ambient = pair.ring();
    TangentLimit out;
    bool all_zero = true;
    for (int v = 0; v < ambient->arity(); ++v) {
        Polynomial along = substitute(pair.f().derivative(v), curve.coordinates());
        if (!along.is_zero()) all_zero = false;
        out.jacobian_along.push_back(std::move(along));
    }
    if (all_zero)
        throw DegenerateCurveError("Jacobian vanishes identically along the curve");

    long long k = -1;
    for (const auto& g : out.jacobian_along) {
        if (g.is_zero()) continue;
        long long v = min_parameter_exponent(g);
        if (k < 0 || v < k) k = v;
    }
    out.valuation = k;

    const FieldPtr& field = curve.curve_ring()->field();
    for (const auto& g : out.jacobian_along) {
        out.leading.push_back(g.is_zero() ? FieldElem::zero(field)
                                          : coefficient_of(g, static_cast<int>(k)));
    }
    FieldElem scale = FieldElem::one(field);
    for (const auto& c : out.leading)
        if (!c.is_zero()) {
            scale = c.inverse();
            break;
        }
    for (const auto& c : out.leading) out.normalized.push_back(c * scale);
    return out;
}

WhitneyRefutation refute_condition_a(const HypersurfacePair& pair, const CurveFamily& curve) {
    if (!check_on_variety(pair, curve))
        throw RingError("curve does not lie on the hypersurface away from the locus");
    WhitneyRefutation out{false, FieldElem(), limit_tangent(pair, curve), ""};
    out.pairing = out.limit.leading[static_cast<std::size_t>(pair.direction())];
    out.fails_condition_a = !out.pairing.is_zero();

    ordered_json j;
    j["schema"] = "whitney-certificate/v1";
    j["ring"] = pair.ring()->to_text();
    j["f"] = pair.f().to_text();
    ordered_json locus = ordered_json::array();
    for (int v : pair.locus_vars()) locus.push_back(pair.ring()->variable_name(v));
    j["locus"] = locus;
    j["direction"] = pair.ring()->variable_name(pair.direction());
    j["curve_ring"] = curve.curve_ring()->to_text();
    ordered_json coords = ordered_json::array();
    for (const auto& c : curve.coordinates()) coords.push_back(c.to_text());
    j["curve"] = coords;
    ordered_json jac = ordered_json::array();
    for (const auto& g : out.limit.jacobian_along) jac.push_back(g.to_text());
    j["jacobian_along_curve"] = jac;
    j["valuation"] = out.limit.valuation;
    ordered_json lead = ordered_json::array(), norm = ordered_json::array();
    for (const auto& c : out.limit.leading) lead.push_back(c.to_text());
    for (const auto& c : out.limit.normalized) norm.push_back(c.to_text());
    j["limit_normal"] = lead;
    j["limit_normal_normalized"] = norm;
    j["pairing"] = out.pairing.to_text();
    j["verdict"] = out.fails_condition_a ? "FAILS_A" : "NOT_REFUTED";
    out.certificate_json = j.dump(2);
    return out;
}

bool replay_whitney_certificate(const std::string& certificate_json) {
    try {
        ordered_json j = ordered_json::parse(certificate_json);
        RingPtr ambient = parse_ring(j.at("ring").get<std::string>());
        Polynomial f = parse_poly(j.at("f").get<std::string>(), ambient);
        std::vector<int> locus;
        for (const auto& name : j.at("locus")) {
            auto idx = ambient->variable_index(name.get<std::string>());
            if (!idx) return false;
            locus.push_back(*idx);
        }
        auto dir = ambient->variable_index(j.at("direction").get<std::string>());
        if (!dir) return false;
        HypersurfacePair pair(std::move(f), std::move(locus), *dir);

        RingPtr curve_ring = parse_ring(j.at("curve_ring").get<std::string>());
        std::vector<Polynomial> coords;
        for (const auto& s : j.at("curve"))
            coords.push_back(parse_poly(s.get<std::string>(), curve_ring));
        CurveFamily curve(curve_ring, std::move(coords));

        if (!check_on_variety(pair, curve)) return false;
        TangentLimit limit = limit_tangent(pair, curve);
        if (limit.valuation != j.at("valuation").get<long long>()) return false;
        const auto& jac = j.at("jacobian_along_curve");
        if (jac.size() != limit.jacobian_along.size()) return false;
        for (std::size_t i = 0; i < limit.jacobian_along.size(); ++i)
            if (limit.jacobian_along[i].to_text() != jac[static_cast<int>(i)].get<std::string>())
                return false;
        const auto& lead = j.at("limit_normal");
        for (std::size_t i = 0; i < limit.leading.size(); ++i)
            if (limit.leading[i].to_text() != lead[static_cast<int>(i)].get<std::string>())
                return false;
        FieldElem pairing = limit.leading[static_cast<std::size_t>(pair.direction())];
        if (pairing.to_text() != j.at("pairing").get<std::string>()) return false;
        std::string verdict = pairing.is_zero() ? "NOT_REFUTED" : "FAILS_A";
        return verdict == j.at("verdict").get<std::string>();
    } catch (const Error&) {
        return false;
    } catch (const nlohmann::json::exception&) {
        return false;
    }
}

}  // namespace idealkit
