#include "idealkit/integrality.hpp"

#include "idealkit/parse.hpp"

#include <json.hpp>

#include <numeric>

namespace idealkit {

using nlohmann::ordered_json;

IntegralityCertificate::Kind IntegralityCertificate::kind() const {
    if (std::holds_alternative<ExplicitEquationCert>(data_)) return Kind::ExplicitEquation;
    if (std::holds_alternative<DeterminantalCert>(data_)) return Kind::DeterminantalLevel;
    return Kind::NewtonPoint;
}

const ExplicitEquationCert& IntegralityCertificate::explicit_equation() const {
    return std::get<ExplicitEquationCert>(data_);
}

const DeterminantalCert& IntegralityCertificate::determinantal() const {
    return std::get<DeterminantalCert>(data_);
}

const NewtonPointCert& IntegralityCertificate::newton_point() const {
    return std::get<NewtonPointCert>(data_);
}

namespace {

ordered_json poly_list_json(const std::vector<Polynomial>& polys) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : polys) arr.push_back(p.to_text());
    return arr;
}

std::vector<Polynomial> poly_list_from_json(const ordered_json& arr, const RingPtr& ring) {
    std::vector<Polynomial> out;
    for (const auto& s : arr) out.push_back(parse_poly(s.get<std::string>(), ring));
    return out;
}

}  // namespace

std::string IntegralityCertificate::to_json() const {
    ordered_json j;
    j["schema"] = "integrality-certificate/v1";
    switch (kind()) {
        case Kind::ExplicitEquation: {
            const auto& c = explicit_equation();
            j["kind"] = "explicit-equation";
            j["ring"] = c.element.ring()->to_text();
            j["element"] = c.element.to_text();
            j["ideal"] = poly_list_json(c.ideal_gens);
            j["degree"] = c.degree;
            j["coefficients"] = poly_list_json(c.coefficients);
            break;
        }
        case Kind::DeterminantalLevel: {
            const auto& c = determinantal();
            j["kind"] = "determinantal-level";
            j["ring"] = c.element.ring()->to_text();
            j["element"] = c.element.to_text();
            j["ideal"] = poly_list_json(c.ideal_gens);
            j["level"] = c.level;
            break;
        }
        case Kind::NewtonPoint: {
            const auto& c = newton_point();
            j["kind"] = "newton-point";
            j["ring"] = c.ring->to_text();
            j["point"] = c.point;
            j["generators"] = c.generators;
            ordered_json w = ordered_json::array();
            for (const auto& q : c.weights) w.push_back(rational_to_text(q));
            j["weights"] = w;
            break;
        }
    }
    return j.dump(2);
}

IntegralityCertificate IntegralityCertificate::from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    RingPtr ring = parse_ring(j.at("ring").get<std::string>());
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "explicit-equation") {
        ExplicitEquationCert c;
        c.element = parse_poly(j.at("element").get<std::string>(), ring);
        c.ideal_gens = poly_list_from_json(j.at("ideal"), ring);
        c.degree = j.at("degree").get<unsigned>();
        c.coefficients = poly_list_from_json(j.at("coefficients"), ring);
        return IntegralityCertificate(std::move(c));
    }
    if (kind == "determinantal-level") {
        DeterminantalCert c;
        c.element = parse_poly(j.at("element").get<std::string>(), ring);
        c.ideal_gens = poly_list_from_json(j.at("ideal"), ring);
        c.level = j.at("level").get<unsigned>();
        return IntegralityCertificate(std::move(c));
    }
    if (kind == "newton-point") {
        NewtonPointCert c;
        c.ring = ring;
        c.point = j.at("point").get<Exponents>();
        c.generators = j.at("generators").get<std::vector<Exponents>>();
        for (const auto& s : j.at("weights")) {
            TokenStream ts(s.get<std::string>());
            c.weights.push_back(grammar::rational(ts));
        }
        return IntegralityCertificate(std::move(c));
    }
    throw Error("unknown certificate kind '" + kind + "'");
}

namespace {

// Explicit equation r^n + a_n = 0 read off a convex-weight witness: with
// n the common denominator, n*v dominates the matching generator product,
// so a_n = -r^n lies in I^n.
IntegralityCertificate explicit_from_witness(const Polynomial& r, const Ideal& I,
                                             const std::vector<Rational>& weights) {
    BigInt n = 1;
    for (const auto& w : weights) n = lcm(n, BigInt(denominator(w)));
    unsigned deg = n.convert_to<unsigned>();
    ExplicitEquationCert cert;
    cert.element = r;
    cert.ideal_gens = I.generators();
    cert.degree = deg;
    cert.coefficients.assign(deg, Polynomial(r.ring()));
    cert.coefficients[deg - 1] = -r.pow(deg);
    return IntegralityCertificate(std::move(cert));
}

}  // namespace

ClosureVerdict is_integral_over(const Polynomial& r, const Ideal& I, unsigned budget) {
    if (r.is_zero()) throw RingError("integrality of the zero element");
    if (!r.ring() || !r.ring()->same(*I.ring()))
        throw RingError("integrality test across different rings");
    if (budget < 1) throw RingError("integrality budget must be at least 1");

    // members are integral with the degree-1 equation r + (-r) = 0
    if (ideal_member(r, I)) {
        ExplicitEquationCert cert;
        cert.element = r;
        cert.ideal_gens = I.generators();
        cert.degree = 1;
        cert.coefficients = {-r};
        return {ClosureStatus::Integral, IntegralityCertificate(std::move(cert)), 0};
    }

    // Newton shortcut: monomial ideal, monomial element
    if (r.is_monomial()) {
        if (auto M = as_monomial_ideal(I)) {
            NewtonPolyhedron N(M->generators());
            const Exponents& v = r.terms()[0].mono;
            auto w = N.witness(v);
            if (!w) return {ClosureStatus::NotIntegralMonomialCase, std::nullopt, 0};
            return {ClosureStatus::Integral, explicit_from_witness(r, I, *w), 0};
        }
    }

    // determinantal levels: I*(I+<r>)^n = (I+<r>)^{n+1}
    Ideal J = ideal_sum(I, {r});
    for (unsigned n = 1; n <= budget; ++n) {
        Ideal lhs = ideal_product(I, ideal_power(J, n));
        Ideal rhs = ideal_power(J, n + 1);
        if (ideal_equal(lhs, rhs)) {
            DeterminantalCert cert;
            cert.element = r;
            cert.ideal_gens = I.generators();
            cert.level = n;
            return {ClosureStatus::Integral, IntegralityCertificate(std::move(cert)), n};
        }
    }
    return {ClosureStatus::UnknownWithinBudget, std::nullopt, budget};
}

bool verify_certificate(const IntegralityCertificate& c) {
    try {
        switch (c.kind()) {
            case IntegralityCertificate::Kind::ExplicitEquation: {
                const auto& cert = c.explicit_equation();
                if (cert.degree == 0 || cert.coefficients.size() != cert.degree)
                    return false;
                if (cert.element.is_zero()) return false;
                const RingPtr& ring = cert.element.ring();
                Ideal I(ring, cert.ideal_gens);
                Polynomial acc = cert.element.pow(cert.degree);
                for (unsigned i = 1; i <= cert.degree; ++i) {
                    const Polynomial& a = cert.coefficients[i - 1];
                    if (a.is_zero()) continue;
                    acc = acc + a * cert.element.pow(cert.degree - i);
                    if (!ideal_member(a, ideal_power(I, i))) return false;
                }
                return acc.is_zero();
            }
            case IntegralityCertificate::Kind::DeterminantalLevel: {
                const auto& cert = c.determinantal();
                if (cert.level == 0 || cert.element.is_zero()) return false;
                Ideal I(cert.element.ring(), cert.ideal_gens);
                Ideal J = ideal_sum(I, {cert.element});
                Ideal lhs = ideal_product(I, ideal_power(J, cert.level));
                Ideal rhs = ideal_power(J, cert.level + 1);
                return ideal_equal(lhs, rhs);
            }
            case IntegralityCertificate::Kind::NewtonPoint: {
                const auto& cert = c.newton_point();
                if (cert.weights.size() != cert.generators.size()) return false;
                if (cert.generators.empty()) return false;
                Rational sum(0);
                for (const auto& w : cert.weights) {
                    if (w < 0) return false;
                    sum += w;
                }
                if (sum != 1) return false;
                const std::size_t d = cert.point.size();
                for (std::size_t j = 0; j < d; ++j) {
                    Rational combo(0);
                    for (std::size_t i = 0; i < cert.generators.size(); ++i) {
                        if (cert.generators[i].size() != d) return false;
                        combo += cert.weights[i] * cert.generators[i][j];
                    }
                    if (combo > cert.point[j]) return false;
                }
                return true;
            }
        }
    } catch (const Error&) {
        return false;
    }
    return false;
}

bool ClosureBoundResult::all_integral() const {
    for (const auto& [cand, verdict] : verdicts)
        if (verdict.status != ClosureStatus::Integral) return false;
    return true;
}

ClosureBoundResult closure_lower_bound(const Ideal& I,
                                       const std::vector<Polynomial>& candidates,
                                       unsigned budget) {
    ClosureBoundResult out;
    std::vector<Polynomial> proven;
    for (const auto& r : candidates) {
        if (r.is_zero()) throw RingError("zero candidate in closure bound");
        ClosureVerdict v = is_integral_over(r, I, budget);
        if (v.status == ClosureStatus::Integral) proven.push_back(r);
        out.verdicts.emplace_back(r, std::move(v));
    }
    out.ideal = ideal_sum(I, proven);
    return out;
}

}  // namespace idealkit
