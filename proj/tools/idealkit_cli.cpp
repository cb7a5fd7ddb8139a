#include "idealkit/integrality.hpp"
#include "idealkit/parse.hpp"
#include "idealkit/primary.hpp"
#include "idealkit/scenario.hpp"
#include "idealkit/slice.hpp"
#include "idealkit/whitney.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace idealkit;
using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write '" + out_path + "'");
    out << text;
}

std::vector<int> resolve_vars(const RingPtr& ring, const std::string& csv) {
    std::vector<int> out;
    std::istringstream ss(csv);
    std::string name;
    while (std::getline(ss, name, ',')) {
        auto idx = ring->variable_index(name);
        if (!idx) throw Error("unknown variable '" + name + "'");
        out.push_back(*idx);
    }
    if (out.empty()) throw Error("empty variable list");
    return out;
}

MonomialOrder order_from_flag(const RingPtr& ring, const std::string& order_csv) {
    if (order_csv.empty()) return MonomialOrder::lex(ring->arity());
    std::vector<int> perm = resolve_vars(ring, order_csv);
    return MonomialOrder::lex_permuted(perm);
}

struct CurveFile {
    FieldPtr field;
    std::string param;
    std::vector<std::pair<std::string, std::string>> coords;  // name -> text
};

CurveFile parse_curve_file(const std::string& text) {
    TokenStream ts(text);
    CurveFile out;
    while (!ts.at_end()) {
        Token name = ts.expect(Tok::Ident, "'field', 'param', or a coordinate name");
        if (name.text == "field" && ts.peek().kind == Tok::Colon) {
            ts.next();
            out.field = grammar::field(ts);
        } else if (name.text == "param" && ts.peek().kind == Tok::Colon) {
            ts.next();
            out.param = ts.expect(Tok::Ident, "a parameter variable").text;
        } else {
            ts.expect(Tok::Eq, "'='");
            // capture tokens to re-parse once the curve ring exists
            std::size_t begin = ts.peek().span.begin;
            RingPtr probe = PolyRing::make(
                {out.param.empty() ? std::string("e") : out.param},
                out.field ? out.field : FieldDescriptor::rationals());
            Polynomial p = grammar::poly(ts, probe);
            (void)begin;
            out.coords.emplace_back(name.text, p.to_text());
        }
    }
    if (!out.field) out.field = FieldDescriptor::rationals();
    if (out.param.empty()) throw Error("curve file is missing a 'param:' line");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact commutative-algebra verification kit"};
    app.require_subcommand(1);

    std::string fixture_path, ideal_name, poly_text, element_text, order_csv;
    std::string drop_csv, method = "quotient", format = "human", out_path;
    std::string cert_out, g_text, h_text;
    unsigned budget = 4;

    auto add_fixture_opts = [&](CLI::App* cmd, bool needs_ideal = true) {
        cmd->add_option("fixture", fixture_path, "fixture file (ring/ideal entries)")
            ->required();
        if (needs_ideal)
            cmd->add_option("--ideal", ideal_name, "ideal name in the fixture")->required();
    };

    CLI::App* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis of an ideal");
    add_fixture_opts(gb_cmd);
    gb_cmd->add_option("--order", order_csv, "variable priority, e.g. x,y,z");

    CLI::App* member_cmd = app.add_subcommand("member", "ideal membership");
    add_fixture_opts(member_cmd);
    member_cmd->add_option("--poly", poly_text, "polynomial to test")->required();
    member_cmd->add_option("--order", order_csv, "variable priority");

    CLI::App* sat_cmd = app.add_subcommand("saturate", "saturation I : f^inf");
    add_fixture_opts(sat_cmd);
    sat_cmd->add_option("--poly", poly_text, "saturating polynomial")->required();
    sat_cmd->add_option("--method", method, "quotient | elim | both");

    CLI::App* rad_cmd = app.add_subcommand("radmember", "radical membership");
    add_fixture_opts(rad_cmd);
    rad_cmd->add_option("--poly", poly_text, "polynomial to test")->required();

    CLI::App* elim_cmd = app.add_subcommand("eliminate", "eliminate variables");
    add_fixture_opts(elim_cmd);
    elim_cmd->add_option("--drop", drop_csv, "variables to eliminate, e.g. w")->required();

    CLI::App* mc_cmd = app.add_subcommand("mono-closure", "integral closure of a monomial ideal");
    add_fixture_opts(mc_cmd);
    mc_cmd->add_option("--format", format, "human | json");

    CLI::App* md_cmd = app.add_subcommand("mono-decomp", "primary decomposition of a monomial ideal");
    add_fixture_opts(md_cmd);
    md_cmd->add_option("--format", format, "human | json");

    CLI::App* mp_cmd = app.add_subcommand("mono-isprimary", "primary test for a monomial ideal");
    add_fixture_opts(mp_cmd);
    mp_cmd->add_option("--format", format, "human | json");

    CLI::App* int_cmd = app.add_subcommand("integral-test", "integral-closure membership");
    add_fixture_opts(int_cmd);
    int_cmd->add_option("--element", element_text, "element to test")->required();
    int_cmd->add_option("--budget", budget, "maximum determinantal level");
    int_cmd->add_option("--cert-out", cert_out, "write the certificate JSON here");

    bool pseudo_flag = false;
    CLI::App* prim_cmd = app.add_subcommand("isprimary", "primary test (pseudo-primary pipeline)");
    add_fixture_opts(prim_cmd);
    prim_cmd->add_flag("--pseudo", pseudo_flag, "use the pseudo-primary saturation pipeline");

    CLI::App* wit_cmd = app.add_subcommand("witness-nonprimary", "non-primariness witness");
    add_fixture_opts(wit_cmd);
    wit_cmd->add_option("--witness-g", g_text, "candidate g (with --witness-h)");
    wit_cmd->add_option("--witness-h", h_text, "candidate h (with --witness-g)");

    CLI::App* whitney_cmd = app.add_subcommand("whitney", "Whitney condition tooling");
    whitney_cmd->require_subcommand(1);
    std::string f_path, curve_path, locus_csv, direction_name;
    CLI::App* refute_cmd = whitney_cmd->add_subcommand(
        "refute-a", "verify a witness curve refuting Whitney condition (a)");
    refute_cmd->add_option("--f", f_path, "fixture file with `poly f = ...`")->required();
    refute_cmd->add_option("--locus", locus_csv, "singular-locus variables, e.g. x,y,z")
        ->required();
    refute_cmd->add_option("--direction", direction_name, "stratum tangent variable")
        ->required();
    refute_cmd->add_option("--curve", curve_path, "curve file")->required();
    refute_cmd->add_option("--out", out_path, "write the certificate JSON here");

    CLI::App* slice_cmd = app.add_subcommand("slice", "real slices of x^6 + x^4*z*t + z^3");
    std::string t0_text = "0", t0_root_text;
    std::string x_min = "-1", x_max = "1", x_step = "1/8";
    slice_cmd->add_option("--t0", t0_text, "rational slice parameter");
    slice_cmd->add_option("--x-min", x_min, "sampling range start");
    slice_cmd->add_option("--x-max", x_max, "sampling range end");
    slice_cmd->add_option("--step", x_step, "sampling step");
    slice_cmd->add_option("--out", out_path, "write TSV here");
    CLI::App* classify_cmd = slice_cmd->add_subcommand("classify", "branch count for one t0");
    classify_cmd->add_option("--t0", t0_text, "rational slice parameter");
    classify_cmd->add_option("--t0-root", t0_root_text,
                             "take t0 as the real root of this cubic, e.g. 4*b^3+27");

    CLI::App* scen_cmd = app.add_subcommand("scenario", "run a verification scenario");
    std::string scenario_id;
    bool list_flag = false;
    unsigned n_param = 0;
    std::string field_param;
    scen_cmd->add_option("id", scenario_id, "scenario id");
    scen_cmd->add_flag("--list", list_flag, "list scenario ids");
    scen_cmd->add_option("--n", n_param, "family exponent parameter (1..10)");
    scen_cmd->add_option("--field", field_param, "coefficient field, e.g. QQ or Fp(2)");
    scen_cmd->add_option("--budget", budget, "integrality budget");
    scen_cmd->add_option("--format", format, "human | json");
    scen_cmd->add_option("--out", out_path, "write the report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (gb_cmd->parsed()) {
            FixtureFile fx = parse_fixture(read_file(fixture_path));
            Ideal I(fx.ring, fx.ideal(ideal_name));
            const GroebnerBasis& basis = I.groebner(order_from_flag(fx.ring, order_csv));
            for (const auto& g : basis.elements()) std::cout << g.to_text() << "\n";
            return kExitPass;
        }
        if (member_cmd->parsed()) {
            FixtureFile fx = parse_fixture(read_file(fixture_path));
            Ideal I(fx.ring, fx.ideal(ideal_name));
            bool in = ideal_member(parse_poly(poly_text, fx.ring), I,
                                   order_from_flag(fx.ring, order_csv));
            std::cout << (in ? "true" : "false") << "\n";
            return kExitPass;
        }
        if (sat_cmd->parsed()) {
            FixtureFile fx = parse_fixture(read_file(fixture_path));
            Ideal I(fx.ring, fx.ideal(ideal_name));
            Polynomial f = parse_poly(poly_text, fx.ring);
            if (method != "quotient" && method != "elim" && method != "both")
                throw Error("--method must be quotient, elim, or both");
            Ideal result = saturation(I, f,
                                      method == "elim" ? SaturationMethod::Elimination
                                                       : SaturationMethod::IteratedQuotient);
            if (method == "both") {
                Ideal cross = saturation(I, f, SaturationMethod::Elimination);
                if (!ideal_equal(result, cross)) {
                    std::cerr << "saturation methods disagree\n";
                    return kExitFail;
                }
                std::cout << "# methods agree\n";
            }
            for (const auto& g : result.groebner().elements())
                std::cout << g.to_text() << "\n";
            return kExitPass;
        }
        if (rad_cmd->parsed()) {
            FixtureFile fx = parse_fixture(read_file(fixture_path));
            Ideal I(fx.ring, fx.ideal(ideal_name));
            std::cout << (radical_member(parse_poly(poly_text, fx.ring), I) ? "true" : "false")
                      << "\n";
            return kExitPass;
        }
        if (elim_cmd->parsed()) {
            FixtureFile fx = parse_fixture(read_file(fixture_path));
            Ideal I(fx.ring, fx.ideal(ideal_name));
            Ideal small = eliminate(I, resolve_vars(fx.ring, drop_csv));
            std::cout << "# ring " << small.ring()->to_text() << "\n";
            for (const auto& g : small.groebner().elements())
                std::cout << g.to_text() << "\n";
            return kExitPass;
        }
        if (mc_cmd->parsed() || md_cmd->parsed() || mp_cmd->parsed()) {
            FixtureFile fx = parse_fixture(read_file(fixture_path));
            Ideal I(fx.ring, fx.ideal(ideal_name));
            auto M = as_monomial_ideal(I);
            if (!M) throw Error("ideal '" + ideal_name + "' is not monomial");
            ordered_json j;
            j["schema"] = "mono-report/v1";
            j["ring"] = fx.ring->to_text();
            j["ideal"] = ideal_name;
            std::ostringstream human;
            if (mc_cmd->parsed()) {
                MonomialIdeal cl = mono_integral_closure(*M);
                ordered_json arr = ordered_json::array();
                for (const auto& p : cl.generator_polys()) arr.push_back(p.to_text());
                j["closure"] = arr;
                human << cl.to_text() << "\n";
            } else if (md_cmd->parsed()) {
                auto comps = mono_primary_decomposition(*M);
                ordered_json arr = ordered_json::array();
                for (const auto& comp : comps) {
                    ordered_json one = ordered_json::array();
                    for (const auto& p : comp.generator_polys()) one.push_back(p.to_text());
                    arr.push_back(one);
                    human << comp.to_text() << "\n";
                }
                j["components"] = arr;
            } else {
                bool primary = mono_is_primary(*M);
                j["primary"] = primary;
                human << (primary ? "true" : "false") << "\n";
            }
            write_output(out_path, format == "json" ? j.dump(2) : human.str());
            return kExitPass;
        }
        if (int_cmd->parsed()) {
            FixtureFile fx = parse_fixture(read_file(fixture_path));
            Ideal I(fx.ring, fx.ideal(ideal_name));
            Polynomial r = parse_poly(element_text, fx.ring);
            ClosureVerdict v = is_integral_over(r, I, budget);
            switch (v.status) {
                case ClosureStatus::Integral: {
                    bool replay = verify_certificate(*v.certificate);
                    std::cout << "integral (replay " << (replay ? "ok" : "FAILED") << ")\n";
                    if (!cert_out.empty()) {
                        std::ofstream out(cert_out);
                        out << v.certificate->to_json() << "\n";
                    }
                    return replay ? kExitPass : kExitFail;
                }
                case ClosureStatus::NotIntegralMonomialCase:
                    std::cout << "not integral (Newton polyhedron refutation)\n";
                    return kExitFail;
                case ClosureStatus::UnknownWithinBudget:
                    std::cout << "unknown within budget " << v.budget_used << "\n";
                    return kExitFail;
            }
        }
        if (prim_cmd->parsed()) {
            if (!pseudo_flag) throw Error("only the --pseudo pipeline is available");
            FixtureFile fx = parse_fixture(read_file(fixture_path));
            Ideal I(fx.ring, fx.ideal(ideal_name));
            auto ev = is_primary_pseudo(I);
            if (!ev) {
                std::cout << "not-applicable (radical is not a variable-generated prime)\n";
                return kExitFail;
            }
            std::cout << (ev->primary ? "true" : "false") << "\n";
            std::cout << "# saturating polynomial: " << ev->saturating.to_text() << "\n";
            return kExitPass;
        }
        if (wit_cmd->parsed()) {
            FixtureFile fx = parse_fixture(read_file(fixture_path));
            Ideal I(fx.ring, fx.ideal(ideal_name));
            if (!g_text.empty() || !h_text.empty()) {
                if (g_text.empty() || h_text.empty())
                    throw Error("--witness-g and --witness-h must be given together");
                bool ok = verify_witness(I, parse_poly(g_text, fx.ring),
                                         parse_poly(h_text, fx.ring));
                std::cout << (ok ? "valid witness" : "not a witness") << "\n";
                return ok ? kExitPass : kExitFail;
            }
            auto w = find_non_primary_witness(I);
            if (!w) {
                std::cout << "not-found\n";
                return kExitFail;
            }
            std::cout << "g = " << w->g.to_text() << "\n";
            std::cout << "h = " << w->h.to_text() << "\n";
            std::cout << "g*h in I via " << w->product.to_text() << "\n";
            return kExitPass;
        }
        if (refute_cmd->parsed()) {
            FixtureFile fx = parse_fixture(read_file(f_path));
            Polynomial f = fx.polys.size() == 1 ? fx.polys[0].second : fx.poly("f");
            CurveFile cf = parse_curve_file(read_file(curve_path));
            RingPtr curve_ring = PolyRing::make({cf.param}, cf.field);
            std::vector<Polynomial> coords(static_cast<std::size_t>(fx.ring->arity()),
                                           Polynomial(curve_ring));
            std::vector<bool> assigned(static_cast<std::size_t>(fx.ring->arity()), false);
            for (const auto& [name, text] : cf.coords) {
                auto idx = fx.ring->variable_index(name);
                if (!idx) throw Error("curve coordinate '" + name + "' is not a ring variable");
                coords[static_cast<std::size_t>(*idx)] = parse_poly(text, curve_ring);
                assigned[static_cast<std::size_t>(*idx)] = true;
            }
            for (int v = 0; v < fx.ring->arity(); ++v)
                if (!assigned[static_cast<std::size_t>(v)])
                    throw Error("curve file does not assign '" + fx.ring->variable_name(v) + "'");
            auto locus = resolve_vars(fx.ring, locus_csv);
            auto dir = fx.ring->variable_index(direction_name);
            if (!dir) throw Error("unknown direction variable '" + direction_name + "'");
            HypersurfacePair pair(f, locus, *dir);
            CurveFamily curve(curve_ring, std::move(coords));
            WhitneyRefutation r = refute_condition_a(pair, curve);
            bool replay = replay_whitney_certificate(r.certificate_json);
            std::cout << (r.fails_condition_a ? "FAILS_A" : "NOT_REFUTED")
                      << " (pairing " << r.pairing.to_text() << ", valuation "
                      << r.limit.valuation << ", replay " << (replay ? "ok" : "FAILED")
                      << ")\n";
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                out << r.certificate_json << "\n";
            }
            return (r.fails_condition_a && replay) ? kExitPass : kExitFail;
        }
        if (classify_cmd->parsed()) {
            FieldElem t0;
            if (!t0_root_text.empty()) {
                RingPtr probe = PolyRing::make({"b"}, FieldDescriptor::rationals());
                Polynomial m = parse_poly(t0_root_text, probe);
                std::vector<FieldElem> coeffs(
                    static_cast<std::size_t>(m.degree_in(0)) + 1,
                    FieldElem::zero(FieldDescriptor::rationals()));
                for (const auto& t : m.terms())
                    coeffs[static_cast<std::size_t>(t.mono[0])] = t.coeff;
                FieldPtr ext = FieldDescriptor::simple_extension(
                    FieldDescriptor::rationals(), "b", std::move(coeffs));
                t0 = FieldElem::generator(ext);
            } else {
                TokenStream ts(t0_text);
                t0 = FieldElem::from_rational(FieldDescriptor::rationals(),
                                              grammar::rational(ts));
            }
            SliceClassification cls = classify_slice(t0);
            const char* sign = cls.sign == DiscriminantSign::Positive   ? "positive"
                               : cls.sign == DiscriminantSign::Zero     ? "zero"
                                                                        : "negative";
            std::cout << "discriminant sign " << sign << ", " << cls.real_branches
                      << " real branch(es)\n";
            return kExitPass;
        }
        if (slice_cmd->parsed()) {
            auto rat = [](const std::string& s) {
                TokenStream ts(s);
                return grammar::rational(ts);
            };
            auto samples = emit_slice_samples(rat(t0_text), rat(x_min), rat(x_max), rat(x_step));
            write_output(out_path, slice_samples_tsv(samples));
            return kExitPass;
        }
        if (scen_cmd->parsed()) {
            if (list_flag) {
                for (const auto& id : scenario_ids()) std::cout << id << "\n";
                return kExitPass;
            }
            if (scenario_id.empty()) throw Error("scenario id required (or --list)");
            ScenarioOptions opts;
            opts.budget = budget;
            if (n_param > 0) {
                if (n_param > 10) throw Error("--n is limited to 10");
                opts.parameters["n"] = std::to_string(n_param);
            }
            if (!field_param.empty()) opts.parameters["field"] = field_param;
            VerificationReport report = run_scenario(scenario_id, opts);
            write_output(out_path, format == "json" ? report.to_json() : report.to_human());
            return report.overall_pass() ? kExitPass : kExitFail;
        }
        throw Error("no subcommand handled");
    } catch (const ParseError& e) {
        std::cerr << "parse error at bytes " << e.span().begin << ".." << e.span().end
                  << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
