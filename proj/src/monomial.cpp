#include "idealkit/monomial.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace idealkit {

namespace {

int canonical_compare(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
}

void sort_canonical(std::vector<Exponents>& gens) {
    std::sort(gens.begin(), gens.end(), [](const Exponents& a, const Exponents& b) {
        return canonical_compare(a, b) > 0;
    });
}

std::string monomial_text(const RingPtr& ring, const Exponents& e) {
    if (expo_is_zero(e)) return "1";
    std::string out;
    for (int v = 0; v < ring->arity(); ++v) {
        int k = e[static_cast<std::size_t>(v)];
        if (k == 0) continue;
        if (!out.empty()) out += "*";
        out += ring->variable_name(v);
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Exponents> generators)
    : ring_(std::move(ring)) {
    if (generators.empty())
        throw RingError("monomial ideal requires at least one generator");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != ring_->arity())
            throw RingError("exponent vector arity mismatch");
        for (int e : g)
            if (e < 0) throw RingError("negative exponent in monomial ideal");
    }
    // prune to the minimal antichain
    std::vector<Exponents> kept;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < generators.size() && !redundant; ++j) {
            if (i == j) continue;
            if (generators[j] == generators[i]) {
                redundant = j < i;
            } else if (expo_divides(generators[j], generators[i])) {
                redundant = true;
            }
        }
        if (!redundant) kept.push_back(generators[i]);
    }
    sort_canonical(kept);
    gens_ = std::move(kept);
}

bool MonomialIdeal::contains_monomial(const Exponents& m) const {
    for (const auto& g : gens_)
        if (expo_divides(g, m)) return true;
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    for (const auto& g : other.gens_)
        if (!contains_monomial(g)) return false;
    return true;
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
    return ring_->same(*other.ring_) && gens_ == other.gens_;
}

std::vector<Polynomial> MonomialIdeal::generator_polys() const {
    std::vector<Polynomial> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_)
        out.push_back(Polynomial::term(ring_, FieldElem::one(ring_->field()), g));
    return out;
}

Ideal MonomialIdeal::as_ideal() const { return Ideal(ring_, generator_polys()); }

std::string MonomialIdeal::to_text() const {
    std::string out = "[ ";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += " ; ";
        out += monomial_text(ring_, gens_[i]);
    }
    return out + " ]";
}

MonomialIdeal minimalize(const RingPtr& ring, std::vector<Exponents> vectors) {
    return MonomialIdeal(ring, std::move(vectors));
}

std::optional<MonomialIdeal> as_monomial_ideal(const Ideal& I) {
    if (I.generators().empty()) return std::nullopt;
    const GroebnerBasis& gb = I.groebner();
    std::vector<Exponents> gens;
    for (const auto& g : gb.elements()) {
        if (!g.is_monomial()) return std::nullopt;
        gens.push_back(g.terms()[0].mono);
    }
    return MonomialIdeal(I.ring(), std::move(gens));
}

// --- Newton polyhedron -----------------------------------------------------

namespace {

// One inequality a . lambda <= b over the reduced variables.
struct Row {
    std::vector<Rational> a;
    Rational b;
};

void normalize_row(Row& r) {
    Rational scale = 0;
    for (const auto& c : r.a)
        if (c != 0) {
            scale = abs(c);
            break;
        }
    if (scale == 0) return;
    for (auto& c : r.a) c /= scale;
    r.b /= scale;
}

bool row_less(const Row& x, const Row& y) {
    if (x.b != y.b) return x.b < y.b;
    return std::lexicographical_compare(x.a.begin(), x.a.end(), y.a.begin(), y.a.end());
}

void dedupe_rows(std::vector<Row>& rows) {
    for (auto& r : rows) normalize_row(r);
    std::sort(rows.begin(), rows.end(), row_less);
    rows.erase(std::unique(rows.begin(), rows.end(),
                           [](const Row& x, const Row& y) {
                               return x.a == y.a && x.b == y.b;
                           }),
               rows.end());
}

}  // namespace

NewtonPolyhedron::NewtonPolyhedron(std::vector<Exponents> generators)
    : gens_(std::move(generators)) {
    if (gens_.empty()) throw RingError("Newton polyhedron requires generators");
    for (const auto& g : gens_)
        if (g.size() != gens_[0].size())
            throw RingError("exponent vector arity mismatch");
}

std::optional<std::vector<Rational>> NewtonPolyhedron::witness(const Exponents& v) const {
    const std::size_t m = gens_.size();
    const std::size_t d = gens_[0].size();
    if (v.size() != d) throw RingError("arity mismatch in polyhedron membership");

    // direct divisibility: one generator already below v
    for (std::size_t i = 0; i < m; ++i) {
        if (expo_divides(gens_[i], v)) {
            std::vector<Rational> lam(m, Rational(0));
            lam[i] = 1;
            return lam;
        }
    }
    if (m == 1) return std::nullopt;

    // substitute lambda_{m-1} = 1 - sum(other lambdas); reduced system over
    // lambda_0..lambda_{m-2}
    const std::size_t n = m - 1;
    std::vector<Row> rows;
    for (std::size_t i = 0; i < n; ++i) {
        Row r{std::vector<Rational>(n, Rational(0)), Rational(0)};
        r.a[i] = -1;  // lambda_i >= 0
        rows.push_back(std::move(r));
    }
    {
        Row r{std::vector<Rational>(n, Rational(1)), Rational(1)};  // lambda_{m-1} >= 0
        rows.push_back(std::move(r));
    }
    for (std::size_t j = 0; j < d; ++j) {
        Row r{std::vector<Rational>(n, Rational(0)), Rational(0)};
        int last = gens_[n][j];
        for (std::size_t i = 0; i < n; ++i) r.a[i] = gens_[i][j] - last;
        r.b = v[j] - last;
        rows.push_back(std::move(r));
    }

    // Fourier-Motzkin elimination, keeping each stage for back-substitution
    std::vector<std::vector<Row>> stages;
    for (std::size_t k = 0; k < n; ++k) {
        dedupe_rows(rows);
        stages.push_back(rows);
        std::vector<Row> next;
        std::vector<const Row*> pos, neg;
        for (const auto& r : rows) {
            if (r.a[k] > 0)
                pos.push_back(&r);
            else if (r.a[k] < 0)
                neg.push_back(&r);
            else
                next.push_back(r);
        }
        for (const Row* p : pos) {
            for (const Row* q : neg) {
                Row combo{std::vector<Rational>(n, Rational(0)), Rational(0)};
                Rational wp = -q->a[k];  // > 0
                Rational wq = p->a[k];   // > 0
                for (std::size_t i = 0; i < n; ++i)
                    combo.a[i] = wp * p->a[i] + wq * q->a[i];
                combo.b = wp * p->b + wq * q->b;
                bool all_zero = true;
                for (std::size_t i = k + 1; i < n; ++i)
                    if (combo.a[i] != 0) all_zero = false;
                if (all_zero && combo.b < 0) return std::nullopt;
                if (!(all_zero && combo.b >= 0)) next.push_back(std::move(combo));
            }
        }
        rows = std::move(next);
    }
    for (const auto& r : rows)
        if (r.b < 0) return std::nullopt;

    // feasible: back-substitute a concrete witness
    std::vector<Rational> lam(m, Rational(0));
    for (std::size_t step = n; step-- > 0;) {
        Rational lower(0);
        bool have_upper = false;
        Rational upper(0);
        for (const auto& r : stages[step]) {
            if (r.a[step] == 0) continue;
            Rational rest = r.b;
            for (std::size_t i = step + 1; i < n; ++i) rest -= r.a[i] * lam[i];
            Rational bound = rest / r.a[step];
            if (r.a[step] > 0) {
                if (!have_upper || bound < upper) {
                    upper = bound;
                    have_upper = true;
                }
            } else if (bound > lower) {
                lower = bound;
            }
        }
        lam[step] = lower;
        (void)have_upper;
    }
    Rational sum(0);
    for (std::size_t i = 0; i < n; ++i) sum += lam[i];
    lam[n] = Rational(1) - sum;
    return lam;
}

bool NewtonPolyhedron::contains(const Exponents& v) const {
    return witness(v).has_value();
}

bool newton_member(const Exponents& v, const NewtonPolyhedron& N) {
    return N.contains(v);
}

MonomialIdeal mono_integral_closure(const MonomialIdeal& M) {
    const std::size_t d = static_cast<std::size_t>(M.ring()->arity());
    NewtonPolyhedron N(M.generators());
    Exponents box(d, 0);
    for (const auto& g : M.generators())
        for (std::size_t j = 0; j < d; ++j) box[j] = std::max(box[j], g[j]);

    std::vector<Exponents> points;
    Exponents v(d, 0);
    while (true) {
        if (M.contains_monomial(v) || N.contains(v)) points.push_back(v);
        std::size_t j = 0;
        while (j < d && v[j] == box[j]) {
            v[j] = 0;
            ++j;
        }
        if (j == d) break;
        ++v[j];
    }
    return MonomialIdeal(M.ring(), std::move(points));
}

MonomialIdeal mono_intersection(const MonomialIdeal& A, const MonomialIdeal& B) {
    if (!A.ring()->same(*B.ring()))
        throw RingError("intersection across different rings");
    std::vector<Exponents> gens;
    for (const auto& a : A.generators())
        for (const auto& b : B.generators()) gens.push_back(expo_lcm(a, b));
    return MonomialIdeal(A.ring(), std::move(gens));
}

std::vector<int> mono_radical_support(const MonomialIdeal& M) {
    std::vector<int> out;
    for (int v = 0; v < M.ring()->arity(); ++v) {
        bool used = false;
        for (const auto& g : M.generators())
            if (g[static_cast<std::size_t>(v)] > 0) used = true;
        if (used) out.push_back(v);
    }
    return out;
}

bool mono_is_primary(const MonomialIdeal& M) {
    std::vector<int> support = mono_radical_support(M);
    for (int v : support) {
        bool pure_power = false;
        for (const auto& g : M.generators()) {
            bool pure = g[static_cast<std::size_t>(v)] > 0;
            for (std::size_t i = 0; i < g.size() && pure; ++i)
                if (static_cast<int>(i) != v && g[i] > 0) pure = false;
            if (pure) {
                pure_power = true;
                break;
            }
        }
        if (!pure_power) return false;
    }
    return true;
}

namespace {

void decompose_rec(const MonomialIdeal& M, std::vector<MonomialIdeal>& leaves) {
    if (mono_is_primary(M)) {
        leaves.push_back(M);
        return;
    }
    // first generator mixing at least two variables, split off the first
    // variable's pure power: m = m1*m2 coprime, I = (I+<m1>) cap (I+<m2>)
    for (const auto& g : M.generators()) {
        int nonzero = 0;
        for (int e : g)
            if (e > 0) ++nonzero;
        if (nonzero < 2) continue;
        std::size_t split_var = 0;
        while (g[split_var] == 0) ++split_var;
        Exponents m1(g.size(), 0);
        m1[split_var] = g[split_var];
        Exponents m2 = g;
        m2[split_var] = 0;
        std::vector<Exponents> with_m1 = M.generators();
        with_m1.push_back(std::move(m1));
        std::vector<Exponents> with_m2 = M.generators();
        with_m2.push_back(std::move(m2));
        decompose_rec(MonomialIdeal(M.ring(), std::move(with_m1)), leaves);
        decompose_rec(MonomialIdeal(M.ring(), std::move(with_m2)), leaves);
        return;
    }
    throw RingError("non-primary monomial ideal without a mixed generator");
}

}  // namespace

std::vector<MonomialIdeal> mono_primary_decomposition(const MonomialIdeal& M) {
    std::vector<MonomialIdeal> leaves;
    decompose_rec(M, leaves);

    // merge components sharing a radical (intersection of P-primary ideals
    // is P-primary)
    std::map<std::vector<int>, MonomialIdeal> by_radical;
    for (const auto& leaf : leaves) {
        std::vector<int> rad = mono_radical_support(leaf);
        auto it = by_radical.find(rad);
        if (it == by_radical.end())
            by_radical.emplace(std::move(rad), leaf);
        else
            it->second = mono_intersection(it->second, leaf);
    }
    std::vector<MonomialIdeal> comps;
    for (auto& [rad, ideal] : by_radical) comps.push_back(std::move(ideal));

    // drop any component containing the intersection of the others
    auto sort_components = [](std::vector<MonomialIdeal>& cs) {
        std::sort(cs.begin(), cs.end(), [](const MonomialIdeal& a, const MonomialIdeal& b) {
            if (a.generators().size() != b.generators().size())
                return a.generators().size() < b.generators().size();
            return a.to_text() < b.to_text();
        });
    };
    sort_components(comps);
    bool dropped = true;
    while (dropped && comps.size() > 1) {
        dropped = false;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            std::optional<MonomialIdeal> inter;
            for (std::size_t j = 0; j < comps.size(); ++j) {
                if (j == i) continue;
                inter = inter ? mono_intersection(*inter, comps[j]) : comps[j];
            }
            if (inter && comps[i].contains(*inter)) {
                comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
                dropped = true;
                break;
            }
        }
    }
    sort_components(comps);
    return comps;
}

}  // namespace idealkit
