#include "rootposet/weights.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "rootposet/errors.hpp"

namespace rootposet {

Weight Weight::fundamental(std::size_t rank, std::size_t i) {
    std::vector<int> c(rank, 0);
    c.at(i) = 1;
    return Weight(std::move(c));
}

bool Weight::is_dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

bool Weight::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

std::string to_string(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

Weight root_to_weight(const RootSystem& rs, const Root& x) {
    const std::size_t n = rs.rank();
    std::vector<int> labels(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) labels[j] += x[i] * rs.cartan_matrix()[i][j];
    return Weight(std::move(labels));
}

Weight subtract_simple(const RootSystem& rs, const Weight& mu, std::size_t i) {
    Weight out = mu;
    for (std::size_t j = 0; j < rs.rank(); ++j) out.coords[j] -= rs.cartan_matrix()[i][j];
    return out;
}

namespace {

Weight add_root(const RootSystem& rs, const Weight& mu, const Root& x, int times) {
    Weight out = mu;
    const Weight shift = root_to_weight(rs, x);
    for (std::size_t j = 0; j < rs.rank(); ++j) out.coords[j] += times * shift[j];
    return out;
}

// (mu, x) for a weight mu and a root-lattice vector x: (varpi_i, alpha_i) = |alpha_i|^2 / 2.
Rational pairing(const RootSystem& rs, const Weight& mu, const Root& x) {
    Rational s(0);
    for (std::size_t i = 0; i < rs.rank(); ++i)
        if (x[i] != 0) s += Rational(mu[i] * x[i], rs.coroot_factors()[i]);
    return s;
}

int coroot_pairing(const RootSystem& rs, const Weight& mu, const Root& alpha) {
    const Rational v = Rational(2) * pairing(rs, mu, alpha) / rs.norm2(alpha);
    if (v.denominator() != 1) throw ConsistencyError("non-integral coroot pairing");
    return static_cast<int>(v.numerator());
}

}  // namespace

Weight dominant_representative(const RootSystem& rs, Weight mu) {
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            const int c = mu[i];
            if (c >= 0) continue;
            for (std::size_t j = 0; j < rs.rank(); ++j) mu.coords[j] -= c * rs.cartan_matrix()[i][j];
            changed = true;
        }
    }
    return mu;
}

WeightSystem WeightSystem::build(const RootSystem& rs, const Weight& lambda) {
    const std::size_t n = rs.rank();
    if (lambda.size() != n) throw UnsupportedInput("weight has the wrong number of coordinates");
    if (!lambda.is_dominant()) throw UnsupportedInput("highest weight " + to_string(lambda) + " is not dominant");

    // dominant weights below lambda: closure under mu -> dom(mu - k alpha), 0 < k <= <mu, alpha^vee>
    std::set<Weight> dominant{lambda};
    std::deque<Weight> queue{lambda};
    while (!queue.empty()) {
        const Weight mu = queue.front();
        queue.pop_front();
        for (const auto& alpha : rs.positive_roots()) {
            const int top = coroot_pairing(rs, mu, alpha);
            for (int k = 1; k <= top; ++k) {
                auto nu = dominant_representative(rs, add_root(rs, mu, alpha, -k));
                if (dominant.insert(nu).second) queue.push_back(std::move(nu));
            }
        }
    }

    // depth of lambda - mu, in root coordinates
    RationalMatrix ct(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ct[j][i] = rs.cartan_matrix()[i][j];
    std::vector<std::pair<Root, Weight>> ordered;
    for (const auto& mu : dominant) {
        RationalVector diff(n);
        for (std::size_t j = 0; j < n; ++j) diff[j] = lambda[j] - mu[j];
        const auto y = solve_linear(ct, diff);
        if (!y || !is_integral(*y)) throw ConsistencyError("weight not congruent to the highest weight");
        ordered.emplace_back(Root(to_integers(*y)), mu);
    }
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        return std::pair(a.first.height(), a.second) < std::pair(b.first.height(), b.second);
    });

    std::map<Weight, long> dom_mult;
    auto mult = [&](const Weight& mu) -> long {
        const auto it = dom_mult.find(dominant_representative(rs, mu));
        return it == dom_mult.end() ? 0 : it->second;
    };
    for (const auto& [depth, mu] : ordered) {
        if (mu == lambda) {
            dom_mult[mu] = 1;
            continue;
        }
        // ((lambda+rho)^2 - (mu+rho)^2) = (lambda - mu, lambda + mu + 2 rho)
        Weight sum = lambda;
        for (std::size_t j = 0; j < n; ++j) sum.coords[j] += mu[j] + 2;
        const Rational lhs = pairing(rs, sum, depth);
        if (lhs == Rational(0)) throw ConsistencyError("vanishing Freudenthal denominator at " + to_string(mu));
        Rational rhs(0);
        for (const auto& alpha : rs.positive_roots())
            for (int k = 1;; ++k) {
                const Weight up = add_root(rs, mu, alpha, k);
                const long m = mult(up);
                if (m == 0) break;
                rhs += Rational(m) * pairing(rs, up, alpha);
            }
        const Rational m = Rational(2) * rhs / lhs;
        if (m.denominator() != 1 || m <= Rational(0))
            throw ConsistencyError("Freudenthal recursion gave " + to_string(m) + " at " + to_string(mu));
        dom_mult[mu] = m.numerator();
    }

    WeightSystem ws;
    ws.rs_ = &rs;
    ws.highest_ = lambda;
    for (const auto& [mu, m] : dom_mult) {
        std::deque<Weight> orbit{mu};
        ws.entries_.emplace(mu, m);
        while (!orbit.empty()) {
            const Weight nu = orbit.front();
            orbit.pop_front();
            for (std::size_t i = 0; i < n; ++i) {
                if (nu[i] == 0) continue;
                Weight next = nu;
                for (std::size_t j = 0; j < n; ++j) next.coords[j] -= nu[i] * rs.cartan_matrix()[i][j];
                if (ws.entries_.emplace(next, m).second) orbit.push_back(std::move(next));
            }
        }
    }
    return ws;
}

long WeightSystem::multiplicity(const Weight& mu) const {
    const auto it = entries_.find(mu);
    return it == entries_.end() ? 0 : it->second;
}

long WeightSystem::dimension() const {
    long d = 0;
    for (const auto& [mu, m] : entries_) d += m;
    return d;
}

bool WeightSystem::multiplicity_free() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second == 1; });
}

long weyl_dimension(const RootSystem& rs, const Weight& lambda) {
    Weight shifted = lambda;
    for (auto& c : shifted.coords) c += 1;
    const Weight rho(std::vector<int>(rs.rank(), 1));
    Rational d(1);
    for (const auto& alpha : rs.positive_roots()) d *= pairing(rs, shifted, alpha) / pairing(rs, rho, alpha);
    if (d.denominator() != 1) throw ConsistencyError("Weyl dimension is not an integer");
    return d.numerator();
}

std::vector<WeightEdge> weight_diagram_edges(const WeightSystem& ws) {
    const RootSystem& rs = ws.root_system();
    std::map<Weight, std::size_t> position;
    for (const auto& [mu, m] : ws.entries()) position.emplace(mu, position.size());
    std::vector<WeightEdge> edges;
    for (const auto& [nu, m] : ws.entries())
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            const auto lower = position.find(subtract_simple(rs, nu, i));
            if (lower == position.end()) continue;
            edges.push_back({position.at(nu), lower->second, i + 1, std::min(m, ws.multiplicity(lower->first))});
        }
    return edges;
}

TypeCounts weighted_type_counts(const std::vector<WeightEdge>& edges, std::size_t rank) {
    TypeCounts counts(rank + 1, 0);
    for (const auto& e : edges) counts.at(e.type) += e.multiplicity;
    return counts;
}

long sl2_restriction_count(const WeightSystem& ws, std::size_t i) {
    const RootSystem& rs = ws.root_system();
    if (i < 1 || i > rs.rank()) throw std::out_of_range("simple root index out of range");
    const Root alpha = Root::simple(rs.rank(), i - 1);
    long total = 0;
    for (const auto& [top, m] : ws.entries()) {
        if (ws.multiplicity(add_root(rs, top, alpha, 1)) != 0) continue;
        const int k = top[i - 1];
        if (k < 0) throw ConsistencyError("alpha-string starts at " + to_string(top));
        std::vector<long> mults;
        for (int p = 0; p <= k; ++p) mults.push_back(ws.multiplicity(add_root(rs, top, alpha, -p)));
        for (int p = 0; p <= k; ++p)
            if (mults[static_cast<std::size_t>(p)] != mults[static_cast<std::size_t>(k - p)] ||
                mults[static_cast<std::size_t>(p)] == 0)
                throw ConsistencyError("alpha-string through " + to_string(top) + " is not symmetric");
        // p-th component has dimension k - 2p + 1
        long previous = 0;
        for (int p = 0; 2 * p <= k; ++p) {
            const long here = mults[static_cast<std::size_t>(p)];
            if (here < previous) throw ConsistencyError("alpha-string is not unimodal");
            total += (here - previous) * (k - 2 * p);
            previous = here;
        }
    }
    return total;
}

std::vector<CorpusEntry> weight_corpus(const RootSystem& rs) {
    const std::size_t n = rs.rank();
    std::vector<CorpusEntry> corpus;
    auto add = [&](std::string label, Weight w) {
        for (const auto& e : corpus)
            if (e.lambda == w) return;
        corpus.push_back({std::move(label), std::move(w)});
    };
    add("theta", root_to_weight(rs, rs.theta()));
    if (!rs.simply_laced()) add("theta_s", root_to_weight(rs, rs.theta_short()));
    if (rs.id().family == Family::B) add("spin", Weight::fundamental(n, n - 1));
    if (rs.id().family == Family::E && n == 6) add("varpi_1", Weight::fundamental(n, 0));
    if (n <= 4)
        for (std::size_t i = 0; i < n; ++i) add("varpi_" + std::to_string(i + 1), Weight::fundamental(n, i));
    return corpus;
}

}  // namespace rootposet
