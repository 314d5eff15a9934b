#include "rootposet/tables.hpp"

#include <algorithm>
#include <string_view>

#include "rootposet/errors.hpp"

namespace rootposet {

namespace detail {
extern const std::string_view fixtures_json;
}

const nlohmann::json& fixtures() {
    static const nlohmann::json data = nlohmann::json::parse(detail::fixtures_json);
    return data;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::int64_t ad_product_formula(const RootSystem& rs) {
    Rational p(1);
    const int h = rs.coxeter_number();
    for (int e : rs.exponents()) p *= Rational(h + e + 1, e + 1);
    if (p.denominator() != 1) throw ConsistencyError("product formula is not an integer");
    return p.numerator();
}

namespace {

const nlohmann::json* lookup(const char* table, const std::string& key) {
    const auto& t = fixtures().at(table);
    const auto it = t.find(key);
    return it == t.end() ? nullptr : &*it;
}

IntPolynomial polynomial_from(const nlohmann::json& j) { return IntPolynomial(j.get<std::vector<std::int64_t>>()); }

}  // namespace

std::int64_t ad_table_count(const RootSystem& rs) {
    const std::int64_t n = static_cast<std::int64_t>(rs.rank());
    switch (rs.id().family) {
        case Family::A: return binomial(2 * n + 2, n + 1) / (n + 2);
        case Family::B:
        case Family::C: return binomial(2 * n, n);
        case Family::D: return binomial(2 * n, n) - binomial(2 * n - 2, n - 1);
        default: break;
    }
    const auto* v = lookup("ad_counts", rs.name());
    if (!v) throw UnsupportedInput("no tabulated count for " + rs.name());
    return v->get<std::int64_t>();
}

IntPolynomial delta_covering_table(const RootSystem& rs) {
    const std::int64_t n = static_cast<std::int64_t>(rs.rank());
    switch (rs.id().family) {
        case Family::A: return IntPolynomial({n, 0, binomial(n, 2)});
        case Family::B:
        case Family::C: return IntPolynomial({n, n - 1, (n - 1) * (n - 1)});
        case Family::D: return IntPolynomial({n, n - 3, binomial(n, 2) + binomial(n - 3, 2), n - 3});
        default: break;
    }
    const auto* v = lookup("delta_covering", rs.name());
    if (!v) throw UnsupportedInput("no tabulated polynomial for " + rs.name());
    return polynomial_from(*v);
}

IntPolynomial ab_covering_table(const RootSystem& rs) {
    const std::int64_t n = static_cast<std::int64_t>(rs.rank());
    std::vector<std::int64_t> c;
    switch (rs.id().family) {
        case Family::A:
        case Family::B:
        case Family::C:
            for (std::int64_t k = 0; 2 * k <= n + 1; ++k) c.push_back(binomial(n + 1, 2 * k));
            return IntPolynomial(c);
        case Family::D:
            for (std::int64_t k = 0; 2 * k <= n + 2; ++k)
                c.push_back(binomial(n + 2, 2 * k) - 4 * binomial(n - 1, 2 * k - 2));
            return IntPolynomial(c);
        default: break;
    }
    const auto* v = lookup("ab_covering", rs.name());
    if (!v) throw UnsupportedInput("no tabulated polynomial for " + rs.name());
    return polynomial_from(*v);
}

std::optional<long> commutative_count_table(const RootSystem& rs) {
    const auto* v = lookup("commutative_counts", rs.name());
    if (!v) return std::nullopt;
    return v->get<long>();
}

std::optional<std::vector<ClassEntry>> tabulated_classes(const RootSystem& rs) {
    const auto* v = lookup("classes", rs.name());
    if (!v) return std::nullopt;
    std::vector<ClassEntry> out;
    for (const auto& [klass, roots] : v->items())
        for (const auto& text : roots)
            out.push_back({parse_root("[" + text.get<std::string>() + "]", rs.rank()),
                           static_cast<std::size_t>(std::stoul(klass))});
    return out;
}

namespace {

// eps-coordinates (1-based, padded with eps_{n+1} = 0) to simple-root coordinates
Root eps_to_root(const RootSystem& rs, const std::vector<int>& v) {
    const std::size_t n = rs.rank();
    Root x = Root::zero(n);
    int prefix = 0;
    for (std::size_t k = 0; k < n; ++k) {
        prefix += v[k + 1];
        x[k] = prefix;
    }
    switch (rs.id().family) {
        case Family::C:
            if (prefix % 2 != 0) throw ConsistencyError("not in the root lattice of C_n");
            x[n - 1] = prefix / 2;
            break;
        case Family::D: {
            const int s = prefix - v[n];  // eps_1 + ... + eps_{n-1} coefficient sum
            if ((s + v[n]) % 2 != 0) throw ConsistencyError("not in the root lattice of D_n");
            x[n - 1] = (s + v[n]) / 2;
            x[n - 2] = (s - v[n]) / 2;
            break;
        }
        default: break;
    }
    if (!rs.positive_index(x)) throw ConsistencyError("eps-vector is not a positive root");
    return x;
}

std::vector<int> eps(std::size_t n, int i, int si, int j, int sj) {
    std::vector<int> v(n + 2, 0);
    v[static_cast<std::size_t>(i)] += si;
    v[static_cast<std::size_t>(j)] += sj;
    return v;
}

}  // namespace

std::vector<ClassEntry> classical_classes(const RootSystem& rs) {
    const int n = static_cast<int>(rs.rank());
    const auto un = rs.rank();
    std::vector<ClassEntry> out;
    auto add = [&](const std::vector<int>& v, int klass) {
        out.push_back({eps_to_root(rs, v), static_cast<std::size_t>(klass)});
    };
    // eps_i + eps_j with j - i = 1 is alpha_0 for even j and alpha_1 for odd j
    auto plus_rule = [](int i, int j) { return j - i >= 2 ? j - i : (j % 2 == 0 ? 0 : 1); };
    switch (rs.id().family) {
        case Family::A:
            for (int i = 1; i <= n + 1; ++i)
                for (int j = i + 1; j <= n + 1; ++j) add(eps(un, i, 1, j, -1), (i + j - 1) % (n + 1));
            break;
        case Family::C:
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j) add(eps(un, i, 1, j, 1), j - i);
            break;
        case Family::B:
            add(eps(un, 1, 1, 2, -1), 0);
            for (int j = 3; j <= n + 1; ++j) add(eps(un, 1, 1, j, -1), j - 1);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) add(eps(un, i, 1, j, 1), plus_rule(i, j));
            break;
        case Family::D:
            add(eps(un, 1, 1, 2, -1), 0);
            for (int j = 3; j <= n - 1; ++j) add(eps(un, 1, 1, j, -1), j - 1);
            // eps_1 - eps_n and eps_1 + eps_n sit at the two ends of the fork
            for (int i = 1; i <= n - 2; ++i) add(eps(un, i, 1, n, -1), i == 1 ? n : n - i);
            add(eps(un, n - 1, 1, n, -1), plus_rule(n - 1, n));
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) add(eps(un, i, 1, j, 1), plus_rule(i, j));
            break;
        default: throw UnsupportedInput(rs.name() + " is not classical");
    }
    return out;
}

bool binomial_convolution_holds(int a, int b, int c) {
    std::int64_t sum = 0;
    for (int x = c; x <= a - b; ++x) sum += binomial(x, c) * binomial(a - x, b);
    return sum == binomial(a + 1, b + c + 1);
}

}  // namespace rootposet
