#include "rootposet/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include <boost/functional/hash.hpp>

namespace rootposet {

namespace {

// Gram matrix of the simple roots before normalisation. Long roots have
// squared length 2 in every family below.
RationalMatrix simple_gram(const RootSystemId& id) {
    const auto n = static_cast<std::size_t>(id.rank);
    RationalMatrix g(n, RationalVector(n, Rational(0)));
    auto bond = [&](std::size_t i, std::size_t j, Rational v) {
        g[i][j] = v;
        g[j][i] = v;
    };
    switch (id.family) {
    case Family::A:
        for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
        for (std::size_t i = 0; i + 1 < n; ++i) bond(i, i + 1, -1);
        break;
    case Family::B:
        for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
        g[n - 1][n - 1] = 1;
        for (std::size_t i = 0; i + 1 < n; ++i) bond(i, i + 1, -1);
        break;
    case Family::C:
        for (std::size_t i = 0; i < n; ++i) g[i][i] = 1;
        g[n - 1][n - 1] = 2;
        for (std::size_t i = 0; i + 2 < n; ++i) bond(i, i + 1, Rational(-1, 2));
        bond(n - 2, n - 1, -1);
        break;
    case Family::D:
        for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
        for (std::size_t i = 0; i + 2 < n; ++i) bond(i, i + 1, -1);
        bond(n - 3, n - 1, -1);
        break;
    case Family::E: {
        for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
        // chain 1..n-1, node n attached to node n-3 (1-based)
        for (std::size_t i = 0; i + 2 < n; ++i) bond(i, i + 1, -1);
        bond(n - 4, n - 1, -1);
        break;
    }
    case Family::F:
        g[0][0] = 1;
        g[1][1] = 1;
        g[2][2] = 2;
        g[3][3] = 2;
        bond(0, 1, Rational(-1, 2));
        bond(1, 2, -1);
        bond(2, 3, -1);
        break;
    case Family::G:
        g[0][0] = Rational(2, 3);
        g[1][1] = 2;
        bond(0, 1, -1);
        break;
    }
    return g;
}

}  // namespace

std::string RootSystemId::name() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

void RootSystemId::validate() const {
    const std::string n = name();
    switch (family) {
    case Family::A:
        if (rank < 1) throw RootSystemError(n + ": type A requires rank >= 1");
        break;
    case Family::B:
        if (rank < 2) throw RootSystemError(n + ": type B requires rank >= 2");
        break;
    case Family::C:
        if (rank < 2) throw RootSystemError(n + ": type C requires rank >= 2");
        break;
    case Family::D:
        if (rank < 3) throw RootSystemError(n + ": type D requires rank >= 3");
        break;
    case Family::E:
        if (rank < 6 || rank > 8) throw RootSystemError(n + ": type E requires rank 6, 7 or 8");
        break;
    case Family::F:
        if (rank != 4) throw RootSystemError(n + ": type F requires rank 4");
        break;
    case Family::G:
        if (rank != 2) throw RootSystemError(n + ": type G requires rank 2");
        break;
    default:
        throw RootSystemError("unknown family");
    }
    if (rank > 16) throw RootSystemError(n + ": rank above 16 is not supported");
}

RootSystemId RootSystemId::parse(std::string_view text) {
    if (text.size() < 2) throw RootSystemError("cannot parse root system '" + std::string(text) + "'");
    const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (std::string_view("ABCDEFG").find(f) == std::string_view::npos)
        throw RootSystemError("unknown family '" + std::string(1, text[0]) + "'");
    int rank = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), rank);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw RootSystemError("cannot parse rank in '" + std::string(text) + "'");
    RootSystemId id{static_cast<Family>(f), rank};
    id.validate();
    return id;
}

Root Root::simple(std::size_t rank, std::size_t i) {
    Root r = zero(rank);
    r.coeffs[i] = 1;
    return r;
}

int Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

bool Root::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

bool Root::is_positive() const {
    return !is_zero() && std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; });
}

bool Root::is_negative() const {
    return !is_zero() && std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c <= 0; });
}

Root Root::operator+(const Root& o) const {
    Root r = *this;
    for (std::size_t i = 0; i < r.size(); ++i) r.coeffs[i] += o.coeffs[i];
    return r;
}

Root Root::operator-(const Root& o) const {
    Root r = *this;
    for (std::size_t i = 0; i < r.size(); ++i) r.coeffs[i] -= o.coeffs[i];
    return r;
}

Root Root::operator-() const {
    Root r = *this;
    for (auto& c : r.coeffs) c = -c;
    return r;
}

Root Root::operator*(int k) const {
    Root r = *this;
    for (auto& c : r.coeffs) c *= k;
    return r;
}

std::string to_string(const Root& r) {
    const bool compact = std::all_of(r.coeffs.begin(), r.coeffs.end(), [](int c) { return c >= 0 && c <= 9; });
    std::string s = "[";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!compact && i > 0) s += ",";
        s += std::to_string(r.coeffs[i]);
    }
    return s + "]";
}

Root parse_root(std::string_view text, std::size_t rank) {
    auto fail = [&] { return RootSystemError("cannot parse root '" + std::string(text) + "'"); };
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') throw fail();
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<int> coeffs;
    if (body.find(',') == std::string_view::npos && body.find('-') == std::string_view::npos) {
        for (char ch : body) {
            if (ch == ' ') continue;
            if (!std::isdigit(static_cast<unsigned char>(ch))) throw fail();
            coeffs.push_back(ch - '0');
        }
    } else {
        std::size_t pos = 0;
        while (pos <= body.size()) {
            std::size_t next = body.find(',', pos);
            if (next == std::string_view::npos) next = body.size();
            std::string_view item = body.substr(pos, next - pos);
            while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
            int v = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
            if (ec != std::errc()) throw fail();
            coeffs.push_back(v);
            pos = next + 1;
        }
    }
    if (coeffs.size() != rank) throw fail();
    return Root(std::move(coeffs));
}

std::size_t RootHash::operator()(const Root& r) const noexcept {
    return boost::hash_range(r.coeffs.begin(), r.coeffs.end());
}

RootSystem RootSystem::build(const RootSystemId& id) {
    id.validate();
    RootSystem rs;
    rs.id_ = id;
    const auto n = static_cast<std::size_t>(id.rank);
    rs.rank_ = n;
    rs.form_ = simple_gram(id);

    rs.cartan_.assign(n, std::vector<int>(n, 0));
    rs.coroot_factor_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Rational f = Rational(2) / rs.form_[i][i];
        if (f.denominator() != 1) throw std::logic_error("non-integral coroot factor");
        rs.coroot_factor_[i] = static_cast<int>(f.numerator());
        for (std::size_t j = 0; j < n; ++j) {
            const Rational c = Rational(2) * rs.form_[i][j] / rs.form_[j][j];
            if (c.denominator() != 1) throw std::logic_error("non-integral Cartan entry");
            rs.cartan_[i][j] = static_cast<int>(c.numerator());
        }
        if (rs.form_[i][i] != rs.form_[0][0]) rs.simply_laced_ = false;
    }

    // Closure under the root-string rule, one height layer at a time.
    std::unordered_map<Root, std::size_t, RootHash> found;
    std::vector<Root> roots;
    std::vector<Root> layer;
    for (std::size_t i = 0; i < n; ++i) layer.push_back(Root::simple(n, i));
    while (!layer.empty()) {
        for (const auto& r : layer) {
            found.emplace(r, roots.size());
            roots.push_back(r);
        }
        std::vector<Root> next;
        for (const auto& beta : layer) {
            for (std::size_t i = 0; i < n; ++i) {
                int p = 0;
                Root down = beta - Root::simple(n, i);
                while (found.count(down)) {
                    ++p;
                    down = down - Root::simple(n, i);
                }
                const int q = p - rs.pair_coroot(beta, i);
                if (q <= 0) continue;
                Root up = beta + Root::simple(n, i);
                if (!found.count(up) && std::find(next.begin(), next.end(), up) == next.end())
                    next.push_back(up);
            }
        }
        layer = std::move(next);
    }
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        const int ha = a.height(), hb = b.height();
        if (ha != hb) return ha < hb;
        return a.coeffs < b.coeffs;
    });
    rs.positive_ = roots;
    const std::size_t npos = roots.size();

    rs.all_ = roots;
    for (const auto& r : roots) rs.all_.push_back(-r);
    for (std::size_t k = 0; k < rs.all_.size(); ++k) rs.lookup_.emplace(rs.all_[k], k);
    const std::size_t nall = rs.all_.size();
    rs.sum_table_.assign(nall * nall, -1);
    for (std::size_t a = 0; a < nall; ++a)
        for (std::size_t b = 0; b < nall; ++b) {
            auto it = rs.lookup_.find(rs.all_[a] + rs.all_[b]);
            if (it != rs.lookup_.end()) rs.sum_table_[a * nall + b] = static_cast<int>(it->second);
        }
    rs.simple_idx_.resize(n);
    for (std::size_t i = 0; i < n; ++i) rs.simple_idx_[i] = *rs.positive_index(Root::simple(n, i));

    // Normalise so that the (unique maximal) highest root has (theta, theta) = 2.
    const Root& theta = rs.positive_.back();
    const Rational t2 = rs.norm2(theta);
    if (t2 != Rational(2)) throw std::logic_error("unexpected normalisation of theta");
    for (std::size_t i = 0; i < n; ++i)
        if (rs.pair_coroot(theta, i) < 0) throw std::logic_error("highest root is not dominant");

    rs.theta_short_ = theta;
    if (!rs.simply_laced_) {
        for (auto it = rs.positive_.rbegin(); it != rs.positive_.rend(); ++it) {
            if (rs.is_long(*it)) continue;
            bool dominant = true;
            for (std::size_t i = 0; i < n; ++i) dominant = dominant && rs.pair_coroot(*it, i) >= 0;
            if (dominant) {
                rs.theta_short_ = *it;
                break;
            }
        }
    }

    rs.coxeter_ = static_cast<int>(2 * npos / n);
    int dual = 1;
    for (std::size_t i = 0; i < n; ++i) {
        // coefficient of alpha_i^vee in theta^vee = theta
        const Rational c = Rational(theta[i]) / rs.coroot_factor_[i];
        if (c.denominator() != 1) throw std::logic_error("theta is not in the coroot lattice");
        dual += static_cast<int>(c.numerator());
    }
    rs.dual_coxeter_ = dual;

    // Exponents are the dual partition of the height distribution.
    std::vector<int> per_height(static_cast<std::size_t>(rs.coxeter_) + 1, 0);
    for (const auto& r : rs.positive_) ++per_height[static_cast<std::size_t>(r.height())];
    for (std::size_t k = 1; k + 1 < per_height.size(); ++k)
        for (int m = 0; m < per_height[k] - per_height[k + 1]; ++m) rs.exponents_.push_back(static_cast<int>(k));
    for (int m = 0; m < per_height.back(); ++m) rs.exponents_.push_back(rs.coxeter_);
    std::sort(rs.exponents_.begin(), rs.exponents_.end());

    rs.extended_cartan_.assign(n + 1, std::vector<int>(n + 1, 0));
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) {
            const Rational c = Rational(2) * rs.extended_inner(i, j) / rs.extended_inner(j, j);
            rs.extended_cartan_[i][j] = static_cast<int>(c.numerator());
        }
    return rs;
}

std::optional<std::size_t> RootSystem::index_of(const Root& r) const {
    auto it = lookup_.find(r);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> RootSystem::positive_index(const Root& r) const {
    auto idx = index_of(r);
    if (!idx || *idx >= positive_.size()) return std::nullopt;
    return idx;
}

Rational RootSystem::inner(const Root& x, const Root& y) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < rank_; ++j)
            if (y[j] != 0) s += form_[i][j] * (x[i] * y[j]);
    }
    return s;
}

Rational RootSystem::inner(const RationalVector& x, const RationalVector& y) const {
    return bilinear(form_, x, y);
}

int RootSystem::pair_coroot(const Root& x, std::size_t i) const {
    int s = 0;
    for (std::size_t k = 0; k < rank_; ++k) s += x[k] * cartan_[k][i];
    return s;
}

Rational RootSystem::extended_inner(std::size_t i, std::size_t j) const {
    // alpha_0 = delta - theta and delta is isotropic and orthogonal to everything.
    auto as_root = [&](std::size_t k) { return k == 0 ? -theta() : Root::simple(rank_, k - 1); };
    return inner(as_root(i), as_root(j));
}

bool RootSystem::extended_adjacent(std::size_t i, std::size_t j) const {
    return i != j && extended_inner(i, j) != Rational(0);
}

bool RootSystem::dynkin_adjacent(std::size_t i, std::size_t j) const {
    return i != j && form_[i][j] != Rational(0);
}

Root RootSystem::reflect(const Root& x, std::size_t i) const {
    Root r = x;
    r.coeffs[i] -= pair_coroot(x, i);
    return r;
}

bool RootSystem::leq(const Root& beta, const Root& gamma) const {
    for (std::size_t i = 0; i < rank_; ++i)
        if (gamma[i] - beta[i] < 0) return false;
    return true;
}

Root RootSystem::half_floor(const Root& gamma) const {
    Root r = gamma;
    for (auto& c : r.coeffs) c = c >= 0 ? c / 2 : -((-c + 1) / 2);
    return r;
}

RationalVector RootSystem::rho() const {
    RationalVector r(rank_, Rational(0));
    for (const auto& root : positive_)
        for (std::size_t i = 0; i < rank_; ++i) r[i] += Rational(root[i], 2);
    return r;
}

std::vector<RootSystemId> systems_up_to(int max_rank) {
    std::vector<RootSystemId> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({Family::C, n});
    for (int n = 3; n <= max_rank; ++n) out.push_back({Family::D, n});
    for (int n = 6; n <= std::min(max_rank, 8); ++n) out.push_back({Family::E, n});
    if (max_rank >= 4) out.push_back({Family::F, 4});
    if (max_rank >= 2) out.push_back({Family::G, 2});
    return out;
}

}  // namespace rootposet
