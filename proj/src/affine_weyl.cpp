#include "rootposet/affine_weyl.hpp"

#include <algorithm>
#include <set>

#include "rootposet/errors.hpp"

namespace rootposet {

AffineRoot affine_simple_root(const RootSystem& rs, std::size_t i) {
    if (i > rs.rank()) throw std::out_of_range("affine simple root index out of range");
    if (i == 0) return {-rs.theta(), 1};
    return {Root::simple(rs.rank(), i - 1), 0};
}

int affine_simple_index(const RootSystem& rs, const AffineRoot& r) {
    if (r.level == 1 && r.finite == -rs.theta()) return 0;
    if (r.level != 0) return -1;
    for (std::size_t i = 0; i < rs.rank(); ++i)
        if (r.finite == Root::simple(rs.rank(), i)) return static_cast<int>(i + 1);
    return -1;
}

std::string to_string(const AffineRoot& r) {
    std::string s = to_string(r.finite);
    if (r.level != 0) s += (r.level > 0 ? "+" : "") + std::to_string(r.level) + "δ";
    return s;
}

AffineWeylGroup::AffineWeylGroup(const RootSystem& rs) : rs_(&rs) {
    const std::size_t n = rs.rank();
    theta_coroot_ = root_to_coroot(rs.theta().coeffs);
    theta_pairing_.resize(n);
    // (alpha_k, theta) = <alpha_k, theta^vee> because theta is long
    for (std::size_t k = 0; k < n; ++k) {
        int s = 0;
        for (std::size_t j = 0; j < n; ++j) s += rs.cartan_matrix()[k][j] * theta_coroot_[j];
        theta_pairing_[k] = s;
    }

    const auto binv = rootposet::inverse(rs.bilinear_form());
    if (!binv) throw ConsistencyError("degenerate bilinear form");
    alcove_.push_back(RationalVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = (*binv)[k][i] / Rational(rs.highest_coeffs()[i]);
        alcove_.push_back(std::move(v));
    }
}

std::vector<int> AffineWeylGroup::coroot_to_root(const std::vector<int>& lambda) const {
    std::vector<int> x(lambda.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = lambda[i] * rs_->coroot_factors()[i];
    return x;
}

std::vector<int> AffineWeylGroup::root_to_coroot(const std::vector<int>& x) const {
    std::vector<int> lambda(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const int f = rs_->coroot_factors()[i];
        if (x[i] % f != 0) throw ConsistencyError("vector is not in the coroot lattice");
        lambda[i] = x[i] / f;
    }
    return lambda;
}

std::vector<int> AffineWeylGroup::apply(const IntMatrix& m, const std::vector<int>& x) const {
    std::vector<int> y(x.size(), 0);
    for (std::size_t i = 0; i < y.size(); ++i)
        for (std::size_t k = 0; k < x.size(); ++k) y[i] += m[i][k] * x[k];
    return y;
}

int AffineWeylGroup::pair_with_coroot_vector(const std::vector<int>& x, const std::vector<int>& lambda) const {
    const auto& c = rs_->cartan_matrix();
    int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < lambda.size(); ++j) s += x[i] * c[i][j] * lambda[j];
    }
    return s;
}

AffineWeylElement AffineWeylGroup::identity() const {
    const std::size_t n = rank();
    IntMatrix m(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return {std::move(m), std::vector<int>(n, 0)};
}

AffineWeylElement AffineWeylGroup::generator(std::size_t i) const { return left_multiply(i, identity()); }

AffineWeylElement AffineWeylGroup::left_multiply(std::size_t i, const AffineWeylElement& w) const {
    const std::size_t n = rank();
    if (i > n) throw std::out_of_range("generator index out of range");
    IntMatrix m = w.finite_part();
    std::vector<int> a = w.translation();
    const auto& c = rs_->cartan_matrix();
    if (i >= 1) {
        const std::size_t r = i - 1;
        // s_r changes only coordinate r, in both bases
        for (std::size_t col = 0; col < n; ++col) {
            int s = 0;
            for (std::size_t k = 0; k < n; ++k) s += c[k][r] * w.finite_part()[k][col];
            m[r][col] -= s;
        }
        int s = 0;
        for (std::size_t j = 0; j < n; ++j) s += c[r][j] * a[j];
        a[r] -= s;
        return {std::move(m), std::move(a)};
    }
    // s_0 t_a u = t_{theta^vee + s_theta(a)} s_theta u
    const auto& theta = rs_->highest_coeffs();
    for (std::size_t col = 0; col < n; ++col) {
        int s = 0;
        for (std::size_t k = 0; k < n; ++k) s += w.finite_part()[k][col] * theta_pairing_[k];
        for (std::size_t k = 0; k < n; ++k) m[k][col] -= s * theta[k];
    }
    const int pa = pair_with_coroot_vector(theta, a);
    for (std::size_t j = 0; j < n; ++j) a[j] += theta_coroot_[j] * (1 - pa);
    return {std::move(m), std::move(a)};
}

AffineWeylElement AffineWeylGroup::compose(const AffineWeylElement& a, const AffineWeylElement& b) const {
    const std::size_t n = rank();
    IntMatrix m(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a.finite_part()[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) m[i][j] += a.finite_part()[i][k] * b.finite_part()[k][j];
        }
    auto t = root_to_coroot(apply(a.finite_part(), coroot_to_root(b.translation())));
    for (std::size_t j = 0; j < n; ++j) t[j] += a.translation()[j];
    return {std::move(m), std::move(t)};
}

AffineWeylElement AffineWeylGroup::inverse(const AffineWeylElement& w) const {
    const std::size_t n = rank();
    RationalMatrix u(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) u[i][j] = w.finite_part()[i][j];
    const auto uinv = rootposet::inverse(u);
    if (!uinv) throw ConsistencyError("finite part is singular");
    IntMatrix m(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i) m[i] = to_integers((*uinv)[i]);
    auto t = root_to_coroot(apply(m, coroot_to_root(w.translation())));
    for (auto& x : t) x = -x;
    return {std::move(m), std::move(t)};
}

AffineWeylElement AffineWeylGroup::from_word(const ReducedWord& word) const {
    AffineWeylElement w = identity();
    for (auto it = word.rbegin(); it != word.rend(); ++it) w = left_multiply(static_cast<std::size_t>(*it), w);
    return w;
}

AffineRoot AffineWeylGroup::act(const AffineWeylElement& w, const AffineRoot& beta) const {
    Root image(apply(w.finite_part(), beta.finite.coeffs));
    const int shift = pair_with_coroot_vector(image.coeffs, w.translation());
    return {std::move(image), beta.level - shift};
}

AffineRoot AffineWeylGroup::simple_reflect(std::size_t i, const AffineRoot& beta) const {
    if (i >= 1) return {rs_->reflect(beta.finite, i - 1), beta.level};
    // s_0(mu + k delta) = s_theta(mu) + (k + <mu, theta^vee>) delta
    int p = 0;
    for (std::size_t k = 0; k < rank(); ++k) p += beta.finite[k] * theta_pairing_[k];
    return {beta.finite - rs_->theta() * p, beta.level + p};
}

std::vector<AffineRoot> AffineWeylGroup::inversion_set(const AffineWeylElement& w) const {
    std::vector<AffineRoot> out;
    for (std::size_t idx = 0; idx < rs_->num_roots(); ++idx) {
        const Root& mu = rs_->root(idx);
        const Root image(apply(w.finite_part(), mu.coeffs));
        const int c = pair_with_coroot_vector(image.coeffs, w.translation());
        const int kmin = rs_->is_positive_index(idx) ? 0 : 1;
        const int kmax = image.is_negative() ? c : c - 1;
        for (int k = kmin; k <= kmax; ++k) out.push_back({mu, k});
    }
    std::sort(out.begin(), out.end());
    return out;
}

long AffineWeylGroup::length(const AffineWeylElement& w) const {
    long total = 0;
    for (std::size_t idx = 0; idx < rs_->num_roots(); ++idx) {
        const Root image(apply(w.finite_part(), rs_->root(idx).coeffs));
        const int c = pair_with_coroot_vector(image.coeffs, w.translation());
        const int kmin = rs_->is_positive_index(idx) ? 0 : 1;
        const int kmax = image.is_negative() ? c : c - 1;
        if (kmax >= kmin) total += kmax - kmin + 1;
    }
    return total;
}

RationalVector AffineWeylGroup::act_on_V(const AffineWeylElement& w, const RationalVector& x) const {
    const std::size_t n = rank();
    const auto lambda = coroot_to_root(w.translation());
    RationalVector y(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) y[i] += x[k] * w.finite_part()[i][k];
        y[i] += lambda[i];
    }
    return y;
}

Rational AffineWeylGroup::affine_form(const AffineRoot& beta, const RationalVector& x) const {
    return rs_->inner(to_rational(beta.finite.coeffs), x) + Rational(beta.level);
}

ReducedWord AffineWeylGroup::peel(std::size_t size, const std::function<bool(std::size_t, int)>& contains) const {
    const std::size_t n = rank();
    const auto& c = rs_->extended_cartan();
    // img[j] = y(alpha_j), y the product of the letters peeled so far
    std::vector<std::size_t> idx(n + 1);
    std::vector<int> level(n + 1, 0);
    idx[0] = rs_->negate(rs_->theta_index());
    level[0] = 1;
    for (std::size_t j = 1; j <= n; ++j) idx[j] = rs_->simple_index(j - 1);

    ReducedWord peeled;
    peeled.reserve(size);
    for (std::size_t step = 0; step < size; ++step) {
        std::size_t j = 0;
        for (; j <= n; ++j) {
            const bool positive = level[j] > 0 || (level[j] == 0 && rs_->is_positive_index(idx[j]));
            if (positive && contains(idx[j], level[j])) break;
        }
        if (j > n) throw NotAnInversionSet("no affine simple root in the residual set after " +
                                           std::to_string(step) + " steps");
        peeled.push_back(static_cast<int>(j));
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == j || c[i][j] == 0) continue;
            const int times = -c[i][j];
            const Root sum = rs_->root(idx[i]) + rs_->root(idx[j]) * times;
            const auto found = rs_->index_of(sum);
            if (!found) throw ConsistencyError("root string broken while peeling");
            idx[i] = *found;
            level[i] += level[j] * times;
        }
        idx[j] = rs_->negate(idx[j]);
        level[j] = -level[j];
    }
    std::reverse(peeled.begin(), peeled.end());
    return peeled;
}

ReducedWord AffineWeylGroup::word_from_inversion_set(const std::vector<AffineRoot>& set) const {
    std::set<std::pair<std::size_t, int>> members;
    for (const auto& beta : set) {
        if (!beta.is_positive()) throw NotAnInversionSet("set contains a negative affine root");
        const auto i = rs_->index_of(beta.finite);
        if (!i) throw NotAnInversionSet("set contains a non-root");
        members.emplace(*i, beta.level);
    }
    if (members.size() != set.size()) throw NotAnInversionSet("set has repeated elements");
    return peel(members.size(), [&](std::size_t i, int k) { return members.count({i, k}) > 0; });
}

}  // namespace rootposet
