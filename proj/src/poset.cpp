#include "rootposet/poset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rootposet {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::from_exponents(const std::vector<std::size_t>& exponents) {
    std::vector<std::int64_t> c;
    for (auto e : exponents) {
        if (c.size() <= e) c.resize(e + 1, 0);
        ++c[e];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::binomial_power(std::int64_t a, std::int64_t b, unsigned n) {
    IntPolynomial result({1});
    const IntPolynomial factor({a, b});
    for (unsigned k = 0; k < n; ++k) result = result * factor;
    return result;
}

std::int64_t IntPolynomial::eval(std::int64_t q) const {
    std::int64_t v = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * q + *it;
    return v;
}

std::int64_t IntPolynomial::derivative_at_1() const {
    std::int64_t v = 0;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) v += static_cast<std::int64_t>(k) * coeffs_[k];
    return v;
}

bool IntPolynomial::is_palindromic(std::size_t n) const {
    if (degree() > static_cast<int>(n)) return false;
    for (std::size_t j = 0; j <= n; ++j)
        if (coeff(j) != coeff(n - j)) return false;
    return true;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<std::int64_t> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) + o.coeff(k);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<std::int64_t> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(c));
}

namespace {

std::string superscript(std::size_t k) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s;
    for (char ch : std::to_string(k)) s += digits[ch - '0'];
    return s;
}

std::string render(const std::vector<std::int64_t>& coeffs, bool unicode) {
    std::string out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const std::int64_t c = coeffs[k];
        if (c == 0) continue;
        if (!out.empty()) out += c < 0 ? "-" : "+";
        else if (c < 0) out += "-";
        const std::int64_t a = c < 0 ? -c : c;
        if (k == 0 || a != 1) out += std::to_string(a);
        if (k >= 1) out += "q";
        if (k >= 2) out += unicode ? superscript(k) : "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string IntPolynomial::to_string() const { return render(coeffs_, true); }
std::string IntPolynomial::to_ascii() const { return render(coeffs_, false); }

FinitePoset FinitePoset::from_relation(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq) {
    FinitePoset p;
    p.down_.assign(n, boost::dynamic_bitset<>(n));
    p.up_.assign(n, boost::dynamic_bitset<>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (leq(x, y)) {
                p.down_[y].set(x);
                p.up_[x].set(y);
            }
    for (std::size_t x = 0; x < n; ++x) {
        if (!p.down_[x][x]) throw std::invalid_argument("relation is not reflexive");
        for (std::size_t y = x + 1; y < n; ++y)
            if (p.down_[y][x] && p.down_[x][y]) throw std::invalid_argument("relation is not antisymmetric");
        // transitivity: everything below something below x is below x
        for (std::size_t y = p.down_[x].find_first(); y != boost::dynamic_bitset<>::npos; y = p.down_[x].find_next(y))
            if (!p.down_[y].is_subset_of(p.down_[x])) throw std::invalid_argument("relation is not transitive");
    }
    return p;
}

HasseDiagram hasse(const FinitePoset& p) {
    HasseDiagram h;
    h.vertex_count = p.size();
    for (std::size_t x = 0; x < p.size(); ++x) {
        boost::dynamic_bitset<> below = p.down_set(x);
        below.reset(x);
        for (std::size_t y = below.find_first(); y != boost::dynamic_bitset<>::npos; y = below.find_next(y)) {
            // y is covered by x iff nothing strictly between them
            boost::dynamic_bitset<> between = p.up_set(y) & below;
            between.reset(y);
            if (between.none()) h.edges.emplace_back(x, y);
        }
    }
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

std::vector<std::size_t> covered_counts(const HasseDiagram& h) {
    std::vector<std::size_t> kappa(h.vertex_count, 0);
    for (const auto& [upper, lower] : h.edges) ++kappa[upper];
    return kappa;
}

IntPolynomial covering_polynomial(const HasseDiagram& h) {
    if (h.vertex_count == 0) return {};
    return IntPolynomial::from_exponents(covered_counts(h));
}

IntPolynomial covering_polynomial(const FinitePoset& p) { return covering_polynomial(hasse(p)); }

std::string type_label(std::size_t i) { return "α_" + std::to_string(i); }

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string export_dot(const HasseDiagram& h, const std::vector<std::string>& labels,
                       const std::vector<std::string>& edge_types, const std::string& graph_name) {
    if (labels.size() != h.vertex_count) throw std::invalid_argument("export_dot: one label per vertex required");
    if (edge_types.size() != h.edges.size()) throw std::invalid_argument("export_dot: one type per edge required");
    std::ostringstream out;
    out << "digraph " << quote(graph_name) << " {\n";
    out << "  rankdir=BT;\n";
    for (std::size_t v = 0; v < h.vertex_count; ++v) out << "  n" << v << " [label=" << quote(labels[v]) << "];\n";
    for (std::size_t k = 0; k < h.edges.size(); ++k) {
        const auto& [upper, lower] = h.edges[k];
        out << "  n" << upper << " -> n" << lower << " [type=" << quote(edge_types[k])
            << ", label=" << quote(edge_types[k]) << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace rootposet
