#include "rootposet/report.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

#include "rootposet/abelian.hpp"
#include "rootposet/errors.hpp"

namespace rootposet {

using Json = nlohmann::ordered_json;

ReportTopic parse_topic(std::string_view name) {
    if (name == "roots") return ReportTopic::Roots;
    if (name == "hasse") return ReportTopic::Hasse;
    if (name == "ideals") return ReportTopic::Ideals;
    if (name == "abelian") return ReportTopic::Abelian;
    if (name == "classes") return ReportTopic::Classes;
    if (name == "covering") return ReportTopic::Covering;
    throw UnsupportedInput("unknown report '" + std::string(name) + "'");
}

ReportFormat parse_format(std::string_view name) {
    if (name == "text") return ReportFormat::Text;
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    throw UnsupportedInput("unknown format '" + std::string(name) + "'");
}

Diagram parse_diagram(std::string_view name) {
    if (name == "delta") return Diagram::Delta;
    if (name == "ad") return Diagram::Ad;
    if (name == "ab") return Diagram::Ab;
    throw UnsupportedInput("unknown diagram '" + std::string(name) + "'");
}

namespace {

std::string join(const std::vector<long>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string generators_text(const RootSystem& rs, const UpperIdeal& ideal, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < ideal.generators.size(); ++i) s += (i ? sep : "") + to_string(rs.root(ideal.generators[i]));
    return s;
}

std::string type_counts_text(const TypeCounts& c, std::size_t first) {
    std::string s;
    for (std::size_t i = first; i < c.size(); ++i) s += (i > first ? " " : "") + type_label(i) + ":" + std::to_string(c[i]);
    return s;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string roots_report(const RootSystem& rs, ReportFormat format) {
    std::ostringstream os;
    switch (format) {
        case ReportFormat::Json: {
            Json roots = Json::array();
            for (const auto& r : rs.positive_roots())
                roots.push_back({{"coeffs", r.coeffs}, {"height", r.height()}, {"long", rs.is_long(r)}});
            Json j = {{"type", rs.name()},
                      {"rank", rs.rank()},
                      {"h", rs.coxeter_number()},
                      {"h_star", rs.dual_coxeter_number()},
                      {"exponents", rs.exponents()},
                      {"theta", rs.theta().coeffs},
                      {"theta_short", rs.theta_short().coeffs},
                      {"positive_roots", roots}};
            return dump(j);
        }
        case ReportFormat::Csv:
            os << "index,coeffs,height,length\n";
            for (std::size_t k = 0; k < rs.num_positive(); ++k) {
                const auto& r = rs.root(k);
                os << k << ',' << to_string(r) << ',' << r.height() << ',' << (rs.is_long(r) ? "long" : "short") << '\n';
            }
            return os.str();
        case ReportFormat::Text: break;
    }
    std::vector<long> ex(rs.exponents().begin(), rs.exponents().end());
    os << rs.name() << ": " << rs.num_positive() << " positive roots, h = " << rs.coxeter_number()
       << ", h* = " << rs.dual_coxeter_number() << ", exponents " << join(ex, " ") << '\n';
    os << "theta = " << to_string(rs.theta()) << ", theta_s = " << to_string(rs.theta_short()) << '\n';
    for (std::size_t k = 0; k < rs.num_positive(); ++k) {
        const auto& r = rs.root(k);
        os << to_string(r) << "  height " << r.height();
        if (!rs.simply_laced()) os << (rs.is_long(r) ? "  long" : "  short");
        os << '\n';
    }
    return os.str();
}

std::string hasse_report(const RootSystem& rs, ReportFormat format) {
    const auto edges = typed_edges_delta_plus(rs);
    const auto counts = count_types(edges, rs.rank());
    std::ostringstream os;
    switch (format) {
        case ReportFormat::Json: {
            Json list = Json::array();
            for (const auto& e : edges)
                list.push_back({{"upper", rs.root(e.upper).coeffs}, {"lower", rs.root(e.lower).coeffs}, {"type", e.type}});
            const TypeCounts per(counts.begin() + 1, counts.end());
            return dump({{"type", rs.name()},
                         {"rank", rs.rank()},
                         {"n_vertices", rs.num_positive()},
                         {"n_edges", edges.size()},
                         {"per_type_counts", per},
                         {"edges", list}});
        }
        case ReportFormat::Csv:
            os << "upper,lower,type\n";
            for (const auto& e : edges) os << to_string(rs.root(e.upper)) << ',' << to_string(rs.root(e.lower)) << ',' << e.type << '\n';
            return os.str();
        case ReportFormat::Text: break;
    }
    os << rs.name() << ": H(Delta+) has " << rs.num_positive() << " vertices, " << edges.size() << " edges\n";
    os << "edges per type: " << type_counts_text(counts, 1) << '\n';
    for (const auto& e : edges)
        os << to_string(rs.root(e.upper)) << " -> " << to_string(rs.root(e.lower)) << "  " << type_label(e.type) << '\n';
    return os.str();
}

std::string ideals_report(const RootSystem& rs, ReportFormat format) {
    const AffineWeylGroup group(rs);
    const auto ad = AdIdealPoset::enumerate(rs);
    const auto typed = ad_typed_edges(group, ad);
    const auto narayana = ad.narayana_polynomial();
    std::ostringstream os;
    switch (format) {
        case ReportFormat::Json:
            return dump({{"type", rs.name()},
                         {"rank", rs.rank()},
                         {"n_ideals", ad.size()},
                         {"n_edges", typed.edges.size()},
                         {"per_type_counts", typed.per_type},
                         {"narayana_coeffs", narayana.coeffs()}});
        case ReportFormat::Csv:
            os << "index,size,n_generators,generators\n";
            for (std::size_t k = 0; k < ad.size(); ++k)
                os << k << ',' << ad[k].size() << ',' << ad[k].generators.size() << ','
                   << generators_text(rs, ad[k], " ") << '\n';
            return os.str();
        case ReportFormat::Text: break;
    }
    os << rs.name() << ": " << ad.size() << " ideals, " << typed.edges.size() << " edges\n";
    os << "edges per type: " << type_counts_text(typed.per_type, 0) << '\n';
    os << "Narayana polynomial: " << narayana.to_string() << '\n';
    return os.str();
}

std::string abelian_report(const RootSystem& rs, ReportFormat format) {
    const AffineWeylGroup group(rs);
    const auto ad = AdIdealPoset::enumerate(rs);
    const auto ab = abelian_diagram(group, ad);
    const auto com = commutative_roots(group);
    const auto ck = ab.covering_polynomial();
    std::ostringstream os;
    switch (format) {
        case ReportFormat::Json: {
            Json roots = Json::array();
            for (const auto& c : com) roots.push_back({{"coeffs", rs.root(c.root).coeffs}, {"class", c.klass}});
            return dump({{"type", rs.name()},
                         {"rank", rs.rank()},
                         {"n_abelian", ab.ideals.size()},
                         {"n_edges", ab.edges.size()},
                         {"per_type_counts", ab.per_type},
                         {"covering_coeffs", ck.coeffs()},
                         {"commutative_roots", roots}});
        }
        case ReportFormat::Csv:
            os << "index,size,n_generators,generators\n";
            for (std::size_t p = 0; p < ab.ideals.size(); ++p) {
                const auto& ideal = ad[ab.ideals[p]];
                os << p << ',' << ideal.size() << ',' << ideal.generators.size() << ','
                   << generators_text(rs, ideal, " ") << '\n';
            }
            return os.str();
        case ReportFormat::Text: break;
    }
    os << rs.name() << ": " << ab.ideals.size() << " Abelian ideals, " << ab.edges.size() << " edges\n";
    os << "edges per type: " << type_counts_text(ab.per_type, 0) << '\n';
    os << "covering polynomial: " << ck.to_string() << '\n';
    os << "commutative roots: " << com.size() << '\n';
    return os.str();
}

std::string classes_report(const RootSystem& rs, ReportFormat format) {
    const AffineWeylGroup group(rs);
    const auto com = commutative_roots(group);
    std::map<std::size_t, std::vector<std::string>> by_class;
    for (const auto& c : com) by_class[c.klass].push_back(to_string(rs.root(c.root)));
    std::ostringstream os;
    switch (format) {
        case ReportFormat::Json: {
            Json classes = Json::object();
            for (std::size_t i = 0; i <= rs.rank(); ++i) classes[std::to_string(i)] = by_class[i];
            return dump({{"type", rs.name()}, {"rank", rs.rank()}, {"classes", classes}});
        }
        case ReportFormat::Csv:
            os << "coeffs,class\n";
            for (const auto& c : com) os << to_string(rs.root(c.root)) << ',' << c.klass << '\n';
            return os.str();
        case ReportFormat::Text: break;
    }
    os << rs.name() << ": classes of the " << com.size() << " commutative roots\n";
    for (std::size_t i = 0; i <= rs.rank(); ++i) {
        os << type_label(i) << " -";
        const auto& roots = by_class[i];
        for (std::size_t k = 0; k < roots.size(); ++k) os << (k ? ", " : " ") << roots[k];
        os << '\n';
    }
    return os.str();
}

std::string covering_report(const RootSystem& rs, ReportFormat format) {
    const AffineWeylGroup group(rs);
    const auto delta = covering_polynomial(delta_plus_hasse(rs));
    const auto ad = AdIdealPoset::enumerate(rs);
    const auto narayana = ad.narayana_polynomial();
    const auto ab = abelian_diagram(group, ad).covering_polynomial();
    std::ostringstream os;
    switch (format) {
        case ReportFormat::Json:
            return dump({{"type", rs.name()},
                         {"rank", rs.rank()},
                         {"delta_coeffs", delta.coeffs()},
                         {"ad_coeffs", narayana.coeffs()},
                         {"abelian_coeffs", ab.coeffs()}});
        case ReportFormat::Csv: {
            os << "poset,k,coefficient\n";
            const std::pair<const char*, const IntPolynomial*> rows[] = {{"delta", &delta}, {"ad", &narayana}, {"abelian", &ab}};
            for (const auto& [name, p] : rows)
                for (std::size_t k = 0; k < p->coeffs().size(); ++k) os << name << ',' << k << ',' << p->coeff(k) << '\n';
            return os.str();
        }
        case ReportFormat::Text: break;
    }
    os << "Delta+: " << delta.to_string() << '\n';
    os << "AD: " << narayana.to_string() << '\n';
    os << "Ab: " << ab.to_string() << '\n';
    return os.str();
}

}  // namespace

std::string report(const RootSystem& rs, ReportTopic topic, ReportFormat format) {
    switch (topic) {
        case ReportTopic::Roots: return roots_report(rs, format);
        case ReportTopic::Hasse: return hasse_report(rs, format);
        case ReportTopic::Ideals: return ideals_report(rs, format);
        case ReportTopic::Abelian: return abelian_report(rs, format);
        case ReportTopic::Classes: return classes_report(rs, format);
        case ReportTopic::Covering: return covering_report(rs, format);
    }
    throw UnsupportedInput("unknown report");
}

std::string export_diagram(const RootSystem& rs, Diagram diagram) {
    if (diagram == Diagram::Delta) return export_delta_dot(rs);
    const AffineWeylGroup group(rs);
    const auto ad = AdIdealPoset::enumerate(rs);
    HasseDiagram h;
    std::vector<std::string> labels, types;
    auto label = [&](std::size_t k) { return "{" + generators_text(rs, ad[k], ",") + "}"; };
    if (diagram == Diagram::Ad) {
        const auto typed = ad_typed_edges(group, ad);
        h.vertex_count = ad.size();
        for (std::size_t k = 0; k < ad.size(); ++k) labels.push_back(label(k));
        for (const auto& e : typed.edges) {
            h.edges.emplace_back(e.upper, e.lower);
            types.push_back(type_label(e.type));
        }
        return export_dot(h, labels, types, "AD(" + rs.name() + ")");
    }
    const auto ab = abelian_diagram(group, ad);
    h.vertex_count = ab.ideals.size();
    for (auto k : ab.ideals) labels.push_back(label(k));
    for (const auto& e : ab.edges) {
        h.edges.emplace_back(e.upper, e.lower);
        types.push_back(type_label(e.type));
    }
    return export_dot(h, labels, types, "Ab(" + rs.name() + ")");
}

}  // namespace rootposet
