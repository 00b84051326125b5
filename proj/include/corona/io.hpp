#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "corona/catalog.hpp"

namespace corona {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// scalar encoding: [[an,ad],[bn,bd],[cn,cd],[dn,dd]] with integer shorthand

namespace detail {

inline json encode_component(const Rational& r) {
    if (r.is_integer() && r.num().fits_slong_p())
        return json(static_cast<long>(r.num().get_si()));
    if (r.num().fits_slong_p() && r.den().fits_slong_p())
        return json::array({static_cast<long>(r.num().get_si()),
                            static_cast<long>(r.den().get_si())});
    return json::array({r.num().get_str(), r.den().get_str()});
}

inline Rational parse_integerish(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<int64_t>()));
    if (j.is_string()) return Rational(mpz_class(j.get<std::string>()), mpz_class(1));
    throw std::invalid_argument("scalar: expected integer, got " + j.dump());
}

inline Rational parse_component(const json& j) {
    if (j.is_array()) {
        if (j.size() != 2) throw std::invalid_argument("scalar: rational needs [num,den]");
        Rational num = parse_integerish(j[0]);
        Rational den = parse_integerish(j[1]);
        if (den.is_zero()) throw std::invalid_argument("scalar: zero denominator");
        return num / den;
    }
    return parse_integerish(j);
}

}  // namespace detail

inline json encode_scalar(const QuarticScalar& s) {
    if (s.is_rational() && s.a.is_integer() && s.a.num().fits_slong_p())
        return json(static_cast<long>(s.a.num().get_si()));
    return json::array({detail::encode_component(s.a), detail::encode_component(s.b),
                        detail::encode_component(s.c), detail::encode_component(s.d)});
}

inline QuarticScalar parse_scalar(const json& j) {
    if (j.is_array()) {
        if (j.size() != 4)
            throw std::invalid_argument("scalar: expected 4 components, got " + j.dump());
        return {detail::parse_component(j[0]), detail::parse_component(j[1]),
                detail::parse_component(j[2]), detail::parse_component(j[3])};
    }
    return QuarticScalar(detail::parse_integerish(j));
}

inline json encode_vec(const Vec2& v) { return json::array({encode_scalar(v.x), encode_scalar(v.y)}); }

inline Vec2 parse_vec(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("vector: expected [x, y]");
    return {parse_scalar(j[0]), parse_scalar(j[1])};
}

// ---------------------------------------------------------------------------
// tiling spec files

struct ParsedTiling {
    TilingSpec spec;
    // optional user-supplied adjacency stars, bypassing geometric derivation
    std::map<AdjacencyKind, AdjacencyStar> stars;
};

inline json encode_tiling(const TilingSpec& spec) {
    json j;
    j["name"] = spec.name;
    j["basis"] = json::array({encode_vec(spec.basis[0]), encode_vec(spec.basis[1])});
    json protos = json::array();
    for (const Polygon& p : spec.prototiles) {
        json vs = json::array();
        for (const Vec2& v : p.vertices()) vs.push_back(encode_vec(v));
        protos.push_back(json{{"vertices", vs}});
    }
    j["prototiles"] = protos;
    return j;
}

inline ParsedTiling parse_tiling(const json& j) {
    ParsedTiling out;
    if (!j.is_object()) throw std::invalid_argument("tiling: expected an object");
    out.spec.name = j.value("name", std::string("unnamed"));
    if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].size() != 2)
        throw std::invalid_argument("tiling: basis must be two vectors");
    out.spec.basis = {parse_vec(j["basis"][0]), parse_vec(j["basis"][1])};
    if (!j.contains("prototiles") || !j["prototiles"].is_array() || j["prototiles"].empty())
        throw std::invalid_argument("tiling: prototiles missing");
    for (const json& pj : j["prototiles"]) {
        if (!pj.contains("vertices"))
            throw std::invalid_argument("tiling: prototile without vertices");
        std::vector<Vec2> vs;
        for (const json& vj : pj["vertices"]) vs.push_back(parse_vec(vj));
        try {
            out.spec.prototiles.push_back(Polygon::make(std::move(vs)));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(std::string("NONSIMPLE_POLYGON: ") + e.what());
        }
    }
    if (j.contains("adjacency")) {
        for (auto kind : {AdjacencyKind::point, AdjacencyKind::edge}) {
            const char* kn = to_string(kind);
            if (!j["adjacency"].contains(kn)) continue;
            AdjacencyStar star;
            star.kind = kind;
            star.arcs.resize(out.spec.prototiles.size());
            for (const json& arc : j["adjacency"][kn]) {
                if (!arc.is_array() || arc.size() != 4)
                    throw std::invalid_argument("tiling: adjacency arc must be [i,j,ox,oy]");
                int i = arc[0].get<int>();
                StarArc a{arc[1].get<int32_t>(), arc[2].get<int64_t>(), arc[3].get<int64_t>()};
                if (i < 0 || i >= out.spec.classes() || a.proto < 0 ||
                    a.proto >= out.spec.classes())
                    throw std::invalid_argument("tiling: adjacency arc out of range");
                star.arcs[static_cast<size_t>(i)].push_back(a);
            }
            for (auto& v : star.arcs) std::sort(v.begin(), v.end());
            if (!star_symmetric(star))
                throw std::invalid_argument("tiling: user adjacency star is not symmetric");
            out.stars.emplace(kind, std::move(star));
        }
    }
    return out;
}

inline ParsedTiling load_tiling_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open tiling file: " + path);
    json j;
    in >> j;
    return parse_tiling(j);
}

// ---------------------------------------------------------------------------
// result document

struct ResultDocument {
    std::string tiling;
    AdjacencyKind adjacency = AdjacencyKind::point;
    int M = 0;
    std::vector<Vec2> vertices;
    size_t velocity_count = 0;
    CertificateReport certificate;
};

inline ResultDocument make_result(const CoronaLimit& K, const CertificateReport& cert) {
    ResultDocument doc;
    doc.tiling = K.tiling;
    doc.adjacency = K.kind;
    doc.M = K.M;
    doc.vertices = K.hull.vertices();
    doc.velocity_count = K.velocities.size();
    doc.certificate = cert;
    return doc;
}

inline json encode_result(const ResultDocument& doc) {
    json j;
    j["tiling"] = doc.tiling;
    j["adjacency"] = to_string(doc.adjacency);
    j["M"] = doc.M;
    json exact = json::array(), approx = json::array();
    for (const Vec2& v : doc.vertices) {
        exact.push_back(encode_vec(v));
        approx.push_back(json::array({render_decimal(v.x), render_decimal(v.y)}));
    }
    j["vertices_exact"] = exact;
    j["vertices_approx"] = approx;
    j["velocity_count"] = doc.velocity_count;
    json checks = json::array();
    for (const auto& c : doc.certificate.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["certificate"] = json{{"pass", doc.certificate.pass}, {"checks", checks}};
    return j;
}

inline std::string encode_result_csv(const ResultDocument& doc) {
    std::ostringstream os;
    os << "x_1,x_sqrt2,x_sqrt3,x_sqrt6,y_1,y_sqrt2,y_sqrt3,y_sqrt6,x_decimal,y_decimal\n";
    auto rat = [](const Rational& r) { return r.num().get_str() + "/" + r.den().get_str(); };
    for (const Vec2& v : doc.vertices) {
        os << rat(v.x.a) << ',' << rat(v.x.b) << ',' << rat(v.x.c) << ',' << rat(v.x.d) << ','
           << rat(v.y.a) << ',' << rat(v.y.b) << ',' << rat(v.y.c) << ',' << rat(v.y.d) << ','
           << render_decimal(v.x) << ',' << render_decimal(v.y) << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// SVG emission (deterministic: fixed viewport, 12-significant-digit decimals)

class SvgWriter {
public:
    SvgWriter(double min_x, double min_y, double max_x, double max_y) {
        double w = max_x - min_x, h = max_y - min_y;
        double pad = 0.03 * std::max(w, h) + 0.05;
        min_x_ = min_x - pad;
        max_y_ = max_y + pad;
        width_ = w + 2 * pad;
        height_ = h + 2 * pad;
        scale_ = 720.0 / std::max(width_, height_);
        os_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        os_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
            << fmt(width_ * scale_) << "\" height=\"" << fmt(height_ * scale_) << "\">\n";
    }

    void polygon(const Polygon& p, const std::string& fill, const std::string& stroke,
                 double stroke_width) {
        os_ << "<polygon points=\"";
        bool first = true;
        for (const Vec2& v : p.vertices()) {
            if (!first) os_ << ' ';
            first = false;
            os_ << fmt(tx(to_double(v.x))) << ',' << fmt(ty(to_double(v.y)));
        }
        os_ << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\""
            << fmt(stroke_width * scale_) << "\"/>\n";
    }

    void circle(double x, double y, double r, const std::string& fill) {
        os_ << "<circle cx=\"" << fmt(tx(x)) << "\" cy=\"" << fmt(ty(y)) << "\" r=\""
            << fmt(r * scale_) << "\" fill=\"" << fill << "\"/>\n";
    }

    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke,
                  double stroke_width, bool close) {
        os_ << (close ? "<polygon points=\"" : "<polyline points=\"");
        bool first = true;
        for (const auto& [x, y] : pts) {
            if (!first) os_ << ' ';
            first = false;
            os_ << fmt(tx(x)) << ',' << fmt(ty(y));
        }
        os_ << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
            << fmt(stroke_width * scale_) << "\"/>\n";
    }

    std::string finish() {
        os_ << "</svg>\n";
        return os_.str();
    }

private:
    double tx(double x) const { return (x - min_x_) * scale_; }
    double ty(double y) const { return (max_y_ - y) * scale_; }

    static std::string fmt(double v) {
        QuarticScalar s{Rational::from_decimal(trim(v))};
        return render_decimal(s, 12);
    }

    static std::string trim(double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.14f", v);
        return buf;
    }

    std::ostringstream os_;
    double min_x_, max_y_, width_, height_, scale_;
};

inline const std::vector<std::string>& shell_palette() {
    static const std::vector<std::string> p = {
        "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
        "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};
    return p;
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace corona
