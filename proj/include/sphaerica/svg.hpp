#pragma once

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "sphaerica/apollonius.hpp"
#include "sphaerica/constructions.hpp"
#include "sphaerica/lexell.hpp"
#include "sphaerica/pappus.hpp"
#include "sphaerica/vec.hpp"

namespace sphaerica {

namespace svg_detail {

inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

/// Orthographic projection frame for a viewpoint direction.
struct ViewFrame {
    Vec3 u, v;

    explicit ViewFrame(Vec3 view) {
        double n = norm(view);
        Vec3 w = n > 0.0 ? (1.0 / n) * view : Vec3{0, 0, 1};
        Vec3 ref = std::fabs(w.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
        u = cross(ref, w);
        u = (1.0 / norm(u)) * u;
        v = cross(w, u);
    }

    Vec2 project(Vec3 p) const { return {dot(p, u), dot(p, v)}; }
};

class Canvas {
public:
    void add_circle(Vec2 c, double r, const std::string& cls) {
        body_ += "  <circle class=\"" + cls + "\" cx=\"" + num(c.x) + "\" cy=\"" +
                 num(-c.y) + "\" r=\"" + num(r) + "\"/>\n";
        grow(c.x - r, -c.y - r);
        grow(c.x + r, -c.y + r);
    }

    void add_point(Vec2 p, const std::string& cls) {
        body_ += "  <circle class=\"" + cls + " pt\" cx=\"" + num(p.x) + "\" cy=\"" +
                 num(-p.y) + "\" r=\"POINT_R\"/>\n";
        grow(p.x, -p.y);
    }

    void add_polyline(const std::vector<Vec2>& pts, const std::string& cls, bool close) {
        if (pts.empty()) return;
        std::string d;
        for (size_t i = 0; i < pts.size(); ++i) {
            d += (i == 0 ? "M" : "L");
            d += num(pts[i].x) + " " + num(-pts[i].y);
            grow(pts[i].x, -pts[i].y);
        }
        if (close) d += "Z";
        body_ += "  <path class=\"" + cls + "\" d=\"" + d + "\"/>\n";
    }

    void add_segment(Vec2 a, Vec2 b, const std::string& cls) {
        add_polyline({a, b}, cls, false);
    }

    std::string finish() const {
        double spanx = std::max(1e-6, maxx_ - minx_);
        double spany = std::max(1e-6, maxy_ - miny_);
        double pad = 0.08 * std::max(spanx, spany);
        double stroke = 0.008 * std::max(spanx, spany);
        double point_r = 2.0 * stroke;
        std::string out =
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" +
            num(minx_ - pad) + " " + num(miny_ - pad) + " " + num(spanx + 2 * pad) + " " +
            num(spany + 2 * pad) + "\">\n" +
            "  <style>\n"
            "    .given { stroke: #1f77b4; fill: none; stroke-width: " + num(stroke) + "; }\n"
            "    .solution { stroke: #d62728; fill: none; stroke-width: " + num(stroke) + "; }\n"
            "    .pt { fill: currentColor; }\n"
            "    .given.pt { fill: #1f77b4; }\n"
            "    .solution.pt { fill: #d62728; }\n"
            "  </style>\n";
        std::string body = body_;
        std::string token = "POINT_R";
        for (size_t pos = body.find(token); pos != std::string::npos; pos = body.find(token))
            body.replace(pos, token.size(), num(point_r));
        return out + body + "</svg>\n";
    }

private:
    void grow(double x, double y) {
        minx_ = std::min(minx_, x); maxx_ = std::max(maxx_, x);
        miny_ = std::min(miny_, y); maxy_ = std::max(maxy_, y);
    }

    std::string body_;
    double minx_ = 1e300, maxx_ = -1e300, miny_ = 1e300, maxy_ = -1e300;
};

inline std::vector<Vec2> sample_small_circle(const ViewFrame& f, Vec3 pole, double radius,
                                             int n = 256) {
    Vec3 ref = std::fabs(pole.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
    Vec3 e1 = cross(pole, ref);
    e1 = (1.0 / norm(e1)) * e1;
    Vec3 e2 = cross(pole, e1);
    std::vector<Vec2> pts;
    pts.reserve(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        double t = kTwoPi * i / n;
        Vec3 p = std::cos(radius) * pole +
                 std::sin(radius) * (std::cos(t) * e1 + std::sin(t) * e2);
        pts.push_back(f.project(p));
    }
    return pts;
}

inline std::vector<Vec2> sample_arc(const ViewFrame& f, Vec3 a, Vec3 b, int n = 64) {
    std::vector<Vec2> pts;
    pts.reserve(static_cast<size_t>(n) + 1);
    double omega = std::acos(clamp_unit(dot(a, b) / (norm(a) * norm(b))));
    double so = std::sin(omega);
    for (int i = 0; i <= n; ++i) {
        double t = static_cast<double>(i) / n;
        Vec3 p = so < 1e-12 ? a
                            : (std::sin((1.0 - t) * omega) / so) * a +
                                  (std::sin(t * omega) / so) * b;
        pts.push_back(f.project((1.0 / norm(p)) * p));
    }
    return pts;
}

}  // namespace svg_detail

inline std::string svg_lexell(const LexellLocus& locus, Vec3 view = {0, 0, 1}) {
    using namespace svg_detail;
    ViewFrame f(view);
    Canvas c;
    c.add_polyline(sample_small_circle(f, locus.circle.pole.vec(),
                                       locus.circle.radius.radians()),
                   "solution", false);
    c.add_point(f.project(locus.base_a.vec()), "given");
    c.add_point(f.project(locus.base_b.vec()), "given");
    c.add_point(f.project(locus.apex.vec()), "solution");
    return c.finish();
}

inline std::string svg_pappus(const PappusProblem2D& prob,
                              const std::vector<Triangle2D>& tris) {
    using namespace svg_detail;
    Canvas c;
    c.add_circle({prob.carrier.cx, prob.carrier.cy}, prob.carrier.r, "given");
    for (Vec2 p : {prob.p1, prob.p2, prob.p3}) c.add_point(p, "given");
    for (const Triangle2D& t : tris) c.add_polyline({t[0], t[1], t[2]}, "solution", true);
    return c.finish();
}

inline std::string svg_pappus(const PappusProblemSphere& prob,
                              const std::vector<TriangleSphere>& tris,
                              Vec3 view = {0, 0, 1}) {
    using namespace svg_detail;
    ViewFrame f(view);
    Canvas c;
    c.add_polyline(sample_small_circle(f, prob.carrier.pole.vec(),
                                       prob.carrier.radius.radians()),
                   "given", false);
    for (const SpherePoint& p : {prob.p1, prob.p2, prob.p3})
        c.add_point(f.project(p.vec()), "given");
    for (const TriangleSphere& t : tris)
        for (int k = 0; k < 3; ++k)
            c.add_polyline(sample_arc(f, t[static_cast<size_t>(k)].vec(),
                                      t[static_cast<size_t>((k + 1) % 3)].vec()),
                           "solution", false);
    return c.finish();
}

inline std::string svg_apollonius(const std::array<Circle2D, 3>& given,
                                  const std::vector<Apollonius2Solution>& sols) {
    using namespace svg_detail;
    Canvas c;
    for (const Circle2D& g : given) c.add_circle({g.cx, g.cy}, g.r, "given");
    for (const auto& s : sols) c.add_circle({s.circle.cx, s.circle.cy}, s.circle.r, "solution");
    return c.finish();
}

/// Cevian configurations: Euclidean drawn directly, spherical under
/// orthographic projection, hyperbolic in the Klein disk (where geodesics
/// are straight chords).
inline std::string svg_cevian(const CevianConfig& cfg, Vec3 view = {0, 0, 1}) {
    using namespace svg_detail;
    Canvas c;
    if (cfg.geometry == Geometry::spherical) {
        ViewFrame f(view);
        auto arc = [&](Vec3 p, Vec3 q, const char* cls) {
            c.add_polyline(sample_arc(f, p, q), cls, false);
        };
        arc(cfg.A, cfg.B, "solution"); arc(cfg.B, cfg.C, "solution"); arc(cfg.C, cfg.A, "solution");
        arc(cfg.A, cfg.a, "given"); arc(cfg.B, cfg.b, "given"); arc(cfg.C, cfg.c, "given");
        c.add_point(f.project(cfg.O), "given");
        return c.finish();
    }
    auto flat = [&](Vec3 p) -> Vec2 {
        if (cfg.geometry == Geometry::hyperbolic) return {p.x / p.z, p.y / p.z};
        return {p.x, p.y};
    };
    auto seg = [&](Vec3 p, Vec3 q, const char* cls) { c.add_segment(flat(p), flat(q), cls); };
    seg(cfg.A, cfg.B, "solution"); seg(cfg.B, cfg.C, "solution"); seg(cfg.C, cfg.A, "solution");
    seg(cfg.A, cfg.a, "given"); seg(cfg.B, cfg.b, "given"); seg(cfg.C, cfg.c, "given");
    c.add_point(flat(cfg.O), "given");
    return c.finish();
}

inline void write_svg_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open SVG output path: " + path);
    out << content;
    out.flush();
    if (!out) throw IoFailure("failed writing SVG to: " + path);
}

}  // namespace sphaerica
