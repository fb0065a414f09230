#pragma once

#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sphaerica/sphaerica.hpp"
#include "sphaerica/svg.hpp"

namespace sphaerica::cli {

using nlohmann::json;

/// Uniform reply of every subcommand.  status=ok implies non-empty
/// results and all residuals below the active residual tolerance.
struct ResponseEnvelope {
    Status status = Status::ok;
    json results = json::array();
    json residuals = json::array();
    json diagnostics = json::array();

    json to_json() const {
        return json{{"status", to_string(status)},
                    {"results", results},
                    {"residuals", residuals},
                    {"diagnostics", diagnostics}};
    }

    static ResponseEnvelope from_json(const json& j) {
        ResponseEnvelope e;
        std::string s = j.at("status").get<std::string>();
        if (s == "ok") e.status = Status::ok;
        else if (s == "no_solution") e.status = Status::no_solution;
        else if (s == "degenerate") e.status = Status::degenerate;
        else e.status = Status::invalid_input;
        e.results = j.at("results");
        e.residuals = j.at("residuals");
        e.diagnostics = j.at("diagnostics");
        return e;
    }

    bool operator==(const ResponseEnvelope& o) const {
        return status == o.status && results == o.results && residuals == o.residuals &&
               diagnostics == o.diagnostics;
    }
};

inline int exit_code(Status s) {
    switch (s) {
        case Status::ok: return 0;
        case Status::invalid_input: return 2;
        case Status::no_solution: return 3;
        case Status::degenerate: return 4;
    }
    return 2;
}

/// Input wire form.  The payload may be given bare (the usual form) or
/// wrapped as {"command": ..., "payload": ..., "units": ...}; a wrapped
/// command must match the subcommand on the command line.
struct RequestEnvelope {
    std::string command;
    json payload = json::object();
    std::string units = "radians";

    static RequestEnvelope from_input(const std::string& subcommand, json parsed) {
        RequestEnvelope env;
        env.command = subcommand;
        if (parsed.is_object() && parsed.contains("command") && parsed.contains("payload")) {
            std::string wrapped = parsed.at("command").get<std::string>();
            if (wrapped != subcommand)
                throw InvalidInput("envelope command \"" + wrapped +
                                   "\" does not match subcommand \"" + subcommand + "\"");
            env.units = parsed.value("units", "radians");
            env.payload = parsed.at("payload");
        } else {
            env.payload = std::move(parsed);
        }
        if (env.payload.is_object() && env.payload.value("units", "") == "degrees")
            env.units = "degrees";
        return env;
    }
};

namespace detail {

inline const json& need(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw InvalidInput(std::string("missing required field \"") + key + "\"");
    return *it;
}

inline double need_num(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number())
        throw InvalidInput(std::string("field \"") + key + "\" must be a number");
    return v.get<double>();
}

inline Vec3 need_vec3(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_array() || v.size() != 3)
        throw InvalidInput(std::string("field \"") + key + "\" must be [x, y, z]");
    return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

inline Vec2 need_vec2(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_array() || v.size() != 2)
        throw InvalidInput(std::string("field \"") + key + "\" must be [x, y]");
    return {v[0].get<double>(), v[1].get<double>()};
}

struct CommandContext {
    json payload;
    bool degrees = false;
    Tolerances tol;
    std::string svg_path;

    double ang_in(double v) const { return degrees ? v * kPi / 180.0 : v; }
    double ang_out(double rad) const { return degrees ? rad * 180.0 / kPi : rad; }
    Angle angle_field(const json& j, const char* key) const {
        return Angle(ang_in(need_num(j, key)));
    }
    Vec3 view() const {
        if (payload.contains("view")) return need_vec3(payload, "view");
        return {0, 0, 1};
    }
};

inline json point_json(Vec3 p, bool planar) {
    if (planar) return json::array({p.x, p.y});
    return json::array({p.x, p.y, p.z});
}

// ---- handlers ----------------------------------------------------------

inline ResponseEnvelope handle_solve(const CommandContext& ctx) {
    SolveRequest req;
    auto grab = [&](const char* key, std::optional<Angle>& slot) {
        if (ctx.payload.contains(key)) slot = ctx.angle_field(ctx.payload, key);
    };
    grab("a", req.a); grab("b", req.b); grab("c", req.c);
    grab("A", req.A); grab("B", req.B); grab("C", req.C);

    ResponseEnvelope env;
    for (const TriangleData& t : solve(req, ctx.tol)) {
        env.results.push_back(json{{"a", ctx.ang_out(t.a().radians())},
                                   {"b", ctx.ang_out(t.b().radians())},
                                   {"c", ctx.ang_out(t.c().radians())},
                                   {"A", ctx.ang_out(t.A().radians())},
                                   {"B", ctx.ang_out(t.B().radians())},
                                   {"C", ctx.ang_out(t.C().radians())}});
        env.residuals.push_back(
            std::max(t.law_of_cosines_residual(), t.sine_rule_residual()));
    }
    return env;
}

inline ResponseEnvelope handle_area(const CommandContext& ctx) {
    std::string method = need(ctx.payload, "method").get<std::string>();
    double area = 0.0;
    if (method == "girard") {
        area = girard_area(ctx.angle_field(ctx.payload, "A"),
                           ctx.angle_field(ctx.payload, "B"),
                           ctx.angle_field(ctx.payload, "C"));
    } else if (method == "lhuilier") {
        area = heron_spherical_area(ctx.angle_field(ctx.payload, "a"),
                                    ctx.angle_field(ctx.payload, "b"),
                                    ctx.angle_field(ctx.payload, "c"));
    } else if (method == "planar") {
        area = heron_planar_area(need_num(ctx.payload, "a"), need_num(ctx.payload, "b"),
                                 need_num(ctx.payload, "c"));
    } else if (method == "lune") {
        area = lune_area(ctx.angle_field(ctx.payload, "theta"));
    } else {
        throw InvalidInput("area: method must be girard | lhuilier | planar | lune");
    }
    ResponseEnvelope env;
    env.results.push_back(json{{"area", area}});
    return env;
}

inline ResponseEnvelope handle_solid_angle(const CommandContext& ctx) {
    ResponseEnvelope env;
    if (ctx.payload.value("table", false)) {
        for (const auto& row : regular_polyhedra_table())
            env.results.push_back(json{{"name", row.name},
                                       {"n", row.n},
                                       {"a", ctx.ang_out(row.a.radians())},
                                       {"steradians", row.solid_angle.steradians},
                                       {"method", row.solid_angle.method}});
        return env;
    }
    int n = static_cast<int>(need_num(ctx.payload, "n"));
    Angle a = ctx.angle_field(ctx.payload, "a");
    SolidAngleResult res = solid_angle_regular(n, a);
    env.results.push_back(json{{"steradians", res.steradians}, {"method", res.method}});
    return env;
}

inline ResponseEnvelope handle_lexell(const CommandContext& ctx) {
    std::string mode = ctx.payload.value("mode", "spherical");
    ResponseEnvelope env;
    if (mode == "euclidean") {
        Vec2 a = need_vec2(ctx.payload, "a");
        Vec2 b = need_vec2(ctx.payload, "b");
        auto [l1, l2] = euclidean_equal_area_locus(a, b, need_num(ctx.payload, "area"), ctx.tol);
        for (const Line2D& l : {l1, l2})
            env.results.push_back(json{{"point", json::array({l.point.x, l.point.y})},
                                       {"direction", json::array({l.direction.x, l.direction.y})}});
        return env;
    }
    if (mode != "spherical")
        throw InvalidInput("lexell: mode must be spherical | euclidean");
    SpherePoint a = SpherePoint::normalized(need_vec3(ctx.payload, "a"));
    SpherePoint b = SpherePoint::normalized(need_vec3(ctx.payload, "b"));
    LexellLocus locus = lexell_circle(a, b, need_num(ctx.payload, "area"), ctx.tol);
    env.results.push_back(json{{"pole", point_json(locus.circle.pole.vec(), false)},
                               {"radius", ctx.ang_out(locus.circle.radius.radians())},
                               {"apex", point_json(locus.apex.vec(), false)}});
    // Lexell's theorem: the locus passes through the base antipodes.
    double cr = cos(locus.circle.radius);
    env.residuals.push_back(std::fabs(dot(locus.circle.pole.vec(), -a.vec()) - cr));
    env.residuals.push_back(std::fabs(dot(locus.circle.pole.vec(), -b.vec()) - cr));
    if (!ctx.svg_path.empty()) write_svg_file(ctx.svg_path, svg_lexell(locus, ctx.view()));
    return env;
}

inline ResponseEnvelope handle_cevian(const CommandContext& ctx) {
    std::string op = ctx.payload.value("op", "gap");
    std::string geom_name = need(ctx.payload, "geometry").get<std::string>();
    Geometry geometry;
    if (geom_name == "euclidean") geometry = Geometry::euclidean;
    else if (geom_name == "spherical") geometry = Geometry::spherical;
    else if (geom_name == "hyperbolic") geometry = Geometry::hyperbolic;
    else throw InvalidInput("cevian: geometry must be euclidean | spherical | hyperbolic");

    const json& lj = need(ctx.payload, "lengths");
    auto len = [&](const char* key) {
        double v = need_num(lj, key);
        return geometry == Geometry::spherical ? ctx.ang_in(v) : v;
    };
    CevianLengths lengths{len("AO"), len("Oa"), len("BO"), len("Ob"), len("CO"), len("Oc")};

    ResponseEnvelope env;
    if (op == "gap") {
        env.results.push_back(json{{"gap", cevian_identity_gap(lengths, geometry)}});
        return env;
    }
    if (op != "construct") throw InvalidInput("cevian: op must be gap | construct");

    CevianConfig cfg = construct_triangle_from_cevians(lengths, geometry, ctx.tol);
    bool planar = geometry != Geometry::spherical && geometry != Geometry::hyperbolic;
    env.results.push_back(json{{"A", point_json(cfg.A, planar)},
                               {"B", point_json(cfg.B, planar)},
                               {"C", point_json(cfg.C, planar)},
                               {"a", point_json(cfg.a, planar)},
                               {"b", point_json(cfg.b, planar)},
                               {"c", point_json(cfg.c, planar)},
                               {"O", point_json(cfg.O, planar)},
                               {"gap", cevian_identity_gap(cfg, ctx.tol)}});
    using cevian_detail::line_distance;
    double res = std::max({line_distance(geometry, cfg.B, cfg.C, cfg.a),
                           line_distance(geometry, cfg.A, cfg.C, cfg.b),
                           line_distance(geometry, cfg.A, cfg.B, cfg.c)});
    env.residuals.push_back(res);
    if (!ctx.svg_path.empty() && geometry != Geometry::hyperbolic)
        write_svg_file(ctx.svg_path, svg_cevian(cfg, ctx.view()));
    else if (!ctx.svg_path.empty())
        write_svg_file(ctx.svg_path, svg_cevian(cfg));
    return env;
}

inline ResponseEnvelope handle_pappus(const CommandContext& ctx) {
    std::string mode = ctx.payload.value("mode", "planar");
    const json& pts = need(ctx.payload, "points");
    if (!pts.is_array() || pts.size() != 3)
        throw InvalidInput("pappus: \"points\" must hold exactly three points");
    ResponseEnvelope env;

    if (mode == "planar") {
        const json& cj = need(ctx.payload, "carrier");
        Circle2D carrier(need_num(cj, "cx"), need_num(cj, "cy"), need_num(cj, "r"));
        auto pt = [&](size_t i) {
            return Vec2{pts[i][0].get<double>(), pts[i][1].get<double>()};
        };
        PappusProblem2D prob{carrier, pt(0), pt(1), pt(2)};
        auto tris = pappus_inscribed_triangle(prob, ctx.tol);
        for (const Triangle2D& t : tris) {
            env.results.push_back(json{{"vertices",
                                        json::array({json::array({t[0].x, t[0].y}),
                                                     json::array({t[1].x, t[1].y}),
                                                     json::array({t[2].x, t[2].y})})}});
            using pappus_detail::point_line_distance;
            env.residuals.push_back(std::max({point_line_distance(t[1], t[2], prob.p1),
                                              point_line_distance(t[2], t[0], prob.p2),
                                              point_line_distance(t[0], t[1], prob.p3)}));
        }
        if (!ctx.svg_path.empty()) write_svg_file(ctx.svg_path, svg_pappus(prob, tris));
        return env;
    }
    if (mode != "spherical") throw InvalidInput("pappus: mode must be planar | spherical");

    const json& cj = need(ctx.payload, "carrier");
    SmallCircle carrier{SpherePoint::normalized(need_vec3(cj, "pole")),
                        Angle(ctx.ang_in(need_num(cj, "radius")))};
    auto pt = [&](size_t i) {
        return SpherePoint::normalized(pts[i][0].get<double>(), pts[i][1].get<double>(),
                                       pts[i][2].get<double>());
    };
    PappusProblemSphere prob{carrier, pt(0), pt(1), pt(2)};
    auto tris = pappus_inscribed_triangle(prob, ctx.tol);
    for (const TriangleSphere& t : tris) {
        env.results.push_back(json{{"vertices",
                                    json::array({point_json(t[0].vec(), false),
                                                 point_json(t[1].vec(), false),
                                                 point_json(t[2].vec(), false)})}});
        using pappus_detail::point_great_circle_distance;
        env.residuals.push_back(
            std::max({point_great_circle_distance(t[1].vec(), t[2].vec(), prob.p1.vec()),
                      point_great_circle_distance(t[2].vec(), t[0].vec(), prob.p2.vec()),
                      point_great_circle_distance(t[0].vec(), t[1].vec(), prob.p3.vec())}));
    }
    if (!ctx.svg_path.empty())
        write_svg_file(ctx.svg_path, svg_pappus(prob, tris, ctx.view()));
    return env;
}

inline ResponseEnvelope handle_apollonius2(const CommandContext& ctx) {
    const json& cj = need(ctx.payload, "circles");
    if (!cj.is_array() || cj.size() != 3)
        throw InvalidInput("apollonius2: \"circles\" must hold exactly three circles");
    auto circ = [&](size_t i) {
        return Circle2D(need_num(cj[i], "cx"), need_num(cj[i], "cy"), need_num(cj[i], "r"));
    };
    Circle2D c1 = circ(0), c2 = circ(1), c3 = circ(2);

    std::optional<TangencySigns<3>> signs;
    if (ctx.payload.contains("signs") && ctx.payload["signs"].is_array()) {
        const json& sj = ctx.payload["signs"];
        if (sj.size() != 3) throw InvalidInput("apollonius2: signs must have three entries");
        signs = TangencySigns<3>{sj[0].get<int>(), sj[1].get<int>(), sj[2].get<int>()};
    }
    auto sols = apollonius_circles(c1, c2, c3, signs, ctx.tol);
    ResponseEnvelope env;
    for (const auto& s : sols) {
        env.results.push_back(json{{"cx", s.circle.cx},
                                   {"cy", s.circle.cy},
                                   {"r", s.circle.r},
                                   {"signs", json::array({s.signs[0], s.signs[1], s.signs[2]})}});
        env.residuals.push_back(s.residual);
    }
    if (!ctx.svg_path.empty())
        write_svg_file(ctx.svg_path, svg_apollonius({c1, c2, c3}, sols));
    return env;
}

inline ResponseEnvelope handle_apollonius3(const CommandContext& ctx) {
    const json& sjs = need(ctx.payload, "spheres");
    if (!sjs.is_array() || sjs.size() != 4)
        throw InvalidInput("apollonius3: \"spheres\" must hold exactly four spheres");
    auto sph = [&](size_t i) {
        return Sphere3D(need_num(sjs[i], "cx"), need_num(sjs[i], "cy"),
                        need_num(sjs[i], "cz"), need_num(sjs[i], "r"));
    };
    std::optional<TangencySigns<4>> signs;
    if (ctx.payload.contains("signs") && ctx.payload["signs"].is_array()) {
        const json& sj = ctx.payload["signs"];
        if (sj.size() != 4) throw InvalidInput("apollonius3: signs must have four entries");
        signs = TangencySigns<4>{sj[0].get<int>(), sj[1].get<int>(), sj[2].get<int>(),
                                 sj[3].get<int>()};
    }
    auto sols = tangent_spheres(sph(0), sph(1), sph(2), sph(3), signs, ctx.tol);
    ResponseEnvelope env;
    for (const auto& s : sols) {
        env.results.push_back(json{{"cx", s.sphere.cx},
                                   {"cy", s.sphere.cy},
                                   {"cz", s.sphere.cz},
                                   {"r", s.sphere.r},
                                   {"signs", json::array({s.signs[0], s.signs[1], s.signs[2],
                                                          s.signs[3]})}});
        env.residuals.push_back(s.residual);
    }
    return env;
}

inline ResponseEnvelope handle_geodist(const CommandContext& ctx) {
    const json& fj = need(ctx.payload, "from");
    const json& tj = need(ctx.payload, "to");
    GeoCoordinate from(ctx.ang_in(need_num(fj, "lat")), ctx.ang_in(need_num(fj, "lon")));
    GeoCoordinate to(ctx.ang_in(need_num(tj, "lat")), ctx.ang_in(need_num(tj, "lon")));
    double radius = ctx.payload.value("radius_km", 6371.0);
    GeodesicDistance d = geodesic_distance(from, to, radius);

    ResponseEnvelope env;
    json row{{"central_angle", ctx.ang_out(d.central_angle.radians())},
             {"length_km", d.length_km}};
    try {
        row["initial_bearing"] = ctx.ang_out(initial_bearing(from, to, ctx.tol).radians());
    } catch (const DegenerateInput& e) {
        env.diagnostics.push_back(std::string("initial_bearing omitted: ") + e.what());
    }
    env.results.push_back(row);
    return env;
}

// ---- plain-text summaries ----------------------------------------------

inline std::string human_summary(const std::string& command, const ResponseEnvelope& env) {
    std::ostringstream os;
    if (env.status != Status::ok) {
        os << to_string(env.status);
        for (const auto& d : env.diagnostics) os << ": " << d.get<std::string>();
        os << "\n";
        return os.str();
    }
    char buf[64];
    if (command == "solid-angle" && env.results.size() == 1 &&
        env.results[0].contains("steradians")) {
        std::snprintf(buf, sizeof(buf), "%.6f sr\n",
                      env.results[0]["steradians"].get<double>());
        return buf;
    }
    for (const auto& r : env.results) os << r.dump() << "\n";
    return os.str();
}

}  // namespace detail

/// Batch entry point: args excludes the program name.  Reads the JSON
/// payload from --input or standard input, writes a ResponseEnvelope (or a
/// terse summary without --json) to `out`, diagnostics to `err`; the
/// return value is the process exit code.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    using namespace detail;

    CLI::App app{"sphaerica: spherical-geometry solvers in batch"};
    app.require_subcommand(1);

    bool json_output = false, degrees = false;
    std::string svg_path, input_path;
    double tolerance = -1.0;
    std::optional<int> flag_n;
    std::optional<double> flag_a;

    const std::vector<std::string> names = {"solve", "area", "solid-angle",
                                            "lexell", "cevian", "pappus",
                                            "apollonius2", "apollonius3", "geodist"};
    for (const std::string& name : names) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_flag("--json", json_output, "emit the JSON response envelope");
        sub->add_flag("--degrees", degrees, "angles in the payload are degrees");
        sub->add_option("--svg", svg_path, "write an SVG diagram of the result");
        sub->add_option("--input", input_path, "read the JSON payload from a file");
        sub->add_option("--tolerance", tolerance, "override the residual tolerance");
        if (name == "solid-angle") {
            sub->add_option("--n", flag_n, "number of planar angles");
            sub->add_option("--a", flag_a, "planar angle (radians, or degrees with --degrees)");
        }
    }

    std::string command;
    ResponseEnvelope env;
    try {
        std::vector<const char*> argv;
        argv.push_back("sphaerica");
        for (const std::string& s : args) argv.push_back(s.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
        command = app.get_subcommands().front()->get_name();
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        env.status = Status::invalid_input;
        env.diagnostics.push_back(std::string("argument error: ") + e.what());
        err << "argument error: " << e.what() << "\n";
        out << env.to_json().dump(2) << "\n";
        return exit_code(env.status);
    }

    CommandContext ctx;
    ctx.degrees = degrees;
    ctx.svg_path = svg_path;
    if (const char* v = std::getenv("SPHAERICA_TOLERANCE")) {
        try {
            ctx.tol.residual_eps = std::stod(v);
        } catch (...) {
            err << "ignoring unparsable SPHAERICA_TOLERANCE\n";
        }
    }
    if (tolerance > 0.0) ctx.tol.residual_eps = tolerance;  // flag wins over env

    try {
        ctx.tol.validate();

        json parsed;
        bool payload_from_flags = command == "solid-angle" && flag_n.has_value();
        if (payload_from_flags) {
            parsed = json{{"n", *flag_n}};
            if (flag_a) parsed["a"] = *flag_a;
        } else if (!input_path.empty()) {
            std::ifstream f(input_path, std::ios::binary);
            if (!f) throw IoFailure("cannot open input file: " + input_path);
            std::ostringstream buf;
            buf << f.rdbuf();
            parsed = json::parse(buf.str());
        } else {
            std::ostringstream buf;
            buf << in.rdbuf();
            std::string text = buf.str();
            parsed = text.empty() ? json::object() : json::parse(text);
        }
        RequestEnvelope request = RequestEnvelope::from_input(command, std::move(parsed));
        ctx.payload = request.payload;
        if (request.units == "degrees") ctx.degrees = true;

        if (command == "solve") env = handle_solve(ctx);
        else if (command == "area") env = handle_area(ctx);
        else if (command == "solid-angle") env = handle_solid_angle(ctx);
        else if (command == "lexell") env = handle_lexell(ctx);
        else if (command == "cevian") env = handle_cevian(ctx);
        else if (command == "pappus") env = handle_pappus(ctx);
        else if (command == "apollonius2") env = handle_apollonius2(ctx);
        else if (command == "apollonius3") env = handle_apollonius3(ctx);
        else if (command == "geodist") env = handle_geodist(ctx);
    } catch (const json::exception& e) {
        env.status = Status::invalid_input;
        env.diagnostics.push_back(std::string("JSON parse error: ") + e.what());
    } catch (const Error& e) {
        env.status = e.status();
        env.diagnostics.push_back(e.what());
    } catch (const std::exception& e) {
        env.status = Status::invalid_input;
        env.diagnostics.push_back(std::string("error: ") + e.what());
    }

    for (const auto& d : env.diagnostics) err << d.get<std::string>() << "\n";
    if (json_output)
        out << env.to_json().dump(2) << "\n";
    else
        out << human_summary(command, env);
    return exit_code(env.status);
}

}  // namespace sphaerica::cli
