#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "sphaerica/angle.hpp"
#include "sphaerica/core.hpp"
#include "sphaerica/errors.hpp"

namespace sphaerica {

namespace detail {

inline double acos_clamped(double x) { return std::acos(clamp_unit(x)); }

/// Angle in (0, pi) with tan = y/x.  atan2 lands in (-pi, pi]; shifting the
/// non-positive branch by pi folds it into the element range.
inline double angle_from_tan(double y, double x) {
    double t = std::atan2(y, x);
    if (t <= 0.0) t += kPi;
    return t;
}

inline bool in_open_0_pi(double v) { return std::isfinite(v) && v > 0.0 && v < kPi; }

}  // namespace detail

/// The six elements of a spherical triangle: sides a, b, c and opposite
/// angles A, B, C, all in (0, pi).  Construction enforces the side and
/// angle-sum windows plus the law-of-cosines and sine-rule residuals, so a
/// TriangleData is always a consistent triangle.
class TriangleData {
public:
    TriangleData(Angle a, Angle b, Angle c, Angle A, Angle B, Angle C)
        : a_(a), b_(b), c_(c), A_(A), B_(B), C_(C) {
        validate();
    }

    Angle a() const { return a_; }
    Angle b() const { return b_; }
    Angle c() const { return c_; }
    Angle A() const { return A_; }
    Angle B() const { return B_; }
    Angle C() const { return C_; }

    /// Elements in the fixed order a, b, c, A, B, C.
    std::array<Angle, 6> elements() const { return {a_, b_, c_, A_, B_, C_}; }

    double spherical_excess() const {
        return A_.radians() + B_.radians() + C_.radians() - kPi;
    }

private:
    void validate() const {
        for (Angle e : elements())
            if (!e.is_triangle_element())
                throw InvalidTriangle("triangle element outside (0, pi)");

        double a = a_.radians(), b = b_.radians(), c = c_.radians();
        if (a + b + c >= kTwoPi)
            throw InvalidTriangle("side sum must be below 2*pi");
        if (a >= b + c || b >= a + c || c >= a + b)
            throw InvalidTriangle("side triple violates the triangle inequality");

        double excess = spherical_excess();
        if (excess <= 0.0 || excess >= kTwoPi)
            throw InvalidTriangle("spherical excess outside (0, 2*pi)");

        if (law_of_cosines_residual() > 1e-9)
            throw InvalidTriangle("law-of-cosines residual too large");
        if (sine_rule_residual() > 1e-9)
            throw InvalidTriangle("sine-rule residual too large");
    }

public:
    double law_of_cosines_residual() const {
        auto res = [](Angle x, Angle y, Angle z, Angle Z) {
            return std::fabs(cos(z) - cos(x) * cos(y) - sin(x) * sin(y) * cos(Z));
        };
        double r = res(a_, b_, c_, C_);
        r = std::max(r, res(b_, c_, a_, A_));
        r = std::max(r, res(c_, a_, b_, B_));
        return r;
    }

    double sine_rule_residual() const {
        double r = std::fabs(sin(A_) * sin(b_) - sin(B_) * sin(a_));
        r = std::max(r, std::fabs(sin(B_) * sin(c_) - sin(C_) * sin(b_)));
        r = std::max(r, std::fabs(sin(C_) * sin(a_) - sin(A_) * sin(c_)));
        return r;
    }

private:
    Angle a_, b_, c_, A_, B_, C_;
};

enum class SolvePattern { sss, sas, asa, aas, ssa, aaa };

inline const char* to_string(SolvePattern p) {
    switch (p) {
        case SolvePattern::sss: return "SSS";
        case SolvePattern::sas: return "SAS";
        case SolvePattern::asa: return "ASA";
        case SolvePattern::aas: return "AAS";
        case SolvePattern::ssa: return "SSA";
        case SolvePattern::aaa: return "AAA";
    }
    return "?";
}

/// A partial triangle: exactly three of the six slots populated.
struct SolveRequest {
    std::optional<Angle> a, b, c, A, B, C;

    std::array<std::optional<Angle>, 6> slots() const { return {a, b, c, A, B, C}; }

    int populated_count() const {
        int n = 0;
        for (const auto& s : slots())
            if (s) ++n;
        return n;
    }

    void validate() const {
        if (populated_count() != 3)
            throw InvalidInput("SolveRequest: exactly three elements must be given");
        for (const auto& s : slots())
            if (s && !s->is_triangle_element())
                throw InvalidInput("SolveRequest: given elements must lie in (0, pi)");
    }

    SolvePattern classify() const {
        validate();
        int sides = (a ? 1 : 0) + (b ? 1 : 0) + (c ? 1 : 0);
        switch (sides) {
            case 3: return SolvePattern::sss;
            case 0: return SolvePattern::aaa;
            case 2: {
                // Which angle is given?  Opposite the missing side -> included.
                int missing_side = !a ? 0 : (!b ? 1 : 2);
                std::array<bool, 3> ang = {A.has_value(), B.has_value(), C.has_value()};
                return ang[static_cast<size_t>(missing_side)] ? SolvePattern::sas
                                                              : SolvePattern::ssa;
            }
            default: {
                int given_side = a ? 0 : (b ? 1 : 2);
                std::array<bool, 3> ang = {A.has_value(), B.has_value(), C.has_value()};
                return ang[static_cast<size_t>(given_side)] ? SolvePattern::aas
                                                            : SolvePattern::asa;
            }
        }
    }
};

/// cos c = cos a cos b + sin a sin b cos C
inline Angle side_from_sas(Angle a, Angle b, Angle C, const Tolerances& tol = {}) {
    require_triangle_element(a, "a");
    require_triangle_element(b, "b");
    require_triangle_element(C, "C");
    double c = detail::acos_clamped(cos(a) * cos(b) + sin(a) * sin(b) * cos(C));
    if (c < tol.abs_eps || c > kPi - tol.abs_eps)
        throw DegenerateInput("side_from_sas: resulting side is 0 or pi");
    return Angle(c);
}

/// cos A = (cos a - cos b cos c) / (sin b sin c); inverse of side_from_sas.
inline Angle angle_from_sss(Angle a, Angle b, Angle c) {
    for (Angle s : {a, b, c}) require_triangle_element(s, "side");
    double sa = a.radians(), sb = b.radians(), sc = c.radians();
    if (sa + sb + sc >= kTwoPi || sa >= sb + sc || sb >= sa + sc || sc >= sa + sb)
        throw InvalidTriangle("angle_from_sss: side triple is not a triangle");
    return Angle(detail::acos_clamped((cos(a) - cos(b) * cos(c)) / (sin(b) * sin(c))));
}

/// cos BC by sum/difference expansion of the SAS rule:
///   [cos(AB-AC) + cos(AB+AC)]/2 + cos A * [cos(AB-AC) - cos(AB+AC)]/2
inline double sas_expanded(Angle AB, Angle AC, Angle A) {
    double sum = AB.radians() + AC.radians();
    double dif = AB.radians() - AC.radians();
    return 0.5 * (std::cos(dif) + std::cos(sum)) +
           0.5 * cos(A) * (std::cos(dif) - std::cos(sum));
}

/// Polar (dual) triangle: sides become supplements of the angles and vice
/// versa.  An involution.
inline TriangleData polar_triangle(const TriangleData& t) {
    return TriangleData(supplement(t.A()), supplement(t.B()), supplement(t.C()),
                        supplement(t.a()), supplement(t.b()), supplement(t.c()));
}

namespace detail {

// Candidate element sets (a, b, c, A, B) for a right triangle with C = pi/2;
// invalid branches are filtered by TriangleData validation afterwards.
using RightCandidate = std::array<double, 5>;

inline void right_from_legs(double a, double b, std::vector<RightCandidate>& out) {
    double c = acos_clamped(std::cos(a) * std::cos(b));
    double A = angle_from_tan(std::sin(a), std::cos(a) * std::sin(b));
    double B = angle_from_tan(std::sin(b), std::cos(b) * std::sin(a));
    out.push_back({a, b, c, A, B});
}

inline void right_from_leg_hyp(double a, double c, const Tolerances& tol,
                               std::vector<RightCandidate>& out) {
    if (std::fabs(std::cos(a)) < tol.abs_eps && std::fabs(std::cos(c)) < tol.abs_eps)
        throw DegenerateInput("solve_right: a = c = pi/2 is underdetermined");
    double q = std::sin(a) / std::sin(c);
    if (q > 1.0 + tol.abs_eps) return;
    // a and A fall on the same side of pi/2 (cos A = cos a sin B, sin B > 0)
    double A = std::asin(clamp_unit(q));
    if (std::cos(a) < 0.0) A = kPi - A;
    double b = acos_clamped(std::cos(c) / std::cos(a));
    double B = angle_from_tan(std::sin(b), std::cos(b) * std::sin(a));
    out.push_back({a, b, c, A, B});
}

inline void right_from_leg_opp(double a, double A, const Tolerances& tol,
                               std::vector<RightCandidate>& out) {
    if (std::fabs(std::cos(a)) < tol.abs_eps && std::fabs(std::cos(A)) < tol.abs_eps)
        throw DegenerateInput("solve_right: a = A = pi/2 is underdetermined");
    double q = std::sin(a) / std::sin(A);
    if (q > 1.0 + tol.abs_eps) return;
    double c0 = std::asin(clamp_unit(q));
    for (double c : {c0, kPi - c0}) {  // the ambiguous pair
        double b = acos_clamped(std::cos(c) / std::cos(a));
        double B = acos_clamped(std::cos(b) * std::sin(A));
        out.push_back({a, b, c, A, B});
    }
}

inline void right_from_leg_adj(double a, double B, std::vector<RightCandidate>& out) {
    double c = angle_from_tan(std::sin(a), std::cos(a) * std::cos(B));
    double b = angle_from_tan(std::sin(a) * std::sin(B), std::cos(B));
    double A = acos_clamped(std::cos(a) * std::sin(B));
    out.push_back({a, b, c, A, B});
}

inline void right_from_hyp_angle(double c, double A, const Tolerances& tol,
                                 std::vector<RightCandidate>& out) {
    if (std::fabs(std::cos(c)) < tol.abs_eps && std::fabs(std::cos(A)) < tol.abs_eps)
        throw DegenerateInput("solve_right: c = A = pi/2 is underdetermined");
    double q = std::sin(c) * std::sin(A);
    double a = std::asin(clamp_unit(q));
    if (std::cos(A) < 0.0) a = kPi - a;
    double b = angle_from_tan(std::sin(c) * std::cos(A), std::cos(c));
    double B = angle_from_tan(std::cos(A), std::cos(c) * std::sin(A));
    out.push_back({a, b, c, A, B});
}

inline void right_from_angles(double A, double B, std::vector<RightCandidate>& out) {
    double c = acos_clamped((std::cos(A) / std::sin(A)) * (std::cos(B) / std::sin(B)));
    double a = acos_clamped(std::cos(A) / std::sin(B));
    double b = acos_clamped(std::cos(B) / std::sin(A));
    out.push_back({a, b, c, A, B});
}

inline RightCandidate swap_ab(const RightCandidate& r) {
    return {r[1], r[0], r[2], r[4], r[3]};
}

inline bool triangles_equal(const TriangleData& s, const TriangleData& t, double eps) {
    auto es = s.elements(), et = t.elements();
    for (size_t i = 0; i < 6; ++i)
        if (std::fabs(es[i].radians() - et[i].radians()) > eps) return false;
    return true;
}

inline void push_unique(std::vector<TriangleData>& out, const TriangleData& t) {
    for (const auto& s : out)
        if (triangles_equal(s, t, 1e-9)) return;
    out.push_back(t);
}

}  // namespace detail

/// Solve a right triangle (C = pi/2) from two further elements, via the
/// Napier relations.  Returns every consistent triangle (one or two);
/// throws NoSolution when the givens are infeasible.
inline std::vector<TriangleData> solve_right(const SolveRequest& req,
                                             const Tolerances& tol = {}) {
    if (req.C && std::fabs(req.C->radians() - kPi / 2.0) > tol.abs_eps)
        throw InvalidInput("solve_right: C must be pi/2 (or left empty)");
    int given = (req.a ? 1 : 0) + (req.b ? 1 : 0) + (req.c ? 1 : 0) +
                (req.A ? 1 : 0) + (req.B ? 1 : 0);
    if (given != 2)
        throw InvalidInput("solve_right: exactly two non-right elements required");
    for (const auto& s : {req.a, req.b, req.c, req.A, req.B})
        if (s && !s->is_triangle_element())
            throw InvalidInput("solve_right: given elements must lie in (0, pi)");

    using namespace detail;
    std::vector<RightCandidate> cands;
    bool swapped = false;

    auto rad = [](const std::optional<Angle>& x) { return x->radians(); };

    if (req.a && req.b) right_from_legs(rad(req.a), rad(req.b), cands);
    else if (req.a && req.c) right_from_leg_hyp(rad(req.a), rad(req.c), tol, cands);
    else if (req.b && req.c) { right_from_leg_hyp(rad(req.b), rad(req.c), tol, cands); swapped = true; }
    else if (req.a && req.A) right_from_leg_opp(rad(req.a), rad(req.A), tol, cands);
    else if (req.b && req.B) { right_from_leg_opp(rad(req.b), rad(req.B), tol, cands); swapped = true; }
    else if (req.a && req.B) right_from_leg_adj(rad(req.a), rad(req.B), cands);
    else if (req.b && req.A) { right_from_leg_adj(rad(req.b), rad(req.A), cands); swapped = true; }
    else if (req.c && req.A) right_from_hyp_angle(rad(req.c), rad(req.A), tol, cands);
    else if (req.c && req.B) { right_from_hyp_angle(rad(req.c), rad(req.B), tol, cands); swapped = true; }
    else right_from_angles(rad(req.A), rad(req.B), cands);

    std::vector<TriangleData> out;
    for (auto cand : cands) {
        if (swapped) cand = swap_ab(cand);
        bool in_range = true;
        for (double v : cand)
            if (!in_open_0_pi(v)) in_range = false;
        if (!in_range) continue;
        try {
            push_unique(out, TriangleData(Angle(cand[0]), Angle(cand[1]), Angle(cand[2]),
                                          Angle(cand[3]), Angle(cand[4]), Angle(kPi / 2.0)));
        } catch (const Error&) {
            // spurious algebraic branch
        }
    }
    if (out.empty()) throw NoSolution("solve_right: no right triangle matches the givens");
    return out;
}

namespace detail {

inline void complete_from_sides(double a, double b, double c,
                                std::vector<TriangleData>& out) {
    if (!in_open_0_pi(a) || !in_open_0_pi(b) || !in_open_0_pi(c)) return;
    try {
        Angle A = angle_from_sss(Angle(a), Angle(b), Angle(c));
        Angle B = angle_from_sss(Angle(b), Angle(c), Angle(a));
        Angle C = angle_from_sss(Angle(c), Angle(a), Angle(b));
        push_unique(out, TriangleData(Angle(a), Angle(b), Angle(c), A, B, C));
    } catch (const Error&) {
    }
}

// SSA kernel: sides u, v and angle U opposite u are known; solve
//   cos u = cos v cos w + sin v sin w cos U
// for w, i.e. R cos(w - phi) = cos u.  The roots are phi +- delta taken
// modulo 2*pi; zero, one or two of them land in (0, pi).
inline std::vector<double> ssa_third_sides(double u, double v, double U) {
    double y = std::sin(v) * std::cos(U);
    double x = std::cos(v);
    double R = std::hypot(x, y);
    std::vector<double> roots;
    if (R < 1e-300) return roots;
    double ratio = std::cos(u) / R;
    if (std::fabs(ratio) > 1.0 + 1e-12) return roots;
    double phi = std::atan2(y, x);
    double delta = acos_clamped(ratio);
    for (double w : {phi + delta, phi - delta}) {
        w -= kTwoPi * std::floor(w / kTwoPi);
        if (in_open_0_pi(w)) {
            bool seen = false;
            for (double r : roots)
                if (std::fabs(r - w) < 1e-14) seen = true;
            if (!seen) roots.push_back(w);
        }
    }
    return roots;
}

}  // namespace detail

std::vector<TriangleData> solve(const SolveRequest& req, const Tolerances& tol);

namespace detail {

// Dual request: each given angle becomes a polar side, each given side a
// polar angle; AAA/ASA/AAS reduce to SSS/SAS/SSA this way.
inline SolveRequest polar_request(const SolveRequest& req) {
    SolveRequest p;
    auto sup = [](const std::optional<Angle>& x) -> std::optional<Angle> {
        if (!x) return std::nullopt;
        return supplement(*x);
    };
    p.a = sup(req.A); p.b = sup(req.B); p.c = sup(req.C);
    p.A = sup(req.a); p.B = sup(req.b); p.C = sup(req.c);
    return p;
}

}  // namespace detail

/// General solver: returns every spherical triangle consistent with the
/// three given elements.  SSS/AAA admit at most one solution, SAS/ASA
/// exactly one, SSA/AAS up to two (the ambiguous case).  AAA, ASA and AAS
/// are solved on the polar triangle.
inline std::vector<TriangleData> solve(const SolveRequest& req,
                                       const Tolerances& tol = {}) {
    using namespace detail;
    SolvePattern pattern = req.classify();
    std::vector<TriangleData> out;

    switch (pattern) {
        case SolvePattern::sss:
            complete_from_sides(req.a->radians(), req.b->radians(), req.c->radians(), out);
            break;
        case SolvePattern::sas: {
            // Given sides i, j and the included angle (opposite side k).
            std::array<std::optional<Angle>, 3> s = {req.a, req.b, req.c};
            std::array<std::optional<Angle>, 3> g = {req.A, req.B, req.C};
            size_t k = !s[0] ? 0 : (!s[1] ? 1 : 2);
            try {
                Angle third = side_from_sas(*s[(k + 1) % 3], *s[(k + 2) % 3], *g[k], tol);
                s[k] = third;
                complete_from_sides(s[0]->radians(), s[1]->radians(), s[2]->radians(), out);
            } catch (const DegenerateInput&) {
            }
            break;
        }
        case SolvePattern::ssa: {
            // Sides i, j given; the angle sits opposite one of them.
            std::array<std::optional<Angle>, 3> s = {req.a, req.b, req.c};
            std::array<std::optional<Angle>, 3> g = {req.A, req.B, req.C};
            size_t k = !s[0] ? 0 : (!s[1] ? 1 : 2);  // unknown side
            size_t i = g[(k + 1) % 3] ? (k + 1) % 3 : (k + 2) % 3;  // angle index
            size_t j = 3 - k - i;
            for (double w : ssa_third_sides(s[i]->radians(), s[j]->radians(), g[i]->radians())) {
                s[k] = Angle(w);
                complete_from_sides(s[0]->radians(), s[1]->radians(), s[2]->radians(), out);
            }
            // Keep only candidates that reproduce the given angle.
            std::erase_if(out, [&](const TriangleData& t) {
                std::array<Angle, 3> ang = {t.A(), t.B(), t.C()};
                return std::fabs(ang[i].radians() - g[i]->radians()) > 1e-8;
            });
            break;
        }
        case SolvePattern::aaa:
        case SolvePattern::asa:
        case SolvePattern::aas: {
            for (const auto& pt : solve(polar_request(req), tol))
                push_unique(out, polar_triangle(pt));
            break;
        }
    }

    if (out.empty()) throw NoSolution(std::string("solve: no triangle matches the ") +
                                      to_string(pattern) + " givens");
    return out;
}

/// Lobachevsky substitution a -> a*sqrt(-1) applied to the SAS cosine rule:
///   cosh c = cosh a cosh b - sinh a sinh b cos C.
/// Returns the hyperbolic side length c > 0.
inline double hyperbolic_side_from_sas(double a, double b, Angle C) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw InvalidInput("hyperbolic_side_from_sas: sides must be positive");
    require_triangle_element(C, "C");
    double rhs = std::cosh(a) * std::cosh(b) - std::sinh(a) * std::sinh(b) * cos(C);
    return std::acosh(std::max(1.0, rhs));
}

}  // namespace sphaerica
