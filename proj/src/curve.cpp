#include "chordarc/curve.hpp"

#include <algorithm>
#include <cmath>

#include "chordarc/errors.hpp"

namespace chordarc {

namespace {

double wrap_mod(double s, double L) {
    double r = std::fmod(s, L);
    if (r < 0.0) r += L;
    return r;
}

}  // namespace

void Curve::locate(int component, double s, int& edge, double& offset) const {
    const Component& c = components_[static_cast<std::size_t>(component)];
    if (c.closed) {
        s = wrap_mod(s, c.length);
    } else if (s < -1e-12 || s > c.length + 1e-12) {
        throw OutOfRange("arclength " + std::to_string(s) + " outside open component of length " +
                         std::to_string(c.length));
    } else {
        s = std::clamp(s, 0.0, c.length);
    }
    auto it = std::upper_bound(c.cum.begin(), c.cum.end(), s);
    edge = std::clamp(static_cast<int>(it - c.cum.begin()) - 1, 0, c.nedges - 1);
    offset = s - c.cum[static_cast<std::size_t>(edge)];
}

void Curve::position_at(int component, double s, std::span<double> out) const {
    int e;
    double off;
    locate(component, s, e, off);
    const Component& c = components_[static_cast<std::size_t>(component)];
    const auto a = c.vertex(e, dim_);
    const auto u = edge_dir(component, e);
    for (int i = 0; i < dim_; ++i) out[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + off * u[static_cast<std::size_t>(i)];
}

CurvePoint Curve::point_at(int component, double s) const {
    int e;
    double off;
    locate(component, s, e, off);
    const Component& c = components_[static_cast<std::size_t>(component)];

    CurvePoint p;
    p.component = component;
    p.s = c.closed ? wrap_mod(s, c.length) : std::clamp(s, 0.0, c.length);

    // Snap to the vertex when the offset lands within rounding of it, so that
    // corner detection is stable at exactly-queried vertex arclengths.
    const double snap = 1e-12 * std::max(1.0, c.length);
    if (off >= c.edge_length(e) - snap && (c.closed || e + 1 < c.nedges)) {
        e = (e + 1) % c.nedges;
        off = 0.0;
    }

    const auto a = c.vertex(e, dim_);
    const auto u = edge_dir(component, e);
    p.position.resize(static_cast<std::size_t>(dim_));
    p.tangent.assign(u.begin(), u.end());
    for (int i = 0; i < dim_; ++i) p.position[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + off * u[static_cast<std::size_t>(i)];

    if (off <= snap) {
        const bool interior_vertex = c.closed || e > 0;
        if (interior_vertex) {
            const int prev = (e + c.nedges - 1) % c.nedges;
            const auto up = edge_dir(component, prev);
            double d = 0.0;
            for (int i = 0; i < dim_; ++i) d += up[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(i)];
            p.at_corner = std::acos(std::clamp(d, -1.0, 1.0)) > kCornerAngle;
        }
    }
    return p;
}

void Curve::smoothed_tangent_at(int component, double s, std::span<double> out) const {
    int e;
    double off;
    locate(component, s, e, off);
    const Component& c = components_[static_cast<std::size_t>(component)];
    const double len = c.edge_length(e);
    const double w = std::clamp(off / len, 0.0, 1.0);
    const int i1 = c.closed ? (e + 1) % c.nverts : e + 1;
    const auto t0 = vertex_tangent(component, e);
    const auto t1 = vertex_tangent(component, i1);
    for (int i = 0; i < dim_; ++i)
        out[static_cast<std::size_t>(i)] = (1.0 - w) * t0[static_cast<std::size_t>(i)] + w * t1[static_cast<std::size_t>(i)];
    normalize(out);
}

double Curve::chord(CurveLoc a, CurveLoc b) const {
    // stack buffers keep the pair scans allocation-free for dim <= 16
    double bufa[16], bufb[16];
    if (dim_ <= 16) {
        position_at(a.component, a.s, {bufa, static_cast<std::size_t>(dim_)});
        position_at(b.component, b.s, {bufb, static_cast<std::size_t>(dim_)});
        return dist({bufa, static_cast<std::size_t>(dim_)}, {bufb, static_cast<std::size_t>(dim_)});
    }
    Vec pa(static_cast<std::size_t>(dim_)), pb(static_cast<std::size_t>(dim_));
    position_at(a.component, a.s, pa);
    position_at(b.component, b.s, pb);
    return dist(pa, pb);
}

double Curve::arc_between(CurveLoc a, CurveLoc b) const {
    if (a.component != b.component) return kInfinite;
    const Component& c = components_[static_cast<std::size_t>(a.component)];
    if (c.closed) {
        const double d = std::fabs(wrap_mod(a.s, c.length) - wrap_mod(b.s, c.length));
        return std::min(d, c.length - d);
    }
    return std::fabs(a.s - b.s);
}

Curve build_curve(const std::vector<std::vector<Vec>>& vertex_lists,
                  const std::vector<bool>& closed_flags, bool smooth_sampling) {
    if (vertex_lists.empty()) throw DegenerateComponent("curve needs at least one component");
    if (vertex_lists.size() != closed_flags.size())
        throw DimensionMismatch("one closed flag per component required");

    Curve curve;
    curve.smooth_sampling_ = smooth_sampling;

    int dim = -1;
    for (const auto& list : vertex_lists) {
        if (list.empty()) throw DegenerateComponent("empty vertex list");
        for (const auto& v : list) {
            if (dim < 0) dim = static_cast<int>(v.size());
            if (static_cast<int>(v.size()) != dim)
                throw DimensionMismatch("vertices of mixed ambient dimension");
        }
    }
    if (dim < 2) throw DimensionMismatch("ambient dimension must be at least 2");
    curve.dim_ = dim;

    for (std::size_t ci = 0; ci < vertex_lists.size(); ++ci) {
        const auto& list = vertex_lists[ci];
        const bool closed = closed_flags[ci];

        // collapse consecutive duplicates, including the closing wrap
        std::vector<Vec> verts;
        verts.reserve(list.size());
        for (const auto& v : list) {
            if (!verts.empty() && dist(verts.back(), v) < 1e-12) continue;
            verts.push_back(v);
        }
        if (closed && verts.size() > 1 && dist(verts.front(), verts.back()) < 1e-12)
            verts.pop_back();

        const std::size_t min_verts = closed ? 3 : 2;
        if (verts.size() < min_verts)
            throw DegenerateComponent("component " + std::to_string(ci) + " has fewer than " +
                                      std::to_string(min_verts) + " distinct vertices");

        Curve::Component comp;
        comp.closed = closed;
        comp.nverts = static_cast<int>(verts.size());
        comp.nedges = closed ? comp.nverts : comp.nverts - 1;
        comp.pts.resize(verts.size() * static_cast<std::size_t>(dim));
        for (std::size_t i = 0; i < verts.size(); ++i)
            std::copy(verts[i].begin(), verts[i].end(), comp.pts.begin() + static_cast<std::ptrdiff_t>(i * static_cast<std::size_t>(dim)));

        std::vector<double> dirs(static_cast<std::size_t>(comp.nedges) * static_cast<std::size_t>(dim));
        comp.cum.resize(static_cast<std::size_t>(comp.nedges) + 1);
        comp.cum[0] = 0.0;
        for (int e = 0; e < comp.nedges; ++e) {
            const auto a = comp.vertex(e, dim);
            const auto b = comp.vertex((e + 1) % comp.nverts, dim);
            double len2 = 0.0;
            for (int i = 0; i < dim; ++i) {
                const double d = b[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(i)];
                dirs[static_cast<std::size_t>(e) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(i)] = d;
                len2 += d * d;
            }
            const double len = std::sqrt(len2);
            for (int i = 0; i < dim; ++i) dirs[static_cast<std::size_t>(e) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(i)] /= len;
            comp.cum[static_cast<std::size_t>(e) + 1] = comp.cum[static_cast<std::size_t>(e)] + len;
        }
        comp.length = comp.cum.back();

        // averaged vertex tangents for the smooth interpolant
        std::vector<double> vt(static_cast<std::size_t>(comp.nverts) * static_cast<std::size_t>(dim));
        for (int i = 0; i < comp.nverts; ++i) {
            const int enext = (i < comp.nedges) ? i : comp.nedges - 1;
            const int eprev = closed ? (i + comp.nedges - 1) % comp.nedges : i - 1;
            for (int k = 0; k < dim; ++k) {
                double t = dirs[static_cast<std::size_t>(enext) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(k)];
                if (eprev >= 0 && i < comp.nedges)
                    t += dirs[static_cast<std::size_t>(eprev) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(k)];
                vt[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(k)] = t;
            }
            std::span<double> ti{vt.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
            if (norm(ti) < 1e-12) {
                // hairpin reversal: fall back to the outgoing edge direction
                for (int k = 0; k < dim; ++k)
                    ti[static_cast<std::size_t>(k)] = dirs[static_cast<std::size_t>(enext) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(k)];
            }
            normalize(ti);
        }

        curve.total_length_ += comp.length;
        curve.components_.push_back(std::move(comp));
        curve.edge_dirs_.push_back(std::move(dirs));
        curve.vertex_tangents_.push_back(std::move(vt));
    }
    return curve;
}

CurvePoint point_at(const Curve& curve, int component, double s) {
    return curve.point_at(component, s);
}

double arc_distance(const Curve& curve, const CurvePoint& a, const CurvePoint& b) {
    return curve.arc_between({a.component, a.s}, {b.component, b.s});
}

CurvePoint opposite_point(const Curve& curve, const CurvePoint& p) {
    const auto& c = curve.component(p.component);
    if (!c.closed) throw NotClosed("opposite point requires a closed component");
    return curve.point_at(p.component, p.s + 0.5 * c.length);
}

CorneredCurvature min_radius_of_curvature(const Curve& curve) {
    CorneredCurvature out;
    const int dim = curve.dimension();
    for (int ci = 0; ci < curve.component_count(); ++ci) {
        const auto& c = curve.component(ci);
        const int n = c.nverts;
        const int first = c.closed ? 0 : 1;
        const int last = c.closed ? n : n - 1;
        for (int i = first; i < last; ++i) {
            const auto a = c.vertex((i + n - 1) % n, dim);
            const auto b = c.vertex(i, dim);
            const auto d = c.vertex((i + 1) % n, dim);
            out.min_circumradius = std::min(out.min_circumradius, circumradius(a, b, d));
            const int eprev = (i + c.nedges - 1) % c.nedges;
            const int enext = i % c.nedges;
            const double cosang =
                std::clamp(dot(curve.edge_dir(ci, eprev), curve.edge_dir(ci, enext)), -1.0, 1.0);
            out.sharpest_external_angle = std::max(out.sharpest_external_angle, std::acos(cosang));
        }
    }
    out.is_c11_proxy = out.sharpest_external_angle <= kCornerAngle;
    return out;
}

double effective_min_radius(const Curve& curve, const CorneredCurvature& cc) {
    if (!curve.smooth_sampling() && cc.sharpest_external_angle > kCornerAngle) return 0.0;
    return cc.min_circumradius;
}

}  // namespace chordarc
