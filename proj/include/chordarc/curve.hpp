#pragma once

#include <optional>
#include <span>
#include <vector>

#include "chordarc/geometry.hpp"

namespace chordarc {

// Location on a curve: component index plus arclength along it. The scan
// kernels pass these around instead of materialized points.
struct CurveLoc {
    int component = 0;
    double s = 0.0;
};

// A point on the curve resolved to coordinates. `tangent` is the direction of
// the containing edge; when `s` lands on an interior vertex the outgoing edge
// is used and `at_corner` is set, so callers that need both one-sided
// directions can ask the curve for them explicitly.
struct CurvePoint {
    int component = 0;
    double s = 0.0;
    Vec position;
    Vec tangent;
    bool at_corner = false;
};

// Discrete curvature summary: minimum circumradius over consecutive vertex
// triples, plus the sharpest turning angle seen at any vertex.
struct CorneredCurvature {
    double min_circumradius = kInfinite;
    double sharpest_external_angle = 0.0;
    bool is_c11_proxy = true;  // sharpest external angle below the corner threshold
};

// External angles above this mark a genuine corner when the curve is a
// declared polygon (smooth_sampling == false).
inline constexpr double kCornerAngle = 1e-3;

// Polyline curve or link. Immutable after construction; all queries are
// const and safe to call concurrently.
class Curve {
public:
    struct Component {
        std::vector<double> pts;  // nverts x dim, row-major
        bool closed = true;
        std::vector<double> cum;  // cumulative arclength, size nedges+1, cum[0]=0
        double length = 0.0;
        int nverts = 0;
        int nedges = 0;

        std::span<const double> vertex(int i, int dim) const {
            return {pts.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
        }
        double edge_length(int e) const {
            return cum[static_cast<std::size_t>(e) + 1] - cum[static_cast<std::size_t>(e)];
        }
    };

    Curve() = default;

    int dimension() const { return dim_; }
    bool smooth_sampling() const { return smooth_sampling_; }
    void set_smooth_sampling(bool v) { smooth_sampling_ = v; }
    int component_count() const { return static_cast<int>(components_.size()); }
    const Component& component(int i) const { return components_[static_cast<std::size_t>(i)]; }
    double total_length() const { return total_length_; }

    // Resolve an arclength to (edge index, offset within edge). Wraps modulo
    // the component length when closed; throws OutOfRange for open components.
    void locate(int component, double s, int& edge, double& offset) const;

    CurvePoint point_at(int component, double s) const;
    void position_at(int component, double s, std::span<double> out) const;

    // Unit direction of edge e of a component.
    std::span<const double> edge_dir(int component, int e) const {
        const auto& d = edge_dirs_[static_cast<std::size_t>(component)];
        return {d.data() + static_cast<std::size_t>(e) * dim_, static_cast<std::size_t>(dim_)};
    }

    // Tangent at vertex i, averaged over the adjacent edges. Open endpoints
    // use the single incident edge. This is the C^1 interpolant tangent used
    // by criticality scans on sampled smooth curves.
    std::span<const double> vertex_tangent(int component, int i) const {
        const auto& d = vertex_tangents_[static_cast<std::size_t>(component)];
        return {d.data() + static_cast<std::size_t>(i) * dim_, static_cast<std::size_t>(dim_)};
    }

    // Interpolated unit tangent at arclength s (normalized lerp between the
    // vertex tangents of the containing edge).
    void smoothed_tangent_at(int component, double s, std::span<double> out) const;

    double chord(CurveLoc a, CurveLoc b) const;
    double arc_between(CurveLoc a, CurveLoc b) const;  // +inf across components

    friend Curve build_curve(const std::vector<std::vector<Vec>>& vertex_lists,
                             const std::vector<bool>& closed_flags, bool smooth_sampling);

private:
    int dim_ = 0;
    bool smooth_sampling_ = true;
    double total_length_ = 0.0;
    std::vector<Component> components_;
    std::vector<std::vector<double>> edge_dirs_;        // per component, nedges x dim
    std::vector<std::vector<double>> vertex_tangents_;  // per component, nverts x dim
};

// Build a curve from per-component vertex lists. Consecutive duplicate
// vertices are collapsed (including the closing wrap); components that fall
// below the minimum vertex count (3 closed / 2 open) are rejected.
Curve build_curve(const std::vector<std::vector<Vec>>& vertex_lists,
                  const std::vector<bool>& closed_flags, bool smooth_sampling = true);

CurvePoint point_at(const Curve& curve, int component, double s);

// Arclength distance measured the shorter way around closed components;
// +infinity when the points lie on different components.
double arc_distance(const Curve& curve, const CurvePoint& a, const CurvePoint& b);

// The point at arclength s + L/2 on the same closed component.
CurvePoint opposite_point(const Curve& curve, const CurvePoint& p);

CorneredCurvature min_radius_of_curvature(const Curve& curve);

// Effective minimum radius of curvature: zero for a declared polygon with a
// genuine corner, the circumradius estimate otherwise.
double effective_min_radius(const Curve& curve, const CorneredCurvature& cc);

}  // namespace chordarc
