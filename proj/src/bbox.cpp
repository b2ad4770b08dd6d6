#include "dualtrack/bbox.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace dualtrack::bbox {

namespace {

std::vector<Vec2> sorted_copy(std::span<const Vec2> pts, auto less) {
    std::vector<Vec2> v(pts.begin(), pts.end());
    std::stable_sort(v.begin(), v.end(), less);
    return v;
}

Vec2 mean_of_first(const std::vector<Vec2>& pts, int count) {
    const int n = std::min<int>(count, static_cast<int>(pts.size()));
    Vec2 sum;
    for (int i = 0; i < n; ++i) sum += pts[i];
    return {sum.x / n, sum.y / n};
}

}  // namespace

Vec2 anchor_point(std::span<const Vec2> accepted, int p, AnchorOrder order) {
    if (accepted.empty()) throw std::invalid_argument("anchor_point: no accepted particles");
    if (p < 1) throw std::invalid_argument("anchor_point: p must be >= 1");
    auto sorted = order == AnchorOrder::sum_xy
                      ? sorted_copy(accepted,
                                    [](Vec2 a, Vec2 b) {
                                        if (a.x + a.y != b.x + b.y) return a.x + a.y < b.x + b.y;
                                        if (a.x != b.x) return a.x < b.x;
                                        return a.y < b.y;
                                    })
                      : sorted_copy(accepted, [](Vec2 a, Vec2 b) {
                            if (a.x != b.x) return a.x < b.x;
                            return a.y < b.y;
                        });
    const Vec2 mean = mean_of_first(sorted, p);
    return {std::ceil(mean.x), std::ceil(mean.y)};
}

Vec2 extent_points(std::span<const Vec2> accepted, int count, ExtentMode mode) {
    if (accepted.empty()) throw std::invalid_argument("extent_points: no accepted particles");
    if (count < 1) throw std::invalid_argument("extent_points: count must be >= 1");
    // Joint extremal order collapses to a single key: x - y descending prefers
    // max x with min y, y - x descending the reverse.
    auto sorted = mode == ExtentMode::length
                      ? sorted_copy(accepted,
                                    [](Vec2 a, Vec2 b) {
                                        if (a.x - a.y != b.x - b.y) return a.x - a.y > b.x - b.y;
                                        if (a.x != b.x) return a.x > b.x;
                                        return a.y < b.y;
                                    })
                      : sorted_copy(accepted, [](Vec2 a, Vec2 b) {
                            if (a.y - a.x != b.y - b.x) return a.y - a.x > b.y - b.x;
                            if (a.y != b.y) return a.y > b.y;
                            return a.x < b.x;
                        });
    return mean_of_first(sorted, count);
}

namespace {

// Mean of one coordinate over its own `count` extremal particles.
double extreme_coord_mean(std::span<const Vec2> pts, int count, bool use_x, bool largest) {
    std::vector<double> coords;
    coords.reserve(pts.size());
    for (const Vec2& p : pts) coords.push_back(use_x ? p.x : p.y);
    std::sort(coords.begin(), coords.end());
    if (largest) std::reverse(coords.begin(), coords.end());
    const int n = std::min<int>(count, static_cast<int>(coords.size()));
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += coords[i];
    return sum / n;
}

}  // namespace

BoundingBox bounding_box(std::span<const Vec2> accepted, const BboxParams& params) {
    Vec2 q, len_pt, bre_pt;
    if (params.selection == ExtremeSelection::per_axis) {
        if (accepted.empty()) throw std::invalid_argument("bounding_box: no accepted particles");
        q = {std::ceil(extreme_coord_mean(accepted, params.p, true, false)),
             std::ceil(extreme_coord_mean(accepted, params.p, false, false))};
        len_pt = {extreme_coord_mean(accepted, params.l, true, true),
                  extreme_coord_mean(accepted, params.l, false, false)};
        bre_pt = {extreme_coord_mean(accepted, params.b, true, false),
                  extreme_coord_mean(accepted, params.b, false, true)};
    } else {
        q = anchor_point(accepted, params.p, params.anchor);
        len_pt = extent_points(accepted, params.l, ExtentMode::length);
        bre_pt = extent_points(accepted, params.b, ExtentMode::breadth);
    }
    const double len_dist = distance(q, len_pt);
    const double bre_dist = distance(q, bre_pt);

    BoundingBox box;
    box.origin = q;
    if (params.axes == AxisConvention::literal) {
        box.length = len_dist;
        box.breadth = bre_dist;
    } else {
        // The max-x selection measures the horizontal span from q and the
        // max-y selection the vertical one.
        box.breadth = len_dist;
        box.length = bre_dist;
    }
    return box;
}

}  // namespace dualtrack::bbox
