#pragma once

#include <array>
#include <span>

#include "dualtrack/geometry.hpp"

namespace dualtrack::bbox {

/// Axis-aligned box anchored at origin q; breadth spans x, length spans y.
struct BoundingBox {
    Vec2 origin;
    double length = 0.0;
    double breadth = 0.0;

    [[nodiscard]] std::array<Vec2, 4> corners() const {
        return {origin, Vec2{origin.x, origin.y + length}, Vec2{origin.x + breadth, origin.y},
                Vec2{origin.x + breadth, origin.y + length}};
    }
    [[nodiscard]] bool degenerate() const { return length <= 0.0 || breadth <= 0.0; }
    [[nodiscard]] Rect to_rect() const { return {origin.x, origin.y, breadth, length}; }
};

/// Anchor selection order. sum_xy ranks particles by x+y ascending (closest
/// to the image origin under L1); lexicographic ranks by (x, y).
enum class AnchorOrder { sum_xy, lexicographic };

enum class ExtentMode { length, breadth };

/// Axis convention for assembling the box from the two extent distances.
/// corrected maps the max-x selection to the horizontal span and the max-y
/// selection to the vertical span; literal keeps the source labels, which
/// transposes non-square targets.
enum class AxisConvention { corrected, literal };

/// How the "smallest X and smallest Y" phrasing picks particles: combined
/// ranks whole points by one joint key; per_axis averages each coordinate
/// over its own extremal set, which pins corners of ring-shaped clouds.
enum class ExtremeSelection { combined, per_axis };

struct BboxParams {
    int p = 10;
    int l = 10;
    int b = 10;
    AnchorOrder anchor = AnchorOrder::sum_xy;
    AxisConvention axes = AxisConvention::corrected;
    ExtremeSelection selection = ExtremeSelection::combined;
};

/// Componentwise-ceiled mean of the p accepted positions nearest the image
/// origin. Fewer than p positions fall back to all of them.
Vec2 anchor_point(std::span<const Vec2> accepted, int p,
                  AnchorOrder order = AnchorOrder::sum_xy);

/// Mean of the `count` extremal positions: length mode prefers max x / min y,
/// breadth mode min x / max y.
Vec2 extent_points(std::span<const Vec2> accepted, int count, ExtentMode mode);

/// Full anchor + extents pipeline. Coincident particles produce a valid
/// degenerate box. Throws on an empty particle set.
BoundingBox bounding_box(std::span<const Vec2> accepted, const BboxParams& params = {});

}  // namespace dualtrack::bbox
