#pragma once

#include <span>
#include <vector>

#include "dualtrack/geometry.hpp"
#include "dualtrack/image.hpp"

namespace dualtrack::klt {

/// Per-pixel image gradients, same dimensions as the source frame.
struct GradientField {
    int width = 0;
    int height = 0;
    std::vector<float> gx;
    std::vector<float> gy;

    [[nodiscard]] double sample_gx(double x, double y) const;
    [[nodiscard]] double sample_gy(double x, double y) const;
};

/// Windowed sum of gradient outer products (2x2 symmetric).
struct StructureTensor {
    double zxx = 0.0;
    double zxy = 0.0;
    double zyy = 0.0;

    [[nodiscard]] double min_eigenvalue() const;
    [[nodiscard]] double det() const { return zxx * zyy - zxy * zxy; }
};

enum class TrackStatus { live, lost };

struct TrackedPoint {
    Vec2 position;
    TrackStatus status = TrackStatus::lost;
    double residual = 0.0;
    int iterations_used = 0;
};

struct KltConfig {
    int window_half = 7;
    int max_iter = 30;
    double tol = 0.03;
    /// Minimum-eigenvalue gate; values <= 0 select the automatic per-frame
    /// threshold of 1% of the frame's largest minimum eigenvalue.
    double lambda_threshold = 0.0;
    /// Mean |I - J| over the window above this marks the point lost.
    double residual_bound = 0.1;
    /// Consecutive frames of exactly zero displacement before a point is
    /// declared lost.
    int stationary_frames = 3;
};

/// Central differences in the interior, one-sided at the borders.
/// Throws when the frame is smaller than 3x3.
GradientField image_gradients(const GrayFrame& frame);

/// Gradient outer products summed over the (2*window_half+1)^2 window around
/// `center`, bilinear at sub-pixel centers; samples falling outside the
/// gradient field are skipped.
StructureTensor structure_tensor(const GradientField& grad, Vec2 center, int window_half);

/// True iff the tensor's minimum eigenvalue strictly exceeds the threshold.
bool is_trackable(const StructureTensor& z, double lambda_threshold);

/// 1% of the largest windowed minimum eigenvalue over the frame.
double auto_lambda(const GradientField& grad, int window_half);

/// Iterative translational displacement solve d += Z^-1 e between two frames.
TrackedPoint track_point(const GrayFrame& prev, const GrayFrame& curr, Vec2 pt,
                         const KltConfig& cfg);

/// track_point with a precomputed gradient field and resolved lambda, for
/// callers tracking many points against the same frame pair.
TrackedPoint track_point(const GradientField& prev_grad, const GrayFrame& prev,
                         const GrayFrame& curr, Vec2 pt, const KltConfig& cfg,
                         double lambda);

/// Tracks each point independently and maintains per-point stationarity
/// counters: a live point whose displacement is exactly zero for
/// cfg.stationary_frames consecutive frames is flagged lost.
/// `stationary_counters` must have one entry per point and is updated in place.
std::vector<TrackedPoint> track_dominant_points(const GrayFrame& prev, const GrayFrame& curr,
                                                std::span<const Vec2> pts,
                                                std::span<int> stationary_counters,
                                                const KltConfig& cfg);

}  // namespace dualtrack::klt
