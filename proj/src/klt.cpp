#include "dualtrack/klt.hpp"

#include <cmath>
#include <stdexcept>

namespace dualtrack::klt {

namespace {

double bilinear(const std::vector<float>& grid, int width, int height, double x, double y) {
    int x0 = static_cast<int>(x);
    int y0 = static_cast<int>(y);
    if (x0 >= width - 1) x0 = width - 2;
    if (y0 >= height - 1) y0 = height - 2;
    if (x0 < 0) x0 = 0;
    if (y0 < 0) y0 = 0;
    const double fx = x - x0;
    const double fy = y - y0;
    const std::size_t idx = static_cast<std::size_t>(y0) * width + x0;
    const double v00 = grid[idx];
    const double v10 = grid[idx + 1];
    const double v01 = grid[idx + width];
    const double v11 = grid[idx + width + 1];
    return v00 * (1 - fx) * (1 - fy) + v10 * fx * (1 - fy) + v01 * (1 - fx) * fy + v11 * fx * fy;
}

bool in_domain(int width, int height, double x, double y) {
    return x >= 0.0 && x <= width - 1.0 && y >= 0.0 && y <= height - 1.0;
}

}  // namespace

double GradientField::sample_gx(double x, double y) const {
    return bilinear(gx, width, height, x, y);
}

double GradientField::sample_gy(double x, double y) const {
    return bilinear(gy, width, height, x, y);
}

double StructureTensor::min_eigenvalue() const {
    const double tr = zxx + zyy;
    const double disc = std::sqrt((zxx - zyy) * (zxx - zyy) + 4.0 * zxy * zxy);
    return (tr - disc) / 2.0;
}

GradientField image_gradients(const GrayFrame& frame) {
    if (frame.width < 3 || frame.height < 3)
        throw std::invalid_argument("image_gradients: frame must be at least 3x3");
    GradientField g;
    g.width = frame.width;
    g.height = frame.height;
    g.gx.resize(frame.data.size());
    g.gy.resize(frame.data.size());
    for (int y = 0; y < frame.height; ++y) {
        for (int x = 0; x < frame.width; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * frame.width + x;
            if (x == 0)
                g.gx[i] = frame.at(1, y) - frame.at(0, y);
            else if (x == frame.width - 1)
                g.gx[i] = frame.at(x, y) - frame.at(x - 1, y);
            else
                g.gx[i] = (frame.at(x + 1, y) - frame.at(x - 1, y)) / 2.0f;
            if (y == 0)
                g.gy[i] = frame.at(x, 1) - frame.at(x, 0);
            else if (y == frame.height - 1)
                g.gy[i] = frame.at(x, y) - frame.at(x, y - 1);
            else
                g.gy[i] = (frame.at(x, y + 1) - frame.at(x, y - 1)) / 2.0f;
        }
    }
    return g;
}

StructureTensor structure_tensor(const GradientField& grad, Vec2 center, int window_half) {
    StructureTensor z;
    for (int dy = -window_half; dy <= window_half; ++dy) {
        for (int dx = -window_half; dx <= window_half; ++dx) {
            const double sx = center.x + dx;
            const double sy = center.y + dy;
            if (!in_domain(grad.width, grad.height, sx, sy)) continue;
            const double gx = grad.sample_gx(sx, sy);
            const double gy = grad.sample_gy(sx, sy);
            z.zxx += gx * gx;
            z.zxy += gx * gy;
            z.zyy += gy * gy;
        }
    }
    return z;
}

bool is_trackable(const StructureTensor& z, double lambda_threshold) {
    return z.min_eigenvalue() > lambda_threshold;
}

double auto_lambda(const GradientField& grad, int window_half) {
    // Summed-area tables over gx^2, gx*gy, gy^2 make the full-frame scan O(WH).
    const int w = grad.width;
    const int h = grad.height;
    std::vector<double> sxx((w + 1) * (h + 1), 0.0), sxy((w + 1) * (h + 1), 0.0),
        syy((w + 1) * (h + 1), 0.0);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * w + x;
            const double gx = grad.gx[i];
            const double gy = grad.gy[i];
            const std::size_t s = static_cast<std::size_t>(y + 1) * (w + 1) + (x + 1);
            const std::size_t su = s - (w + 1);
            sxx[s] = gx * gx + sxx[s - 1] + sxx[su] - sxx[su - 1];
            sxy[s] = gx * gy + sxy[s - 1] + sxy[su] - sxy[su - 1];
            syy[s] = gy * gy + syy[s - 1] + syy[su] - syy[su - 1];
        }
    }
    const auto window_sum = [&](const std::vector<double>& t, int x0, int y0, int x1, int y1) {
        return t[static_cast<std::size_t>(y1 + 1) * (w + 1) + (x1 + 1)] -
               t[static_cast<std::size_t>(y0) * (w + 1) + (x1 + 1)] -
               t[static_cast<std::size_t>(y1 + 1) * (w + 1) + x0] +
               t[static_cast<std::size_t>(y0) * (w + 1) + x0];
    };
    double max_min_eig = 0.0;
    for (int y = window_half; y < h - window_half; ++y) {
        for (int x = window_half; x < w - window_half; ++x) {
            StructureTensor z;
            z.zxx = window_sum(sxx, x - window_half, y - window_half, x + window_half, y + window_half);
            z.zxy = window_sum(sxy, x - window_half, y - window_half, x + window_half, y + window_half);
            z.zyy = window_sum(syy, x - window_half, y - window_half, x + window_half, y + window_half);
            max_min_eig = std::max(max_min_eig, z.min_eigenvalue());
        }
    }
    return 0.01 * max_min_eig;
}

TrackedPoint track_point(const GrayFrame& prev, const GrayFrame& curr, Vec2 pt,
                         const KltConfig& cfg) {
    const GradientField grad = image_gradients(prev);
    const double lambda =
        cfg.lambda_threshold > 0 ? cfg.lambda_threshold : auto_lambda(grad, cfg.window_half);
    return track_point(grad, prev, curr, pt, cfg, lambda);
}

TrackedPoint track_point(const GradientField& prev_grad, const GrayFrame& prev,
                         const GrayFrame& curr, Vec2 pt, const KltConfig& cfg, double lambda) {
    TrackedPoint result;
    result.position = pt;
    result.status = TrackStatus::lost;

    const int wh = cfg.window_half;
    const int side = 2 * wh + 1;
    const int full_count = side * side;

    // Fixed window samples on the previous frame.
    std::vector<double> intensity, gxs, gys;
    std::vector<Vec2> offsets;
    intensity.reserve(full_count);
    StructureTensor z;
    for (int dy = -wh; dy <= wh; ++dy) {
        for (int dx = -wh; dx <= wh; ++dx) {
            const double sx = pt.x + dx;
            const double sy = pt.y + dy;
            if (!in_domain(prev.width, prev.height, sx, sy)) continue;
            offsets.push_back({static_cast<double>(dx), static_cast<double>(dy)});
            intensity.push_back(prev.sample_bilinear(sx, sy));
            const double gx = prev_grad.sample_gx(sx, sy);
            const double gy = prev_grad.sample_gy(sx, sy);
            gxs.push_back(gx);
            gys.push_back(gy);
            z.zxx += gx * gx;
            z.zxy += gx * gy;
            z.zyy += gy * gy;
        }
    }
    if (static_cast<int>(offsets.size()) * 2 < full_count) return result;  // window mostly clamped
    if (z.min_eigenvalue() < lambda) return result;
    const double det = z.det();
    if (det < 1e-10) return result;

    Vec2 d{0.0, 0.0};
    int iterations = 0;
    for (int it = 0; it < cfg.max_iter; ++it) {
        ++iterations;
        double ex = 0.0, ey = 0.0;
        int valid = 0;
        for (std::size_t i = 0; i < offsets.size(); ++i) {
            const double jx = pt.x + offsets[i].x + d.x;
            const double jy = pt.y + offsets[i].y + d.y;
            if (!in_domain(curr.width, curr.height, jx, jy)) continue;
            const double diff = intensity[i] - curr.sample_bilinear(jx, jy);
            ex += diff * gxs[i];
            ey += diff * gys[i];
            ++valid;
        }
        if (valid * 2 < full_count) return result;  // drifted off the frame
        const double ddx = (z.zyy * ex - z.zxy * ey) / det;
        const double ddy = (z.zxx * ey - z.zxy * ex) / det;
        d.x += ddx;
        d.y += ddy;
        if (std::hypot(ddx, ddy) < cfg.tol) break;
    }

    const Vec2 new_pos = pt + d;
    result.position = new_pos;
    result.iterations_used = iterations;
    if (new_pos.x < 0 || new_pos.x > curr.width - 1 || new_pos.y < 0 ||
        new_pos.y > curr.height - 1)
        return result;

    double abs_sum = 0.0;
    int valid = 0;
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        const double jx = pt.x + offsets[i].x + d.x;
        const double jy = pt.y + offsets[i].y + d.y;
        if (!in_domain(curr.width, curr.height, jx, jy)) continue;
        abs_sum += std::abs(intensity[i] - curr.sample_bilinear(jx, jy));
        ++valid;
    }
    if (valid == 0) return result;
    result.residual = abs_sum / valid;
    if (result.residual > cfg.residual_bound) return result;

    result.status = TrackStatus::live;
    return result;
}

std::vector<TrackedPoint> track_dominant_points(const GrayFrame& prev, const GrayFrame& curr,
                                                std::span<const Vec2> pts,
                                                std::span<int> stationary_counters,
                                                const KltConfig& cfg) {
    if (pts.empty()) throw std::invalid_argument("track_dominant_points: no points");
    const GradientField grad = image_gradients(prev);
    const double lambda =
        cfg.lambda_threshold > 0 ? cfg.lambda_threshold : auto_lambda(grad, cfg.window_half);

    std::vector<TrackedPoint> out;
    out.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        TrackedPoint tp = track_point(grad, prev, curr, pts[i], cfg, lambda);
        if (i < stationary_counters.size() && tp.status == TrackStatus::live) {
            // Exactly zero motion across consecutive frames reads as a stuck
            // point rather than a tracked one.
            if ((tp.position - pts[i]).norm() == 0.0) {
                if (++stationary_counters[i] >= cfg.stationary_frames)
                    tp.status = TrackStatus::lost;
            } else {
                stationary_counters[i] = 0;
            }
        }
        out.push_back(tp);
    }
    return out;
}

}  // namespace dualtrack::klt
