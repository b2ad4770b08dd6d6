#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "dualtrack/klt.hpp"
#include "dualtrack/rng.hpp"
#include "oracles.hpp"

using namespace dualtrack;
using namespace dualtrack::klt;

namespace {

GrayFrame constant_frame(int w, int h, float v) {
    GrayFrame f(w, h, v);
    return f;
}

GrayFrame x_ramp(int w, int h) {
    GrayFrame f(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) f.at(x, y) = static_cast<float>(x) / 255.0f;
    return f;
}

GrayFrame xy_ramp(int w, int h) {
    GrayFrame f(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) f.at(x, y) = static_cast<float>(x + y) / 255.0f;
    return f;
}

// Band-limited random texture: iid noise softened by one 3x3 box pass, so
// bilinear resampling stays faithful to the source signal.
GrayFrame noise_canvas(int w, int h, std::uint64_t seed) {
    GrayFrame raw(w, h);
    Rng rng(seed);
    for (auto& v : raw.data) v = static_cast<float>(rng.uniform());
    GrayFrame f(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            double sum = 0.0;
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    const int sx = std::clamp(x + dx, 0, w - 1);
                    const int sy = std::clamp(y + dy, 0, h - 1);
                    sum += raw.at(sx, sy);
                }
            f.at(x, y) = static_cast<float>(sum / 9.0);
        }
    return f;
}

// Crop a w x h window whose origin sits at (ox, oy) in canvas coordinates,
// sampling bilinearly so half-integer origins are representable.
GrayFrame crop(const GrayFrame& canvas, double ox, double oy, int w, int h) {
    GrayFrame f(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            f.at(x, y) = static_cast<float>(canvas.sample_bilinear(ox + x, oy + y));
    return f;
}

}  // namespace

TEST_SUITE("klt") {

TEST_CASE("gradients: constant, ramps, size guard") {
    const auto zero = image_gradients(constant_frame(8, 8, 0.37f));
    for (float v : zero.gx) CHECK(v == doctest::Approx(0.0));
    for (float v : zero.gy) CHECK(v == doctest::Approx(0.0));

    const auto gx = image_gradients(x_ramp(9, 9));
    CHECK(gx.sample_gx(4, 4) == doctest::Approx(1.0 / 255.0));
    CHECK(gx.sample_gy(4, 4) == doctest::Approx(0.0));

    const auto gxy = image_gradients(xy_ramp(9, 9));
    CHECK(gxy.sample_gx(4, 4) == doctest::Approx(1.0 / 255.0));
    CHECK(gxy.sample_gy(4, 4) == doctest::Approx(1.0 / 255.0));

    CHECK_THROWS_AS(image_gradients(constant_frame(2, 5, 0)), std::invalid_argument);
}

TEST_CASE("structure tensor: forced sums on a pure ramp") {
    const auto grad = image_gradients(x_ramp(16, 16));
    const auto z = structure_tensor(grad, {8, 8}, 2);  // 5x5 window
    CHECK(z.zxx == doctest::Approx(25.0 / (255.0 * 255.0)));
    CHECK(z.zxy == doctest::Approx(0.0));
    CHECK(z.zyy == doctest::Approx(0.0));
}

TEST_CASE("structure tensor: zero gradients give the zero tensor") {
    const auto grad = image_gradients(constant_frame(10, 10, 0.5f));
    const auto z = structure_tensor(grad, {5, 5}, 3);
    CHECK(z.zxx == doctest::Approx(0.0));
    CHECK(z.zyy == doctest::Approx(0.0));
}

TEST_CASE("structure tensor matches the direct double loop") {
    const auto frame = noise_canvas(24, 24, 5);
    const auto grad = image_gradients(frame);
    for (int cx : {6, 12, 18})
        for (int cy : {6, 12, 18}) {
            const auto z = structure_tensor(grad, {static_cast<double>(cx), static_cast<double>(cy)}, 3);
            const auto o = oracles::direct_structure_tensor(grad, cx, cy, 3);
            CHECK(std::abs(z.zxx - o.zxx) <= 1e-9);
            CHECK(std::abs(z.zxy - o.zxy) <= 1e-9);
            CHECK(std::abs(z.zyy - o.zyy) <= 1e-9);
        }
}

TEST_CASE("checkerboard window has strictly positive minimum eigenvalue") {
    // 2-pixel cells: a 1-pixel checkerboard is invisible to central differences.
    GrayFrame board(16, 16);
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x) board.at(x, y) = ((x / 2 + y / 2) % 2) ? 1.0f : 0.0f;
    const auto z = structure_tensor(image_gradients(board), {8, 8}, 2);
    CHECK(z.zxx > 0.0);
    CHECK(z.zyy > 0.0);
    CHECK(z.min_eigenvalue() > 0.0);
}

TEST_CASE("min eigenvalue closed form matches the Rayleigh scan") {
    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        const double a = rng.uniform(0, 10);
        const double c = rng.uniform(0, 10);
        const double b = rng.uniform(-std::sqrt(a * c), std::sqrt(a * c));  // keep PSD
        StructureTensor z{a, b, c};
        CHECK(std::abs(z.min_eigenvalue() - oracles::rayleigh_min_eigenvalue(a, b, c)) <= 1e-12);
    }
}

TEST_CASE("is_trackable gates on the threshold") {
    CHECK(!is_trackable({0, 0, 0}, 0.001));
    const auto ramp_z = structure_tensor(image_gradients(x_ramp(16, 16)), {8, 8}, 2);
    CHECK(!is_trackable(ramp_z, 1e-9));  // aperture problem: one zero eigenvalue
    CHECK(is_trackable({4, 0, 9}, 3.0)); // min eigenvalue 4
    CHECK(!is_trackable({4, 0, 9}, 4.0));
}

TEST_CASE("track_point: identical frames converge immediately") {
    const auto frame = noise_canvas(32, 32, 9);
    KltConfig cfg;
    cfg.lambda_threshold = 1e-9;
    const auto tp = track_point(frame, frame, {16, 16}, cfg);
    CHECK(tp.status == TrackStatus::live);
    CHECK(tp.iterations_used == 1);
    CHECK((tp.position - Vec2{16, 16}).norm() == doctest::Approx(0.0));
}

TEST_CASE("track_point: recovers a one-pixel shift") {
    const auto canvas = noise_canvas(64, 64, 21);
    const auto prev = crop(canvas, 16, 16, 32, 32);
    const auto curr = crop(canvas, 15, 16, 32, 32);  // content moves +1 in x
    KltConfig cfg;
    cfg.lambda_threshold = 1e-9;
    const auto tp = track_point(prev, curr, {16, 16}, cfg);
    REQUIRE(tp.status == TrackStatus::live);
    CHECK(std::abs(tp.position.x - 17.0) <= 0.25);
    CHECK(std::abs(tp.position.y - 16.0) <= 0.25);
}

TEST_CASE("track_point: uniform region is lost") {
    const auto prev = constant_frame(32, 32, 0.6f);
    const auto curr = constant_frame(32, 32, 0.6f);
    KltConfig cfg;
    const auto tp = track_point(prev, curr, {16, 16}, cfg);
    CHECK(tp.status == TrackStatus::lost);
}

TEST_CASE("translation equivariance over many points") {
    const auto canvas = noise_canvas(80, 80, 33);
    const auto prev = crop(canvas, 20, 20, 40, 40);
    const Vec2 t{2, -1};
    const auto curr = crop(canvas, 20 - t.x, 20 - t.y, 40, 40);
    KltConfig cfg;
    cfg.lambda_threshold = 1e-9;
    std::vector<Vec2> pts;
    std::vector<int> counters;
    for (int x = 12; x <= 28; x += 4)
        for (int y = 12; y <= 28; y += 4) {
            pts.push_back({static_cast<double>(x), static_cast<double>(y)});
            counters.push_back(0);
        }
    const auto tracked = track_dominant_points(prev, curr, pts, counters, cfg);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        REQUIRE(tracked[i].status == TrackStatus::live);
        CHECK((tracked[i].position - (pts[i] + t)).norm() <= 0.25);
        CHECK(tracked[i].position.x >= 0);
        CHECK(tracked[i].position.x <= curr.width - 1);
    }
}

TEST_CASE("stationarity counter flags stuck points lost") {
    const auto frame = noise_canvas(32, 32, 50);
    KltConfig cfg;
    cfg.lambda_threshold = 1e-9;
    cfg.stationary_frames = 3;
    std::vector<Vec2> pts{{16, 16}};
    std::vector<int> counters{0};
    TrackStatus status = TrackStatus::live;
    int frames_until_lost = 0;
    for (int f = 0; f < 5; ++f) {
        const auto tracked = track_dominant_points(frame, frame, pts, counters, cfg);
        ++frames_until_lost;
        if (tracked[0].status == TrackStatus::lost) {
            status = TrackStatus::lost;
            break;
        }
    }
    CHECK(status == TrackStatus::lost);
    CHECK(frames_until_lost == 3);
}

TEST_CASE("occluded point is lost, the rest stay live") {
    const auto canvas = noise_canvas(80, 80, 60);
    const auto prev = crop(canvas, 20, 20, 40, 40);
    GrayFrame curr = prev;
    // Erase the patch around one point with background fill.
    for (int y = 6; y <= 18; ++y)
        for (int x = 6; x <= 18; ++x) curr.at(x, y) = 0.0f;
    KltConfig cfg;
    cfg.lambda_threshold = 1e-9;
    std::vector<Vec2> pts{{12, 12}, {30, 30}};
    std::vector<int> counters{0, 0};
    const auto tracked = track_dominant_points(prev, curr, pts, counters, cfg);
    CHECK(tracked[0].status == TrackStatus::lost);  // residual blows up
    CHECK(tracked[1].status == TrackStatus::live);
}

}  // TEST_SUITE
