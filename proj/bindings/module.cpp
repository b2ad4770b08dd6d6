#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dualtrack/contour.hpp"
#include "dualtrack/eval.hpp"
#include "dualtrack/frame_io.hpp"
#include "dualtrack/klt.hpp"
#include "dualtrack/pso.hpp"
#include "dualtrack/synth.hpp"
#include "dualtrack/tracker.hpp"

namespace py = pybind11;
using namespace dualtrack;

namespace {

GrayFrame frame_from_array(const py::array_t<float, py::array::c_style | py::array::forcecast>& a,
                           int index) {
    if (a.ndim() != 2) throw std::invalid_argument("frame array must be 2-D (height, width)");
    GrayFrame f(static_cast<int>(a.shape(1)), static_cast<int>(a.shape(0)));
    f.index = index;
    std::copy(a.data(), a.data() + a.size(), f.data.begin());
    return f;
}

std::vector<GrayFrame> frames_from_array(
    const py::array_t<float, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 3) throw std::invalid_argument("frames array must be 3-D (n, height, width)");
    std::vector<GrayFrame> frames;
    const auto n = a.shape(0);
    const auto h = a.shape(1);
    const auto w = a.shape(2);
    frames.reserve(n);
    for (py::ssize_t i = 0; i < n; ++i) {
        GrayFrame f(static_cast<int>(w), static_cast<int>(h));
        f.index = static_cast<int>(i);
        std::copy(a.data() + i * h * w, a.data() + (i + 1) * h * w, f.data.begin());
        frames.push_back(std::move(f));
    }
    return frames;
}

py::array_t<float> frames_to_array(const std::vector<GrayFrame>& frames) {
    const auto n = static_cast<py::ssize_t>(frames.size());
    const py::ssize_t h = frames.empty() ? 0 : frames.front().height;
    const py::ssize_t w = frames.empty() ? 0 : frames.front().width;
    py::array_t<float> out({n, h, w});
    auto buf = out.mutable_unchecked<3>();
    for (py::ssize_t i = 0; i < n; ++i)
        for (py::ssize_t y = 0; y < h; ++y)
            for (py::ssize_t x = 0; x < w; ++x)
                buf(i, y, x) = frames[i].at(static_cast<int>(x), static_cast<int>(y));
    return out;
}

py::array_t<double> truth_to_array(const io::GroundTruthTrack& truth) {
    const auto n = static_cast<py::ssize_t>(truth.size());
    py::array_t<double> out({n, py::ssize_t(4)});
    auto buf = out.mutable_unchecked<2>();
    for (py::ssize_t i = 0; i < n; ++i) {
        const auto& e = truth.entries[i];
        const double nan = std::numeric_limits<double>::quiet_NaN();
        buf(i, 0) = e ? e->x : nan;
        buf(i, 1) = e ? e->y : nan;
        buf(i, 2) = e ? e->w : nan;
        buf(i, 3) = e ? e->h : nan;
    }
    return out;
}

io::GroundTruthTrack truth_from_array(
    const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2 || a.shape(1) != 4)
        throw std::invalid_argument("truth array must have shape (n, 4)");
    io::GroundTruthTrack truth;
    auto buf = a.unchecked<2>();
    for (py::ssize_t i = 0; i < a.shape(0); ++i) {
        if (std::isnan(buf(i, 0)))
            truth.entries.emplace_back(std::nullopt);
        else
            truth.entries.emplace_back(Rect{buf(i, 0), buf(i, 1), buf(i, 2), buf(i, 3)});
    }
    return truth;
}

contour::BackgroundMode mode_from_string(const std::string& mode) {
    if (mode == "static") return contour::BackgroundMode::static_scene;
    if (mode == "variable") return contour::BackgroundMode::variable_scene;
    throw std::invalid_argument("mode must be 'static' or 'variable'");
}

synth::SceneSpec scene_spec_from_kwargs(int width, int height, int frames, double shape_x,
                                        double shape_y, double shape_size, double vx, double vy,
                                        const std::string& texture, double noise_amplitude,
                                        std::uint64_t noise_seed) {
    synth::SceneSpec spec;
    spec.width = width;
    spec.height = height;
    spec.frame_count = frames;
    spec.shape_origin = {shape_x, shape_y};
    spec.shape_size = shape_size;
    spec.motion = {{0, {vx, vy}}};
    spec.texture = texture == "noise" ? synth::TextureKind::noise : synth::TextureKind::flat;
    spec.noise_amplitude = noise_amplitude;
    spec.noise_seed = noise_seed;
    return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dual contour/swarm object tracker core";

    m.def(
        "synthesize",
        [](int width, int height, int frames, double shape_x, double shape_y, double shape_size,
           double vx, double vy, const std::string& texture, double noise_amplitude,
           std::uint64_t noise_seed) {
            const auto scene = synth::generate(scene_spec_from_kwargs(
                width, height, frames, shape_x, shape_y, shape_size, vx, vy, texture,
                noise_amplitude, noise_seed));
            return py::make_tuple(frames_to_array(scene.frames), truth_to_array(scene.truth));
        },
        py::arg("width") = 180, py::arg("height") = 144, py::arg("frames") = 60,
        py::arg("shape_x") = 10, py::arg("shape_y") = 60, py::arg("shape_size") = 20,
        py::arg("vx") = 2, py::arg("vy") = 0, py::arg("texture") = "flat",
        py::arg("noise_amplitude") = 0.1, py::arg("noise_seed") = 1,
        "Render a translating-square scene; returns (frames, truth) arrays.");

    m.def(
        "dominant_points",
        [](const py::array_t<float, py::array::c_style | py::array::forcecast>& frame,
           const std::string& mode, double threshold) {
            const GrayFrame f = frame_from_array(frame, 0);
            const BinaryImage mask = io::binarize(f, threshold);
            const auto chain = contour::trace_contour(mask, io::find_boundary_seed(mask));
            const auto dom = contour::detect_dominant_points(contour::extract_breakpoints(chain),
                                                             mode_from_string(mode));
            py::array_t<double> out({static_cast<py::ssize_t>(dom.points.size()), py::ssize_t(4)});
            auto buf = out.mutable_unchecked<2>();
            for (py::ssize_t i = 0; i < static_cast<py::ssize_t>(dom.points.size()); ++i) {
                buf(i, 0) = dom.points[i].position.x;
                buf(i, 1) = dom.points[i].position.y;
                buf(i, 2) = dom.points[i].support_k;
                buf(i, 3) = dom.points[i].cosine;
            }
            return out;
        },
        py::arg("frame"), py::arg("mode") = "static", py::arg("threshold") = 0.5,
        "Frame-1 analysis: rows of (x, y, k, cosine).");

    m.def(
        "track",
        [](const py::array_t<float, py::array::c_style | py::array::forcecast>& frames,
           const std::string& mode, std::uint64_t seed, double accept_tol, int population) {
            tracker::TrackerConfig config = tracker::make_config(mode_from_string(mode));
            config.rng_seed = seed;
            config.pso.accept_tol = accept_tol;
            if (population > 0) {
                config.pso.population = population;
                config.population_explicit = true;
            }
            const auto result = tracker::run(frames_from_array(frames), config);

            const auto n = static_cast<py::ssize_t>(result.frames.size());
            py::array_t<double> boxes({n, py::ssize_t(5)});
            auto buf = boxes.mutable_unchecked<2>();
            const double nan = std::numeric_limits<double>::quiet_NaN();
            for (py::ssize_t i = 0; i < n; ++i) {
                const auto& rec = result.frames[i];
                buf(i, 0) = rec.frame;
                if (rec.box) {
                    buf(i, 1) = rec.box->origin.x;
                    buf(i, 2) = rec.box->origin.y;
                    buf(i, 3) = rec.box->breadth;
                    buf(i, 4) = rec.box->length;
                } else {
                    buf(i, 1) = buf(i, 2) = buf(i, 3) = buf(i, 4) = nan;
                }
            }
            py::dict out;
            out["boxes"] = boxes;
            out["track_lost"] = result.track_lost;
            out["reinit_events"] = static_cast<int>(result.events.size());
            return out;
        },
        py::arg("frames"), py::arg("mode") = "static", py::arg("seed") = 1,
        py::arg("accept_tol") = 1.5, py::arg("population") = 0,
        "Run the tracker over (n, h, w) float frames; boxes rows are "
        "(frame, qx, qy, breadth, length) with NaN where no box exists.");

    m.def(
        "evaluate",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& boxes,
           const py::array_t<double, py::array::c_style | py::array::forcecast>& truth,
           double iou_threshold, double lsm_fraction) {
            if (boxes.ndim() != 2 || boxes.shape(1) != 5)
                throw std::invalid_argument("boxes array must have shape (n, 5)");
            std::vector<eval::ResultRow> rows;
            auto buf = boxes.unchecked<2>();
            for (py::ssize_t i = 0; i < boxes.shape(0); ++i) {
                const int frame = static_cast<int>(buf(i, 0));
                if (frame == 0) continue;
                eval::ResultRow row;
                row.frame = frame;
                if (!std::isnan(buf(i, 1)))
                    row.box = Rect{buf(i, 1), buf(i, 2), buf(i, 3), buf(i, 4)};
                rows.push_back(std::move(row));
            }
            eval::EvalParams params;
            params.iou_threshold = iou_threshold;
            params.lsm_fraction = lsm_fraction;
            const auto report = eval::evaluate(rows, truth_from_array(truth), params);
            py::dict out;
            out["TD"] = report.detections.TD;
            out["FD"] = report.detections.FD;
            out["MD"] = report.detections.MD;
            out["AOS"] = report.AOS;
            out["LSM"] = report.LSM;
            out["precision_at_20"] = report.precision_at_20;
            return out;
        },
        py::arg("boxes"), py::arg("truth"), py::arg("iou_threshold") = 0.5,
        py::arg("lsm_fraction") = 0.95,
        "Score tracker boxes against (n, 4) ground truth rows.");

    m.def(
        "fitness",
        [](double px, double py_, double x1, double y1, double x2, double y2) {
            return pso::fitness({px, py_}, {x1, y1}, {x2, y2});
        },
        py::arg("px"), py::arg("py"), py::arg("x1"), py::arg("y1"), py::arg("x2"), py::arg("y2"),
        "Perpendicular distance from a point to the line through two points.");

    m.def(
        "overlap_score",
        [](double ax, double ay, double aw, double ah, double bx, double by, double bw,
           double bh) { return eval::overlap_score({ax, ay, aw, ah}, {bx, by, bw, bh}); },
        "IoU of two (x, y, w, h) rectangles.");

    m.def(
        "is_trackable_point",
        [](const py::array_t<float, py::array::c_style | py::array::forcecast>& frame, double x,
           double y, int window_half, double lambda_threshold) {
            const GrayFrame f = frame_from_array(frame, 0);
            const auto grad = klt::image_gradients(f);
            const auto z = klt::structure_tensor(grad, {x, y}, window_half);
            const double lambda =
                lambda_threshold > 0 ? lambda_threshold : klt::auto_lambda(grad, window_half);
            return klt::is_trackable(z, lambda);
        },
        py::arg("frame"), py::arg("x"), py::arg("y"), py::arg("window_half") = 7,
        py::arg("lambda_threshold") = 0.0,
        "Minimum-eigenvalue trackability test at one position.");

    m.attr("__version__") = "0.1.0";
}
