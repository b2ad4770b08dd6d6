// Acceptance harness: runs every release criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code is the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dualtrack/contour.hpp"
#include "dualtrack/eval.hpp"
#include "dualtrack/frame_io.hpp"
#include "dualtrack/klt.hpp"
#include "dualtrack/pso.hpp"
#include "dualtrack/result_io.hpp"
#include "dualtrack/rng.hpp"
#include "dualtrack/synth.hpp"
#include "dualtrack/tracker.hpp"
#include "oracles.hpp"

using namespace dualtrack;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

std::string fmt(const char* format, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, value);
    return buf;
}

// Band-limited random texture (one 3x3 box pass over iid noise).
GrayFrame textured_canvas(int w, int h, std::uint64_t seed) {
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

GrayFrame crop(const GrayFrame& canvas, double ox, double oy, int w, int h) {
    GrayFrame f(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            f.at(x, y) = static_cast<float>(canvas.sample_bilinear(ox + x, oy + y));
    return f;
}

synth::SceneSpec tracking_scene() {
    synth::SceneSpec spec;
    spec.width = 180;
    spec.height = 144;
    spec.frame_count = 60;
    spec.shape_origin = {10, 60};
    spec.shape_size = 20;
    spec.motion = {{0, {2, 0}}};
    return spec;
}

std::vector<eval::ResultRow> rows_from(const tracker::TrackResult& result) {
    std::vector<eval::ResultRow> rows;
    for (const auto& rec : result.frames) {
        if (rec.frame == 0) continue;
        eval::ResultRow row;
        row.frame = rec.frame;
        if (rec.box) row.box = rec.box->to_rect();
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// --- criteria -------------------------------------------------------------

Outcome criterion_geometry_oracle() {
    Outcome out;
    const auto start = Clock::now();
    Rng rng(101);
    double worst_analytic = 0.0;
    double worst_sampled = 0.0;
    int done = 0;
    while (done < 1000) {
        const Vec2 p{rng.uniform(-20, 20), rng.uniform(-20, 20)};
        const Vec2 d1{rng.uniform(-20, 20), rng.uniform(-20, 20)};
        const Vec2 d2{rng.uniform(-20, 20), rng.uniform(-20, 20)};
        if (distance(d1, d2) < 0.5) continue;
        const double lit = pso::fitness(p, d1, d2);
        if (lit < 0.1) continue;  // below grid resolution of the sampler
        worst_analytic = std::max(worst_analytic, std::abs(lit - point_line_distance(p, d1, d2)));
        worst_sampled =
            std::max(worst_sampled, std::abs(lit - oracles::sampled_line_distance(p, d1, d2)));
        ++done;
    }
    const double elapsed = seconds_since(start);
    out.require(worst_analytic <= 1e-12, "analytic gap " + fmt("%.2e", worst_analytic));
    out.require(worst_sampled <= 1e-5, "sampled gap " + fmt("%.2e", worst_sampled));
    out.require(elapsed < 5.0, "runtime " + fmt("%.2f s", elapsed));
    out.note("analytic " + fmt("%.1e", worst_analytic) + ", sampled " + fmt("%.1e", worst_sampled) +
             ", " + fmt("%.2f s", elapsed));
    return out;
}

Outcome criterion_contour_suite() {
    Outcome out;
    const auto start = Clock::now();

    BinaryImage square(9, 9);
    for (int y = 2; y < 7; ++y)
        for (int x = 2; x < 7; ++x) square.set(x, y, true);
    const auto chain = contour::trace_contour(square, {2, 2});
    out.require(chain.closed, "square contour did not close");
    const auto bps = contour::extract_breakpoints(chain);
    out.require(bps.points.size() == 4, "square breakpoints != 4");
    const auto dom = contour::detect_dominant_points(bps, contour::BackgroundMode::static_scene);
    out.require(dom.points.size() == 4, "square dominant points != 4");
    std::set<std::pair<int, int>> corners{{2, 2}, {6, 2}, {6, 6}, {2, 6}};
    std::set<std::pair<int, int>> got;
    for (const auto& dp : dom.points) got.insert({dp.position.x, dp.position.y});
    out.require(got == corners, "square corners mismatch");

    // Straight bar: endpoints only.
    BinaryImage bar(12, 6);
    for (int x = 2; x <= 9; ++x) bar.set(x, 3, true);
    const auto bar_dom = contour::detect_dominant_points(
        contour::extract_breakpoints(contour::trace_contour(bar, {2, 3})),
        contour::BackgroundMode::static_scene);
    out.require(bar_dom.points.size() == 2, "bar endpoints != 2");
    std::set<std::pair<int, int>> bar_got;
    for (const auto& dp : bar_dom.points) bar_got.insert({dp.position.x, dp.position.y});
    out.require(bar_got == std::set<std::pair<int, int>>{{2, 3}, {9, 3}}, "bar endpoint mismatch");

    const double elapsed = seconds_since(start);
    out.require(elapsed < 1.0, "runtime " + fmt("%.2f s", elapsed));
    out.note(fmt("%.3f s", elapsed));
    return out;
}

Outcome criterion_klt_translation() {
    Outcome out;
    const auto start = Clock::now();
    Rng rng(202);
    int live_accurate = 0;
    int total = 50;
    klt::KltConfig cfg;
    cfg.lambda_threshold = 1e-9;
    for (int i = 0; i < total; ++i) {
        // Displacements on the half-integer grid with magnitude <= 3.
        Vec2 d;
        do {
            d = {rng.uniform_int(-6, 6) / 2.0, rng.uniform_int(-6, 6) / 2.0};
        } while (d.norm() > 3.0 || d.norm() == 0.0);
        const auto canvas = textured_canvas(64, 64, 1000 + i);
        const auto prev = crop(canvas, 16, 16, 32, 32);
        const auto curr = crop(canvas, 16 - d.x, 16 - d.y, 32, 32);
        const auto tp = klt::track_point(prev, curr, {16, 16}, cfg);
        if (tp.status == klt::TrackStatus::live &&
            (tp.position - (Vec2{16, 16} + d)).norm() <= 0.25)
            ++live_accurate;
    }
    const double rate = 100.0 * live_accurate / total;
    out.require(rate >= 90.0, "recovery rate " + fmt("%.0f%%", rate));

    const GrayFrame flat(32, 32, 0.5f);
    const auto tp = klt::track_point(flat, flat, {16, 16}, cfg);
    out.require(tp.status == klt::TrackStatus::lost, "uniform patch not lost");

    const double elapsed = seconds_since(start);
    out.require(elapsed < 10.0, "runtime " + fmt("%.2f s", elapsed));
    out.note(fmt("%.0f%%", rate) + " within 0.25 px, " + fmt("%.2f s", elapsed));
    return out;
}

Outcome criterion_subset_property() {
    Outcome out;
    int checked = 0, passed = 0;
    for (int variant = 0; variant < 2; ++variant) {
        synth::SceneSpec spec;
        spec.width = 96;
        spec.height = 96;
        spec.frame_count = 1;
        spec.shape = variant == 0 ? synth::ShapeKind::square : synth::ShapeKind::lshape;
        spec.shape_origin = {30, 30};
        spec.shape_size = 24;
        const auto scene = synth::generate(spec);
        const auto& frame = scene.frames[0];
        const BinaryImage mask = io::binarize(frame, 0.5);
        const auto dom = contour::detect_dominant_points(
            contour::extract_breakpoints(
                contour::trace_contour(mask, io::find_boundary_seed(mask))),
            contour::BackgroundMode::static_scene);

        const auto grad = klt::image_gradients(frame);
        const int window_half = klt::KltConfig{}.window_half;
        const double lambda = klt::auto_lambda(grad, window_half);
        for (const auto& dp : dom.points) {
            ++checked;
            const auto z = klt::structure_tensor(grad, to_vec(dp.position), window_half);
            if (klt::is_trackable(z, lambda)) ++passed;
        }
    }
    out.require(checked > 0 && passed == checked,
                "only " + std::to_string(passed) + "/" + std::to_string(checked) + " trackable");
    out.note(std::to_string(passed) + "/" + std::to_string(checked) + " dominant points trackable");
    return out;
}

Outcome criterion_pso_convergence() {
    Outcome out;
    const auto start = Clock::now();
    const std::vector<Vec2> corners{{30, 30}, {50, 30}, {50, 50}, {30, 50}};
    const pso::Polygon poly = pso::build_polygon(corners, true);
    const Rect frame{0, 0, 179, 143};
    const pso::PsoParams params;  // published defaults: w 0.3, c1 = c2 = 0.1, population 25
    int converged = 0;
    bool monotone = true;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        Rng rng(seed);
        pso::MultiSwarm ms =
            pso::init_multiswarm(pso::swarm_init_bounds(poly, frame), frame, poly, params, rng);
        std::vector<double> last_pbest;
        for (const auto& p : ms.particles) last_pbest.push_back(p.pbest_fitness);
        std::vector<double> last_gbest;
        for (const auto& s : ms.swarms) last_gbest.push_back(s.gbest_fitness);
        pso::StepReport report;
        do {
            report = pso::step_swarms(ms, poly, params, rng);
            for (std::size_t i = 0; i < ms.particles.size(); ++i) {
                if (ms.particles[i].pbest_fitness > last_pbest[i] + 1e-9) monotone = false;
                last_pbest[i] = ms.particles[i].pbest_fitness;
            }
            for (std::size_t i = 0; i < ms.swarms.size(); ++i) {
                if (ms.swarms[i].gbest_fitness > last_gbest[i] + 1e-9) monotone = false;
                last_gbest[i] = ms.swarms[i].gbest_fitness;
            }
        } while (report.status == pso::StepStatus::iterating);
        if (report.status == pso::StepStatus::converged &&
            ms.iterations_this_frame <= params.max_iter_per_frame)
            ++converged;
    }
    const double elapsed = seconds_since(start);
    out.require(converged >= 95, "only " + std::to_string(converged) + "/100 seeds converged");
    out.require(monotone, "pbest/gbest not monotone");
    out.require(elapsed < 30.0, "runtime " + fmt("%.2f s", elapsed));
    out.note(std::to_string(converged) + "/100 seeds, " + fmt("%.2f s", elapsed));
    return out;
}

struct TrackingRun {
    tracker::TrackResult result;
    eval::DetectionCounts counts;
    double mean_center_error = 0.0;
    double elapsed = 0.0;
};

TrackingRun run_tracking_scenario(const tracker::FaultInjection& inject) {
    const auto scene = synth::generate(tracking_scene());
    tracker::TrackerConfig config = tracker::make_config(contour::BackgroundMode::static_scene);
    config.rng_seed = 42;
    config.inject_loss = inject;
    TrackingRun run;
    const auto start = Clock::now();
    run.result = tracker::run(scene.frames, config);
    run.elapsed = seconds_since(start);
    const auto rows = rows_from(run.result);
    run.counts = eval::td_fd_md(rows, scene.truth, 0.5);
    double err_sum = 0.0;
    int err_n = 0;
    for (const auto& row : rows) {
        if (!row.box || !scene.truth.entries[row.frame]) continue;
        err_sum += distance(row.box->center(), scene.truth.entries[row.frame]->center());
        ++err_n;
    }
    run.mean_center_error = err_n > 0 ? err_sum / err_n : 1e9;
    return run;
}

Outcome criterion_end_to_end(TrackingRun& baseline) {
    Outcome out;
    baseline = run_tracking_scenario({});
    out.require(baseline.counts.TD >= 95.0, "TD " + fmt("%.1f%%", baseline.counts.TD));
    out.require(baseline.mean_center_error <= 5.0,
                "center error " + fmt("%.2f px", baseline.mean_center_error));
    out.require(baseline.elapsed < 60.0, "runtime " + fmt("%.2f s", baseline.elapsed));
    out.note("TD " + fmt("%.1f%%", baseline.counts.TD) + ", center error " +
             fmt("%.2f px", baseline.mean_center_error) + ", " + fmt("%.2f s", baseline.elapsed));
    return out;
}

Outcome criterion_reinit_resilience(const TrackingRun& baseline) {
    Outcome out;
    const int inject_frame = 20;
    const auto perturbed = run_tracking_scenario({inject_frame, 0});
    bool adopted_in_time = false;
    for (const auto& ev : perturbed.result.events)
        if (ev.kind == tracker::ReinitEvent::Kind::dominant_point && ev.index == 0 &&
            ev.frame >= inject_frame && ev.frame <= inject_frame + 1)
            adopted_in_time = true;
    out.require(adopted_in_time, "no replacement within 1 frame");
    const double drop = baseline.counts.TD - perturbed.counts.TD;
    out.require(drop <= 5.0, "TD drop " + fmt("%.1f pp", drop));
    out.note("TD " + fmt("%.1f%%", perturbed.counts.TD) + " after injected loss (drop " +
             fmt("%.1f pp", drop) + ")");
    return out;
}

Outcome criterion_diverged_recovery() {
    Outcome out;
    const std::vector<Vec2> corners{{30, 30}, {50, 30}, {50, 50}, {30, 50}};
    const pso::Polygon poly = pso::build_polygon(corners, true);
    const Rect frame{0, 0, 179, 143};
    const pso::PsoParams params;
    const int budget = params.diverge_patience + 50;

    // Scenario A: 10% of particles teleported 50 px off-polygon with corrupted
    // memory; their swarm mates keep a healthy global best.
    {
        Rng rng(7);
        pso::MultiSwarm ms =
            pso::init_multiswarm(pso::swarm_init_bounds(poly, frame), frame, poly, params, rng);
        pso::StepReport report;
        do {
            report = pso::step_swarms(ms, poly, params, rng);
        } while (report.status == pso::StepStatus::iterating);
        out.require(report.status == pso::StepStatus::converged, "scenario A setup not converged");

        const int teleported = (static_cast<int>(ms.particles.size()) + 9) / 10;
        std::vector<int> moved;
        for (int i = 0; i < teleported; ++i) {
            pso::Particle& p = ms.particles[i];
            p.position += Vec2{35.4, -35.4};  // 50 px diagonal
            p.pbest_position = p.position;
            const auto [d1, d2] = poly.segment(p.swarm_id);
            p.pbest_fitness = pso::segment_distance(p.position, d1, d2);
            p.status = pso::ParticleStatus::searching;
            moved.push_back(i);
        }
        ms.iterations_this_frame = 0;
        int iters = 0;
        bool all_back = false;
        while (iters < budget) {
            pso::step_swarms(ms, poly, params, rng);
            ++iters;
            all_back = true;
            for (int i : moved)
                if (ms.particles[i].status != pso::ParticleStatus::converged) all_back = false;
            if (all_back) break;
        }
        out.require(all_back, "scenario A: not all re-accepted within " + std::to_string(budget) +
                                  " iterations");
        out.note("10% teleport re-accepted in " + std::to_string(iters) + " iterations");
    }

    // Scenario B: one whole swarm teleported, so no healthy best remains and
    // recovery must come through the endpoint reinitialization path.
    {
        Rng rng(8);
        pso::MultiSwarm ms =
            pso::init_multiswarm(pso::swarm_init_bounds(poly, frame), frame, poly, params, rng);
        pso::StepReport report;
        do {
            report = pso::step_swarms(ms, poly, params, rng);
        } while (report.status == pso::StepStatus::iterating);

        const auto& victims = ms.swarms[0].members;
        out.require(!victims.empty(), "scenario B: empty victim swarm");
        for (int idx : victims) {
            pso::Particle& p = ms.particles[idx];
            p.position += Vec2{0, -50};
            p.pbest_position = p.position;
            const auto [d1, d2] = poly.segment(p.swarm_id);
            p.pbest_fitness = pso::segment_distance(p.position, d1, d2);
            p.status = pso::ParticleStatus::searching;
        }
        ms.swarms[0].gbest_position = ms.particles[victims.front()].pbest_position;
        ms.swarms[0].gbest_fitness = ms.particles[victims.front()].pbest_fitness;

        ms.iterations_this_frame = 0;
        const int before = ms.total_diverged_reinits;
        int iters = 0;
        bool all_back = false;
        while (iters < budget) {
            pso::step_swarms(ms, poly, params, rng);
            ++iters;
            all_back = true;
            for (int idx : victims)
                if (ms.particles[idx].status != pso::ParticleStatus::converged) all_back = false;
            if (all_back) break;
        }
        out.require(all_back, "scenario B: swarm not re-accepted within " +
                                  std::to_string(budget) + " iterations");
        out.require(ms.total_diverged_reinits > before, "scenario B: endpoint reinit never fired");
        out.note("stranded swarm recovered in " + std::to_string(iters) + " iterations via " +
                 std::to_string(ms.total_diverged_reinits - before) + " endpoint reinits");
    }
    return out;
}

Outcome criterion_metrics_oracle() {
    Outcome out;
    Rng rng(303);
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        const Rect a{static_cast<double>(rng.uniform_int(0, 150)),
                     static_cast<double>(rng.uniform_int(0, 150)),
                     static_cast<double>(rng.uniform_int(1, 50)),
                     static_cast<double>(rng.uniform_int(1, 50))};
        const Rect b{static_cast<double>(rng.uniform_int(0, 150)),
                     static_cast<double>(rng.uniform_int(0, 150)),
                     static_cast<double>(rng.uniform_int(1, 50)),
                     static_cast<double>(rng.uniform_int(1, 50))};
        worst = std::max(worst,
                         std::abs(eval::overlap_score(a, b) - oracles::rasterized_iou(a, b)));
    }
    out.require(worst <= 1e-9, "IoU gap " + fmt("%.2e", worst));

    // Hand-built 10-frame fixture: 7 true, 2 false, 1 missed.
    io::GroundTruthTrack truth;
    for (int i = 0; i < 10; ++i) truth.entries.emplace_back(Rect{10, 10, 20, 20});
    std::vector<eval::ResultRow> rows;
    for (int f = 0; f < 10; ++f) {
        eval::ResultRow row;
        row.frame = f;
        if (f == 9) {
            rows.push_back(row);  // missed
            continue;
        }
        Rect box{10, 10, 20, 20};
        if (f == 3 || f == 7) box.x += 100;  // false
        row.box = box;
        rows.push_back(row);
    }
    const auto counts = eval::td_fd_md(rows, truth, 0.5);
    out.require(counts.n_td == 7 && counts.n_fd == 2 && counts.n_md == 1,
                "fixture counts " + std::to_string(counts.n_td) + "/" +
                    std::to_string(counts.n_fd) + "/" + std::to_string(counts.n_md));
    out.require(std::abs(counts.TD - 70.0) < 1e-12, "TD " + fmt("%.4f", counts.TD));
    out.require(std::abs(counts.FD - 100.0 * 2 / 9) < 1e-12, "FD " + fmt("%.4f", counts.FD));
    out.require(std::abs(counts.MD - 12.5) < 1e-12, "MD " + fmt("%.4f", counts.MD));

    // LSM fixtures: pattern 1,1,0,1,1,1 at F=1 plus the degenerate ends.
    io::GroundTruthTrack t6;
    for (int i = 0; i < 6; ++i) t6.entries.emplace_back(Rect{0, 0, 10, 10});
    std::vector<eval::ResultRow> pattern;
    for (int f = 0; f < 6; ++f) {
        eval::ResultRow row;
        row.frame = f;
        Rect box{0, 0, 10, 10};
        if (f == 2) box.x += 100;
        row.box = box;
        pattern.push_back(row);
    }
    out.require(std::abs(eval::lsm(pattern, t6, 0.5, 1.0) - 0.5) < 1e-12, "LSM pattern != 0.5");
    std::vector<eval::ResultRow> all_good = pattern;
    all_good[2].box = Rect{0, 0, 10, 10};
    out.require(eval::lsm(all_good, t6, 0.5, 1.0) == 1.0, "LSM all-success != 1");
    std::vector<eval::ResultRow> none;
    for (int f = 0; f < 6; ++f) {
        eval::ResultRow row;
        row.frame = f;
        row.box = Rect{100, 100, 10, 10};
        none.push_back(row);
    }
    out.require(eval::lsm(none, t6, 0.5, 1.0) == 0.0, "LSM none-success != 0");

    out.note("IoU gap " + fmt("%.1e", worst) + ", detection and LSM fixtures exact");
    return out;
}

Outcome criterion_determinism() {
    Outcome out;
    const auto scene = synth::generate(tracking_scene());
    tracker::TrackerConfig config = tracker::make_config(contour::BackgroundMode::static_scene);
    config.rng_seed = 42;

    const fs::path dir = fs::temp_directory_path() / "dualtrack_acceptance_det";
    fs::remove_all(dir);
    fs::create_directories(dir / "a");
    fs::create_directories(dir / "b");

    for (const char* sub : {"a", "b"}) {
        const auto result = tracker::run(scene.frames, config);
        io::write_result_csv(result, (dir / sub / "result.csv").string());
        const auto rows = io::read_result_csv((dir / sub / "result.csv").string());
        const auto report = eval::evaluate(rows, scene.truth, {});
        eval::emit_plots(report, (dir / sub).string());
    }
    const bool csv_same = slurp(dir / "a" / "result.csv") == slurp(dir / "b" / "result.csv");
    const bool summary_same = slurp(dir / "a" / "summary.txt") == slurp(dir / "b" / "summary.txt");
    out.require(csv_same, "result.csv differs between runs");
    out.require(summary_same, "summary.txt differs between runs");
    out.require(!slurp(dir / "a" / "result.csv").empty(), "result.csv empty");
    out.note("result.csv and summary.txt byte-identical");
    return out;
}

}  // namespace

int main() {
    struct Entry {
        int index;
        const char* name;
        std::function<Outcome()> run;
    };

    TrackingRun baseline;
    const std::vector<Entry> entries{
        {1, "geometry oracle", criterion_geometry_oracle},
        {2, "contour suite", criterion_contour_suite},
        {3, "klt translation recovery", criterion_klt_translation},
        {4, "dominant points are trackable", criterion_subset_property},
        {5, "pso convergence", criterion_pso_convergence},
        {6, "end-to-end synthetic tracking", [&]() { return criterion_end_to_end(baseline); }},
        {7, "re-initialization resilience", [&]() { return criterion_reinit_resilience(baseline); }},
        {8, "diverged-particle recovery", criterion_diverged_recovery},
        {9, "metrics oracle", criterion_metrics_oracle},
        {10, "determinism", criterion_determinism},
    };

    int failures = 0;
    for (const auto& entry : entries) {
        Outcome outcome;
        try {
            outcome = entry.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %2d: %s%s%s\n", outcome.pass ? "PASS" : "FAIL", entry.index,
                    entry.name, outcome.detail.empty() ? "" : " - ", outcome.detail.c_str());
        if (!outcome.pass) ++failures;
    }
    if (failures == 0)
        std::printf("all %zu criteria passed\n", entries.size());
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures;
}
