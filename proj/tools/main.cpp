#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "dualtrack/eval.hpp"
#include "dualtrack/frame_io.hpp"
#include "dualtrack/render.hpp"
#include "dualtrack/result_io.hpp"
#include "dualtrack/synth.hpp"
#include "dualtrack/tracker.hpp"

namespace fs = std::filesystem;
using namespace dualtrack;

namespace {

struct TrackFlags {
    std::string frames_dir;
    std::string mode = "static";
    std::string out = "result.csv";
    std::string gt_path;
    std::string config_path;
    std::string pattern = "*";
    bool describe_only = false;
};

contour::BackgroundMode parse_mode(const std::string& mode) {
    if (mode == "static") return contour::BackgroundMode::static_scene;
    if (mode == "variable") return contour::BackgroundMode::variable_scene;
    throw std::runtime_error("mode must be 'static' or 'variable'");
}

int run_synth(const std::string& spec_path, const std::string& out_dir) {
    const synth::SceneSpec spec = synth::parse_scene_spec(spec_path);
    const synth::SynthResult scene = synth::generate(spec);
    synth::write_scene(scene, out_dir);
    std::cout << "wrote " << scene.frames.size() << " frames and groundtruth.txt to " << out_dir
              << "\n";
    return 0;
}

int run_track(const TrackFlags& flags, tracker::TrackerConfig config) {
    if (flags.describe_only) {
        std::cout << tracker::describe(config);
        return 0;
    }
    const auto frames = io::load_frame_sequence(flags.frames_dir, flags.pattern);
    const tracker::TrackResult result = tracker::run(frames, config);
    io::write_result_csv(result, flags.out);
    int boxes = 0;
    for (const auto& rec : result.frames)
        if (rec.box) ++boxes;
    std::cout << "tracked " << frames.size() << " frames, " << boxes << " boxes, "
              << result.events.size() << " reinit events";
    if (result.track_lost) std::cout << ", track lost at frame " << result.lost_at_frame;
    std::cout << "\n";

    if (!flags.gt_path.empty()) {
        const auto truth = io::load_ground_truth(flags.gt_path);
        const auto rows = io::read_result_csv(flags.out);
        const auto counts = eval::td_fd_md(rows, truth, 0.5);
        std::printf("TD %.2f%%  FD %.2f%%  MD %.2f%%\n", counts.TD, counts.FD, counts.MD);
    }
    return 0;
}

int run_eval(const std::string& result_path, const std::string& gt_path,
             const std::string& out_dir, const eval::EvalParams& params) {
    const auto rows = io::read_result_csv(result_path);
    const auto truth = io::load_ground_truth(gt_path);
    const eval::MetricReport report = eval::evaluate(rows, truth, params);
    eval::emit_plots(report, out_dir);
    std::printf("TD %.2f%%  FD %.2f%%  MD %.2f%%  AOS %.4f  LSM %.4f\n", report.detections.TD,
                report.detections.FD, report.detections.MD, report.AOS, report.LSM);
    std::cout << "plots written to " << out_dir << "\n";
    return 0;
}

int run_dominants(const std::string& frame_path, const std::string& mode, double threshold,
                  const std::string& out_path) {
    const GrayFrame frame = io::load_frame(frame_path);
    const BinaryImage mask = io::binarize(frame, threshold);
    const PixelCoord seed = io::find_boundary_seed(mask);
    const auto chain = contour::trace_contour(mask, seed);
    const auto bps = contour::extract_breakpoints(chain);
    const auto dom = contour::detect_dominant_points(bps, parse_mode(mode));

    std::FILE* out = out_path.empty() ? stdout : std::fopen(out_path.c_str(), "wb");
    if (!out) throw std::runtime_error("cannot write " + out_path);
    std::fprintf(out, "x,y,k,cos\n");
    for (const auto& dp : dom.points)
        std::fprintf(out, "%d,%d,%d,%.6f\n", dp.position.x, dp.position.y, dp.support_k,
                     dp.cosine);
    if (out != stdout) std::fclose(out);
    std::cerr << "contour " << chain.points.size() << " px, " << bps.points.size()
              << " breakpoints, " << dom.points.size() << " dominant points\n";
    return 0;
}

int run_overlay(const std::string& frames_dir, const std::string& result_path,
                const std::string& out_dir, const std::string& pattern) {
    const auto frames = io::load_frame_sequence(frames_dir, pattern);
    const auto rows = io::read_result_csv(result_path);

    std::map<int, std::vector<io::PointRow>> points_by_frame;
    std::map<int, std::vector<io::ParticleRow>> particles_by_frame;
    if (fs::exists(result_path + ".points.csv"))
        for (const auto& row : io::read_points_csv(result_path + ".points.csv"))
            points_by_frame[row.frame].push_back(row);
    if (fs::exists(result_path + ".particles.csv"))
        for (const auto& row : io::read_particles_csv(result_path + ".particles.csv"))
            particles_by_frame[row.frame].push_back(row);
    std::map<int, Rect> boxes;
    for (const auto& row : rows)
        if (row.box) boxes[row.frame] = *row.box;

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (!fs::is_directory(out_dir))
        throw std::runtime_error("cannot create output directory " + out_dir);

    for (const auto& frame : frames) {
        render::RgbImage img(frame);
        if (auto it = particles_by_frame.find(frame.index); it != particles_by_frame.end())
            for (const auto& p : it->second) render::draw_disk(img, p.position, 1, render::kRed);
        if (auto it = points_by_frame.find(frame.index); it != points_by_frame.end())
            for (const auto& p : it->second) render::draw_disk(img, p.position, 2, render::kGreen);
        if (auto it = boxes.find(frame.index); it != boxes.end())
            render::draw_rect_outline(img, it->second, render::kYellow);
        char name[32];
        std::snprintf(name, sizeof(name), "overlay%04d.ppm", frame.index);
        render::write_ppm(img, (fs::path(out_dir) / name).string());
    }
    std::cout << "wrote " << frames.size() << " overlays to " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dual contour/swarm object tracker"};
    app.require_subcommand(1);

    auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic frame sequence");
    std::string spec_path, synth_out;
    synth_cmd->add_option("--spec", spec_path, "scene spec file (key=value)")->required();
    synth_cmd->add_option("--out-dir", synth_out, "output directory")->required();

    auto* track_cmd = app.add_subcommand("track", "Track the target through a frame directory");
    TrackFlags tf;
    track_cmd->add_option("frames-dir", tf.frames_dir, "directory of PGM/PNG frames")->required();
    track_cmd->add_option("--mode", tf.mode, "static|variable")->capture_default_str();
    track_cmd->add_option("--out", tf.out, "result CSV path")->capture_default_str();
    track_cmd->add_option("--gt", tf.gt_path, "optional ground truth for a quick score");
    track_cmd->add_option("--config", tf.config_path, "key=value config file");
    track_cmd->add_option("--pattern", tf.pattern, "frame filename glob")->capture_default_str();
    track_cmd->add_flag("--describe", tf.describe_only,
                        "print the resolved configuration and exit");
    double opt_threshold = 0, opt_w = 0, opt_c1 = 0, opt_c2 = 0, opt_accept = 0, opt_klt_tol = 0,
           opt_klt_lambda = 0;
    std::uint64_t opt_seed = 0;
    int opt_pop = 0, opt_max_iter = 0, opt_klt_window = 0, opt_klt_iters = 0, opt_bp = 0,
        opt_bl = 0, opt_bb = 0;
    auto* o_seed = track_cmd->add_option("--seed", opt_seed, "rng seed");
    auto* o_thr = track_cmd->add_option("--threshold", opt_threshold, "binarization threshold");
    auto* o_w = track_cmd->add_option("--pso-w", opt_w, "inertia weight");
    auto* o_c1 = track_cmd->add_option("--pso-c1", opt_c1, "cognitive learning rate");
    auto* o_c2 = track_cmd->add_option("--pso-c2", opt_c2, "social learning rate");
    auto* o_pop = track_cmd->add_option("--pso-pop", opt_pop, "particle population");
    auto* o_acc = track_cmd->add_option("--pso-accept-tol", opt_accept, "acceptance distance, px");
    auto* o_mi = track_cmd->add_option("--pso-max-iter", opt_max_iter, "max iterations per frame");
    auto* o_kw = track_cmd->add_option("--klt-window", opt_klt_window, "half window, px");
    auto* o_ki = track_cmd->add_option("--klt-iters", opt_klt_iters, "max solver iterations");
    auto* o_kt = track_cmd->add_option("--klt-tol", opt_klt_tol, "solver tolerance, px");
    auto* o_kl = track_cmd->add_option("--klt-lambda", opt_klt_lambda,
                                       "eigenvalue gate; <=0 selects auto");
    auto* o_bp = track_cmd->add_option("--bbox-p", opt_bp, "anchor particle count");
    auto* o_bl = track_cmd->add_option("--bbox-l", opt_bl, "length extent count");
    auto* o_bb = track_cmd->add_option("--bbox-b", opt_bb, "breadth extent count");

    auto* eval_cmd = app.add_subcommand("eval", "Score a result CSV against ground truth");
    std::string eval_result, eval_gt, eval_out = "eval_out";
    eval::EvalParams eval_params;
    std::string eval_rule = "overlap";
    eval_cmd->add_option("result", eval_result, "result CSV from track")->required();
    eval_cmd->add_option("gt", eval_gt, "ground truth file")->required();
    eval_cmd->add_option("--out-dir", eval_out, "plot output directory")->capture_default_str();
    eval_cmd->add_option("--iou", eval_params.iou_threshold, "success IoU threshold")
        ->capture_default_str();
    eval_cmd->add_option("--lsm-fraction", eval_params.lsm_fraction, "LSM window fraction F")
        ->capture_default_str();
    eval_cmd->add_option("--rule", eval_rule, "overlap|center-ratio")->capture_default_str();

    auto* dom_cmd = app.add_subcommand("dominants", "Dump frame-1 dominant point analysis");
    std::string dom_frame, dom_mode = "static", dom_out;
    double dom_threshold = 0.5;
    dom_cmd->add_option("frame", dom_frame, "grayscale frame file")->required();
    dom_cmd->add_option("--mode", dom_mode, "static|variable")->capture_default_str();
    dom_cmd->add_option("--threshold", dom_threshold, "binarization threshold")
        ->capture_default_str();
    dom_cmd->add_option("--out", dom_out, "CSV output path (default stdout)");

    auto* ov_cmd = app.add_subcommand("overlay", "Render boxes, points and particles onto frames");
    std::string ov_frames, ov_result, ov_out, ov_pattern = "*";
    ov_cmd->add_option("frames-dir", ov_frames, "directory of frames")->required();
    ov_cmd->add_option("result", ov_result, "result CSV from track")->required();
    ov_cmd->add_option("--out-dir", ov_out, "overlay output directory")->required();
    ov_cmd->add_option("--pattern", ov_pattern, "frame filename glob")->capture_default_str();

    if (argc <= 1) {
        std::cout << app.help();
        return 2;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (synth_cmd->parsed()) return run_synth(spec_path, synth_out);
        if (track_cmd->parsed()) {
            tracker::TrackerConfig config;
            config.mode = parse_mode(tf.mode);
            if (!tf.config_path.empty()) tracker::apply_config_file(config, tf.config_path);
            if (track_cmd->count("--mode")) config.mode = parse_mode(tf.mode);
            if (o_seed->count()) config.rng_seed = opt_seed;
            if (o_thr->count()) config.binarize_threshold = opt_threshold;
            if (o_w->count()) config.pso.w = opt_w;
            if (o_c1->count()) config.pso.c1 = opt_c1;
            if (o_c2->count()) config.pso.c2 = opt_c2;
            if (o_pop->count()) {
                config.pso.population = opt_pop;
                config.population_explicit = true;
            }
            if (o_acc->count()) config.pso.accept_tol = opt_accept;
            if (o_mi->count()) config.pso.max_iter_per_frame = opt_max_iter;
            if (o_kw->count()) config.klt.window_half = opt_klt_window;
            if (o_ki->count()) config.klt.max_iter = opt_klt_iters;
            if (o_kt->count()) config.klt.tol = opt_klt_tol;
            if (o_kl->count()) config.klt.lambda_threshold = opt_klt_lambda;
            if (o_bp->count()) {
                config.box.p = opt_bp;
                config.box_counts_explicit = true;
            }
            if (o_bl->count()) {
                config.box.l = opt_bl;
                config.box_counts_explicit = true;
            }
            if (o_bb->count()) {
                config.box.b = opt_bb;
                config.box_counts_explicit = true;
            }
            return run_track(tf, config.resolved());
        }
        if (eval_cmd->parsed()) {
            if (eval_rule == "center-ratio")
                eval_params.rule = eval::SuccessRule::center_ratio;
            else if (eval_rule != "overlap")
                throw std::runtime_error("--rule must be overlap or center-ratio");
            return run_eval(eval_result, eval_gt, eval_out, eval_params);
        }
        if (dom_cmd->parsed()) return run_dominants(dom_frame, dom_mode, dom_threshold, dom_out);
        if (ov_cmd->parsed()) return run_overlay(ov_frames, ov_result, ov_out, ov_pattern);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
