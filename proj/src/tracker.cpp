#include "dualtrack/tracker.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dualtrack/frame_io.hpp"

namespace dualtrack::tracker {

namespace {

const char* mode_name(contour::BackgroundMode mode) {
    return mode == contour::BackgroundMode::static_scene ? "static" : "variable";
}

}  // namespace

TrackerConfig TrackerConfig::resolved() const {
    TrackerConfig out = *this;
    if (!out.population_explicit)
        out.pso.population = out.mode == contour::BackgroundMode::static_scene ? 25 : 33;
    return out;
}

TrackerConfig make_config(contour::BackgroundMode mode) {
    TrackerConfig config;
    config.mode = mode;
    return config.resolved();
}

int auto_box_count(int population, int vertex_count) {
    if (vertex_count < 1) vertex_count = 1;
    const int pile = population / (2 * vertex_count);
    return std::clamp(pile, 2, 10);
}

void apply_config_file(TrackerConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t");
        line = line.substr(b, e - b + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": expected key=value");
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        try {
            if (key == "mode") {
                if (value == "static")
                    config.mode = contour::BackgroundMode::static_scene;
                else if (value == "variable")
                    config.mode = contour::BackgroundMode::variable_scene;
                else
                    throw std::runtime_error("config line " + std::to_string(line_no) +
                                             ": mode must be static or variable");
            } else if (key == "seed") config.rng_seed = std::stoull(value);
            else if (key == "threshold") config.binarize_threshold = std::stod(value);
            else if (key == "pso-w") config.pso.w = std::stod(value);
            else if (key == "pso-c1") config.pso.c1 = std::stod(value);
            else if (key == "pso-c2") config.pso.c2 = std::stod(value);
            else if (key == "pso-pop") {
                config.pso.population = std::stoi(value);
                config.population_explicit = true;
            } else if (key == "pso-accept-tol") config.pso.accept_tol = std::stod(value);
            else if (key == "pso-max-iter") config.pso.max_iter_per_frame = std::stoi(value);
            else if (key == "pso-diverge-tol") config.pso.diverge_tol = std::stod(value);
            else if (key == "pso-diverge-patience") config.pso.diverge_patience = std::stoi(value);
            else if (key == "pso-vmin") config.pso.v_min = std::stod(value);
            else if (key == "pso-vmax") config.pso.v_max = std::stod(value);
            else if (key == "klt-window") config.klt.window_half = std::stoi(value);
            else if (key == "klt-iters") config.klt.max_iter = std::stoi(value);
            else if (key == "klt-tol") config.klt.tol = std::stod(value);
            else if (key == "klt-lambda") config.klt.lambda_threshold = std::stod(value);
            else if (key == "klt-residual-bound") config.klt.residual_bound = std::stod(value);
            else if (key == "klt-stationary-frames") config.klt.stationary_frames = std::stoi(value);
            else if (key == "bbox-p") {
                config.box.p = std::stoi(value);
                config.box_counts_explicit = true;
            } else if (key == "bbox-l") {
                config.box.l = std::stoi(value);
                config.box_counts_explicit = true;
            } else if (key == "bbox-b") {
                config.box.b = std::stoi(value);
                config.box_counts_explicit = true;
            }
            else
                throw std::runtime_error("config line " + std::to_string(line_no) +
                                         ": unknown key " + key);
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": malformed value for " + key);
        }
    }
}

std::string describe(const TrackerConfig& raw) {
    const TrackerConfig config = raw.resolved();
    std::ostringstream os;
    os << "mode " << mode_name(config.mode) << "\n"
       << "breakpoint-group-size " << contour::group_size_for(config.mode) << "\n"
       << "seed " << config.rng_seed << "\n"
       << "threshold " << config.binarize_threshold << "\n"
       << "pso-pop " << config.pso.population << "\n"
       << "pso-w " << config.pso.w << "\n"
       << "pso-c1 " << config.pso.c1 << "\n"
       << "pso-c2 " << config.pso.c2 << "\n"
       << "pso-r1 " << config.pso.r1_min << ".." << config.pso.r1_max << "\n"
       << "pso-r2 " << config.pso.r2_min << ".." << config.pso.r2_max << "\n"
       << "pso-vmin " << config.pso.v_min << "\n"
       << "pso-vmax " << config.pso.v_max << "\n"
       << "pso-accept-tol " << config.pso.accept_tol << "\n"
       << "pso-max-iter " << config.pso.max_iter_per_frame << "\n"
       << "pso-diverge-tol " << config.pso.diverge_tol << "\n"
       << "pso-diverge-patience " << config.pso.diverge_patience << "\n"
       << "klt-window " << config.klt.window_half << "\n"
       << "klt-iters " << config.klt.max_iter << "\n"
       << "klt-tol " << config.klt.tol << "\n"
       << "klt-lambda "
       << (config.klt.lambda_threshold > 0 ? std::to_string(config.klt.lambda_threshold)
                                           : std::string("auto"))
       << "\n"
       << "klt-residual-bound " << config.klt.residual_bound << "\n"
       << "klt-stationary-frames " << config.klt.stationary_frames << "\n"
       << "bbox-p " << config.box.p << "\n"
       << "bbox-l " << config.box.l << "\n"
       << "bbox-b " << config.box.b << "\n";
    return os.str();
}

TrackResult run(std::span<const GrayFrame> frames, const TrackerConfig& raw_config) {
    if (frames.size() < 3)
        throw std::runtime_error("tracker requires at least 3 frames");
    const TrackerConfig config = raw_config.resolved();
    Rng rng(config.rng_seed);

    // Frame 1: segment once and extract the dominant points.
    const BinaryImage mask = io::binarize(frames[0], config.binarize_threshold);
    const PixelCoord seed = io::find_boundary_seed(mask);
    const contour::ChainCode chain = contour::trace_contour(mask, seed);
    const contour::Breakpoints bps = contour::extract_breakpoints(chain);
    const contour::DominantPoints dom = contour::detect_dominant_points(bps, config.mode);

    std::vector<Vec2> dominants;
    for (const auto& dp : dom.points) dominants.push_back(to_vec(dp.position));
    const bool closed = dom.closed;

    TrackResult result;
    {
        FrameRecord rec;
        rec.frame = 0;
        rec.dominants = dominants;
        rec.point_states.assign(dominants.size(), PointState::live);
        result.frames.push_back(std::move(rec));
    }

    std::vector<PointState> point_states(dominants.size(), PointState::live);
    std::vector<int> stationary(dominants.size(), 0);

    const Rect bounds{0, 0, static_cast<double>(frames[0].width - 1),
                      static_cast<double>(frames[0].height - 1)};

    // Frame 2: polygon from the frame-1 dominants, multiswarm initialization.
    // Particles spawn in the target's neighborhood and may roam the whole
    // frame afterwards.
    pso::Polygon polygon = pso::build_polygon(dominants, closed);
    pso::MultiSwarm ms = pso::init_multiswarm(pso::swarm_init_bounds(polygon, bounds), bounds,
                                              polygon, config.pso, rng);

    const auto emit_frame = [&](int frame_index, const pso::StepReport& report) {
        FrameRecord rec;
        rec.frame = frame_index;
        rec.dominants = dominants;
        rec.point_states = point_states;
        rec.swarm_status = report.status;
        rec.iterations = ms.iterations_this_frame;
        const auto accepted = pso::accepted_positions(ms);
        bbox::BboxParams box_params = config.box;
        box_params.selection = bbox::ExtremeSelection::per_axis;
        if (!config.box_counts_explicit) {
            const int n = auto_box_count(static_cast<int>(ms.particles.size()),
                                         static_cast<int>(polygon.vertices.size()));
            box_params.p = box_params.l = box_params.b = n;
        }
        if (!accepted.empty()) rec.box = bbox::bounding_box(accepted, box_params);
        for (const auto& p : ms.particles) {
            rec.particle_positions.push_back(p.position);
            rec.particle_swarms.push_back(p.swarm_id);
            rec.particle_statuses.push_back(p.status);
        }
        result.frames.push_back(std::move(rec));
    };

    {
        const pso::StepReport report = pso::run_frame(ms, polygon, config.pso, rng);
        if (report.diverged_reinits > 0)
            result.events.push_back({1, ReinitEvent::Kind::particle, report.diverged_reinits});
        pso::snapshot_frame_positions(ms);
        emit_frame(1, report);
    }

    // Frames 3..N: KLT with re-initialization, then the PSO pass.
    for (std::size_t t = 2; t < frames.size(); ++t) {
        const int frame_index = static_cast<int>(t);

        std::vector<std::size_t> live;
        std::vector<Vec2> live_positions;
        for (std::size_t i = 0; i < dominants.size(); ++i) {
            if (point_states[i] != PointState::frozen) {
                live.push_back(i);
                live_positions.push_back(dominants[i]);
            }
        }

        std::vector<std::size_t> lost_now;
        if (!live.empty()) {
            std::vector<int> counters(live.size());
            for (std::size_t j = 0; j < live.size(); ++j) counters[j] = stationary[live[j]];
            const auto tracked = klt::track_dominant_points(frames[t - 1], frames[t],
                                                            live_positions, counters, config.klt);
            for (std::size_t j = 0; j < live.size(); ++j) {
                const std::size_t i = live[j];
                stationary[i] = counters[j];
                if (tracked[j].status == klt::TrackStatus::live) {
                    dominants[i] = tracked[j].position;
                    point_states[i] = PointState::live;
                } else {
                    lost_now.push_back(i);
                }
            }
        }
        if (config.inject_loss.frame == frame_index && config.inject_loss.point_index >= 0 &&
            static_cast<std::size_t>(config.inject_loss.point_index) < dominants.size()) {
            const auto idx = static_cast<std::size_t>(config.inject_loss.point_index);
            if (std::find(lost_now.begin(), lost_now.end(), idx) == lost_now.end())
                lost_now.push_back(idx);
        }

        // Lost points adopt the nearest moving accepted particle; each
        // particle can replace at most one point per frame.
        std::vector<char> adopted(ms.particles.size(), 0);
        for (const std::size_t i : lost_now) {
            const auto pick =
                pso::nearest_moving_accepted(ms.particles, dominants[i], adopted);
            if (pick) {
                adopted[*pick] = 1;
                dominants[i] = ms.particles[*pick].position;
                point_states[i] = PointState::live;
                stationary[i] = 0;
                result.events.push_back({frame_index, ReinitEvent::Kind::dominant_point,
                                         static_cast<int>(i)});
            } else {
                point_states[i] = PointState::frozen;
            }
        }

        const bool all_frozen = std::all_of(point_states.begin(), point_states.end(),
                                            [](PointState s) { return s == PointState::frozen; });
        const bool none_accepted = pso::accepted_positions(ms).empty();
        if (all_frozen && none_accepted) {
            result.track_lost = true;
            result.lost_at_frame = frame_index;
            break;
        }

        polygon = pso::build_polygon(dominants, closed);
        pso::begin_frame(ms, polygon, config.pso);
        const pso::StepReport report = pso::run_frame(ms, polygon, config.pso, rng);
        if (report.diverged_reinits > 0)
            result.events.push_back(
                {frame_index, ReinitEvent::Kind::particle, report.diverged_reinits});
        pso::snapshot_frame_positions(ms);
        emit_frame(frame_index, report);
    }

    return result;
}

}  // namespace dualtrack::tracker
