#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dualtrack/bbox.hpp"
#include "dualtrack/contour.hpp"
#include "dualtrack/image.hpp"
#include "dualtrack/klt.hpp"
#include "dualtrack/pso.hpp"

namespace dualtrack::tracker {

/// Test hook: flags one dominant point lost at a given frame.
struct FaultInjection {
    int frame = -1;
    int point_index = -1;
};

struct TrackerConfig {
    contour::BackgroundMode mode = contour::BackgroundMode::static_scene;
    pso::PsoParams pso;
    klt::KltConfig klt;
    bbox::BboxParams box;
    double binarize_threshold = 0.5;
    std::uint64_t rng_seed = 1;
    FaultInjection inject_loss;

    /// When false, the population follows the mode default (25 static,
    /// 33 variable) on resolve().
    bool population_explicit = false;

    /// When false, the box anchor/extent counts adapt to the per-vertex
    /// particle budget instead of the fixed defaults.
    bool box_counts_explicit = false;

    /// Fills mode-dependent defaults.
    [[nodiscard]] TrackerConfig resolved() const;
};

/// Anchor/extent counts for a swarm of `population` particles around
/// `vertex_count` vertices: the published default capped by the expected
/// per-corner pile size.
int auto_box_count(int population, int vertex_count);

TrackerConfig make_config(contour::BackgroundMode mode);

/// Applies flat key=value overrides (same keys as the CLI flags, without the
/// leading dashes). Unknown keys are rejected.
void apply_config_file(TrackerConfig& config, const std::string& path);

/// Human-readable dump of every resolved parameter.
std::string describe(const TrackerConfig& config);

enum class PointState { live, lost, frozen };

struct FrameRecord {
    int frame = 0;
    std::optional<bbox::BoundingBox> box;
    std::vector<Vec2> dominants;
    std::vector<PointState> point_states;
    pso::StepStatus swarm_status = pso::StepStatus::converged;
    int iterations = 0;
    std::vector<Vec2> particle_positions;
    std::vector<int> particle_swarms;
    std::vector<pso::ParticleStatus> particle_statuses;
};

struct ReinitEvent {
    enum class Kind { dominant_point, particle };
    int frame = 0;
    Kind kind = Kind::dominant_point;
    int index = 0;  // point index, or reinit count for particle events
};

struct TrackResult {
    std::vector<FrameRecord> frames;
    std::vector<ReinitEvent> events;
    bool track_lost = false;
    int lost_at_frame = -1;
};

/// Full pipeline: dominant points on frame 1, the multiswarm from frame 2,
/// KLT plus both re-initialization paths from frame 3 onward. Requires at
/// least 3 frames and a segmentable target in the first one.
TrackResult run(std::span<const GrayFrame> frames, const TrackerConfig& config);

}  // namespace dualtrack::tracker
