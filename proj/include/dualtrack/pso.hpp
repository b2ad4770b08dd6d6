#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dualtrack/geometry.hpp"
#include "dualtrack/rng.hpp"

namespace dualtrack::pso {

/// Ordered boundary vertices joined by straight segments; closed polygons
/// carry the wrap-around segment.
struct Polygon {
    std::vector<Vec2> vertices;
    bool closed = false;

    [[nodiscard]] int segment_count() const {
        const int n = static_cast<int>(vertices.size());
        if (n < 2) return 0;
        return closed ? n : n - 1;
    }

    [[nodiscard]] std::pair<Vec2, Vec2> segment(int i) const {
        const int n = static_cast<int>(vertices.size());
        return {vertices[i], vertices[(i + 1) % n]};
    }

    [[nodiscard]] Vec2 segment_midpoint(int i) const {
        const auto [a, b] = segment(i);
        return {(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
    }
};

enum class ParticleStatus { searching, converged, diverged };

struct Particle {
    Vec2 position;
    Vec2 velocity;
    Vec2 pbest_position;
    double pbest_fitness = 0.0;
    int swarm_id = -1;
    ParticleStatus status = ParticleStatus::searching;
    int diverge_count = 0;
    /// Position snapshots at the end of the last two frames; a particle whose
    /// snapshots differ counts as "moving" for dominant-point adoption.
    Vec2 last_frame_position;
    Vec2 prev_frame_position;

    [[nodiscard]] bool moving() const { return !(last_frame_position == prev_frame_position); }
};

struct Swarm {
    int segment_id = -1;
    std::vector<int> members;
    Vec2 gbest_position;
    double gbest_fitness = 0.0;
};

struct PsoParams {
    double w = 0.3;
    double c1 = 0.1;
    double c2 = 0.1;
    int r1_min = 1, r1_max = 3;
    int r2_min = 1, r2_max = 3;
    double v_min = 1.0;
    double v_max = 3.0;
    int population = 25;
    double accept_tol = 1.5;
    int max_iter_per_frame = 300;
    double diverge_tol = 25.0;
    int diverge_patience = 20;
    /// When true, acceptance and best-keeping use the infinite-line distance
    /// of the fitness formula verbatim. The default measures against the
    /// closed segment, so particles parked on a line's extension chase the
    /// moving boundary instead of idling there.
    bool bests_use_line_distance = false;
    /// Unaccepted particles whose speed decays below this get their velocity
    /// redrawn as at initialization, keeping the published 1..3 px/step floor
    /// alive instead of freezing short of the acceptance band. 0 disables.
    double stagnation_speed = 0.2;
};

/// Joins consecutive dominant points; coincident consecutive vertices are
/// merged. Throws when fewer than 2 distinct positions remain.
Polygon build_polygon(std::span<const Vec2> dominants, bool closed);

/// Euclidean distance between two segment endpoints.
double segment_length(Vec2 d1, Vec2 d2);

/// Perpendicular distance from p to the infinite line through d1 and d2:
/// |(y2-y1)x0 - (x2-x1)y0 + x2*y1 - y2*x1| / |d2-d1|.
/// Throws when d1 == d2.
double fitness(Vec2 p, Vec2 d1, Vec2 d2);

/// Euclidean distance from p to the closed segment [d1, d2].
double segment_distance(Vec2 p, Vec2 d1, Vec2 d2);

/// Particle-spawn region: the polygon's bounding rectangle grown by a margin,
/// clamped to the frame.
Rect swarm_init_bounds(const Polygon& polygon, const Rect& frame_bounds);

/// Positions uniform over bounds; velocity components get integer magnitudes
/// in [v_min, v_max] with random sign; pbest starts at the initial position.
std::vector<Particle> init_particles(const Rect& bounds, const PsoParams& params, Rng& rng);

/// Assigns each particle to its minimum-fitness segment (lowest index wins
/// ties) and builds one swarm per segment, including empty ones.
std::vector<Swarm> assign_swarms(std::vector<Particle>& particles, const Polygon& polygon);

/// First-frame global best: the member whose position is nearest either
/// segment endpoint. An empty swarm gets the segment midpoint as sentinel.
void init_gbest(Swarm& swarm, const Polygon& polygon, std::span<const Particle> particles,
                const PsoParams& params);

/// One velocity/position update: v < w v + c1 r1 (pbest - x) + c2 r2 (gbest - x),
/// velocity components clamped to |v| <= v_max, position clamped to bounds.
void update_particle(Particle& p, Vec2 gbest, const PsoParams& params, Rng& rng,
                     const Rect& bounds);

/// Personal bests replaced on improvement; global best is the minimum
/// personal best over members.
void update_bests(Swarm& swarm, std::vector<Particle>& particles, const Polygon& polygon,
                  const PsoParams& params);

/// Places a diverged particle on its segment's first endpoint, redraws the
/// velocity as at initialization, and resets its personal best.
void reinit_diverged(Particle& p, const Polygon& polygon, const PsoParams& params, Rng& rng);

/// Nearest accepted, moving particle adopts the lost dominant point; already
/// adopted particles can be excluded. Returns the adopted particle index, or
/// nullopt when no accepted particle is moving.
std::optional<int> nearest_moving_accepted(std::span<const Particle> particles, Vec2 last_known,
                                           std::span<const char> exclude = {});

/// Updates dominants[lost_index] in place from the nearest moving accepted
/// particle; returns the new position, or nullopt when the point must freeze.
std::optional<Vec2> reinit_dominant_point(std::size_t lost_index,
                                          std::span<const Particle> particles,
                                          std::span<Vec2> dominants);

enum class StepStatus { converged, iterating, exhausted };

struct StepReport {
    StepStatus status = StepStatus::iterating;
    int accepted = 0;         // total accepted after this step
    int diverged_reinits = 0; // endpoint reinits performed this step
};

/// All particles plus their per-segment swarms and per-frame iteration state.
struct MultiSwarm {
    std::vector<Particle> particles;
    std::vector<Swarm> swarms;
    Rect bounds;
    Polygon tracked_polygon;  // the polygon the swarm last converged against
    int iterations_this_frame = 0;
    int total_diverged_reinits = 0;
};

/// Builds the frame-2 multiswarm: particles initialized over init_bounds,
/// swarms assigned, global bests seeded from segment-endpoint distances.
/// clamp_bounds limits particle positions during later updates.
MultiSwarm init_multiswarm(const Rect& init_bounds, const Rect& clamp_bounds,
                           const Polygon& polygon, const PsoParams& params, Rng& rng);

/// Prepares an existing multiswarm for a new frame. The ring follows the
/// boundary: every particle shifts with its segment's vertex displacements
/// (interpolated along the segment) before statuses reset and personal bests
/// re-evaluate against the new polygon. Particles re-assign from scratch only
/// when the segment count changed.
void begin_frame(MultiSwarm& ms, const Polygon& polygon, const PsoParams& params);

/// Records end-of-frame positions used by the "moving" test.
void snapshot_frame_positions(MultiSwarm& ms);

/// One synchronous iteration: accept particles within accept_tol, update the
/// rest, refresh bests, reinitialize particles diverged past patience.
StepReport step_swarms(MultiSwarm& ms, const Polygon& polygon, const PsoParams& params, Rng& rng);

/// Runs step_swarms until convergence or iteration exhaustion.
StepReport run_frame(MultiSwarm& ms, const Polygon& polygon, const PsoParams& params, Rng& rng);

/// Positions of accepted (converged) particles, in particle order.
std::vector<Vec2> accepted_positions(const MultiSwarm& ms);

}  // namespace dualtrack::pso
