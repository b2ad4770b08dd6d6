#include "dualtrack/pso.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dualtrack::pso {

namespace {

int argmin_segment(const Polygon& polygon, Vec2 p) {
    int best = 0;
    double best_fit = std::numeric_limits<double>::infinity();
    for (int s = 0; s < polygon.segment_count(); ++s) {
        const auto [d1, d2] = polygon.segment(s);
        const double f = fitness(p, d1, d2);
        if (f < best_fit) {
            best_fit = f;
            best = s;
        }
    }
    return best;
}

// Distance driving acceptance and best-keeping; assignment stays on the raw
// line-distance fitness.
double working_fitness(const PsoParams& params, const Polygon& polygon, int segment, Vec2 p) {
    const auto [d1, d2] = polygon.segment(segment);
    return params.bests_use_line_distance ? fitness(p, d1, d2) : segment_distance(p, d1, d2);
}

Vec2 draw_velocity(const PsoParams& params, Rng& rng) {
    // Integer step magnitudes with random sign, one draw per axis.
    const int lo = static_cast<int>(params.v_min);
    const int hi = static_cast<int>(params.v_max);
    const double vx = rng.uniform_int(lo, hi) * rng.sign();
    const double vy = rng.uniform_int(lo, hi) * rng.sign();
    return {vx, vy};
}

}  // namespace

Polygon build_polygon(std::span<const Vec2> dominants, bool closed) {
    Polygon poly;
    poly.closed = closed;
    for (const Vec2& v : dominants) {
        if (!poly.vertices.empty() && poly.vertices.back() == v) continue;
        poly.vertices.push_back(v);
    }
    if (closed && poly.vertices.size() > 1 && poly.vertices.front() == poly.vertices.back())
        poly.vertices.pop_back();
    // Distinctness check beyond consecutive merging.
    bool distinct = false;
    for (std::size_t i = 1; i < poly.vertices.size(); ++i)
        if (!(poly.vertices[i] == poly.vertices[0])) distinct = true;
    if (poly.vertices.size() < 2 || !distinct)
        throw std::runtime_error("degenerate polygon: fewer than 2 distinct dominant points");
    return poly;
}

double segment_length(Vec2 d1, Vec2 d2) { return distance(d1, d2); }

double fitness(Vec2 p, Vec2 d1, Vec2 d2) {
    if (d1 == d2)
        throw std::invalid_argument("fitness: segment endpoints coincide");
    const double num = std::abs((d2.y - d1.y) * p.x - (d2.x - d1.x) * p.y +
                                d2.x * d1.y - d2.y * d1.x);
    return num / segment_length(d1, d2);
}

double segment_distance(Vec2 p, Vec2 d1, Vec2 d2) {
    const Vec2 d = d2 - d1;
    const double len_sq = d.norm_sq();
    if (len_sq == 0.0) return distance(p, d1);
    const double t = std::clamp(dot(p - d1, d) / len_sq, 0.0, 1.0);
    return distance(p, d1 + d * t);
}

Rect swarm_init_bounds(const Polygon& polygon, const Rect& frame_bounds) {
    double min_x = polygon.vertices.front().x, max_x = min_x;
    double min_y = polygon.vertices.front().y, max_y = min_y;
    for (const Vec2& v : polygon.vertices) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        min_y = std::min(min_y, v.y);
        max_y = std::max(max_y, v.y);
    }
    const double margin = std::max(5.0, 0.15 * std::max(max_x - min_x, max_y - min_y));
    const double x0 = std::max(frame_bounds.x, min_x - margin);
    const double y0 = std::max(frame_bounds.y, min_y - margin);
    const double x1 = std::min(frame_bounds.x + frame_bounds.w, max_x + margin);
    const double y1 = std::min(frame_bounds.y + frame_bounds.h, max_y + margin);
    return {x0, y0, x1 - x0, y1 - y0};
}

std::vector<Particle> init_particles(const Rect& bounds, const PsoParams& params, Rng& rng) {
    if (params.population < 1)
        throw std::invalid_argument("init_particles: population must be >= 1");
    std::vector<Particle> particles(params.population);
    for (Particle& p : particles) {
        p.position = {rng.uniform(bounds.x, bounds.x + bounds.w),
                      rng.uniform(bounds.y, bounds.y + bounds.h)};
        p.velocity = draw_velocity(params, rng);
        p.pbest_position = p.position;
        p.pbest_fitness = 0.0;  // evaluated once a segment is assigned
        p.status = ParticleStatus::searching;
        p.last_frame_position = p.position;
        p.prev_frame_position = p.position;
    }
    return particles;
}

std::vector<Swarm> assign_swarms(std::vector<Particle>& particles, const Polygon& polygon) {
    std::vector<Swarm> swarms(polygon.segment_count());
    for (int s = 0; s < polygon.segment_count(); ++s) swarms[s].segment_id = s;
    for (std::size_t i = 0; i < particles.size(); ++i) {
        const int s = argmin_segment(polygon, particles[i].position);
        const auto [d1, d2] = polygon.segment(s);
        particles[i].swarm_id = s;
        particles[i].pbest_position = particles[i].position;
        particles[i].pbest_fitness = fitness(particles[i].position, d1, d2);
        swarms[s].members.push_back(static_cast<int>(i));
    }
    return swarms;
}

void init_gbest(Swarm& swarm, const Polygon& polygon, std::span<const Particle> particles,
                const PsoParams& params) {
    const auto [d1, d2] = polygon.segment(swarm.segment_id);
    if (swarm.members.empty()) {
        swarm.gbest_position = polygon.segment_midpoint(swarm.segment_id);
        swarm.gbest_fitness = working_fitness(params, polygon, swarm.segment_id,
                                              swarm.gbest_position);
        return;
    }
    // The endpoint-distance rule picks the member; the stored value uses the
    // same metric as later best-keeping so updates stay comparable.
    int best = swarm.members.front();
    double best_dist = std::numeric_limits<double>::infinity();
    for (int idx : swarm.members) {
        const Vec2 pos = particles[idx].position;
        const double dist = std::min(distance(pos, d1), distance(pos, d2));
        if (dist < best_dist) {
            best_dist = dist;
            best = idx;
        }
    }
    swarm.gbest_position = particles[best].position;
    swarm.gbest_fitness =
        working_fitness(params, polygon, swarm.segment_id, swarm.gbest_position);
}

void update_particle(Particle& p, Vec2 gbest, const PsoParams& params, Rng& rng,
                     const Rect& bounds) {
    const double r1 = rng.uniform_int(params.r1_min, params.r1_max);
    const double r2 = rng.uniform_int(params.r2_min, params.r2_max);
    Vec2 v{params.w * p.velocity.x + params.c1 * r1 * (p.pbest_position.x - p.position.x) +
               params.c2 * r2 * (gbest.x - p.position.x),
           params.w * p.velocity.y + params.c1 * r1 * (p.pbest_position.y - p.position.y) +
               params.c2 * r2 * (gbest.y - p.position.y)};
    v.x = std::clamp(v.x, -params.v_max, params.v_max);
    v.y = std::clamp(v.y, -params.v_max, params.v_max);
    p.velocity = v;
    p.position += v;
    p.position.x = std::clamp(p.position.x, bounds.x, bounds.x + bounds.w);
    p.position.y = std::clamp(p.position.y, bounds.y, bounds.y + bounds.h);
}

void update_bests(Swarm& swarm, std::vector<Particle>& particles, const Polygon& polygon,
                  const PsoParams& params) {
    for (int idx : swarm.members) {
        Particle& p = particles[idx];
        const double f = working_fitness(params, polygon, swarm.segment_id, p.position);
        if (f < p.pbest_fitness) {
            p.pbest_fitness = f;
            p.pbest_position = p.position;
        }
    }
    for (int idx : swarm.members) {
        const Particle& p = particles[idx];
        if (p.pbest_fitness < swarm.gbest_fitness) {
            swarm.gbest_fitness = p.pbest_fitness;
            swarm.gbest_position = p.pbest_position;
        }
    }
}

void reinit_diverged(Particle& p, const Polygon& polygon, const PsoParams& params, Rng& rng) {
    const auto [d1, d2] = polygon.segment(p.swarm_id);
    p.position = d1;  // first endpoint by convention
    p.velocity = draw_velocity(params, rng);
    p.pbest_position = p.position;
    p.pbest_fitness = fitness(p.position, d1, d2);
    p.status = ParticleStatus::searching;
    p.diverge_count = 0;
}

std::optional<int> nearest_moving_accepted(std::span<const Particle> particles, Vec2 last_known,
                                           std::span<const char> exclude) {
    std::vector<int> accepted;
    for (std::size_t i = 0; i < particles.size(); ++i) {
        if (particles[i].status != ParticleStatus::converged) continue;
        if (i < exclude.size() && exclude[i]) continue;
        accepted.push_back(static_cast<int>(i));
    }
    std::sort(accepted.begin(), accepted.end(), [&](int a, int b) {
        const double da = distance(particles[a].position, last_known);
        const double db = distance(particles[b].position, last_known);
        if (da != db) return da < db;
        return a < b;
    });
    for (int idx : accepted)
        if (particles[idx].moving()) return idx;
    return std::nullopt;
}

std::optional<Vec2> reinit_dominant_point(std::size_t lost_index,
                                          std::span<const Particle> particles,
                                          std::span<Vec2> dominants) {
    const auto pick = nearest_moving_accepted(particles, dominants[lost_index]);
    if (!pick) return std::nullopt;
    dominants[lost_index] = particles[*pick].position;
    return dominants[lost_index];
}

MultiSwarm init_multiswarm(const Rect& init_bounds, const Rect& clamp_bounds,
                           const Polygon& polygon, const PsoParams& params, Rng& rng) {
    MultiSwarm ms;
    ms.bounds = clamp_bounds;
    ms.tracked_polygon = polygon;
    ms.particles = init_particles(init_bounds, params, rng);
    ms.swarms = assign_swarms(ms.particles, polygon);
    for (Particle& p : ms.particles)
        p.pbest_fitness = working_fitness(params, polygon, p.swarm_id, p.pbest_position);
    for (Swarm& s : ms.swarms) init_gbest(s, polygon, ms.particles, params);
    return ms;
}

void begin_frame(MultiSwarm& ms, const Polygon& polygon, const PsoParams& params) {
    ms.iterations_this_frame = 0;
    const bool same_segments =
        static_cast<int>(ms.swarms.size()) == polygon.segment_count() &&
        ms.tracked_polygon.segment_count() == polygon.segment_count();
    if (same_segments) {
        // Carry the ring along with the boundary it tracks: each particle
        // moves with its segment's vertex displacements, interpolated by its
        // projection onto the old segment.
        for (Particle& p : ms.particles) {
            const auto [old_d1, old_d2] = ms.tracked_polygon.segment(p.swarm_id);
            const auto [new_d1, new_d2] = polygon.segment(p.swarm_id);
            const Vec2 axis = old_d2 - old_d1;
            const double len_sq = axis.norm_sq();
            const double t =
                len_sq > 0.0 ? std::clamp(dot(p.position - old_d1, axis) / len_sq, 0.0, 1.0)
                             : 0.0;
            const Vec2 shift{(new_d1.x - old_d1.x) * (1.0 - t) + (new_d2.x - old_d2.x) * t,
                             (new_d1.y - old_d1.y) * (1.0 - t) + (new_d2.y - old_d2.y) * t};
            p.position += shift;
            p.pbest_position += shift;
            p.position.x = std::clamp(p.position.x, ms.bounds.x, ms.bounds.x + ms.bounds.w);
            p.position.y = std::clamp(p.position.y, ms.bounds.y, ms.bounds.y + ms.bounds.h);
        }
    } else {
        // Segment count changed (vertex merge or loss): redistribute everyone.
        ms.swarms = assign_swarms(ms.particles, polygon);
    }
    ms.tracked_polygon = polygon;
    for (Particle& p : ms.particles) {
        p.status = ParticleStatus::searching;
        p.diverge_count = 0;
        p.pbest_fitness = working_fitness(params, polygon, p.swarm_id, p.pbest_position);
    }
    for (Swarm& s : ms.swarms) {
        s.gbest_fitness = std::numeric_limits<double>::infinity();
        for (int idx : s.members) {
            const Particle& p = ms.particles[idx];
            if (p.pbest_fitness < s.gbest_fitness) {
                s.gbest_fitness = p.pbest_fitness;
                s.gbest_position = p.pbest_position;
            }
        }
        if (s.members.empty()) {
            s.gbest_position = polygon.segment_midpoint(s.segment_id);
            s.gbest_fitness = working_fitness(params, polygon, s.segment_id, s.gbest_position);
        }
    }
}

void snapshot_frame_positions(MultiSwarm& ms) {
    for (Particle& p : ms.particles) {
        p.prev_frame_position = p.last_frame_position;
        p.last_frame_position = p.position;
    }
}

StepReport step_swarms(MultiSwarm& ms, const Polygon& polygon, const PsoParams& params,
                       Rng& rng) {
    StepReport report;
    ++ms.iterations_this_frame;

    for (Swarm& swarm : ms.swarms) {
        bool any_update = false;
        for (int idx : swarm.members) {
            Particle& p = ms.particles[idx];
            if (p.status == ParticleStatus::converged) continue;
            const double f = working_fitness(params, polygon, swarm.segment_id, p.position);
            if (f <= params.accept_tol) {
                p.status = ParticleStatus::converged;
                p.diverge_count = 0;
                continue;
            }
            if (f > params.diverge_tol) {
                if (++p.diverge_count >= params.diverge_patience) {
                    p.status = ParticleStatus::diverged;
                    reinit_diverged(p, polygon, params, rng);
                    ++report.diverged_reinits;
                    ++ms.total_diverged_reinits;
                    any_update = true;
                    continue;
                }
            } else {
                p.diverge_count = 0;
            }
            update_particle(p, swarm.gbest_position, params, rng, ms.bounds);
            if (params.stagnation_speed > 0.0 && p.velocity.norm() < params.stagnation_speed)
                p.velocity = draw_velocity(params, rng);
            any_update = true;
        }
        if (any_update) update_bests(swarm, ms.particles, polygon, params);
    }

    int accepted = 0;
    for (const Particle& p : ms.particles)
        if (p.status == ParticleStatus::converged) ++accepted;
    report.accepted = accepted;

    if (accepted == static_cast<int>(ms.particles.size()))
        report.status = StepStatus::converged;
    else if (ms.iterations_this_frame >= params.max_iter_per_frame)
        report.status = StepStatus::exhausted;
    else
        report.status = StepStatus::iterating;
    return report;
}

StepReport run_frame(MultiSwarm& ms, const Polygon& polygon, const PsoParams& params, Rng& rng) {
    StepReport report;
    int reinits = 0;
    do {
        report = step_swarms(ms, polygon, params, rng);
        reinits += report.diverged_reinits;
    } while (report.status == StepStatus::iterating);
    report.diverged_reinits = reinits;
    return report;
}

std::vector<Vec2> accepted_positions(const MultiSwarm& ms) {
    std::vector<Vec2> out;
    for (const Particle& p : ms.particles)
        if (p.status == ParticleStatus::converged) out.push_back(p.position);
    return out;
}

}  // namespace dualtrack::pso
