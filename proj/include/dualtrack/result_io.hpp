#pragma once

#include <string>
#include <vector>

#include "dualtrack/eval.hpp"
#include "dualtrack/tracker.hpp"

namespace dualtrack::io {

/// Writes "frame,qx,qy,breadth,length,status" rows, one per tracked frame.
/// Frames without a box get NaN fields and status "lost". Two sidecar files,
/// <path>.points.csv and <path>.particles.csv, carry the dominant points and
/// particle states for the overlay renderer.
void write_result_csv(const tracker::TrackResult& result, const std::string& path);

/// Reads the rows back for evaluation; NaN fields mean no box.
std::vector<eval::ResultRow> read_result_csv(const std::string& path);

struct PointRow {
    int frame = 0;
    Vec2 position;
    std::string state;
};

struct ParticleRow {
    int frame = 0;
    Vec2 position;
    int swarm = -1;
    std::string status;
};

std::vector<PointRow> read_points_csv(const std::string& path);
std::vector<ParticleRow> read_particles_csv(const std::string& path);

}  // namespace dualtrack::io
