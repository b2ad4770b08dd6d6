#include "dualtrack/result_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dualtrack::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

std::string fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

const char* frame_status(const tracker::FrameRecord& rec) {
    if (!rec.box) return "lost";
    return rec.swarm_status == pso::StepStatus::exhausted ? "degraded" : "ok";
}

const char* point_state_name(tracker::PointState s) {
    switch (s) {
        case tracker::PointState::live: return "live";
        case tracker::PointState::lost: return "lost";
        case tracker::PointState::frozen: return "frozen";
    }
    return "?";
}

const char* particle_status_name(pso::ParticleStatus s) {
    switch (s) {
        case pso::ParticleStatus::searching: return "searching";
        case pso::ParticleStatus::converged: return "converged";
        case pso::ParticleStatus::diverged: return "diverged";
    }
    return "?";
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace

void write_result_csv(const tracker::TrackResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot write " + path);
    out << "frame,qx,qy,breadth,length,status\n";
    for (const auto& rec : result.frames) {
        if (rec.frame == 0) continue;  // frame 1 carries dominant points only
        out << rec.frame << ",";
        if (rec.box) {
            out << fixed4(rec.box->origin.x) << "," << fixed4(rec.box->origin.y) << ","
                << fixed4(rec.box->breadth) << "," << fixed4(rec.box->length);
        } else {
            out << "NaN,NaN,NaN,NaN";
        }
        out << "," << frame_status(rec) << "\n";
    }

    std::ofstream pts(path + ".points.csv", std::ios::binary);
    if (!pts) fail("cannot write " + path + ".points.csv");
    pts << "frame,x,y,state\n";
    for (const auto& rec : result.frames)
        for (std::size_t i = 0; i < rec.dominants.size(); ++i)
            pts << rec.frame << "," << fixed4(rec.dominants[i].x) << ","
                << fixed4(rec.dominants[i].y) << "," << point_state_name(rec.point_states[i])
                << "\n";

    std::ofstream par(path + ".particles.csv", std::ios::binary);
    if (!par) fail("cannot write " + path + ".particles.csv");
    par << "frame,x,y,swarm,status\n";
    for (const auto& rec : result.frames)
        for (std::size_t i = 0; i < rec.particle_positions.size(); ++i)
            par << rec.frame << "," << fixed4(rec.particle_positions[i].x) << ","
                << fixed4(rec.particle_positions[i].y) << "," << rec.particle_swarms[i] << ","
                << particle_status_name(rec.particle_statuses[i]) << "\n";
}

std::vector<eval::ResultRow> read_result_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open result file: " + path);
    std::vector<eval::ResultRow> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line_no == 1) continue;  // header
        const auto fields = split_csv(line);
        if (fields.size() != 6)
            fail("result file line " + std::to_string(line_no) + ": expected 6 fields");
        eval::ResultRow row;
        try {
            row.frame = std::stoi(fields[0]);
            row.status = fields[5];
            const double qx = std::stod(fields[1]);
            const double qy = std::stod(fields[2]);
            const double b = std::stod(fields[3]);
            const double l = std::stod(fields[4]);
            if (!std::isnan(qx) && !std::isnan(qy) && !std::isnan(b) && !std::isnan(l))
                row.box = Rect{qx, qy, b, l};
        } catch (const std::exception&) {
            fail("result file line " + std::to_string(line_no) + ": malformed number");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<PointRow> read_points_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open points file: " + path);
    std::vector<PointRow> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line_no == 1) continue;
        const auto fields = split_csv(line);
        if (fields.size() != 4)
            fail("points file line " + std::to_string(line_no) + ": expected 4 fields");
        rows.push_back({std::stoi(fields[0]), {std::stod(fields[1]), std::stod(fields[2])},
                        fields[3]});
    }
    return rows;
}

std::vector<ParticleRow> read_particles_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open particles file: " + path);
    std::vector<ParticleRow> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line_no == 1) continue;
        const auto fields = split_csv(line);
        if (fields.size() != 5)
            fail("particles file line " + std::to_string(line_no) + ": expected 5 fields");
        rows.push_back({std::stoi(fields[0]), {std::stod(fields[1]), std::stod(fields[2])},
                        std::stoi(fields[3]), fields[4]});
    }
    return rows;
}

}  // namespace dualtrack::io
