#include "dualtrack/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fs = std::filesystem;

namespace dualtrack::synth {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

// Stateless integer hash -> [0, 1); gives shapes a texture that rides along
// with integer translations.
double hash_noise(std::uint64_t seed, long x, long y) {
    std::uint64_t h = seed;
    h ^= static_cast<std::uint64_t>(x) * 0x9e3779b97f4a7c15ULL;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
    h ^= static_cast<std::uint64_t>(y) * 0xd6e8feb86659fd93ULL;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
    h ^= h >> 31;
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

bool point_in_convex_polygon(Vec2 p, const std::vector<Vec2>& verts) {
    const int n = static_cast<int>(verts.size());
    int sign = 0;
    for (int i = 0; i < n; ++i) {
        const Vec2 a = verts[i];
        const Vec2 b = verts[(i + 1) % n];
        const double c = cross_z(b - a, p - a);
        if (c == 0.0) continue;
        const int s = c > 0 ? 1 : -1;
        if (sign == 0)
            sign = s;
        else if (s != sign)
            return false;
    }
    return true;
}

struct ShapeAtFrame {
    const SceneSpec& spec;
    Vec2 offset;

    [[nodiscard]] bool contains(double px, double py) const {
        const Vec2 o = spec.shape_origin + offset;
        switch (spec.shape) {
            case ShapeKind::square:
                return px >= o.x && px < o.x + spec.shape_size && py >= o.y &&
                       py < o.y + spec.shape_size;
            case ShapeKind::lshape: {
                if (!(px >= o.x && px < o.x + spec.shape_size && py >= o.y &&
                      py < o.y + spec.shape_size))
                    return false;
                // Remove the top-right quadrant to leave two legs.
                const double half = spec.shape_size / 2.0;
                return !(px >= o.x + half && py < o.y + half);
            }
            case ShapeKind::convex_polygon: {
                std::vector<Vec2> verts = spec.polygon_vertices;
                for (Vec2& v : verts) v += offset;
                return point_in_convex_polygon({px, py}, verts);
            }
        }
        return false;
    }
};

Vec2 cumulative_offset(const SceneSpec& spec, int frame) {
    Vec2 off{0, 0};
    for (int f = 0; f < frame; ++f) {
        Vec2 vel{0, 0};
        for (const auto& [from, v] : spec.motion)
            if (f >= from) vel = v;
        off += vel;
    }
    return off;
}

}  // namespace

SynthResult generate(const SceneSpec& spec) {
    if (spec.width < 3 || spec.height < 3 || spec.frame_count < 1)
        fail("scene spec: invalid frame geometry");
    if (spec.shape == ShapeKind::convex_polygon && spec.polygon_vertices.size() < 3)
        fail("scene spec: convex polygon needs at least 3 vertices");

    SynthResult out;
    out.frames.reserve(spec.frame_count);

    for (int f = 0; f < spec.frame_count; ++f) {
        const ShapeAtFrame shape{spec, cumulative_offset(spec, f)};
        GrayFrame frame(spec.width, spec.height);
        frame.index = f;

        int min_x = spec.width, min_y = spec.height, max_x = -1, max_y = -1;
        for (int y = 0; y < spec.height; ++y) {
            for (int x = 0; x < spec.width; ++x) {
                const bool fg = shape.contains(x + 0.5, y + 0.5);
                double v;
                if (fg) {
                    min_x = std::min(min_x, x);
                    min_y = std::min(min_y, y);
                    max_x = std::max(max_x, x);
                    max_y = std::max(max_y, y);
                    v = 1.0;
                    if (spec.texture == TextureKind::noise) {
                        const long lx = x - static_cast<long>(std::lround(shape.offset.x));
                        const long ly = y - static_cast<long>(std::lround(shape.offset.y));
                        v = 1.0 - spec.noise_amplitude * hash_noise(spec.noise_seed, lx, ly);
                    }
                } else {
                    v = 0.0;
                    if (spec.background == TextureKind::noise) {
                        // Drifting background: the pattern is re-keyed per frame.
                        v = spec.background_amplitude *
                            hash_noise(spec.background_seed + static_cast<std::uint64_t>(f) * 0x51ULL,
                                       x, y);
                    }
                }
                frame.at(x, y) = static_cast<float>(v);
            }
        }
        if (max_x < 0) fail("scene spec: shape leaves the frame at frame " + std::to_string(f));
        if (min_x == 0 || min_y == 0 || max_x == spec.width - 1 || max_y == spec.height - 1)
            fail("scene spec: shape touches the border at frame " + std::to_string(f));

        for (const OcclusionEvent& occ : spec.occlusions) {
            if (f < occ.first_frame || f > occ.last_frame) continue;
            const int x0 = std::max(0, static_cast<int>(std::floor(occ.region.x)));
            const int y0 = std::max(0, static_cast<int>(std::floor(occ.region.y)));
            const int x1 = std::min(spec.width, static_cast<int>(std::ceil(occ.region.x + occ.region.w)));
            const int y1 = std::min(spec.height, static_cast<int>(std::ceil(occ.region.y + occ.region.h)));
            for (int y = y0; y < y1; ++y)
                for (int x = x0; x < x1; ++x) {
                    double v = 0.0;
                    if (spec.background == TextureKind::noise)
                        v = spec.background_amplitude *
                            hash_noise(spec.background_seed + static_cast<std::uint64_t>(f) * 0x51ULL,
                                       x, y);
                    frame.at(x, y) = static_cast<float>(v);
                }
        }

        out.frames.push_back(std::move(frame));
        out.truth.entries.emplace_back(Rect{static_cast<double>(min_x), static_cast<double>(min_y),
                                            static_cast<double>(max_x - min_x + 1),
                                            static_cast<double>(max_y - min_y + 1)});
    }
    return out;
}

SceneSpec parse_scene_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open scene spec: " + path);

    SceneSpec spec;
    spec.motion.clear();
    std::string line;
    int line_no = 0;

    const auto parse_vec = [&](const std::string& s) -> Vec2 {
        std::istringstream is(s);
        double x, y;
        char comma;
        if (!(is >> x >> comma >> y) || comma != ',')
            fail("scene spec line " + std::to_string(line_no) + ": expected 'x,y'");
        return {x, y};
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            if (b == std::string::npos) return std::string{};
            const auto e = s.find_last_not_of(" \t");
            return s.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail("scene spec line " + std::to_string(line_no) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        try {
            if (key == "width") spec.width = std::stoi(value);
            else if (key == "height") spec.height = std::stoi(value);
            else if (key == "frames") spec.frame_count = std::stoi(value);
            else if (key == "shape") {
                if (value == "square") spec.shape = ShapeKind::square;
                else if (value == "lshape") spec.shape = ShapeKind::lshape;
                else if (value == "polygon") spec.shape = ShapeKind::convex_polygon;
                else fail("scene spec line " + std::to_string(line_no) + ": unknown shape " + value);
            } else if (key == "shape_x") spec.shape_origin.x = std::stod(value);
            else if (key == "shape_y") spec.shape_origin.y = std::stod(value);
            else if (key == "shape_size") spec.shape_size = std::stod(value);
            else if (key == "vertices") {
                spec.polygon_vertices.clear();
                std::istringstream is(value);
                std::string pair;
                while (std::getline(is, pair, ';'))
                    if (!pair.empty()) spec.polygon_vertices.push_back(parse_vec(pair));
            } else if (key == "motion") {
                spec.motion.emplace_back(0, parse_vec(value));
            } else if (key == "motion_from") {
                // "frame:vx,vy" piecewise entry
                const auto colon = value.find(':');
                if (colon == std::string::npos)
                    fail("scene spec line " + std::to_string(line_no) + ": expected frame:vx,vy");
                spec.motion.emplace_back(std::stoi(value.substr(0, colon)),
                                         parse_vec(value.substr(colon + 1)));
            } else if (key == "texture") {
                spec.texture = value == "noise" ? TextureKind::noise : TextureKind::flat;
            } else if (key == "noise_seed") spec.noise_seed = std::stoull(value);
            else if (key == "noise_amplitude") spec.noise_amplitude = std::stod(value);
            else if (key == "background") {
                spec.background = value == "noise" ? TextureKind::noise : TextureKind::flat;
            } else if (key == "background_seed") spec.background_seed = std::stoull(value);
            else if (key == "background_amplitude") spec.background_amplitude = std::stod(value);
            else if (key == "occlusion") {
                std::istringstream is(value);
                std::string field;
                std::vector<double> v;
                while (std::getline(is, field, ','))
                    v.push_back(std::stod(field));
                if (v.size() != 6)
                    fail("scene spec line " + std::to_string(line_no) +
                         ": occlusion needs first,last,x,y,w,h");
                spec.occlusions.push_back({static_cast<int>(v[0]), static_cast<int>(v[1]),
                                           Rect{v[2], v[3], v[4], v[5]}});
            } else {
                fail("scene spec line " + std::to_string(line_no) + ": unknown key " + key);
            }
        } catch (const std::invalid_argument&) {
            fail("scene spec line " + std::to_string(line_no) + ": malformed number");
        }
    }
    if (spec.motion.empty()) spec.motion.emplace_back(0, Vec2{0, 0});
    std::stable_sort(spec.motion.begin(), spec.motion.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    return spec;
}

void write_scene(const SynthResult& scene, const std::string& out_dir) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (!fs::is_directory(out_dir)) fail("cannot create output directory " + out_dir);

    for (std::size_t i = 0; i < scene.frames.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "f%04zu.pgm", i + 1);
        io::write_pgm(scene.frames[i], (fs::path(out_dir) / name).string());
    }
    std::ofstream gt(fs::path(out_dir) / "groundtruth.txt", std::ios::binary);
    for (const auto& entry : scene.truth.entries) {
        if (!entry) {
            gt << "NaN,NaN,NaN,NaN\n";
            continue;
        }
        char buf[128];
        std::snprintf(buf, sizeof(buf), "%.2f,%.2f,%.2f,%.2f\n", entry->x, entry->y, entry->w,
                      entry->h);
        gt << buf;
    }
}

}  // namespace dualtrack::synth
