#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dualtrack/frame_io.hpp"
#include "dualtrack/geometry.hpp"
#include "dualtrack/image.hpp"

namespace dualtrack::synth {

enum class ShapeKind { square, lshape, convex_polygon };
enum class TextureKind { flat, noise };

struct OcclusionEvent {
    int first_frame = 0;
    int last_frame = 0;
    Rect region;
};

/// Deterministic scene description: a hard-edged shape following a piecewise
/// translation path over a flat or noisy background.
struct SceneSpec {
    int width = 180;
    int height = 144;
    int frame_count = 60;

    ShapeKind shape = ShapeKind::square;
    Vec2 shape_origin{10, 60};
    double shape_size = 20.0;
    std::vector<Vec2> polygon_vertices;  // convex, used when shape == convex_polygon

    /// Piecewise path: from each entry's frame onward, translate by the given
    /// per-frame velocity. A single entry gives constant motion.
    std::vector<std::pair<int, Vec2>> motion{{0, {0, 0}}};

    TextureKind texture = TextureKind::flat;
    std::uint64_t noise_seed = 1;
    double noise_amplitude = 0.1;

    TextureKind background = TextureKind::flat;
    std::uint64_t background_seed = 2;
    double background_amplitude = 0.1;

    std::vector<OcclusionEvent> occlusions;
};

struct SynthResult {
    std::vector<GrayFrame> frames;
    io::GroundTruthTrack truth;
};

/// Renders the scene and its exact ground truth (tight bounds of the
/// rasterized shape per frame). Throws when the shape would leave the frame
/// anywhere along its path.
SynthResult generate(const SceneSpec& spec);

/// Parses a flat key=value scene file; unknown keys are rejected.
SceneSpec parse_scene_spec(const std::string& path);

/// Writes f0001.pgm.. plus groundtruth.txt into out_dir.
void write_scene(const SynthResult& scene, const std::string& out_dir);

}  // namespace dualtrack::synth
