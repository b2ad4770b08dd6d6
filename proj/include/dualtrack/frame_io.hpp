#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualtrack/geometry.hpp"
#include "dualtrack/image.hpp"

namespace dualtrack::io {

/// Per-frame ground-truth rectangles; nullopt marks target-absent frames.
struct GroundTruthTrack {
    std::vector<std::optional<Rect>> entries;

    [[nodiscard]] std::size_t size() const { return entries.size(); }
};

/// Loads every grayscale frame in `directory` whose filename matches `pattern`
/// (glob with '*' and '?'), ordered by natural numeric filename sort.
/// Supported formats: PGM (P2/P5) and, when built with libpng, PNG.
/// Throws std::runtime_error on a missing directory, zero matches, an
/// undecodable file, or mixed frame dimensions.
std::vector<GrayFrame> load_frame_sequence(const std::string& directory,
                                           const std::string& pattern = "*");

/// Foreground iff intensity >= threshold. Threshold must lie in [0, 1].
BinaryImage binarize(const GrayFrame& frame, double threshold = 0.5);

/// First foreground pixel in raster (row-major, top-left) order that has at
/// least one background 8-neighbor. Throws when the image has no foreground.
PixelCoord find_boundary_seed(const BinaryImage& image);

/// Parses one "x,y,w,h" rectangle per line (comma or tab separated); a line
/// whose fields are "NaN" marks an absent frame. Throws with the offending
/// line number on malformed input or non-positive extents.
GroundTruthTrack load_ground_truth(const std::string& path);

/// Writes an 8-bit binary PGM (P5). Used by the synth generator and overlay.
void write_pgm(const GrayFrame& frame, const std::string& path);

/// Single-file load with the same decoders as load_frame_sequence.
GrayFrame load_frame(const std::string& path);

/// Natural filename order: digit runs compare numerically, the rest bytewise.
bool natural_less(const std::string& a, const std::string& b);

/// Glob match supporting '*' and '?'.
bool glob_match(const std::string& pattern, const std::string& name);

}  // namespace dualtrack::io
