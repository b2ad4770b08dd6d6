#pragma once

#include <vector>

#include "dualtrack/geometry.hpp"
#include "dualtrack/image.hpp"

namespace dualtrack::contour {

/// Freeman 8-direction chain: 0=E, 1=NE, 2=N, 3=NW, 4=W, 5=SW, 6=S, 7=SE
/// (image coordinates, y down). points[i+1] is the neighbor of points[i] in
/// direction codes[i]; for a closed chain the last code leads back to the seed.
struct ChainCode {
    PixelCoord seed;
    std::vector<int> codes;
    std::vector<PixelCoord> points;
    bool closed = false;
};

PixelCoord chain_step(PixelCoord p, int code);

/// Contour pixels surviving linear-point elimination, in trace order.
struct Breakpoints {
    std::vector<PixelCoord> points;
    bool closed = false;
};

struct DominantPoint {
    PixelCoord position;
    int support_k = 0;
    double cosine = 0.0;
};

struct DominantPoints {
    std::vector<DominantPoint> points;
    bool closed = false;
};

enum class BackgroundMode { static_scene, variable_scene };

/// Breakpoint group size: 5 for static backgrounds, 10 for variable ones.
int group_size_for(BackgroundMode mode);

/// Contiguous index range [begin, begin + count) into a breakpoint sequence.
struct Group {
    int begin = 0;
    int count = 0;
};

/// Moore-neighbor boundary trace from a foreground boundary seed. The trace
/// stops when the first directed step out of the seed repeats, so thin
/// structures are walked out and back (points may repeat). An isolated pixel
/// yields empty codes. Throws when the seed is not a foreground boundary pixel.
ChainCode trace_contour(const BinaryImage& image, PixelCoord seed);

/// Drops every point whose incoming and outgoing chain codes are equal.
/// The first point is always kept; open chains also keep the last point;
/// chains with fewer than 2 codes pass through unchanged.
Breakpoints extract_breakpoints(const ChainCode& chain);

/// Consecutive groups of group_size_for(mode); the final group keeps the
/// remainder. Throws on an empty breakpoint sequence.
std::vector<Group> group_breakpoints(const Breakpoints& bps, BackgroundMode mode);

/// Cosine of the angle at point i between the arms to points i-k and i+k.
/// Closed sequences index cyclically, open ones clamp at the ends.
/// A zero-length arm yields -1 (straight, never selected).
double k_cosine(const Breakpoints& bps, int i, int k);

/// Per group, each breakpoint gets the maximal cosine over k = 1..group size
/// (smallest k wins ties); the group's maximal-cosine breakpoints become
/// dominant with all ties kept. Fewer than 3 breakpoints pass through as-is.
DominantPoints detect_dominant_points(const Breakpoints& bps, BackgroundMode mode);

}  // namespace dualtrack::contour
