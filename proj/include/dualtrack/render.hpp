#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dualtrack/geometry.hpp"
#include "dualtrack/image.hpp"

namespace dualtrack::render {

using Color = std::array<std::uint8_t, 3>;

inline constexpr Color kGreen{0, 200, 0};    // dominant points
inline constexpr Color kRed{220, 0, 0};      // swarm particles
inline constexpr Color kYellow{240, 220, 0}; // bounding box

struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // interleaved rgb

    RgbImage() = default;
    explicit RgbImage(const GrayFrame& frame);

    void set(int x, int y, Color c);
};

void draw_disk(RgbImage& img, Vec2 center, int radius, Color c);
void draw_rect_outline(RgbImage& img, const Rect& r, Color c);
void write_ppm(const RgbImage& img, const std::string& path);

}  // namespace dualtrack::render
