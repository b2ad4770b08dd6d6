#include "dualtrack/render.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace dualtrack::render {

RgbImage::RgbImage(const GrayFrame& frame)
    : width(frame.width), height(frame.height), data(frame.data.size() * 3) {
    for (std::size_t i = 0; i < frame.data.size(); ++i) {
        double v = frame.data[i];
        if (v < 0) v = 0;
        if (v > 1) v = 1;
        const auto g = static_cast<std::uint8_t>(v * 255.0 + 0.5);
        data[3 * i] = g;
        data[3 * i + 1] = g;
        data[3 * i + 2] = g;
    }
}

void RgbImage::set(int x, int y, Color c) {
    if (x < 0 || x >= width || y < 0 || y >= height) return;
    const std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
    data[i] = c[0];
    data[i + 1] = c[1];
    data[i + 2] = c[2];
}

void draw_disk(RgbImage& img, Vec2 center, int radius, Color c) {
    const int cx = static_cast<int>(std::lround(center.x));
    const int cy = static_cast<int>(std::lround(center.y));
    for (int dy = -radius; dy <= radius; ++dy)
        for (int dx = -radius; dx <= radius; ++dx)
            if (dx * dx + dy * dy <= radius * radius) img.set(cx + dx, cy + dy, c);
}

void draw_rect_outline(RgbImage& img, const Rect& r, Color c) {
    const int x0 = static_cast<int>(std::lround(r.x));
    const int y0 = static_cast<int>(std::lround(r.y));
    const int x1 = static_cast<int>(std::lround(r.x + r.w));
    const int y1 = static_cast<int>(std::lround(r.y + r.h));
    for (int x = x0; x <= x1; ++x) {
        img.set(x, y0, c);
        img.set(x, y1, c);
    }
    for (int y = y0; y <= y1; ++y) {
        img.set(x0, y, c);
        img.set(x1, y, c);
    }
}

void write_ppm(const RgbImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "P6\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.data.data()),
              static_cast<std::streamsize>(img.data.size()));
}

}  // namespace dualtrack::render
