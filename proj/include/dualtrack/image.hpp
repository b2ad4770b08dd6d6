#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace dualtrack {

/// Grayscale raster with intensities normalized to [0, 1], row-major storage.
struct GrayFrame {
    int width = 0;
    int height = 0;
    std::vector<float> data;
    int index = 0;

    GrayFrame() = default;
    GrayFrame(int w, int h, float fill = 0.0f)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

    [[nodiscard]] bool in_bounds(int x, int y) const {
        return x >= 0 && x < width && y >= 0 && y < height;
    }

    [[nodiscard]] float at(int x, int y) const {
        assert(in_bounds(x, y));
        return data[static_cast<std::size_t>(y) * width + x];
    }

    float& at(int x, int y) {
        assert(in_bounds(x, y));
        return data[static_cast<std::size_t>(y) * width + x];
    }

    /// True when (x, y) lies inside the bilinear interpolation domain.
    [[nodiscard]] bool in_sample_domain(double x, double y) const {
        return x >= 0.0 && x <= width - 1.0 && y >= 0.0 && y <= height - 1.0;
    }

    /// Bilinear sample; caller must keep (x, y) inside the sample domain.
    [[nodiscard]] double sample_bilinear(double x, double y) const;
};

/// Boolean foreground mask with the same layout as GrayFrame.
struct BinaryImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    BinaryImage() = default;
    BinaryImage(int w, int h, bool fill = false)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill ? 1 : 0) {}

    [[nodiscard]] bool in_bounds(int x, int y) const {
        return x >= 0 && x < width && y >= 0 && y < height;
    }

    [[nodiscard]] bool at(int x, int y) const {
        assert(in_bounds(x, y));
        return data[static_cast<std::size_t>(y) * width + x] != 0;
    }

    void set(int x, int y, bool v) {
        assert(in_bounds(x, y));
        data[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0;
    }

    /// Out-of-bounds pixels read as background.
    [[nodiscard]] bool foreground(int x, int y) const {
        return in_bounds(x, y) && at(x, y);
    }
};

}  // namespace dualtrack
