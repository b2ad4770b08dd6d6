#include "dualtrack/frame_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifdef DUALTRACK_HAVE_PNG
#include <png.h>
#endif

namespace fs = std::filesystem;

namespace dualtrack {

double GrayFrame::sample_bilinear(double x, double y) const {
    int x0 = static_cast<int>(x);
    int y0 = static_cast<int>(y);
    if (x0 >= width - 1) x0 = width - 2;
    if (y0 >= height - 1) y0 = height - 2;
    if (x0 < 0) x0 = 0;
    if (y0 < 0) y0 = 0;
    const double fx = x - x0;
    const double fy = y - y0;
    const double v00 = at(x0, y0);
    const double v10 = at(x0 + 1, y0);
    const double v01 = at(x0, y0 + 1);
    const double v11 = at(x0 + 1, y0 + 1);
    return v00 * (1 - fx) * (1 - fy) + v10 * fx * (1 - fy) +
           v01 * (1 - fx) * fy + v11 * fx * fy;
}

}  // namespace dualtrack

namespace dualtrack::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

bool has_extension(const fs::path& p, const char* ext) {
    std::string e = p.extension().string();
    std::transform(e.begin(), e.end(), e.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return e == ext;
}

int pnm_next_value(std::istream& in, const std::string& path) {
    // Skips whitespace and '#' comments between header tokens.
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (!std::isspace(c)) {
            break;
        }
        c = in.get();
    }
    if (c == EOF) fail("truncated PNM header in " + path);
    int value = 0;
    bool any = false;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        any = true;
        c = in.get();
    }
    if (!any) fail("malformed PNM header in " + path);
    return value;
}

GrayFrame load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open frame file: " + path);
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (magic[0] != 'P' || (magic[1] != '2' && magic[1] != '5'))
        fail("not a PGM (P2/P5) file: " + path);
    const bool binary = magic[1] == '5';
    const int w = pnm_next_value(in, path);
    const int h = pnm_next_value(in, path);
    const int maxval = pnm_next_value(in, path);
    if (w <= 0 || h <= 0 || maxval <= 0 || maxval > 65535)
        fail("bad PGM dimensions in " + path);

    GrayFrame frame(w, h);
    const std::size_t n = frame.data.size();
    const double scale = 1.0 / maxval;
    if (binary) {
        if (maxval < 256) {
            std::vector<std::uint8_t> raw(n);
            in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(n));
            if (static_cast<std::size_t>(in.gcount()) != n) fail("truncated PGM data in " + path);
            for (std::size_t i = 0; i < n; ++i)
                frame.data[i] = static_cast<float>(raw[i] * scale);
        } else {
            std::vector<std::uint8_t> raw(n * 2);
            in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(n * 2));
            if (static_cast<std::size_t>(in.gcount()) != n * 2) fail("truncated PGM data in " + path);
            for (std::size_t i = 0; i < n; ++i) {
                const int v = raw[2 * i] << 8 | raw[2 * i + 1];
                frame.data[i] = static_cast<float>(v * scale);
            }
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            int v = 0;
            if (!(in >> v)) fail("truncated PGM data in " + path);
            frame.data[i] = static_cast<float>(v * scale);
        }
    }
    return frame;
}

#ifdef DUALTRACK_HAVE_PNG
GrayFrame load_png(const std::string& path) {
    std::FILE* fp = std::fopen(path.c_str(), "rb");
    if (!fp) fail("cannot open frame file: " + path);
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        if (png) png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        fail("libpng initialization failed for " + path);
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        fail("failed to decode PNG: " + path);
    }
    png_init_io(png, fp);
    png_read_info(png, info);

    png_set_strip_16(png);
    png_set_palette_to_rgb(png);
    png_set_expand_gray_1_2_4_to_8(png);
    png_set_strip_alpha(png);
    png_read_update_info(png, info);

    const int w = static_cast<int>(png_get_image_width(png, info));
    const int h = static_cast<int>(png_get_image_height(png, info));
    const int channels = png_get_channels(png, info);

    std::vector<std::uint8_t> row(static_cast<std::size_t>(w) * channels);
    GrayFrame frame(w, h);
    for (int y = 0; y < h; ++y) {
        png_read_row(png, row.data(), nullptr);
        for (int x = 0; x < w; ++x) {
            if (channels >= 3) {
                // Luminance by channel average.
                const int sum = row[x * channels] + row[x * channels + 1] + row[x * channels + 2];
                frame.at(x, y) = static_cast<float>(sum / 3.0 / 255.0);
            } else {
                frame.at(x, y) = static_cast<float>(row[x * channels] / 255.0);
            }
        }
    }
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    return frame;
}
#endif

bool glob_match_impl(const char* p, const char* s) {
    while (*p) {
        if (*p == '*') {
            while (*p == '*') ++p;
            if (!*p) return true;
            for (; *s; ++s)
                if (glob_match_impl(p, s)) return true;
            return false;
        }
        if (!*s || (*p != '?' && *p != *s)) return false;
        ++p;
        ++s;
    }
    return !*s;
}

}  // namespace

bool glob_match(const std::string& pattern, const std::string& name) {
    return glob_match_impl(pattern.c_str(), name.c_str());
}

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
        const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
        if (da && db) {
            std::size_t ia = i, jb = j;
            while (ia < a.size() && std::isdigit(static_cast<unsigned char>(a[ia]))) ++ia;
            while (jb < b.size() && std::isdigit(static_cast<unsigned char>(b[jb]))) ++jb;
            std::string_view na(a.data() + i, ia - i);
            std::string_view nb(b.data() + j, jb - j);
            // Compare numerically: strip leading zeros, then by length, then bytewise.
            const auto strip = [](std::string_view v) {
                std::size_t k = 0;
                while (k + 1 < v.size() && v[k] == '0') ++k;
                return v.substr(k);
            };
            const auto sa = strip(na);
            const auto sb = strip(nb);
            if (sa.size() != sb.size()) return sa.size() < sb.size();
            if (sa != sb) return sa < sb;
            i = ia;
            j = jb;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() < b.size() || (a.size() == b.size() && a < b);
}

GrayFrame load_frame(const std::string& path) {
    const fs::path p(path);
    if (has_extension(p, ".pgm")) return load_pgm(path);
    if (has_extension(p, ".png")) {
#ifdef DUALTRACK_HAVE_PNG
        return load_png(path);
#else
        fail("PNG support not built in; cannot load " + path);
#endif
    }
    fail("unsupported frame format (expected .pgm or .png): " + path);
}

std::vector<GrayFrame> load_frame_sequence(const std::string& directory,
                                           const std::string& pattern) {
    if (!fs::is_directory(directory)) fail("frame directory does not exist: " + directory);

    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(directory)) {
        if (!entry.is_regular_file()) continue;
        const fs::path& p = entry.path();
        if (!has_extension(p, ".pgm") && !has_extension(p, ".png")) continue;
        if (!glob_match(pattern, p.filename().string())) continue;
        names.push_back(p.filename().string());
    }
    if (names.empty())
        fail("no frames matching '" + pattern + "' in " + directory);
    std::sort(names.begin(), names.end(), natural_less);

    std::vector<GrayFrame> frames;
    frames.reserve(names.size());
    for (const auto& name : names) {
        GrayFrame f = load_frame((fs::path(directory) / name).string());
        if (!frames.empty() &&
            (f.width != frames.front().width || f.height != frames.front().height)) {
            std::ostringstream os;
            os << "frame dimension mismatch at " << name << ": " << f.width << "x" << f.height
               << " vs " << frames.front().width << "x" << frames.front().height;
            fail(os.str());
        }
        f.index = static_cast<int>(frames.size());
        frames.push_back(std::move(f));
    }
    return frames;
}

BinaryImage binarize(const GrayFrame& frame, double threshold) {
    if (threshold < 0.0 || threshold > 1.0)
        throw std::invalid_argument("binarize threshold must lie in [0,1]");
    BinaryImage out(frame.width, frame.height);
    for (std::size_t i = 0; i < frame.data.size(); ++i)
        out.data[i] = frame.data[i] >= threshold ? 1 : 0;
    return out;
}

PixelCoord find_boundary_seed(const BinaryImage& image) {
    for (int y = 0; y < image.height; ++y) {
        for (int x = 0; x < image.width; ++x) {
            if (!image.at(x, y)) continue;
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    if (!image.foreground(x + dx, y + dy)) return {x, y};
                }
        }
    }
    fail("no target in frame");
}

GroundTruthTrack load_ground_truth(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open ground-truth file: " + path);

    GroundTruthTrack track;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::vector<std::string> fields;
        std::string cur;
        for (char c : line) {
            if (c == ',' || c == '\t') {
                fields.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        fields.push_back(cur);

        const auto is_nan = [](std::string s) {
            s.erase(std::remove_if(s.begin(), s.end(),
                                   [](unsigned char c) { return std::isspace(c); }),
                    s.end());
            std::transform(s.begin(), s.end(), s.begin(),
                           [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
            return s == "nan";
        };
        if (std::any_of(fields.begin(), fields.end(), is_nan)) {
            track.entries.emplace_back(std::nullopt);
            continue;
        }
        if (fields.size() != 4)
            fail("ground-truth line " + std::to_string(line_no) + ": expected 4 fields");
        Rect r;
        try {
            r.x = std::stod(fields[0]);
            r.y = std::stod(fields[1]);
            r.w = std::stod(fields[2]);
            r.h = std::stod(fields[3]);
        } catch (const std::exception&) {
            fail("ground-truth line " + std::to_string(line_no) + ": malformed number");
        }
        if (r.w <= 0 || r.h <= 0)
            fail("ground-truth line " + std::to_string(line_no) + ": non-positive extent");
        track.entries.emplace_back(r);
    }
    return track;
}

void write_pgm(const GrayFrame& frame, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot write " + path);
    out << "P5\n" << frame.width << " " << frame.height << "\n255\n";
    std::vector<std::uint8_t> raw(frame.data.size());
    for (std::size_t i = 0; i < frame.data.size(); ++i) {
        double v = frame.data[i];
        if (v < 0) v = 0;
        if (v > 1) v = 1;
        raw[i] = static_cast<std::uint8_t>(v * 255.0 + 0.5);
    }
    out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
}

}  // namespace dualtrack::io
