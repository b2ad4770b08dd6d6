#include "dualtrack/contour.hpp"

#include <cmath>
#include <stdexcept>

namespace dualtrack::contour {

namespace {

// Neighbor offsets indexed by chain code: 0=E, 1=NE, 2=N, 3=NW, 4=W, 5=SW, 6=S, 7=SE.
constexpr int kDx[8] = {1, 1, 0, -1, -1, -1, 0, 1};
constexpr int kDy[8] = {0, -1, -1, -1, 0, 1, 1, 1};

int direction_between(PixelCoord from, PixelCoord to) {
    const int dx = to.x - from.x;
    const int dy = to.y - from.y;
    for (int d = 0; d < 8; ++d)
        if (kDx[d] == dx && kDy[d] == dy) return d;
    throw std::logic_error("pixels are not 8-neighbors");
}

}  // namespace

int group_size_for(BackgroundMode mode) {
    return mode == BackgroundMode::static_scene ? 5 : 10;
}

PixelCoord chain_step(PixelCoord p, int code) {
    return {p.x + kDx[code], p.y + kDy[code]};
}

ChainCode trace_contour(const BinaryImage& image, PixelCoord seed) {
    if (!image.foreground(seed.x, seed.y))
        throw std::runtime_error("trace_contour: seed is not a foreground pixel");

    // Initial backtrack: first background neighbor scanning clockwise from W.
    int backtrack_dir = -1;
    for (int i = 0; i < 8; ++i) {
        const int d = (4 - i + 8) % 8;  // W, NW, N, NE, E, SE, S, SW
        if (!image.foreground(seed.x + kDx[d], seed.y + kDy[d])) {
            backtrack_dir = d;
            break;
        }
    }
    if (backtrack_dir < 0)
        throw std::runtime_error("trace_contour: seed is not a boundary pixel");

    ChainCode chain;
    chain.seed = seed;
    chain.points.push_back(seed);

    // Clockwise Moore scan: from the backtrack direction, probe decreasing codes.
    const auto next_move = [&](PixelCoord p, int back_dir) -> int {
        for (int i = 1; i <= 8; ++i) {
            const int d = (back_dir - i + 16) % 8;
            if (image.foreground(p.x + kDx[d], p.y + kDy[d])) return d;
        }
        return -1;
    };

    const int first_dir = next_move(seed, backtrack_dir);
    if (first_dir < 0) return chain;  // isolated pixel

    PixelCoord cur = seed;
    int back = backtrack_dir;
    const long max_steps = 8L * image.width * image.height + 8;
    for (long step = 0; step < max_steps; ++step) {
        const int d = next_move(cur, back);
        chain.codes.push_back(d);
        const PixelCoord next = chain_step(cur, d);
        // The clockwise scan probed direction d+1 last before hitting d; that
        // background cell becomes the new backtrack, seen from the new pixel.
        const PixelCoord bg_cell = chain_step(cur, (d + 1) % 8);
        back = direction_between(next, bg_cell);
        cur = next;
        if (cur == seed && next_move(cur, back) == first_dir) {
            // About to repeat the first directed edge: the boundary cycle is
            // complete, so the seed arrival is not recorded a second time.
            chain.closed = true;
            return chain;
        }
        chain.points.push_back(cur);
    }
    throw std::logic_error("trace_contour: step budget exceeded");
}

Breakpoints extract_breakpoints(const ChainCode& chain) {
    Breakpoints out;
    out.closed = chain.closed;
    if (chain.codes.size() < 2) {
        out.points = chain.points;
        return out;
    }
    const int n = static_cast<int>(chain.points.size());
    const int m = static_cast<int>(chain.codes.size());
    for (int i = 0; i < n; ++i) {
        if (i == 0) {
            out.points.push_back(chain.points[0]);
            continue;
        }
        const int incoming = chain.codes[i - 1];
        int outgoing;
        if (i < m) {
            outgoing = chain.codes[i];
        } else {
            // Last point of an open chain: always kept.
            out.points.push_back(chain.points[i]);
            continue;
        }
        if (incoming != outgoing) out.points.push_back(chain.points[i]);
    }
    return out;
}

std::vector<Group> group_breakpoints(const Breakpoints& bps, BackgroundMode mode) {
    if (bps.points.empty())
        throw std::invalid_argument("group_breakpoints: empty breakpoint sequence");
    const int size = group_size_for(mode);
    const int n = static_cast<int>(bps.points.size());
    std::vector<Group> groups;
    for (int begin = 0; begin < n; begin += size)
        groups.push_back({begin, std::min(size, n - begin)});
    return groups;
}

double k_cosine(const Breakpoints& bps, int i, int k) {
    const int n = static_cast<int>(bps.points.size());
    if (k < 1) throw std::invalid_argument("k_cosine: k must be >= 1");

    int ib, if_;
    if (bps.closed) {
        ib = ((i - k) % n + n) % n;
        if_ = (i + k) % n;
    } else {
        ib = std::max(0, i - k);
        if_ = std::min(n - 1, i + k);
    }
    const Vec2 p = to_vec(bps.points[i]);
    const Vec2 a = to_vec(bps.points[ib]) - p;
    const Vec2 b = to_vec(bps.points[if_]) - p;
    const double na = a.norm();
    const double nb = b.norm();
    if (na == 0.0 || nb == 0.0) return -1.0;
    return dot(a, b) / (na * nb);
}

DominantPoints detect_dominant_points(const Breakpoints& bps, BackgroundMode mode) {
    DominantPoints out;
    out.closed = bps.closed;
    const int n = static_cast<int>(bps.points.size());
    if (n < 3) {
        for (const auto& p : bps.points) out.points.push_back({p, 0, 1.0});
        return out;
    }

    for (const Group& g : group_breakpoints(bps, mode)) {
        // Eq-style two stage selection: best support per point, then the
        // group's maximal-cosine points, ties kept.
        std::vector<DominantPoint> scored(g.count);
        double group_max = -2.0;
        for (int j = 0; j < g.count; ++j) {
            const int i = g.begin + j;
            double best = -2.0;
            int best_k = 0;
            for (int k = 1; k <= g.count; ++k) {
                const double c = k_cosine(bps, i, k);
                if (c > best) {
                    best = c;
                    best_k = k;
                }
            }
            scored[j] = {bps.points[i], best_k, best};
            if (best > group_max) group_max = best;
        }
        for (const auto& dp : scored)
            if (dp.cosine == group_max) out.points.push_back(dp);
    }

    // Consecutive duplicates from adjacent groups or repeated thin-contour
    // pixels collapse to one entry; on closed contours the ends wrap.
    std::vector<DominantPoint> dedup;
    for (const auto& dp : out.points) {
        if (!dedup.empty() && dedup.back().position == dp.position) continue;
        dedup.push_back(dp);
    }
    if (out.closed && dedup.size() > 1 && dedup.front().position == dedup.back().position)
        dedup.pop_back();
    out.points = std::move(dedup);
    return out;
}

}  // namespace dualtrack::contour
