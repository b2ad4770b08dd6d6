#include "dualtrack/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace dualtrack::eval {

namespace {

struct FrameJudgement {
    bool truth_present = false;
    bool box_present = false;
    double iou = 0.0;
    double center_error = -1.0;
};

std::vector<FrameJudgement> judge_frames(std::span<const ResultRow> rows,
                                         const io::GroundTruthTrack& truth) {
    const int n = static_cast<int>(truth.size());
    std::vector<FrameJudgement> judged(n);
    for (int f = 0; f < n; ++f) judged[f].truth_present = truth.entries[f].has_value();
    for (const ResultRow& row : rows) {
        if (row.frame < 0 || row.frame >= n)
            throw std::runtime_error("eval: result row frame " + std::to_string(row.frame) +
                                     " outside ground-truth range");
        if (!row.box) continue;
        FrameJudgement& j = judged[row.frame];
        j.box_present = true;
        if (j.truth_present) {
            const Rect& gt = *truth.entries[row.frame];
            j.iou = overlap_score(*row.box, gt);
            j.center_error = distance(row.box->center(), gt.center());
        }
    }
    return judged;
}

std::string format_fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

}  // namespace

double overlap_score(const Rect& a, const Rect& b) {
    if (a.area() <= 0.0 || b.area() <= 0.0)
        throw std::invalid_argument("overlap_score: rectangles must have positive area");
    const double ix = std::max(0.0, std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x));
    const double iy = std::max(0.0, std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y));
    const double inter = ix * iy;
    const double uni = a.area() + b.area() - inter;
    return inter / uni;
}

DetectionCounts td_fd_md(std::span<const ResultRow> rows, const io::GroundTruthTrack& truth,
                         double iou_threshold, SuccessRule rule) {
    DetectionCounts counts;
    const auto judged = judge_frames(rows, truth);

    // Re-walk rows for the center_ratio rule, which needs the raw rectangles.
    std::vector<const Rect*> boxes(truth.size(), nullptr);
    for (const ResultRow& row : rows)
        if (row.box) boxes[row.frame] = &*row.box;

    int present = 0;
    for (std::size_t f = 0; f < judged.size(); ++f) {
        const FrameJudgement& j = judged[f];
        if (!j.truth_present) continue;
        ++present;
        if (!j.box_present) {
            ++counts.n_md;
            continue;
        }
        bool success;
        if (rule == SuccessRule::overlap) {
            success = j.iou >= iou_threshold;
        } else {
            const Rect& gt = *truth.entries[f];
            const Rect& box = *boxes[f];
            success = j.center_error <= box.area() / gt.area();
        }
        if (success)
            ++counts.n_td;
        else
            ++counts.n_fd;
    }
    counts.TD = present > 0 ? 100.0 * counts.n_td / present : 0.0;
    counts.FD =
        counts.n_td + counts.n_fd > 0 ? 100.0 * counts.n_fd / (counts.n_td + counts.n_fd) : 0.0;
    counts.MD =
        counts.n_td + counts.n_md > 0 ? 100.0 * counts.n_md / (counts.n_td + counts.n_md) : 0.0;
    return counts;
}

std::vector<std::pair<double, double>> precision_curve(std::span<const ResultRow> rows,
                                                       const io::GroundTruthTrack& truth,
                                                       std::span<const double> thresholds) {
    if (thresholds.empty()) return {};
    if (!std::is_sorted(thresholds.begin(), thresholds.end()))
        throw std::invalid_argument("precision_curve: thresholds must ascend");
    const auto judged = judge_frames(rows, truth);
    std::vector<std::pair<double, double>> curve;
    curve.reserve(thresholds.size());
    for (double t : thresholds) {
        int present = 0, within = 0;
        for (const FrameJudgement& j : judged) {
            if (!j.truth_present) continue;
            ++present;
            if (j.box_present && j.center_error <= t) ++within;
        }
        curve.emplace_back(t, present > 0 ? static_cast<double>(within) / present : 0.0);
    }
    return curve;
}

std::pair<std::vector<std::pair<double, double>>, double> success_curve(
    std::span<const ResultRow> rows, const io::GroundTruthTrack& truth,
    std::span<const double> thresholds) {
    if (!std::is_sorted(thresholds.begin(), thresholds.end()))
        throw std::invalid_argument("success_curve: thresholds must ascend");
    const auto judged = judge_frames(rows, truth);
    int present = 0;
    double iou_sum = 0.0;
    for (const FrameJudgement& j : judged) {
        if (!j.truth_present) continue;
        ++present;
        if (j.box_present) iou_sum += j.iou;
    }
    const double aos = present > 0 ? iou_sum / present : 0.0;

    std::vector<std::pair<double, double>> curve;
    curve.reserve(thresholds.size());
    for (double t : thresholds) {
        int over = 0;
        for (const FrameJudgement& j : judged)
            if (j.truth_present && j.box_present && j.iou > t) ++over;
        curve.emplace_back(t, present > 0 ? static_cast<double>(over) / present : 0.0);
    }
    return {curve, aos};
}

double lsm(std::span<const ResultRow> rows, const io::GroundTruthTrack& truth,
           double iou_threshold, double F) {
    if (F <= 0.0 || F > 1.0) throw std::invalid_argument("lsm: F must lie in (0, 1]");
    const auto judged = judge_frames(rows, truth);

    // Success flags per truth-present frame, split into runs at absent frames.
    std::vector<std::vector<bool>> runs;
    std::vector<bool> cur;
    int present = 0;
    for (const FrameJudgement& j : judged) {
        if (!j.truth_present) {
            if (!cur.empty()) runs.push_back(std::move(cur));
            cur.clear();
            continue;
        }
        ++present;
        cur.push_back(j.box_present && j.iou >= iou_threshold);
    }
    if (!cur.empty()) runs.push_back(std::move(cur));
    if (present == 0) return 0.0;

    int longest = 0;
    for (const auto& run : runs) {
        const int n = static_cast<int>(run.size());
        std::vector<int> prefix(n + 1, 0);
        for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + (run[i] ? 1 : 0);
        for (int i = 0; i < n; ++i)
            for (int j = i + longest; j < n; ++j) {  // only windows that can improve
                const int len = j - i + 1;
                const int successes = prefix[j + 1] - prefix[i];
                if (static_cast<double>(successes) >= F * len) longest = std::max(longest, len);
            }
    }
    return static_cast<double>(longest) / present;
}

std::vector<double> default_precision_thresholds() {
    std::vector<double> t;
    for (int i = 1; i <= 50; ++i) t.push_back(i);
    return t;
}

std::vector<double> default_success_thresholds() {
    std::vector<double> t;
    for (int i = 0; i <= 20; ++i) t.push_back(i * 0.05);
    return t;
}

MetricReport evaluate(std::span<const ResultRow> rows, const io::GroundTruthTrack& truth,
                      const EvalParams& params) {
    MetricReport report;
    report.detections = td_fd_md(rows, truth, params.iou_threshold, params.rule);

    const auto pt = params.precision_thresholds.empty() ? default_precision_thresholds()
                                                        : params.precision_thresholds;
    const auto st = params.success_thresholds.empty() ? default_success_thresholds()
                                                      : params.success_thresholds;
    report.precision_curve = precision_curve(rows, truth, pt);
    auto [curve, aos] = success_curve(rows, truth, st);
    report.success_curve = std::move(curve);
    report.AOS = aos;
    report.LSM = lsm(rows, truth, params.iou_threshold, params.lsm_fraction);

    const auto p20 = precision_curve(rows, truth, std::vector<double>{20.0});
    report.precision_at_20 = p20.empty() ? 0.0 : p20.front().second;

    const auto judged = judge_frames(rows, truth);
    for (const FrameJudgement& j : judged) {
        report.frame_iou.push_back(j.truth_present ? j.iou : -1.0);
        report.frame_center_error.push_back(j.truth_present ? j.center_error : -1.0);
    }
    return report;
}

void emit_plots(const MetricReport& report, const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (!fs::is_directory(out_dir))
        throw std::runtime_error("emit_plots: cannot create output directory " + out_dir);

    {
        std::ofstream out(fs::path(out_dir) / "precision.csv", std::ios::binary);
        out << "threshold,fraction\n";
        for (const auto& [t, f] : report.precision_curve)
            out << format_fixed(t, 2) << "," << format_fixed(f, 6) << "\n";
    }
    {
        std::ofstream out(fs::path(out_dir) / "success.csv", std::ios::binary);
        out << "threshold,fraction\n";
        for (const auto& [t, f] : report.success_curve)
            out << format_fixed(t, 2) << "," << format_fixed(f, 6) << "\n";
    }
    {
        std::ofstream out(fs::path(out_dir) / "summary.txt", std::ios::binary);
        out << "TD " << format_fixed(report.detections.TD, 4) << "\n"
            << "FD " << format_fixed(report.detections.FD, 4) << "\n"
            << "MD " << format_fixed(report.detections.MD, 4) << "\n"
            << "AOS " << format_fixed(report.AOS, 6) << "\n"
            << "LSM " << format_fixed(report.LSM, 6) << "\n"
            << "precision@20 " << format_fixed(report.precision_at_20, 6) << "\n";
    }
}

}  // namespace dualtrack::eval
