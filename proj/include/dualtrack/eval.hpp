#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dualtrack/frame_io.hpp"
#include "dualtrack/geometry.hpp"

namespace dualtrack::eval {

/// One emitted tracker row: frame index plus an optional box.
struct ResultRow {
    int frame = 0;
    std::optional<Rect> box;
    std::string status;
};

/// Frame-success rule. overlap scores boxes by IoU against a threshold;
/// center_ratio applies the centroid-distance-vs-area-ratio comparison as
/// published, for fidelity experiments only.
enum class SuccessRule { overlap, center_ratio };

struct EvalParams {
    double iou_threshold = 0.5;
    SuccessRule rule = SuccessRule::overlap;
    double lsm_fraction = 0.95;
    std::vector<double> precision_thresholds;  // defaults to 1..50 px
    std::vector<double> success_thresholds;    // defaults to 0..1 step 0.05
};

struct DetectionCounts {
    int n_td = 0;
    int n_fd = 0;
    int n_md = 0;
    double TD = 0.0;
    double FD = 0.0;
    double MD = 0.0;
};

struct MetricReport {
    DetectionCounts detections;
    std::vector<std::pair<double, double>> precision_curve;
    std::vector<std::pair<double, double>> success_curve;
    double AOS = 0.0;
    double LSM = 0.0;
    double precision_at_20 = 0.0;
    std::vector<double> frame_iou;           // -1 where truth is absent
    std::vector<double> frame_center_error;  // -1 where truth absent or no box
};

/// Intersection area over union area. Throws on non-positive-area input.
double overlap_score(const Rect& a, const Rect& b);

/// True/false/missed detection percentages over the truth's frame range.
/// A frame is true when a box exists, truth is present and the success rule
/// passes; false when the box fails the rule; missed when truth is present
/// but no box was emitted. Absent-truth frames are skipped. Throws when a row
/// references a frame outside the truth range.
DetectionCounts td_fd_md(std::span<const ResultRow> rows, const io::GroundTruthTrack& truth,
                         double iou_threshold, SuccessRule rule = SuccessRule::overlap);

/// Fraction of truth-present frames whose box center lies within each
/// threshold distance of the truth center. Thresholds must ascend.
std::vector<std::pair<double, double>> precision_curve(std::span<const ResultRow> rows,
                                                       const io::GroundTruthTrack& truth,
                                                       std::span<const double> thresholds);

/// Per threshold, the fraction of truth-present frames with IoU strictly
/// above it, plus the average overlap score.
std::pair<std::vector<std::pair<double, double>>, double> success_curve(
    std::span<const ResultRow> rows, const io::GroundTruthTrack& truth,
    std::span<const double> thresholds);

/// Longest contiguous window with at least fraction F of successful frames
/// (IoU >= iou_threshold), normalized by the truth-present frame count.
/// Absent-truth frames break runs.
double lsm(std::span<const ResultRow> rows, const io::GroundTruthTrack& truth,
           double iou_threshold, double F);

/// Runs the whole metric suite.
MetricReport evaluate(std::span<const ResultRow> rows, const io::GroundTruthTrack& truth,
                      const EvalParams& params = {});

/// Writes precision.csv, success.csv and summary.txt into out_dir with stable
/// formatting, so reruns are byte-identical.
void emit_plots(const MetricReport& report, const std::string& out_dir);

std::vector<double> default_precision_thresholds();
std::vector<double> default_success_thresholds();

}  // namespace dualtrack::eval
