#pragma once

#include <string>
#include <vector>

#include "corefine/grid.hpp"

namespace corefine::metrics {

// Fraction of pixels classified correctly, foreground and background alike.
double precision(const Mask& seg, const Mask& gt);

// Foreground intersection-over-union. Both foregrounds empty -> 1.0; exactly
// one empty -> 0.0.
double jaccard(const Mask& seg, const Mask& gt);

struct ClassRow {
    std::string class_name;
    int count = 0;
    double precision_init = 0.0;
    double precision_refined = 0.0;
    double jaccard_init = 0.0;
    double jaccard_refined = 0.0;
};

struct MetricsReport {
    std::vector<ClassRow> classes;
    ClassRow overall;  // sample-count-weighted mean of the class rows

    double precision_delta() const { return overall.precision_refined - overall.precision_init; }
    double jaccard_delta() const { return overall.jaccard_refined - overall.jaccard_init; }

    std::string to_text() const;
    std::string to_csv() const;
};

// Aggregates per-sample metric rows (one entry per image) into a report.
struct SampleMetrics {
    std::string class_name;
    double precision_init, precision_refined, jaccard_init, jaccard_refined;
};
MetricsReport aggregate_report(const std::vector<SampleMetrics>& samples);

}  // namespace corefine::metrics
