#include "corefine/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

namespace corefine::metrics {

double precision(const Mask& seg, const Mask& gt)
{
    require_same_shape(seg, gt, "precision");
    std::int64_t correct = 0;
    for (std::int64_t i = 0; i < seg.size(); ++i)
        correct += ((seg[i] != 0) == (gt[i] != 0)) ? 1 : 0;
    return static_cast<double>(correct) / static_cast<double>(seg.size());
}

double jaccard(const Mask& seg, const Mask& gt)
{
    require_same_shape(seg, gt, "jaccard");
    std::int64_t inter = 0, uni = 0;
    for (std::int64_t i = 0; i < seg.size(); ++i) {
        const bool a = seg[i] != 0, b = gt[i] != 0;
        inter += (a && b) ? 1 : 0;
        uni += (a || b) ? 1 : 0;
    }
    if (uni == 0)
        return 1.0;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

MetricsReport aggregate_report(const std::vector<SampleMetrics>& samples)
{
    std::map<std::string, ClassRow> rows;
    for (const auto& s : samples) {
        ClassRow& r = rows[s.class_name];
        r.class_name = s.class_name;
        r.count += 1;
        r.precision_init += s.precision_init;
        r.precision_refined += s.precision_refined;
        r.jaccard_init += s.jaccard_init;
        r.jaccard_refined += s.jaccard_refined;
    }

    MetricsReport report;
    report.overall.class_name = "overall";
    for (auto& [name, r] : rows) {
        report.overall.count += r.count;
        report.overall.precision_init += r.precision_init;
        report.overall.precision_refined += r.precision_refined;
        report.overall.jaccard_init += r.jaccard_init;
        report.overall.jaccard_refined += r.jaccard_refined;
        const double inv = 1.0 / r.count;
        r.precision_init *= inv;
        r.precision_refined *= inv;
        r.jaccard_init *= inv;
        r.jaccard_refined *= inv;
        report.classes.push_back(r);
    }
    if (report.overall.count > 0) {
        const double inv = 1.0 / report.overall.count;
        report.overall.precision_init *= inv;
        report.overall.precision_refined *= inv;
        report.overall.jaccard_init *= inv;
        report.overall.jaccard_refined *= inv;
    }
    return report;
}

namespace {

void append_row_text(std::string& out, const ClassRow& r)
{
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%-16s %6d  %10.4f %14.4f  %10.4f %14.4f\n",
                  r.class_name.c_str(), r.count, r.precision_init, r.precision_refined,
                  r.jaccard_init, r.jaccard_refined);
    out += buf;
}

}  // namespace

std::string MetricsReport::to_text() const
{
    std::string out;
    out += "class                 n   prec_init   prec_refined    jacc_init   jacc_refined\n";
    for (const auto& r : classes)
        append_row_text(out, r);
    append_row_text(out, overall);
    char buf[128];
    std::snprintf(buf, sizeof(buf), "delta: precision %+.4f, jaccard %+.4f\n",
                  precision_delta(), jaccard_delta());
    out += buf;
    return out;
}

std::string MetricsReport::to_csv() const
{
    std::string out = "class,n,precision_init,precision_refined,jaccard_init,jaccard_refined\n";
    auto row = [&out](const ClassRow& r) {
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%s,%d,%.6f,%.6f,%.6f,%.6f\n", r.class_name.c_str(),
                      r.count, r.precision_init, r.precision_refined, r.jaccard_init,
                      r.jaccard_refined);
        out += buf;
    };
    for (const auto& r : classes)
        row(r);
    row(overall);
    return out;
}

}  // namespace corefine::metrics
