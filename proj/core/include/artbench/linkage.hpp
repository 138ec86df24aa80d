#pragma once

#include <span>
#include <string>
#include <string_view>

namespace artbench {

/// HAC-style reduction applied to per-category activation/match values.
enum class LinkageMethod { kSingle, kComplete, kMedian, kAverage, kWeighted, kCentroid };

inline constexpr LinkageMethod kAllLinkageMethods[] = {
    LinkageMethod::kSingle,   LinkageMethod::kComplete, LinkageMethod::kMedian,
    LinkageMethod::kAverage,  LinkageMethod::kWeighted, LinkageMethod::kCentroid,
};

/// Accepts "single", "complete", "median", "average", "weighted", "centroid";
/// throws std::invalid_argument otherwise.
LinkageMethod parse_linkage(std::string_view name);

std::string to_string(LinkageMethod m);

/// Reduces a nonempty value list: single=max, complete=min, median (mean of
/// the middle two for even counts), average=mean, weighted=sum of
/// counts[j]/sum(counts) * values[j]. kCentroid has no value-list form and
/// throws; callers evaluate it on the centroid weight directly.
double hac_reduce(std::span<const double> values, LinkageMethod m,
                  std::span<const long long> counts = {});

}  // namespace artbench
