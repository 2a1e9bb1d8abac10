#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

#include "sw1pers/error.hpp"

namespace sw1pers {

struct RocPoint {
  double threshold;  // scores >= threshold are called positive
  double fpr;
  double tpr;
};

/// ROC curve over every distinct score, from (0, 0) to (1, 1). Tied scores
/// move together, so a tie between classes yields a diagonal step.
inline std::vector<RocPoint> roc_curve(const std::vector<double>& scores, const std::vector<bool>& positive) {
  if (scores.size() != positive.size()) throw Error(ErrorKind::InvalidArgument, "scores and labels differ in length");
  const auto pos = static_cast<std::size_t>(std::count(positive.begin(), positive.end(), true));
  const std::size_t neg = positive.size() - pos;
  if (pos == 0 || neg == 0) throw Error(ErrorKind::MissingLabels, "ROC needs both positive and negative examples");

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

  std::vector<RocPoint> curve{{std::numeric_limits<double>::infinity(), 0.0, 0.0}};
  std::size_t tp = 0, fp = 0;
  for (std::size_t i = 0; i < order.size();) {
    const double s = scores[order[i]];
    for (; i < order.size() && scores[order[i]] == s; ++i) (positive[order[i]] ? tp : fp)++;
    curve.push_back({s, static_cast<double>(fp) / neg, static_cast<double>(tp) / pos});
  }
  return curve;
}

/// Trapezoidal area under a curve from roc_curve.
inline double auc(const std::vector<RocPoint>& curve) {
  double area = 0.0;
  for (std::size_t i = 1; i < curve.size(); ++i)
    area += (curve[i].fpr - curve[i - 1].fpr) * 0.5 * (curve[i].tpr + curve[i - 1].tpr);
  return area;
}

inline double auc(const std::vector<double>& scores, const std::vector<bool>& positive) {
  return auc(roc_curve(scores, positive));
}

}  // namespace sw1pers
