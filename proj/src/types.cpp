#include "ircascade/types.hpp"

#include <cmath>
#include <unordered_set>

namespace ircascade {

void validate_topic_weights(const Eigen::VectorXd& w) {
  if (w.size() < 1) throw DataError("topic weight vector is empty");
  double sum = 0.0;
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    const double v = w[k];
    if (!std::isfinite(v) || v < 0.0 || v > 1.0 + 1e-12)
      throw DataError("topic weight outside [0, 1]");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw DataError("topic weights must sum to 1");
}

void validate_cascade(const CascadeRecord& cascade, int node_count) {
  validate_topic_weights(cascade.topics);
  if (!(cascade.window > 0.0)) throw DataError("observation window must be positive");
  if (cascade.events.empty()) throw DataError("cascade has no source event");
  if (cascade.events.front().time != 0.0) throw DataError("first event must be at time 0");

  std::unordered_set<int> seen;
  double prev = 0.0;
  for (std::size_t i = 0; i < cascade.events.size(); ++i) {
    const Event& e = cascade.events[i];
    if (i > 0 && e.time == 0.0) throw DataError("cascade has more than one event at time 0");
    if (e.time < prev) throw DataError("events not sorted by time");
    if (!(e.time <= cascade.window)) throw DataError("event time exceeds observation window");
    if (e.node < 0 || (node_count >= 0 && e.node >= node_count))
      throw DataError("event node index out of range");
    if (!seen.insert(e.node).second) throw DataError("node appears twice in cascade");
    prev = e.time;
  }
}

void validate_mask(const Eigen::MatrixXd& mask, bool binary) {
  if (mask.rows() != mask.cols()) throw std::invalid_argument("mask must be square");
  for (Eigen::Index j = 0; j < mask.rows(); ++j) {
    if (mask(j, j) != 0.0) throw std::invalid_argument("mask diagonal must be zero");
    for (Eigen::Index i = 0; i < mask.cols(); ++i) {
      const double v = mask(j, i);
      if (!std::isfinite(v) || v < 0.0) throw std::invalid_argument("mask entries must be finite and nonnegative");
      if (binary && v != 0.0 && v != 1.0) throw std::invalid_argument("friendship mask entries must be 0 or 1");
    }
  }
}

}  // namespace ircascade
