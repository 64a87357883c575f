#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <vector>

namespace ircascade {

/// Thrown when input files or records violate the data contracts.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when an optimization or evaluation cannot proceed numerically
/// (infinite objective at a required point, degenerate inputs, ...).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelDims {
  int nodes = 0;   // p
  int topics = 0;  // K

  void validate() const {
    if (nodes < 2) throw std::invalid_argument("node count must be >= 2");
    if (topics < 1) throw std::invalid_argument("topic count must be >= 1");
    if (topics > nodes) throw std::invalid_argument("topic count must be <= node count");
  }
};

/// One infection: node index and the time it was first infected.
struct Event {
  int node = 0;
  double time = 0.0;
};

/// One observed cascade. Nodes absent from `events` stayed uninfected
/// through the whole observation window.
struct CascadeRecord {
  std::string id;
  Eigen::VectorXd topics;     // K nonnegative weights summing to 1
  std::vector<Event> events;  // sorted by time, exactly one event at t = 0
  double window = 1.0;        // T
};

/// Influence matrix B1 and receptivity matrix B2, both p x K, nonnegative.
struct FactorPair {
  Eigen::MatrixXd influence;    // B1: how strongly a node infects, per topic
  Eigen::MatrixXd receptivity;  // B2: how easily a node is infected, per topic

  int nodes() const { return static_cast<int>(influence.rows()); }
  int topics() const { return static_cast<int>(influence.cols()); }

  FactorPair() = default;
  FactorPair(Eigen::MatrixXd b1, Eigen::MatrixXd b2)
      : influence(std::move(b1)), receptivity(std::move(b2)) {
    if (influence.rows() != receptivity.rows() || influence.cols() != receptivity.cols())
      throw std::invalid_argument("influence/receptivity shape mismatch");
  }

  static FactorPair zero(const ModelDims& dims) {
    return {Eigen::MatrixXd::Zero(dims.nodes, dims.topics),
            Eigen::MatrixXd::Zero(dims.nodes, dims.topics)};
  }
};

/// Per-topic rank-unconstrained rate matrices, each p x p with zero diagonal.
using ThetaStack = std::vector<Eigen::MatrixXd>;

/// Gradient with respect to a FactorPair.
struct GradientPair {
  Eigen::MatrixXd influence;
  Eigen::MatrixXd receptivity;
};

void validate_topic_weights(const Eigen::VectorXd& w);

// Checks record invariants; p < 0 skips the node-range check.
void validate_cascade(const CascadeRecord& cascade, int node_count = -1);

void validate_mask(const Eigen::MatrixXd& mask, bool binary);

}  // namespace ircascade
