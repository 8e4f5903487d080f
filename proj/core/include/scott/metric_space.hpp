#pragma once

#include <string>
#include <vector>

#include "scott/rational.hpp"

namespace scott {

// A tuple of point indices. Repeats are permitted at the type level;
// operations that require distinct entries collapse or reject them.
using PointTuple = std::vector<int>;

struct MetricViolation {
  enum class Axiom { Shape, Diagonal, Positivity, Symmetry, Triangle };
  Axiom axiom;
  int i = -1, j = -1, k = -1;
  std::string message;
};

// A finite point set with an exact rational distance matrix. The
// constructor only enforces matrix shape; metric axioms are checked by
// validate_metric so that deliberately broken matrices can be inspected.
class MetricSpace {
 public:
  MetricSpace(std::vector<std::string> labels,
              std::vector<std::vector<Rational>> dist);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Rational& dist(int i, int j) const { return dist_[i][j]; }
  const std::vector<std::vector<Rational>>& matrix() const { return dist_; }

  // Relabels point i as point perm[i]; distances follow. Used by the
  // relabeling-invariance tests.
  MetricSpace relabeled(const std::vector<int>& perm) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Rational>> dist_;
};

// Lists every violated metric axiom with witness indices. Empty report
// if and only if the matrix is a metric.
std::vector<MetricViolation> validate_metric(const MetricSpace& space);

// Throws ValidationError naming the first violated axiom.
void require_valid_metric(const MetricSpace& space);

// Sum of coordinatewise distances between two same-length tuples.
Rational product_distance(const MetricSpace& space, const PointTuple& s,
                          const PointTuple& t);

struct DistanceGap {
  Rational min_gap;       // least |v - w| over distinct distance values
  Rational min_positive;  // least positive distance
};

// Requires at least 2 points.
DistanceGap min_distance_gap(const MetricSpace& space);

// Exact distance-agreement check: the map a_i -> b_i preserves all
// pairwise distances. This is the atomic (partial-isomorphism) relation
// of the distance-comparison language.
bool atomic_related(const MetricSpace& space, const PointTuple& a,
                    const PointTuple& b);

}  // namespace scott
