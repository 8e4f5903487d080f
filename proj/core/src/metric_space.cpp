#include "scott/metric_space.hpp"

#include <algorithm>
#include <set>

#include "scott/errors.hpp"

namespace scott {

MetricSpace::MetricSpace(std::vector<std::string> labels,
                         std::vector<std::vector<Rational>> dist)
    : labels_(std::move(labels)), dist_(std::move(dist)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw ValidationError("metric space needs at least one point");
  if (dist_.size() != n) {
    throw ValidationError("distance matrix row count does not match labels");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (dist_[i].size() != n) {
      throw ValidationError("distance matrix is not square at row " +
                            std::to_string(i));
    }
  }
}

MetricSpace MetricSpace::relabeled(const std::vector<int>& perm) const {
  const int n = size();
  if (static_cast<int>(perm.size()) != n) {
    throw ValidationError("relabeling permutation has wrong length");
  }
  std::vector<std::string> labels(n);
  std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    labels[perm[i]] = labels_[i];
    for (int j = 0; j < n; ++j) dist[perm[i]][perm[j]] = dist_[i][j];
  }
  return MetricSpace(std::move(labels), std::move(dist));
}

std::vector<MetricViolation> validate_metric(const MetricSpace& space) {
  std::vector<MetricViolation> out;
  const int n = space.size();
  for (int i = 0; i < n; ++i) {
    if (!space.dist(i, i).is_zero()) {
      out.push_back({MetricViolation::Axiom::Diagonal, i, i, -1,
                     "dist[" + std::to_string(i) + "][" + std::to_string(i) +
                         "] = " + space.dist(i, i).to_string() + ", expected 0"});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (space.dist(i, j) != space.dist(j, i)) {
        out.push_back({MetricViolation::Axiom::Symmetry, i, j, -1,
                       "dist[" + std::to_string(i) + "][" + std::to_string(j) +
                           "] = " + space.dist(i, j).to_string() +
                           " but dist[" + std::to_string(j) + "][" +
                           std::to_string(i) + "] = " +
                           space.dist(j, i).to_string()});
      }
      if (!space.dist(i, j).is_positive()) {
        out.push_back({MetricViolation::Axiom::Positivity, i, j, -1,
                       "dist[" + std::to_string(i) + "][" + std::to_string(j) +
                           "] = " + space.dist(i, j).to_string() +
                           ", expected > 0"});
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (space.dist(i, k) > space.dist(i, j) + space.dist(j, k)) {
          out.push_back({MetricViolation::Axiom::Triangle, i, j, k,
                         "dist[" + std::to_string(i) + "][" + std::to_string(k) +
                             "] = " + space.dist(i, k).to_string() + " > " +
                             space.dist(i, j).to_string() + " + " +
                             space.dist(j, k).to_string() + " (via " +
                             std::to_string(j) + ")"});
        }
      }
    }
  }
  return out;
}

void require_valid_metric(const MetricSpace& space) {
  auto report = validate_metric(space);
  if (!report.empty()) throw ValidationError(report.front().message);
}

Rational product_distance(const MetricSpace& space, const PointTuple& s,
                          const PointTuple& t) {
  if (s.size() != t.size()) {
    throw ValidationError("product_distance: tuple length mismatch");
  }
  Rational sum;
  for (std::size_t i = 0; i < s.size(); ++i) {
    sum += space.dist(s[i], t[i]);
  }
  return sum;
}

DistanceGap min_distance_gap(const MetricSpace& space) {
  const int n = space.size();
  if (n < 2) throw ValidationError("min_distance_gap needs at least 2 points");
  std::set<Rational> values;
  values.insert(Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) values.insert(space.dist(i, j));
  }
  DistanceGap gap;
  bool have_gap = false, have_pos = false;
  const Rational* prev = nullptr;
  for (const Rational& v : values) {
    if (v.is_positive() && !have_pos) {
      gap.min_positive = v;
      have_pos = true;
    }
    if (prev != nullptr) {
      Rational diff = v - *prev;
      if (!have_gap || diff < gap.min_gap) {
        gap.min_gap = diff;
        have_gap = true;
      }
    }
    prev = &v;
  }
  if (!have_pos || !have_gap) {
    throw ValidationError("min_distance_gap: degenerate distance matrix");
  }
  return gap;
}

bool atomic_related(const MetricSpace& space, const PointTuple& a,
                    const PointTuple& b) {
  if (a.size() != b.size()) {
    throw ValidationError("atomic_related: tuple length mismatch");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (space.dist(a[i], a[j]) != space.dist(b[i], b[j])) return false;
    }
  }
  return true;
}

}  // namespace scott
