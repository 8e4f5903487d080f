#include "scott/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "scott/errors.hpp"

namespace scott::oracle {

namespace {

// Oracle-local distance comparison: raw cross-multiplication on the
// numerator/denominator pair, independent of the Rational operators used
// by the main modules.
bool same_distance(const Rational& x, const Rational& y) {
  return static_cast<__int128>(x.num()) * y.den() ==
         static_cast<__int128>(y.num()) * x.den();
}

bool naive_atomic(const MetricSpace& s, const PointTuple& a,
                  const PointTuple& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (!same_distance(s.dist(a[i], a[j]), s.dist(b[i], b[j]))) return false;
    }
  }
  return true;
}

// Direct recursion on the level, no memoization, repeats allowed.
bool naive_related(const MetricSpace& s, int level, PointTuple& a,
                   PointTuple& b) {
  if (!naive_atomic(s, a, b)) return false;
  if (level == 0) return true;
  const int n = s.size();
  for (int x = 0; x < n; ++x) {
    bool answered = false;
    a.push_back(x);
    for (int y = 0; y < n && !answered; ++y) {
      b.push_back(y);
      answered = naive_related(s, level - 1, a, b);
      b.pop_back();
    }
    a.pop_back();
    if (!answered) return false;
  }
  for (int y = 0; y < n; ++y) {
    bool answered = false;
    b.push_back(y);
    for (int x = 0; x < n && !answered; ++x) {
      a.push_back(x);
      answered = naive_related(s, level - 1, a, b);
      a.pop_back();
    }
    b.pop_back();
    if (!answered) return false;
  }
  return true;
}

// Level-wise tables over distinct-point tuples of every length, used only
// to witness that the hierarchy is stationary at some level. Extension by
// a repeated point forces the mirrored repeat and collapses back to the
// same pair, so distinct tuples carry the whole hierarchy.
struct StationarityWitness {
  explicit StationarityWitness(const MetricSpace& s) : space(s) {
    const int n = s.size();
    tuples.resize(n + 1);
    PointTuple t;
    enumerate(t, n);
    related.resize(n + 1);
    for (int p = 1; p <= n; ++p) {
      const auto& tp = tuples[p];
      related[p].assign(tp.size() * tp.size(), 0);
      for (std::size_t i = 0; i < tp.size(); ++i) {
        for (std::size_t j = 0; j < tp.size(); ++j) {
          related[p][i * tp.size() + j] = naive_atomic(s, tp[i], tp[j]);
        }
      }
    }
    stabilization = 0;
    while (!step()) ++stabilization;
  }

  void enumerate(PointTuple& t, int n) {
    if (!t.empty()) tuples[t.size()].push_back(t);
    if (static_cast<int>(t.size()) == n) return;
    for (int x = 0; x < n; ++x) {
      if (std::find(t.begin(), t.end(), x) != t.end()) continue;
      t.push_back(x);
      enumerate(t, n);
      t.pop_back();
    }
  }

  std::size_t index_of(int p, const PointTuple& t) const {
    const auto& tp = tuples[p];
    return std::lower_bound(tp.begin(), tp.end(), t) - tp.begin();
  }

  // One synchronous pass; returns true when nothing changed.
  bool step() {
    const int n = space.size();
    bool stable = true;
    std::vector<std::vector<std::uint8_t>> next = related;
    for (int p = 1; p < n; ++p) {
      const auto& tp = tuples[p];
      for (std::size_t i = 0; i < tp.size(); ++i) {
        for (std::size_t j = 0; j < tp.size(); ++j) {
          if (!related[p][i * tp.size() + j]) continue;
          if (!extends(tp[i], tp[j], p) || !extends_back(tp[i], tp[j], p)) {
            next[p][i * tp.size() + j] = 0;
            stable = false;
          }
        }
      }
    }
    related = std::move(next);
    return stable;
  }

  bool extends(const PointTuple& a, const PointTuple& b, int p) {
    const int n = space.size();
    for (int x = 0; x < n; ++x) {
      if (std::find(a.begin(), a.end(), x) != a.end()) continue;
      bool ok = false;
      PointTuple ax = a;
      ax.push_back(x);
      std::size_t ia = index_of(p + 1, ax);
      for (int y = 0; y < n && !ok; ++y) {
        if (std::find(b.begin(), b.end(), y) != b.end()) continue;
        PointTuple by = b;
        by.push_back(y);
        std::size_t ib = index_of(p + 1, by);
        ok = related[p + 1][ia * tuples[p + 1].size() + ib] != 0;
      }
      if (!ok) return false;
    }
    return true;
  }

  bool extends_back(const PointTuple& a, const PointTuple& b, int p) {
    const int n = space.size();
    for (int y = 0; y < n; ++y) {
      if (std::find(b.begin(), b.end(), y) != b.end()) continue;
      bool ok = false;
      PointTuple by = b;
      by.push_back(y);
      std::size_t ib = index_of(p + 1, by);
      for (int x = 0; x < n && !ok; ++x) {
        if (std::find(a.begin(), a.end(), x) != a.end()) continue;
        PointTuple ax = a;
        ax.push_back(x);
        std::size_t ia = index_of(p + 1, ax);
        ok = related[p + 1][ia * tuples[p + 1].size() + ib] != 0;
      }
      if (!ok) return false;
    }
    return true;
  }

  const MetricSpace& space;
  std::vector<std::vector<PointTuple>> tuples;  // per length, sorted
  std::vector<std::vector<std::uint8_t>> related;
  int stabilization = 0;
};

}  // namespace

std::vector<std::vector<int>> enumerate_autoisometries(const MetricSpace& space,
                                                       int cap) {
  const int n = space.size();
  if (n > cap) {
    throw ValidationError("oracle cap exceeded: " + std::to_string(n) +
                          " points > cap " + std::to_string(cap));
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i + 1; j < n && ok; ++j) {
        ok = same_distance(space.dist(i, j), space.dist(perm[i], perm[j]));
      }
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool exists_autoisometry_mapping(const MetricSpace& space, const PointTuple& a,
                                 const PointTuple& b, int cap) {
  if (a.size() != b.size()) {
    throw ValidationError("oracle: tuple length mismatch");
  }
  for (const auto& perm : enumerate_autoisometries(space, cap)) {
    bool carries = true;
    for (std::size_t i = 0; i < a.size() && carries; ++i) {
      carries = perm[a[i]] == b[i];
    }
    if (carries) return true;
  }
  return false;
}

RankValue brute_scott_rank_pair(const MetricSpace& space, const PointTuple& a,
                                const PointTuple& b, int budget_cap) {
  if (a.size() != b.size()) {
    throw ValidationError("oracle: tuple length mismatch");
  }
  if (space.size() > 5 || a.size() > 3 || budget_cap > 5) {
    throw ValidationError("oracle caps exceeded (|M| <= 5, |a| <= 3, budget <= 5)");
  }
  StationarityWitness witness(space);
  PointTuple wa = a, wb = b;
  const int stop = std::min(witness.stabilization, budget_cap);
  for (int level = 0; level <= stop; ++level) {
    if (!naive_related(space, level, wa, wb)) return RankValue::finite(level);
  }
  if (witness.stabilization > budget_cap) {
    throw ValidationError("oracle budget cap reached before stabilization");
  }
  return RankValue::infinity();
}

}  // namespace scott::oracle
