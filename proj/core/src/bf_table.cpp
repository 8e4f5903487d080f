#include "scott/bf_table.hpp"

#include <algorithm>
#include <map>

#include "scott/errors.hpp"

namespace scott {
namespace {

// Small integer ids for the distinct distance values, so the inner
// loops compare ints instead of rationals.
std::vector<std::vector<int>> distance_ids(const MetricSpace& space) {
  const int n = space.size();
  std::map<Rational, int> ids;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ids.emplace(space.dist(i, j), 0);
  int next = 0;
  for (auto& [v, id] : ids) id = next++;
  std::vector<std::vector<int>> out(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = ids.at(space.dist(i, j));
  return out;
}

// Duplicate-free p-tuples over n points in lexicographic order.
std::vector<PointTuple> injective_tuples(int n, int p) {
  std::vector<PointTuple> out;
  PointTuple cur;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == p) {
      out.push_back(cur);
      return;
    }
    for (int x = 0; x < n; ++x) {
      if (used[x]) continue;
      used[x] = true;
      cur.push_back(x);
      self(self);
      cur.pop_back();
      used[x] = false;
    }
  };
  rec(rec);
  return out;
}

// Index of a duplicate-free tuple within the lexicographic enumeration:
// mixed-radix over the rank of each entry among the still-unused points.
int tuple_index(const PointTuple& t, int n) {
  int idx = 0;
  unsigned used = 0;
  for (size_t i = 0; i < t.size(); ++i) {
    const int below = __builtin_popcount(used & ((1u << t[i]) - 1));
    idx = idx * (n - static_cast<int>(i)) + (t[i] - below);
    used |= 1u << t[i];
  }
  return idx;
}

// Collapses repeated points onto their forced partners. Returns false
// when the repeat pattern itself breaks exact distance agreement (a
// repeated point on one side facing two distinct points on the other).
bool collapse_pair(const PointTuple& a, const PointTuple& b, PointTuple& ca,
                   PointTuple& cb) {
  ca.clear();
  cb.clear();
  for (size_t i = 0; i < a.size(); ++i) {
    bool seen = false;
    for (size_t j = 0; j < ca.size(); ++j) {
      if (ca[j] == a[i]) {
        if (cb[j] != b[i]) return false;
        seen = true;
        break;
      }
      if (cb[j] == b[i]) return false;  // repeat on the b side only
    }
    if (!seen) {
      ca.push_back(a[i]);
      cb.push_back(b[i]);
    }
  }
  return true;
}

void check_pair_shape(const MetricSpace& space, const PointTuple& a,
                      const PointTuple& b) {
  if (a.size() != b.size()) throw ValidationError("tuple length mismatch");
  for (int x : a)
    if (x < 0 || x >= space.size())
      throw ValidationError("tuple index out of range");
  for (int x : b)
    if (x < 0 || x >= space.size())
      throw ValidationError("tuple index out of range");
}

}  // namespace

BackAndForthTable BackAndForthTable::compute(const MetricSpace& space,
                                             int p_max) {
  const int n = space.size();
  if (n < 1) throw ValidationError("space must have at least one point");
  if (n > 7) throw ValidationError("back-and-forth table capped at 7 points");
  BackAndForthTable table(space);
  table.p_max_ = (p_max <= 0 || p_max > n) ? n : p_max;
  if (p_max < 0) throw ValidationError("p_max must be >= 1");

  const auto dist_id = distance_ids(space);
  table.tuples_.resize(n + 1);
  table.rank_.resize(n + 1);
  std::vector<std::vector<char>> rel(n + 1);

  // Level 0: exact distance agreement, filled by extending length p-1
  // pairs (a pair is atomically related iff its prefix is and the new
  // points agree in distance with every earlier coordinate).
  for (int p = 1; p <= n; ++p) {
    table.tuples_[p] = injective_tuples(n, p);
    const auto& tp = table.tuples_[p];
    const int t = static_cast<int>(tp.size());
    rel[p].assign(static_cast<size_t>(t) * t, 0);
    for (int ia = 0; ia < t; ++ia) {
      for (int ib = 0; ib < t; ++ib) {
        const PointTuple& a = tp[ia];
        const PointTuple& b = tp[ib];
        bool ok = true;
        if (p > 1) {
          PointTuple pa(a.begin(), a.end() - 1), pb(b.begin(), b.end() - 1);
          ok = rel[p - 1][static_cast<size_t>(tuple_index(pa, n)) *
                              table.tuples_[p - 1].size() +
                          tuple_index(pb, n)] != 0;
          for (int i = 0; ok && i < p - 1; ++i)
            ok = dist_id[a[i]][a[p - 1]] == dist_id[b[i]][b[p - 1]];
        }
        rel[p][static_cast<size_t>(ia) * t + ib] = ok ? 1 : 0;
      }
    }
    table.rank_[p].resize(rel[p].size());
    for (size_t k = 0; k < rel[p].size(); ++k)
      table.rank_[p][k] = rel[p][k] ? -1 : 0;
  }

  // Successor passes, synchronous across all lengths. A repeated-point
  // extension forces an exact reply and reduces to the same pair, so
  // only duplicate-free extensions are consulted; at length n there are
  // none and the relation is constant.
  for (int level = 0;; ++level) {
    bool changed = false;
    std::vector<std::vector<char>> next = rel;
    for (int p = 1; p < n; ++p) {
      const int t = static_cast<int>(table.tuples_[p].size());
      const int text = static_cast<int>(table.tuples_[p + 1].size());
      const int m = n - p;  // extension points per side
      for (int ia = 0; ia < t; ++ia) {
        for (int ib = 0; ib < t; ++ib) {
          const size_t key = static_cast<size_t>(ia) * t + ib;
          if (!rel[p][key]) continue;
          bool ok = true;
          for (int xr = 0; ok && xr < m; ++xr) {
            bool found = false;
            const size_t row = static_cast<size_t>(ia * m + xr) * text;
            for (int yr = 0; !found && yr < m; ++yr)
              found = rel[p + 1][row + ib * m + yr] != 0;
            ok = found;
          }
          for (int yr = 0; ok && yr < m; ++yr) {
            bool found = false;
            for (int xr = 0; !found && xr < m; ++xr)
              found = rel[p + 1][static_cast<size_t>(ia * m + xr) * text +
                                 ib * m + yr] != 0;
            ok = found;
          }
          if (!ok) {
            next[p][key] = 0;
            table.rank_[p][key] = level + 1;
            changed = true;
          }
        }
      }
    }
    if (!changed) {
      table.stabilization_ = level;
      break;
    }
    rel = std::move(next);
  }
  return table;
}

RankValue BackAndForthTable::rank_pair(const PointTuple& a,
                                       const PointTuple& b) const {
  check_pair_shape(space_, a, b);
  if (a.empty()) return RankValue::infinity();
  PointTuple ca, cb;
  if (!collapse_pair(a, b, ca, cb)) return RankValue::finite(0);
  const int n = space_.size();
  const int p = static_cast<int>(ca.size());
  const int t = static_cast<int>(tuples_[p].size());
  const int r = rank_[p][static_cast<size_t>(tuple_index(ca, n)) * t +
                         tuple_index(cb, n)];
  return r < 0 ? RankValue::infinity() : RankValue::finite(r);
}

nlohmann::json BackAndForthTable::to_json(int p) const {
  if (p < 1 || p > space_.size())
    throw ValidationError("table export length out of range");
  nlohmann::json pairs = nlohmann::json::array();
  const auto& tp = tuples_[p];
  const int t = static_cast<int>(tp.size());
  for (int ia = 0; ia < t; ++ia) {
    for (int ib = 0; ib < t; ++ib) {
      const int r = rank_[p][static_cast<size_t>(ia) * t + ib];
      pairs.push_back({{"a", tp[ia]},
                       {"b", tp[ib]},
                       {"rank", r < 0 ? "inf" : std::to_string(r)}});
    }
  }
  return {{"p", p}, {"pairs", pairs}, {"stabilization", stabilization_}};
}

RankValue scott_rank_pair(const MetricSpace& space, const PointTuple& a,
                          const PointTuple& b) {
  return BackAndForthTable::compute(space).rank_pair(a, b);
}

SpaceRankCertificate scott_rank_space(const BackAndForthTable& table) {
  const int n = table.space().size();
  SpaceRankCertificate cert;
  cert.stabilization = table.stabilization_level();
  // The empty tuple always contributes tuple rank 0 (its only partner
  // is itself, at rank infinity, and the sup of the empty set is 0).
  int best = 0;
  bool have_witness = false;
  PointTuple best_a, best_b;
  for (int p = 1; p <= n; ++p) {
    std::vector<PointTuple> tuples;
    {
      // Reuse the table's enumeration order via rank_pair lookups.
      PointTuple cur;
      std::vector<bool> used(n, false);
      auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == p) {
          tuples.push_back(cur);
          return;
        }
        for (int x = 0; x < n; ++x) {
          if (used[x]) continue;
          used[x] = true;
          cur.push_back(x);
          self(self);
          cur.pop_back();
          used[x] = false;
        }
      };
      rec(rec);
    }
    for (const auto& a : tuples) {
      int tuple_rank = 0;
      PointTuple witness;
      for (const auto& b : tuples) {
        const RankValue r = table.rank_pair(a, b);
        if (r.is_finite() && (witness.empty() ? r.value() >= tuple_rank
                                              : r.value() > tuple_rank)) {
          tuple_rank = r.value();
          witness = b;
        }
      }
      if (!witness.empty() && tuple_rank >= best &&
          (!have_witness || tuple_rank > best)) {
        best = tuple_rank;
        best_a = a;
        best_b = witness;
        have_witness = true;
      }
    }
  }
  cert.rank = RankValue::finite(best + 1);
  if (have_witness) {
    cert.argmax_a = best_a;
    cert.argmax_b = best_b;
    cert.pair_rank = RankValue::finite(best);
  } else {
    cert.pair_rank = RankValue::finite(0);  // empty tuple, empty sup
  }
  return cert;
}

SpaceRankCertificate scott_rank_space(const MetricSpace& space) {
  return scott_rank_space(BackAndForthTable::compute(space));
}

namespace {

std::unique_ptr<StrategyNode> build_p1_tree(const BackAndForthTable& table,
                                            const PointTuple& a,
                                            const PointTuple& b, int rank) {
  const int n = table.space().size();
  auto node = std::make_unique<StrategyNode>();
  if (rank == 0) {
    // The map is already not distance-preserving; ending the game with
    // any point keeps it so.
    node->move = Move{0, Side::Left, 0};
    for (int y = 0; y < n; ++y)
      node->replies.push_back({y, nullptr});
    return node;
  }
  // The pair is unrelated at level `rank`, so some one-point extension
  // defeats every reply at level rank-1; take the first in (side,
  // point) order.
  for (Side side : {Side::Left, Side::Right}) {
    for (int x = 0; x < n; ++x) {
      bool wins = true;
      for (int y = 0; wins && y < n; ++y) {
        PointTuple na = a, nb = b;
        (side == Side::Left ? na : nb).push_back(x);
        (side == Side::Left ? nb : na).push_back(y);
        const RankValue r = table.rank_pair(na, nb);
        wins = r.is_finite() && r.value() <= rank - 1;
      }
      if (!wins) continue;
      node->move = Move{rank - 1, side, x};
      for (int y = 0; y < n; ++y) {
        PointTuple na = a, nb = b;
        (side == Side::Left ? na : nb).push_back(x);
        (side == Side::Left ? nb : na).push_back(y);
        if (rank - 1 == 0) {
          node->replies.push_back({y, nullptr});
        } else {
          const int next = table.rank_pair(na, nb).value();
          node->replies.push_back({y, build_p1_tree(table, na, nb, next)});
        }
      }
      return node;
    }
  }
  throw InternalError("no defeating extension at a finite-rank pair");
}

}  // namespace

Strategy distinguishing_strategy(const BackAndForthTable& table,
                                 const PointTuple& a, const PointTuple& b) {
  const RankValue rank = table.rank_pair(a, b);
  if (!rank.is_finite())
    throw ValidationError("pair has no distinguishing level");
  Strategy s;
  s.kind = GameKind::Ef;
  s.owner = 1;
  s.a = a;
  s.b = b;
  s.budget = rank;
  s.resolved_budget = rank.value();
  if (rank.value() == 0) {
    const auto& space = table.space();
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < a.size(); ++j)
        if (!(space.dist(a[i], a[j]) == space.dist(b[i], b[j])) &&
            !s.atomic_witness) {
          s.atomic_witness = {static_cast<int>(i), static_cast<int>(j)};
        }
    if (!s.atomic_witness)
      throw InternalError("rank 0 pair with no atomic mismatch");
    return s;
  }
  s.root = std::shared_ptr<StrategyNode>(
      build_p1_tree(table, a, b, rank.value()).release());
  return s;
}

Strategy distinguishing_strategy(const MetricSpace& space, const PointTuple& a,
                                 const PointTuple& b) {
  return distinguishing_strategy(BackAndForthTable::compute(space), a, b);
}

}  // namespace scott
