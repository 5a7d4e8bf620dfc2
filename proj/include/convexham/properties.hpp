// Copyright 2026 The convexham Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONVEXHAM_PROPERTIES_HPP
#define CONVEXHAM_PROPERTIES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "convexham/detail/gap_matching.hpp"
#include "convexham/detail/window_scan.hpp"
#include "convexham/graph.hpp"

namespace convexham {

/// Thrown when an exhaustive routine is asked to run above its size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultExactCap = 14;

enum class CheckMode { Exact, Fast };

/// Exact mode enumerates every window family for the lower bound and is
/// limited to n <= exact_cap. Fast mode decides the same bounds in
/// O((n + |Y|) log n): upper bounds by a window-excess sweep, the lower bound
/// by matching gaps (x_i, x_{i+1}) to distinct spanning Y-vertices.
struct CheckOptions {
  CheckMode mode = CheckMode::Fast;
  int exact_cap = kDefaultExactCap;
};

enum class BoundKind { UpperBound, LowerBound, CardinalityBound, PendantBound };

/// What the observed count of a violation measures.
enum class Measure {
  Closed,       // |N[X_{p..q}]| of the single listed window
  StrongUnion,  // |union of N'[X_{p_i..q_i}]| over the listed windows
  Pendants,     // pendants in the window (all of X, or a single x)
};

inline const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::UpperBound: return "UpperBound";
    case BoundKind::LowerBound: return "LowerBound";
    case BoundKind::CardinalityBound: return "CardinalityBound";
    case BoundKind::PendantBound: return "PendantBound";
  }
  return "?";
}

inline const char* to_string(Measure m) {
  switch (m) {
    case Measure::Closed: return "closed";
    case Measure::StrongUnion: return "strong-union";
    case Measure::Pendants: return "pendants";
  }
  return "?";
}

/// A replayable bound violation. For upper and pendant bounds `bound` is the
/// largest allowed value, for the lower bound the smallest, for the
/// cardinality bound the exact value required.
struct Violation {
  BoundKind kind = BoundKind::UpperBound;
  Measure measure = Measure::Closed;
  std::vector<std::pair<int, int>> windows;
  int observed = 0;
  int bound = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct PropertyVerdict {
  bool holds = true;
  std::optional<Violation> witness;
};

namespace detail {

inline int strong_union_count(const ConvexBipartiteGraph& g, const std::vector<std::pair<int, int>>& ws) {
  int c = 0;
  for (const auto& y : g.ys()) {
    for (const auto& [p, q] : ws) {
      if (strongly_meets(y, p, q)) {
        ++c;
        break;
      }
    }
  }
  return c;
}

inline int pendants_in(const ConvexBipartiteGraph& g, int p, int q) {
  int c = 0;
  for (const auto& y : g.ys()) c += (y.is_pendant() && p <= y.left && y.left <= q) ? 1 : 0;
  return c;
}

inline bool is_chain(const ConvexBipartiteGraph& g, const std::vector<std::pair<int, int>>& ws) {
  if (ws.empty()) return false;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const auto [p, q] = ws[i];
    if (p < 1 || q > g.n() || p >= q) return false;
    if (i && ws[i - 1].second > p) return false;
  }
  return true;
}

}  // namespace detail

/// Recomputes the counts named by a witness and confirms that they violate
/// the stated bound.
inline bool replay(const ConvexBipartiteGraph& g, const Violation& v) {
  switch (v.kind) {
    case BoundKind::UpperBound: {
      if (v.windows.size() != 1) return false;
      const auto [p, q] = v.windows.front();
      if (p < 1 || q > g.n() || p >= q) return false;
      const int c = closed_count(g, p, q);
      return c == v.observed && c > v.bound;
    }
    case BoundKind::LowerBound: {
      if (!detail::is_chain(g, v.windows)) return false;
      int need = 0;
      for (const auto& [p, q] : v.windows) need += q - p;
      const int c = detail::strong_union_count(g, v.windows);
      return need == v.bound && c == v.observed && c < need;
    }
    case BoundKind::CardinalityBound: {
      if (v.windows.size() != 1 || v.windows.front() != std::pair{1, g.n()} || v.bound != g.n()) return false;
      const int c = v.measure == Measure::Closed ? closed_count(g, 1, g.n()) : strong_count(g, 1, g.n());
      return c == v.observed && c != v.bound;
    }
    case BoundKind::PendantBound: {
      if (v.windows.size() != 1) return false;
      const auto [p, q] = v.windows.front();
      if (p < 1 || q > g.n() || p > q) return false;
      const int c = detail::pendants_in(g, p, q);
      return c == v.observed && c > v.bound;
    }
  }
  return false;
}

namespace detail {

class Bitset {
 public:
  explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void assign_or(const Bitset& a, const Bitset& b) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] = a.words_[k] | b.words_[k];
  }
  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Depth-first enumeration of every chain p_1 < q_1 <= p_2 < q_2 <= ... and
// check of the union bound. Returns the first deficient chain.
inline std::optional<Violation> enumerate_lower_bound(const ConvexBipartiteGraph& g) {
  const int n = g.n();
  if (n < 2) return std::nullopt;
  const auto nu = static_cast<std::size_t>(n);
  const auto m = static_cast<std::size_t>(g.y_count());
  std::vector<Bitset> strong((nu + 1) * (nu + 1), Bitset(m));
  auto at = [&](int p, int q) -> Bitset& { return strong[static_cast<std::size_t>(p) * (nu + 1) + static_cast<std::size_t>(q)]; };
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      for (std::size_t j = 0; j < m; ++j) {
        if (strongly_meets(g.ys()[j], p, q)) at(p, q).set(j);
      }
    }
  }
  std::vector<Bitset> unions(nu + 1, Bitset(m));  // unions[d]: union of first d windows
  std::vector<std::pair<int, int>> chain;
  std::optional<Violation> found;

  auto recurse = [&](auto&& self, int start, int need) -> bool {
    const std::size_t depth = chain.size();
    for (int p = start; p < n; ++p) {
      for (int q = p + 1; q <= n; ++q) {
        unions[depth + 1].assign_or(unions[depth], at(p, q));
        chain.emplace_back(p, q);
        const int total = need + (q - p);
        const int have = unions[depth + 1].count();
        if (have < total) {
          found = Violation{BoundKind::LowerBound, Measure::StrongUnion, chain, have, total};
          return true;
        }
        if (self(self, q, total)) return true;
        chain.pop_back();
      }
    }
    return false;
  };
  recurse(recurse, 1, 0);
  return found;
}

inline std::optional<Violation> fast_lower_bound(const ConvexBipartiteGraph& g) {
  auto d = find_gap_deficiency(g);
  if (!d) return std::nullopt;
  return Violation{BoundKind::LowerBound, Measure::StrongUnion, d->windows, d->spanning_count, d->gap_count};
}

inline void require_cap(const ConvexBipartiteGraph& g, const CheckOptions& opt) {
  if (opt.mode == CheckMode::Exact && g.n() > opt.exact_cap) {
    throw CapExceeded("exact property check needs n <= " + std::to_string(opt.exact_cap) + ", got n = " +
                      std::to_string(g.n()));
  }
}

// Upper bound closed_count(p, q) <= (q - p) + slack over all windows p < q
// except the full span.
inline std::optional<Violation> check_upper(const ConvexBipartiteGraph& g, const CheckOptions& opt, int slack) {
  const int n = g.n();
  if (opt.mode == CheckMode::Exact) {
    const DominanceTable table(g);
    for (int p = 1; p <= n; ++p) {
      for (int q = p + 1; q <= n; ++q) {
        if (p == 1 && q == n) continue;
        const int c = table.closed_count(p, q);
        if (c > q - p + slack) return Violation{BoundKind::UpperBound, Measure::Closed, {{p, q}}, c, q - p + slack};
      }
    }
    return std::nullopt;
  }
  const auto peak = max_window_excess(g, 1, n, /*exclude_full_span=*/true);
  if (!peak || peak->excess <= slack) return std::nullopt;
  const int bound = peak->q - peak->p + slack;
  return Violation{BoundKind::UpperBound, Measure::Closed, {{peak->p, peak->q}}, bound - slack + peak->excess, bound};
}

inline std::optional<Violation> check_lower(const ConvexBipartiteGraph& g, const CheckOptions& opt) {
  return opt.mode == CheckMode::Exact ? enumerate_lower_bound(g) : fast_lower_bound(g);
}

}  // namespace detail

/// Property A: upper bound |N[X_{p..q}]| <= q - p on every window except the
/// full span, the lower bound over window chains, and
/// |N[X_{1..n}]| = |N'[X_{1..n}]| = n. Checked in that order; the first
/// failing clause is reported.
inline PropertyVerdict check_property_A(const ConvexBipartiteGraph& g, const CheckOptions& opt = {}) {
  detail::require_cap(g, opt);
  if (auto v = detail::check_upper(g, opt, 0)) return {false, std::move(v)};
  if (auto v = detail::check_lower(g, opt)) return {false, std::move(v)};
  const int n = g.n();
  const int closed = g.y_count();  // every Y-vertex lies inside X_{1..n}
  if (closed != n) return {false, Violation{BoundKind::CardinalityBound, Measure::Closed, {{1, n}}, closed, n}};
  const int strong = strong_count(g, 1, n);
  if (strong != n) return {false, Violation{BoundKind::CardinalityBound, Measure::StrongUnion, {{1, n}}, strong, n}};
  return {};
}

/// Property B: upper bound q - p + 1 (q - p + 2 on the full span), the same
/// lower bound as Property A, and at most two pendants with no x carrying
/// two of them when n >= 2.
inline PropertyVerdict check_property_B(const ConvexBipartiteGraph& g, const CheckOptions& opt = {}) {
  detail::require_cap(g, opt);
  const int n = g.n();
  if (auto v = detail::check_upper(g, opt, 1)) return {false, std::move(v)};
  if (n >= 2 && g.y_count() > n + 1) {
    return {false, Violation{BoundKind::UpperBound, Measure::Closed, {{1, n}}, g.y_count(), n + 1}};
  }
  if (auto v = detail::check_lower(g, opt)) return {false, std::move(v)};

  const auto pendants = pendant_ys(g);
  if (pendants.size() > 2) {
    return {false, Violation{BoundKind::PendantBound, Measure::Pendants, {{1, n}}, static_cast<int>(pendants.size()), 2}};
  }
  if (n >= 2 && pendants.size() == 2 && g.y(pendants[0]).left == g.y(pendants[1]).left) {
    const int x = g.y(pendants[0]).left;
    return {false, Violation{BoundKind::PendantBound, Measure::Pendants, {{x, x}}, 2, 1}};
  }
  return {};
}

/// An interior window 1 < p < q < n with |N[X_{p..q}]| = q - p + 1 that no
/// other such interior window strictly contains.
struct MaximalSet {
  int p = 0;
  int q = 0;
  friend bool operator==(const MaximalSet&, const MaximalSet&) = default;
};

/// All interior maximal sets sorted by p. O(n^2 + |Y|) time, O(n + |Y|) memory.
inline std::vector<MaximalSet> maximal_interior_sets(const ConvexBipartiteGraph& g) {
  const int n = g.n();
  std::vector<MaximalSet> out;
  if (n < 4) return out;
  const auto nu = static_cast<std::size_t>(n);
  std::vector<std::vector<int>> rights_by_left(nu + 1);
  for (const auto& y : g.ys()) rights_by_left[static_cast<std::size_t>(y.left)].push_back(y.right);

  // hist[r]: Y-vertices with left >= p and right == r, maintained as p falls.
  std::vector<int> hist(nu + 1, 0);
  std::vector<int> widest(nu + 1, 0);  // widest tight interior q for each p, 0 if none
  for (int p = n - 1; p >= 2; --p) {
    for (int r : rights_by_left[static_cast<std::size_t>(p)]) ++hist[static_cast<std::size_t>(r)];
    int closed = hist[static_cast<std::size_t>(p)];
    for (int q = p + 1; q <= n - 1; ++q) {
      closed += hist[static_cast<std::size_t>(q)];
      if (closed == q - p + 1) widest[static_cast<std::size_t>(p)] = q;
    }
  }
  int reach = 0;  // max widest q over smaller p
  for (int p = 2; p <= n - 2; ++p) {
    const int q = widest[static_cast<std::size_t>(p)];
    if (q > 0 && q > reach) out.push_back({p, q});
    reach = std::max(reach, q);
  }
  return out;
}

/// True iff some interior window 1 < p < q < n has |N[X_{p..q}]| >= q - p + 1.
/// Under Property B's upper bound this means a maximal interior set exists.
inline bool has_tight_interior_window(const ConvexBipartiteGraph& g) {
  if (g.n() < 4) return false;
  const auto peak = detail::max_window_excess(g, 2, g.n() - 1, false);
  return peak && peak->excess >= 1;
}

struct InteriorPendant {
  int y = 0;  // index into ys()
  int x = 0;
  friend bool operator==(const InteriorPendant&, const InteriorPendant&) = default;
};

using NonMonotoneReason = std::variant<InteriorPendant, MaximalSet>;

enum class ClassKind { Monotone, NonMonotone, FailsPropertyB };

inline const char* to_string(ClassKind k) {
  switch (k) {
    case ClassKind::Monotone: return "Monotone";
    case ClassKind::NonMonotone: return "NonMonotone";
    case ClassKind::FailsPropertyB: return "FailsPropertyB";
  }
  return "?";
}

struct Classification {
  ClassKind kind = ClassKind::Monotone;
  std::vector<NonMonotoneReason> reasons;  // NonMonotone only
  std::optional<Violation> witness;        // FailsPropertyB only
};

inline std::vector<InteriorPendant> interior_pendants(const ConvexBipartiteGraph& g) {
  std::vector<InteriorPendant> out;
  for (int j = 0; j < g.y_count(); ++j) {
    const auto& y = g.y(j);
    if (y.is_pendant() && 1 < y.left && y.left < g.n()) out.push_back({j, y.left});
  }
  return out;
}

/// Monotone iff Property B holds, no pendant sits on an interior x and no
/// interior maximal set exists. Reasons list interior pendants in input order,
/// then maximal sets by p. The maximal-set listing costs O(n^2) and only runs
/// when a tight interior window was detected.
inline Classification classify(const ConvexBipartiteGraph& g, const CheckOptions& opt = {}) {
  Classification c;
  auto b = check_property_B(g, opt);
  if (!b.holds) {
    c.kind = ClassKind::FailsPropertyB;
    c.witness = std::move(b.witness);
    return c;
  }
  for (const auto& ip : interior_pendants(g)) c.reasons.emplace_back(ip);
  if (has_tight_interior_window(g)) {
    for (const auto& ms : maximal_interior_sets(g)) c.reasons.emplace_back(ms);
  }
  c.kind = c.reasons.empty() ? ClassKind::Monotone : ClassKind::NonMonotone;
  return c;
}

enum class LemmaStatus { Pass, Fail, NotApplicable };

inline const char* to_string(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::Pass: return "pass";
    case LemmaStatus::Fail: return "fail";
    case LemmaStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

struct LemmaResult {
  LemmaStatus status = LemmaStatus::NotApplicable;
  std::string detail;
};

/// Structural facts about graphs satisfying Property B, checked on one graph.
///
/// Lemma keys:
///   L-order  maximal interior sets are pairwise disjoint, p < q < p' < q'
///   L-RQ     non-monotone implies 1 <= |R| + |Q| <= 2
///   L-xy     Property A implies |X| = |Y| and every Y-degree >= 2
///   L-size   monotone implies |X| - 1 <= |Y| <= |X| + 1
/// Q is the list of maximal interior sets, R the pendants not adjacent to any
/// x covered by a set of Q. All lemmas are NotApplicable when B fails.
struct StructuralAudit {
  std::vector<MaximalSet> Q;
  std::vector<int> R;  // indices into ys()
  std::map<std::string, LemmaResult> lemmas;

  bool all_pass_or_na() const {
    return std::none_of(lemmas.begin(), lemmas.end(),
                        [](const auto& kv) { return kv.second.status == LemmaStatus::Fail; });
  }
};

inline StructuralAudit structural_audit(const ConvexBipartiteGraph& g, const CheckOptions& opt = {}) {
  StructuralAudit audit;
  audit.Q = maximal_interior_sets(g);
  for (int j : pendant_ys(g)) {
    const int x = g.y(j).left;
    const bool covered = std::any_of(audit.Q.begin(), audit.Q.end(),
                                     [&](const MaximalSet& s) { return s.p <= x && x <= s.q; });
    if (!covered) audit.R.push_back(j);
  }
  for (const char* key : {"L-order", "L-RQ", "L-xy", "L-size"}) audit.lemmas[key] = {};

  const auto cls = classify(g, opt);
  if (cls.kind == ClassKind::FailsPropertyB) return audit;

  auto pass_if = [](bool ok, std::string detail) {
    return LemmaResult{ok ? LemmaStatus::Pass : LemmaStatus::Fail, std::move(detail)};
  };

  bool ordered = true;
  std::string order_detail = "|Q|=" + std::to_string(audit.Q.size());
  for (std::size_t i = 0; i + 1 < audit.Q.size(); ++i) {
    for (std::size_t k = i + 1; k < audit.Q.size(); ++k) {
      const auto& a = audit.Q[i];
      const auto& b = audit.Q[k];
      if (!(a.p < a.q && a.q < b.p && b.p < b.q)) {
        ordered = false;
        order_detail = "overlap [" + std::to_string(a.p) + "," + std::to_string(a.q) + "] [" +
                       std::to_string(b.p) + "," + std::to_string(b.q) + "]";
      }
    }
  }
  audit.lemmas["L-order"] = pass_if(ordered, order_detail);

  const int rq = static_cast<int>(audit.R.size() + audit.Q.size());
  if (cls.kind == ClassKind::NonMonotone) {
    audit.lemmas["L-RQ"] = pass_if(1 <= rq && rq <= 2, "|R|+|Q|=" + std::to_string(rq));
  }
  if (cls.kind == ClassKind::Monotone) {
    const int m = g.y_count();
    audit.lemmas["L-size"] = pass_if(g.n() - 1 <= m && m <= g.n() + 1,
                                     "|X|=" + std::to_string(g.n()) + " |Y|=" + std::to_string(m));
  }
  if (check_property_A(g, opt).holds) {
    int min_degree = g.n() + 1;
    for (const auto& y : g.ys()) min_degree = std::min(min_degree, y.degree());
    audit.lemmas["L-xy"] = pass_if(g.y_count() == g.n() && min_degree >= 2,
                                   "|X|=" + std::to_string(g.n()) + " |Y|=" + std::to_string(g.y_count()) +
                                       " min-degree=" + std::to_string(min_degree));
  }
  return audit;
}

}  // namespace convexham

#endif  // CONVEXHAM_PROPERTIES_HPP
