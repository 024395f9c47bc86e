#include "hamsq/search.hpp"

#include <bit>
#include <string>
#include <unordered_set>
#include <vector>

#include "hamsq/error.hpp"

namespace hamsq {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }

struct StateKey {
  Mask visited;
  std::uint64_t context;
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept {
    std::uint64_t h = k.visited * 0x9E3779B97F4A7C15ULL;
    h ^= k.context + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

class Searcher {
 public:
  Searcher(const Graph& g, const CycleConstraint& c, const SearchOptions& options)
      : g_(g), options_(options), n_(static_cast<int>(g.order())) {
    sq_.assign(static_cast<std::size_t>(n_), 0);
    in_g_.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
      for (int j : g.neighbor_indices(i)) {
        in_g_[static_cast<std::size_t>(i)] |= bit(j);
        sq_[static_cast<std::size_t>(i)] |= bit(j);
        for (int k : g.neighbor_indices(j)) {
          if (k != i) sq_[static_cast<std::size_t>(i)] |= bit(k);
        }
      }
    }
    req_.assign(static_cast<std::size_t>(n_), Requirement::kFree);
    required_.assign(static_cast<std::size_t>(n_), 0);
    forbidden_.assign(static_cast<std::size_t>(n_), 0);
    for (const auto& [v, r] : c.requirements) {
      const int i = lookup(v);
      req_[static_cast<std::size_t>(i)] = r;
      if (r == Requirement::kNeighborEdge) neighbor_targets_.push_back(in_g_[static_cast<std::size_t>(i)]);
    }
    for (const Edge& e : c.required_edges) {
      if (c.forbidden_edges.count(e)) throw Error(ErrorCode::kBadParams, "edge both required and forbidden");
      const int a = lookup(e.u);
      const int b = lookup(e.v);
      required_[static_cast<std::size_t>(a)] |= bit(b);
      required_[static_cast<std::size_t>(b)] |= bit(a);
      if (!(sq_[static_cast<std::size_t>(a)] & bit(b))) unsatisfiable_ = true;
    }
    for (int i = 0; i < n_; ++i) {
      if (std::popcount(required_[static_cast<std::size_t>(i)]) > 2) unsatisfiable_ = true;
    }
    for (const Edge& e : c.forbidden_edges) {
      const int a = lookup(e.u);
      const int b = lookup(e.v);
      forbidden_[static_cast<std::size_t>(a)] |= bit(b);
      forbidden_[static_cast<std::size_t>(b)] |= bit(a);
    }
    if (neighbor_targets_.size() > 32) {
      throw Error(ErrorCode::kBadParams, "too many neighbor-edge requirements");
    }
    min_in_g_ = std::max(0, std::min(c.min_in_g_edges, 255));
    if (c.min_in_g_edges > n_) unsatisfiable_ = true;
    use_memo_ = !options_.accept;
    path_.reserve(static_cast<std::size_t>(n_));
  }

  SearchResult run() {
    SearchResult result;
    if (unsatisfiable_ || !is_connected(g_)) return result;
    full_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
    const std::uint32_t all_flags =
        neighbor_targets_.empty() ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << neighbor_targets_.size()) - 1);
    all_flags_ = all_flags;
    path_.push_back(0);
    start_constrained_ = locally_constrained(0);
    Mask cand = sq_[0];
    bool found = false;
    while (cand && !found && !exceeded_) {
      const int w = std::countr_zero(cand);
      cand &= cand - 1;
      if (!edge_allowed(0, w) || !partial_ok(0, w) || !partial_ok(w, 0)) continue;
      first_ = w;
      path_.push_back(w);
      found = dfs(w, 0, bit(0) | bit(w), ing(0, w), update_flags(0, 0, w));
      if (!found) path_.pop_back();
    }
    result.expansions = expansions_;
    if (found) {
      std::vector<Vertex> order;
      for (int i : path_) order.push_back(g_.vertex(i));
      result.status = SearchStatus::kFound;
      result.cycle = HamCycle::from_order(g_, std::move(order));
    } else if (exceeded_) {
      result.status = SearchStatus::kBudgetExceeded;
    }
    return result;
  }

 private:
  int lookup(Vertex v) const {
    const int i = g_.index_of(v);
    if (i < 0) throw Error(ErrorCode::kConstraintOnMissingVertex, "vertex #" + std::to_string(v.id));
    return i;
  }

  int ing(int a, int b) const { return (in_g_[static_cast<std::size_t>(a)] & bit(b)) ? 1 : 0; }

  bool locally_constrained(int v) const {
    const Requirement r = req_[static_cast<std::size_t>(v)];
    return (r != Requirement::kFree && r != Requirement::kNeighborEdge) || required_[static_cast<std::size_t>(v)] != 0;
  }

  bool edge_allowed(int a, int b) const { return !(forbidden_[static_cast<std::size_t>(a)] & bit(b)); }

  // Necessary condition on `v` given one of its cycle edges goes to `other`.
  bool partial_ok(int v, int other) const {
    switch (req_[static_cast<std::size_t>(v)]) {
      case Requirement::kBothInG:
        if (!ing(v, other)) return false;
        break;
      case Requirement::kNoneInG:
        if (ing(v, other)) return false;
        break;
      default:
        break;
    }
    const Mask r = required_[static_cast<std::size_t>(v)];
    return std::popcount(r) < 2 || (r & bit(other));
  }

  // Full check on `v` once both cycle edges (to a and b) are known.
  bool close_ok(int v, int a, int b) const {
    const int count = ing(v, a) + ing(v, b);
    switch (req_[static_cast<std::size_t>(v)]) {
      case Requirement::kBothInG:
        if (count != 2) return false;
        break;
      case Requirement::kExactlyOneInG:
        if (count != 1) return false;
        break;
      case Requirement::kAtLeastOneInG:
        if (count < 1) return false;
        break;
      case Requirement::kNoneInG:
        if (count != 0) return false;
        break;
      default:
        break;
    }
    return (required_[static_cast<std::size_t>(v)] & ~(bit(a) | bit(b))) == 0;
  }

  std::uint32_t update_flags(std::uint32_t flags, int a, int b) const {
    const Mask pair = bit(a) | bit(b);
    for (std::size_t k = 0; k < neighbor_targets_.size(); ++k) {
      if ((neighbor_targets_[k] & pair) == pair) flags |= 1u << k;
    }
    return flags;
  }

  bool try_close(int last, int prev, int in_g, std::uint32_t flags) {
    if (!(sq_[static_cast<std::size_t>(last)] & bit(0)) || !edge_allowed(last, 0)) return false;
    if (!close_ok(last, prev, 0) || !close_ok(0, last, first_)) return false;
    if (in_g + ing(last, 0) < min_in_g_) return false;
    if (update_flags(flags, last, 0) != all_flags_) return false;
    if (!options_.accept) return true;
    if (last < first_) return false;  // the reversed orientation is the canonical one
    std::vector<Vertex> order;
    for (int i : path_) order.push_back(g_.vertex(i));
    return options_.accept(HamCycle::from_order(g_, std::move(order)));
  }

  bool dfs(int last, int prev, Mask visited, int in_g, std::uint32_t flags) {
    if (++expansions_ > options_.budget) {
      exceeded_ = true;
      return false;
    }
    if (visited == full_) return try_close(last, prev, in_g, flags);

    StateKey key{};
    if (use_memo_) {
      std::uint64_t ctx = static_cast<std::uint64_t>(last);
      if (locally_constrained(last)) ctx |= static_cast<std::uint64_t>(prev + 1) << 7;
      if (start_constrained_) ctx |= static_cast<std::uint64_t>(first_ + 1) << 14;
      ctx |= static_cast<std::uint64_t>(std::min(in_g, min_in_g_)) << 21;
      ctx |= static_cast<std::uint64_t>(flags) << 29;
      key = StateKey{visited, ctx};
      if (dead_.count(key)) return false;
    }

    Mask cand = sq_[static_cast<std::size_t>(last)] & ~visited;
    while (cand) {
      const int w = std::countr_zero(cand);
      cand &= cand - 1;
      if (!edge_allowed(last, w) || !partial_ok(w, last)) continue;
      if (!close_ok(last, prev, w)) continue;
      path_.push_back(w);
      if (dfs(w, last, visited | bit(w), in_g + ing(last, w), update_flags(flags, last, w))) return true;
      path_.pop_back();
      if (exceeded_) return false;
    }
    if (use_memo_) dead_.insert(key);
    return false;
  }

  const Graph& g_;
  const SearchOptions& options_;
  int n_;
  std::vector<Mask> sq_;
  std::vector<Mask> in_g_;
  std::vector<Requirement> req_;
  std::vector<Mask> required_;
  std::vector<Mask> forbidden_;
  std::vector<Mask> neighbor_targets_;
  int min_in_g_ = 0;
  bool unsatisfiable_ = false;
  bool use_memo_ = true;
  bool start_constrained_ = false;
  bool exceeded_ = false;
  Mask full_ = 0;
  std::uint32_t all_flags_ = 0;
  int first_ = -1;
  std::uint64_t expansions_ = 0;
  std::vector<int> path_;
  std::unordered_set<StateKey, StateKeyHash> dead_;
};

}  // namespace

SearchResult find_ham_cycle_constrained(const Graph& g, const CycleConstraint& c, const SearchOptions& options) {
  if (g.order() < 3) throw Error(ErrorCode::kTooSmall, "hamiltonian cycles need at least 3 vertices");
  if (g.order() > 64) throw Error(ErrorCode::kSizeCapExceeded, "search kernel handles at most 64 vertices");
  Searcher s(g, c, options);
  return s.run();
}

std::optional<HamCycle> find_ham_cycle(const Graph& g, std::uint64_t budget) {
  SearchOptions options;
  options.budget = budget;
  auto r = find_ham_cycle_constrained(g, CycleConstraint{}, options);
  if (r.status == SearchStatus::kBudgetExceeded) {
    throw Error(ErrorCode::kBudgetExceeded, "search budget of " + std::to_string(budget) + " expansions exhausted");
  }
  return r.cycle;
}

}  // namespace hamsq
