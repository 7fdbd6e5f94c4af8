#include "eop/exact.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "eop/conflict.hpp"
#include "eop/error.hpp"

namespace eop {

namespace {

// Single-word vertex set with the subset of the boost::dynamic_bitset
// interface the search uses; graphs of at most 64 vertices never allocate.
class WordSet {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  WordSet() = default;
  explicit WordSet(std::size_t) {}

  std::size_t count() const noexcept { return static_cast<std::size_t>(std::popcount(w_)); }
  bool none() const noexcept { return w_ == 0; }
  bool test(std::size_t i) const noexcept { return (w_ >> i) & 1U; }
  void set(std::size_t i) noexcept { w_ |= std::uint64_t{1} << i; }
  void reset(std::size_t i) noexcept { w_ &= ~(std::uint64_t{1} << i); }
  std::size_t find_first() const noexcept {
    return w_ == 0 ? npos : static_cast<std::size_t>(std::countr_zero(w_));
  }
  std::size_t find_next(std::size_t i) const noexcept {
    if (i >= 63) return npos;
    const std::uint64_t rest = w_ & (~std::uint64_t{0} << (i + 1));
    return rest == 0 ? npos : static_cast<std::size_t>(std::countr_zero(rest));
  }

  WordSet& operator|=(const WordSet& o) noexcept { w_ |= o.w_; return *this; }
  friend WordSet operator&(WordSet a, const WordSet& b) noexcept { a.w_ &= b.w_; return a; }
  friend WordSet operator|(WordSet a, const WordSet& b) noexcept { a.w_ |= b.w_; return a; }
  friend WordSet operator-(WordSet a, const WordSet& b) noexcept { a.w_ &= ~b.w_; return a; }

 private:
  std::uint64_t w_ = 0;
};

using DynSet = boost::dynamic_bitset<std::uint64_t>;

template <class Set>
class MisSearch {
 public:
  MisSearch(const Graph& g, std::uint64_t budget)
      : n_(static_cast<std::size_t>(g.order())), budget_(budget), adj_(n_, Set(n_)) {
    for (const Edge& e : g.edges()) {
      adj_[e.u].set(e.v);
      adj_[e.v].set(e.u);
    }
  }

  std::vector<Vertex> solve() {
    Set all(n_);
    for (std::size_t v = 0; v < n_; ++v) all.set(v);
    const auto best = search(all, -1);
    std::vector<Vertex> out;
    for (std::size_t v = best->find_first(); v != Set::npos; v = best->find_next(v)) {
      out.push_back(static_cast<Vertex>(v));
    }
    return out;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  // A maximum independent set of G[s] if its size exceeds `beat`,
  // otherwise nullopt (alpha(G[s]) <= beat).
  std::optional<Set> search(Set s, std::int64_t beat) {
    if (++nodes_ > budget_) {
      throw Error(ErrorKind::BudgetExceeded,
                  "search exceeded the node budget of " + std::to_string(budget_));
    }
    if (static_cast<std::int64_t>(s.count()) <= beat) return std::nullopt;

    // A vertex of degree at most one is in some maximum independent set.
    Set forced(n_);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t v = s.find_first(); v != Set::npos; v = s.find_next(v)) {
        const Set nbrs = adj_[v] & s;
        if (nbrs.count() <= 1) {
          forced.set(v);
          s.reset(v);
          s = s - nbrs;
          changed = true;
        }
      }
    }
    beat -= static_cast<std::int64_t>(forced.count());
    if (s.none()) {
      if (beat < 0) return forced;
      return std::nullopt;
    }
    if (static_cast<std::int64_t>(s.count()) <= beat) return std::nullopt;

    std::vector<Set> parts = components(s);
    if (parts.size() > 1) {
      std::stable_sort(parts.begin(), parts.end(),
                       [](const Set& a, const Set& b) { return a.count() < b.count(); });
      std::int64_t unsolved = static_cast<std::int64_t>(s.count());
      std::int64_t solved = 0;
      Set result = forced;
      for (const Set& part : parts) {
        unsolved -= static_cast<std::int64_t>(part.count());
        const auto sub = search(part, beat - solved - unsolved);
        if (!sub) return std::nullopt;
        solved += static_cast<std::int64_t>(sub->count());
        result |= *sub;
      }
      return result;
    }

    std::size_t pivot = Set::npos;
    std::size_t pivot_degree = 0;
    for (std::size_t v = s.find_first(); v != Set::npos; v = s.find_next(v)) {
      const std::size_t d = (adj_[v] & s).count();
      if (pivot == Set::npos || d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }

    std::optional<Set> best;
    Set without = s;
    without.reset(pivot);
    if (auto with = search(without - adj_[pivot], beat - 1)) {
      with->set(pivot);
      beat = static_cast<std::int64_t>(with->count());
      best = std::move(with);
    }
    if (auto skip = search(without, beat)) best = std::move(skip);
    if (!best) return std::nullopt;
    *best |= forced;
    return best;
  }

  std::vector<Set> components(Set s) const {
    std::vector<Set> out;
    while (!s.none()) {
      Set comp(n_);
      Set frontier(n_);
      frontier.set(s.find_first());
      while (!frontier.none()) {
        comp |= frontier;
        Set next(n_);
        for (std::size_t u = frontier.find_first(); u != Set::npos; u = frontier.find_next(u)) {
          next |= adj_[u];
        }
        frontier = (next & s) - comp;
      }
      s = s - comp;
      out.push_back(std::move(comp));
    }
    return out;
  }

  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Set> adj_;
};

template <class Set>
MisResult run_search(const Graph& g, const SolverOptions& options) {
  MisSearch<Set> search(g, options.node_budget);
  MisResult r;
  r.witness = search.solve();
  r.value = static_cast<std::int64_t>(r.witness.size());
  r.nodes_explored = search.nodes();
  return r;
}

EdgeSetResult edge_packing_via(const Graph& conflicts, const SolverOptions& options,
                               std::chrono::steady_clock::time_point start) {
  MisResult mis = max_independent_set(conflicts, options);
  EdgeSetResult r;
  r.value = mis.value;
  r.witness = EopSet(std::vector<EdgeId>(mis.witness.begin(), mis.witness.end()));
  r.nodes_explored = mis.nodes_explored;
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

}  // namespace

MisResult max_independent_set(const Graph& g, const SolverOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  MisResult r = g.order() <= 64 ? run_search<WordSet>(g, options) : run_search<DynSet>(g, options);
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

EdgeSetResult eop_number_exact(const Graph& g, const SolverOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  return edge_packing_via(conflict_graph(g), options, start);
}

EdgeSetResult induced_matching_number(const Graph& g, const SolverOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  return edge_packing_via(distance_two_edge_graph(g), options, start);
}

bool is_independent_set(const Graph& g, const std::vector<Vertex>& set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!g.contains(set[i])) return false;
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (set[i] == set[j] || g.adjacent(set[i], set[j])) return false;
    }
  }
  return true;
}

}  // namespace eop
