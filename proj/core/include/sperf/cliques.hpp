#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "sperf/graph.hpp"

namespace sperf {

// Limits for one certification call. Exceeding either raises
// Error(Errc::BudgetExceeded); no verdict is produced in that case.
struct Budget {
  std::uint64_t max_nodes = 100'000'000;
  std::chrono::milliseconds max_time = std::chrono::minutes(15);
};

class BudgetMeter {
 public:
  explicit BudgetMeter(Budget b = {});

  void tick();
  std::uint64_t nodes() const { return nodes_; }
  const Budget& budget() const { return budget_; }
  std::chrono::milliseconds elapsed() const;

 private:
  Budget budget_;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

using CliqueList = std::vector<VertexSet>;

// Maximal cliques in ascending mask order. An isolated vertex forms a
// singleton clique; the empty graph has none.
CliqueList maximal_cliques(const Graph& g);

struct SssQuery {
  VertexSet require_in;
  VertexSet forbid;
};

// First strong stable set in the fixed branching order that satisfies q, or
// nothing. Throws InvalidQuery for a malformed query.
std::optional<VertexSet> find_sss(const Graph& g, const SssQuery& q = {},
                                  BudgetMeter* meter = nullptr);
bool has_sss(const Graph& g, BudgetMeter* meter = nullptr);

// Definitional re-check of a claimed strong stable set.
bool is_strong_stable_set(const Graph& g, VertexSet s);

enum class Membership { Wanted, Unwanted, Free };

struct VertexStatus {
  Membership membership = Membership::Free;
  bool desirable = false;
  bool undesirable = false;
};

const char* membership_name(Membership m);

// Requires g to have a strong stable set (NoSssInGraph otherwise). A vertex
// counts as forced in G - u when G - u has no strong stable set at all.
VertexStatus vertex_status(const Graph& g, int v, BudgetMeter* meter = nullptr);

}  // namespace sperf
