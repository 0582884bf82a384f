#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iosfwd>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sperf/canonical.hpp"
#include "sperf/cliques.hpp"
#include "sperf/graph.hpp"

namespace sperf {

struct SpVerdict {
  bool is_sp = true;
  // Simplicial-free vertex set whose induced subgraph has no strong stable
  // set; present exactly when is_sp is false.
  std::optional<VertexSet> counterexample;
};

// Verdict memo keyed by canonical form. Optionally backed by an append-only
// file of "<graph6> <0|1>" lines. Readers share, writers serialize.
class SpCache {
 public:
  SpCache() = default;
  explicit SpCache(const std::filesystem::path& file);

  std::optional<bool> lookup(const CanonicalKey& key) const;
  void store(const CanonicalKey& key, bool is_sp);
  std::size_t size() const;
  // Records dropped while loading because they were malformed.
  std::size_t truncated_records() const { return truncated_; }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<CanonicalKey, bool> map_;
  std::optional<std::ofstream> out_;
  std::size_t truncated_ = 0;
};

struct SpOptions {
  Budget budget;
  bool memoize = true;
  // Decide "no strong stable set" early through clique cutsets whose near
  // side already lacks one.
  bool prune_cutsets = false;
  // Memo used when memoize is set; a process-wide in-memory cache otherwise.
  SpCache* cache = nullptr;
};

struct SpStats {
  std::uint64_t search_nodes = 0;
  std::uint64_t subgraphs = 0;  // simplicial-free components examined
  std::uint64_t memo_hits = 0;
  std::chrono::milliseconds elapsed{0};
};

SpVerdict is_strongly_perfect(const Graph& g, const SpOptions& opt = {}, SpStats* stats = nullptr);
// Strong perfection of G[within], answered in the labels of g.
SpVerdict is_strongly_perfect(const Graph& g, VertexSet within, const SpOptions& opt,
                              SpStats* stats = nullptr);

struct MnspCertificate {
  bool is_mnsp = false;
  bool no_sss_witnessed = false;
  // Verdict for G - v, in the labels of G.
  std::vector<std::pair<int, SpVerdict>> deletions;
};

MnspCertificate is_mnsp(const Graph& g, const SpOptions& opt = {}, SpStats* stats = nullptr);

inline constexpr int kMaxBasisOrder = 24;

struct BasisMember {
  CanonicalKey key;
  VertexSet representative;  // least mask inducing this class
};

// Proper induced subgraphs without simplicial vertices, one per
// isomorphism class, ordered by order and then key. The empty graph is
// always a member.
struct BasisInventory {
  std::vector<BasisMember> members;
  bool contains(const CanonicalKey& key) const;
};

BasisInventory basis(const Graph& g);

// Every basis member is strongly perfect.
bool has_strong_basis(const Graph& g, const SpOptions& opt = {});

// An MNSP graph has no simplicial vertex.
bool mnsp_has_no_simplicial(const Graph& g, const SpOptions& opt = {});

inline constexpr int kMaxScanOrder = 12;

struct ScanOptions {
  bool include_graph_vi = true;
  int jobs = 1;
  // Called after each graph with the number processed so far.
  std::function<void(std::size_t)> progress;
};

struct ScanReport {
  std::size_t total = 0;
  std::size_t forbidden = 0;
  std::size_t checked = 0;
  std::vector<std::string> violations;  // graph6, sorted
  bool include_graph_vi = true;
};

ScanReport scan_conjecture(const std::vector<Graph>& graphs, const ScanOptions& opt = {});
// Parses the whole stream first; StreamParseError names the bad record.
ScanReport scan_conjecture(std::istream& in, const ScanOptions& opt = {});

}  // namespace sperf
