#include "sperf/certify.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "sperf/detect.hpp"
#include "sperf/error.hpp"
#include "sperf/graph6.hpp"

namespace sperf {

// --- SpCache ---------------------------------------------------------------

SpCache::SpCache(const std::filesystem::path& file) {
  std::size_t good_bytes = 0;
  {
    std::ifstream in(file, std::ios::binary);
    std::string line;
    std::size_t offset = 0;
    bool corrupt = false;
    while (std::getline(in, line)) {
      const bool complete = !in.eof();
      const std::size_t next = offset + line.size() + (complete ? 1 : 0);
      bool ok = complete && line.size() >= 3 && line[line.size() - 2] == ' ' &&
                (line.back() == '0' || line.back() == '1');
      if (ok) {
        try {
          parse_graph6(std::string_view(line).substr(0, line.size() - 2));
        } catch (const Error&) {
          ok = false;
        }
      }
      if (!ok || corrupt) {
        corrupt = true;
        ++truncated_;
      } else {
        map_[CanonicalKey{line.substr(0, line.size() - 2)}] = line.back() == '1';
        good_bytes = next;
      }
      offset = next;
    }
  }
  std::error_code ec;
  if (std::filesystem::exists(file, ec) && std::filesystem::file_size(file, ec) != good_bytes) {
    std::filesystem::resize_file(file, good_bytes, ec);
  }
  out_.emplace(file, std::ios::app | std::ios::binary);
}

std::optional<bool> SpCache::lookup(const CanonicalKey& key) const {
  std::shared_lock lock(mu_);
  auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void SpCache::store(const CanonicalKey& key, bool is_sp) {
  std::unique_lock lock(mu_);
  if (!map_.emplace(key, is_sp).second) return;
  // Keys beyond graph6 range are raw bytes and stay in memory only.
  if (out_ && key.bytes.find_first_of("\n ") == std::string::npos) {
    *out_ << key.bytes << ' ' << (is_sp ? '1' : '0') << '\n';
    out_->flush();
  }
}

std::size_t SpCache::size() const {
  std::shared_lock lock(mu_);
  return map_.size();
}

// --- strong perfection --------------------------------------------------------

namespace {

SpCache& process_cache() {
  static SpCache cache;
  return cache;
}

// Peels simplicial vertices until none remain. Deleting a simplicial vertex
// preserves both the presence and the absence of strong perfection, so the
// remaining core decides.
VertexSet peel(const Graph& g, VertexSet s) {
  for (;;) {
    const VertexSet simp = simplicial_vertices(g, s);
    if (simp.empty()) return s;
    s -= simp;
  }
}

class SpEngine {
 public:
  SpEngine(const Graph& g, const SpOptions& opt)
      : g_(g), opt_(opt), meter_(opt.budget),
        cache_(opt.memoize ? (opt.cache ? opt.cache : &process_cache()) : nullptr) {}

  std::optional<VertexSet> check(VertexSet s) {
    for (VertexSet c : components(g_, peel(g_, s))) {
      if (done_.count(c.mask())) continue;
      if (auto cex = check_component(c)) return cex;
    }
    return std::nullopt;
  }

  void fill(SpStats* stats) const {
    if (!stats) return;
    stats->search_nodes += meter_.nodes();
    stats->subgraphs += subgraphs_;
    stats->memo_hits += memo_hits_;
    stats->elapsed += meter_.elapsed();
  }

 private:
  // c is connected and simplicial-free.
  std::optional<VertexSet> check_component(VertexSet c) {
    meter_.tick();
    ++subgraphs_;
    const Graph h = induced_subgraph(g_, c);
    std::optional<CanonicalKey> key;
    if (cache_) {
      key = canonical_key(h);
      // A cached "not SP" still needs a witness, so only positive hits
      // short-circuit.
      if (cache_->lookup(*key) == true) {
        ++memo_hits_;
        done_.insert(c.mask());
        return std::nullopt;
      }
    }
    if (!has_sss_pruned(h)) {
      if (key) cache_->store(*key, false);
      return c;
    }
    for (int v : c) {
      if (auto cex = check(c.without(v))) {
        if (key) cache_->store(*key, false);
        return cex;
      }
    }
    done_.insert(c.mask());
    if (key) cache_->store(*key, true);
    return std::nullopt;
  }

  bool has_sss_pruned(const Graph& h) {
    if (opt_.prune_cutsets) {
      for (const auto& w : all_cutset_splits(h)) {
        if (!restricts_to_side(h, w)) continue;
        if (!has_sss(induced_subgraph(h, w.A | w.K), &meter_)) return false;
      }
    }
    return has_sss(h, &meter_);
  }

  const Graph& g_;
  const SpOptions& opt_;
  BudgetMeter meter_;
  SpCache* cache_;
  std::unordered_set<std::uint64_t> done_;
  std::uint64_t subgraphs_ = 0;
  std::uint64_t memo_hits_ = 0;
};

}  // namespace

SpVerdict is_strongly_perfect(const Graph& g, VertexSet within, const SpOptions& opt,
                              SpStats* stats) {
  SpEngine engine(g, opt);
  std::optional<VertexSet> cex;
  try {
    cex = engine.check(within & g.vertices());
  } catch (...) {
    engine.fill(stats);
    throw;
  }
  engine.fill(stats);
  return SpVerdict{!cex.has_value(), cex};
}

SpVerdict is_strongly_perfect(const Graph& g, const SpOptions& opt, SpStats* stats) {
  return is_strongly_perfect(g, g.vertices(), opt, stats);
}

MnspCertificate is_mnsp(const Graph& g, const SpOptions& opt, SpStats* stats) {
  MnspCertificate cert;
  {
    BudgetMeter meter(opt.budget);
    cert.no_sss_witnessed = !has_sss(g, &meter);
    if (stats) stats->search_nodes += meter.nodes();
  }
  bool all_sp = true;
  for (int v = 0; v < g.order(); ++v) {
    SpVerdict d = is_strongly_perfect(g, g.vertices().without(v), opt, stats);
    all_sp = all_sp && d.is_sp;
    cert.deletions.emplace_back(v, std::move(d));
  }
  cert.is_mnsp = cert.no_sss_witnessed && all_sp;
  return cert;
}

// --- basis -------------------------------------------------------------------

bool BasisInventory::contains(const CanonicalKey& key) const {
  return std::any_of(members.begin(), members.end(),
                     [&](const BasisMember& m) { return m.key == key; });
}

BasisInventory basis(const Graph& g) {
  if (g.order() > kMaxBasisOrder) {
    throw Error(Errc::OrderTooLargeForBasis,
                "basis enumeration supports at most " + std::to_string(kMaxBasisOrder) +
                    " vertices, got " + std::to_string(g.order()));
  }
  std::unordered_map<CanonicalKey, VertexSet> seen;
  const std::uint64_t full = g.vertices().mask();
  for (std::uint64_t m = 0; m < full; ++m) {
    const VertexSet s(m);
    if (!simplicial_vertices(g, s).empty()) continue;
    seen.try_emplace(canonical_key(induced_subgraph(g, s)), s);
  }
  BasisInventory inv;
  for (auto& [key, rep] : seen) inv.members.push_back({key, rep});
  std::sort(inv.members.begin(), inv.members.end(), [](const BasisMember& a, const BasisMember& b) {
    if (a.representative.size() != b.representative.size()) {
      return a.representative.size() < b.representative.size();
    }
    return a.key < b.key;
  });
  return inv;
}

bool has_strong_basis(const Graph& g, const SpOptions& opt) {
  for (const auto& m : basis(g).members) {
    if (!is_strongly_perfect(g, m.representative, opt).is_sp) return false;
  }
  return true;
}

bool mnsp_has_no_simplicial(const Graph& g, const SpOptions& opt) {
  if (simplicial_vertices(g).empty()) return true;
  return !is_mnsp(g, opt).is_mnsp;
}

// --- conjecture scan -------------------------------------------------------------

ScanReport scan_conjecture(const std::vector<Graph>& graphs, const ScanOptions& opt) {
  for (const auto& g : graphs) {
    if (g.order() > kMaxScanOrder) {
      throw Error(Errc::OrderTooLarge, "scan accepts graphs of order at most " +
                                           std::to_string(kMaxScanOrder));
    }
  }
  ScanReport report;
  report.include_graph_vi = opt.include_graph_vi;
  report.total = graphs.size();
  std::atomic<std::size_t> next{0}, forbidden{0}, checked{0}, processed{0};
  std::mutex mu;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < graphs.size();) {
        const Graph& g = graphs[i];
        if (contains_forbidden(g, opt.include_graph_vi)) {
          ++forbidden;
        } else {
          ++checked;
          if (!has_sss(g)) {
            std::lock_guard lock(mu);
            report.violations.push_back(write_graph6(g));
          }
        }
        const std::size_t done = ++processed;
        if (opt.progress) {
          std::lock_guard lock(mu);
          opt.progress(done);
        }
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      next = graphs.size();
    }
  };
  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  report.forbidden = forbidden;
  report.checked = checked;
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

ScanReport scan_conjecture(std::istream& in, const ScanOptions& opt) {
  return scan_conjecture(read_graph6_stream(in), opt);
}

}  // namespace sperf
