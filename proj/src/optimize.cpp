// Copyright 2026 The oraclec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "oraclec/cuts.hpp"
#include "oraclec/optimize.hpp"

namespace oraclec {

namespace {

// In-place rewriting over a working copy.  Replaced nodes are redirected
// through a substitution map; reads resolve through the map, and the network
// is compacted once at the end.
class rewriter {
public:
  rewriter(const xag& g, const xag_database& db, uint32_t cut_size, uint32_t cuts_per_node)
      : w_(g), db_(db), cut_size_(cut_size), cuts_per_node_(cuts_per_node) {}

  xag run() {
    const auto original_gates = gate_snapshot();
    uint64_t best_count = live_and_count();
    for (const auto node : original_gates) {
      if (sub_.count(node) || !is_live(node)) {
        continue;
      }
      if (try_rewrite_node(node, best_count)) {
        best_count = live_and_count();
      }
    }
    return rebuild();
  }

private:
  std::vector<uint32_t> gate_snapshot() const {
    std::vector<uint32_t> gates;
    for (uint32_t i = 0; i < w_.num_nodes(); ++i) {
      const auto kind = w_.node(i).kind;
      if (kind == node_kind::and2 || kind == node_kind::xor2) {
        gates.push_back(i);
      }
    }
    return gates;
  }

  signal resolve(signal s) const {
    while (true) {
      const auto it = sub_.find(s.node);
      if (it == sub_.end()) {
        return s;
      }
      s = it->second ^ s.complemented;
    }
  }

  bool is_gate(uint32_t node) const {
    const auto kind = w_.node(node).kind;
    return kind == node_kind::and2 || kind == node_kind::xor2;
  }

  std::array<signal, 2> resolved_fanins(uint32_t node) const {
    const auto& n = w_.node(node);
    return {resolve(n.fanin[0]), resolve(n.fanin[1])};
  }

  std::vector<uint32_t> live_nodes() const {
    std::vector<uint32_t> stack;
    std::set<uint32_t> seen;
    for (const auto po : w_.outputs()) {
      const auto s = resolve(po);
      if (seen.insert(s.node).second) {
        stack.push_back(s.node);
      }
    }
    std::vector<uint32_t> live;
    while (!stack.empty()) {
      const auto n = stack.back();
      stack.pop_back();
      live.push_back(n);
      if (!is_gate(n)) {
        continue;
      }
      for (const auto f : resolved_fanins(n)) {
        if (seen.insert(f.node).second) {
          stack.push_back(f.node);
        }
      }
    }
    return live;
  }

  bool is_live(uint32_t node) const {
    const auto live = live_nodes();
    return std::find(live.begin(), live.end(), node) != live.end();
  }

  uint64_t live_and_count() const {
    uint64_t count = 0;
    for (const auto n : live_nodes()) {
      if (w_.node(n).kind == node_kind::and2) {
        ++count;
      }
    }
    return count;
  }

  std::map<uint32_t, uint32_t> live_refs() const {
    std::map<uint32_t, uint32_t> refs;
    for (const auto n : live_nodes()) {
      refs.emplace(n, 0u);
    }
    for (const auto& [n, r] : refs) {
      (void)r;
      if (!is_gate(n)) {
        continue;
      }
      for (const auto f : resolved_fanins(n)) {
        ++refs[f.node];
      }
    }
    for (const auto po : w_.outputs()) {
      ++refs[resolve(po).node];
    }
    return refs;
  }

  // AND gates that die when `root` is replaced, not descending past leaves.
  uint64_t mffc_ands(uint32_t root, const std::vector<uint32_t>& leaves) const {
    auto refs = live_refs();
    const std::set<uint32_t> leaf_set(leaves.begin(), leaves.end());
    const auto deref = [&](auto&& self, uint32_t n) -> uint64_t {
      uint64_t count = w_.node(n).kind == node_kind::and2 ? 1u : 0u;
      for (const auto f : resolved_fanins(n)) {
        if (leaf_set.count(f.node) || !is_gate(f.node)) {
          continue;
        }
        if (--refs[f.node] == 0u) {
          count += self(self, f.node);
        }
      }
      return count;
    };
    return deref(deref, root);
  }

  // Cuts of a node in the resolved graph, cached until the next substitution.
  const std::vector<cut>& cuts_of(uint32_t node) {
    if (const auto it = cut_cache_.find(node); it != cut_cache_.end()) {
      return it->second;
    }
    std::vector<cut> result;
    if (w_.node(node).kind == node_kind::constant0) {
      cut c;
      c.root = node;
      c.table = truth_table::constant(false, 0);
      result.push_back(std::move(c));
      return cut_cache_.emplace(node, std::move(result)).first->second;
    }
    {
      cut trivial;
      trivial.root = node;
      trivial.leaves = {node};
      trivial.table = truth_table::projection(0, 1);
      result.push_back(std::move(trivial));
    }
    if (is_gate(node)) {
      const auto fi = resolved_fanins(node);
      // resolved fanin cut sets are computed first
      const auto& ca_list = cuts_of(fi[0].node);
      std::vector<cut> ca_copy(ca_list.begin(), ca_list.end());
      const auto& cb_list = cuts_of(fi[1].node);
      std::vector<std::vector<uint32_t>> candidates;
      for (const auto& ca : ca_copy) {
        for (const auto& cb : cb_list) {
          if (auto merged = cut_detail::merge_leaves(ca.leaves, cb.leaves, cut_size_)) {
            candidates.push_back(std::move(*merged));
          }
        }
      }
      std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      if (candidates.size() > cuts_per_node_) {
        candidates.resize(cuts_per_node_);
      }
      for (auto& leaves : candidates) {
        cut c;
        c.root = node;
        c.table = resolved_cone_table(node, leaves);
        c.leaves = std::move(leaves);
        result.push_back(std::move(c));
      }
    }
    return cut_cache_.emplace(node, std::move(result)).first->second;
  }

  truth_table resolved_cone_table(uint32_t root, const std::vector<uint32_t>& leaves) const {
    const auto k = static_cast<uint32_t>(leaves.size());
    std::map<uint32_t, truth_table> memo;
    for (uint32_t i = 0; i < k; ++i) {
      memo.emplace(leaves[i], truth_table::projection(i, k));
    }
    const auto eval = [&](auto&& self, signal s) -> truth_table {
      if (const auto it = memo.find(s.node); it != memo.end()) {
        return s.complemented ? ~it->second : it->second;
      }
      const auto& n = w_.node(s.node);
      truth_table t;
      if (n.kind == node_kind::constant0) {
        t = truth_table::constant(false, k);
      } else {
        assert(is_gate(s.node));
        const auto fi = resolved_fanins(s.node);
        t = n.kind == node_kind::and2 ? (self(self, fi[0]) & self(self, fi[1]))
                                      : (self(self, fi[0]) ^ self(self, fi[1]));
      }
      memo.emplace(s.node, t);
      return s.complemented ? ~t : t;
    };
    return eval(eval, signal{root, false});
  }

  bool cone_contains(uint32_t start, uint32_t target) const {
    std::vector<uint32_t> stack{start};
    std::set<uint32_t> seen{start};
    while (!stack.empty()) {
      const auto n = stack.back();
      stack.pop_back();
      if (n == target) {
        return true;
      }
      if (!is_gate(n)) {
        continue;
      }
      for (const auto f : resolved_fanins(n)) {
        if (seen.insert(f.node).second) {
          stack.push_back(f.node);
        }
      }
    }
    return false;
  }

  bool try_rewrite_node(uint32_t node, uint64_t best_count) {
    struct candidate {
      int64_t gain = 0;
      uint32_t xor_cost = 0;
      const cut* c = nullptr;
    };
    std::optional<candidate> best;
    for (const auto& c : cuts_of(node)) {
      if (c.leaves.size() < 2u) {
        continue;
      }
      const auto [canon, transform] = npn_canonicalize(c.table);
      (void)transform;
      const auto& tmpl = db_.entry(canon.to_uint16());
      const auto gain =
          static_cast<int64_t>(mffc_ands(node, c.leaves)) - static_cast<int64_t>(tmpl.num_ands);
      if (gain <= 0) {
        continue;
      }
      const auto cost = tmpl.xor_cost();
      if (!best || gain > best->gain || (gain == best->gain && cost < best->xor_cost)) {
        best = candidate{gain, cost, &c};
      }
    }
    if (!best) {
      return false;
    }

    const auto snapshot = w_.num_nodes();
    std::array<signal, 4> leaves{w_.constant(false), w_.constant(false), w_.constant(false),
                                 w_.constant(false)};
    for (size_t i = 0; i < best->c->leaves.size(); ++i) {
      leaves[i] = signal{best->c->leaves[i], false};
    }
    const auto replacement = db_.instantiate(w_, best->c->table, leaves);
    if (replacement.node == node || cone_contains(replacement.node, node)) {
      w_.truncate(snapshot);
      return false;
    }
    sub_[node] = replacement;
    if (live_and_count() < best_count) {
      cut_cache_.clear();
      return true;
    }
    sub_.erase(node);
    w_.truncate(snapshot);
    return false;
  }

  xag rebuild() const {
    xag result(w_.num_pis());
    std::map<uint32_t, signal> map;
    map.emplace(0u, result.constant(false));
    for (uint32_t i = 0; i < w_.num_pis(); ++i) {
      map.emplace(w_.pi(i).node, result.pi(i));
    }
    const auto build = [&](auto&& self, uint32_t n) -> signal {
      if (const auto it = map.find(n); it != map.end()) {
        return it->second;
      }
      const auto fi = resolved_fanins(n);
      const auto a = self(self, fi[0].node) ^ fi[0].complemented;
      const auto b = self(self, fi[1].node) ^ fi[1].complemented;
      const auto s = w_.node(n).kind == node_kind::and2 ? result.create_and(a, b) : result.create_xor(a, b);
      map.emplace(n, s);
      return s;
    };
    for (const auto po : w_.outputs()) {
      const auto s = resolve(po);
      result.create_po(build(build, s.node) ^ s.complemented);
    }
    return result;
  }

  xag w_;
  const xag_database& db_;
  uint32_t cut_size_;
  size_t cuts_per_node_;
  std::map<uint32_t, signal> sub_;
  std::map<uint32_t, std::vector<cut>> cut_cache_;
};

signal shannon_synthesize(xag& h, const xag_database& db, const truth_table& t) {
  const auto support = t.support();
  if (support.size() <= 4u) {
    std::array<signal, 4> leaves{h.constant(false), h.constant(false), h.constant(false),
                                 h.constant(false)};
    for (size_t i = 0; i < support.size(); ++i) {
      leaves[i] = h.pi(support[i]);
    }
    return db.instantiate(h, t.shrink_to(support), leaves);
  }

  // Split on the support variable whose cofactors have the smallest combined
  // support; ties go to the lowest variable index.
  uint32_t best_var = support[0];
  size_t best_score = SIZE_MAX;
  for (const auto v : support) {
    const auto score =
        t.cofactor(v, false).support().size() + t.cofactor(v, true).support().size();
    if (score < best_score) {
      best_score = score;
      best_var = v;
    }
  }
  const auto f0 = t.cofactor(best_var, false);
  const auto f1 = t.cofactor(best_var, true);
  const auto s0 = shannon_synthesize(h, db, f0);
  const auto sd = shannon_synthesize(h, db, f0 ^ f1);
  return h.create_xor(s0, h.create_and(h.pi(best_var), sd));
}

} // namespace

xag cut_rewrite(const xag& g, const xag_database& db, uint32_t cut_size, uint32_t cuts_per_node) {
  if (cut_size < 2u || cut_size > 4u) {
    throw std::invalid_argument("cut_rewrite: cut size must be in 2..4");
  }
  return rewriter(g, db, cut_size, cuts_per_node).run();
}

xag collapse_resynthesize(const xag& g, const xag_database& db) {
  if (g.num_pis() > 8u) {
    throw too_many_inputs(g.num_pis());
  }
  const auto tables = g.output_truth_tables();
  xag h(g.num_pis());
  for (const auto& t : tables) {
    h.create_po(shannon_synthesize(h, db, t));
  }
  return h;
}

xag optimize(const xag& g, const xag_database& db, const optimize_options& opts) {
  xag current = g;
  if (opts.run_collapse && g.num_pis() <= std::min(opts.collapse_threshold, 8u)) {
    auto collapsed = collapse_resynthesize(current, db);
    if (collapsed.count_ands() <= current.count_ands()) {
      current = std::move(collapsed);
    }
  }
  if (opts.run_rewrite) {
    for (uint32_t round = 0; round < opts.max_rewrite_rounds; ++round) {
      auto next = cut_rewrite(current, db, opts.cut_size, opts.cuts_per_node);
      if (next.count_ands() >= current.count_ands()) {
        break;
      }
      current = std::move(next);
    }
  }
  current = current.cleanup();
  if (g.num_pis() <= 16u && !(g.output_truth_tables() == current.output_truth_tables())) {
    throw std::logic_error("optimize: output functions changed");
  }
  return current;
}

} // namespace oraclec
