/*
Copyright 2026 The pebblekit Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pebble {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Raised for malformed inputs: bad node ids, cycles, size mismatches.
class Error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Subset of [0, universe). Membership is O(1); iteration is in increasing id order.
class NodeSet {
  public:
    NodeSet() = default;
    explicit NodeSet(std::size_t universe) : bits_(universe, false) {}
    NodeSet(std::size_t universe, std::initializer_list<NodeId> members);
    NodeSet(std::size_t universe, std::span<const NodeId> members);

    static NodeSet all(std::size_t universe);

    std::size_t universe() const { return bits_.size(); }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(NodeId v) const { return v < bits_.size() && bits_[v]; }
    void insert(NodeId v);
    void erase(NodeId v);

    std::vector<NodeId> members() const;

    NodeSet operator|(const NodeSet& other) const;
    NodeSet operator&(const NodeSet& other) const;
    NodeSet operator-(const NodeSet& other) const;
    bool is_subset_of(const NodeSet& other) const;

    friend bool operator==(const NodeSet& a, const NodeSet& b) { return a.bits_ == b.bits_; }

  private:
    std::vector<bool> bits_;
    std::size_t count_ = 0;
};

/// Immutable DAG on nodes 0..N-1 with sorted forward and reverse adjacency.
class Dag {
  public:
    Dag() = default;

    /// Validates ids, rejects self-loops, duplicates and cycles (the error message
    /// carries a witness cycle). Edge order in the input does not matter.
    Dag(std::size_t node_count, std::vector<Edge> edges);

    std::size_t node_count() const { return parents_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    /// Edges sorted ascending by (u, v).
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const NodeId> parents(NodeId v) const { return parents_.at(v); }
    std::span<const NodeId> children(NodeId v) const { return children_.at(v); }
    std::size_t indegree(NodeId v) const { return parents_.at(v).size(); }
    std::size_t outdegree(NodeId v) const { return children_.at(v).size(); }
    std::size_t max_indegree() const;
    std::size_t max_outdegree() const;
    bool has_edge(NodeId u, NodeId v) const;

    std::vector<NodeId> sources() const;
    std::vector<NodeId> sinks() const;

    /// Kahn order, ties broken by smallest id.
    const std::vector<NodeId>& topological_order() const { return topo_; }

  private:
    std::vector<Edge> edges_;
    std::vector<std::vector<NodeId>> parents_;
    std::vector<std::vector<NodeId>> children_;
    std::vector<NodeId> topo_;
};

/// Returns a directed cycle as a closed walk [v0, v1, ..., v0], or empty when acyclic.
/// Works on raw edge lists so that parse errors can report the witness.
std::vector<NodeId> find_cycle(std::size_t node_count, std::span<const Edge> edges);

/// Number of nodes on the longest directed path of g - removed.
std::size_t depth(const Dag& g, const NodeSet& removed);
std::size_t depth(const Dag& g);

/// Maximum over directed paths of g - removed of |path ∩ counted|.
std::size_t depth_counted(const Dag& g, const NodeSet& counted, const NodeSet& removed);

/// Per-node value of depth_counted restricted to paths ending at that node (0 for removed nodes).
std::vector<std::size_t> depth_counted_ending_at(const Dag& g, const NodeSet& counted,
                                                 const NodeSet& removed);

/// A longest path of g - removed, as node ids in path order.
std::vector<NodeId> longest_path(const Dag& g, const NodeSet& removed);

/// Induced subgraph on the surviving nodes, relabeled compactly in increasing id order.
Dag remove_nodes(const Dag& g, const NodeSet& removed);

/// g followed by h, h's ids shifted by g.node_count().
Dag disjoint_union(const Dag& g, const Dag& h);

enum class NodeRole : std::uint8_t { Bit, Test };

/// A DAG whose nodes carry a layer index and a role. Bit nodes are undeletable.
struct LayeredDag {
    Dag dag;
    std::vector<std::uint32_t> layer;
    std::vector<NodeRole> role;

    LayeredDag() = default;
    LayeredDag(Dag g, std::vector<std::uint32_t> layers, std::vector<NodeRole> roles);

    std::size_t node_count() const { return dag.node_count(); }
    bool is_bit(NodeId v) const { return role.at(v) == NodeRole::Bit; }
    NodeSet bits() const;
    NodeSet tests() const;
};

namespace graphs {

Dag edgeless(std::size_t n);
Dag path(std::size_t n);
/// Edge (i, j) for every i < j.
Dag complete(std::size_t n);
/// N nodes in L equal layers, a perfect (identity) matching between every pair of layers.
/// Node id = layer * (N / L) + position.
Dag layered_matching(std::size_t n, std::size_t layers);
std::vector<std::uint32_t> layered_matching_layers(std::size_t n, std::size_t layers);

}  // namespace graphs

}  // namespace pebble
