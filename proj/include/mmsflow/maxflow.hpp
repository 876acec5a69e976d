#pragma once

#include <vector>

#include "mmsflow/errors.hpp"

namespace mmsflow {

struct FlowEdge {
    int from = 0;
    int to = 0;
    long long capacity = 0;
};

// Directed flow network with strictly positive integral capacities. Edge
// insertion order is recorded and is part of the deterministic behaviour
// contract: for a fixed node/edge order, max_flow returns bit-identical
// results on every run. Parallel edges are allowed, self-loops are not.
// Capacities and the resulting flow value must fit in a signed 64-bit
// integer; every network built in this project stays far below that.
struct FlowNetwork {
    int node_count = 0;
    int source = 0;
    int sink = 0;
    std::vector<FlowEdge> edges;

    FlowNetwork(int node_count, int source, int sink);
    void add_edge(int from, int to, long long capacity);
};

// An integral feasible flow: 0 <= f(e) <= u(e) on every edge, conservation at
// every node other than source and sink, value equal to the net flow into the
// sink. edge_flows is aligned with FlowNetwork::edges.
struct FlowResult {
    long long value = 0;
    std::vector<long long> edge_flows;
};

// Exact integral maximum flow (blocking flows on the level graph). All
// arithmetic is integer arithmetic; the result is a pure function of the
// network including its edge order.
FlowResult max_flow(const FlowNetwork& network);

// Sum of flow over the edges leaving `node`.
long long node_outflow(const FlowResult& result, const FlowNetwork& network, int node);

// Capacity and conservation checks for a result/network pair.
bool is_feasible_flow(const FlowNetwork& network, const FlowResult& result);

// Maximality certificate: the residual graph admits no augmenting path and the
// saturated source-side cut has capacity exactly equal to the flow value.
bool is_maximum_flow(const FlowNetwork& network, const FlowResult& result);

}  // namespace mmsflow
