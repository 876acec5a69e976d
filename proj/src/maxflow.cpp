#include "mmsflow/maxflow.hpp"

#include <algorithm>
#include <limits>

namespace mmsflow {

FlowNetwork::FlowNetwork(int node_count, int source, int sink)
    : node_count(node_count), source(source), sink(sink) {
    if (node_count < 2) {
        throw ValidationError("flow network needs at least two nodes");
    }
    if (source < 0 || source >= node_count || sink < 0 || sink >= node_count) {
        throw ValidationError("source or sink node id out of range");
    }
    if (source == sink) {
        throw ValidationError("source and sink must be distinct nodes");
    }
}

void FlowNetwork::add_edge(int from, int to, long long capacity) {
    if (from < 0 || from >= node_count || to < 0 || to >= node_count) {
        throw ValidationError("edge endpoint out of range");
    }
    if (from == to) {
        throw ValidationError("self-loops are not allowed");
    }
    if (capacity <= 0) {
        throw ValidationError("edge capacity must be a positive integer");
    }
    edges.push_back({from, to, capacity});
}

namespace {

// Residual edges come in pairs: 2i is input edge i, 2i+1 its reverse. The
// residual capacity of the reverse edge is exactly the flow pushed through
// the forward one.
struct Residual {
    std::vector<int> head;
    std::vector<long long> cap;
    std::vector<std::vector<int>> adj;

    explicit Residual(const FlowNetwork& net) : adj(net.node_count) {
        head.reserve(net.edges.size() * 2);
        cap.reserve(net.edges.size() * 2);
        for (const FlowEdge& e : net.edges) {
            adj[e.from].push_back(static_cast<int>(head.size()));
            head.push_back(e.to);
            cap.push_back(e.capacity);
            adj[e.to].push_back(static_cast<int>(head.size()));
            head.push_back(e.from);
            cap.push_back(0);
        }
    }
};

}  // namespace

FlowResult max_flow(const FlowNetwork& network) {
    Residual res(network);
    const int n = network.node_count;
    std::vector<int> level(n);
    std::vector<int> next_arc(n);
    std::vector<int> queue(n);

    auto build_levels = [&]() {
        std::fill(level.begin(), level.end(), -1);
        int head = 0, tail = 0;
        queue[tail++] = network.source;
        level[network.source] = 0;
        while (head < tail) {
            const int v = queue[head++];
            for (int id : res.adj[v]) {
                if (res.cap[id] > 0 && level[res.head[id]] < 0) {
                    level[res.head[id]] = level[v] + 1;
                    queue[tail++] = res.head[id];
                }
            }
        }
        return level[network.sink] >= 0;
    };

    // Current-arc DFS along the level graph; adjacency order is insertion
    // order, which keeps the whole solve deterministic.
    auto augment = [&](auto&& self, int v, long long limit) -> long long {
        if (v == network.sink) {
            return limit;
        }
        for (int& i = next_arc[v]; i < static_cast<int>(res.adj[v].size()); ++i) {
            const int id = res.adj[v][i];
            const int to = res.head[id];
            if (res.cap[id] <= 0 || level[to] != level[v] + 1) {
                continue;
            }
            const long long pushed = self(self, to, std::min(limit, res.cap[id]));
            if (pushed > 0) {
                res.cap[id] -= pushed;
                res.cap[id ^ 1] += pushed;
                return pushed;
            }
        }
        return 0;
    };

    long long total = 0;
    while (build_levels()) {
        std::fill(next_arc.begin(), next_arc.end(), 0);
        while (long long pushed =
                   augment(augment, network.source, std::numeric_limits<long long>::max())) {
            total += pushed;
        }
    }

    FlowResult result;
    result.value = total;
    result.edge_flows.resize(network.edges.size());
    for (std::size_t i = 0; i < network.edges.size(); ++i) {
        result.edge_flows[i] = res.cap[2 * i + 1];
    }
    return result;
}

namespace {

void require_aligned(const FlowNetwork& network, const FlowResult& result) {
    if (result.edge_flows.size() != network.edges.size()) {
        throw ValidationError("flow result does not belong to this network");
    }
}

}  // namespace

long long node_outflow(const FlowResult& result, const FlowNetwork& network, int node) {
    require_aligned(network, result);
    if (node < 0 || node >= network.node_count) {
        throw ValidationError("node id out of range");
    }
    long long total = 0;
    for (std::size_t i = 0; i < network.edges.size(); ++i) {
        if (network.edges[i].from == node) {
            total += result.edge_flows[i];
        }
    }
    return total;
}

bool is_feasible_flow(const FlowNetwork& network, const FlowResult& result) {
    require_aligned(network, result);
    std::vector<long long> net_in(network.node_count, 0);
    for (std::size_t i = 0; i < network.edges.size(); ++i) {
        const long long f = result.edge_flows[i];
        if (f < 0 || f > network.edges[i].capacity) {
            return false;
        }
        net_in[network.edges[i].to] += f;
        net_in[network.edges[i].from] -= f;
    }
    for (int v = 0; v < network.node_count; ++v) {
        if (v != network.source && v != network.sink && net_in[v] != 0) {
            return false;
        }
    }
    return net_in[network.sink] == result.value && net_in[network.source] == -result.value;
}

bool is_maximum_flow(const FlowNetwork& network, const FlowResult& result) {
    if (!is_feasible_flow(network, result)) {
        return false;
    }
    // Nodes reachable from the source in the residual graph.
    std::vector<char> reachable(network.node_count, 0);
    std::vector<int> stack = {network.source};
    reachable[network.source] = 1;
    auto visit = [&](int v) {
        if (!reachable[v]) {
            reachable[v] = 1;
            stack.push_back(v);
        }
    };
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < network.edges.size(); ++i) {
            const FlowEdge& e = network.edges[i];
            if (e.from == v && result.edge_flows[i] < e.capacity) {
                visit(e.to);
            }
            if (e.to == v && result.edge_flows[i] > 0) {
                visit(e.from);
            }
        }
    }
    if (reachable[network.sink]) {
        return false;
    }
    // The cut between reachable and unreachable nodes must be saturated and
    // its capacity must equal the flow value.
    long long cut_capacity = 0;
    for (const FlowEdge& e : network.edges) {
        if (reachable[e.from] && !reachable[e.to]) {
            cut_capacity += e.capacity;
        }
    }
    return cut_capacity == result.value;
}

}  // namespace mmsflow
