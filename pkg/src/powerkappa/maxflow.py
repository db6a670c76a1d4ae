"""Max-flow on networks whose capacities sit on nodes, not arcs.

Every node is split internally into an entry half and an exit half joined
by an arc carrying the node capacity; user arcs run exit-to-entry with a
capacity no minimum cut can reach (callers pass the group order n, since
a cut that large is never minimal). Augmentation is by BFS shortest
augmenting path pushing the bottleneck, which is exact for integer
capacities and deterministic.
"""

from __future__ import annotations

from collections import deque

__all__ = ["NodeCapacitatedNetwork"]


class NodeCapacitatedNetwork:
    def __init__(self, inf: int):
        if inf < 1:
            raise ValueError("inf bound must be positive")
        self.inf = inf
        self._cap_of: list[int] = []  # node id -> internal capacity
        # residual arc arrays; arc i and i^1 are a forward/backward pair
        self._to: list[int] = []
        self._cap: list[int] = []
        self._adj: list[list[int]] = []  # half-node id -> arc ids

    def add_node(self, capacity: int | None = None) -> int:
        """New node; capacity None means uncuttable (source/sink endpoints)."""
        cap = self.inf if capacity is None else capacity
        if cap < 0:
            raise ValueError("node capacity must be >= 0")
        node = len(self._cap_of)
        self._cap_of.append(cap)
        self._adj.append([])  # entry half 2*node
        self._adj.append([])  # exit half 2*node + 1
        self._add_arc_raw(2 * node, 2 * node + 1, cap)
        return node

    def add_arc(self, u: int, v: int) -> None:
        """Directed arc u -> v with unbounded capacity."""
        self._add_arc_raw(2 * u + 1, 2 * v, self.inf)

    def _add_arc_raw(self, a: int, b: int, cap: int) -> None:
        self._adj[a].append(len(self._to))
        self._to.append(b)
        self._cap.append(cap)
        self._adj[b].append(len(self._to))
        self._to.append(a)
        self._cap.append(0)

    def max_flow(self, source: int, sink: int) -> int:
        """Total flow from source to sink; mutates residual capacities."""
        s, t = 2 * source + 1, 2 * sink
        to, cap, adj = self._to, self._cap, self._adj
        total = 0
        while True:
            parent_arc = {s: -1}
            queue = deque([s])
            while queue and t not in parent_arc:
                u = queue.popleft()
                for e in adj[u]:
                    v = to[e]
                    if cap[e] > 0 and v not in parent_arc:
                        parent_arc[v] = e
                        queue.append(v)
            if t not in parent_arc:
                return total
            bottleneck = self.inf
            v = t
            while v != s:
                e = parent_arc[v]
                bottleneck = min(bottleneck, cap[e])
                v = to[e ^ 1]
            v = t
            while v != s:
                e = parent_arc[v]
                cap[e] -= bottleneck
                cap[e ^ 1] += bottleneck
                v = to[e ^ 1]
            total += bottleneck

    def min_cut_nodes(self, source: int) -> list[int]:
        """Nodes whose internal arc crosses the minimum cut, after max_flow.

        A node is cut when its entry half is residually reachable from the
        source but its exit half is not.
        """
        s = 2 * source + 1
        to, cap, adj = self._to, self._cap, self._adj
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in adj[u]:
                v = to[e]
                if cap[e] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return [
            node
            for node in range(len(self._cap_of))
            if 2 * node in seen and 2 * node + 1 not in seen
        ]
