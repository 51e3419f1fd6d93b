"""Stable graphs of M_{g,n}-bar and their spin weightings modulo s."""

from collections.abc import Iterator

from pydantic import BaseModel, ConfigDict, Field

Edge = tuple[int, int]


class StableGraph(BaseModel):
    """A dual graph of a stable curve.

    Edge ``e`` has two half-edges: ``h`` sits at ``edges[e][0]`` and ``h'`` at ``edges[e][1]``.
    A self-loop has both half-edges at the same vertex.

    Attributes:
        genera (tuple[int, ...]): Genus of every vertex.
        legs (tuple[int, ...]): Vertex carrying the marking ``i + 1``.
        edges (tuple[Edge, ...]): Vertex pairs with ``u <= v``, sorted.
        automorphisms (int): Order of the automorphism group acting on half-edges, legs fixed.
    """

    model_config = ConfigDict(frozen=True)

    genera: tuple[int, ...]
    legs: tuple[int, ...]
    edges: tuple[Edge, ...] = Field(default=())
    automorphisms: int = Field(default=1, ge=1)

    @property
    def vertex_count(self) -> int:
        """Number of vertices."""
        return len(self.genera)

    @property
    def edge_count(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @property
    def n(self) -> int:
        """Number of legs."""
        return len(self.legs)

    @property
    def h1(self) -> int:
        """First Betti number ``|E| - |V| + 1``."""
        return self.edge_count - self.vertex_count + 1

    @property
    def genus(self) -> int:
        """Arithmetic genus ``sum g(v) + h1``."""
        return sum(self.genera) + self.h1

    def valence(self, v: int) -> int:
        """Number of legs and half-edges at ``v``."""
        return self.legs.count(v) + sum((a == v) + (b == v) for a, b in self.edges)

    def dimension(self, v: int) -> int:
        """``3g(v) - 3 + n(v)``."""
        return 3 * self.genera[v] - 3 + self.valence(v)

    def is_stable(self) -> bool:
        """Whether ``2g(v) - 2 + n(v) > 0`` at every vertex."""
        return all(2 * gv - 2 + self.valence(v) > 0 for v, gv in enumerate(self.genera))

    def half_edges(self) -> Iterator[tuple[int, int, int]]:
        """``(edge, end, vertex)`` for every half-edge, ``end`` 0 for ``h`` and 1 for ``h'``."""
        for e, (a, b) in enumerate(self.edges):
            yield e, 0, a
            yield e, 1, b

    def describe(self) -> str:
        """Compact text such as ``[1|0] legs=(0,) edges=((0, 1),)``."""
        genera = "|".join(str(gv) for gv in self.genera)
        return f"[{genera}] legs={self.legs} edges={self.edges} |Aut|={self.automorphisms}"


class SpinWeighting(BaseModel):
    """Residues modulo ``s`` on the half-edges and legs of a stable graph.

    Attributes:
        s (int): The modulus, half of ``r``.
        edges (tuple[Edge, ...]): ``(w(h), w(h'))`` for every edge.
        leaves (tuple[int, ...]): ``w`` on the legs, equal to the leaf residues ``a_i``.
    """

    model_config = ConfigDict(frozen=True)

    s: int = Field(..., gt=0)
    edges: tuple[Edge, ...] = Field(default=())
    leaves: tuple[int, ...] = Field(default=())

    def satisfies(self, graph: StableGraph) -> bool:
        """Check the vertex, edge and leaf congruences on ``graph``."""
        s = self.s
        if len(self.edges) != graph.edge_count or len(self.leaves) != graph.n:
            return False
        if any((w + w_prime + 1) % s for w, w_prime in self.edges):
            return False
        totals = [0] * graph.vertex_count
        for i, v in enumerate(graph.legs):
            totals[v] += self.leaves[i]
        for e, end, v in graph.half_edges():
            totals[v] += self.edges[e][end]
        return all((total - gv + 1) % s == 0 for total, gv in zip(totals, graph.genera))
