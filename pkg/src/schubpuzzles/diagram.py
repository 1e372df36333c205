"""Scattering diagrams: the dual-graph form of puzzles.

A diagram is a planar acyclic network of coloured strands built bottom-up
on a "frontier" of live edges: blue input stubs enter from the south,
trivalent vertices split each blue strand into a green one (exiting
northwest) and a red one (exiting northeast or bouncing off the east
wall), and crossings carry R-matrices whose argument is the difference of
the two lower spectral parameters.  Evaluating the diagram contracts the
vertex matrices in construction order; enumerating its labelings lists
the puzzles themselves, each with its fugacity (the product of the chosen
matrix entries).

Three families are built here:

* the full triangle of size n -- products of two Schubert classes pulled
  back to a two-step flag manifold (equivariant puzzle rule);
* the half triangle of size 2n -- restriction from Gr(k,2n) to the
  symplectic Grassmannian, one red bounce per strand at the east wall;
* wiring diagrams of reduced words -- fixed-point restrictions, with a
  same-colour crossing per simple transposition and a blue bounce for the
  sign generator.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .labels import Label, LabelString
from .poly import Polynomial, y
from .tensor import SparseMap, k_blue, k_red, r_red_green, r_same_colour, u_split


@dataclass(frozen=True)
class Edge:
    ident: int
    colour: str  # "G", "R" or "B"
    parameter: Polynomial


@dataclass(frozen=True)
class Vertex:
    kind: str  # "crossing", "bounce" or "trivalent"
    matrix: SparseMap
    in_edges: tuple[int, ...]
    out_edges: tuple[int, ...]
    label: str


@dataclass
class ScatteringDiagram:
    name: str
    edges: list[Edge]
    vertices: list[Vertex]  # topological order: inputs of each vertex exist before it
    input_edges: tuple[int, ...]
    output_edges: tuple[int, ...]
    _transfer_cache: dict = field(default_factory=dict, repr=False)

    @property
    def n_inputs(self) -> int:
        return len(self.input_edges)

    @property
    def n_outputs(self) -> int:
        return len(self.output_edges)

    def input_parameters(self) -> list[Polynomial]:
        return [self.edges[e].parameter for e in self.input_edges]

    def output_parameters(self) -> list[Polynomial]:
        return [self.edges[e].parameter for e in self.output_edges]


class _Builder:
    """Grows a diagram upward, one vertex at a time, on a frontier of edges."""

    def __init__(self, name: str):
        self.name = name
        self.edges: list[Edge] = []
        self.vertices: list[Vertex] = []
        self.frontier: list[int] = []
        self.inputs: list[int] = []

    def _new_edge(self, colour: str, parameter: Polynomial) -> int:
        ident = len(self.edges)
        self.edges.append(Edge(ident, colour, parameter))
        return ident

    def add_input(self, colour: str, parameter: Polynomial) -> int:
        e = self._new_edge(colour, parameter)
        self.frontier.append(e)
        self.inputs.append(e)
        return e

    def split(self, pos: int) -> tuple[int, int]:
        """Trivalent vertex at frontier position pos: blue -> green, red."""
        e_in = self.edges[self.frontier[pos]]
        assert e_in.colour == "B"
        green = self._new_edge("G", e_in.parameter)
        red = self._new_edge("R", e_in.parameter)
        self.vertices.append(
            Vertex("trivalent", u_split(), (e_in.ident,), (green, red), f"U({e_in.parameter})")
        )
        self.frontier[pos : pos + 1] = [green, red]
        return green, red

    def cross(self, pos: int) -> tuple[int, int]:
        """Crossing of frontier positions pos, pos+1; left strand exits right."""
        left = self.edges[self.frontier[pos]]
        right = self.edges[self.frontier[pos + 1]]
        argument = left.parameter - right.parameter
        if left.colour == right.colour:
            matrix = r_same_colour(argument)
            tag = f"R_{left.colour}{left.colour}({argument})"
        elif (left.colour, right.colour) == ("R", "G"):
            matrix = r_red_green(argument)
            tag = f"R_RG({argument})"
        else:
            raise ValueError(f"unsupported crossing colours {left.colour}{right.colour}")
        new_left = self._new_edge(right.colour, right.parameter)
        new_right = self._new_edge(left.colour, left.parameter)
        self.vertices.append(
            Vertex("crossing", matrix, (left.ident, right.ident), (new_left, new_right), tag)
        )
        self.frontier[pos : pos + 2] = [new_left, new_right]
        return new_left, new_right

    def bounce(self, pos: int) -> int:
        """Wall bounce at frontier position pos; negates the parameter."""
        e_in = self.edges[self.frontier[pos]]
        if e_in.colour == "R":
            matrix, out_colour, tag = k_red(e_in.parameter), "G", f"K_R({e_in.parameter})"
        elif e_in.colour == "B":
            matrix, out_colour, tag = k_blue(e_in.parameter), "B", f"K_B({e_in.parameter})"
        else:
            raise ValueError("only red and blue strands bounce")
        out = self._new_edge(out_colour, -e_in.parameter)
        self.vertices.append(Vertex("bounce", matrix, (e_in.ident,), (out,), tag))
        self.frontier[pos] = out
        return out

    def position_of(self, edge: int) -> int:
        return self.frontier.index(edge)

    def finish(self) -> ScatteringDiagram:
        return ScatteringDiagram(
            self.name,
            self.edges,
            self.vertices,
            tuple(self.inputs),
            tuple(self.frontier),
        )


def build_triangle_diagram(n: int) -> ScatteringDiagram:
    """The size-n triangle: n blue inputs y_1..y_n, a trivalent split on
    each, and a red-green crossing R_RG(y_i - y_j) for every pair i < j.

    Output edges, in frontier order, are the n greens (northwest side read
    bottom to top) followed by the n reds (northeast side read top to
    bottom)."""
    if n < 1:
        raise ValueError("triangle size must be at least 1")
    b = _Builder(f"triangle({n})")
    for i in range(1, n + 1):
        b.add_input("B", y(i))
    greens: dict[int, int] = {}
    reds: dict[int, int] = {}
    for i in range(1, n + 1):
        greens[i], reds[i] = b.split(2 * (i - 1))
    # red i must pass green j for every i < j; sweep by height j - i
    for h in range(1, n):
        for i in range(1, n - h + 1):
            j = i + h
            pos = b.position_of(reds[i])
            assert b.frontier[pos + 1] == greens[j]
            greens[j], reds[i] = b.cross(pos)
    diagram = b.finish()
    expected = [greens[j] for j in range(1, n + 1)] + [reds[i] for i in range(1, n + 1)]
    assert list(diagram.output_edges) == expected
    return diagram


def build_half_diagram(n: int) -> ScatteringDiagram:
    """Left half of a size-2n self-dual triangle.

    Same as the triangle up to the east wall: red strand i crosses the
    direct greens j > i with argument y_i - y_j, bounces into a green with
    parameter -y_i, and on the way out is crossed by every red j < i with
    argument y_j + y_i.  The 2n output greens carry, bottom to top, the
    parameters y_1, .., y_n, -y_n, .., -y_1."""
    if n < 1:
        raise ValueError("half-diagram size must be at least 1")
    b = _Builder(f"half({n})")
    for i in range(1, n + 1):
        b.add_input("B", y(i))
    greens: dict[int, int] = {}
    reds: dict[int, int] = {}
    for i in range(1, n + 1):
        greens[i], reds[i] = b.split(2 * (i - 1))
    for h in range(1, n):
        for i in range(1, n - h + 1):
            j = i + h
            pos = b.position_of(reds[i])
            assert b.frontier[pos + 1] == greens[j]
            greens[j], reds[i] = b.cross(pos)
    bounced: dict[int, int] = {}
    for i in range(n, 0, -1):
        pos = b.position_of(reds[i])
        assert pos == len(b.frontier) - 1
        bounced[i] = b.bounce(pos)
        for t in range(i - 1, 0, -1):
            pos = b.position_of(bounced[i])
            assert b.frontier[pos - 1] == reds[t]
            bounced[i], reds[t] = b.cross(pos - 1)
    diagram = b.finish()
    expected = [greens[j] for j in range(1, n + 1)] + [bounced[i] for i in range(n, 0, -1)]
    assert list(diagram.output_edges) == expected
    return diagram


def build_wiring_diagram(word, group_type: str, m: int) -> ScatteringDiagram:
    """Wiring diagram of a word in simple generators on m strands.

    Strands carry y_1..y_m along the top; letters are placed top to bottom
    in word order and the diagram composes bottom to top.  Letter i < m
    (any i in type A) crosses strands i, i+1; in type C the letter m is a
    blue bounce on the last strand, negating its parameter."""
    if m < 1:
        raise ValueError("need at least one strand")
    word = tuple(word)
    for q in word:
        if group_type == "A" and not 1 <= q <= m - 1:
            raise ValueError(f"type A generator index {q} out of range 1..{m - 1}")
        if group_type == "C" and not 1 <= q <= m:
            raise ValueError(f"type C generator index {q} out of range 1..{m}")

    params: list[Polynomial] = [y(i) for i in range(1, m + 1)]
    for q in word:  # top to bottom
        if group_type == "C" and q == m:
            params[m - 1] = -params[m - 1]
        else:
            params[q - 1], params[q] = params[q], params[q - 1]

    colour = "G" if group_type == "A" else "B"
    b = _Builder(f"wiring({group_type},{m},{'.'.join(map(str, word))})")
    for p in params:
        b.add_input(colour, p)
    for q in reversed(word):  # bottom to top
        if group_type == "C" and q == m:
            b.bounce(m - 1)
        else:
            b.cross(q - 1)
    diagram = b.finish()
    assert diagram.output_parameters() == [y(i) for i in range(1, m + 1)]
    return diagram


# -- evaluation ----------------------------------------------------------

def _vertex_schedule(diagram: ScatteringDiagram):
    """Frontier position of each vertex, replayed from the construction."""
    live = list(diagram.input_edges)
    schedule = []
    for v in diagram.vertices:
        pos = live.index(v.in_edges[0])
        assert tuple(live[pos : pos + len(v.in_edges)]) == v.in_edges
        schedule.append(pos)
        live[pos : pos + len(v.in_edges)] = list(v.out_edges)
    assert tuple(live) == diagram.output_edges
    return schedule


def transfer(diagram: ScatteringDiagram, in_labels) -> dict[tuple[Label, ...], Polynomial]:
    """All output-boundary entries for a fixed input boundary, by sparse
    contraction of the vertex matrices in construction order."""
    key = tuple(in_labels)
    if len(key) != diagram.n_inputs:
        raise ValueError(
            f"input boundary has {len(key)} labels, diagram wants {diagram.n_inputs}"
        )
    cached = diagram._transfer_cache.get(key)
    if cached is not None:
        return cached
    states: dict[tuple[Label, ...], Polynomial] = {key: Polynomial.integer(1)}
    for v, pos in zip(diagram.vertices, _vertex_schedule(diagram)):
        arity = len(v.in_edges)
        by_input = v.matrix.by_input()
        new_states: dict[tuple[Label, ...], Polynomial] = {}
        for state, coeff in states.items():
            sub = state[pos : pos + arity]
            for out, weight in by_input.get(sub, ()):
                new_state = state[:pos] + out + state[pos + arity :]
                w = coeff * weight
                if new_state in new_states:
                    new_states[new_state] = new_states[new_state] + w
                else:
                    new_states[new_state] = w
        states = {s: c for s, c in new_states.items() if not c.is_zero}
    diagram._transfer_cache[key] = states
    return states


def evaluate_entry(diagram: ScatteringDiagram, out_labels, in_labels) -> Polynomial:
    """The exact (out, in) boundary matrix entry of the diagram."""
    out_key = tuple(out_labels)
    if len(out_key) != diagram.n_outputs:
        raise ValueError(
            f"output boundary has {len(out_key)} labels, diagram wants {diagram.n_outputs}"
        )
    return transfer(diagram, in_labels).get(out_key, Polynomial.zero())


# -- explicit enumeration --------------------------------------------------

@dataclass(frozen=True)
class Labeling:
    """One consistent edge labeling of a diagram (dually, one puzzle)."""

    diagram: ScatteringDiagram
    edge_labels: tuple[Label, ...]
    fugacity: Polynomial

    def boundary(self) -> tuple[LabelString, LabelString]:
        out = LabelString(self.edge_labels[e] for e in self.diagram.output_edges)
        inn = LabelString(self.edge_labels[e] for e in self.diagram.input_edges)
        return out, inn

    def vertex_weights(self) -> list[Polynomial]:
        weights = []
        for v in self.diagram.vertices:
            out = tuple(self.edge_labels[e] for e in v.out_edges)
            inn = tuple(self.edge_labels[e] for e in v.in_edges)
            weights.append(v.matrix.entry(out, inn))
        return weights

    def red_bounce_counts(self) -> tuple[int, int]:
        """(#bounces labeled 0<-1, #bounces labeled 1<-0) at the east wall."""
        n01 = n10 = 0
        for v in self.diagram.vertices:
            if v.kind != "bounce" or self.diagram.edges[v.in_edges[0]].colour != "R":
                continue
            pair = (self.edge_labels[v.out_edges[0]], self.edge_labels[v.in_edges[0]])
            if pair == (Label.ZERO, Label.ONE):
                n01 += 1
            elif pair == (Label.ONE, Label.ZERO):
                n10 += 1
        return n01, n10

    def dump(self, verbose: bool = False) -> str:
        lines = []
        for e in self.diagram.edges:
            lab = self.edge_labels[e.ident]
            text = lab.token if verbose else lab.compact
            lines.append(f"{e.ident} {e.colour} {e.parameter} {text}")
        lines.append(f"fugacity: {self.fugacity}")
        return "\n".join(lines)


def enumerate_labelings(
    diagram: ScatteringDiagram,
    out_labels=None,
    in_labels=None,
) -> list[Labeling]:
    """All edge labelings consistent with the boundary constraints and with
    every vertex weight nonzero, in lexicographic order of the label
    assignment along the construction order.  Either boundary may be None
    (free)."""
    want_out: dict[int, Label] = {}
    if out_labels is not None:
        out_key = tuple(out_labels)
        if len(out_key) != diagram.n_outputs:
            raise ValueError("output boundary length mismatch")
        want_out = dict(zip(diagram.output_edges, out_key))
    if in_labels is not None:
        in_key = tuple(in_labels)
        if len(in_key) != diagram.n_inputs:
            raise ValueError("input boundary length mismatch")
    else:
        in_key = None

    results: list[Labeling] = []
    assignment: dict[int, Label] = {}
    output_set = set(diagram.output_edges)

    def admissible(edge: int, lab: Label) -> bool:
        return edge not in output_set or edge not in want_out or want_out[edge] == lab

    def assign_inputs(idx: int):
        if idx == diagram.n_inputs:
            run_vertices(0, Polynomial.integer(1))
            return
        edge = diagram.input_edges[idx]
        if in_key is not None:
            choices = (in_key[idx],)
        else:
            choices = (Label.ZERO, Label.TEN, Label.ONE)
        for lab in choices:
            if not admissible(edge, lab):
                continue
            assignment[edge] = lab
            assign_inputs(idx + 1)
            del assignment[edge]

    def run_vertices(idx: int, fug: Polynomial):
        if idx == len(diagram.vertices):
            labels = tuple(assignment[e.ident] for e in diagram.edges)
            results.append(Labeling(diagram, labels, fug))
            return
        v = diagram.vertices[idx]
        inn = tuple(assignment[e] for e in v.in_edges)
        for out, weight in v.matrix.by_input().get(inn, ()):
            if not all(admissible(e, lab) for e, lab in zip(v.out_edges, out)):
                continue
            for e, lab in zip(v.out_edges, out):
                assignment[e] = lab
            run_vertices(idx + 1, fug * weight)
            for e in v.out_edges:
                del assignment[e]

    assign_inputs(0)
    return results


def as_sparse_map(diagram: ScatteringDiagram) -> SparseMap:
    """The diagram's full boundary-to-boundary map, entry by entry."""
    import itertools

    entries = {}
    for inn in itertools.product((Label.ZERO, Label.TEN, Label.ONE), repeat=diagram.n_inputs):
        for out, weight in transfer(diagram, inn).items():
            entries[(out, inn)] = weight
    return SparseMap(diagram.n_outputs, diagram.n_inputs, entries)
