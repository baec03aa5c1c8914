"""Bow diagrams and their transition calculus.

A circular diagram is a cyclic sequence of marked nodes -- crosses x_0, ...,
x_{n-1} indexed anticlockwise with x_0 distinguished, and circles carrying a
formal parameter label (sym, nu_star multiple) and indexed clockwise when a
numbering is needed -- with a nonnegative integer dimension on every segment
between consecutive nodes.  Line-shaped diagrams are the same data on an
interval, with zero dimension on both outer segments and no distinguished
cross.

Internally `nodes[k]` is followed anticlockwise by `nodes[k+1]` and `dims[k]`
is the segment between them, so a node at position k has anticlockwise-out
segment dims[k-1] and anticlockwise-in segment dims[k].  On lines, dims has
one more entry than nodes and nodes[k] sits between dims[k] and dims[k+1].

The local transition at an adjacent circle/cross pair swaps the two nodes
and replaces the middle dimension by (left + right + 1 - middle); when the
cross is x_0 the circle's parameter gains or loses one unit of the marked
symbol nu_star depending on crossing direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections import deque
from fractions import Fraction

from .weights import AffineWeight, root_difference
from .young import GYDiagram, gyd_transpose

X_KIND = "x"
O_KIND = "o"


def x_node(index: int) -> tuple:
    return (X_KIND, int(index))


def o_node(sym: int, nu_star: int = 0) -> tuple:
    return (O_KIND, int(sym), int(nu_star))


def _is_x(node) -> bool:
    return node[0] == X_KIND


@dataclass(frozen=True)
class BowDiagram:
    shape: str  # "circle" | "line"
    nodes: tuple
    dims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(tuple(nd) for nd in self.nodes))
        object.__setattr__(self, "dims", tuple(int(v) for v in self.dims))
        if self.shape not in ("circle", "line"):
            raise ValueError("shape must be 'circle' or 'line'")
        if any(v < 0 for v in self.dims):
            raise ValueError("segment dimensions must be nonnegative")
        m = len(self.nodes)
        if self.shape == "circle":
            if len(self.dims) != m or m == 0:
                raise ValueError("circle needs one segment per node")
        else:
            if len(self.dims) != m + 1:
                raise ValueError("line needs node count + 1 segments")
            if m and (self.dims[0] != 0 or self.dims[-1] != 0):
                raise ValueError("outermost segments of a line must have dimension 0")
        xs = [nd for nd in self.nodes if _is_x(nd)]
        if self.shape == "circle" and not xs:
            raise ValueError("circle diagrams need at least one cross")
        idxs = [nd[1] for nd in xs]
        if sorted(idxs) != list(range(len(xs))):
            raise ValueError("cross indices must be 0..n-1")
        if self.shape == "circle" and xs:
            # anticlockwise from x_0 the indices must read 0, 1, ..., n-1
            start = self.x_position(0)
            order = [self.nodes[(start + k) % m][1] for k in range(m) if _is_x(self.nodes[(start + k) % m])]
            if order != list(range(len(xs))):
                raise ValueError("cross indices must increase anticlockwise from x_0")
        syms = [nd[1] for nd in self.nodes if not _is_x(nd)]
        if len(set(syms)) != len(syms):
            raise ValueError("circle parameter symbols must be distinct")

    # -- structure -------------------------------------------------------

    @property
    def num_x(self) -> int:
        return sum(1 for nd in self.nodes if _is_x(nd))

    @property
    def num_o(self) -> int:
        return len(self.nodes) - self.num_x

    def x_position(self, index: int) -> int:
        for k, nd in enumerate(self.nodes):
            if _is_x(nd) and nd[1] == index:
                return k
        raise KeyError(f"no cross with index {index}")

    def seg_in(self, k: int) -> int:
        """Anticlockwise-in segment of the node at position k."""
        if self.shape == "circle":
            return self.dims[k]
        return self.dims[k + 1]

    def seg_out(self, k: int) -> int:
        if self.shape == "circle":
            return self.dims[(k - 1) % len(self.nodes)]
        return self.dims[k]

    def node_n(self, k: int) -> int:
        """N-value at position k: in-out for circles, out-in for crosses."""
        if _is_x(self.nodes[k]):
            return self.seg_out(k) - self.seg_in(k)
        return self.seg_in(k) - self.seg_out(k)

    def is_balanced(self) -> bool:
        return all(
            self.seg_in(k) == self.seg_out(k)
            for k, nd in enumerate(self.nodes)
            if not _is_x(nd)
        )

    def is_separated(self) -> bool:
        """All circles sit on the arc from x_0 to x_1 (anticlockwise)."""
        if self.shape != "circle":
            raise ValueError("separated form is defined for circle diagrams")
        m = len(self.nodes)
        p0 = self.x_position(0)
        for k in range(1, self.num_o + 1):
            if _is_x(self.nodes[(p0 + k) % m]):
                return False
        return True

    def canonical_key(self):
        if self.shape == "line":
            return ("line", self.nodes, self.dims)
        p0 = self.x_position(0)
        m = len(self.nodes)
        nodes = tuple(self.nodes[(p0 + k) % m] for k in range(m))
        dims = tuple(self.dims[(p0 + k) % m] for k in range(m))
        return ("circle", nodes, dims)

    def stripped_key(self):
        """Canonical key with nu_star multiples dropped (search identity)."""
        shape, nodes, dims = self.canonical_key()
        return (shape, tuple(nd[:2] for nd in nodes), dims)

    def __eq__(self, other):
        return isinstance(other, BowDiagram) and self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())


@dataclass(frozen=True)
class InvariantRecord:
    """Per-node N values plus the transition-invariant families."""

    n_h: tuple            # ((sym, value), ...) sorted by symbol
    n_x: tuple            # ((index, value), ...) sorted by index
    pair_h: tuple         # (((sym_a, sym_b), value), ...) consecutive circles, clockwise
    pair_x: tuple         # (((i, j), value), ...) consecutive crosses
    quad_h: int
    quad_x: int

    def invariant_part(self):
        return (self.pair_h, self.pair_x, self.quad_h, self.quad_x)


def invariants(d: BowDiagram) -> InvariantRecord:
    m = len(d.nodes)
    o_pos = [k for k in range(m) if not _is_x(d.nodes[k])]
    x_pos = [k for k in range(m) if _is_x(d.nodes[k])]

    n_h = tuple(sorted((d.nodes[k][1], d.node_n(k)) for k in o_pos))
    n_x = tuple(sorted((d.nodes[k][1], d.node_n(k)) for k in x_pos))

    def between(a: int, b: int, want_x: bool) -> int:
        # nodes strictly between positions a and b in anticlockwise order
        cnt = 0
        if d.shape == "circle":
            k = (a + 1) % m
            while k != b:
                cnt += _is_x(d.nodes[k]) == want_x
                k = (k + 1) % m
        else:
            lo, hi = min(a, b), max(a, b)
            cnt = sum(_is_x(d.nodes[k]) == want_x for k in range(lo + 1, hi))
        return cnt

    # pairs (h_s, h_{s+1}) with h_{s+1} the next circle clockwise from h_s:
    # value N_{h_s} - N_{h_{s+1}} + (# crosses between them)
    pair_h = []
    if d.shape == "circle" and len(o_pos) >= 1:
        for t in range(len(o_pos)):
            b = o_pos[t]                         # h_{s+1}
            a = o_pos[(t + 1) % len(o_pos)]      # h_s (next anticlockwise)
            val = d.node_n(a) - d.node_n(b) + between(b, a, want_x=True)
            pair_h.append(((d.nodes[a][1], d.nodes[b][1]), val))
        if len(o_pos) == 1:
            k = o_pos[0]
            pair_h = [((d.nodes[k][1], d.nodes[k][1]), d.node_n(k) - d.node_n(k) + d.num_x)]
    elif d.shape == "line":
        for a, b in zip(o_pos, o_pos[1:]):
            val = d.node_n(b) - d.node_n(a) + between(a, b, want_x=True)
            pair_h.append(((d.nodes[b][1], d.nodes[a][1]), val))
    pair_h = tuple(sorted(pair_h))

    pair_x = []
    if d.shape == "circle" and len(x_pos) >= 1:
        for t in range(len(x_pos)):
            a = x_pos[t]
            b = x_pos[(t + 1) % len(x_pos)]      # x_{i+1}, next anticlockwise
            val = d.node_n(a) - d.node_n(b) + between(a, b, want_x=False)
            pair_x.append(((d.nodes[a][1], d.nodes[b][1]), val))
        if len(x_pos) == 1:
            k = x_pos[0]
            pair_x = [((d.nodes[k][1], d.nodes[k][1]), d.num_o)]
    elif d.shape == "line":
        for a, b in zip(x_pos, x_pos[1:]):
            val = d.node_n(a) - d.node_n(b) + between(a, b, want_x=False)
            pair_x.append(((d.nodes[a][1], d.nodes[b][1]), val))
    pair_x = tuple(sorted(pair_x))

    quad_h = -sum(v * v for _, v in n_h) + sum(d.seg_in(k) + d.seg_out(k) for k in x_pos)
    quad_x = -sum(v * v for _, v in n_x) + sum(d.seg_in(k) + d.seg_out(k) for k in o_pos)
    return InvariantRecord(n_h, n_x, pair_h, pair_x, quad_h, quad_x)


# -- transitions -------------------------------------------------------


def transition_positions(d: BowDiagram) -> list[int]:
    """Middle-segment indices where an adjacent circle/cross pair sits."""
    m = len(d.nodes)
    out = []
    if d.shape == "circle":
        for k in range(m):
            if _is_x(d.nodes[k]) != _is_x(d.nodes[(k + 1) % m]):
                out.append(k)
    else:
        for k in range(1, m):
            if _is_x(d.nodes[k - 1]) != _is_x(d.nodes[k]):
                out.append(k)
    return out


def hw_new_middle(d: BowDiagram, pos: int) -> int:
    m = len(d.nodes)
    if d.shape == "circle":
        left = d.dims[(pos - 1) % m]
        right = d.dims[(pos + 1) % m]
    else:
        left = d.dims[pos - 1]
        right = d.dims[pos + 1]
    return left + right + 1 - d.dims[pos]


def hw_transition(d: BowDiagram, pos: int) -> BowDiagram:
    """Swap the circle/cross pair around segment `pos`; involutive at a fixed locus."""
    m = len(d.nodes)
    if d.shape == "circle":
        a, b = pos % m, (pos + 1) % m
    else:
        if not 1 <= pos <= m - 1:
            raise ValueError("line transitions act on interior segments only")
        a, b = pos - 1, pos
    na, nb = d.nodes[a], d.nodes[b]
    if _is_x(na) == _is_x(nb):
        raise ValueError("transition needs one circle and one cross")
    new_mid = hw_new_middle(d, pos)
    if new_mid < 0:
        raise ValueError(f"transition at segment {pos} yields negative dimension {new_mid}")
    if d.shape == "circle":
        # crossing x_0 shifts the circle's nu_star multiple: anticlockwise -1, clockwise +1
        if _is_x(nb) and nb[1] == 0:
            na = (na[0], na[1], na[2] - 1)
        elif _is_x(na) and na[1] == 0:
            nb = (nb[0], nb[1], nb[2] + 1)
    nodes = list(d.nodes)
    nodes[a], nodes[b] = nb, na
    dims = list(d.dims)
    dims[pos] = new_mid
    return BowDiagram(d.shape, tuple(nodes), tuple(dims))


# -- separated and balanced forms --------------------------------------


@dataclass(frozen=True)
class SeparatedForm:
    """Numeric data of the fully separated arrangement.

    tlambda[s-1] is the N value at the s-th circle counted clockwise from
    x_1; mu[i-1] is the N value at x_i for 1 <= i <= n-1 and mu[n-1] the one
    at x_0; v0 is the dimension of the segment leaving x_0 anticlockwise;
    params[s-1] is the (sym, nu_star) label sitting at circle slot s.
    """

    n: int
    l: int
    tlambda: tuple[int, ...]
    mu: tuple[int, ...]
    v0: int
    params: tuple

    def realize(self) -> BowDiagram:
        """Build the circle diagram with this data; raises on negative dims."""
        nodes = [x_node(0)]
        for s in range(self.l, 0, -1):
            sym, nu = self.params[s - 1]
            nodes.append(o_node(sym, nu))
        for i in range(1, self.n):
            nodes.append(x_node(i))
        dims = [self.v0]
        cur = self.v0
        for s in range(self.l, 0, -1):       # crossing circles anticlockwise: +N
            cur += self.tlambda[s - 1]
            dims.append(cur)
        for i in range(1, self.n):           # crossing crosses anticlockwise: -N
            cur -= self.mu[i - 1]
            dims.append(cur)
        closing = cur - self.mu[self.n - 1]
        if closing != self.v0:
            raise ValueError("inconsistent separated data: charge mismatch")
        dims = dims[: len(nodes)]
        if any(v < 0 for v in dims):
            raise ValueError(f"separated data needs a negative dimension: {dims}")
        return BowDiagram("circle", tuple(nodes), tuple(dims))


def separated_form(d: BowDiagram) -> SeparatedForm:
    """Move every circle clockwise onto the arc before x_1, never across x_0.

    Circles are pushed one cross at a time; at each step the first admissible
    eligible pair in position order is fired, so the procedure is
    deterministic.  Raises if some required step would need a negative
    dimension.
    """
    if d.shape != "circle":
        raise ValueError("separated form is defined for circle diagrams")
    m = len(d.nodes)
    guard = d.num_o * m * 2 + 4
    while not d.is_separated():
        guard -= 1
        if guard < 0:
            raise RuntimeError("separation did not terminate")
        eligible = []
        for k in range(m):
            na, nb = d.nodes[k], d.nodes[(k + 1) % m]
            if _is_x(na) and na[1] != 0 and not _is_x(nb):
                eligible.append(k)
        fired = False
        for k in eligible:
            if hw_new_middle(d, k) >= 0:
                d = hw_transition(d, k)
                fired = True
                break
        if not fired:
            raise ValueError("no admissible transition sequence reaches the separated form")
    n, l = d.num_x, d.num_o
    p0 = d.x_position(0)
    mu = [0] * n
    tlam = [0] * l
    params = [None] * l
    for s in range(1, l + 1):
        k = (p0 + (l + 1 - s)) % m        # circle slot s counted clockwise from x_1
        tlam[s - 1] = d.node_n(k)
        params[s - 1] = (d.nodes[k][1], d.nodes[k][2])
    for i in range(n):
        k = d.x_position(i)
        mu[i - 1 if i else n - 1] = d.node_n(k)
    return SeparatedForm(n, l, tuple(tlam), tuple(mu), d.dims[p0], tuple(params))


def rotate_base(sf: SeparatedForm) -> SeparatedForm:
    """Carry the circle nearest x_1 once around the circle, across x_0."""
    if sf.l < 1:
        raise ValueError("rotation needs at least one circle")
    t1 = sf.tlambda[0]
    v0 = sf.v0 - t1 + sf.n
    if v0 < 0:
        raise ValueError(f"rotation not realizable: new base dimension {v0} < 0")
    tl = sf.tlambda[1:] + (t1 - sf.n,)
    mu = tuple(x - 1 for x in sf.mu)
    sym, nu = sf.params[0]
    params = sf.params[1:] + ((sym, nu - 1),)
    return SeparatedForm(sf.n, sf.l, tl, mu, v0, params)


def weights_of(d: BowDiagram) -> tuple[AffineWeight, AffineWeight]:
    """The dominant weight and the weight named by the diagram."""
    sf = separated_form(d)
    if sf.l < 1:
        raise ValueError("weight dictionary needs at least one circle")
    tgy = GYDiagram(sf.l, sf.n, sf.tlambda)
    lam_prof = gyd_transpose(tgy).entries
    lam = AffineWeight(sf.n, sf.l, lam_prof)
    mu = AffineWeight(sf.n, sf.l, sf.mu, Fraction(-sf.v0))
    return lam, mu


def balanced_form(lam: AffineWeight, mu: AffineWeight) -> BowDiagram:
    """The unique balanced circle diagram naming the pair (lam, mu)."""
    if not lam.is_dominant():
        raise ValueError("first weight must be dominant")
    if lam.delta != 0:
        raise ValueError("dominant weight must have delta coefficient 0")
    if lam.profile[-1] != 0:
        # the diagram carries only the sl-class, and the dictionary reads the
        # pair back with this normalization; reject rather than shift silently
        raise ValueError("dominant profile must be charge-normalized (last entry 0)")
    if lam.level < 1:
        raise ValueError("level must be >= 1")
    n, l = lam.n, lam.level
    rv = root_difference(lam, mu)
    if not rv.is_nonnegative():
        raise ValueError("weight gap must lie in the positive root cone")
    v = rv.coeffs
    w = [0] * n
    for i in range(1, n):
        w[i] = lam.profile[i - 1] - lam.profile[i]
    w[0] = l - lam.profile[0] + lam.profile[-1]
    if any(x < 0 for x in w) or sum(w) != l:
        raise ValueError("profile is not dominant for this level")
    nodes = []
    dims = []
    sym = l
    for i in range(n):
        nodes.append(x_node(i))
        dims.append(v[i])
        for _ in range(w[i]):
            nodes.append(o_node(sym))
            dims.append(v[i])
            sym -= 1
    return BowDiagram("circle", tuple(nodes), tuple(dims))


def hw_reachable_balanced(d: BowDiagram, dim_bound: int) -> list[BowDiagram]:
    """Breadth-first search of the transition class with dims <= dim_bound.

    Returns every balanced diagram encountered, in canonical-serialization
    order.  Visited states are keyed with nu_star multiples stripped so the
    winding bookkeeping cannot make the search spin.
    """
    if d.shape != "circle":
        raise ValueError("search is defined for circle diagrams")
    if any(v > dim_bound for v in d.dims):
        raise ValueError("start diagram exceeds the dimension bound")
    seen = {d.stripped_key()}
    queue = deque([d])
    found = []
    while queue:
        cur = queue.popleft()
        if cur.is_balanced():
            found.append(cur)
        for k in transition_positions(cur):
            if not 0 <= hw_new_middle(cur, k) <= dim_bound:
                continue
            nxt = hw_transition(cur, k)
            key = nxt.stripped_key()
            if key not in seen:
                seen.add(key)
                queue.append(nxt)
    found.sort(key=lambda b: b.canonical_key())
    return found


# -- serialization -----------------------------------------------------


def bow_to_json(d: BowDiagram) -> dict:
    nodes = []
    params = []
    base = None
    for k, nd in enumerate(d.nodes):
        if _is_x(nd):
            nodes.append({"kind": "x"})
            if nd[1] == 0:
                base = k
        else:
            nodes.append({"kind": "o"})
            params.append({"sym": nd[1], "nu_star": nd[2]})
    out = {"shape": d.shape, "nodes": nodes, "dims": list(d.dims), "params": params}
    if d.shape == "circle":
        out["base"] = base
    return out


def bow_from_json(j: dict) -> BowDiagram:
    shape = j["shape"]
    kinds = [nd["kind"] for nd in j["nodes"]]
    params = list(j.get("params", []))
    if len(params) != sum(1 for k in kinds if k == "o"):
        raise ValueError("params must list one entry per circle node")
    m = len(kinds)
    base = j.get("base", None)
    if shape == "circle":
        if base is None:
            base = next((k for k, kk in enumerate(kinds) if kk == "x"), None)
        if base is None or kinds[base] != "x":
            raise ValueError("circle JSON needs a cross at the base position")
    nodes = []
    xi = 0
    oi = 0
    order = range(m)
    x_index_of = {}
    if shape == "circle":
        # crosses are numbered anticlockwise starting from the base
        for k in range(m):
            p = (base + k) % m
            if kinds[p] == "x":
                x_index_of[p] = xi
                xi += 1
    for k in order:
        if kinds[k] == "x":
            nodes.append(x_node(x_index_of[k] if shape == "circle" else xi))
            if shape != "circle":
                xi += 1
        else:
            p = params[oi]
            nodes.append(o_node(int(p["sym"]), int(p.get("nu_star", 0))))
            oi += 1
    return BowDiagram(shape, tuple(nodes), tuple(j["dims"]))


def separated_to_json(sf: SeparatedForm) -> dict:
    return {
        "n": sf.n,
        "l": sf.l,
        "tlambda": list(sf.tlambda),
        "mu": list(sf.mu),
        "v0": sf.v0,
        "params": [{"sym": s, "nu_star": nu} for s, nu in sf.params],
    }


def separated_from_json(j: dict) -> SeparatedForm:
    return SeparatedForm(
        int(j["n"]),
        int(j["l"]),
        tuple(j["tlambda"]),
        tuple(j["mu"]),
        int(j["v0"]),
        tuple((int(p["sym"]), int(p.get("nu_star", 0))) for p in j["params"]),
    )
