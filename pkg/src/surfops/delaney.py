"""Delaney-Dress symbols: a finite set with three involutive generator
actions and maps m01, m02, m12.

A symbol encodes a periodic tiling together with a symmetry group; it is
Euclidean exactly when the curvature, the sum over all elements of
1/m01 + 1/m12 - 1/m02, vanishes.  Curvature arithmetic is exact rational,
never floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

_PAIRS = ((0, 1), (0, 2), (1, 2))


@dataclass(frozen=True)
class DelaneySymbol:
    """Elements 0..n-1, generator actions (involutions, fixed points allowed)
    and the three m maps."""

    action: tuple  # three tuples: action[i][c] = c * sigma_i
    m: dict  # {(0,1): tuple, (0,2): tuple, (1,2): tuple}

    def __post_init__(self):
        object.__setattr__(self, "m", {k: tuple(v) for k, v in self.m.items()})
        object.__setattr__(self, "action", tuple(tuple(a) for a in self.action))

    @property
    def size(self):
        return len(self.action[0])

    def apply(self, c, i):
        return self.action[i][c]

    def m_value(self, i, j, c):
        return self.m[(i, j)][c]

    def orbit(self, c, gens):
        """Orbit of c under a set of generator indices."""
        seen = {c}
        todo = [c]
        while todo:
            x = todo.pop()
            for i in gens:
                y = self.action[i][x]
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return frozenset(seen)

    def orbits(self, gens):
        out = []
        seen = set()
        for c in range(self.size):
            if c in seen:
                continue
            orb = self.orbit(c, gens)
            seen |= orb
            out.append(orb)
        return out


def validate_dd(sym):
    """Diagnostics for the four Delaney-Dress axioms; empty means the symbol
    encodes a Euclidean-plane tiling."""
    out = []
    n = sym.size
    if n == 0:
        return ["axiom1: empty element set"]
    for i in range(3):
        act = sym.action[i]
        if sorted(act) != list(range(n)):
            out.append("axiom0: generator %d is not a permutation" % i)
            continue
        for c in range(n):
            if act[act[c]] != c:
                out.append("axiom0: generator %d not an involution at %d" % (i, c))
    if len(sym.orbit(0, (0, 1, 2))) != n:
        out.append("axiom2: the action is not transitive")
    for (i, j) in _PAIRS:
        mv = sym.m[(i, j)]
        for orb in sym.orbits((i, j)):
            vals = {mv[c] for c in orb}
            if len(vals) != 1:
                out.append(
                    "axiom3: m%d%d not constant on orbit %s" % (i, j, sorted(orb))
                )
                continue
            val = vals.pop()
            if val <= 0:
                out.append("axiom3: m%d%d not positive on orbit" % (i, j))
                continue
            for c in orb:
                x = c
                for _ in range(val):
                    x = sym.action[j][sym.action[i][x]]
                if x != c:
                    out.append(
                        "axiom3: (s%d s%d)^%d does not fix element %d" % (i, j, val, c)
                    )
                    break
    if any(v != 2 for v in sym.m[(0, 2)]):
        out.append("axiom3: m02 must be constant 2")
    if curvature(sym) != 0:
        out.append("axiom4: curvature %s is not zero" % curvature(sym))
    return out


def curvature(sym):
    """Exact curvature: sum of 1/m01 + 1/m12 - 1/m02 over all elements."""
    total = Fraction(0)
    for c in range(sym.size):
        total += (
            Fraction(1, sym.m[(0, 1)][c])
            + Fraction(1, sym.m[(1, 2)][c])
            - Fraction(1, sym.m[(0, 2)][c])
        )
    return total


def curvature_sign(sym):
    """'euclidean', 'hyperbolic' or 'non-euclidean (possibly spherical)'."""
    c = curvature(sym)
    if c == 0:
        return "euclidean"
    if c < 0:
        return "hyperbolic"
    return "non-euclidean (possibly spherical)"


@dataclass(frozen=True)
class RotationInfo:
    pair: tuple  # (i, j)
    orbit: tuple  # sorted elements
    r: int  # minimal power of (sigma_i sigma_j) fixing the orbit
    fold: int  # f_r = m/r, or f_m = 2m/r at mirror orbits
    mirror: bool  # orbit touches a sigma-fixed element


def rotation_orders(sym):
    """Per <sigma_i, sigma_j>-orbit: r_ij, and the rotation or mirror fold."""
    out = []
    for (i, j) in _PAIRS:
        for orb in sym.orbits((i, j)):
            c0 = min(orb)
            r = 0
            x = c0
            while True:
                x = sym.action[j][sym.action[i][x]]
                r += 1
                if x == c0:
                    break
            m = sym.m[(i, j)][c0]
            mirror = any(
                sym.action[i][c] == c or sym.action[j][c] == c for c in orb
            )
            if (2 * m) % r:
                raise ValueError("r_%d%d=%d does not divide 2*m=%d" % (i, j, r, 2 * m))
            fold = (2 * m // r) if mirror else (m // r)
            out.append(RotationInfo((i, j), tuple(sorted(orb)), r, fold, mirror))
    return out


def is_dd_morphism(d1, d2, mapping):
    """Whether ``mapping`` commutes with all generators and preserves all m."""
    if len(mapping) != d1.size:
        return False
    for c in range(d1.size):
        f = mapping[c]
        if not 0 <= f < d2.size:
            return False
        for i in range(3):
            if mapping[d1.action[i][c]] != d2.action[i][f]:
                return False
        for pair in _PAIRS:
            if d1.m[pair][c] != d2.m[pair][f]:
                return False
    return True


# -- extraction from operations --------------------------------------------


def _v_missing(types_of_corner, i, j):
    return types_of_corner[3 - i - j]


def dd_from_lopsp(op):
    """Symbol of the tiling associated with a lopsp-operation.

    Elements are the chambers; generators cross the i-edges; m values are
    half the orbit size, scaled by 2, 3, 6 around the special vertices
    v1, v0, v2 respectively.
    """
    op.require_valid()
    cs = op.chamber_system()
    n = len(cs)
    action = tuple(cs.s)
    sym = DelaneySymbol(action, {p: [0] * n for p in _PAIRS})
    m = {p: [0] * n for p in _PAIRS}
    v0, v1, v2 = op.v0, op.v1, op.v2
    for (i, j) in _PAIRS:
        for orb in sym.orbits((i, j)):
            c0 = next(iter(orb))
            corner = cs.corner[c0][3 - i - j]
            half = len(orb) // 2
            if len(orb) % 2:
                raise ValueError("odd <s%d,s%d>-orbit in a lopsp symbol" % (i, j))
            if corner == v1:
                val = half * 2
            elif corner == v0:
                val = half * 3
            elif corner == v2:
                val = half * 6
            else:
                val = half
            for c in orb:
                m[(i, j)][c] = val
    return DelaneySymbol(action, m)


def dd_from_lsp(op):
    """Symbol of a lsp-operation: elements are the inner chambers, the
    action fixes chambers whose i-edge lies on the outer face."""
    op.require_valid()
    cs = op.chamber_system()
    n = len(cs)
    action = tuple(cs.s)
    sym = DelaneySymbol(action, {p: [0] * n for p in _PAIRS})
    m = {p: [0] * n for p in _PAIRS}
    v0, v1, v2 = op.v0, op.v1, op.v2
    outer_vertices = op.outer_vertices()
    for (i, j) in _PAIRS:
        for orb in sym.orbits((i, j)):
            c0 = next(iter(orb))
            corner = cs.corner[c0][3 - i - j]
            size = len(orb)
            if corner == v1:
                val = size * 2
            elif corner == v0:
                val = size * 3
            elif corner == v2:
                val = size * 6
            elif corner in outer_vertices:
                val = size
            else:
                if size % 2:
                    raise ValueError("odd inner-vertex orbit in a lsp symbol")
                val = size // 2
            for c in orb:
                m[(i, j)][c] = val
    return DelaneySymbol(action, m)


# -- serialization ----------------------------------------------------------


def write_dd(sym):
    """Line based text form: element count, three action rows, three m rows."""
    lines = ["dd %d" % sym.size]
    for i in range(3):
        lines.append("s%d %s" % (i, " ".join(map(str, sym.action[i]))))
    for (i, j) in _PAIRS:
        lines.append("m%d%d %s" % (i, j, " ".join(map(str, sym.m[(i, j)]))))
    return "\n".join(lines) + "\n"


def parse_dd(text):
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("dd "):
        raise ValueError("missing 'dd <n>' header")
    n = int(lines[0].split()[1])
    rows = {}
    for ln in lines[1:]:
        key, rest = ln.split(None, 1)
        rows[key] = [int(x) for x in rest.split()]
    action = []
    for i in range(3):
        row = rows.get("s%d" % i)
        if row is None or len(row) != n:
            raise ValueError("bad or missing action row s%d" % i)
        action.append(row)
    m = {}
    for (i, j) in _PAIRS:
        row = rows.get("m%d%d" % (i, j))
        if row is None or len(row) != n:
            raise ValueError("bad or missing m%d%d row" % (i, j))
        m[(i, j)] = row
    return DelaneySymbol(tuple(map(tuple, action)), m)
