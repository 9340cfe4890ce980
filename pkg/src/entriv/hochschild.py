"""Hochschild homology of graded square-zero extensions R[x]/x^2, |x| = -n.

Two independent code paths: the normalized cyclic bar complex (the oracle,
works for any finite graded-commutative algebra) and the small 2-periodic
resolution over the tensor square, with generators y = x(x)1 and z = 1(x)x.
The periodic differentials: for even n the steps alternate y-z and y+z; for
odd n the element y-z squares to zero in the Koszul-signed tensor square and
is used at every step (the alternating choice is not even a complex there).
The right action of a tensor u(x)v on a is (-1)^(|v||a|) u*a*v; this is the
single sign convention the resolution path depends on.

Internal degrees: a bar word a_0 (x) ... (x) a_s sits in the sum of its
degrees; the resolution generator in homological degree s sits in -n*s.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .core_algebra import (ChainComplex, GradedAbelianGroup, IntMatrix, homology,
                           rank_mod_p, rank_z, ring_prime)

BAR_BASIS_CAP = 200_000


@dataclass(frozen=True)
class GradedUnitalAlgebra:
    ring: str  # "Z", "Q" or "F<p>"
    basis: tuple  # names
    degrees: tuple
    unit: int  # index of the unit basis element
    mult: tuple  # mult[i][j] = tuple of (index, coefficient)

    def __post_init__(self):
        ring_prime(self.ring)  # validates the label
        dim = len(self.basis)
        if len(self.degrees) != dim or len(self.mult) != dim:
            raise ValueError("basis/degree/table sizes disagree")
        if self.degrees[self.unit] != 0:
            raise ValueError("unit must sit in degree 0")
        for i in range(dim):
            if len(self.mult[i]) != dim:
                raise ValueError("multiplication table is not square")
            for j in range(dim):
                for k, c in self.mult[i][j]:
                    if self.degrees[k] != self.degrees[i] + self.degrees[j]:
                        raise ValueError("multiplication is not graded")
            if (self._vec(self.mult[self.unit][i]) != self._unit_vec(i)
                    or self._vec(self.mult[i][self.unit]) != self._unit_vec(i)):
                raise ValueError("unit axiom fails")
        for i in range(dim):
            for j in range(dim):
                for k in range(dim):
                    if self._assoc_defect(i, j, k):
                        raise ValueError(f"associativity fails at ({i},{j},{k})")
                sign = -1 if (self.degrees[i] * self.degrees[j]) % 2 else 1
                lhs = self._vec(self.mult[i][j])
                rhs = {t: sign * c for t, c in self._vec(self.mult[j][i]).items()}
                if self._normalize(lhs) != self._normalize(rhs):
                    raise ValueError(f"graded commutativity fails at ({i},{j})")

    def _unit_vec(self, i):
        return self._normalize({i: 1})

    def _vec(self, terms):
        out: dict[int, object] = {}
        for k, c in terms:
            out[k] = out.get(k, 0) + c
        return self._normalize(out)

    def _normalize(self, vec):
        p = ring_prime(self.ring)
        out = {}
        for k, c in vec.items():
            if p is not None:
                c = c % p
            if c:
                out[k] = c
        return out

    def _assoc_defect(self, i, j, k):
        lhs: dict[int, object] = {}
        for t, c in self.mult[i][j]:
            for u, d in self.mult[t][k]:
                lhs[u] = lhs.get(u, 0) + c * d
        rhs: dict[int, object] = {}
        for t, c in self.mult[j][k]:
            for u, d in self.mult[i][t]:
                rhs[u] = rhs.get(u, 0) + c * d
        return self._normalize(lhs) != self._normalize(rhs)

    @property
    def dim(self):
        return len(self.basis)

    def mult_entry(self, i: int, j: int) -> tuple:
        """Product of basis elements i, j as (index, coeff) terms, normalized."""
        return tuple(sorted(self._vec(self.mult[i][j]).items()))

    def multiply(self, vec_a: dict, vec_b: dict) -> dict:
        out: dict[int, object] = {}
        for i, c in vec_a.items():
            for j, d in vec_b.items():
                for k, e in self.mult[i][j]:
                    out[k] = out.get(k, 0) + c * d * e
        return self._normalize(out)

    @staticmethod
    def square_zero(ring: str, n: int) -> "GradedUnitalAlgebra":
        """R[x]/x^2 with |x| = -n."""
        if n < 1:
            raise ValueError("n must be >= 1")
        return GradedUnitalAlgebra(
            ring, ("1", "x"), (0, -n), 0,
            ((((0, 1),), ((1, 1),)), (((1, 1),), ())))

    @staticmethod
    def base_ring(ring: str) -> "GradedUnitalAlgebra":
        return GradedUnitalAlgebra(ring, ("1",), (0,), 0, ((((0, 1),),),))

    def tensor_square(self) -> "GradedUnitalAlgebra":
        """A (x) A with the Koszul multiplication (a(x)b)(c(x)d) =
        (-1)^(|b||c|) ac (x) bd."""
        dim = self.dim
        names = tuple(f"{self.basis[i]}(x){self.basis[j]}"
                      for i in range(dim) for j in range(dim))
        degrees = tuple(self.degrees[i] + self.degrees[j]
                        for i in range(dim) for j in range(dim))
        unit = self.unit * dim + self.unit
        table = []
        for i in range(dim):
            for j in range(dim):
                row = []
                for k in range(dim):
                    for l in range(dim):
                        sign = -1 if (self.degrees[j] * self.degrees[k]) % 2 else 1
                        terms: dict[int, object] = {}
                        for u, c in self.mult[i][k]:
                            for v, d in self.mult[j][l]:
                                idx = u * dim + v
                                terms[idx] = terms.get(idx, 0) + sign * c * d
                        row.append(tuple(sorted(
                            (idx, c) for idx, c in terms.items() if c)))
                table.append(tuple(row))
        return GradedUnitalAlgebra(self.ring, names, degrees, unit, tuple(table))


# ---------------------------------------------------------------------------
# bigraded output


@dataclass(frozen=True)
class BigradedGroup:
    entries: tuple  # sorted (((s, t), (free, torsion)), ...)

    @staticmethod
    def create(data: dict) -> "BigradedGroup":
        out = []
        for (s, t), (free, torsion) in data.items():
            if free or torsion:
                out.append(((s, t), (free, tuple(torsion))))
        return BigradedGroup(tuple(sorted(out)))

    def group_at(self, s: int, t: int):
        for (ss, tt), val in self.entries:
            if (ss, tt) == (s, t):
                return val
        return (0, ())

    def restrict(self, smax: int) -> "BigradedGroup":
        return BigradedGroup(tuple(e for e in self.entries if e[0][0] <= smax))

    def to_json(self):
        return {f"{s},{t}": {"free": free, "torsion": list(torsion)}
                for (s, t), (free, torsion) in self.entries}

    @staticmethod
    def from_json(data) -> "BigradedGroup":
        out = {}
        for key, val in data.items():
            s, t = (int(part) for part in key.split(","))
            out[(s, t)] = (val["free"], tuple(val["torsion"]))
        return BigradedGroup.create(out)


def _homology_of_columns(ring: str, ranks: dict, mats: dict, smax: int) -> dict:
    """Homology of a complex of (possibly Fraction-entried) matrices indexed by
    homological degree s; returns {s: (free, torsion)} for 0 <= s <= smax."""
    p = ring_prime(ring)
    out = {}

    def as_int_matrix(rows, ncols, nrows):
        if rows is None:
            return IntMatrix.zero(nrows, ncols)
        scale = 1
        for row in rows:
            for e in row:
                if isinstance(e, Fraction):
                    scale = scale * e.denominator // gcd(scale, e.denominator)
        ints = [[int(e * scale) if isinstance(e, Fraction) else int(e) * scale
                 for e in row] for row in rows]
        return IntMatrix.from_rows(ints) if ints else IntMatrix.zero(nrows, ncols)

    if ring == "Z":
        cx = ChainComplex.create(dict(ranks), {s: m for s, m in mats.items() if m})
        h = homology(cx, "Z")
        for s in range(0, smax + 1):
            if ranks.get(s, 0):
                out[s] = h.component(s)
        return out

    for s in range(0, smax + 1):
        dim = ranks.get(s, 0)
        if dim == 0:
            continue
        d_out = as_int_matrix(mats.get(s), dim, ranks.get(s - 1, 0))
        d_in = as_int_matrix(mats.get(s + 1), ranks.get(s + 1, 0), dim)
        if p is None:  # Q
            free = dim - rank_z(d_out) - rank_z(d_in)
        else:
            free = dim - rank_mod_p(d_out, p) - rank_mod_p(d_in, p)
        out[s] = (free, ())
    return out


# ---------------------------------------------------------------------------
# path one: the normalized bar complex


def bar_hochschild(algebra: GradedUnitalAlgebra, smax: int,
                   cap: int = BAR_BASIS_CAP) -> BigradedGroup:
    """Homology of the normalized cyclic bar complex A (x) Abar^(x)s."""
    if smax < 0:
        raise ValueError("smax must be >= 0")
    reduced = [i for i in range(algebra.dim) if i != algebra.unit]
    if reduced and len(reduced) ** (smax + 1) > cap:
        raise ValueError("bar basis would exceed the configured cap")

    def basis(s):
        words = [()]
        for _ in range(s):
            words = [w + (i,) for w in words for i in reduced]
        return [(a0,) + w for a0 in range(algebra.dim) for w in words]

    bases = {s: basis(s) for s in range(smax + 2)}
    degrees = {s: [sum(algebra.degrees[i] for i in word) for word in bases[s]]
               for s in bases}

    def differential(s):
        """Matrix of b: C_s -> C_{s-1} as a dict (row, col) -> coeff."""
        rows = {w: r for r, w in enumerate(bases[s - 1])}
        entries: dict[tuple, object] = {}
        for col, word in enumerate(bases[s]):
            degs = [algebra.degrees[i] for i in word]
            for i in range(s):
                sign = -1 if i % 2 else 1
                for k, c in algebra.mult[word[i]][word[i + 1]]:
                    if i > 0 and k == algebra.unit:
                        continue  # normalized: inner units vanish
                    new = word[:i] + (k,) + word[i + 2:]
                    r = rows[new]
                    entries[(r, col)] = entries.get((r, col), 0) + sign * c
            # cyclic face: move the last letter to the front
            koszul = -1 if (degs[-1] * sum(degs[:-1])) % 2 else 1
            sign = (-1 if s % 2 else 1) * koszul
            for k, c in algebra.mult[word[-1]][word[0]]:
                new = (k,) + word[1:-1]
                r = rows[new]
                entries[(r, col)] = entries.get((r, col), 0) + sign * c
        return entries

    diffs = {s: differential(s) for s in range(1, smax + 2)}

    all_t = sorted({t for s in range(smax + 1) for t in degrees[s]})
    result = {}
    for t in all_t:
        idx = {s: [i for i, d in enumerate(degrees[s]) if d == t]
               for s in range(smax + 2)}
        ranks = {s: len(idx[s]) for s in range(smax + 2) if idx[s]}
        mats = {}
        for s in range(1, smax + 2):
            if not idx[s] or not idx.get(s - 1):
                continue
            rowpos = {r: a for a, r in enumerate(idx[s - 1])}
            colpos = {c: b for b, c in enumerate(idx[s])}
            rows = [[0] * len(idx[s]) for _ in idx[s - 1]]
            for (r, c), val in diffs[s].items():
                if r in rowpos and c in colpos:
                    rows[rowpos[r]][colpos[c]] = val
            mats[s] = rows
        for s, group in _homology_of_columns(algebra.ring, ranks, mats, smax).items():
            result[(s, t)] = group
    return BigradedGroup.create(result)


# ---------------------------------------------------------------------------
# path two: the small periodic resolution


def small_resolution_hh(ring: str, n: int, smax: int) -> BigradedGroup:
    """Hochschild homology of R[x]/x^2 from the 2-periodic resolution."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if smax < 0:
        raise ValueError("smax must be >= 0")
    algebra = GradedUnitalAlgebra.square_zero(ring, n)
    env = algebra.tensor_square()
    dim = algebra.dim
    y = {1 * dim + 0: 1}  # x (x) 1
    z = {0 * dim + 1: 1}  # 1 (x) x

    def env_mul(a: dict, b: dict) -> dict:
        return env.multiply(a, b)

    def sub(a: dict, b: dict) -> dict:
        out = dict(a)
        for k, c in b.items():
            out[k] = out.get(k, 0) - c
        return env._normalize(out)

    def add(a: dict, b: dict) -> dict:
        out = dict(a)
        for k, c in b.items():
            out[k] = out.get(k, 0) + c
        return env._normalize(out)

    def w_elem(s: int) -> dict:
        if n % 2 == 1:
            return sub(y, z)
        return sub(y, z) if s % 2 == 1 else add(y, z)

    # consecutive differentials must compose to zero in the tensor square
    for s in range(1, smax + 3):
        if env_mul(w_elem(s + 1), w_elem(s)):
            raise AssertionError("periodic resolution elements do not compose to zero")

    def action_matrix(w: dict):
        """a |-> sum c_(u,v) (-1)^(|v||a|) u a v on the basis of A."""
        cols = []
        for a_idx in range(dim):
            col: dict[int, object] = {}
            for uv, c in w.items():
                u, v = divmod(uv, dim)
                sign = -1 if (algebra.degrees[v] * algebra.degrees[a_idx]) % 2 else 1
                left = algebra.multiply({u: 1}, {a_idx: 1})
                full = algebra.multiply(left, {v: 1})
                for k, e in full.items():
                    col[k] = col.get(k, 0) + sign * c * e
            cols.append(algebra._normalize(col))
        return cols  # cols[a_idx] : dict row -> coeff

    mats_by_s = {s: action_matrix(w_elem(s)) for s in range(1, smax + 2)}
    for s in range(1, smax + 1):
        comp_cols = []
        for a_idx in range(dim):
            acc: dict[int, object] = {}
            for mid, c in mats_by_s[s + 1][a_idx].items():
                for k, e in mats_by_s[s][mid].items():
                    acc[k] = acc.get(k, 0) + c * e
            comp_cols.append(algebra._normalize(acc))
        if any(comp_cols):
            raise AssertionError("tensored-down differentials do not square to zero")

    result = {}
    all_t = sorted({algebra.degrees[i] - n * s
                    for s in range(smax + 2) for i in range(dim)})
    for t in all_t:
        idx = {s: [i for i in range(dim) if algebra.degrees[i] - n * s == t]
               for s in range(smax + 2)}
        ranks = {s: len(idx[s]) for s in range(smax + 2) if idx[s]}
        mats = {}
        for s in range(1, smax + 2):
            if not idx[s] or not idx.get(s - 1):
                continue
            rows = [[0] * len(idx[s]) for _ in idx[s - 1]]
            for b, a_idx in enumerate(idx[s]):
                for k, c in mats_by_s[s][a_idx].items():
                    if k in idx[s - 1]:
                        rows[idx[s - 1].index(k)][b] = c
            mats[s] = rows
        for s, group in _homology_of_columns(ring, ranks, mats, smax).items():
            result[(s, t)] = group
    return BigradedGroup.create(result)


# ---------------------------------------------------------------------------
# free-loop-space regrading


@dataclass(frozen=True)
class LoopSpaceTable:
    n: int
    ring: str
    smax: int
    complete_through: int  # cohomological degrees <= this are complete
    rows: tuple  # sorted ((cohomological degree, (free, torsion)), ...)

    def to_json(self):
        return {"n": self.n, "ring": self.ring, "smax": self.smax,
                "complete_through_degree": self.complete_through,
                "table": {str(d): {"free": f, "torsion": list(tor)}
                          for d, (f, tor) in self.rows}}

    def markdown(self) -> str:
        lines = ["| degree | group |", "|---|---|"]
        for d, (free, torsion) in self.rows:
            terms = []
            if free == 1:
                terms.append("Z" if self.ring == "Z" else self.ring)
            elif free > 1:
                terms.append(f"{'Z' if self.ring == 'Z' else self.ring}^{free}")
            terms.extend(f"Z/{q}" for q in torsion)
            lines.append(f"| {d} | {' + '.join(terms) if terms else '0'} |")
        return "\n".join(lines)


def loop_space_table(n: int, ring: str, smax: int) -> LoopSpaceTable:
    """Regrade HH_(s, t) as cohomology in degree -t - s (the documented degree
    dictionary); requires n >= 2."""
    if n < 2:
        raise ValueError("the free-loop regrading requires n >= 2")
    hh = small_resolution_hh(ring, n, smax)
    merged: dict[int, GradedAbelianGroup] = {}
    for (s, t), (free, torsion) in hh.entries:
        d = -t - s
        g = GradedAbelianGroup.create({d: (free, torsion)})
        merged[d] = merged[d].direct_sum(g) if d in merged else g
    rows = []
    for d in sorted(merged):
        free, torsion = merged[d].component(d)
        rows.append((d, (free, torsion)))
    return LoopSpaceTable(n, ring, smax, (n - 1) * smax, tuple(rows))
