"""Exact linear algebra over Z and F_p.

Smith normal form with unimodular transforms, chain complexes of integer
matrices, homology with Z / Q / F_p coefficients, and minimal models over
hereditary base rings (every bounded complex splits as a sum of its
homology, presented degreewise by free resolutions).

All arithmetic is arbitrary-precision: pivot growth during Smith reduction
overflows any fixed width already on small random matrices.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from math import gcd

Ring = str  # "Z", "Q" or "F<p>" for a prime p


def ring_prime(ring: Ring) -> int | None:
    """The prime of an F_p ring label, None for Z and Q."""
    if ring in ("Z", "Q"):
        return None
    if ring.startswith("F") and ring[1:].isdigit():
        p = int(ring[1:])
        if p >= 2:
            return p
    raise ValueError(f"unknown coefficient ring {ring!r}")


# ---------------------------------------------------------------------------
# integer matrices


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major tuple of tuples of int

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("column count mismatch")
            for e in row:
                if not isinstance(e, int):
                    raise ValueError("entries must be integers")

    @staticmethod
    def from_rows(rows) -> "IntMatrix":
        rows = tuple(tuple(int(e) for e in row) for row in rows)
        ncols = len(rows[0]) if rows else 0
        return IntMatrix(len(rows), ncols, rows)

    @staticmethod
    def zero(rows: int, cols: int) -> "IntMatrix":
        return IntMatrix(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        out = []
        for i in range(self.rows):
            row = self.entries[i]
            out.append(tuple(
                sum(row[k] * other.entries[k][j] for k in range(self.cols))
                for j in range(other.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def is_zero(self) -> bool:
        return all(e == 0 for row in self.entries for e in row)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(tuple(self.entries[i][j] for i in range(self.rows))
                               for j in range(self.cols)))

    def det(self) -> int:
        """Fraction-free (Bareiss) determinant; square matrices only."""
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def to_lists(self):
        return [list(row) for row in self.entries]


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithNormalForm:
    diagonal: tuple
    left: IntMatrix
    right: IntMatrix

    def verify(self, m: IntMatrix) -> bool:
        prod = self.left.mul(m).mul(self.right)
        for i in range(prod.rows):
            for j in range(prod.cols):
                want = self.diagonal[i] if i == j and i < len(self.diagonal) else 0
                if prod.entries[i][j] != want:
                    return False
        for i in range(len(self.diagonal) - 1):
            a, b = self.diagonal[i], self.diagonal[i + 1]
            if a < 0 or b < 0 or (a == 0 and b != 0) or (a != 0 and b % a != 0):
                return False
        return abs(self.left.det()) == 1 and abs(self.right.det()) == 1


def _snf_cache_path(m: IntMatrix) -> str | None:
    cache_dir = os.environ.get("ENTRIV_CACHE_DIR")
    if not cache_dir:
        return None
    key = hashlib.sha256(repr((m.rows, m.cols, m.entries)).encode()).hexdigest()
    return os.path.join(cache_dir, f"snf_{key}.json")


def smith_normal_form(m: IntMatrix) -> SmithNormalForm:
    """L*m*R = diag(d_1, ..., d_k) with d_1 | d_2 | ..., d_i >= 0 and L, R unimodular."""
    path = _snf_cache_path(m)
    if path and os.path.exists(path):
        with open(path) as fh:
            data = json.load(fh)
        snf = SmithNormalForm(tuple(data["diagonal"]),
                              IntMatrix.from_rows(data["left"]),
                              IntMatrix.from_rows(data["right"]))
        if snf.verify(m):  # guard against stale cache entries
            return snf

    a = [list(row) for row in m.entries]
    nrows, ncols = m.rows, m.cols
    left = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
    right = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in right:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        left[dst] = [x + q * y for x, y in zip(left[dst], left[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in right:
            row[dst] += q * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        left[i] = [-x for x in left[i]]

    t = 0
    while t < min(nrows, ncols):
        pivot = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] != 0 and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            dirty = False
            for i in range(t + 1, nrows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:  # remainder strictly smaller: promote it
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, ncols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            offender = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
        if a[t][t] < 0:
            negate_row(t)
        t += 1

    diag = tuple(a[i][i] for i in range(min(nrows, ncols)))
    snf = SmithNormalForm(diag, IntMatrix.from_rows(left), IntMatrix.from_rows(right))
    if path:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        with open(path, "w") as fh:
            json.dump({"diagonal": list(diag),
                       "left": snf.left.to_lists(),
                       "right": snf.right.to_lists()}, fh)
    return snf


def rank_z(m: IntMatrix) -> int:
    return sum(1 for d in smith_normal_form(m).diagonal if d != 0)


def rank_mod_p(m: IntMatrix, p: int) -> int:
    a = [[e % p for e in row] for row in m.entries]
    rank = 0
    col = 0
    for col in range(m.cols):
        pivot_row = next((i for i in range(rank, m.rows) if a[i][col] % p != 0), None)
        if pivot_row is None:
            continue
        a[rank], a[pivot_row] = a[pivot_row], a[rank]
        inv = pow(a[rank][col], -1, p)
        a[rank] = [(x * inv) % p for x in a[rank]]
        for i in range(m.rows):
            if i != rank and a[i][col]:
                f = a[i][col]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# graded abelian groups


def invariant_factors(orders) -> tuple:
    """Normalise a multiset of cyclic orders (>= 2) to the chain d_1 | d_2 | ..."""
    primes: dict[int, list[int]] = {}
    for d in orders:
        if d < 2:
            raise ValueError("torsion orders must be >= 2")
        rest = d
        q = 2
        while q * q <= rest:
            if rest % q == 0:
                e = 0
                while rest % q == 0:
                    rest //= q
                    e += 1
                primes.setdefault(q, []).append(e)
            q += 1
        if rest > 1:
            primes.setdefault(rest, []).append(1)
    if not primes:
        return ()
    for exps in primes.values():
        exps.sort(reverse=True)
    length = max(len(e) for e in primes.values())
    chain = []
    for k in range(length):
        f = 1
        for q, exps in primes.items():
            if k < len(exps):
                f *= q ** exps[k]
        chain.append(f)
    chain.reverse()
    return tuple(chain)


@dataclass(frozen=True)
class GradedAbelianGroup:
    components: tuple  # sorted tuple of (degree, free_rank, torsion_chain)

    @staticmethod
    def create(data: dict) -> "GradedAbelianGroup":
        comps = []
        for deg, (free, torsion) in data.items():
            chain = invariant_factors(torsion)
            if free or chain:
                comps.append((int(deg), int(free), chain))
        return GradedAbelianGroup(tuple(sorted(comps)))

    @staticmethod
    def zero() -> "GradedAbelianGroup":
        return GradedAbelianGroup(())

    def component(self, degree: int):
        for deg, free, torsion in self.components:
            if deg == degree:
                return free, torsion
        return 0, ()

    def degrees(self):
        return [deg for deg, _, _ in self.components]

    def direct_sum(self, other: "GradedAbelianGroup") -> "GradedAbelianGroup":
        data: dict[int, list] = {}
        for deg, free, torsion in self.components + other.components:
            entry = data.setdefault(deg, [0, []])
            entry[0] += free
            entry[1].extend(torsion)
        return GradedAbelianGroup.create({d: (f, t) for d, (f, t) in data.items()})

    def to_json(self) -> dict:
        return {str(deg): {"free": free, "torsion": list(torsion)}
                for deg, free, torsion in self.components}

    @staticmethod
    def from_json(data: dict) -> "GradedAbelianGroup":
        return GradedAbelianGroup.create(
            {int(deg): (v["free"], tuple(v["torsion"])) for deg, v in data.items()})

    def describe(self) -> str:
        if not self.components:
            return "0"
        parts = []
        for deg, free, torsion in self.components:
            terms = []
            if free == 1:
                terms.append("Z")
            elif free > 1:
                terms.append(f"Z^{free}")
            terms.extend(f"Z/{d}" for d in torsion)
            parts.append(f"[{deg}] " + " + ".join(terms))
        return ", ".join(parts)


# ---------------------------------------------------------------------------
# chain complexes and homology


@dataclass(frozen=True)
class ChainComplex:
    ranks: tuple  # sorted tuple of (degree, rank > 0)
    differentials: tuple  # sorted tuple of (degree n, IntMatrix d_n : C_n -> C_{n-1})

    @staticmethod
    def create(ranks: dict, differentials: dict) -> "ChainComplex":
        ranks = {int(n): int(r) for n, r in ranks.items() if int(r) > 0}
        diffs = {}
        for n, mat in differentials.items():
            n = int(n)
            if not isinstance(mat, IntMatrix):
                mat = IntMatrix.from_rows(mat)
            if mat.rows == 0 or mat.cols == 0 or mat.is_zero():
                continue
            if mat.cols != ranks.get(n, 0) or mat.rows != ranks.get(n - 1, 0):
                raise ValueError(f"differential d_{n} has shape {mat.rows}x{mat.cols}, "
                                 f"expected {ranks.get(n - 1, 0)}x{ranks.get(n, 0)}")
            diffs[n] = mat
        for n, mat in diffs.items():
            nxt = diffs.get(n + 1)
            if nxt is not None and not mat.mul(nxt).is_zero():
                raise ValueError(f"d_{n} o d_{n + 1} is nonzero")
        return ChainComplex(tuple(sorted(ranks.items())), tuple(sorted(diffs.items())))

    def rank(self, n: int) -> int:
        for deg, r in self.ranks:
            if deg == n:
                return r
        return 0

    def differential(self, n: int) -> IntMatrix:
        for deg, mat in self.differentials:
            if deg == n:
                return mat
        return IntMatrix.zero(self.rank(n - 1), self.rank(n))

    def degrees(self):
        return [deg for deg, _ in self.ranks]

    def to_json(self) -> dict:
        return {"ranks": {str(n): r for n, r in self.ranks},
                "differentials": {str(n): m.to_lists() for n, m in self.differentials}}

    @staticmethod
    def from_json(data: dict) -> "ChainComplex":
        return ChainComplex.create(data["ranks"], data.get("differentials", {}))


def homology(c: ChainComplex, coefficients: Ring = "Z") -> GradedAbelianGroup:
    """H_n = ker d_n / im d_{n+1}, via Smith form over Z, ranks over Q / F_p."""
    p = ring_prime(coefficients)
    data = {}
    for n in c.degrees():
        dim = c.rank(n)
        d_in = c.differential(n + 1)
        d_out = c.differential(n)
        if coefficients == "Z":
            snf_in = smith_normal_form(d_in)
            r_in = sum(1 for d in snf_in.diagonal if d != 0)
            r_out = rank_z(d_out)
            free = dim - r_out - r_in
            torsion = tuple(d for d in snf_in.diagonal if d > 1)
        elif coefficients == "Q":
            free = dim - rank_z(d_out) - rank_z(d_in)
            torsion = ()
        else:
            free = dim - rank_mod_p(d_out, p) - rank_mod_p(d_in, p)
            torsion = ()
        if free < 0:
            raise AssertionError("negative homology rank: complex invalid")
        data[n] = (free, torsion)
    return GradedAbelianGroup.create(data)


def formality_splitting(c: ChainComplex):
    """Minimal model of a bounded complex over Z.

    The degree-n homology contributes its free rank in degree n with zero
    differential, and one two-term piece Z --d--> Z in degrees (n+1, n) per
    torsion order d.  Returns (minimal, certified) where certified records
    that the minimal model has the same homology as the input; over a
    hereditary ring this always holds.
    """
    h = homology(c, "Z")
    ranks: dict[int, int] = {}
    diffs: dict[int, list] = {}
    free_at = {deg: free for deg, free, _ in h.components}
    torsion_at = {deg: torsion for deg, _, torsion in h.components}
    degrees = set(free_at)
    for deg, torsion in torsion_at.items():
        if torsion:
            degrees.add(deg + 1)
    for n in sorted(degrees):
        tor_here = torsion_at.get(n, ())
        tor_below = torsion_at.get(n - 1, ())
        # basis order: free part of H_n, torsion targets of H_n, torsion sources of H_{n-1}
        ranks[n] = free_at.get(n, 0) + len(tor_here) + len(tor_below)
    for n in sorted(degrees):
        tor_below = torsion_at.get(n - 1, ())
        if not tor_below:
            continue
        rows = ranks.get(n - 1, 0)
        cols = ranks[n]
        offset_row = free_at.get(n - 1, 0)
        offset_col = free_at.get(n, 0) + len(torsion_at.get(n, ()))
        mat = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(tor_below):
            mat[offset_row + i][offset_col + i] = d
        diffs[n] = mat
    minimal = ChainComplex.create(ranks, diffs)
    certified = homology(minimal, "Z") == h
    return minimal, certified


# ---------------------------------------------------------------------------
# randomized inputs for property tests and sweeps


def random_unimodular(n: int, rng, ops: int = 6, bound: int = 2) -> IntMatrix:
    """Product of elementary shears and swaps; determinant +-1 by construction."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(ops):
        i = rng.below(n)
        j = rng.below(n)
        if i == j:
            continue
        if rng.below(4) == 0:
            m[i], m[j] = m[j], m[i]
        else:
            q = rng.sign() * rng.randint(1, bound)
            m[i] = [x + q * y for x, y in zip(m[i], m[j])]
    return IntMatrix.from_rows(m)


def random_chain_complex(rng, max_degree: int = 3, max_rank: int = 6,
                         entry_bound: int = 9) -> ChainComplex:
    """A bounded complex with d o d = 0 and small entries.

    Built as a sum of elementary pieces (free generators and two-term torsion
    pieces) and sheared by a few elementary basis changes in each degree,
    retrying until every entry stays within the bound.
    """
    while True:
        ranks: dict[int, int] = {}
        torsion: dict[int, list] = {}
        for deg in range(max_degree + 1):
            free = rng.below(3)
            tors = [rng.randint(2, 6) for _ in range(rng.below(3))] if deg < max_degree else []
            torsion[deg] = tors
            ranks[deg] = free + len(tors) + len(torsion.get(deg - 1, []))
        ranks = {d: r for d, r in ranks.items() if r}
        diffs = {}
        for deg in range(1, max_degree + 1):
            tor_below = torsion.get(deg - 1, [])
            if not tor_below or not ranks.get(deg) or not ranks.get(deg - 1):
                continue
            rows = ranks[deg - 1]
            cols = ranks[deg]
            mat = [[0] * cols for _ in range(rows)]
            for i, d in enumerate(tor_below):
                mat[rows - len(tor_below) + i][cols - len(tor_below) + i] = d
            diffs[deg] = mat
        if any(r > max_rank for r in ranks.values()):
            continue
        # basis changes: d_n -> U_{n-1} d_n U_n^{-1}
        us = {}
        for deg in ranks:
            u = random_unimodular(ranks[deg], rng, ops=3, bound=1)
            inv = smith_normal_form(u)  # inverse via L, R: u^{-1} = R diag^{-1} L
            us[deg] = (u, inv)
        new_diffs = {}
        ok = True
        for deg, mat in diffs.items():
            m = IntMatrix.from_rows(mat)
            u_below = us[deg - 1][0]
            snf_u = us[deg][1]
            if any(d != 1 for d in snf_u.diagonal):
                ok = False
                break
            u_inv = snf_u.right.mul(snf_u.left)
            m2 = u_below.mul(m).mul(u_inv)
            if any(abs(e) > entry_bound for row in m2.entries for e in row):
                ok = False
                break
            new_diffs[deg] = m2
        if not ok:
            continue
        try:
            return ChainComplex.create(ranks, new_diffs)
        except ValueError:
            continue
