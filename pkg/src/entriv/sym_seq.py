"""Arity-truncated symmetric sequences in graded Sigma_n-modules.

The composition product is computed orbitwise: for each Sigma_n-orbit of set
partitions E of {1..n} the summand is the module induced from the stabilizer
G_E acting diagonally on A(blocks) tensor the blockwise B's, with degrees
adding.  Koszul signs funnel through `koszul_sign`: transposing factors of
degrees d, d' costs (-1)^(d*d').  This convention is a choice; consumers
comparing against a different sign convention must conjugate by per-degree
signs.

Induced modules are materialized on explicit coset bases; the arity at which
this is allowed is capped (memory control at desk scale).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import perms
from .rep_theory import CharacterVector, SignedPermModule, character

MAX_MATERIALIZED_ARITY = 6


# ---------------------------------------------------------------------------
# set partitions and their orbits


@lru_cache(maxsize=None)
def set_partitions(n: int) -> tuple:
    """All set partitions of {0..n-1}, blocks ordered by (-size, min)."""
    if n == 0:
        return ((),)
    out = []

    def grow(i, blocks):
        if i == n:
            out.append(_canonical_blocks([tuple(b) for b in blocks]))
            return
        for b in blocks:
            b.append(i)
            grow(i + 1, blocks)
            b.pop()
        blocks.append([i])
        grow(i + 1, blocks)
        blocks.pop()

    grow(0, [])
    return tuple(out)


def _canonical_blocks(blocks):
    return tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: (-len(b), b[0])))


def apply_perm_to_partition(g: tuple, blocks: tuple) -> tuple:
    return _canonical_blocks([tuple(g[x] for x in block) for block in blocks])


@dataclass(frozen=True)
class PartitionOrbit:
    representative: tuple  # canonical blocks, sizes descending and consecutive
    stabilizer_order: int
    block_sizes: tuple

    @property
    def orbit_size(self) -> int:
        return factorial(sum(self.block_sizes)) // self.stabilizer_order


def partition_orbits(n: int) -> tuple:
    """One orbit per multiset of block sizes, i.e. per partition of the integer n."""
    orbits = []
    for sizes in perms.partitions(n):
        blocks = []
        start = 0
        for s in sizes:
            blocks.append(tuple(range(start, start + s)))
            start += s
        mult: dict[int, int] = {}
        for s in sizes:
            mult[s] = mult.get(s, 0) + 1
        stab = 1
        for s, m in mult.items():
            stab *= factorial(s) ** m * factorial(m)
        orbits.append(PartitionOrbit(tuple(blocks), stab, sizes))
    return tuple(orbits)


def orbit_partitions(n: int, sizes: tuple) -> tuple:
    return tuple(bl for bl in set_partitions(n)
                 if tuple(len(b) for b in bl) == tuple(sizes))


def transversal_map(rep_blocks: tuple, blocks: tuple) -> tuple:
    """A permutation sigma with sigma . rep = blocks (blockwise order-preserving)."""
    n = sum(len(b) for b in blocks)
    sigma = [0] * n
    for src, dst in zip(rep_blocks, blocks):
        for x, y in zip(src, dst):
            sigma[x] = y
    return tuple(sigma)


def koszul_sign(pi: tuple, degrees: tuple) -> int:
    """Sign of permuting graded tensor factors: factor i moves to slot pi[i]."""
    s = 1
    for i in range(len(pi)):
        for j in range(i + 1, len(pi)):
            if pi[i] > pi[j] and (degrees[i] * degrees[j]) % 2 != 0:
                s = -s
    return s


# ---------------------------------------------------------------------------
# symmetric sequences


@dataclass(frozen=True)
class SymSeq:
    truncation: int
    components: tuple  # sorted ((arity, ((degree, SignedPermModule), ...)), ...)

    @staticmethod
    def create(truncation: int, data: dict) -> "SymSeq":
        comps = []
        for arity, by_degree in data.items():
            arity = int(arity)
            if arity < 1:
                raise ValueError("symmetric sequences here are non-unital: arity >= 1")
            if arity > truncation:
                raise ValueError("component beyond declared truncation")
            kept = []
            for degree, module in by_degree.items():
                if module.dim == 0:
                    continue
                if module.n != arity:
                    raise ValueError("module rank does not match its arity")
                kept.append((int(degree), module))
            if kept:
                comps.append((arity, tuple(sorted(kept, key=lambda kv: kv[0]))))
        return SymSeq(truncation, tuple(sorted(comps)))

    def arities(self):
        return [a for a, _ in self.components]

    def degrees(self, arity: int):
        for a, by_degree in self.components:
            if a == arity:
                return [d for d, _ in by_degree]
        return []

    def module(self, arity: int, degree: int) -> SignedPermModule | None:
        for a, by_degree in self.components:
            if a == arity:
                for d, m in by_degree:
                    if d == degree:
                        return m
        return None

    def dimension(self, arity: int, degree: int) -> int:
        m = self.module(arity, degree)
        return m.dim if m else 0

    def to_json(self):
        return {"truncation": self.truncation,
                "components": {str(a): {str(d): m.to_json() for d, m in by_degree}
                               for a, by_degree in self.components}}

    @staticmethod
    def from_json(data):
        comps = {int(a): {int(d): SignedPermModule.from_json(m) for d, m in by_deg.items()}
                 for a, by_deg in data["components"].items()}
        return SymSeq.create(int(data["truncation"]), comps)


def unit_seq(truncation: int = 1) -> SymSeq:
    """The monoidal unit: a one-dimensional piece in arity 1, degree 0."""
    return SymSeq.create(truncation, {1: {0: SignedPermModule.trivial(1)}})


# ---------------------------------------------------------------------------
# composition product


def compose(a_seq: SymSeq, b_seq: SymSeq, truncation: int,
            max_arity: int = MAX_MATERIALIZED_ARITY) -> SymSeq:
    """Composition product A o B up to the given arity truncation."""
    if truncation < 1:
        raise ValueError("truncation must be >= 1")
    if truncation > a_seq.truncation or truncation > b_seq.truncation:
        raise ValueError("truncation exceeds the inputs' stored arities")
    if truncation > max_arity:
        raise ValueError(f"arity {truncation} exceeds the materialization cap {max_arity}")

    out: dict[int, dict[int, SignedPermModule]] = {}
    for n in range(1, truncation + 1):
        built = _compose_arity(a_seq, b_seq, n)
        if built:
            out[n] = built
    return SymSeq.create(truncation, out)


def _compose_arity(a_seq: SymSeq, b_seq: SymSeq, n: int) -> dict:
    gens_by_degree: dict[int, list] = {}
    basis_by_degree: dict[int, list] = {}
    index_by_degree: dict[int, dict] = {}

    for orbit in partition_orbits(n):
        k = len(orbit.block_sizes)
        a_degrees = a_seq.degrees(k)
        if not a_degrees:
            continue
        if any(not b_seq.degrees(size) for size in orbit.block_sizes):
            continue
        rep = orbit.representative
        cosets = orbit_partitions(n, orbit.block_sizes)
        sigmas = {blocks: transversal_map(rep, blocks) for blocks in cosets}
        sigma_invs = {blocks: perms.inverse(s) for blocks, s in sigmas.items()}

        # basis of the G_E-module: a-label and one (degree, index) label per block
        block_labels = []
        for size in orbit.block_sizes:
            labels = [(d, j) for d in b_seq.degrees(size)
                      for j in range(b_seq.dimension(size, d))]
            block_labels.append(labels)

        def tensor_labels(pos=0):
            if pos == len(block_labels):
                yield ()
                return
            for lab in block_labels[pos]:
                for rest in tensor_labels(pos + 1):
                    yield (lab,) + rest

        all_tensors = list(tensor_labels())
        for blocks in cosets:
            for da in a_degrees:
                dim_a = a_seq.dimension(k, da)
                for ja in range(dim_a):
                    for labels in all_tensors:
                        total = da + sum(d for d, _ in labels)
                        elem = (blocks, (da, ja), labels)
                        idx = index_by_degree.setdefault(total, {})
                        idx[elem] = len(idx)
                        basis_by_degree.setdefault(total, []).append(elem)

        # generator actions: g . (sigma_F (x) v) = sigma_{gF} (x) (h . v)
        for t in range(n - 1):
            g = perms.adjacent(n, t)
            for blocks in cosets:
                new_blocks = apply_perm_to_partition(g, blocks)
                h = perms.compose(sigma_invs[new_blocks], perms.compose(g, sigmas[blocks]))
                if apply_perm_to_partition(h, rep) != rep:
                    raise AssertionError("transversal error: h does not stabilize E")
                pi = _block_permutation(h, rep)
                within = _within_block_maps(h, rep, pi)
                a_maps = {da: a_seq.module(k, da).act_signed(pi) for da in a_degrees}
                b_maps = {}
                for i, size in enumerate(orbit.block_sizes):
                    for d in b_seq.degrees(size):
                        b_maps[(i, d)] = b_seq.module(size, d).act_signed(within[i])
                for da in a_degrees:
                    amap = a_maps[da]
                    for ja in range(a_seq.dimension(k, da)):
                        ja2, sa = amap[ja]
                        for labels in all_tensors:
                            sign = sa
                            new_labels = [None] * k
                            for i, (d, j) in enumerate(labels):
                                j2, s = b_maps[(i, d)][j]
                                new_labels[pi[i]] = (d, j2)
                                sign *= s
                            sign *= koszul_sign(pi, tuple(d for d, _ in labels))
                            total = da + sum(d for d, _ in labels)
                            src = (blocks, (da, ja), labels)
                            dst = (new_blocks, (da, ja2), tuple(new_labels))
                            gens_by_degree.setdefault(total, {}).setdefault(t, {})[src] = (dst, sign)

    result = {}
    for total, basis in basis_by_degree.items():
        index = index_by_degree[total]
        gens = []
        for t in range(n - 1):
            table = gens_by_degree.get(total, {}).get(t, {})
            gens.append(tuple((index[table[e][0]], table[e][1]) for e in basis))
        result[total] = SignedPermModule(n, len(basis), gens_perm=tuple(gens))
    return result


def _block_permutation(h: tuple, rep_blocks: tuple) -> tuple:
    """h permutes the blocks of its stabilized partition; return that permutation."""
    images = [tuple(sorted(h[x] for x in block)) for block in rep_blocks]
    lookup = {block: i for i, block in enumerate(rep_blocks)}
    return tuple(lookup[img] for img in images)


def _within_block_maps(h: tuple, rep_blocks: tuple, pi: tuple) -> list:
    """Per block, the induced permutation of {0..size-1} through the sorted orders."""
    out = []
    for i, block in enumerate(rep_blocks):
        target = rep_blocks[pi[i]]
        pos_in_target = {x: r for r, x in enumerate(target)}
        out.append(tuple(pos_in_target[h[x]] for x in block))
    return out


def compose_dimensions_raw(a_seq: SymSeq, b_seq: SymSeq, n: int) -> dict:
    """Degreewise dimension of (A o B)(n) by brute summation over all set
    partitions, with no orbit grouping; the independent bookkeeping oracle."""
    dims: dict[int, int] = {}
    for blocks in set_partitions(n):
        k = len(blocks)
        a_degs = a_seq.degrees(k)
        if not a_degs:
            continue
        if any(not b_seq.degrees(len(b)) for b in blocks):
            continue
        parts = [{d: a_seq.dimension(k, d) for d in a_degs}]
        for b in blocks:
            parts.append({d: b_seq.dimension(len(b), d) for d in b_seq.degrees(len(b))})
        conv = {0: 1}
        for factor in parts:
            nxt: dict[int, int] = {}
            for d1, m1 in conv.items():
                for d2, m2 in factor.items():
                    nxt[d1 + d2] = nxt.get(d1 + d2, 0) + m1 * m2
            conv = nxt
        for d, m in conv.items():
            dims[d] = dims.get(d, 0) + m
    return {d: m for d, m in dims.items() if m}


# ---------------------------------------------------------------------------
# operadic suspension


def suspend(a_seq: SymSeq, k: int) -> SymSeq:
    """k-fold operadic (de)suspension at homology level: arity-n pieces shift
    by k(n-1) in degree and twist by the k-th power of the sign character."""
    if k == 0:
        return a_seq
    data: dict[int, dict[int, SignedPermModule]] = {}
    for arity, by_degree in a_seq.components:
        shifted = {}
        for degree, module in by_degree:
            shifted[degree + k * (arity - 1)] = module.twist_by_sign(k)
        data[arity] = shifted
    return SymSeq.create(a_seq.truncation, data)


# ---------------------------------------------------------------------------
# rational free-functor pieces and reports


def free_piece_rational(a_seq: SymSeq, generator_degree: int, arity: int) -> list:
    """Rational homology of the arity-n homogeneous piece on one generator of
    degree d: coinvariants multiplicities of A(n) twisted by the Koszul sign
    action on the n-th tensor power of a degree-d sphere class."""
    out = []
    n = arity
    for d_int in a_seq.degrees(n):
        module = a_seq.module(n, d_int)
        total = Fraction(0)
        for part in perms.partitions(n):
            rep = perms.class_representative(part)
            chi = Fraction(module.trace(rep))
            if generator_degree % 2 != 0:
                chi *= perms.sign(rep)
            total += perms.class_size(part) * chi
        mult = total / factorial(n)
        if mult.denominator != 1:
            raise AssertionError("coinvariants multiplicity is not an integer")
        out.append((d_int + n * generator_degree, int(mult)))
    return sorted(out)


@dataclass(frozen=True)
class MonoidalityReport:
    truncation: int
    entries: tuple  # (arity, degree, dim_lhs, dim_rhs, chars_equal)
    passed: bool

    def to_json(self):
        return {"truncation": self.truncation,
                "entries": [{"arity": a, "degree": d, "dim_suspend_after": dl,
                             "dim_suspend_before": dr, "characters_equal": ce}
                            for a, d, dl, dr, ce in self.entries],
                "pass": self.passed}


def monoidality_report(a_seq: SymSeq, b_seq: SymSeq, truncation: int) -> MonoidalityReport:
    """Compare suspend(A o B, 1) with suspend(A,1) o suspend(B,1), degreewise
    and characterwise; the two sides go through independent code paths."""
    lhs = suspend(compose(a_seq, b_seq, truncation), 1)
    rhs = compose(suspend(a_seq, 1), suspend(b_seq, 1), truncation)
    entries = []
    ok = True
    for n in range(1, truncation + 1):
        degrees = sorted(set(lhs.degrees(n)) | set(rhs.degrees(n)))
        for d in degrees:
            ml, mr = lhs.module(n, d), rhs.module(n, d)
            dl = ml.dim if ml else 0
            dr = mr.dim if mr else 0
            if dl != dr:
                chars_equal = False
            elif dl == 0:
                chars_equal = True
            else:
                chars_equal = character(ml).values == character(mr).values
            ok = ok and (dl == dr) and chars_equal
            entries.append((n, d, dl, dr, chars_equal))
    return MonoidalityReport(truncation, tuple(entries), ok)


def graded_characters(seq: SymSeq, arity: int) -> dict:
    """degree -> CharacterVector for one arity; the comparison currency for
    associativity checks."""
    out = {}
    for d in seq.degrees(arity):
        out[d] = character(seq.module(arity, d))
    return out
