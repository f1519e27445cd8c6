"""Shelling verification for the canonical facet order on Gamma_p(n).

Facets are ordered by dimension (largest first) and then lexicographically
by sigma word.  The order is a shelling iff for every pair i < k there are
j < k and v in F_k with

    F_i /\\ F_k  subset of  F_j /\\ F_k  =  F_k - {v}.

Witnesses come from a constructive route that peels a privately twistable
vertex off F_k (a safe down-twist, or a replacement one dimension up), with
an exhaustive search fallback, or from the exhaustive search alone.  The
same machinery identifies homology facets: those attaching along their
entire boundary, each of which contributes one sphere of its dimension.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .complexes import ComplexParams, Face, Vertex, order_key, sigma_word
from .errors import DomainError, PreconditionError
from .facets import enumerate_facets, facet_certificate, twist_sets

__all__ = [
    "sigma_word",
    "order_O_compare",
    "sort_facets",
    "BlockPartition",
    "block_partition",
    "ShellingReport",
    "verify_shelling",
    "shelling_witness",
    "homology_facet_by_criterion",
    "homology_facets_by_criterion",
    "homology_facets_direct",
    "betti_from_shelling",
    "x_family",
    "y_family",
]


def order_O_compare(f1: Face, f2: Face) -> int:
    """-1, 0, or 1 as f1 comes before, equals, or follows f2 in the order.

    Higher dimension sorts first; ties break lexicographically on the sigma
    word, which is injective on facets of equal dimension.
    """
    k1, k2 = order_key(f1), order_key(f2)
    return -1 if k1 < k2 else (0 if k1 == k2 else 1)


def sort_facets(facets) -> list[Face]:
    """Sort facets into the canonical shelling order."""
    return sorted(facets, key=order_key)


@dataclass(frozen=True)
class BlockPartition:
    """Shared and private vertices of a facet pair, grouped into runs.

    Each block is a maximal run of vertices consecutive within its facet:
    c_blocks and i_blocks follow the first facet's vertex sequence, k_blocks
    the second's.  For two facets the private partitions always have the
    same number of blocks.
    """

    c_blocks: tuple[tuple[Vertex, ...], ...]
    i_blocks: tuple[tuple[Vertex, ...], ...]
    k_blocks: tuple[tuple[Vertex, ...], ...]


def _membership_runs(seq: Face, keep) -> tuple[tuple[Vertex, ...], ...]:
    blocks = []
    current: list[Vertex] = []
    for v in seq:
        if keep(v):
            current.append(v)
        elif current:
            blocks.append(tuple(current))
            current = []
    if current:
        blocks.append(tuple(current))
    return tuple(blocks)


def block_partition(params: ComplexParams, face_i: Face, face_k: Face) -> BlockPartition:
    """Partition both vertex sequences into shared and private blocks.

    Walk each facet in order, cutting a block whenever membership in the
    shared vertex set flips.  When both inputs are facets, the private
    partitions are checked to have equal block counts.
    """
    fi = tuple(tuple(v) for v in face_i)
    fk = tuple(tuple(v) for v in face_k)
    shared = set(fi) & set(fk)
    c_blocks = _membership_runs(fi, lambda v: v in shared)
    i_blocks = _membership_runs(fi, lambda v: v not in shared)
    k_blocks = _membership_runs(fk, lambda v: v not in shared)
    both_facets = (
        facet_certificate(params, fi).is_facet
        and facet_certificate(params, fk).is_facet
    )
    if both_facets and len(i_blocks) != len(k_blocks):
        raise RuntimeError(
            f"private block counts differ for facets {fi} and {fk}: "
            f"{len(i_blocks)} vs {len(k_blocks)}"
        )
    return BlockPartition(c_blocks, i_blocks, k_blocks)


class _PairEngine:
    """Shared state for pairwise witness checks over one ordered facet list."""

    def __init__(self, params: ComplexParams, facets: list[Face]):
        self.params = params
        self.facets = facets
        self.p, self.n = params.p, params.n
        vertices = sorted({v for f in facets for v in f})
        self.vbit = {v: 1 << i for i, v in enumerate(vertices)}
        self.masks = [self._mask(f) for f in facets]
        self.index = {f: i for i, f in enumerate(facets)}
        self._twistable: dict[int, list[tuple[int, int, int]]] = {}
        self._construct_memo: dict[tuple[int, int, int], int | None] = {}
        self._peel: dict[int, dict[int, int]] = {}

    def _mask(self, face: Face) -> int:
        m = 0
        for v in face:
            m |= self.vbit[v]
        return m

    def twistable(self, k: int) -> list[tuple[int, int, int]]:
        """Vertices of F_k with nonempty down-twist set B_l, in order.

        Returns (l, vertex bit, left-most position of B_l) triples.
        """
        got = self._twistable.get(k)
        if got is None:
            got = []
            f = self.facets[k]
            for l, v in enumerate(f):
                if l == 0:
                    pos = next((a for a, c in enumerate(v) if c > 1), None)
                else:
                    prev = f[l - 1]
                    pos = next(
                        (a for a, c in enumerate(v) if c - prev[a] > 1), None
                    )
                if pos is not None:
                    got.append((l, self.vbit[v], pos))
            self._twistable[k] = got
        return got

    def construct(self, k: int, l: int, a: int) -> int | None:
        """Index of an earlier facet meeting F_k in exactly F_k - {v_l}.

        Down-twists v_l at position a (the left-most entry of B_l).  When the
        twist alone would break a facet condition, one replacement vertex
        restores it a dimension up: the vertex above v_l with every other
        coordinate advanced, or the all-n vertex after the last position.
        Returns None if the candidate is absent or fails the check; callers
        then fall back to exhaustive search.
        """
        f = self.facets[k]
        r = len(f)
        v = f[l]
        w = tuple(c - 1 if idx == a else c for idx, c in enumerate(v))
        if l < r - 1:
            nxt = f[l + 1]
            gaps = [nxt[idx] - v[idx] for idx in range(self.p) if idx != a]
            if gaps and min(gaps) == 1:
                cand = f[:l] + (w,) + f[l + 1 :]
            else:
                u = tuple(c if idx == a else c + 1 for idx, c in enumerate(v))
                cand = f[:l] + (w, u) + f[l + 1 :]
        else:
            if any(v[idx] == self.n for idx in range(self.p) if idx != a):
                cand = f[:l] + (w,)
            else:
                cand = f[:l] + (w, (self.n,) * self.p)
        j = self.index.get(cand)
        if j is None or j >= k:
            return None
        # verify the witness condition instead of trusting the construction
        if self.masks[j] & self.masks[k] != self.masks[k] & ~self.vbit[v]:
            return None
        return j

    def constructive(self, i: int, k: int) -> tuple[int, Vertex] | None:
        """Witness for (i, k) from the first privately down-twistable vertex."""
        mi = self.masks[i]
        for l, bit, a in self.twistable(k):
            if bit & mi:
                continue
            key = (k, l, a)
            if key not in self._construct_memo:
                self._construct_memo[key] = self.construct(k, l, a)
            j = self._construct_memo[key]
            if j is None:
                return None
            return (j, self.facets[k][l])
        return None

    def peel_witnesses(self, k: int) -> dict[int, int]:
        """Map bit(v) -> earliest j < k with F_j /\\ F_k = F_k - {v}."""
        got = self._peel.get(k)
        if got is None:
            got = {}
            bk = self.masks[k]
            want = bk.bit_count()
            for j in range(k):
                d = bk & ~self.masks[j]
                if d.bit_count() == 1 and d not in got:
                    got[d] = j
                    if len(got) == want:
                        break
            self._peel[k] = got
        return got

    def exhaustive(self, i: int, k: int) -> tuple[int, Vertex] | None:
        """Witness for (i, k) by search over all single-vertex peels of F_k."""
        got = self.peel_witnesses(k)
        mi = self.masks[i]
        for v in self.facets[k]:
            bit = self.vbit[v]
            if bit & mi:
                continue
            j = got.get(bit)
            if j is not None:
                return (j, v)
        return None


@dataclass
class ShellingReport:
    """Outcome of the pairwise check over one ordered facet list.

    witnesses holds the first witness_limit pairs in scan order (k ascending,
    then i); violations and fallbacks are complete.  fallbacks lists pairs
    where the constructive route failed and search found a witness anyway;
    disagreements lists pairs where the two routes differed in existence
    (only populated in mode "both", expected empty).
    """

    p: int
    n: int
    mode: str
    facet_count: int
    total_pairs: int
    constructed: int
    witnesses: dict[tuple[int, int], tuple[int, Vertex]]
    witness_limit: int
    violations: list[tuple[int, int]]
    fallbacks: list[tuple[int, int]]
    disagreements: list[tuple[int, int]] = field(default_factory=list)

    @property
    def is_shelling(self) -> bool:
        return not self.violations


_MODES = ("constructive", "exhaustive", "both")


def _normalize_order(params: ComplexParams, order) -> list[Face]:
    facets = [tuple(tuple(v) for v in f) for f in order]
    canonical = enumerate_facets(params)
    if len(facets) != len(canonical) or set(facets) != set(canonical):
        raise DomainError("order must list every facet exactly once")
    return facets


def _split_ranges(t: int, chunks: int) -> list[tuple[int, int]]:
    # balance by pair count: pairs below K grow like K^2
    chunks = max(1, min(chunks, t))
    bounds = [round(t * (b / chunks) ** 0.5) for b in range(chunks + 1)]
    bounds[0], bounds[-1] = 0, t
    return [(lo, hi) for lo, hi in zip(bounds, bounds[1:]) if hi > lo]


def verify_shelling(
    params: ComplexParams,
    order=None,
    *,
    witness_mode: str = "constructive",
    witness_limit: int = 100,
    threads: int = 1,
) -> ShellingReport:
    """Check the pairwise shelling condition for every pair i < k.

    order defaults to the canonical facet order; an explicit order must be a
    permutation of the facets.  witness_mode selects the constructive route
    (with exhaustive fallback), the exhaustive search, or both with an
    existence cross-check.  The report is independent of threads.
    """
    if witness_mode not in _MODES:
        raise DomainError(f"witness_mode must be one of {_MODES}")
    if order is None:
        facets = enumerate_facets(params)
    else:
        facets = _normalize_order(params, order)
    eng = _PairEngine(params, facets)
    t = len(facets)

    def work(lo: int, hi: int):
        masks = eng.masks
        pairs = 0
        built = 0
        wits: list[tuple[tuple[int, int], tuple[int, Vertex]]] = []
        bad: list[tuple[int, int]] = []
        fell: list[tuple[int, int]] = []
        dis: list[tuple[int, int]] = []
        for k in range(lo, hi):
            for i in range(k):
                pairs += 1
                if witness_mode == "exhaustive":
                    res = eng.exhaustive(i, k)
                else:
                    res = eng.constructive(i, k)
                    if res is not None:
                        built += 1
                        if witness_mode == "both" and eng.exhaustive(i, k) is None:
                            dis.append((i, k))
                    else:
                        res = eng.exhaustive(i, k)
                        if res is not None:
                            fell.append((i, k))
                if res is None:
                    bad.append((i, k))
                elif len(wits) < witness_limit:
                    wits.append(((i, k), res))
        return pairs, built, wits, bad, fell, dis

    ranges = _split_ranges(t, max(1, threads) * 4)
    if threads > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda r: work(*r), ranges))
    else:
        results = [work(*r) for r in ranges]

    witnesses: dict[tuple[int, int], tuple[int, Vertex]] = {}
    violations: list[tuple[int, int]] = []
    fallbacks: list[tuple[int, int]] = []
    disagreements: list[tuple[int, int]] = []
    total = 0
    constructed = 0
    for pairs, built, wits, bad, fell, dis in results:
        total += pairs
        constructed += built
        for key, val in wits:
            if len(witnesses) < witness_limit:
                witnesses[key] = val
        violations.extend(bad)
        fallbacks.extend(fell)
        disagreements.extend(dis)
    return ShellingReport(
        p=params.p,
        n=params.n,
        mode=witness_mode,
        facet_count=t,
        total_pairs=total,
        constructed=constructed,
        witnesses=witnesses,
        witness_limit=witness_limit,
        violations=violations,
        fallbacks=fallbacks,
        disagreements=disagreements,
    )


def shelling_witness(face_i, face_k, facets_in_order) -> tuple[int, Vertex] | None:
    """Witness (j, v) for an ordered facet pair, or None if none exists.

    The complex parameters are inferred from the facet list: p is the vertex
    arity and n the largest coordinate present (every facet touches n).
    """
    facets = [tuple(tuple(v) for v in f) for f in facets_in_order]
    if not facets:
        raise DomainError("facet list is empty")
    p = len(facets[0][0])
    n = max(c for f in facets for v in f for c in v)
    params = ComplexParams(p, n)
    fi = tuple(tuple(v) for v in face_i)
    fk = tuple(tuple(v) for v in face_k)
    try:
        i = facets.index(fi)
        k = facets.index(fk)
    except ValueError as exc:
        raise DomainError("both faces must appear in the facet list") from exc
    if i == k:
        raise PreconditionError("the pair must consist of two distinct facets")
    if i > k:
        raise PreconditionError("the first facet must precede the second")
    eng = _PairEngine(params, facets)
    res = eng.constructive(i, k)
    if res is None:
        res = eng.exhaustive(i, k)
    return res


def homology_facet_by_criterion(params: ComplexParams, facet) -> bool:
    """True iff every vertex of the facet has a nonempty down-twist set.

    The first vertex must exceed 1 somewhere and every later vertex must
    exceed its predecessor by more than 1 somewhere.  Applied to single
    vertices as well, where it reads: the vertex is not all ones.
    """
    cert = facet_certificate(params, facet)
    if not cert.is_facet:
        raise PreconditionError(f"{cert.face} is not a facet")
    sets = twist_sets(params, cert.face)
    return all(sets.b_sets)


def homology_facets_by_criterion(params: ComplexParams) -> list[Face]:
    """All facets selected by the down-twist criterion, in canonical order."""
    return [
        f
        for f in enumerate_facets(params)
        if homology_facet_by_criterion(params, f)
    ]


def homology_facets_direct(params: ComplexParams, order=None) -> list[Face]:
    """Facets attaching along their entire boundary, by direct containment.

    F_k qualifies iff every face F_k - {v} lies in some earlier facet; for a
    single vertex the boundary is the empty face, so any earlier facet
    suffices.  An explicit order is verified to be a shelling first; the
    default canonical order is used as given.
    """
    if order is None:
        facets = enumerate_facets(params)
    else:
        facets = _normalize_order(params, order)
        report = verify_shelling(params, facets, witness_mode="exhaustive")
        if not report.is_shelling:
            raise PreconditionError(
                f"order is not a shelling ({len(report.violations)} violating pairs)"
            )
    eng = _PairEngine(params, facets)
    out = []
    for k, f in enumerate(facets):
        if len(eng.peel_witnesses(k)) == len(f):
            out.append(f)
    return out


def betti_from_shelling(params: ComplexParams) -> tuple[int, ...]:
    """Reduced Betti numbers (beta_-1, ..., beta_{n-1}) by counting spheres.

    Each facet that attaches along its entire boundary contributes one
    sphere of its dimension; nothing else contributes.
    """
    betti = [0] * (params.n + 1)
    for f in homology_facets_direct(params):
        betti[len(f)] += 1
    return tuple(betti)


def x_family(params: ComplexParams) -> list[Face]:
    """Homology facets whose last vertex is not (n, ..., n).

    Uses the down-twist criterion, which the suite checks against the direct
    attachment computation.
    """
    top = (params.n,) * params.p
    return [f for f in homology_facets_by_criterion(params) if f[-1] != top]


def y_family(params: ComplexParams) -> list[Face]:
    """Homology facets whose last vertex is (n, ..., n).

    These are exactly the x-family members of the next smaller complex with
    the all-n vertex appended.
    """
    top = (params.n,) * params.p
    return [f for f in homology_facets_by_criterion(params) if f[-1] == top]
