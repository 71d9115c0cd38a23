"""Graded posets: the triangle poset, its edge labeling, and P_{ib} frontiers.

``PosetSlice`` stores one graded poset truncated to finitely many ranks, as
parent-index tuples per element (rank 0 is the bottom element).  The triangle
poset is derived from the production rule; the planar ``i``-cover posets with
the 2b-gon condition are grown by a frontier automaton.  Both record, for
every element, its two (or i) children in left-to-right planar order, which
drives the alternating edge labeling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import InvariantError, ResourceLimitError
from .sequences import fibonacci, prec_compare
from .triangle import first_row, next_row, production_plan


@dataclass
class PosetSlice:
    """Ranks 0..depth of a graded poset with a single bottom element.

    ``parents[n][k]`` is the tuple of rank-(n-1) indices covered by element k
    of rank n; ``child_order[n][j]`` lists the rank-(n+1) children of element
    j of rank n in planar left-to-right order (absent for the last rank).
    """

    parents: list[list[tuple[int, ...]]]
    child_order: list[list[tuple[int, ...]]] = field(default_factory=list)

    @property
    def depth(self) -> int:
        return len(self.parents) - 1

    def rank_sizes(self) -> list[int]:
        return [len(r) for r in self.parents]

    def chain_counts(self) -> list[list[int]]:
        """Number of saturated chains from the bottom to each element."""
        counts: list[list[int]] = [[1]]
        for n in range(1, len(self.parents)):
            prev = counts[-1]
            counts.append([sum(prev[p] for p in ps) for ps in self.parents[n]])
        return counts

    def children(self, n: int) -> list[list[int]]:
        """Unordered children lists (rank n -> rank n+1 indices)."""
        out: list[list[int]] = [[] for _ in self.parents[n]]
        for k, ps in enumerate(self.parents[n + 1]):
            for p in ps:
                out[p].append(k)
        return out

    def cover_degree_check(self, max_rank: int | None = None) -> bool:
        """Every element below the last built rank has the same child count."""
        top = (self.depth - 1) if max_rank is None else max_rank
        degs = set()
        for n in range(0, top + 1):
            for ch in self.children(n):
                degs.add(len(ch))
        return len(degs) == 1

    def to_dot(self) -> str:
        lines = ["digraph poset {", "  rankdir=BT;"]
        for n, rank in enumerate(self.parents):
            for k, ps in enumerate(rank):
                lines.append(f'  "r{n}_{k}";')
                for p in ps:
                    lines.append(f'  "r{n - 1}_{p}" -> "r{n}_{k}";')
        lines.append("}")
        return "\n".join(lines)


def build_poset(n_max: int, guard_elements: int = 5_000_000) -> PosetSlice:
    """The triangle poset on ranks 0..n_max, with planar child order."""
    parents: list[list[tuple[int, ...]]] = [[()]]
    child_order: list[list[tuple[int, ...]]] = []
    # rank 1: the two entries of row 1 cover the bottom
    parents.append([(0,), (0,)])
    child_order.append([(0, 1)])
    row = first_row(1)
    total = 3
    for n in range(1, n_max):
        plan = production_plan(row)
        rank_parents: list[tuple[int, ...]] = []
        order: list[list[int]] = [[] for _ in row.entries]
        for prod in plan:
            if prod.kind == "middle":
                (a,) = prod.parents
                f = len(rank_parents)
                rank_parents.extend([(a,), (a,)])
                order[a].extend([f, f + 1])
            elif prod.kind == "pair":
                e, b = prod.parents
                f = len(rank_parents)
                rank_parents.extend([(e,), (e, b), (b,)])
                order[e].extend([f, f + 1])
                order[b].extend([f + 1, f + 2])
            elif prod.kind == "lead":
                (b,) = prod.parents
                f = len(rank_parents)
                rank_parents.extend([(b,), (b,)])
                order[b].extend([f, f + 1])
            else:  # trail
                (e,) = prod.parents
                f = len(rank_parents)
                rank_parents.extend([(e,), (e,)])
                order[e].extend([f, f + 1])
        total += len(rank_parents)
        if total > guard_elements:
            raise ResourceLimitError(f"poset would exceed {guard_elements} elements", limit_n=n + 1)
        parents.append(rank_parents)
        child_order.append([tuple(o) for o in order])
        row = next_row(row, 1)
    return PosetSlice(parents=parents, child_order=child_order)


# -- sigma edge labels --------------------------------------------------------

PHASE_CONVENTIONS = (
    ("zero-first-even", "label-first-odd"),
    ("zero-first-even", "zero-first-odd"),
    ("label-first-even", "label-first-odd"),
    ("label-first-even", "zero-first-odd"),
)


def _phase_starts_with_zero(convention: tuple[str, str], rank: int) -> bool:
    tag = convention[0] if rank % 2 == 0 else convention[1]
    return tag.startswith("zero")


def _assign_sigma(poset: PosetSlice, n_max: int, convention) -> list[list[int]] | None:
    """sigma per element, or None if chains disagree under this convention."""
    sigma: list[list[int]] = [[0]]
    for n in range(0, n_max):
        label_value = fibonacci(n + 2)
        next_sigma: list[int | None] = [None] * len(poset.parents[n + 1])
        zero_first = _phase_starts_with_zero(convention, n)
        for j, child_pair in enumerate(poset.child_order[n]):
            labels = (0, label_value) if zero_first else (label_value, 0)
            for child, lab in zip(child_pair, labels):
                value = sigma[n][j] + lab
                if next_sigma[child] is None:
                    next_sigma[child] = value
                elif next_sigma[child] != value:
                    return None
        if any(v is None for v in next_sigma):
            return None
        sigma.append(next_sigma)  # type: ignore[arg-type]
    return sigma


def _subset_sum_counts(n: int, limit: int) -> list[int]:
    """counts[s] = number of subsets of {F_2..F_{n+1}} summing to s <= limit."""
    counts = [0] * (limit + 1)
    counts[0] = 1
    for i in range(2, n + 2):
        f = fibonacci(i)
        for s in range(limit, f - 1, -1):
            if counts[s - f]:
                counts[s] += counts[s - f]
    return counts


def sigma_labels(poset: PosetSlice, n_max: int) -> dict:
    """Assign and verify the alternating edge labeling up to rank n_max.

    Tries the four phase conventions (which of an element's two child edges
    carries the zero label, per rank parity), keeps those for which all
    chains to an element share one sum, the rank-n labels are exactly
    {0..F_{n+3}-2}, and the chain count of each element equals the number of
    subsets of {F_2..F_{n+1}} with that sum.  Raises InvariantError if no
    convention survives.
    """
    if n_max > poset.depth:
        raise ValueError("poset not built deep enough")
    chain_counts = poset.chain_counts()
    surviving: list[dict] = []
    for convention in PHASE_CONVENTIONS:
        sigma = _assign_sigma(poset, n_max, convention)
        if sigma is None:
            continue
        ok = True
        for n in range(1, n_max + 1):
            labels = sigma[n]
            top = fibonacci(n + 3) - 2
            if sorted(labels) != list(range(top + 1)):
                ok = False
                break
            counts = _subset_sum_counts(n, top)
            if any(chain_counts[n][k] != counts[labels[k]] for k in range(len(labels))):
                ok = False
                break
        if ok:
            surviving.append({"convention": convention, "sigma": sigma})
    if not surviving:
        raise InvariantError("no edge-label phase convention satisfies the sigma invariants")
    chosen = surviving[0]
    sequences = {n: list(chosen["sigma"][n]) for n in range(1, n_max + 1)}
    return {
        "convention": chosen["convention"],
        "conventions_passing": [s["convention"] for s in surviving],
        "sigma": chosen["sigma"],
        "sequences": sequences,
    }


def _is_subsequence(short: list[int], long: list[int]) -> bool:
    it = iter(long)
    return all(any(x == y for y in it) for x in short)


def label_sequence_checks(sequences: dict[int, list[int]], n_max: int) -> dict:
    """Subsequence and order-consistency checks on the per-rank label sequences.

    Reports which reading-direction pair makes S(n) a subsequence of S(n+1)
    for every n < n_max, and which reading direction of S(n) is sorted under
    each Zeckendorf sentinel convention.
    """
    direction_pairs = []
    for d1 in ("forward", "reversed"):
        for d2 in ("forward", "reversed"):
            good = True
            for n in range(1, n_max):
                s = sequences[n] if d1 == "forward" else sequences[n][::-1]
                s2 = sequences[n + 1] if d2 == "forward" else sequences[n + 1][::-1]
                if not _is_subsequence(s, s2):
                    good = False
                    break
            if good:
                direction_pairs.append((d1, d2))
    order_matches = {}
    for parity in ("odd", "even"):
        for direction in ("forward", "reversed"):
            good = True
            for n in range(1, n_max + 1):
                s = sequences[n] if direction == "forward" else sequences[n][::-1]
                if any(prec_compare(s[i], s[i + 1], sentinel_parity=parity) != -1 for i in range(len(s) - 1)):
                    good = False
                    break
            if good:
                order_matches[(parity, direction)] = True
    return {
        "subsequence_direction_pairs": direction_pairs,
        "order_consistent": sorted(order_matches),
        "status": "pass" if direction_pairs and order_matches else "fail",
    }


# -- flag vectors -------------------------------------------------------------

def _reach_masks(poset: PosetSlice, lo: int, hi: int) -> list[int]:
    """For each element at rank lo, a bitmask of elements >= it at rank hi."""
    masks = [1 << k for k in range(len(poset.parents[hi]))]
    for n in range(hi - 1, lo - 1, -1):
        nxt = [0] * len(poset.parents[n])
        for k, ps in enumerate(poset.parents[n + 1]):
            for p in ps:
                nxt[p] |= masks[k]
        masks = nxt
    return masks


def flag_alpha_dp(poset: PosetSlice, ranks: tuple[int, ...]) -> int:
    """Number of chains hitting exactly the given ranks, by comparability DP."""
    if not ranks:
        return 1
    weights = [1] * len(poset.parents[ranks[0]])
    for lo, hi in zip(ranks, ranks[1:]):
        masks = _reach_masks(poset, lo, hi)
        nxt = [0] * len(poset.parents[hi])
        for u, w in enumerate(weights):
            if not w:
                continue
            m = masks[u]
            while m:
                v = (m & -m).bit_length() - 1
                nxt[v] += w
                m &= m - 1
        weights = nxt
    return sum(weights)


def flag_alpha_product(poset: PosetSlice, ranks: tuple[int, ...]) -> int:
    """q_{r1} q_{r2-r1} ... from the rank sizes (the upho product formula)."""
    sizes = poset.rank_sizes()
    total = 1
    prev = 0
    for r in ranks:
        total *= sizes[r - prev]
        prev = r
    return total


def flag_vectors(poset: PosetSlice, ranks) -> dict:
    """alpha by chain-count DP and by the product formula, and beta.

    beta(S) = sum over subsets T of S of (-1)^{|S - T|} alpha(T), computed
    from the DP alphas.
    """
    S = tuple(sorted(ranks))
    if S and S[-1] > poset.depth:
        raise ValueError("rank set exceeds built depth")
    alpha_dp = flag_alpha_dp(poset, S)
    alpha_prod = flag_alpha_product(poset, S)
    beta = 0
    for size in range(len(S) + 1):
        for T in combinations(S, size):
            term = flag_alpha_dp(poset, T)
            beta += term if (len(S) - size) % 2 == 0 else -term
    return {"alpha_dp": alpha_dp, "alpha_product": alpha_prod, "beta": beta}


# -- planar i-cover frontier automaton ----------------------------------------

@dataclass
class FrontierAutomaton:
    """Grows the planar poset where every element has ``i`` covers and
    consecutive covers of an element extend to a 2b-gon.

    The frontier is the current top rank: elements separated by gap
    countdowns in [1, b-1].  Siblings are created with countdown b-1; a
    countdown of 1 means the two adjacent elements share one child at the
    next step; larger countdowns carry over decremented by one.
    """

    i: int
    b: int
    gaps: list[int] = field(default_factory=list)
    rank: int = 0
    size: int = 1

    def __post_init__(self):
        if self.i < 2 or self.b < 2:
            raise ValueError("need i >= 2 and b >= 2")

    def step(self) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
        """Advance one rank; return (parents of new elements, child order)."""
        i, b = self.i, self.b
        parents: list[tuple[int, ...]] = []
        order: list[list[int]] = [[] for _ in range(self.size)]
        new_gaps: list[int] = []
        for u in range(self.size):
            for s in range(i):
                if s == 0 and u > 0 and self.gaps[u - 1] == 1:
                    parents[-1] = parents[-1] + (u,)  # shared child closes the 2b-gon
                    order[u].append(len(parents) - 1)
                    continue
                if s == 0 and u > 0:
                    new_gaps.append(self.gaps[u - 1] - 1)
                elif s > 0:
                    new_gaps.append(b - 1)
                parents.append((u,))
                order[u].append(len(parents) - 1)
        if any(g < 1 or g > b - 1 for g in new_gaps):
            raise InvariantError("gap countdown out of range", detail=self.rank + 1)
        self.gaps = new_gaps
        self.size = len(parents)
        self.rank += 1
        return parents, [tuple(o) for o in order]


def frontier_grow(i: int, b: int, n_max: int, guard_elements: int = 20_000_000) -> dict:
    """Grow P_{ib} to rank n_max; verify its counting identities.

    Returns rank sizes q, the chain-count rows, the derived r_n sequence, and
    a PosetSlice.  Raises InvariantError if q_n - q_{n-1} is not divisible by
    i - 1, if q_n != i q_{n-1} - (i-1) q_{n-b}, or if a chain-count row
    differs from the product prod_j (1 + x^{r_j} + ... + x^{(i-1) r_j}).
    """
    automaton = FrontierAutomaton(i=i, b=b)
    parents_all: list[list[tuple[int, ...]]] = [[()]]
    child_order_all: list[list[tuple[int, ...]]] = []
    q = [1]
    total = 1
    for n in range(1, n_max + 1):
        parents, order = automaton.step()
        total += len(parents)
        if total > guard_elements:
            raise ResourceLimitError(f"frontier would exceed {guard_elements} elements", limit_n=n)
        parents_all.append(parents)
        child_order_all.append(order)
        q.append(len(parents))
    poset = PosetSlice(parents=parents_all, child_order=child_order_all)
    recurrence_ok = all(q[n] == i * q[n - 1] - (i - 1) * q[n - b] for n in range(b, n_max + 1))
    seeds_ok = all(q[n] == i**n for n in range(0, min(b, n_max + 1)))
    if not (recurrence_ok and seeds_ok):
        raise InvariantError("rank sizes fail the q-recurrence")
    r: list[int] = []
    for n in range(1, n_max + 1):
        diff = q[n] - q[n - 1]
        if diff % (i - 1) != 0:
            raise InvariantError(f"q_{n} - q_{n - 1} not divisible by {i - 1}", detail=n)
        r.append(diff // (i - 1))
    counts = poset.chain_counts()
    dense = [1]
    for n in range(1, n_max + 1):
        shift = (i - 1) * r[n - 1]
        new = dense + [0] * shift
        for s in range(1, i):
            e = s * r[n - 1]
            for idx, c in enumerate(dense):
                new[e + idx] += c
        dense = new
        if dense != counts[n]:
            raise InvariantError("chain-count row differs from the product identity", detail=n)
    return {"q": q, "r": r, "chain_counts": counts, "poset": poset}


# -- upho self-similarity ------------------------------------------------------

def _extract_filter(poset: PosetSlice, rank: int, index: int, depth: int) -> PosetSlice:
    """The subposet of elements >= the given element, truncated to ``depth`` ranks."""
    keep: list[dict[int, int]] = [{index: 0}]
    parents: list[list[tuple[int, ...]]] = [[()]]
    for d in range(1, depth + 1):
        n = rank + d
        cur: dict[int, int] = {}
        rank_parents: list[tuple[int, ...]] = []
        for k, ps in enumerate(poset.parents[n]):
            hit = tuple(keep[d - 1][p] for p in ps if p in keep[d - 1])
            if hit:
                cur[k] = len(rank_parents)
                rank_parents.append(hit)
        keep.append(cur)
        parents.append(rank_parents)
    return PosetSlice(parents=parents)


def _graded_isomorphic(p1: PosetSlice, p2: PosetSlice) -> bool:
    """Rank-respecting isomorphism test by backtracking with parent keys."""
    if p1.rank_sizes() != p2.rank_sizes():
        return False
    mapping: list[list[int | None]] = [[0]]

    def extend(rank: int) -> bool:
        if rank > p1.depth:
            return True
        pmap = mapping[rank - 1]
        keys1 = [tuple(sorted(pmap[p] for p in ps)) for ps in p1.parents[rank]]
        keys2 = [tuple(sorted(ps)) for ps in p2.parents[rank]]
        used = [False] * len(keys2)
        assign: list[int | None] = [None] * len(keys1)

        def backtrack(j: int) -> bool:
            if j == len(keys1):
                mapping.append(assign[:])
                if extend(rank + 1):
                    return True
                mapping.pop()
                return False
            for v, k2 in enumerate(keys2):
                if not used[v] and k2 == keys1[j]:
                    used[v] = True
                    assign[j] = v
                    if backtrack(j + 1):
                        return True
                    used[v] = False
                    assign[j] = None
            return False

        return backtrack(0)

    return extend(1)


def upho_check(poset: PosetSlice, depth: int, max_rank: int = 2) -> dict:
    """Check dual order ideals look like the whole poset, to the given depth.

    For every element of rank <= max_rank, the filter above it (truncated to
    ``depth`` ranks) must have the same rank profile as the poset itself and
    be isomorphic to its truncation.
    """
    if max_rank + depth > poset.depth:
        raise ValueError("poset not built deep enough for this check")
    template = PosetSlice(parents=[list(r) for r in poset.parents[: depth + 1]])
    profile = template.rank_sizes()
    failures = []
    for rank in range(0, max_rank + 1):
        for index in range(len(poset.parents[rank])):
            sub = _extract_filter(poset, rank, index, depth)
            if sub.rank_sizes() != profile:
                failures.append({"rank": rank, "index": index, "profile": sub.rank_sizes()})
            elif not _graded_isomorphic(sub, template):
                failures.append({"rank": rank, "index": index, "profile": "not isomorphic"})
    return {"status": "pass" if not failures else "fail", "depth": depth, "failures": failures}
