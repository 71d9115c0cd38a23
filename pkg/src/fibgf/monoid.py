"""Monoids of equal-weight binary-word tuples under concatenation.

An element is an r-tuple of 0/1 rows of one length n whose weighted sums
sum_i a_i F^{(k)}_{i+k-1} agree across rows.  For r = 2 the monoid is freely
generated by an explicit two-parameter family; ``free_factorize`` recovers
the factorization and ``transfer_series`` expands 1/(1 - G) from the
generator census.  ``word_classes`` and ``move_connectivity`` expose the
rewriting side: baa <-> abb on letter words and 001 <-> 110 on weight
vectors.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvariantError, ResourceLimitError
from .polynomials import TPoly
from .sequences import kbonacci, phi_power, phi_power_reduce

DEFAULT_CAPS = {2: 13, 3: 10}


@lru_cache(maxsize=None)
def _weights(k: int, n: int) -> tuple[int, ...]:
    seq = kbonacci(k)
    return tuple(seq.term(i + k - 1) for i in range(1, n + 1))


@dataclass(frozen=True)
class MonoidWord:
    """An r-tuple of equal-length binary rows with equal weighted sums."""

    rows: tuple[tuple[int, ...], ...]
    k: int

    @property
    def length(self) -> int:
        return len(self.rows[0])

    @property
    def ones_count(self) -> int:
        return sum(sum(row) for row in self.rows)

    def weight(self) -> int:
        w = _weights(self.k, self.length)
        sums = {sum(a * wi for a, wi in zip(row, w)) for row in self.rows}
        if len(sums) != 1:
            raise InvariantError("rows have unequal weights", detail=self.rows)
        return sums.pop()

    def concat(self, other: "MonoidWord") -> "MonoidWord":
        if other.k != self.k or len(other.rows) != len(self.rows):
            raise ValueError("mismatched monoid words")
        return MonoidWord(tuple(a + b for a, b in zip(self.rows, other.rows)), self.k)

    def to_json_obj(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    @classmethod
    def from_json_obj(cls, data, k: int) -> "MonoidWord":
        return cls(tuple(tuple(int(v) for v in row) for row in data), k)


def enumerate_elements(k: int, r: int, n: int, cap: int | None = None) -> list[MonoidWord]:
    """All r-tuples of length-n rows with equal weighted sums, by pruned DFS.

    The DFS state is the vector of weight differences against row 0; branches
    whose difference cannot be closed by the remaining suffix weight are cut.
    """
    if r < 2:
        raise ValueError("need r >= 2")
    if n < 0:
        raise ValueError("need n >= 0")
    limit = cap if cap is not None else DEFAULT_CAPS.get(r, 8)
    if n > limit:
        raise ResourceLimitError(f"enumeration capped at n = {limit} for r = {r}", limit_n=n)
    if r == 2:
        return _enumerate_pairs(k, n)
    w = _weights(k, n)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + w[i]
    columns = [tuple((c >> j) & 1 for j in range(r)) for c in range(1 << r)]
    out: list[MonoidWord] = []
    rows = [[0] * n for _ in range(r)]

    def walk(pos: int, diffs: tuple[int, ...]):
        if pos == n:
            if all(d == 0 for d in diffs):
                out.append(MonoidWord(tuple(tuple(row) for row in rows), k))
            return
        rest = suffix[pos + 1]
        wi = w[pos]
        for col in columns:
            nd = tuple(d + (col[0] - col[j + 1]) * wi for j, d in enumerate(diffs))
            if all(abs(d) <= rest for d in nd):
                for j in range(r):
                    rows[j][pos] = col[j]
                walk(pos + 1, nd)
        for j in range(r):
            rows[j][pos] = 0

    walk(0, (0,) * (r - 1))
    return out


def _enumerate_pairs(k: int, n: int) -> list[MonoidWord]:
    """r = 2 specialization of the enumeration (single scalar difference)."""
    w = _weights(k, n)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + w[i]
    out: list[MonoidWord] = []
    top = [0] * n
    bot = [0] * n

    def walk(pos: int, d: int):
        if pos == n:
            if d == 0:
                out.append(MonoidWord((tuple(top), tuple(bot)), k))
            return
        rest = suffix[pos + 1]
        wi = w[pos]
        if -rest <= d <= rest:
            top[pos] = bot[pos] = 0
            walk(pos + 1, d)
            top[pos] = bot[pos] = 1
            walk(pos + 1, d)
            top[pos] = bot[pos] = 0
        up = d + wi
        if -rest <= up <= rest:
            top[pos] = 1
            bot[pos] = 0
            walk(pos + 1, up)
            top[pos] = 0
        down = d - wi
        if -rest <= down <= rest:
            bot[pos] = 1
            walk(pos + 1, down)
            bot[pos] = 0

    walk(0, 0)
    return out


def _generator_rows(k: int, j: int, stars: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    top: list[int] = [1] * k
    bottom: list[int] = [0] * k
    for s in stars:
        top.append(s)
        bottom.append(s)
        top.extend([1] * (k - 1))
        bottom.extend([0] * (k - 1))
    top.append(0)
    bottom.append(1)
    return tuple(top), tuple(bottom)


def generators(k: int, max_len: int) -> list[MonoidWord]:
    """The free generators of the r = 2 monoid up to the given length.

    Two length-1 generators, plus for each j >= 0 with (j+1)k+1 <= max_len
    the 2 * 2^j generators of length (j+1)k+1 (both row orders, all star
    columns).
    """
    if k < 2:
        raise ValueError("need k >= 2")
    out = []
    if max_len >= 1:
        out.append(MonoidWord(((0,), (0,)), k))
        out.append(MonoidWord(((1,), (1,)), k))
    j = 0
    while (j + 1) * k + 1 <= max_len:
        for mask in range(1 << j):
            stars = tuple((mask >> m) & 1 for m in range(j))
            top, bottom = _generator_rows(k, j, stars)
            out.append(MonoidWord((top, bottom), k))
            out.append(MonoidWord((bottom, top), k))
        j += 1
    return out


def is_generator(word: MonoidWord) -> bool:
    """Structural membership test against the generator family."""
    if len(word.rows) != 2:
        return False
    n, k = word.length, word.k
    if n == 1:
        return word.rows[0] == word.rows[1]
    if (n - 1) % k != 0:
        return False
    j = (n - 1) // k - 1
    if j < 0:
        return False
    star_positions = {k + m * k for m in range(j)}
    for top, bottom in (word.rows, word.rows[::-1]):
        ok = True
        for p in range(n - 1):
            if p in star_positions:
                if top[p] != bottom[p]:
                    ok = False
                    break
            elif top[p] != 1 or bottom[p] != 0:
                ok = False
                break
        if ok and top[n - 1] == 0 and bottom[n - 1] == 1:
            return True
    return False


def generator_census_series(k: int, max_len: int, symbolic: bool = True) -> list:
    """[G_1, ..., G_max_len]: per length, the sum of t^{ones} over generators."""
    t = TPoly.t()
    census: list = [0] * (max_len + 1)
    for g in generators(k, max_len):
        term = t ** g.ones_count if symbolic else 1
        census[g.length] = census[g.length] + term
    return census[1:]


def closed_form_census_series(k: int, max_len: int) -> list:
    """The same census from the closed formula:
    (1+t^2) x + 2 sum_j t^{j(k-1)+k+1} (1+t^2)^j x^{jk+k+1}."""
    t = TPoly.t()
    out: list = [0] * (max_len + 1)
    if max_len >= 1:
        out[1] = 1 + t * t
    j = 0
    while j * k + k + 1 <= max_len:
        out[j * k + k + 1] = 2 * (t ** (j * (k - 1) + k + 1)) * ((1 + t * t) ** j)
        j += 1
    return out[1:]


def balanced_cut_positions(word: MonoidWord) -> list[int]:
    """Positions p (1 <= p <= n) where the length-p prefix has equal row weights."""
    w = _weights(word.k, word.length)
    diffs = [0] * (len(word.rows) - 1)
    cuts = []
    for p in range(word.length):
        for j in range(1, len(word.rows)):
            diffs[j - 1] += (word.rows[0][p] - word.rows[j][p]) * w[p]
        if all(d == 0 for d in diffs):
            cuts.append(p + 1)
    return cuts


def free_factorize(word: MonoidWord) -> list[MonoidWord]:
    """The unique factorization into generators, by greedy shortest prefixes.

    Raises InvariantError if a segment between balanced cuts is not a
    generator (this would contradict free generation).
    """
    if word.length == 0:
        return []
    cuts = balanced_cut_positions(word)
    if not cuts or cuts[-1] != word.length:
        raise InvariantError("word is not weight-balanced", detail=word.rows)
    pieces = []
    prev = 0
    for c in cuts:
        piece = MonoidWord(tuple(row[prev:c] for row in word.rows), word.k)
        if not is_generator(piece):
            raise InvariantError("segment between balanced cuts is not a generator", detail=piece.rows)
        pieces.append(piece)
        prev = c
    return pieces


def factorization_count(word: MonoidWord) -> int:
    """Number of ways to factor into generators (should be exactly 1)."""
    if word.length == 0:
        return 1
    cuts = [0] + balanced_cut_positions(word)
    ways = {0: 1}
    for ci in range(1, len(cuts)):
        total = 0
        for cj in range(ci):
            piece = MonoidWord(tuple(row[cuts[cj]:cuts[ci]] for row in word.rows), word.k)
            if is_generator(piece):
                total += ways.get(cuts[cj], 0)
        ways[cuts[ci]] = total
    return ways.get(word.length, 0)


def transfer_series(k: int, t, n_max: int) -> list:
    """Expand 1/(1 - G(x)) where G comes from the generator census.

    ``t`` may be 1 (plain counts), any int, or a TPoly for symbolic weights.
    """
    census = generator_census_series(k, n_max, symbolic=True)
    if isinstance(t, int):
        g = [c.evaluate(t) if isinstance(c, TPoly) else c for c in census]
    else:
        g = census
    out = [1]
    for n in range(1, n_max + 1):
        acc = 0
        for m in range(1, n + 1):
            gm = g[m - 1]
            if gm == 0:
                continue
            acc = acc + gm * out[n - m]
        out.append(acc)
    return out


# -- letter-word rewriting -----------------------------------------------------

def word_classes(n: int, cap: int = 14) -> list[int]:
    """Sorted multiset of class sizes of baa <-> abb rewriting on {a,b}^n.

    Words are encoded as n-bit integers with bit p = 1 for the letter b at
    position p (reading left to right).
    """
    if n > cap:
        raise ResourceLimitError(f"word classes capped at n = {cap}", limit_n=n)
    size = 1 << n
    parent = list(range(size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for w in range(size):
        for p in range(n - 2):
            window = (w >> p) & 7
            if window == 0b001:  # b a a at positions (p, p+1, p+2)
                union(w, (w ^ 0b001 << p) | (0b110 << p))
            # the reverse rewrite is covered by the forward one from the other word
    sizes: dict[int, int] = {}
    for w in range(size):
        r = find(w)
        sizes[r] = sizes.get(r, 0) + 1
    return sorted(sizes.values())


def class_power_sums(n: int, r: int, cap: int = 14) -> int:
    """sum of size^r over the rewrite classes of {a,b}^n."""
    return sum(s**r for s in word_classes(n, cap=cap))


def _move_targets(bits: tuple[int, ...]) -> list[tuple[int, ...]]:
    out = []
    for p in range(len(bits) - 2):
        window = bits[p : p + 3]
        if window == (0, 0, 1):
            out.append(bits[:p] + (1, 1, 0) + bits[p + 3 :])
        elif window == (1, 1, 0):
            out.append(bits[:p] + (0, 0, 1) + bits[p + 3 :])
    return out


def move_connectivity(alpha, beta, weight_mode: str = "fibonacci"):
    """A sequence of 001 <-> 110 moves from alpha to beta, or None.

    Both arguments are 0/1 vectors.  In "fibonacci" mode position i carries
    weight F_{i+2}; in "phi_powers" mode it carries phi^i.  Unequal weights
    raise ValueError; for equal weights the rewriting lemma promises a path.
    """
    alpha = tuple(int(b) for b in alpha)
    beta = tuple(int(b) for b in beta)
    if any(b not in (0, 1) for b in alpha + beta):
        raise ValueError("vectors must be 0/1")
    fib = kbonacci(2)
    if weight_mode == "fibonacci":
        total = sum(b * fib.term(i + 2) for i, b in enumerate(alpha))
        other = sum(b * fib.term(i + 2) for i, b in enumerate(beta))
        if total != other:
            raise ValueError("weight sums differ")
        length = 3
        while fib.term(length + 2) <= total:
            length += 1
    elif weight_mode == "phi_powers":
        total = phi_power_reduce(alpha)
        other = phi_power_reduce(beta)
        if total != other:
            raise ValueError("weight sums differ")
        length = 3
        while (total - phi_power(length)).sign() >= 0:
            length += 1
    else:
        raise ValueError("weight_mode must be 'fibonacci' or 'phi_powers'")
    length = max(length, len(alpha), len(beta)) + 2
    start = alpha + (0,) * (length - len(alpha))
    goal = beta + (0,) * (length - len(beta))
    if start == goal:
        return []
    seen = {start: None}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in _move_targets(cur):
            if nxt not in seen:
                seen[nxt] = cur
                if nxt == goal:
                    path = [nxt]
                    while seen[path[-1]] is not None:
                        path.append(seen[path[-1]])
                    return path[::-1][1:]  # states after each move; start omitted
                queue.append(nxt)
    return None
