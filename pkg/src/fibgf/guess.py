"""Exact rational generating-function fitting and expansion.

``guess_rational`` finds the smallest-denominator rational function whose
power series matches an integer (or rational) sequence, by exact linear
solving on a prefix and verification on withheld trailing terms.  No
floating point anywhere.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd

from .polynomials import TPoly


def _strip(seq) -> tuple:
    cs = list(seq)
    while cs and (cs[-1] == 0 if not isinstance(cs[-1], TPoly) else cs[-1].is_zero()):
        cs.pop()
    return tuple(cs)


def _pmul(a, b):
    """Dense polynomial product over any scalar ring."""
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u == 0:
            continue
        for j, v in enumerate(b):
            if v == 0:
                continue
            out[i + j] = out[i + j] + u * v
    return tuple(out)


class RationalFunc:
    """num/den with ascending coefficients over int, Fraction, or TPoly."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        num = _strip(num)
        den = _strip(den)
        if not den:
            raise ValueError("denominator must be nonzero")
        self.num = num
        self.den = den

    def __repr__(self) -> str:
        return f"RationalFunc(num={list(self.num)}, den={list(self.den)})"

    @property
    def num_degree(self) -> int:
        return len(self.num) - 1

    @property
    def den_degree(self) -> int:
        return len(self.den) - 1

    def series(self, n_terms: int) -> list:
        """First n_terms power-series coefficients, exactly."""
        d0 = self.den[0]
        is_unit = d0 == 1 or d0 == -1
        if (isinstance(d0, TPoly) and d0.is_zero()) or d0 == 0:
            raise ValueError("denominator constant term must be invertible")
        out: list = []
        for k in range(n_terms):
            acc = self.num[k] if k < len(self.num) else 0
            for j in range(1, min(k, self.den_degree) + 1):
                acc = acc - self.den[j] * out[k - j]
            if is_unit:
                out.append(acc if d0 == 1 else -acc)
            else:
                if isinstance(acc, TPoly) or isinstance(d0, TPoly):
                    raise ValueError("cannot divide TPoly coefficients by a non-unit")
                out.append(Fraction(acc, 1) / Fraction(d0, 1))
        return out

    def same_function(self, other: "RationalFunc") -> bool:
        """True iff num1*den2 == num2*den1 (equality as rational functions)."""
        return _pmul(self.num, other.den) == _pmul(other.num, self.den)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunc):
            return NotImplemented
        return self.same_function(other)

    def __hash__(self):
        return hash((self.integer_pair()))

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.num + self.den)

    def integer_pair(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Primitive integer (num, den) with den constant term > 0.

        Only defined for numeric (int/Fraction) coefficients.
        """
        coeffs = [Fraction(c) for c in self.num + self.den]
        if not coeffs:
            return (), tuple(int(c) for c in self.den)
        lcm = 1
        for c in coeffs:
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        nums = [int(c * lcm) for c in coeffs]
        g = 0
        for v in nums:
            g = gcd(g, v)
        g = g or 1
        nums = [v // g for v in nums]
        num = tuple(nums[: len(self.num)])
        den = tuple(nums[len(self.num):])
        lead = next((c for c in den if c != 0), 1)
        if lead < 0:
            num = tuple(-v for v in num)
            den = tuple(-v for v in den)
        return num, den

    def reduced(self) -> "RationalFunc":
        """Cancel the gcd over Q[x] and normalize den(0) = 1 (numeric only)."""
        num = [Fraction(c) for c in self.num]
        den = [Fraction(c) for c in self.den]
        if num:
            g = _poly_gcd(num, den)
            if len(g) > 1:
                num = _poly_divexact(num, g)
                den = _poly_divexact(den, g)
        d0 = den[0]
        if d0 == 0:
            raise ValueError("reduced denominator has zero constant term")
        num = [c / d0 for c in num]
        den = [c / d0 for c in den]
        ints = all(c.denominator == 1 for c in num + den)
        if ints:
            return RationalFunc([int(c) for c in num], [int(c) for c in den])
        return RationalFunc(num, den)

    def specialize_t(self, t_value: int) -> "RationalFunc":
        def sp(c):
            return c.evaluate(t_value) if isinstance(c, TPoly) else c

        return RationalFunc([sp(c) for c in self.num], [sp(c) for c in self.den])

    def to_json_dict(self) -> dict:
        def enc(c):
            if isinstance(c, TPoly):
                return [str(v) for v in (c.c or (0,))]
            return str(c)

        return {"num": [enc(c) for c in self.num], "den": [enc(c) for c in self.den]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> "RationalFunc":
        def dec(c):
            if isinstance(c, list):
                ints = [int(v) for v in c]
                return ints[0] if len(ints) == 1 else TPoly(ints)
            if "/" in str(c):
                return Fraction(c)
            return int(c)

        return cls([dec(c) for c in data["num"]], [dec(c) for c in data["den"]])


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [Fraction(0)] * max(len(a) - db, 0)
    while len(a) - 1 >= db and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        k = len(a) - 1 - db
        f = a[-1] / lb
        q[k] = f
        for i in range(len(b)):
            a[k + i] -= f * b[i]
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return q, a


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    while b and any(b):
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a and a[-1] != 0:
        lead = a[-1]
        a = [c / lead for c in a]
    return a or [Fraction(1)]


def _poly_divexact(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    q, r = _poly_divmod(list(a), list(b))
    if any(r):
        raise ArithmeticError("not an exact polynomial division")
    return q


def _solve_affine(rows: list[list[Fraction]], rhs: list[Fraction]):
    """One exact solution of rows*x = rhs with free variables set to 0.

    Returns (solution, n_free) or None when inconsistent.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    aug = [list(r) + [v] for r, v in zip(rows, rhs)]
    pivots: list[int] = []
    row = 0
    for col in range(n):
        sel = next((r for r in range(row, m) if aug[r][col] != 0), None)
        if sel is None:
            continue
        aug[row], aug[sel] = aug[sel], aug[row]
        pv = aug[row][col]
        aug[row] = [v / pv for v in aug[row]]
        for r in range(m):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    for r in range(row, m):
        if aug[r][n] != 0:
            return None
    x = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        x[col] = aug[r][n]
    return x, n - len(pivots)


def _candidate(seq: list[Fraction], d: int, num_extra: int, fit_len: int):
    """Fit a denominator of degree d on seq[:fit_len]; None if impossible."""
    e_max = d + num_extra
    rows, rhs = [], []
    for n in range(e_max + 1, fit_len):
        rows.append([seq[n - j] if n - j >= 0 else Fraction(0) for j in range(1, d + 1)])
        rhs.append(-seq[n])
    if d == 0:
        q = []
        free = 0
        if any(v != 0 for v in rhs):
            return None
    else:
        if not rows:
            return None
        solved = _solve_affine(rows, rhs)
        if solved is None:
            return None
        q, free = solved
    den = [Fraction(1)] + list(q)
    num = []
    for n in range(0, e_max + 1):
        if n >= len(seq):
            break
        acc = seq[n]
        for j in range(1, min(n, d) + 1):
            acc += den[j] * seq[n - j]
        num.append(acc)
    return RationalFunc(num, den), free


def guess_rational(seq, den_max: int, num_extra: int = 0, holdout: int = 6):
    """Smallest-denominator rational fit of ``seq``, or None.

    Searches denominator degrees d = 0..den_max (capped by data supply: a
    degree is only attempted when the prefix determines it), fits the linear
    system exactly on all but the final ``holdout`` terms, and accepts only
    if the expansion reproduces every provided term including the holdout.
    """
    if den_max < 0 or holdout < 0 or num_extra < 0:
        raise ValueError("den_max, num_extra, holdout must be nonnegative")
    values = [Fraction(v) for v in seq]
    n_terms = len(values)
    if n_terms < 2 + num_extra + holdout:
        raise ValueError(
            f"need at least {2 + num_extra + holdout} terms, got {n_terms}"
        )
    effective_max = min(den_max, (n_terms - num_extra - holdout) // 2)
    fit_len = n_terms - holdout
    for d in range(0, effective_max + 1):
        got = _candidate(values, d, num_extra, fit_len)
        if got is None:
            continue
        rf, free = got
        if [Fraction(v) for v in rf.series(n_terms)] == values:
            return rf.reduced()
        if free > 0:
            # underdetermined prefix: retry with the holdout terms included
            got = _candidate(values, d, num_extra, n_terms)
            if got is not None:
                rf, _ = got
                if [Fraction(v) for v in rf.series(n_terms)] == values:
                    return rf.reduced()
    return None


def series_expand(rf: RationalFunc, n_terms: int) -> list:
    """Exact power-series coefficients of a rational function."""
    return rf.series(n_terms)


def check_even_part(rf: RationalFunc) -> bool:
    """True iff the numerator equals the even part of the denominator."""
    if not rf.is_integral():
        num, den = rf.integer_pair()
    else:
        num, den = rf.num, rf.den
    even = _strip([c if k % 2 == 0 else 0 for k, c in enumerate(den)])
    return tuple(num) == tuple(even)


def check_drx_pattern(fits: list[tuple[int, RationalFunc]], r: int) -> dict:
    """Structural check of the k-uniform denominator pattern on fitted forms.

    For each (k, f): the denominator support must lie in {0,1} union
    {jk, jk+1 : 1 <= j <= m}; the numerator must consist of the x^{jk} terms
    of the denominator; the coefficient vector (a_0..a_{2m+1}) must not
    depend on k; and the largest nonzero index must be odd.  Violations are
    reported as evidence, not raised.
    """
    if len(fits) < 1:
        raise ValueError("need at least one fitted form")
    report = {"r": r, "k_values": [k for k, _ in fits], "violations": [], "a": None, "m": None}
    a_by_k = {}
    for k, rf in fits:
        num, den = rf.integer_pair()
        den_deg = len(den) - 1
        if k < 2:
            report["violations"].append(f"k={k}: need k >= 2")
            continue
        m = max(1, (den_deg - 1 + k - 1) // k)
        allowed = {0, 1} | {j * k for j in range(1, m + 1)} | {j * k + 1 for j in range(1, m + 1)}
        support = {e for e, c in enumerate(den) if c != 0}
        if not support <= allowed:
            report["violations"].append(f"k={k}: denominator support {sorted(support - allowed)} outside pattern")
            continue
        a = [0] * (2 * m + 2)
        a[0] = den[0]
        a[1] = den[1] if len(den) > 1 else 0
        for j in range(1, m + 1):
            a[2 * j] = den[j * k] if j * k < len(den) else 0
            a[2 * j + 1] = den[j * k + 1] if j * k + 1 < len(den) else 0
        expected_num = [0] * (m * k + 1)
        expected_num[0] = a[0]
        for j in range(1, m + 1):
            expected_num[j * k] = a[2 * j]
        if tuple(_strip(expected_num)) != tuple(num):
            report["violations"].append(f"k={k}: numerator is not the x^(jk) part of the denominator")
        last = max((i for i, v in enumerate(a) if v != 0), default=0)
        if last % 2 == 0:
            report["violations"].append(f"k={k}: largest nonzero coefficient index {last} is even")
        a_by_k[k] = tuple(a)
    vectors = set(a_by_k.values())
    if len(vectors) > 1:
        report["violations"].append(f"coefficient vectors differ across k: {sorted(a_by_k.items())}")
    if vectors:
        a = sorted(a_by_k.items())[0][1]
        report["a"] = list(a)
        report["m"] = (len(a) - 2) // 2
    report["status"] = "pass" if not report["violations"] else "violated"
    return report
