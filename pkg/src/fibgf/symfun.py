"""Truncated symmetric functions for the flag structure of the planar posets.

Expansions are stored as partition -> Fraction maps up to a degree cap.
Basis changes go through brute-force expansion of power sums into monomials
over D variables, so every conversion is exact and independently checkable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .guess import _solve_affine


def partitions_of(n: int, max_part: int | None = None):
    """All partitions of n as weakly decreasing tuples."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def z_of(partition: tuple[int, ...]) -> int:
    """prod_i i^{m_i} m_i! over part multiplicities."""
    z = 1
    mult: dict[int, int] = {}
    for part in partition:
        mult[part] = mult.get(part, 0) + 1
    for part, m in mult.items():
        z *= part**m * factorial(m)
    return z


def _dict_mul(a: dict, b: dict, cap: int | None = None) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if cap is not None and sum(e) > cap:
                continue
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c != 0}


def _power_sum_poly(k: int, n_vars: int) -> dict:
    out = {}
    for i in range(n_vars):
        e = [0] * n_vars
        e[i] = k
        out[tuple(e)] = 1
    return out


@lru_cache(maxsize=None)
def power_to_monomial(n: int) -> dict[tuple[int, ...], dict[tuple[int, ...], int]]:
    """For each partition lambda of n: the m-basis coefficients of p_lambda.

    Computed by honest expansion in n variables; the coefficient of
    m_mu is read off the representative monomial with sorted exponents.
    """
    n_vars = max(n, 1)
    table: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}
    for lam in partitions_of(n):
        poly = {tuple([0] * n_vars): 1}
        for part in lam:
            poly = _dict_mul(poly, _power_sum_poly(part, n_vars))
        coeffs: dict[tuple[int, ...], int] = {}
        for mu in partitions_of(n):
            rep = tuple(list(mu) + [0] * (n_vars - len(mu)))
            c = poly.get(rep, 0)
            if c:
                coeffs[mu] = c
        table[lam] = coeffs
    return table


class SymExpansion:
    """A symmetric function truncated to degree <= cap, in one named basis."""

    def __init__(self, basis: str, cap: int, coeffs: dict):
        if basis not in ("monomial", "powersum", "forgotten"):
            raise ValueError("basis must be monomial, powersum, or forgotten")
        self.basis = basis
        self.cap = cap
        self.coeffs = {lam: Fraction(c) for lam, c in coeffs.items() if c != 0}
        if any(sum(lam) > cap for lam in self.coeffs):
            raise ValueError("coefficient above the degree cap")

    def coeff(self, lam: tuple[int, ...]) -> Fraction:
        return self.coeffs.get(tuple(lam), Fraction(0))

    def degree_slice(self, n: int) -> dict:
        return {lam: c for lam, c in self.coeffs.items() if sum(lam) == n}

    def __repr__(self):
        return f"SymExpansion({self.basis}, cap={self.cap}, {len(self.coeffs)} terms)"

    def format_terms(self) -> str:
        sym = {"monomial": "m", "powersum": "p", "forgotten": "fo"}[self.basis]
        parts = []
        for lam in sorted(self.coeffs, key=lambda t: (sum(t), t)):
            parts.append(f"{self.coeffs[lam]} * {sym}_{list(lam)}")
        return " + ".join(parts) if parts else "0"


def monomial_to_powersum(exp: SymExpansion) -> SymExpansion:
    """Exact basis change m -> p, degree by degree."""
    if exp.basis != "monomial":
        raise ValueError("expected a monomial expansion")
    out: dict = {}
    for n in range(exp.cap + 1):
        lams = list(partitions_of(n))
        if not lams:
            continue
        table = power_to_monomial(n)
        rows = [[Fraction(table[lam].get(mu, 0)) for lam in lams] for mu in lams]
        rhs = [exp.coeff(mu) for mu in lams]
        solved = _solve_affine(rows, rhs)
        if solved is None:
            raise ArithmeticError("power-sum transition matrix is singular")
        for lam, c in zip(lams, solved[0]):
            if c:
                out[lam] = c
    return SymExpansion("powersum", exp.cap, out)


def powersum_to_monomial(exp: SymExpansion) -> SymExpansion:
    if exp.basis != "powersum":
        raise ValueError("expected a powersum expansion")
    out: dict = {}
    for n in range(exp.cap + 1):
        table = power_to_monomial(n)
        for lam, c in exp.degree_slice(n).items():
            for mu, t in table[lam].items():
                out[mu] = out.get(mu, Fraction(0)) + c * t
    return SymExpansion("monomial", exp.cap, out)


def omega_powersum(exp: SymExpansion) -> SymExpansion:
    """The standard involution: p_lambda -> (-1)^{|lambda| - len(lambda)} p_lambda."""
    if exp.basis != "powersum":
        raise ValueError("expected a powersum expansion")
    out = {lam: c * (-1) ** (sum(lam) - len(lam)) for lam, c in exp.coeffs.items()}
    return SymExpansion("powersum", exp.cap, out)


def forgotten_coefficients(exp_monomial: SymExpansion) -> dict:
    """fo-basis coefficients of E = m-basis coefficients of omega(E)."""
    p = monomial_to_powersum(exp_monomial)
    return powersum_to_monomial(omega_powersum(p)).coeffs


# -- the planar-poset instances -------------------------------------------------

def rank_sizes(i: int, b: int, n_max: int) -> list[int]:
    """q_n for the i-cover 2b-gon poset: q_n = i q_{n-1} - (i-1) q_{n-b}."""
    q = [1]
    for n in range(1, n_max + 1):
        if n < b:
            q.append(i**n)
        else:
            q.append(i * q[n - 1] - (i - 1) * q[n - b])
    return q


def tilde_q(i: int, b: int, n: int, convention: str = "powersum") -> int:
    """Power sums of the roots of 1 - i x + (i-1) x^b (same recurrence as q_n).

    convention "powersum" (default) seeds the 0-index with b, giving exactly
    sum_h alpha_h^n; convention "unit-seed" uses 1 there instead.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    seed0 = {"powersum": b, "unit-seed": 1}[convention]
    vals = [seed0]
    for m in range(1, n + 1):
        if m < b:
            vals.append(i**m)
        else:
            vals.append(i * vals[m - 1] - (i - 1) * vals[m - b])
    return vals[n]


def newton_power_sums(i: int, b: int, n_max: int) -> list[int]:
    """Independent oracle: power sums via Newton's identities on
    Q(x) = 1 - i x + (i-1) x^b."""
    c = [0] * (b + 1)
    c[0] = 1
    c[1] = -i
    c[b] += i - 1
    s = [b]
    for n in range(1, n_max + 1):
        acc = -n * c[n] if n <= b else 0
        for j in range(1, min(n, b) + 1):
            if j < n:
                acc -= c[j] * s[n - j]
        s.append(acc)
    return s


def ep_monomial(i: int, b: int, cap: int) -> SymExpansion:
    """The flag symmetric function in the monomial basis:
    coefficient of m_lambda is prod_j q_{lambda_j}."""
    q = rank_sizes(i, b, cap)
    coeffs = {}
    for n in range(cap + 1):
        for lam in partitions_of(n):
            prod = 1
            for part in lam:
                prod *= q[part]
            coeffs[lam] = prod
    return SymExpansion("monomial", cap, coeffs)


def ep_from_rank_product(i: int, b: int, cap: int) -> SymExpansion:
    """Oracle: expand prod_{m=1}^{cap} Phi(x_m) truncated to degree cap."""
    q = rank_sizes(i, b, cap)
    n_vars = max(cap, 1)
    poly = {tuple([0] * n_vars): Fraction(1)}
    for v in range(n_vars):
        factor = {}
        for d in range(cap + 1):
            e = [0] * n_vars
            e[v] = d
            factor[tuple(e)] = Fraction(q[d])
        poly = _dict_mul(poly, factor, cap=cap)
    coeffs = {}
    for n in range(cap + 1):
        for lam in partitions_of(n):
            rep = tuple(list(lam) + [0] * (n_vars - len(lam)))
            c = poly.get(rep, 0)
            if c:
                coeffs[lam] = c
    return SymExpansion("monomial", cap, coeffs)


def verify_powersum_expansion(i: int, b: int, cap: int, convention: str = "powersum") -> dict:
    """Check the p-basis coefficients equal z_lambda^{-1} prod tilde_q(lambda_j)."""
    exp = monomial_to_powersum(ep_monomial(i, b, cap))
    mismatches = []
    for n in range(cap + 1):
        for lam in partitions_of(n):
            prod = 1
            for part in lam:
                prod *= tilde_q(i, b, part, convention)
            want = Fraction(prod, z_of(lam))
            got = exp.coeff(lam)
            if got != want:
                mismatches.append({"lambda": lam, "got": str(got), "want": str(want)})
    return {
        "status": "pass" if not mismatches else "fail",
        "i": i,
        "b": b,
        "cap": cap,
        "convention": convention,
        "mismatches": mismatches[:5],
    }


def verify_forgotten_expansion(i: int, b: int, cap: int) -> dict:
    """Check the fo-basis support is {b^j 1^{n-jb}} with coefficients
    (-1)^{jb} (i-1)^j i^{n-jb}."""
    fo = forgotten_coefficients(ep_monomial(i, b, cap))
    mismatches = []
    for n in range(cap + 1):
        for lam in partitions_of(n):
            j = sum(1 for part in lam if part == b)
            shape_ok = all(part in (1, b) for part in lam) and j * b + (len(lam) - j) == n
            if b == 1:
                shape_ok = all(part == 1 for part in lam)
            want = Fraction((-1) ** (j * b) * (i - 1) ** j * i ** (n - j * b)) if shape_ok else Fraction(0)
            got = fo.get(lam, Fraction(0))
            if got != want:
                mismatches.append({"lambda": lam, "got": str(got), "want": str(want)})
    return {
        "status": "pass" if not mismatches else "fail",
        "i": i,
        "b": b,
        "cap": cap,
        "mismatches": mismatches[:5],
    }
