"""Coefficient statistics: correlation power sums, residue counts, predicates.

``corr_sum`` computes sum_k prod_j c(k+j)^alpha_j exactly over Z or Z[t];
window cells beyond the degree are exact zeros and annihilate the product.
``corr_series`` streams those sums along a growing product, one value per
factor count.  Large integer pipelines are delegated to the numpy engine in
``stream`` (cross-checked against the pure path in the tests).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .polynomials import CoeffPoly, ProductSpec, build_product, scalar_is_zero

# Above this predicted dense size, integer corr/residue pipelines use numpy.
FAST_ENGINE_THRESHOLD = 200_000


@dataclass(frozen=True)
class CorrSpec:
    """Window exponents (alpha_0, ..., alpha_{m-1}) of a correlation sum."""

    alpha: tuple[int, ...]

    def __post_init__(self):
        if not self.alpha:
            raise ValueError("alpha must be nonempty")
        if any(a < 0 for a in self.alpha):
            raise ValueError("alpha entries must be nonnegative")
        if not any(self.alpha):
            raise ValueError("alpha must contain a positive entry")

    @property
    def active(self) -> list[int]:
        """Offsets j with alpha_j > 0."""
        return [j for j, a in enumerate(self.alpha) if a > 0]


def _window_product(p: CoeffPoly, k: int, spec: CorrSpec):
    prod = 1
    for j in spec.active:
        c = p.coeff(k + j)
        if scalar_is_zero(c):
            return 0
        prod = prod * (c ** spec.alpha[j])
    return prod


def corr_sum(p: CoeffPoly, spec: CorrSpec):
    """sum_{k >= 0} prod_j c(k+j)^{alpha_j}, exact over the scalar ring."""
    if p.is_zero():
        return 0
    active = spec.active
    top = active[-1]
    if p.is_dense:
        total = 0
        for k in range(max(0, p.base - top), p.degree - top + 1):
            total = total + _window_product(p, k, spec)
        return total
    ks = sorted({e - j for e, _ in p.items() for j in active if e - j >= 0})
    total = 0
    for k in ks:
        total = total + _window_product(p, k, spec)
    return total


def corr_series(spec: ProductSpec, alpha: CorrSpec, n_max: int, engine: str = "auto") -> list:
    """[v(0), ..., v(n_max)] where v(n) uses the n-factor partial product.

    ``engine``: "pure" runs entirely on Python ints/TPoly; "fast" uses the
    numpy streaming engine (integer coefficients only); "auto" picks "fast"
    for large integer pipelines.
    """
    full = replace(spec, n=n_max)
    if engine == "auto":
        symbolic = any(not isinstance(aj, int) for aj in spec.a) or (
            spec.prefactor is not None and spec.prefactor.has_symbolic_coeffs()
        )
        big = full.degree_bound() + 1 > FAST_ENGINE_THRESHOLD
        engine = "pure" if (symbolic or not big) else "fast"
    if engine == "fast":
        from .stream import corr_series_fast

        return corr_series_fast(full, alpha, n_max)
    if engine != "pure":
        raise ValueError(f"unknown engine {engine!r}")
    out: list = []
    build_product(full, callback=lambda i, poly: out.append(corr_sum(poly, alpha)))
    return out


def residue_count(p: CoeffPoly, m: int, a: int) -> int:
    """Number of k in [0, deg p] with c(k) congruent to a mod m."""
    if m < 2 or not 0 <= a < m:
        raise ValueError("need m >= 2 and 0 <= a < m")
    if p.has_symbolic_coeffs():
        raise ValueError("residue counts need integer coefficients; specialize t first")
    if p.is_zero():
        return 0
    deg = p.degree
    if p.is_dense and p.base == 0:
        return sum(1 for c in p._list if c % m == a)
    count = sum(1 for _, c in p.items() if c % m == a)
    if a == 0:
        count += (deg + 1) - p.nonzero_count()
    return count


def residue_series(spec: ProductSpec, m: int, n_max: int, engine: str = "auto") -> list[list[int]]:
    """Per n in 0..n_max, the counts [h(n, a) for a in 0..m-1] for the product.

    Uses the byte-wide mod-m numpy pipeline for large products.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    full = replace(spec, n=n_max)
    if engine == "auto":
        big = full.degree_bound() + 1 > FAST_ENGINE_THRESHOLD
        engine = "fast" if big else "pure"
    if engine == "fast":
        from .stream import residue_series_fast

        return residue_series_fast(full, m, n_max)
    out: list[list[int]] = []
    build_product(full, callback=lambda i, poly: out.append([residue_count(poly, m, a) for a in range(m)]))
    return out


def coefficient_value_predicate(p: CoeffPoly, allowed) -> bool:
    """True iff every nonzero coefficient lies in ``allowed``."""
    allowed = set(allowed)
    return all(c in allowed for _, c in p.items())
