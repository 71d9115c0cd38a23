"""Exact dense polynomial engine in x with coefficients in Z or Z[t].

``TPoly`` is a plain integer polynomial in the weight variable t; coefficient
"scalars" throughout the package are either Python ints (the degree-0 case,
kept as ints for speed) or ``TPoly`` values, which interoperate under +, -, *.

``CoeffPoly`` is a polynomial in x over those scalars, stored dense (list)
or, for very gappy exponent sequences, sparse (dict keyed by exponent).
``build_product`` expands products of the shape

    P(x) * prod_{i=1}^{n} (1 + a_1 x^{f_{i+off}} + ... + a_h x^{f_{i+off+h-1}})

by shifted adds, streaming each partial product to an optional callback.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .config import PYOBJ_BYTES_PER_COEFF, max_mem_bytes
from .errors import InvariantError, ResourceLimitError
from .sequences import GoldenInt, RecurrentSeq, phi_power


class TPoly:
    """Dense integer polynomial in t, ascending coefficients, immutable."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "c", tuple(cs))

    def __setattr__(self, *_):
        raise AttributeError("TPoly is immutable")

    @classmethod
    def const(cls, v: int) -> TPoly:
        return cls((v,))

    @classmethod
    def t(cls) -> TPoly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.c) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self) -> bool:
        return bool(self.c)

    @classmethod
    def _coerce(cls, x) -> "TPoly | None":
        if isinstance(x, TPoly):
            return x
        if isinstance(x, int):
            return cls((x,))
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self) -> int:
        return hash(self.c)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return TPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return TPoly(tuple(-v for v in self.c))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        if not a or not b:
            return TPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    if v:
                        out[i + j] += u * v
        return TPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined for TPoly")
        result = TPoly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def evaluate(self, v: int) -> int:
        acc = 0
        for coef in reversed(self.c):
            acc = acc * v + coef
        return acc

    def __repr__(self) -> str:
        return f"TPoly({list(self.c)})"

    def __str__(self) -> str:
        if not self.c:
            return "0"
        parts = []
        for i, v in enumerate(self.c):
            if v == 0:
                continue
            if i == 0:
                parts.append(str(v))
            else:
                mono = "t" if i == 1 else f"t^{i}"
                parts.append(mono if v == 1 else ("-" + mono if v == -1 else f"{v}*{mono}"))
        return " + ".join(parts).replace("+ -", "- ")


def scalar_is_zero(v) -> bool:
    return v == 0 if isinstance(v, int) else v.is_zero()


def scalar_to_tcoeffs(v) -> list[int]:
    """Scalar as an ascending t-coefficient list (for serialization)."""
    return [v] if isinstance(v, int) else list(v.c) or [0]


class CoeffPoly:
    """Polynomial in x over int/TPoly scalars; dense list or sparse map.

    ``base`` is the exponent of the first stored coefficient; dense storage
    holds coefficients of x^base .. x^degree contiguously, sparse storage maps
    exponents to nonzero scalars.  The zero polynomial has empty storage.
    """

    __slots__ = ("base", "_list", "_map")

    def __init__(self, coeffs=None, base: int = 0, sparse: dict | None = None):
        self.base = base
        self._list = None
        self._map = None
        if sparse is not None:
            self._map = {e: c for e, c in sparse.items() if not scalar_is_zero(c)}
            self.base = min(self._map) if self._map else 0
        else:
            cs = list(coeffs if coeffs is not None else [])
            while cs and scalar_is_zero(cs[-1]):
                cs.pop()
            lead = 0
            while lead < len(cs) and scalar_is_zero(cs[lead]):
                lead += 1
            self.base = base + lead
            self._list = cs[lead:]

    @classmethod
    def one(cls) -> CoeffPoly:
        return cls([1])

    @property
    def is_dense(self) -> bool:
        return self._list is not None

    def is_zero(self) -> bool:
        return not self._list if self.is_dense else not self._map

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        if self.is_dense:
            return self.base + len(self._list) - 1 if self._list else -1
        return max(self._map) if self._map else -1

    def coeff(self, k: int):
        """Coefficient of x^k (absolute exponent); 0 outside the support."""
        if self.is_dense:
            idx = k - self.base
            if 0 <= idx < len(self._list):
                return self._list[idx]
            return 0
        return self._map.get(k, 0)

    def items(self):
        """(exponent, coefficient) pairs of nonzero terms, ascending."""
        if self.is_dense:
            for i, c in enumerate(self._list):
                if not scalar_is_zero(c):
                    yield self.base + i, c
        else:
            for e in sorted(self._map):
                yield e, self._map[e]

    def nonzero_count(self) -> int:
        return sum(1 for _ in self.items())

    def coefficient_sequence(self) -> list:
        """The nonzero coefficients in exponent order."""
        return [c for _, c in self.items()]

    def dense_coefficients(self) -> list:
        """All coefficients of x^0..x^degree as a list (materializes zeros)."""
        if self.is_zero():
            return []
        out = [0] * (self.degree + 1)
        for e, c in self.items():
            out[e] = c
        return out

    def specialize(self, t_value: int) -> CoeffPoly:
        """Replace TPoly scalars by their value at an integer t."""
        if self.is_dense:
            vals = [c if isinstance(c, int) else c.evaluate(t_value) for c in self._list]
            return CoeffPoly(vals, base=self.base)
        vals = {e: (c if isinstance(c, int) else c.evaluate(t_value)) for e, c in self._map.items()}
        return CoeffPoly(sparse=vals)

    def has_symbolic_coeffs(self) -> bool:
        return any(isinstance(c, TPoly) for _, c in self.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoeffPoly):
            return NotImplemented
        if self.degree != other.degree:
            return False
        return all(self.coeff(k) == other.coeff(k) for k in range(self.degree + 1))

    def __repr__(self) -> str:
        kind = "dense" if self.is_dense else "sparse"
        return f"CoeffPoly({kind}, base={self.base}, degree={self.degree})"

    def to_json_dict(self) -> dict:
        return {
            "base": self.base,
            "coeffs": [
                [str(v) for v in scalar_to_tcoeffs(self.coeff(k))]
                for k in range(self.base, self.degree + 1)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> CoeffPoly:
        coeffs = []
        for inner in data["coeffs"]:
            ints = [int(v) for v in inner]
            coeffs.append(ints[0] if len(ints) == 1 else TPoly(ints))
        return cls(coeffs, base=int(data.get("base", 0)))


@dataclass(frozen=True)
class ProductSpec:
    """Description of a product P(x) * prod (1 + sum_j a_j x^{f_{i+offset+j-1}}).

    ``a`` has length ``h``; entries are ints or TPoly (so t-weights are
    expressible).  ``offset`` shifts the exponent sequence: factor i draws
    exponents f_{i+offset}, ..., f_{i+offset+h-1}.
    """

    exponent_seq: RecurrentSeq
    n: int
    h: int = 1
    a: tuple = (1,)
    offset: int = 0
    prefactor: CoeffPoly | None = None

    def __post_init__(self):
        if self.h < 1 or len(self.a) != self.h:
            raise ValueError("need h >= 1 and len(a) == h")
        if self.n < 0:
            raise ValueError("need n >= 0")

    def factor_terms(self, i: int) -> list[tuple]:
        """Nonzero (coefficient, exponent) terms of factor i (1-based), excluding the 1."""
        terms = []
        for j, aj in enumerate(self.a):
            if scalar_is_zero(aj):
                continue
            e = self.exponent_seq.term(i + self.offset + j)
            if e < 1:
                raise ValueError(f"factor {i}: exponent {e} at index {i + self.offset + j} must be >= 1")
            terms.append((aj, e))
        return terms

    def degree_bound(self) -> int:
        total = 0 if self.prefactor is None else max(self.prefactor.degree, 0)
        for i in range(1, self.n + 1):
            terms = self.factor_terms(i)
            if terms:
                total += max(e for _, e in terms)
        return total

    def nonzero_bound(self) -> int:
        """Upper bound on the number of nonzero coefficients (no-collision count)."""
        count = 1 if self.prefactor is None else max(self.prefactor.nonzero_count(), 1)
        for i in range(1, self.n + 1):
            count *= 1 + len(self.factor_terms(i))
        return count


def _guard_size(n_coeffs: int, at_n: int):
    if n_coeffs * PYOBJ_BYTES_PER_COEFF > max_mem_bytes():
        raise ResourceLimitError(
            f"dense product would need {n_coeffs} coefficients at factor {at_n}, "
            f"over the RGF_MAX_MEM_MB cap",
            limit_n=at_n,
        )


def _multiply_dense(coeffs: list, terms: list[tuple]) -> list:
    shift = max(e for _, e in terms) if terms else 0
    out = list(coeffs) + [0] * shift
    for aj, e in terms:
        if aj == 1:
            for idx, c in enumerate(coeffs):
                if not scalar_is_zero(c):
                    out[e + idx] = out[e + idx] + c
        else:
            for idx, c in enumerate(coeffs):
                if not scalar_is_zero(c):
                    out[e + idx] = out[e + idx] + aj * c
    return out


def _multiply_sparse(coeffs: dict, terms: list[tuple]) -> dict:
    out = dict(coeffs)
    for aj, e in terms:
        for k, c in coeffs.items():
            prev = out.get(e + k, 0)
            out[e + k] = prev + aj * c
    return {k: v for k, v in out.items() if not scalar_is_zero(v)}


def build_product(spec: ProductSpec, callback=None) -> CoeffPoly:
    """Expand the product exactly; stream partials to ``callback(i, poly)``.

    The callback, when given, receives the partial product after factor i for
    i = 0..n (i = 0 is the prefactor alone).  Dense storage is used unless the
    collision-free term count predicts density below 25%.
    """
    use_sparse = False
    deg_bound = spec.degree_bound()
    if deg_bound + 1 > 0:
        density = spec.nonzero_bound() / (deg_bound + 1)
        use_sparse = density < 0.25
    if not use_sparse:
        _guard_size(deg_bound + 1, spec.n)

    if spec.prefactor is None:
        start = CoeffPoly.one()
    else:
        start = spec.prefactor
    if use_sparse:
        acc_map = {e: c for e, c in start.items()}
        current = CoeffPoly(sparse=acc_map)
    else:
        acc = start.dense_coefficients()
        current = CoeffPoly(list(acc))
    if callback is not None:
        callback(0, current)
    for i in range(1, spec.n + 1):
        terms = spec.factor_terms(i)
        if use_sparse:
            acc_map = _multiply_sparse(acc_map, terms)
            current = CoeffPoly(sparse=acc_map)
        else:
            acc = _multiply_dense(acc, terms)
            current = CoeffPoly(list(acc))
        if callback is not None:
            callback(i, current)
    return current


def fibonacci_product_spec(n: int, t=1) -> ProductSpec:
    """prod_{i=1}^n (1 + t x^{F_{i+1}}), the Fibonacci binomial product."""
    from .sequences import kbonacci

    return ProductSpec(exponent_seq=kbonacci(2), n=n, h=1, a=(t,), offset=1)


def kbonacci_product_spec(k: int, n: int, t=1) -> ProductSpec:
    """prod_{i=1}^n (1 + t x^{F^{(k)}_{i+k-1}})."""
    from .sequences import kbonacci

    return ProductSpec(exponent_seq=kbonacci(k), n=n, h=1, a=(t,), offset=k - 1)


def stern_product_spec(n: int) -> ProductSpec:
    """prod_{i=0}^{n-1} (1 + x^{2^i} + x^{2^{i+1}}), the Stern product."""
    from .sequences import doubling

    return ProductSpec(exponent_seq=doubling(), n=n, h=2, a=(1, 1), offset=0)


@dataclass(frozen=True)
class GoldenSeries:
    """A finite series sum c_i x^{e_i} with exponents e_i in Z[phi], ascending."""

    terms: tuple  # of (GoldenInt, int)

    def coefficient_sequence(self) -> list[int]:
        return [c for _, c in self.terms]

    def __len__(self) -> int:
        return len(self.terms)


def golden_series(n: int) -> GoldenSeries:
    """Expand prod_{i=0}^{n-1} (1 + x^{phi^i}) with exact Z[phi] exponents."""
    if n < 0:
        raise ValueError("n must be >= 0")
    terms: list[tuple[GoldenInt, int]] = [(GoldenInt(0, 0), 1)]
    for i in range(n):
        shift = phi_power(i)
        shifted = [(e + shift, c) for e, c in terms]
        merged: list[tuple[GoldenInt, int]] = []
        p = q = 0
        while p < len(terms) and q < len(shifted):
            ea, ca = terms[p]
            eb, cb = shifted[q]
            d = (ea - eb).sign()
            if d < 0:
                merged.append((ea, ca))
                p += 1
            elif d > 0:
                merged.append((eb, cb))
                q += 1
            else:
                merged.append((ea, ca + cb))
                p += 1
                q += 1
        merged.extend(terms[p:])
        merged.extend(shifted[q:])
        terms = merged
    return GoldenSeries(tuple(terms))


@dataclass(frozen=True)
class Run:
    """A maximal block of unit-step exponents inside a golden series."""

    start: GoldenInt
    length: int
    coeffs: tuple


@dataclass(frozen=True)
class RunDecomposition:
    runs: tuple

    @property
    def count(self) -> int:
        return len(self.runs)

    def lengths(self) -> list[int]:
        return [r.length for r in self.runs]


def run_decomposition(series: GoldenSeries) -> RunDecomposition:
    """Group consecutive unit-step terms into maximal runs.

    Every run must have length 2 or 3, and exponents must be strictly
    increasing with non-unit gaps between runs (maximality); anything else
    raises ``InvariantError``.  Note the between-run gap can be smaller than
    1 (already for two factors it is phi - 1), it just cannot equal 1.
    """
    if not series.terms:
        return RunDecomposition(())
    runs = []
    cur_start, cur_coeffs = series.terms[0][0], [series.terms[0][1]]
    prev_e = series.terms[0][0]
    for e, c in series.terms[1:]:
        diff = e - prev_e
        if diff == GoldenInt(1, 0):
            cur_coeffs.append(c)
        else:
            if diff.sign() <= 0:
                raise InvariantError("exponents not strictly increasing", detail=e)
            runs.append(Run(cur_start, len(cur_coeffs), tuple(cur_coeffs)))
            cur_start, cur_coeffs = e, [c]
        prev_e = e
    runs.append(Run(cur_start, len(cur_coeffs), tuple(cur_coeffs)))
    for r in runs:
        if r.length not in (2, 3):
            raise InvariantError(f"run of length {r.length}", detail=r.start)
    return RunDecomposition(tuple(runs))
