"""Catalog of the closed rational forms used by the verification suite.

Each entry builds an exact ``RationalFunc``; parameterized families take
``k``/``t``/``i``/``b`` keywords.  ``t`` may be an int or the string
"sym" for a symbolic weight (TPoly coefficients).
"""

from __future__ import annotations

from .guess import RationalFunc, _pmul
from .polynomials import TPoly


def _tp(*coeffs) -> TPoly:
    return TPoly(coeffs)


def _dict_to_list(d: dict):
    n = max(d) + 1 if d else 0
    out = [0] * n
    for e, c in d.items():
        out[e] = c
    return out


def _maybe_specialize(num: dict, den: dict, t) -> RationalFunc:
    if t == "sym":
        return RationalFunc(_dict_to_list(num), _dict_to_list(den))
    tv = int(t)

    def sp(c):
        return c.evaluate(tv) if isinstance(c, TPoly) else c

    return RationalFunc(
        [sp(c) for c in _dict_to_list(num)], [sp(c) for c in _dict_to_list(den)]
    )


def _expand(*factors) -> list[int]:
    acc = (1,)
    for f in factors:
        acc = _pmul(acc, tuple(f))
    return list(acc)


def _sq_sum_fibonacci() -> RationalFunc:
    return RationalFunc([1, 0, -2], [1, -2, -2, 2])


def _sq_sum_stern() -> RationalFunc:
    return RationalFunc([1, -2], [1, -5, 2])


def _sq_sum_weighted(t) -> RationalFunc:
    num = {0: 1, 2: -(_tp(0, 1, 0, 1))}              # 1 - (t + t^3) x^2
    den = {
        0: 1,
        1: -(_tp(1, 0, 1)),                          # -(1 + t^2) x
        2: -(_tp(0, 1, 0, 1)),                       # -t(1 + t^2) x^2
        3: _tp(0, 1, 0, 0, 0, 1),                    # t(1 + t^4) x^3
    }
    return _maybe_specialize(num, den, t)


def _sq_sum_kbonacci(k: int, t) -> RationalFunc:
    tk1 = _tp(*([0] * (k - 1) + [1]))                # t^{k-1}
    one_t2 = _tp(1, 0, 1)
    one_t4 = _tp(1, 0, 0, 0, 1)
    num = {0: 1, k: -(tk1 * one_t2)}
    den = {0: 1, 1: -one_t2, k: -(tk1 * one_t2), k + 1: tk1 * one_t4}
    return _maybe_specialize(num, den, t)


def _cube_sum_kbonacci(k: int, t) -> RationalFunc:
    t3 = _tp(0, 0, 0, 1)
    t9 = t3 * t3 * t3
    one_t3 = 1 + t3
    t3m1 = t3 - 1
    num = {0: 1, k: -(t3 * one_t3 * one_t3), 2 * k: t9 * t3m1 * t3m1}
    den = {
        0: 1,
        1: -one_t3,
        k: -(t3 * one_t3 * one_t3),
        k + 1: t3 * (1 + t9),
        2 * k: t9 * t3m1 * t3m1,
        2 * k + 1: -(t9 * t3m1 * t3m1 * one_t3),
    }
    return _maybe_specialize(num, den, t)


def _cube_sum_kbonacci_fitted(k: int, t) -> RationalFunc:
    """Data-fitted k-uniform refinement of the cube-sum family.

    Writing s = t^{k-1}, the fitted coefficients are
    a1 = -(1+t^3), a2 = -s(1+s)(1+t^3), a3 = s(1+s)(1-t^3+t^6),
    a4 = s^3(t^3-1)^2, a5 = -a4(1+t^3); the printed family above is the
    k = 4 instance (s = t^3), and every instance agrees at t = 1.
    """
    s = _tp(*([0] * (k - 1) + [1]))
    t3 = _tp(0, 0, 0, 1)
    one_t3 = 1 + t3
    a2 = -(s * (1 + s) * one_t3)
    a3 = s * (1 + s) * _tp(1, 0, 0, -1, 0, 0, 1)
    a4 = s * s * s * (t3 - 1) * (t3 - 1)
    a5 = -(a4 * one_t3)
    num = {0: 1, k: a2, 2 * k: a4}
    den = {0: 1, 1: -one_t3, k: a2, k + 1: a3, 2 * k: a4, 2 * k + 1: a5}
    return _maybe_specialize(num, den, t)


_SINGLE_INDEX_DATA = {
    3: ([1, 0, -4], [1, -2, -4, 2]),
    4: ([1, 0, -7, 0, -2], [1, -2, -7, 0, -2, 2]),
    5: ([1, 0, -11, 0, -20], [1, -2, -11, -8, -20, 10]),
    6: ([1, 0, -17, 0, -88, 0, -4], [1, -2, -17, -28, -88, 26, -4, 4]),
    7: ([1, 0, -26, 0, -311, 0, -84], [1, -2, -26, -74, -311, 34, -84, 42]),
}

_MULTI_INDEX_DATA = {
    (1, 1): ([0, 1, 1], [1, -2, -2, 2]),
    (1, 0, 1): ([0, 0, 2, 1, -1], _expand([1, -1], [1, -2, -2, 2])),
    (2, 1): ([0, 1, 1], [1, -2, -4, 2]),
    (1, 3): ([0, 1, 1, 1, 1], [1, -2, -7, 0, -2, 2]),
    (2, 2): ([0, 1, 1, -1, -1], [1, -2, -7, 0, -2, 2]),
    (2, 3): ([0, 1, 1, -1, -1], [1, -2, -11, -8, -20, 10]),
    (1, 1, 1): ([0, 0, 2, 2, -2], _expand([1, -1], [1, -2, -4, 2])),
    (1, 0, 2): ([0, 0, 2, 1, -2, 1], _expand([1, -1], [1, -1], [1, -2, -4, 2])),
    (2, 1, 1): ([0, 0, 2, 2, -4, 4], _expand([1, -1], [1, -1], [1, -2, -7, 0, -2, 2])),
    (1, 2, 1): ([0, 0, 2, 4, -2], _expand([1, -1], [1, -2, -7, 0, -2, 2])),
}


def _kpow_form(k: int, coeffs_by_kexp: dict, extras: dict) -> dict:
    """Build {exponent: coeff} from {j: c} meaning c*x^{jk} plus literal extras."""
    out = {j * k: c for j, c in coeffs_by_kexp.items()}
    out.update(extras)
    return out


_JK_UNIT_DATA = {
    4: ({0: 1, 1: -7, 2: -2}, {0: 1, 1: -7, 2: -2}, {1: -2}, {(2, 1): 2}),
    5: ({0: 1, 1: -11, 2: -20}, {0: 1, 1: -11, 2: -20}, {1: -2}, {(1, 1): -8, (2, 1): 10}),
    6: ({0: 1, 1: -17, 2: -88, 3: -4}, {0: 1, 1: -17, 2: -88, 3: -4}, {1: -2}, {(1, 1): -28, (2, 1): 26, (3, 1): 4}),
    7: ({0: 1, 1: -26, 2: -311, 3: -84}, {0: 1, 1: -26, 2: -311, 3: -84}, {1: -2}, {(1, 1): -74, (2, 1): 34, (3, 1): 42}),
}


def _power_sum_kbonacci_unit(r: int, k: int) -> RationalFunc:
    num_k, den_k, den_lit, den_off = _JK_UNIT_DATA[r]
    num = {j * k: c for j, c in num_k.items()}
    den = {j * k: c for j, c in den_k.items()}
    den.update(den_lit)
    for (j, off), c in den_off.items():
        den[j * k + off] = c
    return RationalFunc(_dict_to_list(num), _dict_to_list(den))


_CONGRUENCE_DATA = {
    (2, 0): ([0, 0, 0, 1, 0, -2], _expand([1, -1], [1, -1, -1], [1, -2, 2, -2])),
    (2, 1): ([1, 0, 2], [1, -2, 2, -2]),
    (3, 0): ([0, 0, 0, 0, 0, 2, 0, -4], _expand([1, -1], [1, -1, -1], [1, -2, 2, -3, 4, -4])),
    (3, 1): ([1, -2, 4, -6, 8, -10, 8, -6], _expand([1, -1], [1, -1, 1], [1, -2, 2, -3, 4, -4])),
    (3, 2): ([0, 0, 0, 1, 0, 0, 0, 2], _expand([1, -1], [1, -1, 1], [1, -2, 2, -3, 4, -4])),
    (4, 0): (
        _expand([0, 0, 0, 0, 0, 0, 1], [1, 0, -2], [1, 0, -3, 4, -4]),
        _expand([1, -1], [1, -1, -1], [1, 0, -1, 0, 2], [1, -2, 2, -2], [1, -2, 2, -2]),
    ),
    (4, 1): ([1, -2, 5, -8, 10, -12, 8, -6], _expand([1, -1], [1, -2, 2, -2], [1, -1, 2, -2, 2])),
    (4, 2): (
        _expand([0, 0, 0, 1], [1, 0, 1], [1, 0, -2]),
        _expand([1, 0, -1, 0, 2], [1, -2, 2, -2], [1, -2, 2, -2]),
    ),
    (4, 3): (
        _expand([0, 0, 0, 0, 0, 2], [1, 0, 1]),
        _expand([1, -1], [1, -2, 2, -2], [1, -1, 2, -2, 2]),
    ),
}


def _congruence_kbonacci_21(k: int) -> RationalFunc:
    num = {0: 1, k: 2}
    den = {0: 1, 1: -2, k: 2, k + 1: -2}
    return RationalFunc(_dict_to_list(num), _dict_to_list(den))


_H31_K2 = (
    [1, -2, 4, -6, 8, -10, 8, -6],
    [1, -4, 8, -12, 16, -20, 19, -12, 4],
)

_H31_K3 = (
    [1, -2, 0, 4, -6, 0, 8, -10, 0, 8, -6],
    [1, -4, 4, 4, -12, 8, 8, -20, 11, 8, -12, 4],
)


def _rank_gf(i: int, b: int) -> RationalFunc:
    den = {0: 1, 1: -i, b: i - 1}
    return RationalFunc([1], _dict_to_list(den))


def closed_form(name: str, **params) -> RationalFunc:
    """The exact catalog form named ``name`` (see CATALOG_NAMES)."""
    if name == "thm1":
        return _sq_sum_fibonacci()
    if name == "stern-u2":
        return _sq_sum_stern()
    if name == "thm1t":
        return _sq_sum_weighted(params.get("t", "sym"))
    if name == "vk2n":
        return _sq_sum_kbonacci(int(params["k"]), params.get("t", "sym"))
    if name == "conj-v3k":
        return _cube_sum_kbonacci(int(params["k"]), params.get("t", "sym"))
    if name == "conj-v3k-fitted":
        return _cube_sum_kbonacci_fitted(int(params["k"]), params.get("t", "sym"))
    if name == "v2m1":
        return RationalFunc([1, 0, 2], [1, -2, 2, -2])
    if name == "w-example":
        return RationalFunc(
            [1, -4, -5, 24, 4, -34, 2, 10, -4],
            [1, -7, 1, 47, -32, -84, 50, 34, -18],
        )
    if name in ("J3", "J4", "J5", "J6", "J7"):
        num, den = _SINGLE_INDEX_DATA[int(name[1])]
        return RationalFunc(num, den)
    if name == "Jalpha":
        alpha = tuple(int(v) for v in params["alpha"])
        num, den = _MULTI_INDEX_DATA[alpha]
        return RationalFunc(num, den)
    if name in ("J4k", "J5k", "J6k", "J7k"):
        return _power_sum_kbonacci_unit(int(name[1]), int(params["k"]))
    if name == "H":
        num, den = _CONGRUENCE_DATA[(int(params["m"]), int(params["a"]))]
        return RationalFunc(num, den)
    if name == "Hk21":
        return _congruence_kbonacci_21(int(params["k"]))
    if name == "H31k2":
        return RationalFunc(*_H31_K2)
    if name == "H31k3":
        return RationalFunc(*_H31_K3)
    if name == "phi":
        return _rank_gf(int(params["i"]), int(params["b"]))
    raise ValueError(f"unknown closed form {name!r}")


CATALOG_NAMES = (
    "thm1",
    "stern-u2",
    "thm1t",
    "vk2n",
    "conj-v3k",
    "conj-v3k-fitted",
    "v2m1",
    "w-example",
    "J3",
    "J4",
    "J5",
    "J6",
    "J7",
    "Jalpha",
    "J4k",
    "J5k",
    "J6k",
    "J7k",
    "H",
    "Hk21",
    "H31k2",
    "H31k3",
    "phi",
)

MULTI_INDEX_ALPHAS = tuple(_MULTI_INDEX_DATA.keys())
