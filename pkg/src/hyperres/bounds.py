"""Exact evaluators for the numeric bounds on resilient families.

Everything is computed over integers and :class:`fractions.Fraction`; no
floating point enters any value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, floor


class BoundError(ValueError):
    pass


@dataclass(frozen=True)
class BoundValue:
    formula_id: str
    params: dict
    value: Fraction
    notes: tuple[str, ...] = field(default=())

    @property
    def integer_part(self) -> int:
        return floor(self.value)

    def to_json(self) -> dict:
        v = self.value
        return {
            "formula": self.formula_id,
            "params": dict(self.params),
            "value": int(v) if v.denominator == 1 else float(v),
            "exact": str(v),
            "floor": self.integer_part,
            "notes": list(self.notes),
        }


def emc_bound(n: int, k: int, s: int) -> BoundValue:
    """max{C(n,k) - C(n-s,k), C((s+1)k-1, k)}, with the attaining branch noted."""
    if min(n, k, s) < 1 or n < (s + 1) * k:
        raise BoundError("need positive n, k, s with n >= (s+1)k")
    erdos = comb(n, k) - comb(n - s, k)
    clique = comb((s + 1) * k - 1, k)
    if erdos > clique:
        branch = "erdos"
    elif clique > erdos:
        branch = "complete"
    else:
        branch = "tie"
    return BoundValue("emc", {"n": n, "k": k, "s": s}, Fraction(max(erdos, clique)),
                      (f"branch={branch}", f"erdos={erdos}", f"complete={clique}"))


LOVASZ_NOTE = (
    "general bound stated with exponent s, i.e. (ks)^s; the k=3 specialisation 27s^3 "
    "and m(3,2)=56 are consistent only with (ks)^k, which downstream comparisons use"
)


def lovasz_bound(k: int, s: int) -> tuple[BoundValue, BoundValue]:
    """Both readings of the general upper bound on m(k, s): ``(ks)^s`` and ``(ks)^k``."""
    if k < 1 or s < 1:
        raise BoundError("k and s must be positive")
    params = {"k": k, "s": s}
    as_printed = BoundValue("lovasz_as_printed", params, Fraction((k * s) ** s), (LOVASZ_NOTE,))
    as_corollary = BoundValue("lovasz_as_corollary", params, Fraction((k * s) ** k),
                              (LOVASZ_NOTE, "used for comparisons"))
    return as_printed, as_corollary


def fw_cubic_bound(s: int) -> BoundValue:
    """73/6 s^3 + 50 for 3 <= s <= 20 and 73/6 s^3 from s = 21 on."""
    if s < 3:
        raise BoundError("bound stated for s >= 3")
    value = Fraction(73, 6) * s ** 3
    if s <= 20:
        value += 50
    return BoundValue("fw", {"s": s}, value)


def el_lower_bound(k: int) -> BoundValue:
    """floor((e-1) k!) as the integer sum of k!/i! for i = 1..k."""
    if k < 1:
        raise BoundError("k must be positive")
    kf = factorial(k)
    return BoundValue("el", {"k": k}, Fraction(sum(kf // factorial(i) for i in range(1, k + 1))))


# -- f(s, t) ------------------------------------------------------------------

class Poly:
    """Polynomial in ``s`` and ``t`` with rational coefficients.

    Terms map ``(deg_s, deg_t)`` to a non-zero :class:`Fraction`.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: Fraction(c) for m, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({(0, 0): Fraction(c)})

    @staticmethod
    def _lift(x) -> "Poly":
        return x if isinstance(x, Poly) else Poly.const(x)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        out: dict = {}
        for (a, b), c in self.terms.items():
            for (d, e), f in other.terms.items():
                key = (a + d, b + e)
                out[key] = out.get(key, 0) + c * f
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exp: int):
        out = Poly.const(1)
        for _ in range(exp):
            out = out * self
        return out

    def __eq__(self, other):
        return self.terms == self._lift(other).terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def d_dt(self) -> "Poly":
        return Poly({(a, b - 1): c * b for (a, b), c in self.terms.items() if b})

    def subs_t(self, value: "Poly") -> "Poly":
        """Substitute a polynomial (in ``s``) for ``t``."""
        out = Poly()
        for (a, b), c in self.terms.items():
            out = out + Poly({(a, 0): c}) * value ** b
        return out

    def __call__(self, s, t) -> Fraction:
        return sum((c * Fraction(s) ** a * Fraction(t) ** b for (a, b), c in self.terms.items()), Fraction(0))

    def __repr__(self):
        parts = [f"{c}*s^{a}*t^{b}" for (a, b), c in sorted(self.terms.items(), reverse=True)]
        return "Poly(" + " + ".join(parts or ["0"]) + ")"


S = Poly({(1, 0): 1})
T = Poly({(0, 1): 1})


def f_printed(s, t):
    """The edge-count bound f(t) in its printed, unexpanded shape."""
    half, third = Fraction(1, 2), Fraction(1, 3)
    return (5 * s * t ** 2 + 12 * s * t * (s - t) + 6 * s * (s - t) ** 2 + 4 * s ** 2 * t
            + 9 * half * s ** 3 - 3 * t ** 2 * s + 5 * third * t ** 3
            + 15 * half * s ** 2 - 18 * s * t + t ** 2 + 9 * s - 5 * third * t)


F_EXPANDED = Poly({
    (3, 0): Fraction(21, 2),
    (2, 1): 4,
    (2, 0): Fraction(15, 2),
    (1, 2): -4,
    (1, 1): -18,
    (1, 0): 9,
    (0, 3): Fraction(5, 3),
    (0, 2): 1,
    (0, 1): Fraction(-5, 3),
})

F_AT_T_EQUALS_S = Poly({(3, 0): Fraction(73, 6), (2, 0): Fraction(-19, 2), (1, 0): Fraction(22, 3)})
F_PRIME_AT_MINIMUM = Fraction(2, 15) * (6 * S ** 2 - 123 * S - 14)


def f_poly_symbolic() -> Poly:
    return f_printed(S, T)


def expanded_form_matches() -> bool:
    """Self-test: the printed shape expands to the stored canonical form."""
    return f_poly_symbolic() == F_EXPANDED


def f_poly(s: int, t: int) -> BoundValue:
    if s < 2 or not 0 <= t <= s:
        raise BoundError("need s >= 2 and 0 <= t <= s")
    value = f_printed(Fraction(s), Fraction(t))
    return BoundValue("fpoly", {"s": s, "t": t}, value)


def f_prime_at_minimum() -> Poly:
    """d f / d t at t = (4s - 1)/5, as a polynomial in s."""
    at = Fraction(4, 5) * S - Fraction(1, 5)
    return f_poly_symbolic().d_dt().subs_t(at)


def f_max_over_t(s: int) -> Fraction:
    return max(f_poly(s, t).value for t in range(s + 1))


# -- fixed anchors ---------------------------------------------------------------

def binom_2k_minus_t(k: int, t: int) -> BoundValue:
    if not k > t >= 1:
        raise BoundError("need k > t >= 1")
    return BoundValue("binom_2k_minus_t", {"k": k, "t": t}, Fraction(comb(2 * k - t, k)))


def misc_anchors() -> dict:
    return {
        "graph_bound_C(2s+1,2)": {s: comb(2 * s + 1, 2) for s in (1, 2)},
        "conjectured_C(3s+2,3)": {s: comb(3 * s + 2, 3) for s in (1, 2)},
        "C(7,4)": comb(7, 4),
        "el_lower_bound_k4": el_lower_bound(4).integer_part,
        "m(4,1)_interval": [42, 175],
        "m(3,2)": comb(8, 3),
        "T_uv_bound": 36,
        "binom_2k_minus_t_examples": {f"k={k},t={t}": comb(2 * k - t, k) for k, t in ((3, 1), (4, 2), (5, 1))},
    }
