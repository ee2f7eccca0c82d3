"""Graded, non-connected bialgebras on the d-alphabet with d1 inverted.

Both variants carry the same coproduct shape on generators,

    Delta(d_n) = sum_{k=1}^{n} B_{n,k} (x) d_k,

so d1 itself is group-like, and the inverse letter d1^{-1} is declared
group-like as well. "c" works in the commutative polynomial ring, "nc" in
the free algebra on reduced words. The grading is |d_i| = i - 1 with the
inverse letter of degree 0, which makes the bialgebra graded but leaves it
non-connected: the whole degree-0 part is spanned by the powers of d1.

Because degree 0 is bigger than the scalars, the counit cannot vanish on
d1. It sends every pure (possibly negative) power of d1 to 1 and every
word containing a higher letter to 0; under that reading the antipode
recursions close, starting from S(d1) = d1^{-1}:

    right: S(d_n) = d1^{-n} (-d_n d1^{-1} - sum_{k=2}^{n-1} B_{n,k} S(d_k))
    left:  S(d_n) = (-d1^{-n} d_n - sum_{k=2}^{n-1} S(B_{n,k}) d_k) d1^{-1}

with S extended to words as an anti-morphism. The antipode inverts the
Bell system: bell_map renames each letter d_j to the formal symbol B_j,
zeta is the all-ones character, mu = zeta o S is the Mobius character, and
mobius_invert(n) writes d_n as a polynomial in the B-symbols whose
substitution B_j -> bell(j) recovers d_n exactly.

Tensors use the same dict[(left key, right key)] -> Fraction encoding as
the rank-polynomial bialgebras; here keys may contain the inverse letter.
"""

from __future__ import annotations

from fractions import Fraction

from .bell import bell, bell_partial
from .algebra import INV, CPoly, NCPoly, mono_mul, word_mul


def _cls(variant: str):
    if variant == "nc":
        return NCPoly
    if variant == "c":
        return CPoly
    raise ValueError(f"unknown variant {variant!r}, expected 'c' or 'nc'")


def letter_key(i: int, variant: str) -> tuple:
    """Term key of the single letter d_i, with i = -1 for the inverse."""
    if variant == "nc":
        return (i,)
    return ((1, -1),) if i == INV else ((i, 1),)


def key_mul(k1: tuple, k2: tuple, variant: str) -> tuple:
    return word_mul(k1, k2) if variant == "nc" else mono_mul(k1, k2)


def key_poly(key: tuple, variant: str):
    cls = _cls(variant)
    return cls.from_word(key) if variant == "nc" else cls.from_mono(key)


def key_letters(key: tuple, variant: str) -> list:
    """Letters of a term key, left to right, with -1 for the inverse."""
    if variant == "nc":
        return list(key)
    out = []
    for i, e in key:
        out.extend([INV if (i == 1 and e < 0) else i] * abs(e))
    return out


def _variant_of(p) -> str:
    return "nc" if isinstance(p, NCPoly) else "c"


def key_degree(key: tuple, variant: str) -> int:
    """Degree of a term key: each d_i counts i - 1, inverse letters 0."""
    return sum(i - 1 for i in key_letters(key, variant) if i != INV)


def mobius_degree(p) -> int:
    """Common degree of a homogeneous element.

    Raises ValueError on zero or on mixed-degree input.
    """
    variant = _variant_of(p)
    degrees = {key_degree(k, variant) for k in p.terms}
    if not degrees:
        raise ValueError("zero element has no degree")
    if len(degrees) > 1:
        raise ValueError(f"element is not homogeneous: degrees {sorted(degrees)}")
    return degrees.pop()


def _inv_power(n: int, variant: str):
    """The element d1^{-n}."""
    if n == 0:
        return _cls(variant).one()
    if variant == "nc":
        return NCPoly.from_word((INV,) * n)
    return CPoly.from_mono(((1, -n),))


def tensor_mul(t1: dict, t2: dict, variant: str) -> dict:
    out: dict = {}
    for (l1, r1), c1 in t1.items():
        for (l2, r2), c2 in t2.items():
            key = (key_mul(l1, l2, variant), key_mul(r1, r2, variant))
            s = out.get(key, Fraction(0)) + c1 * c2
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out


def coproduct_m(n: int, variant: str = "nc") -> dict:
    """Coproduct of the generator d_n: sum over k of B_{n,k} (x) d_k."""
    if n < 1:
        raise ValueError(f"generator index must be positive, got {n}")
    out: dict = {}
    for k in range(1, n + 1):
        right = letter_key(k, variant)
        for key, c in bell_partial(n, k, variant).terms.items():
            out[(key, right)] = out.get((key, right), Fraction(0)) + c
    return out


def _coproduct_letter(i: int, variant: str) -> dict:
    if i == INV:
        k = letter_key(INV, variant)
        return {(k, k): Fraction(1)}
    return coproduct_m(i, variant)


def coproduct_poly(p, variant: str | None = None) -> dict:
    """Coproduct of an arbitrary element, extended multiplicatively."""
    if variant is None:
        variant = _variant_of(p)
    total: dict = {}
    for key, c in p.terms.items():
        t = {((), ()): Fraction(1)}
        for i in key_letters(key, variant):
            t = tensor_mul(t, _coproduct_letter(i, variant), variant)
        for tkey, tc in t.items():
            s = total.get(tkey, Fraction(0)) + c * tc
            if s:
                total[tkey] = s
            elif tkey in total:
                del total[tkey]
    return total


def counit_m(p) -> Fraction:
    """Counit: 1 on every pure power of d1 (inverse included), else 0."""
    variant = _variant_of(p)
    total = Fraction(0)
    for key, c in p.terms.items():
        if all(abs(i) == 1 for i in key_letters(key, variant)):
            total += c
    return total


_ANTIPODE: dict = {}


def antipode_m(n: int, variant: str = "nc", side: str = "right"):
    """Antipode on the generator d_n.

    The right form solves sum_k B_{n,k} S(d_k) = 0 for S(d_n); the left
    form solves sum_k S(B_{n,k}) d_k = 0 with S taken anti-multiplicative.
    Both start from S(d1) = d1^{-1}. Results are cached.
    """
    if n < 1:
        raise ValueError(f"generator index must be positive, got {n}")
    if side not in ("left", "right"):
        raise ValueError(f"unknown side {side!r}, expected 'left' or 'right'")
    cache_key = (n, variant, side)
    if cache_key in _ANTIPODE:
        return _ANTIPODE[cache_key]
    inv = _inv_power(1, variant)
    if n == 1:
        s = inv
    elif side == "right":
        acc = key_poly(letter_key(n, variant), variant) * inv
        for k in range(2, n):
            acc = acc + bell_partial(n, k, variant) * antipode_m(k, variant, side)
        s = _inv_power(n, variant) * -acc
    else:
        acc = _inv_power(n, variant) * key_poly(letter_key(n, variant), variant)
        for k in range(2, n):
            sb = antipode_poly(bell_partial(n, k, variant), variant, side)
            acc = acc + sb * key_poly(letter_key(k, variant), variant)
        s = -acc * inv
    _ANTIPODE[cache_key] = s
    return s


def _antipode_letter(i: int, variant: str, side: str):
    if i == INV:
        return key_poly(letter_key(1, variant), variant)
    return antipode_m(i, variant, side)


def antipode_poly(p, variant: str | None = None, side: str = "right"):
    """Antipode of an arbitrary element, extended as an anti-morphism."""
    if variant is None:
        variant = _variant_of(p)
    cls = _cls(variant)
    total = cls.zero()
    for key, c in p.terms.items():
        factor = cls.one()
        for i in reversed(key_letters(key, variant)):
            factor = factor * _antipode_letter(i, variant, side)
        total = total + factor * c
    return total


class Character:
    """Multiplicative Rational-valued functional on the extended alphabet.

    Stored by its values on letters; the value on the inverse letter is
    under key -1. Applies to CPoly and NCPoly alike, since the codomain
    is commutative.
    """

    __slots__ = ("values",)

    def __init__(self, values: dict):
        self.values = {i: Fraction(v) for i, v in values.items()}

    def on_letter(self, i: int) -> Fraction:
        if i not in self.values:
            raise ValueError(f"character not defined on letter {i}")
        return self.values[i]

    def __call__(self, p) -> Fraction:
        variant = _variant_of(p)
        total = Fraction(0)
        for key, c in p.terms.items():
            prod = c
            for i in key_letters(key, variant):
                prod *= self.on_letter(i)
            total += prod
        return total


def zeta(max_n: int) -> Character:
    """The all-ones character on d1..d_max_n and the inverse letter."""
    values = {i: Fraction(1) for i in range(1, max_n + 1)}
    values[INV] = Fraction(1)
    return Character(values)


def epsilon_char(max_n: int) -> Character:
    """The counit as a character: 1 on d1 and its inverse, 0 above."""
    values = {i: Fraction(0) for i in range(2, max_n + 1)}
    values[1] = Fraction(1)
    values[INV] = Fraction(1)
    return Character(values)


def mobius_char(max_n: int, variant: str = "nc") -> Character:
    """The Mobius character mu = zeta o S, tabulated on d1..d_max_n."""
    z = zeta(max_n)
    values = {i: z(antipode_m(i, variant)) for i in range(1, max_n + 1)}
    values[INV] = Fraction(1)
    return Character(values)


def convolve_m(phi: Character, psi: Character, n: int, variant: str = "nc") -> Fraction:
    """Convolution (phi * psi)(d_n) through the generator coproduct."""
    total = Fraction(0)
    for (l, r), c in coproduct_m(n, variant).items():
        total += c * phi(key_poly(l, variant)) * psi(key_poly(r, variant))
    return total


def bell_map(p, variant: str | None = None):
    """Rename each letter d_j to the formal Bell symbol B_j.

    The symbols share the letter encoding of the d-alphabet, so the data
    is unchanged; only the reading differs. Render with symbol "B" and
    serialize with the "b-symbols" algebra tag.
    """
    if variant is None:
        variant = _variant_of(p)
    return _cls(variant)(p.terms)


def mobius_invert(n: int, variant: str = "nc"):
    """d_n written in the Bell symbols: sum_k mu(d_k) bell_map(B_{n,k}).

    Substituting B_j -> bell(j, variant) recovers the generator d_n.
    """
    if n < 1:
        raise ValueError(f"generator index must be positive, got {n}")
    mu = mobius_char(n, variant)
    cls = _cls(variant)
    total = cls.zero()
    for k in range(1, n + 1):
        coeff = mu.on_letter(k)
        if coeff:
            total = total + bell_map(bell_partial(n, k, variant), variant) * coeff
    return total


def invert_round_trip(n: int, variant: str = "nc") -> bool:
    """Check that substituting the Bell polynomials into mobius_invert(n)
    returns exactly d_n."""
    expr = mobius_invert(n, variant)
    table = {j: bell(j, variant) for j in range(1, n + 1)}
    return expr.substitute(table) == key_poly(letter_key(n, variant), variant)
