"""Bell polynomials in the free algebra and its commutative quotient.

Four constructions live across this package; the two recursions and the
explicit composition-indexed sums are here, the quasideterminant route in
quasidet.py, and the tree route in trees.py. They are implemented
independently of one another on purpose: their agreement is a test, not a
definition.

Variants are selected by the strings "nc" and "c".
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .algebra import CPoly, NCPoly, QPoly, qfactorial, qint
from . import partitions


def _cls(variant: str):
    if variant == "nc":
        return NCPoly
    if variant == "c":
        return CPoly
    raise ValueError(f"unknown variant {variant!r}")


_BELL: dict = {"nc": [NCPoly.one()], "c": [CPoly.one()]}


def bell(n: int, variant: str = "nc"):
    """B_n by the derivation recursion B_n = (d_1 + derive) B_{n-1}."""
    if n < 0:
        raise ValueError("need n >= 0")
    cls = _cls(variant)
    cache = _BELL[variant]
    while len(cache) <= n:
        prev = cache[-1]
        cache.append(cls.letter(1) * prev + prev.derive())
    return cache[n]


def bell_recursion(n: int, variant: str = "nc"):
    """B_n by the binomial recursion B_{m+1} = sum_k binom(m,k) B_{m-k} d_{k+1}.

    Deliberately does not touch derive() or the other cache.
    """
    if n < 0:
        raise ValueError("need n >= 0")
    cls = _cls(variant)
    seq = [cls.one()]
    for m in range(n):
        nxt = cls.zero()
        for k in range(m + 1):
            nxt = nxt + comb(m, k) * (seq[m - k] * cls.letter(k + 1))
        seq.append(nxt)
    return seq[n]


def bell_partial(n: int, k: int, variant: str = "nc"):
    """The length-k part B_{n,k} of B_n; zero when k > n, unit at (0,0)."""
    if n < 0 or k < 0:
        raise ValueError("need n, k >= 0")
    if k > n:
        return _cls(variant).zero()
    return bell(n, variant).restrict_length(k)


def compositions(n: int, k: int):
    """All (j_1..j_k) with j_i >= 1 summing to n, in lexicographic order."""
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(1, n - k + 2):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def kappa(word) -> Fraction:
    """kappa(d_{j_1}...d_{j_k}) = (j_1 j_2 ... j_k) / (j_1 (j_1+j_2) ... (j_1+...+j_k))."""
    word = tuple(word)
    if not word:
        raise ValueError("kappa needs a nonempty word")
    if any(j < 1 for j in word):
        raise ValueError("kappa accepts plain letters only")
    num = 1
    den = 1
    total = 0
    for j in word:
        num *= j
        total += j
        den *= total
    return Fraction(num, den)


def multinomial(n: int, parts) -> int:
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def bell_explicit(n: int, k: int) -> NCPoly:
    """B_{n,k} as the composition sum of binom(n, omega) kappa(omega) omega."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    out = NCPoly.zero()
    for parts in compositions(n, k):
        coeff = multinomial(n, parts) * kappa(parts)
        out = out + NCPoly.from_word(parts, coeff)
    return out


def closed_coefficient(parts) -> int:
    """The product form of the coefficient of d_{j_1}...d_{j_k} in B_{n,k}:
    prod over i of binom(j_1+...+j_{i+1} - 1, j_{i+1} - 1). Identical to
    partitions.N_formula; restated here because the bell-side theorem is
    about word coefficients."""
    return partitions.N_formula(parts)


def bell_c_explicit(n: int, k: int) -> CPoly:
    """Commutative B_{n,k} as the multi-index sum over (alpha_1..alpha_n)
    with sum alpha_i = k and sum i alpha_i = n of
    n!/(alpha_1! ... alpha_n!) prod (d_i / i!)^{alpha_i}."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    out = CPoly.zero()

    def rec(i: int, blocks_left: int, weight_left: int, alpha: list):
        if i > n:
            if blocks_left == 0 and weight_left == 0:
                coeff = Fraction(factorial(n))
                mono = []
                for idx, a in enumerate(alpha, start=1):
                    if a:
                        coeff /= factorial(a) * factorial(idx) ** a
                        mono.append((idx, a))
                out_terms[tuple(mono)] = out_terms.get(tuple(mono), Fraction(0)) + coeff
            return
        max_a = min(blocks_left, weight_left // i)
        for a in range(max_a + 1):
            alpha.append(a)
            rec(i + 1, blocks_left - a, weight_left - i * a, alpha)
            alpha.pop()

    out_terms: dict = {}
    rec(1, k, n, [])
    return CPoly(out_terms)


def bell_scaled(n: int, k: int | None = None) -> NCPoly:
    """Q_{n,k} = (1/n!) B_{n,k}(1! d_1, 2! d_2, ...); Q_n when k is None."""
    if n < 1:
        raise ValueError("need n >= 1")
    base = bell(n, "nc") if k is None else bell_partial(n, k, "nc")
    mapping = {i: NCPoly.letter(i, factorial(i)) for i in range(1, n + 1)}
    return base.substitute(mapping) * Fraction(1, factorial(n))


# ---------------------------------------------------------------------------
# the q-analog

# The q-coefficient as displayed leaves the kappa numerator unbracketed
# (plain integers p_1...p_k against q-bracket denominators). That reading
# fails to be polynomial in q: for the word d2 d2 it gives
# 4(1+q+q^2)/(1+q)^2, and _qcoeff_plain raises on it. The fully bracketed
# reading below matches the brute-force partition-weight statistic, so it
# is the one qbell uses; at q = 1 both would agree where the plain one is
# defined.


def qkappa(parts) -> tuple:
    """Numerator and denominator q-polynomials of the bracketed kappa."""
    num = QPoly.one()
    den = QPoly.one()
    total = 0
    for p in parts:
        num = num * qint(p)
        total += p
        den = den * qint(total)
    return num, den


def qbell_coefficient(parts) -> QPoly:
    """Coefficient of the word d_{p_1}...d_{p_k} in the q-Bell polynomial:
    q-multinomial times bracketed kappa, reduced exactly."""
    parts = tuple(parts)
    n = sum(parts)
    num = qfactorial(n)
    den = QPoly.one()
    for p in parts:
        den = den * qfactorial(p)
    knum, kden = qkappa(parts)
    return (num * knum).divexact(den * kden)


def _qcoeff_plain(parts) -> QPoly:
    """The unbracketed-numerator reading; raises ValueError when the division
    is not exact (which already happens for parts = (2, 2))."""
    parts = tuple(parts)
    n = sum(parts)
    num = qfactorial(n) * Fraction(1)
    plain = 1
    for p in parts:
        plain *= p
    den = QPoly.one()
    total = 0
    for p in parts:
        den = den * qfactorial(p)
        total += p
        den = den * qint(total)
    return (num * plain).divexact(den)


def qbell(n: int, k: int) -> dict:
    """The q-Bell polynomial as a map from composition (p_1..p_k) to its
    QPoly coefficient. Words are kept composition-indexed so that each
    coefficient can be compared with the q-weight oracle; group with
    qbell_grouped for the commutative picture."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    return {parts: qbell_coefficient(parts) for parts in compositions(n, k)}


def qbell_grouped(n: int, k: int) -> dict:
    """q-Bell coefficients summed over words with the same letter multiset,
    keyed by the sorted multiset."""
    out: dict = {}
    for parts, c in qbell(n, k).items():
        key = tuple(sorted(parts))
        out[key] = out.get(key, QPoly.zero()) + c
    return {key: c for key, c in out.items() if c}
