"""Exact polynomial arithmetic over the alphabet d1, d2, d3, ...

Letters are plain integers: i >= 1 stands for d_i, and -1 stands for the
formal inverse of d1 (index 1 is the only letter that may be inverted).
A word is a tuple of letters kept reduced, meaning d1 and d1^{-1} never
sit adjacent. Coefficients are fractions.Fraction throughout; integers
are coerced on the way in.

Three polynomial containers live here:

  NCPoly  free associative algebra, dict word -> coefficient
  CPoly   commutative polynomials, dict monomial -> coefficient, where a
          monomial is a tuple of (index, exponent) pairs sorted by index;
          only index 1 may carry a negative exponent
  QPoly   polynomials in a single variable q, used by the q-analogs

plus the q-integer helpers and the text / LaTeX / JSON renderers shared
by the command line front end.
"""

from __future__ import annotations

from fractions import Fraction

INV = -1  # the letter d1^{-1}


def _coeff(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"coefficient must be Fraction or int, got {type(x).__name__}")


def check_letter(letter: int) -> None:
    if not isinstance(letter, int) or (letter < 1 and letter != INV):
        raise ValueError(f"bad letter {letter!r}: need index >= 1, or -1 for d1^-1")


def word_mul(u: tuple, v: tuple) -> tuple:
    """Concatenate two reduced words, cancelling d1 d1^{-1} pairs at the seam."""
    i = len(u)
    j = 0
    while i > 0 and j < len(v) and u[i - 1] == -v[j] and abs(u[i - 1]) == 1:
        i -= 1
        j += 1
    return u[:i] + v[j:]


def check_word(word: tuple) -> None:
    for letter in word:
        check_letter(letter)
    for a, b in zip(word, word[1:]):
        if abs(a) == 1 and a == -b:
            raise ValueError(f"word {word!r} is not reduced")


class NCPoly:
    """Element of the free associative algebra on d1, d2, ... over Q."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for word, c in terms.items():
                c = _coeff(c)
                if c:
                    word = tuple(word)
                    check_word(word)
                    self.terms[word] = self.terms.get(word, Fraction(0)) + c
            self.terms = {w: c for w, c in self.terms.items() if c}

    @classmethod
    def zero(cls) -> "NCPoly":
        return cls()

    @classmethod
    def one(cls) -> "NCPoly":
        return cls({(): 1})

    @classmethod
    def letter(cls, i: int, coeff=1) -> "NCPoly":
        check_letter(i)
        return cls({(i,): coeff})

    @classmethod
    def from_word(cls, word, coeff=1) -> "NCPoly":
        return cls({tuple(word): coeff})

    def coefficient(self, word) -> Fraction:
        return self.terms.get(tuple(word), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = NCPoly({(): other})
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "NCPoly":
        out = NCPoly()
        out.terms = {w: -c for w, c in self.terms.items()}
        return out

    def __add__(self, other) -> "NCPoly":
        if isinstance(other, (int, Fraction)):
            other = NCPoly({(): other})
        if not isinstance(other, NCPoly):
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, Fraction(0)) + c
            if s:
                out[w] = s
            elif w in out:
                del out[w]
        res = NCPoly()
        res.terms = out
        return res

    __radd__ = __add__

    def __sub__(self, other) -> "NCPoly":
        return self + (-other if isinstance(other, NCPoly) else NCPoly({(): -_coeff(other)}))

    def __rsub__(self, other) -> "NCPoly":
        return NCPoly({(): other}) - self

    def __mul__(self, other) -> "NCPoly":
        if isinstance(other, (int, Fraction)):
            c = _coeff(other)
            out = NCPoly()
            if c:
                out.terms = {w: cc * c for w, cc in self.terms.items()}
            return out
        if not isinstance(other, NCPoly):
            return NotImplemented
        acc: dict = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                w = word_mul(u, v)
                s = acc.get(w, Fraction(0)) + cu * cv
                if s:
                    acc[w] = s
                elif w in acc:
                    del acc[w]
        res = NCPoly()
        res.terms = acc
        return res

    def __rmul__(self, other) -> "NCPoly":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def derive(self) -> "NCPoly":
        """The derivation sending each d_i to d_{i+1}, extended by Leibniz."""
        acc: dict = {}
        for w, c in self.terms.items():
            for pos, letter in enumerate(w):
                if letter == INV:
                    raise ValueError("derive does not accept inverted letters")
                nw = w[:pos] + (letter + 1,) + w[pos + 1 :]
                s = acc.get(nw, Fraction(0)) + c
                if s:
                    acc[nw] = s
                elif nw in acc:
                    del acc[nw]
        res = NCPoly()
        res.terms = acc
        return res

    def abelianize(self) -> "CPoly":
        acc: dict = {}
        for w, c in self.terms.items():
            m = mono_from_word(w)
            s = acc.get(m, Fraction(0)) + c
            if s:
                acc[m] = s
            elif m in acc:
                del acc[m]
        res = CPoly()
        res.terms = acc
        return res

    def substitute(self, mapping: dict) -> "NCPoly":
        """Replace each letter i by mapping[i] (an NCPoly), multiplicatively.

        Every letter occurring in self must have an image; inverted letters
        are rejected since a general image has no inverse here.
        """
        out = NCPoly.zero()
        for w, c in self.terms.items():
            factor = NCPoly.one()
            for letter in w:
                if letter == INV:
                    raise ValueError("substitute does not accept inverted letters")
                if letter not in mapping:
                    raise ValueError(f"no image for letter {letter}")
                factor = factor * mapping[letter]
            out = out + factor * c
        return out

    def restrict_length(self, k: int) -> "NCPoly":
        """Keep only the words of length exactly k."""
        res = NCPoly()
        res.terms = {w: c for w, c in self.terms.items() if len(w) == k}
        return res

    def max_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def map_coeffs(self, f) -> "NCPoly":
        out = NCPoly()
        out.terms = {w: fc for w, c in self.terms.items() if (fc := f(c))}
        return out

    def __repr__(self) -> str:
        return f"NCPoly({render_text(self)!r})"


# ---------------------------------------------------------------------------
# commutative polynomials


def mono_from_word(word: tuple) -> tuple:
    exps: dict = {}
    for letter in word:
        idx = 1 if letter == INV else letter
        exps[idx] = exps.get(idx, 0) + (-1 if letter == INV else 1)
    return tuple(sorted((i, e) for i, e in exps.items() if e))


def mono_mul(m1: tuple, m2: tuple) -> tuple:
    exps = dict(m1)
    for i, e in m2:
        s = exps.get(i, 0) + e
        if s:
            exps[i] = s
        elif i in exps:
            del exps[i]
    return tuple(sorted(exps.items()))


def check_mono(m: tuple) -> None:
    last = 0
    for i, e in m:
        if not isinstance(i, int) or i < 1:
            raise ValueError(f"bad index {i!r} in monomial")
        if i <= last:
            raise ValueError(f"monomial {m!r} not sorted by index")
        if e == 0 or (e < 0 and i != 1):
            raise ValueError(f"bad exponent {e} for index {i}")
        last = i


def mono_length(m: tuple) -> int:
    """Total number of letters, counting an inverted d1 as one letter."""
    return sum(abs(e) for _, e in m)


class CPoly:
    """Element of the commutative polynomial ring in d1, d2, ... over Q."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for m, c in terms.items():
                c = _coeff(c)
                if c:
                    m = tuple(tuple(p) for p in m)
                    check_mono(m)
                    self.terms[m] = self.terms.get(m, Fraction(0)) + c
            self.terms = {m: c for m, c in self.terms.items() if c}

    @classmethod
    def zero(cls) -> "CPoly":
        return cls()

    @classmethod
    def one(cls) -> "CPoly":
        return cls({(): 1})

    @classmethod
    def letter(cls, i: int, coeff=1) -> "CPoly":
        if not isinstance(i, int) or i < 1:
            raise ValueError(f"bad letter index {i!r}")
        return cls({((i, 1),): coeff})

    @classmethod
    def from_mono(cls, m, coeff=1) -> "CPoly":
        return cls({tuple(m): coeff})

    def coefficient(self, m) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CPoly({(): other})
        if not isinstance(other, CPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "CPoly":
        out = CPoly()
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __add__(self, other) -> "CPoly":
        if isinstance(other, (int, Fraction)):
            other = CPoly({(): other})
        if not isinstance(other, CPoly):
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        res = CPoly()
        res.terms = out
        return res

    __radd__ = __add__

    def __sub__(self, other) -> "CPoly":
        return self + (-other if isinstance(other, CPoly) else CPoly({(): -_coeff(other)}))

    def __rsub__(self, other) -> "CPoly":
        return CPoly({(): other}) - self

    def __mul__(self, other) -> "CPoly":
        if isinstance(other, (int, Fraction)):
            c = _coeff(other)
            out = CPoly()
            if c:
                out.terms = {m: cc * c for m, cc in self.terms.items()}
            return out
        if not isinstance(other, CPoly):
            return NotImplemented
        acc: dict = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                m = mono_mul(u, v)
                s = acc.get(m, Fraction(0)) + cu * cv
                if s:
                    acc[m] = s
                elif m in acc:
                    del acc[m]
        res = CPoly()
        res.terms = acc
        return res

    def __rmul__(self, other) -> "CPoly":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def derive(self) -> "CPoly":
        """Commutative shadow of the derivation: d_i^e -> e d_i^{e-1} d_{i+1}."""
        out = CPoly.zero()
        for m, c in self.terms.items():
            for i, e in m:
                if e < 0:
                    raise ValueError("derive does not accept inverted letters")
                lowered = mono_mul(m, ((i, -1),))
                nm = mono_mul(lowered, ((i + 1, 1),))
                out = out + CPoly.from_mono(nm, c * e)
        return out

    def substitute(self, mapping: dict) -> "CPoly":
        out = CPoly.zero()
        for m, c in self.terms.items():
            factor = CPoly.one()
            for i, e in m:
                if i not in mapping:
                    raise ValueError(f"no image for letter {i}")
                if e < 0:
                    raise ValueError("substitute does not accept inverted letters")
                img = mapping[i]
                for _ in range(e):
                    factor = factor * img
            out = out + factor * c
        return out

    def restrict_length(self, k: int) -> "CPoly":
        res = CPoly()
        res.terms = {m: c for m, c in self.terms.items() if mono_length(m) == k}
        return res

    def max_length(self) -> int:
        return max((mono_length(m) for m in self.terms), default=0)

    def evaluate(self, values: dict) -> Fraction:
        """Plug a Fraction (or int) in for every letter."""
        total = Fraction(0)
        for m, c in self.terms.items():
            prod = c
            for i, e in m:
                if i not in values:
                    raise ValueError(f"no value for letter {i}")
                prod *= _coeff(values[i]) ** e
            total += prod
        return total

    def map_coeffs(self, f) -> "CPoly":
        out = CPoly()
        out.terms = {m: fc for m, c in self.terms.items() if (fc := f(c))}
        return out

    def __repr__(self) -> str:
        return f"CPoly({render_text(self)!r})"


# ---------------------------------------------------------------------------
# polynomials in q


class QPoly:
    """Polynomial in q with Fraction coefficients, dict power -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms is not None:
            if isinstance(terms, (int, Fraction)):
                terms = {0: terms}
            for p, c in terms.items():
                c = _coeff(c)
                if c:
                    if not isinstance(p, int) or p < 0:
                        raise ValueError(f"bad q power {p!r}")
                    self.terms[p] = self.terms.get(p, Fraction(0)) + c
            self.terms = {p: c for p, c in self.terms.items() if c}

    @classmethod
    def zero(cls) -> "QPoly":
        return cls()

    @classmethod
    def one(cls) -> "QPoly":
        return cls({0: 1})

    @classmethod
    def q(cls, power: int = 1) -> "QPoly":
        return cls({power: 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QPoly({0: other})
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "QPoly":
        out = QPoly()
        out.terms = {p: -c for p, c in self.terms.items()}
        return out

    def __add__(self, other) -> "QPoly":
        if isinstance(other, (int, Fraction)):
            other = QPoly({0: other})
        if not isinstance(other, QPoly):
            return NotImplemented
        out = dict(self.terms)
        for p, c in other.terms.items():
            s = out.get(p, Fraction(0)) + c
            if s:
                out[p] = s
            elif p in out:
                del out[p]
        res = QPoly()
        res.terms = out
        return res

    __radd__ = __add__

    def __sub__(self, other) -> "QPoly":
        return self + (-(other if isinstance(other, QPoly) else QPoly({0: other})))

    def __mul__(self, other) -> "QPoly":
        if isinstance(other, (int, Fraction)):
            other = QPoly({0: other})
        if not isinstance(other, QPoly):
            return NotImplemented
        acc: dict = {}
        for p1, c1 in self.terms.items():
            for p2, c2 in other.terms.items():
                p = p1 + p2
                s = acc.get(p, Fraction(0)) + c1 * c2
                if s:
                    acc[p] = s
                elif p in acc:
                    del acc[p]
        res = QPoly()
        res.terms = acc
        return res

    __rmul__ = __mul__

    def degree(self) -> int:
        return max(self.terms, default=-1)

    def divexact(self, other: "QPoly") -> "QPoly":
        """Exact polynomial division; raises ValueError on a nonzero remainder."""
        if not other:
            raise ValueError("division by zero polynomial")
        rem = dict(self.terms)
        dden = other.degree()
        lead = other.terms[dden]
        quot: dict = {}
        while rem:
            dnum = max(rem)
            if dnum < dden:
                raise ValueError("non-exact q-polynomial division")
            shift = dnum - dden
            factor = rem[dnum] / lead
            quot[shift] = factor
            for p, c in other.terms.items():
                pp = p + shift
                s = rem.get(pp, Fraction(0)) - factor * c
                if s:
                    rem[pp] = s
                elif pp in rem:
                    del rem[pp]
        res = QPoly()
        res.terms = quot
        return res

    def evaluate(self, q) -> Fraction:
        q = _coeff(q)
        return sum((c * q**p for p, c in self.terms.items()), Fraction(0))

    def __repr__(self) -> str:
        return f"QPoly({render_qpoly(self)!r})"


def qint(n: int) -> QPoly:
    """[n]_q = 1 + q + ... + q^{n-1}."""
    if n < 0:
        raise ValueError("qint needs n >= 0")
    return QPoly({i: 1 for i in range(n)})


def qfactorial(n: int) -> QPoly:
    out = QPoly.one()
    for i in range(1, n + 1):
        out = out * qint(i)
    return out


def qbinomial(n: int, k: int) -> QPoly:
    if k < 0 or k > n:
        return QPoly.zero()
    return qfactorial(n).divexact(qfactorial(k) * qfactorial(n - k))


def qmultinomial(n: int, parts) -> QPoly:
    parts = list(parts)
    if sum(parts) != n:
        raise ValueError("parts must sum to n")
    den = QPoly.one()
    for p in parts:
        den = den * qfactorial(p)
    return qfactorial(n).divexact(den)


# ---------------------------------------------------------------------------
# rendering and serialization

# Canonical term order (used for JSON serialization): ascending word length,
# then lexicographic on the letter sequence with d1^{-1} sorting just before
# d1. Text and LaTeX display the reverse of that, which is what puts the
# n = 3 table in its familiar shape: d1^3 + d2*d1 + 2*d1*d2 + d3.


def _letter_value(letter: int) -> int:
    return 0 if letter == INV else letter


def _word_of_mono(m: tuple) -> tuple:
    out = []
    for i, e in m:
        out.extend([INV if (i == 1 and e < 0) else i] * abs(e))
    return tuple(out)


def _sorted_terms(p):
    if isinstance(p, NCPoly):
        items = [(w, c) for w, c in p.terms.items()]
    elif isinstance(p, CPoly):
        items = [(_word_of_mono(m), c) for m, c in p.terms.items()]
    else:
        raise TypeError(f"cannot render {type(p).__name__}")
    items.sort(key=lambda wc: (len(wc[0]), tuple(_letter_value(x) for x in wc[0])))
    return items


def _runs(word: tuple):
    out = []
    for letter in word:
        if out and out[-1][0] == letter:
            out[-1][1] += 1
        else:
            out.append([letter, 1])
    return out


def _word_text(word: tuple, symbol: str, offset: int) -> str:
    parts = []
    for letter, count in _runs(word):
        if letter == INV:
            base, exp = f"{symbol}1", -count
        else:
            base, exp = f"{symbol}{letter + offset}", count
        parts.append(base if exp == 1 else f"{base}^{exp}")
    return "*".join(parts)


def _word_latex(word: tuple, symbol: str, offset: int) -> str:
    def sub(i):
        return f"_{i}" if 0 <= i <= 9 else f"_{{{i}}}"

    def sup(e):
        return "" if e == 1 else (f"^{e}" if 0 <= e <= 9 else f"^{{{e}}}")

    parts = []
    for letter, count in _runs(word):
        if letter == INV:
            parts.append(f"{symbol}{sub(1)}" + (f"^{{-{count}}}" if count > 1 else "^{-1}"))
        else:
            parts.append(f"{symbol}{sub(letter + offset)}{sup(count)}")
    return " ".join(parts)


def _coeff_text(c: Fraction) -> str:
    return str(c)


def render_text(p, symbol: str = "d", offset: int = 0) -> str:
    items = list(reversed(_sorted_terms(p)))
    if not items:
        return "0"
    chunks = []
    for word, c in items:
        mag = abs(c)
        body = _word_text(word, symbol, offset)
        if not word:
            s = _coeff_text(mag)
        elif mag == 1:
            s = body
        else:
            s = f"{_coeff_text(mag)}*{body}"
        chunks.append((c < 0, s))
    out = ("-" if chunks[0][0] else "") + chunks[0][1]
    for neg, s in chunks[1:]:
        out += (" - " if neg else " + ") + s
    return out


def render_latex(p, symbol: str = "d", offset: int = 0) -> str:
    items = list(reversed(_sorted_terms(p)))
    if not items:
        return "0"
    chunks = []
    for word, c in items:
        mag = abs(c)
        body = _word_latex(word, symbol, offset)
        if mag.denominator == 1:
            coeff = str(mag.numerator)
        else:
            coeff = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
        if not word:
            s = coeff
        elif mag == 1:
            s = body
        else:
            s = f"{coeff} {body}"
        chunks.append((c < 0, s))
    out = ("-" if chunks[0][0] else "") + chunks[0][1]
    for neg, s in chunks[1:]:
        out += (" - " if neg else " + ") + s
    return out


def render_qpoly(p: QPoly) -> str:
    if not p.terms:
        return "0"
    chunks = []
    for power in sorted(p.terms):
        c = p.terms[power]
        mag = abs(c)
        if power == 0:
            s = _coeff_text(mag)
        else:
            var = "q" if power == 1 else f"q^{power}"
            s = var if mag == 1 else f"{_coeff_text(mag)}*{var}"
        chunks.append((c < 0, s))
    out = ("-" if chunks[0][0] else "") + chunks[0][1]
    for neg, s in chunks[1:]:
        out += (" - " if neg else " + ") + s
    return out


def to_json_dict(p, algebra: str | None = None) -> dict:
    """Structured form: {"algebra": ..., "terms": [{"coeff": "p/q", "word": [...]}]}.

    Words are flat letter lists with -1 encoding d1^{-1}; commutative
    monomials are expanded to their sorted letter list.
    """
    if algebra is None:
        algebra = "nc" if isinstance(p, NCPoly) else "c"
    return {
        "algebra": algebra,
        "terms": [
            {"coeff": str(c), "word": list(word)} for word, c in _sorted_terms(p)
        ],
    }


def from_json_dict(d: dict):
    algebra = d["algebra"]
    if algebra in ("nc", "b-symbols"):
        out = NCPoly.zero()
        for t in d["terms"]:
            out = out + NCPoly.from_word(tuple(t["word"]), Fraction(t["coeff"]))
        return out
    if algebra == "c":
        out = CPoly.zero()
        for t in d["terms"]:
            out = out + CPoly.from_mono(mono_from_word(tuple(t["word"])), Fraction(t["coeff"]))
        return out
    raise ValueError(f"unknown algebra tag {algebra!r}")


def parse_text(s: str, symbol: str = "d", offset: int = 0, commutative: bool = False):
    """Inverse of render_text on its own output, e.g. 'd1^3 + d2*d1 - 1/2*d3'."""
    s = s.strip()
    if s == "0":
        return CPoly.zero() if commutative else NCPoly.zero()
    pieces = []
    for chunk in s.replace(" - ", " + -").split(" + "):
        chunk = chunk.strip()
        tsign = 1
        if chunk.startswith("-"):
            tsign = -1
            chunk = chunk[1:].strip()
        coeff = Fraction(1)
        word = []
        for factor in chunk.split("*"):
            factor = factor.strip()
            if not factor.startswith(symbol):
                coeff *= Fraction(factor)
                continue
            body = factor[len(symbol):]
            if "^" in body:
                idxs, exps = body.split("^")
                idx, exp = int(idxs), int(exps)
            else:
                idx, exp = int(body), 1
            idx -= offset
            if exp < 0:
                if idx != 1:
                    raise ValueError(f"negative power on {symbol}{idx + offset}")
                word.extend([INV] * (-exp))
            else:
                word.extend([idx] * exp)
        pieces.append((tuple(word), coeff * tsign))
    if commutative:
        out = CPoly.zero()
        for w, c in pieces:
            out = out + CPoly.from_mono(mono_from_word(w), c)
        return out
    out = NCPoly.zero()
    for w, c in pieces:
        out = out + NCPoly.from_word(w, c)
    return out
