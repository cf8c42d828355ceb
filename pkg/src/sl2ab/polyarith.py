"""Exact polynomial arithmetic over Z and F_p, plus small number-theory helpers.

Everything is arbitrary-precision integer (or Fraction) arithmetic; no floats
enter any code path.  Polynomials store coefficients lowest degree first with
no trailing zeros, so the zero polynomial has an empty coefficient tuple and
degree -1.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Iterator


# ---------------------------------------------------------------------------
# integer helpers


def factorint(n: int) -> dict[int, int]:
    """Prime factorization of |n| by trial division, as {prime: exponent}."""
    n = abs(n)
    if n < 2:
        return {}
    out: dict[int, int] = {}
    for p in itertools.chain((2,), itertools.count(3, 2)):
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in itertools.chain((2,), itertools.count(3, 2)):
        if p * p > n:
            return True
        if n % p == 0:
            return False
    return True


def is_squarefree(n: int) -> bool:
    """True when no prime square divides n (|n| taken; 0 is not squarefree)."""
    n = abs(n)
    if n == 0:
        return False
    return all(e == 1 for e in factorint(n).values())


def is_prime_power(q: int) -> tuple[int, int] | None:
    """(p, r) with q = p**r, or None when q is not a prime power."""
    if q < 2:
        return None
    fac = factorint(q)
    if len(fac) != 1:
        return None
    ((p, r),) = fac.items()
    return p, r


def primes_dividing(n: int) -> tuple[int, ...]:
    return tuple(sorted(factorint(n)))


def euler_phi(n: int) -> int:
    """Euler totient by trial-division factorization."""
    if n < 1:
        raise ValueError(f"euler_phi needs n >= 1, got {n}")
    out = 1
    for p, e in factorint(n).items():
        out *= p ** (e - 1) * (p - 1)
    return out


def multiplicative_order(a: int, s: int) -> int:
    """Least f >= 1 with a**f = 1 mod s.  Defined only for gcd(a, s) = 1."""
    if s < 1:
        raise ValueError(f"modulus must be >= 1, got {s}")
    if gcd(a, s) != 1:
        raise ValueError(f"multiplicative order undefined: gcd({a}, {s}) != 1")
    if s == 1:
        return 1
    x = a % s
    f = 1
    while x != 1:
        x = (x * a) % s
        f += 1
    return f


# ---------------------------------------------------------------------------
# integer polynomials


class IntPoly:
    """Univariate integer polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def from_csv(cls, text: str) -> "IntPoly":
        """Parse comma-separated coefficients, constant term first.

        "-5,0,0,1" is x^3 - 5.  A unicode minus sign is accepted.
        """
        body = text.replace("−", "-").strip()
        if not body:
            raise ValueError("empty polynomial")
        try:
            return cls(int(part.strip()) for part in body.split(","))
        except ValueError:
            raise ValueError(f"bad polynomial coefficient list: {text!r}") from None

    @classmethod
    def x_power_minus_one(cls, n: int) -> "IntPoly":
        return cls([-1] + [0] * (n - 1) + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPoly(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def divmod_monic(self, g: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Exact-integer (quotient, remainder) for a monic divisor g."""
        if not g.is_monic:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        dg = g.degree
        q = [0] * max(len(rem) - dg, 0)
        for i in range(len(rem) - dg - 1, -1, -1):
            c = rem[i + dg]
            if c:
                q[i] = c
                for j, gc in enumerate(g.coeffs):
                    rem[i + j] -= c * gc
        return IntPoly(q), IntPoly(rem[:dg])

    def exact_div_monic(self, g: "IntPoly") -> "IntPoly":
        q, r = self.divmod_monic(g)
        if not r.is_zero:
            raise ValueError(f"{self} is not divisible by {g}")
        return q

    def scale_div(self, k: int) -> "IntPoly":
        """Divide every coefficient by k, which must divide exactly."""
        if any(c % k for c in self.coeffs):
            raise ValueError(f"coefficients of {self} not divisible by {k}")
        return IntPoly(c // k for c in self.coeffs)

    def reduce_mod(self, p: int) -> "ModPoly":
        return ModPoly(p, self.coeffs)

    def csv(self) -> str:
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    def __str__(self) -> str:
        return _render_poly(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"


def _render_poly(coeffs: tuple[int, ...]) -> str:
    if not coeffs:
        return "0"
    parts: list[str] = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            body = str(abs(c))
        else:
            xpow = "x" if i == 1 else f"x^{i}"
            body = xpow if abs(c) == 1 else f"{abs(c)}{xpow}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+{body}" if c > 0 else f"-{body}")
    return "".join(parts)


# ---------------------------------------------------------------------------
# polynomials over F_p


class ModPoly:
    """Univariate polynomial over F_p, p prime; coefficients lowest degree first."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int]):
        if p < 2 or not is_prime(p):
            raise ValueError(f"modulus must be prime, got {p}")
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.p = p
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def x(cls, p: int) -> "ModPoly":
        return cls(p, (0, 1))

    @classmethod
    def one(cls, p: int) -> "ModPoly":
        return cls(p, (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ModPoly)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash(("ModPoly", self.p, self.coeffs))

    def _check(self, other: "ModPoly") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed moduli {self.p} and {other.p}")

    def __add__(self, other: "ModPoly") -> "ModPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return ModPoly(
            self.p,
            ((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)),
        )

    def __neg__(self) -> "ModPoly":
        return ModPoly(self.p, (-c for c in self.coeffs))

    def __sub__(self, other: "ModPoly") -> "ModPoly":
        return self + (-other)

    def __mul__(self, other: "ModPoly") -> "ModPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ModPoly(self.p, ())
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = (out[i + j] + ai * bj) % self.p
        return ModPoly(self.p, out)

    def __divmod__(self, g: "ModPoly") -> tuple["ModPoly", "ModPoly"]:
        self._check(g)
        if g.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        inv_lc = pow(g.leading, -1, p)
        rem = list(self.coeffs)
        dg = g.degree
        q = [0] * max(len(rem) - dg, 0)
        for i in range(len(rem) - dg - 1, -1, -1):
            c = (rem[i + dg] * inv_lc) % p
            if c:
                q[i] = c
                for j, gc in enumerate(g.coeffs):
                    rem[i + j] = (rem[i + j] - c * gc) % p
        return ModPoly(p, q), ModPoly(p, rem[:dg])

    def __floordiv__(self, g: "ModPoly") -> "ModPoly":
        return divmod(self, g)[0]

    def __mod__(self, g: "ModPoly") -> "ModPoly":
        return divmod(self, g)[1]

    def monic(self) -> "ModPoly":
        if self.is_zero or self.is_monic:
            return self
        inv = pow(self.leading, -1, self.p)
        return ModPoly(self.p, (c * inv for c in self.coeffs))

    def gcd(self, other: "ModPoly") -> "ModPoly":
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "ModPoly":
        return ModPoly(self.p, (i * c for i, c in enumerate(self.coeffs) if i))

    def lift(self) -> IntPoly:
        """Integer lift with coefficients in [0, p)."""
        return IntPoly(self.coeffs)

    def __str__(self) -> str:
        return _render_poly(self.coeffs)

    def __repr__(self) -> str:
        return f"ModPoly({self.p}, {list(self.coeffs)!r})"


def _monic_polys(p: int, degree: int) -> Iterator[ModPoly]:
    """All monic degree-d polynomials over F_p, lexicographic in low coefficients."""
    for lower in itertools.product(range(p), repeat=degree):
        yield ModPoly(p, lower + (1,))


def _pth_root(f: ModPoly) -> ModPoly:
    """g with g**p = f, for f in F_p[x^p].  Uses a**p = a on coefficients."""
    p = f.p
    if any(c and i % p for i, c in enumerate(f.coeffs)):
        raise ValueError(f"{f} is not a p-th power over F_{p}")
    return ModPoly(p, f.coeffs[::p])


def squarefree_decomposition(f: ModPoly) -> list[tuple[ModPoly, int]]:
    """Monic squarefree pairwise-coprime parts with multiplicities, product f.

    Characteristic-p aware: a vanishing derivative means f is a p-th power and
    the p-th root is decomposed recursively.  Mandatory for p = 2 and 3, where
    repeated factors routinely kill the derivative.
    """
    if not f.is_monic:
        raise ValueError("squarefree decomposition needs a monic polynomial")
    out: list[tuple[ModPoly, int]] = []
    deriv = f.derivative()
    if deriv.is_zero:
        return [(g, m * f.p) for g, m in squarefree_decomposition(_pth_root(f))]
    c = f.gcd(deriv)
    w = f // c
    i = 1
    while w.degree > 0:
        y = w.gcd(c)
        z = w // y
        if z.degree > 0:
            out.append((z, i))
        i += 1
        w = y
        c = c // y
    if c.degree > 0:
        out.extend((g, m * f.p) for g, m in squarefree_decomposition(_pth_root(c)))
    return out


def _factor_squarefree_monic(f: ModPoly) -> list[ModPoly]:
    """Irreducible factors of a squarefree monic f, by exhaustive trial division.

    Candidates are tried in increasing degree, so every successful divisor is
    irreducible; whatever survives past degree deg/2 is itself irreducible.
    """
    factors: list[ModPoly] = []
    rem = f
    d = 1
    while rem.degree >= 1:
        if d > rem.degree // 2:
            factors.append(rem)
            return factors
        for cand in _monic_polys(f.p, d):
            q, r = divmod(rem, cand)
            if r.is_zero:
                factors.append(cand)
                rem = q
        d += 1
    return factors


def factor_mod_p(f: ModPoly) -> list[tuple[ModPoly, int]]:
    """Complete factorization of monic f over F_p into (irreducible, multiplicity).

    Squarefree decomposition first, then trial division of each squarefree part.
    Exhaustive enumeration keeps this honest only for tiny p; callers stay at
    p in {2, 3} and the function rejects p > 7.
    """
    if f.degree < 1:
        raise ValueError(f"need degree >= 1, got {f!r}")
    if not f.is_monic:
        raise ValueError(f"need a monic polynomial, got {f!r}")
    if f.p > 7:
        raise ValueError(f"factor_mod_p supports p <= 7 only, got p = {f.p}")
    found: dict[ModPoly, int] = {}
    for part, mult in squarefree_decomposition(f):
        for irr in _factor_squarefree_monic(part):
            found[irr] = found.get(irr, 0) + mult
    return sorted(found.items(), key=lambda fm: (fm[0].degree, fm[0].coeffs))


def _pow_x_mod(f: ModPoly, e: int) -> ModPoly:
    """x**e reduced mod f, by square-and-multiply."""
    result = ModPoly.one(f.p)
    base = ModPoly.x(f.p) % f
    while e:
        if e & 1:
            result = (result * base) % f
        base = (base * base) % f
        e >>= 1
    return result


def is_irreducible_mod_p(f: ModPoly) -> bool:
    """Rabin's irreducibility test over F_p.  Works for any prime p."""
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    if not f.is_monic:
        f = f.monic()
    p = f.p
    x = ModPoly.x(p)
    if _pow_x_mod(f, p**n) != x % f:
        return False
    for ell in factorint(n):
        g = (_pow_x_mod(f, p ** (n // ell)) - x).gcd(f)
        if g.degree != 0:
            return False
    return True


_IRREDUCIBILITY_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19)


def irreducible_over_q_check(f: IntPoly) -> bool | None:
    """Best-effort irreducibility verdict over Q for monic f.

    True: certified irreducible (irreducible mod some p <= 19).
    False: certified reducible (an integer root exists and degree > 1).
    None: inconclusive; the caller should treat irreducibility as user-asserted.
    """
    if not f.is_monic or f.degree < 1:
        raise ValueError("check needs a monic polynomial of degree >= 1")
    if f.degree == 1:
        return True
    c0 = f.coeffs[0]
    if c0 == 0:
        return False
    if abs(c0) <= 10**6:
        divisors = {1}
        for p, e in factorint(c0).items():
            divisors = {d * p**k for d in divisors for k in range(e + 1)}
        for d in sorted(divisors):
            if f(d) == 0 or f(-d) == 0:
                return False
    for p in _IRREDUCIBILITY_PRIMES:
        if is_irreducible_mod_p(f.reduce_mod(p)):
            return True
    return None


# ---------------------------------------------------------------------------
# Sturm chains

_FracPoly = list[Fraction]


def _frac_strip(cs: _FracPoly) -> _FracPoly:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _frac_deriv(cs: _FracPoly) -> _FracPoly:
    return _frac_strip([i * c for i, c in enumerate(cs)][1:])


def _frac_rem(a: _FracPoly, b: _FracPoly) -> _FracPoly:
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    for i in range(len(rem) - db - 1, -1, -1):
        c = rem[i + db] / lead
        if c:
            for j, bc in enumerate(b):
                rem[i + j] -= c * bc
    return _frac_strip(rem[:db])


def _frac_gcd(a: _FracPoly, b: _FracPoly) -> _FracPoly:
    while b:
        a, b = b, _frac_rem(a, b)
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _frac_exact_div(a: _FracPoly, b: _FracPoly) -> _FracPoly:
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    q = [Fraction(0)] * max(len(rem) - db, 0)
    for i in range(len(rem) - db - 1, -1, -1):
        c = rem[i + db] / lead
        q[i] = c
        if c:
            for j, bc in enumerate(b):
                rem[i + j] -= c * bc
    assert not _frac_strip(rem), "division was not exact"
    return _frac_strip(q)


def _sign_variations(signs: list[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def sturm_real_roots(f: IntPoly) -> int:
    """Number of distinct real roots of f, by a Sturm chain over Q.

    The polynomial is first divided by gcd(f, f') so repeated roots count once.
    Signs at the two infinities come from leading coefficients alone.
    """
    if f.is_zero:
        raise ValueError("zero polynomial has no root count")
    fq: _FracPoly = [Fraction(c) for c in f.coeffs]
    if len(fq) - 1 >= 1:
        g = _frac_gcd(fq, _frac_deriv(fq))
        if len(g) - 1 >= 1:
            fq = _frac_exact_div(fq, g)
    if len(fq) - 1 < 1:
        return 0
    chain: list[_FracPoly] = [fq, _frac_deriv(fq)]
    while len(chain[-1]) - 1 > 0:
        r = [-c for c in _frac_rem(chain[-2], chain[-1])]
        if not r:
            break
        chain.append(r)
    at_pos = [1 if cs[-1] > 0 else -1 for cs in chain if cs]
    at_neg = [
        (1 if cs[-1] > 0 else -1) * (-1) ** (len(cs) - 1) for cs in chain if cs
    ]
    return _sign_variations(at_neg) - _sign_variations(at_pos)


# ---------------------------------------------------------------------------
# cyclotomic polynomials


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, by iterated exact division of x^n - 1."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    quotient = IntPoly.x_power_minus_one(n)
    for d in range(1, n):
        if n % d == 0:
            quotient = quotient.exact_div_monic(cyclotomic_polynomial(d))
    return quotient
