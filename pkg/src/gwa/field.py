"""Exact coefficient fields: Q, F_p, cyclotomic Q(zeta_n), and rational functions Q(q).

Every element is kept in a canonical form, so equality is structural and
arithmetic is exact.  Cyclotomic fields are residue rings Q[x]/Phi_n(x) with
Phi_n obtained by repeated exact division of x^n - 1; rational functions are
reduced fractions of dense Q[q] polynomials with monic denominator.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import DivisionByZero, FieldMismatch, NoSuchRoot, ZeroElement, InvalidParameters

Q_KIND = "Q"
FP_KIND = "Fp"
CYC_KIND = "cyclotomic"
QQ_KIND = "Q(q)"

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# dense univariate polynomials over Q, as tuples without trailing zeros

def _ptrim(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _ptrim(out)


def _pneg(a):
    return tuple(-c for c in a)


def _psub(a, b):
    return _padd(a, _pneg(b))


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] += c * d
    return _ptrim(out)


def _pscale(a, c):
    if not c:
        return ()
    return tuple(x * c for x in a)


def _pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [_ZERO] * max(0, len(a) - len(b) + 1)
    r = list(a)
    inv_lead = 1 / b[-1]
    while len(r) >= len(b):
        if r[-1] == 0:
            r.pop()
            continue
        k = len(r) - len(b)
        c = r[-1] * inv_lead
        q[k] = c
        for i, d in enumerate(b):
            r[i + k] -= c * d
        r.pop()
    return _ptrim(q), _ptrim(r)


def _pgcd(a, b):
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if a:
        a = _pscale(a, 1 / a[-1])
    return a


def _pxgcd(a, b):
    """Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic or zero."""
    r0, r1 = a, b
    s0, s1 = (_ONE,), ()
    t0, t1 = (), (_ONE,)
    while r1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1))
        t0, t1 = t1, _psub(t0, _pmul(q, t1))
    if r0:
        lead = 1 / r0[-1]
        return _pscale(r0, lead), _pscale(s0, lead), _pscale(t0, lead)
    return (), (), ()


def _ppow(a, k):
    out = (_ONE,)
    base = a
    while k:
        if k & 1:
            out = _pmul(out, base)
        base = _pmul(base, base)
        k >>= 1
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int):
    """Phi_n over Q, by dividing x^n - 1 by Phi_d for every proper divisor d."""
    if n < 1:
        raise InvalidParameters("cyclotomic index must be positive")
    poly = _ptrim([-_ONE] + [_ZERO] * (n - 1) + [_ONE])
    for d in range(1, n):
        if n % d == 0:
            q, r = _pdivmod(poly, cyclotomic_polynomial(d))
            assert not r
            poly = q
    return poly


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------


class FieldSpec:
    """Identifies one of the supported coefficient fields."""

    __slots__ = ("kind", "p", "n", "gen_name", "_modulus", "_degree")

    def __init__(self, kind, p=None, n=None, gen_name=None):
        self.kind = kind
        self.p = p
        self.n = n
        self.gen_name = gen_name
        self._modulus = None
        self._degree = None
        if kind == FP_KIND:
            if not is_prime(p):
                raise InvalidParameters(f"{p} is not prime")
        elif kind == CYC_KIND:
            self._modulus = cyclotomic_polynomial(n)
            self._degree = len(self._modulus) - 1
        elif kind == QQ_KIND:
            if not gen_name:
                raise InvalidParameters("rational-function field needs a generator name")
        elif kind != Q_KIND:
            raise InvalidParameters(f"unknown field kind {kind!r}")

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.kind, self.p, self.n, self.gen_name)
                == (other.kind, other.p, other.n, other.gen_name))

    def __hash__(self):
        return hash((self.kind, self.p, self.n, self.gen_name))

    def __repr__(self):
        if self.kind == FP_KIND:
            return f"F{self.p}"
        if self.kind == CYC_KIND:
            return f"Q(zeta{self.n})"
        if self.kind == QQ_KIND:
            return f"Q({self.gen_name})"
        return "Q"

    def characteristic(self) -> int:
        return self.p if self.kind == FP_KIND else 0

    # -- constructors ------------------------------------------------------

    def zero(self) -> "FieldElement":
        return self.from_fraction(_ZERO)

    def one(self) -> "FieldElement":
        return self.from_fraction(_ONE)

    def from_int(self, k: int) -> "FieldElement":
        return self.from_fraction(Fraction(k))

    def from_fraction(self, f: Fraction) -> "FieldElement":
        if self.kind == Q_KIND:
            return FieldElement(self, f)
        if self.kind == FP_KIND:
            den = f.denominator % self.p
            if den == 0:
                raise DivisionByZero(f"denominator of {f} vanishes mod {self.p}")
            val = f.numerator * pow(den, self.p - 2, self.p) % self.p
            return FieldElement(self, val)
        if self.kind == CYC_KIND:
            payload = (f,) + (_ZERO,) * (self._degree - 1) if f else (_ZERO,) * self._degree
            return FieldElement(self, payload)
        return FieldElement(self, ((f,) if f else (), (_ONE,)))

    def generator(self) -> "FieldElement":
        """zeta_n for cyclotomic fields, q for rational-function fields."""
        if self.kind == CYC_KIND:
            if self._degree == 1:
                # zeta_1 = 1, zeta_2 = -1
                return self.from_int(1 if self.n == 1 else -1)
            payload = (_ZERO, _ONE) + (_ZERO,) * (self._degree - 2)
            return FieldElement(self, payload)
        if self.kind == QQ_KIND:
            return FieldElement(self, ((_ZERO, _ONE), (_ONE,)))
        raise InvalidParameters(f"{self!r} has no distinguished generator")

    def gen_symbol(self) -> str:
        if self.kind == CYC_KIND:
            return f"zeta{self.n}"
        if self.kind == QQ_KIND:
            return self.gen_name
        return ""

    def sample_pool(self):
        """Small fixed set of elements used by randomized sweeps."""
        ints = [self.from_int(k) for k in (-2, -1, 0, 1, 2, 3)]
        if self.kind == Q_KIND:
            ints.append(self.from_fraction(Fraction(1, 2)))
            ints.append(self.from_fraction(Fraction(-2, 3)))
        elif self.kind == CYC_KIND:
            z = self.generator()
            ints += [z, z + self.one(), z * z - self.one()]
        elif self.kind == QQ_KIND:
            q = self.generator()
            ints += [q, q + self.one(), q * q - q]
        return [x for x in ints]

    # -- JSON --------------------------------------------------------------

    def to_json(self) -> dict:
        if self.kind == FP_KIND:
            return {"field": "Fp", "p": self.p}
        if self.kind == CYC_KIND:
            return {"field": "cyclotomic", "n": self.n}
        if self.kind == QQ_KIND:
            return {"field": "Q(q)"}
        return {"field": "Q"}

    @staticmethod
    def from_json(data: dict) -> "FieldSpec":
        kind = data.get("field")
        if kind == "Q":
            return rationals()
        if kind == "Fp":
            return prime_field(int(data["p"]))
        if kind == "cyclotomic":
            return cyclotomic_field(int(data["n"]))
        if kind == "Q(q)":
            return rational_functions(data.get("generator", "q"))
        raise InvalidParameters(f"unknown field spec {data!r}")


def rationals() -> FieldSpec:
    return FieldSpec(Q_KIND)


def prime_field(p: int) -> FieldSpec:
    return FieldSpec(FP_KIND, p=p)


def cyclotomic_field(n: int) -> FieldSpec:
    return FieldSpec(CYC_KIND, n=n)


def rational_functions(gen_name: str = "q") -> FieldSpec:
    return FieldSpec(QQ_KIND, gen_name=gen_name)


class FieldElement:
    """An exact scalar; immutable, hashable, equality is structural."""

    __slots__ = ("spec", "payload", "_hash")

    def __init__(self, spec: FieldSpec, payload):
        self.spec = spec
        self.payload = payload
        self._hash = None

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        k = self.spec.kind
        if k == Q_KIND or k == FP_KIND:
            return self.payload == 0
        if k == CYC_KIND:
            return all(c == 0 for c in self.payload)
        return not self.payload[0]

    def is_one(self) -> bool:
        return self == self.spec.one()

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, FieldElement) or other.spec != self.spec:
            raise FieldMismatch(f"operands live in different fields: {self.spec!r} vs {getattr(other, 'spec', other)!r}")

    def __add__(self, other):
        self._check(other)
        k = self.spec.kind
        if k == Q_KIND:
            return FieldElement(self.spec, self.payload + other.payload)
        if k == FP_KIND:
            return FieldElement(self.spec, (self.payload + other.payload) % self.spec.p)
        if k == CYC_KIND:
            return FieldElement(self.spec, tuple(a + b for a, b in zip(self.payload, other.payload)))
        n1, d1 = self.payload
        n2, d2 = other.payload
        return _qq_reduce(self.spec, _padd(_pmul(n1, d2), _pmul(n2, d1)), _pmul(d1, d2))

    def __neg__(self):
        k = self.spec.kind
        if k == Q_KIND:
            return FieldElement(self.spec, -self.payload)
        if k == FP_KIND:
            return FieldElement(self.spec, -self.payload % self.spec.p)
        if k == CYC_KIND:
            return FieldElement(self.spec, tuple(-c for c in self.payload))
        n, d = self.payload
        return FieldElement(self.spec, (_pneg(n), d))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        k = self.spec.kind
        if k == Q_KIND:
            return FieldElement(self.spec, self.payload * other.payload)
        if k == FP_KIND:
            return FieldElement(self.spec, self.payload * other.payload % self.spec.p)
        if k == CYC_KIND:
            prod = _pmul(self.payload, other.payload)
            _, rem = _pdivmod(prod, self.spec._modulus)
            deg = self.spec._degree
            return FieldElement(self.spec, tuple(rem) + (_ZERO,) * (deg - len(rem)))
        n1, d1 = self.payload
        n2, d2 = other.payload
        return _qq_reduce(self.spec, _pmul(n1, n2), _pmul(d1, d2))

    def inv(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        k = self.spec.kind
        if k == Q_KIND:
            return FieldElement(self.spec, 1 / self.payload)
        if k == FP_KIND:
            return FieldElement(self.spec, pow(self.payload, self.spec.p - 2, self.spec.p))
        if k == CYC_KIND:
            g, s, _ = _pxgcd(_ptrim(self.payload), self.spec._modulus)
            assert g == (_ONE,), "cyclotomic modulus is irreducible over Q"
            deg = self.spec._degree
            return FieldElement(self.spec, tuple(s) + (_ZERO,) * (deg - len(s)))
        n, d = self.payload
        return _qq_reduce(self.spec, d, n)

    def __truediv__(self, other):
        self._check(other)
        return self * other.inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        out = self.spec.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        return (isinstance(other, FieldElement) and self.spec == other.spec
                and self.payload == other.payload)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.spec, self.payload))
        return self._hash

    def __repr__(self):
        return format_scalar(self)

    # -- misc ----------------------------------------------------------------

    def as_fraction(self) -> Fraction:
        """The value as a rational number, when the element is rational."""
        k = self.spec.kind
        if k == Q_KIND:
            return self.payload
        if k == FP_KIND:
            return Fraction(self.payload)
        if k == CYC_KIND:
            if any(c for c in self.payload[1:]):
                raise InvalidParameters(f"{self!r} is not rational")
            return self.payload[0]
        n, d = self.payload
        if len(n) > 1 or len(d) > 1:
            raise InvalidParameters(f"{self!r} is not rational")
        return (n[0] if n else _ZERO) / d[0]


def _qq_reduce(spec, num, den):
    if not den:
        raise DivisionByZero("zero denominator in rational function")
    if not num:
        return FieldElement(spec, ((), (_ONE,)))
    g = _pgcd(num, den)
    if len(g) > 1:
        num = _pdivmod(num, g)[0]
        den = _pdivmod(den, g)[0]
    lead = 1 / den[-1]
    return FieldElement(spec, (_pscale(num, lead), _pscale(den, lead)))


# ---------------------------------------------------------------------------
# orders and roots of unity


def field_arith(op: str, x: FieldElement, y: FieldElement | None = None):
    """Uniform entry point over the dunder arithmetic; mainly for the CLI."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    if op == "neg":
        return -x
    if op == "inv":
        return x.inv()
    if op == "eq":
        return x == y
    if op == "pow":
        return x ** int(y.as_fraction())
    raise InvalidParameters(f"unknown field operation {op!r}")


def multiplicative_order(x: FieldElement, bound: int):
    """Least k <= bound with x^k = 1, or None if no such k exists below the bound."""
    if x.is_zero():
        raise ZeroElement("zero has no multiplicative order")
    one = x.spec.one()
    acc = x
    for k in range(1, bound + 1):
        if acc == one:
            return k
        acc = acc * x
    return None


def element_order(x: FieldElement):
    """Exact multiplicative order, or None when infinite."""
    if x.is_zero():
        raise ZeroElement("zero has no multiplicative order")
    spec = x.spec
    one = spec.one()
    if x == one:
        return 1
    kind = spec.kind
    if kind == FP_KIND:
        m = spec.p - 1
    elif kind == CYC_KIND:
        m = spec.n if spec.n % 2 == 0 else 2 * spec.n
    else:
        # Q and Q(q): the only roots of unity are +-1
        return 2 if x == -one else None
    if x ** m != one:
        return None
    order = m
    for p in _prime_factors(m):
        while order % p == 0 and x ** (order // p) == one:
            order //= p
    return order


def root_of_unity(spec: FieldSpec, ell: int) -> FieldElement:
    """An element of multiplicative order exactly ell, when the field has one."""
    if ell < 1:
        raise InvalidParameters("order must be positive")
    if ell == 1:
        return spec.one()
    if ell == 2:
        return -spec.one()
    kind = spec.kind
    if kind == FP_KIND:
        p = spec.p
        if (p - 1) % ell != 0:
            raise NoSuchRoot(f"F_{p} has no element of order {ell}")
        for g in range(2, p):
            x = spec.from_int(pow(g, (p - 1) // ell, p))
            if element_order(x) == ell:
                return x
        raise NoSuchRoot(f"F_{p} has no element of order {ell}")  # unreachable
    if kind == CYC_KIND:
        n = spec.n
        if n % ell == 0:
            return spec.generator() ** (n // ell)
        if n % 2 == 1 and ell % 2 == 0 and (ell // 2) % 2 == 1 and n % (ell // 2) == 0:
            return -(spec.generator() ** (n // (ell // 2)))
        raise NoSuchRoot(f"Q(zeta{n}) has no element of order {ell}")
    raise NoSuchRoot(f"{spec!r} has only the roots of unity +-1")


# ---------------------------------------------------------------------------
# printing and parsing of scalars


def _format_fraction(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _format_poly(coeffs, sym: str) -> str:
    """Dense Q[sym] polynomial as compact text, descending powers."""
    if not coeffs:
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        neg = c < 0
        mag = -c if neg else c
        if i == 0:
            body = _format_fraction(mag)
        else:
            head = "" if mag == 1 else _format_fraction(mag) + "*"
            body = f"{head}{sym}" + (f"^{i}" if i > 1 else "")
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("-" if neg else "+") + body)
    return "".join(parts) if parts else "0"


def format_scalar(x: FieldElement) -> str:
    """Canonical text form: "3/7", "zeta3^2+1", "q^2/(q-1)"."""
    kind = x.spec.kind
    if kind == Q_KIND:
        return _format_fraction(x.payload)
    if kind == FP_KIND:
        return str(x.payload)
    if kind == CYC_KIND:
        return _format_poly(_ptrim(x.payload), x.spec.gen_symbol())
    num, den = x.payload
    num_s = _format_poly(num, x.spec.gen_name)
    if den == (_ONE,):
        return num_s
    den_s = _format_poly(den, x.spec.gen_name)
    if len([c for c in num if c]) > 1 or num_s.startswith("-"):
        num_s = f"({num_s})"
    return f"{num_s}/({den_s})"


def scalar_needs_parens(x: FieldElement) -> bool:
    """True when format_scalar(x) must be parenthesized inside a product."""
    s = format_scalar(x)
    return any(ch in s[1:] for ch in "+-") or "/" in s or s.startswith("-")
