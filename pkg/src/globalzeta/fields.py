"""Global-field descriptors, their places, and exact covolume data.

A global field is described either by a NumberFieldDescriptor (the
rationals or a quadratic field, carrying the signature (r1, r2) and the
fundamental discriminant) or by a FunctionFieldDescriptor (constant
field size q, genus g, and the integer L-polynomial P with deg P = 2g).

The covolume of the field inside its adeles is sqrt|D| for number
fields and q^(g-1) in positive characteristic; both closed forms are
kept exact where the data allows.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from . import ffield
from .errors import DomainError, SymmetryError, WeilBoundWarning
from .kernel import POLE_EXCLUSION_RADIUS, _as_complex, kronecker_chi


# ---------------------------------------------------------------------------
# Descriptors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NumberFieldDescriptor:
    """The rationals or a quadratic field Q(sqrt d).

    r1 and r2 count real and imaginary places; r1 + 2*r2 is the degree.
    discriminant is 1 for Q and the fundamental discriminant otherwise.
    """

    kind: str  # 'rationals' | 'quadratic'
    d: int
    discriminant: int
    r1: int
    r2: int

    @property
    def degree(self) -> int:
        return self.r1 + 2 * self.r2


@dataclass(frozen=True)
class LPolynomial:
    """Integer numerator P(T) of a function-field zeta, a_0 = 1, deg = 2g.

    The dataclass itself only pins a_0 = 1 and even degree; the
    coefficient symmetry a[2g-i] = q^(g-i) a[i] involves q and is
    enforced by make_curve_function_field.
    """

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if not coeffs:
            raise DomainError("LPolynomial needs at least the constant coefficient")
        if coeffs[0] != 1:
            raise DomainError(f"LPolynomial constant coefficient must be 1, got {coeffs[0]}")
        if (len(coeffs) - 1) % 2 != 0:
            raise DomainError(f"LPolynomial degree must be even, got {len(coeffs) - 1}")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def genus(self) -> int:
        return self.degree // 2

    def __call__(self, t: complex) -> complex:
        acc = complex(0.0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def evaluate_exact(self, t: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def symmetry_violation(self, q: int) -> int | None:
        """First index i with a[2g-i] != q^(g-i) a[i], or None."""
        g = self.genus
        a = self.coefficients
        for i in range(g + 1):
            if a[2 * g - i] != q ** (g - i) * a[i]:
                return i
        return None


@dataclass(frozen=True)
class FunctionFieldDescriptor:
    """A function field of genus g over the constant field GF(q)."""

    q: int
    genus: int
    lpoly: LPolynomial


FieldDescriptor = NumberFieldDescriptor | FunctionFieldDescriptor


@dataclass(frozen=True)
class Place:
    """One place of a global field, carrying its residual cardinality q_v."""

    qv: int
    kind: str  # 'rational_prime' | 'monic_irreducible' | 'infinite'
    prime: int | None = None
    poly: tuple[int, ...] | None = None
    slot: int = 0

    @property
    def label(self) -> str:
        if self.kind == "infinite":
            return "inf"
        if self.kind == "rational_prime":
            return f"{self.prime}#{self.slot}" if self.slot else f"{self.prime}"
        return _poly_label(self.poly)

    def sort_key(self):
        if self.kind == "infinite":
            return (self.qv, 0, (), 0, 0)
        if self.kind == "monic_irreducible":
            return (self.qv, 1, self.poly, 0, 0)
        return (self.qv, 1, (), self.prime, self.slot)


def _poly_label(poly: tuple[int, ...]) -> str:
    terms = []
    for i in range(len(poly) - 1, -1, -1):
        c = poly[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(f"{c}")
        elif i == 1:
            terms.append("T" if c == 1 else f"{c}T")
        else:
            terms.append(f"T^{i}" if c == 1 else f"{c}T^{i}")
    return "+".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# Small integer helpers
# ---------------------------------------------------------------------------

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def _is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        if n % d == 0:
            n //= d
        d += 1
    return True


def _primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(math.isqrt(n)) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, flag in enumerate(sieve) if flag]


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def make_rationals() -> NumberFieldDescriptor:
    """The degree-1 base case: Q with discriminant 1 and one real place."""
    return NumberFieldDescriptor(kind="rationals", d=1, discriminant=1, r1=1, r2=0)


def make_quadratic(d: int) -> NumberFieldDescriptor:
    """Q(sqrt d) for squarefree d not in {0, 1}.

    The discriminant is d itself when d = 1 mod 4 and 4d otherwise;
    the signature is (2, 0) for real and (0, 1) for imaginary fields.
    """
    if d in (0, 1):
        raise DomainError(f"make_quadratic: d must not be {d}")
    if not _is_squarefree(d):
        raise DomainError(f"make_quadratic: d = {d} is not squarefree")
    disc = d if d % 4 == 1 else 4 * d
    if d > 0:
        r1, r2 = 2, 0
    else:
        r1, r2 = 0, 1
    return NumberFieldDescriptor(kind="quadratic", d=d, discriminant=disc, r1=r1, r2=r2)


def make_rational_function_field(q: int) -> FunctionFieldDescriptor:
    """GF(q)(T): genus 0, trivial L-polynomial."""
    if ffield.factor_prime_power(q) is None:
        raise DomainError(f"make_rational_function_field: {q!r} is not a prime power")
    return FunctionFieldDescriptor(q=q, genus=0, lpoly=LPolynomial((1,)))


def make_curve_function_field(q: int, lpoly) -> FunctionFieldDescriptor:
    """Function field with the given L-polynomial over GF(q).

    Rejects coefficient lists violating the symmetry
    a[2g-i] = q^(g-i) a[i] with SymmetryError; that symmetry is the
    positive-characteristic functional equation and is an invariant of
    every constructible descriptor.
    """
    if ffield.factor_prime_power(q) is None:
        raise DomainError(f"make_curve_function_field: {q!r} is not a prime power")
    if not isinstance(lpoly, LPolynomial):
        lpoly = LPolynomial(tuple(lpoly))
    witness = lpoly.symmetry_violation(q)
    if witness is not None:
        g = lpoly.genus
        a = lpoly.coefficients
        raise SymmetryError(
            f"L-polynomial symmetry fails at index {witness}: "
            f"a[{2 * g - witness}] = {a[2 * g - witness]} != "
            f"{q ** (g - witness)} * {a[witness]}"
        )
    return FunctionFieldDescriptor(q=q, genus=lpoly.genus, lpoly=lpoly)


def lpoly_from_point_counts(q: int, genus: int, counts) -> LPolynomial:
    """L-polynomial from point counts N_1..N_g over GF(q^m).

    The power sums of the inverse roots are p_m = q^m + 1 - N_m; the
    first g+1 coefficients follow from Newton's identities
    m a_m = -sum_{j<m} a_j p_(m-j), and the upper half is filled in by
    the symmetry a[2g-i] = q^(g-i) a[i].  Counts violating the Weil
    bound |a_i| <= C(2g,i) q^(i/2) trigger a WeilBoundWarning but are
    not rejected.
    """
    if ffield.factor_prime_power(q) is None:
        raise DomainError(f"lpoly_from_point_counts: {q!r} is not a prime power")
    counts = list(counts)
    if genus < 0:
        raise DomainError("lpoly_from_point_counts: genus must be >= 0")
    if len(counts) != genus:
        raise DomainError(
            f"lpoly_from_point_counts: expected {genus} counts, got {len(counts)}"
        )
    if any(int(n) != n or n <= 0 for n in counts):
        raise DomainError("lpoly_from_point_counts: counts must be positive integers")
    if genus == 0:
        return LPolynomial((1,))
    power_sums = [q ** m + 1 - int(counts[m - 1]) for m in range(1, genus + 1)]
    a: list[Fraction] = [Fraction(1)]
    for m in range(1, genus + 1):
        acc = Fraction(0)
        for j in range(m):
            acc += a[j] * power_sums[m - 1 - j]
        am = -acc / m
        if am.denominator != 1:
            raise DomainError(
                f"lpoly_from_point_counts: counts give non-integer coefficient a_{m} = {am}"
            )
        a.append(am)
    coeffs = [int(c) for c in a]
    for i in range(genus - 1, -1, -1):
        coeffs.append(q ** (genus - i) * coeffs[i])
    for i, c in enumerate(coeffs):
        bound_sq = math.comb(2 * genus, i) ** 2 * q ** i
        if c * c > bound_sq:
            warnings.warn(
                f"coefficient a_{i} = {c} violates the Weil bound "
                f"|a_{i}| <= C({2 * genus},{i}) q^({i}/2)",
                WeilBoundWarning,
                stacklevel=2,
            )
            break
    return LPolynomial(tuple(coeffs))


# ---------------------------------------------------------------------------
# Covolume
# ---------------------------------------------------------------------------

def covolume(field: FieldDescriptor):
    """Adelic covolume: sqrt|D| for number fields, q^(g-1) for function fields.

    Exact where the data allows: an int when |D| is a perfect square,
    a Fraction in positive characteristic, a float otherwise.
    """
    if isinstance(field, FunctionFieldDescriptor):
        e = field.genus - 1
        return Fraction(field.q) ** e
    n = abs(field.discriminant)
    r = math.isqrt(n)
    if r * r == n:
        return r
    return math.sqrt(n)


def log_covolume(field: FieldDescriptor) -> float:
    """log of the covolume, computed from exact data."""
    if isinstance(field, FunctionFieldDescriptor):
        return (field.genus - 1) * math.log(field.q)
    return 0.5 * math.log(abs(field.discriminant))


# ---------------------------------------------------------------------------
# Places and Euler factors
# ---------------------------------------------------------------------------

def splitting_type(field: NumberFieldDescriptor, p: int) -> str:
    """'split', 'inert' or 'ramified' for a rational prime p in a quadratic field."""
    if not isinstance(field, NumberFieldDescriptor) or field.kind != "quadratic":
        raise DomainError("splitting_type: field must be quadratic")
    if not _is_prime(p):
        raise DomainError(f"splitting_type: {p!r} is not prime")
    if field.discriminant % p == 0:
        return "ramified"
    return "split" if kronecker_chi(field.discriminant, p) == 1 else "inert"


def places_above(field: NumberFieldDescriptor, p: int) -> list[Place]:
    """The places of a number field lying above the rational prime p."""
    if field.kind == "rationals":
        if not _is_prime(p):
            raise DomainError(f"places_above: {p!r} is not prime")
        return [Place(qv=p, kind="rational_prime", prime=p)]
    typ = splitting_type(field, p)
    if typ == "split":
        return [
            Place(qv=p, kind="rational_prime", prime=p, slot=1),
            Place(qv=p, kind="rational_prime", prime=p, slot=2),
        ]
    if typ == "inert":
        return [Place(qv=p * p, kind="rational_prime", prime=p)]
    return [Place(qv=p, kind="rational_prime", prime=p)]


def enumerate_places(field: FieldDescriptor, norm_bound: int) -> list[Place]:
    """All places with q_v <= norm_bound in deterministic order.

    Order is ascending q_v; ties put the infinite place first, then
    monic irreducibles in canonical coefficient order, then rational
    primes (conjugate places of a split prime in slot order).  Curve
    fields of positive genus carry no place list (their zeta comes from
    the closed rational form) and are rejected.
    """
    if norm_bound < 2:
        raise DomainError("enumerate_places: norm_bound must be >= 2")
    out: list[Place] = []
    if isinstance(field, FunctionFieldDescriptor):
        if field.genus != 0:
            raise DomainError(
                "enumerate_places: positive-genus fields carry no explicit place list"
            )
        q = field.q
        out.append(Place(qv=q, kind="infinite"))
        degree = 1
        while q ** degree <= norm_bound:
            for poly in ffield.monic_irreducibles(q, degree):
                out.append(Place(qv=q ** degree, kind="monic_irreducible", poly=poly))
            degree += 1
    else:
        for p in _primes_up_to(norm_bound):
            for place in places_above(field, p):
                if place.qv <= norm_bound:
                    out.append(place)
    out.sort(key=Place.sort_key)
    return out


def local_euler_factor(field: FieldDescriptor, place: Place, s) -> complex:
    """The local factor (1 - q_v^-s)^-1 of the Euler product at one place."""
    s = _as_complex(s)
    if isinstance(field, FunctionFieldDescriptor):
        if place.kind == "rational_prime":
            raise DomainError("local_euler_factor: place does not belong to the field")
    elif place.kind != "rational_prime":
        raise DomainError("local_euler_factor: place does not belong to the field")
    denom = 1.0 - cmath.exp(-s * math.log(place.qv))
    if abs(denom) < POLE_EXCLUSION_RADIUS:
        raise DomainError(
            f"local_euler_factor: 1 - q_v^-s is within {POLE_EXCLUSION_RADIUS} of 0 at s = {s!r}"
        )
    return 1.0 / denom


def truncated_euler_product(field: FieldDescriptor, s, norm_bound: int) -> complex:
    """Product of local factors over all places with q_v <= norm_bound (Re s > 1)."""
    s = _as_complex(s)
    if s.real <= 1.0:
        raise DomainError("truncated_euler_product: requires Re s > 1")
    out = complex(1.0)
    for place in enumerate_places(field, norm_bound):
        out *= local_euler_factor(field, place, s)
    return out


# ---------------------------------------------------------------------------
# Field-spec grammar (shared with the CLI)
# ---------------------------------------------------------------------------

def field_spec_string(field: FieldDescriptor) -> str:
    """Canonical spec string for a descriptor (inverse of parse_field_spec)."""
    if isinstance(field, FunctionFieldDescriptor):
        if field.genus == 0:
            return f"Fq(T)?q={field.q}"
        coeffs = ",".join(str(c) for c in field.lpoly.coefficients)
        return f"curve?q={field.q}&L={coeffs}"
    if field.kind == "rationals":
        return "Q"
    return f"Q(sqrt={field.d})"


def _parse_query(query: str, spec: str) -> dict[str, str]:
    params: dict[str, str] = {}
    for chunk in query.split("&"):
        if "=" not in chunk:
            raise DomainError(f"field spec {spec!r}: bad parameter {chunk!r}")
        key, _, value = chunk.partition("=")
        if not key or not value:
            raise DomainError(f"field spec {spec!r}: bad parameter {chunk!r}")
        if key in params:
            raise DomainError(f"field spec {spec!r}: duplicate parameter {key!r}")
        params[key] = value
    return params


def _parse_int(value: str, what: str, spec: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise DomainError(f"field spec {spec!r}: {what} {value!r} is not an integer") from None


def parse_field_spec(spec: str) -> FieldDescriptor:
    """Parse the field-spec grammar:

        "Q" | "Q(sqrt=<d>)" | "Fq(T)?q=<q>" |
        "curve?q=<q>&L=<a0,a1,...,a2g>" | "curve?q=<q>&N=<N1,...,Ng>"

    Errors name the offending token.
    """
    text = spec.strip()
    if text == "Q":
        return make_rationals()
    if text.startswith("Q(sqrt=") and text.endswith(")"):
        return make_quadratic(_parse_int(text[len("Q(sqrt=") : -1], "d", spec))
    if text.startswith("Fq(T)?"):
        params = _parse_query(text[len("Fq(T)?") :], spec)
        if set(params) != {"q"}:
            raise DomainError(f"field spec {spec!r}: expected exactly the parameter q")
        return make_rational_function_field(_parse_int(params["q"], "q", spec))
    if text.startswith("curve?"):
        params = _parse_query(text[len("curve?") :], spec)
        if "q" not in params:
            raise DomainError(f"field spec {spec!r}: missing parameter q")
        q = _parse_int(params["q"], "q", spec)
        has_l = "L" in params
        has_n = "N" in params
        if has_l == has_n:
            raise DomainError(f"field spec {spec!r}: need exactly one of L= or N=")
        if set(params) - {"q", "L", "N"}:
            extra = sorted(set(params) - {"q", "L", "N"})[0]
            raise DomainError(f"field spec {spec!r}: unknown parameter {extra!r}")
        if has_l:
            coeffs = [_parse_int(t, "coefficient", spec) for t in params["L"].split(",")]
            return make_curve_function_field(q, coeffs)
        counts = [_parse_int(t, "count", spec) for t in params["N"].split(",")]
        return make_curve_function_field(q, lpoly_from_point_counts(q, len(counts), counts))
    raise DomainError(f"unrecognized field spec {spec!r}")
