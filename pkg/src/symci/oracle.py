"""Brute-force ground truth on explicit polynomials.

Everything here works in exact rational arithmetic on sparse exponent
dictionaries: ideal degree slices by row reduction over the graded
reverse lexicographic monomial basis, permutation traces on quotient
slices, and the Hilbert-series regular sequence criterion.  It shares no
code with the closed character formulas it is used to check.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import combinations
from math import comb, prod

from ._linalg import Echelon, echelon
from .characters import ClassFunction
from .graded import GradedCharacter
from .partitions import Partition, partitions_of


def _ratio(c):
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    if isinstance(c, int) and not isinstance(c, bool):
        return c
    raise TypeError(f"coefficients must be exact integers or fractions, got {c!r}")


class MultiPoly:
    """Sparse multivariate polynomial with exact rational coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        clean: dict[tuple[int, ...], object] = {}
        for exps, c in dict(terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps!r} for n = {n}")
            c = _ratio(c)
            if c:
                clean[exps] = c
        self.terms = clean

    @classmethod
    def zero(cls, n: int) -> "MultiPoly":
        return cls(n)

    @classmethod
    def constant(cls, value, n: int) -> "MultiPoly":
        return cls(n, {(0,) * n: value})

    @classmethod
    def variable(cls, i: int, n: int) -> "MultiPoly":
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} outside 1..{n}")
        exps = [0] * n
        exps[i - 1] = 1
        return cls(n, {tuple(exps): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps) -> object:
        return self.terms.get(tuple(exps), 0)

    def degree(self) -> int | None:
        """Total degree; None for the zero polynomial."""
        return max(sum(e) for e in self.terms) if self.terms else None

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def _check_same_ring(self, other: "MultiPoly") -> None:
        if self.n != other.n:
            raise ValueError("mismatched variable counts")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_same_ring(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.n, out)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.n, {e: c * other for e, c in self.terms.items()})
        self._check_same_ring(other)
        out: dict[tuple[int, ...], object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return MultiPoly(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = MultiPoly.constant(1, self.n)
        for _ in range(k):
            out = out * self
        return out

    def apply_permutation(self, perm: tuple[int, ...]) -> "MultiPoly":
        """Relabel variables: position k maps to position perm[k] (0-based)."""
        out: dict[tuple[int, ...], object] = {}
        for exps, c in self.terms.items():
            new = [0] * self.n
            for k, e in enumerate(exps):
                new[perm[k]] = e
            out[tuple(new)] = c
        return MultiPoly(self.n, out)

    def substitute_variable(self, i: int, j: int) -> "MultiPoly":
        """Replace x_i by x_j (1-based indices)."""
        out: dict[tuple[int, ...], object] = {}
        for exps, c in self.terms.items():
            e = list(exps)
            e[j - 1] += e[i - 1]
            e[i - 1] = 0
            key = tuple(e)
            out[key] = out.get(key, 0) + c
        return MultiPoly(self.n, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda tc: (sum(tc[0]), tuple(reversed(tc[0]))))
        parts: list[str] = []
        for exps, c in items:
            vars_ = "*".join(
                f"x{k + 1}" if e == 1 else f"x{k + 1}^{e}"
                for k, e in enumerate(exps)
                if e
            )
            if not vars_:
                term = str(abs(c))
            elif abs(c) == 1:
                term = vars_
            else:
                term = f"{abs(c)}*{vars_}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)


@cache
def monomials(n: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of total degree d, graded reverse lexicographic,
    largest monomial first."""
    if d < 0:
        return ()
    vecs: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], remaining: int, slots: int) -> None:
        if slots == 1:
            vecs.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), d, n)
    vecs.sort(key=lambda e: tuple(reversed(e)))
    return tuple(vecs)


@cache
def _monomial_index(n: int, d: int) -> dict[tuple[int, ...], int]:
    return {m: i for i, m in enumerate(monomials(n, d))}


def elementary_symmetric(k: int, n: int) -> MultiPoly:
    """The k-th elementary symmetric polynomial in n variables."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k = {k}, n = {n}")
    terms = {}
    for subset in combinations(range(n), k):
        exps = [0] * n
        for i in subset:
            exps[i] = 1
        terms[tuple(exps)] = 1
    return MultiPoly(n, terms)


def vandermonde(n: int) -> MultiPoly:
    """Product of (x_i - x_j) over i < j; alternating of degree n(n-1)/2."""
    if n < 2:
        raise ValueError("need n >= 2")
    out = MultiPoly.constant(1, n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out * (MultiPoly.variable(i, n) - MultiPoly.variable(j, n))
    return out


def representative_permutation(mu) -> tuple[int, ...]:
    """Canonical permutation with the given cycle type, as a 0-based map.

    Cycles are filled with consecutive integers from the left: (2,1,1)
    yields the map of (1 2), (2,2) the map of (1 2)(3 4).
    """
    mu = Partition(mu)
    perm: list[int] = []
    start = 0
    for p in mu:
        perm.extend(start + (k + 1) % p for k in range(p))
        start += p
    return tuple(perm)


def permutation_cycles(perm: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Cycles of length >= 2, 1-based, each starting at its minimum."""
    seen = [False] * len(perm)
    cycles = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        cyc = [s]
        seen[s] = True
        k = perm[s]
        while k != s:
            cyc.append(k)
            seen[k] = True
            k = perm[k]
        if len(cyc) > 1:
            cycles.append(tuple(v + 1 for v in cyc))
    return cycles


class GeneratorSet:
    """Homogeneous generators with cached degree slices of their ideal."""

    def __init__(self, gens, n: int | None = None):
        gens = tuple(gens)
        if not gens:
            raise ValueError("need at least one generator")
        n = n if n is not None else gens[0].n
        for g in gens:
            if not isinstance(g, MultiPoly) or g.n != n:
                raise ValueError("generators must be polynomials in one common ring")
            if g.is_zero() or not g.is_homogeneous() or g.degree() == 0:
                raise ValueError("generators must be nonzero homogeneous of degree >= 1")
        self.gens = gens
        self.n = n
        self.degrees = tuple(g.degree() for g in gens)
        self._slices: dict[int, DegreeSlice] = {}
        self._stable: bool | None = None

    def __repr__(self) -> str:
        return f"GeneratorSet(n={self.n}, degrees={self.degrees})"

    def is_stable(self) -> bool:
        """Whether the spanned vector space is closed under all adjacent
        transpositions of the variables (hence under the whole group)."""
        if self._stable is None:
            self._stable = self._check_stability()
        return self._stable

    def _check_stability(self) -> bool:
        by_degree: dict[int, list[MultiPoly]] = {}
        for g in self.gens:
            by_degree.setdefault(g.degree(), []).append(g)
        for d, gens in by_degree.items():
            index = _monomial_index(self.n, d)
            ech = echelon([_poly_row(g, index) for g in gens])
            for k in range(self.n - 1):
                perm = list(range(self.n))
                perm[k], perm[k + 1] = perm[k + 1], perm[k]
                for g in gens:
                    moved = g.apply_permutation(tuple(perm))
                    if not ech.contains(_poly_row(moved, index)):
                        return False
        return True


def _poly_row(g: MultiPoly, index: dict) -> dict[int, object]:
    return {index[e]: c for e, c in g.terms.items()}


@dataclass
class DegreeSlice:
    """Echelonized degree-d piece of an ideal over the monomial basis."""

    n: int
    degree: int
    dimension: int
    echelon: Echelon

    def basis(self) -> list[MultiPoly]:
        """Reduced echelon basis polynomials, unit leading coefficients,
        ordered by leading monomial."""
        mons = monomials(self.n, self.degree)
        self.echelon.ensure_reduced()
        out = []
        for p in self.echelon.pivots:
            row = self.echelon.pivot_rows[p]
            lead = row[p]
            out.append(
                MultiPoly(self.n, {mons[c]: Fraction(v, lead) for c, v in row.items()})
            )
        return out

    def standard_monomials(self) -> list[tuple[int, ...]]:
        """Monomials spanning the quotient slice (non-pivot columns)."""
        mons = monomials(self.n, self.degree)
        pivots = set(self.echelon.pivot_rows)
        return [m for i, m in enumerate(mons) if i not in pivots]


def ideal_degree_slice(gs: GeneratorSet, d: int) -> DegreeSlice:
    """Row-reduced basis of the degree-d piece of the generated ideal."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    cached = gs._slices.get(d)
    if cached is not None:
        return cached
    index = _monomial_index(gs.n, d)
    rows = []
    for g in gs.gens:
        c = g.degree()
        if c > d:
            continue
        for m in monomials(gs.n, d - c):
            rows.append(
                {index[tuple(a + b for a, b in zip(m, e))]: v for e, v in g.terms.items()}
            )
    ech = echelon(rows)
    sl = DegreeSlice(gs.n, d, ech.rank, ech)
    gs._slices[d] = sl
    return sl


def quotient_trace(gs: GeneratorSet, d: int, perm: tuple[int, ...]) -> int:
    """Trace of a variable permutation on the degree-d quotient slice.

    The quotient is identified with the span of the standard monomials;
    the permuted monomial is projected back along the ideal slice, which
    takes a single reduced-echelon row lookup.
    """
    sl = ideal_degree_slice(gs, d)
    mons = monomials(gs.n, d)
    index = _monomial_index(gs.n, d)
    ech = sl.echelon.ensure_reduced()
    pivots = ech.pivot_rows
    total = Fraction(0)
    for col, exps in enumerate(mons):
        if col in pivots:
            continue
        image = [0] * gs.n
        for k, e in enumerate(exps):
            image[perm[k]] = e
        icol = index[tuple(image)]
        if icol == col:
            total += 1
        elif icol in pivots:
            row = pivots[icol]
            v = row.get(col)
            if v:
                total -= Fraction(v, row[icol])
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral trace {total} at degree {d}")
    return int(total)


def quotient_graded_character(gs: GeneratorSet, bound: int) -> GradedCharacter:
    """Exact graded character of the quotient by the generated ideal.

    Each coefficient is assembled from one representative permutation per
    cycle type.  Once some degree slice fills the whole space the quotient
    is zero from there on, so the series is flagged exact.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if not gs.is_stable():
        raise ValueError("generator span is not stable under the variable permutations")
    n = gs.n
    coeffs: list[ClassFunction] = []
    zero_from: int | None = None
    for d in range(bound + 1):
        if zero_from is not None:
            coeffs.append(ClassFunction(n, {}))
            continue
        sl = ideal_degree_slice(gs, d)
        if sl.dimension == len(monomials(n, d)):
            zero_from = d
            coeffs.append(ClassFunction(n, {}))
            continue
        values = {
            mu: quotient_trace(gs, d, representative_permutation(mu))
            for mu in partitions_of(n)
        }
        coeffs.append(ClassFunction(n, values))
    return GradedCharacter(n, coeffs, exact=zero_from is not None)


def span_character(gs: GeneratorSet) -> ClassFunction:
    """Character of the vector space spanned by the generators themselves."""
    if not gs.is_stable():
        raise ValueError("generator span is not stable under the variable permutations")
    n = gs.n
    by_degree: dict[int, list[MultiPoly]] = {}
    for g in gs.gens:
        by_degree.setdefault(g.degree(), []).append(g)
    echelons = []
    for d, gens in sorted(by_degree.items()):
        index = _monomial_index(n, d)
        ech = echelon([_poly_row(g, index) for g in gens], reduced=True)
        echelons.append((d, ech))
    values = {}
    for mu in partitions_of(n):
        perm = representative_permutation(mu)
        total = Fraction(0)
        for d, ech in echelons:
            mons = monomials(n, d)
            index = _monomial_index(n, d)
            for p, row in ech.pivot_rows.items():
                # (sigma . row) at column p equals row at sigma^{-1} . p
                pre = tuple(mons[p][perm[k]] for k in range(n))
                v = row.get(index[pre])
                if v:
                    total += Fraction(v, row[p])
        if total.denominator != 1:
            raise ArithmeticError(f"non-integral trace {total} on the span")
        if total:
            values[mu] = int(total)
    return ClassFunction(n, values)


def specht_square_generators() -> GeneratorSet:
    """The two degree-2 products spanning the exceptional two-dimensional
    representation inside four variables."""
    n = 4
    x = [MultiPoly.variable(i, n) for i in range(1, n + 1)]
    g1 = (x[0] - x[1]) * (x[2] - x[3])
    g2 = (x[0] - x[2]) * (x[1] - x[3])
    return GeneratorSet((g1, g2))


def standard_rep_lift(d: int, n: int) -> tuple[GeneratorSet, GeneratorSet]:
    """The span of the d-th variable powers, and its difference subspan.

    The full span carries the permutation action (trivial plus standard
    summands); the consecutive differences span just the standard summand.
    """
    if d < 1 or n < 2:
        raise ValueError("need d >= 1 and n >= 2")
    powers = []
    for i in range(1, n + 1):
        exps = [0] * n
        exps[i - 1] = d
        powers.append(MultiPoly(n, {tuple(exps): 1}))
    diffs = [powers[i] - powers[i + 1] for i in range(n - 1)]
    return GeneratorSet(tuple(powers)), GeneratorSet(tuple(diffs))


def divide_linear(p: MultiPoly, i: int, j: int) -> tuple[MultiPoly, MultiPoly]:
    """Write p = q * (x_i - x_j) + r with r = p evaluated at x_i -> x_j.

    The remainder vanishes exactly when p is divisible by x_i - x_j.
    """
    n = p.n
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise ValueError("need two distinct variable indices")
    q: dict[tuple[int, ...], object] = {}
    for exps, c in p.terms.items():
        a = exps[i - 1]
        for k in range(1, a + 1):
            e = list(exps)
            e[i - 1] = k - 1
            e[j - 1] += a - k
            key = tuple(e)
            v = q.get(key, 0) + c
            if v:
                q[key] = v
            elif key in q:
                del q[key]
    return MultiPoly(n, q), p.substitute_variable(i, j)


@dataclass
class RegularSequenceReport:
    """Outcome of the Hilbert-series regular sequence test."""

    ok: bool
    conclusive: bool
    horizon: int
    expected: tuple[int, ...]
    actual: tuple[int, ...]
    first_failure: int | None
    message: str

    def __bool__(self) -> bool:
        return self.ok


def _expected_quotient_dims(degrees, n: int, bound: int) -> list[int]:
    """Coefficients of prod (1 - t^c_i) / (1 - t)^n through the bound."""
    num = [0] * (bound + 1)
    num[0] = 1
    for c in degrees:
        nxt = list(num)
        for d in range(c, bound + 1):
            nxt[d] -= num[d - c]
        num = nxt
    return [
        sum(num[k] * comb(n - 1 + d - k, d - k) for k in range(d + 1))
        for d in range(bound + 1)
    ]


def is_regular_sequence(gs: GeneratorSet, bound: int | None = None) -> RegularSequenceReport:
    """Hilbert-series criterion: quotient dimensions against the product formula.

    The true quotient dimension can only exceed the product-formula value,
    and equality in every degree characterizes regular sequences, so one
    deficit disproves regularity.  With as many generators as variables,
    agreement through degree sum(degrees) - n + 1 together with the total
    dimension count prod(degrees) is conclusive; with fewer generators the
    verdict only covers degrees up to the reported horizon.
    """
    r, n = len(gs.gens), gs.n
    if r > n:
        raise ValueError("more generators than variables can never be regular")
    total_deg = sum(gs.degrees)
    if r == n:
        horizon = max(total_deg - n + 1, 0)
        conclusive = True
    else:
        horizon = bound if bound is not None else total_deg
        conclusive = False
    expected = _expected_quotient_dims(gs.degrees, n, horizon)
    actual: list[int] = []
    first_failure = None
    for d in range(horizon + 1):
        dim = comb(n + d - 1, d) - ideal_degree_slice(gs, d).dimension
        actual.append(dim)
        if dim != expected[d]:
            first_failure = d
            break
    ok = first_failure is None
    message = ""
    if not ok:
        message = (
            f"failed at degree {first_failure}: quotient dimension "
            f"{actual[-1]} != expected {expected[first_failure]}"
        )
    elif r == n:
        volume = prod(gs.degrees)
        if sum(actual) != volume:
            ok = False
            message = f"total dimension {sum(actual)} != {volume}"
        else:
            message = (
                f"regular sequence (conclusive): artinian quotient of "
                f"dimension {volume}"
            )
    else:
        message = f"no deficit found; verified up to degree {horizon} (not conclusive)"
    return RegularSequenceReport(
        ok=ok,
        conclusive=conclusive and ok,
        horizon=horizon,
        expected=tuple(expected),
        actual=tuple(actual),
        first_failure=first_failure,
        message=message,
    )


_TOKEN = re.compile(r"\s*(?:(\d+)|([a-zA-Z]+\d*)|([-+*^()]))")


class _PolyParser:
    """Recursive descent for '+ - * ^' expressions over x1..xn, e1..en, vdm."""

    def __init__(self, text: str, n: int):
        self.n = n
        self.tokens: list[str] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                if text[pos:].strip():
                    raise ValueError(f"bad character at {text[pos:pos + 10]!r}")
                break
            self.tokens.append(m.group(0).strip())
            pos = m.end()
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ValueError("unexpected end of expression")
        self.pos += 1
        return tok

    def parse(self) -> MultiPoly:
        out = self.expr()
        if self.peek() is not None:
            raise ValueError(f"trailing input at {self.peek()!r}")
        return out

    def expr(self) -> MultiPoly:
        sign = 1
        if self.peek() in {"+", "-"}:
            sign = -1 if self.take() == "-" else 1
        out = self.term() * sign
        while self.peek() in {"+", "-"}:
            op = self.take()
            t = self.term()
            out = out + t if op == "+" else out - t
        return out

    def term(self) -> MultiPoly:
        out = self.factor()
        while self.peek() == "*":
            self.take()
            out = out * self.factor()
        return out

    def factor(self) -> MultiPoly:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.take()
            if not tok.isdigit():
                raise ValueError(f"exponent must be a nonnegative integer, got {tok!r}")
            return base ** int(tok)
        return base

    def atom(self) -> MultiPoly:
        tok = self.take()
        if tok == "(":
            out = self.expr()
            if self.take() != ")":
                raise ValueError("missing closing parenthesis")
            return out
        if tok.isdigit():
            return MultiPoly.constant(int(tok), self.n)
        m = re.fullmatch(r"([a-zA-Z]+)(\d*)", tok)
        if not m:
            raise ValueError(f"unexpected token {tok!r}")
        name, idx = m.group(1), m.group(2)
        if name == "vdm" and not idx:
            return vandermonde(self.n)
        if name in {"x", "e"} and idx:
            k = int(idx)
            if not 1 <= k <= self.n:
                raise ValueError(f"index {k} outside 1..{self.n} in {tok!r}")
            return (
                MultiPoly.variable(k, self.n)
                if name == "x"
                else elementary_symmetric(k, self.n)
            )
        raise ValueError(f"unknown name {tok!r} (expected x<k>, e<k> or vdm)")


def parse_poly(text: str, n: int) -> MultiPoly:
    """Parse one polynomial expression in variables x1..xn.

    Grammar: integers, x<k>, e<k> (elementary symmetric), vdm (the
    alternating product of all differences), with + - * ^ and parentheses.
    """
    return _PolyParser(text, n).parse()


def parse_generator_file(text: str, n: int) -> GeneratorSet:
    """One generator per line; blank lines and '#' comments are skipped."""
    gens = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            gens.append(parse_poly(body, n))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
    if not gens:
        raise ValueError("no generators found")
    return GeneratorSet(tuple(gens))
