"""Exact sparse multivariate polynomials over the integers.

Everything downstream (dichromatic, Tutte, Bollobas-Riordan state sums)
works with these.  Coefficients are Python ints (arbitrary precision),
exponents are ints.  A polynomial carries an ordered tuple of variable
names; terms map exponent vectors to nonzero coefficients.

Conventions baked in here:

* Tutte polynomials live in variables ``s``, ``t`` with the semantic
  contract ``s**2 == x - 1`` and ``t**2 == y - 1``, so half-integer
  powers of (x-1) never need floating point.
* The Bollobas-Riordan polynomial lives in ``xm1`` (denoting x-1),
  ``y``, ``z``, ``w`` with the involution ``w**2 == 1`` reduced eagerly.
* Canonical term order is graded lexicographic, descending, so printed
  forms are stable (e.g. ``2*x*y - x - y``).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "SparsePoly",
    "poly",
    "zero",
    "one",
    "Z_VARS",
    "T_VARS",
    "XY_VARS",
    "BR_VARS",
    "UNIV_VARS",
    "tutte_to_xy",
    "xy_to_tutte",
    "swap_st",
    "beta_invariant",
    "eval_tutte_gaussian",
    "eval_tutte_exact",
]

Z_VARS = ("u", "v")
T_VARS = ("s", "t")
XY_VARS = ("x", "y")
BR_VARS = ("xm1", "y", "z", "w")
UNIV_VARS = ("w", "sa", "sc", "sastar", "scstar")


class SparsePoly:
    """Immutable sparse polynomial with named variables.

    ``mod2`` lists variables subject to the involution ``v**2 == 1``;
    their exponents are reduced mod 2 on every normalisation.
    """

    __slots__ = ("vars", "terms", "mod2", "_hash")

    def __init__(self, vars: Iterable[str], terms: Mapping[tuple, int] | None = None,
                 mod2: Iterable[str] = ()):
        object.__setattr__(self, "vars", tuple(vars))
        object.__setattr__(self, "mod2", frozenset(mod2))
        clean: dict[tuple, int] = {}
        if terms:
            red = [i for i, name in enumerate(self.vars) if name in self.mod2]
            for exp, coef in terms.items():
                if not coef:
                    continue
                exp = tuple(exp)
                if len(exp) != len(self.vars):
                    raise ValueError("exponent vector length mismatch")
                if red:
                    e = list(exp)
                    for i in red:
                        e[i] %= 2
                    exp = tuple(e)
                clean[exp] = clean.get(exp, 0) + coef
                if not clean[exp]:
                    del clean[exp]
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("SparsePoly is immutable")

    # -- construction helpers ------------------------------------------

    @classmethod
    def constant(cls, vars: Iterable[str], c: int, mod2=()) -> "SparsePoly":
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): c}, mod2)

    @classmethod
    def variable(cls, vars: Iterable[str], name: str, power: int = 1, mod2=()) -> "SparsePoly":
        vars = tuple(vars)
        exp = [0] * len(vars)
        exp[vars.index(name)] = power
        return cls(vars, {tuple(exp): 1}, mod2)

    def monomial(self, exps: Mapping[str, int], coef: int = 1) -> "SparsePoly":
        """A single term in the same variable frame as ``self``."""
        e = [0] * len(self.vars)
        for name, p in exps.items():
            e[self.vars.index(name)] = p
        return SparsePoly(self.vars, {tuple(e): coef}, self.mod2)

    # -- ring structure ------------------------------------------------

    def _aligned(self, other: "SparsePoly"):
        if not isinstance(other, SparsePoly):
            other = SparsePoly.constant(self.vars, int(other), self.mod2)
        if self.vars == other.vars:
            return self, other
        merged = list(self.vars) + [v for v in other.vars if v not in self.vars]
        return self._reframe(merged), other._reframe(merged)

    def _reframe(self, vars: list[str]) -> "SparsePoly":
        idx = [self.vars.index(v) if v in self.vars else None for v in vars]
        terms = {}
        for exp, coef in self.terms.items():
            if any(e for i, e in enumerate(exp) if self.vars[i] not in vars):
                raise ValueError("cannot drop variable with nonzero exponent")
            terms[tuple(0 if i is None else exp[i] for i in idx)] = coef
        return SparsePoly(vars, terms, self.mod2)

    def __add__(self, other):
        a, b = self._aligned(other)
        terms = dict(a.terms)
        for exp, coef in b.terms.items():
            terms[exp] = terms.get(exp, 0) + coef
        return SparsePoly(a.vars, terms, a.mod2 | b.mod2)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.vars, {e: -c for e, c in self.terms.items()}, self.mod2)

    def __sub__(self, other):
        a, b = self._aligned(other)
        return a + (-b)

    def __rsub__(self, other):
        a, b = self._aligned(other)
        return b + (-a)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        a, b = self._aligned(other)
        terms: dict[tuple, int] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return SparsePoly(a.vars, terms, a.mod2 | b.mod2)

    __rmul__ = __mul__

    def scale(self, c: int) -> "SparsePoly":
        return SparsePoly(self.vars, {e: c * k for e, k in self.terms.items()}, self.mod2)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = SparsePoly.constant(self.vars, 1, self.mod2)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            if isinstance(other, int):
                return self.terms == SparsePoly.constant(self.vars, other).terms
            return NotImplemented
        if self.vars == other.vars:
            return self.terms == other.terms
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.vars, frozenset(self.terms.items()))))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    # -- inspection ------------------------------------------------------

    def coefficient(self, exps: Mapping[str, int]) -> int:
        e = [0] * len(self.vars)
        for name, p in exps.items():
            e[self.vars.index(name)] = p
        return self.terms.get(tuple(e), 0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def exponents_of(self, name: str) -> set[int]:
        i = self.vars.index(name)
        return {e[i] for e in self.terms}

    def sorted_terms(self) -> list[tuple[tuple, int]]:
        """Graded-lex descending; the canonical print/JSON order."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    # -- evaluation and substitution --------------------------------------

    def evaluate(self, assignment: Mapping[str, int | Fraction]):
        """Exact evaluation; every variable must be assigned."""
        missing = [v for v in self.vars if v not in assignment]
        if missing:
            raise ValueError(f"no value for variable(s) {missing}")
        total: int | Fraction = 0
        vals = [assignment[v] for v in self.vars]
        for exp, coef in self.terms.items():
            term: int | Fraction = coef
            for val, p in zip(vals, exp):
                if p:
                    term *= val ** p
            total += term
        return total

    def substitute(self, mapping: Mapping[str, "SparsePoly"]) -> "SparsePoly":
        """Replace variables by polynomials (all in one common frame)."""
        frame = next(iter(mapping.values()))
        out = SparsePoly.constant(frame.vars, 0, frame.mod2)
        for exp, coef in self.terms.items():
            term = SparsePoly.constant(frame.vars, coef, frame.mod2)
            for name, p in zip(self.vars, exp):
                if p:
                    term = term * (mapping[name] ** p)
            out = out + term
        return out

    def set_to(self, name: str, value: int) -> "SparsePoly":
        """Partial evaluation of one variable at an integer point."""
        i = self.vars.index(name)
        rest = self.vars[:i] + self.vars[i + 1:]
        terms: dict[tuple, int] = {}
        for exp, coef in self.terms.items():
            c = coef * value ** exp[i]
            if not c:
                continue
            e = exp[:i] + exp[i + 1:]
            terms[e] = terms.get(e, 0) + c
        return SparsePoly(rest, terms, self.mod2 - {name})

    def rename(self, mapping: Mapping[str, str]) -> "SparsePoly":
        return SparsePoly(tuple(mapping.get(v, v) for v in self.vars), self.terms,
                          {mapping.get(v, v) for v in self.mod2})

    # -- text and JSON -----------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, coef in self.sorted_terms():
            factors = []
            for name, p in zip(self.vars, exp):
                if not p:
                    continue
                factors.append(name if p == 1 else f"{name}^{p}")
            mag = abs(coef)
            if factors and mag == 1:
                body = "*".join(factors)
            elif factors:
                body = f"{mag}*" + "*".join(factors)
            else:
                body = str(mag)
            if not parts:
                parts.append(body if coef > 0 else f"-{body}")
            else:
                parts.append(("+ " if coef > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"SparsePoly({str(self)!r}, vars={self.vars})"

    def pretty_st(self) -> str:
        """Render an (s, t) polynomial with s -> (x-1)^(1/2), t -> (y-1)^(1/2)."""
        if set(self.vars) - {"s", "t"}:
            raise ValueError("pretty_st applies to (s, t) polynomials")

        def half(base: str, p: int) -> str:
            if p % 2 == 0:
                q = p // 2
                return base if q == 1 else f"{base}^{q}"
            return f"{base}^({p}/2)"

        parts = []
        for exp, coef in self.sorted_terms():
            factors = []
            for name, p in zip(self.vars, exp):
                if not p:
                    continue
                factors.append(half("(x-1)" if name == "s" else "(y-1)", p))
            mag = abs(coef)
            if factors and mag == 1:
                body = "*".join(factors)
            elif factors:
                body = f"{mag}*" + "*".join(factors)
            else:
                body = str(mag)
            if not parts:
                parts.append(body if coef > 0 else f"-{body}")
            else:
                parts.append(("+ " if coef > 0 else "- ") + body)
        return " ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [{"exp": list(e), "coef": str(c)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: dict, mod2=()) -> "SparsePoly":
        return cls(tuple(data["vars"]),
                   {tuple(t["exp"]): int(t["coef"]) for t in data["terms"]}, mod2)

    @classmethod
    def parse(cls, text: str, vars: Iterable[str], mod2=()) -> "SparsePoly":
        """Parse the plain rendering produced by ``__str__``."""
        vars = tuple(vars)
        text = text.strip()
        if text == "0":
            return cls(vars, {}, mod2)
        tokens = text.replace("- ", "-").replace("+ ", "+").split()
        terms: dict[tuple, int] = {}
        for tok in tokens:
            sign = 1
            if tok.startswith("-"):
                sign, tok = -1, tok[1:]
            elif tok.startswith("+"):
                tok = tok[1:]
            coef = sign
            exp = [0] * len(vars)
            for factor in tok.split("*"):
                if not factor:
                    raise ValueError(f"malformed term {tok!r}")
                if factor.isdigit():
                    coef *= int(factor)
                    continue
                name, _, p = factor.partition("^")
                if name not in vars:
                    raise ValueError(f"unknown variable {name!r}")
                exp[vars.index(name)] += int(p) if p else 1
            key = tuple(exp)
            terms[key] = terms.get(key, 0) + coef
        return cls(vars, terms, mod2)


def poly(vars: Iterable[str], terms: Mapping[tuple, int], mod2=()) -> SparsePoly:
    return SparsePoly(vars, terms, mod2)


def zero(vars: Iterable[str]) -> SparsePoly:
    return SparsePoly(vars, {})


def one(vars: Iterable[str]) -> SparsePoly:
    return SparsePoly.constant(vars, 1)


# -- Tutte basis conversions ------------------------------------------------


def tutte_to_xy(p: SparsePoly) -> SparsePoly:
    """Substitute s**2 -> x-1 and t**2 -> y-1, expanding binomials.

    Only legal when every s and t exponent is even (the orientable case);
    otherwise the polynomial genuinely lives in half-integer powers.
    """
    if tuple(p.vars) != T_VARS:
        p = p._reframe(list(T_VARS))
    odd = [e for e in p.terms if e[0] % 2 or e[1] % 2]
    if odd:
        raise ValueError("nonorientable presentation: odd s/t exponent present")
    x = SparsePoly(XY_VARS, {(1, 0): 1, (0, 0): -1})  # x - 1
    y = SparsePoly(XY_VARS, {(0, 1): 1, (0, 0): -1})  # y - 1
    out = zero(XY_VARS)
    for (i, j), coef in p.terms.items():
        out = out + (x ** (i // 2)) * (y ** (j // 2)) * coef
    return out


def xy_to_tutte(p: SparsePoly) -> SparsePoly:
    """Inverse view: substitute x -> s**2 + 1, y -> t**2 + 1."""
    s2p1 = SparsePoly(T_VARS, {(2, 0): 1, (0, 0): 1})
    t2p1 = SparsePoly(T_VARS, {(0, 2): 1, (0, 0): 1})
    return p.substitute({"x": s2p1, "y": t2p1})


def swap_st(p: SparsePoly) -> SparsePoly:
    """Exchange s and t (the duality move x <-> y)."""
    if tuple(p.vars) != T_VARS:
        p = p._reframe(list(T_VARS))
    return SparsePoly(T_VARS, {(j, i): c for (i, j), c in p.terms.items()})


def beta_invariant(p_xy: SparsePoly) -> int:
    """Coefficient of x**1 * y**0 in an (x, y) polynomial."""
    return p_xy.coefficient({"x": 1})


def eval_tutte_gaussian(p_st: SparsePoly, s_val: tuple[int, int], t_val: tuple[int, int]) -> tuple[int, int]:
    """Evaluate an (s, t) polynomial at Gaussian integers given as (re, im)."""
    if tuple(p_st.vars) != T_VARS:
        p_st = p_st._reframe(list(T_VARS))

    def gpow(z: tuple[int, int], n: int) -> tuple[int, int]:
        re, im = 1, 0
        zr, zi = z
        for _ in range(n):
            re, im = re * zr - im * zi, re * zi + im * zr
        return re, im

    tot_re, tot_im = 0, 0
    for (i, j), coef in p_st.terms.items():
        ar, ai = gpow(s_val, i)
        br, bi = gpow(t_val, j)
        re, im = ar * br - ai * bi, ar * bi + ai * br
        tot_re += coef * re
        tot_im += coef * im
    return tot_re, tot_im


def _exact_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn = _isqrt_exact(num)
    rd = _isqrt_exact(den)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd)


def _isqrt_exact(n: int) -> int | None:
    from math import isqrt
    r = isqrt(n)
    return r if r * r == n else None


def eval_tutte_exact(p_st: SparsePoly, x, y):
    """Evaluate T at rational (x, y), exactly.

    Even-exponent polynomials are evaluated through the (x, y) basis and
    work everywhere.  Otherwise s, t take the principal square roots of
    x-1, y-1, which must be perfect squares of rationals; the one extra
    point supported is (0, 0), evaluated over the Gaussian integers with
    s = i, t = -i (the branch with s*t = 1), which keeps the value real.
    """
    x, y = Fraction(x), Fraction(y)
    try:
        pxy = tutte_to_xy(p_st)
    except ValueError:
        pxy = None
    if pxy is not None:
        val = pxy.evaluate({"x": x, "y": y})
        return val if isinstance(val, int) or val.denominator != 1 else int(val)
    if (x, y) == (0, 0):
        re, im = eval_tutte_gaussian(p_st, (0, 1), (0, -1))
        if im:
            raise ValueError("evaluation at (0,0) is not real for this polynomial")
        return re
    s = _exact_sqrt(x - 1)
    t = _exact_sqrt(y - 1)
    if s is None or t is None:
        raise ValueError("odd s/t exponent with non-square argument")
    val = p_st.evaluate({"s": s, "t": t})
    if isinstance(val, Fraction) and val.denominator == 1:
        return int(val)
    return val
