"""Finite descriptions of infinite words over the ordered alphabet {0,...,9}.

Words are plain Python strings of digit characters, so comparing equal-length
factors with ``<`` is exactly the lexicographic order induced by the letter
order 0 < 1 < ... < 9.  Each spec class below describes an infinite word (or,
for :class:`Literal`, a finite window of one) and can produce any prefix of it
deterministically.  Irrational slopes are never represented with floats: they
enter only through :class:`StandardSequence` directives, which are integer
exact, while :class:`MechanicalRational` covers the rational-slope codings in
exact fraction arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import LiteralTooShort, MalformedSpec

ALPHABET = "0123456789"

#: Substitution fixed by the Fibonacci word.
FIBONACCI_RULES = {"0": "01", "1": "0"}


def _check_word(s: str, what: str, allow_empty: bool = False) -> None:
    if not allow_empty and not s:
        raise MalformedSpec(f"{what} must be nonempty")
    for c in s:
        if c not in ALPHABET:
            raise MalformedSpec(f"{what} contains {c!r}; letters are the digits 0-9")


@dataclass(frozen=True)
class KnownFlags:
    """A-priori recurrence/aperiodicity knowledge; ``None`` means unknown."""

    recurrent: bool | None
    aperiodic: bool | None


@dataclass(frozen=True)
class Literal:
    """A finite window given verbatim.  No tail is implied beyond it."""

    word: str

    def __post_init__(self):
        _check_word(self.word, "literal word")

    def prefix(self, n: int) -> str:
        if n > len(self.word):
            raise LiteralTooShort(
                f"literal holds {len(self.word)} letters, {n} requested"
            )
        return self.word[:n]


@dataclass(frozen=True)
class Periodic:
    """The purely periodic word seed^w."""

    seed: str

    def __post_init__(self):
        _check_word(self.seed, "periodic seed")

    def prefix(self, n: int) -> str:
        reps = n // len(self.seed) + 1
        return (self.seed * reps)[:n]


@dataclass(frozen=True)
class UltimatelyPeriodic:
    """preperiod followed by seed^w."""

    preperiod: str
    seed: str

    def __post_init__(self):
        _check_word(self.preperiod, "preperiod", allow_empty=True)
        _check_word(self.seed, "periodic seed")

    def prefix(self, n: int) -> str:
        if n <= len(self.preperiod):
            return self.preperiod[:n]
        tail = n - len(self.preperiod)
        reps = tail // len(self.seed) + 1
        return self.preperiod + (self.seed * reps)[:tail]


@dataclass(frozen=True)
class Morphic:
    """Fixed point of a substitution prolongable on its seed letter.

    ``rules[seed]`` must start with ``seed`` and be longer than one letter,
    and every letter reachable through the images must itself have a rule, so
    iterating the substitution on the seed converges to an infinite word.
    """

    rules: dict[str, str]
    seed: str

    def __post_init__(self):
        rules = dict(self.rules)
        object.__setattr__(self, "rules", rules)
        if len(self.seed) != 1 or self.seed not in ALPHABET:
            raise MalformedSpec("seed must be a single letter 0-9")
        for a, img in rules.items():
            if len(a) != 1 or a not in ALPHABET:
                raise MalformedSpec(f"rule key {a!r} is not a letter")
            _check_word(img, f"image of {a}")
        if self.seed not in rules:
            raise MalformedSpec("no rule for the seed letter")
        for a, img in rules.items():
            for c in img:
                if c not in rules:
                    raise MalformedSpec(f"image letter {c} of rule {a} has no rule")
        img0 = rules[self.seed]
        if not img0.startswith(self.seed) or len(img0) < 2:
            raise MalformedSpec(
                "substitution is not prolongable on the seed "
                "(its image must start with the seed and be longer)"
            )

    def prefix(self, n: int) -> str:
        w = self.seed
        rules = self.rules
        while len(w) < n:
            # One substitution round, stopping once n letters are secured so
            # intermediate strings never grow far beyond the target.
            parts = []
            total = 0
            for c in w:
                img = rules[c]
                parts.append(img)
                total += len(img)
                if total >= n:
                    break
            w = "".join(parts)
        return w[:n]


@dataclass(frozen=True)
class StandardSequence:
    """Limit of the standard recursion driven by a cycling directive.

    With s(-1) = 1, s(0) = 0 and s(m) = s(m-1)^d(m) s(m-2), the words s(m)
    extend one another, and their limit is the word described here.  The
    directive repeats cyclically, so every spec of this kind describes an
    aperiodic, uniformly recurrent word; ``std:1,...`` reproduces the
    Fibonacci word.
    """

    directive: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.directive)
        object.__setattr__(self, "directive", entries)
        if not entries:
            raise MalformedSpec("directive must be nonempty")
        for d in entries:
            if not isinstance(d, int) or d < 1:
                raise MalformedSpec("directive entries must be integers >= 1")

    def prefix(self, n: int) -> str:
        if n <= 0:
            return ""
        prev, cur = "1", "0"
        i = 0
        while len(cur) < n:
            d = self.directive[i % len(self.directive)]
            reps = min(d, n // len(cur) + 1)
            if reps < d:
                nxt = cur * reps  # already past n letters, tail never needed
            else:
                nxt = cur * d + prev
            prev, cur = cur, nxt
            i += 1
        return cur[:n]


@dataclass(frozen=True)
class MechanicalRational:
    """Lower coding of the rotation with rational slope p/(p+q).

    Letter i is floor((i+1)a + rho) - floor(ia + rho) with a = p/(p+q),
    evaluated in exact rational arithmetic.  With rho = 0 and p, q >= 1 the
    word is periodic with period equal to the lower Christoffel word of
    slope p/(p+q).
    """

    p: int
    q: int
    rho: Fraction = Fraction(0)

    def __post_init__(self):
        rho = Fraction(self.rho)
        object.__setattr__(self, "rho", rho)
        if self.p < 0 or self.q < 1:
            raise MalformedSpec("need numerator p >= 0 and q >= 1")
        if math.gcd(self.p, self.q) != 1:
            raise MalformedSpec(f"p={self.p} and q={self.q} must be coprime")
        if not 0 <= rho < 1:
            raise MalformedSpec("intercept must lie in [0, 1)")

    def prefix(self, n: int) -> str:
        length = self.p + self.q
        num, den = self.rho.numerator, self.rho.denominator
        common = length * den
        base = num * length
        out = []
        prev = base // common
        for i in range(1, n + 1):
            cur = (i * self.p * den + base) // common
            out.append("0" if cur == prev else "1")
            prev = cur
        return "".join(out)


WordSpec = (
    Literal
    | Periodic
    | UltimatelyPeriodic
    | Morphic
    | StandardSequence
    | MechanicalRational
)


def generate_prefix(spec: WordSpec, n: int) -> str:
    """First ``n`` letters of the word described by ``spec``."""
    if n < 0:
        raise ValueError("prefix length must be >= 0")
    return spec.prefix(n)


def known_flags(spec: WordSpec) -> KnownFlags:
    """Recurrence and aperiodicity facts implied by the spec kind alone."""
    if isinstance(spec, Periodic):
        return KnownFlags(recurrent=True, aperiodic=False)
    if isinstance(spec, UltimatelyPeriodic):
        if not spec.preperiod or _preperiod_absorbs(spec.preperiod, spec.seed):
            return KnownFlags(recurrent=True, aperiodic=False)
        return KnownFlags(recurrent=False, aperiodic=False)
    if isinstance(spec, StandardSequence):
        # Cycling directive: irrational slope, uniformly recurrent.
        return KnownFlags(recurrent=True, aperiodic=True)
    if isinstance(spec, MechanicalRational):
        # Rational slope: purely periodic whatever the intercept.
        return KnownFlags(recurrent=True, aperiodic=False)
    if isinstance(spec, Morphic):
        if _is_primitive(spec.rules):
            return KnownFlags(recurrent=True, aperiodic=None)
        return KnownFlags(recurrent=None, aperiodic=None)
    return KnownFlags(recurrent=None, aperiodic=None)


def _preperiod_absorbs(pre: str, seed: str) -> bool:
    # pre * seed^w is purely seed-periodic iff shifting by |seed| fixes the
    # preperiod region.
    w = pre + seed + seed
    d = len(seed)
    return all(w[i] == w[i + d] for i in range(len(pre)))


def _is_primitive(rules: dict[str, str]) -> bool:
    """Some power of the substitution sends every letter to every letter."""
    letters = sorted(rules)
    s = len(letters)
    reach = {a: frozenset(rules[a]) for a in letters}
    power = dict(reach)
    # Wielandt: a primitive incidence matrix is positive by power (s-1)^2 + 1.
    for _ in range((s - 1) ** 2 + 1):
        if all(len(power[a]) == s for a in letters):
            return True
        power = {a: frozenset().union(*(reach[b] for b in power[a])) for a in letters}
    return False


def parse_spec(text: str) -> WordSpec:
    """Parse the word-spec mini-language.

    Forms: ``fib``, ``morphic:0->01,1->0;seed=0``, ``periodic:01``,
    ``ultper:0|1`` (preperiod|seed), ``std:1,1,2,3``, ``mech:2/5@0``
    (slope as numerator/denominator, intercept after ``@`` as ``a/b``
    or ``0``), ``literal:0100101``.
    """
    t = text.strip()
    if t == "fib":
        return Morphic(dict(FIBONACCI_RULES), "0")
    kind, sep, rest = t.partition(":")
    if not sep or not rest:
        raise MalformedSpec(f"unrecognized word spec {text!r}")
    if kind == "periodic":
        return Periodic(rest)
    if kind == "literal":
        return Literal(rest)
    if kind == "ultper":
        pre, sep2, seed = rest.partition("|")
        if not sep2:
            raise MalformedSpec("ultper wants preperiod|seed")
        return UltimatelyPeriodic(pre, seed)
    if kind == "std":
        try:
            entries = tuple(int(x) for x in rest.split(","))
        except ValueError as exc:
            raise MalformedSpec(f"bad directive {rest!r}") from exc
        return StandardSequence(entries)
    if kind == "morphic":
        rules_text, sep2, seed_text = rest.partition(";")
        if not sep2 or not seed_text.startswith("seed="):
            raise MalformedSpec("morphic wants rules;seed=<letter>")
        return Morphic(_parse_rules(rules_text), seed_text[len("seed="):])
    if kind == "mech":
        slope_text, sep2, rho_text = rest.partition("@")
        if not sep2:
            raise MalformedSpec("mech wants p/q@rho")
        try:
            num_text, den_text = slope_text.split("/")
            num, den = int(num_text), int(den_text)
        except ValueError as exc:
            raise MalformedSpec(f"bad slope {slope_text!r}") from exc
        if den < 1 or not 0 <= num < den:
            raise MalformedSpec("slope must satisfy 0 <= p/q < 1")
        return MechanicalRational(num, den - num, _parse_rational(rho_text))
    raise MalformedSpec(f"unknown spec kind {kind!r}")


def format_spec(spec: WordSpec) -> str:
    """Mini-language text for ``spec`` (inverse of :func:`parse_spec`)."""
    if isinstance(spec, Literal):
        return f"literal:{spec.word}"
    if isinstance(spec, Periodic):
        return f"periodic:{spec.seed}"
    if isinstance(spec, UltimatelyPeriodic):
        return f"ultper:{spec.preperiod}|{spec.seed}"
    if isinstance(spec, StandardSequence):
        return "std:" + ",".join(str(d) for d in spec.directive)
    if isinstance(spec, MechanicalRational):
        rho = spec.rho
        rho_text = "0" if rho == 0 else f"{rho.numerator}/{rho.denominator}"
        return f"mech:{spec.p}/{spec.p + spec.q}@{rho_text}"
    rules = ",".join(f"{a}->{img}" for a, img in sorted(spec.rules.items()))
    return f"morphic:{rules};seed={spec.seed}"


def _parse_rules(text: str) -> dict[str, str]:
    rules: dict[str, str] = {}
    for part in text.split(","):
        a, sep, img = part.partition("->")
        if not sep:
            raise MalformedSpec(f"bad rule {part!r}, want letter->image")
        a = a.strip()
        if a in rules:
            raise MalformedSpec(f"duplicate rule for {a!r}")
        rules[a] = img.strip()
    return rules


def _parse_rational(text: str) -> Fraction:
    t = text.strip()
    try:
        if "/" in t:
            a, b = t.split("/")
            return Fraction(int(a), int(b))
        return Fraction(int(t))
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedSpec(f"bad rational {text!r}") from exc
