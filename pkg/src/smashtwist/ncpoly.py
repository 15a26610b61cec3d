"""Noncommutative polynomials with confluent rewriting to a PBW normal form.

A generator alphabet is declared once with a fixed total order (symmetry
generators first, then momenta, then coordinates, each block in declaration
order), together with Lie-type commutation corrections X_b X_a = X_a X_b + C
for b > a, where C has word length at most one.  Tensor powers of the algebra
reuse the same alphabet with a leg tag on every letter; letters in distinct
legs commute exactly.

Words are tuples of (leg, rank) pairs; a polynomial maps normal-ordered words
to TruncSeries coefficients and never stores a zero coefficient.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import GaussRational, TruncSeries, parse_scalar_literal

SYMMETRY = "symmetry"
MOMENTUM = "momentum"
COORDINATE = "coordinate"

_SORT_BLOCK = {SYMMETRY: 0, MOMENTUM: 1, COORDINATE: 2}


class Generator:
    """A tagged letter of the alphabet.

    ``rank`` is the position in the fixed total order; letters compare by
    (leg, rank), so distinct legs sort apart and within a leg the declaration
    blocks apply.
    """

    __slots__ = ("name", "sort", "leg", "rank")

    def __init__(self, name: str, sort: str, leg: int, rank: int):
        if sort not in _SORT_BLOCK:
            raise ValueError(f"unknown generator sort {sort!r}")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "sort", sort)
        object.__setattr__(self, "leg", leg)
        object.__setattr__(self, "rank", rank)

    def __setattr__(self, name, value):
        raise AttributeError("Generator is immutable")

    def key(self):
        return (self.leg, self.rank)

    def __repr__(self):
        return f"Generator({self.name!r}, {self.sort!r}, leg={self.leg}, rank={self.rank})"


def _inversions(word) -> int:
    n = 0
    for i in range(len(word)):
        wi = word[i]
        for j in range(i + 1, len(word)):
            if wi > word[j]:
                n += 1
    return n


class RewriteSystem:
    """Alphabet plus commutation corrections, validated for Jacobi closure.

    ``brackets`` maps a pair of generator names (a, b) to the value of
    [X_a, X_b] given as a list of (coefficient, generator-name-or-None) terms;
    None denotes the unit word (a central term).  Antisymmetry is built in:
    only one orientation per pair may be supplied.
    """

    def __init__(self, order: int, generators, brackets=None, validate: bool = True):
        self.order = order
        blocks = ([], [], [])
        for item in generators:
            name, sort = item
            blocks[_SORT_BLOCK[sort]].append((name, sort))
        gens = []
        for block in blocks:
            for name, sort in block:
                gens.append(Generator(name, sort, 0, len(gens)))
        self.generators = tuple(gens)
        self.rank_of = {}
        for g in self.generators:
            if g.name in self.rank_of:
                raise ValueError(f"duplicate generator name {g.name!r}")
            self.rank_of[g.name] = g.rank

        # _corr[(hi, lo)] = terms of C with X_hi X_lo = X_lo X_hi + C
        self._corr: dict = {}
        seen = set()
        for (na, nb), terms in (brackets or {}).items():
            ra, rb = self._rank(na), self._rank(nb)
            if ra == rb:
                raise ValueError(f"bracket of {na!r} with itself")
            pair = (min(ra, rb), max(ra, rb))
            if pair in seen:
                raise ValueError(f"bracket for pair ({na}, {nb}) given twice")
            seen.add(pair)
            corr = []
            for coeff, name in terms:
                if isinstance(coeff, str):
                    c = parse_scalar_literal(coeff, order)
                else:
                    c = TruncSeries.coerce(coeff, order)
                if c.order != order:
                    raise ValueError("bracket coefficient has wrong order")
                word = () if name is None else (self._rank(name),)
                corr.append((word, c))
            # store as [X_hi, X_lo]; flip the sign if given the other way round
            if ra > rb:
                self._corr[(ra, rb)] = tuple(corr)
            else:
                self._corr[(rb, ra)] = tuple((w, -c) for w, c in corr)
        self._corr = {k: v for k, v in self._corr.items()
                      if any(not c.is_zero() for _, c in v)}

        self._nf_cache: dict = {}
        if validate:
            bad = self.jacobi_residuals()
            if bad:
                a, b, c, res = bad[0]
                raise ValueError(
                    f"Jacobi identity fails on ({a}, {b}, {c}): residual {res}"
                )

    def _rank(self, name: str) -> int:
        try:
            return self.rank_of[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None

    def generator(self, name: str) -> Generator:
        return self.generators[self._rank(name)]

    def names(self, sort=None):
        return tuple(g.name for g in self.generators if sort is None or g.sort == sort)

    # -- rewriting ------------------------------------------------------

    def normalize_word(self, word) -> dict:
        """PBW normal form of a word as a dict {word: TruncSeries}.

        The returned dict is cached and shared; callers must not mutate it.
        """
        cached = self._nf_cache.get(word)
        if cached is not None:
            return cached
        out: dict = {}
        one = TruncSeries.one(self.order)
        stack = [(word, one)]
        while stack:
            w, c = stack.pop()
            idx = -1
            for i in range(len(w) - 1):
                if w[i] > w[i + 1]:
                    idx = i
                    break
            if idx < 0:
                prev = out.get(w)
                out[w] = c if prev is None else prev + c
                continue
            (l1, r1), (l2, r2) = w[idx], w[idx + 1]
            swapped = w[:idx] + (w[idx + 1], w[idx]) + w[idx + 2 :]
            assert _inversions(swapped) < _inversions(w)
            stack.append((swapped, c))
            if l1 == l2:
                corr = self._corr.get((r1, r2))
                if corr:
                    for cw, cc in corr:
                        nw = w[:idx] + tuple((l1, r) for r in cw) + w[idx + 2 :]
                        stack.append((nw, c * cc))
        out = {w: c for w, c in out.items() if not c.is_zero()}
        self._nf_cache[word] = out
        return out

    def jacobi_residuals(self):
        """Nonzero Jacobi residuals [(name_a, name_b, name_c, NCPoly)]."""
        bad = []
        gens = [NCPoly.gen(self, g.name) for g in self.generators]
        names = [g.name for g in self.generators]
        n = len(gens)
        for a in range(n):
            for b in range(a + 1, n):
                ab = gens[a].commutator(gens[b])
                for c in range(b + 1, n):
                    res = (
                        ab.commutator(gens[c])
                        + gens[b].commutator(gens[c]).commutator(gens[a])
                        + gens[c].commutator(gens[a]).commutator(gens[b])
                    )
                    if not res.is_zero():
                        bad.append((names[a], names[b], names[c], res))
        return bad

    def bracket(self, name_a: str, name_b: str) -> "NCPoly":
        """[X_a, X_b] as a polynomial."""
        return NCPoly.gen(self, name_a).commutator(NCPoly.gen(self, name_b))


def _leg_tag(i: int, nlegs: int) -> int:
    # single-leg elements use leg 0, tensor factors are numbered from 1
    return 0 if nlegs == 1 else i


class NCPoly:
    """Linear combination of PBW words over a shared rewrite system."""

    __slots__ = ("rs", "nlegs", "terms")

    def __init__(self, rs: RewriteSystem, nlegs: int, terms: dict):
        self.rs = rs
        self.nlegs = nlegs
        self.terms = terms

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(rs, nlegs=1) -> "NCPoly":
        return NCPoly(rs, nlegs, {})

    @staticmethod
    def one(rs, nlegs=1) -> "NCPoly":
        return NCPoly(rs, nlegs, {(): TruncSeries.one(rs.order)})

    @staticmethod
    def scalar(rs, value, nlegs=1) -> "NCPoly":
        c = TruncSeries.coerce(value, rs.order)
        return NCPoly(rs, nlegs, {} if c.is_zero() else {(): c})

    @staticmethod
    def gen(rs, name, leg=None, nlegs=1) -> "NCPoly":
        if leg is None:
            leg = _leg_tag(1, nlegs)
        if nlegs > 1 and not 1 <= leg <= nlegs:
            raise ValueError(f"leg {leg} out of range for {nlegs} legs")
        word = ((leg, rs._rank(name)),)
        return NCPoly(rs, nlegs, {word: TruncSeries.one(rs.order)})

    @staticmethod
    def from_word(rs, names, coeff=1, nlegs=1, leg=None) -> "NCPoly":
        """Polynomial coeff * (product of named generators), normal formed."""
        if leg is None:
            leg = _leg_tag(1, nlegs)
        word = tuple((leg, rs._rank(n)) for n in names)
        c = TruncSeries.coerce(coeff, rs.order)
        out: dict = {}
        for w, k in rs.normalize_word(word).items():
            _bump(out, w, c * k)
        return NCPoly(rs, nlegs, out)

    # -- ring structure ---------------------------------------------------

    def _compat(self, other: "NCPoly"):
        if not isinstance(other, NCPoly):
            raise TypeError(f"expected NCPoly, got {type(other).__name__}")
        if self.rs is not other.rs:
            raise ValueError("alphabet mismatch between polynomials")
        if self.nlegs != other.nlegs:
            raise ValueError(f"leg count mismatch: {self.nlegs} vs {other.nlegs}")

    def __add__(self, other):
        self._compat(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _bump(out, w, c)
        return NCPoly(self.rs, self.nlegs, out)

    def __sub__(self, other):
        self._compat(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _bump(out, w, -c)
        return NCPoly(self.rs, self.nlegs, out)

    def __neg__(self):
        return NCPoly(self.rs, self.nlegs, {w: -c for w, c in self.terms.items()})

    def scale(self, value) -> "NCPoly":
        if isinstance(value, TruncSeries):
            c = value
        else:
            c = TruncSeries.coerce(value, self.rs.order)
        if c.is_zero():
            return NCPoly.zero(self.rs, self.nlegs)
        out = {}
        for w, k in self.terms.items():
            v = k * c
            if not v.is_zero():
                out[w] = v
        return NCPoly(self.rs, self.nlegs, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRational, TruncSeries)):
            return self.scale(other)
        self._compat(other)
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c = c1 * c2
                if c.is_zero():
                    continue
                for w, k in self.rs.normalize_word(w1 + w2).items():
                    _bump(out, w, c * k)
        return NCPoly(self.rs, self.nlegs, _strip(out))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussRational, TruncSeries)):
            return self.scale(other)
        return NotImplemented

    def commutator(self, other: "NCPoly") -> "NCPoly":
        return self * other - other * self

    def exp_truncated(self) -> "NCPoly":
        """Truncated exponential sum_k self^k / k!.

        Requires the h^0 part to vanish so the series terminates at the
        truncation order.
        """
        if not self.has_no_constant_order():
            raise ValueError("exponent has a nonzero h^0 component")
        acc = NCPoly.one(self.rs, self.nlegs)
        term = acc
        for k in range(1, self.rs.order + 1):
            term = (term * self).scale(Fraction(1, k))
            if term.is_zero():
                break
            acc = acc + term
        return acc

    # -- leg bookkeeping ---------------------------------------------------

    def leg_embed(self, target_leg: int, nlegs: int) -> "NCPoly":
        """Embed a single-leg element into one factor of an n-fold tensor."""
        if self.nlegs != 1:
            raise ValueError("leg_embed requires a single-leg polynomial")
        return self.place_legs((target_leg,), nlegs)

    def place_legs(self, legs, nlegs: int) -> "NCPoly":
        """Retag the legs of this element inside an n-fold tensor.

        ``legs[i]`` names the destination of the i-th source leg.  Distinct
        legs commute exactly, so a stable re-sort by leg restores the normal
        form without corrections.
        """
        legs = tuple(legs)
        if len(legs) != self.nlegs:
            raise ValueError(f"need {self.nlegs} destination legs, got {len(legs)}")
        for leg in legs:
            if nlegs == 1:
                if leg != 0:
                    raise ValueError("single-leg elements use leg tag 0")
            elif not 1 <= leg <= nlegs:
                raise ValueError(f"leg {leg} out of range for {nlegs} legs")
        if len(set(legs)) != len(legs):
            raise ValueError("destination legs must be distinct")
        src = [_leg_tag(i, self.nlegs) for i in range(1, self.nlegs + 1)]
        mapping = dict(zip(src, legs))
        out = {}
        for w, c in self.terms.items():
            nw = tuple(sorted(((mapping[l], r) for l, r in w), key=lambda p: p[0]))
            _bump(out, nw, c)
        return NCPoly(self.rs, nlegs, _strip(out))

    def swap_legs(self) -> "NCPoly":
        """Exchange the two legs of a two-leg element."""
        if self.nlegs != 2:
            raise ValueError("swap_legs requires a two-leg polynomial")
        return self.place_legs((2, 1), 2)

    def tensor(self, other: "NCPoly") -> "NCPoly":
        """Tensor product of two single-leg elements as a two-leg element."""
        if self.nlegs != 1 or other.nlegs != 1:
            raise ValueError("tensor expects single-leg factors")
        return self.leg_embed(1, 2) * other.leg_embed(2, 2)

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def has_no_constant_order(self) -> bool:
        return all(c.coefficient(0).is_zero() for c in self.terms.values())

    def coefficient(self, word) -> TruncSeries:
        return self.terms.get(word, TruncSeries.zero(self.rs.order))

    def h_coefficient(self, k: int) -> "NCPoly":
        """The h^k coefficient as a polynomial with constant coefficients."""
        out = {}
        for w, c in self.terms.items():
            v = c.coefficient(k)
            if not v.is_zero():
                out[w] = TruncSeries.const(v, self.rs.order)
        return NCPoly(self.rs, self.nlegs, out)

    def max_word_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return (
            self.rs is other.rs
            and self.nlegs == other.nlegs
            and self.terms == other.terms
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        names = [g.name for g in self.rs.generators]
        parts = []
        for w in sorted(self.terms):
            c = self.terms[w]
            if self.nlegs == 1:
                word = " ".join(names[r] for _, r in w) or "1"
            else:
                legs = []
                for leg in range(1, self.nlegs + 1):
                    sub = " ".join(names[r] for l, r in w if l == leg) or "1"
                    legs.append(sub)
                word = " (x) ".join(legs)
            parts.append(f"({c})*{word}")
        return " + ".join(parts)


def normal_form(word, rs: RewriteSystem) -> NCPoly:
    """PBW normal form of a word of generator names."""
    return NCPoly.from_word(rs, word)


def leg_word(word, leg) -> tuple:
    """Ranks of the letters sitting in one leg of a multi-leg word."""
    return tuple(r for l, r in word if l == leg)


def _bump(d: dict, key, value):
    prev = d.get(key)
    if prev is None:
        d[key] = value
    else:
        s = prev + value
        if s.is_zero():
            del d[key]
        else:
            d[key] = s


def _strip(d: dict) -> dict:
    return {k: v for k, v in d.items() if not v.is_zero()}
