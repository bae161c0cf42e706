"""Term language for linear orders and the cut-cofinality calculus.

A term denotes a linear order built from well orders, reversals, sums,
completions, declared atoms and two lexicographic-product constructors (a
schedule-driven one and a refined one steered by a pair of maps on the
regular cardinals).  Every analysis here is a fold over the term: cofinality
and coinitiality, the Coin/Cofin sets, the full symbolic cut spectrum, the
completeness predicates, and the extension recipe that produces an extremely
symmetrically complete superorder.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Tuple, Union

from .cardinals import (
    ALEPH0,
    Card,
    CardSet,
    CofPair,
    ONE,
    OrdinalIndex,
    ZERO,
    aleph,
    card_max,
    is_regular,
    require_infinite_regular,
    succ,
)
from .errors import DomainError, NotDerivableError, SideConditionError


# ---------------------------------------------------------------------------
# Terms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Empty:
    def __str__(self) -> str:
        return "empty"


@dataclass(frozen=True)
class FiniteChain:
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise DomainError("finite chains have at least one point; use empty")

    def __str__(self) -> str:
        return f"chain({self.size})"


@dataclass(frozen=True)
class WellOrder:
    kappa: Card

    def __post_init__(self):
        require_infinite_regular(self.kappa, "well order length")

    def __str__(self) -> str:
        return f"well({self.kappa})"


@dataclass(frozen=True)
class Rev:
    inner: "OrderTerm"

    def __str__(self) -> str:
        return f"rev({self.inner})"


@dataclass(frozen=True)
class Sum:
    left: "OrderTerm"
    right: "OrderTerm"

    def __post_init__(self):
        if isinstance(self.left, Empty) or isinstance(self.right, Empty):
            raise DomainError("sum parts must be nonempty; use the sum_of factory")

    def __str__(self) -> str:
        parts = ", ".join(str(p) for p in sum_parts(self))
        return f"sum({parts})"


@dataclass(frozen=True)
class Completion:
    inner: "OrderTerm"

    def __str__(self) -> str:
        return f"comp({self.inner})"


@dataclass(frozen=True)
class Atom:
    """An opaque order with declared attributes; the analyzer never looks
    inside.  `cuts` may pin the full (finite) cut spectrum when it is known."""

    name: str
    cf: Card
    ci: Card
    coin: CardSet
    cofin: CardSet
    card_bound: Optional[Card] = None
    cuts: Optional[Tuple[CofPair, ...]] = None

    def __post_init__(self):
        for value, label in ((self.cf, "cf"), (self.ci, "ci")):
            if value.is_zero or not is_regular(value):
                raise DomainError(f"atom {label} must be 1 or infinite regular")
        if self.cf.is_infinite and not self.cofin.contains(self.cf):
            raise DomainError("atom cf must belong to its Cofin set")
        if self.ci.is_infinite and not self.coin.contains(self.ci):
            raise DomainError("atom ci must belong to its Coin set")
        if self.card_bound is not None:
            limit = CardSet.segment_below(succ(self.card_bound)) if self.card_bound.is_infinite else CardSet.empty()
            for s in (self.coin, self.cofin):
                if not s.is_subset(limit):
                    raise DomainError("atom Coin/Cofin exceed the declared cardinality bound")
        if self.cuts is not None:
            object.__setattr__(self, "cuts", tuple(sorted(set(self.cuts))))
            for p in self.cuts:
                if p.right.is_infinite and not self.coin.contains(p.right):
                    raise DomainError(f"declared cut {p} has coinitiality outside Coin")
                if p.left.is_infinite and not self.cofin.contains(p.left):
                    raise DomainError(f"declared cut {p} has cofinality outside Cofin")

    def __str__(self) -> str:
        fields = [self.name, f"cf={self.cf}", f"ci={self.ci}",
                  f"coin={self.coin}", f"cofin={self.cofin}"]
        if self.card_bound is not None:
            fields.append(f"card<={self.card_bound}")
        if self.cuts is not None:
            fields.append("cuts={" + ", ".join(str(p) for p in self.cuts) + "}")
        return "atom(" + "; ".join(fields) + ")"


# -- schedules for the first lexicographic construction ---------------------

RULE_ID, RULE_SUCC, RULE_DSUCC = 0, 1, 2
_RULE_NAMES = {RULE_ID: "id", RULE_SUCC: "plus", RULE_DSUCC: "plusplus"}
_RULE_BY_NAME = {v: k for k, v in _RULE_NAMES.items()}


@dataclass(frozen=True)
class CardinalSchedule:
    """Values kappa_nu / lambda_nu for nu >= 1: an explicit value at nu=1, a
    uniform successor rule, and a uniform value at limit ordinals."""

    k1: Card
    l1: Card
    ksucc: int = RULE_DSUCC
    lsucc: int = RULE_DSUCC
    klim: Optional[Card] = None
    llim: Optional[Card] = None

    def __post_init__(self):
        if self.klim is None:
            object.__setattr__(self, "klim", self.k1)
        if self.llim is None:
            object.__setattr__(self, "llim", self.l1)
        for r in (self.ksucc, self.lsucc):
            if r not in (RULE_ID, RULE_SUCC, RULE_DSUCC):
                raise DomainError("schedule successor rule must be id/plus/plusplus")

    def all_values(self):
        return (self.k1, self.l1, self.klim, self.llim)

    def kappa_at(self, n: int) -> Card:
        """kappa at nu = 1+n along the base chain."""
        return aleph(self.k1.index.plus_nat(self.ksucc * n))

    def lambda_at(self, n: int) -> Card:
        return aleph(self.l1.index.plus_nat(self.lsucc * n))

    def tracks_can_collide(self, with_limits: bool = True) -> bool:
        """Is kappa_nu = lambda_nu possible at some successor nu?"""
        if _chain_eq_exists(self.k1.index, self.ksucc, self.l1.index, self.lsucc):
            return True
        return with_limits and _chain_eq_exists(
            self.klim.index.plus_nat(self.ksucc), self.ksucc,
            self.llim.index.plus_nat(self.lsucc), self.lsucc)

    def succ_dominates(self, with_limits: bool = True) -> bool:
        """Does kappa_{nu+1} >= lambda_nu hold along every chain?"""
        ok = _chain_always_geq(self.k1.index.plus_nat(self.ksucc), self.ksucc,
                               self.l1.index, self.lsucc)
        if ok and with_limits:
            ok = _chain_always_geq(self.klim.index.plus_nat(self.ksucc),
                                   self.ksucc, self.llim.index, self.lsucc)
        return ok

    def __str__(self) -> str:
        return (f"k1={self.k1}; l1={self.l1}; ksucc={_RULE_NAMES[self.ksucc]}; "
                f"lsucc={_RULE_NAMES[self.lsucc]}; klim={self.klim}; llim={self.llim}")


@dataclass(frozen=True)
class LexSchedule:
    """Lexicographic product of I_0 = l0* + I^c + k0 and I_nu = l_nu* + k_nu
    over index set mu."""

    mu: Card
    k0: Card
    l0: Card
    schedule: CardinalSchedule
    inner: "OrderTerm"

    def __str__(self) -> str:
        return (f"lexsched(mu={self.mu}; k0={self.k0}; l0={self.l0}; "
                f"{self.schedule}; i={self.inner})")


# -- piecewise maps on {1} u Reg for the refined construction ---------------

DOM_ONE, DOM_SINGLE, DOM_SEG, DOM_DEFAULT = "1", "single", "seg", "default"
PHI_SUCC = "succ"


@dataclass(frozen=True)
class PhiPiece:
    dom_kind: str
    dom_card: Optional[Card]  # the singleton value or the segment bound
    value: Union[Card, str]   # a constant, or PHI_SUCC on singleton domains

    def __post_init__(self):
        if self.dom_kind not in (DOM_ONE, DOM_SINGLE, DOM_SEG, DOM_DEFAULT):
            raise DomainError("bad phi piece domain")
        if self.dom_kind in (DOM_SINGLE, DOM_SEG):
            if self.dom_card is None:
                raise DomainError("phi piece needs a cardinal")
            if self.dom_kind == DOM_SINGLE:
                require_infinite_regular(self.dom_card, "phi singleton domain")
        if self.value == PHI_SUCC:
            if self.dom_kind != DOM_SINGLE:
                raise DomainError("succ rule needs a singleton domain")
        else:
            require_infinite_regular(self.value, "phi value")

    def matches(self, c: Card) -> bool:
        if self.dom_kind == DOM_ONE:
            return c.is_one
        if self.dom_kind == DOM_SINGLE:
            return c == self.dom_card
        if self.dom_kind == DOM_SEG:
            return c.is_infinite and c < self.dom_card
        return True

    def reg_domain(self) -> Optional[CardSet]:
        """The piece domain inside Reg; None means `all of Reg`."""
        if self.dom_kind == DOM_ONE:
            return CardSet.empty()
        if self.dom_kind == DOM_SINGLE:
            return CardSet.singleton(self.dom_card)
        if self.dom_kind == DOM_SEG:
            return CardSet.segment_below(self.dom_card)
        return None

    def __str__(self) -> str:
        if self.dom_kind == DOM_ONE:
            lhs = "1"
        elif self.dom_kind == DOM_SINGLE:
            lhs = str(self.dom_card)
        elif self.dom_kind == DOM_SEG:
            lhs = f"reg<{self.dom_card}"
        else:
            lhs = "default"
        rhs = "succ" if self.value == PHI_SUCC else str(self.value)
        return f"{lhs}->{rhs}"


@dataclass(frozen=True)
class PhiMap:
    """First-match piecewise map {1} u Reg -> Reg."""

    pieces: Tuple[PhiPiece, ...]

    def evaluate(self, c: Card) -> Card:
        for piece in self.pieces:
            if piece.matches(c):
                if piece.value == PHI_SUCC:
                    return succ(c)
                return piece.value
        raise DomainError(f"phi map undefined at {c}")

    def _walk_reg(self, seg: CardSet):
        """Yield (piece, applicable) where applicable means the piece is hit
        by some member of seg not claimed by an earlier piece."""
        covered = CardSet.empty()
        covered_all = False
        for piece in self.pieces:
            dom = piece.reg_domain()
            if covered_all:
                yield piece, False, None
                continue
            if dom is None:
                live = not seg.is_subset(covered)
                yield piece, live, None
                covered_all = True
            else:
                hit = dom.intersect(seg)
                live = not hit.is_subset(covered)
                yield piece, live, hit
                covered = covered.union(dom)
        if not covered_all and not seg.is_subset(covered):
            raise DomainError("phi map is partial on the requested segment")

    def image_over(self, seg: CardSet, include_one: bool = False) -> CardSet:
        out = CardSet.empty()
        if include_one:
            out = out.union(CardSet.singleton(self.evaluate(ONE)))
        if seg.is_empty:
            return out
        for piece, live, _hit in self._walk_reg(seg):
            if not live:
                continue
            if piece.value == PHI_SUCC:
                out = out.union(CardSet.singleton(succ(piece.dom_card)))
            else:
                out = out.union(CardSet.singleton(piece.value))
        return out

    def range_violation(self, seg: CardSet, target: CardSet,
                        include_one: bool = False) -> Optional[str]:
        """A witness that phi({1} u seg) is not inside target, or None."""
        try:
            if include_one:
                v = self.evaluate(ONE)
                if not target.contains(v):
                    return f"phi(1)={v} outside {target}"
            if not seg.is_empty:
                for piece, live, _hit in self._walk_reg(seg):
                    if not live:
                        continue
                    if piece.value == PHI_SUCC:
                        v = succ(piece.dom_card)
                        if not target.contains(v):
                            return f"phi({piece.dom_card})={v} outside {target}"
                    elif not target.contains(piece.value):
                        return f"piece {piece} maps into {piece.value} outside {target}"
        except DomainError as exc:
            return str(exc)
        return None

    def fixed_point_in(self, seg: CardSet) -> Optional[Card]:
        """Some kappa in seg with phi(kappa) = kappa, if one exists."""
        for i, piece in enumerate(self.pieces):
            if piece.value == PHI_SUCC:
                continue
            c = piece.value
            if seg.contains(c) and piece.matches(c) and \
                    not any(self.pieces[j].matches(c) for j in range(i)):
                return c
        return None

    def __str__(self) -> str:
        return "[" + ", ".join(str(p) for p in self.pieces) + "]"


@dataclass(frozen=True)
class LexRefined:
    """The refined lexicographic construction: coefficient sets steered by
    phil/phir applied to the local cofinality data."""

    mu: Card
    k0: Card
    l0: Card
    phil: PhiMap
    phir: PhiMap
    inner: "OrderTerm"

    def __str__(self) -> str:
        return (f"lexref(mu={self.mu}; k0={self.k0}; l0={self.l0}; "
                f"phil={self.phil}; phir={self.phir}; i={self.inner})")


OrderTerm = Union[Empty, FiniteChain, WellOrder, Rev, Sum, Completion, Atom,
                  LexSchedule, LexRefined]


# -- smart constructors ------------------------------------------------------

EMPTY = Empty()


def chain(n: int) -> OrderTerm:
    return EMPTY if n == 0 else FiniteChain(n)


def well(kappa: Card) -> WellOrder:
    return WellOrder(kappa)


def rev(t: OrderTerm) -> OrderTerm:
    if isinstance(t, Rev):
        return t.inner
    if isinstance(t, Empty):
        return t
    return Rev(t)


def sum_of(*terms: OrderTerm) -> OrderTerm:
    parts = [t for t in terms if not isinstance(t, Empty)]
    if not parts:
        return EMPTY
    out = parts[-1]
    for t in reversed(parts[:-1]):
        out = Sum(t, out)
    return out


def completion(t: OrderTerm) -> OrderTerm:
    if isinstance(t, (Empty, Completion)):
        return t
    return Completion(t)


def sum_parts(t: OrderTerm):
    if isinstance(t, Sum):
        return sum_parts(t.left) + sum_parts(t.right)
    return [t]


# ---------------------------------------------------------------------------
# Regularity gate for the lexicographic constructions
# ---------------------------------------------------------------------------

def _lex_regularity_failures(t: OrderTerm):
    bad = []
    if isinstance(t, LexSchedule):
        named = [("mu", t.mu), ("k0", t.k0), ("l0", t.l0),
                 ("k1", t.schedule.k1), ("l1", t.schedule.l1),
                 ("klim", t.schedule.klim), ("llim", t.schedule.llim)]
    elif isinstance(t, LexRefined):
        named = [("mu", t.mu), ("k0", t.k0), ("l0", t.l0)]
    else:
        return bad
    for name, value in named:
        if not (value.is_infinite and is_regular(value)):
            bad.append(f"{name}={value}")
    return bad


def _require_lex_regular(t: OrderTerm) -> None:
    bad = _lex_regularity_failures(t)
    if bad:
        raise SideConditionError("regular-params",
                                 "not infinite regular: " + ", ".join(bad))


# ---------------------------------------------------------------------------
# Cofinality / coinitiality
# ---------------------------------------------------------------------------

def cf(t: OrderTerm) -> Card:
    """Cofinality of the order; `0` sentinel for the empty order."""
    if isinstance(t, Empty):
        return ZERO
    if isinstance(t, FiniteChain):
        return ONE
    if isinstance(t, WellOrder):
        return t.kappa
    if isinstance(t, Rev):
        return ci(t.inner)
    if isinstance(t, Sum):
        return cf(t.right)
    if isinstance(t, Completion):
        return cf(t.inner)
    if isinstance(t, Atom):
        return t.cf
    if isinstance(t, (LexSchedule, LexRefined)):
        _require_lex_regular(t)
        return t.k0
    raise DomainError(f"unknown term {t!r}")


def ci(t: OrderTerm) -> Card:
    """Coinitiality: cofinality under the reversed order."""
    if isinstance(t, Empty):
        return ZERO
    if isinstance(t, FiniteChain):
        return ONE
    if isinstance(t, WellOrder):
        return ONE
    if isinstance(t, Rev):
        return cf(t.inner)
    if isinstance(t, Sum):
        return ci(t.left)
    if isinstance(t, Completion):
        return ci(t.inner)
    if isinstance(t, Atom):
        return t.ci
    if isinstance(t, (LexSchedule, LexRefined)):
        _require_lex_regular(t)
        return t.l0
    raise DomainError(f"unknown term {t!r}")


def _succ_chain_closure(base: OrdinalIndex, step: int) -> CardSet:
    """All regulars <= some value of the chain aleph(base + step*n)."""
    if step == 0:
        return CardSet.segment_below(aleph(base.succ()))
    return CardSet.segment_below(aleph(base.plus_omega()))


def coin_cofin(t: OrderTerm) -> Tuple[CardSet, CardSet]:
    """(Coin, Cofin): the infinite coinitialities and cofinalities realized
    by subsets of the order."""
    if isinstance(t, (Empty, FiniteChain)):
        return CardSet.empty(), CardSet.empty()
    if isinstance(t, WellOrder):
        cofin = CardSet.segment_below(t.kappa).union(CardSet.singleton(t.kappa))
        return CardSet.empty(), cofin
    if isinstance(t, Rev):
        coin, cofin = coin_cofin(t.inner)
        return cofin, coin
    if isinstance(t, Sum):
        cl, fl = coin_cofin(t.left)
        cr, fr = coin_cofin(t.right)
        return cl.union(cr), fl.union(fr)
    if isinstance(t, Completion):
        return coin_cofin(t.inner)
    if isinstance(t, Atom):
        return t.coin, t.cofin
    if isinstance(t, LexSchedule):
        _require_lex_regular(t)
        coin_i, cofin_i = coin_cofin(t.inner)
        s = t.schedule
        mu_seg = CardSet.segment_below(t.mu).union(CardSet.singleton(t.mu))
        coin = coin_i.union(CardSet.segment_below(t.l0)) \
            .union(CardSet.singleton(t.l0)).union(mu_seg) \
            .union(_succ_chain_closure(s.l1.index, s.lsucc))
        cofin = cofin_i.union(CardSet.segment_below(t.k0)) \
            .union(CardSet.singleton(t.k0)).union(mu_seg) \
            .union(_succ_chain_closure(s.k1.index, s.ksucc))
        if t.mu.is_uncountable:
            coin = coin.union(_succ_chain_closure(s.llim.index, s.lsucc))
            cofin = cofin.union(_succ_chain_closure(s.klim.index, s.ksucc))
        return coin, cofin
    if isinstance(t, LexRefined):
        _require_lex_regular(t)
        rl, rr = refined_rl_rr(t)
        mu_seg = CardSet.segment_below(t.mu).union(CardSet.singleton(t.mu))
        coin = rr.union(t.phir.image_over(rl)).union(mu_seg) \
            .union(CardSet.singleton(t.l0))
        cofin = rl.union(t.phil.image_over(rr)).union(mu_seg) \
            .union(CardSet.singleton(t.k0))
        return coin, cofin
    raise DomainError(f"unknown term {t!r}")


def refined_rl_rr(t: LexRefined) -> Tuple[CardSet, CardSet]:
    """The sets Rl = Cofin(I) u Reg_{<k0} u Reg_{<mu} and
    Rr = Coin(I) u Reg_{<l0} u Reg_{<mu}."""
    coin_i, cofin_i = coin_cofin(t.inner)
    below_mu = CardSet.segment_below(t.mu)
    rl = cofin_i.union(CardSet.segment_below(t.k0)).union(below_mu)
    rr = coin_i.union(CardSet.segment_below(t.l0)).union(below_mu)
    return rl, rr


def card_bound(t: OrderTerm) -> Card:
    """A declared cardinality bound, where one is derivable."""
    if isinstance(t, (Empty, FiniteChain)):
        return ONE
    if isinstance(t, WellOrder):
        return t.kappa
    if isinstance(t, Rev):
        return card_bound(t.inner)
    if isinstance(t, Sum):
        return card_max(card_bound(t.left), card_bound(t.right))
    if isinstance(t, Completion):
        raise NotDerivableError("the cardinality of a completion is not determined by the inner order")
    if isinstance(t, Atom):
        if t.card_bound is None:
            raise NotDerivableError(f"atom {t.name} has no declared cardinality bound")
        return t.card_bound
    raise NotDerivableError("no cardinality bound is derivable for lexicographic products")


# ---------------------------------------------------------------------------
# Affine index chains: decision helpers for families indexed by n >= 0
# ---------------------------------------------------------------------------

def _chain_eq_exists(a: OrdinalIndex, s: int, b: OrdinalIndex, t: int,
                     n0: int = 0) -> bool:
    """Does a + s*n = b + t*n hold for some n >= n0?"""
    if a.limit_part() != b.limit_part():
        return False
    fa, fb = a.finite_part(), b.finite_part()
    if s == t:
        return fa == fb
    num, den = fa - fb, t - s
    if num % den:
        return False
    n = num // den
    return n >= n0


def _chain_always_geq(a: OrdinalIndex, s: int, b: OrdinalIndex, t: int) -> bool:
    """Does a + s*n >= b + t*n hold for every n >= 0?"""
    la, lb = a.limit_part(), b.limit_part()
    if la != lb:
        return la > lb
    if s < t:
        return False
    return a.finite_part() >= b.finite_part()


def _chain_lt_exists(a: OrdinalIndex, s: int, b: OrdinalIndex, t: int) -> bool:
    """Does a + s*n < b + t*n hold for some n >= 0?"""
    la, lb = a.limit_part(), b.limit_part()
    if la != lb:
        return la < lb
    if t > s:
        return True
    return a.finite_part() < b.finite_part()


def _affine(base: OrdinalIndex, step: int, n: int) -> Card:
    return aleph(base.plus_nat(step * n))


# ---------------------------------------------------------------------------
# Spectrum parts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExplicitPairs:
    """A finite set of concrete cofinality pairs, all principal or all not."""

    pairs: Tuple[CofPair, ...]
    principal: bool

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(sorted(set(self.pairs))))
        for p in self.pairs:
            if p.is_principal != self.principal:
                raise DomainError(f"pair {p} does not match principal={self.principal}")

    @property
    def is_empty(self) -> bool:
        return not self.pairs

    def mirrored(self):
        return ExplicitPairs(tuple(p.mirrored() for p in self.pairs), self.principal)

    def has_symmetric(self) -> bool:
        return any(p.is_symmetric for p in self.pairs)

    def has_infinite_symmetric(self) -> bool:
        return any(p.is_symmetric and p.left.is_infinite for p in self.pairs)

    def has_not_strongly(self) -> bool:
        return any(not p.is_strongly_asymmetric for p in self.pairs)

    def violates_one_left(self) -> bool:
        return any(p.left.is_one and not p.right.is_uncountable for p in self.pairs)

    def violates_type2(self) -> bool:
        return any(p.left.is_infinite and not p.is_strongly_asymmetric
                   for p in self.pairs)

    def has_both_countable(self) -> bool:
        return any(p.both_countable for p in self.pairs)

    def pairs_below(self, bound: Card) -> Iterator[CofPair]:
        for p in self.pairs:
            if p.left < bound and p.right < bound:
                yield p

    def render(self) -> str:
        body = ", ".join(str(p) for p in self.pairs)
        return "{" + body + "}"


@dataclass(frozen=True)
class RowSegRight:
    """{(left, l) : l in seg}: fixed left component, right from a card set."""

    left: Card
    seg: CardSet

    @property
    def is_empty(self) -> bool:
        return self.seg.is_empty

    @property
    def principal(self) -> bool:
        return self.left.is_one

    def mirrored(self):
        return RowSegLeft(self.seg, self.left)

    def has_symmetric(self) -> bool:
        return self.left.is_infinite and self.seg.contains(self.left)

    def has_infinite_symmetric(self) -> bool:
        return self.has_symmetric()

    def has_not_strongly(self) -> bool:
        if self.left.is_one:
            return self.seg.contains(ALEPH0)
        return self.seg.contains(self.left) or \
            (self.left == ALEPH0 and self.seg.contains(ALEPH0))

    def violates_one_left(self) -> bool:
        return self.left.is_one and self.seg.contains(ALEPH0)

    def violates_type2(self) -> bool:
        return self.left.is_infinite and self.has_not_strongly()

    def has_both_countable(self) -> bool:
        return not self.left.is_uncountable and self.seg.contains(ALEPH0)

    def pairs_below(self, bound: Card) -> Iterator[CofPair]:
        if not self.left < bound:
            return
        for lam in self.seg.intersect(CardSet.segment_below(bound)).members():
            yield CofPair(self.left, lam)

    def render(self) -> str:
        return f"{{({self.left},l) : l in {self.seg}}}"


@dataclass(frozen=True)
class RowSegLeft:
    """{(k, right) : k in seg}."""

    seg: CardSet
    right: Card

    @property
    def is_empty(self) -> bool:
        return self.seg.is_empty

    @property
    def principal(self) -> bool:
        return self.right.is_one

    def mirrored(self):
        return RowSegRight(self.right, self.seg)

    def has_symmetric(self) -> bool:
        return self.right.is_infinite and self.seg.contains(self.right)

    def has_infinite_symmetric(self) -> bool:
        return self.has_symmetric()

    def has_not_strongly(self) -> bool:
        if self.right.is_one:
            return self.seg.contains(ALEPH0)
        return self.seg.contains(self.right) or \
            (self.right == ALEPH0 and self.seg.contains(ALEPH0))

    def violates_one_left(self) -> bool:
        return False

    def violates_type2(self) -> bool:
        return self.has_not_strongly()

    def has_both_countable(self) -> bool:
        return not self.right.is_uncountable and self.seg.contains(ALEPH0)

    def pairs_below(self, bound: Card) -> Iterator[CofPair]:
        if not self.right < bound:
            return
        for kap in self.seg.intersect(CardSet.segment_below(bound)).members():
            yield CofPair(kap, self.right)

    def render(self) -> str:
        return f"{{(k,{self.right}) : k in {self.seg}}}"


@dataclass(frozen=True)
class PhiLeftFam:
    """{(k, phi(k)) : k in seg}."""

    seg: CardSet
    phi: PhiMap

    @property
    def is_empty(self) -> bool:
        return self.seg.is_empty

    principal = False

    def mirrored(self):
        return PhiRightFam(self.phi, self.seg)

    def has_symmetric(self) -> bool:
        return self.phi.fixed_point_in(self.seg) is not None

    def has_infinite_symmetric(self) -> bool:
        return self.has_symmetric()

    def has_not_strongly(self) -> bool:
        return self.has_symmetric()

    def violates_one_left(self) -> bool:
        return False

    def violates_type2(self) -> bool:
        return self.has_symmetric()

    def has_both_countable(self) -> bool:
        return self.seg.contains(ALEPH0) and self.phi.evaluate(ALEPH0) == ALEPH0

    def pairs_below(self, bound: Card) -> Iterator[CofPair]:
        for kap in self.seg.intersect(CardSet.segment_below(bound)).members():
            lam = self.phi.evaluate(kap)
            if lam < bound:
                yield CofPair(kap, lam)

    def render(self) -> str:
        return f"{{(k,phi(k)) : k in {self.seg}, phi={self.phi}}}"


@dataclass(frozen=True)
class PhiRightFam:
    """{(phi(l), l) : l in seg}."""

    phi: PhiMap
    seg: CardSet

    @property
    def is_empty(self) -> bool:
        return self.seg.is_empty

    principal = False

    def mirrored(self):
        return PhiLeftFam(self.seg, self.phi)

    def has_symmetric(self) -> bool:
        return self.phi.fixed_point_in(self.seg) is not None

    def has_infinite_symmetric(self) -> bool:
        return self.has_symmetric()

    def has_not_strongly(self) -> bool:
        return self.has_symmetric()

    def violates_one_left(self) -> bool:
        return False

    def violates_type2(self) -> bool:
        return self.has_symmetric()

    def has_both_countable(self) -> bool:
        return self.seg.contains(ALEPH0) and self.phi.evaluate(ALEPH0) == ALEPH0

    def pairs_below(self, bound: Card) -> Iterator[CofPair]:
        for lam in self.seg.intersect(CardSet.segment_below(bound)).members():
            kap = self.phi.evaluate(lam)
            if kap < bound:
                yield CofPair(kap, lam)

    def render(self) -> str:
        return f"{{(phi(l),l) : l in {self.seg}, phi={self.phi}}}"


@dataclass(frozen=True)
class ChainPairs:
    """{(aleph(la + ls*n), aleph(ra + rs*n)) : n >= 0}."""

    la: OrdinalIndex
    ls: int
    ra: OrdinalIndex
    rs: int

    is_empty = False
    principal = False

    def mirrored(self):
        return ChainPairs(self.ra, self.rs, self.la, self.ls)

    def has_symmetric(self) -> bool:
        return _chain_eq_exists(self.la, self.ls, self.ra, self.rs)

    def has_infinite_symmetric(self) -> bool:
        return self.has_symmetric()

    def has_not_strongly(self) -> bool:
        return self.has_symmetric()

    def violates_one_left(self) -> bool:
        return False

    def violates_type2(self) -> bool:
        return self.has_symmetric()

    def has_both_countable(self) -> bool:
        return self.la.is_zero and self.ra.is_zero

    def pairs_below(self, bound: Card) -> Iterator[CofPair]:
        n = 0
        while True:
            left, right = _affine(self.la, self.ls, n), _affine(self.ra, self.rs, n)
            if not (left < bound and right < bound):
                return
            yield CofPair(left, right)
            if self.ls == 0 and self.rs == 0:
                return
            n += 1

    def render(self) -> str:
        return (f"{{(aleph({self.la}+{self.ls}n), aleph({self.ra}+{self.rs}n)) "
                f": n>=0}}")


@dataclass(frozen=True)
class ChainSegRight:
    """{(aleph(la + ls*n), l) : l in reg<aleph(ba + bs*n), n >= 0}."""

    la: OrdinalIndex
    ls: int
    ba: OrdinalIndex
    bs: int

    principal = False

    @property
    def is_empty(self) -> bool:
        return self.ba.is_zero and self.bs == 0

    def mirrored(self):
        return ChainSegLeft(self.ba, self.bs, self.la, self.ls)

    def has_symmetric(self) -> bool:
        return _chain_lt_exists(self.la, self.ls, self.ba, self.bs)

    def has_infinite_symmetric(self) -> bool:
        return self.has_symmetric()

    def has_not_strongly(self) -> bool:
        return self.has_symmetric()

    def violates_one_left(self) -> bool:
        return False

    def violates_type2(self) -> bool:
        return self.has_symmetric()

    def has_both_countable(self) -> bool:
        if not self.la.is_zero:
            return False
        if self.ls > 0:
            return not self.ba.is_zero
        return not self.ba.is_zero or self.bs > 0

    def pairs_below(self, bound: Card) -> Iterator[CofPair]:
        below = CardSet.segment_below(bound)
        n = 0
        while True:
            left = _affine(self.la, self.ls, n)
            if not left < bound:
                return
            seg = CardSet.segment_below(_affine(self.ba, self.bs, n)).intersect(below)
            for lam in seg.members():
                yield CofPair(left, lam)
            if self.ls == 0:
                # fixed left component: stop once the inner segment saturates
                if self.bs == 0 or not _affine(self.ba, self.bs, n) < bound:
                    return
            n += 1

    def render(self) -> str:
        return (f"{{(aleph({self.la}+{self.ls}n), l) : "
                f"l in reg<aleph({self.ba}+{self.bs}n), n>=0}}")


@dataclass(frozen=True)
class ChainSegLeft:
    """{(k, aleph(ra + rs*n)) : k in reg<aleph(ba + bs*n), n >= 0}."""

    ba: OrdinalIndex
    bs: int
    ra: OrdinalIndex
    rs: int

    principal = False

    @property
    def is_empty(self) -> bool:
        return self.ba.is_zero and self.bs == 0

    def mirrored(self):
        return ChainSegRight(self.ra, self.rs, self.ba, self.bs)

    def has_symmetric(self) -> bool:
        return _chain_lt_exists(self.ra, self.rs, self.ba, self.bs)

    def has_infinite_symmetric(self) -> bool:
        return self.has_symmetric()

    def has_not_strongly(self) -> bool:
        return self.has_symmetric()

    def violates_one_left(self) -> bool:
        return False

    def violates_type2(self) -> bool:
        return self.has_symmetric()

    def has_both_countable(self) -> bool:
        if not self.ra.is_zero:
            return False
        if self.rs > 0:
            return not self.ba.is_zero
        return not self.ba.is_zero or self.bs > 0

    def pairs_below(self, bound: Card) -> Iterator[CofPair]:
        below = CardSet.segment_below(bound)
        n = 0
        while True:
            right = _affine(self.ra, self.rs, n)
            if not right < bound:
                return
            seg = CardSet.segment_below(_affine(self.ba, self.bs, n)).intersect(below)
            for kap in seg.members():
                yield CofPair(kap, right)
            if self.rs == 0:
                if self.bs == 0 or not _affine(self.ba, self.bs, n) < bound:
                    return
            n += 1

    def render(self) -> str:
        return (f"{{(k, aleph({self.ra}+{self.rs}n)) : "
                f"k in reg<aleph({self.ba}+{self.bs}n), n>=0}}")


SpectrumPart = Union[ExplicitPairs, RowSegRight, RowSegLeft, PhiLeftFam,
                     PhiRightFam, ChainPairs, ChainSegRight, ChainSegLeft]

_PART_ORDER = {ExplicitPairs: 0, RowSegRight: 1, RowSegLeft: 2, PhiLeftFam: 3,
               PhiRightFam: 4, ChainPairs: 5, ChainSegRight: 6, ChainSegLeft: 7}


def _chain_offset(base: OrdinalIndex, step: int, other: OrdinalIndex):
    """k >= 0 with other = base + step*k, or None."""
    if base.limit_part() != other.limit_part():
        return None
    diff = other.finite_part() - base.finite_part()
    if step == 0:
        return 0 if diff == 0 else None
    if diff < 0 or diff % step:
        return None
    return diff // step


def _subsumes(a: SpectrumPart, b: SpectrumPart) -> bool:
    """True when family a contains family b (same shape, shifted base)."""
    if isinstance(a, ChainPairs) and isinstance(b, ChainPairs):
        if (a.ls, a.rs) != (b.ls, b.rs):
            return False
        kl = _chain_offset(a.la, a.ls, b.la)
        kr = _chain_offset(a.ra, a.rs, b.ra)
        return kl is not None and kl == kr
    if isinstance(a, ChainSegRight) and isinstance(b, ChainSegRight):
        if (a.ls, a.bs) != (b.ls, b.bs):
            return False
        kl = _chain_offset(a.la, a.ls, b.la)
        kb = _chain_offset(a.ba, a.bs, b.ba)
        return kl is not None and kl == kb
    if isinstance(a, ChainSegLeft) and isinstance(b, ChainSegLeft):
        if (a.rs, a.bs) != (b.rs, b.bs):
            return False
        kr = _chain_offset(a.ra, a.rs, b.ra)
        kb = _chain_offset(a.ba, a.bs, b.ba)
        return kr is not None and kr == kb
    return False


@dataclass(frozen=True)
class CutSpectrum:
    """A symbolic set of cut cofinality pairs: explicit pairs plus map- and
    chain-indexed families, kept in a normal form so that equal spectra
    compare equal structurally."""

    parts: Tuple[SpectrumPart, ...]

    @staticmethod
    def of(parts) -> "CutSpectrum":
        flat = []
        for p in parts:
            if p.is_empty:
                continue
            # phi families over finitely enumerable segments expand fully
            if isinstance(p, PhiLeftFam) and p.seg.is_finite():
                pairs = tuple(CofPair(k, p.phi.evaluate(k)) for k in p.seg.members())
                flat.append(ExplicitPairs(pairs, principal=False))
                continue
            if isinstance(p, PhiRightFam) and p.seg.is_finite():
                pairs = tuple(CofPair(p.phi.evaluate(l), l) for l in p.seg.members())
                flat.append(ExplicitPairs(pairs, principal=False))
                continue
            # collapse degenerate chain families to simpler shapes
            if isinstance(p, ChainPairs) and p.ls == 0 and p.rs == 0:
                flat.append(ExplicitPairs((CofPair(aleph(p.la), aleph(p.ra)),),
                                          principal=False))
                continue
            if isinstance(p, ChainSegRight) and p.ls == 0 and p.bs == 0:
                flat.append(RowSegRight(aleph(p.la),
                                        CardSet.segment_below(aleph(p.ba))))
                continue
            if isinstance(p, ChainSegLeft) and p.rs == 0 and p.bs == 0:
                flat.append(RowSegLeft(CardSet.segment_below(aleph(p.ba)),
                                       aleph(p.ra)))
                continue
            flat.append(p)
        flat = [p for p in flat if not p.is_empty]
        # merge explicit pair groups of equal principality and segment rows
        # sharing their fixed component
        principal_pairs, other_pairs, rest = set(), set(), []
        seg_right, seg_left = {}, {}
        for p in flat:
            if isinstance(p, ExplicitPairs):
                (principal_pairs if p.principal else other_pairs).update(p.pairs)
            elif isinstance(p, RowSegRight):
                seg_right[p.left] = seg_right.get(p.left, CardSet.empty()).union(p.seg)
            elif isinstance(p, RowSegLeft):
                seg_left[p.right] = seg_left.get(p.right, CardSet.empty()).union(p.seg)
            else:
                rest.append(p)
        rest.extend(RowSegRight(left, seg) for left, seg in seg_right.items())
        rest.extend(RowSegLeft(seg, right) for right, seg in seg_left.items())
        # drop chain families subsumed by another chain family
        kept = []
        for i, p in enumerate(rest):
            if any(j != i and _subsumes(q, p) and not (_subsumes(p, q) and j > i)
                   for j, q in enumerate(rest)):
                continue
            kept.append(p)
        parts = []
        if principal_pairs:
            parts.append(ExplicitPairs(tuple(sorted(principal_pairs)), True))
        if other_pairs:
            parts.append(ExplicitPairs(tuple(sorted(other_pairs)), False))
        parts.extend(kept)
        uniq = sorted(set(parts), key=lambda p: (_PART_ORDER[type(p)], p.render()))
        return CutSpectrum(tuple(uniq))

    @property
    def is_empty(self) -> bool:
        return not self.parts

    def union(self, other: "CutSpectrum") -> "CutSpectrum":
        return CutSpectrum.of(self.parts + other.parts)

    def mirrored(self) -> "CutSpectrum":
        return CutSpectrum.of(tuple(p.mirrored() for p in self.parts))

    def has_symmetric_pair(self) -> bool:
        return any(p.has_symmetric() for p in self.parts)

    def has_not_strongly_asymmetric(self) -> bool:
        return any(p.has_not_strongly() for p in self.parts)

    def has_pair_both_countable(self) -> bool:
        return any(p.has_both_countable() for p in self.parts)

    def has_nonprincipal_symmetric(self) -> bool:
        """Tag-based route: symmetric pair inside a part not tagged principal."""
        return any(p.has_symmetric() for p in self.parts if not p.principal)

    def all_one_left_uncountable(self) -> bool:
        """Every pair (1, l) in the spectrum has l uncountable."""
        return not any(p.violates_one_left() for p in self.parts)

    def all_infinite_left_strongly_asymmetric(self) -> bool:
        """Every pair with infinite left component is strongly asymmetric."""
        return not any(p.violates_type2() for p in self.parts)

    def pairs_below(self, bound: Card) -> frozenset:
        if not (bound.is_infinite and bound.index.is_finite_number()):
            raise DomainError("enumeration needs a bound aleph(n) with finite n")
        out = set()
        for p in self.parts:
            out.update(p.pairs_below(bound))
        return frozenset(out)

    def render_lines(self):
        return [p.render() for p in self.parts]

    def __str__(self) -> str:
        return " u ".join(self.render_lines()) if self.parts else "{}"


# ---------------------------------------------------------------------------
# Cut spectra of terms
# ---------------------------------------------------------------------------

def _schedule_rows(t: LexSchedule):
    """The five cofinality row families of the schedule product.  The matched
    successor row includes nu = 1: it arises as soon as both restriction sets
    at rank 0 have extremal elements."""
    s = t.schedule
    coin_i, cofin_i = coin_cofin(t.inner)
    rows = [
        ExplicitPairs((CofPair(ONE, t.mu), CofPair(t.mu, ONE)), principal=True),
        # mu_0 = 0: one side comes from a cut in I_0 = l0* + I^c + k0
        RowSegRight(s.k1, coin_i.union(CardSet.segment_below(t.l0))),
        RowSegLeft(cofin_i.union(CardSet.segment_below(t.k0)), s.l1),
        # 0 < mu_0 along the base chain nu = 1 + n
        ChainSegRight(s.k1.index.plus_nat(s.ksucc), s.ksucc, s.l1.index, s.lsucc),
        ChainSegLeft(s.k1.index, s.ksucc, s.l1.index.plus_nat(s.lsucc), s.lsucc),
        # both sides extremal at mu_0: (kappa_nu, lambda_nu), nu successor
        ChainPairs(s.k1.index, s.ksucc, s.l1.index, s.lsucc),
    ]
    if t.mu.is_uncountable:
        rows.extend([
            # chains restarting above each limit ordinal
            ChainSegRight(s.klim.index.plus_nat(s.ksucc), s.ksucc,
                          s.llim.index, s.lsucc),
            ChainSegLeft(s.klim.index, s.ksucc,
                         s.llim.index.plus_nat(s.lsucc), s.lsucc),
            ChainPairs(s.klim.index.plus_nat(s.ksucc), s.ksucc,
                       s.llim.index.plus_nat(s.lsucc), s.lsucc),
            # cuts one-sided at a limit mu_0: the other cofinality is cf(mu_0)
            RowSegRight(s.klim, CardSet.segment_below(t.mu)),
            RowSegLeft(CardSet.segment_below(t.mu), s.llim),
        ])
    return rows


def _refined_rows(t: LexRefined):
    rl, rr = refined_rl_rr(t)
    for phi, seg, target, name in ((t.phil, rr, rl, "phi-left-range"),
                                   (t.phir, rl, rr, "phi-right-range")):
        witness = phi.range_violation(seg, target, include_one=True)
        if witness is not None:
            raise SideConditionError(name, witness)
    return [
        ExplicitPairs((CofPair(ONE, t.mu), CofPair(t.mu, ONE)), principal=True),
        PhiLeftFam(rl, t.phir),
        PhiRightFam(t.phil, rr),
    ]


def cut_spectrum(t: OrderTerm) -> CutSpectrum:
    """The exact symbolic set of cut cofinality pairs of the order."""
    if isinstance(t, Empty):
        return CutSpectrum.of(())
    if isinstance(t, FiniteChain):
        if t.size < 2:
            return CutSpectrum.of(())
        return CutSpectrum.of((ExplicitPairs((CofPair(ONE, ONE),), True),))
    if isinstance(t, WellOrder):
        parts = [ExplicitPairs((CofPair(ONE, ONE),), True),
                 RowSegLeft(CardSet.segment_below(t.kappa), ONE)]
        return CutSpectrum.of(parts)
    if isinstance(t, Rev):
        return cut_spectrum(t.inner).mirrored()
    if isinstance(t, Sum):
        boundary = CofPair(cf(t.left), ci(t.right))
        mid = ExplicitPairs((boundary,), boundary.is_principal)
        return cut_spectrum(t.left).union(cut_spectrum(t.right)) \
            .union(CutSpectrum.of((mid,)))
    if isinstance(t, Completion):
        raise NotDerivableError(
            "the cut spectrum of a free-standing completion is not derivable; "
            "completions are only analyzed inside the lexicographic constructions")
    if isinstance(t, Atom):
        if t.cuts is None:
            raise NotDerivableError(
                f"atom {t.name} does not declare its cut spectrum")
        principal = tuple(p for p in t.cuts if p.is_principal)
        other = tuple(p for p in t.cuts if not p.is_principal)
        parts = []
        if principal:
            parts.append(ExplicitPairs(principal, True))
        if other:
            parts.append(ExplicitPairs(other, False))
        return CutSpectrum.of(parts)
    if isinstance(t, LexSchedule):
        _require_lex_regular(t)
        return CutSpectrum.of(_schedule_rows(t))
    if isinstance(t, LexRefined):
        _require_lex_regular(t)
        return CutSpectrum.of(_refined_rows(t))
    raise DomainError(f"unknown term {t!r}")


# ---------------------------------------------------------------------------
# Side conditions of the two constructions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConditionCheck:
    name: str
    passed: bool
    detail: str = ""

    def __str__(self) -> str:
        tag = "pass" if self.passed else "fail"
        return f"{self.name}: {tag}" + (f" ({self.detail})" if self.detail else "")


def _check(name: str, passed: bool, detail: str = "") -> ConditionCheck:
    return ConditionCheck(name, passed, detail if not passed else "")


def _schedule_conditions(t: LexSchedule):
    s = t.schedule
    out = []
    bad = _lex_regularity_failures(t)
    out.append(ConditionCheck("regular-params", not bad,
                              "; ".join(bad) if bad else ""))
    if bad:
        return tuple(out)
    coin_i, cofin_i = coin_cofin(t.inner)
    right0 = coin_i.union(CardSet.segment_below(t.l0))
    left0 = cofin_i.union(CardSet.segment_below(t.k0))
    a_ok = not right0.contains(s.k1) and not left0.contains(s.l1)
    out.append(_check("cond-a", a_ok,
                      f"k1={s.k1} vs Coin(I)+Reg<l0={right0}; "
                      f"l1={s.l1} vs Cofin(I)+Reg<k0={left0}"))

    b_parts = [s.k1 >= t.l0 and s.l1 >= t.k0,
               _chain_always_geq(s.k1.index.plus_nat(s.ksucc), s.ksucc,
                                 s.l1.index, s.lsucc),
               _chain_always_geq(s.l1.index.plus_nat(s.lsucc), s.lsucc,
                                 s.k1.index, s.ksucc)]
    if t.mu.is_uncountable:
        b_parts.append(_chain_always_geq(s.klim.index.plus_nat(s.ksucc), s.ksucc,
                                         s.llim.index, s.lsucc))
        b_parts.append(_chain_always_geq(s.llim.index.plus_nat(s.lsucc), s.lsucc,
                                         s.klim.index, s.ksucc))
    out.append(_check("cond-b", all(b_parts),
                      "some kappa_{nu+1} < lambda_nu or lambda_{nu+1} < kappa_nu"))

    c_ok = not _chain_eq_exists(s.k1.index, s.ksucc, s.l1.index, s.lsucc)
    if t.mu.is_uncountable and c_ok:
        c_ok = not _chain_eq_exists(s.klim.index.plus_nat(s.ksucc), s.ksucc,
                                    s.llim.index.plus_nat(s.lsucc), s.lsucc)
    out.append(_check("cond-c", c_ok, "kappa_nu = lambda_nu at some successor nu"))

    d_ok = (not t.mu.is_uncountable) or (s.klim >= t.mu and s.llim >= t.mu)
    out.append(_check("cond-d", d_ok,
                      f"klim={s.klim}, llim={s.llim} below mu={t.mu}"))
    out.append(_check("mu-uncountable", t.mu.is_uncountable,
                      f"mu={t.mu} is countable"))
    return tuple(out)


def _refined_conditions(t: LexRefined):
    out = []
    bad = _lex_regularity_failures(t)
    out.append(ConditionCheck("regular-params", not bad,
                              "; ".join(bad) if bad else ""))
    if bad:
        return tuple(out)
    rl, rr = refined_rl_rr(t)
    wl = t.phil.range_violation(rr, rl, include_one=True)
    out.append(_check("phi-left-range", wl is None, wl or ""))
    wr = t.phir.range_violation(rl, rr, include_one=True)
    out.append(_check("phi-right-range", wr is None, wr or ""))
    both = rl.union(rr)
    fixed = t.phil.fixed_point_in(both) or t.phir.fixed_point_in(both)
    out.append(_check("phi-no-fixed-point", fixed is None,
                      f"phi fixes {fixed}" if fixed else ""))
    out.append(_check("mu-uncountable", t.mu.is_uncountable,
                      f"mu={t.mu} is countable"))
    return tuple(out)


def check_side_conditions(t: OrderTerm):
    """Per-condition verdicts for a lexicographic construction term."""
    if isinstance(t, LexSchedule):
        return _schedule_conditions(t)
    if isinstance(t, LexRefined):
        return _refined_conditions(t)
    raise DomainError("side conditions apply to lexsched/lexref terms only")


# ---------------------------------------------------------------------------
# Completeness predicates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Completeness:
    symmetric: bool
    strong: bool
    extreme: bool
    spherical_balls: bool


def nonprincipal_cuts_all_asymmetric(spec: CutSpectrum) -> bool:
    """Second route for the order-ball criterion: inspect components instead
    of the principal tags.  A symmetric pair without a `1` component is a
    nonprincipal symmetric cut."""
    for part in spec.parts:
        if isinstance(part, ExplicitPairs):
            if any(p.is_symmetric and not (p.left.is_one or p.right.is_one)
                   for p in part.pairs):
                return False
        elif part.has_infinite_symmetric():
            return False
    return True


def completeness_predicates(t: OrderTerm) -> Completeness:
    """The four completeness notions, decided from the cut spectrum."""
    spec = cut_spectrum(t)
    symmetric = not spec.has_symmetric_pair()
    strong = not spec.has_not_strongly_asymmetric()
    cf_t, ci_t = cf(t), ci(t)
    extreme = strong and cf_t.is_uncountable and ci_t.is_uncountable
    spherical = not spec.has_nonprincipal_symmetric()
    return Completeness(symmetric, strong, extreme, spherical)


# ---------------------------------------------------------------------------
# Extension recipe
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrderExtension:
    term: LexSchedule
    mu: Card
    k1: Card
    l1: Card
    base: Card
    note: str


def _next_regular_above(c: Card) -> Card:
    if not c.is_infinite:
        return ALEPH0
    return succ(c)


def _extension_base(t: OrderTerm) -> Card:
    """The cardinal the recipe's mu must exceed.  A declared cardinality
    bound when derivable; lexicographic products expose everything the
    corollary conditions inspect through Coin/Cofin, so their sup stands in."""
    if isinstance(t, (LexSchedule, LexRefined)):
        coin, cofin = coin_cofin(t)
        return card_max(coin.sup_card(), cofin.sup_card(), t.mu, t.k0, t.l0)
    if isinstance(t, Rev):
        return _extension_base(t.inner)
    if isinstance(t, Sum):
        return card_max(_extension_base(t.left), _extension_base(t.right))
    return card_bound(t)


def extend_order(t: OrderTerm, k0: Card = aleph(1), l0: Card = aleph(1),
                 bound: Optional[Card] = None) -> OrderExtension:
    """Instantiate the recipe: mu above max(k0, l0, card bound), kappa_1 = mu,
    lambda_1 = mu^+, double successors, limits restarting at the nu=1 values.
    The result embeds the input and, for uncountable k0 and l0, is extremely
    symmetrically complete."""
    require_infinite_regular(k0, "k0")
    require_infinite_regular(l0, "l0")
    base = bound if bound is not None else _extension_base(t)
    mu = _next_regular_above(card_max(k0, l0, base))
    sched = CardinalSchedule(k1=mu, l1=succ(mu), ksucc=RULE_DSUCC,
                             lsucc=RULE_DSUCC, klim=mu, llim=succ(mu))
    term = LexSchedule(mu=mu, k0=k0, l0=l0, schedule=sched, inner=t)
    note = ("each point a of the input embeds as a sequence with first "
            "coordinate a inside I_0 = l0* + I^c + k0")
    return OrderExtension(term, mu, sched.k1, sched.l1, base, note)
