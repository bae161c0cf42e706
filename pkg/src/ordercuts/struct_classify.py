"""Descriptors and classifiers for ordered abelian groups and fields.

A group is described by its value set (an order term), the shape of its
archimedean components, and structural flags.  Classification runs along two
routes that must agree: the global characterization (spherically complete +
strongly symmetrically complete value set + real components) and the
cut-by-cut route (principal cuts, then both kinds of nonprincipal cuts).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from .cardinals import ALEPH0, Card, ONE, aleph, card_max
from .errors import DescriptorError, DomainError, NotDerivableError
from .order_terms import (
    EMPTY,
    Empty,
    FiniteChain,
    OrderExtension,
    OrderTerm,
    Rev,
    Sum,
    WellOrder,
    cf,
    chain,
    ci,
    cut_spectrum,
    extend_order,
    sum_of,
)


class ComponentKind(Enum):
    REALS = "reals"
    INTEGERS = "ints"
    DENSE = "dense"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ComponentAssignment:
    """Archimedean component kinds over the value set: one uniform kind, with
    an optional different kind at the largest value-set element."""

    base: ComponentKind
    top: Optional[ComponentKind] = None

    def effective_top(self, value_set_has_max: bool) -> Optional[ComponentKind]:
        if not value_set_has_max:
            return None
        return self.top if self.top is not None else self.base

    def __str__(self) -> str:
        if self.top is None:
            return str(self.base)
        return f"{self.base}+{self.top}_at_top"


UNIFORM_REALS = ComponentAssignment(ComponentKind.REALS)


@dataclass(frozen=True)
class GroupDescriptor:
    value_set: OrderTerm
    components: ComponentAssignment = UNIFORM_REALS
    spherical: bool = False   # spherically complete w.r.t. the natural valuation
    discrete: bool = False
    divisible: bool = False

    def __post_init__(self):
        if self.nontrivial:
            has_max = cf(self.value_set).is_one
            if self.components.top is not None and not has_max:
                raise DescriptorError(
                    "a top-special component needs a value set with a largest element")
            top = self.components.effective_top(has_max)
            if self.discrete and top != ComponentKind.INTEGERS:
                raise DescriptorError(
                    "a discretely ordered group has integer component at the top value")
            if not self.discrete and top == ComponentKind.INTEGERS:
                raise DescriptorError(
                    "integer component at the top value forces a discrete order")
            if self.divisible and (self.components.base == ComponentKind.INTEGERS
                                   or top == ComponentKind.INTEGERS):
                raise DescriptorError("integer components are not divisible")
        elif self.discrete or self.divisible or self.spherical:
            raise DescriptorError("the trivial group carries no structure flags")

    @property
    def nontrivial(self) -> bool:
        return not isinstance(self.value_set, Empty)

    @staticmethod
    def trivial() -> "GroupDescriptor":
        return GroupDescriptor(EMPTY)

    def __str__(self) -> str:
        flags = (f"spherical={'true' if self.spherical else 'false'}; "
                 f"discrete={'true' if self.discrete else 'false'}; "
                 f"divisible={'true' if self.divisible else 'false'}")
        return f"group(vset={self.value_set}; comp={self.components}; {flags})"


class Residue(Enum):
    REALS = "reals"
    PROPER = "proper"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class FieldDescriptor:
    """An ordered field through its natural valuation: the value group with
    its own structure, the residue field, and field-level flags.  The
    additive group is determined: dense, divisible, components isomorphic to
    the residue field."""

    value_group: GroupDescriptor
    residue: Residue = Residue.PROPER
    real_closed: bool = False
    spherical: bool = False

    def __post_init__(self):
        if self.real_closed and self.value_group.nontrivial \
                and not self.value_group.divisible:
            raise DescriptorError("a real closed field has divisible value group")

    def __str__(self) -> str:
        return (f"field(group={self.value_group}; residue={self.residue}; "
                f"realclosed={'true' if self.real_closed else 'false'}; "
                f"spherical={'true' if self.spherical else 'false'})")


@dataclass(frozen=True)
class Verdict:
    symmetric: bool
    strong: bool
    extreme: bool
    symmetric_d: Optional[bool] = None
    extreme_d: Optional[bool] = None
    facts: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.extreme and not self.strong:
            raise DescriptorError("extreme implies strong")
        if self.strong and not self.symmetric:
            raise DescriptorError("strong implies symmetric")
        if self.extreme_d and not self.symmetric_d:
            raise DescriptorError("extreme-d implies symmetric-d")

    @property
    def spherical_balls(self) -> Optional[bool]:
        """Complete w.r.t. the order balls: for discrete groups this is the
        d-verdict, for dense ones it coincides with symmetric completeness."""
        if self.symmetric_d is not None:
            return self.symmetric_d
        return self.symmetric


def _tri(v: Optional[bool]) -> str:
    return "n/a" if v is None else ("true" if v else "false")


# ---------------------------------------------------------------------------
# The cofinality calculus
# ---------------------------------------------------------------------------

def _require_nontrivial(g: GroupDescriptor) -> None:
    if not g.nontrivial:
        raise DomainError("the trivial group is out of scope here")


def cf_group(g: GroupDescriptor) -> Card:
    """Cofinality of the group: max(aleph0, ci of the value set)."""
    _require_nontrivial(g)
    return card_max(ALEPH0, ci(g.value_set))


def ci_positive_cone(g: GroupDescriptor) -> Card:
    """Coinitiality of the positive cone: 1 for discrete groups, otherwise
    max(aleph0, cf of the value set)."""
    _require_nontrivial(g)
    if g.discrete:
        return ONE
    return card_max(ALEPH0, cf(g.value_set))


def cf_m_gamma(upper_coinitiality: Card) -> Card:
    """Cofinality of the ideal M_gamma from the coinitiality of the value set
    above gamma; gamma must not be the largest value."""
    if upper_coinitiality.is_zero:
        raise DomainError("gamma is the largest value: M_gamma is trivial")
    return card_max(ALEPH0, upper_coinitiality)


def principal_cuts_ok(g: GroupDescriptor) -> Tuple[bool, bool]:
    """(every principal cut asymmetric, every principal cut strongly so)."""
    _require_nontrivial(g)
    dense = not g.discrete
    return dense, dense and cf(g.value_set).is_uncountable


def _value_set_has_max(g: GroupDescriptor) -> bool:
    return cf(g.value_set).is_one


def _order_size_one(t: OrderTerm) -> bool:
    return cf(t).is_one and ci(t).is_one and cut_spectrum(t).is_empty


def type1_cuts_ok(g: GroupDescriptor) -> bool:
    """Nonprincipal cuts refining a smallest ultrametric ball are strongly
    asymmetric iff the components are real lines (integers allowed at the
    top) and every (1, l) cut of the value set has l uncountable."""
    _require_nontrivial(g)
    has_max = _value_set_has_max(g)
    top = g.components.effective_top(has_max)
    if _order_size_one(g.value_set):
        comp_ok = top in (ComponentKind.REALS, ComponentKind.INTEGERS)
    else:
        comp_ok = g.components.base == ComponentKind.REALS and \
            top in (None, ComponentKind.REALS, ComponentKind.INTEGERS)
    spec = cut_spectrum(g.value_set)
    return comp_ok and spec.all_one_left_uncountable()


def type2_cuts_ok(g: GroupDescriptor) -> Optional[bool]:
    """Nonprincipal cuts along a strictly shrinking ball chain; only decided
    for groups spherically complete w.r.t. the natural valuation (None
    otherwise)."""
    _require_nontrivial(g)
    if not g.spherical:
        return None
    return cut_spectrum(g.value_set).all_infinite_left_strongly_asymmetric()


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

def _value_set_completeness(g: GroupDescriptor):
    spec = cut_spectrum(g.value_set)
    symmetric = not spec.has_symmetric_pair()
    strong = not spec.has_not_strongly_asymmetric()
    extreme = strong and cf(g.value_set).is_uncountable \
        and ci(g.value_set).is_uncountable
    return symmetric, strong, extreme


def classify_group_cutwise(g: GroupDescriptor) -> bool:
    """Symmetric completeness decided cut kind by cut kind: principal cuts,
    then both nonprincipal kinds (the shrinking-ball kind needs spherical
    completeness, without which the group cannot be symmetrically complete)."""
    prin_asym, _ = principal_cuts_ok(g)
    t2 = type2_cuts_ok(g)
    if t2 is None:
        return False
    return prin_asym and type1_cuts_ok(g) and t2


def _quotient_mod_z(g: GroupDescriptor) -> Optional[GroupDescriptor]:
    """The descriptor of G modulo its convex integer copy: drop the largest
    value-set element, components otherwise unchanged.  None when trivial."""
    vq = _minus_largest(g.value_set)
    if isinstance(vq, Empty):
        return None
    comps = ComponentAssignment(g.components.base)
    has_max = cf(vq).is_one
    top = comps.effective_top(has_max)
    discrete = top == ComponentKind.INTEGERS
    divisible = g.components.base != ComponentKind.INTEGERS and not discrete
    return GroupDescriptor(vq, comps, spherical=g.spherical,
                           discrete=discrete, divisible=divisible)


def _minus_largest(t: OrderTerm) -> OrderTerm:
    if isinstance(t, FiniteChain):
        return chain(t.size - 1)
    if isinstance(t, Sum):
        right = _minus_largest(t.right)
        return sum_of(t.left, right)
    if isinstance(t, Rev):
        return Rev(_minus_least(t.inner)) if not isinstance(
            _minus_least(t.inner), Empty) else EMPTY
    raise NotDerivableError(f"cannot remove the largest element of {t}")


def _minus_least(t: OrderTerm) -> OrderTerm:
    if isinstance(t, FiniteChain):
        return chain(t.size - 1)
    if isinstance(t, WellOrder):
        return t
    if isinstance(t, Sum):
        left = _minus_least(t.left)
        return sum_of(left, t.right)
    if isinstance(t, Rev):
        inner = _minus_largest(t.inner)
        return Rev(inner) if not isinstance(inner, Empty) else EMPTY
    raise NotDerivableError(f"cannot remove the least element of {t}")


def _classify_core(g: GroupDescriptor) -> Tuple[bool, bool, bool]:
    _, vg_strong, vg_extreme = _value_set_completeness(g)
    has_max = _value_set_has_max(g)
    top = g.components.effective_top(has_max)
    all_reals = g.components.base == ComponentKind.REALS and \
        top in (None, ComponentKind.REALS)
    if _order_size_one(g.value_set):
        all_reals = top == ComponentKind.REALS

    symmetric = g.spherical and vg_strong and all_reals
    strong = symmetric and cf(g.value_set).is_uncountable
    extreme = symmetric and vg_extreme

    if g.spherical:
        lemma_symmetric = classify_group_cutwise(g)
        if lemma_symmetric != symmetric:
            raise DescriptorError(
                f"classifier routes disagree on {g}: theorem={symmetric} "
                f"lemmas={lemma_symmetric}")
    return symmetric, strong, extreme


def classify_group(g: GroupDescriptor) -> Verdict:
    """Symmetric iff spherically complete with strongly symmetrically
    complete value set and all real components; strong adds an uncountable
    value-set cofinality, extreme an extremely complete value set.  For
    discrete groups the d-verdicts come from the quotient mod the integer
    copy."""
    _require_nontrivial(g)
    symmetric, strong, extreme = _classify_core(g)

    symmetric_d = extreme_d = None
    facts = []
    if g.discrete:
        quotient = _quotient_mod_z(g)
        if quotient is None:
            symmetric_d, extreme_d = True, False
        else:
            _, symmetric_d, extreme_d = _classify_core(quotient)
        if symmetric_d:
            facts.append("Z-group")
            facts.append("isomorphic to a Hahn product")
    if symmetric:
        facts.append("divisible")
        facts.append("isomorphic to a Hahn product")
    return Verdict(symmetric, strong, extreme, symmetric_d, extreme_d,
                   tuple(dict.fromkeys(facts)))


def classify_discrete(g: GroupDescriptor) -> Verdict:
    """The discrete-group verdict; requires a discretely ordered input."""
    _require_nontrivial(g)
    if not g.discrete:
        raise DomainError("classify_discrete expects a discretely ordered group")
    return classify_group(g)


def classify_field(k: FieldDescriptor) -> Verdict:
    """Symmetric iff spherically complete with real residue field and
    strongly symmetrically complete value group; strongly and extremely
    complete coincide and need an extremely complete value group."""
    vg = k.value_group
    if not vg.nontrivial:
        vg_strong = vg_extreme = False
    else:
        vgv = classify_group(vg)
        vg_strong, vg_extreme = vgv.strong, vgv.extreme
    symmetric = k.spherical and k.residue == Residue.REALS and vg_strong
    strong = extreme = k.spherical and k.residue == Residue.REALS and vg_extreme
    facts = []
    if symmetric:
        facts = ["real closed", "isomorphic to a power series field",
                 "residue field R", "divisible value group"]
    return Verdict(symmetric, strong, extreme, None, None, tuple(facts))


# ---------------------------------------------------------------------------
# Extension constructions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupExtension:
    descriptor: GroupDescriptor
    recipe: OrderExtension


@dataclass(frozen=True)
class FieldExtension:
    descriptor: FieldDescriptor
    recipe: OrderExtension


def extend_group(g: GroupDescriptor, k0: Card = aleph(1), l0: Card = aleph(1),
                 bound: Optional[Card] = None) -> GroupExtension:
    """Embed the group into the Hahn product over the extended value set with
    real components: the result is extremely symmetrically complete."""
    _require_nontrivial(g)
    ext = extend_order(g.value_set, k0, l0, bound)
    out = GroupDescriptor(ext.term, UNIFORM_REALS, spherical=True,
                          discrete=False, divisible=True)
    return GroupExtension(out, ext)


def _divisible_hull(g: GroupDescriptor) -> GroupDescriptor:
    """Descriptor-level divisible hull: same value set, integer components
    fill up to dense divisible ones."""
    base = g.components.base
    top = g.components.top
    if base == ComponentKind.INTEGERS:
        base = ComponentKind.DENSE
    if top == ComponentKind.INTEGERS:
        top = ComponentKind.DENSE
    return GroupDescriptor(g.value_set, ComponentAssignment(base, top),
                           spherical=g.spherical, discrete=False, divisible=True)


def extend_field(k: FieldDescriptor, k0: Card = aleph(1), l0: Card = aleph(1),
                 bound: Optional[Card] = None) -> FieldExtension:
    """Pass to the real closure, embed it into a power series field over the
    extended value group, with real coefficients: extremely symmetrically
    complete."""
    vg = k.value_group
    if vg.nontrivial:
        hull = _divisible_hull(vg)
        gext = extend_group(hull, k0, l0, bound)
    else:
        ext = extend_order(EMPTY, k0, l0, bound)
        gext = GroupExtension(GroupDescriptor(ext.term, UNIFORM_REALS,
                                              spherical=True, discrete=False,
                                              divisible=True), ext)
    out = FieldDescriptor(value_group=gext.descriptor, residue=Residue.REALS,
                          real_closed=True, spherical=True)
    return FieldExtension(out, gext.recipe)
