"""Generalized Inonu-Wigner contraction via exact Laurent rescaling.

A rescaling map assigns an integer exponent k to every generator,
G_a' = eps**k_a * G_a.  Rescaling multiplies each structure constant by
eps**(k_a + k_b - k_d); the contracted algebra is the eps -> 0 limit of
the rescaled table.  Casimir elements travel the same road: rewrite them
in the primed generators (picking up inverse powers of eps), multiply by
a compensating overall power, and take the limit term by term.
"""

import warnings
from collections import namedtuple

from lieq.algebra import LieAlgebra
from lieq.scalars import LAURENT_SYMBOL, Scalar
from lieq.uea import UEAElement, rename_element, scalar_substitute, substitute

__all__ = [
    "ContractionError",
    "DivergentContraction",
    "DivergentLimit",
    "ZeroLimitWarning",
    "TableDiff",
    "LimitRow",
    "AUTO_POWER_WINDOW",
    "STD_PE_MAP",
    "STD_PE_RENAME",
    "STD_FULL_MAP",
    "STD_FULL_RENAME",
    "rescale_algebra",
    "contract",
    "tables_equal",
    "rescale_element",
    "contract_casimir",
    "conceptual_limit_check",
]


class ContractionError(ValueError):
    """Bad rescaling map, renaming, or power choice."""


class DivergentContraction(ContractionError):
    """The rescaled table has poles in eps; no finite limit exists.

    offenders: ((name_a, name_b, name_d), pole_order) per divergent constant.
    """

    def __init__(self, offenders):
        self.offenders = tuple(offenders)
        lines = ", ".join(
            "[%s, %s] -> %s (order %d)" % (a, b, d, order)
            for (a, b, d), order in self.offenders
        )
        super().__init__("contraction diverges: " + lines)


class DivergentLimit(ContractionError):
    """eps**power was too small a compensation; a pole of pole_order remains."""

    def __init__(self, pole_order):
        self.pole_order = pole_order
        super().__init__(
            "limit diverges: residual pole of order %d in %r"
            % (pole_order, LAURENT_SYMBOL)
        )


class ZeroLimitWarning(UserWarning):
    """The compensating power was larger than needed; the limit is zero."""


TableDiff = namedtuple("TableDiff", ["pair_a", "pair_b", "left", "right"])
LimitRow = namedtuple("LimitRow", ["name", "ok", "detail"])

AUTO_POWER_WINDOW = 10

_PRIME = "p"

# Standard boost/translation rescaling of the trivially extended algebra
# (shifted-energy basis) and the renaming that lands the limit on the
# centrally extended nonrelativistic catalog entry.
STD_PE_MAP = {
    "Hb": 0, "Jx": 0, "Jy": 0, "Jz": 0,
    "KPx": 1, "KPy": 1, "KPz": 1,
    "Px": 1, "Py": 1, "Pz": 1,
    "M": 2,
}
STD_PE_RENAME = {
    "Hbp": "H", "Jxp": "Jx", "Jyp": "Jy", "Jzp": "Jz",
    "KPxp": "KGx", "KPyp": "KGy", "KPzp": "KGz",
    "Pxp": "Px", "Pyp": "Py", "Pzp": "Pz",
    "Mp": "M",
}
STD_FULL_MAP = dict(STD_PE_MAP, Q=0)
STD_FULL_RENAME = dict(STD_PE_RENAME, Qp="Q")


# -- rescaling -----------------------------------------------------------------

def _check_map(algebra, exponents):
    names = set(algebra.generators)
    given = set(exponents)
    if given != names:
        missing = sorted(names - given)
        extra = sorted(given - names)
        raise ContractionError(
            "rescaling map must cover the generators exactly "
            "(missing %r, extra %r)" % (missing, extra)
        )
    for name, k in exponents.items():
        if not isinstance(k, int) or isinstance(k, bool):
            raise ContractionError("exponent for %r must be an integer, got %r" % (name, k))


def _primed(name):
    return name + _PRIME


def _symbols_with_eps(algebra):
    symbols = tuple(algebra.symbols)
    if LAURENT_SYMBOL not in symbols:
        symbols = symbols + (LAURENT_SYMBOL,)
    return symbols


def _assert_valid(algebra, what):
    report = algebra.validate()
    if not report.ok:
        raise ContractionError(
            "%s produced an inconsistent table (%d Jacobi failures, %d issues)"
            % (what, len(report.jacobi), len(report.issues))
        )


def rescale_algebra(algebra, exponents, name=None):
    """Rescaled algebra on primed generators; constants gain eps powers."""
    _check_map(algebra, exponents)
    brackets = {}
    gens = algebra.generators
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            combo = algebra.bracket(a, b)
            if not combo:
                continue
            entry = {}
            for d, coeff in combo.items():
                shift = exponents[a] + exponents[b] - exponents[d]
                entry[_primed(d)] = coeff.mul_power(LAURENT_SYMBOL, shift)
            brackets[(_primed(a), _primed(b))] = entry
    out = LieAlgebra(
        name or algebra.name + "_rescaled",
        tuple(_primed(g) for g in gens),
        brackets,
        _symbols_with_eps(algebra),
    )
    _assert_valid(out, "rescaling")
    return out


def contract(algebra, exponents, name=None):
    """eps -> 0 limit of the rescaled algebra (DivergentContraction on poles)."""
    _check_map(algebra, exponents)
    brackets = {}
    offenders = []
    gens = algebra.generators
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            combo = algebra.bracket(a, b)
            entry = {}
            for d, coeff in combo.items():
                shift = exponents[a] + exponents[b] - exponents[d]
                scaled = coeff.mul_power(LAURENT_SYMBOL, shift)
                low = scaled.min_degree(LAURENT_SYMBOL)
                if low < 0:
                    offenders.append(((a, b, d), -low))
                    continue
                kept = scaled.limit0(LAURENT_SYMBOL)
                if not kept.is_zero():
                    entry[_primed(d)] = kept
            if entry:
                brackets[(_primed(a), _primed(b))] = entry
    if offenders:
        raise DivergentContraction(offenders)
    out = LieAlgebra(
        name or algebra.name + "_contracted",
        tuple(_primed(g) for g in gens),
        brackets,
        _symbols_with_eps(algebra),
    )
    _assert_valid(out, "contraction")
    return out


# -- table comparison ----------------------------------------------------------

def tables_equal(algebra_a, algebra_b, renaming):
    """(equal, diff) after renaming a's generators into b's.

    diff rows carry the offending pair in both name systems together with
    the renamed a-side combination and the b-side combination.
    """
    if algebra_a.dim != algebra_b.dim:
        raise ContractionError(
            "cannot compare tables of dimension %d and %d"
            % (algebra_a.dim, algebra_b.dim)
        )
    if set(renaming) != set(algebra_a.generators):
        raise ContractionError("renaming must be total on the first algebra")
    targets = list(renaming.values())
    if len(set(targets)) != len(targets) or set(targets) != set(algebra_b.generators):
        raise ContractionError("renaming must be a bijection onto the second algebra")
    diff = []
    gens = algebra_a.generators
    for i, x in enumerate(gens):
        for y in gens[i + 1:]:
            left = {renaming[d]: c for d, c in algebra_a.bracket(x, y).items()}
            right = algebra_b.bracket(renaming[x], renaming[y])
            if left != right:
                diff.append(TableDiff((x, y), (renaming[x], renaming[y]), left, right))
    return (not diff, tuple(diff))


# -- elements ------------------------------------------------------------------

def rescale_element(element, exponents, target=None):
    """Rewrite an enveloping-algebra element in the primed generators.

    Inverting G_a' = eps**k_a G_a gives G_a = eps**(-k_a) G_a', so each
    word picks up eps**(-sum of its letters' exponents).
    """
    algebra = element.algebra
    _check_map(algebra, exponents)
    if target is None:
        target = rescale_algebra(algebra, exponents)
    terms = {}
    for word, coeff in element.terms():
        shift = -sum(exponents[n] for n in word)
        terms[tuple(_primed(n) for n in word)] = coeff.mul_power(LAURENT_SYMBOL, shift)
    return UEAElement.from_terms(target, terms)


def contract_casimir(element, exponents, power="auto"):
    """(limit of eps**power * rescaled element, power used).

    power="auto" picks the smallest integer giving a finite nonzero limit,
    searched inside [-AUTO_POWER_WINDOW, AUTO_POWER_WINDOW].  Too small a
    power raises DivergentLimit; too large a one returns zero under a
    ZeroLimitWarning.
    """
    contracted = contract(element.algebra, exponents)
    rescaled = rescale_element(element, exponents)
    if rescaled.is_zero():
        return UEAElement.zero(contracted), 0 if power == "auto" else power
    low = min(coeff.min_degree(LAURENT_SYMBOL) for _, coeff in rescaled.terms())
    if power == "auto":
        used = -low
        if abs(used) > AUTO_POWER_WINDOW:
            raise ContractionError(
                "no admissible power within [-%d, %d] (needs %d)"
                % (AUTO_POWER_WINDOW, AUTO_POWER_WINDOW, used)
            )
    else:
        if not isinstance(power, int) or isinstance(power, bool):
            raise ContractionError("power must be an integer or 'auto', got %r" % (power,))
        used = power
        if low + used < 0:
            raise DivergentLimit(-(low + used))
    terms = {}
    for word, coeff in rescaled.terms():
        kept = coeff.mul_power(LAURENT_SYMBOL, used).limit0(LAURENT_SYMBOL)
        if not kept.is_zero():
            terms[word] = kept
    if not terms:
        warnings.warn(
            "eps**%d suppresses every term; the limit is zero" % used,
            ZeroLimitWarning,
            stacklevel=2,
        )
        return UEAElement.zero(contracted), used
    return UEAElement.from_terms(contracted, terms), used


# -- conceptual check ----------------------------------------------------------

def conceptual_limit_check():
    """Contract the extended-algebra Casimirs and compare against the catalog.

    Returns LimitRow entries: the operator identities for the contracted
    C1/C2/C4, plus rest-frame label comparisons (P -> 0, energy -> w,
    central mass -> m, then m = w = m0).
    """
    from lieq.casimirs import casimir_entries
    from lieq.catalog import catalog

    source = catalog("poincare_trivial_ext_hbar")
    target = catalog("galilei_central")
    pe = casimir_entries("poincare_trivial_ext_hbar")
    gal = casimir_entries("galilei_central")
    contracted = contract(source, STD_PE_MAP)

    c1, p1 = contract_casimir(pe["C1PE"], STD_PE_MAP, "auto")
    c2, p2 = contract_casimir(pe["C2PE"], STD_PE_MAP, "auto")
    c4, p4 = contract_casimir(pe["C4PE"], STD_PE_MAP, "auto")

    rows = []
    mass = UEAElement.gen(contracted, "Mp")
    rows.append(LimitRow(
        "contracted C1 equals the central mass",
        p1 == 2 and c1 == mass,
        "power %d, result %s" % (p1, c1),
    ))
    rows.append(LimitRow(
        "contracted C2 equals contracted C1 squared",
        p2 == 4 and c2 == c1 * c1,
        "power %d, result %s" % (p2, c2),
    ))
    c4_renamed = rename_element(c4, target, STD_PE_RENAME)
    rows.append(LimitRow(
        "contracted C4 equals the Galilei quartic under renaming",
        p4 == 4 and c4_renamed == gal["C4G"],
        "power %d, %d normal-ordered terms" % (p4, c4.term_count()),
    ))

    m = Scalar.symbol("m")
    w = Scalar.symbol("w")
    m0 = Scalar.symbol("m0")
    at_m0 = {"m": m0, "w": m0}
    rest = {"Px": Scalar.zero(), "Py": Scalar.zero(), "Pz": Scalar.zero(),
            "H": w, "M": m}

    def rest_frame(e):
        return scalar_substitute(substitute(e, rest, formal=True), at_m0)

    hat2 = rest_frame(rename_element(c2, target, STD_PE_RENAME))
    cat2 = rest_frame(gal["C2G"])
    rows.append(LimitRow(
        "rest-frame labels of C2 agree at m = w = m0",
        hat2 == cat2,
        "contracted gives %s, catalog gives %s" % (hat2, cat2),
    ))
    hat4 = rest_frame(c4_renamed)
    cat4 = rest_frame(gal["C4G"])
    rows.append(LimitRow(
        "rest-frame labels of C4 agree at m = w = m0",
        hat4 == cat4,
        "both reduce to the squared-rotation form" if hat4 == cat4
        else "contracted gives %s, catalog gives %s" % (hat4, cat4),
    ))
    return tuple(rows)
