"""One-shot reproduction report: every catalog claim checked in a fixed order.

The pipeline runs: catalog validations, Casimir verifications with their
ordering outcomes, the shifted-energy basis change, the boost/translation
contraction with table comparison, the Casimir contractions with automatic
powers, the conceptual limit rows, the low-velocity boost rows, the
full-group contraction, the observable descriptors, and the n-particle
labels.  Failures never raise; they become report entries.
"""

import json
import time
from collections import namedtuple

from lieq.algebra import LieAlgebra
from lieq.casimirs import casimir_catalog, ordering_study
from lieq.catalog import CATALOG_NAMES, catalog
from lieq.contraction import (
    STD_FULL_MAP,
    STD_FULL_RENAME,
    STD_PE_MAP,
    STD_PE_RENAME,
    conceptual_limit_check,
    contract,
    contract_casimir,
    rescale_algebra,
    tables_equal,
)
from lieq.limits import traditional_limit_report
from lieq.mhi import MHI_GROUPS, actual_valued_observables, n_particle_labels
from lieq.scalars import Scalar
from lieq.uea import UEAElement, is_casimir, rename_element

__all__ = ["Check", "Report", "report_paper"]

Check = namedtuple("Check", ["name", "status", "detail", "residue"])

_CASIMIR_ALGEBRAS = (
    "galilei_central",
    "poincare",
    "poincare_trivial_ext",
    "poincare_trivial_ext_hbar",
    "u1",
    "full_relativistic",
    "full_nonrelativistic",
)
_EXPECTED_POWERS = {"C1PE": 2, "C2PE": 4, "C4PE": 4}


class Report(namedtuple("Report", ["checks", "elapsed_seconds"])):
    """Ordered check results plus wall-clock duration."""

    def counts(self):
        out = {"pass": 0, "fail": 0, "warn": 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    @property
    def all_pass(self):
        return all(c.status != "fail" for c in self.checks)

    def to_dict(self):
        return {
            "checks": [
                {"name": c.name, "status": c.status, "detail": c.detail,
                 "residue": c.residue}
                for c in self.checks
            ],
            "counts": self.counts(),
            "elapsed_seconds": round(self.elapsed_seconds, 3),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self):
        lines = []
        for c in self.checks:
            line = "%s %s" % (c.status.upper().ljust(4), c.name)
            if c.detail:
                line += " -- " + c.detail
            if c.residue is not None:
                line += " [residue: %s]" % c.residue
            lines.append(line)
        counts = self.counts()
        lines.append(
            "%d checks: %d passed, %d failed, %d warnings (%.3f s)"
            % (len(self.checks), counts["pass"], counts["fail"], counts["warn"],
               self.elapsed_seconds)
        )
        return "\n".join(lines) + "\n"


class _Builder:
    def __init__(self):
        self.checks = []

    def add(self, name, ok, detail="", residue=None):
        self.checks.append(Check(name, "pass" if ok else "fail", detail, residue))

    def guard(self, name, fn):
        """Run fn appending its checks; exceptions become a single fail entry."""
        try:
            fn()
        except Exception as e:  # failures are report entries, never raises
            self.add(name, False, "raised %s: %s" % (type(e).__name__, e))


def _validation_detail(report):
    if report.ok:
        return "antisymmetry and Jacobi hold"
    parts = []
    if report.jacobi:
        (a, b, c), residues = report.jacobi[0]
        parts.append(
            "Jacobi fails on (%s, %s, %s) with residue on %s"
            % (a, b, c, ", ".join(sorted(residues)))
        )
    if report.issues:
        parts.append(report.issues[0])
    more = len(report.jacobi) + len(report.issues) - len(parts)
    if more > 0:
        parts.append("and %d more" % more)
    return "; ".join(parts)


def _ordering_detail(entry, steps):
    bits = []
    for step in steps:
        if step.ok:
            bits.append("%s passes" % step.variant)
        else:
            bits.append("%s fails at %s" % (step.variant, step.witness))
    return "catalog uses %s ordering; %s" % (entry.ordering, ", ".join(bits))


def _check_validations(b, fault):
    for name in CATALOG_NAMES:
        alg = catalog(name)
        if fault is not None and fault[0] == name:
            alg = alg.flip_sign(fault[1], fault[2], fault[3])
        report = alg.validate()
        detail = _validation_detail(report)
        if fault is not None and fault[0] == name:
            detail = "bracket [%s, %s] corrupted: %s" % (fault[1], fault[2], detail)
        b.add("validate %s" % name, report.ok, detail)


def _check_casimirs(b):
    for name in _CASIMIR_ALGEBRAS:
        study = ordering_study(name)
        for entry in casimir_catalog(name):
            verdict = is_casimir(entry.element)
            b.add(
                "casimir %s %s" % (name, entry.label),
                verdict.ok,
                _ordering_detail(entry, study[entry.label]),
                None if verdict.ok else str(verdict.residue),
            )


def _check_basis_change(b):
    ext = catalog("poincare_trivial_ext")
    n = ext.dim
    matrix = [
        [Scalar.one() if r == c else Scalar.zero() for c in range(n)]
        for r in range(n)
    ]
    matrix[0][n - 1] = -Scalar.one()  # shifted energy = H - M
    names = tuple("Hb" if g == "H" else g for g in ext.generators)
    shifted = ext.change_basis(matrix, names)
    b.add(
        "basis change to the shifted energy",
        shifted == catalog("poincare_trivial_ext_hbar"),
        "subtracting the central mass from the energy reproduces the catalog table",
    )


def _check_contraction(b):
    peb = catalog("poincare_trivial_ext_hbar")
    rescaled = rescale_algebra(peb, STD_PE_MAP)
    i_s = Scalar.i()
    eps2 = Scalar.symbol("eps", 2)
    b.add(
        "rescaled boost-boost bracket",
        rescaled.bracket("KPxp", "KPyp") == {"Jzp": -i_s * eps2},
        "[KPx', KPy'] = -i*eps^2*Jz'",
    )
    b.add(
        "rescaled boost-translation bracket",
        rescaled.bracket("KPxp", "Pxp") == {"Hbp": i_s * eps2, "Mp": i_s},
        "[KPx', Px'] = i*(eps^2*Hb' + M')",
    )
    con = contract(peb, STD_PE_MAP)
    ok, diff = tables_equal(con, catalog("galilei_central"), STD_PE_RENAME)
    detail = "all brackets agree under the standard renaming"
    if not ok:
        detail = "first mismatch at [%s, %s]" % diff[0].pair_a
    b.add("contraction lands on the central extension", ok, detail)


def _check_casimir_contraction(b):
    from lieq.casimirs import casimir_entries

    gc = catalog("galilei_central")
    con = contract(catalog("poincare_trivial_ext_hbar"), STD_PE_MAP)
    entries = casimir_entries("poincare_trivial_ext_hbar")
    results = {}
    for label in ("C1PE", "C2PE", "C4PE"):
        element, power = contract_casimir(entries[label], STD_PE_MAP, "auto")
        results[label] = element
        expected = _EXPECTED_POWERS[label]
        verdict = is_casimir(element)
        b.add(
            "contract %s with automatic power" % label,
            power == expected and verdict.ok,
            "power %d (expected %d); the limit %s a Casimir of the contracted algebra"
            % (power, expected, "is" if verdict.ok else "is not"),
        )
    b.add(
        "contracted C1 is the central mass",
        results["C1PE"] == UEAElement.gen(con, "Mp"),
        "limit element is M'",
    )
    b.add(
        "contracted C2 is the squared central mass",
        results["C2PE"] == UEAElement.gen(con, "Mp") ** 2,
        "limit element is M'^2",
    )
    b.add(
        "contracted C4 matches the catalog quartic",
        rename_element(results["C4PE"], gc, STD_PE_RENAME)
        == casimir_entries("galilei_central")["C4G"],
        "limit element equals C4G under the standard renaming",
    )


def _check_conceptual(b):
    for row in conceptual_limit_check():
        b.add("conceptual: %s" % row.name, row.ok, row.detail)


def _check_traditional(b):
    for row in traditional_limit_report():
        b.add(
            "boost limit: %s" % row.name,
            row.ok,
            "exact" if row.ok else "nonzero residue",
            None if row.ok else str(row.residue),
        )


def _check_full_groups(b):
    con = contract(catalog("full_relativistic"), STD_FULL_MAP)
    ok, diff = tables_equal(con, catalog("full_nonrelativistic"), STD_FULL_RENAME)
    detail = "charge sector rides along with exponent 0"
    if not ok:
        detail = "first mismatch at [%s, %s]" % diff[0].pair_a
    b.add("full-group contraction", ok, detail)


def _check_mhi(b):
    for group in MHI_GROUPS:
        descriptor = actual_valued_observables(group)
        ok = all(is_casimir(row.element).ok for row in descriptor.rows)
        b.add(
            "observables %s" % group,
            ok,
            "keys: %s" % ", ".join(descriptor.observables()),
        )
    b.add(
        "nonrelativistic observable set",
        actual_valued_observables("full_nonrelativistic").observables()
        == ("M", "W", "S2", "Q"),
        "mass, internal energy, spin, charge",
    )
    b.add(
        "relativistic observable set",
        actual_valued_observables("full_relativistic").observables()
        == ("M", "S2", "Q"),
        "mass, spin, charge",
    )


def _check_nparticle(b):
    labels = {n: n_particle_labels(n) for n in (1, 2, 3)}
    for n, lab in labels.items():
        ok = (
            lab.particle_number == n
            and lab.mass.label == Scalar.from_int(n) * Scalar.symbol("m0")
        )
        b.add(
            "n-particle labels n=%d" % n,
            ok,
            "mass %s, particle number %d" % (lab.mass.label, lab.particle_number),
        )
    b.add(
        "particle-number additivity",
        labels[1].particle_number + labels[2].particle_number
        == labels[3].particle_number
        and labels[1].mass.label + labels[2].mass.label == labels[3].mass.label,
        "labels of 1 and 2 particles sum to the 3-particle labels",
    )


def report_paper(fault=None):
    """Run the full pipeline; fault=(algebra, a, b, d) negates one constant.

    The fault hook flips the sign of one structure constant before the
    validation step only; it exists for exercising the failure paths.
    """
    start = time.monotonic()
    b = _Builder()
    b.guard("catalog validations", lambda: _check_validations(b, fault))
    b.guard("casimir verifications", lambda: _check_casimirs(b))
    b.guard("basis change", lambda: _check_basis_change(b))
    b.guard("contraction", lambda: _check_contraction(b))
    b.guard("casimir contraction", lambda: _check_casimir_contraction(b))
    b.guard("conceptual limit", lambda: _check_conceptual(b))
    b.guard("traditional limit", lambda: _check_traditional(b))
    b.guard("full-group contraction", lambda: _check_full_groups(b))
    b.guard("observable descriptors", lambda: _check_mhi(b))
    b.guard("n-particle labels", lambda: _check_nparticle(b))
    return Report(tuple(b.checks), time.monotonic() - start)
