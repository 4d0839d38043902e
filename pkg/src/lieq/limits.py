"""Low-velocity boost limit realized over canonical position-momentum pairs.

The boosts act on a quantum particle through K_i = m0*c^2*X_i - c*t*P_i
together with the orbital rotations J_i = eps_ijk X_j P_k, all inside the
enveloping algebra of the three-dimensional canonical pairs with the
central element set to 1.  Scalars here are polynomial in m0, so the
energy identity is checked in cleared form: with 2*m0*H = 2*m0^2*c^2 + P.P
the claim [K_i, H] = i*P_i (at c = 1) becomes [K_i, 2*m0*H] = 2*i*m0*P_i.
"""

from collections import namedtuple

from lieq.catalog import AXES, catalog, eps3
from lieq.scalars import Scalar
from lieq.uea import UEAElement, commutator, scalar_substitute, substitute

__all__ = ["CheckRow", "boost_elements", "traditional_limit_report"]

CheckRow = namedtuple("CheckRow", ["name", "ok", "residue"])


def boost_elements():
    """(algebra, elements): boosts Kx..Kz, rotations Jx..Jz, cleared energy H2."""
    alg = catalog("heisenberg3")
    m0c2 = Scalar.symbol("m0") * Scalar.symbol("c", 2)
    ct = Scalar.symbol("c") * Scalar.symbol("t")
    elems = {}
    for a in AXES:
        elems["K" + a] = (
            m0c2 * UEAElement.gen(alg, "X" + a) - ct * UEAElement.gen(alg, "P" + a)
        )
    for i in AXES:
        j_i = UEAElement.zero(alg)
        for j in AXES:
            for k in AXES:
                sign = eps3(i, j, k)
                if sign:
                    j_i = j_i + Scalar.from_int(sign) * UEAElement.word(
                        alg, ("X" + j, "P" + k)
                    )
        elems["J" + i] = j_i
    psq = UEAElement.zero(alg)
    for a in AXES:
        psq = psq + UEAElement.word(alg, ("P" + a, "P" + a))
    elems["H2"] = (
        (Scalar.from_int(2) * Scalar.symbol("m0", 2) * Scalar.symbol("c", 2))
        * UEAElement.unit(alg)
        + psq
    )
    return alg, elems


def traditional_limit_report():
    """Verify the low-velocity boost brackets; one CheckRow per identity.

    All commutators are taken with the central element set to 1 and then
    specialized to c = 1; each row carries the exact residual element.
    """
    alg, elems = boost_elements()
    unit = UEAElement.unit(alg)
    i_s = Scalar.i()

    def finish(e):
        return scalar_substitute(substitute(e, {"Z": 1}), {"c": Scalar.one()})

    rows = []

    def check(name, lhs, rhs):
        residue = finish(lhs) - finish(rhs)
        rows.append(CheckRow(name, residue.is_zero(), residue))

    for n, i in enumerate(AXES):
        for j in AXES[n + 1:]:
            check("[K%s, K%s] = 0" % (i, j),
                  commutator(elems["K" + i], elems["K" + j]),
                  UEAElement.zero(alg))
    for i in AXES:
        for j in AXES:
            expected = UEAElement.zero(alg)
            label = "0"
            for k in AXES:
                sign = eps3(i, j, k)
                if sign:
                    expected = (i_s * Scalar.from_int(sign)) * elems["K" + k]
                    label = ("i*K%s" if sign > 0 else "-i*K%s") % k
            check("[J%s, K%s] = %s" % (i, j, label),
                  commutator(elems["J" + i], elems["K" + j]),
                  expected)
    for i in AXES:
        for j in AXES:
            diagonal = i == j
            expected = (i_s * Scalar.symbol("m0")) * unit if diagonal else UEAElement.zero(alg)
            check("[K%s, P%s] = %s" % (i, j, "i*m0" if diagonal else "0"),
                  commutator(elems["K" + i], UEAElement.gen(alg, "P" + j)),
                  expected)
    for i in AXES:
        expected = (Scalar.from_int(2) * i_s * Scalar.symbol("m0")) * UEAElement.gen(alg, "P" + i)
        check("[K%s, 2*m0*H] = 2*i*m0*P%s" % (i, i),
              commutator(elems["K" + i], elems["H2"]),
              expected)
    return tuple(rows)
