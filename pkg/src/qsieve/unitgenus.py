"""Classification of K(sqrt(eps)) for a totally positive fundamental unit:
the partition of odd ramified primes by eps mod p, the integer d0, and which
of eps*d0 / eps*2*d0 is a square in O_K.  Also regenerates the finite
mod-16 computation behind the published eps-vs-d0 tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .quadfield import FundamentalUnit, QuadField, fundamental_unit, residue_mod_ramified_odd
from .residue import (
    NORM_FORM_DOUBLE,
    Mod2Ring,
    class_ring,
    field_mod2_ring,
    norm_classes_with_constraint,
    prime_above_two_lattice,
    valuation_at_prime,
)
from .tables_ref import SUPPORTED_CLASSES

GENUS_D0 = "d0"
GENUS_TWO_D0 = "two_d0"

# delta_{-2}: the quadratic character of conductor 8 with kernel {1, 3}
DELTA_MINUS_TWO = {1: 1, 3: 1, 5: -1, 7: -1}


class NormMinusOneError(ValueError):
    """The fundamental unit has norm -1; the classification assumes norm +1."""


@dataclass(frozen=True)
class UnitGenusReport:
    d: int
    eps: object  # QuadInt, the totally positive fundamental unit used
    P_minus: frozenset
    P_plus: frozenset
    d0: int
    genus_case: str          # from the exact square-class oracle
    criterion_case: str      # from the ramification/valuation criterion
    eps_mod_p2cubed: bool | None  # eps = -1 mod p2^3, only when 8 | disc


def classify_unit(field: QuadField, eps: FundamentalUnit) -> UnitGenusReport:
    """Split the odd ramified primes by eps mod p, form d0, and decide
    whether eps*d0 or eps*2*d0 is the square (exact integer arithmetic).
    The ramification criterion is computed independently as a cross-check.
    """
    if abs(eps.value.norm()) != 1:
        raise ValueError("not a unit")
    if eps.norm != 1:
        raise NormMinusOneError("norm -1 unit")
    value = eps.value if eps.value.is_totally_positive() else -eps.value

    p_minus, p_plus = set(), set()
    for p in sorted(field.ramified_odd_primes):
        r = residue_mod_ramified_odd(value, p)
        if r == p - 1:
            p_minus.add(p)
        elif r == 1:
            p_plus.add(p)
        else:
            raise AssertionError(f"eps mod {p} is {r}, not +-1 (norm +1 forces +-1)")
    d0 = prod(sorted(p_minus)) if p_minus else 1

    sq_d0 = (value * d0).exact_sqrt() is not None
    sq_2d0 = (value * (2 * d0)).exact_sqrt() is not None

    two_ramified = field.d % 4 != 1
    if two_ramified:
        if sq_d0 == sq_2d0:
            raise AssertionError(
                f"d={field.d}: expected exactly one of eps*d0, eps*2d0 square "
                f"(got {sq_d0}, {sq_2d0})")
        genus = GENUS_D0 if sq_d0 else GENUS_TWO_D0
    else:
        if not sq_d0 or sq_2d0:
            raise AssertionError(
                f"d={field.d}: 2 unramified, expected eps*d0 square and "
                f"eps*2d0 not (got {sq_d0}, {sq_2d0})")
        genus = GENUS_D0

    criterion, p2cubed = _criterion_case(field, value)
    if not (d0 > 1 or genus == GENUS_TWO_D0):
        raise AssertionError("K(sqrt(eps))/K collapsed to a trivial extension")
    return UnitGenusReport(d=field.d, eps=value,
                           P_minus=frozenset(p_minus), P_plus=frozenset(p_plus),
                           d0=d0, genus_case=genus, criterion_case=criterion,
                           eps_mod_p2cubed=p2cubed)


def _criterion_case(field: QuadField, value) -> tuple[str, bool | None]:
    """Genus case from ramification of K(sqrt(eps)) at the prime above 2,
    without any square extraction."""
    d = field.d
    if d % 4 == 1:
        return GENUS_D0, None
    if d % 2 == 0:
        # 8 | disc: the 2d0 case happens exactly when eps = -1 mod p2^3
        lat = prime_above_two_lattice(field)
        v_plus = valuation_at_prime(field, lat, value + 1)
        v_minus = valuation_at_prime(field, lat, value - 1)
        if v_plus >= 3:
            if v_minus != 2:
                raise AssertionError(f"d={d}: v(eps+1)={v_plus} but v(eps-1)={v_minus}")
            return GENUS_TWO_D0, True
        if v_minus >= 3 and v_plus != 2:
            raise AssertionError(f"d={d}: v(eps-1)={v_minus} but v(eps+1)={v_plus}")
        return GENUS_D0, False
    # d = 3 mod 4: K(sqrt(eps))/K is unramified above 2 iff eps is a square
    # mod 4, and K(sqrt(d0)) is the unramified option (d0 odd)
    ring = field_mod2_ring(field, 2)
    unit_squares = {ring.mul(u, u) for u in ring.units()}
    eps_el = ring.embed(value)
    return (GENUS_D0 if eps_el in unit_squares else GENUS_TWO_D0), None


def verify_theorem12_congruences(field: QuadField, report: UnitGenusReport) -> bool:
    """True iff eps = -1 mod p for every odd p | d0 in the report and
    eps = +1 mod p for the remaining odd ramified primes."""
    value = report.eps
    for p in sorted(field.ramified_odd_primes):
        r = residue_mod_ramified_odd(value, p)
        if p in report.P_minus and r != p - 1:
            return False
        if p in report.P_plus and r != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# regeneration of the published tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    dtilde_class: int
    eps_label: str
    d0_residues: tuple


def _d0_solvability(ring: Mod2Ring, eps_el) -> set:
    """{d0 mod 8 : exists alpha with v_2(alpha) = 1 and
    eps * alpha^2 = 2*d0 (mod 2^k)} by full enumeration."""
    out = set()
    M = ring.M
    for x in range(M):
        for y in range(M):
            al = (x, y)
            if not ring.val2_is_one(al):
                continue
            z = ring.mul(eps_el, ring.mul(al, al))
            if z[1] == 0 and z[0] % 2 == 0 and (z[0] // 2) % 2 == 1:
                out.add((z[0] // 2) % 8)
    return out


def _d0_row_set(ring: Mod2Ring, eps_el, norm_allowed) -> tuple:
    """Solvability set, intersected with the norm constraint exactly when the
    raw set is not constant under delta_{-2} (the published pruning rule)."""
    raw = _d0_solvability(ring, eps_el)
    if len({DELTA_MINUS_TWO[v] for v in raw}) > 1:
        raw &= norm_allowed
    return tuple(sorted(raw))


def regenerate_table(d_tilde_class: int) -> list[TableRow]:
    """Recompute the eps-class vs d0 rows for one residue class of
    dtilde = disc/4 mod 16.  Labels follow the published generator
    conventions: exponent triples over {sqrt(dtilde), 1+2*sqrt(dtilde), g3}
    with g3 = -1 for dtilde = 3 mod 8 and g3 = 5 for dtilde = 7 mod 8; for
    even dtilde, explicit words in {-1, 5, 1+sqrt(dtilde)} mod 8."""
    c = d_tilde_class % 16
    if c not in SUPPORTED_CLASSES:
        raise ValueError(f"dtilde class {d_tilde_class} mod 16 is not covered")
    ring = class_ring(c, 4)
    norm_allowed = norm_classes_with_constraint(ring, NORM_FORM_DOUBLE)
    if c == 14:
        return [TableRow(14, "norm-constraint-only", tuple(sorted(norm_allowed)))]
    if c % 2 == 1:
        return _regenerate_odd(c, ring, norm_allowed)
    return _regenerate_even(c, ring, norm_allowed)


def _regenerate_odd(c: int, ring: Mod2Ring, norm_allowed) -> list[TableRow]:
    g1 = ring.reduce((0, 1))
    g2 = ring.reduce((1, 2))
    g3 = ring.embed_int(-1) if c % 8 == 3 else ring.embed_int(5)
    b_range = (1, 3) if c % 8 == 3 else (0, 2)
    rows = []
    for a in (1, 3):
        for b in b_range:
            for e3 in (0, 1):
                el = ring.mul(ring.pow(g1, a),
                              ring.mul(ring.pow(g2, b), ring.pow(g3, e3)))
                rows.append(TableRow(c, f"({a},{b},{e3})",
                                     _d0_row_set(ring, el, norm_allowed)))
    return rows


def _regenerate_even(c: int, ring: Mod2Ring, norm_allowed) -> list[TableRow]:
    ring8 = class_ring(c, 3)
    u = ring8.reduce((1, 1))  # 1 + sqrt(dtilde)
    words = [
        ("-1", ring8.embed_int(-1)),
        ("(1+sqrt(d))^2", ring8.pow(u, 2)),
        ("5(1+sqrt(d))^2", ring8.mul(ring8.embed_int(5), ring8.pow(u, 2))),
        ("-(1+sqrt(d))^4", ring8.neg(ring8.pow(u, 4))),
        ("(1+sqrt(d))^6", ring8.pow(u, 6)),
        ("5(1+sqrt(d))^6", ring8.mul(ring8.embed_int(5), ring8.pow(u, 6))),
    ]
    # admissible classes mod 8: eps = -1 mod p2^3 (= <4, 2 sqrt(d)>) and
    # norm = 1 mod 16 (a norm +1 unit reduces to such a class)
    admissible = []
    for x in range(8):
        for y in range(8):
            el = (x, y)
            if not ring8.is_unit(el):
                continue
            if (x + 1) % 4 == 0 and y % 2 == 0 and ring.norm(el) == 1:
                admissible.append(el)
    rows = []
    seen = set()
    for label, el in words:
        if el in admissible and el not in seen:
            seen.add(el)
            rows.append(TableRow(c, label, _d0_row_set(ring, el, norm_allowed)))
    if len(seen) != len(admissible):
        raise AssertionError(f"dtilde={c}: unlabeled admissible classes remain")
    return rows


def regenerate_all_tables() -> list[TableRow]:
    rows = []
    for c in SUPPORTED_CLASSES:
        rows.extend(regenerate_table(c))
    return rows


def unit_genus_report(d: int) -> UnitGenusReport:
    from .quadfield import make_field
    field = make_field(d)
    return classify_unit(field, fundamental_unit(field))
