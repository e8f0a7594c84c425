"""The Nebentypus character and the local data of the quadratic-field Hecke
character whose twist descends the Frey-curve representation.

Values of the two-adic component are fourth roots of unity, stored as
exponents of i (0..3); evaluation decomposes a unit over the per-case
generator set of the relevant finite quotient and sums exponents, so all
character arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .quadfield import QuadField, QuadInt, SplittingType, fundamental_unit, make_field
from .residue import decompose, field_mod2_ring
from .unitgenus import NormMinusOneError, classify_unit

# quadratic characters on odd residues, by kernel
def delta2(n: int) -> int:
    return 1 if n % 8 in (1, 7) else -1

def delta_minus1(n: int) -> int:
    return 1 if n % 4 == 1 else -1

def delta_minus2(n: int) -> int:
    return 1 if n % 8 in (1, 3) else -1


COMPONENT_TRIVIAL = "trivial"
COMPONENT_QUADRATIC = "quadratic_legendre"
COMPONENT_ORDER4 = "order4"


@dataclass(frozen=True)
class NebentypusSpec:
    d: int
    local_components: dict  # odd prime -> component kind
    two_exponent: int       # e in N_eps = 2^e * prod
    conductor: int
    order: int
    fixed_field_degree: int
    fixed_field_disc: int | None  # fundamental discriminant when order <= 2
    two_exponent_printed_rule: int  # the (incorrect) printed variant, kept for comparison


def build_nebentypus(field: QuadField, use_printed_e_rule: bool = False) -> NebentypusSpec:
    """Local components from the Q_i partition; the power of 2 in the
    conductor is 4 exactly when #Q3+#Q5 is odd (the two-adic component is
    delta_{-1}^(#Q3+#Q5)), which is what both worked examples require."""
    comps = {}
    for p in sorted(field.Qi[1] | field.Qi[7]):
        comps[p] = COMPONENT_TRIVIAL
    for p in sorted(field.Qi[3]):
        comps[p] = COMPONENT_QUADRATIC
    for p in sorted(field.Qi[5]):
        comps[p] = COMPONENT_ORDER4
    n3, n5, n7 = len(field.Qi[3]), len(field.Qi[5]), len(field.Qi[7])
    e_correct = 2 if (n3 + n5) % 2 else 0
    e_printed = 2 if (n5 + n7) % 2 else 0
    e = e_printed if use_printed_e_rule else e_correct
    conductor = (1 << e) * prod(sorted(field.Qi[3] | field.Qi[5])) if comps or e else 1
    if n5:
        order, degree = 4, 4
    elif n3:
        order, degree = 2, 2
    else:
        order, degree = (2, 2) if e else (1, 1)
    fixed_disc = None
    if order == 1:
        fixed_disc = 1
    elif order == 2:
        fixed_disc = conductor  # even character: positive fundamental discriminant
    # parity: the product of eps_p(-1) over all finite places must be +1
    parity = (-1) ** n3 * (-1) ** n5 * (-1) ** ((n3 + n5) % 2 if not use_printed_e_rule else 0)
    if not use_printed_e_rule and parity != 1:
        raise AssertionError("nebentypus failed the evenness check")
    return NebentypusSpec(d=field.d, local_components=comps, two_exponent=e,
                          conductor=conductor, order=order,
                          fixed_field_degree=degree, fixed_field_disc=fixed_disc,
                          two_exponent_printed_rule=e_printed)


def eps2_value(field: QuadField, n: int) -> int:
    """The two-adic component of the Nebentypus on odd integers."""
    n3, n5 = len(field.Qi[3]), len(field.Qi[5])
    return delta_minus1(n) if (n3 + n5) % 2 else 1


# ---------------------------------------------------------------------------
# the character chi: local data at 2 (eleven cases) and at odd primes
# ---------------------------------------------------------------------------

CHI_ODD_TRIVIAL = "trivial"
CHI_ODD_DELTA_P = "delta_p"
CHI_ODD_EPS_DELTA_P = "eps_p*delta_p"


@dataclass(frozen=True)
class ChiLocalData:
    d: int
    odd_components: dict          # ramified odd prime -> descriptor
    two_case: str                 # which of the eleven explicit cases
    generators: tuple             # ring elements (per-case generator set)
    generator_names: tuple
    generator_values: tuple       # exponents of i, parallel to generators
    conductor_exponent: int       # a in conductor = 2^a * prod of ramified odd primes outside Q3
    conductor_odd_primes: tuple
    archimedean: tuple            # ("trivial", "sign")
    ring: object                  # quotient ring the generators live in
    split_root: int | None        # omega-image mod 8 for the split case


def _order3_element(ring):
    """A cube root of unity in an inert-2 quotient (deterministic pick)."""
    for el in sorted(ring.units()):
        if el != ring.one() and ring.order(el) == 3:
            return el
    raise AssertionError("no order-3 element found")


def build_chi_local(field: QuadField) -> ChiLocalData:
    """Local components of chi exactly as in the eleven-case construction;
    the generator sets are verified to generate at evaluation time."""
    d = field.d
    odd = {}
    for p in sorted(field.ramified_odd_primes):
        if p in field.Qi[3]:
            odd[p] = CHI_ODD_TRIVIAL
        elif p in field.Qi[5]:
            odd[p] = CHI_ODD_EPS_DELTA_P
        else:
            odd[p] = CHI_ODD_DELTA_P
    cond_odd = tuple(sorted(field.Qi[1] | field.Qi[5] | field.Qi[7]))

    if d % 8 == 1:
        # 2 splits; chi_p2 = delta_{-2} on one factor, trivial on the other
        ring = field_mod2_ring(field, 3)
        s = _hensel_omega_root(field, 3)
        return ChiLocalData(d=d, odd_components=odd, two_case="split",
                            generators=(), generator_names=(), generator_values=(),
                            conductor_exponent=3, conductor_odd_primes=cond_odd,
                            archimedean=("trivial", "sign"), ring=ring, split_root=s)
    if d % 8 == 5:
        ring = field_mod2_ring(field, 3)
        zeta3 = _order3_element(ring)
        gens = (zeta3, ring.embed(field.sqrt_d()),
                ring.embed(field.element(1, 4)),  # 3 + 2*sqrt(d) = 1 + 4*omega
                ring.embed_int(-1))
        names = ("zeta3", "sqrt(d)", "3+2*sqrt(d)", "-1")
        values = (0, 1, 0, 0)
        return ChiLocalData(d=d, odd_components=odd, two_case="inert",
                            generators=gens, generator_names=names,
                            generator_values=values, conductor_exponent=3,
                            conductor_odd_primes=cond_odd,
                            archimedean=("trivial", "sign"), ring=ring, split_root=None)
    if d % 2 == 1:  # d = 3 mod 4, 2 ramified, work mod 16
        ring = field_mod2_ring(field, 4)
        g1 = ring.reduce((0, 1))
        g2 = ring.reduce((1, 2))
        c = d % 16
        if c in (3, 11):
            g3, g3name = ring.embed_int(-1), "-1"
        else:
            g3, g3name = ring.embed_int(5), "5"
        v1 = 2 if c in (3, 7) else 0   # chi(sqrt(d)) = -1 for 3, 7; +1 for 11, 15
        values = (v1, 0, 2)
        return ChiLocalData(d=d, odd_components=odd, two_case=f"dtilde={c} (16)",
                            generators=(g1, g2, g3),
                            generator_names=("sqrt(d)", "1+2*sqrt(d)", g3name),
                            generator_values=values, conductor_exponent=5,
                            conductor_odd_primes=cond_odd,
                            archimedean=("trivial", "sign"), ring=ring, split_root=None)
    # d even, work mod 8 with generators {-1, 5, 1+sqrt(d)}
    ring = field_mod2_ring(field, 3)
    gens = (ring.embed_int(-1), ring.embed_int(5), ring.reduce((1, 1)))
    names = ("-1", "5", "1+sqrt(d)")
    c = d % 16
    case_values = {
        2: (2, 0, 0),    # chi(-1) = -1, chi(1+sqrt d) = 1
        10: (0, 0, 1),   # chi(-1) = 1,  chi(1+sqrt d) = i
        6: (2, 0, 1),    # chi(-1) = -1, chi(1+sqrt d) = i
        14: (0, 0, 0),   # trivial
    }
    exponents = {2: 3, 10: 4, 6: 4, 14: 0}
    return ChiLocalData(d=d, odd_components=odd, two_case=f"dtilde={c} (16)",
                        generators=gens, generator_names=names,
                        generator_values=case_values[c],
                        conductor_exponent=exponents[c],
                        conductor_odd_primes=cond_odd,
                        archimedean=("trivial", "sign"), ring=ring, split_root=None)


def _hensel_omega_root(field: QuadField, k: int) -> int:
    """Root s of t^2 - t - (d-1)/4 mod 2^k with s even: omega = s identifies
    O/p2^k with Z/2^k for the chosen prime above a split 2."""
    c = (field.d - 1) // 4
    M = 1 << k
    for s in range(0, M, 2):
        if (s * s - s - c) % M == 0:
            return s
    raise AssertionError("no even root; 2 does not split")


def eval_chi2(data: ChiLocalData, u) -> int:
    """chi at 2 evaluated on a unit u (QuadInt or ring pair); returns the
    exponent k with value i^k."""
    ring = data.ring
    el = ring.embed(u) if isinstance(u, QuadInt) else ring.reduce(u)
    if data.two_case == "split":
        x, y = el
        n = (x + y * data.split_root) % 8
        return 0 if delta_minus2(n) == 1 else 2
    vec = decompose(ring, el, list(data.generators))
    return sum(e * v for e, v in zip(vec, data.generator_values)) % 4


def root4_str(k: int) -> str:
    return {0: "1", 1: "i", 2: "-1", 3: "-i"}[k % 4]


def verify_chi2_restriction(field: QuadField) -> bool:
    """chi_2 restricted to the rational units 3, 5, 7 mod 8 must equal
    delta_2^(v2(disc)+1) * delta_{-1}^(#Q5+#Q7+1)."""
    data = build_chi_local(field)
    v2disc = (field.disc & -field.disc).bit_length() - 1
    n5, n7 = len(field.Qi[5]), len(field.Qi[7])
    for n in (3, 5, 7):
        want = delta2(n) ** ((v2disc + 1) % 2) * delta_minus1(n) ** ((n5 + n7 + 1) % 2)
        got = eval_chi2(data, data.ring.embed_int(n))
        if got % 2:
            return False  # rational units must land in {1, -1}
        if (1 if got == 0 else -1) != want:
            return False
    return True


@dataclass(frozen=True)
class CompatibilityReport:
    d: int
    at_minus_one: bool
    at_epsilon: bool
    skipped_norm_minus_one: bool


def verify_compatibility(field: QuadField) -> CompatibilityReport:
    """The two unit-compatibility identities: the product of all local values
    at -1 is 1, and chi_2(eps) * (-1)^#(P_minus cap (Q5 u Q7)) = 1.  For
    norm -1 units the epsilon identity is settled by prior work and skipped.
    """
    data = build_chi_local(field)
    # product over all places at -1
    prod_sign = -1  # archimedean sign component
    for p in sorted(field.ramified_odd_primes):
        kind = data.odd_components[p]
        if kind == CHI_ODD_DELTA_P:
            prod_sign *= delta_minus1(p)  # (-1/p)
        elif kind == CHI_ODD_EPS_DELTA_P:
            prod_sign *= -delta_minus1(p)  # eps_p(-1) = -1 times (-1/p)
    k2 = eval_chi2(data, data.ring.embed_int(-1))
    assert k2 % 2 == 0, "chi_2(-1) must be a sign"
    prod_sign *= 1 if k2 == 0 else -1
    at_minus_one = prod_sign == 1

    fu = fundamental_unit(field)
    if fu.norm == -1:
        return CompatibilityReport(d=field.d, at_minus_one=at_minus_one,
                                   at_epsilon=True, skipped_norm_minus_one=True)
    report = classify_unit(field, fu)
    k_eps = eval_chi2(data, report.eps)
    assert k_eps % 2 == 0, "chi_2(eps) must be a sign for a real unit"
    sign = (1 if k_eps == 0 else -1)
    crossing = len(report.P_minus & (field.Qi[5] | field.Qi[7]))
    at_eps = sign * (-1) ** crossing == 1
    return CompatibilityReport(d=field.d, at_minus_one=at_minus_one,
                               at_epsilon=at_eps, skipped_norm_minus_one=False)


def character_report(d: int) -> dict:
    """Bundled nebentypus / chi / compatibility data for one field."""
    field = make_field(d)
    neb = build_nebentypus(field)
    chi = build_chi_local(field)
    try:
        compat = verify_compatibility(field)
        compat_dict = {
            "at_minus_one": compat.at_minus_one,
            "at_epsilon": compat.at_epsilon,
            "skipped_norm_minus_one": compat.skipped_norm_minus_one,
        }
    except NormMinusOneError:  # pragma: no cover - guarded upstream
        compat_dict = {"skipped_norm_minus_one": True}
    return {
        "d": d,
        "nebentypus": {
            "local_components": {str(p): v for p, v in neb.local_components.items()},
            "two_exponent": neb.two_exponent,
            "conductor": neb.conductor,
            "order": neb.order,
            "fixed_field_degree": neb.fixed_field_degree,
            "fixed_field_disc": neb.fixed_field_disc,
        },
        "chi": {
            "odd_components": {str(p): v for p, v in chi.odd_components.items()},
            "two_case": chi.two_case,
            "generator_values": {n: root4_str(v) for n, v in
                                 zip(chi.generator_names, chi.generator_values)},
            "conductor_exponent": chi.conductor_exponent,
            "conductor_odd_primes": list(chi.conductor_odd_primes),
            "archimedean": list(chi.archimedean),
        },
        "chi2_restriction_ok": verify_chi2_restriction(field),
        "compatibility": compat_dict,
    }
