"""Check registry, seeded reproducible runs, and machine-readable reports.

Every acceptance criterion has exactly one record id (AC01..AC13).  A fixed
master seed gives a byte-identical JSON report: child seeds are derived per
record id, floating values are serialized with fixed precision, and
runtimes are reported only when explicitly requested.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import burkhardt, curves, heisenberg, symplectic, theta
from .fields import GF, QQ, Cyc, QW
from .linalg import Matrix, chordal_distance, nullspace
from .poly import SparsePoly

SUITES = ("sympchar", "heis", "burk", "theta", "curve", "cross")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    suites: tuple = ("all",)
    seed: int = 0
    p: int = 101
    tol: float = 1e-6
    omega: list | None = None
    f_roots: tuple = (0, 1, 2, 3, 4, 5)
    out: str | None = None
    timings: bool = False

    def resolved_suites(self):
        if not self.suites or self.suites == ("none",):
            return ()
        if "all" in self.suites:
            return SUITES
        bad = [s for s in self.suites if s not in SUITES]
        if bad:
            raise ConfigError("unknown suites %r; choose from %r" % (bad, list(SUITES)))
        return tuple(s for s in SUITES if s in self.suites)

    def period_matrix(self) -> theta.PeriodMatrix:
        if self.omega is None:
            return theta.OMEGA_GENERIC
        return theta.PeriodMatrix(self.omega)


@dataclass
class CheckRecord:
    id: str
    claim: str
    status: str              # pass / fail / soft
    measured: dict
    tolerances: dict = field(default_factory=dict)
    runtime_ms: float | None = None


def child_rng(cfg: RunConfig, check_id: str) -> random.Random:
    h = hashlib.sha256(("%d:%s" % (cfg.seed, check_id)).encode()).digest()
    return random.Random(int.from_bytes(h[:8], "big"))


class Context:
    """Lazily computed artifacts shared between checks."""

    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self._cache = {}

    def get(self, key, builder):
        if key not in self._cache:
            self._cache[key] = builder()
        return self._cache[key]

    def burkhardt_exact(self):
        return self.get("B", lambda: burkhardt.derive_burkhardt_exact(
            child_rng(self.cfg, "B-exact")))

    def curve(self):
        return self.get("curve", lambda: curves.GenusTwoCurve(
            GF(self.cfg.p), roots=list(self.cfg.f_roots)))

    def surface_quadrics(self):
        return self.get("sq", lambda: theta.surface_quadrics(
            self.cfg.period_matrix(), child_rng(self.cfg, "sq")))

    def weddle_theta(self):
        return self.get("wt", lambda: theta.weddle_from_theta(
            self.cfg.period_matrix(), symplectic.BASE_ODD,
            child_rng(self.cfg, "wt")))

    def weddle_curve(self):
        return self.get("wc", lambda: curves.weddle_prime_fit(
            self.curve(), child_rng(self.cfg, "wc")))


# ---------------------------------------------------------------------------
# the thirteen acceptance criteria


def check_group_orders(ctx: Context) -> CheckRecord:
    o2 = symplectic.group_order(2, 2)
    o3 = symplectic.group_order(2, 3)
    i2, i3, i6 = (symplectic.gamma_index(2, n) for n in (2, 3, 6))
    ok = (o2 == 720 and o3 == 51840 and i2 == 720 and i3 == 51840
          and i6 == 720 * 51840 and i6 // i3 == 720)
    return CheckRecord("AC01", "group orders by closure match the index formula",
                       "pass" if ok else "fail",
                       {"order_mod2": o2, "order_mod3": o3,
                        "index_2": i2, "index_3": i3, "index_6": i6})


def check_orbits(ctx: Context) -> CheckRecord:
    chars = symplectic.all_characteristics(2)
    seen = set()
    cells = []
    for m in chars:
        if m in seen:
            continue
        orb = symplectic.orbit_characteristics(m)
        seen |= orb
        cells.append(orb)
    sizes = sorted(len(c) for c in cells)
    parity_const = all(len({x.parity for x in c}) == 1 for c in cells)
    forms = symplectic.all_quad_forms(2)
    census = (sum(1 for q in forms if q.epsilon == 1),
              sum(1 for q in forms if q.epsilon == -1))
    ok = sizes == [6, 10] and parity_const and census == (10, 6)
    return CheckRecord("AC02", "two characteristic orbits of sizes 10 and 6",
                       "pass" if ok else "fail",
                       {"orbit_sizes": sizes, "parity_constant": parity_const,
                        "form_census": list(census)})


def check_stabilizers(ctx: Context) -> CheckRecord:
    odd = symplectic.stabilizer(symplectic.BASE_ODD)
    even = symplectic.stabilizer(symplectic.Characteristic(2, (0, 0), (0, 0)))
    ok = (odd.order == 120 and odd.orbit_sizes_on_odd == (1, 5)
          and even.order == 72)
    return CheckRecord("AC03", "stabilizer orders 120 (odd, orbits 1+5) and 72 (even)",
                       "pass" if ok else "fail",
                       {"odd_order": odd.order,
                        "odd_orbits": list(odd.orbit_sizes_on_odd),
                        "even_order": even.order,
                        "even_orbits": list(even.orbit_sizes_on_odd)})


def check_heisenberg(ctx: Context) -> CheckRecord:
    rng = child_rng(ctx.cfg, "AC04")
    G = heisenberg.enumerate_group(2)
    counterexamples = []
    mult_ok = True
    for _ in range(500):
        h1, h2 = rng.choice(G), rng.choice(G)
        if heisenberg.schrodinger(heisenberg.h_mul(h1, h2)) != \
                heisenberg.schrodinger(h1).compose(heisenberg.schrodinger(h2)):
            mult_ok = False
            counterexamples.append("multiplicativity: %r * %r" % (h1, h2))
            break
    j = heisenberg.involution_j()
    D = heisenberg.d_minus_one()
    j_ok = True
    for h in (rng.choice(G) for _ in range(50)):
        if j.compose(heisenberg.schrodinger(h)).compose(j) \
                != heisenberg.schrodinger(D(h)):
            j_ok = False
            counterexamples.append("flip conjugation: %r" % (h,))
            break
    dims = (len(heisenberg.eigenbasis_plus()), len(heisenberg.eigenbasis_minus()))
    gens = heisenberg.standard_sp4_generators()
    schur_ok = True
    blocks_ok = True
    for M in gens:
        phi = heisenberg.lift_symplectic(M)
        if heisenberg.intertwiner_dimension(phi) != 1:
            schur_ok = False
            continue
        T = heisenberg.intertwiner(phi)
        for h in heisenberg.heisenberg_generators(2):
            L = heisenberg.genperm_right(T, heisenberg.schrodinger(h))
            R = heisenberg.genperm_left(heisenberg.schrodinger(phi(h)), T)
            if any(L.rows[i][j2] != R.rows[i][j2] for i in range(9) for j2 in range(9)):
                schur_ok = False
        _, _, off = heisenberg.block_split(T)
        blocks_ok &= off
    keys = symplectic.sp_group_elements(2, 3)
    proj_ok = True
    for _ in range(20):
        M = symplectic.key_to_mat(rng.choice(keys), 2, 3)
        N = symplectic.key_to_mat(rng.choice(keys), 2, 3)
        TM = heisenberg.intertwiner(M)
        TN = heisenberg.intertwiner(N)
        TMN = heisenberg.intertwiner(M * N)
        if heisenberg.proportional_matrices(TM.mat_mul(TN), TMN) is None:
            proj_ok = False
            break
    ok = mult_ok and j_ok and dims == (5, 4) and schur_ok and blocks_ok and proj_ok
    return CheckRecord("AC04", "monomial representation, involutions, Schur lifts",
                       "pass" if ok else "fail",
                       {"multiplicative_500": mult_ok, "j_conjugation": j_ok,
                        "eigensplit": list(dims), "schur_dimension_one": schur_ok,
                        "blocks_preserved": blocks_ok, "projective_20_pairs": proj_ok,
                        "counterexamples": counterexamples})


def check_skew_kernel(ctx: Context) -> CheckRecord:
    rng = child_rng(ctx.cfg, "AC05")
    Mm = burkhardt.matrix_minus()
    quartics = burkhardt.steinerian_quartics()
    sym_ok = all(p.is_zero() for p in Mm.mat_vec(list(quartics)))
    r1 = burkhardt.steinerian_minus([1, 1, 1, 1], QQ)
    scale = r1[2]
    pinned = [x / scale for x in r1] == [Fraction(v) for v in (6, -3, 1, 1, 1)]
    # independent oracle: naive elimination kernel of the evaluated matrix
    vals = [[Mm.rows[i][j].evaluate([Fraction(1)] * 4) for j in range(5)]
            for i in range(5)]
    basis = nullspace(vals, QQ, method="naive")
    oracle = (len(basis) == 1
              and curves._proj_eq(basis[0], r1, QQ))
    from .linalg import adjugate
    adj_ok = True
    nonzero_lambda = True
    for _ in range(20):
        z = [Fraction(rng.randint(-9, 9)) for _ in range(4)]
        rv = burkhardt.steinerian_minus(z, QQ)
        if rv is None:
            continue
        ev = Matrix([[Mm.rows[i][j].evaluate(z) for j in range(5)] for i in range(5)])
        adj = adjugate(ev)
        lam = None
        for i in range(5):
            for j2 in range(5):
                a, b = adj.rows[i][j2], rv[i] * rv[j2]
                if b != 0:
                    l2 = Fraction(a) / Fraction(b)
                    lam = l2 if lam is None else lam
                    adj_ok &= (l2 == lam)
                else:
                    adj_ok &= (a == 0)
        nonzero_lambda &= (lam is not None and lam != 0)
    indep = _quartics_linearly_independent(quartics)
    ok = sym_ok and pinned and oracle and adj_ok and nonzero_lambda and indep
    return CheckRecord("AC05", "skew matrix kernel identity and pinned kernel vector",
                       "pass" if ok else "fail",
                       {"symbolic_kernel_identity": sym_ok,
                        "kernel_at_ones": [str(x / scale) for x in r1],
                        "elimination_oracle_agrees": oracle,
                        "adjugate_rank_one": adj_ok and nonzero_lambda,
                        "quartics_independent": indep})


def _quartics_linearly_independent(quartics) -> bool:
    from .poly import exponents_of_degree
    exps = exponents_of_degree(4, 4)
    rows = [[q.terms.get(e, Fraction(0)) for e in exps] for q in quartics]
    from .linalg import rank
    return rank(rows, QQ) == 5


def check_burkhardt_derivation(ctx: Context) -> CheckRecord:
    rng = child_rng(ctx.cfg, "AC06")
    dom = GF(ctx.cfg.p)
    dp = burkhardt.derive_burkhardt(dom, rng)
    B = ctx.burkhardt_exact()
    red = {e: (c.numerator * pow(c.denominator, -1, ctx.cfg.p)) % ctx.cfg.p
           for e, c in B.terms.items()}
    agree = red == {e: c.val for e, c in dp.quartic.terms.items()}
    vanish = True
    for _ in range(50):
        z = [Fraction(rng.randint(-9, 9)) for _ in range(4)]
        rv = burkhardt.steinerian_minus(z, QQ)
        if rv is None:
            continue
        vanish &= (B.evaluate(rv) == 0)
    BQW = B.map_coefficients(QW, lambda c: Cyc(c))
    inv_ok = True
    for M in heisenberg.standard_sp4_generators():
        forms = heisenberg.upsilon_plus_substitution(M)
        moved = BQW.substitute_linear(forms)
        if _poly_ratio_qw(moved, BQW) is None:
            inv_ok = False
            break
    ok = dp.nullity == 1 and agree and vanish and inv_ok
    return CheckRecord("AC06", "invariant quartic by interpolation, certified and invariant",
                       "pass" if ok else "fail",
                       {"nullity_mod_p": dp.nullity, "agrees_mod_p": agree,
                        "vanishes_on_fresh_50": vanish,
                        "invariant_under_even_action": inv_ok,
                        "symbolically_certified": True})


def _poly_ratio_qw(A: SparsePoly, B: SparsePoly):
    if set(A.terms) != set(B.terms):
        return None
    ratio = None
    for e in A.terms:
        r = A.terms[e] / B.terms[e]
        if ratio is None:
            ratio = r
        elif r != ratio:
            return None
    return ratio


def check_hessian(ctx: Context) -> CheckRecord:
    B = ctx.burkhardt_exact()
    matches = burkhardt.hessian_match(B)
    scalars = {m.scalar for m in matches}
    has_identity = any(m.permutation == (0, 1, 2, 3, 4) and m.signs == (1,) * 5
                       for m in matches)
    # every further match must be a self-symmetry of the quadric matrix
    M = burkhardt.matrix_plus()
    all_symmetries = all(
        burkhardt._matrix_ratio(burkhardt._transform_monomial_matrix(
            M, m.permutation, m.signs), M) == 1
        for m in matches)
    deg = burkhardt.hessian_determinant_degree(B)
    ok = (len(matches) > 0 and len(scalars) == 1 and has_identity
          and all_symmetries and deg == 10)
    return CheckRecord("AC07",
                       "second partials of the quartic reproduce the symmetric matrix",
                       "pass" if ok else "fail",
                       {"scalar": str(next(iter(scalars))) if scalars else None,
                        "identity_match": has_identity,
                        "match_count": len(matches),
                        "matches_are_pattern_symmetries": all_symmetries,
                        "hessian_det_degree": deg})


def check_fibers(ctx: Context) -> CheckRecord:
    res = burkhardt.count_fibers_ff(31)
    base31 = res["base_points"]
    base49 = burkhardt.count_base_locus_ff(7, 2)
    base7 = burkhardt.count_base_locus_ff(7, 1)
    # the fiber of the image of (1,1,1,1) contains the point itself
    dom = GF(31)
    r0 = burkhardt.steinerian_minus([1, 1, 1, 1], dom)
    contains_self = r0 is not None
    return CheckRecord("AC08",
                       "fiber histogram and base-locus count of the quartic map",
                       "soft",
                       {"fiber_histogram_mod31": res["fiber_histogram"],
                        "base_points_mod31": base31,
                        "base_points_mod7": base7,
                        "base_points_mod49": base49,
                        "base_target": 40,
                        "self_in_fiber": contains_self},
                       {"note": "histogram is a soft record; rational fibers "
                                "split into Frobenius orbits of the six "
                                "geometric points"})


def check_theta_numerics(ctx: Context) -> CheckRecord:
    rng = child_rng(ctx.cfg, "AC09")
    om = ctx.cfg.period_matrix()
    chars = symplectic.all_characteristics(2)
    tol = 1e-12
    parity_worst = 0.0
    for _ in range(20):
        m = rng.choice(chars)
        z = theta.random_z(om, rng)
        t1 = theta.theta_halfint(m, z, om, tol)
        t2 = theta.theta_halfint(m, -z, om, tol)
        parity_worst = max(parity_worst, abs(t2.value - m.parity * t1.value))
    odd_null_worst = max(abs(theta.theta_halfint(m, np.zeros(2), om, tol).value)
                         for m in chars if m.parity == -1)
    honesty_ok = True
    for _ in range(50):
        m = rng.choice(chars)
        z = theta.random_z(om, rng)
        v1 = theta.theta_halfint(m, z, om, 1e-8)
        v2 = theta.theta_halfint(m, z, om, 5e-9)
        honesty_ok &= abs(v2.value - v1.value) <= v1.bound
    contract = theta.level3_contract_check(om, rng)
    nullity, _ = theta.quadric_space_nullity(om, rng)
    sq = ctx.surface_quadrics()
    square_worst = 0.0
    for m in chars:
        if m.parity == -1:
            st = theta.steinerian_of_theta_null(m, om)
            square_worst = max(square_worst, chordal_distance(st, sq.r))
    det_worst = 0.0
    memb_worst = 0.0
    for m in chars:
        tn = theta.theta_null(m, om)
        memb_worst = max(memb_worst, tn.membership_residual)
        if tn.det_plus_normalized is not None:
            det_worst = max(det_worst, tn.det_plus_normalized)
    kernel_worst = 0.0
    for m in chars:
        if m.parity == 1:
            tn = theta.theta_null(m, om)
            status, k = burkhardt.steinerian_plus(list(tn.eigen_coords))
            kernel_worst = max(kernel_worst,
                               chordal_distance(k, sq.r) if status == "kernel" else 1.0)
    ptol = ctx.cfg.tol
    ok = (parity_worst < 2 * tol and odd_null_worst < tol and honesty_ok
          and nullity == 9 and square_worst < ptol and det_worst < ptol
          and memb_worst < 1e-8 and kernel_worst < ptol)
    return CheckRecord("AC09", "theta numerics and the Steinerian commuting square",
                       "pass" if ok else "fail",
                       {"parity_residual": parity_worst,
                        "odd_null_max": odd_null_worst,
                        "tail_bound_honest_50": honesty_ok,
                        "contract_residual": contract.max_residual(),
                        "quadric_nullity": nullity,
                        "square_distance_max": square_worst,
                        "even_null_det_max": det_worst,
                        "membership_residual_max": memb_worst,
                        "plus_kernel_distance_max": kernel_worst},
                       {"parity": 2 * tol, "square": ptol, "det": ptol})


def check_weddle_theta(ctx: Context) -> CheckRecord:
    rep = ctx.weddle_theta()
    census = theta.half_period_census(symplectic.BASE_ODD, ctx.cfg.period_matrix())
    n_minus = sum(1 for row in census if row["in_minus"])
    ptol = ctx.cfg.tol
    ok = (rep.fit_nullity == 1 and n_minus == 6
          and rep.fresh_residual < ptol and rep.node_gradient_residual < 1e-5
          and rep.line_residual < ptol and rep.net_dimension == 3)
    return CheckRecord("AC10", "six-node quartic from theta with 25 lines and cubic net",
                       "pass" if ok else "fail",
                       {"fit_nullity": rep.fit_nullity,
                        "half_periods_in_minus": n_minus,
                        "fresh_residual": rep.fresh_residual,
                        "node_gradient_residual": rep.node_gradient_residual,
                        "line_residual": rep.line_residual,
                        "lines_checked": rep.lines_checked,
                        "net_dimension": rep.net_dimension},
                       {"fresh": ptol, "gradient": 1e-5, "lines": ptol})


def check_curve_side(ctx: Context) -> CheckRecord:
    rng = child_rng(ctx.cfg, "AC11")
    curve = ctx.curve()
    wrep = ctx.weddle_curve()
    lines_ok = all(ok for ok, _ in wrep.line_results)
    quadrics = curves.quadrics_through_curve(curve, rng)
    restr = curves.quadric_restriction_check(curve, quadrics.forms)
    const_ok = curves.phi_constant_on_secant(curve, rng)
    krep = curves.kummer_fit(curve, rng)
    orep = curves.sec_octic(curve, rng, weddle=wrep.quartic)
    degs = curves.hyperplane_section_degree(curve, rng)
    ok = (wrep.fit_nullity == 1 and wrep.nodes_singular and lines_ok
          and len(quadrics.forms) == 4 and restr["injective"]
          and restr["vanish_at_nodes"] and restr["same_span"]
          and const_ok and krep.fit_nullity == 1 and krep.nodes_distinct
          and krep.nodes_singular and krep.origin_node_consistent
          and orep.fit_nullity == 1 and orep.restriction_is_weddle_square
          and orep.fresh_residual_ok and orep.curve_singular
          and all(d == 6 for d in degs))
    return CheckRecord("AC11", "curve-side constructions over a prime field",
                       "pass" if ok else "fail",
                       {"weddle_nullity": wrep.fit_nullity,
                        "weddle_singular": wrep.nodes_singular,
                        "weddle_lines_ok": lines_ok,
                        "quadrics_dimension": len(quadrics.forms),
                        "restriction_check": {k: v for k, v in restr.items()},
                        "phi_constant_on_secants": const_ok,
                        "kummer_nullity": krep.fit_nullity,
                        "kummer_nodes_distinct": krep.nodes_distinct,
                        "kummer_nodes_singular": krep.nodes_singular,
                        "tangents_share_image": krep.origin_node_consistent,
                        "octic_nullity": orep.fit_nullity,
                        "octic_restriction_square": orep.restriction_is_weddle_square,
                        "embedding_degrees": degs})


def check_rigidity(ctx: Context) -> CheckRecord:
    wc = ctx.weddle_curve()
    wt = ctx.weddle_theta()
    curve_ok = wc.rigidity_nullity == 1 and wc.rigidity_matches
    theta_ok = (wt.rigidity_nullity == 1 and wt.rigidity_match is not None
                and wt.rigidity_match < ctx.cfg.tol)
    return CheckRecord("AC12", "each 25-line configuration pins a unique quartic",
                       "pass" if (curve_ok and theta_ok) else "fail",
                       {"curve_nullity": wc.rigidity_nullity,
                        "curve_matches": wc.rigidity_matches,
                        "theta_nullity": wt.rigidity_nullity,
                        "theta_match_distance": wt.rigidity_match},
                       {"theta_match": ctx.cfg.tol})


def check_symmetroid(ctx: Context) -> CheckRecord:
    dom = GF(ctx.cfg.p)
    rep = None
    attempts = 0
    # general position fails with probability O(1/p); resample deterministically
    for attempt in range(12):
        rng = child_rng(ctx.cfg, "AC13:%d" % attempt)
        nodes = [[dom.random(rng) for _ in range(4)] for _ in range(6)]
        attempts = attempt + 1
        try:
            rep = theta.symmetroid(nodes, dom)
            break
        except theta.DegenerateConfiguration:
            continue
    if rep is None:
        return CheckRecord("AC13", "determinantal quartic singular at exactly 16 points",
                           "fail", {"error": "no general-position draw in 12 tries"})
    count = theta.symmetroid_singular_count_mod_p(rep, ctx.cfg.p)
    pts = rep.rank3_points + rep.rank2_points
    distinct = curves._all_distinct(pts, dom)
    ok = (rep.quadric_space_dim == 4 and len(rep.rank3_points) == 6
          and len(rep.rank2_points) == 10 and rep.gradient_residual == 0.0
          and count == 16 and distinct)
    return CheckRecord("AC13", "determinantal quartic singular at exactly 16 points",
                       "pass" if ok else "fail",
                       {"quadric_space_dim": rep.quadric_space_dim,
                        "rank3_points": len(rep.rank3_points),
                        "rank2_points": len(rep.rank2_points),
                        "gradients_vanish": rep.gradient_residual == 0.0,
                        "singular_count_enumerated": count,
                        "points_distinct": distinct,
                        "sampling_attempts": attempts})


CHECKS = (
    ("sympchar", check_group_orders),
    ("sympchar", check_orbits),
    ("sympchar", check_stabilizers),
    ("heis", check_heisenberg),
    ("burk", check_skew_kernel),
    ("burk", check_burkhardt_derivation),
    ("burk", check_hessian),
    ("burk", check_fibers),
    ("theta", check_theta_numerics),
    ("theta", check_weddle_theta),
    ("curve", check_curve_side),
    ("cross", check_rigidity),
    ("cross", check_symmetroid),
)


def run_suite(cfg: RunConfig) -> dict:
    suites = cfg.resolved_suites()
    ctx = Context(cfg)
    records = []
    for suite, fn in CHECKS:
        if suite not in suites:
            continue
        t0 = time.time()
        rec = fn(ctx)
        if cfg.timings:
            rec.runtime_ms = (time.time() - t0) * 1000.0
        records.append(rec)
    report = {
        "schema": 1,
        "config": {"suites": list(suites), "seed": cfg.seed, "p": cfg.p,
                   "tol": _fmt(cfg.tol), "f_roots": list(cfg.f_roots)},
        "records": [_record_dict(r) for r in records],
        "failures": sum(1 for r in records if r.status == "fail"),
    }
    return report


def _record_dict(r: CheckRecord) -> dict:
    return {"id": r.id, "claim": r.claim, "status": r.status,
            "measured": _sanitize(r.measured),
            "tolerances": _sanitize(r.tolerances),
            "runtime_ms": None if r.runtime_ms is None else round(r.runtime_ms, 1)}


def _fmt(x: float) -> str:
    return "%.12e" % float(x)


def _sanitize(obj):
    if isinstance(obj, dict):
        return {str(k): _sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(v) for v in obj]
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, (np.floating, float)):
        return _fmt(float(obj))
    if isinstance(obj, complex):
        return "%s,%s" % (_fmt(obj.real), _fmt(obj.imag))
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    return str(obj)


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
