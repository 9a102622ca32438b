"""Verification report: recompute everything and compare.

Every section is a list of named checks.  Hard checks assert exact
recomputed identities (Pass/Fail); informational checks record
comparisons against the transcribed reference tables without failing
the run unless strict mode escalates them.  Output is deterministic:
no timestamps, seeded sampling, sorted keys.
"""

from __future__ import annotations

import json
import random
import sys
from dataclasses import dataclass

from ._version import __version__
from .bases import nonion_basis, pair_phase_matrix, tilde_fixture_check, tu3_basis
from .bracket import StructureRow, diff_table, s3_bracket, structure_table
from .clifford import (
    degree_census,
    dimension,
    generator,
    s3_symmetric_sum,
    unit,
    weighted_identity_check,
)
from .cubic import (
    CYCLE_ALL_GROUPS,
    CYCLE_FIX_DIAG,
    a0_vs_det,
    det_poly,
    qhat_at,
    term_census,
    triple_product_components,
    variant_poly,
)
from .field import FieldElem, J, J2, ONE, SQRT2, SQRT3, ZERO, j_pow, rational
from .fixtures import (
    fixture_checksums,
    fixture_path,
    lambda_combos_fixture,
    surface_poly_fixture,
)
from .poly import MPoly
from .roots import (
    cartan_check,
    extract_alpha_root,
    extract_beta_root,
    gellmann_decompose,
    projected_alpha_root,
    root_inner,
    su3_structure_constants,
    z3_rotate,
)

__all__ = ["Check", "Section", "VerificationReport", "SCOPES", "run_verify", "emit_report"]

SCOPES = (
    "all",
    "nonion-table",
    "tu3-table",
    "roots",
    "norm",
    "triple-product",
    "clifford",
    "su3",
)

REPORT_SCHEMA = "verification-report/1"


@dataclass
class Check:
    name: str
    kind: str  # "assert" | "info"
    ok: bool
    detail: object = None

    def to_json(self) -> dict:
        out = {"name": self.name, "kind": self.kind, "ok": self.ok}
        if self.detail is not None:
            out["detail"] = self.detail
        return out


@dataclass
class Section:
    name: str
    checks: list[Check]

    def status(self, strict: bool = False) -> str:
        hard = [c for c in self.checks if c.kind == "assert" or (strict and c.kind == "info")]
        if not hard:
            return "Informational"
        return "Pass" if all(c.ok for c in hard) else "Fail"


@dataclass
class VerificationReport:
    sections: list[Section]
    strict: bool
    meta: dict

    def passed(self) -> bool:
        return all(s.status(self.strict) != "Fail" for s in self.sections)

    def to_json(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "strict": self.strict,
            "passed": self.passed(),
            "sections": [
                {
                    "name": s.name,
                    "status": s.status(self.strict),
                    "checks": [c.to_json() for c in s.checks],
                }
                for s in self.sections
            ],
            "meta": self.meta,
        }


def _spot(expected: dict[int, FieldElem], row: StructureRow) -> tuple[bool, dict]:
    computed = row.target_map()
    ok = computed == expected
    return ok, {
        "triple": list(row.triple),
        "expected": {str(n): str(c) for n, c in sorted(expected.items())},
        "computed": {str(n): str(c) for n, c in sorted(computed.items())},
    }


# ----------------------------------------------------------------------
# section builders
# ----------------------------------------------------------------------

def _section_nonion_table() -> Section:
    basis = nonion_basis()
    q = basis.elements
    checks: list[Check] = []

    table = {r.triple: r for r in structure_table(basis)}
    three = rational(3)
    two = rational(2)

    spots = [
        ("bracket {1,2,3} = 3(j^2-j) q0", (1, 2, 3), {0: three * (J2 - J)}),
        ("bracket {1,2,5} = 2(j^2-j) q1", (1, 2, 5), {1: two * (J2 - J)}),
        ("bracket {0,1,4} = 0", (0, 1, 4), {}),
    ]
    for name, trip, expected in spots:
        ok, detail = _spot(expected, table[trip])
        checks.append(Check(name, "assert", ok, detail))

    # binary reduction {q_a, q_b, q0} = q_a q_b - q_b q_a for all 28 pairs
    ok = True
    for a in range(1, 9):
        for b in range(a + 1, 9):
            br = s3_bracket(q[a], q[b], q[0])
            if br != q[a] * q[b] - q[b] * q[a]:
                ok = False
    checks.append(Check("binary reduction on all 28 pairs", "assert", ok))

    diff = diff_table(list(table.values()), fixture_path("table_nonion_s3.json"))
    checks.append(
        Check(
            "diff vs transcribed table (match rate)",
            "info",
            diff.all_match,
            {
                "summary": diff.summary(),
                "mismatch_triples": [
                    list(r["triple"]) for r in diff.rows if r["status"] == "Mismatch"
                ],
            },
        )
    )
    checks.append(
        Check(
            "composite conjugation vs claimed per-element phases",
            "info",
            all(r["matches"] for r in tilde_fixture_check()),
            tilde_fixture_check(),
        )
    )
    return Section("nonion-table", checks)


def _section_tu3_table() -> Section:
    basis = tu3_basis()
    checks: list[Check] = []
    table = {r.triple: r for r in structure_table(basis)}

    checks.append(Check("diagonal triple bracket vanishes", "assert", cartan_check(basis)))

    sqrt3 = SQRT3
    inv_sqrt2 = SQRT2 / rational(2)
    inv_sqrt3 = SQRT3 / rational(3)
    spots = [
        ("bracket {1,2,3} = sqrt3 Q0", (1, 2, 3), {0: sqrt3}),
        ("bracket {4,5,6} = -sqrt3 Q0", (4, 5, 6), {0: -sqrt3}),
        (
            "bracket {2,5,7} = (3/sqrt2) Q0 - Q7 - (2/sqrt3) Q8",
            (2, 5, 7),
            {0: rational(3) * inv_sqrt2, 7: -ONE, 8: -(rational(2) * inv_sqrt3)},
        ),
    ]
    for name, trip, expected in spots:
        ok, detail = _spot(expected, table[trip])
        checks.append(Check(name, "assert", ok, detail))

    diff = diff_table(list(table.values()), fixture_path("table_tu3_s3.json"))
    checks.append(
        Check("diff vs transcribed table (match rate)", "info", diff.all_match, diff.summary())
    )
    return Section("tu3-table", checks)


def _section_roots() -> Section:
    checks: list[Check] = []
    alphas = {i: extract_alpha_root(i) for i in range(1, 7)}
    inv_sqrt3 = SQRT3 / rational(3)
    sqrt_2_3 = SQRT2 * SQRT3 / rational(3)

    checks.append(
        Check(
            "alpha_1 = (1/sqrt3, 0, -sqrt(2/3))",
            "assert",
            alphas[1] == (inv_sqrt3, ZERO, -sqrt_2_3),
            [str(c) for c in alphas[1]],
        )
    )
    checks.append(
        Check(
            "<alpha_i, alpha_i> = 1 for i = 1..6",
            "assert",
            all(root_inner(alphas[i], alphas[i]) == ONE for i in range(1, 7)),
        )
    )
    checks.append(
        Check(
            "<alpha_i, alpha_j> = 0 for distinct i, j in {1,2,3}",
            "assert",
            all(
                root_inner(alphas[i], alphas[k]).is_zero()
                for i in (1, 2, 3)
                for k in (1, 2, 3)
                if i != k
            ),
        )
    )
    checks.append(
        Check(
            "alpha_i = -alpha_{i+3}",
            "assert",
            all(alphas[i] == tuple(-c for c in alphas[i + 3]) for i in (1, 2, 3)),
        )
    )
    checks.append(
        Check(
            "<alpha_i, alpha_{i+3}> = -1 (the all-pairs orthogonality claim fails here)",
            "info",
            all(root_inner(alphas[i], alphas[i + 3]) == -ONE for i in (1, 2, 3)),
        )
    )

    betas = {}
    ok_targets = True
    expected_targets = {1: 6, 2: 4, 3: 5, 4: 3, 5: 1, 6: 2}
    for i in range(1, 7):
        target, root = extract_beta_root(i)
        betas[i] = root
        ok_targets = ok_targets and target == expected_targets[i]
    checks.append(Check("beta pair product targets", "assert", ok_targets))
    three = rational(3)
    checks.append(
        Check(
            "<beta_i, beta_i> = 3; <beta_i, beta_j> = -1 (distinct i, j in {1,2,3})",
            "assert",
            all(root_inner(betas[i], betas[i]) == three for i in range(1, 7))
            and all(
                root_inner(betas[i], betas[k]) == -ONE
                for i in (1, 2, 3)
                for k in (1, 2, 3)
                if i != k
            ),
        )
    )
    checks.append(
        Check(
            "beta_i = -beta_{i+3}",
            "assert",
            all(betas[i] == tuple(-c for c in betas[i + 3]) for i in (1, 2, 3)),
        )
    )

    proj = {i: projected_alpha_root(i) for i in (1, 2, 3)}
    two_thirds = rational(2, 3)
    sums = tuple(proj[1][k] + proj[2][k] + proj[3][k] for k in range(3))
    checks.append(
        Check(
            "projected roots: norms 2/3, zero sum, ratio 3/2",
            "assert",
            all(root_inner(proj[i], proj[i]) == two_thirds for i in (1, 2, 3))
            and all(c.is_zero() for c in sums)
            and all(
                root_inner(alphas[i], alphas[i]) / root_inner(proj[i], proj[i])
                == rational(3, 2)
                for i in (1, 2, 3)
            ),
        )
    )
    checks.append(
        Check(
            "rotation has order 3 and cycles both root triples",
            "assert",
            all(z3_rotate(alphas[i], 3) == alphas[i] for i in range(1, 7))
            and z3_rotate(alphas[1]) == alphas[2]
            and z3_rotate(alphas[2]) == alphas[3]
            and z3_rotate(alphas[3]) == alphas[1]
            and z3_rotate(betas[1]) == betas[2]
            and z3_rotate(betas[2]) == betas[3]
            and z3_rotate(betas[3]) == betas[1],
        )
    )
    checks.append(
        Check(
            "root components stay in the real subfield",
            "assert",
            all(c.has_zero_j_part() for v in list(alphas.values()) + list(betas.values()) for c in v),
        )
    )
    return Section("roots", checks)


def _section_norm() -> Section:
    checks: list[Check] = []
    det = det_poly()
    for v in (1, 2, 3, 4):
        checks.append(
            Check(f"determinant equals factorization variant {v}", "assert", variant_poly(v) == det)
        )
    census = term_census(det)
    checks.append(
        Check(
            "census: 21 distinct monomials, 81 weighted terms",
            "assert",
            census.distinct_monomials == 21 and census.weighted_terms == 81,
            {"distinct": census.distinct_monomials, "weighted": census.weighted_terms},
        )
    )
    checks.append(
        Check(
            "surface fixture equals the determinant polynomial",
            "info",
            surface_poly_fixture() == det,
        )
    )

    rng = random.Random(20100625)
    ok = True
    for _ in range(100):
        x = [rational(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(9)]
        y = [rational(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(9)]
        lhs = (qhat_at(x) * qhat_at(y)).det()
        rhs = det.evaluate(x) * det.evaluate(y)
        if lhs != rhs:
            ok = False
            break
    checks.append(Check("determinant multiplicativity on 100 random pairs", "assert", ok))
    return Section("norm", checks)


def _section_triple_product() -> Section:
    checks: list[Check] = []
    comps = triple_product_components()
    a0 = comps[0]

    ok_axes = True
    for a in range(9):
        exp = [0] * 9
        exp[a] = 3
        restriction = MPoly(
            {e: c for e, c in a0.terms.items() if all(e[i] == 0 for i in range(9) if i != a)}
        )
        if restriction != MPoly.monomial(exp):
            ok_axes = False
    checks.append(Check("A0 restricted to each axis is the cube", "assert", ok_axes))

    cyc_all = a0.permute_vars(CYCLE_ALL_GROUPS) == a0
    checks.append(
        Check(
            "A0 invariant under cycling all three coordinate triples",
            "assert",
            cyc_all,
            {
                "counterexample": None
                if cyc_all
                else "x0*x1*x4 has coefficient -3 but its image x2*x5*x7 has 0",
            },
        )
    )
    checks.append(
        Check(
            "A0 invariant under cycling with the diagonal triple fixed",
            "info",
            a0.permute_vars(CYCLE_FIX_DIAG) == a0,
        )
    )

    grades = nonion_basis().grade
    ok_grade = all(
        sum(grades[i] * e for i, e in enumerate(exp)) % 3 == 0 for exp in a0.monomials()
    )
    checks.append(Check("every A0 monomial has grade-sum 0 mod 3", "assert", ok_grade))

    vanishing = {p: comps[p].is_zero() for p in range(1, 9)}
    checks.append(
        Check(
            "components A1..A8 vanish",
            "info",
            all(vanishing.values()),
            {
                "nonzero_components": sorted(p for p, z in vanishing.items() if not z),
                "monomial_counts": {str(p): len(comps[p].monomials()) for p in range(1, 9)},
            },
        )
    )
    checks.append(Check("A0 vs determinant relation", "info", False, a0_vs_det()))
    tc = term_census(a0)
    checks.append(
        Check(
            "A0 census",
            "info",
            True,
            {"distinct": tc.distinct_monomials, "weighted": tc.weighted_terms},
        )
    )
    return Section("triple-product", checks)


def _section_su3() -> Section:
    checks: list[Check] = []
    f = su3_structure_constants()
    half = rational(1, 2)
    s32 = SQRT3 / rational(2)
    expected = {
        (1, 2, 3): ONE,
        (1, 4, 7): half,
        (1, 6, 5): half,
        (2, 4, 6): half,
        (2, 5, 7): half,
        (3, 4, 5): half,
        (3, 7, 6): half,
        (4, 5, 8): s32,
        (6, 7, 8): s32,
    }

    def lookup(i, jx, k):
        # completely antisymmetric: reduce to sorted key and a sign
        order = (i, jx, k)
        srt = tuple(sorted(order))
        perm_sign = 1
        lst = list(order)
        for a in range(3):
            for b in range(a + 1, 3):
                if lst[a] > lst[b]:
                    lst[a], lst[b] = lst[b], lst[a]
                    perm_sign = -perm_sign
        val = f.get(srt, ZERO)
        return val if perm_sign == 1 else -val

    ok = all(lookup(*key) == val for key, val in expected.items())
    checks.append(
        Check(
            "f123 = 1; f147 = f165 = f246 = f257 = f345 = f376 = 1/2; f458 = f678 = sqrt3/2",
            "assert",
            ok,
            {"".join(map(str, k)): str(lookup(*k)) for k in sorted(expected)},
        )
    )

    decomp = gellmann_decompose()  # raises if any round-trip fails
    checks.append(Check("all 8 lambda decompositions round-trip exactly", "assert", True))

    claims = {row["lambda"]: row for row in lambda_combos_fixture()}
    rows = []
    all_match = True
    for entry in decomp:
        idx = entry["lambda"]
        claimed = claims[idx]["coeffs"]
        same = list(entry["coeffs"]) == list(claimed)
        all_match = all_match and same
        rows.append(
            {
                "lambda": idx,
                "matches_claim": same,
                "computed": [str(c) for c in entry["coeffs"]],
                "claimed": [str(c) for c in claimed],
                "note": claims[idx]["note"],
            }
        )
    checks.append(Check("computed combinations vs claimed combinations", "info", all_match, rows))
    return Section("su3", checks)


def _section_clifford() -> Section:
    checks: list[Check] = []
    checks.append(
        Check(
            "dimension 3^n by enumeration, n = 1..6",
            "assert",
            all(dimension(n) == 3**n for n in range(1, 7)),
        )
    )
    cens = degree_census(4)
    checks.append(
        Check(
            "degree census for four generators",
            "assert",
            cens == [1, 4, 10, 16, 19, 16, 10, 4, 1],
            cens,
        )
    )
    checks.append(
        Check(
            "census symmetry d <-> 2n-d, n = 1..6",
            "assert",
            all(degree_census(n) == degree_census(n)[::-1] for n in range(1, 7)),
        )
    )

    n = 4
    six_unit = unit(n).scale(rational(6))
    ok = True
    for k in range(n):
        for l in range(n):
            for m in range(n):
                s = s3_symmetric_sum(k, l, m, n)
                expected = six_unit if k == l == m else unit(n).scale(ZERO)
                if s != expected:
                    ok = False
    checks.append(Check("symmetric sum is 6*unit iff all indexes equal (n=4)", "assert", ok))

    detail = {}
    ok1 = ok2 = ok3 = True
    for k in range(n):
        for l in range(k + 1, n):
            v1 = weighted_identity_check(1, k, l, n)
            v2 = weighted_identity_check(2, k, l, n)
            v3 = weighted_identity_check(3, k, l, n)
            x = generator(n, k, 2) * generator(n, l)
            ok1 = ok1 and v1.is_zero()
            ok2 = ok2 and v2.is_zero()
            ok3 = ok3 and v3 == x.scale(rational(3) * j_pow(1))
            if (k, l) == (0, 1):
                detail = {
                    "kind1": str(v1),
                    "kind2": str(v2),
                    "kind3": str(v3),
                    "expected_kind3": str(x.scale(rational(3) * j_pow(1))),
                }
    checks.append(Check("weighted identity kind 1 vanishes", "assert", ok1))
    checks.append(Check("weighted identity kind 2 vanishes", "assert", ok2, detail))
    checks.append(Check("weighted identity kind 3 equals 3j q_k^2 q_l", "assert", ok3, detail))

    # abstract pair phase matches the unit-matrix pair phase on (1, 2):
    # q1 q2 = j * (q2 q1) in both algebras.
    ab = generator(2, 0) * generator(2, 1)
    ba = generator(2, 1) * generator(2, 0)
    omega = pair_phase_matrix(nonion_basis())[1][2]
    checks.append(
        Check(
            "abstract pair phase matches the matrix pair phase on (1,2)",
            "assert",
            ab == ba.scale(j_pow(omega)) and omega == 1,
        )
    )

    per_grade = {
        str(n): [
            sum(c for d, c in enumerate(degree_census(n)) if d % 3 == g) for g in range(3)
        ]
        for n in range(1, 7)
    }
    checks.append(
        Check(
            "grade-component dimensions are 3^(n-1) each",
            "assert",
            all(all(v == 3 ** (n - 1) for v in per_grade[str(n)]) for n in range(1, 7)),
            per_grade,
        )
    )
    return Section("clifford", checks)


_SECTION_BUILDERS = {
    "nonion-table": _section_nonion_table,
    "tu3-table": _section_tu3_table,
    "roots": _section_roots,
    "norm": _section_norm,
    "triple-product": _section_triple_product,
    "su3": _section_su3,
    "clifford": _section_clifford,
}


def run_verify(scope: str = "all", strict: bool = False) -> VerificationReport:
    """Run the selected verification suites and assemble the report.

    Fixture problems raise FixtureParseError before any section runs.
    """
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; choose from {', '.join(SCOPES)}")
    checksums = fixture_checksums()  # also validates presence/readability
    names = list(_SECTION_BUILDERS) if scope == "all" else [scope]
    sections = [_SECTION_BUILDERS[name]() for name in names]
    meta = {
        "package": f"nonion {__version__}",
        "python": ".".join(map(str, sys.version_info[:3])),
        "scope": scope,
        "fixture_checksums": checksums,
    }
    return VerificationReport(sections, strict, meta)


def render_markdown(report: VerificationReport) -> str:
    lines = ["# Verification report", ""]
    lines.append(f"overall: {'PASS' if report.passed() else 'FAIL'}")
    lines.append("")
    for s in report.sections:
        lines.append(f"## {s.name} - {s.status(report.strict)}")
        lines.append("")
        lines.append("| check | kind | ok |")
        lines.append("|---|---|---|")
        for c in s.checks:
            lines.append(f"| {c.name} | {c.kind} | {'yes' if c.ok else 'NO'} |")
        lines.append("")
        for c in s.checks:
            if c.detail is not None:
                lines.append(f"### {c.name}")
                lines.append("```json")
                lines.append(json.dumps(c.detail, indent=2, sort_keys=True, default=str))
                lines.append("```")
                lines.append("")
    lines.append("## meta")
    lines.append("```json")
    lines.append(json.dumps(report.meta, indent=2, sort_keys=True))
    lines.append("```")
    return "\n".join(lines) + "\n"


def emit_report(report: VerificationReport, fmt: str = "json", path: str | None = None) -> str:
    """Serialize the report (stable bytes) and optionally write it out."""
    if fmt == "json":
        text = json.dumps(report.to_json(), indent=2, sort_keys=True, default=str) + "\n"
    elif fmt == "md":
        text = render_markdown(report)
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    if path is not None:
        try:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise IOError(f"cannot write report to {path}: {exc}") from exc
    return text
