"""Acceptance criteria 1-9, each printing one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v -s`` or
``python tests/test_acceptance.py``.
"""
import random
import time
from functools import lru_cache

from char2sl.bilinear import are_congruent_proj, diagonalize_congruence, is_alternate, symplectic_normalize
from char2sl.fields import parse_field
from char2sl.fixed_points import check_additive_model, enumerate_fixed_group, predicate_set, verify_unipotent_model
from char2sl.involutions import Automorphism, LType, make_J, make_L_mc
from char2sl.matrix import Matrix, are_conjugate
from char2sl.oracle import INNER_CASES, check_b1, fixed_three_way, involution_census, thm_ab_sampling
from char2sl.smallfield import context, group
from char2sl.variety import audit_formula_n2

RESULTS = []


def report(num, title, ok, seconds, limit, detail=""):
    ok = bool(ok) and seconds < limit
    line = f"criterion {num} {'PASS' if ok else 'FAIL'}: {title} [{seconds:.2f}s < {limit}s]"
    if detail:
        line += f" ({detail})"
    RESULTS.append(line)
    print(line)
    return ok


@lru_cache(maxsize=None)
def census(desc, n, outer=False):
    return involution_census(parse_field(desc), n, outer=outer)


def test_criterion_1_square_classes():
    t0 = time.perf_counter()
    ok = True
    for r in range(1, 9):
        F = parse_field("gf2" if r == 1 else f"gf2e:r={r}")
        ok &= all(a.is_square() and (a * a).sqrt() == a and a.sqrt() * a.sqrt() == a for a in F.nonzero_elements())
    K = parse_field("ratfunc:q=2")
    x = K.x
    ns = [x, x ** 3 + 1, x ** 5 + 1]
    reps = {a.square_class_rep() for a in ns}
    distinct = len(reps) == 3 and all(not (a / b).is_square() for a in ns for b in ns if a != b)
    ok &= distinct and not any(a.is_square() for a in ns)
    assert report(1, "square classes in GF(2^r) and F_2(x)", ok, time.perf_counter() - t0, 5)


def test_criterion_2_n2_census_gf2():
    t0 = time.perf_counter()
    c = involution_census(parse_field("gf2"), 2)
    ctx = context(parse_field("gf2"), 2)
    mats = [ctx.decode(x) for x in group(parse_field("gf2"), 2, "GL")[0]]
    invs = [M for M in mats if (M @ M).is_scalar() and not M.is_scalar()]
    pairwise = all(are_conjugate(a, b)[0] for a in invs for b in invs)
    ok = c.involution_count == 3 and len(invs) == 3 and pairwise and c.inner_class_count == 1
    assert report(2, "n=2 over F_2: 3 involutions, 1 class", ok, time.perf_counter() - t0, 1,
                  f"{c.involution_count} involutions, {c.inner_class_count} class")


def test_criterion_3_thm_ab_sampling():
    t0 = time.perf_counter()
    mism, pos = thm_ab_sampling(random.Random(2024), pairs=200, max_deg=6)
    assert report(3, "isomorphic iff r/s square, 200 pairs over F_2(x)", not mism and pos > 0,
                  time.perf_counter() - t0, 30, f"{len(mism)} mismatches, {pos} verified witnesses")


def test_criterion_4_inner_vs_oracle():
    t0 = time.perf_counter()
    ok = True
    details = []
    for n, desc in INNER_CASES:
        c = census(desc, n)
        good = c.inner_partition_ok and c.inner_labels_match and c.inner_class_count == n // 2
        ok &= good
        details.append(f"({n},{parse_field(desc).order}): {c.inner_class_count}")
    verdict = census("gf2", 4).ln2p_verdict
    assert report(4, "classify_inner labels = projective-conjugacy orbits", ok, time.perf_counter() - t0, 300,
                  "; ".join(details) + f"; n=4 verdict: {verdict}")


def test_criterion_5_outer_vs_oracle():
    t0 = time.perf_counter()
    ok = True
    counts = {}
    for n in (3, 4):
        c = census("gf2", n, outer=True)
        ok &= c.outer_involution_rule_ok and c.outer_partition_ok and c.outer_labels_match
        counts[n] = sorted(type(k.label).__name__ for k in c.outer_classes)
    ok &= counts[4] == ["OuterAlternate", "OuterDiagonal"] and counts[3] == ["OuterDiagonal"]
    assert report(5, "outer: symmetric iff involution; congruence orbits = labels", ok, time.perf_counter() - t0, 120,
                  f"classes n=3 {counts[3]}, n=4 {counts[4]}")


def test_criterion_6_canonical_identities():
    t0 = time.perf_counter()
    F2 = parse_field("gf2")
    ok = True
    calls = 0
    for n in (3, 4):
        ctx = context(F2, n)
        for s in group(F2, n, "sym")[0]:
            A = ctx.decode(s)
            if is_alternate(A):
                Q = symplectic_normalize(A)
                ok &= Q.T @ A @ Q == make_J(F2, n)
            else:
                Q, D = diagonalize_congruence(A)
                ok &= Q.T @ A @ Q == D
            calls += 1
    K = parse_field("ratfunc:q=2")
    rng = random.Random(6)
    for _ in range(20):
        A = Matrix.diag(K, [K.random_element(rng, max_deg=2, nonzero=True) for _ in range(3)])
        Q = Matrix.elementary(K, 3, 0, 2, K.random_element(rng)) @ Matrix.elementary(K, 3, 1, 0, K.random_element(rng))
        B = Q.T @ A @ Q * K.x
        res, (Q2, p) = are_congruent_proj(A, B)
        ok &= res and Q2.T @ A @ Q2 == B * p
        calls += 1
    bad, count = check_b1(parse_field("gf2e:r=2"), 6, 3)
    ok &= not bad
    assert report(6, "Q^T A Q = D / J / pB witnesses and U L U = cB", ok, time.perf_counter() - t0, 10,
                  f"{calls} witness calls, {count} B1 cases")


def test_criterion_7_fixed_point_structure():
    t0 = time.perf_counter()
    failures = []
    for r in (1, 2, 3):
        F = parse_field("gf2" if r == 1 else f"gf2e:r={r}")
        rep = enumerate_fixed_group(Automorphism.inner(make_L_mc(F, 2, 1, 1)), label=LType(1))
        if not (rep.order == F.order and sorted(rep.encoded) == predicate_set(LType(1), F, 2)
                and rep.abelian and rep.all_unipotent and check_additive_model(F, rep.elements)
                and verify_unipotent_model(F.one, F)):
            failures.append(f"n=2 q={F.order}")
    F2 = parse_field("gf2")
    for n in (3, 4):
        cases = [("inner", make_L_mc(F2, n, m, 1), f"L m={m}") for m in range(1, n // 2 + 1)]
        cases.append(("outer", Matrix.identity(F2, n), "outer Id"))
        if n % 2 == 0:
            cases.append(("outer", make_J(F2, n), "outer J"))
        for parity, A, name in cases:
            by_action, by_pred, rep = fixed_three_way(F2, n, A, parity)
            if not (by_action == sorted(rep.encoded) == by_pred):
                failures.append(f"n={n} {name}: enumerated {rep.order}, described {len(by_pred)}")
    assert report(7, "fixed-point groups: is_fixed = description = enumeration", not failures,
                  time.perf_counter() - t0, 180, "; ".join(failures) or "all cases agree")


def test_criterion_8_semisimplicity_audit():
    t0 = time.perf_counter()
    formula_ok = True
    minpoly_fail = []
    boundary = 0
    for desc in ("gf2", "gf2e:r=2"):
        F = parse_field(desc)
        for p in F.nonzero_elements():
            au = audit_formula_n2(F, p)
            formula_ok &= au.formula_ok
            boundary += len(au.scalar_exceptions)
            if not au.minpoly_ok:
                minpoly_fail.append(f"{desc} p={F.format_element(p)}: {len(au.minpoly_failures)}/{au.checked}")
    detail = f"formula agrees on non-scalar V: {formula_ok}; scalar exceptions listed: {boundary}; "
    detail += "candidate M_X fails to annihilate: " + ("; ".join(minpoly_fail) if minpoly_fail else "none")
    assert report(8, "n=2 semisimplicity formula and candidate M_X", formula_ok and not minpoly_fail,
                  time.perf_counter() - t0, 60, detail)


def test_criterion_9_never_semisimple():
    t0 = time.perf_counter()
    exceptions = 0
    total = 0
    for n, desc in INNER_CASES:
        c = census(desc, n)
        exceptions += len(c.semisimple_exceptions)
        total += c.involution_count
    assert report(9, "inner involution matrices are never semisimple", exceptions == 0, time.perf_counter() - t0,
                  300, f"{total} matrices, {exceptions} exceptions")


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
