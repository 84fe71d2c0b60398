"""Acceptance criteria 1-8.  Every comparison is exact; each test prints one PASS/FAIL line."""

import random

from sharpknot.bounds import (
    bennequin_bound,
    fingerprint_trivial,
    nonalternating_certificate,
    theorem1_threshold,
    theorem2_equality,
    u_sharp_bounds,
)
from sharpknot.diagram import BraidWord, braid_closure, mirror, parse_braid, seifert_genus_upper, stats
from sharpknot.moves import positive_sharp_braid, simplify
from sharpknot.polynomials import jones
from sharpknot.signature import sigma_upper_after_sharps, signature_goeritz, signature_seifert_oracle
from sharpknot.table import default_table_path, identify, load_table

from .conftest import ACCEPTANCE_LINES, random_knot_braid
from .test_polynomials import _markov_move


def report(n: int, title: str, ok: bool, detail: str):
    line = f"ACCEPTANCE {n} [{title}]: {'PASS' if ok else 'FAIL'} - {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def sharp_once(b: BraidWord) -> BraidWord:
    out, _ = positive_sharp_braid(b, 1, len(b.letters))
    return out


def stabilize_to(b: BraidWord, k: int) -> BraidWord:
    # positive stabilization adds one crossing and one Seifert circle, so 1 + w - O and c - O are kept
    letters = list(b.letters)
    strands = b.strands
    while strands < k:
        letters.append(strands)
        strands += 1
    return BraidWord(tuple(letters), strands)


def test_criterion_1_cable():
    b = parse_braid("-1 2 1 3 2")
    d = braid_closure(b)
    s0, sb0 = stats(d), bennequin_bound(d)
    before = (s0.writhe, s0.seifert_circles, sb0.lower, jones(d).polynomial == 1)
    d1 = braid_closure(sharp_once(b))
    s1, sb1 = stats(d1), bennequin_bound(d1)
    sigma = signature_goeritz(d1)
    cert = nonalternating_certificate(d1, sigma)
    bounds = u_sharp_bounds(sb1, sigma, 1)
    eq = theorem2_equality(bounds, sb1, sigma, fingerprint_trivial(d1))
    after = (s1.writhe, s1.seifert_circles, sb1.lower)
    ok = (
        before == (3, 4, 0, True)
        and after == (11, 4, 8)
        and cert.verdict
        and bounds.u_sharp_lower == bounds.u_sharp_upper == 1
        and eq.verdict
        and eq.value("u") == 4
    )
    report(1, "-1 2 1 3 2 plus one move", ok,
           f"before w,O,B,V=1: {before}; after w,O,B: {after}; non-alternating {cert.verdict}; "
           f"u# in [{bounds.u_sharp_lower},{bounds.u_sharp_upper}]; u = {eq.quantities.get('u', {}).get('value')}")


def test_criterion_2_staircase():
    b = parse_braid("1 2 3")
    d = braid_closure(b)
    unknot = fingerprint_trivial(d)
    d1 = braid_closure(sharp_once(b))
    s1, sb1 = stats(d1), bennequin_bound(d1)
    simplified = simplify(d1)
    table = load_table(default_table_path())
    matches = identify(simplified, table)
    entry = next(e for e in table if e.name == "10_139")
    fp = jones(simplified)
    sigma = signature_goeritz(simplified)
    same = (fp.polynomial, fp.determinant, sigma.sigma) == entry.key() or \
        (fp.polynomial, fp.determinant, sigma.sigma) == entry.mirror_key()
    bounds = u_sharp_bounds(sb1, sigma, 1)
    ok = (
        unknot
        and (s1.writhe, s1.seifert_circles, sb1.lower) == (11, 4, 8)
        and [m.name for m in matches] == ["10_139"]
        and same
        and bounds.u_sharp_lower == bounds.u_sharp_upper == 1
        and bounds.u_upper == 4
    )
    report(2, "1 2 3 plus one move", ok,
           f"input unknot {unknot}; after w,O,B: {(s1.writhe, s1.seifert_circles, sb1.lower)}; "
           f"matches {[m.as_dict() for m in matches]}; u# = {bounds.u_sharp_lower}, u_upper = {bounds.u_upper}")


def test_criterion_3_theorem1_chain():
    rng = random.Random(3)
    failures = []
    cases = 0
    while cases < 200:
        b = random_knot_braid(rng, 8, 5)
        d0 = braid_closure(b)
        if not d0.is_connected():
            continue
        b4 = stabilize_to(b, 4)
        d = braid_closure(b4)
        g = seifert_genus_upper(d)
        assert g == seifert_genus_upper(d0) and bennequin_bound(d).lower == bennequin_bound(d0).lower
        n = theorem1_threshold(d, g)
        out = b4
        for _ in range(n):
            out = sharp_once(out)
        d_out = braid_closure(out)
        lhs, rhs = bennequin_bound(d_out).lower, sigma_upper_after_sharps(2 * g, n)
        if not (lhs > rhs and nonalternating_certificate(d_out).verdict):
            failures.append((b, n, lhs, rhs))
        cases += 1
    report(3, "threshold chain", not failures, f"{cases} random knot braids, {len(failures)} failures {failures[:3]}")


def test_criterion_4_signature_oracle():
    rng = random.Random(4)
    mismatches, mirror_bad = [], []
    cases = 0
    while cases < 520:
        b = random_knot_braid(rng, 9, 5)
        d = braid_closure(b)
        g = signature_goeritz(d)
        if g != signature_seifert_oracle(b):
            mismatches.append(b)
        if signature_goeritz(mirror(d)).sigma != -g.sigma:
            mirror_bad.append(b)
        cases += 1
    ok = not mismatches and not mirror_bad
    report(4, "signature oracle", ok,
           f"{cases} knot closures (<= 9 crossings); Goeritz/Seifert mismatches {len(mismatches)}; "
           f"mirror failures {len(mirror_bad)}")


def test_criterion_5_jones_invariance():
    seeds = 10
    bad = []
    for seed in range(seeds):
        rng = random.Random(500 + seed)
        base = random_knot_braid(rng, 8, 4)
        d = braid_closure(base)
        fp = jones(d)
        if jones(simplify(d)) != fp:
            bad.append((seed, "simplify"))
        for k in range(100):
            b = base
            for _ in range(rng.randint(1, 4)):
                b = _markov_move(b, rng)
            dd = braid_closure(b)
            if jones(dd) != fp or jones(simplify(dd)) != fp:
                bad.append((seed, k))
    report(5, "Jones invariance", not bad, f"{seeds} seeds x 100 Markov perturbations + simplify; {len(bad)} changes")


def test_criterion_6_alternating_consistency():
    table = load_table(default_table_path())
    alternating = [e for e in table if e.alternating_diagram]
    fired = []
    for e in alternating:
        if bennequin_bound(e.pd).lower > e.sigma.sigma or nonalternating_certificate(e.pd).verdict:
            fired.append(e.name)
    ok = bool(alternating) and not fired
    report(6, "alternating consistency", ok,
           f"alternating entries {[e.name for e in alternating]}; certificate fired on {fired}")


def test_criterion_7_positive_exactness():
    rng = random.Random(7)
    bad = []
    cases = 0
    while cases < 100:
        b = random_knot_braid(rng, 12, 5, positive=True)
        d = braid_closure(b)
        if not d.is_connected():
            continue
        sb = bennequin_bound(d)
        if not (sb.exact and sb.lower == 2 * seifert_genus_upper(d)):
            bad.append(b)
        cases += 1
    report(7, "positive exactness", not bad, f"{cases} positive knot braids, {len(bad)} failures")


def test_criterion_8_torus_knots():
    rows = []
    ok = True
    for (p, q), word in {(2, 3): "1 1 1", (2, 5): "1 1 1 1 1", (3, 4): "1 2 1 2 1 2 1 2"}.items():
        d = braid_closure(parse_braid(word))
        sb = bennequin_bound(d)
        bounds = u_sharp_bounds(sb, signature_goeritz(d))
        expected = (p - 1) * (q - 1)
        good = sb.exact and sb.lower == expected and bounds.u_lower * 2 == sb.lower
        ok = ok and good
        rows.append(f"T({p},{q}): s={sb.lower} exact={sb.exact} u_lower={bounds.u_lower}")
    report(8, "torus knots", ok, "; ".join(rows))
