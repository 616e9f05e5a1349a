"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line, printed in the "acceptance criteria"
section of the pytest summary.
"""

import json
import time
from math import comb

import numpy as np
import pytest

import oracles
from conftest import ACCEPTANCE_RESULTS
from hyperkonig import (
    affine_lines_family,
    bipartition,
    cofinite_family,
    covering_number,
    cycle_graph,
    exact_transversal,
    explore,
    has_konig,
    has_weak_konig,
    induced,
    is_bipartite,
    large_subsets_family,
    max_matching,
    minimal_non_cp_core,
    minimal_nonbipartite_core,
    new_hypergraph,
    random_hypergraph,
    verify_bipartition,
)
from hyperkonig.cli import run
from hyperkonig.formats import emit_instance
from hyperkonig.heritability import enumerate_subsets


def record(name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    ACCEPTANCE_RESULTS[name] = (status, detail)
    print(f"[{status}] {name} {detail}")
    assert ok, f"{name}: {detail}"


def make_corpus(count=1000, seed=2024):
    """Seeded hypergraphs with at most 8 vertices and at most 8 edges."""
    rng = np.random.default_rng(seed)
    corpus = []
    for i in range(count):
        n = int(rng.integers(1, 9))
        arity = int(rng.integers(1, n + 1))
        available = sum(comb(n, k) for k in range(1, arity + 1))
        m = min(int(rng.integers(0, 9)), available)
        corpus.append(random_hypergraph(n, m, arity, seed=i))
    return corpus


@pytest.fixture(scope="module")
def corpus():
    return make_corpus()


@pytest.fixture(scope="module")
def solved(corpus):
    out = []
    for H in corpus:
        size, matching, _ = max_matching(H)
        cover, _ = covering_number(H)
        out.append(
            {
                "matching": size,
                "nu": cover.nu,
                "bipartition": bipartition(H),
                "transversal": exact_transversal(H),
                "konig": has_konig(H),
            }
        )
    return out


def random_graph(rng, n, p):
    return new_hypergraph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def test_01_oracle_equivalence(corpus):
    t0 = time.perf_counter()
    mismatches = 0
    for H in corpus:
        size, _, _ = max_matching(H)
        nu = covering_number(H)[0].nu
        mismatches += size != oracles.max_matching_size(H)
        mismatches += nu != oracles.covering_number(H)
        mismatches += (bipartition(H) is not None) != oracles.has_bipartition(H)
        mismatches += (exact_transversal(H) is not None) != oracles.has_exact_transversal(H)
    elapsed = time.perf_counter() - t0
    record(
        "1. oracle equivalence",
        len(corpus) >= 1000 and mismatches == 0 and elapsed < 120,
        f"{len(corpus)} instances, {mismatches} mismatches, {elapsed:.1f}s",
    )


def test_02_matching_at_most_nu(corpus, solved):
    bad = sum(r["matching"] > r["nu"] for r in solved)
    record("2. matching size <= nu", bad == 0, f"{bad} violations over {len(corpus)}")


def test_03_konig_implies_weak(solved):
    holds = [r for r in solved if r["konig"][0]]
    bad = sum(r["matching"] != r["nu"] for r in holds)
    record("3. Konig implies weak Konig", bad == 0, f"{len(holds)} Konig instances, {bad} violations")


def test_04_graph_equivalence():
    rng = np.random.default_rng(404)
    bad = 0
    checked_optima = 0
    for _ in range(500):
        n = int(rng.integers(2, 11))
        G = random_graph(rng, n, float(rng.uniform(0.1, 0.6)))
        weak = has_weak_konig(G)[0]
        strong = has_konig(G)[0]
        bad += weak != strong
        if weak:
            for C in oracles.minimum_covers(G):
                C = set(C)
                for M in oracles.maximum_matchings(G):
                    checked_optima += 1
                    bad += any(len(C & set(G.edges[i])) != 1 for i in M)
    record("4. graphs: weak <=> Konig, exact intersection", bad == 0,
           f"500 graphs, {checked_optima} (cover, matching) pairs, {bad} violations")


def test_05_konig_theorem_bipartite():
    rng = np.random.default_rng(505)
    bad = 0
    for _ in range(500):
        a = int(rng.integers(1, 7))
        b = int(rng.integers(1, 7))
        p = float(rng.uniform(0.1, 0.8))
        edges = [(i, a + j) for i in range(a) for j in range(b) if rng.random() < p]
        G = new_hypergraph(a + b, edges)
        size = max_matching(G)[0]
        nu = covering_number(G)[0].nu
        bad += size != nu or size != oracles.max_matching_size(G) or not is_bipartite(G)[0]
    record("5. Konig's theorem on bipartite graphs", bad == 0, f"500 graphs, {bad} violations")


def test_06_cofinite_reproduction():
    t0 = time.perf_counter()
    H = cofinite_family(12, 1)
    r = explore(H, "konig", 5)
    size = max_matching(H)[0]
    nu = covering_number(H)[0].nu
    elapsed = time.perf_counter() - t0
    ok = (r.mode == "exhaustive" and r.all_small_hold and not r.whole_holds
          and size == 1 and nu == 2 and elapsed < 30)
    record("6. cofinite family: small subfamilies Konig, whole not", ok,
           f"{r.subsets_checked} subsets, matching {size}, nu {nu}, {elapsed:.1f}s")


def test_07_large_subsets_reproduction():
    H = large_subsets_family(8, 4)
    r = explore(H, "bipartite", 3, budget=10**6)
    bad_minima = 0
    for t in enumerate_subsets(H.edge_count, 3):
        sub = induced(H, t)[0]
        bad_minima += not verify_bipartition(sub, {min(H.edges[i]) for i in t})
    ok = r.mode == "exhaustive" and r.all_small_hold and not r.whole_holds and bad_minima == 0
    record("7. large subsets: small subfamilies bipartite, whole not", ok,
           f"{r.subsets_checked} subsets, {bad_minima} minima failures")


def test_08_affine_cp_reproduction():
    r = explore(affine_lines_family(3), "cp", 3)
    ok = r.mode == "exhaustive" and r.all_small_hold and not r.whole_holds
    record("8. affine plane: small subfamilies CP, whole not", ok, f"{r.subsets_checked} subsets")


def _one_minimal(H, core, bad):
    if core is None or not bad(induced(H, core)[0]):
        return False
    return all(
        not bad(induced(H, [j for j in core.indices if j != i])[0]) for i in core.indices
    )


def test_09_witness_minimality():
    c5 = minimal_nonbipartite_core(cycle_graph(5))
    L = large_subsets_family(8, 4)
    A = affine_lines_family(3)
    ok_c5 = c5 is not None and c5.indices == (0, 1, 2, 3, 4)
    ok_l = _one_minimal(L, minimal_nonbipartite_core(L), lambda G: not oracles.has_bipartition(G))
    core_a = minimal_non_cp_core(A)
    ok_a = _one_minimal(A, core_a, lambda G: not oracles.has_exact_transversal(G))
    record("9. 1-minimal failure cores", ok_c5 and ok_l and ok_a,
           f"C5 {ok_c5}, large subsets {ok_l}, affine core size {len(core_a)} {ok_a}")


def _independent_verdict(H, doc):
    """Re-check a certificate document with the brute-force helpers only."""
    n, edges = H.vertex_count, [set(e) for e in H.edges]

    def vertices_ok(vs):
        return len(set(vs)) == len(vs) and all(0 <= v < n for v in vs)

    def indices_ok(ix):
        return len(set(ix)) == len(ix) and all(0 <= i < len(edges) for i in ix)

    kind = doc["kind"]
    if kind == "konig":
        return (vertices_ok(doc["cover"]) and indices_ok(doc["matching"])
                and oracles.is_konig_certificate(H, doc["matching"], doc["cover"]))
    if kind == "weak_konig":
        return (vertices_ok(doc["cover"]) and indices_ok(doc["matching"])
                and oracles.is_matching(edges, doc["matching"])
                and oracles.is_cover(edges, doc["cover"])
                and len(doc["matching"]) == len(doc["cover"]) == doc["nu"])
    if kind == "bipartition":
        return vertices_ok(doc["side"]) and oracles.is_bipartition(H, doc["side"])
    return vertices_ok(doc["choice"]) and oracles.is_exact_transversal(H, doc["choice"])


def _vertex_field(doc):
    return {"konig": "cover", "weak_konig": "cover", "bipartition": "side"}.get(doc["kind"], "choice")


def test_10_certificate_round_trip(corpus, tmp_path, capsys):
    emitted = verified = broken_rejected = toggles = 0
    failures = []
    for k, H in enumerate(corpus):
        inst = tmp_path / f"h{k}.hg"
        inst.write_text(emit_instance(H))
        for prop in ("konig", "weak-konig", "bipartite", "cp"):
            cert = tmp_path / f"h{k}-{prop}.json"
            code = run(["check", prop, str(inst), "--certificate", str(cert)])
            if code != 0:
                continue
            emitted += 1
            if run(["verify", str(inst), str(cert)]) == 0:
                verified += 1
            else:
                failures.append((k, prop, "emitted certificate rejected"))
            doc = json.loads(cert.read_text())
            field = _vertex_field(doc)
            # perturbation 1: one vertex moved out of range, always invalid
            broken = dict(doc)
            broken[field] = (doc[field][:-1] + [H.vertex_count]) if doc[field] else [H.vertex_count]
            bad = tmp_path / "broken.json"
            bad.write_text(json.dumps(broken))
            if run(["verify", str(inst), str(bad)]) == 1:
                broken_rejected += 1
            else:
                failures.append((k, prop, "out-of-range perturbation accepted"))
            # perturbation 2: toggle vertex 0; the verdict must match the brute-force check
            toggled = dict(doc)
            vs = set(doc[field]) ^ {0}
            toggled[field] = sorted(vs)
            bad.write_text(json.dumps(toggled))
            expect = 0 if _independent_verdict(H, toggled) else 1
            toggles += 1
            if run(["verify", str(inst), str(bad)]) != expect:
                failures.append((k, prop, "toggle verdict disagrees with brute force"))
    capsys.readouterr()
    ok = not failures and emitted == verified == broken_rejected
    record("10. certificate round-trip and mutation", ok,
           f"{emitted} certificates, {verified} verified, {broken_rejected} perturbed rejected, "
           f"{toggles} toggles cross-checked, failures {failures[:3]}")


def test_11_determinism(tmp_path, capsys):
    outputs = []
    for _ in range(2):
        run_out = []
        f = tmp_path / "r.hg"
        run(["generate", "random", "8", "12", "4", "99", "-o", str(f)])
        run_out.append(f.read_bytes())
        run(["explore", "bipartite", str(f), "--max-subset-size", "6", "--budget", "300",
             "--seed", "5", "--json"])
        run(["solve", "cover", str(f), "--json"])
        run(["witness", "cp", str(f), "--json"])
        run_out.append(capsys.readouterr().out.encode())
        outputs.append(run_out)
    sampled = json.loads(outputs[0][1].decode().splitlines()[0])["mode"] == "sampled"
    record("11. seeded runs byte-identical", outputs[0] == outputs[1] and sampled,
           f"sampled mode exercised: {sampled}")


def test_12_konig_without_bipartiteness():
    # a1..a3 = 0..2, b1..b3 = 3..5
    H = new_hypergraph(6, [{0, 3}, {1, 4}, {2, 5}, {0, 1}, {1, 2}, {0, 2}])
    konig, cert = has_konig(H)
    bip, _ = is_bipartite(H)
    ok = konig and not bip and oracles.has_konig(H) and not oracles.has_bipartition(H)
    # documented finding: Konig's Property (strict reading) does not force bipartiteness
    record("12. open-question probe: Konig holds, not bipartite", ok,
           f"has_konig={konig} cover={cert.cover if cert else None} is_bipartite={bip}")
