"""Acceptance criteria, one test and one pass/fail line per criterion.

Each criterion pins exact expected values and a runtime bound.  The
claim pipeline is run once per thread count at session scope; criteria
1 to 7 read the four-thread run, criterion 8 is a direct computation,
and criterion 9 compares the canonical reports byte for byte.
"""

import random
import time

import pytest

from heawood.verify import emit_report, run_groups

pytestmark = [pytest.mark.acceptance, pytest.mark.slow]

THREAD_COUNTS = (1, 4, 8)


@pytest.fixture(scope="session")
def reports():
    # family tier here: the full-tier sweeps are wall-clock budgeted, so
    # only the deterministic groups take part in the byte-identity check
    out = {}
    for threads in THREAD_COUNTS:
        claims = run_groups("all", threads=threads, tier="family")
        out[threads] = emit_report(claims)
    return out


@pytest.fixture(scope="session")
def claims(reports):
    return {c.id: c for c in reports[4].claims}


@pytest.fixture(scope="session")
def full_tier_claims():
    from heawood.verify import verify_move_images

    return {c.id: c for c in verify_move_images("full", threads=4)}


def group_runtime(claims, prefix):
    return sum(c.runtime for cid, c in claims.items() if cid.startswith(prefix))


def require(claims, cid):
    c = claims[cid]
    assert c.status == "pass", (
        f"{cid}: expected {c.expected!r}, observed {c.observed!r} "
        f"(status {c.status}, witnesses {list(c.witnesses)[:5]})"
    )


def test_criterion_1_family_counts(claims):
    for cid in (
        "families.ks-count",
        "families.heawood-count",
        "families.extra-count",
        "families.ks-subset",
        "families.sizes",
        "families.triangle-free-orders",
    ):
        require(claims, cid)
    assert group_runtime(claims, "families.") < 10


def test_criterion_2_catalog_counts(claims):
    for cid in (
        "catalogs.nonplanar-8-11",
        "catalogs.nonplanar-8-11-mindeg2",
        "catalogs.nonplanar-7-10",
        "catalogs.nonplanar-7-11",
        "catalogs.nonplanar-cubic-8",
        "catalogs.split-exception",
        # the published count of triangle-free (7,5) classes with an
        # isolated vertex and max degree 4 is 7; exhaustive recomputation
        # by two independent methods gives 8 (the companion derived
        # claim catalogs.triangle-free-7-5-exhaustive pins that value),
        # so this line is expected to fail until the published count is
        # corrected
        "catalogs.triangle-free-7-5",
    ):
        require(claims, cid)
    require(claims, "catalogs.triangle-free-7-5-exhaustive")
    assert group_runtime(claims, "catalogs.") < 120


def test_criterion_3_order_14_theorem(claims):
    for cid in (
        "order14.corpus-count",
        "order14.n2a-count",
        "order14.survivor-is-c14",
        "order14.survivor-triangle-free",
    ):
        require(claims, cid)
    assert group_runtime(claims, "order14.") < 900


@pytest.mark.parametrize("order", (10, 11, 12, 13))
def test_criterion_4_order_sweeps(claims, order):
    # budget overruns surface as skipped, which is incomplete, not red;
    # a fail status here is a genuine counterexample
    group = {c for c in claims if c.startswith(f"order{order}.")}
    assert group, f"no claims for order {order}"
    for cid in group:
        c = claims[cid]
        assert c.status != "fail", (
            f"{cid}: expected {c.expected!r}, observed {c.observed!r}"
        )
    assert group_runtime(claims, f"order{order}.") < 7200


def test_criterion_5_mmn2a(claims):
    for cid in (
        "mmn2a.family-count",
        "mmn2a.c14-one-step-minors",
        "mmn2a.k7-one-step-minors",
    ):
        require(claims, cid)
    assert group_runtime(claims, "mmn2a.") < 300


def test_criterion_6_move_images(claims):
    require(claims, "move-images.family-n2a-violations")
    require(claims, "move-images.family-closed")
    assert (
        claims["move-images.family-n2a-violations"].runtime
        + claims["move-images.family-closed"].runtime
        < 60
    )

def test_criterion_6_move_images_full_tier(full_tier_claims):
    # budgeted: skipped is acceptable, fail is not
    for order in (8, 9, 10):
        cid = f"move-images.full-counterexamples-order{order}"
        c = full_tier_claims[cid]
        assert c.status != "fail", c.observed
    assert full_tier_claims["move-images.order9-identity"].status != "fail"


def test_criterion_7_lemma_sweeps(claims):
    for cid in (
        "sweeps.split-recognizer",
        "sweeps.blocked-attachment-implies-1-apex",
        "sweeps.extension-classification",
        "sweeps.deg4-form-recomputation",
    ):
        require(claims, cid)
    assert group_runtime(claims, "sweeps.") < 1800


def test_criterion_8_planarity_oracle_equivalence():
    from heawood.enumeration import EnumSpec, enumerate_graphs
    from heawood.planarity import is_planar, minor_free_check

    t0 = time.monotonic()
    census7 = enumerate_graphs(EnumSpec(order=7))
    assert len(census7) == 1044
    small = [
        g
        for n in range(1, 7)
        for g in enumerate_graphs(EnumSpec(order=n))
    ]
    for g in small + census7:
        assert is_planar(g) == minor_free_check(g), g
    rng = random.Random(2026)
    for _ in range(10_000):
        n = rng.randint(8, 10)
        p = rng.choice([0.2, 0.3, 0.4, 0.5])
        adj = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        from heawood.graph import Graph

        g = Graph(n, adj)
        assert is_planar(g) == minor_free_check(g), g
    assert time.monotonic() - t0 < 300


def test_criterion_9_determinism_across_threads(reports):
    canon = {t: reports[t].canonical_json() for t in THREAD_COUNTS}
    assert canon[1] == canon[4] == canon[8]
