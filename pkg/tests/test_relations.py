import golden_g2 as gold

from walgebra.rational import QQ
from walgebra.relations import ThetaRewriter
from walgebra.uea import kazhdan_degree


def test_golden_relations(g2_short):
    pres = g2_short.presentation
    nonzero = {(i + 1, j + 1): p
               for (i, j), p in pres.relations.items() if p}
    assert set(nonzero) == set(gold.GOLDEN_RELATIONS)
    for (i, j), pairs in gold.GOLDEN_RELATIONS.items():
        expected = gold.relation_to_our_convention(i, j, pairs)
        assert nonzero[(i, j)] == expected, f"F_{i}{j}"


def test_omitted_pairs_are_zero(g2_short):
    pres = g2_short.presentation
    golden_pairs = set(gold.GOLDEN_RELATIONS)
    for (i, j), p in pres.relations.items():
        if (i + 1, j + 1) not in golden_pairs:
            assert p == {}, f"F_{i + 1}{j + 1} should vanish"


def test_intermediate_commutator_theta3_theta5(g2_short):
    Q = g2_short.Q
    t3 = g2_short.thetas[2].element
    t5 = g2_short.thetas[4].element
    comm = Q.commutator(t3, t5)
    expected = {}
    for exps, c in gold.GOLDEN_COMM_35:
        mono = [0] * 14
        sign = 1
        for k, e in exps.items():
            mono[k - 1] = e
            sign *= gold.EPS_X[k - 1] ** e
        # dictionary factor for [Theta_3, Theta_5] itself
        sign *= gold.EPS_X[2] * gold.EPS_X[4]
        expected[tuple(mono)] = c * sign
    assert comm == expected


def test_relations_round_trip(g2_short):
    """Evaluating each F_ij at the Theta's must reproduce the reduced
    commutator."""
    Q = g2_short.Q
    pres = g2_short.presentation
    rewriter = ThetaRewriter(Q, pres.thetas)
    for (i, j), p in pres.relations.items():
        comm = Q.commutator(pres.thetas[i].element, pres.thetas[j].element)
        value = {}
        for exps, c in p.items():
            prod = rewriter.theta_product(exps + (0,) * (Q.gb.n - Q.gb.r))
            for m, cm in prod.items():
                v = value.get(m, QQ(0)) + c * cm
                if v:
                    value[m] = v
                elif m in value:
                    del value[m]
        assert value == comm, f"F_{i + 1}{j + 1} round trip"


def test_kazhdan_bound_on_relations(g2_short):
    gb = g2_short.gb
    w = gb.kazhdan_weights
    for (i, j), p in g2_short.presentation.relations.items():
        for exps in p:
            deg = sum(e * w[k] for k, e in enumerate(exps))
            assert deg <= w[i] + w[j] - 2, \
                f"F_{i + 1}{j + 1} monomial too deep"


def test_weight_balance_on_relations(g2_short):
    gb = g2_short.gb
    for (i, j), p in g2_short.presentation.relations.items():
        target = tuple(x + y for x, y in zip(gb.beta[i], gb.beta[j]))
        for exps in p:
            beta = [QQ(0)] * len(target)
            for k, e in enumerate(exps):
                for c in range(len(beta)):
                    beta[c] += e * gb.beta[k][c]
            assert tuple(beta) == target, f"F_{i + 1}{j + 1} unbalanced"


def test_commutator_degree_bound(g2_short):
    Q = g2_short.Q
    w = Q.weights
    pres = g2_short.presentation
    for (i, j) in pres.relations:
        comm = Q.commutator(pres.thetas[i].element, pres.thetas[j].element)
        deg = kazhdan_degree(comm, w)
        assert deg is None or deg <= w[i] + w[j] - 2


def test_minimal_prefix_presentation_is_consistent():
    """The default (b = 5) route must give the same relation values on
    its own generators: antisymmetric, weight balanced, round-tripping."""
    from walgebra.report import run_pipeline
    res = run_pipeline("G", 2, labels=(1, 0))
    Q, pres = res.Q, res.presentation
    rewriter = ThetaRewriter(Q, pres.thetas)
    for (i, j), p in pres.relations.items():
        comm = Q.commutator(pres.thetas[i].element, pres.thetas[j].element)
        value = {}
        for exps, c in p.items():
            prod = rewriter.theta_product(exps + (0,) * (Q.gb.n - Q.gb.r))
            for m, cm in prod.items():
                v = value.get(m, QQ(0)) + c * cm
                if v:
                    value[m] = v
                elif m in value:
                    del value[m]
        assert value == comm
