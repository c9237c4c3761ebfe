import random
from fractions import Fraction as F

import pytest

from sigcalc.ordinal import ord_parse
from sigcalc.normalizer import materialize
from sigcalc.signature import ONE_SIG, Signature, sig_star, sig_sum
from sigcalc.realization import (
    WreathSplitError,
    canonical_bump,
    conj_map,
    dom_witness,
    fig_bz_set,
    fig_g_set,
    pl_eval,
    pred_C,
    pred_D,
    pred_T,
    predicates,
    realize,
    retrofit_slopes,
    wreath_witness,
)

one = ONE_SIG


def test_pl_eval_identity():
    fns = realize(sig_star(one, one))
    assert pl_eval(fns, []).is_identity
    assert pl_eval(fns, [(0, 1), (0, -1)]).is_identity
    assert pl_eval(fns, [(0, 2)]) == fns[0].map.then(fns[0].map)


def test_support_transforms_under_conjugation():
    fns = realize(sig_star(one, one))
    g, h = fns[0].map, fns[1].map
    conj = conj_map(g, h)
    u, v = g.support_hull()
    assert conj.support_hull() == (h(u), h(v))


def test_disjoint_supports_commute():
    f = canonical_bump(F(1, 8), F(3, 8))
    g = canonical_bump(F(1, 2), F(7, 8))
    assert pred_C(f.map, g.map)
    assert not pred_D(f.map, f.map)  # C(x,x) holds, so D(x,x) fails


def test_predicates_wrapper():
    fns = retrofit_slopes(fig_g_set())
    out = predicates(fns, [(0, 1)], [(1, 1)])
    assert set(out) == {"C", "D"}
    out = predicates(fns, [(0, 1)], [(1, 1)], [(2, 1)])
    assert "T" in out


def test_section9_predicates():
    h, g, f = retrofit_slopes(fig_g_set())
    hf = conj_map(h.map, f.map)
    gf = conj_map(g.map, f.map)
    assert pred_D(h.map, hf)
    assert pred_D(g.map, gf)


def test_bz_predicates():
    bz = fig_bz_set()
    ab = retrofit_slopes([x for x in bz if x.name != "c"])
    c = [x for x in bz if x.name == "c"][0]
    b, a = ab
    assert pred_C(b.map, c.map)
    assert not pred_D(a.map, conj_map(a.map, b.map))


def test_tower_predicate():
    h, g, f = retrofit_slopes(fig_g_set())
    f0 = h.map
    f1 = conj_map(h.map, f.map)
    s0, s1 = f0.support_hull(), f1.support_hull()
    assert s1[0] < s0[0] and s0[1] < s1[1]  # nested growth
    assert pred_T(f0, f1, g.map)


def test_dom_witness():
    h, g, f = retrofit_slopes(fig_g_set())
    hf = conj_map(h.map, f.map)
    j = dom_witness(h.map, hf)
    assert j is not None
    u, v = j
    assert hf(v) <= u or v <= hf(u)


def test_wreath_witness_star():
    fns = realize(sig_star(one, one))
    lo, hi = wreath_witness(fns, 1)
    (u, v, _), = fns[0].orbitals
    assert lo <= u and v <= hi


def test_wreath_witness_doubling():
    r = materialize(ord_parse("w^w"))
    fns = realize(sig_star(r, r))
    wreath_witness(fns, r.n)


def test_wreath_witness_rejects_sum():
    with pytest.raises(WreathSplitError):
        wreath_witness(realize(sig_sum(one, one)), 1)


def test_wreath_witness_rejects_bad_split():
    fns = realize(sig_star(Signature(2, (2,)), one))
    with pytest.raises(WreathSplitError):
        wreath_witness(fns, 1)  # oscillation 2 crosses this split
