from fractions import Fraction

import numpy as np

from lgallee import verify
from lgallee.verify import (FAIL, NESTED_CYCLES_C, PASS, SKIP, caption_sets, check_cusp_locus, check_l11_identity,
                            check_nested_cycles, check_reference_focal_values, check_resultants, run_checks)

F = Fraction


def test_caption_sets_are_five_distinct_points():
    sets = caption_sets()
    assert [label for label, _ in sets][:2] == ["coextinction", "codim-4 cusp"]
    assert len({p.as_tuple() for _, p in sets}) == 5
    assert NESTED_CYCLES_C.as_tuple() == (F(349, 4000), F(3, 50), F(61, 10), F(1, 10), F(1, 50))
    # coextinction needs beta > (1 + alpha)^2 / 4
    coextinction = dict(sets)["coextinction"]
    assert coextinction.beta > (1 + coextinction.alpha) ** 2 / 4


def test_cusp_locus_check():
    status, detail = check_cusp_locus(np.random.default_rng(0), True)
    assert status == PASS and "49/361" in detail


def test_l11_check_uses_the_lyapunov_coefficient():
    status, detail = check_l11_identity(np.random.default_rng(1), True)
    assert status == PASS, detail
    assert "agrees with the Lyapunov coefficient at 5/5" in detail
    assert "closed form equal at 0/5" in detail


def test_quick_resultant_check():
    status, detail = check_resultants(np.random.default_rng(2), True)
    assert status == PASS, detail
    assert "z*" not in detail


def test_slow_checks_skip_in_quick_mode():
    rng = np.random.default_rng(0)
    assert check_reference_focal_values(rng, True)[0] == SKIP
    assert check_nested_cycles(rng, True)[0] == SKIP


def test_run_checks_selects_by_name():
    results = run_checks(quick=True, only={"cusp locus at gamma=3/2", "codimension ladder"})
    assert [r.name for r in results] == ["cusp locus at gamma=3/2", "codimension ladder"]
    assert all(r.status == PASS for r in results)
    assert set(results[0].to_dict()) == {"check", "status", "detail", "seconds"}


def test_math_errors_become_failures(monkeypatch):
    def broken(rng, quick):
        raise TypeError("unsupported operand type(s) for *: 'mpf' and 'Fraction'")

    monkeypatch.setattr(verify, "CHECKS", (("broken", broken),))
    (result,) = run_checks(quick=True)
    assert result.status == FAIL
    assert result.detail.startswith("TypeError")
