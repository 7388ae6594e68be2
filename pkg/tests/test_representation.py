import pytest

from carkwork import (
    IDENTITY,
    QuadForm,
    SolveError,
    Solution,
    act,
    apply_automorph,
    automorph,
    enumerate_solutions,
    solve_definite,
    solve_form,
    solve_form_detailed,
)


def brute_force_solvable(f: QuadForm, n: int, bound: int = 200) -> bool:
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            if f.evaluate(x, y) == n:
                return True
    return False


SPINE_FORMS = {
    5: QuadForm(1, 1, -1),
    8: QuadForm(1, 2, -1),
    13: QuadForm(1, 3, -1),
    60: QuadForm(1, 6, -6),
}


def test_pell_instance():
    sol = solve_form(QuadForm(1, 0, -2), 1)
    assert sol is not None
    assert sol.x * sol.x - 2 * sol.y * sol.y == 1


def test_pell_orbit_three_distinct():
    f = QuadForm(1, 0, -2)
    sols = enumerate_solutions(f, 1, 3)
    assert len(sols) == 3
    assert len(set(sols)) == 3
    for s in sols:
        assert f.evaluate(s.x, s.y) == 1


def test_no_solution_returns_none():
    # 3 is not represented by x^2 - 2y^2 (3 is inert in Z[sqrt 2])
    assert solve_form(QuadForm(1, 0, -2), 3) is None
    assert enumerate_solutions(QuadForm(1, 0, -2), 3, 5) == []


@pytest.mark.parametrize("disc", (5, 8))
def test_solver_against_brute_force_small(disc):
    f = SPINE_FORMS[disc]
    for n in list(range(-8, 0)) + list(range(1, 9)):
        sol = solve_form(f, n)
        if sol is None:
            assert not brute_force_solvable(f, n, bound=60)
        else:
            assert f.evaluate(sol.x, sol.y) == n


def test_solve_detailed_telemetry():
    result = solve_form_detailed(QuadForm(1, 0, -2), 1)
    assert result.solution is not None
    assert result.path_letters is not None
    assert all(size >= 0 for size in result.frontier_sizes)


def test_solve_rejects_zero():
    with pytest.raises(SolveError):
        solve_form(QuadForm(1, 1, -1), 0)


def test_automorph_fixes_form():
    for f in (QuadForm(1, 1, -1), QuadForm(1, 0, -2), QuadForm(-14, 2, 1), QuadForm(2, 6, 1)):
        m = automorph(f)
        assert m != IDENTITY
        assert act(m, f) == f


def test_automorph_moves_solutions():
    f = QuadForm(1, 0, -2)
    m = automorph(f)
    s = Solution(3, 2)
    s2 = apply_automorph(m, s)
    assert s2 != s
    assert f.evaluate(s2.x, s2.y) == 1


def test_solve_definite_sum_of_squares():
    f = QuadForm(1, 0, 1)
    sols = solve_definite(f, 25)
    assert set(sols) == {
        Solution(x, y)
        for x in range(-5, 6)
        for y in range(-5, 6)
        if x * x + y * y == 25
    }
    assert solve_definite(f, 3) == []
    assert solve_definite(f, -4) == []


def test_solve_definite_negative():
    f = QuadForm(-1, 0, -1)
    sols = solve_definite(f, -25)
    assert len(sols) == 12
    for s in sols:
        assert f.evaluate(s.x, s.y) == -25
    assert solve_definite(f, 25) == []
