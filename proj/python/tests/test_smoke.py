import shiftlap as sl


def test_level_enumeration_order():
    assert sl.enumerate_level(2, 1) == ["~1", "~2", "2~1", "1~2"]
    v1 = sl.enumerate_level(3, 1)
    assert v1 == ["~1", "~2", "~3", "2~1", "3~1", "1~2", "3~2", "1~3", "2~3"]
    v2 = sl.enumerate_level(3, 2)
    assert len(v2) == 27
    assert v2[:9] == v1


def test_point_maps():
    assert sl.shift(2, "12~1") == "2~1"
    assert sl.shift(2, "2~1") == "~1"
    assert sl.shift(2, "~1") == "~1"
    assert sl.inverse_branch(2, 2, "~1") == "2~1"
    assert sl.inverse_branch(2, 1, "~1") == "~1"
    assert sl.rho(2, "~1", "~2") == 1
    assert sl.rho(2, "~1", "~1") is None
    assert sl.distance(3, "1~2", "1~3") == "1/4"


def test_dense_operator_and_form():
    assert sl.dense_operator(2, 0) == [["-1", "1"], ["1", "-1"]]
    h1 = sl.dense_operator(2, 1)
    assert h1 == [
        ["-2", "1", "0", "1"],
        ["1", "-2", "1", "0"],
        ["0", "1", "-1", "0"],
        ["1", "0", "0", "-1"],
    ]
    assert sl.dirichlet_form(2, 0, ["1", "0"], ["1", "0"]) == "1"


def test_structural_check_passes():
    report = sl.structural_check(3, 2)
    assert all(report.values()), report


def test_green_and_resistance():
    assert sl.green_value(3, "1~2", "1~3") == "1/3"
    assert sl.green_value(3, "~1", "12~1") == "0"
    r = sl.effective_resistance(3, "~1", "~2")
    assert r["min_energy"] == "3/2"
    assert r["resistance"] == "2/3"


def test_green_apply_and_trace():
    level = sl.green_apply_level(2, 0, ["1"], 1)
    assert level == ["0", "0", "1/4", "1/4"]
    assert sl.unit_green_trace(2, "1212", 4) == ["-1", "-1", "-1", "-1"]


def test_bvp_boundary_values():
    values = sl.solve_bvp_eval(2, 0, ["1"], ["1", "1"], ["~1", "~2", "21~1"])
    assert values[0] == "1"
    assert values[1] == "1"
    assert values[2] == "3/4"  # 1 - 1/4
