from projlink import Laurent


def test_arithmetic():
    a = Laurent({1: 1})
    b = Laurent({-1: 1})
    assert a * b == Laurent.one()
    assert a + (-a) == Laurent.zero()
    assert (a + b) * (a + b) == Laurent({2: 1, 0: 2, -2: 1})


def test_pow():
    delta = Laurent({2: -1, -2: -1})
    assert delta**0 == Laurent.one()
    assert delta**2 == Laurent({4: 1, 0: 2, -4: 1})


def test_invert_variable():
    p = Laurent({5: -1, -3: -1, -7: 1})
    assert p.invert_variable() == Laurent({-5: -1, 3: -1, 7: 1})
    assert p.invert_variable().invert_variable() == p


def test_zero_coefficients_dropped():
    assert Laurent({3: 0, 1: 2}) == Laurent({1: 2})
    assert not Laurent({0: 0})


def test_str_and_dict():
    p = Laurent({5: -1, -3: -1, -7: 1})
    assert str(p) == "-A^5 - A^-3 + A^-7"
    assert p.to_dict() == {"-7": 1, "-3": -1, "5": -1}
    assert str(Laurent.zero()) == "0"
    assert str(Laurent({0: 1})) == "1"
    assert str(Laurent({2: 3})) == "3*A^2"
