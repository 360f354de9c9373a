from spectop.tables import bni_case_analysis, bni_table, bni_table_sweep, five_space_table, \
    omega, predicted_spectrum


def test_omega():
    assert [omega(m) for m in (1, 2, 6, 12, 30)] == [0, 1, 2, 2, 3]


def test_five_space_known_disagreement():
    t = five_space_table()
    assert [(r, c) for r, c, *_ in t.mismatches] == [("H", "UC")]
    (_, _, _, _, wit), = t.mismatches
    assert wit is not None


def test_bni_known_disagreement():
    t = bni_table()
    assert [(r, c) for r, c, *_ in t.mismatches] == [("B(6,3)", "T")]


def test_case_analysis_agrees_to_12():
    assert all(c.agrees for c in bni_case_analysis(12))


def test_sweep_only_row_six_t():
    sweep = bni_table_sweep(12)
    assert sweep and all(row == 6 and col == "T" for _, _, row, col, _, _ in sweep)
    assert all(exp == "T1/2" and got == "T0" for *_, exp, got in sweep)


def test_predicted_spectrum_b63():
    primes, dim = predicted_spectrum(6, 3)
    assert dim == 2 and frozenset({"0", "3"}) in primes
