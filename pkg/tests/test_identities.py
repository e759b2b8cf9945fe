import pytest

from qbiject.identities import (
    Cache,
    DEFAULT_N_ENUM,
    DEFAULT_N_SERIES,
    coefficients,
    default_bound,
    registry,
    sweep,
    verify,
)


def test_registry_size_and_kinds():
    reg = registry()
    assert len(reg) >= 22
    assert all(e.kind in ("series", "enum") for e in reg.values())
    assert default_bound(reg["AG"]) == DEFAULT_N_SERIES
    assert default_bound(reg["AGW"]) == DEFAULT_N_ENUM


def test_i_ranges():
    reg = registry()
    assert list(reg["AG"].i_range(3)) == [1, 2, 3]
    assert list(reg["BR33_FORM"].i_range(3)) == [0, 1, 2]
    assert list(reg["BP_FORM"].i_range(4)) == [2, 3]
    assert list(reg["BP_FORM"].i_range(2)) == []
    assert list(reg["UTILDE_RR"].i_range(3)) == [3]
    with pytest.raises(ValueError):
        verify("AG", 2, 0)


def test_verify_single_case():
    rep = verify("AG", 2, 2, 50)
    assert rep.ok and rep.mismatch_degree is None
    assert len(rep.lhs) == 51 and rep.lhs == rep.rhs
    assert rep.lhs[:5] == [1, 1, 1, 1, 2]


def test_verify_reports_first_mismatch_with_full_vectors():
    """Inject a broken entry (off-by-one in the product exponent) and
    check that verify pinpoints the first affected degree while still
    carrying both full vectors."""
    from qbiject.identities import IdentityEntry

    reg = registry()
    broken = IdentityEntry(
        "BROKEN",
        "series",
        "deliberately wrong product index",
        lambda r: range(1, r + 1),
        reg["AG"].lhs,
        lambda r, i, n, c: c.product(i + 1, 2 * r + 1, n),
    )
    reg["BROKEN"] = broken
    try:
        rep = verify("BROKEN", 2, 1, 20)
        assert not rep.ok
        good = verify("AG", 2, 1, 20)
        assert good.ok
        first_bad = next(
            d for d in range(21) if rep.lhs[d] != rep.rhs[d]
        )
        assert rep.mismatch_degree == first_bad
        assert rep.lhs_at_mismatch == rep.lhs[first_bad]
        assert rep.rhs_at_mismatch == rep.rhs[first_bad]
        assert len(rep.lhs) == len(rep.rhs) == 21
    finally:
        del reg["BROKEN"]


def test_injected_exponent_offset_detected():
    """Mutation check: shifting one side by q moves coefficients and the
    comparison must fail at the first affected degree."""
    cache = Cache()
    lhs = coefficients("BR", "lhs", 2, 2, 15, cache)
    shifted = [0] + lhs[:-1]
    assert lhs != shifted
    # the constant term moves, so degree 0 is the first disagreement
    assert next(d for d in range(16) if lhs[d] != shifted[d]) == 0


def test_coefficients_side_validation():
    with pytest.raises(ValueError):
        coefficients("AG", "middle", 2, 1, 5)
    with pytest.raises(ValueError):
        coefficients("AG", "lhs", 2, 0, 5)
    with pytest.raises(KeyError):
        verify("NOPE", 2, 1, 5)


def test_f_counts_conventions():
    c = Cache()
    n = 12
    assert c.f_counts(0, 3, n) == [0] * (n + 1)
    assert c.f_counts(4, 3, n) == c.f_counts(2, 3, n)
    # for a legal index the product matches the enumeration
    assert c.f_counts(2, 3, n) == c.counts("F", 3, 2, n)


def test_sweep_rank2_all_green():
    reports = sweep(r_values=(2,), n_series=25, n_enum=15)
    assert reports and all(rep.ok for rep in reports)
    keys = {rep.key for rep in reports}
    assert "AG" in keys and "FIJ_TER2" in keys


def test_sweep_respects_key_selection():
    reports = sweep(keys=["GORDON_TE"], r_values=(2, 3), n_enum=12)
    assert {rep.key for rep in reports} == {"GORDON_TE"}
    assert all(rep.ok for rep in reports)


def test_cache_is_shared_and_exact():
    cache = Cache()
    a = cache.counts("T", 2, 2, 10)
    b = cache.counts("T", 2, 2, 10)
    assert a is b
    assert cache.msum("AG", 2, 2, 10) == cache.msum("AG", 2, 2, 10)
