"""Smoke test for the llt_schur extension module.

Build and install first, e.g. `maturin develop -m crates/py/Cargo.toml`.
"""

from fractions import Fraction

import llt_schur as ls


def main() -> None:
    assert ls.canonical_form([2, 1], 3) == ([1, 2], 1)
    assert ls.canonical_form([1, 1], 3) is None
    assert ls.is_nonzero_word([1, 5], 3)

    core, quotient, charges = ls.core_quotient([4, 3, 1], 3)
    assert core == [2] and quotient == [[2], [], []]

    beta = ls.SkewTuple.from_partitions([([2], [1]), ([3, 3], [1, 1]), ([3, 3], [2, 1])])
    c = ls.qlr_coefficient(beta, [4, 3, 1])
    assert str(c) == "q^4 + 2*q^5", c
    assert c.terms() == [(4, Fraction(1)), (5, Fraction(2))]
    assert ls.llt_schur_expansion(beta)[(4, 3, 1)] == c
    assert sorted(t.sqread() for t in ls.qlr_tableaux(beta, [4, 3, 1])) == [
        [4, 2, 1, 7, 3, 8, 4, 5],
        [4, 3, 1, 7, 2, 8, 4, 5],
        [8, 3, 4, 1, 2, 7, 4, 5],
    ]

    t = ls.Rsst.from_rows([[1, 2, 4, 6], [3, 4, 5, 7], [8]])
    assert t.is_valid() and t.sqread() == [8, 3, 4, 1, 5, 2, 4, 7, 6]
    assert ls.Rsst.from_json(t.to_json()).sqread() == t.sqread()

    j = ls.flagged_schur([3, 3], [6, 6], k=3)
    assert len(j) == 5
    assert ls.verify_main([2, 2, 2], [6, 6])[0]

    # acb = cab when c - a > k; plain u_1 u_5 = u_5 u_1 needs Lam's far commutation.
    assert ls.equal_in_quotient({(1, 5, 2): 1}, {(5, 1, 2): 1}, algebra="rot-le", k=3)
    assert not ls.equal_in_quotient({(1, 5): 1}, {(5, 1): 1}, algebra="rot-le", k=3)
    assert ls.equal_in_quotient({(1, 5): 1}, {(5, 1): 1}, algebra="lam", k=3)

    try:
        ls.equivalence_class([8, 3, 4, 1, 2, 7, 5], 3, cap=3)
    except ls.GuardError:
        pass
    else:
        raise AssertionError("guard did not fire")

    assert all(passed for _, passed in ls.golden_suite())
    print("llt_schur smoke test passed")


if __name__ == "__main__":
    main()
