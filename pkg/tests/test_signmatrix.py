"""Family specs, deterministic row-selection policies, and the pattern
file format."""

import io

import numpy as np
import pytest

from mwclab import sequences as sq
from mwclab.signmatrix import (
    FamilySpec,
    SignMatrix,
    build_sign_matrix,
    read_pattern_file,
    write_pattern_file,
)
from mwclab.tables import PRIMITIVE_POLYS


def test_spec_validation():
    with pytest.raises(ValueError):
        FamilySpec("walsh", m=4)
    with pytest.raises(ValueError):
        FamilySpec("random", m=4)  # no M
    with pytest.raises(ValueError):
        FamilySpec("gold", m=4)  # no n
    with pytest.raises(ValueError):
        FamilySpec("gold", m=4, n=9, M=500)  # M inconsistent with n
    with pytest.raises(ValueError):
        FamilySpec("hadamard", m=4, M=12)  # not a power of two
    with pytest.raises(ValueError):
        FamilySpec("gold", m=0, n=5)
    assert FamilySpec("gold", m=4, n=9).length == 511
    assert FamilySpec("hadamard", m=4, M=16).length == 16


def test_maximal_policy_polys_then_shifts():
    S = build_sign_matrix(FamilySpec("maximal", m=7, n=3))
    base = [sq.lfsr_msequence(p) for p in PRIMITIVE_POLYS[3]]
    assert np.array_equal(S.entries[0], base[0])
    assert np.array_equal(S.entries[1], base[1])
    assert np.array_equal(S.entries[2], np.roll(base[0], 1))
    assert np.array_equal(S.entries[3], np.roll(base[1], 1))
    assert len({r.tobytes() for r in S.entries}) == 7


def test_maximal_population_cap():
    # degree 3 offers 2 polynomials x 7 shifts = 14 distinct rows
    build_sign_matrix(FamilySpec("maximal", m=14, n=3))
    with pytest.raises(ValueError):
        build_sign_matrix(FamilySpec("maximal", m=15, n=3))


def test_gold_rows_follow_family_enumeration():
    S = build_sign_matrix(FamilySpec("gold", m=6, n=5))
    fam = sq.gold_family(5)
    for i in range(6):
        assert np.array_equal(S.entries[i], fam[i])
    with pytest.raises(ValueError):
        build_sign_matrix(FamilySpec("gold", m=34, n=5))  # family has 33


def test_kasami_rows_follow_family_enumeration():
    S = build_sign_matrix(FamilySpec("kasami", m=5, n=6))
    fam = sq.kasami_small_family(6)
    for i in range(5):
        assert np.array_equal(S.entries[i], fam[i])
    with pytest.raises(ValueError):
        build_sign_matrix(FamilySpec("kasami", m=9, n=6))


def test_hadamard_skips_constant_row():
    S = build_sign_matrix(FamilySpec("hadamard", m=3, M=8))
    fam = sq.hadamard_family(8)
    for i in range(3):
        assert np.array_equal(S.entries[i], fam[i + 1])
    assert not (S.entries == 1).all(axis=1).any()
    with pytest.raises(ValueError):
        build_sign_matrix(FamilySpec("hadamard", m=8, M=8))


def test_random_rows_distinct_and_seeded():
    a = build_sign_matrix(FamilySpec("random", m=12, M=31, seed=7))
    b = build_sign_matrix(FamilySpec("random", m=12, M=31, seed=7))
    c = build_sign_matrix(FamilySpec("random", m=12, M=31, seed=8))
    assert np.array_equal(a.entries, b.entries)
    assert not np.array_equal(a.entries, c.entries)
    assert len({r.tobytes() for r in a.entries}) == 12


def test_random_tuple_seed():
    a = build_sign_matrix(FamilySpec("random", m=4, M=19, seed=(3, 25)))
    b = build_sign_matrix(FamilySpec("random", m=4, M=19, seed=(3, 26)))
    assert not np.array_equal(a.entries, b.entries)


def test_random_rejects_impossible_distinctness():
    with pytest.raises(ValueError):
        build_sign_matrix(FamilySpec("random", m=9, M=3, seed=0))
    # exactly exhausting the population is allowed
    S = build_sign_matrix(FamilySpec("random", m=8, M=3, seed=0))
    assert len({r.tobytes() for r in S.entries}) == 8


def test_sign_matrix_entry_validation():
    with pytest.raises(ValueError):
        SignMatrix(np.array([[1, 0], [1, -1]], dtype=np.int8), "random", None)


@pytest.mark.parametrize(
    "spec",
    [
        FamilySpec("gold", m=5, n=5),
        FamilySpec("kasami", m=4, n=6),
        FamilySpec("hadamard", m=5, M=16),
        FamilySpec("maximal", m=4, n=5),
        FamilySpec("random", m=6, M=21, seed=(1, 2, 3)),
        FamilySpec("random", m=3, M=9, seed=0),
    ],
)
def test_pattern_file_round_trip(spec, tmp_path):
    S = build_sign_matrix(spec)
    path = tmp_path / "p.pat"
    write_pattern_file(path, S)
    R = read_pattern_file(path)
    assert np.array_equal(S.entries, R.entries)
    assert R.family == spec.family
    assert R.seed == spec.seed
    header = path.read_text().splitlines()[0].split()
    assert header[0] == str(S.m) and header[1] == str(S.M) and header[2] == spec.family


def test_pattern_file_bad_header():
    with pytest.raises(ValueError):
        read_pattern_file(io.StringIO("3 4 random\n1 1 1 1\n"))


def test_pattern_file_bad_entries():
    buf = io.StringIO("1 3 random none\n1 2 1\n")
    with pytest.raises(ValueError):
        read_pattern_file(buf)
