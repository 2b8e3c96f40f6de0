import math

import pytest

from friendship_hg.hypergraph import degree_profile, full_set, members
from friendship_hg.steiner import (
    SteinerError,
    SteinerSystem,
    SystemUnavailable,
    available_system,
    golay_weight6_count,
    s_5_6_12,
    sqs8,
    steiner_triple_system,
    verify_steiner,
)

from oracles import cover_counts

ADMISSIBLE = [n for n in range(3, 64) if n % 6 in (1, 3)]


def test_fano_passes(fano):
    cert = verify_steiner(2, 3, 7, fano.blocks)
    assert cert.passed and cert.stats["blocks"] == 7
    assert cover_counts([members(b) for b in fano.blocks], 7, 2) == [1] * 21


def test_deleted_block_uncovers_its_pairs(fano):
    gone = fano.blocks[0]
    cert = verify_steiner(2, 3, 7, fano.blocks[1:])
    assert cert.verdict == "FAIL"
    assert cert.witness["times_covered"] == 0
    assert set(cert.witness["tset"]) <= set(members(gone))


def test_duplicate_block_reports_both_covers(fano):
    cert = verify_steiner(2, 3, 7, fano.blocks + fano.blocks[:1])
    assert cert.verdict == "FAIL"
    assert cert.witness["times_covered"] == 2
    assert len(cert.witness["blocks"]) == 2


def test_malformed_blocks_are_errors():
    assert verify_steiner(2, 3, 7, [0b11]).verdict == "ERROR"
    assert verify_steiner(2, 3, 7, [0b111 << 5]).verdict == "ERROR"
    assert verify_steiner(4, 3, 7, []).verdict == "ERROR"


@pytest.mark.parametrize("n", ADMISSIBLE)
def test_triple_systems(n):
    s = steiner_triple_system(n)
    assert len(s.blocks) == math.comb(n, 2) // 3
    assert cover_counts([members(b) for b in s.blocks], n, 2) == [1] * math.comb(n, 2)
    assert set(degree_profile(s.as_hypergraph(), 1).values()) == {(n - 1) // 2}


def test_sts_counts():
    assert len(steiner_triple_system(7).blocks) == 7
    assert len(steiner_triple_system(9).blocks) == 12


@pytest.mark.parametrize("n", [0, 1, 2, 4, 5, 6, 8, 11, 12])
def test_sts_rejects_inadmissible(n):
    with pytest.raises(SteinerError):
        steiner_triple_system(n)


def test_bose_labeling_has_fixed_first_blocks():
    # point (i, j) -> 3i + j, so the "vertical" blocks come first
    s = steiner_triple_system(9)
    assert {(0, 1, 2), (3, 4, 5), (6, 7, 8)} <= {tuple(members(b)) for b in s.blocks}


def test_sqs8():
    s = sqs8()
    assert len(s.blocks) == 14
    assert cover_counts([members(b) for b in s.blocks], 8, 3) == [1] * 56
    blocks = set(s.blocks)
    assert all(full_set(8) ^ b in blocks for b in blocks)


def test_golay_system():
    s = s_5_6_12()
    assert len(s.blocks) == 132 == math.comb(12, 5) // math.comb(6, 5)
    assert golay_weight6_count() == 264
    assert cover_counts([members(b) for b in s.blocks], 12, 5) == [1] * 792
    assert verify_steiner(5, 6, 12, s.blocks).stats["tsets_examined"] == 792


def test_available_system_lookup():
    assert available_system(5, 6, 12) == s_5_6_12()
    assert available_system(3, 4, 8) == sqs8()
    with pytest.raises(SystemUnavailable):
        available_system(4, 5, 10)
    with pytest.raises(SystemUnavailable):
        available_system(4, 5, 11)


def test_block_count_property():
    for s in (sqs8(), s_5_6_12(), steiner_triple_system(13)):
        assert isinstance(s, SteinerSystem)
        assert len(s.blocks) == s.expected_blocks
