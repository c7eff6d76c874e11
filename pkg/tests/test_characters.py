import json
import os
import warnings

import pytest
from fractions import Fraction

from symf.characters import (CACHE_FORMAT_VERSION, CHAR_TABLE_CAP,
                             CharacterTable, RepCharacter, _load_table,
                             _reset_memo, cache_dir, char_of_functor,
                             character_table, chi, schur_functor_char)
from symf.errors import ResourceLimitError
from symf.oracles import oracle_syt
from symf.partitions import Partition, partitions_of, z_of
from symf.symfunc import e, h, p, s


def test_small_tables_are_the_classical_ones():
    # S_3, rows indexed by shape, columns by class in the same order
    t3 = character_table(3)
    assert list(t3.row((3,)).values()) == [1, 1, 1]
    assert list(t3.row((2, 1)).values()) == [-1, 0, 2]
    assert list(t3.row((1, 1, 1)).values()) == [1, -1, 1]
    t4 = character_table(4)
    assert list(t4.row((2, 2)).values()) == [0, -1, 2, 0, 2]
    assert list(t4.row((3, 1)).values()) == [-1, 0, -1, 1, 3]
    assert list(t4.row((2, 2))) == partitions_of(4)


def test_chi_validates_weights():
    assert chi((2, 1), (1, 1, 1)) == 2
    assert chi((2, 1), (3,)) == -1
    with pytest.raises(ValueError):
        chi((2, 1), (2, 2))


def test_trivial_and_sign_rows():
    for r in range(1, 9):
        for mu in partitions_of(r):
            assert chi((r,), mu) == 1
            assert chi(tuple([1] * r), mu) == (-1) ** (r - mu.length)


def test_first_column_is_tableaux_count():
    for r in range(1, 10):
        ones = tuple([1] * r)
        for lam in partitions_of(r):
            assert chi(lam, ones) == oracle_syt(lam)


def test_orthogonality_relations():
    for r in range(1, 9):
        shapes = partitions_of(r)
        table = character_table(r)
        for a in shapes:
            for b in shapes:
                first = sum(Fraction(table.value(a, mu) * table.value(b, mu),
                                     z_of(mu)) for mu in shapes)
                assert first == (1 if a == b else 0)
        for mu in shapes:
            for nu in shapes:
                second = sum(table.value(lam, mu) * table.value(lam, nu)
                             for lam in shapes)
                assert second == (z_of(mu) if mu == nu else 0)


def test_table_accessors():
    table = character_table(4)
    assert table.r == 4
    assert table.shapes() == partitions_of(4)
    assert table[(2, 2), (1, 1, 1, 1)] == 2
    assert table.value((4,), (2, 1, 1)) == 1
    assert isinstance(table, CharacterTable)


def test_cap_is_enforced():
    with pytest.raises(ResourceLimitError):
        character_table(CHAR_TABLE_CAP + 1)


def test_cache_file_round_trip(fresh_cache):
    character_table(5)
    path = os.path.join(str(fresh_cache), "chartable-r5.json")
    assert os.path.exists(path)
    with open(path) as fh:
        doc = json.load(fh)
    assert doc["version"] == CACHE_FORMAT_VERSION
    assert doc["r"] == 5
    assert len(doc["entries"]) == len(partitions_of(5)) ** 2
    # a fresh process would load rather than rebuild; simulate with the
    # memo cleared and check the values survive the disk trip
    _reset_memo()
    again = character_table(5)
    assert again.values == character_table(5).values
    assert again.row((3, 2)) == RepCharacter.irreducible((3, 2)).trace


def test_corrupt_cache_is_rebuilt(fresh_cache):
    character_table(4)
    path = os.path.join(str(fresh_cache), "chartable-r4.json")
    with open(path, "w") as fh:
        fh.write("{ not json")
    _reset_memo()
    assert _load_table(4) is None
    table = character_table(4)
    assert list(table.row((2, 2)).values()) == [0, -1, 2, 0, 2]


def test_version_mismatch_is_rebuilt(fresh_cache):
    character_table(4)
    path = os.path.join(str(fresh_cache), "chartable-r4.json")
    with open(path) as fh:
        doc = json.load(fh)
    doc["version"] = CACHE_FORMAT_VERSION + 1
    with open(path, "w") as fh:
        json.dump(doc, fh)
    _reset_memo()
    assert _load_table(4) is None
    assert list(character_table(4).row((4,)).values()) == [1, 1, 1, 1, 1]


def test_truncated_cache_is_rebuilt(fresh_cache):
    character_table(4)
    path = os.path.join(str(fresh_cache), "chartable-r4.json")
    with open(path) as fh:
        doc = json.load(fh)
    doc["entries"] = doc["entries"][:3]
    with open(path, "w") as fh:
        json.dump(doc, fh)
    _reset_memo()
    assert _load_table(4) is None


def test_unwritable_cache_warns_but_serves(tmp_path, monkeypatch):
    blocker = tmp_path / "not-a-directory"
    blocker.write_text("plain file")
    monkeypatch.setenv("SYMF_CACHE_DIR", str(blocker / "sub"))
    _reset_memo()
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            table = character_table(3)
        assert list(table.row((3,)).values()) == [1, 1, 1]
        assert any("persist" in str(w.message) for w in caught)
    finally:
        _reset_memo()


def test_cache_dir_resolution(monkeypatch):
    monkeypatch.setenv("SYMF_CACHE_DIR", "/tmp/explicit")
    assert cache_dir() == "/tmp/explicit"
    monkeypatch.delenv("SYMF_CACHE_DIR")
    monkeypatch.setenv("XDG_CACHE_HOME", "/tmp/xdg")
    assert cache_dir() == os.path.join("/tmp/xdg", "symf")
    monkeypatch.delenv("XDG_CACHE_HOME")
    assert cache_dir().endswith(os.path.join(".cache", "symf"))


def test_rep_characters():
    assert RepCharacter.trivial(3).trace == {Partition((3,)): 1,
                                             Partition((2, 1)): 1,
                                             Partition((1, 1, 1)): 1}
    assert RepCharacter.sign(3).trace[Partition((2, 1))] == -1
    reg = RepCharacter.regular(3)
    assert reg.trace[Partition((1, 1, 1))] == 6
    assert reg.trace[Partition((3,))] == 0
    both = RepCharacter.trivial(2) + RepCharacter.sign(2)
    assert both.trace[Partition((1, 1))] == 2
    assert both.trace[Partition((2,))] == 0
    with pytest.raises(ValueError):
        RepCharacter.trivial(2) + RepCharacter.trivial(3)
    with pytest.raises(ValueError):
        RepCharacter(2, {(3,): 1})


def test_char_of_functor_frobenius_images():
    # trivial -> h_r, sign -> e_r, regular -> p_1^r, irreducible -> s_lam
    for r in range(1, 6):
        assert char_of_functor(RepCharacter.trivial(r)) == h(r)
        assert char_of_functor(RepCharacter.sign(r)) == e(r)
        assert char_of_functor(RepCharacter.regular(r)) == p(*([1] * r))
    for lam in partitions_of(4):
        assert char_of_functor(RepCharacter.irreducible(lam)) == s(*lam)
        assert schur_functor_char(lam) == s(*lam)
