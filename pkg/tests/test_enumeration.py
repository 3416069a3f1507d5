import pytest

from eqdomain import (
    CanonicalForm,
    CorpusError,
    CorpusWarning,
    Semigroup,
    canonicalize,
    enumerate_tables,
    format_table,
    parse_corpus,
    read_corpus,
)
from eqdomain.enumeration import canonical_table
from support import LEFT_ZERO, RIGHT_ZERO, Z2, brute_force_assoc_tables

RAW_COUNTS = {1: 1, 2: 8, 3: 113}
ISO_COUNTS = {2: 5, 3: 24}
ANTI_COUNTS = {2: 4, 3: 18}


class TestEnumerate:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_raw_matches_brute_force(self, n):
        expected = set(brute_force_assoc_tables(n))
        got = [S.table for S in enumerate_tables(n)]
        assert len(got) == RAW_COUNTS[n]
        assert set(got) == expected
        assert len(set(got)) == len(got)

    @pytest.mark.parametrize("n", [2, 3])
    def test_reduced_counts(self, n):
        assert sum(1 for _ in enumerate_tables(n, "up_to_iso")) == ISO_COUNTS[n]
        assert sum(1 for _ in enumerate_tables(n, "up_to_iso_and_anti")) == ANTI_COUNTS[n]

    @pytest.mark.parametrize("mode", ["up_to_iso", "up_to_iso_and_anti"])
    def test_reduced_streams_cover_and_separate(self, mode):
        for n in (2, 3):
            reps = [S.table for S in enumerate_tables(n, mode)]
            # representatives are canonical and pairwise inequivalent
            canon = [canonical_table(t, mode) for t in reps]
            assert canon == reps
            assert len(set(canon)) == len(canon)
            # every raw table reduces to some emitted representative
            reachable = {canonical_table(S.table, mode) for S in enumerate_tables(n)}
            assert reachable == set(reps)

    def test_deterministic_order(self):
        assert [S.table for S in enumerate_tables(2)] == [
            S.table for S in enumerate_tables(2)
        ]

    def test_argument_validation_is_eager(self):
        with pytest.raises(ValueError):
            enumerate_tables(0)
        with pytest.raises(ValueError):
            enumerate_tables(2, "bogus")
        with pytest.raises(ValueError):
            enumerate_tables(6)


class TestCanonicalize:
    def test_raw_mode_is_identity(self):
        assert canonicalize(RIGHT_ZERO, "raw") == CanonicalForm(RIGHT_ZERO.table, "raw")

    def test_left_and_right_zero(self):
        iso_l = canonicalize(LEFT_ZERO, "up_to_iso").table
        iso_r = canonicalize(RIGHT_ZERO, "up_to_iso").table
        assert iso_l != iso_r
        anti_l = canonicalize(LEFT_ZERO, "up_to_iso_and_anti").table
        anti_r = canonicalize(RIGHT_ZERO, "up_to_iso_and_anti").table
        assert anti_l == anti_r

    def test_idempotent(self):
        for mode in ("up_to_iso", "up_to_iso_and_anti"):
            once = canonical_table(Z2.table, mode)
            assert canonical_table(once, mode) == once

    def test_relabelings_share_canonical_form(self):
        relabeled = Semigroup([[1, 0], [0, 1]])  # Z2 with the identity renamed
        assert (
            canonicalize(Z2, "up_to_iso").table
            == canonicalize(relabeled, "up_to_iso").table
        )

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            canonical_table(Z2.table, "nope")


CORPUS = """\
2
0 0
1 1

2
0 0
0 1
"""


class TestCorpus:
    def test_two_tables(self):
        got = list(parse_corpus(CORPUS))
        assert [S.table for S in got] == [((0, 0), (1, 1)), ((0, 0), (0, 1))]

    def test_empty_text(self):
        assert list(parse_corpus("")) == []
        assert list(parse_corpus("\n\n \n")) == []

    def test_format_round_trip(self):
        text = "\n\n".join(format_table(S) for S in enumerate_tables(2))
        assert [S.table for S in parse_corpus(text)] == [
            S.table for S in enumerate_tables(2)
        ]

    def test_strict_errors_carry_lines(self):
        with pytest.raises(CorpusError) as exc:
            list(parse_corpus("2\n0 0\n"))
        assert exc.value.line == 1
        with pytest.raises(CorpusError) as exc:
            list(parse_corpus("2\n0 0\n1 x\n"))
        assert exc.value.line == 3
        with pytest.raises(CorpusError) as exc:
            list(parse_corpus("not-a-number\n"))
        assert exc.value.line == 1

    def test_strict_rejects_non_associative_with_index(self):
        text = CORPUS + "\n2\n0 0\n1 0\n"
        with pytest.raises(CorpusError) as exc:
            list(parse_corpus(text))
        assert exc.value.table_index == 2
        assert "(x, y, z)" in str(exc.value)

    def test_non_strict_skips_with_warning(self):
        text = "2\n0 0\n1 0\n\n2\n0 0\n1 1\n"
        with pytest.warns(CorpusWarning):
            got = list(parse_corpus(text, strict=False))
        assert [S.table for S in got] == [((0, 0), (1, 1))]

    def test_read_corpus(self, tmp_path):
        path = tmp_path / "tables.txt"
        path.write_text(CORPUS)
        assert len(list(read_corpus(path))) == 2
