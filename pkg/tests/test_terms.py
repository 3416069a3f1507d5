import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eqdomain import (
    BudgetExceeded,
    EmptyTermError,
    Equation,
    ExponentVector,
    System,
    Term,
    TermSyntaxError,
    VariableOutOfRange,
    all_points,
    decode_point,
    encode_point,
    eval_term,
    exponent_vector,
    parse_equation,
    parse_equations,
    parse_term,
    power_eval,
    term_functions,
)
from eqdomain import monogenic_table
from support import LEFT_ZERO, MIN2, Z2, Z3, raw_word_vectors

words = st.lists(st.integers(0, 2), min_size=1, max_size=12).map(tuple)


class TestParser:
    def test_exponent_expansion(self):
        assert parse_term("x1 x2^2", 3).word == (0, 1, 1)

    def test_single_letter(self):
        assert parse_term("x1", 1).word == (0,)

    def test_juxtaposition_without_spaces(self):
        assert parse_term("x1x2^2", 3).word == (0, 1, 1)

    def test_whitespace_insignificant(self):
        assert parse_term("  x2 ^ 3 ", 2).word == (1, 1, 1)

    def test_multidigit_variable(self):
        assert parse_term("x12", 12).word == (11,)

    def test_zero_exponent_rejected(self):
        with pytest.raises(TermSyntaxError):
            parse_term("x1^0", 1)

    def test_huge_exponent_rejected(self):
        with pytest.raises(TermSyntaxError):
            parse_term("x1^65", 1)

    def test_empty_input(self):
        with pytest.raises(EmptyTermError):
            parse_term("   ", 2)

    def test_variable_out_of_range(self):
        with pytest.raises(VariableOutOfRange):
            parse_term("x5", 3)
        with pytest.raises(VariableOutOfRange):
            parse_term("x0", 3)

    def test_syntax_errors_carry_position(self):
        with pytest.raises(TermSyntaxError) as exc:
            parse_term("x1 y2", 2)
        assert exc.value.position == 3
        with pytest.raises(TermSyntaxError):
            parse_term("x", 2)
        with pytest.raises(TermSyntaxError):
            parse_term("x1^", 2)

    def test_parse_equation(self):
        eq = parse_equation("x1 x2^2 = x3 x1", 3)
        assert eq.lhs.word == (0, 1, 1)
        assert eq.rhs.word == (2, 0)

    def test_equation_needs_one_equals(self):
        with pytest.raises(TermSyntaxError):
            parse_equation("x1", 2)
        with pytest.raises(TermSyntaxError):
            parse_equation("x1 = x2 = x1", 2)

    def test_parse_equations_file(self):
        text = "# commuting\nx1 x2 = x2 x1\n\nx1 = x1 x1  # idempotent\n"
        system = parse_equations(text, 2)
        assert len(system.equations) == 2
        assert system.arity == 2

    def test_parse_equations_reports_line(self):
        with pytest.raises(TermSyntaxError, match="line 2"):
            parse_equations("x1 = x1\nx9 = x1\n", 2)
        with pytest.raises(TermSyntaxError):
            parse_equations("# nothing here\n", 2)

    @given(words)
    def test_round_trip(self, word):
        t = Term(word, 3)
        assert parse_term(str(t), 3) == t

    def test_round_trip_splits_long_runs(self):
        t = Term((0,) * 130, 1)
        assert "^64" in str(t)
        assert parse_term(str(t), 1) == t


class TestTypes:
    def test_term_rejects_empty_word(self):
        with pytest.raises(EmptyTermError):
            Term((), 2)

    def test_term_rejects_bad_letter(self):
        with pytest.raises(VariableOutOfRange):
            Term((2,), 2)

    def test_equation_arities_must_match(self):
        with pytest.raises(ValueError):
            Equation(Term((0,), 1), Term((0,), 2))

    def test_system_rejects_empty_and_mixed(self):
        with pytest.raises(ValueError):
            System(())
        with pytest.raises(ValueError):
            System(
                (
                    Equation(Term((0,), 1), Term((0,), 1)),
                    Equation(Term((0,), 2), Term((1,), 2)),
                )
            )


class TestEncoding:
    def test_big_endian(self):
        assert encode_point((0, 1, 1), 2) == 3
        assert encode_point((1, 0, 0), 2) == 4
        assert decode_point(3, 2, 3) == (0, 1, 1)

    def test_enumeration_order_matches_encoding(self):
        pts = list(all_points(3, 2))
        assert [encode_point(p, 3) for p in pts] == list(range(9))

    @given(st.integers(2, 4), st.integers(1, 4), st.data())
    def test_round_trip(self, n, k, data):
        point = tuple(data.draw(st.integers(0, n - 1)) for _ in range(k))
        assert decode_point(encode_point(point, n), n, k) == point


class TestEval:
    def test_left_zero_projects_first_letter(self):
        t = parse_term("x2 x1 x3", 3)
        for p in all_points(2, 3):
            assert eval_term(LEFT_ZERO, t, p) == p[1]

    def test_group_square(self):
        assert eval_term(Z2, Term((0, 0), 1), (1,)) == 0

    def test_identity_projection(self):
        for p in all_points(3, 2):
            assert eval_term(Z3, Term((0,), 2), p) == p[0]

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            eval_term(Z2, Term((0,), 2), (1,))

    @given(words, words, st.data())
    @settings(max_examples=60)
    def test_concatenation_homomorphism(self, u, v, data):
        S = Z3
        point = tuple(data.draw(st.integers(0, 2)) for _ in range(3))
        tu, tv, tuv = Term(u, 3), Term(v, 3), Term(u + v, 3)
        assert eval_term(S, tuv, point) == S.mul(eval_term(S, tu, point), eval_term(S, tv, point))

    @given(st.integers(1, 4), st.integers(1, 4), words, st.data())
    @settings(max_examples=60)
    def test_monogenic_evaluation_law(self, m, r, word, data):
        S = monogenic_table(m, r)
        t = Term(word, 3)
        exps = tuple(data.draw(st.integers(1, 6)) for _ in range(3))
        point = tuple(S.power(0, e) for e in exps)
        total = power_eval(exponent_vector(t), exps)
        assert eval_term(S, t, point) == S.power(0, total)


class TestExponentVectors:
    def test_counts(self):
        assert exponent_vector(Term((0, 1, 1, 0), 4)).counts == (2, 2, 0, 0)

    def test_dot_product(self):
        assert power_eval(ExponentVector((2, 2, 0, 0)), (2, 1, 1, 1)) == 6

    def test_symbolic_weighting(self):
        counts = (1, 2, 0, 3)
        n1, n2, n3, n4 = counts
        assert power_eval(ExponentVector(counts), (3, 2, 3, 2)) == 3 * n1 + 2 * n2 + 3 * n3 + 2 * n4

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            power_eval(ExponentVector((1, 1)), (1,))


class TestTermFunctions:
    def test_left_zero_k3_has_three_projections(self):
        funcs = term_functions(LEFT_ZERO, 3)
        assert len(funcs) == 3
        assert [f.witness.word for f in funcs] == [(0,), (1,), (2,)]

    def test_semilattice_k2(self):
        funcs = term_functions(MIN2, 2)
        assert len(funcs) == 3

    def test_idempotent_k1_collapses(self):
        assert len(term_functions(MIN2, 1)) == 1

    def test_budget_exceeded(self):
        with pytest.raises(BudgetExceeded) as exc:
            term_functions(Z3, 2, budget=2)
        assert exc.value.size == 3

    def test_deterministic(self):
        a = term_functions(Z3, 2)
        b = term_functions(Z3, 2)
        assert [(f.values, f.witness.word) for f in a] == [(g.values, g.witness.word) for g in b]

    def test_witness_realizes_values(self, semigroups_le3):
        for S in semigroups_le3[:40]:
            for f in term_functions(S, 2):
                for p in all_points(S.order, 2):
                    assert f(p) == eval_term(S, f.witness, p)

    def test_closure_complete_for_short_words(self, semigroups_le3):
        # every raw word of length <= 6 induces a function already in the set
        for S in semigroups_le3:
            if S.order > 2:
                continue
            for k in (1, 2, 3):
                keys = {f.values for f in term_functions(S, k)}
                for vec in raw_word_vectors(S, k, 6):
                    assert vec.tobytes() in keys

    def test_closure_complete_order3_sample(self, semigroups_le3):
        for S in semigroups_le3[60:75]:
            keys = {f.values for f in term_functions(S, 2)}
            for vec in raw_word_vectors(S, 2, 6):
                assert vec.tobytes() in keys

    def test_function_call_indexes_values(self):
        f = term_functions(Z2, 2)[0]
        assert f((1, 0)) == 1
