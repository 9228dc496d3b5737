import pytest
from hypothesis import given, settings, strategies as st
from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group

from endvertex.constructions import Cyclic, Dicyclic, Dihedral
from endvertex.errors import PresentationSyntaxError, TableOverflow, UndeclaredGenerator
from endvertex.presentation import (
    GroupWord,
    Presentation,
    coset_enumerate,
    evaluate_word,
    parse_presentation,
    parse_word,
    realize,
)

# (presentation, stated order), transcribed to ASCII
QUOTED = {
    "order40": ("< a,b | a^5 = b^8 = e, bab^-1 = a^2 >", 40),
    "order24a": ("< a,b | a^3 = b^8 = e, bab^-1 = a^-1 >", 24),
    "order24b": ("< a,b,c | a^2=b^2=c^3=(ac)^2=(ba)^4=e, bc=cb >", 24),
    "order36": ("< a,b | a^9=b^2=e, (a^-1b)^2=ba^-2 >", 36),
    "order72a": ("< a,b,c | a^2=b^2=c^9=(ac)^2=e, bac^-1=cab, abcb=bac, bc^3=c^3b >", 72),
    "order72b": ("< a,b,c,d | a^2=b^2=c^3=d^3=(bc)^3=(abc)^2=e, ad=d^2a, ac=c^2a, cd=dc, bd=db >", 72),
}


def w(text):
    return parse_word(text)


def test_parse_single_relator():
    P = parse_presentation("< a | a^5 = e >")
    assert P.generators == ("a",)
    assert P.relators == (w("a^5"),)


def test_parse_equation_chain():
    P = parse_presentation("< a,b | a^5 = b^8 = e, b a b^-1 = a^2 >")
    assert P.generators == ("a", "b")
    assert set(P.relators) == {w("a^5"), w("b^8"), w("b a b^-1 a^-2")}


@pytest.mark.parametrize("text", ["< a,b | a^2 = >", "< a | a^ >", "< a, | a >", "a | a^2", "< a | (a b >"])
def test_syntax_errors_carry_position(text):
    with pytest.raises(PresentationSyntaxError) as info:
        parse_presentation(text)
    assert info.value.pos is not None
    assert "position" in str(info.value)


def test_undeclared_generator():
    with pytest.raises(UndeclaredGenerator):
        parse_presentation("< a | a^2 = c >")


def test_word_syntax_variants():
    assert w("a^{-1}") == w("a^-1") == GroupWord((("a", -1),))
    assert w("(ab)^2") == w("a b a b")
    assert w("(ab)^-1") == w("b^-1 a^-1")
    assert w("a a^-1") == w("1") == GroupWord()


def test_letters_need_no_spaces():
    assert w("bac^-1") == w("b a c^-1")


@pytest.mark.parametrize("name", sorted(QUOTED))
def test_round_trip(name):
    P = parse_presentation(QUOTED[name][0])
    assert parse_presentation(str(P)) == P


@given(st.lists(st.tuples(st.sampled_from("abc"), st.integers(-4, 4)), max_size=12))
def test_word_round_trip(letters):
    word = GroupWord(tuple(letters))
    assert parse_word(str(word)) == word
    assert word * word.inverse() == GroupWord()


@pytest.mark.parametrize("text, n", [
    ("< a | a^5 = e >", 5),
    ("< a | a^1 = e >", 1),
    ("< a, b | a^2, b^2, (ab)^3 >", 6),
    ("< r, s, t | r^2 = s^3 = t^4 = r s t >", 48),
])
def test_coset_counts(text, n):
    assert coset_enumerate(text).n_cosets == n


@pytest.mark.parametrize("name", sorted(QUOTED))
def test_quoted_presentations(name):
    text, order = QUOTED[name]
    P = parse_presentation(text)
    G = realize(P)
    assert G.order == order
    images = dict(zip(P.generators, G.generators))
    for r in P.relators:
        assert evaluate_word(r, images, G.degree).is_identity(), str(r)


def _sympy_order(P: Presentation) -> int:
    F, *gens = free_group(" ".join(P.generators))
    sym = dict(zip(P.generators, gens))
    rels = []
    for r in P.relators:
        word = F.identity
        for s, e in r.letters:
            word = word * sym[s] ** e
        rels.append(word)
    return FpGroup(F, rels).order()


@pytest.mark.parametrize("name", ["order40", "order24a", "order24b", "order36", "order72a"])
def test_orders_agree_with_sympy(name):
    P = parse_presentation(QUOTED[name][0])
    assert coset_enumerate(P).n_cosets == _sympy_order(P)


def test_infinite_group_overflows():
    with pytest.raises(TableOverflow):
        coset_enumerate("< a, b | a^2 >", max_cosets=500)
    with pytest.raises(TableOverflow):
        coset_enumerate("< a | >", max_cosets=200)


def test_table_is_complete_and_regular():
    T = coset_enumerate(QUOTED["order40"][0])
    assert T.is_complete()
    perms = T.generator_permutations()
    assert all(sorted(p.images) == list(range(40)) for p in perms)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 30))
def test_standard_presentations_match_constructions(k):
    cyc = realize(f"< a | a^{k} >")
    assert cyc.order_multiset() == Cyclic(k).build().order_multiset()
    if k >= 2:
        dih = realize(f"< a, b | a^{k} = b^2 = e, b a b^-1 = a^-1 >")
        assert dih.order_multiset() == Dihedral(2 * k).build().order_multiset()
        dic = realize(f"< a, b | a^{2 * k} = e, b^2 = a^{k}, b a b^-1 = a^-1 >")
        assert dic.order == 4 * k
        assert dic.order_multiset() == Dicyclic(4 * k).build().order_multiset()


def test_quoted_dicyclic_form_is_dihedral():
    # b^2 = e in place of b^2 = a^k gives the dihedral group of order 2k
    G = realize("< a, b | a^6 = b^2 = e, b a b^-1 = a^-1 >")
    assert G.order == 12
    assert G.order_multiset() == Dihedral(12).build().order_multiset()
