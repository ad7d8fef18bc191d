import pytest

from subshiftlab import (
    KAPPA_ALPHABET,
    TAU_ALPHABET,
    CapacityError,
    DomainError,
    Relabeling,
    Substitution,
    apply,
    capacity_cap,
    eta_prefix,
    image_length,
    iterate,
    letters_of,
    minimal_power,
    r_letter,
    r_letters,
    relabel,
    reverse,
    tau,
    tau_n_a,
    tau_n_x,
)


def w(text: str):
    return TAU_ALPHABET.word(text)


def test_tau_images():
    sub = tau()
    assert str(apply(sub, w("a"))) == "axa"
    assert str(apply(sub, w("x"))) == "y"
    assert str(apply(sub, w("y"))) == "z"
    assert str(apply(sub, w("z"))) == "x"
    assert str(apply(sub, w("axa"))) == "axayaxa"
    assert len(apply(sub, TAU_ALPHABET.empty())) == 0


@pytest.mark.parametrize(
    "n,expected",
    [(0, "a"), (1, "axa"), (2, "axayaxa"), (3, "axayaxazaxayaxa")],
)
def test_tau_n_a_small(n, expected):
    assert str(tau_n_a(n)) == expected


def test_tau_n_a_recursion():
    """
    tau^(n+1)(a) = tau^n(a) tau^n(x) tau^n(a), of length 2^(n+2) - 1.
    """
    for n in range(12):
        assert tau_n_a(n + 1) == tau_n_a(n) + tau_n_x(n) + tau_n_a(n)
        assert len(tau_n_a(n + 1)) == 2 ** (n + 2) - 1


def test_tau_n_a_matches_iteration():
    a = TAU_ALPHABET.letter("a")
    for n in range(9):
        assert iterate(tau(), a, n) == tau_n_a(n)
        assert image_length(tau(), a, n) == 2 ** (n + 1) - 1


def test_iterate_separator_cycle():
    x = TAU_ALPHABET.letter("x")
    assert str(iterate(tau(), x, 0)) == "x"
    assert str(iterate(tau(), x, 4)) == "y"
    assert str(iterate(tau(), x, 3000)) == "x"
    assert image_length(tau(), x, 1000) == 1
    assert [str(tau_n_x(n)) for n in range(6)] == ["x", "y", "z", "x", "y", "z"]


def test_tau_n_a_is_palindrome():
    for n in range(12):
        assert reverse(tau_n_a(n)) == tau_n_a(n)


def test_letters_of_iterates():
    assert {str(s) for s in letters_of(tau_n_a(0))} == {"a"}
    assert {str(s) for s in letters_of(tau_n_a(1))} == {"a", "x"}
    assert {str(s) for s in letters_of(tau_n_a(2))} == {"a", "x", "y"}
    assert letters_of(tau_n_a(3)) == frozenset(TAU_ALPHABET)


def test_eta_prefix():
    assert str(eta_prefix(1)) == "a"
    assert str(eta_prefix(7)) == "axayaxa"
    assert str(eta_prefix(17)) == "axayaxazaxayaxaxa"
    long = eta_prefix(1000)
    assert len(long) == 1000
    for length in (1, 2, 5, 63, 64, 65, 999):
        assert eta_prefix(length).word.is_prefix_of(long.word)
    with pytest.raises(DomainError):
        eta_prefix(0)


def test_eta_odd_positions_hold_a():
    prefix = eta_prefix(2001)
    assert set(str(prefix)[0::2]) == {"a"}
    assert set(str(prefix.separators())) == {"x", "y", "z"}


def test_minimal_power():
    assert minimal_power(1) == 0
    assert minimal_power(3) == 1
    assert minimal_power(4) == 2
    assert minimal_power(7) == 2
    assert minimal_power(8) == 3


def test_r_letter():
    assert [str(r_letter(j)) for j in range(1, 9)] == ["x", "y", "x", "z", "x", "y", "x", "x"]
    assert str(r_letters(8)) == "xyxzxyxx"
    separators = r_letters(500)
    for j in range(1, 501):
        assert separators[j - 1] == r_letter(j)
    with pytest.raises(DomainError):
        r_letter(0)


def test_word_basics():
    u = w("axay")
    assert str(u[1:3]) == "xa"
    assert str(u[3]) == "y"
    assert str(u.prefix(2)) == "ax"
    assert str(u.suffix(3)) == "xay"
    assert len(u.suffix(0)) == 0
    assert u.count(TAU_ALPHABET.letter("a")) == 2
    assert w("xa").is_subword_of(u)
    assert not w("ya").is_subword_of(u)
    assert w("ax") < w("ay")
    assert repr(u) == "Word('axay')"


def test_invalid_words():
    with pytest.raises(DomainError):
        w("ab")
    with pytest.raises(DomainError):
        apply(tau(), KAPPA_ALPHABET.word("ad"))
    with pytest.raises(DomainError):
        w("ax") + KAPPA_ALPHABET.word("a")


def test_invalid_substitutions():
    with pytest.raises(DomainError):
        Substitution.from_images("erasing", TAU_ALPHABET, {"a": "", "x": "y", "y": "z", "z": "x"})
    with pytest.raises(DomainError):
        Substitution.from_images("partial", TAU_ALPHABET, {"a": "axa", "x": "y"})


def test_capacity_guard():
    with capacity_cap(1024):
        assert len(tau_n_a(9)) == 1023
        with pytest.raises(CapacityError) as e:
            tau_n_a(10)
        assert e.value.requested == 2047
        assert e.value.cap == 1024
        with pytest.raises(CapacityError):
            iterate(tau(), TAU_ALPHABET.letter("a"), 12)
        with pytest.raises(CapacityError):
            eta_prefix(1025)


def test_relabeling():
    mapping = Relabeling.from_mapping(
        TAU_ALPHABET, KAPPA_ALPHABET, {"a": "a", "x": "c", "y": "b", "z": "d"}
    )
    assert str(relabel(w("axayaxa"), mapping)) == "acabaca"
    assert relabel(relabel(w("azy"), mapping), mapping.inverse()) == w("azy")
    empty = relabel(TAU_ALPHABET.empty(), mapping)
    assert len(empty) == 0
    assert empty.alphabet == KAPPA_ALPHABET
    with pytest.raises(DomainError):
        Relabeling.from_mapping(
            TAU_ALPHABET, KAPPA_ALPHABET, {"a": "a", "x": "a", "y": "b", "z": "d"}
        )
    with pytest.raises(DomainError):
        relabel(KAPPA_ALPHABET.word("ab"), mapping)


def test_tau_n_a_letter_counts():
    a = TAU_ALPHABET.letter("a")
    for n in range(14):
        u = tau_n_a(n)
        assert u.count(a) == 2**n
        assert len(u) - u.count(a) == 2**n - 1
        assert u.is_prefix_of(tau_n_a(n + 1))


def test_reverse():
    assert str(reverse(w("axay"))) == "yaxa"
    assert len(reverse(TAU_ALPHABET.empty())) == 0
    assert str(reverse(w("axa"))) == "axa"


def test_eta_prefix_agrees_with_iterates():
    for n in range(11):
        a_n = tau_n_a(n)
        assert eta_prefix(len(a_n)).word == a_n
        assert eta_prefix(len(a_n) + 1).word.prefix(len(a_n)) == a_n


def test_eta_prefix_fills_capacity_cap():
    with capacity_cap(1024):
        full = eta_prefix(1024)
        assert len(full) == 1024
        assert full.word == tau_n_a(9) + tau_n_x(9)
        assert len(eta_prefix(600)) == 600
