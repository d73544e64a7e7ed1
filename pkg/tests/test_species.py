import itertools
import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from umbra import partitions as P
from umbra.errors import DomainError
from umbra.oracles import enumerate_enriched
from umbra.polys import UniPoly, falling, rising
from umbra.series import FPSeries, fps_compose, fps_exp
from umbra.species import (
    SPECIES_NAMES, QuasiSpecies, delta_pair, divided_powers, linear_sequence, lower_factorial_expansion,
    named_species, random_species, species_compose, species_derive, species_exp, species_ops,
    species_product, species_sum,
)
from umbra.symfunc import m, project_pi


# -- brute-force structure counts on [n] ---------------------------------------------

def _rooted_forests(n):
    """Parent maps [n] -> [n] + {root} without cycles."""
    count = 0
    for parent in itertools.product(range(n + 1), repeat=n):
        ok = True
        for v in range(n):
            seen, u = set(), v
            while u != n and ok:
                if u in seen:
                    ok = False
                seen.add(u)
                u = parent[u]
        count += ok
    return count


def _idempotents(n):
    return sum(
        all(f[f[i]] == f[i] for i in range(n)) for f in itertools.product(range(n), repeat=n)
    )


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def _sets_of_lists(n):
    """Set partitions of [n] with a linear order on every block."""
    total = 0
    for blocks in _set_partitions(list(range(n))):
        w = 1
        for b in blocks:
            w *= len(list(itertools.permutations(b)))
        total += w
    return total


BRUTE = {
    "Deg": lambda n: 1,
    "Inj": lambda n: 1 if n <= 1 else 0,
    "Lin": lambda n: len(list(itertools.permutations(range(n)))),
    "Forest": _rooted_forests,
    "ExpLin": _sets_of_lists,
    "Forest1": _idempotents,
}


@pytest.mark.parametrize("name", SPECIES_NAMES)
def test_named_species_count_structures(name):
    s = named_species(name)
    assert s.coeffs(5) == [BRUTE[name](n) for n in range(6)]


@pytest.mark.parametrize("name", SPECIES_NAMES)
def test_linear_sequence_counts_enriched_functions(name):
    """[m_lam] p_n is the number of enriched functions [n] -> [k] with fiber sizes lam."""
    s = named_species(name)
    for n in range(5):
        p = linear_sequence(s, n)
        for lam in P.partitions_of(n):
            k = len(lam)
            # functions onto the first k points with fiber sizes exactly lam (in that order)
            direct = 0
            for f in itertools.product(range(k), repeat=n):
                sizes = tuple(f.count(j) for j in range(k))
                if sizes == lam:
                    w = 1
                    for size in sizes:
                        w *= BRUTE[name](size)
                    direct += w
            assert p.coeff(lam) == direct
            assert p.coeff(lam) == enumerate_enriched(s, n, k).get(lam, 0)


def test_forest_linear_sequence_table():
    s = named_species("Forest")
    assert linear_sequence(s, 2) == 3 * m([2]) + 2 * m([1, 1])
    assert linear_sequence(s, 3) == 16 * m([3]) + 9 * m([2, 1]) + 6 * m([1, 1, 1])
    assert project_pi(linear_sequence(s, 3)) == UniPoly([0, 9, 6, 1])


@pytest.mark.parametrize("name", SPECIES_NAMES)
def test_projection_equals_lower_factorial_expansion(name):
    s = named_species(name)
    for n in range(7):
        assert project_pi(linear_sequence(s, n)) == lower_factorial_expansion(s, n)
        assert divided_powers(s, n) * factorial(n) == linear_sequence(s, n)


def test_closed_projections():
    x = UniPoly.x()
    for n in range(7):
        assert project_pi(linear_sequence(named_species("Deg"), n)) == x ** n
        assert project_pi(linear_sequence(named_species("Inj"), n)) == falling(n)
        assert project_pi(linear_sequence(named_species("Lin"), n)) == rising(n)


@pytest.mark.parametrize("name", SPECIES_NAMES)
def test_delta_pair_inverts(name):
    s = named_species(name)
    pair = delta_pair(s, 8)
    assert fps_exp(pair["conjugate"]) == s.egf(8)
    assert fps_compose(pair["conjugate"], pair["associated"]) == FPSeries.t(8)


species_draws = st.integers(0, 10 ** 6).map(lambda seed: random_species(random.Random(seed), 6))


@given(species_draws, species_draws)
def test_operations_mirror_generating_functions(s1, s2):
    T = 6
    assert species_sum(s1, s2).egf(T) == s1.egf(T) + s2.egf(T)
    assert species_product(s1, s2).egf(T) == s1.egf(T) * s2.egf(T)
    assert species_exp(s1).egf(T) == fps_exp(s1.egf(T) - FPSeries.constant(1, T))
    inner = s2.egf(T) - FPSeries.constant(1, T)
    assert species_compose(s1, s2).egf(T) == fps_compose(s1.egf(T), inner)
    assert species_derive(s1).coeffs(T - 1) == [s1.coeff(n + 1) for n in range(T)]
    assert species_ops("product", s1, s2).coeffs(T) == species_product(s1, s2).coeffs(T)


def test_operation_examples():
    deg = named_species("Deg")
    assert species_product(deg, deg).coeffs(5) == [2 ** n for n in range(6)]
    assert species_derive(named_species("Lin")).coeffs(4) == [factorial(n + 1) for n in range(5)]
    assert species_exp(named_species("Inj")).coeffs(5) == [1] * 6


def test_admissibility_and_errors():
    assert not QuasiSpecies([0, 1], check=False).is_admissible()
    with pytest.raises(DomainError):
        QuasiSpecies([0, 1])
    with pytest.raises(DomainError):
        named_species("Nope")
    with pytest.raises(DomainError):
        species_ops("compose", named_species("Deg"))
    with pytest.raises(DomainError):
        species_ops("frobnicate", named_species("Deg"))


def test_json_round_trip():
    s = QuasiSpecies([1, 1, Fraction(3, 2), -4])
    data = s.to_json(3)
    assert data == {"a": ["1", "1", "3/2", "-4"]}
    assert QuasiSpecies.from_json(data).coeffs(3) == s.coeffs(3)
