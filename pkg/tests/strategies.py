"""Shared hypothesis strategies: small partitions and random Gamma elements."""

from hypothesis import strategies as st

from superq.gamma import GammaElement
from superq.partitions import enumerate_odd, enumerate_ordinary, enumerate_strict
from superq.rational import rat


def rationals(max_num=30, max_den=12):
    return st.builds(
        rat, st.integers(-max_num, max_num), st.integers(1, max_den)
    )


def odd_partitions(max_size=7):
    pool = [rho for n in range(max_size + 1) for rho in enumerate_odd(n)]
    return st.sampled_from(pool)


def strict_partitions(max_size=8):
    pool = [lam for n in range(max_size + 1) for lam in enumerate_strict(n)]
    return st.sampled_from(pool)


def ordinary_partitions(max_size=4):
    pool = [mu for n in range(1, max_size + 1) for mu in enumerate_ordinary(n)]
    return st.sampled_from(pool)


def gamma_elements(max_degree=6, max_terms=4):
    return st.dictionaries(
        odd_partitions(max_degree), rationals(), max_size=max_terms
    ).map(GammaElement)
