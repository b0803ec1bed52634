import pytest

from linniklab.arith import sieve_primes


@pytest.fixture(scope="session")
def table4():
    return sieve_primes(10**4)


@pytest.fixture(scope="session")
def table6():
    return sieve_primes(10**6)


@pytest.fixture(scope="session")
def table7():
    return sieve_primes(10**7)
