"""Integer factorization under an explicit effort budget.

Trial division by sieved primes first, then Brent-cycle Pollard rho with a
step budget.  Exceeding the budget raises FactorBudgetExceeded so callers
(the torsion computation) can retry with a larger allowance instead of
hanging on a hard composite.
"""

from __future__ import annotations

import random
from functools import lru_cache
from math import gcd, isqrt

DEFAULT_TRIAL_BOUND = 10 ** 6
DEFAULT_RHO_STEPS = 10 ** 7


class FactorBudgetExceeded(ArithmeticError):
    """Raised when the configured factorization effort is exhausted.

    Carries the factors found so far and the remaining unfactored cofactor.
    """

    def __init__(self, n: int, partial: dict, cofactor: int):
        self.n = n
        self.partial = dict(partial)
        self.cofactor = cofactor
        super().__init__(
            "factorization budget exceeded for %d (unfactored cofactor %d)"
            % (n, cofactor))


@lru_cache(maxsize=4)
def _primes_up_to(bound: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p::p] = b"\x00" * len(sieve[p * p::p])
    return tuple(i for i in range(bound + 1) if sieve[i])


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with the 12 smallest prime bases; deterministic for all
    n < 3.3 * 10^24, far beyond anything factored here."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, rng: random.Random, max_steps: int) -> int | None:
    """One Brent-cycle rho attempt; returns a nontrivial factor or None if
    the step budget ran out."""
    if n % 2 == 0:
        return 2
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    m = 128
    g = r = q = 1
    steps = 0
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        steps += r
        if steps > max_steps:
            return None
        k = 0
        while k < r and g == 1:
            ys = y
            count = min(m, r - k)
            for _ in range(count):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            steps += count
            g = gcd(q, n)
            k += m
            if steps > max_steps and g == 1:
                return None
        r *= 2
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
            steps += 1
            if steps > max_steps:
                return None
    return g if g != n else None


def _split_by_hints(n: int, hints) -> list[int]:
    """Split n into (not necessarily coprime) pieces by taking gcds with the
    hint integers.  Hints typically come from a known multiplicative
    structure of n (e.g. a discriminant assembled from smaller quantities);
    wrong or useless hints only waste a few gcds."""
    pieces = [n]
    for h in hints:
        h = abs(int(h))
        if h <= 1:
            continue
        refined = []
        for m in pieces:
            g = gcd(m, h)
            while 1 < g < m:
                refined.append(g)
                m //= g
                g = gcd(m, g)
            refined.append(m)
        pieces = [p for p in refined if p > 1]
    return pieces


def _factor_into(n: int, factors: dict[int, int], trial_bound: int,
                 budget: list[int], original: int):
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    if n == 1:
        return
    if is_probable_prime(n):
        factors[n] = factors.get(n, 0) + 1
        return
    for p in _primes_up_to(trial_bound):
        if p * p > n:
            break
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    if n == 1:
        return
    if is_probable_prime(n) or n < trial_bound * trial_bound:
        # a composite below trial_bound^2 would have a factor below
        # trial_bound, so the survivor is prime
        factors[n] = factors.get(n, 0) + 1
        return

    rng = random.Random(0xC0FFEE ^ n)
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = None
        while d is None and budget[0] > 0:
            spent = min(budget[0], 500000)
            d = _pollard_brent(m, rng, spent)
            budget[0] -= spent
        if d is None:
            raise FactorBudgetExceeded(original, factors, m)
        stack.append(d)
        stack.append(m // d)


def factorize(n: int, trial_bound: int = DEFAULT_TRIAL_BOUND,
              rho_steps: int = DEFAULT_RHO_STEPS, hints=()) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}.

    Optional hint integers sharing factors with n are gcd-split off before
    any rho work.  Raises FactorBudgetExceeded when neither trial division up
    to trial_bound nor rho within rho_steps finishes the job.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor zero")
    factors: dict[int, int] = {}
    if n == 1:
        return factors
    budget = [rho_steps]
    for piece in _split_by_hints(n, hints):
        _factor_into(piece, factors, trial_bound, budget, n)
    check = 1
    for p, e in factors.items():
        check *= p ** e
    assert check == n, "factorization lost a piece"
    return factors


def square_divisors(factors: dict[int, int], cap: int | None = None) -> list[int]:
    """All d > 0 with d^2 dividing the factored integer, ascending.

    A cap on the candidate count guards against pathologically square-rich
    discriminants; exceeding it raises FactorBudgetExceeded.
    """
    divisors = [1]
    for p, e in sorted(factors.items()):
        half = e // 2
        if half == 0:
            continue
        powers = [p ** k for k in range(half + 1)]
        divisors = [d * q for d in divisors for q in powers]
        if cap is not None and len(divisors) > cap:
            raise FactorBudgetExceeded(0, factors, len(divisors))
    return sorted(divisors)


def iter_square_divisors(factors: dict[int, int], cap: int | None = None):
    """Lazily yield every d > 0 with d^2 dividing the factored integer.

    Depth-first over prime-power choices with a running product, so no list
    of all candidates is ever materialized; the cap bounds the total count.
    """
    primes = [(p, e // 2) for p, e in sorted(factors.items()) if e >= 2]
    count = 0

    def walk(idx: int, value: int):
        nonlocal count
        if idx == len(primes):
            count += 1
            if cap is not None and count > cap:
                raise FactorBudgetExceeded(0, factors, count)
            yield value
            return
        p, half = primes[idx]
        power = 1
        for _ in range(half + 1):
            yield from walk(idx + 1, value * power)
            power *= p

    yield from walk(0, 1)
