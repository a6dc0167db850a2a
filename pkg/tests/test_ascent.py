import random

import pytest

from modascent.ascent import (
    AscentOracle,
    ascends_prime,
    fact_report,
    module_ascends,
    theorem_report,
)
from modascent.errors import DomainError, UnsupportedInputError
from modascent.harness import CampaignConfig, random_module
from modascent.invariants import PrimeIdeal, maximal_ideal
from modascent.modules import cyclic_quotient, free_module, zero_module


@pytest.fixture
def completion():
    return AscentOracle.completion()


def test_oracle_validation(R2):
    with pytest.raises(DomainError):
        AscentOracle("weird")
    with pytest.raises(DomainError):
        AscentOracle.explicit_primes([PrimeIdeal(R2, (0,))])  # m missing
    orc = AscentOracle.explicit_primes([maximal_ideal(R2)])
    assert orc.kind == "explicit"
    assert AscentOracle.henselization().experimental


def test_ascends_prime(R2, completion):
    m = maximal_ideal(R2)
    assert ascends_prime(m, completion)
    assert not ascends_prime(PrimeIdeal(R2, (0,)), completion)
    assert ascends_prime(PrimeIdeal(R2, (0,)), AscentOracle.identity())
    explicit = AscentOracle.explicit_primes([PrimeIdeal(R2, (0,)), m])
    assert ascends_prime(PrimeIdeal(R2, (0,)), explicit)
    assert not ascends_prime(PrimeIdeal(R2, (1,)), explicit)


def test_module_ascends(R2, completion):
    x, y = R2.gens()
    assert module_ascends(cyclic_quotient(R2, [x, y]), completion)
    assert not module_ascends(cyclic_quotient(R2, [x]), completion)
    assert module_ascends(zero_module(R2), completion)
    assert module_ascends(cyclic_quotient(R2, [x]), AscentOracle.identity())


def test_module_ascends_explicit_needs_monomial_annihilator(R2):
    x, y = R2.gens()
    orc = AscentOracle.explicit_primes([maximal_ideal(R2)])
    with pytest.raises(UnsupportedInputError):
        module_ascends(cyclic_quotient(R2, [x + y**2]), orc)


def test_theorem_report_transverse_pair_all_true(R2, completion):
    x, y = R2.gens()
    rep = theorem_report(cyclic_quotient(R2, [x]), cyclic_quotient(R2, [y]),
                         completion)
    assert rep.agree
    assert rep.conditions == {c: True for c in ("i", "ii", "iii", "iv", "vii")}


def test_theorem_report_free_times_line_all_false(R2, completion):
    x, _ = R2.gens()
    rep = theorem_report(free_module(R2, 1), cyclic_quotient(R2, [x]),
                         completion)
    assert rep.agree
    assert rep.conditions == {c: False for c in ("i", "ii", "iii", "iv", "vii")}


def test_theorem_report_self_pair_all_false(R2, completion):
    x, _ = R2.gens()
    Mx = cyclic_quotient(R2, [x])
    rep = theorem_report(Mx, Mx, completion)
    assert rep.agree and not any(rep.conditions.values())


def test_theorem_report_residue_field_pair(R2, completion):
    x, y = R2.gens()
    k = cyclic_quotient(R2, [x, y])
    rep = theorem_report(k, k, completion)
    assert rep.agree and all(rep.conditions.values())
    assert not rep.excluded


def test_exclusion_class_flagged(R2, completion):
    # all Ext examined by (iv) vanish while the tensor product is nonzero
    x, y = R2.gens()
    k = cyclic_quotient(R2, [x, y])
    rep = theorem_report(k, free_module(R2, 1), completion)
    assert rep.excluded
    assert rep.exclusion_reason
    assert rep.agree  # still agrees; the flag only marks the class


def test_zero_module_pair_fully_true(R2, completion):
    x, _ = R2.gens()
    rep = theorem_report(zero_module(R2), cyclic_quotient(R2, [x]), completion)
    assert rep.agree and all(rep.conditions.values())


def test_identity_oracle_everything_true(R2):
    x, _ = R2.gens()
    rep = theorem_report(free_module(R2, 1), cyclic_quotient(R2, [x]),
                         AscentOracle.identity())
    assert rep.agree and all(rep.conditions.values())


def test_fact_report_routes_agree(R2, completion):
    x, y = R2.gens()
    f1 = fact_report(cyclic_quotient(R2, [x]), completion)
    assert f1.conditions == {"vii": False, "viii": False}
    assert f1.derived == {c: False for c in ("i", "ii", "iii", "iv", "v", "vi")}
    f2 = fact_report(cyclic_quotient(R2, [x, y]), completion)
    assert f2.conditions == {"vii": True, "viii": True}


def test_fact_report_explicit_oracle(R3):
    x, y, z = R3.gens()
    N = cyclic_quotient(R3, [x * y, x * z])
    orc = AscentOracle.explicit_primes([PrimeIdeal(R3, (0,)), maximal_ideal(R3)])
    rep = fact_report(N, orc)
    assert not rep.conditions["vii"]
    assert rep.evidence["minimal_primes"] == ["(x)", "(y, z)"]


def test_fact_specialization_matches_theorem(R2, completion):
    x, y = R2.gens()
    rng = random.Random(61)
    cfg = CampaignConfig(seed=0, count=1, max_variables=2)
    for _ in range(8):
        N = random_module(rng, R2, cfg)
        t = theorem_report(free_module(R2, 1), N, completion)
        f = fact_report(N, completion)
        assert set(t.conditions.values()) == {f.conditions["vii"]}


def test_explicit_oracle_monotonicity(R3, completion):
    # a larger ascending set can only turn conditions from false to true
    x, y, z = R3.gens()
    small = AscentOracle.explicit_primes([maximal_ideal(R3)])
    large = AscentOracle.explicit_primes(
        [PrimeIdeal(R3, (0,)), PrimeIdeal(R3, (1, 2)), maximal_ideal(R3)])
    rng = random.Random(67)
    cfg = CampaignConfig(seed=0, count=1, max_variables=3)
    for _ in range(6):
        M = random_module(rng, R3, cfg)
        N = random_module(rng, R3, cfg)
        try:
            small_rep = theorem_report(M, N, small)
            large_rep = theorem_report(M, N, large)
        except UnsupportedInputError:
            continue
        for c in small_rep.conditions:
            if small_rep.conditions[c]:
                assert large_rep.conditions[c]


def test_henselization_marked_experimental(R2):
    x, _ = R2.gens()
    rep = fact_report(cyclic_quotient(R2, [x]), AscentOracle.henselization())
    assert rep.experimental
    assert rep.conditions["vii"] == rep.conditions["viii"] == False  # noqa: E712
