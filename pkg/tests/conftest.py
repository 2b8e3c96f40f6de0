import pytest

from friendship_hg import complete, cube, s_5_6_12, sqs8, steiner_triple_system, truncated, universal


@pytest.fixture(scope="session")
def fano():
    return steiner_triple_system(7)


@pytest.fixture(scope="session")
def u_fano(fano):
    return universal(fano)


@pytest.fixture(scope="session")
def cube3():
    return cube(3)


@pytest.fixture(scope="session")
def cube4():
    return cube(4)


@pytest.fixture(scope="session")
def golay_truncated():
    return truncated(s_5_6_12())


@pytest.fixture(scope="session")
def corpus(golay_truncated):
    """Every friendship hypergraph the package can build at desk scale, by name."""
    out = {f"K{r + 1}^{r}": complete(r) for r in (3, 4, 5)}
    for n in (7, 9, 13, 15):
        out[f"U3(STS{n})"] = universal(steiner_triple_system(n))
    out["U4(sqs8)"] = universal(sqs8())
    out["cube3"] = cube(3)
    out["cube4"] = cube(4)
    out["truncated4"] = golay_truncated.hypergraph
    return out


@pytest.fixture(scope="session")
def tight_corpus(corpus):
    return {k: v for k, v in corpus.items() if k.startswith(("K", "U"))}
