import pytest

from syzstab import catalog_entry, load_catalog

import corpus as corpus_mod


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture(scope="session")
def bl2p2():
    return catalog_entry("bl2p2")


@pytest.fixture(scope="session")
def bl3p2():
    return catalog_entry("bl3p2")


@pytest.fixture(scope="session")
def k3_synthetic():
    return catalog_entry("k3-synthetic")


@pytest.fixture(scope="session")
def fuzz_corpus(catalog):
    return corpus_mod.build_corpus(catalog)
