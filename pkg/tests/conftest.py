import pytest

from percorsi import examples


@pytest.fixture()
def bowtie_graph():
    return examples.bowtie_network()


@pytest.fixture()
def bowtie_paths():
    return examples.bowtie_paths()


@pytest.fixture()
def skip_graph():
    return examples.skip_network()


@pytest.fixture()
def shared_graph():
    return examples.shared_network()
