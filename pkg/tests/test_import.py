import pytest


def test_import():
    import percorsi

    for member_name in percorsi.__all__:
        getattr(percorsi, member_name)


def test_import_cli():
    from percorsi import cli

    for member_name in cli.__all__:
        getattr(cli, member_name)


def test_import_examples():
    from percorsi import examples

    for member_name in examples.__all__:
        getattr(examples, member_name)


if __name__ == "__main__":
    pytest.main()
