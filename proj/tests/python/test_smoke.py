def test_import():
    import bpcat  # noqa: F401
