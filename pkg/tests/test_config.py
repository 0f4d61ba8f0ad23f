import pytest

from bfun.config import ConsistencyConfig, ScanConfig, SuiteConfig, from_args


def test_defaults():
    assert SuiteConfig().ranks == (2, 3, 4)
    assert ScanConfig().boxes == ((2, 5), (3, 3))


def test_from_args():
    assert from_args(SuiteConfig, ["--ranks", "2,3", "--trials", "5"]) == SuiteConfig(ranks=(2, 3), trials=5)
    assert from_args(ScanConfig, ["--boxes", "2:4,4:1"]).boxes == ((2, 4), (4, 1))
    assert from_args(ConsistencyConfig, ["--show-matches", "false"]).show_matches is False
    assert from_args(SuiteConfig, ["--families", "bg3"]).families == ("bg3",)


def test_bad_value():
    with pytest.raises(ValueError):
        from_args(SuiteConfig, ["--trials", "many"])
