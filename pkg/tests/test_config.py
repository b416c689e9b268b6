import pytest
from pydantic import ValidationError

from anc_sieve.config import (
    WORKERS_ENV_VAR,
    AncConfig,
    EnumerationStrategy,
    load_anc_config,
)
from anc_sieve.logger import setup_logging


@pytest.fixture
def config_files(tmp_path):
    base = tmp_path / "base.toml"
    base.write_text(
        "[enumeration]\nmax_total = 8\nstrategy = \"exhaustive\"\n\n[verify]\ncsp_max_total = 6\n",
        encoding="utf-8",
    )
    override = tmp_path / "override.yml"
    override.write_text("verify:\n  csp_max_total: 5\nrender:\n  canvas_px: 200\n", encoding="utf-8")
    return base, override


def test_defaults(monkeypatch):
    monkeypatch.delenv(WORKERS_ENV_VAR, raising=False)
    config = AncConfig.load()
    assert config.enumeration.max_total == 10
    assert config.enumeration.strategy == EnumerationStrategy.BLOCKS
    assert config.enumeration.workers >= 1
    assert config.verify.csp_max_total == 8
    assert config.render.canvas_px == 480


def test_files_merge_in_order(config_files, monkeypatch):
    monkeypatch.delenv(WORKERS_ENV_VAR, raising=False)
    config = load_anc_config(*config_files)
    assert config.enumeration.max_total == 8
    assert config.enumeration.strategy == EnumerationStrategy.EXHAUSTIVE
    assert config.verify.csp_max_total == 5
    assert config.verify.counts_max_total == 9
    assert config.render.canvas_px == 200


def test_workers_from_environment(monkeypatch):
    monkeypatch.setenv(WORKERS_ENV_VAR, "3")
    assert load_anc_config().enumeration.workers == 3
    monkeypatch.setenv(WORKERS_ENV_VAR, "many")
    with pytest.raises(ValueError, match=WORKERS_ENV_VAR):
        load_anc_config()


def test_unknown_key_is_rejected(tmp_path):
    path = tmp_path / "typo.toml"
    path.write_text("[verify]\ncsp_max_totl = 4\n", encoding="utf-8")
    with pytest.raises(ValidationError):
        load_anc_config(path)


def test_unsupported_file_type(tmp_path):
    path = tmp_path / "config.ini"
    path.write_text("[verify]\n", encoding="utf-8")
    with pytest.raises(ValueError, match="Unsupported"):
        load_anc_config(path)


def test_setup_logging_rejects_unknown_level():
    with pytest.raises(ValueError, match="std_out_level"):
        setup_logging(std_out_level="loud")
