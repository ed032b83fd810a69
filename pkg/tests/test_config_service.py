"""Tests for configuration loading and saving."""

import json

import pytest

from denumerant.models.config import DenumerantConfig, OutputFormat
from denumerant.services.config_service import ConfigurationError, ConfigurationService


@pytest.fixture
def service(tmp_path):
    return ConfigurationService(project_root=tmp_path)


def _write_config(tmp_path, data):
    config_dir = tmp_path / ".denumerant"
    config_dir.mkdir()
    (config_dir / "config.json").write_text(json.dumps(data), encoding="utf-8")


class TestLoadConfiguration:
    """Overrides > environment > .env > config.json > defaults."""

    def test_defaults(self, service):
        config = service.load_configuration()
        assert config == DenumerantConfig()
        assert config.output_format == OutputFormat.TEXT

    def test_config_file(self, service, tmp_path):
        _write_config(tmp_path, {"workers": 3})
        assert service.load_configuration().workers == 3

    def test_env_file_beats_config_file(self, service, tmp_path):
        _write_config(tmp_path, {"workers": 3})
        (tmp_path / ".env").write_text("DENUMERANT_WORKERS=5\n", encoding="utf-8")
        assert service.load_configuration().workers == 5

    def test_environment_beats_env_file(self, service, tmp_path, monkeypatch):
        (tmp_path / ".env").write_text("DENUMERANT_WORKERS=5\n", encoding="utf-8")
        monkeypatch.setenv("DENUMERANT_WORKERS", "7")
        assert service.load_configuration().workers == 7

    def test_overrides_win(self, service, monkeypatch):
        monkeypatch.setenv("DENUMERANT_OUTPUT_FORMAT", "csv")
        config = service.load_configuration({"output_format": "json", "workers": None})
        assert config.output_format == OutputFormat.JSON
        assert config.workers == 1

    def test_invalid_json(self, service, tmp_path):
        config_dir = tmp_path / ".denumerant"
        config_dir.mkdir()
        (config_dir / "config.json").write_text("{not json", encoding="utf-8")
        with pytest.raises(ConfigurationError):
            service.load_configuration()

    def test_non_object_json(self, service, tmp_path):
        _write_config(tmp_path, [1, 2])
        with pytest.raises(ConfigurationError):
            service.load_configuration()

    def test_invalid_value(self, service, monkeypatch):
        monkeypatch.setenv("DENUMERANT_WORKERS", "0")
        with pytest.raises(ConfigurationError):
            service.load_configuration()

    def test_unrelated_variables_ignored(self, service, monkeypatch):
        monkeypatch.setenv("WORKERS", "9")
        assert service.load_configuration().workers == 1


class TestSaveConfiguration:

    def test_writes_non_defaults_only(self, service, tmp_path):
        service.save_configuration(DenumerantConfig(workers=4))
        saved = json.loads((tmp_path / ".denumerant" / "config.json").read_text(encoding="utf-8"))
        assert saved == {"workers": 4}
        assert service.config.workers == 4

    def test_round_trip(self, service, tmp_path):
        service.save_configuration(DenumerantConfig(seed=11, output_format=OutputFormat.CSV))
        loaded = ConfigurationService(project_root=tmp_path).load_configuration()
        assert loaded.seed == 11
        assert loaded.output_format == OutputFormat.CSV
