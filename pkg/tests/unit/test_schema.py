import pytest
from pydantic import ValidationError

from locdom.engine.codes import CodeKind
from locdom.engine.schema import CliConfig, Scenario, SolverSettings, SweepOptions


def test_solver_settings_defaults():
    settings = SolverSettings()
    assert settings.exactness_cap == 24
    assert not settings.allow_over_cap
    with pytest.raises(ValidationError):
        SolverSettings(exactness_cap=0)
    with pytest.raises(ValidationError):
        settings.exactness_cap = 30  # type: ignore[misc]


def test_sweep_options():
    options = SweepOptions()
    assert options.workers == 1
    assert options.include_complement
    assert options.ledger_path is None
    with pytest.raises(ValidationError):
        SweepOptions(workers=0)


@pytest.mark.parametrize(("raw", "kind"), [("dld", CodeKind.DLD), (" Sld", CodeKind.SLD)])
def test_scenario_decoding_is_normalised(raw, kind):
    scenario = Scenario(graph6="EkSg", code=[0], decoding=raw)
    assert scenario.decoding is kind
    assert scenario.faults == []


@pytest.mark.parametrize("raw", ["LD", "DOM", "nonsense"])
def test_scenario_rejects_other_decoders(raw):
    with pytest.raises(ValidationError):
        Scenario(graph6="EkSg", code=[0], decoding=raw)


def test_cli_config():
    config = CliConfig(command="solve")
    assert config.output_format == "table"
    assert config.log_level == "WARNING"
    with pytest.raises(ValidationError):
        CliConfig(command="solve", output_format="xml")
    with pytest.raises(ValidationError):
        CliConfig(command="solve", log_level="LOUD")
