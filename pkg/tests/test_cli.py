import pytest

from conftest import DESIGNS, design_text
from pneufab.design import parse_design, to_typed
from pneufab.errors import PatternInfeasible
from pneufab.patterns import generate
from runners.base_runner import EXIT_ERROR, EXIT_FAILED, EXIT_OK
from runners.pneufab_runner import PneufabRunner


def run(capsys, *argv):
    code = PneufabRunner.execute([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_materials_table(capsys):
    code, out, _ = run(capsys, "materials")
    assert code == EXIT_OK
    assert "velostat" in out
    assert "250 mm/min" in out


def test_materials_file_override(capsys, tmp_path):
    extra = tmp_path / "shop.materials"
    extra.write_text("[silnylon]\nareal_weight_gsm = 180\n", encoding="utf-8")
    code, out, _ = run(capsys, "materials", "--materials", extra)
    assert code == EXIT_OK
    assert "silnylon" in out


def test_validate_passes(capsys):
    code, out, _ = run(capsys, "validate", DESIGNS / "kirigami_125.pf")
    assert code == EXIT_OK
    assert out.startswith("validation kirigami_125: PASSED")


def test_validate_reports_infeasible_parameters(capsys, tmp_path):
    source = tmp_path / "tight.pf"
    source.write_text(design_text("kirigami", {"width_mm": 125, "height_mm": 150, "ligament_mm": 0.1}),
                      encoding="utf-8")
    code, out, _ = run(capsys, "validate", source)
    assert code == EXIT_FAILED
    assert "FAILED" in out
    assert "error CUT_CLEARANCE ligament 0.1 mm is below the 3 mm cut clearance [E_PARAMS_INFEASIBLE]" in out


def test_infeasible_parameters_read_the_same_in_library_and_cli(capsys, tmp_path, materials):
    text = design_text("kirigami", {"width_mm": 125, "height_mm": 150, "ligament_mm": 0.1})
    with pytest.raises(PatternInfeasible) as err:
        generate(to_typed(parse_design(text), materials), materials=materials)
    assert str(err.value) == "E_PARAMS_INFEASIBLE: ligament 0.1 mm is below the 3 mm cut clearance [CUT_CLEARANCE]"

    source = tmp_path / "tight.pf"
    source.write_text(text, encoding="utf-8")
    for command in ("validate", "gcode"):
        code, out, _ = run(capsys, command, source)
        assert code == EXIT_FAILED
        assert f"{err.value.finding_code} {err.value.message} [{err.value.code}]" in out


def test_gcode_writes_program_and_summary(capsys, tmp_path):
    target = tmp_path / "out" / "rp.gcode"
    code, out, _ = run(capsys, "gcode", DESIGNS / "rect_pouch.pf", "--out", target)
    assert code == EXIT_OK
    assert target.exists()
    lines = target.read_text(encoding="utf-8").splitlines()
    assert lines[-1] == "M30"
    assert "weld length 152.000 mm" in out
    assert "cut length 200.000 mm" in out
    assert "job time" in out
    assert "envelope ok" in out


def test_simulate_reads_emitted_program(capsys, tmp_path):
    target = tmp_path / "rp.gcode"
    run(capsys, "gcode", DESIGNS / "rect_pouch.pf", "--out", target)
    code, out, _ = run(capsys, "simulate", target)
    assert code == EXIT_OK
    assert out.startswith(f"simulate {target}")
    assert "weld length 152.000 mm" in out


def test_simulate_envelope_excursion(capsys, tmp_path):
    target = tmp_path / "far.gcode"
    target.write_text("G21\nG90\nG0 X800 Y10 Z30\nM30\n", encoding="utf-8")
    code, out, _ = run(capsys, "simulate", target)
    assert code == EXIT_FAILED
    assert "envelope excursions 1" in out


def test_plan_prints_orders(capsys):
    code, out, _ = run(capsys, "plan", DESIGNS / "kirigami_100.pf", "--weld-mode", "pulsed:50:500")
    assert code == EXIT_OK
    assert "cut order" in out
    assert "total" in out


def test_preview_text_dump(capsys, tmp_path):
    target = tmp_path / "rp.txt"
    code, _, _ = run(capsys, "preview", DESIGNS / "rect_pouch.pf", "--format", "txt", "--out", target)
    assert code == EXIT_OK
    assert target.read_text(encoding="utf-8").splitlines()[0] == "sheet rect_pouch rect_pouch"


def test_preview_svg(capsys, tmp_path):
    target = tmp_path / "linear.svg"
    code, out, _ = run(capsys, "preview", DESIGNS / "linear.pf", "--out", target)
    assert code == EXIT_OK
    assert target.read_text(encoding="utf-8").startswith("<?xml")
    assert out.strip() == f"preview {target}"


def test_estimate_linear(capsys):
    code, out, _ = run(capsys, "estimate", DESIGNS / "linear.pf")
    assert code == EXIT_OK
    assert "ideal contraction 0.2786" in out
    assert "w125" in out


def test_estimate_kirigami_lists_references_only(capsys):
    code, out, _ = run(capsys, "estimate", DESIGNS / "kirigami_150.pf")
    assert code == EXIT_OK
    assert "no contraction model for kirigami" in out
    assert "note: kirigami actuator lifted a 50 g load" in out


def test_missing_file(capsys, tmp_path):
    code, out, err = run(capsys, "validate", tmp_path / "nope.pf")
    assert code == EXIT_ERROR
    assert out == ""
    assert "E_IO: cannot read" in err


def test_missing_path_argument(capsys):
    code, _, err = run(capsys, "validate")
    assert code == EXIT_ERROR
    assert "E_USAGE" in err


@pytest.mark.parametrize("argv", [["frobnicate"], ["preview", "x.pf", "--format", "pdf"], []])
def test_bad_invocation(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == EXIT_ERROR


def test_bad_weld_mode(capsys):
    code, _, err = run(capsys, "plan", DESIGNS / "linear.pf", "--weld-mode", "pulsed:150:500")
    assert code == EXIT_ERROR
    assert err.startswith("E_")


def test_expected_errors_never_reach_sentry():
    import sentry_init
    from pneufab.errors import DesignError

    event = {"message": "x"}
    expected = DesignError("E_SYNTAX", "bad", 3)
    assert sentry_init._drop_expected(event, {"exc_info": (type(expected), expected, None)}) is None
    io = FileNotFoundError(2, "No such file or directory")
    assert sentry_init._drop_expected(event, {"exc_info": (type(io), io, None)}) is None
    bug = KeyError("x")
    assert sentry_init._drop_expected(event, {"exc_info": (type(bug), bug, None)}) is event
    assert sentry_init._drop_expected(event, {}) is event


def test_report_without_dsn_is_silent(monkeypatch):
    import sentry_init

    monkeypatch.setattr(sentry_init, "SENTRY_DSN", "")
    sentry_init.report(RuntimeError("boom"), runner="test")
