import math

import pytest
from scipy.integrate import quad
from scipy.optimize import brentq

from pneufab.design import ActuatorDesign, Family, KirigamiParams, LayerStack, PneuNetParams
from pneufab.errors import EstimateError
from pneufab.estimate import (
    MAX_CONTRACTION,
    ReferenceResult,
    contraction_from_fraction,
    estimate_linear_contraction,
    pouch_fraction,
    reference_frame,
    reference_notes,
    reference_table,
)

STACK = LayerStack(("tpu_nylon_medium", "tpu_nylon_medium"))


def test_full_pouch_matches_semicircle_arc():
    # a strip of unit arc length bent into a semicircle: radius from the arc integral, chord = 2r
    radius = brentq(lambda r: quad(lambda t: r, 0.0, math.pi)[0] - 1.0, 1e-3, 10.0)
    assert contraction_from_fraction(1.0) == pytest.approx(1.0 - 2.0 * radius, abs=1e-9)
    assert MAX_CONTRACTION == pytest.approx(0.3634, abs=1e-4)


def test_zero_pouch_zone():
    assert contraction_from_fraction(0.0) == 0.0
    assert contraction_from_fraction(-0.2) == 0.0
    assert contraction_from_fraction(1.5) == MAX_CONTRACTION


def test_monotone_in_fraction():
    values = [contraction_from_fraction(f / 20) for f in range(21)]
    assert values == sorted(values)


def test_ideal_model_near_measured_linear_contraction():
    measured = next(r for r in reference_table() if r.variant == "tpu_nylon")
    assert abs(MAX_CONTRACTION - measured.strain) < 0.05


def test_linear_pneunet_estimate(load_design):
    design = load_design("linear")
    assert pouch_fraction(design) == pytest.approx((120 - 10 - 6 * 3) / 120)
    assert estimate_linear_contraction(design) == pytest.approx(MAX_CONTRACTION * 92 / 120)


def test_bending_is_supported():
    design = ActuatorDesign("b", Family.BENDING_PNEUNET, STACK, PneuNetParams(width=40, length=100))
    assert 0 < estimate_linear_contraction(design) <= MAX_CONTRACTION


def test_unsupported_family():
    design = ActuatorDesign("k", Family.KIRIGAMI, STACK, KirigamiParams(width=125, height=150))
    with pytest.raises(EstimateError, match="E_UNSUPPORTED_FAMILY"):
        estimate_linear_contraction(design)


def test_reference_table():
    table = reference_table()
    assert len(table) == 5
    by_variant = {r.variant: r for r in table}
    assert by_variant["w125"].strain == -0.40
    assert by_variant["w125"].pressure_kpa == 50.0
    assert by_variant["velostat"].strain == 0.32
    assert len(reference_notes()) == 2


def test_reference_frame_formats_width():
    frame = reference_frame()
    assert list(frame["width"]) == ["-", "-", "100", "125", "150"]
    assert "pressure [kPa]" in frame.columns


@pytest.mark.parametrize("pressure,strain", [(-1.0, 0.1), (50.0, 1.0)])
def test_reference_result_bounds(pressure, strain):
    with pytest.raises(EstimateError, match="E_BAD_VALUE"):
        ReferenceResult("linear_pneunet", "x", None, pressure, strain)
