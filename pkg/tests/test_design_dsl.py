import pytest

from conftest import CORPUS, design_text
from pneufab.design import Family, KirigamiParams, parse_design, serialize_design, to_typed
from pneufab.errors import DesignError, MaterialError


def test_parse_sections_and_keys():
    doc = parse_design("[design]\nname = demo\ntype = rect_pouch\n[params]\nwidth_mm = 60\nheight_mm = 40")
    assert doc.names() == ["design", "params"]
    assert sum(len(s.entries) for s in doc.sections) == 4
    assert doc.section("params").get("width_mm").values[0].text == "60"


def test_comments_blank_lines_and_crlf():
    doc = parse_design("# header\r\n\r\n[design]  # trailing\r\nname = \"a # b\"\r\n")
    assert doc.section("design").get("name").values[0].text == "a # b"


def test_multi_value_entry():
    doc = parse_design("[layers]\ninlet_1 = c0, bottom, 20\n")
    values = doc.section("layers").get("inlet_1").values
    assert [v.kind for v in values] == ["IDENT", "IDENT", "NUMBER"]


@pytest.mark.parametrize("text,line,column", [
    ("[design\nname = a", 1, 8),
    ("[design]\nname a", 2, 6),
    ("[design]\nname = 1.", 2, 9),
    ("[design]\nname = \"open", 2, 8),
    ("name = a", 1, 1),
])
def test_syntax_errors_carry_position(text, line, column):
    with pytest.raises(DesignError, match="E_SYNTAX") as err:
        parse_design(text)
    assert err.value.line == line
    assert err.value.column == column


def test_duplicates_rejected():
    with pytest.raises(DesignError, match="E_DUP_SECTION"):
        parse_design("[design]\n[design]\n")
    with pytest.raises(DesignError, match="E_DUP_KEY") as err:
        parse_design("[design]\nname = a\nname = b\n")
    assert err.value.line == 3


def test_kirigami_design_typed(materials):
    text = design_text("kirigami", {"width_mm": 125, "height_mm": 150})
    design = to_typed(parse_design(text), materials)
    assert design.family is Family.KIRIGAMI
    assert design.params == KirigamiParams(width=125.0, height=150.0)
    assert design.layers.layers == ("tpu_nylon_medium", "tpu_nylon_medium")
    assert design.inlet_width == 8.0


def test_unknown_key_and_material(materials):
    with pytest.raises(DesignError, match="E_UNKNOWN_KEY"):
        to_typed(parse_design(design_text("rect_pouch", {"width_mm": 60, "height_mm": 40, "depth_mm": 3})), materials)
    with pytest.raises(MaterialError, match="E_UNKNOWN_MATERIAL"):
        to_typed(parse_design(design_text("rect_pouch", {"width_mm": 60, "height_mm": 40},
                                          layers=("tpu_nylon_medium", "kevlar"))), materials)


@pytest.mark.parametrize("params", [
    {"width_mm": 0, "height_mm": 40},
    {"width_mm": -3, "height_mm": 40},
])
def test_lengths_must_be_positive(materials, params):
    with pytest.raises(DesignError, match="E_BAD_VALUE"):
        to_typed(parse_design(design_text("rect_pouch", params)), materials)


def test_incline_range(materials):
    params = {"width_mm": 40, "length_mm": 120, "incline_deg": 90}
    with pytest.raises(DesignError, match="E_BAD_VALUE"):
        to_typed(parse_design(design_text("twisting_pneunet", params)), materials)


def test_missing_required_key(materials):
    with pytest.raises(DesignError, match="E_MISSING_KEY"):
        to_typed(parse_design(design_text("rect_pouch", {"width_mm": 60})), materials)


def test_antagonistic_needs_two_distinct_inlets(materials):
    layers = ("tpu_nylon_medium",) * 3
    params = {"width_mm": 40, "length_mm": 120}
    with pytest.raises(DesignError, match="exactly 2 inlets"):
        to_typed(parse_design(design_text("antagonistic_pneunet", params, layers, extra="inlet_1 = l0, bottom, 12")),
                 materials)
    extra = "inlet_1 = l0, bottom, 12\ninlet_2 = l0, bottom, 28"
    with pytest.raises(DesignError, match="distinct"):
        to_typed(parse_design(design_text("antagonistic_pneunet", params, layers, extra=extra)), materials)


def test_serialize_canonical_numbers(load_design):
    text = serialize_design(load_design("kirigami_125"))
    assert "width_mm = 125\n" in text
    assert "125.0" not in text


@pytest.mark.parametrize("name", CORPUS)
def test_serialize_reparses_to_same_design(load_design, materials, name):
    design = load_design(name)
    assert to_typed(parse_design(serialize_design(design)), materials) == design


def test_inlet_offset_must_be_finite(materials):
    extra = "inlet_1 = c0, bottom, " + "9" * 400
    with pytest.raises(DesignError, match="E_BAD_VALUE.*out of range"):
        to_typed(parse_design(design_text("rect_pouch", {"width_mm": 60, "height_mm": 40}, extra=extra)), materials)
