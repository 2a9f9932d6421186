import itertools

import pytest

from pneufab.errors import MaterialError
from pneufab.materials import classify_weight, feed_policy_note, feed_rate_for, load_material_file, materials_frame


@pytest.mark.parametrize("name,feed", [
    ("tpu_nylon_light", 200.0),
    ("tpu_nylon_medium", 160.0),
    ("tpu_nylon_heavy", 100.0),
    ("velostat", 250.0),
    ("pet_film", 120.0),
])
def test_published_feed_rates(materials, name, feed):
    assert materials[name].weld_feed == feed


def test_builtin_table_has_eight_materials(materials):
    assert len(materials) == 8
    assert materials["pet_film"].ptfe_layers == 2
    assert materials["pet_film"].weight_class == "film"


def test_weight_classes():
    assert classify_weight(130) == "light"
    assert classify_weight(240) == "medium"
    assert classify_weight(500) == "heavy"


def test_slowest_material_governs(materials):
    assert feed_rate_for(materials, ["tpu_nylon_light", "tpu_nylon_heavy"]) == 100.0
    note = feed_policy_note(materials, ["tpu_nylon_light", "tpu_nylon_heavy"])
    assert "slowest (100) used" in note
    assert feed_policy_note(materials, ["velostat", "velostat"]) is None


def test_unknown_material(materials):
    with pytest.raises(MaterialError, match="E_UNKNOWN_MATERIAL"):
        materials.lookup("kevlar")


def test_material_file_overrides_and_adds(materials):
    table = load_material_file(
        "[tpu_nylon_light]\nweld_feed_mm_min = 180\n"
        "[silnylon]\ndescription = \"silicone nylon\"\nareal_weight_gsm = 300\n",
        materials,
    )
    assert table["tpu_nylon_light"].weld_feed == 180.0
    assert table["silnylon"].weight_class == "medium"
    assert table["silnylon"].weld_feed == 160.0
    assert materials["tpu_nylon_light"].weld_feed == 200.0


def test_material_file_rejects_unknown_key(materials):
    with pytest.raises(Exception, match="E_UNKNOWN_KEY"):
        load_material_file("[x]\ncolour = red\n", materials)


def test_materials_frame_lists_feeds(materials):
    frame = materials_frame(materials)
    assert len(frame) == 8
    row = frame[frame["name"] == "velostat"].iloc[0]
    assert row["weld feed"] == "250 mm/min"


@pytest.mark.parametrize("layers,feed", [
    (["tpu_nylon_medium", "tpu_nylon_heavy"], 100.0),
    (["tpu_nylon_light", "tpu_nylon_light"], 200.0),
    (["velostat", "velostat"], 250.0),
])
def test_stack_feed_rates(materials, layers, feed):
    assert feed_rate_for(materials, layers) == feed


@pytest.mark.parametrize("size", [2, 3])
def test_feed_rate_ignores_layer_order(materials, size):
    for stack in itertools.combinations_with_replacement(sorted(materials), size):
        expected = min(materials[name].weld_feed for name in stack)
        feeds = {feed_rate_for(materials, list(order)) for order in itertools.permutations(stack)}
        assert feeds == {expected}
