import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from yoshimura import BETA_GOLD, BoomConfiguration, YoshimuraDesign, build_chain, build_mesh
from yoshimura.documents import ConfigDocument, canonical_json, plan_from_dict, plan_to_dict
from yoshimura.configspace import enumerate_workspace, gray_code_plan
from yoshimura.exports import (
    frames_to_csv,
    mesh_to_obj,
    parse_obj,
    workspace_to_csv,
    workspace_to_json,
)
from yoshimura.patterns import MOUNTAIN, VALLEY, generate_pattern, pattern_to_svg

from conftest import triangle_edge_errors

GOLD_DEG = math.degrees(BETA_GOLD)

state_words = st.text(alphabet="01", min_size=3, max_size=3)
documents = st.builds(
    ConfigDocument,
    n=st.just(3),
    beta_degrees=st.floats(min_value=30.5, max_value=60.0),
    L=st.floats(min_value=0.1, max_value=100.0),
    states=st.lists(state_words, min_size=0, max_size=6).map(tuple),
    metadata=st.dictionaries(
        st.text(min_size=1, max_size=8),
        st.one_of(st.text(max_size=12), st.integers(), st.floats(allow_nan=False)),
        max_size=3,
    ),
)


class TestConfigDocument:
    def test_parse_serialize_example(self):
        doc = ConfigDocument(
            n=3, beta_degrees=GOLD_DEG, L=2.0, states=("111", "001"),
            metadata={"note": "arc", "fabrication": {"gap_mm": 1.0}},
        )
        again = ConfigDocument.loads(doc.dumps())
        assert again == doc

    @given(documents)
    @settings(max_examples=80, deadline=None)
    def test_round_trip_identity(self, doc):
        assert ConfigDocument.loads(doc.dumps()) == doc
        # canonical form is a fixed point of parse-serialize
        assert ConfigDocument.loads(doc.dumps()).dumps() == doc.dumps()

    def test_bad_state_rejected(self):
        with pytest.raises(ValueError):
            ConfigDocument(n=3, beta_degrees=35.0, states=("01x",))

    def test_parse_error_reports_position(self):
        with pytest.raises(ValueError, match="line"):
            ConfigDocument.loads("{not json")

    def test_missing_design(self):
        with pytest.raises(ValueError):
            ConfigDocument.loads('{"states": []}')

    def test_boom_construction(self):
        doc = ConfigDocument(n=3, beta_degrees=GOLD_DEG, states=("111",))
        boom = doc.boom()
        assert isinstance(boom, BoomConfiguration)
        assert boom.word == "111"

    def test_metadata_passthrough(self):
        meta = {"print_offsets": {"d1_mm": 1.0, "d2_mm": 1.5}, "note": "sample"}
        doc = ConfigDocument(n=3, beta_degrees=GOLD_DEG, states=(), metadata=meta)
        assert ConfigDocument.loads(doc.dumps()).metadata == meta


class TestPlanDocument:
    def test_round_trip(self):
        plan = gray_code_plan(1)
        again = plan_from_dict(json.loads(canonical_json(plan_to_dict(plan))))
        assert again.sequence == plan.sequence
        assert again.flips == plan.flips


class TestPattern:
    def test_row_and_facet_counts(self):
        design = YoshimuraDesign(3, BETA_GOLD, 100.0)
        doc = generate_pattern(design, 2)
        assert len(doc.facets) == 2 * 2 * design.n
        valleys = [l for l in doc.lines if l.kind == VALLEY]
        mountains = [l for l in doc.lines if l.kind == MOUNTAIN]
        assert len(valleys) == 2 * design.n
        assert len(mountains) == 4 * 2 * design.n

    def test_valley_lines_horizontal_unit_length(self):
        design = YoshimuraDesign(3, BETA_GOLD, 100.0)
        doc = generate_pattern(design, 1)
        for line in doc.lines:
            if line.kind == VALLEY:
                assert line.start[1] == line.end[1]
                assert line.length == pytest.approx(100.0, abs=1e-9)

    def test_mountain_inclination_is_beta(self):
        for beta_deg in (30.0, 31.72, 40.0):
            design = YoshimuraDesign(3, math.radians(beta_deg), 1.0)
            doc = generate_pattern(design, 1)
            for line in doc.lines:
                if line.kind == MOUNTAIN:
                    assert math.degrees(line.inclination) == pytest.approx(
                        beta_deg, abs=1e-9
                    )

    def test_row_height_twice_half_height(self):
        design = YoshimuraDesign(3, math.radians(35), 7.0)
        doc = generate_pattern(design, 3)
        assert doc.height == pytest.approx(3 * 2 * design.w, abs=1e-12)

    def test_svg_styles(self):
        design = YoshimuraDesign(3, BETA_GOLD, 100.0)
        svg = pattern_to_svg(generate_pattern(design, 1))
        assert svg.startswith("<svg")
        assert "stroke-dasharray" in svg  # valleys dashed
        assert svg.count("<line") == 5 * design.n
        assert "beta=31.717" in svg

    def test_rejects_zero_rows(self):
        with pytest.raises(ValueError):
            generate_pattern(YoshimuraDesign(3, BETA_GOLD), 0)


class TestMeshExport:
    def test_obj_objects_and_unit_restore(self, gold_design):
        design = YoshimuraDesign(3, BETA_GOLD, 50.0)
        config = BoomConfiguration.from_words(design, ["111"] * 3)
        meshes = build_mesh(config)
        text = mesh_to_obj(meshes, scale=design.L)
        assert text.count("o module_") == 3
        parsed = parse_obj(text)
        zs = [v[2] for verts, _ in parsed.values() for v in verts]
        assert max(zs) == pytest.approx(3 * math.tan(BETA_GOLD) * 50.0, abs=1e-5)

    def test_reparsed_edge_lengths(self, gold_design):
        config = BoomConfiguration.from_words(gold_design, ["100", "011"])
        meshes = build_mesh(config)
        parsed = parse_obj(mesh_to_obj(meshes, scale=1.0))
        # triangle side lengths from the file agree with the live mesh to 1e-6
        for (name, (_verts, tris)), mesh in zip(sorted(parsed.items()), meshes):
            live = {
                tuple(sorted(labels)): [mesh.vertices[l] for l in labels]
                for labels, _ in mesh.facets
            }
            assert len(tris) == len(mesh.facets)
            file_lengths = sorted(
                round(float(np.linalg.norm(a - b)), 6)
                for tri in tris
                for a, b in ((tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0]))
            )
            live_lengths = sorted(
                round(float(np.linalg.norm(a - b)), 6)
                for pts in live.values()
                for a, b in ((pts[0], pts[1]), (pts[1], pts[2]), (pts[2], pts[0]))
            )
            assert file_lengths == live_lengths

    def test_deterministic(self, gold_design):
        config = BoomConfiguration.from_words(gold_design, ["101"])
        a = mesh_to_obj(build_mesh(config))
        b = mesh_to_obj(build_mesh(config))
        assert a == b


class TestTables:
    def test_frames_csv(self, gold_design):
        config = BoomConfiguration.from_words(gold_design, ["111", "000"])
        chain = build_chain(config)
        text = frames_to_csv(chain, scale=2.0)
        lines = text.strip().splitlines()
        assert lines[0].startswith("frame,r11")
        assert len(lines) == 4  # header + 3 frames
        first = lines[1].split(",")
        assert first[0] == "0"
        assert [float(x) for x in first[1:10]] == [1, 0, 0, 0, 1, 0, 0, 0, 1]

    def test_workspace_csv_and_json(self, gold_design):
        ws = enumerate_workspace(gold_design, 1)
        csv_text = workspace_to_csv(ws)
        assert len(csv_text.strip().splitlines()) == 9
        data = json.loads(workspace_to_json(ws))
        assert data["raw_count"] == 8
        assert len(data["points"]) == 8
