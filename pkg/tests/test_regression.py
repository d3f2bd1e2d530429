import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zagreb_indices import regression as rg

from _oracles import ols_normal_equations


def close(a, b, rel=1e-12):
    return abs(a - b) <= rel * max(1.0, abs(a), abs(b))


finite = st.floats(-1e6, 1e6, allow_nan=False, allow_infinity=False)


class TestFit:
    def test_perfect_line(self):
        res = rg.fit([1, 2, 3, 4], [2, 4, 6, 8])
        assert res.slope == 2.0
        assert res.intercept == 0.0
        assert res.pearson_r == 1.0
        assert res.se_slope == 0.0
        assert res.se_intercept == 0.0
        assert res.predict(10) == 20.0

    def test_anticorrelation(self):
        res = rg.fit([1, 2, 3], [6, 4, 2])
        assert res.slope == -2.0
        assert res.intercept == 8.0
        assert res.pearson_r == -1.0

    def test_flat_response(self):
        res = rg.fit([1, 2, 3, 4], [5, 5, 5, 5])
        assert res.slope == 0.0
        assert res.pearson_r == 0.0

    def test_rejections(self):
        with pytest.raises(ValueError, match="three points"):
            rg.fit([1, 2], [1, 2])
        with pytest.raises(ValueError, match="constant"):
            rg.fit([3, 3, 3], [1, 2, 3])
        with pytest.raises(ValueError, match="mismatch"):
            rg.fit([1, 2, 3], [1, 2])

    def test_against_exact_oracle_seeded(self):
        rng = random.Random(20260816)
        for trial in range(300):
            n = rng.randrange(3, 40)
            xs = [rng.randrange(-50, 200) for _ in range(n)]
            if min(xs) == max(xs):
                continue
            ys = [round(0.7 * x + rng.uniform(-30, 30), 3) for x in xs]
            res = rg.fit(xs, ys)
            slope, intercept, r2, sign, se_s, se_i = ols_normal_equations(xs, ys)
            assert close(res.slope, float(slope))
            assert close(res.intercept, float(intercept))
            assert close(res.pearson_r ** 2, float(r2), rel=1e-9)
            assert res.pearson_r == 0.0 or (res.pearson_r > 0) == (sign > 0)
            assert close(res.se_slope, se_s, rel=1e-9)
            assert close(res.se_intercept, se_i, rel=1e-9)

    @given(st.lists(st.tuples(st.integers(-100, 100), st.integers(-100, 100)),
                    min_size=3, max_size=25))
    def test_against_exact_oracle_hypothesis(self, pts):
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        if min(xs) == max(xs):
            return
        res = rg.fit(xs, ys)
        slope, intercept, r2, sign, se_s, se_i = ols_normal_equations(xs, ys)
        assert close(res.slope, float(slope), rel=1e-9)
        assert close(res.intercept, float(intercept), rel=1e-9)
        assert close(res.pearson_r ** 2, float(r2), rel=1e-9)

    @given(st.lists(st.tuples(st.integers(-30, 30), st.integers(-30, 30)),
                    min_size=3, max_size=12),
           st.integers(1, 9), st.integers(-40, 40))
    def test_pearson_affine_invariance(self, pts, scale, shift):
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        if min(xs) == max(xs):
            return
        base = rg.fit(xs, ys)
        moved = rg.fit(xs, [scale * y + shift for y in ys])
        assert math.isclose(moved.pearson_r, base.pearson_r,
                            rel_tol=1e-9, abs_tol=1e-9)
        assert math.isclose(moved.slope, scale * base.slope,
                            rel_tol=1e-9, abs_tol=1e-9)


class TestParsing:
    def test_minimal_dataset(self):
        (rec,) = rg.parse_dataset('name,graph,boiling_point,entropy\n'
                                  'benzene,"6;0-1,1-2,2-3,3-4,4-5,0-5",80.1,64.34\n')
        assert rec.name == "benzene"
        assert rec.graph.vertex_count == 6
        assert rec.properties == {"boiling_point": 80.1, "entropy": 64.34}
        assert rec.descriptors == {"M1": 24, "LM1": 24}

    def test_comments_skipped_and_empty_cells_mean_missing(self):
        text = ('# provenance note\n'
                'name,graph,boiling_point,entropy\n'
                '# another note\n'
                'p4,"4;0-1,1-2,2-3",10,\n')
        (rec,) = rg.parse_dataset(text)
        assert rec.name == "p4"
        assert rec.properties == {"boiling_point": 10.0}

    def test_header_enforced(self):
        with pytest.raises(ValueError, match="bad header"):
            rg.parse_dataset("compound,graph,bp,s\nx,3;0-1,1-2,1,2\n")
        with pytest.raises(ValueError, match="empty dataset"):
            rg.parse_dataset("# only a comment\n")

    def test_row_errors_carry_row_numbers(self):
        head = "name,graph,boiling_point,entropy\n"
        with pytest.raises(ValueError, match="row 1.*cells"):
            rg.parse_dataset(head + "x,3;0-1,10\n")
        with pytest.raises(ValueError, match="row 2.*duplicate"):
            rg.parse_dataset(head + 'x,"3;0-1,1-2",1,\nx,"3;0-1,1-2",2,\n')
        with pytest.raises(ValueError, match="row 1.*bad boiling_point"):
            rg.parse_dataset(head + 'x,"3;0-1,1-2",warm,\n')
        with pytest.raises(ValueError, match="row 1.*not connected"):
            rg.parse_dataset(head + 'x,"4;0-1,2-3",1,\n')
        with pytest.raises(ValueError, match="row 1.*inline graph"):
            rg.parse_dataset(head + "x,justtext,1,\n")
        with pytest.raises(ValueError, match="row 1.*edge token"):
            rg.parse_dataset(head + 'x,"3;0-1,12",1,\n')
        with pytest.raises(ValueError, match="row 1.*empty compound name"):
            rg.parse_dataset(head + ' ,"3;0-1,1-2",1,\n')

    def test_at_reference_requires_base_dir(self):
        text = "name,graph,boiling_point,entropy\nx,@g.txt,1,\n"
        with pytest.raises(ValueError, match="not allowed"):
            rg.parse_dataset(text, base_dir=None)

    def test_at_reference_with_file(self, tmp_path):
        (tmp_path / "g.txt").write_text("3 2\n0 1\n1 2\n")
        csv_path = tmp_path / "d.csv"
        csv_path.write_text("name,graph,boiling_point,entropy\np3,@g.txt,7,\n")
        (rec,) = rg.load_dataset(str(csv_path))
        assert rec.graph.vertex_count == 3
        assert rec.descriptors["M1"] == 6


class TestBundled:
    def test_available(self):
        assert "benzenoid_bp.csv" in rg.available_datasets()

    def test_missing_name(self):
        with pytest.raises(FileNotFoundError, match="no bundled dataset"):
            rg.load_bundled("nope.csv")

    def test_boiling_point_set(self):
        records = rg.load_bundled("benzenoid_bp.csv")
        assert len(records) == 21
        by_name = {r.name: r for r in records}
        assert by_name["naphthalene"].properties["boiling_point"] == 218.0
        assert by_name["coronene"].properties["boiling_point"] == 590.0
        assert by_name["naphthalene"].descriptors == {"M1": 50, "LM1": 84}
        assert by_name["pyrene"].descriptors == {"M1": 94, "LM1": 216}
        assert by_name["coronene"].descriptors == {"M1": 156, "LM1": 420}
        # every record has a boiling point; none ship an entropy value
        for r in records:
            assert "boiling_point" in r.properties
            assert "entropy" not in r.properties

    def test_reproduce_models(self):
        models = rg.reproduce_models(rg.load_bundled("benzenoid_bp.csv"))
        assert set(models) == {(d, p) for d in rg.DESCRIPTORS for p in rg.PROPERTIES}
        assert models[("M1", "entropy")] is None
        assert models[("LM1", "entropy")] is None
        m1 = models[("M1", "boiling_point")]
        assert m1.n_points == 21
        assert close(m1.slope, 3.62893285341, rel=1e-11)
        assert close(m1.intercept, 57.5062019318, rel=1e-11)
        assert close(m1.pearson_r, 0.992687674222, rel=1e-11)
        lm1 = models[("LM1", "boiling_point")]
        assert close(lm1.slope, 1.14245297446, rel=1e-11)
        assert close(lm1.intercept, 170.204902453, rel=1e-11)
        assert close(lm1.pearson_r, 0.962348659771, rel=1e-11)

    def test_result_table(self):
        models = rg.reproduce_models(rg.load_bundled("benzenoid_bp.csv"))
        table = rg.result_table(models)
        lines = table.splitlines()
        assert lines[0].startswith("descriptor,property,n,")
        assert len(lines) == 5
        assert "M1,entropy,0,,,,," in lines
        assert any(ln.startswith("M1,boiling_point,21,3.62893285341,") for ln in lines)
