from __future__ import annotations

import pytest

from quiverlab.quiver import QuiverError
from quiverlab.survey import kronecker_rigidity_survey


class TestSurvey:
    def test_depth_one_four_objects(self):
        report = kronecker_rigidity_survey(1)
        assert len(report.entries) == 4
        kinds = [e.kind for e in report.entries]
        assert kinds.count("transjective") == 2
        assert kinds.count("suspended_projective") == 2
        assert report.all_rigid

    def test_depth_ten_all_rigid(self):
        report = kronecker_rigidity_survey(10)
        assert len(report.entries) == 2 * 10 + 2
        assert report.all_rigid

    def test_dim_vectors_follow_recurrence(self):
        report = kronecker_rigidity_survey(5)
        dims = report.dim_vectors()
        assert dims[0] == (0, 1) and dims[1] == (1, 3)
        # slice sequence 0, 1, 3, 8, 21, 55, ... : x_{n+1} = 3 x_n - x_{n-1}
        seq = [dims[0][0], dims[0][1]]
        for d in dims[1:]:
            seq.append(d[1])
        for a, b, c in zip(seq, seq[1:], seq[2:]):
            assert c == 3 * b - a

    def test_bad_depth(self):
        with pytest.raises(QuiverError):
            kronecker_rigidity_survey(0)

    def test_json_report(self):
        data = kronecker_rigidity_survey(2).to_json()
        assert data["all_rigid"] is True
        assert data["entries"][0]["dim_vector"] == [0, 1]
        assert data["entries"][1]["dim_vector"] == [1, 3]
