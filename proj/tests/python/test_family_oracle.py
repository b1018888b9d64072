import subprocess
import sys

import setlab


def test_transcript_matches_frozen_file(data_dir):
    assert setlab.family_lab_transcript(4) == (data_dir / "family_lab_n4.txt").read_text()


def test_independent_oracle_reproduces_transcript(oracle_dir, data_dir):
    out = subprocess.run([sys.executable, str(oracle_dir / "family_lab_oracle.py")], check=True,
                         capture_output=True, text=True).stdout
    assert out == (data_dir / "family_lab_n4.txt").read_text()
