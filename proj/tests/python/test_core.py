import re
import subprocess
import sys

import pytest

import setlab


def evens(e):
    return setlab.WindowSet(e, list(range(0, e, 2)))


def test_window_set_basics():
    a = setlab.translate_down(evens(10), 1)
    assert a.effective_horizon == 9
    assert a.members() == [1, 3, 5, 7]
    assert setlab.dilate(setlab.WindowSet(4, [1, 2, 3]), 3).members() == [3, 6, 9]
    assert setlab.difference_union(evens(20), []).members() == []
    back = setlab.WindowSet.parse(evens(12).to_text())
    assert back == evens(12)
    with pytest.raises(setlab.ParseError):
        setlab.WindowSet.parse("H=4 E=8\nmembers: 1\n")


def test_two_block_parity_examples():
    a = setlab.two_block_parity(1 << 12)
    assert a.members()[:8] == [3, 4, 6, 9, 11, 13, 15, 16]
    assert setlab.gap_profile(a, 1)["covering_gap"] == 3
    v = setlab.cssd_check(a, 2, 64, 64)
    assert not v["holds"]
    assert v["elements"] == [3]
    big = setlab.two_block_parity(1 << 14)
    b = setlab.brauer_search(big, [[1], [2]])
    assert b["found"]
    x, y = b["witness"]
    assert all(m in big for m in (x, y, x + y, x + 2 * y))


def test_classifier_examples():
    assert setlab.syndetic_on_window(evens(64), 2)["holds"]
    v = setlab.syndetic_on_window(evens(64), 1)
    assert v["interval"] == (1, 2)
    assert not setlab.thick_on_window(evens(64), 2)["holds"]
    assert setlab.ip_n_member(setlab.WindowSet.full(64), 3, 64)["witness"] == [1, 2, 3]
    r = setlab.dct_search(setlab.WindowSet(4096, list(range(2, 4096, 2))), 4, 1024)
    assert r["witness"] == [1]


def test_chacon_prefix():
    assert setlab.chacon_word(27) == "0010001010010" "0010001010010" "1"


def test_punch_matches_direct_simulation(oracle_dir):
    out = subprocess.run([sys.executable, str(oracle_dir / "shiftpunch_oracle.py")], check=True,
                         capture_output=True, text=True).stdout
    a = setlab.even_nu2(1 << 15)
    a = setlab.union(a, setlab.WindowSet(1 << 15, [0]))
    trace = setlab.punch_run(a, 1 << 13)
    for level in range(5):
        m = re.search(r"L%d size=(\d+) covering_gap=(\d+)" % level, out)
        s = trace.l_set(level)
        assert len(s) == int(m.group(1))
        assert setlab.gap_profile(s, 1)["covering_gap"] == int(m.group(2))
    m = re.search(r"B size=(\d+) subset_of_A=(\w+)", out)
    assert len(trace.derived_b) == int(m.group(1))
    assert m.group(2) == "True"
    assert setlab.is_subset(trace.derived_b, a.restricted(trace.derived_b.effective_horizon))
    m = re.search(r"returns depth=16 size=(\d+) covering_gap=(\d+)", out)
    gaps = setlab.uniform_recurrence_gaps(trace.derived_b, [16])
    assert gaps[16]["covering_gap"] == int(m.group(2))
    assert trace.verify([1, 100, 4096, 8192])["failures"] == []


def test_full_set_windows():
    trace = setlab.punch_run(setlab.WindowSet.full(256), 128)
    lengths = trace.window_lengths()
    for n in range(1, 129):
        assert lengths[n] == n & -n


def test_partitions():
    p, q = setlab.golden_convergent(1 << 20)
    first, second = setlab.rotation_partition_pair(p - q, q, 1 << 10)
    assert len(first) + len(second) == (1 << 10) - 1
    assert setlab.cssd_check(first, 1, 16, 64)["holds"]
    a, b = setlab.split_syndetic(evens(16))
    assert a.members() == [0, 4, 8, 12]
    assert b.members() == [2, 6, 10, 14]


def test_families():
    fams = setlab.all_upward_closed_families(4)
    assert len(fams) == 168
    for f in fams:
        assert setlab.dual(setlab.dual(f)) == f
    d1, d2, d3 = (setlab.FiniteFamily.delta(4, k) for k in (1, 2, 3))
    assert setlab.family_sum(d1, d2) == d3
    majority = setlab.FiniteFamily.upward_closure(3, [0b011, 0b101, 0b110])
    assert setlab.dual(majority) == majority
    assert not setlab.classify_family(majority)["is_filter"]
