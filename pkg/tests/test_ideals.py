import json
from itertools import product
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from qcms import ideals
from qcms.algebra import POLY
from qcms.ideals import (
    IdealError,
    QuotientBasis,
    build,
    build_from_triple,
    contains,
    ideal_equal,
    lemma17_check,
    normal_form,
    quotient_dim,
)
from qcms.linalg import rank
from qcms.presentations import classical_triple, floer_triple, graded_triple, quantum_triple
from qcms.scalar import Scalar

alpha, beta, gamma = POLY.gens()


def _brute_span_dim(gens, d):
    # independent oracle: rank of all degree-d products m*f for homogeneous f
    rows = []
    for f in gens:
        fd = f.top_degree()
        for a, b, c in product(range(d // 2 + 1), range(d // 4 + 1), range(d // 6 + 1)):
            if 2 * a + 4 * b + 6 * c + fd == d:
                p = POLY.monomial((a, b, c)) * f
                rows.append({m: v for (m, _), v in p.terms.items()})
    cols = {}
    out = [{cols.setdefault(m, len(cols)): v for m, v in r.items()} for r in rows]
    return rank(out)


def test_i1_examples():
    i1 = build_from_triple(classical_triple(1), 12)
    assert [str(p) for p in i1.span(2)] == ["α"]
    assert contains(i1, beta - 8)
    assert not contains(i1, POLY.one())
    assert normal_form(beta, 1, i1) == POLY.scalar(8)
    assert quotient_dim(1, i1) == 1


def test_i2_examples():
    i2 = build_from_triple(classical_triple(2), 24)
    assert len(i2.span(4)) == 1
    assert quotient_dim(2, i2) == 4
    assert normal_form(alpha, 2, i2) == alpha
    assert normal_form(alpha ** 3, 2, i2) == alpha * 16 + gamma
    assert normal_form(classical_triple(2).p1, 2, i2) == POLY.zero()


@pytest.mark.parametrize("r", [2, 3, 4])
def test_leading_span_against_brute_force(r):
    q = graded_triple(r)
    ideal = build_from_triple(q)
    counts = ideal.pivot_degrees()
    for d in range(0, ideal.cap + 1, 2):
        assert counts.get(d, 0) == _brute_span_dim(q.entries, d)


def test_cap_too_small():
    with pytest.raises(IdealError):
        build([alpha ** 3], 4)
    ideal = build_from_triple(floer_triple(1))
    with pytest.raises(IdealError):
        contains(ideal, beta ** 5)


@pytest.mark.parametrize("g", [1, 2, 3, 4, 5])
def test_quotient_dims(g):
    want = comb(g + 2, 3)
    assert len(QuotientBasis(g)) == want == len(QuotientBasis(g).monomials)
    for t in (classical_triple(g), graded_triple(g), floer_triple(g), quantum_triple(g, g)):
        assert quotient_dim(g, build_from_triple(t)) == want


def test_ideal_equality():
    i1 = build_from_triple(classical_triple(1))
    assert ideal_equal(i1, build_from_triple(floer_triple(1)), 1)
    for g in (1, 3, 5):
        assert not ideal_equal(build_from_triple(floer_triple(g)),
                               build_from_triple(quantum_triple(g, g)), g)
    for g in (2, 4):
        assert ideal_equal(build_from_triple(floer_triple(g)),
                           build_from_triple(quantum_triple(g, g)), g)


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_gamma_inclusions(g):
    report = lemma17_check(g)
    assert report.passed
    assert len(report.checks) == 6 * g


def test_whole_ring_at_index_zero():
    j0 = build_from_triple(quantum_triple(0, 3), 8)
    assert contains(j0, gamma * alpha)


coef = st.builds(Scalar, st.integers(-3, 3), st.integers(-1, 1))


@settings(max_examples=25)
@given(st.lists(coef, min_size=4, max_size=4), st.lists(coef, min_size=3, max_size=3))
def test_normal_form_properties(basis_coefs, mult):
    ideal = build_from_triple(floer_triple(2))
    basis = QuotientBasis(2).elements()
    combo = POLY.zero()
    for c, m in zip(basis_coefs, basis):
        combo = combo + m * c
    assert normal_form(combo, 2, ideal) == combo
    member = POLY.zero()
    for c, f in zip(mult, floer_triple(2).entries):
        member = member + f * c
    noisy = combo + member * (alpha + 1)
    assert normal_form(noisy, 2, ideal) == combo
    assert contains(ideal, noisy) == (not combo)


# -- cache -----------------------------------------------------------------
def _cache_files(path):
    return sorted(p for p in path.iterdir() if p.suffix == ".json")


def test_cache_round_trip(tmp_path):
    t = quantum_triple(3, 3)
    fresh = build_from_triple(t, cache_dir=tmp_path)
    files = _cache_files(tmp_path)
    assert len(files) == 1
    data = json.loads(files[0].read_text())
    assert data["version"] == ideals.CACHE_VERSION and data["kind"] == "quantum"
    assert data["g"] == 3 and data["r"] == 3 and data["cap"] == fresh.cap
    again = build_from_triple(t, cache_dir=tmp_path)
    assert again.form == fresh.form


def _corruptions():
    def bad_version(d):
        d["version"] = 99

    def wrong_shape(d):
        key = next(iter(d["spans"]))
        d["spans"][key][0].append("0")

    def tampered_value(d):
        key = sorted(d["spans"], key=int)[-1]
        row = d["spans"][key][0]
        row[-1] = "12345"

    def tampered_with_checksum(d):
        tampered_value(d)
        d["checksum"] = ideals._checksum(d["spans"])

    def dropped_row(d):
        key = sorted(d["spans"], key=int)[0]
        d["spans"][key].pop()
        d["checksum"] = ideals._checksum(d["spans"])

    return [bad_version, wrong_shape, tampered_value, tampered_with_checksum, dropped_row]


@pytest.mark.parametrize("corrupt", _corruptions(), ids=lambda f: f.__name__)
def test_cache_corruption_recomputes(tmp_path, corrupt):
    t = floer_triple(3)
    reference = build_from_triple(t, cache_dir=False)
    build_from_triple(t, cache_dir=tmp_path)
    path = _cache_files(tmp_path)[0]
    data = json.loads(path.read_text())
    corrupt(data)
    path.write_text(json.dumps(data))
    rebuilt = build_from_triple(t, cache_dir=tmp_path)
    assert rebuilt.form == reference.form
    assert quotient_dim(3, rebuilt) == 10
    # the bad file was replaced by a good one
    assert build_from_triple(t, cache_dir=tmp_path).form == reference.form
    assert json.loads(path.read_text()) == reference.to_cache()


def test_truncated_cache_file(tmp_path):
    t = floer_triple(2)
    build_from_triple(t, cache_dir=tmp_path)
    path = _cache_files(tmp_path)[0]
    path.write_text(path.read_text()[:50])
    assert build_from_triple(t, cache_dir=tmp_path).form == build_from_triple(t, cache_dir=False).form


def test_unwritable_cache_dir(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    ideal = build_from_triple(floer_triple(2), cache_dir=blocker / "sub")
    assert quotient_dim(2, ideal) == 4
