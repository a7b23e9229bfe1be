import random

import pytest

import tsplash


def test_run_q2_all_pass():
    report = tsplash.run(2)
    assert list(report) == ["q", "poly", "base", "checks"]
    assert all(c["status"] == "pass" for c in report["checks"])


def test_cover_count_q3():
    report = tsplash.run(3, ["cover_count"])
    assert report["checks"][0]["counts"]["cover_planes"] == 13


def test_unknown_check():
    with pytest.raises(ValueError, match="valid checks"):
        tsplash.run(2, ["bogus"])


def test_reducible_poly():
    with pytest.raises(ValueError):
        tsplash.Geometry(3, t=(1, 0, 1))


@pytest.mark.parametrize("q", [2, 3])
def test_canonical_roundtrip(q):
    g = tsplash.Geometry(q)
    plane = g.canonical_subplane()
    assert len(plane) == q * q + q + 1
    splash = g.splash(plane)
    assert len(splash) == q * q + 1
    assert len(g.cover_planes(splash)) == q * q + q + 1
    # Any three affine collinear points of the subplane give a subline.
    affine = [p for p in plane if p[2] != 0]
    centre = splash[0]
    line = None
    for a in affine:
        for b in affine:
            if a < b:
                pts = g.subline(a, b, next(p for p in plane if p != a and p != b and _collinear(g, a, b, p)))
                if all(p[2] != 0 for p in pts) and centre not in pts:
                    line = pts
                    break
        if line:
            break
    assert line is not None
    assert g.construct(splash, line) == plane


def test_construct_matches_brute_force_q2():
    g = tsplash.Geometry(2)
    plane = g.canonical_subplane()
    splash = g.splash(plane)
    rng = random.Random(5)
    checked = 0
    affine = [p for p in plane if p[2] != 0]
    while checked < 5:
        a, b = rng.sample(affine, 2)
        third = [p for p in plane if p not in (a, b) and _collinear(g, a, b, p)]
        line = g.subline(a, b, third[0])
        if any(p[2] == 0 for p in line):
            continue
        subs = g.brute_force(splash, line)
        assert subs == [g.construct(splash, line)]
        checked += 1


def test_complete_splash():
    g = tsplash.Geometry(2)
    splash = g.splash(g.canonical_subplane())
    again = g.complete_splash(splash[0], splash[1], splash[2], splash[3])
    assert sorted(again) == sorted(splash)
    assert again[0] == splash[0]


def test_sigma_dimension():
    g = tsplash.Geometry(2)
    assert len(g.sigma([0, 0, 1])) == 7


def _collinear(g, a, b, c):
    try:
        g.subline(a, b, c)
    except ValueError:
        return False
    return True
