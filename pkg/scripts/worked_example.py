#!/usr/bin/env python3
"""End-to-end walkthrough on the surface y² = x³ + z⁶ + 2z³w³ + 3w⁶.

Runs the full pipeline from the seed [-1:1:-1:1]: smoothness, singularity
classification of the cubic model, tangent-plane construction, the tangent
point on the fiber, hypothesis checks, and bounded point generation.
"""

import json
from fractions import Fraction

from dp1.cubic import classify_singularities, tangent_plane, tangent_point, theta
from dp1.engine import GenerationConfig, check_hypotheses, generate
from dp1.rational import format_rational
from dp1.surface import Surface, SurfaceParams, WPoint, smoothness_check


def main() -> None:
    S = Surface(SurfaceParams(0, 0, 1, 2, 3, 0, 0, 0, 1))
    P = WPoint.parse("[-1:1:-1:1]")

    print("surface:", json.dumps(S.params.to_json()))
    print("seed:   ", P)

    verdict = smoothness_check(S)
    print("smooth: ", verdict.kind)

    rep = classify_singularities(S)
    print("cubic model singularities:", json.dumps(rep.to_json()))

    print("theta(seed):", theta(S, P))
    plane = tangent_plane(S, P)
    print("tangent plane:", tuple(format_rational(c) for c in plane.as_tuple()))

    t, Q = tangent_point(S, P)
    print(f"tangent point: ({format_rational(Q.x)}, {format_rational(Q.y)}) "
          f"on fiber t = {format_rational(t)}")
    assert (t, Q.x, Q.y) == (Fraction(-1), Fraction(17, 4), Fraction(71, 8))

    hyp = check_hypotheses(S, P)
    print("hypotheses:", json.dumps(hyp.to_json()))

    report = generate(S, P, GenerationConfig(t_height_bound=10, multiple_bound=10))
    print(f"generated {len(report.points)} verified points "
          f"on {len(report.fibers)} fibers:")
    for rec in report.points:
        print(f"  t={format_rational(rec.t)}  "
              f"({format_rational(rec.point.x)}, {format_rational(rec.point.y)})  "
              f"[{rec.provenance}]")


if __name__ == "__main__":
    main()
