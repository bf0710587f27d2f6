#!/usr/bin/env python3
"""Regenerate the bundled corpus files (complexes, resolutions, move scripts)."""

import itertools
import json
import math
import pathlib
import sys


def write_complex(name, edges, faces, claimed_degree=None, claimed_index=None):
    meta = f'{{"name": {json.dumps(name)}'
    if claimed_degree is not None:
        meta += f', "claimed_degree": {claimed_degree}'
    if claimed_index is not None:
        meta += f', "claimed_index": {claimed_index}'
    meta += "}"
    edge_lines = []
    for eid, a, b in edges:
        edge_lines.append(f'    {{"id": {json.dumps(eid)}, "label_a": {a}, "label_b": {b}}}')
    face_lines = []
    for fid, boundary in faces:
        darts = ", ".join(f"[{json.dumps(e)}, \"{s}\"]" for e, s in boundary)
        face_lines.append(f'    {{"id": {json.dumps(fid)}, "boundary": [{darts}]}}')
    return (
        "{\n"
        f'  "meta": {meta},\n'
        '  "edges": [\n' + ",\n".join(edge_lines) + "\n  ],\n"
        '  "faces": [\n' + ",\n".join(face_lines) + "\n  ]\n}\n"
    )


def three_lens(name, top, mid, bottom):
    # Three components glued along three double curves meeting at two triple points.
    edges = [("e0", *top), ("e1", *mid), ("e2", *bottom)]
    faces = [
        ("X1", [("e0", "a"), ("e2", "b")]),
        ("X2", [("e1", "a"), ("e0", "b")]),
        ("X3", [("e2", "a"), ("e1", "b")]),
    ]
    return write_complex(name, edges, faces, claimed_degree=2)


def tetrahedron(name, labels):
    edges = [("cp", *labels["cp"]), ("cq", *labels["cq"]), ("cr", *labels["cr"]),
             ("qp", *labels["qp"]), ("rp", *labels["rp"]), ("rq", *labels["rq"])]
    faces = [
        ("T_CPQ", [("cp", "a"), ("qp", "b"), ("cq", "b")]),
        ("T_CQR", [("cq", "a"), ("rq", "b"), ("cr", "b")]),
        ("T_CPR", [("cr", "a"), ("rp", "a"), ("cp", "b")]),
        ("X1", [("qp", "a"), ("rp", "b"), ("rq", "a")]),
    ]
    return write_complex(name, edges, faces, claimed_degree=4)


def cube():
    verts = list(itertools.product((0, 1), repeat=3))
    index = {v: i for i, v in enumerate(verts)}
    faces = []
    for axis in range(3):
        for value in (0, 1):
            quad = [v for v in verts if v[axis] == value]
            u, w = [a for a in range(3) if a != axis]
            normal = 1 if value == 1 else -1
            # Counterclockwise seen from outside: orient by the sign of the normal.
            quad.sort(key=lambda v: math.atan2(v[w] - 0.5, v[u] - 0.5))
            eu = [0, 0, 0]
            ew = [0, 0, 0]
            eu[u] = 1
            ew[w] = 1
            cross = [eu[1] * ew[2] - eu[2] * ew[1], eu[2] * ew[0] - eu[0] * ew[2], eu[0] * ew[1] - eu[1] * ew[0]]
            if cross[axis] * normal < 0:
                quad.reverse()
            faces.append([index[v] for v in quad])
    edge_ids = {}
    for f in faces:
        for i in range(4):
            a, b = sorted((f[i], f[(i + 1) % 4]))
            if (a, b) not in edge_ids:
                edge_ids[(a, b)] = f"e{len(edge_ids)}"
    edges = [(eid, -1, -1) for eid in edge_ids.values()]
    out_faces = []
    for k, f in enumerate(faces):
        boundary = []
        for i in range(4):
            s, t = f[i], f[(i + 1) % 4]
            # Side a of an edge runs from its lower vertex to its higher one.
            boundary.append((edge_ids[tuple(sorted((s, t)))], "a" if s < t else "b"))
        out_faces.append((f"F{k}", boundary))
    return write_complex("cube", edges, out_faces, claimed_degree=8)


def resolution(group, points, triangles):
    index = {p: i for i, p in enumerate(points)}
    tri_lines = ",\n".join(f"    [{index[a]}, {index[b]}, {index[c]}]" for a, b, c in triangles)
    pts = ", ".join(f"[{x}, {y}]" for x, y in points)
    grp = ", ".join(f"[{r}, [{w[0]}, {w[1]}, {w[2]}]]" for r, w in group)
    return f'{{\n  "group": [{grp}],\n  "points": [{pts}],\n  "triangles": [\n{tri_lines}\n  ]\n}}\n'


def fig5():
    points = sorted([(0, y) for y in range(7)] + [(1, y) for y in range(4)] + [(2, 0)])
    triangles = [
        ((1, 1), (2, 0), (1, 2)), ((1, 1), (1, 2), (0, 3)), ((1, 1), (0, 3), (0, 2)),
        ((1, 1), (0, 2), (0, 1)), ((1, 1), (0, 1), (0, 0)), ((1, 1), (0, 0), (1, 0)),
        ((1, 1), (1, 0), (2, 0)),
        ((1, 2), (2, 0), (1, 3)), ((1, 2), (1, 3), (0, 6)), ((1, 2), (0, 6), (0, 5)),
        ((1, 2), (0, 5), (0, 4)), ((1, 2), (0, 4), (0, 3)),
    ]
    return resolution([(2, (1, 0, 1)), (6, (0, 1, 5))], points, triangles)


def fig8():
    points = sorted((x, y) for x in range(5) for y in range(5) if x + y <= 4)
    triangles = [
        ((1, 1), (1, 0), (2, 0)), ((1, 1), (2, 0), (2, 1)), ((1, 1), (2, 1), (1, 2)),
        ((1, 1), (1, 2), (0, 2)), ((1, 1), (0, 2), (0, 1)), ((1, 1), (0, 1), (0, 0)),
        ((1, 1), (0, 0), (1, 0)),
        ((2, 1), (2, 0), (3, 0)), ((2, 1), (3, 0), (4, 0)), ((2, 1), (4, 0), (3, 1)),
        ((2, 1), (3, 1), (2, 2)), ((2, 1), (2, 2), (1, 2)),
        ((1, 2), (2, 2), (1, 3)), ((1, 2), (1, 3), (0, 4)), ((1, 2), (0, 4), (0, 3)),
        ((1, 2), (0, 3), (0, 2)),
    ]
    return resolution([(4, (1, 3, 0)), (4, (0, 1, 3))], points, triangles)


def script(steps):
    lines = []
    for step in steps:
        lines.append("  " + json.dumps(step))
    return "[\n" + ",\n".join(lines) + "\n]\n"


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).parent.parent / "corpus")
    out.mkdir(parents=True, exist_ok=True)
    files = {
        "fig3.json": three_lens("fig3", (-4, 2), (-1, -1), (2, -4)),
        "fig9.json": three_lens("fig9", (-6, 4), (1, -3), (7, -9)),
        "fig7.json": tetrahedron("fig7", {"cp": (-1, -1), "cq": (-1, -1), "cr": (-1, -1),
                                          "qp": (-3, 1), "rp": (1, -3), "rq": (-3, 1)}),
        "tetrahedron_naive.json": tetrahedron("tetrahedron_naive",
                                              {e: (1, 1) for e in ("cp", "cq", "cr", "qp", "rp", "rq")}),
        "cube.json": cube(),
        "fig5.json": fig5(),
        "fig8.json": fig8(),
        "tetrahedron_blowups.json": script([
            {"kind": "blowup", "edge": e, "side": s, "count": 2}
            for e in ("cp", "cq", "cr", "qp", "rp", "rq") for s in ("a", "b")
        ]),
        "fig3_type1_top.json": script([{"kind": "I", "edge": "e0"}]),
        "cube_flip_e0.json": script([{"kind": "II", "edge": "e0"}]),
    }
    for name, text in files.items():
        (out / name).write_text(text)


if __name__ == "__main__":
    main()
