import pytest

from surfops import io, polyhedra
from surfops import operations as ops


def test_rot_roundtrip_canonical():
    text = io.write_rot(polyhedra.tetrahedron())
    g = io.parse_rot(text)
    assert g.iso(polyhedra.tetrahedron())
    assert io.write_rot(g) == text  # canonical content is a fixed point


def test_rot_roundtrip_all(corpus):
    for name, g in corpus.items():
        text = io.write_rot(g)
        h = io.parse_rot(text)
        assert h.iso(g), name
        assert io.write_rot(h) == text, name


def test_rot_loops_and_parallels():
    text = io.write_rot(polyhedra.loop_vertex())
    g = io.parse_rot(text)
    assert g.edge_count == 1 and g.vertex_count == 1
    text = io.write_rot(polyhedra.theta())
    assert io.parse_rot(text).iso(polyhedra.theta())


def test_rot_parse_errors_carry_positions():
    with pytest.raises(io.ParseError) as err:
        io.parse_rot("rot x y\n")
    assert "line 1" in str(err.value)
    with pytest.raises(io.ParseError):
        io.parse_rot("rot 2 1\n1: +1\n")  # missing a line
    with pytest.raises(io.FormatViolation):
        io.parse_rot("rot 2 1\n1: +1\n2: +1\n")  # sign used twice


def test_planar_code_roundtrip_bytes():
    data = io.write_planar_code([polyhedra.cube()])
    graphs = io.parse_planar_code(data)
    assert len(graphs) == 1
    assert graphs[0].iso(polyhedra.cube())
    assert io.write_planar_code(graphs) == data


def test_planar_code_multiple_graphs():
    gs = [polyhedra.tetrahedron(), polyhedra.octahedron()]
    data = io.write_planar_code(gs)
    parsed = io.parse_planar_code(data)
    assert len(parsed) == 2
    assert parsed[0].iso(gs[0]) and parsed[1].iso(gs[1])


def test_planar_code_rejects_multigraphs():
    with pytest.raises(io.FormatViolation):
        io.write_planar_code([polyhedra.theta()])
    # header + 1 vertex with a loop entry
    bad = io.PLANAR_CODE_HEADER + bytes([2, 2, 2, 0, 1, 0])
    with pytest.raises(io.FormatViolation):
        io.parse_planar_code(bad)


def test_planar_code_header_required():
    with pytest.raises(io.ParseError):
        io.parse_planar_code(b"nonsense")


def test_planar_code_wide_counts():
    big = polyhedra.cycle(300)
    data = io.write_planar_code([big])
    (parsed,) = io.parse_planar_code(data)
    assert parsed.vertex_count == 300
    assert parsed.iso(big)
    assert io.write_planar_code([parsed]) == data


def test_op_roundtrip_catalog():
    for name in ops.catalog_names():
        op = ops.catalog(name)
        text = io.write_op(op)
        op2 = io.parse_op(text)
        assert type(op2) is type(op)
        assert op2.validate() == []
        assert io.write_op(op2) == text
        assert op2.graph.iso(op.graph)


def test_op_roundtrip_doubled():
    lop = ops.lsp_to_lopsp(ops.catalog("truncation"))
    text = io.write_op(lop)
    op2 = io.parse_op(text)
    assert op2.validate() == []
    assert op2.graph.iso(lop.graph)


def test_op_parse_requires_outer_for_lsp():
    text = io.write_op(ops.catalog("ambo"))
    broken = "\n".join(
        ln for ln in text.splitlines() if not ln.startswith("outer")
    )
    with pytest.raises(io.ParseError):
        io.parse_op(broken)


def test_op_parse_rejects_outer_for_lopsp():
    text = io.write_op(ops.catalog("gyro")) + "outer: +1\n"
    with pytest.raises(io.FormatViolation):
        io.parse_op(text)
