import networkx as nx

from ..bicorns import BicornSequence, SlimTripleCertificate, shared_arc_witness
from ..certify import DistanceCertificate, describe

# Graphs are built with networkx and written out as DOT text here, so no
# graphviz bindings are needed. Node and edge attributes become DOT
# attributes verbatim.

def _quote(v):
    return '"%s"' %str(v).replace("\\", "\\\\").replace('"', '\\"')

def _attrs(data):
    if not data:
        return ""
    return " [" + ", ".join("%s=%s" %(k, _quote(v)) for k, v in sorted(data.items())) + "]"

def to_dot(graph, name="G"):
    """DOT text of a networkx graph (directed graphs use ->)."""
    kind, arrow = ("digraph", "->") if graph.is_directed() else ("graph", "--")
    lines = ["%s %s {" %(kind, _quote(name))]
    for n, data in graph.nodes(data=True):
        lines.append("  %s%s;" %(_quote(n), _attrs(data)))
    if graph.is_multigraph():
        edges = graph.edges(keys=True, data=True)
        edges = ((u, v, data) for u, v, _, data in edges)
    else:
        edges = graph.edges(data=True)
    for u, v, data in edges:
        lines.append("  %s %s %s%s;" %(_quote(u), arrow, _quote(v), _attrs(data)))
    lines.append("}")
    return "\n".join(lines) + "\n"

def crossings_graph(config):
    """Crossings as nodes, one edge per curve edge; crossing-free curves are lone nodes."""
    g = nx.MultiGraph()
    for c in config.crossings:
        g.add_node("x%d" %c.id, label="x%d (%d, %d)" %((c.id,) + c.curve_pair()))
    for c in config.curves:
        if c.is_loop:
            g.add_node("curve %d" %c.id, label="curve %d" %c.id, shape="circle")
            continue
        for j, (o, i) in enumerate(c.edges):
            a, b = config.graph.crossing_of(o), config.graph.crossing_of(i)
            g.add_edge("x%d" %a, "x%d" %b, label="%d.%d" %(c.id, j), curve=c.id)
    return g

def sequence_graph(seq):
    """A bicorn sequence as a directed path, edges labelled by the shared arcs."""
    g = nx.DiGraph()
    for j, b in enumerate(seq.items):
        g.add_node("b%d" %j, label=str(b))
    for j, (x, y) in enumerate(zip(seq.items, seq.items[1:])):
        arcs = shared_arc_witness(x, y)
        g.add_edge("b%d" %j, "b%d" %(j + 1), label=" ∪ ".join(str(a.to_list()) for a in arcs) or "-")
    return g

def slim_triangle_graph(cert):
    g = nx.Graph()
    for name in ("eta", "epsilon", "theta"):
        g.add_node(name, label="%s: %s" %(name, getattr(cert, name)))
    labels = {("eta", "epsilon"): "eta_epsilon", ("eta", "theta"): "eta_theta",
              ("epsilon", "theta"): "epsilon_theta"}
    for (u, v), key in labels.items():
        g.add_edge(u, v, label="i = %s" %cert.intersections[key])
    return g

def certificate_graph(cert):
    """A distance certificate as a directed path; edges carry intersection, kind and cost."""
    g = nx.DiGraph()
    g.add_node("s0", label=describe(cert.alpha) if not cert.steps else describe(cert.steps[0].source))
    for j, s in enumerate(cert.steps):
        g.add_node("s%d" %(j + 1), label=describe(s.target))
        g.add_edge("s%d" %j, "s%d" %(j + 1),
                   label="i = %d, %s, cost %s" %(s.intersection, s.kind, "?" if s.cost is None else s.cost))
    return g

def export_dot(obj, name="G"):
    """DOT text for a configuration, sequence, slim triple or certificate."""
    if isinstance(obj, BicornSequence):
        return to_dot(sequence_graph(obj), name)
    if isinstance(obj, SlimTripleCertificate):
        return to_dot(slim_triangle_graph(obj), name)
    if isinstance(obj, DistanceCertificate):
        return to_dot(certificate_graph(obj), name)
    return to_dot(crossings_graph(obj), name)
