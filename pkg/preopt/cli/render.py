from __future__ import annotations

from typing import Any, Dict, List, Union

from jinja2 import Environment, StrictUndefined

from ..constants import SliceKinds
from ..diagram import Diagram
from ..optic import Comb

DOT_TEMPLATE = """\
digraph {{ name }} {
  rankdir=TB;
  node [shape=point];
{% for rank in ranks if rank.wires %}
  { rank=same; {% for w in rank.wires %}{{ w.id }} [xlabel={{ w.atom | quote }}]; {% endfor %}}
{% endfor %}
{% for box in boxes %}
  {{ box.id }} [shape=box, label={{ box.label | quote }}, style={{ box.style }}{% if box.width %}, width={{ box.width }}{% endif %}];
{% endfor %}
{% for edge in edges %}
  {{ edge.src }} -> {{ edge.dst }};
{% endfor %}
}
"""

STYLE_GEN = "solid"
STYLE_HOLE = "dashed"
STYLE_BARRIER = "dotted"


def quote(value: Any) -> str:
    text = str(value).replace("\\", "\\\\").replace('"', '\\"')
    return f'"{text}"'


class DotRenderer:
    """
    Jinja2 rendering of diagrams and combs as DOT:
    - one rank of wire points per level, wires as edges
    - generators as solid boxes, holes as dashed boxes
    - barriers as dotted boxes spanning the whole level
    """

    def __init__(self) -> None:
        self.env = Environment(
            undefined=StrictUndefined,
            autoescape=False,
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )
        self._register_default_filters()

    def _register_default_filters(self) -> None:
        # {{ label | quote }}
        self.env.filters["quote"] = quote

    # ---------- public API ----------

    def render_template(self, template_str: str, context: Dict[str, Any]) -> str:
        template = self.env.from_string(template_str)
        return template.render(context)

    def render(self, d: Union[Diagram, Comb], name: str = "diagram") -> str:
        if isinstance(d, Comb):
            d = d.under
        return self.render_template(DOT_TEMPLATE, self.context(d, name))

    def context(self, d: Diagram, name: str = "diagram") -> Dict[str, Any]:
        levels = d.levels
        ranks: List[Dict[str, Any]] = [
            {"wires": [{"id": f"w{k}_{p}", "atom": atom} for p, atom in enumerate(level)]}
            for k, level in enumerate(levels + [levels[-1]])
        ]
        boxes: List[Dict[str, Any]] = []
        edges: List[Dict[str, str]] = []

        for i, s in enumerate(d.slices):
            width = len(levels[i])
            box = f"s{i}"
            if s.kind == SliceKinds.BARRIER:
                boxes.append({"id": box, "label": "", "style": STYLE_BARRIER, "width": max(width, 1)})
                edges += [{"src": f"w{i}_{p}", "dst": box} for p in range(width)]
                edges += [{"src": box, "dst": f"w{i + 1}_{p}"} for p in range(width)]
                continue
            gen = d.sig.generator(s.name)
            m, n = len(gen.dom), len(gen.cod)
            if s.kind == SliceKinds.HOLE:
                boxes.append({"id": box, "label": f"hole {s.label}", "style": STYLE_HOLE, "width": None})
            else:
                boxes.append({"id": box, "label": s.name, "style": STYLE_GEN, "width": None})
            for p in range(width):
                if p < s.offset:
                    edges.append({"src": f"w{i}_{p}", "dst": f"w{i + 1}_{p}"})
                elif p < s.offset + m:
                    edges.append({"src": f"w{i}_{p}", "dst": box})
                else:
                    edges.append({"src": f"w{i}_{p}", "dst": f"w{i + 1}_{p - m + n}"})
            edges += [{"src": box, "dst": f"w{i + 1}_{q}"} for q in range(s.offset, s.offset + n)]

        last = len(levels) - 1
        edges += [{"src": f"w{last}_{p}", "dst": f"w{last + 1}_{p}"} for p in range(len(levels[-1]))]
        return {"name": name, "ranks": ranks, "boxes": boxes, "edges": edges}


def render_dot(d: Union[Diagram, Comb]) -> str:
    return DotRenderer().render(d)
