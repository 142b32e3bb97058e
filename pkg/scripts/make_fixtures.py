"""Regenerate the bundled fixture files under src/topokit/data."""

from pathlib import Path

from topokit import fixtures as fx
from topokit import formats
from topokit.ribbon import is_planar_rotation, iter_rotation_systems

OUT = Path(__file__).resolve().parents[1] / "src" / "topokit" / "data"


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    k4 = fx.complete_graph(4)
    items = {
        "tetra.cx": fx.simplex_boundary(2),
        "k4.graph": k4,
        "k5.graph": fx.complete_graph(5),
        "k33.graph": fx.complete_bipartite(3, 3),
        "petersen.graph": fx.petersen(),
        "theta.graph": fx.theta_graph(),
        "torus.scheme": fx.torus(),
        "klein.scheme": fx.klein_bottle(),
        "rp2.scheme": fx.projective_plane(),
        "tetrahedron.scheme": fx.tetrahedron_scheme(),
        "k4.rot": next(r for r in iter_rotation_systems(k4) if is_planar_rotation(r)),
        "k5.draw": (fx.complete_graph(5), fx.k5_drawing()),
        "k33.draw": (fx.complete_bipartite(3, 3), fx.k33_drawing()),
        "abab.path": fx.abab_path(),
        "figure_b.path": fx.figure_b_path(),
        "folded.path": fx.folded_path(),
        "zigzag.path": fx.zigzag_path(),
        "hopf.link": fx.hopf_link(),
        "unlink.link": fx.unlink(),
    }
    for name, obj in items.items():
        suffix = "." + name.rsplit(".", 1)[1]
        (OUT / name).write_text(formats.dump(obj, suffix), encoding="utf-8")
        print("wrote", name)


if __name__ == "__main__":
    main()
