"""Command-line front end: ``topo <subcommand> [flags] <file>``.

Exit status: 0 on success, 1 on a domain error, 2 on malformed input.
``--json`` prints one JSON record instead of the key=value line.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from . import acceptance, covers, formats, links, ribbon, surfaces, vankampen
from .complex import Graph, MalformedInput, Scheme2, SimplicialComplex, build_chain_complex, connected_components
from .config import AcceptanceConfig, Budgets
from .homology import homology


class DomainError(Exception):
    pass


def _need(obj, kinds, what: str):
    if not isinstance(obj, kinds):
        raise MalformedInput(f"{what} expects {' or '.join(k.__name__ for k in kinds)}, got {type(obj).__name__}")
    return obj


def _as_graph(obj) -> Graph:
    if isinstance(obj, Scheme2):
        return obj.graph
    return _need(obj, (Graph,), "this command")


def _budget(args) -> int:
    return args.budget if args.budget is not None else Budgets().rotations


# --- subcommands -------------------------------------------------------------------

def cmd_homology(args) -> tuple[str, dict]:
    obj = _need(formats.load(args.file), (Graph, Scheme2, SimplicialComplex), "homology")
    ring = args.ring
    cx = build_chain_complex(obj, "z2" if ring == "z2" else "z")
    h = homology(cx, ring)
    groups = {f"H_{k}": h.group(k) for k in range(len(h.betti))}
    return str(h), {"ring": ring, "betti": list(h.betti), "torsion": [list(t) for t in h.torsion], **groups}


def cmd_surface(args) -> tuple[str, dict]:
    s = _need(formats.load(args.file), (Scheme2,), "surface")
    c = surfaces.classify_surface(s)
    rec = {"orientable": c.orientable, "genus": c.genus, "crosscaps": c.crosscaps, "boundary": c.boundary, "chi": c.chi}
    text = str(c)
    if args.form:
        f = surfaces.intersection_form(s)
        rows = ";".join("".join(map(str, r)) for r in f.matrix)
        text += f"\nform={rows or '-'} rank={f.rank}"
        rec["form"] = [list(r) for r in f.matrix]
    if args.certificate and not c.orientable:
        o = surfaces.orientability(s)
        text += f"\nred={','.join(map(str, o.red))}"
        rec["red"] = list(o.red)
    return text, rec


def cmd_genus(args) -> tuple[str, dict]:
    g = _as_graph(formats.load(args.file))
    orientable = not args.nonorientable
    fn = ribbon.mohar_genus if args.mohar else ribbon.genus_exhaustive
    value = fn(g, orientable, _budget(args))
    key = "genus" if orientable else "crosscaps"
    method = "mohar" if args.mohar else "exhaustive"
    return f"{key}={value}", {key: value, "method": method}


def cmd_thicken(args) -> tuple[str, dict]:
    obj = formats.load(args.file)
    if isinstance(obj, ribbon.RotationSystem):
        t = ribbon.trace_faces(obj)
        c = ribbon.thickening_surface(obj)
        rec = {"h": t.h, "orientable": c.orientable, "genus": c.genus, "crosscaps": c.crosscaps, "chi": c.chi}
        return f"{c} faces={t.h}", rec
    g = _as_graph(obj)
    n = ribbon.count_thickenings(g, args.up_to, not args.all_twists)
    return f"thickenings={n} up_to={args.up_to}", {"thickenings": n, "up_to": args.up_to}


def cmd_planar(args) -> tuple[str, dict]:
    obj = formats.load(args.file)
    if isinstance(obj, tuple):
        g, d = obj
        r = vankampen.vk_obstruction(g, d)
    else:
        g = _as_graph(obj)
        if args.rotation:
            if connected_components(g)[0] != 1:
                raise DomainError("the rotation-system test needs a connected graph")
            ok = ribbon.has_planar_rotation(g)
            return f"planar={'yes' if ok else 'no'} method=rotation", {"planar": ok, "method": "rotation"}
        r = vankampen.vk_obstruction(g)
    rec = {"planar": r.planar, "obstruction": "zero" if r.verdict.zero else "nonzero", "crossing_pairs": sum(r.nu)}
    text = str(r)
    if args.certificate:
        if r.verdict.zero:
            w = " ".join(f"{a}:{e}" for a, e in r.verdict.witness)
            text += f"\nwitness={w or '-'}"
            rec["witness"] = [list(x) for x in r.verdict.witness]
        else:
            ds = vankampen.deleted_square(r.graph)
            cells = [ds.cells2[i] for i in range(len(ds.cells2)) if (r.verdict.certificate >> i) & 1]
            text += "\ncertificate=" + " ".join(f"{s}|{t}" for s, t in cells)
            rec["certificate"] = [list(c) for c in cells]
    return text, rec


def cmd_approx(args) -> tuple[str, dict]:
    path = _need(formats.load(args.file), (list,), "approx")
    r = vankampen.path_obstruction(path)
    rec = {"c": r.c, "v": list(r.v), "approximable": r.approximable, "delta_vertices": [list(x) for x in r.delta.vertices]}
    return str(r), rec


def cmd_covers(args) -> tuple[str, dict]:
    obj = formats.load(args.file)
    if args.surface:
        s = _need(obj, (Scheme2,), "covers --surface")
        reps = covers.enumerate_covers_surface(s, args.budget or covers.DEFAULT_BUDGET)
    else:
        reps = covers.enumerate_covers(_as_graph(obj), args.budget or covers.DEFAULT_BUDGET)
    labels = ["".join(map(str, c.label)) or "-" for c in reps]
    lines = [f"classes={len(reps)}"] + [f"cover {k} labels={lab}" for k, lab in enumerate(labels)]
    return "\n".join(lines), {"classes": len(reps), "labels": labels}


def cmd_link(args) -> tuple[str, dict]:
    l = _need(formats.load(args.file), (links.PolyLink,), "link")
    lk = links.linking_number(l)
    return f"lk={lk} lk_mod2={lk % 2}", {"lk": lk, "lk_mod2": lk % 2}


def cmd_selftest(args) -> tuple[str, dict]:
    cfg = AcceptanceConfig()
    if args.budget is not None:
        cfg = replace(cfg, budgets=replace(cfg.budgets, large_rotations=args.budget))
    rep = acceptance.run_all(args.filter, cfg)
    if not rep.results:
        raise DomainError(f"no acceptance item matches {args.filter!r}")
    rec = {
        "passed": sum(o.ok for _, o, _ in rep.results),
        "failed": sum(not o.ok for _, o, _ in rep.results),
        "items": [{"number": c.number, "name": c.name, "ok": o.ok, "detail": o.detail} for c, o, _ in rep.results],
    }
    text = "\n".join(rep.lines()) + f"\nselftest {'passed' if rep.ok else 'FAILED'}: {rec['passed']}/{len(rep.results)}"
    if not rep.ok:
        raise _SelftestFailed(text, rec)
    return text, rec


class _SelftestFailed(Exception):
    def __init__(self, text, rec):
        super().__init__(text)
        self.text, self.rec = text, rec


# --- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="topo", description="Exact combinatorial topology toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, file=True):
        sp = sub.add_parser(name, help=help_)
        if file:
            sp.add_argument("file")
        sp.add_argument("--json", action="store_true", help="print one JSON record")
        sp.add_argument("--budget", type=int, default=None, help="search budget")
        sp.set_defaults(fn=fn)
        return sp

    sp = add("homology", cmd_homology, "homology of a .cx, .scheme or .graph file")
    sp.add_argument("--ring", choices=("z2", "z", "q"), default="z2")
    sp = add("surface", cmd_surface, "classify a .scheme surface")
    sp.add_argument("--form", action="store_true", help="also print the mod-2 intersection form")
    sp.add_argument("--certificate", action="store_true", help="print the obstruction cycle if non-orientable")
    sp = add("genus", cmd_genus, "genus of a graph")
    meth = sp.add_mutually_exclusive_group()
    meth.add_argument("--mohar", action="store_true", help="minimize the interlacement rank")
    meth.add_argument("--exhaustive", action="store_true", help="pruned search over rotation systems (default)")
    sp.add_argument("--nonorientable", action="store_true", help="non-orientable genus (crosscaps)")
    sp = add("thicken", cmd_thicken, "surface of a .rot thickening, or thickening counts of a graph")
    sp.add_argument("--up-to", choices=("labeled", "rel-homeomorphism", "isomorphism"), default="labeled")
    sp.add_argument("--all-twists", action="store_true", help="count non-orientable thickenings too")
    sp = add("planar", cmd_planar, "planarity of a .graph (or .draw) file")
    meth = sp.add_mutually_exclusive_group()
    meth.add_argument("--vk", action="store_true", help="van Kampen obstruction (default)")
    meth.add_argument("--rotation", action="store_true", help="search for a planar rotation system")
    sp.add_argument("--certificate", action="store_true", help="print the coboundary witness or separating functional")
    add("approx", cmd_approx, "approximability obstruction of a .path")
    sp = add("covers", cmd_covers, "double covers of a graph or surface")
    sp.add_argument("--surface", action="store_true", help="covers of the 2-complex of a .scheme")
    add("link", cmd_link, "linking number of a .link")
    sp = add("selftest", cmd_selftest, "run the acceptance suite on bundled fixtures", file=False)
    sp.add_argument("--filter", default=None, help="run items whose number, name or keyword matches")
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    want_json = getattr(args, "json", False)
    try:
        text, rec = args.fn(args)
    except _SelftestFailed as e:
        print(json.dumps({"ok": False, **e.rec}, sort_keys=True) if want_json else e.text, file=out)
        return 1
    except (MalformedInput, FileNotFoundError, IsADirectoryError) as e:
        _report(err, want_json, out, "malformed-input", e)
        return 2
    except (DomainError, ValueError, RuntimeError) as e:
        _report(err, want_json, out, "domain-error", e)
        return 1
    if want_json:
        print(json.dumps({"ok": True, "command": args.command, **rec}, sort_keys=True), file=out)
    else:
        print(text, file=out)
    return 0


def _report(err, want_json, out, kind, e) -> None:
    msg = f"{type(e).__name__}: {e}"
    if want_json:
        print(json.dumps({"ok": False, "error": kind, "message": msg}, sort_keys=True), file=out)
    else:
        print(f"topo: {kind}: {msg}", file=err)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
