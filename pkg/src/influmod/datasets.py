"""Benchmark networks.

Zachary's karate club ships with the package. The college football and
political books networks are not bundled; download them from Mark Newman's
network data page (``football.gml`` and ``polbooks.gml``) and put them in a
directory named by ``$INFLUMOD_DATA`` (default: ``./data``).
"""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path

from .graph_io import Graph, parse_edge_list, parse_gml, parse_labels

FETCH_HINT = (
    "download football.gml / polbooks.gml from "
    "http://www-personal.umich.edu/~mejn/netdata/ and place them in {dir} "
    "(or point $INFLUMOD_DATA at their directory)"
)


def _bundled(name: str) -> str:
    return resources.files("influmod").joinpath("data", name).read_text(encoding="utf-8")


def load_karate(truth: str = "factions") -> Graph:
    """Karate club graph with node labels ``"1"`` .. ``"34"``.

    ``truth="factions"`` attaches the tie-based faction of each member;
    ``truth="clubs"`` the club each member joined after the split. The two
    differ only for member 9.
    """
    if truth not in ("factions", "clubs"):
        raise ValueError("truth must be 'factions' or 'clubs'")
    g = parse_edge_list(_bundled("karate.txt"))
    return g.with_ground_truth(parse_labels(_bundled(f"karate_{truth}.txt")))


def data_dir() -> Path:
    return Path(os.environ.get("INFLUMOD_DATA", "data")).resolve()


def _load_gml(name: str) -> Graph:
    path = data_dir() / name
    if not path.is_file():
        raise FileNotFoundError(f"{path} not found; " + FETCH_HINT.format(dir=data_dir()))
    return parse_gml(path.read_text(encoding="utf-8"))


def load_football() -> Graph:
    """Division I-A college football games, 2000 season (115 teams)."""
    return _load_gml("football.gml")


def load_polbooks() -> Graph:
    """Co-purchased books on US politics (105 books, l/n/c labels)."""
    return _load_gml("polbooks.gml")
