"""Built-in networks used by the checks and the test-suite."""
from typing import Dict

from pathrecip.data.network import PlanarNetwork
from pathrecip.apps.dyck import build_dyck_network
from pathrecip.apps.partitions import Partition
from pathrecip.apps.schur import EvalPoint, build_schur_network


def single_edge(weight=2) -> PlanarNetwork:
    """s -> t; det(P_G) equals the weight."""
    return PlanarNetwork.build(["s", "t"], [("s", "t", weight)], ["s"], ["t"], name="single_edge")


def diamond() -> PlanarNetwork:
    """
    Two sources meeting at a shared vertex b, with rational weights.
    P_G = [[3, 3], [1, 3/2]] and det(P_G) = 3/2.
    """
    return PlanarNetwork.build(
        ["s1", "s2", "a", "b", "t1", "t2"],
        [
            ("s1", "a", 1),
            ("s1", "b", 2),
            ("s2", "b", 1),
            ("a", "t1", 1),
            ("b", "t1", 1),
            ("b", "t2", "3/2"),
        ],
        ["s1", "s2"],
        ["t1", "t2"],
        name="diamond",
    )


def built_in_networks() -> Dict[str, PlanarNetwork]:
    networks = {"single_edge": single_edge(), "diamond": diamond()}
    for m in range(3):
        for k in range(3):
            if m + k >= 1:
                net = build_dyck_network(m, k)
                networks[net.name] = net
    z = EvalPoint.of(1, "1/2")
    for parts in ((1,), (2, 1)):
        outer = Partition(parts)
        networks[f"schur_{outer}"] = build_schur_network(outer, z.k).instantiate(z)
    return networks


def unit_determinant_networks() -> Dict[str, PlanarNetwork]:
    return {
        name: net for name, net in built_in_networks().items() if name not in ("single_edge", "diamond")
    }
