import io
from collections import Counter

import numpy as np
import pytest

from agpoly.fermigas import (
    CartanData,
    LatticePath,
    ParticleContent,
    UnrealizableContentError,
    apply_moves,
    contents,
    dump_paths,
    forward_move,
    generate_paths,
    load_paths,
    minimal_path,
    minimal_weight,
    move_bounds,
    partition_function,
    reduce_to_minimal,
)
from agpoly.partitions import gen_func_bruteforce
from agpoly.qcomb import gaussian_binomial
from agpoly.qpoly import QPoly
from agpoly.suites import WORKED_CONTENT, WORKED_MOVES, WORKED_PATH
from oracles import gordon_vectors


def test_cartan_data():
    cd = CartanData(3)
    assert (cd.C_inv @ cd.C == np.eye(3, dtype=np.int64)).all()
    assert cd.C_inv.tolist() == [[1, 1, 1], [1, 2, 2], [1, 2, 3]]
    assert cd.I.tolist() == [[0, 1, 0], [1, 0, 1], [0, 1, 1]]
    assert cd.unit(0).tolist() == [0, 0, 0]


def test_minimal_paths():
    empty = minimal_path(ParticleContent((0,)), 1, 4, 2)
    assert empty.heights == (0, 0, 0) and empty.weight == 0
    one = minimal_path(ParticleContent((1,)), 1, 4, 2)
    assert one.heights == (1, 0, 0) and one.weight == 1
    with pytest.raises(UnrealizableContentError):
        minimal_path(ParticleContent((0, 3)), 2, 5, 3)


def test_minimal_weight_is_the_quadratic_form():
    for k in (1, 2, 3):
        for i in range(1, k + 2):
            for L in range(0, 9):
                for c in contents(k, L):
                    try:
                        path = minimal_path(c, k, L, i)
                    except UnrealizableContentError:
                        continue
                    assert path.weight == minimal_weight(c, i)


def test_partition_function_examples():
    assert partition_function(ParticleContent((0,)), 1, 4, 2, 2) == QPoly.one()
    z = partition_function(ParticleContent((1,)), 1, 4, 2, 2)
    assert z == QPoly.parse("q + q^2 + q^3") == gaussian_binomial(3, 1).shift(1)
    assert move_bounds(ParticleContent((1,)), 4, 2, 2) == [2]


@pytest.mark.parametrize("k", [1, 2])
def test_generation_covers_every_path_once(k):
    for i in range(1, k + 2):
        for ip in range(1, k + 2):
            for L in range(0, 9):
                if k * L < 2 * k - i - ip + 2:
                    continue
                seen = Counter()
                for c in contents(k, L):
                    paths = list(generate_paths(c, k, L, i, ip))
                    assert len(paths) == partition_function(c, k, L, i, ip).at_one()
                    for p in paths:
                        assert p.is_valid(k, i, ip)
                        back, moves = reduce_to_minimal(p, k, i, ip)
                        assert back == c
                        assert apply_moves(back, moves, k, L, i, ip) == p
                    seen.update(paths)
                assert set(seen) == {LatticePath(f) for f in gordon_vectors(k, i, ip, L)}
                assert max(seen.values(), default=1) == 1


def test_empty_content_generates_the_empty_path():
    assert list(generate_paths(ParticleContent((0, 0)), 2, 5, 3, 3)) == [LatticePath((0, 0, 0, 0))]


def test_partition_sum_matches_enumeration_in_domain():
    for k in (1, 2, 3):
        for i in range(1, k + 2):
            for ip in range(1, k + 2):
                for L in range(0, 9):
                    if k * L < 2 * k - i - ip + 2:
                        continue
                    z = QPoly.zero()
                    for c in contents(k, L):
                        z += partition_function(c, k, L, i, ip)
                    assert z == gen_func_bruteforce(k, i, ip, L), (k, i, ip, L)


def test_minimal_path_reduces_with_no_moves():
    c = ParticleContent((1, 0, 2))
    path = minimal_path(c, 3, 12, 2)
    back, moves = reduce_to_minimal(path, 3, 2, 4)
    assert back == c and moves == [[0], [], [0, 0]]


def test_worked_example():
    path = LatticePath(WORKED_PATH)
    content, moves = reduce_to_minimal(path, 8)
    assert content.n == WORKED_CONTENT
    assert moves == WORKED_MOVES
    assert apply_moves(content, moves, 8, path.L, 9, 9) == path
    assert minimal_weight(content, 9) + sum(map(sum, moves)) == path.weight


def test_forward_move_reports_stuck_particles():
    h = [0, 1, 0, 0]  # L = 3, one charge-1 particle at column 1
    assert forward_move(h, 1, 1, 2) == 1 and h == [0, 0, 1, 0]
    assert forward_move(h, 1, 1, 2) is None and h == [0, 0, 1, 0]


def test_invalid_input_rejected():
    with pytest.raises(ValueError):
        reduce_to_minimal(LatticePath((3,)), 2)
    with pytest.raises(ValueError):
        LatticePath((-1,))
    with pytest.raises(ValueError):
        apply_moves(ParticleContent((1,)), [[0, 0]], 1, 4, 2, 2)


def test_path_file_round_trip():
    paths = [LatticePath(()), LatticePath((1, 0, 2)), LatticePath((0,))]
    buf = io.StringIO()
    dump_paths(paths, buf)
    buf.seek(0)
    assert load_paths(buf) == paths
