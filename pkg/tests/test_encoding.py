import itertools

import numpy as np
import pytest

from qaoa_maxcut.encoding import (
    IsingModel,
    Qubo,
    energy_table,
    ising_energy,
    maxcut_to_qubo,
    qubo_energy,
    qubo_to_ising,
)
from qaoa_maxcut.graphs import (
    Graph,
    cut_value,
    generate_random_graph,
    graph_from_pairs,
)

SINGLE_EDGE = graph_from_pairs(2, [(0, 1)])
K3 = graph_from_pairs(3, [(0, 1), (1, 2), (0, 2)])


def all_bits(n):
    return itertools.product((0, 1), repeat=n)


class TestMaxcutToQubo:
    def test_single_edge_coefficients(self):
        q = maxcut_to_qubo(SINGLE_EDGE)
        assert q.coeffs == {(0, 0): -1.0, (1, 1): -1.0, (0, 1): 2.0}
        assert q.offset == 0.0

    def test_single_edge_minimum(self):
        q = maxcut_to_qubo(SINGLE_EDGE)
        values = {bits: qubo_energy(q, bits) for bits in all_bits(2)}
        assert min(values.values()) == -1.0
        assert {b for b, v in values.items() if v == -1.0} == {(0, 1), (1, 0)}

    def test_empty_graph(self):
        q = maxcut_to_qubo(Graph(3))
        assert q.coeffs == {}
        assert all(qubo_energy(q, bits) == 0.0 for bits in all_bits(3))

    def test_triangle_minimum(self):
        q = maxcut_to_qubo(K3)
        assert min(qubo_energy(q, bits) for bits in all_bits(3)) == -2.0

    def test_equals_negated_cut(self):
        for seed in range(5):
            g = generate_random_graph(7, 0.5, seed=seed)
            q = maxcut_to_qubo(g)
            for bits in all_bits(7):
                assert qubo_energy(q, bits) == -cut_value(g, bits)


class TestQuboToIsing:
    def test_single_edge(self):
        m = qubo_to_ising(maxcut_to_qubo(SINGLE_EDGE))
        assert m.h == {}
        assert m.J == {(0, 1): 0.5}
        assert m.offset == -0.5
        for bits in all_bits(2):
            assert ising_energy(m, bits) == qubo_energy(maxcut_to_qubo(SINGLE_EDGE), bits)

    def test_single_linear_term(self):
        c = 3.0
        m = qubo_to_ising(Qubo(1, {(0, 0): c}))
        assert m.h == {0: -c / 2}
        assert m.offset == c / 2
        for bits in all_bits(1):
            assert ising_energy(m, bits) == qubo_energy(Qubo(1, {(0, 0): c}), bits)

    def test_zero_qubo(self):
        m = qubo_to_ising(Qubo(2))
        assert m.h == {} and m.J == {} and m.offset == 0.0

    def test_exact_on_all_assignments(self):
        rng = np.random.default_rng(5)
        coeffs = {}
        n = 5
        for i in range(n):
            for j in range(i, n):
                coeffs[(i, j)] = float(rng.normal())
        q = Qubo(n, coeffs, offset=float(rng.normal()))
        m = qubo_to_ising(q)
        for bits in all_bits(n):
            assert ising_energy(m, bits) == pytest.approx(qubo_energy(q, bits), abs=1e-12)

    def test_rejects_bad_keys(self):
        with pytest.raises(ValueError):
            Qubo(2, {(1, 0): 1.0})
        with pytest.raises(ValueError):
            IsingModel(2, J={(1, 1): 1.0})


class TestIsingEnergy:
    def test_single_edge_values(self):
        m = qubo_to_ising(maxcut_to_qubo(SINGLE_EDGE))
        assert ising_energy(m, "01") == -1.0
        assert ising_energy(m, "00") == 0.0

    def test_zero_model(self):
        m = IsingModel(3)
        assert ising_energy(m, "101") == 0.0

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="length"):
            ising_energy(IsingModel(3), "01")


class TestRoundTrip:
    def test_matches_negated_cut_exactly(self):
        for seed in range(20):
            n = 4 + seed % 7  # 4..10
            g = generate_random_graph(n, 0.5, seed=100 + seed)
            m = qubo_to_ising(maxcut_to_qubo(g))
            for bits in all_bits(n):
                assert abs(ising_energy(m, bits) + cut_value(g, bits)) <= 1e-12

    def test_unweighted_has_no_linear_terms(self):
        for seed in range(10):
            g = generate_random_graph(8, 0.6, seed=seed)
            assert qubo_to_ising(maxcut_to_qubo(g)).h == {}

    def test_argmin_energy_is_argmax_cut(self):
        for seed in range(5):
            g = generate_random_graph(6, 0.5, seed=seed)
            m = qubo_to_ising(maxcut_to_qubo(g))
            energies = {bits: ising_energy(m, bits) for bits in all_bits(6)}
            cuts = {bits: cut_value(g, bits) for bits in all_bits(6)}
            best_e = min(energies.values())
            best_c = max(cuts.values())
            assert {b for b, e in energies.items() if e == best_e} == {
                b for b, c in cuts.items() if c == best_c
            }


class TestEnergyTable:
    def test_matches_scalar_energy(self):
        rng = np.random.default_rng(9)
        m = IsingModel(
            4,
            h={0: 0.5, 2: -1.25},
            J={(0, 1): 1.5, (1, 3): -0.75, (2, 3): 2.0},
            offset=0.3,
        )
        table = energy_table(m)
        for z in range(16):
            bits = [(z >> i) & 1 for i in range(4)]
            assert table[z] == pytest.approx(ising_energy(m, bits), abs=1e-12)

    def test_maxcut_table_is_negated_cut(self):
        g = generate_random_graph(7, 0.5, seed=3)
        table = energy_table(qubo_to_ising(maxcut_to_qubo(g)))
        for z in range(1 << 7):
            bits = [(z >> i) & 1 for i in range(7)]
            assert table[z] == pytest.approx(-cut_value(g, bits), abs=1e-12)
