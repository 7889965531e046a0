"""Independent reference implementations used only by the tests.

Everything here is deliberately naive and kept separate from the
package code paths it checks: dense operator matrices built entry by
entry, and expectation values summed state by state.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from qaoa_maxcut.circuits import Barrier, Circuit, Gate


def gate_matrix(g: Gate) -> np.ndarray:
    """Dense matrix of one gate over its own qubits.

    Two-qubit matrices are indexed with qubits[0] as the low bit of the
    2-bit subspace index, matching the little-endian state layout.
    """
    if g.kind == "H":
        return np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)
    if g.kind == "RX":
        c = math.cos(g.angle / 2)
        s = -1j * math.sin(g.angle / 2)
        return np.array([[c, s], [s, c]], dtype=complex)
    if g.kind == "RZ":
        return np.array(
            [[cmath.exp(-0.5j * g.angle), 0], [0, cmath.exp(0.5j * g.angle)]], dtype=complex
        )
    if g.kind == "RZZ":
        same = cmath.exp(-0.5j * g.angle)
        diff = cmath.exp(0.5j * g.angle)
        return np.diag([same, diff, diff, same]).astype(complex)
    if g.kind == "CX":
        # sub-index = bit(control) + 2*bit(target)
        m = np.zeros((4, 4), dtype=complex)
        for control in (0, 1):
            for target in (0, 1):
                src = control + 2 * target
                dst = control + 2 * (target ^ control)
                m[dst, src] = 1.0
        return m
    raise ValueError(g.kind)


def embed(g: Gate, num_qubits: int) -> np.ndarray:
    """Lift a gate to the full 2^n-dimensional space by explicit basis mapping."""
    dim = 1 << num_qubits
    small = gate_matrix(g)
    full = np.zeros((dim, dim), dtype=complex)
    qubits = g.qubits
    for src in range(dim):
        sub_src = sum(((src >> q) & 1) << k for k, q in enumerate(qubits))
        for sub_dst in range(small.shape[0]):
            amp = small[sub_dst, sub_src]
            if amp == 0:
                continue
            dst = src
            for k, q in enumerate(qubits):
                bit = (sub_dst >> k) & 1
                dst = (dst & ~(1 << q)) | (bit << q)
            full[dst, src] += amp
    return full


def circuit_unitary(c: Circuit) -> np.ndarray:
    """Product of embedded gate matrices in sequence order (barriers are identity)."""
    dim = 1 << c.num_qubits
    u = np.eye(dim, dtype=complex)
    for g in c.gates:
        if isinstance(g, Barrier):
            continue
        u = embed(g, c.num_qubits) @ u
    return u


def states_equal_up_to_phase(a: np.ndarray, b: np.ndarray, tol: float) -> bool:
    k = int(np.argmax(np.abs(a)))
    if abs(a[k]) < 1e-12:
        return bool(np.max(np.abs(a - b)) <= tol)
    phase = b[k] / a[k]
    return abs(abs(phase) - 1.0) <= tol and bool(np.max(np.abs(a * phase - b)) <= tol)


def unitaries_equal_up_to_phase(a: np.ndarray, b: np.ndarray, tol: float) -> bool:
    flat_a, flat_b = a.ravel(), b.ravel()
    k = int(np.argmax(np.abs(flat_a)))
    phase = flat_b[k] / flat_a[k]
    return abs(abs(phase) - 1.0) <= tol and bool(np.max(np.abs(a * phase - b)) <= tol)


def random_circuit(num_qubits: int, num_gates: int, rng: np.random.Generator) -> Circuit:
    """Random mix of all gate kinds with random angles."""
    gates = []
    for _ in range(num_gates):
        kind = rng.choice(["H", "RX", "RZ", "RZZ", "CX"])
        if kind in ("RZZ", "CX"):
            q1, q2 = rng.choice(num_qubits, size=2, replace=False)
            angle = float(rng.uniform(-2 * math.pi, 2 * math.pi)) if kind == "RZZ" else None
            gates.append(Gate(kind, (int(q1), int(q2)), angle))
        else:
            q = int(rng.integers(num_qubits))
            angle = float(rng.uniform(-2 * math.pi, 2 * math.pi)) if kind != "H" else None
            gates.append(Gate(kind, (q,), angle))
    return Circuit(num_qubits, tuple(gates))
