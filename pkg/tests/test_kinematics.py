import numpy as np
import pytest

from bci_arm.errors import KinematicsError
from bci_arm.kinematics import DhTable, IkSolution, Pose, dh_transform, fk, ik, select_branch


@pytest.fixture(scope="module")
def table():
    return DhTable.from_links()


def matrix_chain_oracle(table, q_deg):
    """Independent FK: multiply the six 4x4 DH matrices built by hand."""
    specs = [
        (0.0, 0.0, table.l1, q_deg[0]),
        (-90.0, 0.0, 0.0, q_deg[1] - 90.0),
        (0.0, table.l2, 0.0, q_deg[2]),
        (0.0, table.l3, 0.0, q_deg[3]),
        (-90.0, 0.0, 0.0, q_deg[4]),
        (0.0, 0.0, table.l4, 0.0),
    ]
    T = np.eye(4)
    for alpha, a, d, theta in specs:
        al, th = np.radians(alpha), np.radians(theta)
        rot_x = np.array(
            [
                [1, 0, 0, 0],
                [0, np.cos(al), -np.sin(al), 0],
                [0, np.sin(al), np.cos(al), 0],
                [0, 0, 0, 1],
            ]
        )
        trans_x = np.eye(4)
        trans_x[0, 3] = a
        rot_z = np.array(
            [
                [np.cos(th), -np.sin(th), 0, 0],
                [np.sin(th), np.cos(th), 0, 0],
                [0, 0, 1, 0],
                [0, 0, 0, 1],
            ]
        )
        trans_z = np.eye(4)
        trans_z[2, 3] = d
        T = T @ rot_x @ trans_x @ rot_z @ trans_z
    return T


def position_shorthand_oracle(table, q_deg):
    """(C1*A, S1*A, B) from the published closed-form position column."""
    t = np.radians(q_deg)
    A = (
        table.l2 * np.sin(t[1])
        + table.l3 * np.sin(t[1] + t[2])
        + table.l4 * np.cos(t[1] + t[2] + t[3])
    )
    B = (
        table.l1
        + table.l2 * np.cos(t[1])
        + table.l3 * np.cos(t[1] + t[2])
        - table.l4 * np.sin(t[1] + t[2] + t[3])
    )
    return np.array([np.cos(t[0]) * A, np.sin(t[0]) * A, B])


def random_q(rng):
    q = rng.uniform(-90.0, 90.0, size=6)
    q[0] = rng.uniform(-180.0, 180.0)
    q[5] = 0.0
    return q


def test_fk_degenerate_links_any_angles(rng):
    t = DhTable.from_links(100.0, 1e-9, 1e-9, 1e-9)
    for _ in range(20):
        pose = fk(t, random_q(rng))
        assert np.allclose(pose.position, [0.0, 0.0, 100.0], atol=1e-6)


def test_fk_base_rotation_symmetry(table):
    base = fk(table, [0.0, 30.0, 20.0, 10.0, 5.0, 0.0])
    for t1 in (-120.0, -45.0, 60.0, 170.0):
        p = fk(table, [t1, 30.0, 20.0, 10.0, 5.0, 0.0]).position
        assert abs(p[2] - base.position[2]) < 1e-9
        assert abs(np.hypot(p[0], p[1]) - np.hypot(*base.position[:2])) < 1e-9


def test_fk_matches_matrix_chain_oracle(table):
    q = [0.0, 90.0, 0.0, 0.0, 0.0, 0.0]
    pose = fk(table, q)
    T = matrix_chain_oracle(table, q)
    assert np.allclose(pose.rotation, T[:3, :3], atol=1e-12)
    assert np.allclose(pose.position, T[:3, 3], atol=1e-12)
    assert np.allclose(pose.position, position_shorthand_oracle(table, q), atol=1e-9)


def test_fk_position_column_shorthand_sweep(table, rng):
    for _ in range(200):
        q = random_q(rng)
        pose = fk(table, q)
        assert np.max(np.abs(pose.position - position_shorthand_oracle(table, q))) < 1e-9


def test_fk_pose_orthonormal(table, rng):
    for _ in range(50):
        pose = fk(table, random_q(rng))
        pose.require_orthonormal()


def test_fk_continuity(table, rng):
    q = random_q(rng)
    p0 = fk(table, q).position
    for j in range(5):
        dq = np.array(q, dtype=float)
        dq[j] += 1e-6
        assert np.max(np.abs(fk(table, dq).position - p0)) < 1e-3


def test_ik_roundtrip_recovers_q(table, rng):
    for _ in range(300):
        q = random_q(rng)
        pose = fk(table, q)
        sol = ik(table, pose)
        assert sol.reachable
        best = min(
            np.max(np.abs(np.asarray(b) - q)) for b in sol.branches()
        )
        # one branch recovers q itself (up to the base-flip equivalent)
        pose_err = min(
            np.max(np.abs(fk(table, b).position - pose.position)) for b in sol.branches()
        )
        assert pose_err < 1e-6
        rot_err = min(
            np.linalg.norm(fk(table, b).rotation - pose.rotation) for b in sol.branches()
        )
        assert rot_err < 1e-8


def test_ik_exact_angle_recovery_when_unambiguous(table):
    q = np.array([25.0, 40.0, -30.0, 10.0, 15.0, 0.0])
    sol = ik(table, fk(table, q))
    best = min(np.max(np.abs(np.asarray(b) - q)) for b in sol.branches())
    assert best < 1e-6


def test_ik_overextended_unreachable(table):
    target = Pose(rotation=np.eye(3), position=np.array([500.0, 0.0, 100.0]))
    sol = ik(table, target)
    assert not sol.reachable
    assert sol.branches() == []


def test_theta4_closure_arithmetic():
    # t4 = t234 - t2 - t3
    assert 90.0 - 30.0 - 20.0 == 40.0


def test_ik_branch_positions_agree(table, rng):
    for _ in range(100):
        q = random_q(rng)
        pose = fk(table, q)
        sol = ik(table, pose)
        p_up = fk(table, sol.elbow_up).position
        p_down = fk(table, sol.elbow_down).position
        assert np.max(np.abs(p_up - p_down)) < 1e-6


def test_ik_nonorthonormal_rejected(table):
    bad = Pose(rotation=np.eye(3) * 1.1, position=np.array([100.0, 0.0, 100.0]))
    with pytest.raises(KinematicsError):
        ik(table, bad)


def test_ik_base_singularity_uses_fallback(table):
    # t4 = 90 folds the gripper onto the base axis: x = y = 0 exactly
    q = np.array([0.0, 0.0, 0.0, 90.0, 0.0, 0.0])
    pose = fk(table, q)
    assert np.hypot(*pose.position[:2]) < 1e-9
    sol = ik(table, pose, theta1_fallback_deg=42.0)
    assert any(abs(b[0] - 42.0) < 1e-9 for b in sol.branches())


def test_select_branch_zero_travel(table):
    q = np.array([10.0, 20.0, 30.0, -10.0, 5.0, 0.0])
    sol = ik(table, fk(table, q))
    chosen = select_branch(sol, tuple(q))
    assert np.max(np.abs(np.asarray(chosen) - q)) < 1e-6


def test_select_branch_tie_goes_elbow_up():
    sol = IkSolution(
        elbow_up=(0.0, 10.0, 0.0, 0.0, 0.0, 0.0),
        elbow_down=(0.0, -10.0, 0.0, 0.0, 0.0, 0.0),
        reachable=True,
    )
    assert select_branch(sol, (0.0,) * 6) == sol.elbow_up


def test_select_branch_minimizes_travel(table, rng):
    for _ in range(50):
        q = random_q(rng)
        sol = ik(table, fk(table, q))
        current = random_q(rng)
        chosen = select_branch(sol, current)
        travels = [
            np.sum(np.abs(np.asarray(b) - current)) for b in (sol.elbow_up, sol.elbow_down)
        ]
        assert np.sum(np.abs(np.asarray(chosen) - current)) == min(travels)


def test_select_branch_unreachable_errors():
    sol = IkSolution(elbow_up=None, elbow_down=None, reachable=False)
    with pytest.raises(KinematicsError):
        select_branch(sol, (0.0,) * 6)
