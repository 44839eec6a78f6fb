import math

import pytest

from quadland.sim import ControlInput, SimConfig, initial_state, step


class TestStep:
    def test_free_fall_single_step(self, config):
        state = initial_state(config)
        after = step(state, ControlInput(0.0, 0), config)
        assert after.vy == pytest.approx(-config.gravity * config.dt, abs=1e-12)
        assert after.vx == 0.0
        assert after.phi == 0.0

    def test_hover_force_balance(self, config):
        # thrust * cos(0) == gravity leaves velocity untouched
        state = initial_state(config)
        throttle = config.gravity / config.thrust_gain
        after = step(state, ControlInput(throttle, 0), config)
        assert after.vx == 0.0
        assert after.vy == 0.0
        assert after.y == state.y

    def test_hundred_step_free_fall_matches_discrete_sum(self, config):
        # Discrete ballistic oracle with the speed cap: after k steps
        # vy_k = -min(g*k*dt, max_speed); y displacement is the sum of vy_k*dt.
        state = initial_state(config)
        n = 100
        for _ in range(n):
            state = step(state, ControlInput(0.0, 0), config)
        expected_drop = sum(
            -min(config.gravity * k * config.dt, config.max_speed) * config.dt
            for k in range(1, n + 1)
        )
        assert state.y - initial_state(config).y == pytest.approx(expected_drop, abs=1e-9)

    def test_attitude_changes_phi_by_rate_step(self, config):
        state = initial_state(config)
        right = step(state, ControlInput(0.0, 1), config)
        assert right.phi == pytest.approx(config.rotation_rate * config.dt, abs=1e-12)
        left = step(state, ControlInput(0.0, -1), config)
        assert left.phi == pytest.approx(-config.rotation_rate * config.dt, abs=1e-12)

    def test_phi_clamped_at_max_angle(self, config):
        state = initial_state(config)
        for _ in range(200):
            state = step(state, ControlInput(0.5, 1), config)
        assert state.phi == config.max_angle

    def test_speed_clamped_at_max(self, config):
        state = initial_state(config)
        for _ in range(400):
            state = step(state, ControlInput(0.0, 0), config)
        assert math.hypot(state.vx, state.vy) <= config.max_speed + 1e-12

    def test_tilt_converts_thrust_sideways(self, config):
        state = initial_state(config)
        tilted = step(state, ControlInput(1.0, 1), config)
        phi = tilted.phi
        thrust = config.thrust_gain
        assert tilted.vx == pytest.approx(thrust * math.sin(math.radians(phi)) * config.dt)
        assert tilted.vy == pytest.approx(
            (thrust * math.cos(math.radians(phi)) - config.gravity) * config.dt
        )


class TestControlValidation:
    def test_throttle_bounds(self):
        with pytest.raises(ValueError):
            ControlInput(-0.1, 0)
        with pytest.raises(ValueError):
            ControlInput(1.1, 0)

    def test_attitude_values(self):
        with pytest.raises(ValueError):
            ControlInput(0.5, 2)
        ControlInput(0.5, -1)
        ControlInput(0.5, 0)
        ControlInput(0.5, 1)


class TestConfig:
    def test_non_positive_rejected(self):
        with pytest.raises(ValueError):
            SimConfig(gravity=0.0)

    def test_pad_must_fit_window(self):
        with pytest.raises(ValueError):
            SimConfig(pad_x_min=900.0, pad_x_max=800.0)

    def test_dt_fixed_at_50hz(self):
        with pytest.raises(ValueError):
            SimConfig(dt=0.01)

    def test_json_round_trip(self, config, tmp_path):
        from quadland.sim import load_config, save_config

        path = tmp_path / "config.json"
        save_config(config, path)
        assert load_config(path) == config

    def test_unsupported_version_rejected(self, config):
        doc = config.to_json()
        doc["version"] = 99
        with pytest.raises(ValueError):
            SimConfig.from_json(doc)

    def test_max_steps(self, config):
        assert config.max_steps == 6000
