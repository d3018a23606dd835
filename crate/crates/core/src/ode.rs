//! Fixed-step classical 4-stage Runge-Kutta integration.
//!
//! The step operates on plain `f64` slices so callers control the state
//! layout. Everything is allocation-free past construction and bitwise
//! deterministic for identical inputs.

/// Scratch buffers for one RK4 state size, reused across steps.
pub struct Rk4 {
    k1: Vec<f64>,
    k2: Vec<f64>,
    k3: Vec<f64>,
    k4: Vec<f64>,
    tmp: Vec<f64>,
}

impl Rk4 {
    pub fn new(dim: usize) -> Self {
        Self {
            k1: vec![0.0; dim],
            k2: vec![0.0; dim],
            k3: vec![0.0; dim],
            k4: vec![0.0; dim],
            tmp: vec![0.0; dim],
        }
    }

    /// Advance `state` from `t` to `t + dt` in place.
    ///
    /// `rhs(t, x, dx)` must write the derivative of `x` into `dx`.
    pub fn step<F>(&mut self, mut rhs: F, t: f64, dt: f64, state: &mut [f64])
    where
        F: FnMut(f64, &[f64], &mut [f64]),
    {
        let n = state.len();
        assert_eq!(n, self.k1.len(), "state dimension mismatch");

        rhs(t, state, &mut self.k1);
        for i in 0..n {
            self.tmp[i] = state[i] + 0.5 * dt * self.k1[i];
        }
        rhs(t + 0.5 * dt, &self.tmp, &mut self.k2);
        for i in 0..n {
            self.tmp[i] = state[i] + 0.5 * dt * self.k2[i];
        }
        rhs(t + 0.5 * dt, &self.tmp, &mut self.k3);
        for i in 0..n {
            self.tmp[i] = state[i] + dt * self.k3[i];
        }
        rhs(t + dt, &self.tmp, &mut self.k4);
        for i in 0..n {
            state[i] +=
                dt / 6.0 * (self.k1[i] + 2.0 * self.k2[i] + 2.0 * self.k3[i] + self.k4[i]);
        }
    }
}

/// Integrate `rhs` from `t0` over `n_steps` of size `dt`, returning the final
/// state. Convenience wrapper for scalar/test use.
pub fn integrate<F>(mut rhs: F, t0: f64, dt: f64, n_steps: usize, state0: &[f64]) -> Vec<f64>
where
    F: FnMut(f64, &[f64], &mut [f64]),
{
    let mut x = state0.to_vec();
    let mut rk = Rk4::new(x.len());
    for k in 0..n_steps {
        let t = t0 + k as f64 * dt;
        rk.step(&mut rhs, t, dt, &mut x);
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_decay_matches_closed_form() {
        // x' = -2x, x(0) = 1 -> x(1) = e^{-2}
        let x = integrate(|_, x, dx| dx[0] = -2.0 * x[0], 0.0, 1e-3, 1000, &[1.0]);
        assert!((x[0] - (-2.0f64).exp()).abs() < 1e-11);
    }

    #[test]
    fn fourth_order_on_polynomial_rhs() {
        // x' = t^3 integrates exactly under RK4 (degree <= 3).
        let x = integrate(|t, _, dx| dx[0] = t * t * t, 0.0, 0.25, 4, &[0.0]);
        assert!((x[0] - 0.25).abs() < 1e-14);
    }

    #[test]
    fn step_halving_shows_order_four() {
        let rhs = |t: f64, x: &[f64], dx: &mut [f64]| dx[0] = (t - x[0]).sin();
        let coarse = integrate(rhs, 0.0, 0.02, 100, &[0.3])[0];
        let mid = integrate(rhs, 0.0, 0.01, 200, &[0.3])[0];
        let fine = integrate(rhs, 0.0, 0.005, 400, &[0.3])[0];
        let order = ((coarse - mid).abs() / (mid - fine).abs()).log2();
        assert!(order > 3.5, "measured order {order}");
    }
}
