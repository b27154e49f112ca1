//! Closed-form Finsler extremals on the Heisenberg group for control sets in
//! generalized spherical coordinates.
//!
//! The control set is U = { (f(u3) w, u3) : u3 in [-m, M], w in Omega } for a
//! planar compact convex Omega and a concave positive profile f. The vertical
//! adjoint subsystem has first integrals A = mu_polar(h1, h2) and h3, and the
//! extremals split into three families: vertical segments (A = 0), singular
//! horizontal motions (h3 = 0) and the generic eta-parametrized curves.

use crate::bodies::{duality, ConvexBody};
use crate::error::{Error, Result};
use crate::trig::CompactTrig;
use crate::traj::Trajectory;
use crate::vec2::{vec2, Vec2};

/// Concave profile f on [-m, M], positive on the interior.
#[derive(Clone, Debug)]
pub enum Profile {
    /// f(v) = sqrt(1 - v^2); requires [-m, M] inside [-1, 1].
    SqrtCap,
    /// f(v) = 1 - |v| / c.
    AffineCap { c: f64 },
    /// f constant.
    Const { w: f64 },
    /// Piecewise-linear concave interpolation of samples.
    Samples { v: Vec<f64>, f: Vec<f64> },
}

impl Profile {
    pub fn eval(&self, v: f64) -> f64 {
        match self {
            Profile::SqrtCap => (1.0 - v * v).max(0.0).sqrt(),
            Profile::AffineCap { c } => 1.0 - v.abs() / c,
            Profile::Const { w } => *w,
            Profile::Samples { v: vs, f: fs } => crate::num::lerp_table(vs, fs, v),
        }
    }
}

/// Compact control set with generalized spherical coordinates:
/// cross-section Omega, profile f, vertical range [-m, M].
#[derive(Clone, Debug)]
pub struct SphericalControlSet {
    pub omega: ConvexBody,
    pub profile: Profile,
    /// Lower vertical bound m > 0 (the range is [-m, M]).
    pub m: f64,
    /// Upper vertical bound M > 0.
    pub m_upper: f64,
}

impl SphericalControlSet {
    pub fn new(omega: ConvexBody, profile: Profile, m: f64, m_upper: f64) -> Result<Self> {
        if !(m > 0.0 && m_upper > 0.0) {
            return Err(Error::InvalidBody("vertical bounds must be positive".into()));
        }
        if let Profile::SqrtCap = profile {
            if m > 1.0 || m_upper > 1.0 {
                return Err(Error::InvalidBody(
                    "sqrt profile needs [-m, M] inside [-1, 1]".into(),
                ));
            }
        }
        let set = SphericalControlSet {
            omega,
            profile,
            m,
            m_upper,
        };
        set.validate()?;
        Ok(set)
    }

    /// Midpoint concavity and interior positivity, sampled.
    pub fn validate(&self) -> Result<()> {
        let (a, b) = (-self.m, self.m_upper);
        let n = 256;
        for i in 0..n {
            for j in (i + 1)..n.min(i + 40) {
                let x = a + (b - a) * i as f64 / (n - 1) as f64;
                let y = a + (b - a) * j as f64 / (n - 1) as f64;
                let mid = 0.5 * (x + y);
                let lhs = self.profile.eval(mid);
                let rhs = 0.5 * (self.profile.eval(x) + self.profile.eval(y));
                if lhs < rhs - 1e-9 {
                    return Err(Error::InvalidBody("profile is not concave".into()));
                }
            }
        }
        for i in 1..n - 1 {
            let x = a + (b - a) * i as f64 / (n - 1) as f64;
            if !(self.profile.eval(x) > 0.0) {
                return Err(Error::InvalidBody(
                    "profile must be positive on the interior".into(),
                ));
            }
        }
        Ok(())
    }

    /// Minkowski functional of the 3D control set at (w, v).
    pub fn minkowski3(&self, w: Vec2, v: f64) -> f64 {
        let inside = |lambda: f64| -> bool {
            let vs = v / lambda;
            if vs < -self.m - 1e-15 || vs > self.m_upper + 1e-15 {
                return false;
            }
            let cap = self.profile.eval(vs.clamp(-self.m, self.m_upper));
            if cap <= 0.0 {
                return w.norm() / lambda <= 1e-15;
            }
            self.omega.minkowski(w / lambda) <= cap + 1e-14
        };
        let mut lo = 0.0;
        let mut hi = 1.0;
        while !inside(hi) {
            hi *= 2.0;
            if hi > 1e12 {
                return f64::INFINITY;
            }
        }
        for _ in 0..100 {
            let mid = 0.5 * (lo + hi);
            if inside(mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    }
}

/// Value and argmax interval of v -> A f(v) + h3 v over [-m, M].
#[derive(Clone, Copy, Debug)]
pub struct VerticalMax {
    pub h: f64,
    pub lo: f64,
    pub hi: f64,
}

impl VerticalMax {
    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, v: f64, tol: f64) -> bool {
        v >= self.lo - tol && v <= self.hi + tol
    }
}

/// Rule for selecting u3 inside the argmax interval.
#[derive(Clone, Debug, Default)]
pub enum U3Selector {
    /// Midpoint of the argmax interval (deterministic default).
    #[default]
    ArgmaxMid,
    Const(f64),
    /// Values aligned with the time grid.
    Schedule(Vec<f64>),
}

/// Rule for the face angle theta of family-2 extremals.
#[derive(Clone, Debug, Default)]
pub enum ThetaSelector {
    /// Midpoint of the corresponding interval (the generic singleton).
    #[default]
    FaceMid,
    Const(f64),
    Schedule(Vec<f64>),
}

/// One extremal family of the classification.
#[derive(Clone, Debug)]
pub enum HeisenbergFamily {
    /// A = 0: vertical segments x3 = M t (h3 > 0) or x3 = -m t (h3 < 0).
    Vertical { h3: f64 },
    /// A > 0, h3 = 0: straight horizontal motion along a face of Omega.
    Horizontal {
        a: f64,
        eta0: f64,
        theta: ThetaSelector,
        u3: U3Selector,
    },
    /// A > 0, h3 != 0: the eta-parametrized closed forms.
    Generic {
        a: f64,
        h3: f64,
        eta0: f64,
        u3: U3Selector,
    },
}

/// Extremal generator bound to one control set (caches the polar trig).
#[derive(Clone, Debug)]
pub struct HeisenbergSystem {
    set: SphericalControlSet,
    trig: CompactTrig,
    polar: ConvexBody,
}

impl HeisenbergSystem {
    pub fn new(set: SphericalControlSet) -> Result<HeisenbergSystem> {
        let trig = CompactTrig::new(&set.omega)?;
        let polar = duality::polar(&set.omega, 4096);
        Ok(HeisenbergSystem { set, trig, polar })
    }

    pub fn set(&self) -> &SphericalControlSet {
        &self.set
    }

    pub fn trig(&self) -> &CompactTrig {
        &self.trig
    }

    pub fn polar_body(&self) -> &ConvexBody {
        &self.polar
    }

    /// H = max over [-m, M] of A f(v) + h3 v, with its argmax interval.
    pub fn vertical_max(&self, a: f64, h3: f64) -> VerticalMax {
        let set = &self.set;
        let (lo_v, hi_v) = (-set.m, set.m_upper);
        let g = |v: f64| a * self.set.profile.eval(v) + h3 * v;
        let (v_star, mut h) = crate::num::golden_max(&g, lo_v, hi_v);
        h = h.max(g(lo_v)).max(g(hi_v));
        let scale = h.abs().max(1.0);
        let eps = 1e-12 * scale;
        // widen to the flat part of the argmax (concavity makes the level
        // set an interval around any maximizer)
        let mut best_v = v_star;
        if g(lo_v) >= h - eps {
            best_v = lo_v;
        } else if g(hi_v) >= h - eps {
            best_v = hi_v;
        }
        let lo = if g(lo_v) >= h - eps {
            lo_v
        } else {
            crate::num::bisect(&|v| g(v) - (h - eps), lo_v, best_v, 1e-13)
        };
        let hi = if g(hi_v) >= h - eps {
            hi_v
        } else {
            crate::num::bisect(&|v| g(v) - (h - eps), hi_v, best_v, 1e-13)
        };
        VerticalMax { h, lo, hi }
    }

    fn u3_at(&self, sel: &U3Selector, idx: usize, vm: &VerticalMax) -> Result<f64> {
        let v = match sel {
            U3Selector::ArgmaxMid => vm.mid(),
            U3Selector::Const(v) => *v,
            U3Selector::Schedule(vs) => *vs.get(idx).ok_or_else(|| {
                Error::InvalidFamilyParams("u3 schedule shorter than the grid".into())
            })?,
        };
        if !vm.contains(v, 1e-7) {
            return Err(Error::InvalidFamilyParams(format!(
                "u3 = {v} outside the argmax interval [{}, {}]",
                vm.lo, vm.hi
            )));
        }
        Ok(v.clamp(-self.set.m, self.set.m_upper))
    }

    /// Generate one extremal on the grid. Columns:
    /// t, x1, x2, x3, u1, u2, u3, h1, h2, h3.
    pub fn extremal(&self, family: &HeisenbergFamily, t_grid: &[f64]) -> Result<Trajectory> {
        check_grid(t_grid)?;
        let mut tr = Trajectory::new(&[
            "x1", "x2", "x3", "u1", "u2", "u3", "h1", "h2", "h3",
        ]);
        match family {
            HeisenbergFamily::Vertical { h3 } => {
                if *h3 == 0.0 {
                    return Err(Error::InvalidFamilyParams(
                        "vertical family needs h3 != 0 (PMP nontriviality)".into(),
                    ));
                }
                let u3 = if *h3 > 0.0 { self.set.m_upper } else { -self.set.m };
                for &t in t_grid {
                    tr.push_row(t, &[0.0, 0.0, u3 * t, 0.0, 0.0, u3, 0.0, 0.0, *h3]);
                }
            }
            HeisenbergFamily::Horizontal { a, eta0, theta, u3 } => {
                if !(*a > 0.0) {
                    return Err(Error::InvalidFamilyParams(
                        "horizontal family needs A > 0".into(),
                    ));
                }
                self.horizontal(&mut tr, *a, *eta0, theta, u3, t_grid)?;
            }
            HeisenbergFamily::Generic { a, h3, eta0, u3 } => {
                if !(*a > 0.0) || *h3 == 0.0 {
                    return Err(Error::InvalidFamilyParams(
                        "generic family needs A > 0 and h3 != 0".into(),
                    ));
                }
                self.generic(&mut tr, *a, *h3, *eta0, u3, t_grid)?;
            }
        }
        Ok(tr)
    }

    fn horizontal(
        &self,
        tr: &mut Trajectory,
        a: f64,
        eta0: f64,
        theta_sel: &ThetaSelector,
        u3_sel: &U3Selector,
        t_grid: &[f64],
    ) -> Result<()> {
        let vm = self.vertical_max(1.0, 0.0); // W = max f, argmax of f
        let w = vm.h;
        let (th_lo, th_hi) = self.trig.co_correspondence(eta0);
        let theta_at = |idx: usize| -> Result<f64> {
            let th = match theta_sel {
                ThetaSelector::FaceMid => 0.5 * (th_lo + th_hi),
                ThetaSelector::Const(t) => *t,
                ThetaSelector::Schedule(ts) => *ts.get(idx).ok_or_else(|| {
                    Error::InvalidFamilyParams("theta schedule shorter than the grid".into())
                })?,
            };
            if th < th_lo - 1e-7 || th > th_hi + 1e-7 {
                return Err(Error::InvalidFamilyParams(format!(
                    "theta = {th} outside the face interval [{th_lo}, {th_hi}]"
                )));
            }
            Ok(th)
        };
        let hvec = self.trig.eval_dual(eta0) * a;
        let mut x1 = 0.0;
        let mut x2 = 0.0;
        let mut x3 = 0.0;
        let mut prev: Option<(f64, f64, f64, f64)> = None; // t, dx1, dx2, dx3
        for (i, &t) in t_grid.iter().enumerate() {
            let th = theta_at(i)?;
            let u3 = self.u3_at(u3_sel, i, &vm)?;
            let dir = self.trig.eval(th);
            let dx1 = w * dir.x;
            let dx2 = w * dir.y;
            let dx3 = u3 + x1 * dx2;
            if let Some((tp, p1, p2, p3)) = prev {
                let h = t - tp;
                x1 += 0.5 * h * (p1 + dx1);
                x2 += 0.5 * h * (p2 + dx2);
                // x3 integrand depends on the running x1; re-evaluate at t
                let dx3_now = u3 + x1 * dx2;
                x3 += 0.5 * h * (p3 + dx3_now);
                prev = Some((t, dx1, dx2, dx3_now));
            } else {
                prev = Some((t, dx1, dx2, dx3));
            }
            tr.push_row(t, &[x1, x2, x3, dx1, dx2, u3, hvec.x, hvec.y, 0.0]);
        }
        Ok(())
    }

    fn generic(
        &self,
        tr: &mut Trajectory,
        a: f64,
        h3: f64,
        eta0: f64,
        u3_sel: &U3Selector,
        t_grid: &[f64],
    ) -> Result<()> {
        let vm = self.vertical_max(a, h3);
        let h = vm.h;
        let d0 = self.trig.eval_dual(eta0);
        let mut int_u3 = 0.0;
        let mut prev: Option<(f64, f64)> = None; // t, u3
        for (i, &t) in t_grid.iter().enumerate() {
            let u3 = self.u3_at(u3_sel, i, &vm)?;
            if let Some((tp, u3p)) = prev {
                int_u3 += 0.5 * (t - tp) * (u3p + u3);
            }
            prev = Some((t, u3));
            let eta = eta0 + (h * h3 / (a * a)) * t - (h3 * h3 / (a * a)) * int_u3;
            let d = self.trig.eval_dual(eta);
            let x1 = (a / h3) * (d.y - d0.y);
            let x2 = (a / h3) * (-d.x + d0.x);
            let x3 = (h / h3) * t - 0.5 * (a / h3) * (a / h3) * (eta - eta0)
                + 0.5 * (a / h3) * (a / h3)
                    * (2.0 * d.x * d0.y - d.x * d.y - d0.x * d0.y);
            let (th_lo, th_hi) = self.trig.co_correspondence(eta);
            let dir = self.trig.eval(0.5 * (th_lo + th_hi));
            let f = self.set.profile.eval(u3);
            tr.push_row(
                t,
                &[x1, x2, x3, f * dir.x, f * dir.y, u3, a * d.x, a * d.y, h3],
            );
        }
        Ok(())
    }

    /// Family-2 trajectory singular along the face of a dual corner: the
    /// horizontal motion interpolates the face endpoints through beta(t), and
    /// x3 follows in closed form.
    pub fn singular_x3(
        &self,
        eta0: f64,
        beta: &[f64],
        u3_sel: &U3Selector,
        t_grid: &[f64],
    ) -> Result<Trajectory> {
        check_grid(t_grid)?;
        if beta.len() != t_grid.len() {
            return Err(Error::InvalidFamilyParams(
                "beta schedule must match the grid".into(),
            ));
        }
        let (th0, th1) = self.trig.co_correspondence(eta0);
        if th1 - th0 <= 1e-9 * self.trig.period() {
            return Err(Error::NotSingularAngle);
        }
        // admissibility: 0 <= beta <= 1 and 0 <= (beta t)' <= 1
        for (i, &b) in beta.iter().enumerate() {
            if !(-1e-9..=1.0 + 1e-9).contains(&b) {
                return Err(Error::InvalidFamilyParams(format!(
                    "beta[{i}] = {b} outside [0, 1]"
                )));
            }
            if i > 0 {
                let num = beta[i] * t_grid[i] - beta[i - 1] * t_grid[i - 1];
                let den = t_grid[i] - t_grid[i - 1];
                let rate = num / den;
                if !(-1e-6..=1.0 + 1e-6).contains(&rate) {
                    return Err(Error::InvalidFamilyParams(format!(
                        "(beta t)' = {rate} outside [0, 1] at step {i}"
                    )));
                }
            }
        }
        let vm = self.vertical_max(1.0, 0.0);
        let w = vm.h;
        let omega0 = self.trig.eval(th0);
        let omega1 = self.trig.eval(th1);
        let hvec = self.trig.eval_dual(eta0);
        let mut tr = Trajectory::new(&[
            "x1", "x2", "x3", "u1", "u2", "u3", "h1", "h2", "h3",
        ]);
        let mut int_beta_s = 0.0; // integral of beta(s) s ds
        let mut int_u3 = 0.0;
        let mut prev: Option<(f64, f64, f64)> = None; // t, beta, u3
        for (i, &t) in t_grid.iter().enumerate() {
            let b = beta[i];
            let u3 = self.u3_at(u3_sel, i, &vm)?;
            if let Some((tp, bp, u3p)) = prev {
                int_beta_s += 0.5 * (t - tp) * (bp * tp + b * t);
                int_u3 += 0.5 * (t - tp) * (u3p + u3);
            }
            prev = Some((t, b, u3));
            let x12 = (omega0 * b + omega1 * (1.0 - b)) * (w * t);
            let bt2 = (b * t) * (b * t);
            let one_minus2 = (1.0 - b) * (1.0 - b) * t * t;
            let x3 = int_u3
                + w * w
                    * (omega0.x * omega0.y * 0.5 * bt2
                        + omega1.x * omega1.y * 0.5 * one_minus2
                        + omega1.x * omega0.y * (0.5 * t * t - 0.5 * one_minus2 - int_beta_s)
                        + omega0.x * omega1.y * (int_beta_s - 0.5 * bt2));
            // control: alpha = (beta t)' picks the point of the face
            let alpha = if i == 0 {
                b
            } else {
                let (tp, bp, _) = (t_grid[i - 1], beta[i - 1], 0.0);
                ((b * t - bp * tp) / (t - tp)).clamp(0.0, 1.0)
            };
            let u12 = (omega0 * alpha + omega1 * (1.0 - alpha)) * w;
            tr.push_row(
                t,
                &[x12.x, x12.y, x3, u12.x, u12.y, u3, hvec.x, hvec.y, 0.0],
            );
        }
        Ok(tr)
    }
}

fn check_grid(t_grid: &[f64]) -> Result<()> {
    if t_grid.is_empty() || t_grid[0] != 0.0 {
        return Err(Error::InvalidFamilyParams("grid must start at t = 0".into()));
    }
    if t_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidFamilyParams("grid must be increasing".into()));
    }
    Ok(())
}
