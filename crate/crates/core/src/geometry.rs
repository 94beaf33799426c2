//! Axis-aligned cubes, boundary rings, and sup-norm annuli.
//!
//! Conventions: cubes are open, membership is strict, `lambda * Q` is the
//! concentric cube with `lambda` times the side. A ring `R` of relative
//! thickness `alpha` is the boundary collar `{ (1-alpha) l/2 < max_i |x_i - c_i| < l/2 }`
//! with `l(R) = alpha * l(Q)`; its geometric width is `alpha * l / 2`.

use crate::error::{Error, Result};

/// Open axis-aligned cube `{ x : max_i |x_i - c_i| < side/2 }`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cube<const N: usize = 2> {
    pub center: [f64; N],
    pub side: f64,
}

impl<const N: usize> Cube<N> {
    pub fn new(center: [f64; N], side: f64) -> Result<Self> {
        if !(side > 0.0) || !side.is_finite() {
            return Err(Error::InvalidParam {
                name: "side",
                msg: format!("must be positive and finite, got {side}"),
            });
        }
        Ok(Cube { center, side })
    }

    pub fn half(&self) -> f64 {
        self.side / 2.0
    }

    /// Concentric cube `lambda * Q`.
    pub fn scaled(&self, lambda: f64) -> Cube<N> {
        Cube {
            center: self.center,
            side: self.side * lambda,
        }
    }

    /// Euclidean diameter, `side * sqrt(N)`.
    pub fn diam(&self) -> f64 {
        self.side * (N as f64).sqrt()
    }

    /// `max_i |x_i - c_i|`, the sup-norm distance from the center.
    pub fn sup_radius(&self, x: &[f64; N]) -> f64 {
        x.iter()
            .zip(&self.center)
            .map(|(a, c)| (a - c).abs())
            .fold(0.0, f64::max)
    }

    pub fn contains(&self, x: &[f64; N]) -> bool {
        self.sup_radius(x) < self.half()
    }

    pub fn lo(&self, axis: usize) -> f64 {
        self.center[axis] - self.half()
    }

    pub fn hi(&self, axis: usize) -> f64 {
        self.center[axis] + self.half()
    }

    pub fn volume(&self) -> f64 {
        self.side.powi(N as i32)
    }

    /// Whether `self` lies inside `other` up to `tol` slack per face.
    pub fn inside(&self, other: &Cube<N>, tol: f64) -> bool {
        (0..N).all(|i| self.lo(i) >= other.lo(i) - tol && self.hi(i) <= other.hi(i) + tol)
    }
}

impl Cube<2> {
    pub fn unit() -> Self {
        Cube {
            center: [0.0, 0.0],
            side: 1.0,
        }
    }

    /// Area of the rectangle overlap of two cubes (0 when disjoint).
    pub fn overlap_area(&self, other: &Cube<2>) -> f64 {
        let mut area = 1.0;
        for i in 0..2 {
            let lo = self.lo(i).max(other.lo(i));
            let hi = self.hi(i).min(other.hi(i));
            if hi <= lo {
                return 0.0;
            }
            area *= hi - lo;
        }
        area
    }

    /// Euclidean distance between the closures (0 when they touch or overlap).
    pub fn distance(&self, other: &Cube<2>) -> f64 {
        let mut d2 = 0.0;
        for i in 0..2 {
            let gap = (self.lo(i).max(other.lo(i)) - self.hi(i).min(other.hi(i))).max(0.0);
            d2 += gap * gap;
        }
        d2.sqrt()
    }
}

/// Boundary ring of relative thickness `alpha` inside its cube.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ring<const N: usize = 2> {
    pub cube: Cube<N>,
    pub alpha: f64,
}

impl<const N: usize> Ring<N> {
    pub fn new(cube: Cube<N>, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::InvalidParam {
                name: "alpha",
                msg: format!("relative thickness must lie in (0,1), got {alpha}"),
            });
        }
        Ok(Ring { cube, alpha })
    }

    /// `l(R) = alpha * l(Q)`.
    pub fn length(&self) -> f64 {
        self.alpha * self.cube.side
    }

    /// Geometric width of the collar, `alpha * l / 2`.
    pub fn width(&self) -> f64 {
        self.length() / 2.0
    }

    /// Sup-norm radius of the inner boundary, `(1 - alpha) l / 2`.
    pub fn inner_half(&self) -> f64 {
        (1.0 - self.alpha) * self.cube.half()
    }

    pub fn contains(&self, x: &[f64; N]) -> bool {
        let r = self.cube.sup_radius(x);
        r > self.inner_half() && r < self.cube.half()
    }

    pub fn annulus(&self) -> Annulus<N> {
        Annulus {
            center: self.cube.center,
            inner: self.inner_half(),
            outer: self.cube.half(),
        }
    }

    /// The doubled ring `2R`, same cube with `alpha` doubled.
    ///
    /// Rejects `alpha >= 1/2`: from there the caller must use the final
    /// half-step extension instead of another doubling.
    pub fn double(&self) -> Result<Ring<N>> {
        if self.alpha >= 0.5 {
            return Err(Error::AlphaNotThin { alpha: self.alpha });
        }
        Ok(Ring {
            cube: self.cube,
            alpha: 2.0 * self.alpha,
        })
    }

    /// The inner shell `R' = { (1-2a) l/2 < max_i |x_i - c_i| < (1-a) l/2 }`,
    /// disjoint from `R`, with `closure(2R) = closure(R) union closure(R')`.
    pub fn inner_shell(&self) -> Result<Annulus<N>> {
        if self.alpha >= 0.5 {
            return Err(Error::AlphaNotThin { alpha: self.alpha });
        }
        Ok(Annulus {
            center: self.cube.center,
            inner: (1.0 - 2.0 * self.alpha) * self.cube.half(),
            outer: self.inner_half(),
        })
    }
}

/// Open sup-norm annulus `{ x : inner < max_i |x_i - c_i| < outer }`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Annulus<const N: usize = 2> {
    pub center: [f64; N],
    pub inner: f64,
    pub outer: f64,
}

impl<const N: usize> Annulus<N> {
    pub fn sup_radius(&self, x: &[f64; N]) -> f64 {
        x.iter()
            .zip(&self.center)
            .map(|(a, c)| (a - c).abs())
            .fold(0.0, f64::max)
    }

    pub fn contains(&self, x: &[f64; N]) -> bool {
        let r = self.sup_radius(x);
        r > self.inner && r < self.outer
    }

    pub fn width(&self) -> f64 {
        self.outer - self.inner
    }
}

impl Annulus<2> {
    pub fn area(&self) -> f64 {
        4.0 * (self.outer * self.outer - self.inner * self.inner)
    }
}

/// Default cap on the number of cubes `subdivide_ring` may emit.
pub const SUBDIVIDE_CAP: usize = 100_000;

/// Largest snapping factor tried when `alpha * l / 2` does not tile the ring.
const SNAP_MAX: usize = 64;

/// Tiles the closed band `{ h - k*w <= max|x_i - c_i| <= h }` (k layers of
/// width `w`) by closed squares of side `w`. `m = 2h/w` must be an integer.
fn tile_band(center: [f64; 2], outer_half: f64, side: f64, m: usize) -> Vec<Cube<2>> {
    let mut cubes = Vec::with_capacity(4 * (m - 1));
    let lo = |j: usize| center[0] - outer_half + (j as f64 + 0.5) * side;
    let top = center[1] + outer_half - 0.5 * side;
    let bot = center[1] - outer_half + 0.5 * side;
    for j in 0..m {
        cubes.push(Cube {
            center: [lo(j), top],
            side,
        });
        cubes.push(Cube {
            center: [lo(j), bot],
            side,
        });
    }
    let left = center[0] - outer_half + 0.5 * side;
    let right = center[0] + outer_half - 0.5 * side;
    for j in 1..m - 1 {
        let y = center[1] - outer_half + (j as f64 + 0.5) * side;
        cubes.push(Cube {
            center: [left, y],
            side,
        });
        cubes.push(Cube {
            center: [right, y],
            side,
        });
    }
    cubes
}

/// Decomposes the ring into congruent, essentially disjoint closed squares of
/// side `l(R)/2 = alpha*l/2`, snapping the side down to `l(R)/(2k)` for the
/// smallest `k` that makes the tiling exact. In the plane the count is
/// `4k(m - k)` with `m = 2k/alpha`, comparable to `1/alpha`.
pub fn subdivide_ring(ring: &Ring<2>) -> Result<Vec<Cube<2>>> {
    subdivide_ring_capped(ring, SUBDIVIDE_CAP)
}

pub fn subdivide_ring_capped(ring: &Ring<2>, cap: usize) -> Result<Vec<Cube<2>>> {
    let alpha = ring.alpha;
    let snap = (1..=SNAP_MAX).find_map(|k| {
        let m = 2.0 * k as f64 / alpha;
        let rounded = m.round();
        (rounded >= 3.0 && (m - rounded).abs() < 1e-9 * rounded).then_some((k, rounded as usize))
    });
    let (k, m0) = snap.ok_or(Error::TilingNoSnap { alpha })?;
    let total = 4 * k * (m0 - k);
    if total > cap {
        return Err(Error::TilingCap { needed: total, cap });
    }
    let side = ring.width() / k as f64;
    let mut cubes = Vec::with_capacity(total);
    for i in 0..k {
        let outer_half = ring.cube.half() - i as f64 * side;
        cubes.extend(tile_band(ring.cube.center, outer_half, side, m0 - 2 * i));
    }
    debug_assert_eq!(cubes.len(), total);
    Ok(cubes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_ring(alpha: f64) -> Ring<2> {
        Ring::new(Cube::unit(), alpha).unwrap()
    }

    #[test]
    fn double_ring_doubles_alpha() {
        let r = unit_ring(0.2).double().unwrap();
        assert_eq!(r.alpha, 0.4);
        assert_eq!(r.cube, Cube::unit());
        // 0.49 < 1/2 is still accepted even though the result is nearly all of Q
        let r = unit_ring(0.49).double().unwrap();
        assert!((r.alpha - 0.98).abs() < 1e-15);
    }

    #[test]
    fn double_ring_rejects_half() {
        assert!(matches!(
            unit_ring(0.5).double(),
            Err(Error::AlphaNotThin { .. })
        ));
    }

    #[test]
    fn doubled_ring_contains_original() {
        let r = unit_ring(0.2);
        let rr = r.double().unwrap();
        for p in [[0.45, 0.1], [0.401, -0.3], [-0.12, 0.499]] {
            if r.contains(&p) {
                assert!(rr.contains(&p), "2R must contain R at {p:?}");
            }
        }
    }

    #[test]
    fn inner_shell_bounds() {
        // l = 1, alpha = 0.2: R' = { 0.3 < max|x_i| < 0.4 }
        let shell = unit_ring(0.2).inner_shell().unwrap();
        assert!((shell.inner - 0.3).abs() < 1e-15);
        assert!((shell.outer - 0.4).abs() < 1e-15);
        assert!(shell.contains(&[0.35, 0.0]));
        assert!(!shell.contains(&[0.45, 0.0]));

        // l = 2, alpha = 0.25: R' = { 0.5 < max|x_i| < 0.75 }
        let cube = Cube::new([0.0, 0.0], 2.0).unwrap();
        let shell = Ring::new(cube, 0.25).unwrap().inner_shell().unwrap();
        assert!((shell.inner - 0.5).abs() < 1e-15);
        assert!((shell.outer - 0.75).abs() < 1e-15);
    }

    #[test]
    fn inner_shell_complements_ring_in_double() {
        let r = unit_ring(0.2);
        let rr = r.double().unwrap();
        let shell = r.inner_shell().unwrap();
        // R' and R are disjoint and their union fills 2R up to boundaries.
        for p in [[0.31, 0.0], [0.35, 0.2], [0.42, -0.1], [0.48, 0.48]] {
            assert!(!(shell.contains(&p) && r.contains(&p)));
            if rr.contains(&p) {
                let on_boundary = (r.cube.sup_radius(&p) - r.inner_half()).abs() < 1e-12;
                assert!(shell.contains(&p) || r.contains(&p) || on_boundary);
            }
        }
    }

    #[test]
    fn ring_area_identity() {
        // area(R) + area((1-alpha)Q) = area(Q) exactly
        for alpha in [0.5, 0.25, 0.1, 0.037] {
            let r = unit_ring(alpha);
            let ring_area = r.annulus().area();
            let inner_area = r.cube.scaled(1.0 - alpha).volume();
            assert!(
                (ring_area + inner_area - r.cube.volume()).abs() < 1e-12,
                "alpha = {alpha}"
            );
        }
    }

    #[test]
    fn subdivide_counts() {
        let cubes = subdivide_ring(&unit_ring(0.5)).unwrap();
        assert_eq!(cubes.len(), 12);
        assert!(cubes.iter().all(|c| (c.side - 0.25).abs() < 1e-15));

        let cubes = subdivide_ring(&unit_ring(0.25)).unwrap();
        assert_eq!(cubes.len(), 28);
        assert!(cubes.iter().all(|c| (c.side - 0.125).abs() < 1e-15));
    }

    #[test]
    fn subdivide_count_scaling() {
        // halving alpha roughly doubles the count in the plane
        let n1 = subdivide_ring(&unit_ring(0.2)).unwrap().len();
        let n2 = subdivide_ring(&unit_ring(0.1)).unwrap().len();
        let factor = n2 as f64 / n1 as f64;
        assert!(factor > 1.5 && factor < 2.5, "factor = {factor}");
    }

    #[test]
    fn subdivide_tiles_exactly() {
        for alpha in [0.5, 0.25, 0.1] {
            let ring = unit_ring(alpha);
            let cubes = subdivide_ring(&ring).unwrap();
            // pairwise interior-disjoint
            for (i, a) in cubes.iter().enumerate() {
                for b in &cubes[i + 1..] {
                    assert!(a.overlap_area(b) < 1e-12);
                }
            }
            // union of closed cubes covers the ring: total area matches and
            // sampled ring points are all inside some cube
            let total: f64 = cubes.iter().map(Cube::volume).sum();
            assert!((total - ring.annulus().area()).abs() < 1e-10, "alpha = {alpha}");
            for i in 0..60 {
                for j in 0..60 {
                    let p = [(i as f64 + 0.5) / 60.0 - 0.5, (j as f64 + 0.5) / 60.0 - 0.5];
                    if ring.contains(&p) {
                        assert!(
                            cubes.iter().any(|c| c.sup_radius(&p) <= c.half() + 1e-12),
                            "uncovered ring point {p:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn subdivide_snaps_awkward_alpha() {
        // 2/0.3 is not an integer; k = 3 gives m = 20
        let cubes = subdivide_ring(&unit_ring(0.3)).unwrap();
        let ring = unit_ring(0.3);
        assert!(cubes.iter().all(|c| (c.side - ring.width() / 3.0).abs() < 1e-12));
        let total: f64 = cubes.iter().map(Cube::volume).sum();
        assert!((total - ring.annulus().area()).abs() < 1e-10);
    }

    #[test]
    fn subdivide_cap_is_explicit() {
        assert!(matches!(
            subdivide_ring_capped(&unit_ring(0.5), 4),
            Err(Error::TilingCap { needed: 12, cap: 4 })
        ));
    }
}
