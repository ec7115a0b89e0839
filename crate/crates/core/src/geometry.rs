//! Regular icosahedron with vertices `A0..A5` (upper) and `B0..B5` (antipodes),
//! plus the 6 five-fold, 10 three-fold and 15 two-fold rotation axes.
//!
//! The z axis points at `A0` and the y axis at the midpoint of edge `A2 B5`.

use nalgebra::{Matrix3, Rotation3, Unit, Vector3};
use serde::Serialize;
use std::f64::consts::PI;

use crate::golden::{sqrt5, GoldenConstants};

/// Vertex slots: `0..6` are `A0..A5`, `6..12` are `B0..B5`.
pub const VERTEX_COUNT: usize = 12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Vertex {
    pub label: String,
    pub position: [f64; 3],
}

impl Vertex {
    pub fn vector(&self) -> Vector3<f64> {
        Vector3::from(self.position)
    }
}

/// A proper rotation given by a unit axis and an angle in radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Rotation {
    pub axis: [f64; 3],
    pub angle: f64,
}

impl Rotation {
    pub fn new(axis: Vector3<f64>, angle: f64) -> Self {
        let axis = axis.normalize();
        Rotation {
            axis: [axis.x, axis.y, axis.z],
            angle,
        }
    }

    pub fn identity() -> Self {
        Rotation {
            axis: [0.0, 0.0, 1.0],
            angle: 0.0,
        }
    }

    /// Active, right-handed rotation matrix.
    pub fn matrix(&self) -> Matrix3<f64> {
        let axis = Unit::new_normalize(Vector3::from(self.axis));
        Rotation3::from_axis_angle(&axis, self.angle).into_inner()
    }
}

/// Point on the unit sphere from polar angle `theta` and azimuth `phi`.
pub fn spherical(theta: f64, phi: f64) -> Vector3<f64> {
    Vector3::new(theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos())
}

/// The polar angles θ1..θ5 of the axis families.
#[derive(Debug, Clone, Copy)]
pub struct PolarAngles {
    pub theta1: f64,
    pub theta2: f64,
    pub theta3: f64,
    pub theta4: f64,
    pub theta5: f64,
}

impl PolarAngles {
    pub fn new() -> Self {
        let g = GoldenConstants::new();
        let s5 = sqrt5();
        PolarAngles {
            theta1: 2f64.atan(),
            theta2: (3.0 - s5).atan(),
            theta3: (3.0 + s5).atan(),
            theta4: g.p.atan(),
            theta5: g.p_inv.atan(),
        }
    }
}

impl Default for PolarAngles {
    fn default() -> Self {
        Self::new()
    }
}

// Azimuth families, j = 1..5.
fn phi1(j: usize) -> f64 {
    2.0 * (j as f64 - 1.0) * PI / 5.0
}

fn phi2(j: usize) -> f64 {
    (2.0 * j as f64 - 1.0) * PI / 5.0
}

fn phi3(j: usize) -> f64 {
    (4.0 * j as f64 - 3.0) * PI / 10.0
}

pub fn build_geometry() -> Vec<Vertex> {
    let theta1 = PolarAngles::new().theta1;
    let mut upper = vec![Vector3::new(0.0, 0.0, 1.0)];
    upper.extend((1..=5).map(|j| spherical(theta1, phi1(j))));

    let mut vertices: Vec<Vertex> = upper
        .iter()
        .enumerate()
        .map(|(j, v)| Vertex {
            label: format!("A{j}"),
            position: [v.x, v.y, v.z],
        })
        .collect();
    vertices.extend(upper.iter().enumerate().map(|(j, v)| Vertex {
        label: format!("B{j}"),
        position: [-v.x, -v.y, -v.z],
    }));
    vertices
}

/// Axis of `T_j`, `j = 0..5`: from `B_j` to `A_j`.
pub fn five_fold_axis(j: usize) -> Vector3<f64> {
    assert!(j <= 5, "five-fold axis index {j} out of range");
    if j == 0 {
        Vector3::z()
    } else {
        spherical(PolarAngles::new().theta1, phi1(j))
    }
}

/// Axis of `R_j`, `j = 1..10`, always in the upper hemisphere.
pub fn three_fold_axis(j: usize) -> Vector3<f64> {
    assert!((1..=10).contains(&j), "three-fold axis index {j} out of range");
    let a = PolarAngles::new();
    if j <= 5 {
        spherical(a.theta2, phi2(j))
    } else {
        spherical(a.theta3, phi2(j - 5))
    }
}

/// Axis of `S_j`, `j = 1..15`.
pub fn two_fold_axis(j: usize) -> Vector3<f64> {
    assert!((1..=15).contains(&j), "two-fold axis index {j} out of range");
    let a = PolarAngles::new();
    match j {
        1..=5 => spherical(a.theta4, phi1(j)),
        6..=10 => spherical(a.theta5, phi2(j - 5)),
        _ => spherical(PI / 2.0, phi3(j - 10)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn north_pole_and_antipodes() {
        let v = build_geometry();
        assert_eq!(v.len(), VERTEX_COUNT);
        assert_eq!(v[0].position, [0.0, 0.0, 1.0]);
        for j in 0..6 {
            assert_eq!(v[j + 6].vector(), -v[j].vector());
            assert!((v[j].vector().norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn upper_ring_polar_angle() {
        let v = build_geometry();
        let theta = v[1].vector().z.acos();
        assert!((theta - 1.107_148_717_794_090_4).abs() < 1e-12);
        for (j, vj) in v.iter().enumerate().take(6).skip(1) {
            let az = vj.position[1].atan2(vj.position[0]).rem_euclid(2.0 * PI);
            assert!((az - phi1(j)).abs() < 1e-12);
        }
    }

    #[test]
    fn y_axis_bisects_a2_b5() {
        let v = build_geometry();
        let mid = (v[2].vector() + v[11].vector()).normalize();
        assert!((mid - Vector3::y()).norm() < 1e-12);
    }

    #[test]
    fn vertices_are_well_separated() {
        let v = build_geometry();
        for i in 0..12 {
            for j in (i + 1)..12 {
                assert!((v[i].vector() - v[j].vector()).norm() > 1.05);
            }
        }
    }

    #[test]
    fn axes_hit_faces_and_edges() {
        let v: Vec<_> = build_geometry().iter().map(Vertex::vector).collect();
        // R1 through the face A0 A1 A2, S1 through the edge A0 A1, S6 through A1 A2.
        let face = (v[0] + v[1] + v[2]).normalize();
        assert!((three_fold_axis(1) - face).norm() < 1e-12);
        let edge = (v[0] + v[1]).normalize();
        assert!((two_fold_axis(1) - edge).norm() < 1e-12);
        let edge = (v[1] + v[2]).normalize();
        assert!((two_fold_axis(6) - edge).norm() < 1e-12);
        let edge = (v[2] + v[11]).normalize();
        assert!((two_fold_axis(12) - edge).norm() < 1e-12);
    }
}
