//! The icosahedral rotation group **I** (60 elements) and **I**h = **I** × {E, P}.
//!
//! Elements are realized as permutations of the 12 vertex slots; every equality
//! test is an exact comparison of those permutations. Rotations take ids `0..60`
//! and `P·R` takes id `60 + id(R)`.

use serde::Serialize;
use std::collections::HashMap;
use std::f64::consts::PI;

use crate::error::{IcosaError, Result};
use crate::geometry::{
    build_geometry, five_fold_axis, three_fold_axis, two_fold_axis, Rotation, Vertex,
    VERTEX_COUNT,
};

pub const ROTATION_COUNT: usize = 60;
pub const ELEMENT_COUNT: usize = 120;

/// Chord distance under which a rotated vertex is identified with a table vertex.
pub const SNAP_TOLERANCE: f64 = 1e-6;

pub type Perm = [u8; VERTEX_COUNT];

/// Exponents of `R = T0^a · R6^b · S1^c · S12^d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Decomposition {
    pub a: u8,
    pub b: u8,
    pub c: u8,
    pub d: u8,
}

impl Decomposition {
    pub fn all() -> impl Iterator<Item = Decomposition> {
        (0..5u8).flat_map(|a| {
            (0..3u8).flat_map(move |b| {
                (0..2u8).flat_map(move |c| (0..2u8).map(move |d| Decomposition { a, b, c, d }))
            })
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupElement {
    pub id: usize,
    pub label: String,
    /// +1 for rotations, −1 for `P·R`.
    pub parity: i8,
    pub perm: Perm,
    /// Rotational part; for `P·R` this is the rotation `R`.
    pub rotation: Rotation,
    pub decomposition: Decomposition,
}

impl GroupElement {
    pub fn is_rotation(&self) -> bool {
        self.parity > 0
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjugacyClass {
    pub label: String,
    pub members: Vec<usize>,
}

/// Product table, inverses and class partition over all 120 ids.
#[derive(Debug, Clone)]
pub struct GroupTable {
    product: Vec<usize>,
    inverse: Vec<usize>,
    classes: Vec<ConjugacyClass>,
}

fn compose(x: &Perm, y: &Perm) -> Perm {
    let mut out = [0u8; VERTEX_COUNT];
    for (slot, target) in out.iter_mut().enumerate() {
        *target = x[y[slot] as usize];
    }
    out
}

/// Vertex permutation induced by a rotation, snapping each image to the nearest vertex.
fn snap_permutation(label: &str, rotation: &Rotation, vertices: &[Vertex]) -> Result<Perm> {
    let m = rotation.matrix();
    let mut perm = [0u8; VERTEX_COUNT];
    for (slot, v) in vertices.iter().enumerate() {
        let image = m * v.vector();
        let (best, dist) = vertices
            .iter()
            .enumerate()
            .map(|(k, w)| (k, (image - w.vector()).norm()))
            .min_by(|l, r| l.1.total_cmp(&r.1))
            .expect("vertex list is non-empty");
        if dist > SNAP_TOLERANCE {
            return Err(IcosaError::SnapFailure {
                element: label.to_string(),
                vertex: v.label.clone(),
                distance: dist,
            });
        }
        perm[slot] = best as u8;
    }
    Ok(perm)
}

fn power_label(base: &str, k: u32) -> String {
    if k == 1 {
        base.to_string()
    } else {
        format!("{base}^{k}")
    }
}

/// The 60 rotations of **I** in table order: `E`, `T_j^k` (j = 0..5, k = 1..4),
/// `R_j^k` (j = 1..10, k = 1..2), `S_j` (j = 1..15). Decompositions are filled in
/// by [`IcosahedralGroup::new`].
pub fn realize_elements(vertices: &[Vertex]) -> Result<Vec<GroupElement>> {
    let mut specs: Vec<(String, Rotation)> = vec![("E".to_string(), Rotation::identity())];
    for j in 0..=5 {
        for k in 1..=4u32 {
            let rot = Rotation::new(five_fold_axis(j), 2.0 * PI * f64::from(k) / 5.0);
            specs.push((power_label(&format!("T{j}"), k), rot));
        }
    }
    for j in 1..=10 {
        for k in 1..=2u32 {
            let rot = Rotation::new(three_fold_axis(j), 2.0 * PI * f64::from(k) / 3.0);
            specs.push((power_label(&format!("R{j}"), k), rot));
        }
    }
    for j in 1..=15 {
        specs.push((format!("S{j}"), Rotation::new(two_fold_axis(j), PI)));
    }

    specs
        .into_iter()
        .enumerate()
        .map(|(id, (label, rotation))| {
            let perm = snap_permutation(&label, &rotation, vertices)?;
            Ok(GroupElement {
                id,
                label,
                parity: 1,
                perm,
                rotation,
                decomposition: Decomposition {
                    a: 0,
                    b: 0,
                    c: 0,
                    d: 0,
                },
            })
        })
        .collect()
}

/// Antipodal permutation `A_j ↔ B_j`.
pub fn inversion_perm() -> Perm {
    let mut perm = [0u8; VERTEX_COUNT];
    for (slot, target) in perm.iter_mut().enumerate() {
        *target = ((slot + 6) % VERTEX_COUNT) as u8;
    }
    perm
}

/// Appends `P·R` for every rotation `R`, with `P` the antipodal permutation.
pub fn extend_parity(rotations: &[GroupElement]) -> Vec<GroupElement> {
    let inversion = inversion_perm();
    let mut all = rotations.to_vec();
    all.extend(rotations.iter().map(|r| GroupElement {
        id: r.id + ROTATION_COUNT,
        label: if r.label == "E" {
            "P".to_string()
        } else {
            format!("P{}", r.label)
        },
        parity: -1,
        perm: compose(&inversion, &r.perm),
        rotation: r.rotation,
        decomposition: r.decomposition,
    }));
    all
}

impl GroupTable {
    fn build(elements: &[GroupElement]) -> Result<Self> {
        let n = elements.len();
        let lookup: HashMap<(Perm, i8), usize> = elements
            .iter()
            .map(|e| ((e.perm, e.parity), e.id))
            .collect();
        let mut product = vec![0usize; n * n];
        for x in elements {
            for y in elements {
                let key = (compose(&x.perm, &y.perm), x.parity * y.parity);
                product[x.id * n + y.id] =
                    *lookup
                        .get(&key)
                        .ok_or_else(|| IcosaError::ClosureViolation {
                            left: x.label.clone(),
                            right: y.label.clone(),
                        })?;
            }
        }
        let inverse = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| product[x * n + y] == 0)
                    .ok_or_else(|| IcosaError::ClosureViolation {
                        left: elements[x].label.clone(),
                        right: "inverse".to_string(),
                    })
            })
            .collect::<Result<Vec<_>>>()?;

        let mut table = GroupTable {
            product,
            inverse,
            classes: Vec::new(),
        };
        table.classes = table.classes_within(ROTATION_COUNT.min(n), elements);
        Ok(table)
    }

    fn classes_within(&self, limit: usize, elements: &[GroupElement]) -> Vec<ConjugacyClass> {
        let mut assigned = vec![false; limit];
        let mut classes = Vec::new();
        for x in 0..limit {
            if assigned[x] {
                continue;
            }
            let mut members: Vec<usize> = (0..ROTATION_COUNT)
                .map(|g| self.product(self.product(g, x), self.inverse[g]))
                .collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                assigned[m] = true;
            }
            classes.push(ConjugacyClass {
                label: class_label(&elements[x], members.len()),
                members,
            });
        }
        classes
    }

    pub fn order(&self) -> usize {
        self.inverse.len()
    }

    pub fn product(&self, x: usize, y: usize) -> usize {
        self.product[x * self.order() + y]
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }
}

fn class_label(representative: &GroupElement, size: usize) -> String {
    let symbol = match representative.label.chars().next() {
        Some('T') if representative.label.ends_with("^2") || representative.label.ends_with("^3") => {
            "C5^2"
        }
        Some('T') => "C5",
        Some('R') => "C3",
        Some('S') => "C2",
        _ => "E",
    };
    if size == 1 {
        symbol.to_string()
    } else {
        format!("{size}{symbol}")
    }
}

/// **I**h with its full product table.
#[derive(Debug, Clone)]
pub struct IcosahedralGroup {
    vertices: Vec<Vertex>,
    elements: Vec<GroupElement>,
    table: GroupTable,
    by_label: HashMap<String, usize>,
}

impl IcosahedralGroup {
    pub fn new() -> Result<Self> {
        let vertices = build_geometry();
        let rotations = realize_elements(&vertices)?;
        let mut elements = extend_parity(&rotations);
        let table = GroupTable::build(&elements)?;
        let by_label = elements
            .iter()
            .map(|e| (e.label.clone(), e.id))
            .collect();
        let mut group = IcosahedralGroup {
            vertices,
            elements: Vec::new(),
            table,
            by_label,
        };

        let mut seen = vec![None; ROTATION_COUNT];
        for dec in Decomposition::all() {
            let id = group.from_decomposition(dec);
            if let Some(prev) = seen[id].replace(dec) {
                return Err(IcosaError::ClosureViolation {
                    left: format!("{prev:?}"),
                    right: format!("{dec:?} (both give {})", elements[id].label),
                });
            }
        }
        for (id, dec) in seen.into_iter().enumerate() {
            let dec = dec.ok_or_else(|| IcosaError::ClosureViolation {
                left: elements[id].label.clone(),
                right: "missing from T0^a R6^b S1^c S12^d".to_string(),
            })?;
            elements[id].decomposition = dec;
            elements[id + ROTATION_COUNT].decomposition = dec;
        }
        group.elements = elements;
        Ok(group)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn rotations(&self) -> &[GroupElement] {
        &self.elements[..ROTATION_COUNT]
    }

    pub fn element(&self, id: usize) -> &GroupElement {
        &self.elements[id]
    }

    pub fn label(&self, id: usize) -> &str {
        &self.elements[id].label
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn multiply(&self, x: usize, y: usize) -> usize {
        self.table.product(x, y)
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.table.inverse(x)
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn parity_op(&self) -> usize {
        ROTATION_COUNT
    }

    /// `x^n` for any integer `n`.
    pub fn power(&self, x: usize, n: i32) -> usize {
        let base = if n < 0 { self.inverse(x) } else { x };
        (0..n.unsigned_abs()).fold(0, |acc, _| self.multiply(acc, base))
    }

    /// Product of a word, leftmost factor first: `word(&[x, y]) = x·y`.
    pub fn word(&self, factors: &[usize]) -> usize {
        factors.iter().fold(0, |acc, &f| self.multiply(acc, f))
    }

    /// The canonical labels, plus `X^k` powers (including negative `k`) of any
    /// canonical label and an optional leading `P`.
    pub fn lookup(&self, label: &str) -> Result<usize> {
        let unknown = || IcosaError::UnknownElement(label.to_string());
        let label = label.trim();
        if let Some(&id) = self.by_label.get(label) {
            return Ok(id);
        }
        let (parity, rest) = match label.strip_prefix('P') {
            Some(rest) if !rest.is_empty() => (true, rest),
            _ => (false, label),
        };
        let (base, exp) = match rest.split_once('^') {
            Some((b, e)) => (b, e.trim().parse::<i32>().map_err(|_| unknown())?),
            None => (rest, 1),
        };
        let &base_id = self.by_label.get(base).ok_or_else(unknown)?;
        let id = self.power(base_id, exp);
        Ok(if parity {
            self.multiply(self.parity_op(), id)
        } else {
            id
        })
    }

    /// Id of `T0^a R6^b S1^c S12^d`.
    pub fn from_decomposition(&self, dec: Decomposition) -> usize {
        let [t0, r6, s1, s12] = self.generator_ids();
        self.word(&[
            self.power(t0, i32::from(dec.a)),
            self.power(r6, i32::from(dec.b)),
            self.power(s1, i32::from(dec.c)),
            self.power(s12, i32::from(dec.d)),
        ])
    }

    /// Ids of `T0`, `R6`, `S1`, `S12`.
    pub fn generator_ids(&self) -> [usize; 4] {
        ["T0", "R6", "S1", "S12"].map(|l| self.by_label[l])
    }

    /// Unique `(a, b, c, d)` with `T0^a R6^b S1^c S12^d = x` (for `P·R`, that of `R`).
    pub fn canonical_decomposition(&self, x: usize) -> Decomposition {
        self.elements[x].decomposition
    }

    /// Conjugacy classes of **I**, ordered by their first element.
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        self.table.classes()
    }

    /// The class sum `W = Σ_j (T_j + T_j^4)`, as the 12 element ids.
    pub fn five_fold_class(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = (0..=5)
            .flat_map(|j| [format!("T{j}"), format!("T{j}^4")])
            .map(|l| self.by_label[&l])
            .collect();
        ids.sort_unstable();
        ids
    }

    /// Closure of a generating set under multiplication.
    pub fn generated_subgroup(&self, generators: &[usize]) -> Vec<usize> {
        let mut members = vec![self.identity()];
        let mut seen = vec![false; self.elements.len()];
        seen[0] = true;
        let mut frontier = vec![self.identity()];
        while let Some(x) = frontier.pop() {
            for &g in generators {
                let y = self.multiply(g, x);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                    frontier.push(y);
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// Vertex slot that `x` sends `slot` to.
    pub fn vertex_image(&self, x: usize, slot: usize) -> usize {
        self.elements[x].perm[slot] as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group() -> IcosahedralGroup {
        IcosahedralGroup::new().unwrap()
    }

    fn images(g: &IcosahedralGroup, label: &str) -> Vec<String> {
        let id = g.lookup(label).unwrap();
        (0..6)
            .map(|s| g.vertices()[g.vertex_image(id, s)].label.clone())
            .collect()
    }

    #[test]
    fn displayed_vertex_maps() {
        let g = group();
        assert_eq!(images(&g, "T0"), ["A0", "A2", "A3", "A4", "A5", "A1"]);
        assert_eq!(images(&g, "S11"), ["B0", "B4", "B3", "B2", "B1", "B5"]);
        assert_eq!(images(&g, "S5"), ["A5", "A4", "B2", "B3", "A1", "A0"]);
        assert_eq!(images(&g, "S10"), ["B3", "A5", "B2", "B0", "B4", "A1"]);
    }

    #[test]
    fn small_products() {
        let g = group();
        let l = |s: &str| g.lookup(s).unwrap();
        assert_eq!(g.multiply(l("T0"), l("T0^4")), 0);
        assert_eq!(g.multiply(l("S1"), l("S1")), 0);
        assert_eq!(g.word(&[l("S1"), l("T0^2"), l("S1"), l("T0^4")]), l("R6"));
        assert_eq!(g.word(&[l("R6^2"), l("S1"), l("R6")]), l("S12"));
        assert_eq!(g.multiply(l("T0"), l("S1")), l("R1^2"));
    }

    #[test]
    fn decompositions() {
        let g = group();
        let dec = |s: &str| g.canonical_decomposition(g.lookup(s).unwrap());
        assert_eq!(dec("E"), Decomposition { a: 0, b: 0, c: 0, d: 0 });
        assert_eq!(dec("R6"), Decomposition { a: 0, b: 1, c: 0, d: 0 });
        assert_eq!(dec("S12"), Decomposition { a: 0, b: 0, c: 0, d: 1 });
        for x in 0..ROTATION_COUNT {
            assert_eq!(g.from_decomposition(g.canonical_decomposition(x)), x);
        }
    }

    #[test]
    fn class_sizes() {
        let g = group();
        let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.members.len()).collect();
        assert_eq!(sizes, [1, 12, 12, 20, 15]);
        sizes.sort_unstable();
        let c5 = &g.conjugacy_classes()[1];
        assert_eq!(c5.members, g.five_fold_class());
        assert_eq!(c5.label, "12C5");
    }

    #[test]
    fn parity_is_central_involution() {
        let g = group();
        let p = g.parity_op();
        assert_eq!(g.multiply(p, p), 0);
        for x in 0..ELEMENT_COUNT {
            assert_eq!(g.multiply(p, x), g.multiply(x, p));
        }
        for slot in 0..6 {
            assert_eq!(g.vertex_image(p, slot), slot + 6);
        }
    }

    #[test]
    fn lookup_powers_and_parity() {
        let g = group();
        assert_eq!(g.lookup("R6^-1").unwrap(), g.lookup("R6^2").unwrap());
        assert_eq!(g.lookup("T3^6").unwrap(), g.lookup("T3").unwrap());
        assert_eq!(g.lookup("PS1").unwrap(), g.lookup("S1").unwrap() + 60);
        assert_eq!(g.lookup("P").unwrap(), 60);
        assert!(g.lookup("Q7").is_err());
        assert!(g.lookup("T9").is_err());
    }

    #[test]
    fn snap_failure_is_reported() {
        let verts = build_geometry();
        let bad = Rotation::new(nalgebra::Vector3::z(), 0.3);
        let err = snap_permutation("bogus", &bad, &verts).unwrap_err();
        assert!(matches!(err, IcosaError::SnapFailure { .. }));
    }
}
