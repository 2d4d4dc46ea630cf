//! Biaffine incidence graphs `B_q` and the 32-vertex quintic graph built on
//! `B_4`.
//!
//! Vertex layout: point `(x, y)` has index `x·q + y` and line `[m, b]` has
//! index `q² + m·q + b`, using field element indices. Point `(x, y)` lies on
//! line `[m, b]` when `y = m·x + b`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{bail, Result};
use crate::field::{Field, FieldElement};
use crate::graph::Graph;
use crate::symmetry::Perm;

/// A vertex of `B_q` in coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Incidence {
    Point(FieldElement, FieldElement),
    Line(FieldElement, FieldElement),
}

/// Index arithmetic for the vertex layout of `B_q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BiaffineLabeling {
    q: u32,
}

impl BiaffineLabeling {
    pub fn new(q: u32) -> BiaffineLabeling {
        BiaffineLabeling { q }
    }

    pub fn point(&self, x: FieldElement, y: FieldElement) -> u32 {
        x.index() * self.q + y.index()
    }

    pub fn line(&self, m: FieldElement, b: FieldElement) -> u32 {
        self.q * self.q + m.index() * self.q + b.index()
    }

    pub fn vertex(&self, v: Incidence) -> u32 {
        match v {
            Incidence::Point(x, y) => self.point(x, y),
            Incidence::Line(m, b) => self.line(m, b),
        }
    }

    pub fn decode(&self, field: &Field, v: u32) -> Option<Incidence> {
        let qq = self.q * self.q;
        let el = |i| field.element(i).unwrap();
        if v < qq {
            Some(Incidence::Point(el(v / self.q), el(v % self.q)))
        } else if v < 2 * qq {
            let w = v - qq;
            Some(Incidence::Line(el(w / self.q), el(w % self.q)))
        } else {
            None
        }
    }

    /// `(x,y)` / `[m,b]` labels with element indices.
    pub fn labels(&self, field: &Field) -> Vec<String> {
        (0..2 * self.q * self.q)
            .map(|v| match self.decode(field, v).unwrap() {
                Incidence::Point(x, y) => format!("({x},{y})"),
                Incidence::Line(m, b) => format!("[{m},{b}]"),
            })
            .collect()
    }
}

/// Largest `q` for which `B_q` is built; it has `q³` edges.
pub const MAX_BIAFFINE_Q: u32 = 128;

/// Incidence graph of the biaffine plane of order `q` on `2q²` vertices.
pub fn biaffine(q: u32) -> Result<Graph> {
    let field = Field::new(q)?;
    biaffine_over(&field)
}

pub fn biaffine_over(field: &Field) -> Result<Graph> {
    let q = field.order();
    if q > MAX_BIAFFINE_Q {
        bail!(Resource, "refusing to build B_{q} with {} edges", u64::from(q).pow(3));
    }
    let lab = BiaffineLabeling::new(q);
    let mut edges = Vec::with_capacity((q * q * q) as usize);
    for x in field.elements() {
        for y in field.elements() {
            for m in field.elements() {
                let b = field.sub(y, field.mul(m, x));
                edges.push((lab.point(x, y), lab.line(m, b)));
            }
        }
    }
    Graph::from_edges((2 * q * q) as usize, edges)?.with_labels(lab.labels(field))
}

/// Translation `(x, y) ↦ (x + a, y + b)` with the induced line map
/// `[m, c] ↦ [m, c + b − m·a]`.
pub fn biaffine_translation(field: &Field, a: FieldElement, b: FieldElement) -> Perm {
    let q = field.order();
    let lab = BiaffineLabeling::new(q);
    let mut perm = alloc::vec![0u32; (2 * q * q) as usize];
    for x in field.elements() {
        for y in field.elements() {
            perm[lab.point(x, y) as usize] = lab.point(field.add(x, a), field.add(y, b));
        }
    }
    for m in field.elements() {
        for c in field.elements() {
            let c2 = field.sub(field.add(c, b), field.mul(m, a));
            perm[lab.line(m, c) as usize] = lab.line(m, c2);
        }
    }
    perm
}

fn gf4() -> Field {
    Field::new(4).expect("GF(4) exists")
}

/// The duality `(i, j) ↦ [i, αj]`, `[i, j] ↦ (αi, αj)` on the vertices of
/// `B_4`, with `α` the class of `x` in `GF(4)`.
///
/// This preserves incidence in `B_4`. It does not preserve the matching
/// added by [`special32`]: it sends `[j,0][j,α]` to `(αj,0)(αj,α²)`.
pub fn phi_alpha() -> Perm {
    let f = gf4();
    let alpha = f.generator_x();
    let lab = BiaffineLabeling::new(4);
    let mut perm = alloc::vec![0u32; 32];
    for i in f.elements() {
        for j in f.elements() {
            perm[lab.point(i, j) as usize] = lab.line(i, f.mul(alpha, j));
            perm[lab.line(i, j) as usize] = lab.point(f.mul(alpha, i), f.mul(alpha, j));
        }
    }
    perm
}

/// The 16 edges added to `B_4`: `(i,0)(i,1)`, `(i,α)(i,α²)`, `[j,0][j,α]`
/// and `[j,1][j,α²]` for all `i, j`.
pub fn special32_matching() -> Vec<(u32, u32)> {
    let f = gf4();
    let alpha = f.generator_x();
    let alpha2 = f.mul(alpha, alpha);
    let (zero, one) = (FieldElement::ZERO, FieldElement::ONE);
    let lab = BiaffineLabeling::new(4);
    let mut edges = Vec::with_capacity(16);
    for i in f.elements() {
        edges.push((lab.point(i, zero), lab.point(i, one)));
        edges.push((lab.point(i, alpha), lab.point(i, alpha2)));
    }
    for j in f.elements() {
        edges.push((lab.line(j, zero), lab.line(j, alpha)));
        edges.push((lab.line(j, one), lab.line(j, alpha2)));
    }
    edges
}

/// `B_4` together with [`special32_matching`]: a 5-regular graph of order 32
/// and girth 5 in which every edge lies on 12 pentagons.
pub fn special32() -> Graph {
    let f = gf4();
    let b4 = biaffine_over(&f).expect("B_4 is simple");
    let edges = b4.edges().chain(special32_matching());
    Graph::from_edges(32, edges)
        .and_then(|g| g.with_labels(BiaffineLabeling::new(4).labels(&f)))
        .expect("the matching is disjoint from B_4")
}
