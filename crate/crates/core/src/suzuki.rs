//! Suzuki coset graphs from the Suzuki–Tits ovoid.
//!
//! Coordinates are written `(z : y : x : w)`. The ovoid over `GF(q)`,
//! `q = 2^(2e+1)`, is
//!
//! ```text
//! { (a·b + a^(σ+2) + b^σ : b : a : 1) : a, b ∈ GF(q) } ∪ { (1 : 0 : 0 : 0) }
//! ```
//!
//! with `σ(x) = x^(2^(e+1))`. `Sz(q)` is generated by the unipotent maps
//! `S(α, β)`, which act on the affine part as `(a, b) ↦ (a + α, b + β + α^σ a)`,
//! a diagonal torus element and the anti-diagonal involution. For `q = 8` the
//! group is enumerated as a permutation group of order 29120 on the 65 ovoid
//! points.
//!
//! Secant plane sections of the ovoid are the circles. The stabiliser of a
//! circle fixes exactly one ovoid point, its nucleus. The graph has the
//! circles as vertices; `C` and `C'` are adjacent when each contains the
//! other's nucleus. [`coset_oracle`] rebuilds the same graph literally from
//! cosets of the circle stabiliser `G₁` and of the stabiliser `G₂` of a pair
//! of points.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{bail, Error, Result};
use crate::field::{Field, FieldElement};
use crate::graph::Graph;
use crate::symmetry::{vertex_orbits, Perm, UnionFind};

/// 4×4 matrix over the field, acting on column vectors `(z, y, x, w)`.
pub type Matrix = [[FieldElement; 4]; 4];

/// Largest `q` for which the group is enumerated.
pub const MAX_ENUMERATED_Q: u32 = 8;

fn suzuki_field(q: u32) -> Result<Field> {
    let field = Field::new(q)?;
    field.suzuki_exponent()?;
    Ok(field)
}

/// `|Sz(q)| = q²(q²+1)(q−1)`.
pub fn suzuki_order(q: u64) -> u64 {
    q * q * (q * q + 1) * (q - 1)
}

fn sigma(f: &Field, x: FieldElement) -> FieldElement {
    f.suzuki_sigma(x).expect("field checked on construction")
}

/// `S(α, β)` in `(z, y, x, w)` coordinates.
pub fn unipotent(f: &Field, alpha: FieldElement, beta: FieldElement) -> Matrix {
    let (zero, one) = (FieldElement::ZERO, FieldElement::ONE);
    let sa = sigma(f, alpha);
    let a_s1 = f.mul(sa, alpha);
    let a_s2 = f.mul(a_s1, alpha);
    let corner = f.add(f.add(f.mul(alpha, beta), a_s2), sigma(f, beta));
    [
        [one, alpha, f.add(beta, a_s1), corner],
        [zero, one, sa, beta],
        [zero, zero, one, alpha],
        [zero, zero, zero, one],
    ]
}

/// `diag(κ^(σ+2), κ^(σ+1), κ, 1)`.
pub fn torus(f: &Field, kappa: FieldElement) -> Matrix {
    let zero = FieldElement::ZERO;
    let k1 = f.mul(sigma(f, kappa), kappa);
    let k2 = f.mul(k1, kappa);
    let d = [k2, k1, kappa, FieldElement::ONE];
    let mut m = [[zero; 4]; 4];
    for i in 0..4 {
        m[i][i] = d[i];
    }
    m
}

pub fn involution() -> Matrix {
    let mut m = [[FieldElement::ZERO; 4]; 4];
    for i in 0..4 {
        m[i][3 - i] = FieldElement::ONE;
    }
    m
}

/// `S(1, 0)`, `S(0, 1)`, the torus element for the primitive element of
/// smallest index, and the anti-diagonal involution.
pub fn suzuki_generators(q: u32) -> Result<Vec<Matrix>> {
    let f = suzuki_field(q)?;
    Ok(generators_over(&f))
}

fn generators_over(f: &Field) -> Vec<Matrix> {
    let (zero, one) = (FieldElement::ZERO, FieldElement::ONE);
    vec![
        unipotent(f, one, zero),
        unipotent(f, zero, one),
        torus(f, f.primitive_element()),
        involution(),
    ]
}

type Point = [FieldElement; 4];

/// The `q² + 1` ovoid points with their indices.
#[derive(Debug, Clone)]
pub struct Ovoid {
    field: Field,
    points: Vec<Point>,
    index: BTreeMap<Point, u32>,
}

/// Point `0` is `(1:0:0:0)`; the affine point for `(a, b)` has index
/// `1 + a·q + b`.
pub fn ovoid(q: u32) -> Result<Ovoid> {
    Ovoid::new(suzuki_field(q)?)
}

impl Ovoid {
    fn new(field: Field) -> Result<Ovoid> {
        let f = &field;
        let mut points = vec![[FieldElement::ONE, FieldElement::ZERO, FieldElement::ZERO, FieldElement::ZERO]];
        for a in f.elements() {
            for b in f.elements() {
                let a_s2 = f.mul(f.mul(sigma(f, a), a), a);
                let z = f.add(f.add(f.mul(a, b), a_s2), sigma(f, b));
                points.push([z, b, a, FieldElement::ONE]);
            }
        }
        let mut index = BTreeMap::new();
        for (i, p) in points.iter().enumerate() {
            if index.insert(*p, i as u32).is_some() {
                bail!(Invariant, "ovoid point {i} repeated");
            }
        }
        Ok(Ovoid { field, points, index })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Scales so that the last nonzero coordinate is 1.
    pub fn normalize(&self, v: Point) -> Option<Point> {
        let f = &self.field;
        let last = v.iter().rposition(|c| !c.is_zero())?;
        let s = f.inv(v[last]).ok()?;
        Some(v.map(|c| f.mul(s, c)))
    }

    pub fn index_of(&self, v: Point) -> Option<u32> {
        self.index.get(&self.normalize(v)?).copied()
    }

    pub fn apply(&self, m: &Matrix, v: &Point) -> Point {
        let f = &self.field;
        let mut out = [FieldElement::ZERO; 4];
        for (r, row) in m.iter().enumerate() {
            out[r] = row
                .iter()
                .zip(v)
                .fold(FieldElement::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
        }
        out
    }

    /// The permutation of ovoid indices induced by `m`. Fails if `m` does not
    /// map the ovoid onto itself.
    pub fn permutation(&self, m: &Matrix) -> Result<Perm> {
        let mut perm = Vec::with_capacity(self.len());
        for (i, p) in self.points.iter().enumerate() {
            match self.index_of(self.apply(m, p)) {
                Some(j) => perm.push(j),
                None => bail!(Invariant, "matrix maps ovoid point {i} off the ovoid"),
            }
        }
        crate::symmetry::check_bijection(self.len(), &perm)
            .map_err(|_| Error::Invariant("matrix is singular on the ovoid".into()))?;
        Ok(perm)
    }

    /// Whether any three points lie on a common projective line.
    pub fn has_collinear_triple(&self) -> bool {
        let f = &self.field;
        let n = self.len();
        // three points are collinear iff every 3×3 minor of their 3×4 matrix vanishes
        let minors_vanish = |a: &Point, b: &Point, c: &Point| {
            let cols = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
            cols.iter().all(|&[i, j, k]| {
                let det = |x: [FieldElement; 3], y: [FieldElement; 3], z: [FieldElement; 3]| {
                    let t1 = f.mul(x[0], f.sub(f.mul(y[1], z[2]), f.mul(y[2], z[1])));
                    let t2 = f.mul(x[1], f.sub(f.mul(y[0], z[2]), f.mul(y[2], z[0])));
                    let t3 = f.mul(x[2], f.sub(f.mul(y[0], z[1]), f.mul(y[1], z[0])));
                    f.add(f.sub(t1, t2), t3)
                };
                det([a[i], a[j], a[k]], [b[i], b[j], b[k]], [c[i], c[j], c[k]]).is_zero()
            })
        };
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if minors_vanish(&self.points[i], &self.points[j], &self.points[k]) {
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// `a` then `b`: `(a·b)[i] = b[a[i]]`.
pub fn compose(a: &[u32], b: &[u32]) -> Perm {
    a.iter().map(|&x| b[x as usize]).collect()
}

/// A finite permutation group stored as its sorted element list.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Perm>,
}

impl PermGroup {
    /// Breadth-first closure of `gens` under composition.
    pub fn closure(degree: usize, gens: &[Perm], max_order: usize) -> Result<PermGroup> {
        let identity: Perm = (0..degree as u32).collect();
        let mut seen: BTreeSet<Perm> = BTreeSet::new();
        seen.insert(identity.clone());
        let mut frontier = vec![identity];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for g in &frontier {
                for s in gens {
                    let h = compose(g, s);
                    if !seen.contains(&h) {
                        if seen.len() >= max_order {
                            bail!(Resource, "group closure exceeds {max_order} elements");
                        }
                        seen.insert(h.clone());
                        next.push(h);
                    }
                }
            }
            frontier = next;
        }
        Ok(PermGroup {
            degree,
            elements: seen.into_iter().collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Elements in lexicographic order.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn index_of(&self, p: &[u32]) -> Option<usize> {
        self.elements.binary_search_by(|e| e.as_slice().cmp(p)).ok()
    }

    pub fn contains(&self, p: &[u32]) -> bool {
        self.index_of(p).is_some()
    }

    /// Orbit of an ordered tuple of points.
    pub fn tuple_orbit_len(&self, tuple: &[u32]) -> usize {
        let images: BTreeSet<Vec<u32>> = self
            .elements
            .iter()
            .map(|g| tuple.iter().map(|&x| g[x as usize]).collect())
            .collect();
        images.len()
    }
}

/// `Sz(q)` as a permutation group on the ovoid. Only `q = 8` is enumerated.
pub fn enumerate_group(q: u32) -> Result<PermGroup> {
    let field = suzuki_field(q)?;
    if q > MAX_ENUMERATED_Q {
        bail!(
            Resource,
            "refusing to enumerate Sz({q}) with {} elements; the limit is q = {MAX_ENUMERATED_Q}",
            suzuki_order(u64::from(q))
        );
    }
    let ovoid = Ovoid::new(field)?;
    enumerate_on(&ovoid)
}

fn enumerate_on(ovoid: &Ovoid) -> Result<PermGroup> {
    let q = u64::from(ovoid.field.order());
    let gens = generators_over(&ovoid.field)
        .iter()
        .map(|m| ovoid.permutation(m))
        .collect::<Result<Vec<_>>>()?;
    let expected = suzuki_order(q) as usize;
    let group = PermGroup::closure(ovoid.len(), &gens, expected)?;
    if group.order() != expected {
        bail!(Invariant, "generated group has order {}, expected {expected}", group.order());
    }
    Ok(group)
}

/// A secant plane section of the ovoid and its nucleus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circle {
    /// Sorted ovoid indices, `q + 1` of them.
    pub points: Vec<u32>,
    pub nucleus: u32,
}

/// The enumerated group, its circles and the stabiliser data behind them.
#[derive(Debug, Clone)]
pub struct SuzukiGeometry {
    pub ovoid: Ovoid,
    pub group: PermGroup,
    /// Circles in lexicographic order of their point lists.
    pub circles: Vec<Circle>,
    pub tangent_planes: usize,
    pub secant_planes: usize,
    /// Index of the base circle `C₀` (the first circle).
    pub base_circle: usize,
    /// Group indices of the setwise stabiliser of `C₀`.
    pub base_stabilizer: Vec<usize>,
    /// Orbits of that stabiliser on the ovoid, smallest element first.
    pub base_orbits: Vec<Vec<u32>>,
    circle_index: BTreeMap<Vec<u32>, usize>,
}

fn image_set(g: &[u32], set: &[u32]) -> Vec<u32> {
    let mut img: Vec<u32> = set.iter().map(|&x| g[x as usize]).collect();
    img.sort_unstable();
    img
}

impl SuzukiGeometry {
    /// Enumerates the group, classifies planes, and labels every circle with
    /// its nucleus by transporting the base circle's nucleus along the group.
    pub fn build(q: u32) -> Result<SuzukiGeometry> {
        let group = enumerate_group(q)?;
        let ovoid = ovoid(q)?;
        let (sections, tangent_planes) = plane_sections(&ovoid)?;
        let secant_planes = sections.len();
        let qq = u64::from(q);
        if tangent_planes as u64 != qq * qq + 1 || secant_planes as u64 != qq * (qq * qq + 1) {
            bail!(Invariant, "{tangent_planes} tangent and {secant_planes} secant planes");
        }
        let circle_index: BTreeMap<Vec<u32>, usize> =
            sections.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();

        let base_circle = 0;
        let c0 = &sections[base_circle];
        let base_stabilizer: Vec<usize> = group
            .elements()
            .iter()
            .enumerate()
            .filter(|(_, g)| image_set(g, c0) == *c0)
            .map(|(i, _)| i)
            .collect();
        let stab_perms: Vec<Perm> = base_stabilizer
            .iter()
            .map(|&i| group.elements()[i].clone())
            .collect();
        let base_orbits = vertex_orbits(ovoid.len(), &stab_perms)?;
        let mut sizes: Vec<usize> = base_orbits.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        let q_us = q as usize;
        if base_stabilizer.len() != q_us * (q_us - 1) || sizes != [1, q_us, q_us * q_us - q_us] {
            bail!(
                Invariant,
                "circle stabiliser of order {} with orbit sizes {sizes:?}",
                base_stabilizer.len()
            );
        }
        let n0 = base_orbits.iter().find(|o| o.len() == 1).unwrap()[0];
        if c0.binary_search(&n0).is_err() {
            bail!(Invariant, "fixed point {n0} of the circle stabiliser is not on the circle");
        }

        let mut nucleus = vec![u32::MAX; sections.len()];
        for g in group.elements() {
            let ci = circle_index[&image_set(g, c0)];
            let n = g[n0 as usize];
            if nucleus[ci] == u32::MAX {
                nucleus[ci] = n;
            } else if nucleus[ci] != n {
                bail!(Invariant, "circle {ci} receives nuclei {} and {n}", nucleus[ci]);
            }
        }
        if let Some(ci) = nucleus.iter().position(|&n| n == u32::MAX) {
            bail!(Invariant, "circle {ci} is not in the orbit of the base circle");
        }
        let circles = sections
            .into_iter()
            .zip(nucleus)
            .map(|(points, nucleus)| Circle { points, nucleus })
            .collect();
        Ok(SuzukiGeometry {
            ovoid,
            group,
            circles,
            tangent_planes,
            secant_planes,
            base_circle,
            base_stabilizer,
            base_orbits,
            circle_index,
        })
    }

    pub fn q(&self) -> u32 {
        self.ovoid.field.order()
    }

    pub fn circle_of(&self, points: &[u32]) -> Option<usize> {
        self.circle_index.get(points).copied()
    }

    pub fn base_nucleus(&self) -> u32 {
        self.circles[self.base_circle].nucleus
    }

    /// Recomputes a circle's nucleus as the unique fixed point of its
    /// setwise stabiliser, filtering the whole group.
    pub fn nucleus_by_stabilizer(&self, circle: usize) -> Result<u32> {
        let pts = &self.circles[circle].points;
        let stab: Vec<Perm> = self
            .group
            .elements()
            .iter()
            .filter(|g| image_set(g, pts) == *pts)
            .cloned()
            .collect();
        let fixed: Vec<u32> = vertex_orbits(self.ovoid.len(), &stab)?
            .into_iter()
            .filter(|o| o.len() == 1)
            .map(|o| o[0])
            .collect();
        match fixed.as_slice() {
            [n] => Ok(*n),
            _ => bail!(Invariant, "stabiliser of circle {circle} fixes {} points", fixed.len()),
        }
    }

    /// `(x, y) ↦` the unique circle with nucleus `x` through `y`.
    pub fn nucleus_pair_table(&self) -> Result<Vec<u32>> {
        let n = self.ovoid.len();
        let mut table = vec![u32::MAX; n * n];
        for (ci, c) in self.circles.iter().enumerate() {
            for &y in &c.points {
                if y == c.nucleus {
                    continue;
                }
                let slot = &mut table[c.nucleus as usize * n + y as usize];
                if *slot != u32::MAX {
                    bail!(Invariant, "two circles with nucleus {} pass through {y}", c.nucleus);
                }
                *slot = ci as u32;
            }
        }
        for x in 0..n {
            for y in 0..n {
                if x != y && table[x * n + y] == u32::MAX {
                    bail!(Invariant, "no circle with nucleus {x} passes through {y}");
                }
            }
        }
        Ok(table)
    }

    /// Circles as vertices, joined when each contains the other's nucleus.
    pub fn graph(&self) -> Result<Graph> {
        let n = self.ovoid.len();
        let table = self.nucleus_pair_table()?;
        let mut edges = Vec::new();
        for (ci, c) in self.circles.iter().enumerate() {
            for &p in &c.points {
                if p == c.nucleus {
                    continue;
                }
                let cj = table[p as usize * n + c.nucleus as usize] as usize;
                if ci < cj {
                    edges.push((ci as u32, cj as u32));
                } else if ci == cj {
                    bail!(Invariant, "circle {ci} would be joined to itself");
                }
            }
        }
        Graph::from_edges(self.circles.len(), edges)
            .map_err(|e| Error::Invariant(alloc::format!("suzuki graph is not simple: {e}")))
    }

    /// Permutation of the circles induced by a group element.
    pub fn circle_action(&self, g: &[u32]) -> Perm {
        self.circles
            .iter()
            .map(|c| self.circle_index[&image_set(g, &c.points)] as u32)
            .collect()
    }

    /// The literal coset construction.
    pub fn coset_oracle(&self) -> Result<CosetGraph> {
        coset_oracle(self)
    }
}

/// Classifies all planes of `PG(3, q)` by their intersection with the
/// ovoid. Returns the secant sections (sorted) and the tangent plane count.
fn plane_sections(ovoid: &Ovoid) -> Result<(Vec<Vec<u32>>, usize)> {
    let f = &ovoid.field;
    let q = f.order();
    let mut sections = Vec::new();
    let mut tangent = 0;
    for code in 0..q.pow(4) {
        let c = [code % q, (code / q) % q, (code / (q * q)) % q, code / (q * q * q)]
            .map(|i| f.element(i).unwrap());
        // one representative per plane: last nonzero coordinate equal to 1
        match c.iter().rposition(|x| !x.is_zero()) {
            Some(last) if c[last] == FieldElement::ONE => {}
            _ => continue,
        }
        let section: Vec<u32> = ovoid
            .points
            .iter()
            .enumerate()
            .filter(|(_, p)| {
                p.iter()
                    .zip(&c)
                    .fold(FieldElement::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
                    .is_zero()
            })
            .map(|(i, _)| i as u32)
            .collect();
        match section.len() {
            1 => tangent += 1,
            n if n == q as usize + 1 => sections.push(section),
            n => bail!(Invariant, "plane meets the ovoid in {n} points"),
        }
    }
    sections.sort();
    Ok((sections, tangent))
}

/// Result of the coset construction.
#[derive(Debug, Clone)]
pub struct CosetGraph {
    pub graph: Graph,
    pub g1_order: usize,
    pub g2_order: usize,
    pub intersection_order: usize,
    pub g1_cosets: usize,
    pub g2_cosets: usize,
    /// The ovoid point `p` paired with the base nucleus in `G₂`.
    pub partner_point: u32,
    /// For each vertex `G₁g`, the circle `C₀^g`.
    pub vertex_circle: Vec<usize>,
}

/// Vertices are right cosets of `G₁ = Stab(C₀)`, edges are right cosets of
/// `G₂ = Stab({n₀, p})` with `p` the smallest point of the size-`q` orbit of
/// `G₁`; a vertex lies on an edge when the cosets intersect.
pub fn coset_oracle(geo: &SuzukiGeometry) -> Result<CosetGraph> {
    let q = geo.q() as usize;
    let elems = geo.group.elements();
    let n0 = geo.base_nucleus();
    let p = geo
        .base_orbits
        .iter()
        .find(|o| o.len() == q)
        .map(|o| o[0])
        .ok_or_else(|| Error::Invariant("no stabiliser orbit of size q".into()))?;
    let g1: Vec<usize> = geo.base_stabilizer.clone();
    let g2: Vec<usize> = elems
        .iter()
        .enumerate()
        .filter(|(_, g)| {
            let (a, b) = (g[n0 as usize], g[p as usize]);
            (a == n0 && b == p) || (a == p && b == n0)
        })
        .map(|(i, _)| i)
        .collect();
    let intersection = g2.iter().filter(|i| g1.binary_search(i).is_ok()).count();
    if g2.len() != 2 * (q - 1) || intersection != q - 1 {
        bail!(
            Invariant,
            "|G2| = {} and |G1 ∩ G2| = {intersection}, expected {} and {}",
            g2.len(),
            2 * (q - 1),
            q - 1
        );
    }

    let right_cosets = |sub: &[usize]| -> (Vec<u32>, usize) {
        let mut id = vec![u32::MAX; elems.len()];
        let mut count = 0u32;
        // elements are sorted, so each coset is first met at its minimum
        for gi in 0..elems.len() {
            if id[gi] != u32::MAX {
                continue;
            }
            for &h in sub {
                let x = geo.group.index_of(&compose(&elems[h], &elems[gi])).unwrap();
                id[x] = count;
            }
            count += 1;
        }
        (id, count as usize)
    };
    let (vertex_of, g1_cosets) = right_cosets(&g1);
    let (edge_of, g2_cosets) = right_cosets(&g2);

    let mut members: Vec<Vec<u32>> = vec![Vec::new(); g2_cosets];
    for (gi, &e) in edge_of.iter().enumerate() {
        let v = vertex_of[gi];
        let m = &mut members[e as usize];
        if !m.contains(&v) {
            m.push(v);
        }
    }
    let mut edges = Vec::with_capacity(g2_cosets);
    for (e, m) in members.iter().enumerate() {
        match m.as_slice() {
            [a, b] => edges.push((*a, *b)),
            _ => bail!(Invariant, "edge coset {e} meets {} vertex cosets", m.len()),
        }
    }
    let graph = Graph::from_edges(g1_cosets, edges)
        .map_err(|e| Error::Invariant(alloc::format!("coset graph is not simple: {e}")))?;

    let c0 = &geo.circles[geo.base_circle].points;
    let mut vertex_circle = vec![usize::MAX; g1_cosets];
    for (gi, g) in elems.iter().enumerate() {
        let v = vertex_of[gi] as usize;
        if vertex_circle[v] == usize::MAX {
            vertex_circle[v] = geo.circle_of(&image_set(g, c0)).unwrap();
        }
    }
    Ok(CosetGraph {
        graph,
        g1_order: g1.len(),
        g2_order: g2.len(),
        intersection_order: intersection,
        g1_cosets,
        g2_cosets,
        partner_point: p,
        vertex_circle,
    })
}

/// All circles of the ovoid with their nuclei.
pub fn circles_with_nuclei(q: u32) -> Result<Vec<Circle>> {
    Ok(SuzukiGeometry::build(q)?.circles)
}

pub fn suzuki_graph(q: u32) -> Result<Graph> {
    SuzukiGeometry::build(q)?.graph()
}

pub fn suzuki_graph_coset_oracle(q: u32) -> Result<Graph> {
    Ok(SuzukiGeometry::build(q)?.coset_oracle()?.graph)
}

/// Orbit partition of the circle action of a set of group elements.
pub fn circle_orbits(geo: &SuzukiGeometry, gens: &[Perm]) -> Result<Vec<Vec<u32>>> {
    let induced: Vec<Perm> = gens.iter().map(|g| geo.circle_action(g)).collect();
    let mut uf = UnionFind::new(geo.circles.len());
    for g in &induced {
        for (v, &w) in g.iter().enumerate() {
            uf.union(v as u32, w);
        }
    }
    Ok(uf.classes())
}
