//! Builtin equivariant complexes: the small catalog of named examples, the
//! chain-level constructions (cone, join, disjoint union) that combine them,
//! a deterministic fuzzer for the property suites, and the name parser the
//! CLI uses so that builtin names can stand in for input files.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::abelian::{is_prime, IntMatrix};
use crate::complexes::{ChainComplex, EquivariantChainComplex, FiniteGroup, SignedAction};
use crate::error::{Error, Result};
use crate::simplicial::SimplicialGComplex;

/// S¹ with two vertices and two arcs; Z/2 swaps the arcs and fixes both
/// vertices. The smallest action with torsion in degree-0 invariant homology.
pub fn circle_reflection() -> EquivariantChainComplex {
    let mut b = IntMatrix::zeros(2, 2);
    for j in 0..2 {
        b.set(0, j, BigInt::from(1));
        b.set(1, j, BigInt::from(-1));
    }
    let complex = ChainComplex::new(vec![2, 2], vec![b]).expect("valid boundary");
    let maps = vec![
        vec![vec![(0, 1), (1, 1)], vec![(0, 1), (1, 1)]],
        vec![vec![(0, 1), (1, 1)], vec![(1, 1), (0, 1)]],
    ];
    let labels = vec![
        vec!["v1".to_string(), "v-1".to_string()],
        vec!["e+".to_string(), "e-".to_string()],
    ];
    EquivariantChainComplex::new(
        FiniteGroup::cyclic(2),
        complex,
        SignedAction::new(maps),
        Some(labels),
    )
    .expect("builtin is valid")
}

/// m-gon circle on which Z/p rotates by m/p vertices; requires p | m.
fn polygon_chain(m: usize, p: usize) -> EquivariantChainComplex {
    assert!(m >= 2 && m % p == 0, "polygon needs p | m");
    let step = m / p;
    let mut b = IntMatrix::zeros(m, m);
    for i in 0..m {
        b.set((i + 1) % m, i, BigInt::from(1));
        b.set(i, i, b.get(i, i) - BigInt::from(1));
    }
    let complex = ChainComplex::new(vec![m, m], vec![b]).expect("valid boundary");
    let maps: Vec<_> = (0..p)
        .map(|g| {
            let rot: Vec<(usize, i64)> = (0..m).map(|i| ((i + g * step) % m, 1)).collect();
            vec![rot.clone(), rot]
        })
        .collect();
    let labels = vec![
        (0..m).map(|i| format!("v{i}")).collect(),
        (0..m).map(|i| format!("e{i}")).collect(),
    ];
    EquivariantChainComplex::new(
        FiniteGroup::cyclic(p),
        complex,
        SignedAction::new(maps),
        Some(labels),
    )
    .expect("builtin is valid")
}

/// Free rotation of Z/p on the p-gon circle.
pub fn circle_rotation(p: usize) -> Result<EquivariantChainComplex> {
    require_prime("circle_rotation", p)?;
    Ok(polygon_chain(p, p))
}

/// S² with one vertex, one edge (a great circle), and two hemispheres that
/// Z/2 exchanges: the boundary of each hemisphere is the full circle, so
/// ∂(f+ + f-) = 2e while ∂e = 0.
pub fn sphere_reflection() -> EquivariantChainComplex {
    let b1 = IntMatrix::zeros(1, 1);
    let mut b2 = IntMatrix::zeros(1, 2);
    b2.set(0, 0, BigInt::from(1));
    b2.set(0, 1, BigInt::from(1));
    let complex = ChainComplex::new(vec![1, 1, 2], vec![b1, b2]).expect("valid boundary");
    let maps = vec![
        vec![vec![(0, 1)], vec![(0, 1)], vec![(0, 1), (1, 1)]],
        vec![vec![(0, 1)], vec![(0, 1)], vec![(1, 1), (0, 1)]],
    ];
    let labels = vec![
        vec!["v".to_string()],
        vec!["e".to_string()],
        vec!["f+".to_string(), "f-".to_string()],
    ];
    EquivariantChainComplex::new(
        FiniteGroup::cyclic(2),
        complex,
        SignedAction::new(maps),
        Some(labels),
    )
    .expect("builtin is valid")
}

/// ℂP¹ with complex conjugation is the reflection 2-sphere: the fixed set
/// is ℝP¹, the equatorial circle.
pub fn cp1_conjugation() -> EquivariantChainComplex {
    sphere_reflection()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrossAction {
    /// v ↦ -v on every coordinate; free on cells.
    Antipodal,
    /// reflect the first coordinate only; fixes a sub-sphere.
    Reflection,
}

impl CrossAction {
    pub fn parse(s: &str) -> Result<CrossAction> {
        match s {
            "antipodal" => Ok(CrossAction::Antipodal),
            "reflection" | "coordinate-reflection" => Ok(CrossAction::Reflection),
            other => Err(Error::BadParameter(format!(
                "unknown cross-polytope action {other:?}; use antipodal or reflection"
            ))),
        }
    }
}

/// Boundary of the (n+1)-dimensional cross polytope as a simplicial Z/2
/// sphere. Vertex 2k is +e_{k+1} and vertex 2k+1 is -e_{k+1}; a simplex
/// picks one sign per axis, so both actions preserve vertex order and act
/// without orientation signs.
pub fn cross_polytope_simplicial(n: usize, action: CrossAction) -> Result<SimplicialGComplex> {
    if n > 4 {
        return Err(Error::BadParameter(format!(
            "cross_polytope_sphere supports dimensions 0..=4, got {n}"
        )));
    }
    let vertices = 2 * (n + 1);
    let mut tops = Vec::new();
    for mask in 0u32..(1 << (n + 1)) {
        let simplex: Vec<usize> =
            (0..=n).map(|k| 2 * k + ((mask >> k) & 1) as usize).collect();
        tops.push(simplex);
    }
    let identity: Vec<usize> = (0..vertices).collect();
    let perm: Vec<usize> = match action {
        CrossAction::Antipodal => (0..vertices).map(|v| v ^ 1).collect(),
        CrossAction::Reflection => {
            (0..vertices).map(|v| if v < 2 { v ^ 1 } else { v }).collect()
        }
    };
    SimplicialGComplex::new(vertices, tops, FiniteGroup::cyclic(2), vec![identity, perm])
}

/// Chain model of the cross-polytope sphere S^n with the chosen involution.
pub fn cross_polytope_sphere(n: usize, action: CrossAction) -> Result<EquivariantChainComplex> {
    cross_polytope_simplicial(n, action)?.to_chain_complex()
}

/// S³ = S¹ ⋆ S¹ with the diagonal rotation; the quotient is the lens space
/// L(p,1). For p = 2 each circle is a square so the generator is the
/// antipodal rotation.
pub fn lens_sphere(p: usize) -> Result<EquivariantChainComplex> {
    require_prime("lens_sphere", p)?;
    let m = if p == 2 { 4 } else { p };
    let circle = polygon_chain(m, p);
    join(&circle, &circle)
}

/// Torus S¹ × S¹ with Z/p rotating both factors at once (tensor product of
/// two rotation circles with the diagonal action). Free.
pub fn torus_diagonal(p: usize) -> Result<EquivariantChainComplex> {
    require_prime("torus_diagonal", p)?;
    let c = polygon_chain(p, p);
    c.tensor_product(&c)
}

/// One vertex with the trivial Z/p action.
pub fn point(p: usize) -> Result<EquivariantChainComplex> {
    require_prime("point", p)?;
    let complex = ChainComplex::new(vec![1], vec![]).expect("a point is valid");
    let mut x = EquivariantChainComplex::with_trivial_action(FiniteGroup::cyclic(p), complex);
    x = relabel(x, vec![vec!["pt".to_string()]]);
    Ok(x)
}

fn relabel(x: EquivariantChainComplex, labels: Vec<Vec<String>>) -> EquivariantChainComplex {
    EquivariantChainComplex::new(
        x.group().clone(),
        x.complex().clone(),
        x.action().clone(),
        Some(labels),
    )
    .expect("relabeling keeps validity")
}

fn require_prime(name: &str, p: usize) -> Result<()> {
    if is_prime(p as u64) {
        Ok(())
    } else {
        Err(Error::BadParameter(format!("{name} needs a prime order, got {p}")))
    }
}

/// Column index of the edge boundary whose entries do not sum to zero, if
/// any. Cone and join need every edge to start and end somewhere: the
/// augmentation must kill ∂₁.
fn unaugmented_edge(x: &EquivariantChainComplex) -> Option<usize> {
    if x.top_dim() < 1 {
        return None;
    }
    let b1 = x.boundary(1);
    (0..b1.cols()).find(|&j| {
        let s: BigInt = (0..b1.rows()).map(|i| b1.get(i, j).clone()).sum();
        !s.is_zero()
    })
}

/// Algebraic cone: one new fixed apex, one cone cell c(x) in dimension k+1
/// per original cell x of dimension k, with ∂c(x) = x - c(∂x) and
/// ∂c(v) = v - apex. The result is integrally acyclic and carries the
/// original action with c(gx) = g·c(x).
pub fn cone_of(x: &EquivariantChainComplex) -> Result<EquivariantChainComplex> {
    if let Some(j) = unaugmented_edge(x) {
        return Err(Error::InvalidComplex(format!(
            "cone needs edge boundaries that augment to zero; column {j} of the degree-1 boundary does not"
        )));
    }
    let order = x.group().order();
    let d = x.top_dim();
    if d < 0 {
        // cone on the empty complex is the apex alone
        let complex = ChainComplex::new(vec![1], vec![]).expect("a point is valid");
        let mut out =
            EquivariantChainComplex::with_trivial_action(x.group().clone(), complex);
        out = relabel(out, vec![vec!["apex".to_string()]]);
        return Ok(out);
    }
    let d = d as usize;
    let n = |k: usize| x.complex().cells(k as i64);

    let mut counts = Vec::with_capacity(d + 2);
    counts.push(n(0) + 1);
    for k in 1..=d {
        counts.push(n(k) + n(k - 1));
    }
    counts.push(n(d));

    let mut boundaries = Vec::with_capacity(d + 1);
    {
        // dimension 1: original edges (zero row at the apex) then c(v) = v - apex
        let mut b = IntMatrix::zeros(n(0) + 1, counts[1]);
        let orig = x.boundary(1);
        for j in 0..orig.cols() {
            for i in 0..orig.rows() {
                b.set(i, j, orig.get(i, j).clone());
            }
        }
        let n1 = if d >= 1 { n(1) } else { 0 };
        for v in 0..n(0) {
            b.set(v, n1 + v, BigInt::from(1));
            b.set(n(0), n1 + v, BigInt::from(-1));
        }
        boundaries.push(b);
    }
    for k in 2..=d + 1 {
        let cols = counts[k];
        let rows = counts[k - 1];
        let mut b = IntMatrix::zeros(rows, cols);
        let nk = if k <= d { n(k) } else { 0 };
        if k <= d {
            let orig = x.boundary(k as i64);
            for j in 0..orig.cols() {
                for i in 0..orig.rows() {
                    b.set(i, j, orig.get(i, j).clone());
                }
            }
        }
        // c(x) for x of dimension k-1: identity into the original block,
        // minus the cone of ∂x into the cone block
        let lower = x.boundary((k - 1) as i64);
        for c in 0..n(k - 1) {
            b.set(c, nk + c, BigInt::from(1));
            for r in 0..n(k - 2) {
                b.set(n(k - 1) + r, nk + c, -lower.get(r, c).clone());
            }
        }
        boundaries.push(b);
    }

    let complex = ChainComplex::new(counts, boundaries)?;
    let mut maps = Vec::with_capacity(order);
    for g in 0..order {
        let mut per_elt = Vec::with_capacity(d + 2);
        let mut dim0: Vec<(usize, i64)> = (0..n(0)).map(|c| x.apply(g, 0, c)).collect();
        dim0.push((n(0), 1));
        per_elt.push(dim0);
        for k in 1..=d {
            let mut v: Vec<(usize, i64)> = (0..n(k)).map(|c| x.apply(g, k, c)).collect();
            v.extend((0..n(k - 1)).map(|c| {
                let (img, s) = x.apply(g, k - 1, c);
                (n(k) + img, s)
            }));
            per_elt.push(v);
        }
        per_elt.push((0..n(d)).map(|c| x.apply(g, d, c)).collect());
        maps.push(per_elt);
    }

    let mut labels = Vec::with_capacity(d + 2);
    let mut dim0: Vec<String> = x.labels()[0].clone();
    dim0.push("apex".to_string());
    labels.push(dim0);
    for k in 1..=d {
        let mut v = x.labels()[k].clone();
        v.extend(x.labels()[k - 1].iter().map(|l| format!("c({l})")));
        labels.push(v);
    }
    labels.push(x.labels()[d].iter().map(|l| format!("c({l})")).collect());

    EquivariantChainComplex::new(
        x.group().clone(),
        complex,
        SignedAction::new(maps),
        Some(labels),
    )
}

/// Cell layout bookkeeping for the join: in dimension n the cells are the
/// n-cells of X, then the n-cells of Y, then one block per pair (i, j) with
/// i + j = n - 1, ascending in i, each block row-major in (x, y).
struct JoinLayout {
    dx: i64,
    dy: i64,
    nx: Vec<usize>,
    ny: Vec<usize>,
}

impl JoinLayout {
    fn x_count(&self, n: i64) -> usize {
        if (0..=self.dx).contains(&n) {
            self.nx[n as usize]
        } else {
            0
        }
    }
    fn y_count(&self, n: i64) -> usize {
        if (0..=self.dy).contains(&n) {
            self.ny[n as usize]
        } else {
            0
        }
    }
    fn mixed_blocks(&self, n: i64) -> Vec<(i64, i64)> {
        (0..=self.dx)
            .filter_map(|i| {
                let j = n - 1 - i;
                if (0..=self.dy).contains(&j) {
                    Some((i, j))
                } else {
                    None
                }
            })
            .collect()
    }
    fn count(&self, n: i64) -> usize {
        self.x_count(n)
            + self.y_count(n)
            + self
                .mixed_blocks(n)
                .iter()
                .map(|&(i, j)| self.nx[i as usize] * self.ny[j as usize])
                .sum::<usize>()
    }
    fn x_index(&self, n: i64, c: usize) -> usize {
        debug_assert!(c < self.x_count(n));
        c
    }
    fn y_index(&self, n: i64, c: usize) -> usize {
        debug_assert!(c < self.y_count(n));
        self.x_count(n) + c
    }
    fn mixed_index(&self, n: i64, i: i64, a: usize, b: usize) -> usize {
        let mut off = self.x_count(n) + self.y_count(n);
        for (bi, bj) in self.mixed_blocks(n) {
            if bi == i {
                return off + a * self.ny[bj as usize] + b;
            }
            off += self.nx[bi as usize] * self.ny[bj as usize];
        }
        unreachable!("mixed block ({i}, {}) absent in dimension {n}", n - 1 - i)
    }
}

/// Join of two complexes over the same group: the disjoint copies of X and
/// Y plus a cell x⋆y of dimension |x|+|y|+1 for every pair, with
/// ∂(x⋆y) = ∂x⋆y + (-1)^{|x|+1} x⋆∂y, where a vertex's boundary inside a
/// join cell is its augmentation (v⋆w is an edge from v to w). Models the
/// topological join; the group acts diagonally.
pub fn join(
    x: &EquivariantChainComplex,
    y: &EquivariantChainComplex,
) -> Result<EquivariantChainComplex> {
    if x.group() != y.group() {
        return Err(Error::InvalidComplex(
            "join factors must carry the same group".into(),
        ));
    }
    if x.top_dim() < 0 {
        return Ok(y.clone());
    }
    if y.top_dim() < 0 {
        return Ok(x.clone());
    }
    for (side, z) in [("first", x), ("second", y)] {
        if let Some(j) = unaugmented_edge(z) {
            return Err(Error::InvalidComplex(format!(
                "join needs edge boundaries that augment to zero; column {j} in the {side} factor does not"
            )));
        }
    }
    let layout = JoinLayout {
        dx: x.top_dim(),
        dy: y.top_dim(),
        nx: x.complex().cell_counts().to_vec(),
        ny: y.complex().cell_counts().to_vec(),
    };
    let top = layout.dx + layout.dy + 1;
    let counts: Vec<usize> = (0..=top).map(|n| layout.count(n)).collect();

    let mut boundaries = Vec::with_capacity(top as usize);
    for n in 1..=top {
        let mut bm = IntMatrix::zeros(layout.count(n - 1), layout.count(n));
        if n <= layout.dx {
            let b = x.boundary(n);
            for c in 0..b.cols() {
                for r in 0..b.rows() {
                    bm.set(layout.x_index(n - 1, r), layout.x_index(n, c), b.get(r, c).clone());
                }
            }
        }
        if n <= layout.dy {
            let b = y.boundary(n);
            for c in 0..b.cols() {
                for r in 0..b.rows() {
                    bm.set(layout.y_index(n - 1, r), layout.y_index(n, c), b.get(r, c).clone());
                }
            }
        }
        for (i, j) in layout.mixed_blocks(n) {
            let bx = x.boundary(i);
            let by = y.boundary(j);
            let sign = if (i + 1) % 2 == 0 { 1 } else { -1 };
            for a in 0..layout.nx[i as usize] {
                for b in 0..layout.ny[j as usize] {
                    let col = layout.mixed_index(n, i, a, b);
                    if i >= 1 {
                        for r in 0..layout.nx[i as usize - 1] {
                            let v = bx.get(r, a);
                            if !v.is_zero() {
                                bm.set(layout.mixed_index(n - 1, i - 1, r, b), col, v.clone());
                            }
                        }
                    } else {
                        bm.set(layout.y_index(n - 1, b), col, BigInt::from(1));
                    }
                    if j >= 1 {
                        for r in 0..layout.ny[j as usize - 1] {
                            let v = by.get(r, b);
                            if !v.is_zero() {
                                bm.set(
                                    layout.mixed_index(n - 1, i, a, r),
                                    col,
                                    BigInt::from(sign) * v,
                                );
                            }
                        }
                    } else {
                        bm.set(layout.x_index(n - 1, a), col, BigInt::from(sign));
                    }
                }
            }
        }
        boundaries.push(bm);
    }
    let complex = ChainComplex::new(counts, boundaries)?;

    let order = x.group().order();
    let mut maps = Vec::with_capacity(order);
    for g in 0..order {
        let mut per_elt = Vec::with_capacity(top as usize + 1);
        for n in 0..=top {
            let mut per_dim = vec![(0usize, 0i64); layout.count(n)];
            for c in 0..layout.x_count(n) {
                let (img, s) = x.apply(g, n as usize, c);
                per_dim[layout.x_index(n, c)] = (layout.x_index(n, img), s);
            }
            for c in 0..layout.y_count(n) {
                let (img, s) = y.apply(g, n as usize, c);
                per_dim[layout.y_index(n, c)] = (layout.y_index(n, img), s);
            }
            for (i, j) in layout.mixed_blocks(n) {
                for a in 0..layout.nx[i as usize] {
                    let (ia, sa) = x.apply(g, i as usize, a);
                    for b in 0..layout.ny[j as usize] {
                        let (ib, sb) = y.apply(g, j as usize, b);
                        per_dim[layout.mixed_index(n, i, a, b)] =
                            (layout.mixed_index(n, i, ia, ib), sa * sb);
                    }
                }
            }
            per_elt.push(per_dim);
        }
        maps.push(per_elt);
    }

    let mut labels = Vec::with_capacity(top as usize + 1);
    for n in 0..=top {
        let mut v = vec![String::new(); layout.count(n)];
        for c in 0..layout.x_count(n) {
            v[layout.x_index(n, c)] = format!("a.{}", x.labels()[n as usize][c]);
        }
        for c in 0..layout.y_count(n) {
            v[layout.y_index(n, c)] = format!("b.{}", y.labels()[n as usize][c]);
        }
        for (i, j) in layout.mixed_blocks(n) {
            for a in 0..layout.nx[i as usize] {
                for b in 0..layout.ny[j as usize] {
                    v[layout.mixed_index(n, i, a, b)] = format!(
                        "a.{}*b.{}",
                        x.labels()[i as usize][a],
                        y.labels()[j as usize][b]
                    );
                }
            }
        }
        labels.push(v);
    }

    EquivariantChainComplex::new(
        x.group().clone(),
        complex,
        SignedAction::new(maps),
        Some(labels),
    )
}

/// Disjoint union over the same group: block sums of boundaries and action.
pub fn disjoint_union(
    x: &EquivariantChainComplex,
    y: &EquivariantChainComplex,
) -> Result<EquivariantChainComplex> {
    if x.group() != y.group() {
        return Err(Error::InvalidComplex(
            "disjoint union factors must carry the same group".into(),
        ));
    }
    if x.top_dim() < 0 {
        return Ok(y.clone());
    }
    if y.top_dim() < 0 {
        return Ok(x.clone());
    }
    let top = x.top_dim().max(y.top_dim());
    let nx = |k: i64| x.complex().cells(k);
    let ny = |k: i64| y.complex().cells(k);
    let counts: Vec<usize> = (0..=top).map(|k| nx(k) + ny(k)).collect();
    let mut boundaries = Vec::with_capacity(top as usize);
    for k in 1..=top {
        let mut b = IntMatrix::zeros(counts[k as usize - 1], counts[k as usize]);
        let bx = x.boundary(k);
        for c in 0..bx.cols() {
            for r in 0..bx.rows() {
                b.set(r, c, bx.get(r, c).clone());
            }
        }
        let by = y.boundary(k);
        for c in 0..by.cols() {
            for r in 0..by.rows() {
                b.set(nx(k - 1) + r, nx(k) + c, by.get(r, c).clone());
            }
        }
        boundaries.push(b);
    }
    let complex = ChainComplex::new(counts, boundaries)?;
    let order = x.group().order();
    let mut maps = Vec::with_capacity(order);
    for g in 0..order {
        let mut per_elt = Vec::with_capacity(top as usize + 1);
        for k in 0..=top {
            let mut v: Vec<(usize, i64)> =
                (0..nx(k)).map(|c| x.apply(g, k as usize, c)).collect();
            v.extend((0..ny(k)).map(|c| {
                let (img, s) = y.apply(g, k as usize, c);
                (nx(k) + img, s)
            }));
            per_elt.push(v);
        }
        maps.push(per_elt);
    }
    let mut labels = Vec::with_capacity(top as usize + 1);
    for k in 0..=top {
        let mut v: Vec<String> = (0..nx(k))
            .map(|c| format!("a.{}", x.labels()[k as usize][c]))
            .collect();
        v.extend((0..ny(k)).map(|c| format!("b.{}", y.labels()[k as usize][c])));
        labels.push(v);
    }
    EquivariantChainComplex::new(
        x.group().clone(),
        complex,
        SignedAction::new(maps),
        Some(labels),
    )
}

/// Free orbit of p points under Z/p rotation.
fn free_orbit(p: usize) -> EquivariantChainComplex {
    let complex = ChainComplex::new(vec![p], vec![]).expect("points are valid");
    let maps: Vec<_> = (0..p)
        .map(|g| vec![(0..p).map(|c| ((c + g) % p, 1)).collect::<Vec<(usize, i64)>>()])
        .collect();
    let labels = vec![(0..p).map(|i| format!("o{i}")).collect()];
    EquivariantChainComplex::new(
        FiniteGroup::cyclic(p),
        complex,
        SignedAction::new(maps),
        Some(labels),
    )
    .expect("builtin is valid")
}

/// One-vertex, one-loop circle with the trivial Z/p action.
fn trivial_circle(p: usize) -> EquivariantChainComplex {
    let complex =
        ChainComplex::new(vec![1, 1], vec![IntMatrix::zeros(1, 1)]).expect("loop is valid");
    EquivariantChainComplex::with_trivial_action(FiniteGroup::cyclic(p), complex)
}

fn fuzz_seed_complex(rng: &mut ChaCha8Rng, p: usize) -> EquivariantChainComplex {
    let n_kinds = if p == 2 { 7 } else { 5 };
    match rng.gen_range(0..n_kinds) {
        0 => point(p).expect("p is prime"),
        1 => free_orbit(p),
        2 => polygon_chain(p, p),
        3 => polygon_chain(2 * p, p),
        4 => trivial_circle(p),
        5 => circle_reflection(),
        _ => sphere_reflection(),
    }
}

fn fuzz_small_factor(rng: &mut ChaCha8Rng, p: usize) -> EquivariantChainComplex {
    match rng.gen_range(0..3) {
        0 => point(p).expect("p is prime"),
        1 => free_orbit(p),
        _ => polygon_chain(p, p),
    }
}

/// Deterministic random complex: a builtin seed transformed by a short
/// random word in cone, join, tensor product, and disjoint union, capped at
/// `budget` total cells. Same seed, same complex — the property suites rely
/// on reproducibility.
pub fn fuzz(seed: u64, budget: usize) -> EquivariantChainComplex {
    let budget = budget.clamp(12, 4000);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = [2usize, 2, 3, 3, 5][rng.gen_range(0..5)];
    let mut x = fuzz_seed_complex(&mut rng, p);
    for _ in 0..3 {
        if !rng.gen_bool(0.7) {
            break;
        }
        // predict the size before building anything: dense boundary
        // matrices make oversized intermediates expensive
        let t = x.complex().total_cells();
        match rng.gen_range(0..4) {
            0 => {
                if 2 * t + 1 <= budget {
                    x = cone_of(&x).expect("fuzz complexes have augmented edges");
                }
            }
            1 => {
                let f = fuzz_small_factor(&mut rng, p);
                let tf = f.complex().total_cells();
                if t + tf + t * tf <= budget {
                    x = join(&x, &f).expect("fuzz complexes join");
                }
            }
            2 => {
                let f = fuzz_small_factor(&mut rng, p);
                let tf = f.complex().total_cells();
                if t * tf <= budget {
                    x = x.tensor_product(&f).expect("same group by construction");
                }
            }
            _ => {
                let f = fuzz_seed_complex(&mut rng, p);
                if t + f.complex().total_cells() <= budget {
                    x = disjoint_union(&x, &f).expect("same group by construction");
                }
            }
        }
    }
    debug_assert!(x.validate().is_empty(), "fuzz produced an invalid complex");
    x
}

/// Simplicial catalog for subdivision tests: small complexes whose
/// barycentric subdivisions stay desk-sized.
pub fn simplicial_catalog() -> Vec<(String, SimplicialGComplex)> {
    let mut out = Vec::new();
    out.push(("polygon_rotation(3)".to_string(), polygon_simplicial(3, 3)));
    for n in [1usize, 2] {
        for action in [CrossAction::Antipodal, CrossAction::Reflection] {
            let name = format!(
                "cross_polytope_sphere({n}, {})",
                if action == CrossAction::Antipodal { "antipodal" } else { "reflection" }
            );
            out.push((name, cross_polytope_simplicial(n, action).expect("small n")));
        }
    }
    for p in [2usize, 3] {
        let m = if p == 2 { 4 } else { 3 };
        let c = polygon_simplicial(m, p);
        let j = c.join(&c).expect("same group");
        out.push((format!("lens_join({p})"), j));
    }
    out
}

/// m-gon as a simplicial circle (m >= 3) with Z/p rotating by m/p vertices.
fn polygon_simplicial(m: usize, p: usize) -> SimplicialGComplex {
    assert!(m >= 3 && m % p == 0);
    let step = m / p;
    let edges: Vec<Vec<usize>> = (0..m).map(|i| vec![i, (i + 1) % m]).collect();
    let action: Vec<Vec<usize>> =
        (0..p).map(|g| (0..m).map(|v| (v + g * step) % m).collect()).collect();
    SimplicialGComplex::new(m, edges, FiniteGroup::cyclic(p), action)
        .expect("polygon is a valid simplicial circle")
}

/// Catalog names with one-line descriptions, for `spaces list`.
pub fn list() -> Vec<(&'static str, &'static str)> {
    vec![
        ("circle_reflection", "Z/2 swaps the two arcs of S^1; both vertices fixed"),
        ("circle_rotation(p)", "free rotation of Z/p on the p-gon circle (p prime)"),
        ("sphere_reflection", "Z/2 swaps the hemispheres of S^2; the equator is fixed"),
        ("cp1_conjugation", "complex conjugation on CP^1 = the reflection 2-sphere"),
        (
            "cross_polytope_sphere(n, antipodal|reflection)",
            "simplicial S^n (n <= 4) with the antipodal or first-coordinate involution",
        ),
        ("lens_sphere(p)", "S^3 as a join of circles with the free diagonal Z/p rotation"),
        ("torus_diagonal(p)", "S^1 x S^1 with Z/p rotating both factors (p prime)"),
        ("point(p)", "one vertex with the trivial Z/p action"),
        ("cone_of(NAME)", "algebraic cone on any builtin: fixed apex, acyclic total space"),
        ("fuzz(seed[, budget])", "deterministic random complex built from builtins"),
    ]
}

/// Parse a builtin name, with parameters in parentheses or after a colon:
/// `circle_rotation(3)`, `circle_rotation:3`, `cross_polytope_sphere(2,
/// antipodal)`, `cone_of(circle_rotation(3))`.
pub fn builtin(spec: &str) -> Result<EquivariantChainComplex> {
    let s = spec.trim();
    let (name, args) = split_name(s)?;
    if name.is_empty() {
        // accept a fully parenthesized spec like "(circle_reflection)"
        return match args {
            Some(inner) if !inner.trim().is_empty() => builtin(&inner),
            _ => Err(Error::UnknownName(s.to_string())),
        };
    }
    let parts: Vec<String> = match &args {
        None => Vec::new(),
        Some(a) => a
            .split(|c| c == ',' || c == ':')
            .map(|t| t.trim().to_string())
            .collect(),
    };
    let expect_none = |parts: &[String]| -> Result<()> {
        if parts.is_empty() {
            Ok(())
        } else {
            Err(Error::BadParameter(format!("{name} takes no parameters")))
        }
    };
    let uint = |t: &str| -> Result<usize> {
        t.parse::<usize>()
            .map_err(|_| Error::BadParameter(format!("{name}: expected a number, got {t:?}")))
    };
    match name.as_str() {
        "circle_reflection" => {
            expect_none(&parts)?;
            Ok(circle_reflection())
        }
        "sphere_reflection" => {
            expect_none(&parts)?;
            Ok(sphere_reflection())
        }
        "cp1_conjugation" => {
            expect_none(&parts)?;
            Ok(cp1_conjugation())
        }
        "circle_rotation" | "lens_sphere" | "torus_diagonal" | "point" => {
            if parts.len() != 1 {
                return Err(Error::BadParameter(format!("{name} takes exactly one prime")));
            }
            let p = uint(&parts[0])?;
            match name.as_str() {
                "circle_rotation" => circle_rotation(p),
                "lens_sphere" => lens_sphere(p),
                "torus_diagonal" => torus_diagonal(p),
                _ => point(p),
            }
        }
        "cross_polytope_sphere" => {
            if parts.is_empty() || parts.len() > 2 {
                return Err(Error::BadParameter(
                    "cross_polytope_sphere takes a dimension and an optional action".into(),
                ));
            }
            let n = uint(&parts[0])?;
            let action = match parts.get(1) {
                Some(a) => CrossAction::parse(a)?,
                None => CrossAction::Antipodal,
            };
            cross_polytope_sphere(n, action)
        }
        "cone_of" => {
            let inner = args.ok_or_else(|| {
                Error::BadParameter("cone_of needs an inner builtin name".into())
            })?;
            let base = builtin(&inner)?;
            cone_of(&base)
        }
        "fuzz" => {
            if parts.is_empty() || parts.len() > 2 {
                return Err(Error::BadParameter(
                    "fuzz takes a seed and an optional cell budget".into(),
                ));
            }
            let seed = parts[0].parse::<u64>().map_err(|_| {
                Error::BadParameter(format!("fuzz: expected a seed, got {:?}", parts[0]))
            })?;
            let budget = match parts.get(1) {
                Some(t) => uint(t)?,
                None => 80,
            };
            Ok(fuzz(seed, budget))
        }
        other => Err(Error::UnknownName(other.to_string())),
    }
}

/// Split "name(args)" or "name:args" at the earliest delimiter; args are
/// returned raw so that nested specs like cone_of(circle_rotation(3)) and
/// cone_of:circle_rotation:3 recurse cleanly.
fn split_name(s: &str) -> Result<(String, Option<String>)> {
    let paren = s.find('(');
    let colon = s.find(':');
    match (paren, colon) {
        (Some(i), c) if c.is_none() || i < c.unwrap() => {
            if !s.ends_with(')') {
                return Err(Error::BadParameter(format!("unbalanced parentheses in {s:?}")));
            }
            Ok((s[..i].to_string(), Some(s[i + 1..s.len() - 1].to_string())))
        }
        (_, Some(i)) => Ok((s[..i].to_string(), Some(s[i + 1..].to_string()))),
        _ => Ok((s.to_string(), None)),
    }
}
